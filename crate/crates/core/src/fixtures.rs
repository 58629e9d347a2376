//! The published binary codes and their R1 lifts as ready-made records.

use crate::codeanalysis::{CodeParams, CodeType, Family};
use crate::constructions::{ConstructionId, FirstRows};
use crate::r1ring::parse_r1_vector;
use crate::records::{CodeRecord, RecordFile, RingKind};

/// `(id, construction, rows, d, |Aut|)`
type BinaryRow = (&'static str, ConstructionId, &'static [&'static str], usize, &'static str);
/// `(id, parent, rows, gamma, beta, |Aut|)`
type LiftRow = (&'static str, &'static str, &'static [&'static str], i64, i64, &'static str);

use ConstructionId::{Omega1, Omega2, Omega3};

pub const BINARY: [BinaryRow; 12] = [
    ("C1", Omega1, &["0,0,0,0,0,1,0,1,1", "1,0,1,1,1,0,1,0,1"], 6, "2^2*3^2"),
    ("C2", Omega1, &["0,0,0,0,1,1,0,1,1", "1,0,0,1,0,1,1,1,0"], 6, "2^2*3^2"),
    ("C3", Omega1, &["0,0,1,0,0,1,0,0,1", "1,0,0,1,1,0,1,1,1"], 8, "2^2*3^2"),
    ("C4", Omega1, &["0,1,0,0,0,1,0,1,1", "1,0,0,1,0,0,1,1,1"], 8, "2^2*3^2"),
    ("C5", Omega2, &["0,0,0,0,0,1", "1,1,1,0,0,1", "1,1,1,0,1,0"], 6, "2^5*3^4*5"),
    ("C6", Omega2, &["0,0,0,0,1,1", "0,0,0,0,1,1", "1,1,1,1,0,1"], 6, "2^5*3^4*5"),
    ("C7", Omega2, &["0,0,0,0,1,1", "0,1,1,0,1,1", "0,1,1,1,0,0"], 6, "2^5*3^2"),
    ("C8", Omega2, &["0,0,1,0,0,1", "0,0,1,1,1,0", "1,1,1,0,0,1"], 6, "2^5*3^2"),
    ("C9", Omega3, &["0,0,0,0,0,1", "0,1,1,0,1,1", "1,0,1,1,0,1"], 6, "2^5*3^2"),
    ("C10", Omega3, &["0,0,0,0,0,1", "1,1,1,0,0,1", "1,1,1,0,1,0"], 6, "2^5*3^4*5"),
    ("C11", Omega3, &["0,0,0,0,1,1", "0,0,0,0,1,1", "1,1,1,1,0,1"], 6, "2^5*3^4*5"),
    ("C12", Omega3, &["0,0,0,0,1,1", "0,1,1,0,0,1", "1,1,0,1,0,1"], 6, "2^5*3^2"),
];

pub const LIFTS: [LiftRow; 30] = [
    ("L1", "C1", &["u,0,u,u,u,1,u,u+1,1", "1,0,1,1,u+1,0,1,u,1"], 0, 192, "36"),
    ("L2", "C1", &["u,0,0,u,0,1,u,1,1", "1,0,u+1,1,u+1,0,1,u,u+1"], 0, 198, "36"),
    ("L3", "C1", &["u,u,0,u,u,1,u,1,u+1", "1,u,u+1,1,u+1,0,1,0,u+1"], 0, 336, "36"),
    ("L4", "C1", &["0,u,0,0,0,1,0,1,u+1", "1,u,u+1,1,u+1,0,1,0,u+1"], 18, 234, "36"),
    ("L5", "C1", &["u,u,0,u,0,1,u,u+1,1", "1,u,u+1,1,1,u,1,0,u+1"], 18, 345, "36"),
    ("L6", "C1", &["0,u,0,0,0,1,0,u+1,1", "1,u,1,1,u+1,u,1,u,1"], 18, 378, "36"),
    ("L7", "C1", &["u,u,u,u,0,1,u,u+1,u+1", "1,u,1,1,u+1,0,1,0,1"], 18, 396, "36"),
    ("L8", "C1", &["0,0,u,0,u,1,0,1,u+1", "1,u,1,1,1,0,1,u,1"], 18, 441, "36"),
    ("L9", "C1", &["u,u,0,u,0,1,u,1,u+1", "1,u,1,1,1,0,1,u,1"], 18, 453, "36"),
    ("L10", "C2", &["0,u,0,0,1,1,0,1,u+1", "1,u,u,1,u,u+1,1,1,0"], 0, 219, "36"),
    ("L11", "C2", &["u,0,u,u,1,1,u,u+1,u+1", "1,u,0,1,0,1,1,u+1,u"], 0, 345, "36"),
    ("L12", "C2", &["0,0,u,0,1,1,0,1,u+1", "1,u,0,1,0,1,1,1,0"], 0, 408, "36"),
    ("L13", "C2", &["u,0,0,u,1,u+1,u,u+1,u+1", "1,0,u,1,0,u+1,1,u+1,0"], 18, 261, "36"),
    ("L14", "C2", &["u,u,u,u,1,1,u,1,u+1", "1,0,0,1,u,1,1,u+1,0"], 18, 270, "36"),
    ("L15", "C2", &["u,0,u,u,1,u+1,u,1,u+1", "1,0,u,1,u,1,1,u+1,0"], 18, 357, "36"),
    ("L16", "C3", &["u,u,1,u,0,1,u,0,1", "1,u,0,1,u+1,u,1,1,u+1"], 0, 120, "36"),
    ("L17", "C3", &["u,u,1,u,0,1,u,u,1", "1,0,u,1,1,0,1,1,u+1"], 0, 282, "36"),
    ("L18", "C3", &["u,u,1,u,0,u+1,u,0,1", "1,u,0,1,u+1,u,1,1,u+1"], 0, 300, "36"),
    ("L19", "C3", &["u,u,1,u,0,u+1,u,0,1", "1,u,u,1,1,0,1,1,1"], 18, 336, "36"),
    ("L20", "C3", &["u,0,1,u,0,1,u,u,1", "1,0,0,1,1,0,1,u+1,u+1"], 36, 435, "36"),
    ("L21", "C4", &["0,1,u,0,u,1,0,u+1,u+1", "1,u,u,1,u,u,1,u+1,u+1"], 0, 366, "36"),
    ("L22", "C4", &["u,1,u,u,u,1,u,1,u+1", "1,u,0,1,0,0,1,u+1,1"], 0, 372, "36"),
    ("L23", "C4", &["0,1,u,0,u,1,0,u+1,u+1", "1,0,0,1,0,0,1,u+1,u+1"], 0, 384, "36"),
    ("L24", "C4", &["u,1,u,u,u,1,u,1,u+1", "1,u,u,1,u,0,1,u+1,1"], 0, 390, "36"),
    ("L25", "C4", &["u,1,0,u,0,1,u,u+1,1", "1,u,0,1,0,0,1,1,u+1"], 0, 399, "36"),
    ("L26", "C4", &["u,1,u,u,u,1,u,u+1,1", "1,0,u,1,0,0,1,u+1,u+1"], 18, 264, "36"),
    ("L27", "C4", &["u,1,0,u,u,u+1,u,u+1,1", "1,0,u,1,0,u,1,1,u+1"], 18, 285, "36"),
    ("L28", "C4", &["0,1,u,0,0,u+1,0,1,1", "1,u,u,1,u,0,1,1,1"], 18, 300, "36"),
    ("L29", "C7", &["0,0,0,u,1,1", "u,1,u+1,u,1,1", "u,u+1,1,u+1,0,0"], 0, 471, "144"),
    ("L30", "C9", &["0,u,u,u,u,1", "u,1,1,u,u+1,1", "u+1,u,u+1,1,u,u+1"], 0, 621, "432"),
];

fn rows_of(id: ConstructionId, rows: &[&str]) -> FirstRows<crate::r1ring::R1> {
    let parsed = rows.iter().map(|r| parse_r1_vector(r).expect("fixture row parses")).collect();
    FirstRows::new(id, parsed).expect("fixture row lengths")
}

fn construction_of(parent: &str) -> ConstructionId {
    BINARY.iter().find(|b| b.0 == parent).expect("known parent").1
}

pub fn binary_records() -> Vec<CodeRecord> {
    BINARY
        .iter()
        .map(|&(id, c, rows, d, aut)| {
            let mut r = CodeRecord::new(id, &rows_of(c, rows), RingKind::F2);
            r.params = Some(CodeParams {
                n: 36,
                k: 18,
                d,
                code_type: CodeType::TypeI,
                family: None,
                gamma: None,
                beta: None,
                a12: None,
                a14: None,
                a16: None,
            });
            r.aut = Some(aut.into());
            r
        })
        .collect()
}

pub fn lift_records() -> Vec<CodeRecord> {
    LIFTS
        .iter()
        .map(|&(id, parent, rows, gamma, beta, aut)| {
            let mut r = CodeRecord::new(id, &rows_of(construction_of(parent), rows), RingKind::R1);
            let (a12, a14, a16) = Family::W72_1.low_coefficients(gamma, beta);
            r.params = Some(CodeParams {
                n: 72,
                k: 36,
                d: 12,
                code_type: CodeType::TypeI,
                family: Some(Family::W72_1),
                gamma: Some(gamma),
                beta: Some(beta),
                a12: Some(a12 as u64),
                a14: Some(a14 as u64),
                a16: Some(a16 as u64),
            });
            r.parent = Some(parent.into());
            r.aut = Some(aut.into());
            r
        })
        .collect()
}

/// All twelve binary codes followed by all thirty lifts.
pub fn all_records() -> RecordFile {
    let mut recs = binary_records();
    recs.extend(lift_records());
    RecordFile::new(recs)
}

/// The published `(gamma, beta)` summary list with the duplicated separator removed.
pub const SUMMARY: [(i64, &[i64]); 3] = [
    (0, &[120, 192, 198, 219, 282, 300, 336, 345, 366, 372, 384, 390, 399, 408, 471, 621]),
    (18, &[234, 261, 264, 270, 285, 300, 336, 345, 357, 378, 396, 441, 453]),
    (36, &[435]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        let f = all_records();
        assert_eq!(f.records.len(), 42);
        for r in &f.records {
            r.first_rows().unwrap();
            if let Some(p) = &r.parent {
                let parent = f.find(p).unwrap();
                let proj = r.first_rows().unwrap().map(|x| x.project());
                assert_eq!(proj, parent.binary_rows().unwrap(), "{}", r.id);
            }
        }
    }

    #[test]
    fn summary_sizes() {
        let sizes: Vec<usize> = SUMMARY.iter().map(|s| s.1.len()).collect();
        assert_eq!(sizes, [16, 13, 1]);
    }
}

//! Re-derivation of stored code parameters from first rows alone.

use std::fmt;

use crate::bitmat::BitMatrix;
use crate::codeanalysis::{analyze, minimum_distance, CodeParams, StandardForm};
use crate::constructions::{check_selfdual_blocks, pack_r1, FirstRows, OmegaLayout};
use crate::r1ring::R1;
use crate::records::{CodeRecord, RecordFile, RingKind};
use crate::searchlift::lift_gray_generator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordVerdict {
    pub id: String,
    pub computed: Option<CodeParams>,
    pub mismatches: Vec<String>,
    pub warnings: Vec<String>,
}

impl RecordVerdict {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for RecordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "MISMATCH" };
        write!(f, "{}: {status}", self.id)?;
        if let Some(p) = &self.computed {
            write!(f, " [{},{},{}] {}", p.n, p.k, p.d, p.code_type)?;
            if let (Some(fam), Some(g), Some(b)) = (p.family, p.gamma, p.beta) {
                write!(f, " {fam} gamma={g} beta={b}")?;
            }
        }
        for m in &self.mismatches {
            write!(f, "\n  mismatch: {m}")?;
        }
        for w in &self.warnings {
            write!(f, "\n  warning: {w}")?;
        }
        Ok(())
    }
}

fn compare(stored: &CodeParams, got: &CodeParams, out: &mut Vec<String>) {
    let mut check = |name: &str, s: String, g: String| {
        if s != g {
            out.push(format!("{name}: stored {s}, computed {g}"));
        }
    };
    check("n", stored.n.to_string(), got.n.to_string());
    check("k", stored.k.to_string(), got.k.to_string());
    check("d", stored.d.to_string(), got.d.to_string());
    check("type", stored.code_type.to_string(), got.code_type.to_string());
    let opt = |x: Option<String>| x.unwrap_or_else(|| "none".into());
    if stored.family.is_some() {
        check("family", opt(stored.family.map(|f| f.to_string())), opt(got.family.map(|f| f.to_string())));
    }
    for (name, s, g) in [
        ("gamma", stored.gamma, got.gamma),
        ("beta", stored.beta, got.beta),
        ("a12", stored.a12.map(|x| x as i64), got.a12.map(|x| x as i64)),
        ("a14", stored.a14.map(|x| x as i64), got.a14.map(|x| x as i64)),
        ("a16", stored.a16.map(|x| x as i64), got.a16.map(|x| x as i64)),
    ] {
        if s.is_some() {
            check(name, opt(s.map(|x| x.to_string())), opt(g.map(|x| x.to_string())));
        }
    }
}

/// Verifies one record. `parent` is the record its projection must match.
pub fn verify_record(rec: &CodeRecord, parent: Option<&CodeRecord>) -> RecordVerdict {
    let mut v = RecordVerdict { id: rec.id.clone(), computed: None, mismatches: Vec::new(), warnings: Vec::new() };
    let rows = match rec.first_rows() {
        Ok(r) => r,
        Err(e) => {
            v.mismatches.push(format!("unusable first rows: {e}"));
            return v;
        }
    };
    let report = check_selfdual_blocks(&rows);
    for eq in report.failures() {
        v.mismatches.push(format!("fails {eq}"));
    }
    let (a, b) = pack_r1(&rows.alphas());
    let layout = OmegaLayout::new(rows.id());
    if !layout.r1(a, b).gram().is_identity() {
        v.mismatches.push("Omega*Omega^T is not the identity".into());
    }
    if !v.mismatches.is_empty() {
        return v;
    }
    let gen = match rec.ring {
        RingKind::F2 => BitMatrix::identity(18).hconcat(&layout.binary(a)).expect("rows agree"),
        RingKind::R1 => lift_gray_generator(&layout, a, b),
    };
    let got = match analyze(&gen) {
        Ok(p) => p,
        Err(e) => {
            v.mismatches.push(format!("analysis failed: {e}"));
            return v;
        }
    };
    match &rec.params {
        Some(stored) => compare(stored, &got, &mut v.mismatches),
        None => v.warnings.push("no stored parameters to compare".into()),
    }
    if rec.ring == RingKind::R1 {
        check_lift(rec, &rows, &layout, a, &got, parent, &mut v);
    }
    v.computed = Some(got);
    v
}

fn check_lift(
    rec: &CodeRecord,
    rows: &FirstRows<R1>,
    layout: &OmegaLayout,
    a: u32,
    got: &CodeParams,
    parent: Option<&CodeRecord>,
    v: &mut RecordVerdict,
) {
    let projected = rows.map(|x| x.project());
    match (rec.parent.as_deref(), parent) {
        (Some(_), Some(p)) => match p.first_rows() {
            Ok(pr) if p.ring == RingKind::F2 && pr.map(|x| x.project()) == projected => {}
            Ok(_) => v.mismatches.push(format!("projection differs from parent {}", p.id)),
            Err(e) => v.mismatches.push(format!("parent {} unusable: {e}", p.id)),
        },
        (Some(pid), None) => v.warnings.push(format!("parent {pid} not found, projection not compared")),
        (None, _) => v.warnings.push("no parent recorded".into()),
    }
    let pgen = BitMatrix::identity(18).hconcat(&layout.binary(a)).expect("rows agree");
    let d_proj = StandardForm::from_systematic(&pgen).and_then(|sf| {
        if sf.is_self_dual() {
            minimum_distance(&sf)
        } else {
            Err(crate::error::Error::Inconsistent("projection is not self-dual".into()))
        }
    });
    match d_proj {
        Ok(dp) if got.d > 2 * dp => v.mismatches.push(format!("d = {} exceeds twice the projection distance {dp}", got.d)),
        Ok(_) => {}
        Err(e) => v.mismatches.push(e.to_string()),
    }
}

/// Verifies every record of a file; lift parents are looked up by id.
pub fn verify_file(file: &RecordFile) -> Vec<RecordVerdict> {
    use rayon::prelude::*;
    file.records
        .par_iter()
        .map(|r| verify_record(r, r.parent.as_deref().and_then(|p| file.find(p))))
        .collect()
}

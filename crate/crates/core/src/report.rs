//! Tabular rendering of records in the column order of the published tables.

use crate::records::{CodeRecord, TOOL_VERSION};

pub const CSV_HEADER: [&str; 8] = ["id", "type", "rB", "rC", "rD", "gamma", "beta", "aut"];

fn type_label(r: &CodeRecord) -> String {
    match &r.params {
        Some(p) => match p.family {
            Some(f) => f.to_string(),
            None if p.code_type == crate::codeanalysis::CodeType::TypeII => format!("[{},{},{}] II", p.n, p.k, p.d),
            None => format!("[{},{},{}]", p.n, p.k, p.d),
        },
        None => "?".into(),
    }
}

fn cells(r: &CodeRecord) -> [String; 8] {
    let p = r.params.as_ref();
    let num = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
    [
        r.id.clone(),
        type_label(r),
        r.r_b.clone(),
        r.r_c.clone(),
        r.r_d.clone().unwrap_or_default(),
        num(p.and_then(|p| p.gamma)),
        num(p.and_then(|p| p.beta)),
        r.aut.clone().unwrap_or_default(),
    ]
}

pub fn to_csv(records: &[CodeRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record(cells(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Aligned text table followed by a provenance line.
pub fn to_text(records: &[CodeRecord]) -> String {
    let rows: Vec<[String; 8]> = records.iter().map(cells).collect();
    let mut width: Vec<usize> = CSV_HEADER.iter().map(|h| h.len()).collect();
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cols: Vec<&str>| {
        let padded: Vec<String> = cols.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(CSV_HEADER.to_vec());
    for r in &rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    let seeds: Vec<String> = {
        let mut s: Vec<u64> = records.iter().filter_map(|r| r.seed).collect();
        s.sort_unstable();
        s.dedup();
        s.iter().map(u64::to_string).collect()
    };
    out += &format!(
        "# {} records, seed {}, {TOOL_VERSION}\n",
        records.len(),
        if seeds.is_empty() { "none".to_string() } else { seeds.join(",") }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn csv_quotes_rows() {
        let recs = fixtures::lift_records();
        let csv = to_csv(&recs[..1]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,type,rB,rC,rD,gamma,beta,aut"));
        assert_eq!(lines.next(), Some("L1,\"W72,1\",\"(u,0,u,u,u,1,u,u+1,1)\",\"(1,0,1,1,u+1,0,1,u,1)\",,0,192,36"));
    }

    #[test]
    fn text_is_aligned() {
        let t = to_text(&fixtures::binary_records());
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 14);
        let col = lines[0].find("rB").unwrap();
        assert!(lines[1..13].iter().all(|l| l[col..].starts_with('(')));
        assert!(lines[13].starts_with("# 12 records"));
    }
}

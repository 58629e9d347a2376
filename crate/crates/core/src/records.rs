//! Code records and the line-delimited record file.
//!
//! A record file is UTF-8 JSON Lines: a header object
//! `{"format":"sdlift-records","version":1}` followed by one record object
//! per line. Keys this version does not know are carried through unchanged.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::codeanalysis::CodeParams;
use crate::constructions::{ConstructionId, FirstRows};
use crate::error::{Error, Result};
use crate::r1ring::{format_r1_vector, parse_r1_vector, R1};
use crate::scalar::Gf2;

pub const FORMAT_NAME: &str = "sdlift-records";
pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("sdlift ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    F2,
    R1,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::F2 => "F2",
            RingKind::R1 => "R1",
        })
    }
}

impl FromStr for RingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "F2" | "GF2" => Ok(RingKind::F2),
            "R1" => Ok(RingKind::R1),
            other => Err(Error::InvalidArgument(format!("unknown ring {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub id: String,
    pub construction: ConstructionId,
    pub ring: RingKind,
    #[serde(rename = "rB")]
    pub r_b: String,
    #[serde(rename = "rC")]
    pub r_c: String,
    #[serde(rename = "rD", default, skip_serializing_if = "Option::is_none")]
    pub r_d: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<CodeParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    /// `|Aut|` as printed in the source table; stored, never computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub created: Option<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl CodeRecord {
    pub fn new(id: impl Into<String>, rows: &FirstRows<R1>, ring: RingKind) -> Self {
        let fmt_row = |i: usize| format_r1_vector(&rows.rows()[i]);
        CodeRecord {
            id: id.into(),
            construction: rows.id(),
            ring,
            r_b: fmt_row(0),
            r_c: fmt_row(1),
            r_d: (rows.rows().len() > 2).then(|| fmt_row(2)),
            params: None,
            parent: None,
            aut: None,
            seed: None,
            tool_version: TOOL_VERSION.to_string(),
            created: None,
            extra: Map::new(),
        }
    }

    pub fn row_texts(&self) -> Vec<&str> {
        let mut v = vec![self.r_b.as_str(), self.r_c.as_str()];
        if let Some(d) = &self.r_d {
            v.push(d);
        }
        v
    }

    /// First rows over R1 (binary records embed with `b = 0`).
    pub fn first_rows(&self) -> Result<FirstRows<R1>> {
        let rows = self
            .row_texts()
            .iter()
            .map(|t| parse_r1_vector(t))
            .collect::<Result<Vec<_>>>()?;
        let fr = FirstRows::new(self.construction, rows)?;
        if self.ring == RingKind::F2 && fr.alphas().iter().any(|x| x.b) {
            return Err(Error::InvalidArgument(format!("{}: binary record contains u", self.id)));
        }
        Ok(fr)
    }

    pub fn binary_rows(&self) -> Result<FirstRows<Gf2>> {
        if self.ring != RingKind::F2 {
            return Err(Error::InvalidArgument(format!("{} is not a binary record", self.id)));
        }
        Ok(self.first_rows()?.map(|x| x.project()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    #[serde(flatten)]
    extra: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecordFile {
    pub version: u32,
    pub header_extra: Map<String, Value>,
    pub records: Vec<CodeRecord>,
}

impl Default for RecordFile {
    fn default() -> Self {
        RecordFile { version: FORMAT_VERSION, header_extra: Map::new(), records: Vec::new() }
    }
}

impl RecordFile {
    pub fn new(records: Vec<CodeRecord>) -> Self {
        RecordFile { records, ..Default::default() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let Some((_, first)) = lines.next() else {
            return Ok(RecordFile::default());
        };
        let header: Header =
            serde_json::from_str(first).map_err(|e| Error::Format(format!("line 1: bad header: {e}")))?;
        if header.format != FORMAT_NAME {
            return Err(Error::Format(format!("unexpected format {:?}", header.format)));
        }
        if header.version > FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported format version {}", header.version)));
        }
        let records = lines
            .map(|(i, l)| {
                serde_json::from_str::<CodeRecord>(l).map_err(|e| Error::Format(format!("line {}: {e}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RecordFile { version: header.version, header_extra: header.extra, records })
    }

    pub fn to_text(&self) -> String {
        let header = Header { format: FORMAT_NAME.into(), version: self.version, extra: self.header_extra.clone() };
        let mut out = serde_json::to_string(&header).expect("header serializes");
        out.push('\n');
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn find(&self, id: &str) -> Option<&CodeRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> CodeRecord {
        let rows = FirstRows::new(
            ConstructionId::Omega2,
            vec![vec![R1::ZERO; 6], vec![R1::U; 6], vec![R1::ONE_PLUS_U; 6]],
        )
        .unwrap();
        CodeRecord::new("x", &rows, RingKind::R1)
    }

    #[test]
    fn unknown_keys_survive() {
        let text = format!(
            "{{\"format\":\"{FORMAT_NAME}\",\"version\":1,\"note\":\"hi\"}}\n\
             {{\"id\":\"a\",\"construction\":\"omega1\",\"ring\":\"F2\",\"rB\":\"(0,0,0,0,0,1,0,1,1)\",\
             \"rC\":\"(1,0,1,1,1,0,1,0,1)\",\"tool_version\":\"t\",\"colour\":[1,2]}}\n"
        );
        let f = RecordFile::parse(&text).unwrap();
        assert_eq!(f.records[0].extra["colour"], serde_json::json!([1, 2]));
        assert_eq!(f.header_extra["note"], "hi");
        let again = RecordFile::parse(&f.to_text()).unwrap();
        assert_eq!(again, f);
        assert_eq!(f.records[0].binary_rows().unwrap().alphas().len(), 18);
    }

    #[test]
    fn empty_and_bad_files() {
        assert!(RecordFile::parse("").unwrap().records.is_empty());
        assert!(RecordFile::parse("{\"format\":\"other\",\"version\":1}").is_err());
        assert!(RecordFile::parse("not json").is_err());
        let bad = format!("{{\"format\":\"{FORMAT_NAME}\",\"version\":1}}\n{{\"id\":3}}\n");
        assert!(matches!(RecordFile::parse(&bad), Err(Error::Format(m)) if m.starts_with("line 2")));
    }

    #[test]
    fn binary_record_rejects_u() {
        let mut r = sample();
        r.ring = RingKind::F2;
        assert!(r.first_rows().is_err());
    }

    proptest! {
        #[test]
        fn round_trip(seed in any::<u64>(), tag in "[a-z]{1,8}", n in 0usize..4) {
            let mut recs = Vec::new();
            for i in 0..n {
                let mut r = sample();
                r.id = format!("{tag}{i}");
                r.seed = Some(seed.wrapping_add(i as u64));
                r.extra.insert(tag.clone(), Value::from(i));
                recs.push(r);
            }
            let f = RecordFile::new(recs);
            prop_assert_eq!(RecordFile::parse(&f.to_text()).unwrap(), f);
        }
    }
}

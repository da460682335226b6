//! Reproduction of the published tables and root datasets against
//! embedded expected values.

mod figures;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{ScanReport, Value, Verdict};

pub use figures::{figure_data, figure_dataset, figure_dataset_with, FigureData, FigurePoly};
pub use tables::{reproduce, reproduce_all, required_depth};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    #[serde(rename = "T1_delta_a0")]
    T1DeltaA0,
    #[serde(rename = "T2_qn")]
    T2Qn,
    #[serde(rename = "T3_T2data")]
    T3T2Data,
    #[serde(rename = "T4_Nb")]
    T4Nb,
    #[serde(rename = "T5_quotients")]
    T5Quotients,
    #[serde(rename = "T6_smallest_x0")]
    T6SmallestX0,
    #[serde(rename = "T7_B0")]
    T7B0,
    #[serde(rename = "FIG1")]
    Fig1,
    #[serde(rename = "FIG2")]
    Fig2,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::T1DeltaA0,
        TableId::T2Qn,
        TableId::T3T2Data,
        TableId::T4Nb,
        TableId::T5Quotients,
        TableId::T6SmallestX0,
        TableId::T7B0,
        TableId::Fig1,
        TableId::Fig2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T1DeltaA0 => "T1_delta_a0",
            TableId::T2Qn => "T2_qn",
            TableId::T3T2Data => "T3_T2data",
            TableId::T4Nb => "T4_Nb",
            TableId::T5Quotients => "T5_quotients",
            TableId::T6SmallestX0 => "T6_smallest_x0",
            TableId::T7B0 => "T7_B0",
            TableId::Fig1 => "FIG1",
            TableId::Fig2 => "FIG2",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the full id (`T7_B0`), its prefix before the underscore (`T7`)
/// and either case.
impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_uppercase();
        TableId::ALL
            .into_iter()
            .find(|id| {
                let full = id.name().to_ascii_uppercase();
                full == want || full.split('_').next() == Some(want.as_str())
            })
            .ok_or_else(|| Error::Parse(format!("unknown table id '{s}'")))
    }
}

/// One compared entry. `ok` holds when `matched` differs from
/// `expect_mismatch`, so a known misprint passes only while it still
/// disagrees with the computed value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub matched: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub expect_mismatch: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Cell {
    pub fn new(label: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, matched: bool) -> Self {
        Cell {
            label: label.into(),
            expected: expected.into(),
            computed: computed.into(),
            matched,
            expect_mismatch: false,
            note: String::new(),
        }
    }

    /// Cell compared by string equality.
    pub fn exact(label: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        let (e, c) = (expected.into(), computed.into());
        let m = e == c;
        Cell::new(label, e, c, m)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn expecting_mismatch(mut self) -> Self {
        self.expect_mismatch = true;
        self
    }

    pub fn ok(&self) -> bool {
        self.matched != self.expect_mismatch
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub table_id: TableId,
    pub cells: Vec<Cell>,
    pub verdict: Verdict,
}

impl TableReport {
    pub fn new(table_id: TableId, cells: Vec<Cell>) -> Self {
        let verdict = if cells.iter().all(Cell::ok) { Verdict::Pass } else { Verdict::Fail };
        TableReport { table_id, cells, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failing(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.ok())
    }

    /// The report in the common check layout; failing cells become
    /// exceptions `[label, expected, computed]`.
    pub fn to_scan_report(&self) -> ScanReport {
        let mut r = ScanReport::new(self.table_id.name()).param("cells", self.cells.len());
        for c in self.failing() {
            r.push_exception(vec![
                Value::from(c.label.as_str()),
                Value::from(c.expected.as_str()),
                Value::from(c.computed.as_str()),
            ]);
        }
        for c in self.cells.iter().filter(|c| c.expect_mismatch) {
            r.note(format!("{}: known misprint, expected text '{}' differs from computed '{}'", c.label, c.expected, c.computed));
        }
        r
    }

    /// `{check, params, verdict, exceptions, certificates, notes, cells}`.
    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self.to_scan_report()).expect("report serializes");
        v["cells"] = serde_json::to_value(&self.cells).expect("cells serialize");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let ok = self.cells.iter().filter(|c| c.ok()).count();
        let mut out = format!(
            "{}: {} ({}/{} cells ok)\n",
            self.table_id,
            if self.passed() { "PASS" } else { "FAIL" },
            ok,
            self.cells.len()
        );
        for c in &self.cells {
            let mark = match (c.ok(), c.expect_mismatch) {
                (true, false) => "ok  ",
                (true, true) => "flag",
                (false, _) => "FAIL",
            };
            out.push_str(&format!("  [{mark}] {}: expected {} computed {}", c.label, c.expected, c.computed));
            if !c.note.is_empty() {
                out.push_str(&format!(" ({})", c.note));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse() {
        assert_eq!("T7".parse::<TableId>().unwrap(), TableId::T7B0);
        assert_eq!("t2_qn".parse::<TableId>().unwrap(), TableId::T2Qn);
        assert_eq!("fig2".parse::<TableId>().unwrap(), TableId::Fig2);
        assert!("T9".parse::<TableId>().is_err());
        for id in TableId::ALL {
            assert_eq!(id.name().parse::<TableId>().unwrap(), id);
        }
    }

    #[test]
    fn misprint_cells() {
        let c = Cell::exact("row", "a", "b").expecting_mismatch();
        assert!(c.ok());
        let c = Cell::exact("row", "a", "a").expecting_mismatch();
        assert!(!c.ok());
        let r = TableReport::new(TableId::T1DeltaA0, vec![Cell::exact("x", "1", "2")]);
        assert!(!r.passed());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["check"], "T1_delta_a0");
        assert_eq!(v["exceptions"][0][0], "x");
        assert_eq!(v["cells"][0]["computed"], "2");
    }
}

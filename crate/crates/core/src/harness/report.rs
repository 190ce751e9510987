use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    DiffAtMostOne,
    ContinuationPrinciple,
    Sandwich,
    FamilyMonotone,
    HalfBound,
    SpanningGap,
    ForestMonotone,
    PathBounds,
    PathExact,
    StarAddition,
    FamilyValues,
    ConjectureSweep,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::DiffAtMostOne,
        CheckKind::ContinuationPrinciple,
        CheckKind::Sandwich,
        CheckKind::FamilyMonotone,
        CheckKind::HalfBound,
        CheckKind::SpanningGap,
        CheckKind::ForestMonotone,
        CheckKind::PathBounds,
        CheckKind::PathExact,
        CheckKind::StarAddition,
        CheckKind::FamilyValues,
        CheckKind::ConjectureSweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::DiffAtMostOne => "diff-at-most-one",
            CheckKind::ContinuationPrinciple => "continuation-principle",
            CheckKind::Sandwich => "sandwich",
            CheckKind::FamilyMonotone => "family-monotone",
            CheckKind::HalfBound => "half-bound",
            CheckKind::SpanningGap => "spanning-gap",
            CheckKind::ForestMonotone => "forest-monotone",
            CheckKind::PathBounds => "path-bounds",
            CheckKind::PathExact => "path-exact",
            CheckKind::StarAddition => "star-addition",
            CheckKind::FamilyValues => "family-values",
            CheckKind::ConjectureSweep => "conjecture-sweep",
        }
    }

    /// The inequality or identity the check exercises.
    pub fn statement(self) -> &'static str {
        match self {
            CheckKind::DiffAtMostOne => "|ig(G,F) - ig'(G,F)| <= 1",
            CheckKind::ContinuationPrinciple => {
                "B subset of A => ig(G|A,F) <= ig(G|B,F) and ig'(G|A,F) <= ig'(G|B,F)"
            }
            CheckKind::Sandwich => "i <= ig <= 2i - 1 and i <= ig' <= 2i",
            CheckKind::FamilyMonotone => "F member-wise subgraph of F' => ig(G,F') <= ig(G,F)",
            CheckKind::HalfBound => "ig(G) <= n/2",
            CheckKind::SpanningGap => "ig(G_n) = n, ig(F_k) = n - k (k < n), ig(F_n) = 1 for odd n",
            CheckKind::ForestMonotone => "ig(F) <= ig'(F) for partially marked forests",
            CheckKind::PathBounds => "ceil(2n/5) - 1 <= ig(P_n) <= ig'(P_n) <= floor((2n+2)/5)",
            CheckKind::PathExact => "ig(P_n) = ig'(P_n) = floor((2n+2)/5) for n = 1,2,3 mod 5",
            CheckKind::StarAddition => "ig(G + K_1r) > ig(G) and ig'(G + K_1r) > ig'(G)",
            CheckKind::FamilyValues => "ig(G*) = ig'(G*) = 3n/7 and ig(H) = ig'(H) = 5",
            CheckKind::ConjectureSweep => "ig, ig' <= ceil(3n/7) without K_2 components",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Usage(format!("unknown check {s:?}")))
    }
}

/// One instance on which the checked property failed, with enough data to
/// replay it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub parameters: BTreeMap<String, String>,
    pub observed: String,
    pub expected: String,
}

/// A notable instance: a bound attained, a maximum ratio.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Extremal {
    pub description: String,
    pub graph6: String,
    pub parameters: BTreeMap<String, String>,
    pub observed: String,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InstanceRow {
    pub graph6: String,
    pub n: usize,
    pub family: String,
    pub d_value: usize,
    pub s_value: usize,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub exact: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub statement: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
    pub extremal: Vec<Extremal>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
    #[serde(skip)]
    pub rows: Vec<InstanceRow>,
}

impl CheckReport {
    pub fn new(kind: CheckKind) -> Self {
        CheckReport {
            kind,
            statement: kind.statement().to_string(),
            instances: 0,
            violations: Vec::new(),
            extremal: Vec::new(),
            notes: Vec::new(),
            wall_time_ms: None,
            rows: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Sorts every list so output does not depend on evaluation order.
    pub fn normalize(&mut self) {
        self.violations.sort();
        self.violations.dedup();
        self.extremal.sort();
        self.extremal.dedup();
        self.rows
            .sort_by(|a, b| (a.n, &a.family, &a.graph6).cmp(&(b.n, &b.family, &b.graph6)));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_rows_csv(&self.rows, out)
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} instances, {} violations)",
            self.kind,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.violations.len()
        )
    }
}

pub fn write_rows_csv<W: Write>(rows: &[InstanceRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record([
            "graph6", "n", "family", "d_value", "s_value", "lower", "upper", "exact",
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

//! Machine-readable experiment reports.
//!
//! Every row carries both sides of one inequality as exact rationals, so a
//! reader can recompute `pass` without trusting the producer.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::ExperimentConfig;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &Scalar, rhs: &Scalar) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub experiment: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub params: BTreeMap<String, Scalar>,
    pub quantity: String,
    pub exact_value: Scalar,
    pub decimal_value: String,
    pub relation: Relation,
    pub bound: Scalar,
    pub pass: bool,
}

impl ReportRow {
    pub fn new(
        experiment: &str,
        n: usize,
        params: &BTreeMap<String, Scalar>,
        quantity: impl Into<String>,
        value: Scalar,
        relation: Relation,
        bound: Scalar,
    ) -> Self {
        ReportRow {
            experiment: experiment.to_string(),
            n,
            params: params.clone(),
            quantity: quantity.into(),
            decimal_value: decimal(&value),
            pass: relation.holds(&value, &bound),
            exact_value: value,
            relation,
            bound,
        }
    }

    pub fn recheck(&self) -> bool {
        self.relation.holds(&self.exact_value, &self.bound) == self.pass
    }
}

/// Human-readable approximation; never used for decisions.
pub fn decimal(x: &Scalar) -> String {
    format!("{:.9}", x.to_f64())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub rows: Vec<ReportRow>,
    /// Observations that are reported but not asserted.
    pub notes: BTreeMap<String, String>,
    /// Certificates, witnesses and other structured by-products.
    pub artifacts: BTreeMap<String, serde_json::Value>,
    pub verdict: bool,
}

impl Report {
    pub fn new(config: ExperimentConfig) -> Self {
        Report {
            config,
            rows: Vec::new(),
            notes: BTreeMap::new(),
            artifacts: BTreeMap::new(),
            verdict: true,
        }
    }

    pub fn push(&mut self, row: ReportRow) {
        self.verdict &= row.pass;
        self.rows.push(row);
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.notes.insert(key.into(), value.to_string());
    }

    pub fn artifact(&mut self, key: impl Into<String>, value: &impl Serialize) {
        let v = serde_json::to_value(value).expect("artifacts serialize");
        self.artifacts.insert(key.into(), v);
    }

    /// Appends another report's rows, notes and artifacts, prefixing the
    /// latter two with `prefix`.
    pub fn absorb(&mut self, other: Report, prefix: &str) {
        for row in other.rows {
            self.push(row);
        }
        self.verdict &= other.verdict;
        for (k, v) in other.notes {
            self.notes.insert(format!("{prefix}{k}"), v);
        }
        for (k, v) in other.artifacts {
            self.artifacts.insert(format!("{prefix}{k}"), v);
        }
    }

    /// Re-evaluates every row from its serialized exact values.
    pub fn self_check(&self) -> bool {
        self.rows.iter().all(ReportRow::recheck) && self.verdict == self.rows.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One line per row: `experiment, N, <params...>, quantity, relation,
    /// exact_value, decimal_value, bound, pass`. Parameter columns are the
    /// union of all row parameter names, sorted.
    pub fn to_csv(&self) -> String {
        let mut keys: Vec<&String> = self.rows.iter().flat_map(|r| r.params.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["experiment", "N"];
        header.extend(keys.iter().map(|k| k.as_str()));
        header.extend(["quantity", "relation", "exact_value", "decimal_value", "bound", "pass"]);
        w.write_record(&header).expect("in-memory write");
        for row in &self.rows {
            let mut rec = vec![row.experiment.clone(), row.n.to_string()];
            rec.extend(
                keys.iter()
                    .map(|k| row.params.get(*k).map(ToString::to_string).unwrap_or_default()),
            );
            rec.extend([
                row.quantity.clone(),
                row.relation.to_string(),
                row.exact_value.to_string(),
                row.decimal_value.clone(),
                row.bound.to_string(),
                row.pass.to_string(),
            ]);
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn relations() {
        assert!(Relation::Le.holds(&q(1, 2), &q(1, 2)));
        assert!(!Relation::Lt.holds(&q(1, 2), &q(1, 2)));
        assert!(Relation::Ge.holds(&q(1, 2), &q(1, 3)));
        assert!(Relation::Eq.holds(&q(2, 4), &q(1, 2)));
    }

    #[test]
    fn tampered_row_fails_recheck() {
        let params = BTreeMap::from([("r".to_string(), q(1, 10))]);
        let mut row = ReportRow::new("thm1", 2, &params, "diameter", q(5, 22), Relation::Le, q(11, 40));
        assert!(row.pass && row.recheck());
        row.exact_value = q(1, 2);
        assert!(!row.recheck());
    }
}

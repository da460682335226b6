//! Pass/fail reports shared by all scans, checks and certificates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// A scalar inside a report: integers stay numeric, everything else is text.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Text(String),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<&Rational> for Value {
    fn from(v: &Rational) -> Self {
        if v.is_integer() {
            if let Ok(i) = i64::try_from(v.numer().clone()) {
                return Value::Int(i);
            }
        }
        Value::Text(v.to_string())
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::from(&v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// How a nonnegativity claim was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// All coefficients of `f(t + x0)` are nonnegative.
    ShiftedCoefficients,
    /// No sign change of `f` on `(x0, inf)` by Sturm count, `f(x0) >= 0`
    /// and positive leading coefficient.
    Sturm,
    /// Neither route succeeded.
    Uncertified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub kind: CertificateKind,
    pub detail: String,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.kind != CertificateKind::Uncertified
    }
}

/// Outcome of a check. The verdict is `Pass` exactly when the observed
/// exceptions equal the expected exceptions (as sets); with no expected
/// exceptions that means "no exceptions".
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub exceptions: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_exceptions: Vec<Vec<Value>>,
    #[serde(default)]
    pub certificates: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ScanReport {
    pub fn new(check: impl Into<String>) -> Self {
        ScanReport {
            check: check.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            exceptions: Vec::new(),
            expected_exceptions: Vec::new(),
            certificates: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn push_exception(&mut self, entry: Vec<Value>) {
        self.exceptions.push(entry);
        self.update_verdict();
    }

    pub fn expect_exception(&mut self, entry: Vec<Value>) {
        self.expected_exceptions.push(entry);
        self.update_verdict();
    }

    /// Records a certificate; an uncertified one also becomes an exception.
    pub fn push_certificate(&mut self, cert: Certificate) {
        if !cert.is_certified() {
            self.exceptions
                .push(vec![Value::from("uncertified"), Value::from(cert.subject.as_str())]);
        }
        self.certificates.push(cert);
        self.update_verdict();
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends exceptions, certificates and notes of `other`.
    pub fn absorb(&mut self, other: ScanReport) {
        self.exceptions.extend(other.exceptions);
        self.expected_exceptions.extend(other.expected_exceptions);
        self.certificates.extend(other.certificates);
        self.notes.extend(other.notes);
        self.update_verdict();
    }

    /// Sorts exception lists so output is independent of evaluation order.
    pub fn canonicalize(&mut self) {
        self.exceptions.sort();
        self.expected_exceptions.sort();
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn update_verdict(&mut self) {
        let mut seen = self.exceptions.clone();
        let mut want = self.expected_exceptions.clone();
        seen.sort();
        seen.dedup();
        want.sort();
        want.dedup();
        self.verdict = if seen == want { Verdict::Pass } else { Verdict::Fail };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::pg3::{LineId, PlaneId, PointId};

/// The named checks, in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckName {
    #[serde(rename = "P1")]
    P1,
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "eq1")]
    Eq1,
    #[serde(rename = "eq2")]
    Eq2,
    #[serde(rename = "eq3")]
    Eq3,
    #[serde(rename = "divisibility")]
    Divisibility,
    #[serde(rename = "per-plane-black-counts")]
    PerPlaneBlackCounts,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "size-sigma")]
    SizeSigma,
    #[serde(rename = "tangent-plane-census")]
    TangentPlaneCensus,
    #[serde(rename = "line-duality")]
    LineDuality,
    #[serde(rename = "black-line-structure")]
    BlackLineStructure,
    #[serde(rename = "gq-axioms")]
    GqAxioms,
    #[serde(rename = "reconstruction")]
    Reconstruction,
    #[serde(rename = "final-equality")]
    FinalEquality,
}

impl CheckName {
    pub const ALL: [CheckName; 15] = [
        CheckName::P1,
        CheckName::P2,
        CheckName::Eq1,
        CheckName::Eq2,
        CheckName::Eq3,
        CheckName::Divisibility,
        CheckName::PerPlaneBlackCounts,
        CheckName::R,
        CheckName::SizeSigma,
        CheckName::TangentPlaneCensus,
        CheckName::LineDuality,
        CheckName::BlackLineStructure,
        CheckName::GqAxioms,
        CheckName::Reconstruction,
        CheckName::FinalEquality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::P1 => "P1",
            CheckName::P2 => "P2",
            CheckName::Eq1 => "eq1",
            CheckName::Eq2 => "eq2",
            CheckName::Eq3 => "eq3",
            CheckName::Divisibility => "divisibility",
            CheckName::PerPlaneBlackCounts => "per-plane-black-counts",
            CheckName::R => "r",
            CheckName::SizeSigma => "size-sigma",
            CheckName::TangentPlaneCensus => "tangent-plane-census",
            CheckName::LineDuality => "line-duality",
            CheckName::BlackLineStructure => "black-line-structure",
            CheckName::GqAxioms => "gq-axioms",
            CheckName::Reconstruction => "reconstruction",
            CheckName::FinalEquality => "final-equality",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run because an earlier check failed.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// The smallest object on which a failed check can be re-run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Point { point: PointId },
    Line { line: LineId },
    Plane { plane: PlaneId },
    PlanePair { first: PlaneId, second: PlaneId },
    LinePair { first: LineId, second: LineId },
    PointLine { point: PointId, line: LineId },
    /// The failure is a global count, not attributable to one object.
    Global,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point { point } => write!(f, "point {point}"),
            Witness::Line { line } => write!(f, "line {line}"),
            Witness::Plane { plane } => write!(f, "plane {plane}"),
            Witness::PlanePair { first, second } => write!(f, "planes {first},{second}"),
            Witness::LinePair { first, second } => write!(f, "lines {first},{second}"),
            Witness::PointLine { point, line } => write!(f, "point {point} line {line}"),
            Witness::Global => f.write_str("global"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: CheckName,
    pub status: Status,
    pub values: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn new(name: CheckName) -> Self {
        CheckRecord {
            name,
            status: Status::Pass,
            values: BTreeMap::new(),
            witness: None,
            detail: None,
        }
    }

    pub fn skipped(name: CheckName) -> Self {
        CheckRecord {
            status: Status::Skipped,
            ..CheckRecord::new(name)
        }
    }

    pub fn value(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), v.into());
        self
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    /// Marks the record failed; the first failure's witness and detail win.
    pub fn fail(&mut self, witness: Witness, detail: impl Into<String>) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.witness = Some(witness);
            self.detail = Some(detail.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn get_i64(&self, key: &str) -> Option<i64> {
        self.values.get(key).and_then(Value::as_i64)
    }
}

/// Outcome of the full pipeline on one plane family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub q: String,
    pub family_size: usize,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fit_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reconstructed_form: Option<String>,
    pub verdict: Status,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn record(&self, name: CheckName) -> Option<&CheckRecord> {
        self.checks.iter().find(|r| r.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One line per check: `name status key=value ... [witness ...]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "certificate q={} planes={} verdict={}", self.q, self.family_size, self.verdict).unwrap();
        for rec in &self.checks {
            write!(out, "{:<24} {:<7}", rec.name.as_str(), rec.status.to_string()).unwrap();
            for (k, v) in &rec.values {
                write!(out, " {k}={v}").unwrap();
            }
            if let Some(w) = &rec.witness {
                write!(out, " witness=[{w}]").unwrap();
            }
            if let Some(d) = &rec.detail {
                write!(out, " ({d})").unwrap();
            }
            out.push('\n');
        }
        if let Some(d) = self.fit_dimension {
            writeln!(out, "fit-dimension {d}").unwrap();
        }
        if let Some(form) = &self.reconstructed_form {
            writeln!(out, "form {form}").unwrap();
        }
        out
    }
}

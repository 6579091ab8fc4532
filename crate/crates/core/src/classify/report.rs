//! Machine-checkable verdicts: each proof step is a claim with a computed and an
//! expected value; the report passes iff every step does.

use std::fmt;

use serde::Serialize;

use crate::rational::Rational;

/// A value appearing in a report. Rationals serialize as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Rat(Rational),
    Text(String),
    List(Vec<Value>),
}

impl Value {
    pub fn pair(a: i64, b: i64) -> Value {
        Value::List(vec![Value::Int(a), Value::Int(b)])
    }

    pub fn triple(a: i64, b: i64, c: i64) -> Value {
        Value::List(vec![Value::Int(a), Value::Int(b), Value::Int(c)])
    }

    pub fn ints(xs: &[i64]) -> Value {
        Value::List(xs.iter().map(|&x| Value::Int(x)).collect())
    }

    pub fn pairs<I: IntoIterator<Item = (i64, i64)>>(xs: I) -> Value {
        Value::List(xs.into_iter().map(|(a, b)| Value::pair(a, b)).collect())
    }

    pub fn text(s: impl Into<String>) -> Value {
        Value::Text(s.into())
    }

    /// CSV cell: lists joined with `;`, nested lists with `:`. Never contains a comma.
    pub fn csv_cell(&self) -> String {
        self.csv_at_depth(0)
    }

    fn csv_at_depth(&self, depth: usize) -> String {
        match self {
            Value::List(items) => {
                let sep = match depth {
                    0 => ";",
                    1 => ":",
                    _ => "|",
                };
                items.iter().map(|v| v.csv_at_depth(depth + 1)).collect::<Vec<_>>().join(sep)
            }
            Value::Text(s) => s.replace([',', ' ', '\n'], "_"),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(r) => write!(f, "{r}"),
            Value::Text(s) => write!(f, "{s}"),
            Value::List(items) => {
                write!(f, "[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Rat(r)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

/// Where the expected value of a step comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A value stated in the classification being checked.
    Published,
    /// Recomputed by an independent route.
    Recomputed,
    /// Forced by an algebraic identity or by definition.
    Structural,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Published => "published",
            Source::Recomputed => "recomputed",
            Source::Structural => "structural",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    /// Bare identifier, safe for CSV.
    pub id: String,
    pub claim: String,
    pub computed: Value,
    pub expected: Value,
    pub source: Source,
    pub pass: bool,
}

/// A geometric fact the verdict relies on but does not compute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assumption {
    pub id: String,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub theorem: String,
    pub title: String,
    pub steps: Vec<Step>,
    pub assumptions: Vec<Assumption>,
    pub overall: bool,
}

impl VerdictReport {
    pub fn step(&self, id: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| !s.pass)
    }
}

pub struct ReportBuilder {
    theorem: String,
    title: String,
    steps: Vec<Step>,
    assumptions: Vec<Assumption>,
}

impl ReportBuilder {
    pub fn new(theorem: &str, title: &str) -> Self {
        ReportBuilder {
            theorem: theorem.to_string(),
            title: title.to_string(),
            steps: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn check(
        &mut self,
        id: &str,
        claim: &str,
        computed: impl Into<Value>,
        expected: impl Into<Value>,
        source: Source,
    ) -> &mut Self {
        let (computed, expected) = (computed.into(), expected.into());
        let pass = computed == expected;
        self.steps.push(Step {
            id: id.to_string(),
            claim: claim.to_string(),
            computed,
            expected,
            source,
            pass,
        });
        self
    }

    pub fn assume(&mut self, id: &str, statement: &str) -> &mut Self {
        self.assumptions.push(Assumption { id: id.to_string(), statement: statement.to_string() });
        self
    }

    pub fn finish(self) -> VerdictReport {
        let overall = self.steps.iter().all(|s| s.pass);
        VerdictReport {
            theorem: self.theorem,
            title: self.title,
            steps: self.steps,
            assumptions: self.assumptions,
            overall,
        }
    }
}

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

/// A predicted or computed quantity. All are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Ints(Vec<i64>),
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

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<Vec<i64>> for Value {
    fn from(v: Vec<i64>) -> Self {
        Value::Ints(v)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::Ints(v.into_iter().map(|x| x as i64).collect())
    }
}

impl From<Vec<u32>> for Value {
    fn from(v: Vec<u32>) -> Self {
        Value::Ints(v.into_iter().map(i64::from).collect())
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(String::from(v))
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
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Ints(v) => {
                f.write_str("[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Value::Text(v) => f.write_str(v),
        }
    }
}

/// One predicted-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub predicted: Value,
    pub computed: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, predicted: impl Into<Value>, computed: impl Into<Value>) -> Self {
        Check { name: name.into(), predicted: predicted.into(), computed: computed.into() }
    }

    pub fn pass(&self) -> bool {
        self.predicted == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub q: u32,
    pub checks: Vec<Check>,
    /// Observations that are not pass/fail, such as which reading of a
    /// notation the computation supports.
    pub notes: Vec<String>,
    /// Set by callers that can read a clock.
    pub elapsed: Option<Duration>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, q: u32) -> Self {
        TheoremReport { theorem: theorem.into(), q, checks: Vec::new(), notes: Vec::new(), elapsed: None }
    }

    pub fn check(&mut self, name: impl Into<String>, predicted: impl Into<Value>, computed: impl Into<Value>) {
        self.checks.push(Check::new(name, predicted, computed));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// A report that could not run; it fails.
    pub fn error(theorem: impl Into<String>, q: u32, err: impl fmt::Display) -> Self {
        let mut r = TheoremReport::new(theorem, q);
        r.check("runs", "ok", alloc::format!("error: {err}"));
        r
    }

    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass())
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {} q={}", if self.pass() { "PASS" } else { "FAIL" }, self.theorem, self.q)?;
        for c in &self.checks {
            let mark = if c.pass() { "ok " } else { "BAD" };
            writeln!(f, "  {mark} {}: predicted {}, computed {}", c.name, c.predicted, c.computed)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

//! Pass/fail records shared by the identity and module checks.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one identity check: the first failing comparison is kept as
/// the witness, later ones are only counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: String,
    pub params: Vec<(String, String)>,
    pub status: Status,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub checked: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(identity: &str) -> Self {
        Report {
            identity: identity.to_string(),
            params: Vec::new(),
            status: Status::Pass,
            witness: None,
            notes: Vec::new(),
            checked: 0,
            failed: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Record one comparison. `witness` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            self.status = Status::Fail;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
        ok
    }

    /// Compare two displayable values for equality.
    pub fn expect_eq<T: PartialEq + fmt::Display>(&mut self, label: &str, lhs: &T, rhs: &T) -> bool {
        self.check(lhs == rhs, || alloc::format!("{label}: lhs = {lhs}, rhs = {rhs}"))
    }

    /// Fold another report's outcome into this one.
    pub fn absorb(&mut self, other: &Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        if other.status == Status::Fail {
            self.status = Status::Fail;
            if self.witness.is_none() {
                self.witness = other.witness.clone();
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.identity, self.status.as_str())?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " ({}/{} comparisons)", self.checked - self.failed, self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

//! Pass/fail verdicts shared by the verifiers, with text, JSON and TSV output.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

pub const SCHEMA_VERSION: u32 = 1;
/// Counterexamples kept per verdict; the total is still counted.
pub const MAX_COUNTEREXAMPLES: usize = 20;
pub const BOUNDED_NOTE: &str = "verified up to bound";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A truncated ring overflowed; the report is partial.
    Aborted,
    /// The input has no finite certificate for the requested check.
    Refused,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Aborted => "ABORTED",
            Status::Refused => "REFUSED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub v: String,
    pub b: String,
    pub c: String,
    pub expected: String,
    pub found: String,
}

/// Checks and failures accumulated by one (possibly parallel) piece of a scan.
/// Merging in enumeration order keeps the stored counterexamples ordered.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checks: u64,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(cx());
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
    }
}

impl FromIterator<Tally> for Tally {
    fn from_iter<I: IntoIterator<Item = Tally>>(iter: I) -> Self {
        let mut t = Tally::default();
        for x in iter {
            t.merge(x);
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub subject: String,
    pub bounds: Vec<(String, usize)>,
    pub status: Status,
    pub checks: u64,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Named boolean results, e.g. the two generation equalities.
    pub outcomes: Vec<(String, bool)>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl Verdict {
    pub fn new(name: &str, subject: &str, bounds: &[(&str, usize)]) -> Self {
        Self {
            name: name.to_string(),
            subject: subject.to_string(),
            bounds: bounds.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: Status::Pass,
            checks: 0,
            failures: 0,
            counterexamples: Vec::new(),
            outcomes: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed: None,
        }
    }

    /// Folds a tally in and sets the status to fail if it saw failures.
    pub fn absorb(&mut self, t: Tally) {
        self.checks += t.checks;
        self.failures += t.failures;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(t.counterexamples.into_iter().take(room));
        if self.failures > 0 && self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub fn outcome(&mut self, name: &str, ok: bool) {
        self.outcomes.push((name.to_string(), ok));
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Partial verdict for a scan stopped by a truncated ring.
    pub fn aborted(mut self, err: &Error) -> Self {
        self.status = Status::Aborted;
        self.notes.push(format!("aborted: {err}"));
        self
    }

    pub fn refused(mut self, reason: &str) -> Self {
        self.status = Status::Refused;
        self.notes.push(format!("bounded verification only: {reason}"));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn bounds_text(&self) -> String {
        self.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }

    /// Multi-line human readable form. Timing appears only when requested.
    pub fn to_text(&self, timing: bool) -> String {
        let mut s = String::new();
        let _ = write!(s, "{} on {} [{}]: {} ({} checks", self.name, self.subject, self.bounds_text(), self.status.label(), self.checks);
        if self.failures > 0 {
            let _ = write!(s, ", {} failed", self.failures);
        }
        s.push(')');
        if timing {
            if let Some(t) = self.elapsed {
                let _ = write!(s, " in {:.3}s", t.as_secs_f64());
            }
        }
        s.push('\n');
        for (k, ok) in &self.outcomes {
            let _ = writeln!(s, "  outcome {k}: {ok}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        for w in &self.witnesses {
            let _ = writeln!(s, "  witness: {w}");
        }
        for c in &self.counterexamples {
            let _ = writeln!(s, "  counterexample [{}]: v={} b={} c={} expected {} found {}", c.check, c.v, c.b, c.c, c.expected, c.found);
        }
        s
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("verdict serializes");
        v["bounds"] = self.bounds.iter().map(|(k, n)| (k.clone(), json!(n))).collect::<serde_json::Map<_, _>>().into();
        v["outcomes"] = self.outcomes.iter().map(|(k, b)| (k.clone(), json!(b))).collect::<serde_json::Map<_, _>>().into();
        if timing {
            v["elapsed_seconds"] = json!(self.elapsed.map(|d| d.as_secs_f64()));
        }
        v
    }

    pub fn tsv_header() -> &'static str {
        "name\tsubject\tbounds\tstatus\tchecks\tfailures\tcounterexamples"
    }

    pub fn to_tsv_row(&self) -> String {
        let cx: Vec<String> =
            self.counterexamples.iter().map(|c| format!("{}:v={};b={};c={};{}!={}", c.check, c.v, c.b, c.c, c.found, c.expected)).collect();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.subject,
            self.bounds_text(),
            self.status.label(),
            self.checks,
            self.failures,
            cx.join(" | ")
        )
    }
}

/// JSON document wrapping a list of verdicts.
pub fn verdicts_json(verdicts: &[Verdict], timing: bool) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "reports": verdicts.iter().map(|v| v.to_json(timing)).collect::<Vec<_>>(),
    })
}

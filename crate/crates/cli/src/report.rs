use std::fmt::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Outcome of a search or of random sampling, never a proof.
    Evidence,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Evidence => "evidence",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub value: String,
    pub tolerance: String,
    /// What the check corresponds to, or "plumbing" for bookkeeping rows.
    pub anchor: String,
}

pub const HEADER: &str = "name\tstatus\tvalue\ttolerance\tanchor";

/// Fixed-width scientific notation, so reports diff cleanly.
pub fn num(x: f64) -> String {
    format!("{:.9e}", x + 0.0)
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub seed: Option<u64>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: String, seed: Option<u64>) -> Self {
        Self { command, seed, records: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, value: impl Into<String>, tolerance: impl Into<String>, anchor: impl Into<String>) {
        self.records.push(Record {
            name: name.into(),
            status,
            value: value.into(),
            tolerance: tolerance.into(),
            anchor: anchor.into(),
        });
    }

    /// Records `value <= tol` as pass or fail.
    pub fn bound(&mut self, name: &str, value: f64, tol: f64, anchor: &str) {
        let status = if value <= tol { Status::Pass } else { Status::Fail };
        self.push(name, status, num(value), num(tol), anchor);
    }

    pub fn check(&mut self, name: &str, ok: bool, value: impl Into<String>, anchor: &str) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, value, "-", anchor);
    }

    pub fn info(&mut self, name: &str, value: impl Into<String>) {
        self.push(name, Status::Pass, value, "-", "plumbing");
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# command\t{}", self.command).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "# seed\t{seed:#x}").unwrap();
        }
        out.push_str(HEADER);
        out.push('\n');
        for r in &self.records {
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.name, r.status, r.value, r.tolerance, r.anchor).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new("solvgeom x".into(), Some(255));
        r.bound("a", 1e-12, 1e-10, "thing");
        r.push("b", Status::Evidence, "3", "-", "search");
        assert!(r.passed());
        r.bound("c", 1.0, 0.5, "other");
        assert!(!r.passed());
        let text = r.render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# command\tsolvgeom x");
        assert_eq!(lines[1], "# seed\t0xff");
        assert_eq!(lines[2], HEADER);
        assert_eq!(lines[3], "a\tpass\t1.000000000e-12\t1.000000000e-10\tthing");
        assert_eq!(lines[5], "c\tfail\t1.000000000e0\t5.000000000e-1\tother");
    }

    #[test]
    fn negative_zero_prints_as_zero() {
        assert_eq!(num(-0.0), "0.000000000e0");
    }
}

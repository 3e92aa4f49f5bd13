//! Verification reports and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use fmcheck_core::groebner::GbStats;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never affects the exit code.
    Info,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
            Status::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GroebnerTotals {
    pub pairs_examined: usize,
    pub coprime_skips: usize,
    pub chain_skips: usize,
    pub zero_reductions: usize,
    pub peak_basis_len: usize,
}

impl GroebnerTotals {
    pub fn add(&mut self, s: &GbStats) {
        self.pairs_examined += s.pairs_examined;
        self.coprime_skips += s.coprime_skips;
        self.chain_skips += s.chain_skips;
        self.zero_reductions += s.zero_reductions;
        self.peak_basis_len = self.peak_basis_len.max(s.peak_basis_len);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub groebner: GroebnerTotals,
    #[serde(skip)]
    clock: Option<Instant>,
}

impl Report {
    /// With `timings`, each check records the time since the previous one.
    pub fn new(command: &str, timings: bool) -> Self {
        Report {
            command: command.into(),
            passed: true,
            checks: Vec::new(),
            groebner: GroebnerTotals::default(),
            clock: timings.then(Instant::now),
        }
    }

    pub fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) -> &mut Check {
        if status == Status::Fail {
            self.passed = false;
        }
        let elapsed_ms = self.clock.as_mut().map(|c| {
            let ms = c.elapsed().as_millis();
            *c = Instant::now();
            ms
        });
        self.checks.push(Check { name: name.into(), status, detail: detail.into(), witness: BTreeMap::new(), elapsed_ms });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "fmcheck {}: {}", self.command, if self.passed { "PASS" } else { "FAIL" });
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}: {}", c.status.label(), c.name, c.detail);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            for (k, v) in &c.witness {
                let _ = writeln!(out, "      {k}: {v}");
            }
        }
        let g = &self.groebner;
        if g.pairs_examined > 0 {
            let _ = writeln!(
                out,
                "  groebner: {} pairs, {} coprime skips, {} chain skips, {} zero reductions, peak basis {}",
                g.pairs_examined, g.coprime_skips, g.chain_skips, g.zero_reductions, g.peak_basis_len
            );
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl Check {
    pub fn with(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.witness.insert(key.into(), value.into());
        self
    }
}

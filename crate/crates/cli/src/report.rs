//! JSON shapes emitted by `betti --json` and `verify`.

use serde::Serialize;

use syzygy::invariants::{BettiTable, DerivedInvariants};
use syzygy::verify::{CheckResult, SuiteItem};

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    #[serde(flatten)]
    pub result: CheckResult,
    pub millis: u64,
}

/// Output of a verification run. All fields except `millis` are a function
/// of the command line.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(command: String, seed: u64, items: Vec<SuiteItem>) -> Self {
        let items = items
            .into_iter()
            .map(|i| ReportItem { result: i.result, millis: i.elapsed.as_millis() as u64 })
            .collect();
        Report { version: env!("CARGO_PKG_VERSION").to_string(), command, seed, items }
    }

    pub fn failures(&self) -> usize {
        self.items.iter().filter(|i| !i.result.pass).count()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    /// `[p, q, β_{p,q}]` for the nonzero entries.
    pub entries: Vec<[u64; 3]>,
    pub pd: usize,
    pub depth: usize,
    pub reg: usize,
    /// Green-Lazarsfeld index; `null` when infinite.
    #[serde(rename = "aX")]
    pub a_x: Option<usize>,
}

impl BettiJson {
    pub fn new(table: &BettiTable, inv: &DerivedInvariants) -> Self {
        BettiJson {
            entries: table.entries().map(|((p, q), b)| [p as u64, q as u64, b]).collect(),
            pd: inv.pd,
            depth: inv.depth,
            reg: inv.reg,
            a_x: inv.gl_index,
        }
    }
}

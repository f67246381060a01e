//! Run the cubic construction and the exact solver over a file of graphs.

use crate::constructive::{ipf_cubic, Certificate, CubicBound};
use crate::exact::{rho_exact, Budget};
use crate::graph::graph6::parse_graph6;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::BufRead;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    VerifyTheorem,
    ExactRho,
    Both,
}

impl CensusMode {
    fn construct(self) -> bool {
        self != CensusMode::ExactRho
    }
    fn exact(self) -> bool {
        self != CensusMode::VerifyTheorem
    }
}

impl std::str::FromStr for CensusMode {
    type Err = String;
    fn from_str(s: &str) -> Result<CensusMode, String> {
        match s {
            "verify_theorem" => Ok(CensusMode::VerifyTheorem),
            "exact_rho" => Ok(CensusMode::ExactRho),
            "both" => Ok(CensusMode::Both),
            _ => Err(format!("unknown census mode {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub mode: CensusMode,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub budget: Budget,
}

impl Default for CensusOptions {
    fn default() -> CensusOptions {
        CensusOptions {
            mode: CensusMode::Both,
            jobs: 0,
            budget: Budget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub line: usize,
    pub graph6: String,
    pub what: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// Result for one processed graph.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub line: usize,
    pub n: usize,
    pub certificate: Option<Certificate>,
    pub rho: Option<usize>,
    /// false when the solver ran out of budget and `rho` is only an upper bound
    pub rho_optimal: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n_to_max_rho: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
    pub graphs_processed: usize,
    pub skipped: usize,
    /// n -> ρ -> number of graphs
    pub rho_histogram: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub errors: Vec<LineError>,
    /// lines whose exact solve did not finish
    pub budget_exhausted: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CensusOutcome {
    pub report: CensusReport,
    pub entries: Vec<CensusEntry>,
}

enum Line {
    Blank,
    Error(String),
    Skipped,
    Done(CensusEntry, Vec<String>),
}

fn process(line: usize, text: &str, opts: &CensusOptions) -> Line {
    let text = text.trim();
    if text.is_empty() || text.starts_with('#') {
        return Line::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return Line::Error(e.to_string()),
    };
    if !g.is_cubic() || !g.is_connected() {
        return Line::Skipped;
    }
    let n = g.n();
    let bound = CubicBound::for_order(n).value(n);
    let mut problems = Vec::new();
    let mut entry = CensusEntry {
        line,
        n,
        certificate: None,
        rho: None,
        rho_optimal: false,
    };
    if opts.mode.construct() {
        match ipf_cubic(&g) {
            Ok(c) => {
                if !c.verified {
                    problems.push(format!("certificate with {} paths failed verification", c.ipf.path_count));
                }
                entry.certificate = Some(c);
            }
            Err(e) => problems.push(format!("construction failed: {e}")),
        }
    }
    if opts.mode.exact() {
        match rho_exact(&g, opts.budget) {
            Ok(r) => {
                if r.rho > bound && r.optimal {
                    problems.push(format!("rho = {} exceeds {bound}", r.rho));
                }
                entry.rho = Some(r.rho);
                entry.rho_optimal = r.optimal;
            }
            Err(e) => problems.push(format!("solver failed: {e}")),
        }
    }
    Line::Done(entry, problems)
}

/// Process newline-separated graph6 strings. Line numbers start at 1 and
/// the report is in line order whatever the number of workers.
pub fn census_lines(lines: &[String], opts: &CensusOptions) -> CensusOutcome {
    let run = || -> Vec<Line> {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, l)| process(i + 1, l, opts))
            .collect()
    };
    let results = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut report = CensusReport::default();
    let mut entries = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        let line = i + 1;
        match r {
            Line::Blank => {}
            Line::Error(message) => report.errors.push(LineError { line, message }),
            Line::Skipped => report.skipped += 1,
            Line::Done(entry, problems) => {
                report.graphs_processed += 1;
                for what in problems {
                    report.violations.push(Violation {
                        line,
                        graph6: lines[i].trim().to_string(),
                        what,
                    });
                }
                if let Some(r) = entry.rho {
                    if entry.rho_optimal {
                        let m = report.n_to_max_rho.entry(entry.n).or_insert(r);
                        *m = (*m).max(r);
                        *report
                            .rho_histogram
                            .entry(entry.n)
                            .or_default()
                            .entry(r)
                            .or_default() += 1;
                    } else {
                        report.budget_exhausted.push(line);
                    }
                }
                entries.push(entry);
            }
        }
    }
    CensusOutcome { report, entries }
}

/// Like [`census_lines`], reading from `input`. A read error ends the input
/// and is reported against the line where it happened.
pub fn census_reader(input: impl BufRead, opts: &CensusOptions) -> CensusOutcome {
    let mut lines = Vec::new();
    let mut failure = None;
    for l in input.lines() {
        match l {
            Ok(l) => lines.push(l),
            Err(e) => {
                failure = Some(LineError {
                    line: lines.len() + 1,
                    message: e.to_string(),
                });
                break;
            }
        }
    }
    let mut out = census_lines(&lines, opts);
    out.report.errors.extend(failure);
    out
}

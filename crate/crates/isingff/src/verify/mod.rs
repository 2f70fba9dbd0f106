//! Verification suites. Each suite expands into independent tasks, one per `(item, N)`; tasks
//! run in parallel and their rows are collected in task order, so reports are deterministic.

mod suites;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{all_pass, Check};

pub use suites::*;

/// Range overrides; `None` keeps each suite's default.
#[derive(Clone, Debug, Default)]
pub struct Config {
    pub n: Option<(i64, i64)>,
    pub big_n: Option<(i64, i64)>,
    pub order: Option<i64>,
    pub powers: Option<(u32, u32)>,
}

impl Config {
    pub fn n_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        clip(self.n, lo, hi)
    }

    pub fn big_n_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        clip(self.big_n, lo, hi)
    }
}

fn clip(r: Option<(i64, i64)>, lo: i64, hi: i64) -> Vec<i64> {
    match r {
        Some((a, b)) => (a..=b).collect(),
        None => (lo..=hi).collect(),
    }
}

pub type Task = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn tasks(&self, cfg: &Config) -> Vec<Task>;
}

pub fn suites() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(Fixtures),
        Box::new(Oracle),
        Box::new(Leading),
        Box::new(Wronskian),
        Box::new(Odes),
        Box::new(Operators),
        Box::new(Cancellation),
        Box::new(ScaleUp),
        Box::new(Findings),
    ]
}

pub fn suite(name: &str) -> Result<Box<dyn Suite>> {
    suites().into_iter().find(|s| s.name() == name).ok_or_else(|| {
        let known: Vec<&str> = suites().iter().map(|s| s.name()).collect();
        Error::UnknownName(format!("suite {name:?}; known: {}", known.join(", ")))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_fatal())
    }
}

pub fn run(s: &dyn Suite, cfg: &Config) -> SuiteReport {
    let checks: Vec<Check> = s.tasks(cfg).par_iter().flat_map_iter(|t| t()).collect();
    SuiteReport { suite: s.name(), passed: all_pass(&checks), checks }
}

pub fn run_all(cfg: &Config) -> Vec<SuiteReport> {
    suites().iter().map(|s| run(s.as_ref(), cfg)).collect()
}

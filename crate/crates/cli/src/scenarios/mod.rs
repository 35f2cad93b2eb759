//! Named, seeded, self-checking experiments. Each acceptance criterion is
//! one scenario; running it yields a JSON report with pass/fail checks.

mod exhaustive;
mod formulas;
mod random;
mod strategies;

use crate::config::Config;
use serde::Serialize;
use serde_json::Value;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario `{0}`; use `run-scenario --list` to see the registered names")]
    Unknown(String),
    #[error(transparent)]
    Core(#[from] fodepth::Error),
}

/// One asserted property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// What a scenario body produces: its checks and free-form measurements.
#[derive(Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub observations: serde_json::Map<String, Value>,
}

impl Outcome {
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn observe(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("observations serialise");
        self.observations.insert(key.to_string(), value);
    }
}

/// Inputs shared by every scenario body.
pub struct Context<'a> {
    pub config: &'a Config,
    /// Seed for stochastic scenarios (the registered default unless
    /// overridden on the command line).
    pub seed: u64,
}

type Body = fn(&Context) -> Result<Outcome, fodepth::Error>;

/// A registered scenario.
pub struct Scenario {
    pub name: &'static str,
    /// The acceptance criterion the scenario reproduces.
    pub criterion: u8,
    pub title: &'static str,
    /// Reads the registered seed from the configuration, if stochastic.
    seed: Option<fn(&Config) -> u64>,
    body: Body,
}

impl Scenario {
    pub fn is_stochastic(&self) -> bool {
        self.seed.is_some()
    }

    pub fn default_seed(&self, config: &Config) -> Option<u64> {
        self.seed.map(|f| f(config))
    }
}

/// The JSON report of one run. Re-running with the same seed and
/// configuration reproduces it byte for byte apart from `runtime_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scenario: String,
    pub criterion: u8,
    pub title: String,
    pub seed: Option<u64>,
    pub config_hash: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub observations: serde_json::Map<String, Value>,
    pub runtime_ms: u128,
}

impl Report {
    /// `name: PASS|FAIL` followed by one line per check.
    pub fn to_text(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut out =
            format!("criterion {:>2} {}: {verdict} ({} ms)\n", self.criterion, self.scenario, self.runtime_ms);
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
        }
        out
    }
}

pub static SCENARIOS: &[Scenario] = &[
    Scenario {
        name: "oracle-triangle-n4",
        criterion: 1,
        title: "game depth agrees with Hintikka-sentence model checking",
        seed: None,
        body: exhaustive::oracle_triangle,
    },
    Scenario {
        name: "pvv-bound-n5",
        criterion: 2,
        title: "same-order pairs are distinguished within (n+3)/2 rounds",
        seed: None,
        body: exhaustive::pvv_bound,
    },
    Scenario {
        name: "clique-depth",
        criterion: 3,
        title: "D(Kn, Km) = n + 1",
        seed: None,
        body: exhaustive::clique_depth,
    },
    Scenario {
        name: "pebble-wl-n5",
        criterion: 4,
        title: "count-free 2-WL separates exactly when the 3-pebble game is won",
        seed: None,
        body: exhaustive::pebble_wl,
    },
    Scenario {
        name: "tree-refinement-n8",
        criterion: 5,
        title: "colour refinement separates non-isomorphic trees",
        seed: None,
        body: exhaustive::tree_refinement,
    },
    Scenario {
        name: "diag-chain",
        criterion: 6,
        title: "diagonal and full 2-WL separation rounds interlock",
        seed: Some(|c| c.settings.diag_chain.seed),
        body: random::diag_chain,
    },
    Scenario {
        name: "random-counting-depth",
        criterion: 7,
        title: "random graphs: two refinements split, and a 2-switch needs counting depth 4",
        seed: Some(|c| c.settings.random_counting_depth.seed),
        body: random::random_counting_depth,
    },
    Scenario {
        name: "extension-width",
        criterion: 8,
        title: "graphs with the 1-extension property need width at least 3",
        seed: Some(|c| c.settings.extension_width.seed),
        body: random::extension_width,
    },
    Scenario {
        name: "weak-sieve",
        criterion: 9,
        title: "small weak sieves, and the sieve strategy wins within |X| + 3 rounds",
        seed: Some(|c| c.settings.weak_sieve.seed),
        body: strategies::weak_sieve,
    },
    Scenario {
        name: "emitted-metrics",
        criterion: 10,
        title: "depth and width of emitted distance and defining sentences",
        seed: Some(|c| c.settings.emitted_metrics.seed),
        body: formulas::emitted_metrics,
    },
    Scenario {
        name: "padding",
        criterion: 11,
        title: "padding sentences: depth identity and exact definitions",
        seed: None,
        body: formulas::padding,
    },
    Scenario {
        name: "halving",
        criterion: 12,
        title: "the halving strategy wins within ⌈log2 d⌉ extra moves on paths against cycles",
        seed: None,
        body: strategies::halving,
    },
    Scenario {
        name: "asymmetric-tree",
        criterion: 13,
        title: "an asymmetric tree of radius 6 is separated from other trees within 8 rounds",
        seed: Some(|c| c.settings.asymmetric_tree.seed),
        body: strategies::asymmetric_tree,
    },
    Scenario {
        name: "bs-small-model",
        criterion: 14,
        title: "Bernays-Schönfinkel sentences have small models; twin cloning preserves truth",
        seed: Some(|c| c.settings.bs_small_model.seed),
        body: random::bs_small_model,
    },
    Scenario {
        name: "enumeration-counts",
        criterion: 15,
        title: "counts of asymmetric rooted trees and of graph classes",
        seed: None,
        body: exhaustive::enumeration_counts,
    },
];

pub fn find(name: &str) -> Result<&'static Scenario, ScenarioError> {
    SCENARIOS.iter().find(|s| s.name == name).ok_or_else(|| ScenarioError::Unknown(name.to_string()))
}

/// Run a scenario by name. `seed` overrides the registered seed of a
/// stochastic scenario and is ignored otherwise.
pub fn run_scenario(name: &str, config: &Config, seed: Option<u64>) -> Result<Report, ScenarioError> {
    let scenario = find(name)?;
    let effective = scenario.default_seed(config).map(|default| seed.unwrap_or(default));
    let start = Instant::now();
    let outcome = (scenario.body)(&Context { config, seed: effective.unwrap_or(0) })?;
    let passed = !outcome.checks.is_empty() && outcome.checks.iter().all(|c| c.passed);
    Ok(Report {
        scenario: scenario.name.to_string(),
        criterion: scenario.criterion,
        title: scenario.title.to_string(),
        seed: effective,
        config_hash: config.hash.clone(),
        passed,
        checks: outcome.checks,
        observations: outcome.observations,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Up to `limit` items rendered for a failure message.
pub(crate) fn sample<T: std::fmt::Debug>(items: &[T], limit: usize) -> String {
    let shown: Vec<String> = items.iter().take(limit).map(|i| format!("{i:?}")).collect();
    let more = items.len().saturating_sub(limit);
    if more > 0 {
        format!("{} (+{more} more)", shown.join(", "))
    } else {
        shown.join(", ")
    }
}

//! The scenario configuration: one TOML file holding every threshold,
//! sample count, seed and order cap.

use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::path::Path;
use thiserror::Error;

/// The checked-in configuration compiled into the binary.
pub const DEFAULT_CONFIG: &str = include_str!("../config/scenarios.toml");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read configuration {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid configuration: {0}")]
    Invalid(#[from] toml::de::Error),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Settings {
    pub oracle_triangle_n4: OracleTriangle,
    pub pvv_bound_n5: PvvBound,
    pub clique_depth: CliqueDepth,
    pub pebble_wl_n5: PebbleWl,
    pub tree_refinement_n8: TreeRefinement,
    pub diag_chain: DiagChain,
    pub random_counting_depth: RandomCountingDepth,
    pub extension_width: ExtensionWidth,
    pub weak_sieve: WeakSieve,
    pub emitted_metrics: EmittedMetrics,
    pub padding: Padding,
    pub halving: Halving,
    pub asymmetric_tree: AsymmetricTree,
    pub bs_small_model: BsSmallModel,
    pub enumeration_counts: EnumerationCounts,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleTriangle {
    pub max_order: usize,
    pub max_rounds: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PvvBound {
    pub max_order: usize,
    pub max_observed_at_max_order: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliqueDepth {
    pub max_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PebbleWl {
    pub max_order: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeRefinement {
    pub max_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagChain {
    pub seed: u64,
    pub pairs: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomCountingDepth {
    pub seed: u64,
    pub order: usize,
    pub samples: usize,
    pub min_fraction: f64,
    pub max_discrete_rounds: u32,
    pub min_counting_depth: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionWidth {
    pub seed: u64,
    pub order: usize,
    pub pairs: usize,
    pub extension: usize,
    pub max_attempts: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeakSieve {
    pub seed: u64,
    pub exhaustive_max_order: usize,
    pub sampled_order: usize,
    pub samples: usize,
    pub play_max_order: usize,
    pub endgame_rounds: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmittedMetrics {
    pub seed: u64,
    pub max_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Padding {
    pub base_orders: Vec<usize>,
    pub model_check_max_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Halving {
    pub min_order: usize,
    pub max_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsymmetricTree {
    pub seed: u64,
    pub path_order: usize,
    pub pendant_at: usize,
    pub random_opponents: usize,
    pub min_opponent_order: usize,
    pub max_opponent_order: usize,
    pub equal_diameter_opponents: usize,
    pub max_extra_leaves: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BsSmallModel {
    pub seed: u64,
    pub sentences: usize,
    pub max_existential: usize,
    pub max_universal: usize,
    pub clauses: usize,
    pub max_order: usize,
    pub clone_instances: usize,
    pub clone_model_max_order: usize,
    pub max_clones: usize,
    pub max_attempts: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationCounts {
    pub asymmetric_rooted_trees: Vec<usize>,
    pub graph_classes: Vec<usize>,
}

/// Parsed settings together with the hash of the text they came from.
#[derive(Debug, Clone)]
pub struct Config {
    pub settings: Settings,
    /// Lower-case hex SHA-256 of the configuration text.
    pub hash: String,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let settings = toml::from_str(text)?;
        let hash = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        Ok(Config { settings, hash })
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Read { path: path.display().to_string(), source })?;
        Config::parse(&text)
    }

    /// The configuration compiled into the binary.
    pub fn builtin() -> Config {
        Config::parse(DEFAULT_CONFIG).expect("the built-in configuration parses")
    }
}

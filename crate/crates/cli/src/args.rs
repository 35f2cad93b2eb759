//! Command-line grammar.

use crate::input::GraphFormat;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "fodepth", version, about = "Logical depth and width of finite graphs")]
pub struct Cli {
    /// Seed for stochastic commands; mandatory wherever randomness is used
    /// (scenarios fall back to their registered seed).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Scenario configuration file replacing the built-in one.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Graphs are graph6 strings or `@path` (a graph6 line or an edge list).
/// Formulas are formula text or `@path`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a named family or construction.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// k-dimensional Weisfeiler-Lehman refinement.
    Wl {
        #[command(subcommand)]
        command: WlCommand,
    },
    /// Solve Ehrenfeucht games or play a Spoiler strategy.
    Game {
        #[command(subcommand)]
        game: GameCommand,
    },
    /// Emit a sentence and report its length, depth, width and alternation.
    Define {
        #[command(subcommand)]
        sentence: DefineCommand,
    },
    /// Model-check a formula against graphs (arguments, or graph6 lines on
    /// stdin when none are given).
    Check {
        /// Formula text or `@path`.
        #[arg(long)]
        formula: String,
        graphs: Vec<String>,
    },
    /// Structural and definability measurements of one graph.
    Analyze(AnalyzeArgs),
    /// Seeded experiments and arithmetic tables.
    Experiment {
        #[command(subcommand)]
        experiment: ExperimentCommand,
    },
    /// Spectrum of a Bernays-Schönfinkel sentence.
    Spectrum {
        /// Formula text or `@path`.
        formula: String,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// Convert a graph between graph6 and edge-list text.
    Convert {
        #[arg(long, value_enum)]
        from: GraphFormat,
        #[arg(long, value_enum)]
        to: GraphFormat,
        /// Input text, `@path`, or stdin when omitted.
        input: Option<String>,
    },
    /// Run a registered scenario and assert its expectations.
    RunScenario(RunScenarioArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    /// K_{1,m}.
    Star {
        leaves: usize,
    },
    /// G(n, p); needs --seed.
    Gnp {
        n: usize,
        p: f64,
    },
    /// Uniform labelled tree via a random Prüfer sequence; needs --seed.
    Tree {
        n: usize,
    },
    Union {
        graphs: Vec<String>,
    },
    Complement {
        graph: String,
    },
    /// G plus one vertex per subset of V(G), adjacent to that subset.
    Pad {
        graph: String,
    },
    /// Complement of the disjoint union of pairwise non-isomorphic graphs.
    UniteConquer {
        graphs: Vec<String>,
    },
    /// A centre joined to every asymmetric rooted tree of height below k.
    AsymTree {
        k: usize,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Debug, Args)]
pub struct WlOptions {
    /// Dimension: colours are assigned to k-tuples.
    #[arg(short, long, default_value_t = 1)]
    pub k: usize,
    /// Aggregate neighbouring colours as sets instead of multisets (k ≥ 2).
    #[arg(long)]
    pub count_free: bool,
}

#[derive(Debug, Subcommand)]
pub enum WlCommand {
    /// Refine one graph, or two graphs jointly, reporting classes per round.
    Run {
        g: String,
        h: Option<String>,
        #[command(flatten)]
        options: WlOptions,
        /// Stop after this many rounds.
        #[arg(long)]
        rounds: Option<usize>,
    },
    /// The stabilisation round of one graph.
    Stab {
        g: String,
        #[command(flatten)]
        options: WlOptions,
    },
    /// Decide whether refinement tells two graphs apart.
    Verdict {
        g: String,
        h: String,
        #[command(flatten)]
        options: WlOptions,
    },
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// D(G,H): rounds Spoiler needs in the plain game.
    Depth { g: String, h: String },
    /// D^k(G,H): rounds Spoiler needs with k pebbles.
    Pebble {
        g: String,
        h: String,
        #[arg(long)]
        pebbles: usize,
    },
    /// W(G,H): pebbles Spoiler needs.
    Width { g: String, h: String },
    /// D_a(G,H): rounds with at most a changes of graph.
    Alt {
        g: String,
        h: String,
        #[arg(long)]
        alternations: u32,
    },
    /// Play a Spoiler strategy against every Duplicator.
    Play {
        g: String,
        h: String,
        #[arg(long, value_enum)]
        strategy: StrategyName,
        /// Initial pairs `u:v,...` (halving needs two).
        #[arg(long, default_value = "")]
        initial: String,
        #[arg(long, default_value_t = 16)]
        cap: u32,
        /// Comma-separated sieve for the sieve strategy; defaults to a
        /// computed weak sieve.
        #[arg(long)]
        sieve: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyName {
    Halving,
    Tree,
    Sieve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Naive,
    Halving,
    ThreeVar,
}

#[derive(Debug, Subcommand)]
pub enum DefineCommand {
    /// Sentence defining G from its adjacency matrix.
    Generic { graph: String },
    /// The depth-k Hintikka sentence of G.
    Hintikka {
        graph: String,
        #[arg(long)]
        rounds: usize,
    },
    /// dist(x, y) ≤ n.
    Delta {
        n: usize,
        #[arg(long, value_enum, default_value_t = Style::Halving)]
        style: Style,
    },
    /// Sentence defining the path on n vertices.
    Path {
        n: usize,
        #[arg(long, value_enum, default_value_t = Style::Halving)]
        style: Style,
    },
    /// The k-extension axiom.
    Extension { k: usize },
    /// Sentence defining the pad of the graph defined by a sentence.
    Padding {
        /// Formula text or `@path`.
        formula: String,
    },
    /// Measure a given formula.
    Measure { formula: String },
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub graph: String,
    /// Also maximise a pairwise metric over all graphs of the same order.
    #[arg(long, value_enum)]
    pub identification: Option<IdentificationMetric>,
    /// Dimension k for `--identification counting-depth`.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentificationMetric {
    Depth,
    Width,
    CountingDepth,
    CountingWidth,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Fraction of G(n, 1/2) samples satisfying a sentence; needs --seed.
    Probability {
        formula: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Depth bound check for G against G plus an isolated vertex.
    ComponentBound { graph: String },
    /// Tower and log* values.
    Towers,
    /// Degree-preserving 2-switch witness and its counting depth.
    TwoSwitch { graph: String },
    /// Iterated unite-and-conquer from the order-n graphs of diameter 2 and
    /// small identification depth; exits 1 if a checked pair breaks the
    /// depth bound.
    UniteChain {
        #[arg(long)]
        order: usize,
        /// Admit level-0 graphs up to this identification depth instead of
        /// the largest d with 2^d < n.
        #[arg(long)]
        max_depth: Option<u32>,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        /// Members kept per level (subsets in lexicographic order).
        #[arg(long, default_value_t = 20)]
        class_limit: usize,
        /// Member pairs per level checked with the game engine.
        #[arg(long, default_value_t = 6)]
        check_pairs: usize,
    },
    /// Random Bernays-Schönfinkel sentences with their spectra; needs --seed.
    BsSentences {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        existential: usize,
        #[arg(long, default_value_t = 2)]
        universal: usize,
        #[arg(long, default_value_t = 3)]
        clauses: usize,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
}

#[derive(Debug, Args)]
pub struct RunScenarioArgs {
    /// Scenario name.
    #[arg(required_unless_present_any = ["all", "list"])]
    pub name: Option<String>,
    /// Run every registered scenario.
    #[arg(long, conflicts_with = "name")]
    pub all: bool,
    /// List registered scenarios.
    #[arg(long, conflicts_with_all = ["name", "all"])]
    pub list: bool,
    /// Also write the JSON report(s) to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

//! Definability measurements built on the game solvers and WL: counting
//! depth and width, identification maxima, sieves, extension properties,
//! Bernays-Schönfinkel spectra and seeded random-graph experiments.

mod counting;
mod experiments;
mod extension;
mod sieve;
mod spectrum;

pub use counting::{
    cd_pair, cw_pair, identification, CountingWidth, Identification, Metric, CW_MAX_DIMENSION,
    IDENTIFICATION_GAME_ORDER,
};
pub use experiments::{
    component_count_bound_check, estimate_sentence_probability, log_star, tower, tower_table, ComponentBoundReport,
    TowerTable,
};
pub use extension::{extension_property, two_switch_witness};
pub use sieve::{
    is_weak_sieve, minimum_weak_sieve, sift, similarity_classes, strategy_sieve, weak_sieve, SieveReport,
    MIN_SIEVE_ORDER,
};
pub use spectrum::{
    bs_satisfiable, bs_spectrum, bs_witnesses, clone_twin, has_model_of_order, random_bs_sentence, BsSentence,
    SpectrumReport, SPECTRUM_ENUMERATION_ORDER, SPECTRUM_MAX_ORDER,
};

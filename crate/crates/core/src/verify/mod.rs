//! Executable checks of Betti-number bounds, extremal characterizations and
//! divisor classes, run one instance at a time or as reproducible suites
//! over a generated corpus.

mod checks;
mod divisor;
mod report;
mod suite;

pub use checks::{
    bound_check, broken_divisor_check, del_pezzo_strand, dichotomy_check, extremal_check,
    hilbert_consistency_check, inner_projection_check, known_table_check, koszul_vanishing_check,
    lefschetz_check, minimal_degree_strand, points_property_check, quadratic_bound, quadric_count_check,
};
pub use divisor::{divisor_class_check, genus_two_check, genus_two_host, infer_divisor_class};
pub use report::{CheckResult, Classification, VarietyReport};
pub use suite::{corpus, run_suite, CheckGroup, CorpusEntry, SuiteConfig, SuiteItem};

//! Verifiers for positivity, Hodge-index inequalities, log-concavity,
//! Pólya frequency combinations and Lorentzian polynomials.

pub mod inequalities;
pub mod lorentzian;
pub mod polya;
pub mod positivity;
pub mod sequences;
pub mod sturm;

pub use inequalities::{hodge_index_check, schur_hodge_improved_check, InequalityReport};
pub use lorentzian::{
    hessian_vs_intersection, hessian_matches_reversal, lorentzian_check, LorentzianMode, LorentzianReport,
};
pub use polya::{polya_check_minors, polya_check_roots, polya_combination_class};
pub use positivity::{fl_positivity, monomial_positivity};
pub use sequences::{is_log_concave, kt_sequence, Sequence};
pub use sturm::Univariate;

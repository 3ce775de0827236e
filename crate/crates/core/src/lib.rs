//! Generalised Petersen graphs `P(n, k)`: construction, closed-form and
//! numerically computed spectra, simultaneous Diophantine approximation
//! witnesses, the Cayley/isomorphism census and exact expanding constants.
//!
//! Every quantity that has a closed form is paired with an independent
//! brute-force route (dense Jacobi eigensolver, orbit enumeration, exhaustive
//! subset search) so the two can be checked against each other.

pub mod dirichlet;
pub mod error;
pub mod expansion;
pub mod format;
pub mod graph;
pub mod jacobi;
pub mod numbertheory;
pub mod spectrum;

pub use dirichlet::{
    dirichlet_witness, dirichlet_witnesses, good_index_cluster, good_index_gap, nearest_int_dist,
    DirichletWitness, GoodIndexSet,
};
pub use error::{Error, Result};
pub use expansion::{
    boundary_size, cheeger_bounds, corollary_bound, expanding_constant_exact, expansion_report,
    ExpansionReport, ExpansionResult, MAX_EXACT_VERTICES,
};
pub use graph::{build_graph, validate_params, GpParams, Graph};
pub use numbertheory::{
    brute_iso_classes_coprime, census, euler_phi, is_cayley, iso_class_count_coprime, kappa,
    omega, CensusRecord,
};
pub use spectrum::{
    closed_form_spectrum, count_near_valency, eig_pair, gap_bound, oracle_spectrum,
    second_eigenvalue, spectral_gap, CosTable, EigPair, Source, Spectrum,
};

/// Common valency of every `P(n, k)`.
pub const VALENCY: f64 = 3.0;

//! Higher-order Jacobian matrices of a polynomial, the ideal of their maximal
//! minors, the graded quotient algebra they cut out, and its graded
//! derivations, all computed exactly over the rationals.

pub mod derivations;
pub mod error;
pub mod groebner;
pub mod jacobian;
pub mod linalg;
pub mod multi_index;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod verify;
pub mod weights;

pub use derivations::{
    derivation_space, full_derivation_dims, negative_derivation_scan, DerivationSpaceReport, GradedDerivation,
};
pub use error::{Error, Result};
pub use groebner::{
    graded_dimensions, groebner_basis, ideal_contains, ideal_equal, quotient_basis, GradedDimensions, GradedQuotient,
    GroebnerBasis,
};
pub use jacobian::{build_jacobian, index_sets, maximal_minors, minor_degree_table, JacobianMatrix, MinorIdeal, Variant};
pub use multi_index::MultiIndex;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, ParseError};
pub use poly::{Polynomial, WeightedDegree};
pub use weights::WeightSystem;

/// Default cap on the number of column subsets enumerated for maximal minors.
pub const DEFAULT_MAX_MINORS: usize = 100_000;

/// Crate version embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

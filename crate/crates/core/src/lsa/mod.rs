//! Lie superalgebras: axioms, ideals, series, derivations, centroid and
//! standard constructions.

mod algebra;
mod constructions;
mod derivations;
mod io;

pub use algebra::{
    dense_from_sparse, koszul, sparse_from_dense, AxiomReport, BasisCoords, LieSuperalgebra, SparseVec, Violation,
};
pub use constructions::{describe, grassmann_extend, quotient};
pub use derivations::{centroid, derivations, differential_constants, inner_derivation_dim, super_bracket, EndSpace};
pub use io::{algebra_from_json, algebra_to_json, scalar_from_json};

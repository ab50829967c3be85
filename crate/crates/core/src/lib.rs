//! Linear codes over GF(q) with the maximum possible number of distinct
//! nonzero weights, q_k = (q^k - 1)/(q - 1).
//!
//! The crate provides exact finite-field arithmetic, the point/hyperplane
//! geometry of PG(k-1, q), two independent weight-distribution algorithms
//! (message enumeration and hyperplane characters), spectrum classification
//! with spread and parameter predicates, four explicit MWS constructions,
//! and seeded searches for MWS multisets.

pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod geometry;
pub mod io;
pub mod rng;
pub mod search;
pub mod spectrum;

pub use code::{weights_exhaustive, GeneratorMatrix, ProjectiveMultiset, WeightDistribution};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use geometry::{gaussian, ProjectiveSpace};
pub use spectrum::{classify, SpectrumReport};

//! Regular digraphs as rotation maps, zig-zag products, and spectral
//! expansion.
//!
//! The crate builds two-way-labelled regular digraphs (possibly with
//! multi-edges and self-loops), combines them with the generalized and
//! reduced zig-zag products and graph powering, and measures connectivity
//! through the spectral expansion — the second largest singular value of
//! the random-walk transition matrix. Closed-form bounds on the expansion
//! of the products come with a seeded experiment harness that checks them
//! over many random instances.
//!
//! The spectral layer is generic over the scalar type (see
//! [`scalar::Real`]); the aliases below fix `f64`, which all experiment
//! tolerances assume.

pub mod error;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod products;
pub mod randgen;
pub mod scalar;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
pub use graph::{EdgeMultiset, LabelledDigraph};
pub use randgen::SeededRng;
pub use scalar::Real;
pub use tolerance::Tolerances;

/// Doubly stochastic transition matrix over `f64`.
pub type TransitionMatrix = spectral::TransitionMatrixOf<f64>;
/// SVD factors over `f64`.
pub type SvdFactors = spectral::SvdFactorsOf<f64>;
/// Probability vector over `f64`.
pub type Distribution = spectral::DistributionOf<f64>;

//! Exact computations with Schur and derived Schur polynomials, Chern and
//! Schur classes of split bundles on products of projective spaces, and
//! verifiers for the Hodge-Riemann property, log-concavity, Pólya frequency
//! sequences and Lorentzian polynomials.
//!
//! Everything is computed over the rationals; no floating point is used.

pub mod analysis;
pub mod bundles;
pub mod cohomology;
pub mod error;
pub mod matrix;
pub mod partitions;
pub mod polyring;
pub mod quadforms;
pub mod random;
pub mod rational;
pub mod schur;
pub mod suite;

pub use bundles::SplitBundle;
pub use cohomology::{CohClass, Space};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use partitions::{ssyt_count, Partition};
pub use polyring::MultiPoly;
pub use quadforms::{inertia, intersection_form, InertiaTriple};
pub use rational::Rational;

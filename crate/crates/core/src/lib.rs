//! Exact commutative algebra for eigenschemes of rational matrices.
//!
//! The eigenscheme of a square matrix `A` is the subscheme of projective
//! space cut out by the 2×2 minors of `(Ax | x)`; its points are
//! projectivized eigenvectors and its non-reduced structure records
//! generalized eigenvectors. This crate builds that ideal exactly over the
//! rationals, produces closed-form reduced Gröbner bases and primary
//! decompositions for Jordan matrices, recovers Jordan block data from
//! Hilbert-function invariants of the components, and cross-checks
//! everything against a generic Buchberger engine and a classical exact
//! linear-algebra oracle.

pub mod decomposition;
pub mod eigen;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lambda;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ring;
pub mod unipoly;

pub use error::{Error, Result};
pub use ideal::{GroebnerBasis, Ideal};
pub use matrix::QMatrix;
pub use poly::Polynomial;
pub use rat::Rat;
pub use ring::{Monomial, MonomialOrder, Ring};

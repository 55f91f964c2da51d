//! Exact computations with split mixed Tate objects: Schur functors and
//! their vanishing, finite-dimensionality data, the λ-ring `K₀ ≅ ℤ[τ,τ⁻¹]`,
//! zeta functions, and the representation-ring-valued `λ_Σ`, with a
//! brute-force Young-symmetrizer oracle for cross-checking.
//!
//! ```
//! use mixed_tate::{motive::GradedTateObject, partition::Partition, schur};
//!
//! let x: GradedTateObject = "Q(0)[1] + Q(2)[2]".parse().unwrap();
//! let square: Partition = "[2,2]".parse().unwrap();
//! assert!(schur::schur_vanishes(&square, &x).unwrap());
//! assert!(schur::schur_apply(&square, &x).is_zero());
//! ```

pub mod cli;
pub mod error;
pub mod expr;
pub mod k0;
pub mod motive;
pub mod oracle;
pub mod partition;
pub mod rep_ring;
pub mod sampling;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use k0::{LaurentPolynomial, TruncatedSeries};
pub use motive::GradedTateObject;
pub use partition::Partition;
pub use rep_ring::RepRingElement;

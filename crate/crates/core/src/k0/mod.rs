//! `K₀ ≅ ℤ[τ, τ⁻¹]` with its λ-ring structure, zeta functions, and the
//! representation-ring-valued `λ_Σ`.

pub mod lambda;
pub mod laurent;
pub mod rational;
pub mod series;
pub mod sigma;
pub mod universal;

pub use lambda::{lambda_i, lambda_t, product_formula_check, schur_op, zeta, DEFAULT_ORDER};
pub use laurent::{augmentation, LaurentPolynomial};
pub use rational::{zeta_rational, RationalSeries};
pub use series::{render_t_polynomial, TruncatedSeries};
pub use sigma::{lambda_sigma, RepSeries};
pub use universal::verify_lambda_ring;

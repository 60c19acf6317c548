//! Exact and certified-numeric volume computations for the hyperbolic
//! orbifolds `H^n / Gamma_d^n`, where `Gamma_d^n` is the group of integral
//! units of the Lorentzian quadratic form
//!
//! ```text
//!     f_d^n = x_1^2 + ... + x_n^2 - d * x_{n+1}^2,   d odd and square-free.
//! ```
//!
//! The covolume comes out of the Siegel mass formula as an explicit product
//! of Bernoulli-number data, local factors at the primes dividing `2d`, and
//! (for odd `n`) a Dirichlet L-value at a quadratic character.  Everything
//! symbolic is exact: rationals are arbitrary precision, irrationalities are
//! tracked as formal `sqrt` / `pi` / `L(s,D)` factors, and numeric evaluation
//! carries proven error bounds.
//!
//! Independent cross-checks are first-class: brute-force counts of orthogonal
//! matrix groups over Z/q, Euler characteristics via finite-subgraph sums on
//! Coxeter diagrams, Lobachevsky-function evaluations, and Monte-Carlo volume
//! estimates of concrete Coxeter polytopes.

pub mod acceptance;
pub mod arith;
pub mod covolume;
pub mod coxeter;
pub mod dirichlet;
pub mod error;
pub mod lobachevsky;
pub mod local_density;
pub mod montecarlo;
pub mod numtheory;
pub mod polytope;
pub mod surd;

pub use arith::hpreal::HighPrecisionReal;
pub use arith::symbolic::SymbolicVolume;
pub use error::Error;
pub use numtheory::QFormSpec;
pub use surd::SurdScalar;

/// Rational numbers with arbitrary-precision numerator and denominator,
/// always stored reduced and with positive denominator.
pub type BigRational = num_rational::BigRational;
pub type BigInt = num_bigint::BigInt;
pub type BigUint = num_bigint::BigUint;

//! Exact combinatorics of `d`-cycles in symmetric groups, density recursions
//! for towers of fields with symmetric Galois groups, prime-splitting
//! experiments via distinct-degree factorization, and Hecke characteristic
//! polynomials of level-1 cusp forms.
//!
//! The crate is organised around five subsystems:
//!
//! * [`permcycles`] — census formulas for permutations containing `d`-cycles,
//!   an exhaustive enumeration oracle, and sign-split discrepancy bounds.
//! * [`sequences`] — the rational sequences `a(i)`, `b(i,j)`, alternating-series
//!   enclosures of `1 - exp(-1/d)`, and the inclusion-exclusion recursion
//!   `c_n = c_{n-1} + a_n - (1+delta_n) a_n c_{n-1}` with rigorous interval
//!   tracking of the `delta` uncertainty.
//! * [`density_model`] — towers of symmetric-group extensions built from the
//!   dimensions of level-1 cusp form spaces, with guaranteed rational lower
//!   bounds for the density of primes admitting a residue degree `d`.
//! * [`ffpoly`] — polynomial arithmetic over 64-bit prime fields,
//!   distinct-degree factorization, empirical Chebotarev scans, and
//!   symmetric-group certification from factorization patterns.
//! * [`hecke`] — the Victor Miller basis of `S_k(1)`, the matrix of the Hecke
//!   operator `T_2`, and its integer characteristic polynomial.
//!
//! All guaranteed quantities use exact arithmetic over arbitrary-precision
//! integers; floating-point values appear only as explicitly flagged mirrors.

pub mod density_model;
mod error;
pub mod ffpoly;
pub mod hecke;
pub mod permcycles;
pub mod rational;
pub mod sequences;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

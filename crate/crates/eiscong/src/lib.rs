//! Exact-arithmetic toolkit for Eisenstein congruences of newforms.
//!
//! The library constructs the Atkin-Lehner-twisted Eisenstein series
//! attached to a squarefree level and a system of signs, evaluates the
//! divisibility and admissibility criteria that govern when a newform
//! with reducible mod-l Galois representation exists at that level, and
//! verifies newform/Eisenstein congruences modulo degree-one prime
//! ideals up to the Sturm bound.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals,
//! reductions happen modulo explicitly given primes, and no floating
//! point enters any verdict (the one logarithmic bound is computed as a
//! rational interval with directed rounding).
//!
//! - [`arith`]: rationals, Bernoulli numbers, l-divisibility, Kummer
//!   congruences
//! - [`eisenstein`]: the twisted series, cusp constant terms, U_p action,
//!   mod-l reduction
//! - [`conditions`]: theorem hypotheses, admissibility tables, prime-pair
//!   density sets, degree bounds
//! - [`numberfield`]: degree-one prime ideals and coefficient reduction
//! - [`newform`]: fixture ingestion and (optional) remote database access
//! - [`verifier`]: Sturm-bound congruence verification and reports
//! - [`cli`]: the command-line front end

pub mod arith;
pub mod cli;
pub mod conditions;
pub mod eisenstein;
pub mod newform;
pub mod numberfield;
pub mod primes;
pub mod verifier;

pub use arith::{bernoulli, ell_divides, rational_residue, BigRat};
pub use eisenstein::{ALEigensystem, ModQExpansion, QExpansion};
pub use newform::NewformRecord;
pub use numberfield::{IntPolynomial, NFCoefficient, PrimeIdealRep};
pub use verifier::{sturm_bound, CongruenceReport, Verdict};

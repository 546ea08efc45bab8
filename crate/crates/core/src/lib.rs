//! Exact permanents and determinants of structured matrices.
//!
//! The crate is layered bottom-up:
//!
//! - [`ring`]: the [`Ring`](ring::Ring) contract, integers, rationals, residue
//!   rings, Laurent polynomials in `q`, and number-theoretic helpers.
//! - [`cyclotomic`]: exact arithmetic in `Q(zeta_m)`, Gauss sums, Galois action and
//!   a finite-field source of roots of unity.
//! - [`permanent`]: dense matrices over any ring, Gray-code Ryser permanents,
//!   a factorial-time oracle, division-free and field determinants.
//! - [`zoo`]: constructors for the structured matrix families.
//! - [`sequences`]: the named integer sequences (`T(n)`, `c_n`, `s_n`, `t_n`, ...)
//!   and the derangement / masked sums.
//! - [`verifier`]: a registry of executable checks producing [`Report`](verifier::Report)s.

pub mod cyclotomic;
pub mod error;
pub mod permanent;
pub mod ring;
pub mod sequences;
pub mod verifier;
pub mod zoo;

pub use error::{Error, Result};

//! Revenue of anonymous posted-price mechanisms versus Myerson-optimal
//! auctions for `n` i.i.d. bidders with λ-regular valuations.
//!
//! The crate is organised bottom-up:
//!
//! * [`special`]: harmonic numbers, log-gamma and the β/a coefficients.
//! * [`optimize`] and [`quadrature`]: golden-section search, bisection and
//!   adaptive Simpson integration shared by everything above them.
//! * [`objectives`]: the auxiliary objectives `g_n`, `g_{n,λ}`, `g_λ`,
//!   `H_{n,λ}` and their maximizers, plus the roots `η(λ)` and `λ*`.
//! * [`distributions`]: valuation distributions, order statistics, virtual
//!   valuations, regularity certificates and tail bounds.
//! * [`revenue`]: pricing revenue, monopoly reserve, optimal auction revenue.
//! * [`bounds`]: closed-form approximation-ratio bounds.
//! * [`figures`]: the tabulated bound curves and their CSV encoding.
//! * [`rng`] and [`simulation`]: seeded Monte Carlo cross-validation.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod distributions;
mod error;
pub mod figures;
pub mod objectives;
pub mod optimize;
pub mod quadrature;
pub mod revenue;
pub mod rng;
pub mod simulation;
pub mod special;

pub use error::{Error, Result};

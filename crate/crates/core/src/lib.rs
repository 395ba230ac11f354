//! Exact computation of Jack symmetric functions `J_λ(x; α)`, skew Jack
//! functions `J_{λ/μ}` and Stanley g-polynomials `g^λ_{μ,ν}(α)`, together
//! with exhaustive verification suites for the identities they satisfy and
//! bounded sweeps for the open conjectures about them.
//!
//! Everything is exact: coefficients live in `ℚ[α]` or `ℚ(α)` with
//! arbitrary-precision rationals. The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, skew shapes, tableau chains, configurations
//! - [`exactalg`]: polynomials and rational functions in `α`
//! - [`symfunc`]: symmetric functions in the monomial and power-sum bases
//! - [`jack`]: Jack expansions, hook products, g-polynomials, closed formulas
//! - [`verify`]: verification suites, conjecture sweeps, lowest-coefficient solver

pub mod error;
pub mod exactalg;
pub mod jack;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{AlphaPoly, AlphaRat, LinearFactorization, LinearProduct, Rational};
pub use jack::{
    g_poly, hook_products, jack_gs, jack_ks, leading_formula, lr_coeff, mixed_products,
    prv_formula, skew_def, skew_stanley, tilde_v, w_weight, HookData, JackExpansion, JackStore,
    Method, MixedHookData,
};
pub use partitions::{
    enumerate_partitions, Cell, Chain, CombineMode, Configuration, Partition, SkewShape,
};
pub use symfunc::{inner, m_mul, omega, transition, MultiPoly, SymFuncM, SymFuncP};
pub use verify::{Failure, Report};

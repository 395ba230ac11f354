//! Jack symmetric functions, skew Jack functions, hook products,
//! g-polynomials and the closed formulas relating them.

mod formulas;
mod gpoly;
mod gs;
mod hooks;
mod ks;
mod skew;
mod store;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::SkewShape;
use crate::symfunc::SymFuncM;

pub use formulas::{leading_formula, prv_formula, prv_nu, prv_sigmas, top_component_formula};
pub use gpoly::{g_poly, lr_coeff};
pub use gs::jack_gs;
pub use hooks::{hook_products, mixed_products, HookData, MixedHookData};
pub use ks::{jack_ks, Filling};
pub use skew::{skew_def, skew_stanley, tilde_v, w_weight};
pub use store::{JackStore, StoreStats, CACHE_FORMAT_VERSION};

pub(crate) use hooks::{c_factor, c_lp, c_prime_factor, c_prime_lp, j_lp, mixed_lp};
pub(crate) use skew::{skew_coefficient, w_weight_lp};

/// Which algorithm produced an expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Knop–Sahi admissible fillings.
    Ks,
    /// Orthogonalization against lower monomials.
    Gs,
    /// Stanley's tableau weights.
    Stanley,
    /// `Σ_ν g^λ_{μ,ν} j_ν⁻¹ J_ν`.
    Definition,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ks => "ks",
            Method::Gs => "gs",
            Method::Stanley => "stanley",
            Method::Definition => "definition",
        })
    }
}

/// An expansion `J_λ` or `J_{λ/μ}` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JackExpansion {
    pub shape: SkewShape,
    pub method: Method,
    pub expansion: SymFuncM,
}

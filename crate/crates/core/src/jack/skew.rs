//! Skew Jack functions: Stanley's tableau formula and the defining
//! expansion `J_{λ/μ} = Σ_ν g^λ_{μ,ν} j_ν⁻¹ J_ν`.

use std::collections::HashMap;

use super::hooks::{c_factor, c_prime_factor, j_lp};
use super::store::JackStore;
use super::{JackExpansion, Method};
use crate::error::{Error, Result};
use crate::exactalg::{biguint_to_rational, AlphaRat, LinearProduct};
use crate::partitions::{enumerate_partitions, for_each_strip, Chain, Partition, SkewShape};
use crate::symfunc::SymFuncM;

/// `∏_{s∈κ} B_{κ/π,s} / ∏_{s∈π} C_{κ/π,s}` for a horizontal strip `κ/π`.
pub(crate) fn step_ratio(prev: &Partition, next: &Partition) -> LinearProduct {
    let mut out = LinearProduct::one();
    let in_strip = |j: u32| next.col(j) > prev.col(j);
    for s in next.cells() {
        let (a, b) = if in_strip(s.col) {
            c_factor(next, s)
        } else {
            c_prime_factor(next, s)
        };
        out.mul_linear(a, b, 1);
    }
    for s in prev.cells() {
        let (a, b) = if in_strip(s.col) {
            c_factor(prev, s)
        } else {
            c_prime_factor(prev, s)
        };
        out.mul_linear(a, b, -1);
    }
    out
}

pub(crate) fn w_weight_lp(chain: &Chain) -> LinearProduct {
    let steps = chain.steps();
    let mut out = j_lp(&steps[0]);
    for w in steps.windows(2) {
        out.mul(&step_ratio(&w[0], &w[1]));
    }
    out
}

/// Stanley's weight `w_T` of the standard tableau given by `chain`.
pub fn w_weight(chain: &Chain) -> AlphaRat {
    w_weight_lp(chain).to_alpha_rat()
}

/// Sums of chain weights from a fixed inner shape, memoized on
/// `(current partition, remaining step sizes)`.
struct ChainSums<'a> {
    outer: &'a Partition,
    ratios: HashMap<(Partition, Partition), AlphaRat>,
    memo: HashMap<(Partition, Vec<u32>), AlphaRat>,
}

impl ChainSums<'_> {
    fn sum(&mut self, cur: &Partition, steps: &[u32]) -> AlphaRat {
        if steps.is_empty() {
            return if cur == self.outer {
                AlphaRat::one()
            } else {
                AlphaRat::zero()
            };
        }
        let key = (cur.clone(), steps.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut nexts = Vec::new();
        for_each_strip(cur, self.outer, steps[0], |k| nexts.push(k));
        let mut total = AlphaRat::zero();
        for next in nexts {
            let rest = self.sum(&next, &steps[1..]);
            if rest.is_zero() {
                continue;
            }
            let r = self
                .ratios
                .entry((cur.clone(), next.clone()))
                .or_insert_with(|| step_ratio(cur, &next).to_alpha_rat());
            total += &(&*r * &rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `J_{λ/μ}` by Stanley's formula `Σ_T w_T x^T`.
pub fn skew_stanley(shape: &SkewShape) -> JackExpansion {
    let n = shape.size();
    let mut sums = ChainSums {
        outer: shape.outer(),
        ratios: HashMap::new(),
        memo: HashMap::new(),
    };
    let j_mu = j_lp(shape.inner()).to_alpha_rat();
    let mut expansion = SymFuncM::zero(n);
    for nu in enumerate_partitions(n, None, None) {
        let s = sums.sum(shape.inner(), nu.parts());
        if !s.is_zero() {
            expansion.add_term(nu, &(&j_mu * &s));
        }
    }
    JackExpansion {
        shape: shape.clone(),
        method: Method::Stanley,
        expansion,
    }
}

/// The single coefficient `v_{λ/μ,ν}` by Stanley's formula.
pub(crate) fn skew_coefficient(shape: &SkewShape, nu: &Partition) -> AlphaRat {
    if nu.size() != shape.size() {
        return AlphaRat::zero();
    }
    let mut sums = ChainSums {
        outer: shape.outer(),
        ratios: HashMap::new(),
        memo: HashMap::new(),
    };
    let s = sums.sum(shape.inner(), nu.parts());
    &j_lp(shape.inner()).to_alpha_rat() * &s
}

/// `J_{λ/μ}` from the definition, through g-polynomials and norms.
pub fn skew_def(shape: &SkewShape) -> Result<JackExpansion> {
    let store = JackStore::global();
    let n = shape.size();
    let mut expansion = SymFuncM::zero(n);
    for nu in enumerate_partitions(n, None, None) {
        let g = store.g(shape.outer(), shape.inner(), &nu)?;
        if g.is_zero() {
            continue;
        }
        let coeff = AlphaRat::from(g).checked_div(&j_lp(&nu).to_alpha_rat())?;
        let j = store.jack(&nu);
        expansion = expansion.add(&j.scale(&coeff))?;
    }
    Ok(JackExpansion {
        shape: shape.clone(),
        method: Method::Definition,
        expansion,
    })
}

/// `ṽ_{λ/μ,ν} = v_{λ/μ,ν} / u_ν`.
pub fn tilde_v(shape: &SkewShape, nu: &Partition) -> Result<AlphaRat> {
    if nu.size() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            actual: nu.size(),
        });
    }
    let v = JackStore::global().skew(shape).coeff(nu);
    let u = biguint_to_rational(&nu.stats().u);
    Ok(v.scale(&num_traits::Inv::inv(u)))
}

//! Closed product formulas for leading coefficients and for special
//! g-polynomials.

use super::hooks::{c_factor, c_prime_factor};
use crate::error::{Error, Result};
use crate::exactalg::{AlphaPoly, LinearProduct};
use crate::partitions::{Partition, SkewShape};

fn times(out: &mut LinearProduct, (a, b): (i64, i64)) {
    out.mul_linear(a, b, 1);
}

fn leading_lp(shape: &SkewShape) -> LinearProduct {
    let (lambda, mu) = (shape.outer(), shape.inner());
    let f = shape.max_filling();
    let mut out = LinearProduct::one();
    for s in lambda.cells() {
        if f.r(s.row as usize) <= f.c(s.col) {
            times(&mut out, c_factor(lambda, s));
        } else {
            times(&mut out, c_prime_factor(lambda, s));
        }
    }
    for s in mu.cells() {
        let cj = f.c(s.col);
        if f.r(s.row as usize + cj as usize) > cj {
            times(&mut out, c_factor(mu, s));
        } else {
            times(&mut out, c_prime_factor(mu, s));
        }
    }
    out
}

fn into_poly(lp: &LinearProduct) -> AlphaPoly {
    lp.to_alpha_rat()
        .into_poly()
        .expect("product of linear factors")
}

/// The leading coefficient `v_{λ/μ,ν₀}` as a product over the boxes of `λ`
/// and `μ`, driven by the maximal filling.
pub fn leading_formula(shape: &SkewShape) -> AlphaPoly {
    into_poly(&leading_lp(shape))
}

/// `g^λ_{μ,ν₀}` for `ν₀` the weight of the maximal filling of `λ/μ`.
pub fn top_component_formula(shape: &SkewShape) -> (Partition, AlphaPoly) {
    let nu0 = shape.max_filling().weight;
    let mut lp = leading_lp(shape);
    for s in nu0.cells() {
        times(&mut lp, c_prime_factor(&nu0, s));
    }
    (nu0, into_poly(&lp))
}

/// The partition `ν` with `λ = μ + σ(ν)`, i.e. `ν_m = λ_{σ(m)} − μ_{σ(m)}`,
/// where `sigma` lists `σ(1), …, σ(ℓ(λ))`.
pub fn prv_nu(lambda: &Partition, mu: &Partition, sigma: &[usize]) -> Result<Partition> {
    let k = lambda.len();
    let mut seen = vec![false; k];
    if sigma.len() != k
        || sigma
            .iter()
            .any(|&i| i == 0 || i > k || std::mem::replace(&mut seen[i - 1], true))
    {
        return Err(Error::ShapeMismatch(format!(
            "{sigma:?} is not a permutation of the {k} rows of {lambda}"
        )));
    }
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let nu: Vec<u32> = sigma.iter().map(|&i| lambda.row(i) - mu.row(i)).collect();
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ShapeMismatch(format!(
            "{lambda} − {mu} read through {sigma:?} is not weakly decreasing"
        )));
    }
    Ok(Partition::from_unsorted(nu))
}

/// Every `σ` for which [`prv_nu`] succeeds.
pub fn prv_sigmas(lambda: &Partition, mu: &Partition) -> Vec<Vec<usize>> {
    if !lambda.contains(mu) {
        return Vec::new();
    }
    let k = lambda.len();
    let mut rows: Vec<usize> = (1..=k).collect();
    rows.sort_by_key(|&i| std::cmp::Reverse(lambda.row(i) - mu.row(i)));
    // group rows with equal differences; σ permutes freely inside a group
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &rows {
        let d = lambda.row(i) - mu.row(i);
        match groups.last_mut() {
            Some(g) if lambda.row(g[0]) - mu.row(g[0]) == d => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut out = vec![Vec::new()];
    for g in groups {
        let perms = permutations(&g);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p);
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Closed form for `g^λ_{μ,ν}` when `λ = μ + σ(ν)`.
pub fn prv_formula(lambda: &Partition, mu: &Partition, sigma: &[usize]) -> Result<AlphaPoly> {
    let nu = prv_nu(lambda, mu, sigma)?;
    // r_i = ν_{σ⁻¹(i)}
    let mut r = vec![0u32; lambda.len() + 1];
    for (m, &i) in sigma.iter().enumerate() {
        r[i] = nu.row(m + 1);
    }
    let c = |j: u32| -> i64 { j as i64 - mu.row(lambda.col(j)) as i64 };
    let mut out = LinearProduct::one();
    for s in lambda.cells() {
        let ri = r[s.row as usize] as i64;
        if c(s.col) <= ri {
            times(&mut out, c_prime_factor(lambda, s));
        } else {
            times(&mut out, c_factor(lambda, s));
        }
    }
    for s in mu.cells() {
        let ri = r[s.row as usize];
        if c(s.col + ri) > ri as i64 {
            times(&mut out, c_prime_factor(mu, s));
        } else {
            times(&mut out, c_factor(mu, s));
        }
    }
    for s in nu.cells() {
        times(&mut out, c_factor(&nu, s));
    }
    Ok(into_poly(&out))
}

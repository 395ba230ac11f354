//! Hook-type products: `c_λ`, `c'_λ`, `j_λ`, the mixed products
//! `c_{μ,λ}`, `c'_{λ,μ}` and the Knop–Sahi factors `d_{λ,s}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{AlphaPoly, LinearProduct};
use crate::partitions::{Cell, Partition};

/// `c_{λ,s} = aα + ℓ + 1` as the pair `(a, ℓ + 1)`.
pub(crate) fn c_factor(lambda: &Partition, s: Cell) -> (i64, i64) {
    let (a, l) = lambda.arm_leg(s).expect("box inside the shape");
    (a as i64, l as i64 + 1)
}

/// `c'_{λ,s} = (a + 1)α + ℓ` as the pair `(a + 1, ℓ)`.
pub(crate) fn c_prime_factor(lambda: &Partition, s: Cell) -> (i64, i64) {
    let (a, l) = lambda.arm_leg(s).expect("box inside the shape");
    (a as i64 + 1, l as i64)
}

/// `d_{λ,s} = (a + 1)α + ℓ + 1`.
pub(crate) fn d_factor(lambda: &Partition, s: Cell) -> (i64, i64) {
    let (a, l) = lambda.arm_leg(s).expect("box inside the shape");
    (a as i64 + 1, l as i64 + 1)
}

fn lin((a, b): (i64, i64)) -> AlphaPoly {
    AlphaPoly::linear(a, b)
}

/// Per-box hook factors of a partition and their products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookData {
    pub lambda: Partition,
    /// `(s, c_{λ,s}, c'_{λ,s})` in row-major order.
    pub boxes: Vec<(Cell, AlphaPoly, AlphaPoly)>,
    pub c: AlphaPoly,
    pub c_prime: AlphaPoly,
    pub j: AlphaPoly,
}

pub fn hook_products(lambda: &Partition) -> HookData {
    let mut c = AlphaPoly::one();
    let mut c_prime = AlphaPoly::one();
    let mut boxes = Vec::with_capacity(lambda.size());
    for s in lambda.cells() {
        let cs = lin(c_factor(lambda, s));
        let cps = lin(c_prime_factor(lambda, s));
        c = &c * &cs;
        c_prime = &c_prime * &cps;
        boxes.push((s, cs, cps));
    }
    let j = &c * &c_prime;
    HookData {
        lambda: lambda.clone(),
        boxes,
        c,
        c_prime,
        j,
    }
}

/// `c_λ` in factored form.
pub(crate) fn c_lp(lambda: &Partition) -> LinearProduct {
    let mut out = LinearProduct::one();
    for s in lambda.cells() {
        let (a, b) = c_factor(lambda, s);
        out.mul_linear(a, b, 1);
    }
    out
}

/// `c'_λ` in factored form.
pub(crate) fn c_prime_lp(lambda: &Partition) -> LinearProduct {
    let mut out = LinearProduct::one();
    for s in lambda.cells() {
        let (a, b) = c_prime_factor(lambda, s);
        out.mul_linear(a, b, 1);
    }
    out
}

/// `j_λ` in factored form.
pub(crate) fn j_lp(lambda: &Partition) -> LinearProduct {
    let mut out = c_lp(lambda);
    out.mul(&c_prime_lp(lambda));
    out
}

/// Per-box mixed factors over the boxes of `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedHookData {
    pub mu: Partition,
    pub lambda: Partition,
    /// `(s, c_{μ,λ,s}, c'_{λ,μ,s})` for `s ∈ μ`, row-major.
    pub boxes: Vec<(Cell, AlphaPoly, AlphaPoly)>,
    /// `c_{μ,λ}`.
    pub c: AlphaPoly,
    /// `c'_{λ,μ}`.
    pub c_prime: AlphaPoly,
}

pub(crate) fn mixed_factors(
    mu: &Partition,
    lambda: &Partition,
    s: Cell,
) -> ((i64, i64), (i64, i64)) {
    let (a_mu, l_mu) = mu.arm_leg(s).expect("box of μ");
    let (a_la, l_la) = lambda.arm_leg(s).expect("box of λ");
    (
        (a_mu as i64, l_la as i64 + 1),
        (a_la as i64 + 1, l_mu as i64),
    )
}

pub fn mixed_products(mu: &Partition, lambda: &Partition) -> Result<MixedHookData> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let mut c = AlphaPoly::one();
    let mut c_prime = AlphaPoly::one();
    let mut boxes = Vec::with_capacity(mu.size());
    for s in mu.cells() {
        let (x, y) = mixed_factors(mu, lambda, s);
        let (x, y) = (lin(x), lin(y));
        c = &c * &x;
        c_prime = &c_prime * &y;
        boxes.push((s, x, y));
    }
    Ok(MixedHookData {
        mu: mu.clone(),
        lambda: lambda.clone(),
        boxes,
        c,
        c_prime,
    })
}

/// `c_{μ,λ} · c'_{λ,μ}` in factored form; `μ ⊆ λ` is assumed.
pub(crate) fn mixed_lp(mu: &Partition, lambda: &Partition) -> LinearProduct {
    let mut out = LinearProduct::one();
    for s in mu.cells() {
        let ((a, b), (c, d)) = mixed_factors(mu, lambda, s);
        out.mul_linear(a, b, 1);
        out.mul_linear(c, d, 1);
    }
    out
}

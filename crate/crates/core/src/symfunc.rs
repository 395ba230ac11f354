//! Homogeneous symmetric functions over `ℚ(α)` in the monomial basis, the
//! power-sum transition, the α-deformed scalar product, the automorphism
//! `ω_θ` and evaluation on finite alphabets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{biguint_to_rational, AlphaPoly, AlphaRat, Rational};
use crate::partitions::{distinct_permutations, enumerate_partitions, Partition};

/// A homogeneous symmetric function `Σ f_λ m_λ` of fixed degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFuncM {
    degree: usize,
    coeffs: BTreeMap<Partition, AlphaRat>,
}

impl SymFuncM {
    pub fn zero(degree: usize) -> Self {
        SymFuncM {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `m_λ`.
    pub fn monomial(lambda: &Partition) -> Self {
        SymFuncM::term(lambda.clone(), AlphaRat::one())
    }

    pub fn term(lambda: Partition, c: AlphaRat) -> Self {
        let mut f = SymFuncM::zero(lambda.size());
        f.add_term(lambda, &c);
        f
    }

    /// The constant `c` (degree 0).
    pub fn constant(c: AlphaRat) -> Self {
        SymFuncM::term(Partition::empty(), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, AlphaRat)>>(
        degree: usize,
        terms: I,
    ) -> Result<Self> {
        let mut f = SymFuncM::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    actual: lambda.size(),
                });
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> AlphaRat {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(AlphaRat::zero)
    }

    /// Nonzero terms in reverse-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &AlphaRat)> {
        self.coeffs.iter().rev()
    }

    pub(crate) fn coeff_map(&self) -> &BTreeMap<Partition, AlphaRat> {
        &self.coeffs
    }

    /// Adds `c·m_λ`; `λ` must have size `degree`.
    pub fn add_term(&mut self, lambda: Partition, c: &AlphaRat) {
        debug_assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &AlphaRat) -> SymFuncM {
        if c.is_zero() {
            return SymFuncM::zero(self.degree);
        }
        SymFuncM {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &SymFuncM) -> Result<SymFuncM> {
        if self.is_zero() && self.degree != other.degree {
            return Ok(other.clone());
        }
        if other.is_zero() && self.degree != other.degree {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                actual: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFuncM) -> Result<SymFuncM> {
        self.add(&other.scale(&AlphaRat::int(-1)))
    }

    /// Coefficientwise `α ↦ 1/α`.
    pub fn invert_alpha(&self) -> SymFuncM {
        SymFuncM {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.invert_alpha()))
                .collect(),
        }
    }

    /// Coefficientwise evaluation at a rational `α`; `None` on a pole.
    pub fn eval_alpha(&self, a: &Rational) -> Option<BTreeMap<Partition, Rational>> {
        self.coeffs
            .iter()
            .map(|(k, v)| v.eval(a).map(|x| (k.clone(), x)))
            .filter(|r| r.as_ref().map_or(true, |(_, x)| !x.is_zero()))
            .collect()
    }

    /// The largest partition (lexicographically) with nonzero coefficient.
    pub fn leading_partition(&self) -> Option<&Partition> {
        self.coeffs.keys().next_back()
    }

    /// `true` if every coefficient is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(|c| c.is_polynomial())
    }
}

impl fmt::Display for SymFuncM {
    /// `(α+1)·m[2] + 2·m[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let simple = c.is_polynomial()
                && c.num().coeffs().iter().filter(|x| !x.is_zero()).count() == 1
                && !text.contains('(');
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if k > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
            let mono = format!("m[{}]", parts.join(","));
            if simple && body == "1" {
                f.write_str(&mono)?;
            } else if simple {
                write!(f, "{body}·{mono}")?;
            } else {
                write!(f, "({body})·{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFuncM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFuncM[{}]({self})", self.degree)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: AlphaRat,
}

#[derive(Serialize, Deserialize)]
struct SymJson {
    basis: String,
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFuncM {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymJson {
            basis: "m".into(),
            degree: self.degree,
            terms: self
                .terms()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFuncM {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymJson::deserialize(d)?;
        if raw.basis != "m" {
            return Err(D::Error::custom(format!(
                "unsupported basis {:?}",
                raw.basis
            )));
        }
        SymFuncM::from_terms(
            raw.degree,
            raw.terms.into_iter().map(|t| (t.partition, t.coeff)),
        )
        .map_err(D::Error::custom)
    }
}

/// A homogeneous symmetric function in the power-sum basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFuncP {
    degree: usize,
    coeffs: BTreeMap<Partition, AlphaRat>,
}

impl SymFuncP {
    pub fn zero(degree: usize) -> Self {
        SymFuncP {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `p_λ`.
    pub fn power_sum(lambda: &Partition) -> Self {
        let mut f = SymFuncP::zero(lambda.size());
        f.coeffs.insert(lambda.clone(), AlphaRat::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> AlphaRat {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(AlphaRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &AlphaRat)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: &AlphaRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// Product via `p_σ p_τ = p_{σ∪τ}`.
    pub fn mul(&self, other: &SymFuncP) -> SymFuncP {
        let mut out = SymFuncP::zero(self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(
                    a.combine(b, crate::partitions::CombineMode::Union),
                    &(x * y),
                );
            }
        }
        out
    }

    pub fn scale(&self, c: &AlphaRat) -> SymFuncP {
        let mut out = SymFuncP::zero(self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn to_m(&self) -> SymFuncM {
        let table = transition(self.degree);
        let mut out = SymFuncM::zero(self.degree);
        for (lambda, c) in &self.coeffs {
            for (mu, x) in table.p_in_m(lambda) {
                out.add_term(mu.clone(), &c.scale(x));
            }
        }
        out
    }

    /// `ω_θ`: multiplies the coefficient of `p_λ` by `θ^{ℓ(λ)}`.
    pub fn omega(&self, theta: &AlphaRat) -> SymFuncP {
        let mut out = SymFuncP::zero(self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), &(v * &theta.pow(k.len() as u32)));
        }
        out
    }

    /// `Σ f_λ g_λ z_λ α^{ℓ(λ)}`.
    pub fn inner(&self, other: &SymFuncP) -> AlphaRat {
        if self.degree != other.degree {
            return AlphaRat::zero();
        }
        let (small, large) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = AlphaRat::zero();
        for (lambda, a) in &small.coeffs {
            if let Some(b) = large.coeffs.get(lambda) {
                let weight = AlphaRat::from(AlphaPoly::monomial(z_rational(lambda), lambda.len()));
                acc += &(&(a * b) * &weight);
            }
        }
        acc
    }
}

fn z_rational(lambda: &Partition) -> Rational {
    biguint_to_rational(&lambda.stats().z)
}

/// The change of basis between `{p_λ}` and `{m_λ}` in one degree; entries
/// are rational and independent of `α`.
#[derive(Debug)]
pub struct TransitionTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    p_in_m: Vec<Vec<(Partition, Rational)>>,
    m_in_p: Vec<Vec<(Partition, Rational)>>,
}

impl TransitionTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree, reverse-lexicographic.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Nonzero entries of `p_λ` in the `m` basis.
    pub fn p_in_m(&self, lambda: &Partition) -> &[(Partition, Rational)] {
        &self.p_in_m[self.index[lambda]]
    }

    /// Nonzero entries of `m_λ` in the `p` basis.
    pub fn m_in_p(&self, lambda: &Partition) -> &[(Partition, Rational)] {
        &self.m_in_p[self.index[lambda]]
    }

    fn build(n: usize) -> TransitionTable {
        let partitions = enumerate_partitions(n, None, None);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let size = partitions.len();
        // p_λ = ∏ m_(λ_i)
        let mut dense = vec![vec![Rational::zero(); size]; size];
        for (i, lambda) in partitions.iter().enumerate() {
            let mut prod = SymFuncM::constant(AlphaRat::one());
            for &part in lambda.parts() {
                prod = m_mul(
                    &prod,
                    &SymFuncM::monomial(&Partition::new(vec![part]).unwrap()),
                );
            }
            for (mu, c) in prod.coeff_map() {
                dense[i][index[mu]] = c.num().coeff(0);
            }
        }
        let inverse = invert_dense(&dense);
        let sparse = |m: &Vec<Vec<Rational>>| -> Vec<Vec<(Partition, Rational)>> {
            m.iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (partitions[j].clone(), x.clone()))
                        .collect()
                })
                .collect()
        };
        TransitionTable {
            degree: n,
            p_in_m: sparse(&dense),
            m_in_p: sparse(&inverse),
            partitions: partitions.clone(),
            index,
        }
    }
}

fn invert_dense(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("power sums form a basis");
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &factor * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// The transition table for degree `n`, computed once per process.
pub fn transition(n: usize) -> Arc<TransitionTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<TransitionTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(TransitionTable::build(n));
    tables.write().unwrap().entry(n).or_insert(built).clone()
}

/// Integer structure constants of `m_μ m_ν`, memoized.
fn m_product_constants(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    type Memo = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(v) = memo.read().unwrap().get(&key) {
        return v.clone();
    }
    let computed = Arc::new(compute_m_product(&key.0, &key.1));
    memo.write().unwrap().entry(key).or_insert(computed).clone()
}

/// The coefficient of `m_λ` in `m_μ m_ν` is the number of ways to write
/// the exponent vector `λ` as `a + b` with `a` a rearrangement of `μ` and
/// `b` one of `ν` (both padded with zeros).
fn compute_m_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, u64)> {
    let len = mu.len() + nu.len();
    let mut a = mu.parts().to_vec();
    a.resize(len, 0);
    let mut b = nu.parts().to_vec();
    b.resize(len, 0);
    let mut candidates: BTreeMap<Partition, ()> = BTreeMap::new();
    for perm in distinct_permutations(&b) {
        let sum: Vec<u32> = a.iter().zip(&perm).map(|(x, y)| x + y).collect();
        candidates.insert(Partition::from_unsorted(sum), ());
    }
    let mut out = Vec::new();
    for lambda in candidates.into_keys() {
        let count = count_decompositions(lambda.parts(), mu.parts(), nu);
        if count > 0 {
            out.push((lambda, count));
        }
    }
    out
}

fn count_decompositions(lambda: &[u32], mu: &[u32], nu: &Partition) -> u64 {
    // distinct placements of μ's parts (plus zeros) on λ's rows
    let mut a = mu.to_vec();
    if a.len() > lambda.len() {
        return 0;
    }
    a.resize(lambda.len(), 0);
    let mut count = 0;
    for perm in distinct_permutations(&a) {
        if perm.iter().zip(lambda).any(|(x, y)| x > y) {
            continue;
        }
        let rest = Partition::from_unsorted(lambda.iter().zip(&perm).map(|(y, x)| y - x).collect());
        if &rest == nu {
            count += 1;
        }
    }
    count
}

/// Product in the monomial basis.
pub fn m_mul(f: &SymFuncM, g: &SymFuncM) -> SymFuncM {
    let mut out = SymFuncM::zero(f.degree + g.degree);
    for (mu, x) in &f.coeffs {
        for (nu, y) in &g.coeffs {
            let xy = x * y;
            for (lambda, c) in m_product_constants(mu, nu).iter() {
                out.add_term(
                    lambda.clone(),
                    &xy.scale(&Rational::from_integer((*c).into())),
                );
            }
        }
    }
    out
}

impl SymFuncM {
    pub fn to_p(&self) -> SymFuncP {
        let table = transition(self.degree);
        let mut out = SymFuncP::zero(self.degree);
        for (mu, c) in &self.coeffs {
            for (lambda, x) in table.m_in_p(mu) {
                out.add_term(lambda.clone(), &c.scale(x));
            }
        }
        out
    }
}

/// The α-deformed scalar product `⟨p_λ, p_μ⟩ = δ z_λ α^{ℓ(λ)}`; zero across
/// different degrees.
pub fn inner(f: &SymFuncM, g: &SymFuncM) -> AlphaRat {
    if f.degree != g.degree {
        return AlphaRat::zero();
    }
    f.to_p().inner(&g.to_p())
}

/// `ω_θ` on the monomial basis.
pub fn omega(f: &SymFuncM, theta: &AlphaRat) -> SymFuncM {
    f.to_p().omega(theta).to_m()
}

/// A polynomial in finitely many variables with `ℚ(α)` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, AlphaRat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: AlphaRat) -> Self {
        let mut out = MultiPoly::zero(nvars);
        out.add_term(vec![0; nvars], &c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, AlphaRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &AlphaRat) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &AlphaRat) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &(x * c));
        }
        out
    }

    /// Re-reads the variables as `total` variables, the old ones occupying
    /// positions `offset..offset + nvars`.
    pub fn embed(&self, offset: usize, total: usize) -> MultiPoly {
        assert!(offset + self.nvars <= total);
        let mut out = MultiPoly::zero(total);
        for (e, c) in &self.terms {
            let mut v = vec![0; total];
            v[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(v, c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl SymFuncM {
    /// `f(x_1, …, x_nvars)`.
    pub fn eval_finite(&self, nvars: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (lambda, c) in &self.coeffs {
            if lambda.len() > nvars {
                continue;
            }
            let mut exps = lambda.parts().to_vec();
            exps.resize(nvars, 0);
            for perm in distinct_permutations(&exps) {
                out.add_term(perm, c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn m(s: &str) -> SymFuncM {
        SymFuncM::monomial(&p(s))
    }

    fn sum(terms: &[(&str, i64)]) -> SymFuncM {
        let deg = p(terms[0].0).size();
        SymFuncM::from_terms(deg, terms.iter().map(|(s, c)| (p(s), AlphaRat::int(*c)))).unwrap()
    }

    #[test]
    fn m_mul_examples() {
        assert_eq!(m_mul(&m("1"), &m("1")), sum(&[("2", 1), ("1,1", 2)]));
        assert_eq!(m_mul(&m("2"), &SymFuncM::constant(AlphaRat::one())), m("2"));
        assert_eq!(m_mul(&m("1"), &m("2")), sum(&[("3", 1), ("2,1", 1)]));
        // cross-check through three variables
        let prod = m_mul(&m("1"), &m("2"));
        assert_eq!(
            prod.eval_finite(3),
            m("1").eval_finite(3).mul(&m("2").eval_finite(3))
        );
    }

    #[test]
    fn transition_examples() {
        let t1 = transition(1);
        assert_eq!(t1.p_in_m(&p("1")), &[(p("1"), rat(1))]);
        let t2 = transition(2);
        assert_eq!(t2.p_in_m(&p("2")), &[(p("2"), rat(1))]);
        let mut row = t2.p_in_m(&p("1,1")).to_vec();
        row.sort();
        assert_eq!(row, vec![(p("1,1"), rat(2)), (p("2"), rat(1))]);
        assert_eq!(transition(0).partitions(), &[Partition::empty()]);
    }

    #[test]
    fn transition_matrices_are_inverse() {
        for n in 0..=8 {
            let t = transition(n);
            for lambda in t.partitions() {
                // m_λ → p → m must return m_λ
                let mut back: BTreeMap<Partition, Rational> = BTreeMap::new();
                for (mu, x) in t.m_in_p(lambda) {
                    for (nu, y) in t.p_in_m(mu) {
                        *back.entry(nu.clone()).or_insert_with(Rational::zero) += x * y;
                    }
                }
                back.retain(|_, v| !v.is_zero());
                assert_eq!(
                    back,
                    BTreeMap::from([(lambda.clone(), rat(1))]),
                    "n={n} λ={lambda}"
                );
            }
        }
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(&m("1"), &m("1")), AlphaRat::alpha());
        assert_eq!(inner(&m("1,1"), &m("2")), -AlphaRat::alpha());
        assert_eq!(inner(&m("1"), &m("2")), AlphaRat::zero());
    }

    #[test]
    fn power_sums_are_orthogonal() {
        for n in 0..=7 {
            let parts = enumerate_partitions(n, None, None);
            for a in &parts {
                for b in &parts {
                    let v = SymFuncP::power_sum(a).inner(&SymFuncP::power_sum(b));
                    if a == b {
                        let expected = AlphaRat::from(AlphaPoly::monomial(z_rational(a), a.len()));
                        assert_eq!(v, expected);
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn hall_product_at_one_pairs_m_with_h() {
        // h_n is the sum of all m_λ of degree n; ⟨m_λ, h_μ⟩ = δ at α = 1
        let h = |n: usize| {
            SymFuncM::from_terms(
                n,
                enumerate_partitions(n, None, None)
                    .into_iter()
                    .map(|l| (l, AlphaRat::one())),
            )
            .unwrap()
        };
        for n in 0..=5 {
            for mu in enumerate_partitions(n, None, None) {
                let mut h_mu = SymFuncM::constant(AlphaRat::one());
                for &part in mu.parts() {
                    h_mu = m_mul(&h_mu, &h(part as usize));
                }
                for lambda in enumerate_partitions(n, None, None) {
                    let v = inner(&SymFuncM::monomial(&lambda), &h_mu)
                        .eval(&rat(1))
                        .unwrap();
                    assert_eq!(
                        v,
                        rat(if lambda == mu { 1 } else { 0 }),
                        "λ={lambda} μ={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let theta = AlphaRat::new(AlphaPoly::int(-1), AlphaPoly::alpha()).unwrap();
        let expected = SymFuncM::term(p("1"), theta.clone());
        assert_eq!(omega(&m("1"), &theta), expected);
        let f = sum(&[("2", 3), ("1,1", -1)]);
        assert_eq!(omega(&f, &AlphaRat::one()), f);
        let back = omega(&omega(&f, &theta), &theta.inv().unwrap());
        assert_eq!(back, f);
        // ω_{-1} swaps e_2 = m_11 and h_2 = m_2 + m_11 up to sign conventions
        assert_eq!(
            omega(&m("1,1"), &AlphaRat::int(-1)),
            sum(&[("2", 1), ("1,1", 1)])
        );
    }

    #[test]
    fn eval_finite_examples() {
        let two = m("1,1").eval_finite(2);
        let mut expected = MultiPoly::zero(2);
        expected.add_term(vec![1, 1], &AlphaRat::one());
        assert_eq!(two, expected);
        let mut expected = MultiPoly::zero(2);
        expected.add_term(vec![2, 1], &AlphaRat::one());
        expected.add_term(vec![1, 2], &AlphaRat::one());
        assert_eq!(m("2,1").eval_finite(2), expected);
        assert!(m("1,1,1").eval_finite(2).is_zero());
    }

    #[test]
    fn display_and_json() {
        let f = SymFuncM::from_terms(
            2,
            [
                (p("2"), AlphaRat::from(AlphaPoly::linear(1, 1))),
                (p("1,1"), AlphaRat::int(2)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "(α+1)·m[2] + 2·m[1,1]");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"m","degree":2,"terms":[{"partition":[2],"coeff":{"den":1,"coeffs":[1,1]}},{"partition":[1,1],"coeff":{"den":1,"coeffs":[2]}}]}"#
        );
        assert_eq!(serde_json::from_str::<SymFuncM>(&json).unwrap(), f);
        assert_eq!(m("1").to_string(), "m[1]");
        assert_eq!(sum(&[("2", -1), ("1,1", 1)]).to_string(), "-m[2] + m[1,1]");
        let bad = r#"{"basis":"m","degree":2,"terms":[{"partition":[1],"coeff":{"den":1,"coeffs":[2]}}]}"#;
        assert!(serde_json::from_str::<SymFuncM>(bad).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn symfunc(max_deg: usize) -> impl Strategy<Value = SymFuncM> {
            (0..=max_deg).prop_flat_map(|n| {
                let parts = enumerate_partitions(n, None, None);
                let k = parts.len();
                prop::collection::vec((-3i64..=3, 0i64..=2), k).prop_map(move |cs| {
                    SymFuncM::from_terms(
                        n,
                        parts
                            .iter()
                            .cloned()
                            .zip(cs)
                            .map(|(l, (a, b))| (l, AlphaRat::from(AlphaPoly::linear(b, a)))),
                    )
                    .unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn m_mul_commutative_associative(f in symfunc(3), g in symfunc(3), h in symfunc(2)) {
                prop_assert_eq!(m_mul(&f, &g), m_mul(&g, &f));
                prop_assert_eq!(m_mul(&m_mul(&f, &g), &h), m_mul(&f, &m_mul(&g, &h)));
            }

            #[test]
            fn eval_finite_is_multiplicative(f in symfunc(3), g in symfunc(3), nvars in 1usize..=4) {
                let lhs = m_mul(&f, &g).eval_finite(nvars);
                let rhs = f.eval_finite(nvars).mul(&g.eval_finite(nvars));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn inner_bilinear_symmetric(f in symfunc(4), g in symfunc(4), h in symfunc(4)) {
                prop_assert_eq!(inner(&f, &g), inner(&g, &f));
                if f.degree() == g.degree() && g.degree() == h.degree() {
                    let gh = g.add(&h).unwrap();
                    prop_assert_eq!(inner(&f, &gh), &inner(&f, &g) + &inner(&f, &h));
                }
            }
        }
    }
}

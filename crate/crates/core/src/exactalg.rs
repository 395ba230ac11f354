//! Exact arithmetic in `ℚ[α]` and `ℚ(α)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in `α` with rational coefficients; `coeffs[k]` multiplies
/// `α^k` and there is never a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rational>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        AlphaPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        AlphaPoly::new(vec![c])
    }

    pub fn int(c: i64) -> Self {
        AlphaPoly::constant(rat(c))
    }

    pub fn alpha() -> Self {
        AlphaPoly::monomial(Rational::one(), 1)
    }

    /// `c·α^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        AlphaPoly { coeffs }
    }

    /// `aα + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        AlphaPoly::new(vec![rat(b), rat(a)])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> AlphaPoly {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `α^k`.
    pub fn shift(&self, k: usize) -> AlphaPoly {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        AlphaPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> AlphaPoly {
        let mut out = AlphaPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &AlphaPoly) -> Result<(AlphaPoly, AlphaPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(nd) = self.degree() else {
            return Ok((AlphaPoly::zero(), AlphaPoly::zero()));
        };
        if nd < dd {
            return Ok((AlphaPoly::zero(), self.clone()));
        }
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((AlphaPoly::new(quot), AlphaPoly::new(rem)))
    }

    pub fn div_exact(&self, d: &AlphaPoly) -> Result<AlphaPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Integer content and primitive part: `self = content·primitive`, where
    /// the primitive part has coprime integer coefficients and a positive
    /// leading coefficient. The zero polynomial gives `(0, [])`.
    pub fn content_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> AlphaPoly {
        AlphaPoly::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn primitive(&self) -> AlphaPoly {
        AlphaPoly::from_bigints(&self.content_primitive().1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // primitive remainder sequence over ℤ
        let mut a = self.content_primitive().1;
        let mut b = other.content_primitive().1;
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_int(r);
        }
        AlphaPoly::from_bigints(&a).monic()
    }

    pub fn monic(&self) -> AlphaPoly {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// `true` iff every coefficient is a nonnegative integer.
    pub fn nonneg_int_test(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `(q, shift)` with `p(1/α) = q(α)·α^(−shift)` and `q(0) ≠ 0`.
    pub fn invert_alpha(&self) -> (AlphaPoly, usize) {
        match self.degree() {
            None => (AlphaPoly::zero(), 0),
            Some(d) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                (AlphaPoly::new(coeffs), d)
            }
        }
    }

    /// Order of vanishing at `α = 0`.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Splits `self` into a constant times a product of linear factors
    /// `aα + b` with `a > 0`, `gcd(a, b) = 1`. `Ok(None)` when a factor of
    /// degree ≥ 2 without rational roots remains.
    pub fn linear_factorize(&self) -> Result<Option<LinearFactorization>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (content, mut prim) = self.content_primitive();
        let mut found: BTreeMap<(i64, i64), u32> = BTreeMap::new();
        let val = prim.iter().take_while(|c| c.is_zero()).count();
        if val > 0 {
            found.insert((1, 0), val as u32);
            prim.drain(..val);
        }
        if prim.len() > 1 {
            let leads = divisors(&prim.last().unwrap().magnitude().clone());
            let consts = divisors(&prim[0].magnitude().clone());
            let mut candidates: Vec<(BigInt, BigInt)> = Vec::new();
            for a in &leads {
                for b in &consts {
                    if a.gcd(b).is_one() {
                        let a = BigInt::from(a.clone());
                        let b = BigInt::from(b.clone());
                        candidates.push((a.clone(), b.clone()));
                        candidates.push((a, -b));
                    }
                }
            }
            // small |b|/a first
            candidates.sort_by(|x, y| {
                (x.1.abs() * &y.0)
                    .cmp(&(y.1.abs() * &x.0))
                    .then_with(|| y.1.cmp(&x.1))
            });
            for (a, b) in candidates {
                while prim.len() > 1 {
                    match divide_linear(&prim, &a, &b) {
                        Some(q) => {
                            let key = (
                                a.to_i64()
                                    .ok_or_else(|| Error::Parse("factor too large".into()))?,
                                b.to_i64()
                                    .ok_or_else(|| Error::Parse("factor too large".into()))?,
                            );
                            *found.entry(key).or_default() += 1;
                            prim = q;
                        }
                        None => break,
                    }
                }
                if prim.len() <= 1 {
                    break;
                }
            }
        }
        if prim.len() > 1 {
            return Ok(None);
        }
        let unit = content * Rational::from_integer(prim[0].clone());
        let out = LinearFactorization {
            unit,
            factors: found.into_iter().map(|((a, b), m)| (a, b, m)).collect(),
        };
        if out.expand() != *self {
            return Err(Error::Integrality(format!(
                "factorization of {self} does not re-expand"
            )));
        }
        Ok(Some(out))
    }
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &lr * c;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.is_empty() {
        return v;
    }
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in v.iter_mut() {
        *c /= &g;
    }
    v
}

/// Quotient of `p` by `aα + b` over ℤ, if exact.
fn divide_linear(p: &[BigInt], a: &BigInt, b: &BigInt) -> Option<Vec<BigInt>> {
    let n = p.len() - 1;
    if !(&p[n] % a).is_zero() || (!b.is_zero() && !(&p[0] % b.abs()).is_zero()) {
        return None;
    }
    // synthetic division from the top
    let mut q = vec![BigInt::zero(); n];
    let mut carry = p[n].clone();
    for k in (0..n).rev() {
        let (qk, r) = carry.div_rem(a);
        if !r.is_zero() {
            return None;
        }
        carry = &p[k] - &qk * b;
        q[k] = qk;
    }
    if carry.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// Positive divisors of `n` (of 1 when `n = 0`, which only happens for
/// constant terms that were already stripped).
fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return vec![BigUint::one()];
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n.clone()) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factorize(mut n: BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut d = 2u64;
    while d < 10_000 {
        let bd = BigUint::from(d);
        if &bd * &bd > n {
            break;
        }
        while (&n % &bd).is_zero() {
            n /= &bd;
            *out.entry(bd.clone()).or_default() += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                *out.entry(m).or_default() += 1;
            } else {
                let f = pollard_rho(&m);
                stack.push(&m / &f);
                stack.push(f);
            }
        }
    }
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigUint::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    if (n % 2u32).is_zero() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::new(coeffs)
    }
}

forward_binop!(AlphaPoly, Add, add);
forward_binop!(AlphaPoly, Sub, sub);
forward_binop!(AlphaPoly, Mul, mul);

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -self.clone()
    }
}

impl AddAssign<&AlphaPoly> for AlphaPoly {
    fn add_assign(&mut self, rhs: &AlphaPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&AlphaPoly> for AlphaPoly {
    fn sub_assign(&mut self, rhs: &AlphaPoly) {
        *self += &-rhs;
    }
}

impl MulAssign<&AlphaPoly> for AlphaPoly {
    fn mul_assign(&mut self, rhs: &AlphaPoly) {
        *self = &*self * rhs;
    }
}

impl From<i64> for AlphaPoly {
    fn from(c: i64) -> Self {
        AlphaPoly::int(c)
    }
}

impl From<Rational> for AlphaPoly {
    fn from(c: Rational) -> Self {
        AlphaPoly::constant(c)
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for AlphaPoly {
    /// Highest degree first, e.g. `2α²+2α`, `α-1`, `(1/2)α`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            let coeff = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&coeff)?;
                    }
                    f.write_str("α")?;
                    if k > 1 {
                        f.write_str(&superscript(k))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

impl FromStr for AlphaPoly {
    type Err = Error;

    /// Sums of terms `c`, `cα`, `cα^k` or `cα²`; `a` may stand for `α`,
    /// coefficients may be fractions (optionally parenthesised) and may be
    /// joined to `α` with `*` or `·`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut depth = 0;
        for ch in text.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && !cur.is_empty() && !cur.ends_with(['^']) => {
                    terms.push(std::mem::take(&mut cur));
                }
                _ => {}
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = AlphaPoly::zero();
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let var_pos = body.find(['α', 'a']);
            let (coeff_txt, var_txt) = match var_pos {
                Some(p) => (&body[..p], Some(&body[p..])),
                None => (body, None),
            };
            let coeff_txt = coeff_txt.trim_end_matches(['*', '·']);
            let coeff_txt = coeff_txt
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coeff_txt);
            let coeff = if coeff_txt.is_empty() {
                if var_txt.is_none() {
                    return Err(bad());
                }
                Rational::one()
            } else {
                parse_rational(coeff_txt).ok_or_else(bad)?
            };
            let exp = match var_txt {
                None => 0,
                Some(v) => {
                    let rest = v.trim_start_matches(['α', 'a']);
                    if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<usize>().map_err(|_| bad())?
                    } else {
                        let digits: String = rest
                            .chars()
                            .map(|c| {
                                "⁰¹²³⁴⁵⁶⁷⁸⁹"
                                    .chars()
                                    .position(|d| d == c)
                                    .map(|d| char::from(b'0' + d as u8))
                            })
                            .collect::<Option<String>>()
                            .ok_or_else(bad)?;
                        digits.parse::<usize>().map_err(|_| bad())?
                    }
                }
            };
            out += &AlphaPoly::monomial(coeff * rat(sign), exp);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

fn big_to_number(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_string_unchecked(n.to_string())
}

fn number_to_big<E: serde::de::Error>(n: &serde_json::Number) -> std::result::Result<BigInt, E> {
    n.as_str()
        .parse::<BigInt>()
        .map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    den: serde_json::Number,
    coeffs: Vec<serde_json::Number>,
}

impl AlphaPoly {
    /// Common denominator and integer numerators.
    pub fn to_den_coeffs(&self) -> (BigInt, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, coeffs)
    }
}

impl Serialize for AlphaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (den, coeffs) = self.to_den_coeffs();
        PolyJson {
            den: big_to_number(&den),
            coeffs: coeffs.iter().map(big_to_number).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        poly_from_json::<D::Error>(&raw)
    }
}

fn poly_from_json<E: serde::de::Error>(raw: &PolyJson) -> std::result::Result<AlphaPoly, E> {
    let den = number_to_big::<E>(&raw.den)?;
    if !den.is_positive() {
        return Err(E::custom("polynomial denominator must be positive"));
    }
    let coeffs = raw
        .coeffs
        .iter()
        .map(|c| Ok(Rational::new(number_to_big::<E>(c)?, den.clone())))
        .collect::<std::result::Result<Vec<_>, E>>()?;
    Ok(AlphaPoly::new(coeffs))
}

/// A reduced fraction of polynomials in `α`: `gcd(num, den) = 1` and `den`
/// is primitive over ℤ with positive leading coefficient, so equal values
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaRat {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRat {
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(AlphaRat::zero());
        }
        if den.degree() == Some(0) {
            return Ok(AlphaRat {
                num: num.scale(&den.coeffs[0].recip()),
                den: AlphaPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        Ok(AlphaRat::normalize_den(num, den))
    }

    /// Scales a coprime pair so that `den` is primitive with positive
    /// leading coefficient.
    fn normalize_den(num: AlphaPoly, den: AlphaPoly) -> AlphaRat {
        let (content, prim) = den.content_primitive();
        let inv = content.recip();
        AlphaRat {
            num: num.scale(&inv),
            den: AlphaPoly::from_bigints(&prim),
        }
    }

    /// Builds from a pair already known to be coprime.
    pub(crate) fn from_coprime(num: AlphaPoly, den: AlphaPoly) -> AlphaRat {
        if num.is_zero() {
            return AlphaRat::zero();
        }
        AlphaRat::normalize_den(num, den)
    }

    pub fn zero() -> Self {
        AlphaRat {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        AlphaRat::from(AlphaPoly::one())
    }

    pub fn int(c: i64) -> Self {
        AlphaRat::from(AlphaPoly::int(c))
    }

    pub fn constant(c: Rational) -> Self {
        AlphaRat::from(AlphaPoly::constant(c))
    }

    pub fn alpha() -> Self {
        AlphaRat::from(AlphaPoly::alpha())
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Option<AlphaPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn into_poly(self) -> Option<AlphaPoly> {
        if self.is_polynomial() {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<AlphaRat> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(AlphaRat::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &AlphaRat) -> Result<AlphaRat> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> AlphaRat {
        AlphaRat {
            num: self.num.scale(c),
            den: if c.is_zero() {
                AlphaPoly::one()
            } else {
                self.den.clone()
            },
        }
    }

    pub fn pow(&self, k: u32) -> AlphaRat {
        AlphaRat {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// `None` if `α = a` is a pole.
    pub fn eval(&self, a: &Rational) -> Option<Rational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a) / d)
    }

    /// The substitution `α ↦ 1/α`.
    pub fn invert_alpha(&self) -> AlphaRat {
        if self.is_zero() {
            return AlphaRat::zero();
        }
        let (qn, sn) = self.num.invert_alpha();
        let (qd, sd) = self.den.invert_alpha();
        // num(1/α)/den(1/α) = qn/qd · α^(sd − sn)
        let (num, den) = if sd >= sn {
            (qn.shift(sd - sn), qd)
        } else {
            (qn, qd.shift(sn - sd))
        };
        AlphaRat::from_coprime(num, den)
    }
}

impl From<AlphaPoly> for AlphaRat {
    fn from(p: AlphaPoly) -> Self {
        AlphaRat {
            num: p,
            den: AlphaPoly::one(),
        }
    }
}

impl From<i64> for AlphaRat {
    fn from(c: i64) -> Self {
        AlphaRat::int(c)
    }
}

impl Default for AlphaRat {
    fn default() -> Self {
        AlphaRat::zero()
    }
}

impl Add<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn add(self, rhs: &AlphaRat) -> AlphaRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.is_polynomial() {
                return AlphaRat::from(num);
            }
            return AlphaRat::new(num, self.den.clone()).expect("nonzero denominator");
        }
        AlphaRat::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn sub(self, rhs: &AlphaRat) -> AlphaRat {
        self + &-rhs
    }
}

impl Mul<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn mul(self, rhs: &AlphaRat) -> AlphaRat {
        if self.is_zero() || rhs.is_zero() {
            return AlphaRat::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return AlphaRat::from(&self.num * &rhs.num);
        }
        AlphaRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

forward_binop!(AlphaRat, Add, add);
forward_binop!(AlphaRat, Sub, sub);
forward_binop!(AlphaRat, Mul, mul);

impl Neg for AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        AlphaRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        -self.clone()
    }
}

impl AddAssign<&AlphaRat> for AlphaRat {
    fn add_assign(&mut self, rhs: &AlphaRat) {
        if self.is_polynomial() && rhs.is_polynomial() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&AlphaRat> for AlphaRat {
    fn sub_assign(&mut self, rhs: &AlphaRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&AlphaRat> for AlphaRat {
    fn mul_assign(&mut self, rhs: &AlphaRat) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let n = &self.num;
        let single =
            n.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 && n.leading().is_integer();
        if single {
            write!(f, "{}/({})", n, self.den)
        } else {
            write!(f, "({})/({})", n, self.den)
        }
    }
}

impl fmt::Debug for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaRat({self})")
    }
}

impl FromStr for AlphaRat {
    type Err = Error;

    /// A polynomial, or `p/(q)` with `p` optionally parenthesised.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut depth = 0i32;
        for (i, ch) in t.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 && t[i + 1..].starts_with('(') => {
                    let strip = |x: &str| {
                        x.strip_prefix('(')
                            .and_then(|y| y.strip_suffix(')'))
                            .map(str::to_string)
                            .unwrap_or_else(|| x.to_string())
                    };
                    let num: AlphaPoly = strip(&t[..i]).parse()?;
                    let den: AlphaPoly = strip(&t[i + 1..]).parse()?;
                    return AlphaRat::new(num, den);
                }
                _ => {}
            }
        }
        Ok(AlphaRat::from(t.parse::<AlphaPoly>()?))
    }
}

impl Serialize for AlphaRat {
    /// Polynomials serialize as plain polynomial JSON; proper fractions as
    /// `{"num": …, "den": …}`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_polynomial() {
            return self.num.serialize(s);
        }
        #[derive(Serialize)]
        struct Frac<'a> {
            num: &'a AlphaPoly,
            den: &'a AlphaPoly,
        }
        Frac {
            num: &self.num,
            den: &self.den,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        if value.get("coeffs").is_some() {
            let raw: PolyJson = serde_json::from_value(value).map_err(D::Error::custom)?;
            return Ok(AlphaRat::from(poly_from_json::<D::Error>(&raw)?));
        }
        #[derive(Deserialize)]
        struct Frac {
            num: AlphaPoly,
            den: AlphaPoly,
        }
        let raw: Frac = serde_json::from_value(value).map_err(D::Error::custom)?;
        AlphaRat::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}

/// A product `scalar · ∏ (aα + b)^e` of primitive linear factors with
/// integer exponents, kept factored so that products and quotients of
/// hook-type factors need no polynomial gcd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearProduct {
    scalar: Rational,
    factors: BTreeMap<(i64, i64), i32>,
}

impl LinearProduct {
    pub fn one() -> Self {
        LinearProduct {
            scalar: Rational::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        LinearProduct {
            scalar: c,
            factors: BTreeMap::new(),
        }
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn factors(&self) -> &BTreeMap<(i64, i64), i32> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    /// Multiplies by `(aα + b)^e`; `a, b ≥ 0`, not both zero unless `e > 0`.
    pub fn mul_linear(&mut self, a: i64, b: i64, e: i32) {
        if e == 0 {
            return;
        }
        if a == 0 && b == 0 {
            assert!(e > 0, "division by zero factor");
            self.scalar = Rational::zero();
            return;
        }
        let mut g = a.gcd(&b);
        let (mut a, mut b) = (a / g, b / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
            g = -g;
        }
        let gp = rat(g);
        self.scalar *= if e > 0 { gp.pow(e) } else { gp.recip().pow(-e) };
        if a == 0 {
            return;
        }
        let entry = self.factors.entry((a, b)).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.factors.remove(&(a, b));
        }
    }

    pub fn mul(&mut self, other: &LinearProduct) {
        self.scalar *= &other.scalar;
        for (&(a, b), &e) in &other.factors {
            self.mul_linear(a, b, e);
        }
    }

    pub fn div(&mut self, other: &LinearProduct) {
        assert!(!other.is_zero(), "division by zero product");
        self.scalar /= &other.scalar;
        for (&(a, b), &e) in &other.factors {
            self.mul_linear(a, b, -e);
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        self.scalar *= c;
    }

    fn split(&self) -> (AlphaPoly, AlphaPoly) {
        let mut num = AlphaPoly::constant(self.scalar.clone());
        let mut den = AlphaPoly::one();
        for (&(a, b), &e) in &self.factors {
            let f = AlphaPoly::linear(a, b).pow(e.unsigned_abs());
            if e > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        (num, den)
    }

    pub fn to_alpha_rat(&self) -> AlphaRat {
        if self.is_zero() {
            return AlphaRat::zero();
        }
        let (num, den) = self.split();
        AlphaRat::from_coprime(num, den)
    }

    /// Exact sum over a common denominator, reduced once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a LinearProduct>>(terms: I) -> AlphaRat {
        let terms: Vec<&LinearProduct> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        if terms.is_empty() {
            return AlphaRat::zero();
        }
        let mut common: BTreeMap<(i64, i64), i32> = BTreeMap::new();
        for t in &terms {
            for (&k, &e) in &t.factors {
                if e < 0 {
                    let slot = common.entry(k).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
        }
        let mut num = AlphaPoly::zero();
        for t in &terms {
            let mut scaled = (*t).clone();
            for (&(a, b), &e) in &common {
                scaled.mul_linear(a, b, e);
            }
            let (n, d) = scaled.split();
            debug_assert!(d.is_one());
            num += &n;
        }
        let mut den = AlphaPoly::one();
        for (&(a, b), &e) in &common {
            den = &den * &AlphaPoly::linear(a, b).pow(e as u32);
        }
        AlphaRat::new(num, den).expect("nonzero denominator")
    }
}

/// `unit · ∏ (aα + b)^m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LinearFactorization {
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub unit: Rational,
    pub factors: Vec<(i64, i64, u32)>,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn de_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
}

impl LinearFactorization {
    pub fn expand(&self) -> AlphaPoly {
        let mut out = AlphaPoly::constant(self.unit.clone());
        for &(a, b, m) in &self.factors {
            out = &out * &AlphaPoly::linear(a, b).pow(m);
        }
        out
    }

    /// Total number of linear factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.2).sum()
    }
}

impl fmt::Display for LinearFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for &(a, b, m) in &self.factors {
            let lin = AlphaPoly::linear(a, b);
            let body = if b == 0 {
                lin.to_string()
            } else {
                format!("({lin})")
            };
            write!(f, "·{body}")?;
            if m > 1 {
                write!(f, "{}", superscript(m as usize))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn biguint_to_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

/// Brings the augmented matrix `rows` (each of length `ncols + 1`, the last
/// entry being the right-hand side) to reduced row echelon form and returns
/// the pivot column of each nonzero row.
pub fn row_reduce(rows: &mut [Vec<AlphaRat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solves the square system `a · x = b` exactly.
pub fn solve_square(a: &[Vec<AlphaRat>], b: &[AlphaRat]) -> Result<Vec<AlphaRat>> {
    let n = a.len();
    let mut rows: Vec<Vec<AlphaRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows, n);
    if pivots.len() < n {
        return Err(Error::Singular(format!("rank {} < {n}", pivots.len())));
    }
    Ok(rows
        .into_iter()
        .map(|mut r| r.pop().expect("augmented column"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> AlphaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            AlphaPoly::linear(1, 1) * AlphaPoly::linear(2, 0),
            p("2a^2+2a")
        );
        assert_eq!(p("2α²+2α").div_exact(&p("α+1")).unwrap(), p("2α"));
        assert_eq!(p("α+1") * AlphaPoly::zero(), AlphaPoly::zero());
        assert_eq!(p("α+2").div_exact(&p("α+1")), Err(Error::InexactDivision));
        assert_eq!(
            p("α").div_exact(&AlphaPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn normalize_examples() {
        let r = AlphaRat::new(p("2α²+2α"), p("α+1")).unwrap();
        assert_eq!(
            (r.num().clone(), r.den().clone()),
            (p("2α"), AlphaPoly::one())
        );
        let r = AlphaRat::new(p("-α"), p("-1")).unwrap();
        assert_eq!(
            (r.num().clone(), r.den().clone()),
            (p("α"), AlphaPoly::one())
        );
        let r = AlphaRat::new(p("α^2-1"), p("α-1")).unwrap();
        assert_eq!(
            (r.num().clone(), r.den().clone()),
            (p("α+1"), AlphaPoly::one())
        );
        let r = AlphaRat::new(p("1"), p("-2α-4")).unwrap();
        assert_eq!((r.num().clone(), r.den().clone()), (p("-1/2"), p("α+2")));
        assert_eq!(
            AlphaRat::new(p("1"), AlphaPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn linear_solve() {
        let r = |s: &str| -> AlphaRat { s.parse().unwrap() };
        // x + y = α + 1, αx − y = 0
        let a = vec![vec![r("1"), r("1")], vec![r("α"), r("-1")]];
        let x = solve_square(&a, &[r("α+1"), r("0")]).unwrap();
        assert_eq!(x, vec![r("1"), r("α")]);
        let singular = vec![vec![r("1"), r("α")], vec![r("2"), r("2α")]];
        assert!(matches!(
            solve_square(&singular, &[r("1"), r("2")]),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn invert_alpha_examples() {
        assert_eq!(p("α+1").invert_alpha(), (p("α+1"), 1));
        assert_eq!(p("2α²").invert_alpha(), (p("2"), 2));
        assert_eq!(p("1").invert_alpha(), (p("1"), 0));
        assert_eq!(AlphaPoly::zero().invert_alpha(), (AlphaPoly::zero(), 0));
        assert_eq!(p("3α+2").invert_alpha(), (p("2α+3"), 1));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("α+1").eval(&rat(1)), rat(2));
        assert_eq!(p("2α²").eval(&frac(1, 2)), frac(1, 2));
        assert_eq!(AlphaPoly::zero().eval(&frac(7, 3)), rat(0));
    }

    #[test]
    fn linear_factorize_examples() {
        let f = p("2α²").linear_factorize().unwrap().unwrap();
        assert_eq!(
            (f.unit.clone(), f.factors.clone()),
            (rat(2), vec![(1, 0, 2)])
        );

        // expand 4α³(α+2)(2α+1) independently, then factor
        let expanded = AlphaPoly::int(4)
            * AlphaPoly::alpha().pow(3)
            * AlphaPoly::linear(1, 2)
            * AlphaPoly::linear(2, 1);
        assert_eq!(expanded, p("8α⁵+20α⁴+8α³"));
        let f = expanded.linear_factorize().unwrap().unwrap();
        assert_eq!(f.unit, rat(4));
        assert_eq!(f.factors, vec![(1, 0, 3), (1, 2, 1), (2, 1, 1)]);

        assert_eq!(p("α²+1").linear_factorize().unwrap(), None);
        assert_eq!(
            AlphaPoly::zero().linear_factorize(),
            Err(Error::ZeroPolynomial)
        );
        let f = p("-3").linear_factorize().unwrap().unwrap();
        assert_eq!((f.unit, f.factors), (rat(-3), vec![]));
        let f = p("α-1").linear_factorize().unwrap().unwrap();
        assert_eq!(f.factors, vec![(1, -1, 1)]);
        // (α²+1)(α+1): partial success is still a failure
        assert_eq!(p("α³+α²+α+1").linear_factorize().unwrap(), None);
    }

    #[test]
    fn linear_factorize_large_coefficients() {
        let big =
            AlphaPoly::linear(7919, 104729) * AlphaPoly::linear(3, 1_000_003) * AlphaPoly::int(6);
        let f = big.linear_factorize().unwrap().unwrap();
        assert_eq!(f.expand(), big);
        assert_eq!(f.factors, vec![(3, 1_000_003, 1), (7919, 104729, 1)]);
    }

    #[test]
    fn nonneg_int_examples() {
        assert!(p("2α²+2α").nonneg_int_test());
        assert!(!p("(1/2)α").nonneg_int_test());
        assert!(!p("α-1").nonneg_int_test());
        assert!(AlphaPoly::zero().nonneg_int_test());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("2α²+2α").to_string(), "2α²+2α");
        assert_eq!(p("2a^2 + 2*a").to_string(), "2α²+2α");
        assert_eq!(p("α-1").to_string(), "α-1");
        assert_eq!(p("(1/2)α").to_string(), "(1/2)α");
        assert_eq!(p("-α^10").to_string(), "-α¹⁰");
        assert_eq!(AlphaPoly::zero().to_string(), "0");
        assert!("α+".parse::<AlphaPoly>().is_err());
        assert!("x".parse::<AlphaPoly>().is_err());
        let r = AlphaRat::new(p("2α"), p("α+1")).unwrap();
        assert_eq!(r.to_string(), "2α/(α+1)");
        assert_eq!(r.to_string().parse::<AlphaRat>().unwrap(), r);
        let r = AlphaRat::new(p("α+3"), p("2α+1")).unwrap();
        assert_eq!(r.to_string(), "(α+3)/(2α+1)");
        assert_eq!(r.to_string().parse::<AlphaRat>().unwrap(), r);
    }

    #[test]
    fn json_forms() {
        let poly = p("(1/2)α+3/4");
        let v = serde_json::to_value(&poly).unwrap();
        assert_eq!(v, serde_json::json!({"den": 4, "coeffs": [3, 2]}));
        let back: AlphaPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, poly);
        let zero = serde_json::to_string(&AlphaPoly::zero()).unwrap();
        assert_eq!(zero, r#"{"den":1,"coeffs":[]}"#);
        let huge = AlphaPoly::constant(Rational::from_integer(BigInt::from(10u32).pow(40)));
        let text = serde_json::to_string(&huge).unwrap();
        assert_eq!(serde_json::from_str::<AlphaPoly>(&text).unwrap(), huge);
        let r = AlphaRat::new(p("2α"), p("α+1")).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<AlphaRat>(&text).unwrap(), r);
    }

    #[test]
    fn rat_invert_alpha() {
        // 2α/(α+1) at 1/α is 2/(α+1)
        let r = AlphaRat::new(p("2α"), p("α+1")).unwrap();
        assert_eq!(r.invert_alpha(), AlphaRat::new(p("2"), p("α+1")).unwrap());
        let r = AlphaRat::new(p("α+2"), p("α³")).unwrap();
        assert_eq!(r.invert_alpha(), AlphaRat::from(p("2α³+α²")));
        assert_eq!(r.invert_alpha().invert_alpha(), r);
    }

    #[test]
    fn linear_product_matches_direct_arithmetic() {
        let mut lp = LinearProduct::constant(rat(3));
        lp.mul_linear(2, 4, 1); // 2(α+2)
        lp.mul_linear(1, 0, 2);
        lp.mul_linear(3, 3, -1); // 1/(3(α+1))
        let direct = AlphaRat::new(p("6α²") * p("α+2"), p("3α+3")).unwrap();
        assert_eq!(lp.to_alpha_rat(), direct);
        let mut other = LinearProduct::one();
        other.mul_linear(1, 1, -2);
        let sum = LinearProduct::sum([&lp, &other]);
        let expected = &direct + &AlphaRat::new(p("1"), p("α²+2α+1")).unwrap();
        assert_eq!(sum, expected);
        let mut q = lp.clone();
        q.div(&lp);
        assert_eq!(q.to_alpha_rat(), AlphaRat::one());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_deg: usize) -> impl Strategy<Value = AlphaPoly> {
            prop::collection::vec((-20i64..=20, 1i64..=6), 0..=max_deg + 1)
                .prop_map(|v| AlphaPoly::new(v.into_iter().map(|(n, d)| frac(n, d)).collect()))
        }

        fn nonzero(max_deg: usize) -> impl Strategy<Value = AlphaPoly> {
            poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
        }

        proptest! {
            #[test]
            fn ring_axioms(a in poly(12), b in poly(12), c in poly(12)) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a - &b) + &b, a.clone());
            }

            #[test]
            fn division_round_trip(a in poly(8), d in nonzero(4)) {
                let (q, r) = a.div_rem(&d).unwrap();
                prop_assert_eq!(&(&q * &d) + &r, a.clone());
                prop_assert!(r.degree() < d.degree() || r.is_zero());
                prop_assert_eq!((&a * &d).div_exact(&d).unwrap(), a);
            }

            #[test]
            fn invert_alpha_twice(a in nonzero(10)) {
                let (q, shift) = a.invert_alpha();
                prop_assert_eq!(shift, a.degree().unwrap());
                let (back, s2) = q.invert_alpha();
                let v = a.valuation();
                prop_assert_eq!(back.shift(v), a.clone());
                prop_assert_eq!(s2 + v, shift);
            }

            #[test]
            fn normalization_is_scale_invariant(n in poly(6), d in nonzero(5), s in (-9i64..=9, 1i64..=9)) {
                prop_assume!(s.0 != 0);
                let c = frac(s.0, s.1);
                let r1 = AlphaRat::new(n.clone(), d.clone()).unwrap();
                let r2 = AlphaRat::new(n.scale(&c), d.scale(&c)).unwrap();
                prop_assert_eq!(r1.clone(), r2);
                prop_assert!(r1.num().gcd(r1.den()).degree() == Some(0) || r1.is_zero());
            }

            #[test]
            fn rational_field_ops(a in poly(4), b in nonzero(3), c in poly(4), d in nonzero(3)) {
                let x = AlphaRat::new(a, b).unwrap();
                let y = AlphaRat::new(c, d).unwrap();
                prop_assert_eq!(&(&x + &y) - &y, x.clone());
                if !y.is_zero() {
                    prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
                }
                prop_assert_eq!(x.invert_alpha().invert_alpha(), x);
            }

            #[test]
            fn factorize_products_of_linears(
                unit in (-30i64..=30).prop_filter("nonzero", |u| *u != 0),
                lins in prop::collection::vec((1i64..=5, -6i64..=6), 0..=6),
            ) {
                let mut prod = AlphaPoly::int(unit);
                for &(a, b) in &lins {
                    prod = &prod * &AlphaPoly::linear(a, b);
                }
                let f = prod.linear_factorize().unwrap().unwrap();
                prop_assert_eq!(f.expand(), prod);
                prop_assert_eq!(f.degree() as usize, lins.len());
            }

            #[test]
            fn display_parse_round_trip(a in poly(8)) {
                let text = a.to_string();
                prop_assert_eq!(text.parse::<AlphaPoly>().unwrap(), a);
            }
        }
    }
}

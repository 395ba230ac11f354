//! Stanley g-polynomials `g^λ_{μ,ν} = ⟨J_λ, J_μ J_ν⟩` and the
//! Littlewood–Richardson coefficients recovered from them at `α = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::hooks::hook_products;
use super::store::JackStore;
use crate::error::{Error, Result};
use crate::exactalg::{AlphaPoly, Rational};
use crate::partitions::Partition;
use crate::symfunc::SymFuncP;

/// `⟨J_λ, J_μ J_ν⟩` from power-sum expansions; fails unless the result is
/// a polynomial with integer coefficients.
pub(crate) fn g_from_p(
    jl: &SymFuncP,
    jm: &SymFuncP,
    jn: &SymFuncP,
    label: impl Fn() -> String,
) -> Result<AlphaPoly> {
    let value = jl.inner(&jm.mul(jn));
    match value.into_poly() {
        Some(p) if p.is_integral() => Ok(p),
        Some(p) => Err(Error::Integrality(format!(
            "g{} = {p} has non-integer coefficients",
            label()
        ))),
        None => Err(Error::Integrality(format!(
            "g{} is not a polynomial",
            label()
        ))),
    }
}

/// `g^λ_{μ,ν}(α)`; zero unless `|μ| + |ν| = |λ|`.
pub fn g_poly(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<AlphaPoly> {
    JackStore::global().g(lambda, mu, nu)
}

/// `c^λ_{μ,ν} = g^λ_{μ,ν}(1) / (H_λ H_μ H_ν)` with `H_π = c_π(1)`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: mu.size() + nu.size(),
        });
    }
    let g = g_poly(lambda, mu, nu)?;
    let one = Rational::one();
    let hooks = [lambda, mu, nu]
        .iter()
        .fold(one.clone(), |acc, p| acc * hook_products(p).c.eval(&one));
    let value = g.eval(&one) / hooks;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Integrality(format!(
            "c^{lambda}_{{{mu},{nu}}} = {value} is not a nonnegative integer"
        )));
    }
    let n: BigInt = value.to_integer();
    u64::try_from(n).map_err(|e| Error::Integrality(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::jack_ks;
    use crate::partitions::{enumerate_partitions, Cell};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn g_examples() {
        assert_eq!(
            g_poly(&p("2"), &p("1"), &p("1")).unwrap(),
            "2α^2".parse().unwrap()
        );
        assert_eq!(
            g_poly(&p("1,1"), &p("1"), &p("1")).unwrap(),
            "2α^2".parse().unwrap()
        );
        assert!(g_poly(&p("2"), &p("1"), &p("2")).unwrap().is_zero());
        assert_eq!(
            g_poly(&p("2,2"), &p("1"), &p("2,1")).unwrap(),
            "8α^5+20α^4+8α^3".parse().unwrap()
        );
    }

    #[test]
    fn g_symmetric() {
        for n in 0..=5 {
            for lambda in enumerate_partitions(n, None, None) {
                for k in 0..=n {
                    for mu in enumerate_partitions(k, None, None) {
                        for nu in enumerate_partitions(n - k, None, None) {
                            assert_eq!(
                                g_poly(&lambda, &mu, &nu).unwrap(),
                                g_poly(&lambda, &nu, &mu).unwrap()
                            );
                            assert_eq!(
                                lr_coeff(&lambda, &mu, &nu).unwrap(),
                                lr_coeff(&lambda, &nu, &mu).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p("2"), &p("1"), &p("1")).unwrap(), 1);
        assert_eq!(lr_coeff(&p("1,1"), &p("1"), &p("1")).unwrap(), 1);
        assert_eq!(lr_coeff(&p("3"), &p("1"), &p("1,1")).unwrap(), 0);
        assert_eq!(lr_coeff(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
        assert!(lr_coeff(&p("3"), &p("1"), &p("1")).is_err());
    }

    /// Semistandard tableaux of shape `λ` and content `μ`, by brute force.
    fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
        let cells: Vec<Cell> = lambda.cells().collect();
        let k = mu.len() as u32;
        let mut labels = vec![1u32; cells.len()];
        let mut count = 0;
        let at = |labels: &[u32], r: u32, c: u32| {
            cells
                .iter()
                .position(|x| *x == Cell::new(r, c))
                .map(|i| labels[i])
        };
        loop {
            let mut content = vec![0u32; k as usize];
            for &l in &labels {
                content[l as usize - 1] += 1;
            }
            let ok = content == mu.parts()
                && cells.iter().zip(&labels).all(|(c, &l)| {
                    let right = at(&labels, c.row, c.col + 1).map_or(true, |x| x >= l);
                    let down = at(&labels, c.row + 1, c.col).map_or(true, |x| x > l);
                    right && down
                });
            count += ok as u64;
            let mut i = 0;
            loop {
                if i == labels.len() {
                    return count;
                }
                if labels[i] < k {
                    labels[i] += 1;
                    break;
                }
                labels[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn schur_scale_matches_kostka_numbers() {
        let one = Rational::one();
        for n in 1..=5 {
            for lambda in enumerate_partitions(n, None, None) {
                let j = jack_ks(&lambda).expansion;
                let h = hook_products(&lambda).c.eval(&one);
                for mu in enumerate_partitions(n, None, None) {
                    let v = j.coeff(&mu).eval(&one).unwrap();
                    assert_eq!(
                        v / &h,
                        Rational::from_integer(kostka(&lambda, &mu).into()),
                        "λ={lambda} μ={mu}"
                    );
                }
            }
        }
    }
}

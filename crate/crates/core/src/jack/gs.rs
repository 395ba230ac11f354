//! `J_λ` from its defining properties: triangularity, orthogonality and the
//! `n!` normalization. Used as an oracle for the Knop–Sahi expansion.

use super::{JackExpansion, Method};
use crate::error::Result;
use crate::exactalg::{biguint_to_rational, solve_square, AlphaRat};
use crate::partitions::{enumerate_partitions, factorial, Partition, SkewShape};
use crate::symfunc::{inner, SymFuncM};

/// Solves for the coefficients `v_κ`, `κ ≤ λ`, such that
/// `⟨Σ v_κ m_κ, m_ρ⟩ = 0` for every `ρ < λ` and `v_{1ⁿ} = n!`.
///
/// Orthogonality to every `m_ρ` with `ρ < λ` is the same condition as
/// orthogonality to every `J_ρ` with `ρ < λ`, since both families span the
/// same space.
pub fn jack_gs(lambda: &Partition) -> Result<JackExpansion> {
    let n = lambda.size();
    let below: Vec<Partition> = enumerate_partitions(n, None, None)
        .into_iter()
        .filter(|k| lambda.dominates_unchecked(k))
        .collect();
    let monomials: Vec<SymFuncM> = below.iter().map(SymFuncM::monomial).collect();
    let column = Partition::column(n);
    let mut a = Vec::with_capacity(below.len());
    let mut b = Vec::with_capacity(below.len());
    for (i, rho) in below.iter().enumerate() {
        if rho == lambda {
            continue;
        }
        a.push(
            monomials
                .iter()
                .map(|m| inner(m, &monomials[i]))
                .collect::<Vec<_>>(),
        );
        b.push(AlphaRat::zero());
    }
    a.push(
        below
            .iter()
            .map(|k| AlphaRat::int((*k == column) as i64))
            .collect(),
    );
    b.push(AlphaRat::constant(biguint_to_rational(&factorial(n))));
    let v = solve_square(&a, &b)?;
    let mut expansion = SymFuncM::zero(n);
    for (k, c) in below.into_iter().zip(v) {
        expansion.add_term(k, &c);
    }
    Ok(JackExpansion {
        shape: SkewShape::straight(lambda.clone()),
        method: Method::Gs,
        expansion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::jack_ks;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            jack_gs(&p("1,1")).unwrap().expansion.to_string(),
            "2·m[1,1]"
        );
        assert_eq!(
            jack_gs(&p("2")).unwrap().expansion,
            jack_ks(&p("2")).expansion
        );
        assert_eq!(
            jack_gs(&Partition::empty())
                .unwrap()
                .expansion
                .coeff(&Partition::empty()),
            AlphaRat::one()
        );
    }

    #[test]
    fn orthogonal_in_degree_four() {
        let js: Vec<_> = enumerate_partitions(4, None, None)
            .iter()
            .map(|l| jack_gs(l).unwrap().expansion)
            .collect();
        for i in 0..js.len() {
            for j in 0..js.len() {
                if i != j {
                    assert!(inner(&js[i], &js[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn agrees_with_knop_sahi_up_to_five() {
        for n in 0..=5 {
            for lambda in enumerate_partitions(n, None, None) {
                assert_eq!(
                    jack_gs(&lambda).unwrap().expansion,
                    jack_ks(&lambda).expansion,
                    "λ={lambda}"
                );
            }
        }
    }
}

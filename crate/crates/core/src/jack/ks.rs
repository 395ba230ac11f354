//! The Knop–Sahi formula `J_λ = Σ_T d_T(α) x^T` over admissible fillings.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::hooks::d_factor;
use super::{JackExpansion, Method};
use crate::error::{Error, Result};
use crate::exactalg::{AlphaPoly, AlphaRat};
use crate::partitions::{enumerate_partitions, Cell, Partition, SkewShape};
use crate::symfunc::SymFuncM;

/// A filling `T` of the diagram of `λ` by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filling {
    shape: Partition,
    entries: BTreeMap<Cell, u32>,
}

impl Filling {
    pub fn new(shape: Partition, entries: BTreeMap<Cell, u32>) -> Result<Self> {
        let cells: Vec<Cell> = shape.cells().collect();
        if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            let bad = entries
                .keys()
                .find(|c| !shape.contains_cell(**c))
                .copied()
                .unwrap_or(Cell { row: 0, col: 0 });
            return Err(Error::OutsideShape {
                row: bad.row,
                col: bad.col,
                shape: shape.to_string(),
            });
        }
        if entries.values().any(|&v| v == 0) {
            return Err(Error::Parse("filling labels must be positive".into()));
        }
        Ok(Filling { shape, entries })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.entries[&Cell { row, col }]
    }

    pub fn is_admissible(&self) -> bool {
        self.entries.iter().all(|(&Cell { row, col }, &t)| {
            let h = self.shape.col(col) as u32;
            let below_ok = (row + 1..=h).all(|r| self.get(r, col) != t);
            let left_ok = col == 1 || (1..row).all(|r| self.get(r, col - 1) != t);
            below_ok && left_ok
        })
    }

    /// Boxes with `j > 1` and `T(i,j) = T(i,j−1)`.
    pub fn critical_boxes(&self) -> Vec<Cell> {
        self.entries
            .iter()
            .filter(|(&Cell { row, col }, &t)| col > 1 && self.get(row, col - 1) == t)
            .map(|(c, _)| *c)
            .collect()
    }

    pub fn d_t(&self) -> AlphaPoly {
        self.critical_boxes()
            .into_iter()
            .fold(AlphaPoly::one(), |acc, s| {
                let (a, b) = d_factor(&self.shape, s);
                &acc * &AlphaPoly::linear(a, b)
            })
    }

    /// Multiplicities of the labels `1, 2, …, max`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.entries.values().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0u32; max];
        for &v in self.entries.values() {
            out[v as usize - 1] += 1;
        }
        out
    }
}

struct KsCounter<'a> {
    heights: Vec<usize>,
    lambda: &'a Partition,
    nlabels: usize,
    memo: HashMap<(usize, Vec<u8>, Vec<u8>), AlphaPoly>,
}

impl KsCounter<'_> {
    /// Sum of `d_T` over admissible fillings of columns `col..` given the
    /// labels of column `col − 1` and the content still to be placed.
    fn count(&mut self, col: usize, prev: &[u8], remaining: &[u8]) -> AlphaPoly {
        if col == self.heights.len() {
            return AlphaPoly::one();
        }
        let key = (col, prev.to_vec(), remaining.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let cols_left = (self.heights.len() - col) as u8;
        let mut total = AlphaPoly::zero();
        if remaining.iter().all(|&r| r <= cols_left) {
            let mut current = Vec::with_capacity(self.heights[col]);
            let mut rem = remaining.to_vec();
            self.fill_column(
                col,
                0,
                prev,
                &mut current,
                &mut rem,
                AlphaPoly::one(),
                &mut total,
            );
        }
        self.memo.insert(key, total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_column(
        &mut self,
        col: usize,
        row: usize,
        prev: &[u8],
        current: &mut Vec<u8>,
        rem: &mut Vec<u8>,
        weight: AlphaPoly,
        total: &mut AlphaPoly,
    ) {
        if row == self.heights[col] {
            let sub = self.count(col + 1, current, rem);
            if !sub.is_zero() {
                *total += &(&weight * &sub);
            }
            return;
        }
        for l in 0..self.nlabels as u8 {
            if rem[l as usize] == 0 || current.contains(&l) {
                continue;
            }
            if col > 0 && prev[..row].contains(&l) {
                continue;
            }
            let w = if col > 0 && prev[row] == l {
                let (a, b) = d_factor(self.lambda, Cell::new(row as u32 + 1, col as u32 + 1));
                &weight * &AlphaPoly::linear(a, b)
            } else {
                weight.clone()
            };
            rem[l as usize] -= 1;
            current.push(l);
            self.fill_column(col, row + 1, prev, current, rem, w, total);
            current.pop();
            rem[l as usize] += 1;
        }
    }
}

/// Coefficient of `m_ν` in `J_λ` by the Knop–Sahi formula.
pub(crate) fn ks_coefficient(lambda: &Partition, nu: &Partition) -> AlphaPoly {
    if lambda.size() != nu.size() {
        return AlphaPoly::zero();
    }
    let heights: Vec<usize> = (1..=lambda.first_part()).map(|j| lambda.col(j)).collect();
    let mut counter = KsCounter {
        heights,
        lambda,
        nlabels: nu.len(),
        memo: HashMap::new(),
    };
    let remaining: Vec<u8> = nu.parts().iter().map(|&p| p as u8).collect();
    counter.count(0, &[], &remaining)
}

/// `J_λ` in the monomial basis via the Knop–Sahi formula.
pub fn jack_ks(lambda: &Partition) -> JackExpansion {
    let n = lambda.size();
    let targets: Vec<Partition> = enumerate_partitions(n, None, None)
        .into_iter()
        .filter(|nu| lambda.dominates_unchecked(nu))
        .collect();
    let coeffs: Vec<(Partition, AlphaPoly)> = targets
        .into_par_iter()
        .map(|nu| {
            let c = ks_coefficient(lambda, &nu);
            (nu, c)
        })
        .collect();
    let mut expansion = SymFuncM::zero(n);
    for (nu, c) in coeffs {
        expansion.add_term(nu, &AlphaRat::from(c));
    }
    JackExpansion {
        shape: SkewShape::straight(lambda.clone()),
        method: Method::Ks,
        expansion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Every filling of `λ` by labels `1..=k`, collected by content.
    fn brute_force(lambda: &Partition) -> BTreeMap<Partition, AlphaPoly> {
        let cells: Vec<Cell> = lambda.cells().collect();
        let k = cells.len() as u32;
        let mut out: BTreeMap<Partition, AlphaPoly> = BTreeMap::new();
        let mut labels = vec![1u32; cells.len()];
        loop {
            let entries: BTreeMap<Cell, u32> =
                cells.iter().copied().zip(labels.iter().copied()).collect();
            let t = Filling::new(lambda.clone(), entries).unwrap();
            let content = t.content();
            let is_partition =
                content.windows(2).all(|w| w[0] >= w[1]) && content.iter().all(|&c| c > 0);
            if is_partition && t.is_admissible() {
                let key = Partition::new(content).unwrap();
                let e = out.entry(key).or_insert_with(AlphaPoly::zero);
                *e += &t.d_t();
            }
            let mut i = 0;
            loop {
                if i == labels.len() {
                    return out;
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
    fn small_examples() {
        let j = jack_ks(&p("1")).expansion;
        assert_eq!(j.to_string(), "m[1]");
        let j = jack_ks(&p("2")).expansion;
        assert_eq!(j.to_string(), "(α+1)·m[2] + 2·m[1,1]");
        let j = jack_ks(&p("2,1")).expansion;
        assert_eq!(j.to_string(), "(α+2)·m[2,1] + 6·m[1,1,1]");
        let j = jack_ks(&Partition::empty()).expansion;
        assert_eq!(j.coeff(&Partition::empty()), AlphaRat::one());
    }

    #[test]
    fn matches_brute_force_fillings() {
        for n in 1..=5 {
            for lambda in enumerate_partitions(n, None, None) {
                let fast = jack_ks(&lambda).expansion;
                let slow = brute_force(&lambda);
                for nu in enumerate_partitions(n, None, None) {
                    let expected = slow.get(&nu).cloned().unwrap_or_else(AlphaPoly::zero);
                    assert_eq!(
                        fast.coeff(&nu),
                        AlphaRat::from(expected),
                        "λ={lambda} ν={nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn filling_predicates() {
        let mut e = BTreeMap::new();
        e.insert(Cell::new(1, 1), 1);
        e.insert(Cell::new(1, 2), 1);
        e.insert(Cell::new(2, 1), 2);
        let t = Filling::new(p("2,1"), e.clone()).unwrap();
        assert!(t.is_admissible());
        assert_eq!(t.critical_boxes(), vec![Cell::new(1, 2)]);
        assert_eq!(t.d_t(), "α+1".parse().unwrap());
        e.insert(Cell::new(2, 1), 1);
        assert!(!Filling::new(p("2,1"), e.clone()).unwrap().is_admissible());
        e.insert(Cell::new(3, 1), 1);
        assert!(Filling::new(p("2,1"), e).is_err());
    }
}

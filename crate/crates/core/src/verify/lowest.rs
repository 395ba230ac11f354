//! The lowest coefficient `v_{λ/μ,(1ⁿ)}/n!` as a sum over configurations.
//!
//! For fixed `μ` the unknowns are one `π` per canonical configuration class.
//! Each `λ ⊇ μ` contributes one equation whose coefficients count the members
//! of each class that fit inside `λ`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::{biguint_to_rational, row_reduce, AlphaRat};
use crate::jack::skew_coefficient;
use crate::partitions::{
    admissible_configs, enumerate_partitions, factorial, Configuration, Partition, SkewShape,
};

#[derive(Clone, Debug, Serialize)]
pub struct PiClass {
    /// Boxes of the canonical representative.
    pub cells: String,
    /// `None` when the family does not pin this value down.
    pub pi: Option<AlphaRat>,
    pub nonneg_integral: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub lambda: Partition,
    /// `"0"` on agreement; `None` if some class needed here is undetermined.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PiTable {
    pub mu: Partition,
    pub family: Vec<Partition>,
    pub held_out: Vec<Partition>,
    pub classes: Vec<PiClass>,
    pub rank: usize,
    pub consistent: bool,
    pub unique: bool,
    pub monotone: bool,
    pub residuals: Vec<Residual>,
}

impl PiTable {
    /// The value for the class whose canonical form has these boxes.
    pub fn pi(&self, cells: &str) -> Option<&AlphaRat> {
        self.classes.iter().find(|c| c.cells == cells)?.pi.as_ref()
    }
}

/// Every `λ ⊇ μ` with `|λ| ≤ max_size`, by size then in reverse
/// lexicographic order.
pub fn lowest_family(mu: &Partition, max_size: usize) -> Vec<Partition> {
    (mu.size()..=max_size)
        .flat_map(|n| enumerate_partitions(n, None, None))
        .filter(|l| l.contains(mu))
        .collect()
}

fn class_label(c: &Configuration) -> String {
    c.cells()
        .iter()
        .map(|b| format!("({},{})", b.row, b.col))
        .collect()
}

struct Equation {
    counts: BTreeMap<Configuration, u64>,
    rhs: AlphaRat,
}

fn equation(mu: &Partition, lambda: &Partition) -> Equation {
    let mut counts = BTreeMap::new();
    for conf in admissible_configs(mu, lambda) {
        *counts.entry(conf.canonical()).or_insert(0) += 1;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("μ ⊆ λ");
    let n = shape.size();
    let v = skew_coefficient(&shape, &Partition::column(n));
    let rhs = v.scale(&biguint_to_rational(&factorial(n)).recip());
    Equation { counts, rhs }
}

struct Solution {
    pi: Vec<Option<AlphaRat>>,
    rank: usize,
    consistent: bool,
}

fn solve(classes: &[Configuration], eqs: &[Equation]) -> Solution {
    let k = classes.len();
    let mut rows: Vec<Vec<AlphaRat>> = eqs
        .iter()
        .map(|e| {
            let mut row: Vec<AlphaRat> = classes
                .iter()
                .map(|c| AlphaRat::int(e.counts.get(c).copied().unwrap_or(0) as i64))
                .collect();
            row.push(e.rhs.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, k);
    let rank = pivots.len();
    let consistent = rows[rank..].iter().all(|r| r[k].is_zero());
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut pi = vec![None; k];
    for (r, &c) in pivots.iter().enumerate() {
        let free = (0..k).any(|j| !pivot_set.contains(&j) && !rows[r][j].is_zero());
        if !free {
            pi[c] = Some(rows[r][k].clone());
        }
    }
    Solution {
        pi,
        rank,
        consistent,
    }
}

/// Solves for the class values on `family`, then evaluates the residual on
/// each `held_out` partition. Every partition must contain `μ`.
pub fn solve_lowest(mu: &Partition, family: &[Partition], held_out: &[Partition]) -> PiTable {
    let eqs: Vec<Equation> = family.par_iter().map(|l| equation(mu, l)).collect();
    let classes: Vec<Configuration> = eqs
        .iter()
        .flat_map(|e| e.counts.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let full = solve(&classes, &eqs);

    let monotone = if eqs.len() < 2 {
        true
    } else {
        let prev = solve(&classes, &eqs[..eqs.len() - 1]);
        prev.pi.iter().zip(&full.pi).all(|(a, b)| match (a, b) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        })
    };

    let index: BTreeMap<&Configuration, usize> =
        classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let residuals = held_out
        .par_iter()
        .map(|l| {
            let e = equation(mu, l);
            let mut acc = e.rhs.clone();
            for (c, &count) in &e.counts {
                let Some(v) = index.get(c).and_then(|&i| full.pi[i].as_ref()) else {
                    return Residual {
                        lambda: l.clone(),
                        residual: None,
                    };
                };
                acc -= &(&AlphaRat::int(count as i64) * v);
            }
            Residual {
                lambda: l.clone(),
                residual: Some(acc.to_string()),
            }
        })
        .collect();

    let out: Vec<PiClass> = classes
        .iter()
        .zip(full.pi)
        .map(|(c, pi)| PiClass {
            cells: class_label(c),
            nonneg_integral: pi
                .as_ref()
                .and_then(|v| v.to_poly())
                .is_some_and(|p| p.nonneg_int_test()),
            pi,
        })
        .collect();
    PiTable {
        mu: mu.clone(),
        family: family.to_vec(),
        held_out: held_out.to_vec(),
        unique: full.rank == out.len(),
        classes: out,
        rank: full.rank,
        consistent: full.consistent,
        monotone,
        residuals,
    }
}

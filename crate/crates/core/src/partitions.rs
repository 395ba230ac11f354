//! Integer partitions, skew shapes, standard skew tableaux (as chains of
//! horizontal strips) and the box configurations used by the
//! lowest-coefficient conjecture.
//!
//! Boxes are 1-based `(row, col)` pairs, rows counted top-down and columns
//! left-right.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The rectangle `(b^h)`.
    pub fn rectangle(b: u32, h: usize) -> Self {
        if b == 0 {
            return Partition::empty();
        }
        Partition(vec![b; h])
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based), i.e. `λ'_j`.
    pub fn col(&self, j: u32) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    pub fn first_part(&self) -> u32 {
        self.row(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        Partition((1..=width).map(|j| self.col(j) as u32).collect())
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row(cell.row as usize) >= cell.col
    }

    /// Boxes of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    /// Arm and leg of a box: boxes strictly right of it and strictly below it.
    pub fn arm_leg(&self, cell: Cell) -> Result<(u32, u32)> {
        if !self.contains_cell(cell) {
            return Err(Error::OutsideShape {
                row: cell.row,
                col: cell.col,
                shape: self.to_string(),
            });
        }
        let arm = self.row(cell.row as usize) - cell.col;
        let leg = self.col(cell.col) as u32 - cell.row;
        Ok((arm, leg))
    }

    /// `true` iff `other ≤ self` in dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual: other.size(),
            });
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0) as u64;
            b += other.0.get(i).copied().unwrap_or(0) as u64;
            if b > a {
                return false;
            }
        }
        true
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn stats(&self) -> PartitionStats {
        let mut u = BigUint::one();
        let mut z = BigUint::one();
        for (part, k) in self.multiplicities() {
            let fact = factorial(k);
            z *= BigUint::from(part).pow(k as u32) * &fact;
            u *= fact;
        }
        PartitionStats {
            length: self.len(),
            u,
            z,
        }
    }

    pub fn combine(&self, other: &Partition, mode: CombineMode) -> Partition {
        match mode {
            CombineMode::Union => {
                let mut parts = self.0.clone();
                parts.extend_from_slice(&other.0);
                Partition::from_unsorted(parts)
            }
            CombineMode::Sum => {
                let n = self.len().max(other.len());
                Partition((1..=n).map(|i| self.row(i) + other.row(i)).collect())
            }
        }
    }

    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// The rotated complement `(b − λ_h, …, b − λ_1)` of `λ` inside `(b^h)`.
    pub fn rotated_complement(&self, b: u32, h: usize) -> Result<Partition> {
        if self.first_part() > b || self.len() > h {
            return Err(Error::NotContained {
                inner: self.to_string(),
                outer: Partition::rectangle(b, h).to_string(),
            });
        }
        Ok(Partition::from_unsorted(
            (1..=h).rev().map(|i| b - self.row(i)).collect(),
        ))
    }

    /// All partitions contained in `self`, in reverse-lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            let hi = outer[i].min(cap);
            for v in (0..=hi).rev() {
                cur.push(v);
                if v == 0 {
                    // every later row is forced to zero
                    out.push(Partition::from_unsorted(cur.clone()));
                } else {
                    go(outer, i + 1, v, cur, out);
                }
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if self.is_empty() {
            out.push(Partition::empty());
            return out;
        }
        go(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            if self.0.is_empty() {
                "∅".to_string()
            } else {
                self.to_string()
            }
        )
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing positive integers; `""`, `"-"` and
    /// `"∅"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// Length, `u_λ = ∏ k_i!` and `z_λ = ∏ i^{k_i} k_i!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub length: usize,
    pub u: BigUint,
    pub z: BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Multiset union of parts.
    Union,
    /// Componentwise sum.
    Sum,
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n`, optionally bounded in length and largest part,
/// in reverse-lexicographic order.
pub fn enumerate_partitions(
    n: usize,
    max_len: Option<usize>,
    max_part: Option<u32>,
) -> Vec<Partition> {
    fn go(rem: u32, cap: u32, len_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            // the remaining rows cannot absorb more than p each
            if (p as u64) * (len_left as u64) < rem as u64 {
                break;
            }
            cur.push(p);
            go(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let cap = max_part.unwrap_or(n as u32);
    go(
        n as u32,
        cap,
        max_len.unwrap_or(n.max(1)),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

/// The skew diagram `outer/inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Boxes of `outer` not in `inner`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }

    /// Number of skew boxes per row, rows `1..=ℓ(outer)`.
    pub fn row_lengths(&self) -> Vec<u32> {
        (1..=self.outer.len())
            .map(|i| self.outer.row(i) - self.inner.row(i))
            .collect()
    }

    /// Number of skew boxes per column, columns `1..=outer_1`.
    pub fn col_lengths(&self) -> Vec<u32> {
        (1..=self.outer.first_part())
            .map(|j| (self.outer.col(j) - self.inner.col(j)) as u32)
            .collect()
    }

    /// At most one skew box in every column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.row(i + 1) <= self.inner.row(i))
    }

    /// The minimal skew shape with the same diagram up to deleting empty
    /// top rows and empty leftmost columns.
    pub fn translate_minimal(&self) -> SkewShape {
        let t = self.minimal_translation();
        SkewShape {
            outer: t.apply(&self.outer),
            inner: t.apply(&self.inner),
        }
    }

    /// Rows and columns removed by [`SkewShape::translate_minimal`].
    pub fn minimal_translation(&self) -> Translation {
        let rows = (1..=self.outer.len())
            .take_while(|&i| self.inner.row(i) == self.outer.row(i))
            .count();
        let cols = (1..=self.outer.first_part())
            .take_while(|&j| self.inner.col(j) == self.outer.col(j))
            .count() as u32;
        Translation { rows, cols }
    }

    /// The labelling of every column by `1, …, c_j` top-down; returns its
    /// weight `ν₀` together with the per-row rightmost labels `r_i` and the
    /// per-column counts `c_j`.
    pub fn max_filling(&self) -> MaxFilling {
        let col_count = self.col_lengths();
        let mut row_max = vec![0u32; self.outer.len()];
        let mut weight = vec![0u32; col_count.iter().copied().max().unwrap_or(0) as usize];
        for (jdx, &c) in col_count.iter().enumerate() {
            let j = jdx as u32 + 1;
            let top = self.inner.col(j);
            for label in 1..=c {
                let row = top + label as usize;
                row_max[row - 1] = row_max[row - 1].max(label);
                weight[label as usize - 1] += 1;
            }
        }
        MaxFilling {
            weight: Partition::new(weight).expect("column-wise labelling has partition weight"),
            row_max,
            col_count,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `"3,1/1"`; a bare partition is a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Deletion of `rows` top rows and `cols` leftmost columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Translation {
    pub rows: usize,
    pub cols: u32,
}

impl Translation {
    pub fn apply(&self, p: &Partition) -> Partition {
        Partition::from_unsorted(
            p.parts()
                .iter()
                .skip(self.rows)
                .map(|&x| x.saturating_sub(self.cols))
                .collect(),
        )
    }
}

/// Result of [`SkewShape::max_filling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFilling {
    /// `ν₀`.
    pub weight: Partition,
    /// `r_i` for rows `1..=ℓ(λ)`, zero for rows without skew boxes.
    pub row_max: Vec<u32>,
    /// `c_j` for columns `1..=λ_1`.
    pub col_count: Vec<u32>,
}

impl MaxFilling {
    /// `r_i`, 1-based, zero past the last row.
    pub fn r(&self, i: usize) -> u32 {
        self.row_max.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `c_j`, 1-based, zero past the last column.
    pub fn c(&self, j: u32) -> u32 {
        self.col_count
            .get((j as usize).wrapping_sub(1))
            .copied()
            .unwrap_or(0)
    }
}

/// A standard skew tableau as a chain `μ = λ⁽⁰⁾ ⊆ λ⁽¹⁾ ⊆ … ⊆ λ⁽ʳ⁾ = λ`
/// whose steps are horizontal strips.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chain {
    steps: Vec<Partition>,
}

impl Chain {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::MalformedChain(
                "a chain needs at least one partition".into(),
            ));
        }
        for w in steps.windows(2) {
            if !w[1].contains(&w[0]) {
                return Err(Error::MalformedChain(format!(
                    "{} is not contained in {}",
                    w[0], w[1]
                )));
            }
            let strip = SkewShape {
                outer: w[1].clone(),
                inner: w[0].clone(),
            };
            if !strip.is_horizontal_strip() {
                return Err(Error::MalformedChain(format!(
                    "{strip} is not a horizontal strip"
                )));
            }
        }
        Ok(Chain { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Partition>) -> Self {
        Chain { steps }
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.steps.last().expect("nonempty chain").clone(),
            inner: self.steps[0].clone(),
        }
    }

    /// Step sizes `|λ⁽ⁱ⁾| − |λ⁽ⁱ⁻¹⁾|`.
    pub fn weight(&self) -> Vec<u32> {
        self.steps
            .windows(2)
            .map(|w| (w[1].size() - w[0].size()) as u32)
            .collect()
    }

    /// The tableau obtained by rotating the diagram by π inside `(b^h)` and
    /// reversing the labels.
    pub fn rotate(&self, b: u32, h: usize) -> Result<Chain> {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|p| p.rotated_complement(b, h))
            .collect::<Result<Vec<_>>>()?;
        Ok(Chain { steps })
    }

    /// The same filling read on the translated diagram.
    pub fn translate(&self, t: Translation) -> Chain {
        Chain {
            steps: self.steps.iter().map(|p| t.apply(p)).collect(),
        }
    }
}

/// Calls `visit` with every chain from `shape.inner()` to `shape.outer()`
/// whose `i`-th step is a horizontal strip of exactly `steps[i]` boxes.
pub fn for_each_chain<F: FnMut(&[Partition])>(shape: &SkewShape, steps: &[u32], mut visit: F) {
    if steps.iter().map(|&s| s as usize).sum::<usize>() != shape.size() {
        return;
    }
    let outer = shape.outer.parts().to_vec();
    let mut path = vec![shape.inner.clone()];
    chain_rec(&outer, steps, &mut path, &mut visit);
}

fn chain_rec<F: FnMut(&[Partition])>(
    outer: &[u32],
    steps: &[u32],
    path: &mut Vec<Partition>,
    visit: &mut F,
) {
    let depth = path.len() - 1;
    if depth == steps.len() {
        visit(path);
        return;
    }
    let cur = path[depth].clone();
    let rows = outer.len();
    let lo: Vec<u32> = (1..=rows).map(|i| cur.row(i)).collect();
    let hi: Vec<u32> = (0..rows)
        .map(|i| {
            if i == 0 {
                outer[0]
            } else {
                outer[i].min(lo[i - 1])
            }
        })
        .collect();
    // suffix capacity for pruning
    let mut cap = vec![0u32; rows + 1];
    for i in (0..rows).rev() {
        cap[i] = cap[i + 1] + (hi[i] - lo[i]);
    }
    let mut next = lo.clone();
    strip_rec(
        0,
        steps[depth],
        &lo,
        &hi,
        &cap,
        &mut next,
        &mut |rows: &[u32]| {
            path.push(Partition::from_unsorted(rows.to_vec()));
            chain_rec(outer, steps, path, visit);
            path.pop();
        },
    );
}

/// Calls `emit` with every `κ ⊆ outer` such that `κ/cur` is a horizontal
/// strip of exactly `size` boxes.
pub(crate) fn for_each_strip<F: FnMut(Partition)>(
    cur: &Partition,
    outer: &Partition,
    size: u32,
    mut emit: F,
) {
    let rows = outer.len();
    let lo: Vec<u32> = (1..=rows).map(|i| cur.row(i)).collect();
    let hi: Vec<u32> = (0..rows)
        .map(|i| {
            if i == 0 {
                outer.parts()[0]
            } else {
                outer.parts()[i].min(lo[i - 1])
            }
        })
        .collect();
    let mut cap = vec![0u32; rows + 1];
    for i in (0..rows).rev() {
        cap[i] = cap[i + 1] + (hi[i] - lo[i]);
    }
    let mut next = lo.clone();
    strip_rec(0, size, &lo, &hi, &cap, &mut next, &mut |r: &[u32]| {
        emit(Partition::from_unsorted(r.to_vec()))
    });
}

fn strip_rec<F: FnMut(&[u32])>(
    i: usize,
    rem: u32,
    lo: &[u32],
    hi: &[u32],
    cap: &[u32],
    next: &mut Vec<u32>,
    emit: &mut F,
) {
    if rem == 0 {
        emit(next);
        return;
    }
    if i == lo.len() || cap[i] < rem {
        return;
    }
    for add in (0..=(hi[i] - lo[i]).min(rem)).rev() {
        next[i] = lo[i] + add;
        strip_rec(i + 1, rem - add, lo, hi, cap, next, emit);
    }
    next[i] = lo[i];
}

/// Standard skew tableaux of `shape` with content exactly `weight`
/// (no empty steps), as chains.
pub fn standard_chains(shape: &SkewShape, weight: &Partition) -> Result<Vec<Chain>> {
    if weight.size() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            actual: weight.size(),
        });
    }
    let mut out = Vec::new();
    for_each_chain(shape, weight.parts(), |steps| {
        out.push(Chain::from_steps_unchecked(steps.to_vec()))
    });
    Ok(out)
}

/// All skew shapes `λ/μ` with `|λ| ≤ n`, ordered by `|λ|`, then `λ`, then `μ`
/// (both reverse-lexicographic).
pub fn skew_shapes(n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in 0..=n {
        for outer in enumerate_partitions(size, None, None) {
            for inner in outer.subpartitions() {
                out.push(SkewShape {
                    outer: outer.clone(),
                    inner,
                });
            }
        }
    }
    out
}

/// A finite set of boxes in the positive quadrant.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Configuration {
    cells: BTreeSet<Cell>,
}

impl Configuration {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(Error::InvalidConfiguration(format!(
                    "box ({},{}) is not 1-based",
                    c.row, c.col
                )));
            }
            if !set.insert(c) {
                return Err(Error::InvalidConfiguration(format!(
                    "duplicate box ({},{})",
                    c.row, c.col
                )));
            }
        }
        Ok(Configuration { cells: set })
    }

    pub fn from_partition(p: &Partition) -> Self {
        Configuration {
            cells: p.cells().collect(),
        }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `ρ(C)`: row occupation counts, sorted.
    pub fn rho(&self) -> Partition {
        let mut counts = std::collections::BTreeMap::<u32, u32>::new();
        for c in &self.cells {
            *counts.entry(c.row).or_default() += 1;
        }
        Partition::from_unsorted(counts.into_values().collect())
    }

    /// `γ(C)`: column occupation counts, sorted.
    pub fn gamma(&self) -> Partition {
        let mut counts = std::collections::BTreeMap::<u32, u32>::new();
        for c in &self.cells {
            *counts.entry(c.col).or_default() += 1;
        }
        Partition::from_unsorted(counts.into_values().collect())
    }

    pub fn fits_in(&self, p: &Partition) -> bool {
        self.cells.iter().all(|c| p.contains_cell(*c))
    }

    /// Canonical representative of the class of `self` under independent
    /// row and column permutations: occupied rows and columns are compacted,
    /// and among all row orders (with columns sorted as bit-strings,
    /// descending) the lexicographically smallest 0/1 matrix is kept.
    pub fn canonical(&self) -> Configuration {
        if self.cells.is_empty() {
            return Configuration::default();
        }
        let rows: Vec<u32> = self
            .cells
            .iter()
            .map(|c| c.row)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let cols: Vec<u32> = self
            .cells
            .iter()
            .map(|c| c.col)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let (nr, nc) = (rows.len(), cols.len());
        let mut matrix = vec![vec![false; nc]; nr];
        for c in &self.cells {
            let i = rows.binary_search(&c.row).unwrap();
            let j = cols.binary_search(&c.col).unwrap();
            matrix[i][j] = true;
        }
        let mut best: Option<Vec<Vec<bool>>> = None;
        let mut perm: Vec<usize> = (0..nr).collect();
        permute_all(&mut perm, 0, &mut |order| {
            let mut columns: Vec<Vec<bool>> = (0..nc)
                .map(|j| order.iter().map(|&i| matrix[i][j]).collect())
                .collect();
            columns.sort_unstable_by(|a, b| b.cmp(a));
            let candidate: Vec<Vec<bool>> = (0..nr)
                .map(|i| columns.iter().map(|col| col[i]).collect())
                .collect();
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        });
        let best = best.expect("at least one row order");
        let mut cells = BTreeSet::new();
        for (i, row) in best.iter().enumerate() {
            for (j, &bit) in row.iter().enumerate() {
                if bit {
                    cells.insert(Cell::new(i as u32 + 1, j as u32 + 1));
                }
            }
        }
        Configuration { cells }
    }

    /// Configurations reachable by one move of kind (1) or (2): a box slides
    /// along its row (resp. column) and `γ` (resp. `ρ`) strictly decreases
    /// in dominance order.
    fn single_moves(&self) -> Vec<Configuration> {
        let mut out = Vec::new();
        let gamma = self.gamma();
        let rho = self.rho();
        let max_row = self.cells.iter().map(|c| c.row).max().unwrap_or(0);
        let max_col = self.cells.iter().map(|c| c.col).max().unwrap_or(0);
        for &cell in &self.cells {
            for col in 1..=max_col + 1 {
                let target = Cell::new(cell.row, col);
                if col == cell.col || self.cells.contains(&target) {
                    continue;
                }
                let moved = self.with_moved(cell, target);
                let g = moved.gamma();
                if g != gamma && gamma.dominates_unchecked(&g) {
                    out.push(moved);
                }
            }
            for row in 1..=max_row + 1 {
                let target = Cell::new(row, cell.col);
                if row == cell.row || self.cells.contains(&target) {
                    continue;
                }
                let moved = self.with_moved(cell, target);
                let r = moved.rho();
                if r != rho && rho.dominates_unchecked(&r) {
                    out.push(moved);
                }
            }
        }
        out
    }

    fn with_moved(&self, from: Cell, to: Cell) -> Configuration {
        let mut cells = self.cells.clone();
        cells.remove(&from);
        cells.insert(to);
        Configuration { cells }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", c.row, c.col)?;
        }
        f.write_str("}")
    }
}

fn permute_all<F: FnMut(&[usize])>(perm: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Canonical forms of every `μ`-admissible configuration class: the closure
/// of the diagram of `μ` under the four moves, computed on classes (moves
/// (3) and (4) are absorbed by canonicalization).
pub fn admissible_classes(mu: &Partition) -> BTreeSet<Configuration> {
    let start = Configuration::from_partition(mu).canonical();
    let mut seen: HashSet<Configuration> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(conf) = queue.pop_front() {
        for next in conf.single_moves() {
            let canon = next.canonical();
            if seen.insert(canon.clone()) {
                queue.push_back(canon);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every `μ`-admissible configuration whose boxes lie inside the diagram of
/// `bound`.
pub fn admissible_configs(mu: &Partition, bound: &Partition) -> BTreeSet<Configuration> {
    let classes = admissible_classes(mu);
    let mut out = BTreeSet::new();
    for_each_subconfiguration(bound, mu.size(), |conf| {
        if classes.contains(&conf.canonical()) {
            out.insert(conf.clone());
        }
    });
    out
}

/// Visits every `k`-element subset of the boxes of `p`.
pub fn for_each_subconfiguration<F: FnMut(&Configuration)>(p: &Partition, k: usize, mut f: F) {
    let cells: Vec<Cell> = p.cells().collect();
    if k > cells.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let conf = Configuration {
            cells: idx.iter().map(|&i| cells[i]).collect(),
        };
        f(&conf);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + cells.len() - k) else {
            return;
        };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// All distinct permutations of `v`, lexicographic from the sorted order.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// Independent count of partitions of n into parts ≤ k.
    fn count_partitions(n: u32, k: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        (0..=n / k)
            .map(|m| count_partitions(n - m * k, k - 1))
            .sum()
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(
            enumerate_partitions(0, None, None),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_partitions(3, None, None),
            vec![p("3"), p("2,1"), p("1,1,1")]
        );
        assert_eq!(enumerate_partitions(10, None, None).len(), 42);
        for n in 0..=12u32 {
            let all = enumerate_partitions(n as usize, None, None);
            assert_eq!(all.len() as u64, count_partitions(n, n));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "reverse-lex order");
        }
        let bounded = enumerate_partitions(6, Some(2), Some(4));
        assert_eq!(bounded, vec![p("4,2"), p("3,3")]);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        for n in 0..=8 {
            for lam in enumerate_partitions(n, None, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn dominance_examples_and_errors() {
        assert!(p("2").dominates(&p("1,1")).unwrap());
        assert!(!p("2,2").dominates(&p("3,1")).unwrap());
        assert!(p("3,1").dominates(&p("3,1")).unwrap());
        assert!(matches!(
            p("2").dominates(&p("1")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=7 {
            let all = enumerate_partitions(n, None, None);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if ab && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(p("3,1").arm_leg(Cell::new(1, 1)).unwrap(), (2, 1));
        assert_eq!(p("3,1").arm_leg(Cell::new(1, 3)).unwrap(), (0, 0));
        assert_eq!(p("2,2").arm_leg(Cell::new(1, 1)).unwrap(), (1, 1));
        assert!(matches!(
            p("3,1").arm_leg(Cell::new(2, 2)),
            Err(Error::OutsideShape { .. })
        ));
    }

    #[test]
    fn hooks_and_transposition() {
        for n in 0..=8 {
            for lam in enumerate_partitions(n, None, None) {
                let conj = lam.conjugate();
                let mut hook_sum = 0;
                for c in lam.cells() {
                    let (a, l) = lam.arm_leg(c).unwrap();
                    hook_sum += a + l + 1;
                    let (a2, l2) = conj.arm_leg(Cell::new(c.col, c.row)).unwrap();
                    assert_eq!((a, l), (l2, a2));
                }
                // Σ hooks = Σ_i (i-1)λ_i + Σ_j (j-1)λ'_j + |λ|
                let direct: u32 = lam
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| i as u32 * x)
                    .sum::<u32>()
                    + conj
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(j, &x)| j as u32 * x)
                        .sum::<u32>()
                    + n as u32;
                assert_eq!(hook_sum, direct);
            }
        }
    }

    #[test]
    fn combine_examples() {
        assert_eq!(p("2,1").combine(&p("2"), CombineMode::Union), p("2,2,1"));
        assert_eq!(p("2,1").combine(&p("2"), CombineMode::Sum), p("4,1"));
        for mode in [CombineMode::Union, CombineMode::Sum] {
            assert_eq!(p("3,1").combine(&Partition::empty(), mode), p("3,1"));
        }
    }

    #[test]
    fn stats_examples() {
        let s = p("2,2,1").stats();
        assert_eq!(
            (s.length, s.u.clone(), s.z.clone()),
            (3, 2u32.into(), 8u32.into())
        );
        // z by the direct product (1^1 2^2)(1! 2!)
        assert_eq!(s.z, BigUint::from(8u32));
        let s = p("1,1").stats();
        assert_eq!((s.length, s.u, s.z), (2, 2u32.into(), 2u32.into()));
        let s = Partition::empty().stats();
        assert_eq!((s.length, s.u, s.z), (0, 1u32.into(), 1u32.into()));
    }

    #[test]
    fn horizontal_strips() {
        assert!(sk("2,1/1").is_horizontal_strip());
        assert!(!sk("1,1").is_horizontal_strip());
        assert!(sk("3,1/3,1").is_horizontal_strip());
        assert!(sk("3,1/1").is_horizontal_strip());
        assert!(!sk("2,2/1").is_horizontal_strip());
    }

    #[test]
    fn rotated_complement_examples() {
        assert_eq!(p("2,1").rotated_complement(2, 2).unwrap(), p("1"));
        assert_eq!(
            Partition::empty().rotated_complement(2, 2).unwrap(),
            p("2,2")
        );
        let hat = p("3,1").rotated_complement(3, 2).unwrap();
        assert_eq!(hat, p("2"));
        assert_eq!(hat.rotated_complement(3, 2).unwrap(), p("3,1"));
        assert!(p("3").rotated_complement(2, 2).is_err());
        assert!(p("1,1,1").rotated_complement(2, 2).is_err());
    }

    #[test]
    fn rotated_complement_involution_and_order_reversal() {
        for area in 1..=9u32 {
            for b in 1..=area {
                if area % b != 0 {
                    continue;
                }
                let h = (area / b) as usize;
                let beta = Partition::rectangle(b, h);
                let subs = beta.subpartitions();
                for lam in &subs {
                    let hat = lam.rotated_complement(b, h).unwrap();
                    assert_eq!(hat.rotated_complement(b, h).unwrap(), *lam);
                    assert_eq!(hat.size() + lam.size(), area as usize);
                    for mu in &subs {
                        if lam.contains(mu) {
                            assert!(mu.rotated_complement(b, h).unwrap().contains(&hat));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn translate_minimal_examples() {
        assert_eq!(sk("2,2,1/2,1").translate_minimal(), sk("2,1/1"));
        assert_eq!(sk("2/1").translate_minimal(), sk("1"));
        assert_eq!(sk("3,1/1").translate_minimal(), sk("3,1/1"));
        // the figure's example: 7,6,6,4,3,3,2,2,1 / 7,6,3,3,3,3,1,1,1
        let big = sk("7,6,6,4,3,3,2,2,1/7,6,3,3,3,3,1,1,1");
        assert_eq!(big.translate_minimal(), sk("5,3,2,2,1,1/2,2,2,2"));
    }

    #[test]
    fn translate_minimal_idempotent_and_preserves_lengths() {
        for shape in skew_shapes(7) {
            let t = shape.translate_minimal();
            assert_eq!(t.translate_minimal(), t);
            let nonzero = |v: Vec<u32>| {
                let mut v: Vec<u32> = v.into_iter().filter(|&x| x > 0).collect();
                v.sort_unstable();
                v
            };
            assert_eq!(
                nonzero(t.row_lengths()),
                nonzero(shape.row_lengths()),
                "{shape}"
            );
            assert_eq!(
                nonzero(t.col_lengths()),
                nonzero(shape.col_lengths()),
                "{shape}"
            );
            assert_eq!(t.size(), shape.size());
        }
    }

    #[test]
    fn chain_examples() {
        let chains = standard_chains(&sk("2/1"), &p("1")).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].steps(), &[p("1"), p("2")]);
        assert!(standard_chains(&sk("1,1"), &p("2")).unwrap().is_empty());
        assert_eq!(standard_chains(&sk("2,1"), &p("1,1,1")).unwrap().len(), 2);
        assert!(matches!(
            standard_chains(&sk("2,1"), &p("2")),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(Chain::new(vec![Partition::empty(), p("1,1")]).is_err());
        assert!(Chain::new(vec![p("2"), p("1")]).is_err());
    }

    /// Brute force: count standard Young tableaux by trying every bijective
    /// filling with 1..n and checking rows and columns increase.
    fn brute_force_syt(lam: &Partition) -> usize {
        let cells: Vec<Cell> = lam.cells().collect();
        let n = cells.len();
        let mut count = 0;
        let mut perm = (1..=n).collect::<Vec<_>>();
        permute_all(&mut perm, 0, &mut |order| {
            let label = |c: Cell| order[cells.iter().position(|&d| d == c).unwrap()];
            let ok = cells.iter().all(|&c| {
                let right = Cell::new(c.row, c.col + 1);
                let below = Cell::new(c.row + 1, c.col);
                (!lam.contains_cell(right) || label(right) > label(c))
                    && (!lam.contains_cell(below) || label(below) > label(c))
            });
            if ok {
                count += 1;
            }
        });
        count
    }

    #[test]
    fn standard_chains_count_standard_young_tableaux() {
        for n in 0..=6 {
            for lam in enumerate_partitions(n, None, None) {
                let chains =
                    standard_chains(&SkewShape::straight(lam.clone()), &Partition::column(n))
                        .unwrap();
                assert_eq!(chains.len(), brute_force_syt(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn max_filling_examples() {
        let f = sk("2/1").max_filling();
        assert_eq!(
            (f.weight.clone(), f.col_count.clone(), f.row_max.clone()),
            (p("1"), vec![0, 1], vec![1])
        );
        let f = sk("2,2/1").max_filling();
        assert_eq!(
            (f.weight.clone(), f.col_count.clone(), f.row_max.clone()),
            (p("2,1"), vec![1, 2], vec![1, 2])
        );
        let f = sk("3,1/3,1").max_filling();
        assert_eq!(f.weight, Partition::empty());
    }

    #[test]
    fn canonical_examples() {
        let c = Configuration::new([Cell::new(3, 1)]).unwrap();
        assert_eq!(
            c.canonical(),
            Configuration::new([Cell::new(1, 1)]).unwrap()
        );
        let a = Configuration::new([Cell::new(1, 1), Cell::new(2, 2)]).unwrap();
        let b = Configuration::new([Cell::new(2, 1), Cell::new(1, 2)]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        let row = Configuration::new([Cell::new(1, 1), Cell::new(1, 2)]).unwrap();
        let col = Configuration::new([Cell::new(1, 1), Cell::new(2, 1)]).unwrap();
        assert_ne!(row.canonical(), col.canonical());
        assert!(Configuration::new([Cell::new(0, 1)]).is_err());
        assert!(Configuration::new([Cell::new(1, 1), Cell::new(1, 1)]).is_err());
    }

    #[test]
    fn admissible_config_examples() {
        let got = admissible_configs(&p("1"), &p("2"));
        let want: BTreeSet<Configuration> = [
            Configuration::new([Cell::new(1, 1)]).unwrap(),
            Configuration::new([Cell::new(1, 2)]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let got = admissible_configs(&p("2"), &p("2,2"));
        let horizontal = [
            Configuration::new([Cell::new(1, 1), Cell::new(1, 2)]).unwrap(),
            Configuration::new([Cell::new(2, 1), Cell::new(2, 2)]).unwrap(),
        ];
        let scattered = [
            Configuration::new([Cell::new(1, 1), Cell::new(2, 2)]).unwrap(),
            Configuration::new([Cell::new(1, 2), Cell::new(2, 1)]).unwrap(),
        ];
        let want: BTreeSet<Configuration> = horizontal.into_iter().chain(scattered).collect();
        assert_eq!(got, want);
        let classes = admissible_classes(&p("2"));
        assert_eq!(classes.len(), 2);

        let empty = admissible_configs(&Partition::empty(), &p("3,1"));
        assert_eq!(
            empty.into_iter().collect::<Vec<_>>(),
            vec![Configuration::default()]
        );
    }

    #[test]
    fn admissible_configurations_have_mu_boxes() {
        for n in 0..=4 {
            for mu in enumerate_partitions(n, None, None) {
                for conf in admissible_configs(&mu, &p("4,4,3,2")) {
                    assert_eq!(conf.len(), n);
                }
                for class in admissible_classes(&mu) {
                    assert_eq!(class.canonical(), class);
                }
            }
        }
    }

    #[test]
    fn subconfiguration_counts() {
        let mut count = 0;
        for_each_subconfiguration(&p("3,2"), 2, |_| count += 1);
        assert_eq!(count, 10);
        count = 0;
        for_each_subconfiguration(&p("3,2"), 0, |_| count += 1);
        assert_eq!(count, 1);
        count = 0;
        for_each_subconfiguration(&p("3,2"), 5, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,1").to_string(), "3,1");
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1/2".parse::<SkewShape>().is_err());
        assert_eq!(sk("3,1/1").to_string(), "3,1/1");
    }

    #[test]
    fn distinct_permutations_counts() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn config_strategy() -> impl Strategy<Value = Vec<(u32, u32)>> {
            prop::collection::btree_set((1u32..=5, 1u32..=5), 0..=6)
                .prop_map(|s| s.into_iter().collect())
        }

        proptest! {
            #[test]
            fn canonical_is_invariant_under_row_and_column_permutations(
                cells in config_strategy(),
                row_perm in Just((1u32..=5).collect::<Vec<_>>()).prop_shuffle(),
                col_perm in Just((1u32..=5).collect::<Vec<_>>()).prop_shuffle(),
            ) {
                let conf = Configuration::new(cells.iter().map(|&(r, c)| Cell::new(r, c))).unwrap();
                let moved = Configuration::new(cells.iter().map(|&(r, c)| {
                    Cell::new(row_perm[r as usize - 1], col_perm[c as usize - 1])
                })).unwrap();
                prop_assert_eq!(conf.canonical(), moved.canonical());
                prop_assert_eq!(conf.canonical().rho(), conf.rho());
                prop_assert_eq!(conf.canonical().gamma(), conf.gamma());
            }
        }
    }
}

//! Bounded sweeps over the open conjectures. A conjecture failing on some
//! input is a finding; only a hard assertion or a proven subcase failing is
//! a failure.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use num_integer::Integer;
use serde::Serialize;

use super::lowest::{lowest_family, solve_lowest, PiTable};
use super::report::{run_cases, Acc, SuiteKind};
use super::suites::triples;
use super::Report;
use crate::error::Result;
use crate::exactalg::{rat, AlphaPoly, LinearFactorization, Rational};
use crate::jack::{
    c_factor, c_prime_factor, lr_coeff, prv_formula, prv_nu, prv_sigmas, tilde_v,
    top_component_formula, JackStore,
};
use crate::partitions::{enumerate_partitions, skew_shapes, CombineMode, Partition, SkewShape};

fn store() -> &'static JackStore {
    JackStore::global()
}

/// Every coefficient `ṽ_{λ/μ,ν}` is a polynomial with nonnegative integer
/// coefficients.
pub fn conjecture_main(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&skew_shapes(n), |shape, acc| {
        acc.case();
        for nu in enumerate_partitions(shape.size(), None, None) {
            acc.stat("coefficients", 1);
            match tilde_v(shape, &nu) {
                Ok(v) => {
                    let ok = v.to_poly().is_some_and(|p| p.nonneg_int_test());
                    if !ok {
                        acc.find(
                            format!("λ/μ={shape} ν={nu}"),
                            &v,
                            "nonnegative integer polynomial",
                            "ṽ",
                        );
                    }
                }
                Err(e) => acc.fail(format!("λ/μ={shape} ν={nu}"), e, "", "ṽ"),
            }
        }
    });
    acc.finish("main", SuiteKind::Conjecture, n, start)
}

/// g has integer coefficients (asserted) and nonnegative ones (swept).
/// Also tallies how often `c^λ_{μ,ν} ≠ 0` and `g ≠ 0` disagree.
pub fn conjecture_stanley(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&triples(n), |(lam, mu, nu), acc| {
        acc.case();
        let input = || format!("λ={lam} μ={mu} ν={nu}");
        let g = match store().g(lam, mu, nu) {
            Ok(g) => g,
            Err(e) => return acc.fail(input(), e, "", "integrality"),
        };
        if !g.nonneg_int_test() {
            acc.find(input(), &g, "nonnegative coefficients", "g");
        }
        let lr = match lr_coeff(lam, mu, nu) {
            Ok(lr) => lr,
            Err(e) => return acc.fail(input(), e, "", "Littlewood–Richardson integrality"),
        };
        acc.stat(if g.is_zero() { "g_zero" } else { "g_nonzero" }, 1);
        if (lr == 0) != g.is_zero() {
            acc.stat(
                if lr == 0 {
                    "lr_zero_g_nonzero"
                } else {
                    "lr_nonzero_g_zero"
                },
                1,
            );
        }
    });
    acc.finish("stanley", SuiteKind::Conjecture, n, start)
}

/// A choice of `c` or `c'` for every box, matching a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assignment {
    /// `true` where `c'` was chosen.
    pub primed: Vec<bool>,
    pub factorization: LinearFactorization,
}

/// `aα + b` as (integer content, primitive factor or `None` for a constant).
fn split_linear((a, b): (i64, i64)) -> (i64, Option<(i64, i64)>) {
    if a == 0 {
        return (b, None);
    }
    let g = a.gcd(&b);
    (g, Some((a / g, b / g)))
}

struct Search {
    options: Vec<[(i64, Option<usize>); 2]>,
    failed: HashSet<(usize, Vec<u32>, Option<usize>, String)>,
}

impl Search {
    fn run(
        &mut self,
        i: usize,
        counts: &mut Vec<u32>,
        unit: Rational,
        c_left: Option<usize>,
        picks: &mut Vec<bool>,
    ) -> bool {
        let left = self.options.len() - i;
        if counts.iter().sum::<u32>() as usize > left || c_left.is_some_and(|c| c > left) {
            return false;
        }
        if i == self.options.len() {
            return unit == rat(1) && c_left.unwrap_or(0) == 0;
        }
        let key = (i, counts.clone(), c_left, unit.to_string());
        if self.failed.contains(&key) {
            return false;
        }
        let opts = self.options[i];
        for (k, &(content, prim)) in opts.iter().enumerate() {
            let primed = k == 1;
            let c_next = match c_left {
                Some(c) if !primed => match c.checked_sub(1) {
                    Some(c) => Some(c),
                    None => continue,
                },
                other => other,
            };
            if let Some(f) = prim {
                if counts[f] == 0 {
                    continue;
                }
                counts[f] -= 1;
            }
            picks.push(primed);
            let ok = self.run(i + 1, counts, &unit / rat(content), c_next, picks);
            if ok {
                return true;
            }
            picks.pop();
            if let Some(f) = prim {
                counts[f] += 1;
            }
        }
        self.failed.insert(key);
        false
    }
}

/// The factors `(a, b)` meaning `aα + b` offered by one box: `(c, c')`.
pub type BoxOptions = ((i64, i64), (i64, i64));

/// Searches for a choice between the two linear factors offered by each
/// box whose product is `target`, using the unprimed option exactly
/// `unprimed` times when given. `Ok(None)` if `target` is not a product of
/// linear factors or no choice works.
pub fn factor_assignment(
    target: &AlphaPoly,
    options: &[BoxOptions],
    unprimed: Option<usize>,
) -> Result<Option<Assignment>> {
    let Some(fact) = target.linear_factorize()? else {
        return Ok(None);
    };
    let index: HashMap<(i64, i64), usize> = fact
        .factors
        .iter()
        .enumerate()
        .map(|(i, &(a, b, _))| ((a, b), i))
        .collect();
    let mut opts = Vec::with_capacity(options.len());
    for &(c, cp) in options {
        let mut pair = [(0i64, None), (0i64, None)];
        for (slot, f) in pair.iter_mut().zip([c, cp]) {
            let (content, prim) = split_linear(f);
            let idx = match prim {
                None => None,
                Some(p) => match index.get(&p) {
                    Some(&i) => Some(i),
                    // a factor absent from the target can never be chosen
                    None => Some(usize::MAX),
                },
            };
            *slot = (content, idx);
        }
        opts.push(pair);
    }
    let mut counts: Vec<u32> = fact.factors.iter().map(|&(_, _, m)| m).collect();
    counts.push(0);
    for pair in opts.iter_mut() {
        for slot in pair.iter_mut() {
            if slot.1 == Some(usize::MAX) {
                slot.1 = Some(counts.len() - 1);
            }
        }
    }
    let mut search = Search {
        options: opts,
        failed: HashSet::new(),
    };
    let mut picks = Vec::new();
    if search.run(0, &mut counts, fact.unit.clone(), unprimed, &mut picks) {
        Ok(Some(Assignment {
            primed: picks,
            factorization: fact,
        }))
    } else {
        Ok(None)
    }
}

fn box_options(parts: &[&Partition]) -> Vec<((i64, i64), (i64, i64))> {
    parts
        .iter()
        .flat_map(|p| {
            p.cells()
                .map(move |s| (c_factor(p, s), c_prime_factor(p, s)))
        })
        .collect()
}

/// Conjecture on g-polynomials with Littlewood–Richardson coefficient one,
/// plus the two proven families inside it.
pub fn conjecture_linear_factors(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&triples(n), |(lam, mu, nu), acc| {
        let input = || format!("λ={lam} μ={mu} ν={nu}");
        let lr = match lr_coeff(lam, mu, nu) {
            Ok(x) => x,
            Err(e) => return acc.fail(input(), e, "", "Littlewood–Richardson integrality"),
        };
        if lr != 1 {
            return;
        }
        acc.case();
        let g = match store().g(lam, mu, nu) {
            Ok(g) => g,
            Err(e) => return acc.fail(input(), e, "", "integrality"),
        };
        let options = box_options(&[lam, mu, nu]);
        match factor_assignment(&g, &options, Some(lam.size())) {
            Ok(Some(_)) => {
                acc.stat("factorized", 1);
                acc.stat("assigned", 1);
            }
            Ok(None) => match g.linear_factorize() {
                Ok(Some(f)) => {
                    acc.stat("factorized", 1);
                    let free = factor_assignment(&g, &options, None).ok().flatten();
                    let note = if free.is_some() {
                        "assignment exists only without the |λ|/|λ| count"
                    } else {
                        "no c/c' assignment"
                    };
                    acc.find(input(), f, "c/c' assignment", note);
                }
                Ok(None) => acc.find(input(), &g, "product of linear factors", "factorization"),
                Err(e) => acc.fail(input(), e, "", "factorization"),
            },
            Err(e) => acc.fail(input(), e, "", "factorization"),
        }
        // proven subcases, in both roles of μ and ν
        for (a, b) in [(mu, nu), (nu, mu)] {
            let shape = SkewShape::new(lam.clone(), a.clone()).expect("μ ⊆ λ when g ≠ 0");
            let (top, closed) = top_component_formula(&shape);
            if top == *b {
                acc.stat("top_component", 1);
                acc.check(input, &g, &closed, "top component closed form");
            }
            for sigma in prv_sigmas(lam, a) {
                if prv_nu(lam, a, &sigma).ok().as_ref() == Some(b) {
                    acc.stat("prv", 1);
                    match prv_formula(lam, a, &sigma) {
                        Ok(closed) => {
                            acc.check(
                                || format!("{} σ={sigma:?}", input()),
                                &g,
                                &closed,
                                "λ = μ + σ(ν) closed form",
                            );
                        }
                        Err(e) => acc.fail(input(), e, "", "prv"),
                    }
                }
            }
        }
    });
    acc.finish("linear-factors", SuiteKind::Conjecture, n, start)
}

/// `λ ⊇ μ = (b^h)` with `λ/μ` split into `φ` (right of `μ`) and `ψ`
/// (below `μ`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioCase {
    pub lambda: Partition,
    pub mu: Partition,
    pub phi: Partition,
    pub psi: Partition,
}

impl fmt::Display for RatioCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ={} μ={} φ={} ψ={}",
            self.lambda, self.mu, self.phi, self.psi
        )
    }
}

/// Every eligible `(λ, μ)` with `|λ| ≤ n`: `μ = (b^h) ⊆ λ`,
/// `λ_{h+1} ≤ b`, and both components nonempty.
pub fn ratio_cases(n: usize) -> Vec<RatioCase> {
    let mut out = Vec::new();
    for size in 1..=n {
        for lam in enumerate_partitions(size, None, None) {
            for h in 1..lam.len() {
                for b in 1..lam.row(1) {
                    if lam.row(h) < b || lam.row(h + 1) > b {
                        continue;
                    }
                    let phi = Partition::from_unsorted((1..=h).map(|i| lam.row(i) - b).collect());
                    let psi =
                        Partition::new(lam.parts()[h..].to_vec()).expect("tail of a partition");
                    out.push(RatioCase {
                        lambda: lam.clone(),
                        mu: Partition::rectangle(b, h),
                        phi,
                        psi,
                    });
                }
            }
        }
    }
    out
}

/// `None` if the ratio conjecture holds at `ν`, else `(lhs, rhs, note)`.
pub(crate) fn check_ratio(case: &RatioCase, nu: &Partition) -> Option<(String, String, String)> {
    let err = |e: crate::Error| Some((e.to_string(), String::new(), "g".to_string()));
    let top = match store().g(&case.lambda, &case.mu, nu) {
        Ok(g) => g,
        Err(e) => return err(e),
    };
    let bottom = match store().g(nu, &case.phi, &case.psi) {
        Ok(g) => g,
        Err(e) => return err(e),
    };
    if bottom.is_zero() {
        return Some((top.to_string(), "0".into(), "g^ν_{φ,ψ} vanishes".into()));
    }
    let q = match top.div_exact(&bottom) {
        Ok(q) => q,
        Err(_) => {
            return Some((
                top.to_string(),
                bottom.to_string(),
                "g^ν_{φ,ψ} does not divide".into(),
            ))
        }
    };
    let options: Vec<_> = case
        .mu
        .cells()
        .flat_map(|s| {
            [
                (c_factor(&case.lambda, s), c_prime_factor(&case.lambda, s)),
                (c_factor(&case.mu, s), c_prime_factor(&case.mu, s)),
            ]
        })
        .collect();
    match factor_assignment(&q, &options, Some(case.mu.size())) {
        Ok(Some(_)) => None,
        Ok(None) => {
            let note = match q.linear_factorize() {
                Ok(Some(_)) => "no c/c' assignment over the boxes of μ",
                _ => "quotient is not a product of linear factors",
            };
            Some((q.to_string(), "∏_{s∈μ} c*_λ c*_μ".into(), note.into()))
        }
        Err(e) => err(e),
    }
}

pub fn conjecture_ratio(n: usize) -> Report {
    let start = Instant::now();
    let cases = ratio_cases(n);
    let acc = run_cases(&cases, |case, acc| {
        let proven = [
            case.phi.combine(&case.psi, CombineMode::Sum),
            case.phi.combine(&case.psi, CombineMode::Union),
        ];
        let size = case.lambda.size() - case.mu.size();
        for nu in enumerate_partitions(size, None, None) {
            match lr_coeff(&case.lambda, &case.mu, &nu) {
                Ok(1) => {}
                Ok(_) => continue,
                Err(e) => {
                    acc.fail(
                        format!("{case} ν={nu}"),
                        e,
                        "",
                        "Littlewood–Richardson integrality",
                    );
                    continue;
                }
            }
            acc.case();
            let is_proven = proven.contains(&nu);
            acc.stat(
                if is_proven {
                    "proven_cases"
                } else {
                    "open_cases"
                },
                1,
            );
            if let Some((l, r, note)) = check_ratio(case, &nu) {
                if is_proven {
                    acc.fail(format!("{case} ν={nu}"), l, r, &note);
                } else {
                    acc.find(format!("{case} ν={nu}"), l, r, &note);
                }
            }
        }
    });
    acc.finish("ratio", SuiteKind::Conjecture, n, start)
}

/// Solves for the `π_{(μ,C)}` on every `λ ⊇ μ` with `|λ| ≤ n` and checks
/// the result on every `λ ⊇ μ` with `|λ| = n + 1`.
pub fn conjecture_lowest(mu: &Partition, n: usize) -> (Report, PiTable) {
    let start = Instant::now();
    let family = lowest_family(mu, n);
    let held_out: Vec<Partition> = lowest_family(mu, n + 1)
        .into_iter()
        .filter(|l| l.size() == n + 1)
        .collect();
    let table = solve_lowest(mu, &family, &held_out);
    let mut acc = Acc {
        cases: (family.len() + held_out.len()) as u64,
        ..Acc::default()
    };
    let tag = format!("μ={mu} |λ|≤{n}");
    if !table.consistent {
        acc.find(tag.clone(), "inconsistent", "consistent", "linear system");
    }
    if !table.unique {
        acc.find(
            tag.clone(),
            format!("rank {}", table.rank),
            format!("{} classes", table.classes.len()),
            "uniqueness",
        );
    }
    if !table.monotone {
        acc.find(
            tag.clone(),
            "changed",
            "unchanged",
            "adding the last λ changed a determined π",
        );
    }
    for c in &table.classes {
        if let Some(pi) = &c.pi {
            if !c.nonneg_integral {
                acc.find(
                    format!("μ={mu} C={}", c.cells),
                    pi,
                    "nonnegative integer polynomial",
                    "π",
                );
            }
        }
    }
    for r in &table.residuals {
        if r.residual.as_deref() != Some("0") {
            acc.find(
                format!("μ={mu} λ={}", r.lambda),
                r.residual.as_deref().unwrap_or("undetermined"),
                "0",
                "held-out residual",
            );
        }
    }
    acc.stat("classes", table.classes.len() as u64);
    acc.stat("family", family.len() as u64);
    acc.stat("held_out", held_out.len() as u64);
    let mut report = acc.finish("lowest", SuiteKind::Conjecture, n, start);
    report.params.insert("mu".into(), mu.to_string());
    report.details = serde_json::to_value(&table).expect("table serializes");
    (report, table)
}

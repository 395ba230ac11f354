//! Suites over proven statements. Every one of them must report zero
//! failures.

use std::time::Instant;

use super::report::{run_cases, Acc, SuiteKind};
use super::Report;
use crate::exactalg::{biguint_to_rational, rat, AlphaPoly, AlphaRat, LinearProduct};
use crate::jack::{
    c_lp, c_prime_lp, hook_products, j_lp, jack_gs, leading_formula, mixed_lp, prv_formula, prv_nu,
    prv_sigmas, skew_def, top_component_formula, w_weight_lp, JackStore,
};
use crate::partitions::{
    enumerate_partitions, factorial, for_each_chain, skew_shapes, Chain, CombineMode, Partition,
    SkewShape,
};
use crate::symfunc::{omega, MultiPoly, SymFuncM};

fn store() -> &'static JackStore {
    JackStore::global()
}

fn lp(x: &LinearProduct) -> AlphaRat {
    x.to_alpha_rat()
}

/// All partitions of every size `0..=n`.
fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n)
        .flat_map(|k| enumerate_partitions(k, None, None))
        .collect()
}

/// Compares two expansions coefficientwise, recording the first
/// mismatching partition.
fn compare(acc: &mut Acc, input: &str, lhs: &SymFuncM, rhs: &SymFuncM, note: &str) -> bool {
    if lhs == rhs {
        return true;
    }
    let mut keys: Vec<&Partition> = lhs
        .terms()
        .map(|(k, _)| k)
        .chain(rhs.terms().map(|(k, _)| k))
        .collect();
    keys.sort_by(|a, b| b.cmp(a));
    let bad = keys
        .into_iter()
        .find(|k| lhs.coeff(k) != rhs.coeff(k))
        .cloned()
        .unwrap_or_default();
    acc.fail(
        format!("{input} ν={bad}"),
        lhs.coeff(&bad),
        rhs.coeff(&bad),
        note,
    );
    false
}

/// Every standard tableau of `shape` whose content is a partition.
fn for_each_tableau<F: FnMut(Chain)>(shape: &SkewShape, mut f: F) {
    for nu in enumerate_partitions(shape.size(), None, None) {
        for_each_chain(shape, nu.parts(), |steps| {
            f(Chain::new(steps.to_vec()).expect("chain of strips"))
        });
    }
}

pub fn suite_translation(n: usize) -> Report {
    let start = Instant::now();
    let shapes = skew_shapes(n);
    let acc = run_cases(&shapes, |shape, acc| {
        acc.case();
        let (lam, mu) = (shape.outer(), shape.inner());
        let t = shape.minimal_translation();
        let tilde = shape.translate_minimal();
        let (lt, mt) = (tilde.outer(), tilde.inner());
        let left = mixed_lp(mu, lam);
        let right = mixed_lp(mt, lt);
        let input = format!("λ/μ={shape} λ̃/μ̃={tilde}");
        let j = store().skew(shape);
        let jt = store().skew(&tilde);
        compare(
            acc,
            &input,
            &jt.scale(&lp(&left)),
            &j.scale(&lp(&right)),
            "translation theorem",
        );
        let mut tableaux = 0;
        for_each_tableau(shape, |chain| {
            tableaux += 1;
            let moved = chain.translate(t);
            let mut a = left.clone();
            a.mul(&w_weight_lp(&moved));
            let mut b = right.clone();
            b.mul(&w_weight_lp(&chain));
            if a != b {
                acc.fail(
                    format!("{input} T={:?}", chain.steps()),
                    lp(&a),
                    lp(&b),
                    "translation, per tableau",
                );
            }
        });
        acc.stat("tableaux", tableaux);
        if mt.is_empty() {
            acc.stat("corollary", 1);
            compare(
                acc,
                &input,
                &j,
                &store().jack(lt).scale(&lp(&left)),
                "translation corollary",
            );
            let mut closed = left.clone();
            closed.mul(&j_lp(lt));
            match store().g(lam, mu, lt) {
                Ok(g) => {
                    acc.check(
                        || format!("g λ={lam} μ={mu} ν={lt}"),
                        &AlphaRat::from(g),
                        &lp(&closed),
                        "translation corollary g",
                    );
                }
                Err(e) => acc.fail(input.clone(), e, "", "g"),
            }
        }
    });
    acc.finish("translation", SuiteKind::Theorem, n, start)
}

/// Rotation identities for all `μ ⊆ λ ⊆ (b^h)` with `bh ≤ area`.
pub fn suite_rotation(area: usize) -> Report {
    let start = Instant::now();
    let mut cases = Vec::new();
    for b in 1..=area as u32 {
        for h in 1..=area / b as usize {
            let beta = Partition::rectangle(b, h);
            for lam in beta.subpartitions() {
                for mu in lam.subpartitions() {
                    cases.push((b, h, lam.clone(), mu));
                }
            }
        }
    }
    let acc = run_cases(&cases, |(b, h, lam, mu), acc| {
        acc.case();
        let (b, h) = (*b, *h);
        let lam_hat = lam.rotated_complement(b, h).expect("inside the rectangle");
        let mu_hat = mu.rotated_complement(b, h).expect("inside the rectangle");
        let shape = SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ");
        let rotated = SkewShape::new(mu_hat.clone(), lam_hat.clone()).expect("λ̂ ⊆ μ̂");
        let input = format!("β=({b}^{h}) λ={lam} μ={mu}");
        let left = mixed_lp(mu, lam);
        let right = mixed_lp(&lam_hat, &mu_hat);
        let j = store().skew(&shape);
        let jr = store().skew(&rotated);
        compare(
            acc,
            &input,
            &jr.scale(&lp(&left)),
            &j.scale(&lp(&right)),
            "rotation theorem",
        );
        let mut tableaux = 0;
        for_each_tableau(&shape, |chain| {
            tableaux += 1;
            let turned = chain.rotate(b, h).expect("inside the rectangle");
            let mut x = left.clone();
            x.mul(&w_weight_lp(&turned));
            let mut y = right.clone();
            y.mul(&w_weight_lp(&chain));
            if x != y {
                acc.fail(
                    format!("{input} T={:?}", chain.steps()),
                    lp(&x),
                    lp(&y),
                    "rotation, per tableau",
                );
            }
        });
        acc.stat("tableaux", tableaux);
        if lam.is_rectangular() || lam.is_empty() {
            if lam.is_empty() {
                return;
            }
            acc.stat("corollary", 1);
            // complement of μ inside λ itself
            let mu_c = mu
                .rotated_complement(lam.first_part(), lam.len())
                .expect("μ ⊆ λ");
            let c1 = mixed_lp(mu, lam);
            compare(
                acc,
                &input,
                &j,
                &store().jack(&mu_c).scale(&lp(&c1)),
                "rotation corollary",
            );
            let mut g1 = c1;
            g1.mul(&j_lp(&mu_c));
            let mut g2 = mixed_lp(&mu_c, lam);
            g2.mul(&j_lp(mu));
            acc.check(
                || format!("{input} closed forms"),
                &lp(&g1),
                &lp(&g2),
                "rotation corollary, two closed forms",
            );
            match store().g(lam, mu, &mu_c) {
                Ok(g) => {
                    acc.check(
                        || format!("g λ={lam} μ={mu} ν={mu_c}"),
                        &AlphaRat::from(g),
                        &lp(&g1),
                        "rotation corollary g",
                    );
                }
                Err(e) => acc.fail(input.clone(), e, "", "g"),
            }
        }
    });
    acc.finish("rotation", SuiteKind::Theorem, area, start)
}

/// `α^k p(1/α)` as a rational function.
fn alpha_dual(p: &AlphaPoly, k: usize) -> AlphaRat {
    if p.is_zero() {
        return AlphaRat::zero();
    }
    let (q, shift) = p.invert_alpha();
    if k >= shift {
        AlphaRat::from(q.shift(k - shift))
    } else {
        AlphaRat::new(q, AlphaPoly::monomial(rat(1), shift - k)).expect("nonzero")
    }
}

/// Every `(λ, μ, ν)` with `|λ| ≤ n`, `|μ| + |ν| = |λ|` and `μ ≤ ν` in the
/// total order on partitions (g is symmetric in `μ, ν`).
pub(crate) fn triples(n: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for size in 0..=n {
        for lam in enumerate_partitions(size, None, None) {
            for k in 0..=size {
                for mu in enumerate_partitions(k, None, None) {
                    for nu in enumerate_partitions(size - k, None, None) {
                        if mu <= nu {
                            out.push((lam.clone(), mu.clone(), nu));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn suite_duality(n: usize) -> Report {
    let start = Instant::now();
    let shapes = skew_shapes(n);
    let theta = AlphaRat::new(AlphaPoly::int(-1), AlphaPoly::alpha()).expect("nonzero");
    let mut acc = run_cases(&shapes, |shape, acc| {
        acc.case();
        let (lam, mu) = (shape.outer(), shape.inner());
        let conj = SkewShape::new(lam.conjugate(), mu.conjugate())
            .expect("conjugation preserves containment");
        let lhs = store().skew(&conj);
        let k = (lam.size() + mu.size()) as u32;
        let factor = AlphaRat::from(AlphaPoly::linear(-1, 0)).pow(k);
        let rhs = omega(&store().skew(shape).invert_alpha(), &theta).scale(&factor);
        compare(acc, &format!("λ/μ={shape}"), &lhs, &rhs, "skew duality");
    });
    let norms = run_cases(&partitions_up_to(n), |nu, acc| {
        acc.case();
        let lhs = AlphaRat::from(hook_products(&nu.conjugate()).j);
        let rhs = alpha_dual(&hook_products(nu).j, 2 * nu.size());
        acc.check(|| format!("j ν={nu}"), &lhs, &rhs, "norm duality");
    });
    acc.merge(norms);
    let gs = run_cases(&triples(n), |(lam, mu, nu), acc| {
        acc.case();
        let input = || format!("g λ={lam} μ={mu} ν={nu}");
        match (
            store().g(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()),
            store().g(lam, mu, nu),
        ) {
            (Ok(a), Ok(b)) => {
                acc.check(
                    input,
                    &AlphaRat::from(a),
                    &alpha_dual(&b, 2 * lam.size()),
                    "g duality",
                );
            }
            (Err(e), _) | (_, Err(e)) => acc.fail(input(), e, "", "g"),
        }
    });
    acc.merge(gs);
    acc.finish("duality", SuiteKind::Theorem, n, start)
}

pub fn suite_prefix(n: usize) -> Report {
    let start = Instant::now();
    let shapes: Vec<SkewShape> = skew_shapes(n)
        .into_iter()
        .filter(|s| (1..s.inner().len()).all(|i| s.inner().row(i) == s.outer().row(i)))
        .collect();
    let acc = run_cases(&shapes, |shape, acc| {
        acc.case();
        let (lam, mu) = (shape.outer(), shape.inner());
        let j = store().skew(shape);
        let jl = store().jack(lam);
        let cp = lp(&c_prime_lp(mu));
        for nu in enumerate_partitions(shape.size(), None, None) {
            let lhs = j.coeff(&nu);
            let rhs = &cp * &jl.coeff(&mu.combine(&nu, CombineMode::Union));
            acc.check(|| format!("λ/μ={shape} ν={nu}"), &lhs, &rhs, "prefix");
        }
    });
    acc.finish("prefix", SuiteKind::Theorem, n, start)
}

/// `J_{λ/μ}(x, y) = Σ_ν j_ν⁻¹ J_{λ/ν}(x) J_{ν/μ}(y)` with `a` variables `x`
/// and `b` variables `y`.
pub fn suite_split(n: usize, a: usize, b: usize) -> Report {
    let start = Instant::now();
    let shapes = skew_shapes(n);
    let total = a + b;
    let acc = run_cases(&shapes, |shape, acc| {
        acc.case();
        let (lam, mu) = (shape.outer(), shape.inner());
        let lhs = store().skew(shape).eval_finite(total);
        let mut rhs = MultiPoly::zero(total);
        for nu in lam.subpartitions().into_iter().filter(|nu| nu.contains(mu)) {
            let upper = SkewShape::new(lam.clone(), nu.clone()).expect("ν ⊆ λ");
            let lower = SkewShape::new(nu.clone(), mu.clone()).expect("μ ⊆ ν");
            let x = store().skew(&upper).eval_finite(a).embed(0, total);
            let y = store().skew(&lower).eval_finite(b).embed(a, total);
            let inv = j_lp(&nu);
            let mut w = LinearProduct::one();
            w.div(&inv);
            rhs = rhs.add(&x.mul(&y).scale(&lp(&w)));
        }
        if lhs != rhs {
            acc.fail(format!("λ/μ={shape} vars={a}+{b}"), &lhs, &rhs, "split");
        }
    });
    let mut r = acc.finish("split", SuiteKind::Theorem, n, start);
    r.params.insert("vars".into(), format!("{a}+{b}"));
    r
}

/// `v_{λ,(1ⁿ)} = n!`, `v_{λ,λ} = c_λ`, nonnegative integer coefficients.
pub fn suite_normalization(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&partitions_up_to(n), |lam, acc| {
        acc.case();
        let j = store().jack(lam);
        let size = lam.size();
        let fact = AlphaRat::constant(biguint_to_rational(&factorial(size)));
        acc.check(
            || format!("λ={lam}"),
            &j.coeff(&Partition::column(size)),
            &fact,
            "v_(1ⁿ) = n!",
        );
        acc.check(
            || format!("λ={lam}"),
            &j.coeff(lam),
            &lp(&c_lp(lam)),
            "v_λλ = c_λ",
        );
        for (nu, c) in j.terms() {
            let ok = c.to_poly().is_some_and(|p| p.nonneg_int_test());
            if !ok {
                acc.fail(
                    format!("λ={lam} ν={nu}"),
                    c,
                    "nonnegative integer polynomial",
                    "Knop–Sahi positivity",
                );
            }
            if !lam.dominates_unchecked(nu) {
                acc.fail(format!("λ={lam} ν={nu}"), c, "0", "triangularity");
            }
        }
    });
    acc.finish("normalization", SuiteKind::Theorem, n, start)
}

/// `⟨J_λ, J_μ⟩ = δ_λμ c_λ c'_λ` and `j_λ = v_{λ/λ,∅}`.
pub fn suite_orthogonality(n: usize) -> Report {
    let start = Instant::now();
    let mut pairs = Vec::new();
    for size in 0..=n {
        let ps = enumerate_partitions(size, None, None);
        for (i, l) in ps.iter().enumerate() {
            for m in &ps[i..] {
                pairs.push((l.clone(), m.clone()));
            }
        }
    }
    let mut acc = run_cases(&pairs, |(l, m), acc| {
        acc.case();
        let ip = store().jack_p(l).inner(&store().jack_p(m));
        let expected = if l == m {
            lp(&j_lp(l))
        } else {
            AlphaRat::zero()
        };
        acc.check(
            || format!("λ={l} μ={m}"),
            &ip,
            &expected,
            "⟨J_λ, J_μ⟩ = δ j_λ",
        );
    });
    let hooks = run_cases(&partitions_up_to(n), |lam, acc| {
        acc.case();
        let h = hook_products(lam);
        acc.check(
            || format!("λ={lam}"),
            &h.j,
            &(&h.c * &h.c_prime),
            "j_λ = c_λ c'_λ",
        );
        let empty = store().skew(&SkewShape::new(lam.clone(), lam.clone()).expect("λ ⊆ λ"));
        acc.check(
            || format!("λ={lam}"),
            &empty.coeff(&Partition::empty()),
            &AlphaRat::from(h.j),
            "j_λ = v_{λ/λ,∅}",
        );
    });
    acc.merge(hooks);
    acc.finish("orthogonality", SuiteKind::Theorem, n, start)
}

/// `jack_ks = jack_gs` for `|λ| ≤ n_ks`; Stanley's formula equals the
/// definition for skew shapes with `|λ| ≤ n_skew`.
pub fn suite_oracles(n_ks: usize, n_skew: usize) -> Report {
    let start = Instant::now();
    let mut acc = run_cases(&partitions_up_to(n_ks), |lam, acc| {
        acc.case();
        match jack_gs(lam) {
            Ok(gs) => {
                compare(
                    acc,
                    &format!("λ={lam}"),
                    &store().jack(lam),
                    &gs.expansion,
                    "Knop–Sahi vs Gram–Schmidt",
                );
            }
            Err(e) => acc.fail(format!("λ={lam}"), e, "", "Gram–Schmidt"),
        }
    });
    let skew = run_cases(&skew_shapes(n_skew), |shape, acc| {
        acc.case();
        match skew_def(shape) {
            Ok(def) => {
                compare(
                    acc,
                    &format!("λ/μ={shape}"),
                    &store().skew(shape),
                    &def.expansion,
                    "Stanley vs definition",
                );
            }
            Err(e) => acc.fail(format!("λ/μ={shape}"), e, "", "definition"),
        }
    });
    acc.merge(skew);
    let mut r = acc.finish("oracles", SuiteKind::Theorem, n_ks.max(n_skew), start);
    r.params.insert("ks".into(), n_ks.to_string());
    r.params.insert("skew".into(), n_skew.to_string());
    r
}

/// The leading coefficient formula and `ν ≤ ν₀` for every nonzero term.
pub fn suite_leading(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&skew_shapes(n), |shape, acc| {
        acc.case();
        let j = store().skew(shape);
        let nu0 = shape.max_filling().weight;
        acc.check(
            || format!("λ/μ={shape} ν₀={nu0}"),
            &j.coeff(&nu0),
            &AlphaRat::from(leading_formula(shape)),
            "leading coefficient",
        );
        for (nu, c) in j.terms() {
            if !nu0.dominates_unchecked(nu) {
                acc.fail(format!("λ/μ={shape} ν={nu}"), c, "0", "ν ≤ ν₀");
            }
        }
    });
    acc.finish("leading", SuiteKind::Theorem, n, start)
}

/// Normalization, orthogonality, both oracles and the leading coefficient,
/// all at bound `n` (the Gram–Schmidt oracle is capped at 7).
pub fn suite_consistency(n: usize) -> Report {
    let start = Instant::now();
    let parts = [
        suite_normalization(n),
        suite_orthogonality(n),
        suite_oracles(n.min(7), n),
        suite_leading(n),
    ];
    let mut acc = Acc::default();
    for r in parts {
        acc.cases += r.cases;
        acc.failures.extend(r.failures);
        acc.stat(&format!("{}_cases", r.suite), r.cases);
    }
    acc.finish("consistency", SuiteKind::Theorem, n, start)
}

/// `g^λ_{μ,ν₀}` for `ν₀` the maximal filling weight of `λ/μ`.
pub fn suite_top_component(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&skew_shapes(n), |shape, acc| {
        acc.case();
        let (nu0, closed) = top_component_formula(shape);
        match store().g(shape.outer(), shape.inner(), &nu0) {
            Ok(g) => {
                acc.check(
                    || format!("λ/μ={shape} ν₀={nu0}"),
                    &g,
                    &closed,
                    "top component",
                );
            }
            Err(e) => acc.fail(format!("λ/μ={shape}"), e, "", "g"),
        }
    });
    acc.finish("top-component", SuiteKind::Theorem, n, start)
}

/// The closed form for `λ = μ + σ(ν)`, for every valid `σ`.
pub fn suite_prv(n: usize) -> Report {
    let start = Instant::now();
    let acc = run_cases(&skew_shapes(n), |shape, acc| {
        acc.case();
        let (lam, mu) = (shape.outer(), shape.inner());
        let sigmas = prv_sigmas(lam, mu);
        acc.stat("sigmas", sigmas.len() as u64);
        let nu = match sigmas.first() {
            Some(s) => prv_nu(lam, mu, s).expect("valid σ"),
            None => return,
        };
        let g = match store().g(lam, mu, &nu) {
            Ok(g) => g,
            Err(e) => return acc.fail(format!("λ/μ={shape}"), e, "", "g"),
        };
        for sigma in &sigmas {
            match prv_formula(lam, mu, sigma) {
                Ok(closed) => {
                    acc.check(
                        || format!("λ={lam} μ={mu} σ={sigma:?} ν={nu}"),
                        &g,
                        &closed,
                        "λ = μ + σ(ν)",
                    );
                }
                Err(e) => acc.fail(format!("λ={lam} μ={mu} σ={sigma:?}"), e, "", "prv"),
            }
        }
    });
    acc.finish("prv", SuiteKind::Theorem, n, start)
}

/// The proven cases `ν ∈ {φ + ψ, φ ∪ ψ}` of the ratio conjecture.
pub fn suite_ratio_prop(n: usize) -> Report {
    let start = Instant::now();
    let cases = super::conjectures::ratio_cases(n);
    let acc = run_cases(&cases, |case, acc| {
        let mut nus = vec![
            case.phi.combine(&case.psi, CombineMode::Sum),
            case.phi.combine(&case.psi, CombineMode::Union),
        ];
        nus.dedup();
        for nu in nus {
            acc.case();
            if let Some(msg) = super::conjectures::check_ratio(case, &nu) {
                acc.fail(format!("{case} ν={nu}"), msg.0, msg.1, &msg.2);
            }
        }
    });
    acc.finish("ratio-prop", SuiteKind::Theorem, n, start)
}

use jackal_core::jack::{JackStore, Method};
use jackal_core::{
    enumerate_partitions, g_poly, hook_products, jack_ks, lr_coeff, mixed_products, skew_def,
    skew_stanley, AlphaPoly, Cell, JackExpansion, Partition, Rational, SkewShape,
};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn upto(n: usize) -> Vec<Partition> {
    (0..=n)
        .flat_map(|k| enumerate_partitions(k, None, None))
        .collect()
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Semistandard tableaux of shape `lambda` and content `nu`, by brute force.
fn kostka(lambda: &Partition, nu: &Partition) -> u64 {
    let cells: Vec<Cell> = lambda.cells().collect();
    let mut fill = vec![0u32; cells.len()];
    let mut left: Vec<u32> = nu.parts().to_vec();
    fn go(k: usize, cells: &[Cell], fill: &mut [u32], left: &mut [u32]) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let c = cells[k];
        let idx = |row: u32, col: u32| {
            cells
                .iter()
                .position(|d| d.row == row && d.col == col)
                .unwrap()
        };
        let mut total = 0;
        for v in 1..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c.col > 1 && fill[idx(c.row, c.col - 1)] > v {
                continue;
            }
            if c.row > 1 && fill[idx(c.row - 1, c.col)] >= v {
                continue;
            }
            fill[k] = v;
            left[v as usize - 1] -= 1;
            total += go(k + 1, cells, fill, left);
            left[v as usize - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut fill, &mut left)
}

#[test]
fn spot_values() {
    assert_eq!(
        jack_ks(&p("2")).expansion.to_string(),
        "(α+1)·m[2] + 2·m[1,1]"
    );
    assert_eq!(
        jack_ks(&p("2,1")).expansion.to_string(),
        "(α+2)·m[2,1] + 6·m[1,1,1]"
    );
    assert_eq!(
        g_poly(&p("2"), &p("1"), &p("1")).unwrap().to_string(),
        "2α²"
    );
    let g = g_poly(&p("2,2"), &p("1"), &p("2,1")).unwrap();
    let expected = &(&AlphaPoly::from_ints(&[0, 0, 0, 4]) * &AlphaPoly::linear(1, 2))
        * &AlphaPoly::linear(2, 1);
    assert_eq!(g, expected);
    assert_eq!(lr_coeff(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
}

#[test]
fn specialization_at_one_is_hook_times_schur() {
    let one = r(1);
    for lam in upto(6) {
        let h = hook_products(&lam).c.eval(&one);
        let vals = jack_ks(&lam).expansion.eval_alpha(&one).unwrap();
        for nu in enumerate_partitions(lam.size(), None, None) {
            let got = vals.get(&nu).cloned().unwrap_or_default();
            assert_eq!(got, &h * r(kostka(&lam, &nu) as i64), "λ={lam} ν={nu}");
        }
    }
}

#[test]
fn knop_sahi_coefficients_are_nonnegative_integers() {
    for lam in upto(8) {
        for (nu, c) in jack_ks(&lam).expansion.terms() {
            let poly = c.to_poly().expect("polynomial coefficient");
            assert!(poly.nonneg_int_test(), "λ={lam} ν={nu}: {poly}");
        }
    }
}

#[test]
fn hook_conjugation_dualities() {
    for a in [r(2), r(3), Rational::new(3.into(), 7.into())] {
        let inv = a.recip();
        for lam in upto(8) {
            let n = lam.size() as i32;
            let h = hook_products(&lam);
            let hc = hook_products(&lam.conjugate());
            assert_eq!(h.c_prime.eval(&a), a.pow(n) * hc.c.eval(&inv), "λ={lam}");
            for mu in lam.subpartitions() {
                let m = mixed_products(&mu, &lam).unwrap();
                let mc = mixed_products(&mu.conjugate(), &lam.conjugate()).unwrap();
                assert_eq!(
                    m.c_prime.eval(&a),
                    a.pow(mu.size() as i32) * mc.c.eval(&inv),
                    "μ={mu} λ={lam}"
                );
            }
        }
    }
}

#[test]
fn g_and_lr_are_symmetric() {
    for lam in upto(6) {
        for mu in lam.subpartitions() {
            for nu in enumerate_partitions(lam.size() - mu.size(), None, None) {
                assert_eq!(
                    g_poly(&lam, &mu, &nu).unwrap(),
                    g_poly(&lam, &nu, &mu).unwrap()
                );
                assert_eq!(
                    lr_coeff(&lam, &mu, &nu).unwrap(),
                    lr_coeff(&lam, &nu, &mu).unwrap()
                );
            }
        }
    }
}

#[test]
fn skew_methods_agree() {
    for s in ["3,2,1/2,1", "4,2/1", "3,3/2", "2,2,1/1,1"] {
        let shape: SkewShape = s.parse().unwrap();
        let a = skew_stanley(&shape);
        let b = skew_def(&shape).unwrap();
        assert_eq!(a.method, Method::Stanley);
        assert_eq!(a.expansion, b.expansion, "{s}");
    }
}

#[test]
fn expansion_json_round_trip() {
    let e = skew_stanley(&"3,1/1".parse().unwrap());
    let text = serde_json::to_string(&e).unwrap();
    let back: JackExpansion = serde_json::from_str(&text).unwrap();
    assert_eq!(back, e);
}

#[test]
fn disk_cache_survives_a_new_store() {
    let dir = tempfile::tempdir().unwrap();
    let lam = p("3,2");
    let first = JackStore::new(Some(dir.path().to_path_buf()));
    let a = first.jack(&lam);
    assert_eq!(first.stats().disk_writes, 1);
    let second = JackStore::new(Some(dir.path().to_path_buf()));
    let b = second.jack(&lam);
    assert_eq!(second.stats().disk_hits, 1);
    assert_eq!(second.stats().computed, 0);
    assert_eq!(a, b);
}

use num_complex::Complex64;
use polyzeta::families::{a_prime, a_rec, a_tilde, b_alpha, b_rec, Method};
use polyzeta::rings::rational::{int, q, to_f64, Rational};
use polyzeta::zeros::{certify_nonpositive, certify_table, count_real_roots, to_x_poly, XPoly};
use polyzeta::Error;
use proptest::prelude::*;

fn from_roots(roots: &[Rational]) -> XPoly {
    let mut c = vec![int(1)];
    for r in roots {
        let mut next = vec![int(0); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    XPoly::new(c)
}

/// Durand–Kerner, used only as a cross-check on real-root counts.
fn float_roots(p: &XPoly) -> Vec<Complex64> {
    let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let d = c.len() - 1;
    let lead = c[d];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut zs: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        for i in 0..d {
            let denom = (0..d)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zs[i] - zs[j]));
            let step = eval(zs[i]) / denom;
            zs[i] -= step;
        }
    }
    zs
}

#[test]
fn families_certify_through_forty() {
    for (table, from) in [(a_rec(40), 2), (a_tilde(40), 2), (b_rec(40), 2)] {
        for c in certify_table(&table, from).unwrap() {
            assert!(c.report.pass, "{} n={} {:?}", c.family, c.n, c.report);
        }
    }
}

#[test]
fn alpha_families_certify_through_thirty() {
    for alpha in [q(1, 3), q(1, 2), int(1), int(2)] {
        let table = b_alpha(&alpha, 30, Method::Rec).unwrap();
        for c in certify_table(&table, 1).unwrap() {
            assert!(
                c.report.pass,
                "alpha={:?} n={} {:?}",
                c.alpha, c.n, c.report
            );
        }
    }
}

#[test]
fn aprime_is_rejected() {
    let t = a_prime(6).unwrap();
    assert!(matches!(to_x_poly(&t.entries()[3]), Err(Error::NotInT3(_))));
}

#[test]
fn halfline_root_count_agrees_with_float_roots() {
    let t = b_rec(16);
    for n in 2..=16 {
        let x = to_x_poly(&t.entries()[n]).unwrap();
        let r = certify_nonpositive(&x).unwrap();
        let nz = x.coeffs().iter().take_while(|c| *c == &int(0)).count();
        let reduced = XPoly::new(x.coeffs()[nz..].to_vec());
        if reduced.degree().unwrap_or(0) == 0 {
            continue;
        }
        let real_neg = float_roots(&reduced)
            .iter()
            .filter(|z| z.im.abs() < 1e-6 * (1.0 + z.re.abs()) && z.re < 0.0)
            .count();
        assert_eq!(real_neg + usize::from(nz > 0), r.roots_in_halfline, "n={n}");
    }
}

#[test]
fn certificate_json_shape() {
    let t = b_alpha(&q(1, 2), 4, Method::Rec).unwrap();
    let c = &certify_table(&t, 4).unwrap()[0];
    let v = serde_json::to_value(c).unwrap();
    for key in [
        "family",
        "n",
        "alpha",
        "degree",
        "degree_sqfree",
        "roots_in_halfline",
        "pass",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["alpha"], "1/2");
}

proptest! {
    #[test]
    fn counts_match_constructed_roots(
        raw in prop::collection::vec((-20i64..20, 1i64..5), 1..7),
        bounds in prop::collection::vec(-25i64..25, 2),
    ) {
        let roots: Vec<Rational> = raw.iter().map(|&(n, d)| q(n, d)).collect();
        let p = from_roots(&roots);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let (lo, hi) = (int(bounds[0].min(bounds[1])), int(bounds[0].max(bounds[1])));
        let expect = distinct.iter().filter(|r| **r > lo && **r <= hi).count();
        prop_assert_eq!(count_real_roots(&p, Some(&lo), Some(&hi)), expect);
        prop_assert_eq!(count_real_roots(&p, None, None), distinct.len());
        let below = distinct.iter().filter(|r| **r <= hi).count();
        prop_assert_eq!(count_real_roots(&p, None, Some(&hi)), below);
    }

    #[test]
    fn conjugate_pairs_reduce_the_count(
        real in prop::collection::vec(-10i64..10, 0..4),
        shifts in prop::collection::vec((-5i64..5, 1i64..6), 1..3),
    ) {
        // each (x − a)² + b² contributes no real roots
        let base = from_roots(&real.iter().map(|&r| int(r)).collect::<Vec<_>>());
        let mut c = base.coeffs().to_vec();
        for &(a, b) in &shifts {
            let quad = [int(a * a + b * b), int(-2 * a), int(1)];
            let mut next = vec![int(0); c.len() + 2];
            for (i, x) in c.iter().enumerate() {
                for (j, y) in quad.iter().enumerate() {
                    next[i + j] += x * y;
                }
            }
            c = next;
        }
        let mut distinct = real.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(count_real_roots(&XPoly::new(c), None, None), distinct.len());
    }
}

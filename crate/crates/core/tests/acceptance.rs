//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_traits::Zero;
use polyzeta::families::{
    a_prime, a_rec, a_tilde, b_alpha, b_hyper, b_rec, verify_eliminated_recurrences, FamilyTable,
    Method, Relations,
};
use polyzeta::mzv::{verify_identity, Identity, NumericReport};
use polyzeta::rings::rational::{int, q, Rational};
use polyzeta::rings::TPoly;
use polyzeta::series_lab::{cdh_generating_check, lemma5_residual, ode_residual, Ode};
use polyzeta::zeros::{certify_table, Certificate};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: polyzeta::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sampled_alphas() -> Vec<Rational> {
    vec![int(0), q(1, 3), q(1, 2), int(1), int(2), int(-1), q(-5, 2)]
}

fn closed_forms() -> Check {
    let rec = b_rec(50);
    for n in 0..=50 {
        let hyper = lib(b_hyper(n))?;
        ensure(hyper == rec.entries()[n], || {
            format!("b_hyper({n}) differs from the recurrence")
        })?;
    }
    for a in sampled_alphas() {
        let r = lib(b_alpha(&a, 30, Method::Rec))?;
        for m in [Method::Sum1, Method::Sum2] {
            let other = lib(b_alpha(&a, 30, m))?;
            ensure(other.entries() == r.entries(), || {
                format!("alpha={a} {m:?} differs")
            })?;
        }
    }
    Ok("51 hypergeometric sums, 7 alphas x 31 entries x 3 methods".into())
}

fn membership() -> Check {
    for (n, b) in b_rec(50).entries().iter().enumerate().skip(1) {
        ensure(b.is_in_t3() && b.coeff(0).is_zero(), || {
            format!("B_{n} not in t^3 Q[t^3]")
        })?;
    }
    for table in [a_rec(40), a_tilde(40)] {
        if let Some(n) = table.entries().iter().position(|p| !p.is_in_t3()) {
            return Err(format!("{}_{n} not in Q[t^3]", table.family()));
        }
    }
    for a in sampled_alphas() {
        let t = lib(b_alpha(&a, 30, Method::Rec))?;
        ensure(t.entries().iter().all(TPoly::is_in_t3), || {
            format!("B^{a} leaves Q[t^3]")
        })?;
    }
    let ap = lib(a_prime(1))?;
    let a1 = &ap.entries()[1];
    ensure(!a1.coeff(1).is_zero() && !a1.coeff(2).is_zero(), || {
        format!("A'_1 = {a1}")
    })?;
    Ok(format!(
        "B_n n<=50, A_n and Atilde_n n<=40, B^alpha n<=30; A'_1 = {a1}"
    ))
}

fn odes() -> Check {
    for (ode, order) in [(Ode::C, 20), (Ode::B, 20), (Ode::A, 20), (Ode::ASixth, 12)] {
        let r = lib(ode_residual(ode, order))?;
        ensure(r.is_zero(), || {
            format!(
                "{ode:?} residual nonzero at z^{:?}",
                r.first_nonzero_order()
            )
        })?;
    }
    Ok("C, B, A (order 20) and the sixth-order A operator (order 12)".into())
}

fn eliminated() -> Check {
    let mut count = 0;
    for which in [Relations::AEvenOdd, Relations::Aprime, Relations::Atilde] {
        let r = lib(verify_eliminated_recurrences(which, 20))?;
        if let Some(c) = r.checks.iter().find(|c| !c.zero) {
            return Err(format!("{} fails at n={}", c.relation, c.n));
        }
        count += r.checks.len();
    }
    Ok(format!("{count} residuals zero"))
}

fn symmetries() -> Check {
    for a in sampled_alphas() {
        let table = lib(b_alpha(&a, 20, Method::Rec))?;
        for n in 0..=20usize {
            let mirrored = int(1) - int(n as i64) - &a;
            let other = lib(b_alpha(&mirrored, n, Method::Rec))?;
            ensure(other.entries()[n] == table.entries()[n], || {
                format!("reflection n={n} alpha={a}")
            })?;
        }
    }
    for n in 1..=12usize {
        for a in (-15..=3).map(int).chain([q(1, 2), q(-7, 3)]) {
            let t = lib(b_alpha(&a, n, Method::Rec))?;
            let in_set = a.is_integer() && a <= int(0) && a > -int(n as i64);
            ensure(t.entries()[n].coeff(0).is_zero() == in_set, || {
                format!("B^{a}_{n}(0)")
            })?;
        }
    }
    for a in sampled_alphas()
        .into_iter()
        .chain([q(7, 4), q(3, 5), int(5)])
    {
        ensure(lib(lemma5_residual(&a, 20))?.is_zero(), || {
            format!("binomial identity alpha={a}")
        })?;
    }
    let pairs = [
        (q(1, 2), q(1, 3)),
        (int(1), q(2, 5)),
        (int(2), q(-1, 7)),
        (q(1, 3), q(3, 2)),
        (q(-5, 2), q(1, 4)),
    ];
    let gammas = [q(1, 2), int(2), q(-3, 5)];
    for (a, t0) in &pairs {
        ensure(lib(cdh_generating_check(a, t0, 8, None))?.zero, || {
            format!("2F1 alpha={a} t0={t0}")
        })?;
        for g in &gammas {
            let r = lib(cdh_generating_check(a, t0, 8, Some(g)))?;
            ensure(r.zero, || format!("3F2 alpha={a} t0={t0} gamma={g}"))?;
        }
    }
    Ok("reflection, B^alpha(0) zero set, binomial identity (10 alphas), 5 x (1 + 3) generating functions".into())
}

fn a_series() -> Check {
    let p = |c: &[&str]| TPoly::from_strings(c).expect("literal");
    let expected = [
        p(&["1"]),
        p(&[]),
        p(&["0", "0", "0", "1/4"]),
        p(&["0", "0", "0", "-1/6"]),
        p(&["0", "0", "0", "11/96", "0", "0", "1/192"]),
        p(&["0", "0", "0", "-1/12", "0", "0", "-1/240"]),
        p(&[
            "0", "0", "0", "137/2160", "0", "0", "23/5760", "0", "0", "1/34560",
        ]),
    ];
    let a = a_rec(6);
    for (n, want) in expected.iter().enumerate() {
        ensure(&a.entries()[n] == want, || {
            format!("A_{n} = {}", a.entries()[n])
        })?;
    }
    Ok("A_0..A_6 verbatim".into())
}

fn describe(r: &NumericReport) -> String {
    format!(
        "{} l={} N={} |diff|={:.2e} tail={:.2e} tol={:.0e}",
        r.identity,
        r.l,
        r.truncation,
        r.difference.abs(),
        r.tail_estimate,
        r.tolerance
    )
}

fn numeric() -> Check {
    let runs = [
        (Identity::Id1, 1, 1_000_000, 1e-4),
        (Identity::Id1, 2, 10_000_000, 5e-3),
        (Identity::Id1a, 1, 1_000_000, 1e-6),
        (Identity::Id1a, 2, 1_000_000, 1e-6),
        (Identity::Eighth, 1, 1_000_000, 1e-5),
    ];
    let mut lines = Vec::new();
    for (id, l, n, tol) in runs {
        let r = verify_identity(id, l, n, tol)
            .map_err(|e| format!("{} l={l} inconclusive: {e}", id.name()))?;
        ensure(r.pass, || describe(&r))?;
        lines.push(describe(&r));
    }
    Ok(lines.join("; "))
}

fn coefficient_sums() -> Check {
    let mut lines = Vec::new();
    for l in 1..=2 {
        let r = verify_identity(Identity::Lemma2 { j: 2000 }, l, 5000, 1e-2)
            .map_err(|e| format!("l={l} inconclusive: {e}"))?;
        let line = format!(
            "t^{}: |diff|={:.2e}, sum tail ~{:.2e}, product tail <= {:.2e}",
            3 * l,
            r.difference.abs(),
            r.value_tail.unwrap_or(f64::NAN),
            r.reference_tail.unwrap_or(f64::NAN)
        );
        ensure(r.pass, || line.clone())?;
        lines.push(line);
    }
    Ok(lines.join("; "))
}

fn certify(table: &FamilyTable, from: usize, degree_half: bool) -> Result<usize, String> {
    let certs: Vec<Certificate> = lib(certify_table(table, from))?;
    for c in &certs {
        if !c.report.pass {
            return Err(format!(
                "{} {:?}_{}: {:?}",
                c.family, c.alpha, c.n, c.report.witness
            ));
        }
        if degree_half && c.report.degree != c.n / 2 {
            return Err(format!(
                "{}_{} has degree {} in x",
                c.family, c.n, c.report.degree
            ));
        }
    }
    Ok(certs.len())
}

fn zeros() -> Check {
    let mut total = certify(&a_rec(40), 2, true)?
        + certify(&a_tilde(40), 2, true)?
        + certify(&b_rec(40), 2, false)?;
    for a in [q(1, 3), q(1, 2), int(1), int(2)] {
        total += certify(&lib(b_alpha(&a, 30, Method::Rec))?, 1, false)?;
    }
    Ok(format!("{total} polynomials certified by Sturm chains"))
}

fn oracle() -> Check {
    let (checked, bad) = common::oracle_mismatches();
    ensure(bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    ensure(checked == common::ADMISSIBLE, || {
        format!("checked {checked} indices")
    })?;
    Ok(format!("{checked} indices x N<=60 exact"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("closed forms equal recurrences", closed_forms),
        ("membership in Q[t^3]", membership),
        ("differential equation residuals", odes),
        ("eliminated recurrences", eliminated),
        ("reflection, zero set and generating functions", symmetries),
        ("A-series through z^6", a_series),
        ("numeric MZV identities", numeric),
        ("coefficient sums against the product", coefficient_sums),
        ("zero certification", zeros),
        ("sweep against brute-force oracle", oracle),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result =
            panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "[{tag}] {:>2}. {name}: {detail} ({:.1}s)",
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Generating-function side: truncated `C(z;t)`, `B(z;t)`, `A(z;t)`, the
//! differential operators they satisfy, and the series identities relating
//! `B^α` to `B^{1−α}` and to hypergeometric series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Family, FamilyTable, Method};
use crate::rings::pochhammer::{factorial, has_zero_factor, omega_pair_product, pochhammer_value};
use crate::rings::rational::{self, int, Rational};
use crate::rings::{Cyclo, OpLetter, Operator, TPoly, ZSeries};

/// `Σ_{n ≤ order} entry_n(t) zⁿ`.
pub fn family_series(family: &Family, order: usize) -> Result<ZSeries> {
    let table = FamilyTable::build(family.clone(), order, Method::Rec)?;
    Ok(table_series(&table, order))
}

pub fn table_series(table: &FamilyTable, order: usize) -> ZSeries {
    ZSeries::new(table.entries()[..=order.min(table.nmax())].to_vec(), order)
}

/// Which differential (or functional) equation to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ode {
    /// `(D₋θ² − t³) C = 0`
    C,
    /// `(D₋²θ − t³) B = 0`
    B,
    /// `D₊²θ A(z) − t³ A(−z) = 0`
    A,
    /// `(D₋²θ D₊²θ − t⁶) A = 0`
    ASixth,
}

impl std::str::FromStr for Ode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Ode::C),
            "b" => Ok(Ode::B),
            "a" => Ok(Ode::A),
            "a6" | "asixth" => Ok(Ode::ASixth),
            _ => Err(Error::Parse(format!("unknown equation {s:?}"))),
        }
    }
}

impl Ode {
    pub fn operator(self) -> Operator {
        use OpLetter::*;
        let t3 = || Operator::scalar(TPoly::monomial(int(1), 3));
        match self {
            Ode::C => Operator::word([DMinus, Theta, Theta]).minus(t3()),
            Ode::B => Operator::word([DMinus, DMinus, Theta]).minus(t3()),
            Ode::A => Operator::word([DPlus, DPlus, Theta]).minus(Operator::word([MulT3, Reflect])),
            Ode::ASixth => Operator::word([DMinus, DMinus, Theta])
                .compose(&Operator::word([DPlus, DPlus, Theta]))
                .minus(Operator::scalar(TPoly::monomial(int(1), 6))),
        }
    }

    fn family(self) -> Family {
        match self {
            Ode::C => Family::C,
            Ode::B => Family::B,
            Ode::A | Ode::ASixth => Family::A,
        }
    }

    fn min_order(self) -> usize {
        match self {
            Ode::ASixth => 6,
            _ => 3,
        }
    }
}

/// The residual of the equation applied to the truncated generating series.
pub fn ode_residual(ode: Ode, order: usize) -> Result<ZSeries> {
    if order < ode.min_order() {
        return Err(Error::OrderUnderflow {
            needed: ode.min_order(),
            available: order,
        });
    }
    family_series(&ode.family(), order)?.apply(&ode.operator())
}

/// Elementary symmetric functions `e_0..=e_L` of `{1/j³ : 1 ≤ j ≤ J}`, i.e.
/// the `t^{3l}` coefficients of `∏_{j ≤ J} (1 + t³/j³)`.
pub fn product_truncation(j_max: usize, l_max: usize) -> Result<Vec<Rational>> {
    if l_max > j_max {
        return Err(Error::Argument(format!(
            "e_{l_max} of {j_max} terms is identically zero"
        )));
    }
    // numerators over D^l with D = lcm(1..=J)³, reduced once at the end
    let d = (1..=j_max as u64)
        .fold(BigInt::one(), |acc, j| acc.lcm(&BigInt::from(j)))
        .pow(3);
    let mut num = vec![BigInt::zero(); l_max + 1];
    num[0] = BigInt::one();
    for j in 1..=j_max as u64 {
        let w = &d / BigInt::from(j * j * j);
        for l in (1..=l_max).rev() {
            let add = &num[l - 1] * &w;
            num[l] += add;
        }
    }
    let mut scale = BigInt::one();
    Ok(num
        .into_iter()
        .map(|n| {
            let e = Rational::new(n, scale.clone());
            scale *= &d;
            e
        })
        .collect())
}

/// Upper bound on `e_l(∞) − e_l(J)`: `e_{l−1}(∞) · Σ_{j>J} j⁻³`, with
/// `e_{l−1}(∞) ≤ ζ(3)^{l−1}/(l−1)!` and `Σ_{j>J} j⁻³ ≤ 1/(2J²)`.
pub fn product_tail_bound(j_max: usize, l: usize) -> f64 {
    if l == 0 {
        return 0.0;
    }
    let zeta3_bound = 1.202_056_903_159_595_f64;
    let prev = zeta3_bound.powi(l as i32 - 1) / (1..l).map(|k| k as f64).product::<f64>();
    prev / (2.0 * (j_max as f64).powi(2))
}

/// `(1 − z)^e` through `z^order`.
pub fn binomial_series(e: &Rational, order: usize) -> ZSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    for n in 0..=order {
        coeffs.push(c.clone());
        c = -c * (e - int(n as i64)) / int(n as i64 + 1);
    }
    ZSeries::from_scalars(coeffs, order)
}

/// `Σ B_n^α zⁿ − (1−z)^{1−2α} Σ B_n^{1−α} zⁿ` through `z^order`.
pub fn lemma5_residual(alpha: &Rational, order: usize) -> Result<ZSeries> {
    if order < 1 {
        return Err(Error::Argument("order must be at least 1".into()));
    }
    let lhs = family_series(&Family::Balpha(alpha.clone()), order)?;
    let mirrored = family_series(&Family::Balpha(int(1) - alpha), order)?;
    let factor = binomial_series(&(int(1) - alpha * int(2)), order);
    Ok(&lhs - &(&factor * &mirrored))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub order: usize,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_nonzero_order: Option<usize>,
}

impl ResidualReport {
    pub fn new(identity: impl Into<String>, params: &[(&str, String)], residual: &ZSeries) -> Self {
        let first = residual.first_nonzero_order();
        ResidualReport {
            identity: identity.into(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            order: residual.order(),
            zero: first.is_none(),
            first_nonzero_order: first,
        }
    }
}

/// `(α + ωt0)_n (α + ω²t0)_n` evaluated over Q(ω) and projected.
fn omega_rising_product(alpha: &Rational, t0: &Rational, sign: i64, n: usize) -> Result<Rational> {
    let s = t0 * int(sign);
    // α + ω·s and α + ω²·s = (α − s) − s·ω
    let a = Cyclo::new(alpha.clone(), s.clone());
    let b = Cyclo::new(alpha - &s, -s);
    let v = &pochhammer_value(&a, n) * &pochhammer_value(&b, n);
    if !v.is_rational() {
        return Err(Error::NonRationalResult(n));
    }
    Ok(v.re)
}

/// Exact comparison, at `t = t0`, of the two continuous dual Hahn generating
/// functions for `B_n^α`:
///
/// - without `γ`: `Σ n!/(α−t)_n B_n^α zⁿ = (1−z)^{−t} ₂F₁(α+ωt, α+ω²t; α−t | z)`
/// - with `γ`: `Σ (γ)_n n!/((α−ωt)_n(α−ω²t)_n) B_n^α zⁿ
///   = (1−z)^{−γ} ₃F₂(γ, α+t, t; α−ωt, α−ω²t | z/(z−1))`
pub fn cdh_generating_check(
    alpha: &Rational,
    t0: &Rational,
    order: usize,
    gamma: Option<&Rational>,
) -> Result<ResidualReport> {
    let table = FamilyTable::build(Family::Balpha(alpha.clone()), order, Method::Rec)?;
    let b: Vec<Rational> = table.entries().iter().map(|p| p.eval(t0)).collect();
    let mut params = vec![
        ("alpha", rational::to_text(alpha)),
        ("t0", rational::to_text(t0)),
        ("samples", "1".to_string()),
    ];
    let residual = match gamma {
        None => {
            if has_zero_factor(&(alpha - t0), order) {
                return Err(Error::PoleAtSample(format!(
                    "(alpha - t0)_n vanishes for t0 = {t0}"
                )));
            }
            let mut lhs = Vec::with_capacity(order + 1);
            let mut hyp = Vec::with_capacity(order + 1);
            for (n, bn) in b.iter().enumerate() {
                let lower = pochhammer_value(&(alpha - t0), n);
                lhs.push(factorial(n) / &lower * bn);
                hyp.push(omega_rising_product(alpha, t0, 1, n)? / (lower * factorial(n)));
            }
            let rhs = &binomial_series(&-t0.clone(), order) * &ZSeries::from_scalars(hyp, order);
            &ZSeries::from_scalars(lhs, order) - &rhs
        }
        Some(g) => {
            params.push(("gamma", rational::to_text(g)));
            if (0..order).any(|k| omega_pair_product(alpha, &-t0.clone(), k + 1).is_zero()) {
                return Err(Error::PoleAtSample(format!(
                    "(alpha - w t0)_n (alpha - w^2 t0)_n vanishes for t0 = {t0}"
                )));
            }
            let mut lhs = Vec::with_capacity(order + 1);
            let mut hyp = Vec::with_capacity(order + 1);
            for (n, bn) in b.iter().enumerate() {
                let lower = omega_rising_product(alpha, t0, -1, n)?;
                let gn = pochhammer_value(g, n);
                lhs.push(&gn * factorial(n) / &lower * bn);
                let upper = gn * pochhammer_value(&(alpha + t0), n) * pochhammer_value(t0, n);
                hyp.push(upper / (lower * factorial(n)));
            }
            // z/(z − 1) = −z − z² − …
            let arg = ZSeries::from_scalars(
                (0..=order)
                    .map(|n| if n == 0 { int(0) } else { int(-1) })
                    .collect(),
                order,
            );
            let composed = ZSeries::from_scalars(hyp, order).compose(&arg)?;
            let rhs = &binomial_series(&-g.clone(), order) * &composed;
            &ZSeries::from_scalars(lhs, order) - &rhs
        }
    };
    let name = if gamma.is_some() {
        "cdh-3F2"
    } else {
        "cdh-2F1"
    };
    Ok(ResidualReport::new(name, &params, &residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rational::q;

    #[test]
    fn series_assembly() {
        let c = family_series(&Family::C, 2).unwrap();
        assert_eq!(c.coeff(1), &TPoly::monomial(int(1), 3));
        assert_eq!(
            c.coeff(2),
            &TPoly::from_strings(&["0", "0", "0", "1/8", "0", "0", "1/8"]).unwrap()
        );
        let a = family_series(&Family::A, 3).unwrap();
        assert!(a.coeff(1).is_zero());
        assert_eq!(a.coeff(3), &TPoly::monomial(q(-1, 6), 3));
        let b = family_series(&Family::B, 3).unwrap();
        assert_eq!(b.coeff(3), &TPoly::monomial(q(1, 6), 3));
    }

    #[test]
    fn residual_orders() {
        assert_eq!(ode_residual(Ode::C, 10).unwrap().order(), 9);
        assert_eq!(ode_residual(Ode::B, 10).unwrap().order(), 8);
        assert_eq!(ode_residual(Ode::A, 10).unwrap().order(), 8);
        assert_eq!(ode_residual(Ode::ASixth, 12).unwrap().order(), 8);
        assert!(ode_residual(Ode::ASixth, 5).is_err());
    }

    #[test]
    fn wrong_equation_leaves_a_residual() {
        let b = family_series(&Family::B, 8).unwrap();
        let r = b.apply(&Ode::C.operator()).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn product_coefficients() {
        assert_eq!(product_truncation(1, 1).unwrap(), vec![int(1), int(1)]);
        assert_eq!(product_truncation(2, 1).unwrap(), vec![int(1), q(9, 8)]);
        assert_eq!(product_truncation(3, 2).unwrap()[2], q(1, 6));
        assert!(product_truncation(2, 3).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(
            binomial_series(&int(1), 3),
            ZSeries::from_scalars(vec![int(1), int(-1)], 3)
        );
        assert_eq!(
            binomial_series(&int(-1), 3),
            ZSeries::from_scalars(vec![int(1); 4], 3)
        );
        assert_eq!(
            binomial_series(&q(1, 2), 2),
            ZSeries::from_scalars(vec![int(1), q(-1, 2), q(-1, 8)], 2)
        );
    }

    #[test]
    fn binomial_exponents_add() {
        let (a, b) = (q(1, 3), q(-7, 5));
        assert_eq!(
            &binomial_series(&a, 8) * &binomial_series(&b, 8),
            binomial_series(&(&a + &b), 8)
        );
    }

    #[test]
    fn half_is_a_fixed_point() {
        assert!(lemma5_residual(&q(1, 2), 6).unwrap().is_zero());
    }

    #[test]
    fn cdh_examples() {
        let r = cdh_generating_check(&int(1), &q(1, 2), 8, None).unwrap();
        assert!(r.zero, "{r:?}");
        let r = cdh_generating_check(&int(1), &q(1, 2), 8, Some(&int(1))).unwrap();
        assert!(r.zero, "{r:?}");
        assert_eq!(r.params["gamma"], "1");
    }

    #[test]
    fn cdh_poles() {
        assert!(matches!(
            cdh_generating_check(&int(1), &int(3), 4, None),
            Err(Error::PoleAtSample(_))
        ));
        // 0² + 0·t0 + t0² vanishes only at t0 = 0 when α = 0
        assert!(matches!(
            cdh_generating_check(&int(0), &int(0), 4, Some(&int(1))),
            Err(Error::PoleAtSample(_))
        ));
    }
}

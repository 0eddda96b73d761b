use num_traits::One;
use serde::{Serialize, Serializer};

use super::{mzv_truncated, MzvIndex};
use crate::error::{Error, Result};
use crate::families::b_x_coefficients;
use crate::rings::pochhammer::factorial;
use crate::rings::rational::{self, to_f64, Rational};
use crate::series_lab::{product_tail_bound, product_truncation};

/// π to 36 significant digits.
pub const PI_DIGITS: &str = "3.14159265358979323846264338327950288";

fn pi_rational() -> Rational {
    let (int_part, frac) = PI_DIGITS.split_once('.').expect("decimal point");
    let num: num_bigint::BigInt = format!("{int_part}{frac}").parse().expect("digits");
    Rational::new(num, num_bigint::BigInt::from(10).pow(frac.len() as u32))
}

/// The identity under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `ζ({2,1}^l) = ζ({3}^l)`
    Id1,
    /// `ζ({3,1}^l) = 2π^{4l}/(4l+2)!`
    Id1a,
    /// `ζ({2,1}^l)/8^l = ζ({2̄,1}^l)`
    Eighth,
    /// `Σ_n [t^{3l}] B_n = [t^{3l}] ∏_j (1 + t³/j³)`, the right side truncated at `j`
    Lemma2 { j: usize },
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::Id1 => "id1",
            Identity::Id1a => "id1a",
            Identity::Eighth => "eighth",
            Identity::Lemma2 { .. } => "lemma2",
        }
    }
}

fn sig15<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rounded: f64 = format!("{v:.14e}").parse().unwrap_or(*v);
    s.serialize_f64(rounded)
}

fn sig15_opt<S: Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => sig15(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericReport {
    pub identity: &'static str,
    pub l: usize,
    #[serde(serialize_with = "sig15")]
    pub value: f64,
    #[serde(serialize_with = "sig15")]
    pub reference: f64,
    #[serde(serialize_with = "sig15")]
    pub difference: f64,
    pub truncation: u64,
    /// Combined tail of both sides; heuristic unless noted per side.
    #[serde(serialize_with = "sig15")]
    pub tail_estimate: f64,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig15_opt")]
    pub value_tail: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig15_opt")]
    pub reference_tail: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_terms: Option<usize>,
    #[serde(serialize_with = "sig15")]
    pub tolerance: f64,
    pub pass: bool,
}

struct Sides {
    value: f64,
    reference: f64,
    value_tail: f64,
    reference_tail: f64,
}

fn zeta(idx: Result<MzvIndex>, n: u64) -> Result<(f64, f64)> {
    let v = mzv_truncated(&idx?, n)?;
    Ok((v.value, v.tail_estimate))
}

fn lemma2_sides(l: usize, n: u64, j: usize) -> Result<Sides> {
    if n < 2 {
        return Err(Error::Argument("lemma2 needs N ≥ 2".into()));
    }
    let coeffs = b_x_coefficients(n as usize, l);
    let partial = |upto: usize| -> f64 {
        let mut c = super::sweep::Compensated::default();
        for row in &coeffs[..=upto] {
            c.add(row[l]);
        }
        c.value()
    };
    let value = partial(n as usize);
    // partial sums approach their limit like (log N)/N; the last doubling
    // of N, doubled again, stands in for the remaining tail
    let value_tail = 2.0 * (value - partial(n as usize / 2)).abs();
    let e = product_truncation(j, l)?;
    Ok(Sides {
        value,
        reference: to_f64(&e[l]),
        value_tail,
        reference_tail: product_tail_bound(j, l),
    })
}

/// Compares both sides of `id` at depth parameter `l` and truncation `n`.
///
/// Refuses with [`Error::ToleranceTooTight`] when `tol` is smaller than the
/// combined tail estimate, since a pass would not be supported by the data.
pub fn verify_identity(id: Identity, l: usize, n: u64, tol: f64) -> Result<NumericReport> {
    if l == 0 {
        return Err(Error::Argument("l must be at least 1".into()));
    }
    let sides = match id {
        Identity::Id1 => {
            let (value, value_tail) = zeta(MzvIndex::two_ones(l), n)?;
            let (reference, reference_tail) = zeta(MzvIndex::threes(l), n)?;
            Sides {
                value,
                reference,
                value_tail,
                reference_tail,
            }
        }
        Identity::Id1a => {
            let (value, value_tail) = zeta(MzvIndex::three_ones(l), n)?;
            let pi = pi_rational();
            let exact = (0..4 * l).fold(Rational::one(), |acc, _| acc * &pi) * rational::int(2)
                / factorial(4 * l + 2);
            Sides {
                value,
                reference: to_f64(&exact),
                value_tail,
                reference_tail: 0.0,
            }
        }
        Identity::Eighth => {
            let (value, value_tail) = zeta(MzvIndex::bar_two_ones(l), n)?;
            let (plain, plain_tail) = zeta(MzvIndex::two_ones(l), n)?;
            let scale = 8f64.powi(-(l as i32));
            Sides {
                value,
                reference: plain * scale,
                value_tail,
                reference_tail: plain_tail * scale,
            }
        }
        Identity::Lemma2 { j } => lemma2_sides(l, n, j)?,
    };
    let tail = sides.value_tail + sides.reference_tail;
    if tol < tail {
        return Err(Error::ToleranceTooTight { tol, tail });
    }
    let difference = sides.value - sides.reference;
    let (value_tail, reference_tail, product_terms) = match id {
        Identity::Lemma2 { j } => (Some(sides.value_tail), Some(sides.reference_tail), Some(j)),
        _ => (Some(sides.value_tail), Some(sides.reference_tail), None),
    };
    Ok(NumericReport {
        identity: id.name(),
        l,
        value: sides.value,
        reference: sides.reference,
        difference,
        truncation: n,
        tail_estimate: tail,
        value_tail,
        reference_tail,
        product_terms,
        tolerance: tol,
        pass: difference.abs() <= tol,
    })
}

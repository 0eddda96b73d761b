//! Truncated nested sums by a single left-to-right sweep.
//!
//! With `S_i(n)` the sum over chains `n ≥ n_i > n_{i+1} > … > n_l ≥ 1` of the
//! product of slot terms from `i` onwards, each step updates
//! `S_i(n) = S_i(n−1) + f_i(n)·S_{i+1}(n−1)` for `i = 1..l` in order, so the
//! whole sum up to `N` costs `O(l·N)`.

use num_bigint::BigInt;

use super::index::{MzvIndex, Slot};
use crate::rings::rational::Rational;

/// Running sum plus a representation of the terms.
pub(crate) trait SweepField {
    type Value: Clone;
    type Acc: Clone;
    fn one() -> Self::Value;
    fn acc_zero() -> Self::Acc;
    fn acc_add(acc: &mut Self::Acc, v: Self::Value);
    fn acc_value(acc: &Self::Acc) -> Self::Value;
    fn term(n: u64, slot: Slot) -> Self::Value;
    fn mul(a: &Self::Value, b: &Self::Value) -> Self::Value;
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) struct Float;

impl SweepField for Float {
    type Value = f64;
    type Acc = Compensated;
    fn one() -> f64 {
        1.0
    }
    fn acc_zero() -> Compensated {
        Compensated::default()
    }
    fn acc_add(acc: &mut Compensated, v: f64) {
        acc.add(v)
    }
    fn acc_value(acc: &Compensated) -> f64 {
        acc.value()
    }
    fn term(n: u64, slot: Slot) -> f64 {
        let mag = (n as f64).powi(-(slot.exponent as i32));
        if slot.alternating && n % 2 == 1 {
            -mag
        } else {
            mag
        }
    }
    fn mul(a: &f64, b: &f64) -> f64 {
        a * b
    }
}

pub(crate) struct Exact;

impl SweepField for Exact {
    type Value = Rational;
    type Acc = Rational;
    fn one() -> Rational {
        Rational::from_integer(1.into())
    }
    fn acc_zero() -> Rational {
        Rational::from_integer(0.into())
    }
    fn acc_add(acc: &mut Rational, v: Rational) {
        *acc += v
    }
    fn acc_value(acc: &Rational) -> Rational {
        acc.clone()
    }
    fn term(n: u64, slot: Slot) -> Rational {
        let sign = if slot.alternating && n % 2 == 1 {
            -1
        } else {
            1
        };
        Rational::new(BigInt::from(sign), BigInt::from(n).pow(slot.exponent))
    }
    fn mul(a: &Rational, b: &Rational) -> Rational {
        a * b
    }
}

/// Runs the sweep to `n_max`, calling `each` with the outer sum after each step.
pub(crate) fn sweep<F: SweepField>(
    idx: &MzvIndex,
    n_max: u64,
    mut each: impl FnMut(u64, F::Value),
) -> F::Value {
    let slots = idx.slots();
    let depth = slots.len();
    let mut acc: Vec<F::Acc> = vec![F::acc_zero(); depth];
    for n in 1..=n_max {
        for i in 0..depth {
            let inner = if i + 1 < depth {
                F::acc_value(&acc[i + 1])
            } else {
                F::one()
            };
            let v = F::mul(&F::term(n, slots[i]), &inner);
            F::acc_add(&mut acc[i], v);
        }
        each(n, F::acc_value(&acc[0]));
    }
    F::acc_value(&acc[0])
}

//! Rising factorials `(x)_k = x(x+1)…(x+k−1)` with `x` linear in `t`.

use num_traits::{One, Zero};

use super::cyclo::Cyclo;
use super::poly::{CycloPoly, Poly};
use super::rational::{int, Rational};
use super::Scalar;

/// `(a + c·t)_k` over Q(ω).
pub fn pochhammer_linear(c: &Cyclo, a: &Rational, k: usize) -> CycloPoly {
    pochhammer(c, &Cyclo::rational(a.clone()), k)
}

/// `(a + c·t)_k` over any scalar ring.
pub fn pochhammer<S: Scalar>(c: &S, a: &S, k: usize) -> Poly<S> {
    let mut p = Poly::<S>::one();
    for j in 0..k {
        p = p.mul_linear(&a.add_ref(&S::from_rational(int(j as i64))), c);
    }
    p
}

/// `(x)_k` for a scalar `x`.
pub fn pochhammer_value<S: Scalar>(x: &S, k: usize) -> S {
    (0..k).fold(S::one(), |acc, j| {
        acc.mul_ref(&x.add_ref(&S::from_rational(int(j as i64))))
    })
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, j| acc * int(j as i64))
}

/// `∏_{j<k} ((a+j)² − (a+j)·x + x²)`, which is `(a+ωx)_k (a+ω²x)_k` at a
/// rational point `x`.
pub fn omega_pair_product(a: &Rational, x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| {
        let s = a + int(j as i64);
        acc * (&s * &s - &s * x + x * x)
    })
}

pub fn has_zero_factor(a: &Rational, k: usize) -> bool {
    (0..k).any(|j| (a + int(j as i64)).is_zero())
}

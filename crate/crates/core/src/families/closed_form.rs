//! Closed-form double sums over Q(ω).
//!
//! The sums are evaluated as written, with ω-Pochhammer factors, and only
//! then projected back to Q. With `α = p/q` every linear factor is scaled by
//! `q`, so each summand is an integer polynomial over Z[ω] and the sum carries
//! a single rational normalization; `1/(k!(n−k)!)` becomes `C(n,k)/n!`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::rings::pochhammer::factorial;
use crate::rings::rational::{int, Rational};
use crate::rings::{cyclo_project, Cyclo, CycloPoly, TPoly};

/// `re + wc·ω` with integer parts.
#[derive(Clone, Debug, PartialEq)]
struct Zw {
    re: BigInt,
    wc: BigInt,
}

impl Zw {
    fn int(v: BigInt) -> Self {
        Zw {
            re: v,
            wc: BigInt::zero(),
        }
    }

    fn omega(scale: &BigInt) -> Self {
        Zw {
            re: BigInt::zero(),
            wc: scale.clone(),
        }
    }

    fn omega_sq(scale: &BigInt) -> Self {
        Zw {
            re: -scale,
            wc: -scale,
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.wc.is_zero()
    }

    fn mul(&self, o: &Zw) -> Zw {
        if self.wc.is_zero() && o.wc.is_zero() {
            return Zw::int(&self.re * &o.re);
        }
        let bd = &self.wc * &o.wc;
        Zw {
            re: &self.re * &o.re - &bd,
            wc: &self.re * &o.wc + &self.wc * &o.re - bd,
        }
    }

    fn add_assign(&mut self, o: &Zw) {
        self.re += &o.re;
        self.wc += &o.wc;
    }
}

#[derive(Clone, Debug)]
struct ZwPoly(Vec<Zw>);

impl ZwPoly {
    fn one() -> Self {
        ZwPoly(vec![Zw::int(BigInt::one())])
    }

    /// Multiplication by `a + c·t`.
    fn mul_linear(&self, a: &Zw, c: &Zw) -> ZwPoly {
        let n = self.0.len();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut v = Zw::int(BigInt::zero());
            if i < n {
                v.add_assign(&self.0[i].mul(a));
            }
            if i > 0 {
                v.add_assign(&self.0[i - 1].mul(c));
            }
            out.push(v);
        }
        ZwPoly(out)
    }

    fn mul(&self, o: &ZwPoly) -> ZwPoly {
        let mut out = vec![Zw::int(BigInt::zero()); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j].add_assign(&a.mul(b));
            }
        }
        ZwPoly(out)
    }

    fn add_scaled(&mut self, o: &ZwPoly, k: &BigInt) {
        if self.0.len() < o.0.len() {
            self.0.resize(o.0.len(), Zw::int(BigInt::zero()));
        }
        for (dst, src) in self.0.iter_mut().zip(&o.0) {
            dst.re += &src.re * k;
            dst.wc += &src.wc * k;
        }
    }

    fn to_cyclo(&self, scale: &Rational) -> CycloPoly {
        CycloPoly::new(
            self.0
                .iter()
                .map(|c| {
                    Cyclo::new(
                        Rational::from_integer(c.re.clone()) * scale,
                        Rational::from_integer(c.wc.clone()) * scale,
                    )
                })
                .collect(),
        )
    }
}

/// `∏_{j<k} (shift + step·j + coeff·t)` for `k = 0..=kmax`.
fn rising(shift: &BigInt, step: &BigInt, coeff: &Zw, kmax: usize) -> Vec<ZwPoly> {
    let mut out = vec![ZwPoly::one()];
    for j in 0..kmax {
        let a = Zw::int(shift + step * BigInt::from(j));
        let next = out[j].mul_linear(&a, coeff);
        out.push(next);
    }
    out
}

/// `∏_{j<k} (shift + step·j + scale·ωt)(shift + step·j + scale·ω²t)`.
fn omega_pairs(shift: &BigInt, step: &BigInt, scale: &BigInt, kmax: usize) -> Vec<ZwPoly> {
    let w1 = rising(shift, step, &Zw::omega(scale), kmax);
    let w2 = rising(shift, step, &Zw::omega_sq(scale), kmax);
    w1.iter().zip(&w2).map(|(a, b)| a.mul(b)).collect()
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Which factors of the `B_n^α` summand carry the shift `α`.
#[derive(Clone, Copy)]
enum Form {
    /// `(ωt)_k(ω²t)_k(α+t)_{n−k}(α−t+k)_{n−k}`
    First,
    /// `(α+ωt)_k(α+ω²t)_k(t)_{n−k}(α−t+k)_{n−k}`
    Second,
}

fn b_alpha_range(alpha: &Rational, from: usize, nmax: usize, form: Form) -> Result<Vec<TPoly>> {
    let (p, q) = (alpha.numer().clone(), alpha.denom().clone());
    let zero = BigInt::zero();
    let (w_shift, u_shift) = match form {
        Form::First => (&zero, &p),
        Form::Second => (&p, &zero),
    };
    let w = omega_pairs(w_shift, &q, &q, nmax);
    let u = rising(u_shift, &q, &Zw::int(q.clone()), nmax);
    let minus_q = Zw::int(-&q);
    (from..=nmax)
        .map(|n| {
            let binom = binomial_row(n);
            // (α − t + k)_{n−k}, built from k = n downwards
            let mut tail = ZwPoly::one();
            let mut acc = ZwPoly(Vec::new());
            for k in (0..=n).rev() {
                if k < n {
                    tail = tail.mul_linear(&Zw::int(&p + &q * BigInt::from(k)), &minus_q);
                }
                acc.add_scaled(&w[k].mul(&u[n - k].mul(&tail)), &binom[k]);
            }
            let f = factorial(n);
            let qpow = Rational::from_integer(q.pow(2 * n as u32));
            cyclo_project(&acc.to_cyclo(&(qpow * &f * &f).recip()))
        })
        .collect()
}

/// `C_n = ∏_{j<n} (j³ + t³) / n!³`.
pub fn c_coeff(n: usize) -> TPoly {
    let t3 = TPoly::monomial(int(1), 3);
    let prod = (0..n as i64).fold(TPoly::one(), |acc, j| {
        &acc * &(&t3 + &TPoly::constant(int(j * j * j)))
    });
    let f = factorial(n);
    prod.scale(&(&f * &f * &f).recip())
}

/// `B_n` from its ω-Pochhammer double sum.
pub fn b_hyper(n: usize) -> Result<TPoly> {
    Ok(b_alpha_sum1(&Rational::zero(), n, n)?.remove(0))
}

/// First closed form of `B_n^α` for `n = from..=nmax`:
/// `(1/n!) Σ_k (ωt)_k(ω²t)_k(α+t)_{n−k}(α−t+k)_{n−k} / (k!(n−k)!)`.
pub fn b_alpha_sum1(alpha: &Rational, from: usize, nmax: usize) -> Result<Vec<TPoly>> {
    b_alpha_range(alpha, from, nmax, Form::First)
}

/// Second closed form of `B_n^α`:
/// `(1/n!) Σ_k (α+ωt)_k(α+ω²t)_k(t)_{n−k}(α−t+k)_{n−k} / (k!(n−k)!)`.
pub fn b_alpha_sum2(alpha: &Rational, from: usize, nmax: usize) -> Result<Vec<TPoly>> {
    b_alpha_range(alpha, from, nmax, Form::Second)
}

/// `A'_n = 1/(2ⁿ (1/2)_n n!) Σ_k (−1)^k (ωt/2)_k(ω²t/2)_k(t/2)_{n−k}(1/2)_{n−k} / (k!(n−k)!)`.
pub fn a_prime_entry(n: usize) -> Result<TPoly> {
    let two = BigInt::from(2);
    let zero = BigInt::zero();
    // factors scaled by 2: (2j + ωt), (2j + t), (1 + 2j)
    let w = omega_pairs(&zero, &two, &BigInt::one(), n);
    let u: Vec<ZwPoly> = rising(&zero, &two, &Zw::int(BigInt::one()), n)
        .into_iter()
        .enumerate()
        .map(|(m, p)| {
            let odd: BigInt = (0..m).map(|j| BigInt::from(2 * j + 1)).product();
            p.mul(&ZwPoly(vec![Zw::int(odd)]))
        })
        .collect();
    let binom = binomial_row(n);
    let mut acc = ZwPoly(Vec::new());
    for k in 0..=n {
        let c = if k % 2 == 0 {
            binom[k].clone()
        } else {
            -&binom[k]
        };
        acc.add_scaled(&w[k].mul(&u[n - k]), &c);
    }
    // 2ⁿ (1/2)_n = (2n − 1)!!
    let double_fact: BigInt = (0..n).map(|j| BigInt::from(2 * j + 1)).product();
    let f = factorial(n);
    let norm = Rational::from_integer(double_fact * two.pow(2 * n as u32)) * &f * &f;
    cyclo_project(&acc.to_cyclo(&norm.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::pochhammer::pochhammer_linear;
    use crate::rings::rational::q;

    #[test]
    fn c_closed_form() {
        assert_eq!(c_coeff(0), TPoly::one());
        assert_eq!(c_coeff(1), TPoly::monomial(int(1), 3));
        assert_eq!(
            c_coeff(2),
            TPoly::from_strings(&["0", "0", "0", "1/8", "0", "0", "1/8"]).unwrap()
        );
    }

    #[test]
    fn b_hyper_small() {
        assert_eq!(b_hyper(0).unwrap(), TPoly::one());
        assert!(b_hyper(1).unwrap().is_zero());
        assert_eq!(b_hyper(2).unwrap(), TPoly::monomial(q(1, 4), 3));
        assert_eq!(b_hyper(3).unwrap(), TPoly::monomial(q(1, 6), 3));
    }

    #[test]
    fn b_hyper_two_by_hand() {
        // the three k-terms t²(t²−1)/4 + t³(1−t)/2 + t²(t²−t+1)/4
        let k0 = TPoly::from_strings(&["0", "0", "-1/4", "0", "1/4"]).unwrap();
        let k1 = TPoly::from_strings(&["0", "0", "0", "1/2", "-1/2"]).unwrap();
        let k2 = TPoly::from_strings(&["0", "0", "1/4", "-1/4", "1/4"]).unwrap();
        assert_eq!(&(&k0 + &k1) + &k2, b_hyper(2).unwrap());
    }

    /// The summand built directly from rational Pochhammer polynomials over Q(ω).
    fn unscaled_sum1(alpha: &Rational, n: usize) -> TPoly {
        let mut acc = CycloPoly::zero();
        for k in 0..=n {
            let mut term = &pochhammer_linear(&Cyclo::omega(), &int(0), k)
                * &pochhammer_linear(&Cyclo::omega_sq(), &int(0), k);
            term = &term * &pochhammer_linear(&Cyclo::one(), alpha, n - k);
            term = &term * &pochhammer_linear(&-Cyclo::one(), &(alpha + int(k as i64)), n - k);
            acc = &acc + &term.scale(&(factorial(k) * factorial(n - k)).recip());
        }
        cyclo_project(&acc.scale(&factorial(n).recip())).unwrap()
    }

    #[test]
    fn scaled_evaluation_matches_unscaled() {
        for a in [q(0, 1), q(1, 3), q(-5, 2), q(7, 4)] {
            let fast = b_alpha_sum1(&a, 0, 7).unwrap();
            for (n, p) in fast.iter().enumerate() {
                assert_eq!(p, &unscaled_sum1(&a, n), "alpha = {a}, n = {n}");
            }
        }
    }

    #[test]
    fn a_prime_small() {
        assert_eq!(a_prime_entry(0).unwrap(), TPoly::one());
        assert_eq!(
            a_prime_entry(1).unwrap(),
            TPoly::from_strings(&["0", "1/4", "-1/4"]).unwrap()
        );
        assert_eq!(
            a_prime_entry(2).unwrap(),
            TPoly::from_strings(&["0", "1/32", "7/192", "-1/48", "1/192"]).unwrap()
        );
    }

    #[test]
    fn b_alpha_first_entry_is_alpha_squared() {
        for a in [q(1, 3), q(-5, 2), int(2)] {
            assert_eq!(b_alpha_sum1(&a, 1, 1).unwrap()[0], TPoly::constant(&a * &a));
            assert_eq!(b_alpha_sum2(&a, 1, 1).unwrap()[0], TPoly::constant(&a * &a));
        }
    }
}

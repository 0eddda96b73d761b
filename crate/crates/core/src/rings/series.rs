//! Truncated power series in `z` whose coefficients are polynomials in `t`,
//! together with the operator words that act on them.
//!
//! A series of order `N` knows its coefficients of `z^0..=z^N` exactly and
//! nothing beyond. Combining two series truncates to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Poly, TPoly};
use super::rational::{int, Rational};
use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries<S = Rational> {
    coeffs: Vec<Poly<S>>,
}

impl<S: Scalar> ZSeries<S> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Poly<S>>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        ZSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Poly::one()], order)
    }

    /// The series `z` (order must be at least one to be nonzero).
    pub fn z(order: usize) -> Self {
        Self::new(vec![Poly::zero(), Poly::one()], order)
    }

    pub fn from_scalars(coeffs: Vec<S>, order: usize) -> Self {
        Self::new(coeffs.into_iter().map(Poly::constant).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly<S>] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly<S> {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn first_nonzero_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale_poly(&self, p: &Poly<S>) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// z ↦ −z.
    pub fn reflect(&self) -> Self {
        ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// d/dz, losing one order.
    pub fn derivative(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Err(Error::OrderUnderflow {
                needed: 1,
                available: 0,
            });
        }
        let coeffs = (0..order)
            .map(|n| self.coeffs[n + 1].scale(&int(n as i64 + 1)))
            .collect();
        Ok(Self::new(coeffs, order - 1))
    }

    /// θ = z·d/dz, which is exact and keeps the order.
    pub fn theta(&self) -> Self {
        ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&int(n as i64)))
                .collect(),
        }
    }

    /// `(1 + sign·z)·d/dz` with `sign = ±1`.
    fn shifted_derivative(&self, sign: i64) -> Result<Self> {
        let d = self.derivative()?;
        let zd = ZSeries::new(
            std::iter::once(Poly::zero())
                .chain(d.coeffs.iter().map(|c| c.scale(&int(sign))))
                .collect(),
            d.order(),
        );
        Ok(&d + &zd)
    }

    /// `f(g(z))` for `g` with zero constant term.
    pub fn compose(&self, inner: &ZSeries<S>) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Argument("inner series must vanish at z = 0".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut power = ZSeries::one(order);
        let mut acc = ZSeries::zero(order);
        for c in &self.coeffs[..=order] {
            acc = &acc + &power.scale_poly(c);
            power = &power * &inner;
        }
        Ok(acc)
    }

    pub fn map_coeffs<R: Scalar>(&self, f: impl Fn(&Poly<S>) -> Poly<R>) -> ZSeries<R> {
        ZSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn apply(&self, op: &Operator<S>) -> Result<Self> {
        op.apply(self)
    }
}

impl ZSeries<Rational> {
    /// Specializes every coefficient at `t = t0`.
    pub fn at_t(&self, t0: &Rational) -> ZSeries<Rational> {
        self.map_coeffs(|p| TPoly::constant(p.eval(t0)))
    }
}

impl<'a, S: Scalar> Add<&'a ZSeries<S>> for &'a ZSeries<S> {
    type Output = ZSeries<S>;
    fn add(self, rhs: &ZSeries<S>) -> ZSeries<S> {
        let order = self.order().min(rhs.order());
        ZSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a, S: Scalar> Sub<&'a ZSeries<S>> for &'a ZSeries<S> {
    type Output = ZSeries<S>;
    fn sub(self, rhs: &ZSeries<S>) -> ZSeries<S> {
        let order = self.order().min(rhs.order());
        ZSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a, S: Scalar> Mul<&'a ZSeries<S>> for &'a ZSeries<S> {
    type Output = ZSeries<S>;
    fn mul(self, rhs: &ZSeries<S>) -> ZSeries<S> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(Poly::zero(), |acc, k| {
                    if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                        acc
                    } else {
                        &acc + &(&self.coeffs[k] * &rhs.coeffs[n - k])
                    }
                })
            })
            .collect();
        ZSeries { coeffs }
    }
}

impl<S: Scalar> Neg for &ZSeries<S> {
    type Output = ZSeries<S>;
    fn neg(self) -> ZSeries<S> {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for ZSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// A single operator letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpLetter {
    /// θ = z·d/dz
    Theta,
    /// D₋ = (1 − z)·d/dz
    DMinus,
    /// D₊ = (1 + z)·d/dz
    DPlus,
    /// plain d/dz
    D,
    /// multiplication by t³
    MulT3,
    /// z ↦ −z
    Reflect,
}

impl OpLetter {
    /// Orders of truncation this letter consumes.
    pub fn cost(self) -> usize {
        match self {
            OpLetter::DMinus | OpLetter::DPlus | OpLetter::D => 1,
            OpLetter::Theta | OpLetter::MulT3 | OpLetter::Reflect => 0,
        }
    }

    fn apply<S: Scalar>(self, s: &ZSeries<S>) -> Result<ZSeries<S>> {
        match self {
            OpLetter::Theta => Ok(s.theta()),
            OpLetter::DMinus => s.shifted_derivative(-1),
            OpLetter::DPlus => s.shifted_derivative(1),
            OpLetter::D => s.derivative(),
            OpLetter::MulT3 => Ok(s.scale_poly(&Poly::monomial(S::one(), 3))),
            OpLetter::Reflect => Ok(s.reflect()),
        }
    }
}

/// A composition of letters written left to right as in operator notation:
/// the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpWord(pub Vec<OpLetter>);

impl OpWord {
    pub fn new(letters: impl IntoIterator<Item = OpLetter>) -> Self {
        OpWord(letters.into_iter().collect())
    }

    pub fn cost(&self) -> usize {
        self.0.iter().map(|l| l.cost()).sum()
    }

    pub fn then(&self, inner: &OpWord) -> OpWord {
        OpWord(self.0.iter().chain(inner.0.iter()).copied().collect())
    }

    pub fn apply<S: Scalar>(&self, s: &ZSeries<S>) -> Result<ZSeries<S>> {
        let needed = self.cost();
        if needed > s.order() {
            return Err(Error::OrderUnderflow {
                needed,
                available: s.order(),
            });
        }
        self.0
            .iter()
            .rev()
            .try_fold(s.clone(), |acc, l| l.apply(&acc))
    }
}

/// A finite sum `Σ c_i · w_i` of words with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<S = Rational> {
    terms: Vec<(Poly<S>, OpWord)>,
}

impl<S: Scalar> Operator<S> {
    pub fn word(letters: impl IntoIterator<Item = OpLetter>) -> Self {
        Operator {
            terms: vec![(Poly::one(), OpWord::new(letters))],
        }
    }

    /// Multiplication by a polynomial in `t`.
    pub fn scalar(c: Poly<S>) -> Self {
        Operator {
            terms: vec![(c, OpWord(Vec::new()))],
        }
    }

    pub fn plus(mut self, other: Operator<S>) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: Operator<S>) -> Self {
        let neg = other.terms.into_iter().map(|(c, w)| (-c, w)).collect();
        self.plus(Operator { terms: neg })
    }

    /// Composition `self ∘ inner`. Coefficients are t-polynomials and so
    /// commute with every letter.
    pub fn compose(&self, inner: &Operator<S>) -> Self {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &inner.terms {
                terms.push((c1 * c2, w1.then(w2)));
            }
        }
        Operator { terms }
    }

    pub fn cost(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.cost()).max().unwrap_or(0)
    }

    pub fn apply(&self, s: &ZSeries<S>) -> Result<ZSeries<S>> {
        let needed = self.cost();
        if needed > s.order() {
            return Err(Error::OrderUnderflow {
                needed,
                available: s.order(),
            });
        }
        let mut acc = ZSeries::zero(s.order() - needed);
        for (c, w) in &self.terms {
            acc = &acc + &w.apply(s)?.scale_poly(c);
        }
        Ok(acc)
    }
}

//! The ring Q(ω) with ω a primitive cube root of unity, stored as `re + wc·ω`
//! and reduced with ω² = −1 − ω.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo {
    pub re: Rational,
    pub wc: Rational,
}

impl Cyclo {
    pub fn new(re: Rational, wc: Rational) -> Self {
        Cyclo { re, wc }
    }

    pub fn rational(re: Rational) -> Self {
        Cyclo {
            re,
            wc: Rational::zero(),
        }
    }

    pub fn omega() -> Self {
        Cyclo::new(Rational::zero(), Rational::one())
    }

    /// ω² = −1 − ω.
    pub fn omega_sq() -> Self {
        Cyclo::new(-Rational::one(), -Rational::one())
    }

    /// The automorphism ω ↦ ω².
    pub fn conj(&self) -> Self {
        Cyclo::new(&self.re - &self.wc, -self.wc.clone())
    }

    /// a² − ab + b², equal to `self * self.conj()`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.wc + &self.wc * &self.wc
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Cyclo::new(c.re / &n, c.wc / &n))
    }

    pub fn is_rational(&self) -> bool {
        self.wc.is_zero()
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.wc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}w", self.wc),
            (false, false) => write!(f, "({}+{}w)", self.re, self.wc),
        }
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new(&self.re + &rhs.re, &self.wc + &rhs.wc)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new(&self.re - &rhs.re, &self.wc - &rhs.wc)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        if self.wc.is_zero() && rhs.wc.is_zero() {
            return Cyclo::rational(&self.re * &rhs.re);
        }
        let bd = &self.wc * &rhs.wc;
        Cyclo::new(
            &self.re * &rhs.re - &bd,
            &self.re * &rhs.wc + &self.wc * &rhs.re - bd,
        )
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::new(-self.re, -self.wc)
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.wc.is_zero()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::rational(Rational::one())
    }
}

impl From<Rational> for Cyclo {
    fn from(q: Rational) -> Self {
        Cyclo::rational(q)
    }
}

impl Scalar for Cyclo {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_rational(q: Rational) -> Self {
        Cyclo::rational(q)
    }
    fn scale(&self, q: &Rational) -> Self {
        Cyclo::new(&self.re * q, &self.wc * q)
    }
}

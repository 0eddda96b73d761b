//! Exact arithmetic: rationals, the ring Q(ω), dense polynomials in `t`,
//! truncated power series in `z`, and Pochhammer products.

pub mod cyclo;
pub mod pochhammer;
pub mod poly;
pub mod rational;
pub mod series;

use std::fmt;
use std::ops::Neg;

use num_traits::{One, Zero};

pub use cyclo::Cyclo;
pub use pochhammer::pochhammer_linear;
pub use poly::{cyclo_project, CycloPoly, Poly, TPoly};
pub use rational::Rational;
pub use series::{OpLetter, OpWord, Operator, ZSeries};

/// Coefficient ring for [`Poly`]. Implemented for [`Rational`] and [`Cyclo`].
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn from_rational(q: Rational) -> Self;
    fn scale(&self, q: &Rational) -> Self;
}

impl Scalar for Rational {
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
        q
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

//! Sturm-chain certification that polynomials in `x = t³` have every real
//! root, and only real roots, on the half-line `(−∞, 0]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyTable;
use crate::rings::rational::{primitive_parts, to_text, Rational};
use crate::rings::TPoly;

/// A polynomial in `x`, coefficients by increasing power, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly(TPoly);

impl XPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        XPoly(TPoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.eval(x)
    }

    pub fn as_poly(&self) -> &TPoly {
        &self.0
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string().replace('t', "x"))
    }
}

/// Substitutes `x = t³`.
pub fn to_x_poly(p: &TPoly) -> Result<XPoly> {
    if let Some(e) = p.first_exponent_off_t3() {
        return Err(Error::NotInT3(e));
    }
    Ok(XPoly::new(p.coeffs().iter().step_by(3).cloned().collect()))
}

type IntPoly = Vec<BigInt>;

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn primitive_int(v: IntPoly) -> IntPoly {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn to_int(p: &[Rational]) -> IntPoly {
    primitive_parts(p).1
}

fn to_rational(p: &[BigInt]) -> XPoly {
    XPoly::new(p.iter().cloned().map(Rational::from_integer).collect())
}

/// `|lc(b)|^k · a mod b`, a positive multiple of the true remainder.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0u32;
    while r.len() > db {
        let k = r.len() - 1;
        let f = r[k].clone();
        for c in r.iter_mut() {
            *c *= lead;
        }
        for (i, c) in b.iter().enumerate() {
            r[k - db + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
        steps += 1;
    }
    if lead.is_negative() && steps % 2 == 1 {
        r = r.into_iter().map(|c| -c).collect();
    }
    primitive_int(r)
}

fn div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let mut r: Vec<Rational> = a.iter().cloned().map(Rational::from_integer).collect();
    let lead = Rational::from_integer(b[db].clone());
    let mut q = vec![Rational::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let f = &r[k] / &lead;
        for (i, c) in b.iter().enumerate() {
            r[k - db + i] -= &f * Rational::from_integer(c.clone());
        }
        q[k - db] = f;
    }
    to_int(&q)
}

fn derivative(v: &[BigInt]) -> IntPoly {
    primitive_int(
        v.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Sign of `p(n/d)` for `d > 0`, via the homogenized integer sum.
fn sign_at(p: &[BigInt], x: &Rational) -> i8 {
    let (n, d) = (x.numer(), x.denom());
    let Some((lead, rest)) = p.split_last() else {
        return 0;
    };
    let mut acc = lead.clone();
    let mut dpow = BigInt::one();
    for c in rest.iter().rev() {
        dpow *= d;
        acc = acc * n + c * &dpow;
    }
    sign_of(&acc)
}

/// `p, p′, −rem(p, p′), …` down to the last nonzero remainder (a scalar
/// multiple of `gcd(p, p′)`), each element in primitive integer form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &XPoly) -> Result<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::Argument("Sturm chain needs degree ≥ 1".into()));
        }
        Ok(Self::from_int(to_int(p.coeffs())))
    }

    fn from_int(p: IntPoly) -> Self {
        let dp = derivative(&p);
        let mut chain = vec![p, dp];
        loop {
            let n = chain.len();
            let r = pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        SturmChain { chain }
    }

    pub fn elements(&self) -> Vec<XPoly> {
        self.chain.iter().map(|p| to_rational(p)).collect()
    }

    /// The last element, proportional to `gcd(p, p′)`.
    pub fn gcd(&self) -> XPoly {
        to_rational(self.chain.last().expect("nonempty chain"))
    }

    /// Sign changes at `x`; `None` stands for `−∞`.
    pub fn variations_at(&self, x: Option<&Rational>) -> usize {
        self.count_variations(|p| match x {
            Some(x) => sign_at(p, x),
            None => sign_at_infinity(p, true),
        })
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        self.count_variations(|p| sign_at_infinity(p, false))
    }

    fn variations(&self, bound: Bound<'_>) -> usize {
        match bound {
            Bound::NegInf => self.variations_at(None),
            Bound::At(x) => self.variations_at(Some(x)),
            Bound::PosInf => self.variations_at_pos_infinity(),
        }
    }

    fn count_variations(&self, s: impl Fn(&[BigInt]) -> i8) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| s(p))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(lo, hi]`, valid when the chain starts from a
    /// squarefree polynomial.
    fn count(&self, lo: Bound<'_>, hi: Bound<'_>) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

#[derive(Clone, Copy)]
enum Bound<'a> {
    NegInf,
    At(&'a Rational),
    PosInf,
}

fn sign_of(r: &BigInt) -> i8 {
    match r.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_at_infinity(p: &[BigInt], negative: bool) -> i8 {
    let Some(lead) = p.last() else { return 0 };
    let s = sign_of(lead);
    if negative && p.len().is_multiple_of(2) {
        -s
    } else {
        s
    }
}

fn squarefree_int(p: IntPoly) -> IntPoly {
    if p.len() <= 2 {
        return p;
    }
    let chain = SturmChain::from_int(p.clone());
    let g = chain.chain.last().expect("nonempty");
    if g.len() == 1 {
        return p;
    }
    div_exact(&p, g)
}

/// `p / gcd(p, p′)`, made primitive.
pub fn squarefree_part(p: &XPoly) -> XPoly {
    if p.is_zero() {
        return p.clone();
    }
    to_rational(&squarefree_int(to_int(p.coeffs())))
}

fn bound(x: Option<&Rational>, neg: bool) -> Bound<'_> {
    match (x, neg) {
        (Some(x), _) => Bound::At(x),
        (None, true) => Bound::NegInf,
        (None, false) => Bound::PosInf,
    }
}

/// Distinct real roots in `(lo, hi]`; `None` bounds are `∓∞`.
pub fn count_real_roots(p: &XPoly, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = SturmChain::from_int(squarefree_int(to_int(p.coeffs())));
    chain.count(bound(lo, true), bound(hi, false))
}

/// An interval `(lo, hi]` isolating one offending root, or a count of
/// non-real roots when that is all that is wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    PositiveRoot { lo: String, hi: String },
    NonReal { pairs: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub degree_sqfree: usize,
    pub roots_in_halfline: usize,
    pub positive_roots: usize,
    /// `degree − degree_sqfree`, the excess from repeated roots.
    pub repeated: usize,
    pub root_at_zero: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Upper bound on the moduli of the roots.
fn cauchy_bound(p: &XPoly) -> Rational {
    let c = p.coeffs();
    let lead = c.last().expect("nonzero").abs();
    let m = c[..c.len() - 1]
        .iter()
        .map(|a| a.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

fn isolate_positive(chain: &SturmChain, p: &XPoly) -> Witness {
    let mut lo = Rational::zero();
    let mut hi = cauchy_bound(p);
    let two = Rational::from_integer(2.into());
    while chain.count(Bound::At(&lo), Bound::At(&hi)) > 1 {
        let mid = (&lo + &hi) / &two;
        if chain.count(Bound::At(&lo), Bound::At(&mid)) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Witness::PositiveRoot {
        lo: to_text(&lo),
        hi: to_text(&hi),
    }
}

/// Checks that `p` splits over the reals with every root in `(−∞, 0]`.
pub fn certify_nonpositive(p: &XPoly) -> Result<RootReport> {
    let Some(degree) = p.degree() else {
        return Err(Error::Argument("cannot certify the zero polynomial".into()));
    };
    let sq = squarefree_int(to_int(p.coeffs()));
    let degree_sqfree = sq.len() - 1;
    let (roots_in_halfline, positive_roots, chain) = if degree_sqfree == 0 {
        (0, 0, None)
    } else {
        let chain = SturmChain::from_int(sq);
        let zero = Rational::zero();
        let neg = chain.count(Bound::NegInf, Bound::At(&zero));
        let pos = chain.count(Bound::At(&zero), Bound::PosInf);
        (neg, pos, Some(chain))
    };
    let pass = roots_in_halfline == degree_sqfree && positive_roots == 0;
    let witness = match (&chain, pass) {
        (_, true) => None,
        (Some(chain), false) if positive_roots > 0 => Some(isolate_positive(chain, p)),
        _ => Some(Witness::NonReal {
            pairs: (degree_sqfree - roots_in_halfline) / 2,
        }),
    };
    Ok(RootReport {
        degree,
        degree_sqfree,
        roots_in_halfline,
        positive_roots,
        repeated: degree - degree_sqfree,
        root_at_zero: p.coeffs()[0].is_zero(),
        pass,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub family: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(flatten)]
    pub report: RootReport,
}

/// Certifies entries `from..=nmax` of a table.
pub fn certify_table(table: &FamilyTable, from: usize) -> Result<Vec<Certificate>> {
    let family = table.family();
    (from..=table.nmax())
        .map(|n| {
            let x = to_x_poly(&table.entries()[n])?;
            Ok(Certificate {
                family: family.tag().to_string(),
                n,
                alpha: family.alpha().map(to_text),
                report: certify_nonpositive(&x)?,
            })
        })
        .collect()
}

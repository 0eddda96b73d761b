//! Exact residual checks for the eliminated (even/odd) recurrences of `A_n`,
//! the recursion for `A'_n`, and both recurrences for `Ã_n`.

use serde::Serialize;

use super::{a_prime, a_rec, a_tilde};
use crate::error::{Error, Result};
use crate::rings::rational::int;
use crate::rings::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relations {
    #[serde(rename = "A-even-odd")]
    AEvenOdd,
    #[serde(rename = "Aprime")]
    Aprime,
    #[serde(rename = "Atilde")]
    Atilde,
}

impl std::str::FromStr for Relations {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a-even-odd" | "a" => Ok(Relations::AEvenOdd),
            "aprime" => Ok(Relations::Aprime),
            "atilde" => Ok(Relations::Atilde),
            _ => Err(Error::Parse(format!("unknown recurrence family {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCheck {
    pub relation: &'static str,
    pub n: usize,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub which: Relations,
    pub nmax: usize,
    pub checks: Vec<RecurrenceCheck>,
}

impl RecurrenceReport {
    pub fn all_zero(&self) -> bool {
        self.checks.iter().all(|c| c.zero)
    }
}

/// `c0 + c3·t³`
fn cubic(c0: i64, c3: i64) -> TPoly {
    TPoly::new(vec![int(c0), int(0), int(0), int(c3)])
}

fn k(v: i64) -> TPoly {
    TPoly::constant(int(v))
}

fn sum3(terms: [(TPoly, &TPoly); 3]) -> TPoly {
    terms
        .iter()
        .fold(TPoly::zero(), |acc, (c, p)| &acc + &(c * *p))
}

/// `(−1)ⁿ` as the sign attached to `T = (−1)ⁿt³`.
fn parity(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn a_general(a: &[TPoly], n: i64) -> TPoly {
    let s = parity(n);
    let i = n as usize;
    sum3([
        (
            &(&k(2 * n + 1) * &cubic((n - 1).pow(3), s)) * &cubic((n - 2).pow(3), -s),
            &a[i - 2],
        ),
        (
            &k(-n * (n - 1) * (2 * n - 1)) * &cubic(2 * n * (n - 1) * (n * n - n - 1), -3 * s),
            &a[i],
        ),
        (
            k((n + 2).pow(2) * (n + 1) * n * (n - 1).pow(2) * (2 * n - 3)),
            &a[i + 2],
        ),
    ])
}

/// The eliminated recurrence restricted to `A_{2n}`.
fn a_even(a: &[TPoly], n: i64) -> TPoly {
    let i = 2 * n as usize;
    sum3([
        (
            &(&k(4 * n + 5) * &cubic((2 * n).pow(3), -1)) * &cubic((2 * n + 1).pow(3), 1),
            &a[i],
        ),
        (
            &k(-(4 * n + 3) * (2 * n + 1) * (2 * n + 2))
                * &cubic(2 * (2 * n + 1) * (2 * n + 2) * (4 * n * n + 6 * n + 1), -3),
            &a[i + 2],
        ),
        (
            k((4 * n + 1) * (2 * n + 1).pow(2) * (2 * n + 2) * (2 * n + 3) * (2 * n + 4).pow(2)),
            &a[i + 4],
        ),
    ])
}

/// The same elimination restricted to `A_{2n+1}`.
fn a_odd(a: &[TPoly], n: i64) -> TPoly {
    let i = 2 * n as usize + 1;
    sum3([
        (
            &(&k(4 * n + 7) * &cubic((2 * n + 2).pow(3), -1)) * &cubic((2 * n + 1).pow(3), 1),
            &a[i],
        ),
        (
            &k(-(4 * n + 5) * (2 * n + 2) * (2 * n + 3))
                * &cubic(2 * (2 * n + 2) * (2 * n + 3) * (4 * n * n + 10 * n + 5), 3),
            &a[i + 2],
        ),
        (
            k((4 * n + 3) * (2 * n + 2).pow(2) * (2 * n + 3) * (2 * n + 4) * (2 * n + 5).pow(2)),
            &a[i + 4],
        ),
    ])
}

/// The `A'` recursion with its two rational prefactors cleared:
/// `((2n)³ − t³)/(t − 2n) = −(t² + 2nt + 4n²)` and
/// `((2n+1)³ + t³)/(t + 2n + 1) = t² − (2n+1)t + (2n+1)²`.
fn a_prime_relation(ap: &[TPoly], n: i64) -> TPoly {
    let i = n as usize;
    let m = 2 * n + 1;
    let first = TPoly::new(vec![int(-4 * n * n), int(-2 * n), int(-1)]);
    let second = TPoly::new(vec![int(m * m), int(-m), int(1)]);
    let middle = TPoly::new(vec![
        int((2 * n + 1) * (2 * n + 2)),
        int(8 * n * n + 12 * n + 1),
        int(3),
    ]);
    sum3([
        (&(&k(4 * n + 5) * &first) * &second, &ap[i]),
        (
            &k(-(4 * n + 3) * (2 * n + 1) * (2 * n + 2)) * &middle,
            &ap[i + 1],
        ),
        (
            k((4 * n + 1) * (2 * n + 1).pow(2) * (2 * n + 2) * (2 * n + 3) * (2 * n + 4).pow(2)),
            &ap[i + 2],
        ),
    ])
}

/// `(n³ − (−1)ⁿt³)Ã_{n−1} + (2n+1)nÃ_n − (n+1)²nÃ_{n+1}`
fn a_tilde_three_term(at: &[TPoly], n: i64) -> TPoly {
    let i = n as usize;
    sum3([
        (cubic(n.pow(3), -parity(n)), &at[i - 1]),
        (k((2 * n + 1) * n), &at[i]),
        (k(-(n + 1).pow(2) * n), &at[i + 1]),
    ])
}

fn a_tilde_eliminated(at: &[TPoly], n: i64) -> TPoly {
    let s = parity(n);
    let i = n as usize;
    let inner = 2 * (n * n + n + 1).pow(2) - 6;
    sum3([
        (
            &(&k(2 * n + 3) * &cubic((n - 1).pow(3), s)) * &cubic(n.pow(3), -s),
            &at[i - 2],
        ),
        (&k(-(2 * n + 1) * n * (n - 1)) * &cubic(inner, -s), &at[i]),
        (
            k((2 * n - 1) * (n + 2).pow(2) * (n + 1).pow(2) * n * (n - 1)),
            &at[i + 2],
        ),
    ])
}

fn check(
    out: &mut Vec<RecurrenceCheck>,
    relation: &'static str,
    range: impl Iterator<Item = usize>,
    residual: impl Fn(i64) -> TPoly,
) {
    out.extend(range.map(|n| RecurrenceCheck {
        relation,
        n,
        zero: residual(n as i64).is_zero(),
    }));
}

/// Evaluates every applicable residual whose indices stay within `nmax`.
pub fn verify_eliminated_recurrences(which: Relations, nmax: usize) -> Result<RecurrenceReport> {
    if nmax < 4 {
        return Err(Error::Argument(format!(
            "nmax must be at least 4, got {nmax}"
        )));
    }
    let mut checks = Vec::new();
    match which {
        Relations::AEvenOdd => {
            let table = a_rec(nmax);
            let a = table.entries();
            check(&mut checks, "A-eliminated", 2..=nmax - 2, |n| {
                a_general(a, n)
            });
            check(&mut checks, "A-even", 0..=(nmax - 4) / 2, |n| a_even(a, n));
            if nmax >= 5 {
                check(&mut checks, "A-odd", 0..=(nmax - 5) / 2, |n| a_odd(a, n));
            }
        }
        Relations::Aprime => {
            let table = a_prime(nmax)?;
            let ap = table.entries();
            check(&mut checks, "Aprime", 0..=nmax - 2, |n| {
                a_prime_relation(ap, n)
            });
        }
        Relations::Atilde => {
            let table = a_tilde(nmax);
            let at = table.entries();
            check(&mut checks, "Atilde-3term", 1..=nmax - 1, |n| {
                a_tilde_three_term(at, n)
            });
            check(&mut checks, "Atilde-eliminated", 2..=nmax - 2, |n| {
                a_tilde_eliminated(at, n)
            });
        }
    }
    Ok(RecurrenceReport {
        which,
        nmax,
        checks,
    })
}

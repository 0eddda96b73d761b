//! The polynomial families `C_n`, `B_n`, `B_n^α`, `A_n`, `A'_n` and `Ã_n`,
//! built by recurrence and by closed-form sums, plus the recurrence checks
//! that tie them together.

mod closed_form;
mod eliminated;
mod recurrence;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::rational::{self, Rational};
use crate::rings::TPoly;

pub use closed_form::{a_prime_entry, b_alpha_sum1, b_alpha_sum2, b_hyper, c_coeff};
pub use eliminated::{verify_eliminated_recurrences, RecurrenceCheck, RecurrenceReport, Relations};
pub use recurrence::b_x_coefficients;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    C,
    B,
    Balpha(Rational),
    A,
    Aprime,
    Atilde,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::C => "C",
            Family::B => "B",
            Family::Balpha(_) => "Balpha",
            Family::A => "A",
            Family::Aprime => "Aprime",
            Family::Atilde => "Atilde",
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            Family::Balpha(a) => Some(a),
            _ => None,
        }
    }

    /// Parses a tag, attaching `alpha` where the family needs one.
    pub fn parse(tag: &str, alpha: Option<Rational>) -> Result<Family> {
        let fam = match tag.to_ascii_lowercase().as_str() {
            "c" => Family::C,
            "b" => match alpha {
                Some(a) => return Ok(Family::Balpha(a)),
                None => Family::B,
            },
            "balpha" => {
                return alpha
                    .map(Family::Balpha)
                    .ok_or_else(|| Error::Argument("family Balpha needs an alpha".into()))
            }
            "a" => Family::A,
            "aprime" | "a'" => Family::Aprime,
            "atilde" => Family::Atilde,
            _ => return Err(Error::Parse(format!("unknown family {tag:?}"))),
        };
        if alpha.is_some() {
            return Err(Error::Argument(format!(
                "family {} takes no alpha",
                fam.tag()
            )));
        }
        Ok(fam)
    }

    /// True when every member lies in `Q[t³]`.
    pub fn lives_in_t3(&self) -> bool {
        !matches!(self, Family::Aprime)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Balpha(a) => write!(f, "Balpha[{a}]"),
            other => f.write_str(other.tag()),
        }
    }
}

/// How a table is built. `Sum1`/`Sum2` are the two closed-form double sums;
/// families without a closed form only accept `Rec`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Rec,
    Sum1,
    Sum2,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rec" => Ok(Method::Rec),
            "sum1" | "hyper" => Ok(Method::Sum1),
            "sum2" => Ok(Method::Sum2),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// `entries[n]` is the `n`-th polynomial of `family` for `0 ≤ n ≤ nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    family: Family,
    entries: Vec<TPoly>,
}

impl FamilyTable {
    pub fn build(family: Family, nmax: usize, method: Method) -> Result<Self> {
        let mut table = FamilyTable {
            family,
            entries: Vec::new(),
        };
        table.extend_with(nmax, method)?;
        Ok(table)
    }

    pub fn new(family: Family, entries: Vec<TPoly>) -> Self {
        assert!(!entries.is_empty(), "a table holds at least entry 0");
        FamilyTable { family, entries }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn nmax(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[TPoly] {
        &self.entries
    }

    pub fn get(&self, n: usize) -> Option<&TPoly> {
        self.entries.get(n)
    }

    /// Grows the table to `nmax` with the recurrence, reusing existing entries.
    pub fn extend_to(&mut self, nmax: usize) -> Result<()> {
        self.extend_with(nmax, Method::Rec)
    }

    fn extend_with(&mut self, nmax: usize, method: Method) -> Result<()> {
        if nmax < self.entries.len() {
            return Ok(());
        }
        match (&self.family, method) {
            (Family::C, Method::Rec) => recurrence::extend_c(&mut self.entries, nmax),
            (Family::C, Method::Sum1) => {
                for n in self.entries.len()..=nmax {
                    self.entries.push(c_coeff(n));
                }
            }
            (Family::B, Method::Rec) => recurrence::extend_b(&mut self.entries, nmax),
            (Family::B, Method::Sum1) => {
                for n in self.entries.len()..=nmax {
                    self.entries.push(b_hyper(n)?);
                }
            }
            (Family::Balpha(a), Method::Rec) => {
                let a = a.clone();
                recurrence::extend_b_alpha(&mut self.entries, &a, nmax)
            }
            (Family::Balpha(a), Method::Sum1) => {
                let from = self.entries.len();
                self.entries.extend(b_alpha_sum1(a, from, nmax)?);
            }
            (Family::Balpha(a), Method::Sum2) => {
                let from = self.entries.len();
                self.entries.extend(b_alpha_sum2(a, from, nmax)?);
            }
            (Family::A, Method::Rec) => recurrence::extend_a(&mut self.entries, nmax),
            (Family::Aprime, Method::Rec | Method::Sum1) => {
                for n in self.entries.len()..=nmax {
                    self.entries.push(a_prime_entry(n)?);
                }
            }
            (Family::Atilde, Method::Rec) => {
                // rebuild A from the differences, extend it, and re-accumulate
                let mut a: Vec<TPoly> = Vec::with_capacity(nmax + 1);
                let mut prev = TPoly::zero();
                for at in &self.entries {
                    a.push(at - &prev);
                    prev = at.clone();
                }
                let from = a.len();
                recurrence::extend_a(&mut a, nmax);
                for an in &a[from..] {
                    prev = &prev + an;
                    self.entries.push(prev.clone());
                }
            }
            (fam, m) => {
                return Err(Error::Argument(format!(
                    "family {fam} has no {m:?} construction"
                )))
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableWire::from(self)).expect("table serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: TableWire =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        FamilyTable::try_from(wire)
    }
}

pub fn c_table(nmax: usize) -> FamilyTable {
    FamilyTable::build(Family::C, nmax, Method::Rec).expect("C has a recurrence")
}

/// `B_0..=B_nmax` from the three-term recurrence with `B_0 = 1`, `B_1 = 0`.
pub fn b_rec(nmax: usize) -> FamilyTable {
    FamilyTable::build(Family::B, nmax, Method::Rec).expect("B has a recurrence")
}

pub fn b_alpha(alpha: &Rational, nmax: usize, method: Method) -> Result<FamilyTable> {
    FamilyTable::build(Family::Balpha(alpha.clone()), nmax, method)
}

/// `A_0..=A_nmax` from the alternating-sign recurrence with `A_0 = 1`, `A_1 = 0`.
pub fn a_rec(nmax: usize) -> FamilyTable {
    FamilyTable::build(Family::A, nmax, Method::Rec).expect("A has a recurrence")
}

pub fn a_prime(nmax: usize) -> Result<FamilyTable> {
    FamilyTable::build(Family::Aprime, nmax, Method::Sum1)
}

/// Partial sums `Ã_n = A_0 + … + A_n`.
pub fn a_tilde(nmax: usize) -> FamilyTable {
    FamilyTable::build(Family::Atilde, nmax, Method::Rec).expect("Atilde has a recurrence")
}

/// `{family, alpha?, nmax, entries: [[coeff strings]]}`
#[derive(Serialize, Deserialize)]
struct TableWire {
    family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    nmax: usize,
    entries: Vec<Vec<String>>,
}

impl From<&FamilyTable> for TableWire {
    fn from(t: &FamilyTable) -> Self {
        TableWire {
            family: t.family.tag().to_string(),
            alpha: t.family.alpha().map(rational::to_text),
            nmax: t.nmax(),
            entries: t.entries.iter().map(TPoly::to_strings).collect(),
        }
    }
}

impl TryFrom<TableWire> for FamilyTable {
    type Error = Error;
    fn try_from(w: TableWire) -> Result<Self> {
        let alpha = w.alpha.as_deref().map(rational::parse).transpose()?;
        let family = Family::parse(&w.family, alpha)?;
        if w.entries.len() != w.nmax + 1 {
            return Err(Error::Parse(format!(
                "table claims nmax {} but holds {} entries",
                w.nmax,
                w.entries.len()
            )));
        }
        let entries = w
            .entries
            .iter()
            .map(|e| TPoly::from_strings(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyTable { family, entries })
    }
}

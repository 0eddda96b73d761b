//! Truncated multiple zeta values (with optional alternating slots) and
//! numeric checks of the identities between them.

mod index;
mod sweep;
mod verify;

pub use index::{MzvIndex, Slot};
pub use verify::{verify_identity, Identity, NumericReport, PI_DIGITS};

use crate::error::Result;
use crate::rings::rational::Rational;

/// A truncated sum with its heuristic tail estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MzvValue {
    pub value: f64,
    pub truncation: u64,
    pub tail_estimate: f64,
}

fn check_truncation(idx: &MzvIndex, n: u64) -> Result<()> {
    if n < idx.depth() as u64 {
        return Err(crate::Error::Argument(format!(
            "truncation {n} is below the depth {} of {idx}",
            idx.depth()
        )));
    }
    Ok(())
}

/// Sum over chains `N ≥ n_1 > … > n_l ≥ 1`, accumulated in compensated f64.
pub fn mzv_truncated(idx: &MzvIndex, n: u64) -> Result<MzvValue> {
    check_truncation(idx, n)?;
    let value = sweep::sweep::<sweep::Float>(idx, n, |_, _| {});
    Ok(MzvValue {
        value,
        truncation: n,
        tail_estimate: tail_estimate(idx, n),
    })
}

/// The same sweep in exact rational arithmetic.
pub fn mzv_truncated_exact(idx: &MzvIndex, n: u64) -> Result<Rational> {
    check_truncation(idx, n)?;
    Ok(sweep::sweep::<sweep::Exact>(idx, n, |_, _| {}))
}

/// Exact truncations at every `N = 1..=n`.
pub fn mzv_prefix_exact(idx: &MzvIndex, n: u64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize);
    sweep::sweep::<sweep::Exact>(idx, n, |_, v| out.push(v));
    out
}

/// Compensated-f64 truncations at the requested checkpoints (sorted ascending).
pub fn mzv_checkpoints(idx: &MzvIndex, checkpoints: &[u64]) -> Vec<f64> {
    let last = checkpoints.last().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    sweep::sweep::<sweep::Float>(idx, last, |n, v| {
        while next.peek() == Some(&&n) {
            out.push(v);
            next.next();
        }
    });
    out
}

/// Heuristic size of `ζ(idx) − ζ_N(idx)`; reported, never asserted.
///
/// `2·(1 + ln N)^r / N^p`, where `r` counts the plain 1s directly after the
/// leading slot (the inner sum `ζ_n(s_2, …)` grows like `(ln n)^r`, and the
/// remaining factor is below ζ(2)). `p = 1` for a leading exponent of 2 and
/// `p = 2` for 3 or more. A barred leading slot makes the outer sum
/// alternating, so there the tail is bounded by the first omitted term and
/// `p` is the leading exponent itself.
pub fn tail_estimate(idx: &MzvIndex, n: u64) -> f64 {
    let slots = idx.slots();
    let lead = slots[0];
    let nf = n as f64;
    let r = slots[1..]
        .iter()
        .take_while(|s| s.exponent == 1 && !s.alternating)
        .count();
    let logs = (1.0 + nf.ln()).powi(r as i32);
    let p = if lead.alternating {
        lead.exponent as i32
    } else if lead.exponent >= 3 {
        2
    } else {
        1
    };
    2.0 * logs / nf.powi(p)
}

//! Recurrence-driven construction. Each `extend_*` grows a vector of entries
//! in place, seeding the initial values when the vector is short.

use crate::rings::rational::{int, Rational};
use crate::rings::TPoly;

fn t3() -> TPoly {
    TPoly::monomial(int(1), 3)
}

fn seed(entries: &mut Vec<TPoly>, nmax: usize, b0: TPoly, b1: TPoly) {
    if entries.is_empty() {
        entries.push(b0);
    }
    if entries.len() == 1 && nmax >= 1 {
        entries.push(b1);
    }
}

/// `(n+1)³ C_{n+1} = (n³ + t³) C_n`, `C_0 = 1`.
pub(super) fn extend_c(entries: &mut Vec<TPoly>, nmax: usize) {
    if entries.is_empty() {
        entries.push(TPoly::one());
    }
    while entries.len() <= nmax {
        let n = entries.len() as i64 - 1;
        let factor = TPoly::monomial(int(1), 3) + TPoly::constant(int(n * n * n));
        let next = (&factor * &entries[n as usize])
            .scale(&Rational::new(1.into(), ((n + 1).pow(3)).into()));
        entries.push(next);
    }
}

/// `n³B_n − (n+1)²(2n+1)B_{n+1} + (n+2)²(n+1)B_{n+2} = t³B_n`.
pub(super) fn extend_b(entries: &mut Vec<TPoly>, nmax: usize) {
    seed(entries, nmax, TPoly::one(), TPoly::zero());
    while entries.len() <= nmax {
        let n = entries.len() as i64 - 2;
        let (bn, bn1) = (&entries[n as usize], &entries[n as usize + 1]);
        let rhs = &(&bn1.scale(&int((n + 1).pow(2) * (2 * n + 1))) - &bn.scale(&int(n.pow(3))))
            + &(&t3() * bn);
        entries.push(rhs.scale(&Rational::new(1.into(), ((n + 2).pow(2) * (n + 1)).into())));
    }
}

/// `((n+α)³ − t³)B_n − (n+1)(2n² + 3n(α+1) + α² + 3α + 1)B_{n+1} + (n+2)²(n+1)B_{n+2} = 0`
/// with `B_0 = 1`, `B_1 = α²`.
pub(super) fn extend_b_alpha(entries: &mut Vec<TPoly>, alpha: &Rational, nmax: usize) {
    seed(entries, nmax, TPoly::one(), TPoly::constant(alpha * alpha));
    while entries.len() <= nmax {
        let n = entries.len() as i64 - 2;
        let nq = int(n);
        let (bn, bn1) = (&entries[n as usize], &entries[n as usize + 1]);
        let s = &nq + alpha;
        let cube = &s * &s * &s;
        let mid = int(n + 1)
            * (int(2 * n * n)
                + int(3 * n) * (alpha + int(1))
                + alpha * alpha
                + int(3) * alpha
                + int(1));
        let lead = &TPoly::constant(cube) - &t3();
        let rhs = &bn1.scale(&mid) - &(&lead * bn);
        entries.push(rhs.scale(&Rational::new(1.into(), ((n + 2).pow(2) * (n + 1)).into())));
    }
}

/// `(n³ − T)A_n + (n+1)²(2n+1)A_{n+1} + (n+2)²(n+1)A_{n+2} = 0` with
/// `T = (−1)ⁿ t³`, `A_0 = 1`, `A_1 = 0`.
pub(super) fn extend_a(entries: &mut Vec<TPoly>, nmax: usize) {
    seed(entries, nmax, TPoly::one(), TPoly::zero());
    while entries.len() <= nmax {
        let n = entries.len() as i64 - 2;
        let (an, an1) = (&entries[n as usize], &entries[n as usize + 1]);
        let big_t = t3().scale(&int(if n % 2 == 0 { 1 } else { -1 }));
        let lead = &TPoly::constant(int(n.pow(3))) - &big_t;
        let sum = &(&lead * an) + &an1.scale(&int((n + 1).pow(2) * (2 * n + 1)));
        entries.push(sum.scale(&Rational::new(
            (-1).into(),
            ((n + 2).pow(2) * (n + 1)).into(),
        )));
    }
}

/// Floating-point `[x^j] B_n` for `j ≤ max_x`, `n ≤ nmax`, from the same
/// recurrence read in `x = t³` and truncated at `x^max_x`. Used where exact
/// tables are far too large (thousands of terms).
pub fn b_x_coefficients(nmax: usize, max_x: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(nmax + 1);
    let mut b0 = vec![0.0; max_x + 1];
    b0[0] = 1.0;
    out.push(b0);
    if nmax >= 1 {
        out.push(vec![0.0; max_x + 1]);
    }
    for n in 0..nmax.saturating_sub(1) {
        let nf = n as f64;
        let denom = (nf + 2.0).powi(2) * (nf + 1.0);
        let mid = (nf + 1.0).powi(2) * (2.0 * nf + 1.0);
        let cube = nf.powi(3);
        let next: Vec<f64> = (0..=max_x)
            .map(|j| {
                let shifted = if j > 0 { out[n][j - 1] } else { 0.0 };
                (mid * out[n + 1][j] - cube * out[n][j] + shifted) / denom
            })
            .collect();
        out.push(next);
    }
    out
}

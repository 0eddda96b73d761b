//! Brute-force nested summation of truncated MZVs, shared by the MZV tests
//! and the acceptance run.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use polyzeta::mzv::{mzv_prefix_exact, MzvIndex, Slot};
use polyzeta::rings::rational::Rational;

pub const N: usize = 60;

/// Compositions of every weight up to `max_weight` into `depth` positive parts.
fn compositions(depth: usize, max_weight: u32) -> Vec<Vec<u32>> {
    if depth == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max_weight {
        for rest in compositions(depth - 1, max_weight - first) {
            if rest.len() == depth - 1 {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out.into_iter()
        .filter(|v| v.iter().sum::<u32>() <= max_weight)
        .collect()
}

/// Sums of `Π (L/n_i)^{s_i}` over chains `n_1 > … > n_d ≥ 1`, split by the
/// exact value of `n_1` and by the parity pattern of the chain.
struct ChainSums {
    by_top: Vec<Vec<BigInt>>,
}

fn enumerate(exps: &[u32], pw: &[Vec<BigInt>]) -> ChainSums {
    let d = exps.len();
    let mut by_top = vec![vec![BigInt::zero(); 1 << d]; N + 1];
    fn go(
        exps: &[u32],
        pw: &[Vec<BigInt>],
        level: usize,
        below: usize,
        prod: &BigInt,
        parity: usize,
        acc: &mut [BigInt],
    ) {
        if level == exps.len() {
            acc[parity] += prod;
            return;
        }
        for n in (exps.len() - level)..below {
            let p = prod * &pw[n][exps[level] as usize];
            go(exps, pw, level + 1, n, &p, parity | ((n & 1) << level), acc);
        }
    }
    for top in d..=N {
        let p = pw[top][exps[0] as usize].clone();
        go(exps, pw, 1, top, &p, top & 1, &mut by_top[top]);
    }
    ChainSums { by_top }
}

/// Compares the sweep against nested enumeration for every admissible index of
/// depth ≤ 4 and weight ≤ 8 at every `N ≤ 60`; returns the number of indices
/// checked and the first few mismatches.
pub fn oracle_mismatches() -> (usize, Vec<String>) {
    let lcm = (1..=N as u64).fold(BigInt::one(), |acc, n| acc.lcm(&BigInt::from(n)));
    let pw: Vec<Vec<BigInt>> = (0..=N)
        .map(|n| {
            (0..=8u32)
                .map(|s| {
                    if n == 0 {
                        BigInt::zero()
                    } else {
                        (&lcm / BigInt::from(n)).pow(s)
                    }
                })
                .collect()
        })
        .collect();
    let mut checked = 0;
    let mut bad = Vec::new();
    for depth in 1..=4 {
        for exps in compositions(depth, 8) {
            let weight: u32 = exps.iter().sum();
            let denom = lcm.pow(weight);
            let sums = enumerate(&exps, &pw);
            for bars in 0..(1usize << depth) {
                let slots: Vec<Slot> = exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| {
                        if bars >> i & 1 == 1 {
                            Slot::bar(e)
                        } else {
                            Slot::plain(e)
                        }
                    })
                    .collect();
                let Ok(idx) = MzvIndex::new(slots) else {
                    assert!(exps[0] == 1 && bars & 1 == 0);
                    continue;
                };
                let swept = mzv_prefix_exact(&idx, N as u64);
                let mut total = BigInt::zero();
                for top in 1..=N {
                    for (parity, s) in sums.by_top[top].iter().enumerate() {
                        if (parity & bars).count_ones() % 2 == 1 {
                            total -= s;
                        } else {
                            total += s;
                        }
                    }
                    let brute = Rational::new(total.clone(), denom.clone());
                    if swept[top - 1] != brute && bad.len() < 5 {
                        bad.push(format!("{idx} at N={top}"));
                    }
                }
                checked += 1;
            }
        }
    }
    (checked, bad)
}

/// 162 exponent vectors with every bar pattern, minus those with an unbarred
/// leading 1.
pub const ADMISSIBLE: usize = 1696 - (1 + 7 * 2 + 21 * 4 + 35 * 8);

mod common;

use polyzeta::mzv::{mzv_checkpoints, mzv_truncated, tail_estimate, MzvIndex};

#[test]
fn sweep_matches_nested_enumeration() {
    let (checked, bad) = common::oracle_mismatches();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(checked, common::ADMISSIBLE);
}

#[test]
fn known_values() {
    let z21 = mzv_truncated(&"2,1".parse().unwrap(), 1_000_000).unwrap();
    assert!((z21.value - 1.202_056_903_159_594).abs() < 2e-5);
    let zb = mzv_truncated(&"2~,1".parse().unwrap(), 1_000_000).unwrap();
    assert!(
        (zb.value - 0.150_257_112_894_949_3).abs() < 1e-8,
        "{}",
        zb.value
    );
    let z2 = mzv_truncated(&"2".parse().unwrap(), 100_000).unwrap();
    assert!((z2.value - std::f64::consts::PI.powi(2) / 6.0).abs() < z2.tail_estimate);
}

#[test]
fn tail_estimate_covers_later_truncations() {
    let cases = [
        "2",
        "3",
        "2,1",
        "3,1",
        "2~,1",
        "1~",
        "1~,1",
        "2,1,1",
        "{2,1}^2",
        "{2,1}^3",
        "3,1~,2",
        "2,2~",
        "2,1,1,1",
        "1~,1,1",
        "2,1~,1",
        "{3,1}^2",
        "2~,1,2~,1",
        "4,2,1",
        "2,3",
        "2,2",
    ];
    for s in cases {
        let idx: MzvIndex = s.parse().unwrap();
        let v = mzv_checkpoints(&idx, &[100, 1000, 10_000, 1_000_000]);
        for (i, &n) in [100u64, 1000, 10_000].iter().enumerate() {
            let moved = (v[3] - v[i]).abs();
            assert!(moved <= tail_estimate(&idx, n), "{s} N={n}: moved {moved}");
        }
    }
}

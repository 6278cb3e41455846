#![allow(dead_code)]

use std::path::PathBuf;

use afcount::formats::parse_apx;
use afcount::ArgumentationFramework;
use proptest::prelude::*;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn fixture(name: &str) -> ArgumentationFramework {
    parse_apx(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

/// Frameworks on `1..=max_n` arguments with independent attacks.
pub fn frameworks(max_n: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0.0f64..1.0, n * n), 0.05f64..0.5))
        .prop_map(|(n, coins, density)| {
            let names = (0..n).map(|i| format!("a{i}")).collect();
            let attacks = (0..n * n)
                .filter(|&k| coins[k] < density)
                .map(|k| (k / n, k % n));
            ArgumentationFramework::new(names, attacks).unwrap()
        })
}

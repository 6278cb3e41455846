//! Random and structured instance generators for tests and benchmarks.

use rand::Rng;

use crate::framework::ArgumentationFramework;
use crate::reductions::CnfFormula;

/// A framework on `n` arguments `a0..` where each ordered pair (including
/// self-attacks) is an attack with probability `density`.
pub fn random_framework<R: Rng>(rng: &mut R, n: usize, density: f64) -> ArgumentationFramework {
    let names = (0..n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.random_bool(density) {
                attacks.push((a, b));
            }
        }
    }
    ArgumentationFramework::new(names, attacks).expect("generated framework is valid")
}

/// Arguments `a0 - a1 - ... - a(n-1)` where each consecutive pair is joined
/// by one or two attacks chosen at random. The underlying graph is a path.
pub fn path_framework<R: Rng>(rng: &mut R, n: usize) -> ArgumentationFramework {
    let names = (0..n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for i in 1..n {
        match rng.random_range(0..3) {
            0 => attacks.push((i - 1, i)),
            1 => attacks.push((i, i - 1)),
            _ => {
                attacks.push((i - 1, i));
                attacks.push((i, i - 1));
            }
        }
    }
    ArgumentationFramework::new(names, attacks).expect("generated framework is valid")
}

/// A random CNF with `clauses` clauses of exactly `width` distinct variables.
pub fn random_cnf<R: Rng>(rng: &mut R, vars: usize, clauses: usize, width: usize) -> CnfFormula {
    let width = width.min(vars);
    let mut out = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let mut clause: Vec<i32> = Vec::with_capacity(width);
        while clause.len() < width {
            let v = rng.random_range(1..=vars) as i32;
            if clause.iter().any(|l| l.abs() == v) {
                continue;
            }
            clause.push(if rng.random_bool(0.5) { v } else { -v });
        }
        out.push(clause);
    }
    CnfFormula::new(vars, out).expect("generated CNF is valid")
}

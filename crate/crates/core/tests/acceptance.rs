//! Acceptance criteria, one line per criterion. Exits non-zero when a
//! criterion fails that is not listed in `KNOWN_RED`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use afcount::checks;
use afcount::dp::{count_extensions, purge, run_dp, LocalAlgorithm};
use afcount::formats::parse_apx;
use afcount::generate::{path_framework, random_cnf, random_framework};
use afcount::oracle::Oracle;
use afcount::pipeline::{run_on, Answer, RunConfig, Task};
use afcount::projection::{count_projected, run_proj, ProjectionLimits};
use afcount::reductions::{cnf_to_af_admissible, cnf_to_af_stable, sigma1_to_projected};
use afcount::semantics::{with_algorithm, AlgorithmVisitor, ADM, PREF, SEMI, STAB, STAG};
use afcount::td::{compute_td, make_nice, nice_decomposition, underlying_graph};
use afcount::{ArgSet, ArgumentationFramework, SemanticsKind as S};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_FIGURE: Duration = Duration::from_secs(1);
const LIMIT_F1: Duration = Duration::from_secs(1);
const LIMIT_ORACLE: Duration = Duration::from_secs(60);
const LIMIT_REDUCTIONS: Duration = Duration::from_secs(120);
const LIMIT_PATH_COUNT: Duration = Duration::from_secs(2);
const LIMIT_PATH_PROJ: Duration = Duration::from_secs(10);

const ORACLE_FRAMEWORKS: usize = 210;
const TD_FRAMEWORKS: usize = 20;
const TD_SEEDS: u64 = 5;
const CNF_INSTANCES: usize = 50;
const EXISTS_INSTANCES: usize = 30;
const STRUCTURE_FRAMEWORKS: usize = 60;

/// Criteria expected to fail, with the reason recorded alongside the code.
/// 2: the stated stage golden for F1 (1) contradicts the stage definition;
///    {v,w} and {v,x,y} share the range {v,w,x,y}, so the count is 2.
const KNOWN_RED: &[u32] = &[2];

type Outcome = Result<String, String>;

const FIGURE_1: &str = "\
arg(d). arg(s). arg(e). arg(p). arg(c). arg(a). arg(r).
att(e,s). att(d,p). att(p,e). att(p,c). att(c,p).
att(c,e). att(a,r). att(r,a). att(a,d). att(r,s).
";

const F1: &str = "\
arg(v). arg(w). arg(x). arg(y). arg(z).
att(w,x). att(x,w). att(w,y). att(z,z). att(z,x).
";

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{detail}; took {took:?}, limit {limit:?}"))
    } else {
        Ok(format!("{detail} ({} ms)", took.as_millis()))
    }
}

fn answer(af: &ArgumentationFramework, sem: S, task: Task, arg: Option<&str>, p: Option<&[&str]>) -> Result<Answer, String> {
    let mut c = RunConfig::new("<memory>", sem, task);
    c.arg = arg.map(str::to_string);
    c.projection = p.map(|p| p.iter().map(|s| s.to_string()).collect());
    run_on(af, &c).map(|o| o.answer).map_err(|e| e.to_string())
}

fn count(n: u64) -> Answer {
    Answer::Count(BigUint::from(n))
}

fn figure_1() -> Outcome {
    let start = Instant::now();
    let af = parse_apx(FIGURE_1).map_err(|e| e.to_string())?;
    let stable = answer(&af, S::Stable, Task::Count, None, None)?;
    let cred = answer(&af, S::Stable, Task::CredCount, Some("s"), None)?;
    let proj = answer(&af, S::Stable, Task::PCount, Some("s"), Some(&["a", "r"]))?;
    let got = format!("stable={stable} cred(s)={cred} pcred(s,{{a,r}})={proj}");
    if (stable, cred, proj) != (count(3), count(2), count(1)) {
        return Err(format!("{got}, expected 3/2/1"));
    }
    within(start, LIMIT_FIGURE, got)
}

fn f1_goldens() -> Outcome {
    let start = Instant::now();
    let af = parse_apx(F1).map_err(|e| e.to_string())?;
    let oracle = Oracle::new(&af).map_err(|e| e.to_string())?;
    let goldens = [
        (S::ConflictFree, 10),
        (S::Admissible, 4),
        (S::Complete, 2),
        (S::Preferred, 1),
        (S::SemiStable, 1),
        (S::Stage, 1),
        (S::Stable, 0),
    ];
    let mut wrong = Vec::new();
    for (sem, golden) in goldens {
        let dp = answer(&af, sem, Task::Count, None, None)?;
        let or = oracle.count(sem);
        if dp != count(golden) || or != golden {
            wrong.push(format!("{sem}: dp={dp} oracle={or} golden={golden}"));
        }
    }
    if !wrong.is_empty() {
        return Err(wrong.join("; "));
    }
    within(start, LIMIT_F1, "7 counts match via solver and brute force".into())
}

struct Counts<'a> {
    af: &'a ArgumentationFramework,
    cred: usize,
    p: &'a ArgSet,
    seed: u64,
}

/// (count, credulous count, projected credulous count)
impl AlgorithmVisitor for Counts<'_> {
    type Output = Result<(BigUint, BigUint, BigUint), String>;

    fn visit<A: LocalAlgorithm>(self, alg: &A) -> Self::Output {
        let ntd = nice_decomposition(self.af, self.seed, 2);
        let all = count_extensions(alg, &run_dp(alg, &ntd, self.af, None, None));
        let ttd = run_dp(alg, &ntd, self.af, Some(self.cred), None);
        let cred = count_extensions(alg, &ttd);
        let (proj, _) = count_projected(alg, &purge(alg, &ttd), self.p, ProjectionLimits::default())
            .map_err(|e| e.to_string())?;
        Ok((all, cred, proj))
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let densities = [0.1, 0.2, 0.3, 0.4, 0.5];
    let mut checked = 0;
    for i in 0..ORACLE_FRAMEWORKS {
        let n = rng.random_range(1..=10);
        let af = random_framework(&mut rng, n, densities[i % densities.len()]);
        let cred = rng.random_range(0..n);
        let p = ArgSet::from_mask(n, rng.random_range(0..1u64 << n));
        let o = Oracle::new(&af).map_err(|e| e.to_string())?;
        for sem in S::ALL {
            let got = with_algorithm(sem, Counts { af: &af, cred, p: &p, seed: i as u64 })?;
            let want = (
                BigUint::from(o.count(sem)),
                BigUint::from(o.count_credulous_index(sem, Some(cred))),
                BigUint::from(o.count_projected_index(sem, Some(cred), &p)),
            );
            if got != want {
                return Err(format!("framework {i} {sem}: solver {got:?}, brute force {want:?}"));
            }
            checked += 1;
        }
    }
    within(start, LIMIT_ORACLE, format!("{ORACLE_FRAMEWORKS} frameworks, {checked} semantics runs x 3 counts"))
}

fn td_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..TD_FRAMEWORKS {
        let n = 4 + i % 9;
        let af = random_framework(&mut rng, n, 0.15 + 0.05 * (i % 5) as f64);
        let cred = i % n;
        let p = ArgSet::from_mask(n, (0b1011_0110_1101u64 >> (i % 3)) & ((1 << n) - 1));
        for sem in S::ALL {
            let runs: Vec<_> = (0..TD_SEEDS)
                .map(|seed| with_algorithm(sem, Counts { af: &af, cred, p: &p, seed: seed * 7919 + 1 }))
                .collect::<Result<_, _>>()?;
            if runs.windows(2).any(|w| w[0] != w[1]) {
                return Err(format!("framework {i} {sem}: {runs:?}"));
            }
        }
    }
    Ok(format!("{TD_FRAMEWORKS} frameworks x {TD_SEEDS} seeds, all semantics identical"))
}

fn reductions() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    for i in 0..CNF_INSTANCES {
        let vars = rng.random_range(3..=15);
        let clauses = rng.random_range(vars..=2 * vars);
        let phi = random_cnf(&mut rng, vars, clauses, 3);
        let models = BigUint::from(phi.count_models());
        let st = cnf_to_af_stable(&phi);
        let ntd = nice_decomposition(&st.framework, i as u64, 3);
        let s = count_extensions(&STAB, &run_dp(&STAB, &ntd, &st.framework, Some(st.target_index()), None));
        let ad = cnf_to_af_admissible(&phi);
        let ntd = nice_decomposition(&ad.framework, i as u64, 3);
        let a = count_extensions(&ADM, &run_dp(&ADM, &ntd, &ad.framework, Some(ad.target_index()), None));
        if s != models || a != models {
            return Err(format!("CNF {i}: models {models}, stable {s}, admissible {a}"));
        }
    }
    for i in 0..EXISTS_INSTANCES {
        let vars = rng.random_range(2..=12);
        let clauses = rng.random_range(1..=vars + 2);
        let psi = random_cnf(&mut rng, vars, clauses, 3);
        let mut x: Vec<usize> = (1..=vars).filter(|_| rng.random_bool(0.5)).collect();
        if x.is_empty() {
            x.push(1);
        }
        let expected = BigUint::from(psi.count_projected_models(&x));
        let r = sigma1_to_projected(&psi, &x).map_err(|e| e.to_string())?;
        let ntd = nice_decomposition(&r.framework, i as u64, 3);
        let purged = purge(&STAB, &run_dp(&STAB, &ntd, &r.framework, Some(r.target_index()), None));
        let (got, _) = count_projected(&STAB, &purged, &r.projection_set(), ProjectionLimits::default())
            .map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("existential instance {i}: expected {expected}, got {got}"));
        }
    }
    within(
        start,
        LIMIT_REDUCTIONS,
        format!("{CNF_INSTANCES} CNFs (stable, admissible), {EXISTS_INSTANCES} projected instances"),
    )
}

struct Structure<'a> {
    af: &'a ArgumentationFramework,
    seed: u64,
    p: &'a ArgSet,
}

impl AlgorithmVisitor for Structure<'_> {
    type Output = Result<(), String>;

    fn visit<A: LocalAlgorithm>(self, alg: &A) -> Self::Output {
        let ntd = nice_decomposition(self.af, self.seed, 2);
        let ttd = run_dp(alg, &ntd, self.af, None, None);
        checks::locality(alg, &ttd)?;
        checks::origins_present(&ttd)?;
        let purged = purge(alg, &ttd);
        checks::purge_reachability(alg, &purged)?;
        match run_proj(alg, &purged, self.p, ProjectionLimits::default()) {
            Ok(proj) => checks::projection_root(&proj, &purged),
            Err(afcount::Error::BucketCap { .. } | afcount::Error::ProjectionBudget { .. }) => Ok(()),
            Err(e) => Err(e.to_string()),
        }
    }
}

fn structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for i in 0..STRUCTURE_FRAMEWORKS {
        let n = rng.random_range(1..=10);
        let density = rng.random_range(0.05..0.5);
        let af = random_framework(&mut rng, n, density);
        let g = underlying_graph(&af);
        let td = compute_td(&g, i as u64, 2);
        let ntd = make_nice(&td).map_err(|e| e.to_string())?;
        checks::nice_td(&g, &ntd, td.width()).map_err(|e| format!("framework {i}: {e}"))?;
        let p = ArgSet::from_mask(n, rng.random_range(0..1u64 << n));
        for sem in S::ALL {
            with_algorithm(sem, Structure { af: &af, seed: i as u64, p: &p })
                .map_err(|e| format!("framework {i} {sem}: {e}"))?;
        }
        let flags = [
            checks::flag_monotonicity(&run_dp(&PREF, &ntd, &af, None, None), &af),
            checks::flag_monotonicity(&run_dp(&SEMI, &ntd, &af, None, None), &af),
            checks::flag_monotonicity(&run_dp(&STAG, &ntd, &af, None, None), &af),
        ];
        if let Some(Err(e)) = flags.into_iter().find(Result::is_err) {
            return Err(format!("framework {i}: {e}"));
        }
    }
    Ok(format!(
        "{STRUCTURE_FRAMEWORKS} frameworks: nice TD, locality, origins, purge, flags, projection root"
    ))
}

fn scalability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let af = path_framework(&mut rng, 200);
    let start = Instant::now();
    let mut c = RunConfig::new("<memory>", S::Stable, Task::Count);
    let out = run_on(&af, &c).map_err(|e| e.to_string())?;
    let count_time = start.elapsed();
    if out.stats.width > 2 {
        return Err(format!("path decomposition has width {}", out.stats.width));
    }
    let mut picks: Vec<usize> = (0..200).collect();
    for k in 0..10 {
        let j = rng.random_range(k..200);
        picks.swap(k, j);
    }
    c.task = Task::PCount;
    c.projection = Some(picks[..10].iter().map(|&i| af.name(i).to_string()).collect());
    let start = Instant::now();
    let proj = run_on(&af, &c).map_err(|e| e.to_string())?;
    let proj_time = start.elapsed();
    let detail = format!(
        "stable count {} in {} ms, projected |P|=10 count {} in {} ms",
        out.answer,
        count_time.as_millis(),
        proj.answer,
        proj_time.as_millis()
    );
    if count_time > LIMIT_PATH_COUNT || proj_time > LIMIT_PATH_PROJ {
        return Err(format!("{detail}; limits {LIMIT_PATH_COUNT:?} / {LIMIT_PATH_PROJ:?}"));
    }
    Ok(detail)
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 7] = [
        (1, "Figure 1 goldens", figure_1),
        (2, "F1 goldens", f1_goldens),
        (3, "oracle equivalence", oracle_equivalence),
        (4, "decomposition invariance", td_invariance),
        (5, "reductions end to end", reductions),
        (6, "structural invariants", structure),
        (7, "scalability smoke", scalability),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(detail) => {
                let known = KNOWN_RED.contains(&id);
                println!("FAIL {id} {name}: {detail}{}", if known { " [known]" } else { "" });
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

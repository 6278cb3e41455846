use afcount::dp::{count_extensions, purge, run_dp};
use afcount::generate::random_cnf;
use afcount::oracle::Oracle;
use afcount::projection::{count_projected, ProjectionLimits};
use afcount::reductions::{cnf_to_af_admissible, cnf_to_af_stable, sigma1_to_projected, CnfFormula};
use afcount::semantics::{ADM, COMP, STAB};
use afcount::td::nice_decomposition;
use afcount::SemanticsKind;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn model_counts_survive_the_reductions() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for round in 0..15 {
        let vars = 3 + round % 8;
        let clauses = vars + rng.random_range(0..vars);
        let phi = random_cnf(&mut rng, vars, clauses, 3);
        let models = BigUint::from(phi.count_models());
        let st = cnf_to_af_stable(&phi);
        let ntd = nice_decomposition(&st.framework, round as u64, 2);
        let n = count_extensions(&STAB, &run_dp(&STAB, &ntd, &st.framework, Some(st.target_index()), None));
        assert_eq!(n, models, "stable, round {round}");
        let ad = cnf_to_af_admissible(&phi);
        let ntd = nice_decomposition(&ad.framework, round as u64, 2);
        let n = count_extensions(&ADM, &run_dp(&ADM, &ntd, &ad.framework, Some(ad.target_index()), None));
        assert_eq!(n, models, "admissible, round {round}");
    }
}

#[test]
fn projected_model_counts_survive_the_existential_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for round in 0..10 {
        let vars = 2 + round % 6;
        let phi = random_cnf(&mut rng, vars, vars + 1, 3.min(vars));
        let x: Vec<usize> = (1..=vars).filter(|_| rng.random_bool(0.5)).collect();
        let expected = BigUint::from(phi.count_projected_models(&x));
        let r = sigma1_to_projected(&phi, &x).unwrap();
        let ntd = nice_decomposition(&r.framework, 1, 2);
        let t = r.target_index();
        for (name, count) in [
            ("stable", {
                let p = purge(&STAB, &run_dp(&STAB, &ntd, &r.framework, Some(t), None));
                count_projected(&STAB, &p, &r.projection_set(), ProjectionLimits::default()).unwrap().0
            }),
            ("admissible", {
                let p = purge(&ADM, &run_dp(&ADM, &ntd, &r.framework, Some(t), None));
                count_projected(&ADM, &p, &r.projection_set(), ProjectionLimits::default()).unwrap().0
            }),
            ("complete", {
                let p = purge(&COMP, &run_dp(&COMP, &ntd, &r.framework, Some(t), None));
                count_projected(&COMP, &p, &r.projection_set(), ProjectionLimits::default()).unwrap().0
            }),
        ] {
            assert_eq!(count, expected, "{name}, round {round}");
        }
        if r.framework.len() <= 25 {
            let o = Oracle::new(&r.framework).unwrap();
            let oc = o.count_projected_index(SemanticsKind::Stable, Some(t), &r.projection_set());
            assert_eq!(BigUint::from(oc), expected);
        }
    }
}

#[test]
fn unit_clause_projection() {
    let psi = CnfFormula::new(2, vec![vec![2]]).unwrap();
    let r = sigma1_to_projected(&psi, &[1]).unwrap();
    let ntd = nice_decomposition(&r.framework, 0, 1);
    let p = purge(&STAB, &run_dp(&STAB, &ntd, &r.framework, Some(r.target_index()), None));
    let (count, _) = count_projected(&STAB, &p, &r.projection_set(), ProjectionLimits::default()).unwrap();
    assert_eq!(count, BigUint::from(2u8));
}

use itertools::Itertools;

use flagmann::linalg::{enumerate_subspaces, PrimeField, Subspace};
use flagmann::oracle::{
    count_flags, count_flags_with, enumerate_subreps, estimate_candidates, leading_block, stratum_counts, OracleConfig,
};
use flagmann::recursion::enumerate_splittings;
use flagmann::rep::{build_rep, is_subrepresentation, Representation};
use flagmann::{positive_roots, DimVector, Error, FlagType, Quiver, RootMultiset};

/// Every tuple of subspaces of the given dimensions, filtered afterwards.
fn naive_subreps(rep: &Representation<PrimeField>, target: &DimVector) -> usize {
    let f = *rep.field();
    let n = rep.quiver().num_vertices();
    (0..n)
        .map(|i| enumerate_subspaces(rep.dim_at(i), target[i] as usize, f).collect::<Vec<_>>())
        .multi_cartesian_product()
        .filter(|t: &Vec<Subspace<PrimeField>>| is_subrepresentation(rep, t).unwrap())
        .count()
}

fn small_reps(q: &Quiver, max_total: u32) -> Vec<RootMultiset> {
    flagmann::campaign::root_multisets(q, max_total).unwrap()
}

#[test]
fn constrained_search_matches_naive_filter() {
    let f = PrimeField::new(2).unwrap();
    for q in Quiver::linear_a(3).orientations().into_iter().chain([Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)]).unwrap()])
    {
        for roots in small_reps(&q, 4) {
            let rep = build_rep(&q, &roots, &f).unwrap();
            for t in FlagType::all_with_top(rep.dims(), 2) {
                let target = &t.steps()[0];
                let fast = enumerate_subreps(&rep, target, None, None).unwrap().count();
                assert_eq!(fast, naive_subreps(&rep, target), "{q}: {roots} target {target}");
            }
        }
    }
}

#[test]
fn strata_partition_the_flag_variety() {
    let q = Quiver::linear_a(3);
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        let roots = positive_roots(&q).unwrap();
        for (a, b) in roots.iter().cartesian_product(&roots) {
            let (va, wb) = (
                build_rep(&q, &RootMultiset::from_summands(&q, std::slice::from_ref(a)).unwrap(), &f).unwrap(),
                build_rep(&q, &RootMultiset::from_summands(&q, std::slice::from_ref(b)).unwrap(), &f).unwrap(),
            );
            let sum = va.direct_sum(&wb).unwrap();
            let sub = leading_block(&sum, a);
            for u in FlagType::all_with_top(sum.dims(), 3) {
                let strata = stratum_counts(&sum, &sub, &u).unwrap();
                assert_eq!(strata.values().sum::<u64>(), count_flags(&sum, &u).unwrap());
                // every stratum that occurs is one of the enumerated splittings
                let splits: Vec<FlagType> = enumerate_splittings(&q, &u, a, b).unwrap().into_iter().map(|s| s.v).collect();
                assert!(strata.keys().all(|v| splits.contains(v)));
            }
        }
    }
}

#[test]
fn parallel_counting_agrees() {
    let q = Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
    let f = PrimeField::new(3).unwrap();
    let roots = RootMultiset::parse_inline(&q, "1,1,1,2+0,0,0,1").unwrap();
    let rep = build_rep(&q, &roots, &f).unwrap();
    let par = OracleConfig { parallel: true, ..OracleConfig::default() };
    for u in FlagType::all_with_top(rep.dims(), 3) {
        assert_eq!(count_flags(&rep, &u).unwrap(), count_flags_with(&rep, &u, &par).unwrap());
    }
}

#[test]
fn budget_is_enforced_before_searching() {
    let q = Quiver::numbered(1, &[]).unwrap();
    let rep = build_rep(&q, &RootMultiset::parse_inline(&q, "1x4").unwrap(), &PrimeField::new(5).unwrap()).unwrap();
    let u = FlagType::from_slices(&[&[1], &[2], &[3], &[4]]);
    let estimate = estimate_candidates(&rep, &u);
    // complete flags of F_5^4: (1+5)(1+5+25)(1+5+25+125)
    assert_eq!(estimate, 6 * 31 * 156);
    let tight = OracleConfig { budget: estimate - 1, ..OracleConfig::default() };
    assert!(matches!(count_flags_with(&rep, &u, &tight), Err(Error::BudgetExceeded { .. })));
    let enough = OracleConfig { budget: estimate, ..OracleConfig::default() };
    assert_eq!(count_flags_with(&rep, &u, &enough).unwrap() as u128, estimate);
}

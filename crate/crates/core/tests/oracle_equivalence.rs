mod common;

use common::{check_against_oracle, oracle_sweep, semigroup, SweepStats, GENUS_COUNTS};
use proptest::prelude::*;
use teter_core::graded::{apery_cm_criterion, assoc_graded_is_cm, build_gf, window_cm_scan};
use teter_core::RelativeIdeal;
use teter_oracle as oracle;

#[test]
fn genus_up_to_eight_matches_oracle() {
    let stats = oracle_sweep(8).unwrap();
    assert_eq!(stats.semigroups, GENUS_COUNTS[..=8].iter().sum::<usize>());
    assert!(stats.witnesses > 0 && stats.gorenstein > 0);
}

#[test]
fn cm_criteria_agree_up_to_genus_twelve() {
    let levels = oracle::semigroups_by_genus(12);
    assert_eq!(
        levels.iter().map(Vec::len).collect::<Vec<_>>(),
        GENUS_COUNTS
    );
    for gens in levels.iter().flatten() {
        let h = semigroup(gens);
        let bound = 2 * (h.frobenius().max(0) + h.multiplicity()) + h.max_generator();
        assert_eq!(apery_cm_criterion(&h), window_cm_scan(&h, bound), "{h}");
        if h.multiplicity() as usize == h.embedding_dimension() {
            assert_eq!(
                assoc_graded_is_cm(&h),
                Ok(true),
                "{h} has minimal multiplicity"
            );
        }
    }
}

#[test]
fn apery_sets_of_ideals_have_e_elements_and_nonzero_socle() {
    for gens in oracle::semigroups_by_genus(7).iter().flatten() {
        let h = semigroup(gens);
        let Ok(w) = RelativeIdeal::canonical(&h) else {
            continue;
        };
        let cm = assoc_graded_is_cm(&h).unwrap();
        for s in h.frobenius()..=2 * (h.frobenius() + h.max_generator()) {
            let j = w.shift(s);
            if !j.is_proper_ideal() {
                continue;
            }
            assert_eq!(j.apery_set(h.multiplicity()).len() as i64, h.multiplicity());
            if cm {
                let model = build_gf(&j).unwrap();
                assert!(model.socle_dim_mod_xstar() >= 1, "{h} s={s}");
                if h.is_gorenstein() {
                    assert!(j.is_principal());
                }
            }
        }
    }
}

fn generators_without(gaps: &[i64]) -> Vec<i64> {
    let top = gaps.last().copied().unwrap_or(0);
    let members: Vec<i64> = (1..=2 * top + 2).filter(|n| !gaps.contains(n)).collect();
    oracle::bf_minimal_generators(&members)
}

/// Random walk down the semigroup tree: repeatedly remove a minimal
/// generator larger than the Frobenius number.
fn random_semigroup(max_genus: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(any::<prop::sample::Index>(), 0..=max_genus).prop_map(|choices| {
        let mut gaps: Vec<i64> = Vec::new();
        for pick in choices {
            let gens = generators_without(&gaps);
            let frob = gaps.last().copied().unwrap_or(-1);
            let candidates: Vec<i64> = gens.into_iter().filter(|&g| g > frob).collect();
            if candidates.is_empty() {
                break;
            }
            gaps.push(*pick.get(&candidates));
        }
        generators_without(&gaps)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn random_semigroups_match_oracle(gens in random_semigroup(20)) {
        let mut stats = SweepStats::default();
        if let Err(msg) = check_against_oracle(&gens, &mut stats) {
            prop_assert!(false, "{}", msg);
        }
    }
}

mod common;

use std::collections::BTreeMap;

use catcomplex::boolcomp::{boolean_complexity, prime_implicants};
use catcomplex::gist::{structural_manifold, structural_manifold_by_projection};
use catcomplex::infocomp::level_uncertainties;
use catcomplex::structures::group_order;
use catcomplex::{enumerate_classes, CategoryStructure};

use common::*;

#[test]
fn orbits_match_string_rewriting() {
    for dims in 1..=3 {
        for s in all_structures(dims) {
            assert_eq!(s.symmetry_orbit(), orbit_oracle_structures(&s), "{s}");
        }
    }
    for s in enumerate_classes(4, 4).unwrap() {
        assert_eq!(s.symmetry_orbit(), orbit_oracle_structures(&s), "{s}");
    }
}

#[test]
fn orbit_sizes_divide_group_order() {
    for dims in 1..=4 {
        for p in 1..=(1 << dims) / 2 {
            for s in enumerate_classes(dims, p).unwrap() {
                let order = group_order(dims) * if s.is_balanced() { 2 } else { 1 };
                assert_eq!(order % s.symmetry_orbit().len(), 0, "{s}");
            }
        }
    }
}

#[test]
fn orbit_weighted_counts_are_binomials() {
    for dims in 1..=4 {
        let space = 1 << dims;
        for p in 1..=space / 2 {
            let covered: usize = enumerate_classes(dims, p)
                .unwrap()
                .iter()
                .map(|s| orbit_oracle(s).len())
                .sum();
            assert_eq!(covered, binomial(space, p), "{dims}[{p}]");
        }
    }
}

#[test]
fn classes_partition_every_structure() {
    // each structure of size p lands on exactly one enumerated representative
    for dims in 1..=4 {
        let mut seen: BTreeMap<CategoryStructure, usize> = BTreeMap::new();
        for s in all_structures(dims) {
            if 2 * s.size() <= s.space_size() {
                *seen.entry(s.canonical_form()).or_default() += 1;
            }
        }
        let mut expected: Vec<CategoryStructure> = (1..=(1 << dims) / 2)
            .flat_map(|p| enumerate_classes(dims, p).unwrap())
            .collect();
        expected.sort();
        assert_eq!(seen.keys().cloned().collect::<Vec<_>>(), expected);
    }
}

#[test]
fn level_entries_equal_conditional_entropy() {
    let mut checked = 0;
    for dims in 1..=4 {
        for s in all_structures(dims) {
            for n in 0..=dims {
                let entries = level_uncertainties(&s, n).unwrap();
                let subs = subsets(dims, n);
                assert_eq!(entries.len(), binomial(dims, n));
                for (entry, fixed) in entries.iter().zip(&subs) {
                    let oracle = conditional_entropy(&s, fixed);
                    assert!((entry - oracle).abs() <= 1e-12, "{s} {fixed:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1_000_000);
}

#[test]
fn literal_counts_match_exhaustive_cover_search() {
    let mut structures: Vec<CategoryStructure> = (1..=3).flat_map(all_structures).collect();
    for p in 1..=8 {
        structures.extend(enumerate_classes(4, p).unwrap());
    }
    for s in &structures {
        let result = boolean_complexity(s);
        assert_eq!(result.literal_count, min_dnf_literals(s), "{s}");
        let covered: Vec<u16> = (0..s.space_size() as u16)
            .filter(|&x| result.minimal_cover.iter().any(|t| t.covers(x)))
            .collect();
        assert_eq!(covered, s.members(), "{s}");
        assert!(result.literal_count <= s.dims() * s.size());
    }
}

#[test]
fn primes_are_exactly_the_maximal_cubes() {
    for dims in 1..=3 {
        for s in all_structures(dims) {
            let primes = prime_implicants(&s);
            for p in &primes {
                assert!(p.stimuli().all(|x| s.contains(x)), "{s} {p}");
                // dropping any literal leaves A
                for d in 0..dims {
                    let bit = 1u16 << (dims - 1 - d);
                    if p.care_mask() & bit != 0 {
                        let wider = catcomplex::boolcomp::Implicant::new(
                            dims,
                            p.care_mask() & !bit,
                            p.values() & !bit,
                        );
                        assert!(wider.stimuli().any(|x| !s.contains(x)), "{s} {p}");
                    }
                }
            }
            for &m in s.members() {
                assert!(primes.iter().any(|p| p.covers(m)));
            }
        }
    }
}

#[test]
fn manifold_definitions_agree() {
    for dims in 1..=4 {
        for s in all_structures(dims) {
            let flip = structural_manifold(&s);
            assert_eq!(flip, structural_manifold_by_projection(&s), "{s}");
            assert_eq!(flip.proportions, manifold_oracle(&s), "{s}");
        }
    }
}

#[test]
fn literal_counts_never_contradict_umin_in_small_blocks() {
    use catcomplex::stats::{compare_orders, induced_order, METRIC_EPSILON};
    use catcomplex::{aggregate_metric, Aggregator};
    for (dims, p) in [(3, 2), (4, 2), (4, 3)] {
        let classes = enumerate_classes(dims, p).unwrap();
        let keyed = |f: &dyn Fn(&CategoryStructure) -> f64| -> Vec<(String, f64)> {
            classes.iter().map(|s| (s.to_string(), f(s))).collect()
        };
        let umin = induced_order(
            &keyed(&|s| aggregate_metric(s, Aggregator::Min).unwrap().u_hat),
            METRIC_EPSILON,
        )
        .unwrap();
        let boolc = induced_order(
            &keyed(&|s| boolean_complexity(s).literal_count as f64),
            METRIC_EPSILON,
        )
        .unwrap();
        let agreement = compare_orders(&umin, &boolc).unwrap();
        assert_eq!(agreement.discordant, 0, "{dims}[{p}]: {umin} vs {boolc}");
    }
}

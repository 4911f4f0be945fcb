//! Differential and property tests for the partitions module, checked
//! against cell-level brute-force oracles.

mod common;

use proptest::prelude::*;
use wreathchar::partitions::{
    enumerate_partitions, r_core, r_quotient, to_beta, to_beta_with_beads, Partition,
};
use wreathchar::Error;

#[test]
fn degree_matches_syt_counting_oracle() {
    // Frozen values first computed with the oracle.
    let p21 = Partition::new(vec![2, 1]).unwrap();
    let p32 = Partition::new(vec![3, 2]).unwrap();
    assert_eq!(common::count_syt(&p21), 2);
    assert_eq!(common::count_syt(&p32), 5);
    for n in 0..=8 {
        for shape in enumerate_partitions(n) {
            assert_eq!(
                shape.degree(),
                common::count_syt(&shape).into(),
                "degree disagrees with SYT enumeration at {shape}"
            );
        }
    }
}

#[test]
fn rim_hook_removals_match_cell_level_oracle() {
    for n in 1..=8 {
        for shape in enumerate_partitions(n) {
            for k in 1..=n {
                let expected = common::removals_by_cells(&shape, k);
                let mut actual: Vec<(Partition, usize)> = shape
                    .removable_rim_hooks(k)
                    .into_iter()
                    .map(|r| (r.after, r.height))
                    .collect();
                actual.sort();
                assert_eq!(actual, expected, "shape {shape}, hook length {k}");
            }
        }
    }
}

#[test]
fn boundary_words_roundtrip_to_ten() {
    for n in 0..=10 {
        for shape in enumerate_partitions(n) {
            assert_eq!(Partition::from_boundary_word(&shape.boundary_word()), shape);
        }
    }
}

#[test]
fn every_greedy_peeling_ends_at_the_core() {
    for n in 0..=10 {
        for shape in enumerate_partitions(n) {
            for r in 2..=4 {
                let terminals = common::terminal_shapes(&shape, r);
                assert_eq!(
                    terminals.len(),
                    1,
                    "peeling order changed the endpoint for {shape}, r={r}"
                );
                assert_eq!(terminals.first().unwrap(), &r_core(&shape, r));
            }
        }
    }
}

#[test]
fn core_quotient_size_identity_and_injectivity() {
    // Holds at every size, not just multiples of r.
    for r in 2..=4 {
        for n in 0..=10 {
            let mut seen = std::collections::BTreeSet::new();
            for shape in enumerate_partitions(n) {
                let core = r_core(&shape, r);
                let quotient = r_quotient(&shape, r);
                assert_eq!(shape.size(), core.size() + r * quotient.total());
                assert!(
                    seen.insert((core, quotient)),
                    "(core, quotient) collision at {shape}, r={r}"
                );
            }
        }
    }
}

#[test]
fn bead_padding_does_not_change_core_or_quotient() {
    for n in 0..=9 {
        for shape in enumerate_partitions(n) {
            for r in 2..=4 {
                let canonical = to_beta(&shape, r);
                let base = canonical.total_beads();
                for extra in 1..=3 {
                    let padded = to_beta_with_beads(&shape, r, base + extra * r).unwrap();
                    assert_eq!(padded.collapsed().decode(), canonical.collapsed().decode());
                    for j in 0..r {
                        assert_eq!(padded.decode_runner(j), canonical.decode_runner(j));
                    }
                }
            }
        }
    }
    assert!(matches!(
        to_beta_with_beads(&Partition::new(vec![2, 1, 1]).unwrap(), 2, 2),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        to_beta_with_beads(&Partition::empty(), 2, 3),
        Err(Error::InvalidInput(_))
    ));
}

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=6, 0..=5).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_size
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(shape in arb_partition(24)) {
        prop_assert_eq!(shape.conjugate().conjugate(), shape);
    }

    #[test]
    fn conjugate_preserves_size(shape in arb_partition(24)) {
        prop_assert_eq!(shape.conjugate().size(), shape.size());
    }

    #[test]
    fn boundary_word_roundtrips(shape in arb_partition(24)) {
        let word = shape.boundary_word();
        prop_assert_eq!(Partition::from_boundary_word(&word), shape);
    }

    #[test]
    fn literals_roundtrip(shape in arb_partition(24)) {
        let text = shape.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), shape);
    }

    #[test]
    fn beta_decodes_back(shape in arb_partition(24), r in 1usize..=5) {
        prop_assert_eq!(to_beta(&shape, r).decode(), shape);
    }
}

//! Library results against independent oracles.

mod common;

use degsim::graph::enumerate::{all_graphs, connected_graphs};
use degsim::graph::random::gnp;
use degsim::pencil::{psi, snf_pencil};
use degsim::zeta::reduced_walk_series;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{char_pencil, cofactor_det, count_reduced_walks, determinantal_divisor_snf};

#[test]
fn psi_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..60 {
        let n = rng.gen_range(0..=6);
        let p = rng.gen_range(0.2..0.9);
        let g = gnp(&mut rng, n, p);
        assert_eq!(psi(&g), cofactor_det(&char_pencil(&g)), "{g:?}");
    }
}

#[test]
fn snf_matches_determinantal_divisors_for_all_graphs_up_to_five() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let snf = snf_pencil(&g);
            assert_eq!(
                snf.invariant_factors,
                determinantal_divisor_snf(&g),
                "{g:?}"
            );
        }
    }
}

#[test]
fn walk_series_matches_enumeration() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let series = reduced_walk_series(&g, 7);
            let counts = count_reduced_walks(&g, 7);
            for (r, m) in series.terms.iter().enumerate() {
                for u in 0..n {
                    for v in 0..n {
                        assert_eq!(
                            m[(u, v)],
                            BigInt::from(counts[r][u][v]),
                            "{g:?} r={r} ({u},{v})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn walk_enumeration_handles_disconnected_graphs() {
    // The recurrence does not need connectivity; only the series identity does.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let n = rng.gen_range(1..=7);
        let g = gnp(&mut rng, n, 0.3);
        let series = reduced_walk_series(&g, 6);
        let counts = count_reduced_walks(&g, 6);
        for (r, m) in series.terms.iter().enumerate() {
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(m[(u, v)], BigInt::from(counts[r][u][v]));
                }
            }
        }
    }
}

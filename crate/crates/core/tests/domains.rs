use std::sync::Arc;

use fplrs::fpl::{count_configs, FplConfig};
use fplrs::gyration::{generalized_gyration_check, verify_h};
use fplrs::identities::check_spr;
use fplrs::lattice::{build_square, BoundaryCondition, Domain, Sign};
use fplrs::random::{random_config, random_domain, random_valid_triplet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Counts configurations by trying every colouring of the internal edges.
fn brute_count(d: &Arc<Domain>, t: &BoundaryCondition) -> u64 {
    let ni = d.num_internal();
    let mut n = 0;
    for mask in 0u64..1 << ni {
        let mut colours: Vec<bool> = (0..ni).map(|e| mask >> e & 1 == 1).collect();
        colours.extend(t.colours());
        if FplConfig::from_colours(d, &colours).is_ok() {
            n += 1;
        }
    }
    n
}

#[test]
fn h_on_the_square() {
    for n in 1..=4 {
        let (d, t) = build_square(n, Sign::Plus);
        let d = Arc::new(d);
        for parity in [Sign::Plus, Sign::Minus] {
            for tau in [t.clone(), t.complement()] {
                let r = verify_h(&d, &tau, parity).unwrap();
                assert!(r.passed(), "n = {n} {parity}: {r:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_on_random_domains(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, t) = random_valid_triplet(&mut rng, 30);
        prop_assert!(d.num_cells() <= 30);
        for parity in [Sign::Plus, Sign::Minus] {
            let r = verify_h(&d, &t, parity).unwrap();
            prop_assert!(r.passed(), "{} {} {:?}", d.to_json(), t, r);
        }
    }

    #[test]
    fn generalized_gyration_on_random_domains(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, t) = random_valid_triplet(&mut rng, 20);
        for side in generalized_gyration_check(&d, &t).unwrap() {
            prop_assert!(side.holds(), "{} {} {}", d.to_json(), t, side.parity);
        }
    }

    #[test]
    fn enumeration_matches_brute_force(seed in any::<u64>(), size in 1usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = Arc::new(random_domain(&mut rng, size));
        if let Some(phi) = random_config(&mut rng, &d) {
            let t = phi.boundary();
            prop_assert_eq!(count_configs(&d, &t).unwrap(), brute_count(&d, &t));
        }
    }

    #[test]
    fn spr_on_strips(seed in any::<u64>(), k in 2i32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cells: Vec<(i32, i32)> = (0..k).flat_map(|x| [(x, 0), (x, 1)]).collect();
        let d = Arc::new(Domain::new(&cells, 0).unwrap());
        let Some(phi) = (0..20).find_map(|_| random_config(&mut rng, &d)) else {
            return Ok(());
        };
        let t = phi.boundary();
        let m = t.len();
        let terms = d.terminations();
        let start = rng_start(seed, m);
        // the first pair of consecutive black legs on distinct adjacent cells
        let hit = (0..m).map(|i| (start + i) % m).find(|&a| {
            let b = (a + 1) % m;
            t.is_black(a) && t.is_black(b) && terms[a].cell != terms[b].cell
                && d.edge_between(terms[a].cell, terms[b].cell).is_some()
        });
        let Some(a) = hit else { return Ok(()) };
        let shift = a as i64 + 2;
        let r = check_spr(&d.reanchored(shift), &t.rotated(shift)).unwrap();
        prop_assert!(r.holds(), "{} {}", d.reanchored(shift).to_json(), t.rotated(shift));
    }
}

fn rng_start(seed: u64, m: usize) -> usize {
    (seed % m as u64) as usize
}

#[test]
fn spr_minimal_case() {
    // one arc on each side of the first identity: two black legs in t1
    let mut nonzero = 0;
    for (w, h) in [(2, 2), (3, 2), (2, 3)] {
        let d = Domain::rectangle(w, h).unwrap();
        let m = d.num_terminations();
        for a in 0..m {
            for b in a + 1..m {
                let colours: Vec<bool> = (0..m).map(|k| k == a || k == b).collect();
                let Ok(t) = BoundaryCondition::new(colours) else { continue };
                for shift in 0..m as i64 {
                    if let Ok(r) = check_spr(&d.reanchored(shift), &t.rotated(shift)) {
                        assert_eq!(r.m, 1);
                        assert!(r.holds(), "{} {} {:?}", d.reanchored(shift).to_json(), t.rotated(shift), r);
                        nonzero += usize::from(!r.s1.is_zero());
                    }
                }
            }
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn spr_rejects_bad_geometry() {
    let d = Domain::rectangle(2, 2).unwrap();
    let t: BoundaryCondition = "bwbwbwbw".parse().unwrap();
    assert!(check_spr(&d, &t).is_err());
}

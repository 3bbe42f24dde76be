//! Random domains and boundary conditions for property tests.

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fpl::FplConfig;
use crate::lattice::{glue_and_gamma, BoundaryCondition, Dir, Domain, Sign, Slot};

/// Grows a random polyomino of `cells` cells from the origin and retries
/// until it has no hole and no pinch.
pub fn random_domain<R: Rng>(rng: &mut R, cells: usize) -> Domain {
    let cells = cells.max(1);
    loop {
        let mut set: HashSet<(i32, i32)> = HashSet::from([(0, 0)]);
        let mut list = vec![(0, 0)];
        while list.len() < cells {
            let &(x, y) = list.choose(rng).expect("nonempty");
            let (dx, dy) = Dir::ALL[rng.gen_range(0..4)].delta();
            let c = (x + dx, y + dy);
            if set.insert(c) {
                list.push(c);
            }
        }
        if let Ok(d) = Domain::new(&list, 0) {
            let k = d.num_terminations();
            return d.reanchored(rng.gen_range(0..k as i64));
        }
    }
}

/// Colours the edges at random so that every cell has two black and two
/// white edges, and returns that configuration. `None` if the greedy pass
/// got stuck.
pub fn random_config<R: Rng>(rng: &mut R, d: &Arc<Domain>) -> Option<FplConfig> {
    let nv = d.num_cells();
    let mut black = vec![0u8; nv];
    let mut white = vec![0u8; nv];
    let mut colours = vec![false; d.num_edges()];
    let mut order: Vec<usize> = (0..d.num_internal()).collect();
    order.shuffle(rng);
    for e in order {
        let (u, v) = d.edges()[e];
        let can_b = black[u] < 2 && black[v] < 2;
        let can_w = white[u] < 2 && white[v] < 2;
        let b = match (can_b, can_w) {
            (true, true) => rng.gen_bool(0.5),
            (true, false) => true,
            (false, true) => false,
            (false, false) => return None,
        };
        colours[e] = b;
        let count = if b { &mut black } else { &mut white };
        count[u] += 1;
        count[v] += 1;
    }
    for v in 0..nv {
        let mut terms: Vec<usize> = d
            .slots(v)
            .iter()
            .filter_map(|s| match s {
                Slot::Term(k) => Some(*k),
                Slot::Internal(_) => None,
            })
            .collect();
        terms.shuffle(rng);
        let need = 2 - black[v] as usize;
        if need > terms.len() || terms.len() - need > 2 - white[v] as usize {
            return None;
        }
        for &k in &terms[..need] {
            colours[d.term_edge(k)] = true;
        }
    }
    FplConfig::from_colours(d, &colours).ok()
}

/// A random domain of at most `max_cells` cells with a boundary condition
/// that admits at least one configuration and whose triplets are valid for
/// both pairings (corner swaps allowed).
pub fn random_valid_triplet<R: Rng>(rng: &mut R, max_cells: usize) -> (Arc<Domain>, BoundaryCondition) {
    loop {
        let size = rng.gen_range(1..=max_cells.max(1));
        let d = Arc::new(random_domain(rng, size));
        for _ in 0..20 {
            let Some(phi) = random_config(rng, &d) else { continue };
            let t = phi.boundary();
            let ok = [Sign::Plus, Sign::Minus]
                .iter()
                .all(|&p| glue_and_gamma(&d, &t, p, true).is_ok());
            if ok {
                return (d, t);
            }
        }
    }
}

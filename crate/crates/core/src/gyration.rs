//! The local maps `H` on glued graphs, gyration `G = H- H+` on the square,
//! orbits, and the orbit sums of plaquette indicators.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fpl::{black_pattern, collect_configs, link_vector, plaquette_indicator, FplConfig};
use crate::lattice::{build_square, glue_and_gamma, BoundaryCondition, Domain, GluedGraph, Plaquette, Sign};
use crate::linkpat::{LinkPattern, LpVector, Operator, RotationClass};

/// Applies `H` for the glued graph `g`: alternating 4-cycles are kept, every
/// other cycle is colour-complemented. The configuration may sit on the
/// boundary condition of `g`, on its complement, or on the pre-swap
/// boundary condition (the swaps are then applied first).
pub fn apply_h(phi: &FplConfig, g: &GluedGraph) -> Result<FplConfig> {
    if !Arc::ptr_eq(phi.domain(), g.domain()) && **phi.domain() != **g.domain() {
        return Err(Error::InvalidTriplet("configuration lives on another domain".into()));
    }
    let b = phi.boundary();
    let mut cur = if b == *g.tau() || b == g.tau().complement() {
        phi.clone()
    } else if b == *g.original_tau() || b == g.original_tau().complement() {
        g.swaps().iter().fold(phi.clone(), |p, &k| p.swap_terminations(k))
    } else {
        return Err(Error::InvalidTriplet(format!(
            "boundary {b} does not match the glued graph ({})",
            g.tau()
        )));
    };
    for c in g.cycles() {
        let alternating = c.edges.len() == 4
            && (0..4).all(|i| phi_edge(&cur, c.edges[i]) != phi_edge(&cur, c.edges[(i + 1) % 4]));
        if !alternating {
            for &e in &c.edges {
                cur.flip(e);
            }
        }
    }
    if !cur.satisfies_ice_rule() {
        return Err(Error::InvalidTriplet("image violates the ice rule".into()));
    }
    Ok(cur)
}

#[inline]
fn phi_edge(phi: &FplConfig, e: usize) -> bool {
    phi.is_black(e)
}

/// Outcome of running `H` over a whole ensemble.
#[derive(Clone, Debug)]
pub struct HReport {
    pub configs: usize,
    pub complement_configs: usize,
    pub swaps: Vec<usize>,
    pub failure: Option<String>,
}

impl HReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.configs == self.complement_configs
    }
}

/// Applies `H` to every configuration of `(d, t)` for one pairing and
/// checks that it is an involution onto the complemented boundary condition
/// that keeps the glued connectivity.
pub fn verify_h(d: &Arc<Domain>, t: &BoundaryCondition, parity: Sign) -> Result<HReport> {
    let g = glue_and_gamma(d, t, parity, true)?;
    let all = collect_configs(d, g.tau())?;
    let complement_configs = crate::fpl::count_configs(d, &g.tau().complement())? as usize;
    let bar = g.tau().complement();
    let mut images = HashSet::with_capacity(all.len());
    let mut failure = None;
    for phi in &all {
        let h = apply_h(phi, &g)?;
        let problem = if h.boundary() != bar {
            Some("image is not on the complemented boundary")
        } else if apply_h(&h, &g)? != *phi {
            Some("H is not an involution")
        } else if glued_link_data(phi, &g).triplet() != glued_link_data(&h, &g).triplet() {
            Some("connectivity changed")
        } else if !images.insert(h) {
            Some("H is not injective")
        } else {
            None
        };
        if let Some(p) = problem {
            failure = Some(format!("{p} at {}", phi.bitstring()));
            break;
        }
    }
    Ok(HReport { configs: all.len(), complement_configs, swaps: g.swaps().to_vec(), failure })
}

/// Connectivity of a configuration read on the glued graph: paths run
/// through monochromatic glued vertices and end at bichromatic ones, which
/// are labelled by their order among the pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedLinkData {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
    pub loops_black: usize,
    pub loops_white: usize,
}

impl GluedLinkData {
    /// Black and white matchings and the total number of closed loops; a
    /// loop that is itself a cycle of the partition changes colour under
    /// `H`, so only the total is kept.
    pub fn triplet(&self) -> (&[usize], &[usize], usize) {
        (&self.black, &self.white, self.loops_black + self.loops_white)
    }
}

pub fn glued_link_data(phi: &FplConfig, g: &GluedGraph) -> GluedLinkData {
    let d = phi.domain();
    let m = d.num_terminations();
    let ne = d.num_internal();
    let mut pair_of = vec![0usize; m];
    let mut other = vec![0usize; m];
    for (i, &(a, b)) in g.pairs().iter().enumerate() {
        pair_of[a] = i;
        pair_of[b] = i;
        other[a] = b;
        other[b] = a;
    }
    let tau = phi.boundary();
    let bichromatic: Vec<usize> = (0..g.pairs().len())
        .filter(|&i| {
            let (a, b) = g.pairs()[i];
            tau.is_black(a) != tau.is_black(b)
        })
        .collect();
    let mut label = vec![usize::MAX; g.pairs().len()];
    for (l, &i) in bichromatic.iter().enumerate() {
        label[i] = l;
    }
    let mut visited = vec![false; d.num_edges()];

    // walks from termination k into the domain, returns the final
    // bichromatic pair reached
    let walk = |start: usize, black: bool, visited: &mut Vec<bool>| -> usize {
        let mut k = start;
        loop {
            visited[ne + k] = true;
            let mut cell = d.terminations()[k].cell;
            let mut came = d.term_edge(k);
            let end = loop {
                let (slot, e) = d
                    .slots(cell)
                    .iter()
                    .map(|&s| (s, d.edge_id(s)))
                    .find(|&(_, e)| e != came && phi.is_black(e) == black)
                    .expect("ice rule");
                visited[e] = true;
                match slot {
                    crate::lattice::Slot::Term(k2) => break k2,
                    crate::lattice::Slot::Internal(i) => {
                        let (u, v) = d.edges()[i];
                        cell = if u == cell { v } else { u };
                        came = e;
                    }
                }
            };
            let p = pair_of[end];
            if label[p] != usize::MAX {
                return p;
            }
            k = other[end];
        }
    };

    let trace_colour = |black: bool, visited: &mut Vec<bool>| -> Vec<usize> {
        let mut partner = vec![usize::MAX; bichromatic.len()];
        for (l, &i) in bichromatic.iter().enumerate() {
            if partner[l] != usize::MAX {
                continue;
            }
            let (a, b) = g.pairs()[i];
            let start = if tau.is_black(a) == black { a } else { b };
            let p = walk(start, black, visited);
            partner[l] = label[p];
            partner[label[p]] = l;
        }
        partner
    };
    let black = trace_colour(true, &mut visited);
    let white = trace_colour(false, &mut visited);

    // closed cycles: every remaining edge lies on one
    let count = |black: bool, visited: &mut Vec<bool>| -> usize {
        let mut loops = 0;
        for e0 in 0..d.num_edges() {
            if visited[e0] || phi.is_black(e0) != black {
                continue;
            }
            loops += 1;
            // breadth-first over same-colour edges reachable from e0
            let mut stack = vec![e0];
            visited[e0] = true;
            while let Some(e) = stack.pop() {
                let ends: Vec<usize> = if e < ne {
                    let (u, v) = d.edges()[e];
                    vec![u, v]
                } else {
                    vec![d.terminations()[e - ne].cell]
                };
                for c in ends {
                    for &s in d.slots(c) {
                        let f = d.edge_id(s);
                        if !visited[f] && phi.is_black(f) == black {
                            visited[f] = true;
                            stack.push(f);
                        }
                    }
                }
                if e >= ne {
                    let f = ne + other[e - ne];
                    if !visited[f] && phi.is_black(f) == black {
                        visited[f] = true;
                        stack.push(f);
                    }
                }
            }
        }
        loops
    };
    let loops_black = count(true, &mut visited);
    let loops_white = count(false, &mut visited);
    GluedLinkData { black, white, loops_black, loops_white }
}

/// The two glued graphs of the `n x n` square used by gyration.
#[derive(Clone, Debug)]
pub struct SquareGyration {
    pub n: usize,
    pub domain: Arc<Domain>,
    pub tau_plus: BoundaryCondition,
    pub tau_minus: BoundaryCondition,
    pub plus: GluedGraph,
    pub minus: GluedGraph,
}

impl SquareGyration {
    pub fn new(n: usize) -> Result<Self> {
        let (d, tau_plus) = build_square(n, Sign::Plus);
        let domain = Arc::new(d);
        let tau_minus = tau_plus.complement();
        let plus = glue_and_gamma(&domain, &tau_plus, Sign::Plus, false)?;
        let minus = glue_and_gamma(&domain, &tau_minus, Sign::Minus, false)?;
        Ok(SquareGyration { n, domain, tau_plus, tau_minus, plus, minus })
    }

    /// `H+`: from the `+` ensemble to the `-` ensemble.
    pub fn h_plus(&self, phi: &FplConfig) -> Result<FplConfig> {
        apply_h(phi, &self.plus)
    }

    /// `H-`: from the `-` ensemble to the `+` ensemble.
    pub fn h_minus(&self, phi: &FplConfig) -> Result<FplConfig> {
        apply_h(phi, &self.minus)
    }

    pub fn gyrate(&self, phi: &FplConfig) -> Result<FplConfig> {
        if phi.boundary() != self.tau_plus {
            return Err(Error::InvalidTriplet("gyration acts on the + ensemble".into()));
        }
        self.h_minus(&self.h_plus(phi)?)
    }

    pub fn orbit(&self, phi: &FplConfig) -> Result<Orbit> {
        let mut configs = vec![phi.clone()];
        let mut cur = self.gyrate(phi)?;
        while &cur != phi {
            configs.push(cur.clone());
            cur = self.gyrate(&cur)?;
        }
        Ok(Orbit { configs })
    }

    /// All orbits of the `+` ensemble, each starting at its
    /// lexicographically first configuration.
    pub fn all_orbits(&self) -> Result<Vec<Orbit>> {
        let all = collect_configs(&self.domain, &self.tau_plus)?;
        let mut seen: HashSet<Box<[u64]>> = HashSet::new();
        let mut out = Vec::new();
        for phi in &all {
            if seen.contains(phi.key()) {
                continue;
            }
            let o = self.orbit(phi)?;
            for c in &o.configs {
                seen.insert(c.key().into());
            }
            out.push(o);
        }
        Ok(out)
    }
}

/// Gyration of a configuration of the `+` square ensemble.
pub fn gyrate(phi: &FplConfig) -> Result<FplConfig> {
    square_context(phi)?.gyrate(phi)
}

pub fn orbit(phi: &FplConfig) -> Result<Orbit> {
    square_context(phi)?.orbit(phi)
}

fn square_context(phi: &FplConfig) -> Result<SquareGyration> {
    let d = phi.domain();
    let n = (d.num_cells() as f64).sqrt().round() as usize;
    let ctx = SquareGyration::new(n.max(1))?;
    if *ctx.domain != **d {
        return Err(Error::GeometryMismatch("gyration needs the square domain".into()));
    }
    Ok(ctx)
}

/// Gyration orbit, in order of application of `G`.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub configs: Vec<FplConfig>,
}

impl Orbit {
    pub fn period(&self) -> usize {
        self.configs.len()
    }

    pub fn keys(&self) -> Vec<&[u64]> {
        self.configs.iter().map(|c| c.key()).collect()
    }

    pub fn plaquette_sum(&self, alpha: &Plaquette) -> i64 {
        self.configs.iter().map(|c| plaquette_indicator(c, alpha) as i64).sum()
    }

    /// Nonzero indicator values along the orbit, in order.
    pub fn plaquette_signs(&self, alpha: &Plaquette) -> Vec<i8> {
        self.configs
            .iter()
            .map(|c| plaquette_indicator(c, alpha))
            .filter(|&v| v != 0)
            .collect()
    }

    /// Whether the nonzero indicator values alternate around the orbit.
    pub fn plaquette_alternates(&self, alpha: &Plaquette) -> bool {
        let s = self.plaquette_signs(alpha);
        (0..s.len()).all(|i| s[i] != s[(i + 1) % s.len()])
    }

    pub fn link_class(&self) -> RotationClass {
        RotationClass::of(&black_pattern(&self.configs[0]))
    }
}

pub fn orbit_plaquette_sum(phi: &FplConfig, alpha: &Plaquette) -> Result<i64> {
    Ok(orbit(phi)?.plaquette_sum(alpha))
}

/// Every rotation `k` in `(-n, n]` with `pattern(G phi) = R^k pattern(phi)`
/// for all configurations of the `n x n` square.
pub fn gyration_rotation(ctx: &SquareGyration) -> Result<Vec<i64>> {
    let all = collect_configs(&ctx.domain, &ctx.tau_plus)?;
    let m = 2 * ctx.n as i64;
    let mut candidates: Vec<i64> = (0..m).collect();
    for phi in &all {
        let p = black_pattern(phi);
        let q = black_pattern(&ctx.gyrate(phi)?);
        candidates.retain(|&k| p.rotate(k) == q);
    }
    let mut out: Vec<i64> = candidates.into_iter().map(|k| if k > m / 2 { k - m } else { k }).collect();
    out.sort_unstable();
    Ok(out)
}

/// CSV rows `orbit_id,period,link_class,plaquette,sum` for every orbit and
/// internal plaquette of the square.
pub fn orbit_report_csv(ctx: &SquareGyration) -> Result<String> {
    let mut out = String::from("orbit_id,period,link_class,plaquette,sum\n");
    for (i, o) in ctx.all_orbits()?.iter().enumerate() {
        let class = o.link_class().representative.to_word();
        for a in ctx.domain.plaquettes() {
            writeln!(out, "{i},{},{class},{}:{},{}", o.period(), a.x, a.y, o.plaquette_sum(a))
                .expect("writing to a string");
        }
    }
    Ok(out)
}

/// Sum of the indicator over all configurations whose pattern lies in each
/// rotation class, keyed by class representative.
pub fn class_plaquette_sums(ctx: &SquareGyration, alpha: &Plaquette) -> Result<BTreeMap<LinkPattern, (i64, i64)>> {
    let all = collect_configs(&ctx.domain, &ctx.tau_plus)?;
    let mut out: BTreeMap<LinkPattern, (i64, i64)> = BTreeMap::new();
    for phi in &all {
        let rep = RotationClass::of(&black_pattern(phi)).representative;
        let e = out.entry(rep).or_default();
        match plaquette_indicator(phi, alpha) {
            1 => e.0 += 1,
            -1 => e.1 += 1,
            _ => {}
        }
    }
    Ok(out)
}

/// One side of the generalized gyration relation.
#[derive(Clone, Debug)]
pub struct GeneralizedGyration {
    pub parity: Sign,
    pub swaps: Vec<usize>,
    /// Black labels of the first termination of each `(b, b)` pair.
    pub j1: Vec<usize>,
    /// Same for the complemented boundary condition.
    pub j2: Vec<usize>,
    /// `j1` and `j2` relabelled from the caller's anchor. They differ from
    /// `j1`, `j2` only for the minus pairing.
    pub j1_base: Vec<usize>,
    pub j2_base: Vec<usize>,
    pub lhs: LpVector,
    pub rhs: LpVector,
}

impl GeneralizedGyration {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn bb_labels(tau: &BoundaryCondition, pairs: &[(usize, usize)], shift: i64) -> Vec<usize> {
    let base = tau.rotated(shift);
    let labels = base.black_labels();
    let m = tau.len() as i64;
    let mut j: Vec<usize> = pairs
        .iter()
        .filter(|&&(a, b)| tau.is_black(a) && tau.is_black(b))
        .map(|&(a, _)| labels[(a as i64 - shift).rem_euclid(m) as usize].expect("black termination has a label"))
        .collect();
    j.sort_unstable();
    j
}

fn close_all(s: &LpVector, j: &[usize]) -> Result<LpVector> {
    let ops: Vec<Operator> = j.iter().map(|&j| Operator::Close(j)).collect();
    s.apply_product(&ops)
}

/// Builds both sides of `prod_{J1} c_j |s1> = prod_{J2} c_j |s2>` for one
/// pairing. For the minus pairing the anchor is moved back by one so that
/// the pairs read `(1,2), (3,4), ...`.
pub fn generalized_gyration_side(d: &Domain, t: &BoundaryCondition, parity: Sign) -> Result<GeneralizedGyration> {
    let (d, t) = match parity {
        Sign::Plus => (d.clone(), t.clone()),
        Sign::Minus => (d.reanchored(-1), t.rotated(-1)),
    };
    let shift = match parity {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };
    let d = Arc::new(d);
    let g = glue_and_gamma(&d, &t, Sign::Plus, true)?;
    let tau = g.tau().clone();
    let bar = tau.complement();
    let s1 = link_vector(&d, &tau, |_| true)?;
    let s2 = link_vector(&d, &bar, |_| true)?;
    let j1 = bb_labels(&tau, g.pairs(), 0);
    let j2 = bb_labels(&bar, g.pairs(), 0);
    let j1_base = bb_labels(&tau, g.pairs(), shift);
    let j2_base = bb_labels(&bar, g.pairs(), shift);
    let lhs = close_all(&s1, &j1)?;
    let rhs = close_all(&s2, &j2)?;
    Ok(GeneralizedGyration { parity, swaps: g.swaps().to_vec(), j1, j2, j1_base, j2_base, lhs, rhs })
}

/// Checks the generalized gyration relation for both pairings.
pub fn generalized_gyration_check(d: &Domain, t: &BoundaryCondition) -> Result<Vec<GeneralizedGyration>> {
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|p| generalized_gyration_side(d, t, p))
        .collect()
}

//! Domains on the square lattice, boundary conditions, and the pairwise
//! gluing of terminations together with its cycle partition.
//!
//! A domain is a polyomino whose cells are lattice vertices. Two cells at
//! unit distance are joined by an internal edge; every cell side facing the
//! outside carries a termination. Terminations are ordered by walking the
//! boundary counter-clockwise (interior on the left), starting from the
//! anchor.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Side of a cell, named by its outward normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    S = 0,
    E = 1,
    N = 2,
    W = 3,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::S, Dir::E, Dir::N, Dir::W];

    pub fn delta(self) -> (i32, i32) {
        match self {
            Dir::S => (0, -1),
            Dir::E => (1, 0),
            Dir::N => (0, 1),
            Dir::W => (-1, 0),
        }
    }

    /// Direction of travel along this side when the interior is on the left.
    fn travel(self) -> (i32, i32) {
        let (ox, oy) = self.delta();
        (-oy, ox)
    }

    fn ccw(self) -> Dir {
        Dir::ALL[(self as usize + 1) % 4]
    }

    fn cw(self) -> Dir {
        Dir::ALL[(self as usize + 3) % 4]
    }

    pub fn opposite(self) -> Dir {
        Dir::ALL[(self as usize + 2) % 4]
    }
}

/// Plus or minus: used both for the alternating boundary conditions of the
/// square and for the two pairings of consecutive terminations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown sign {s:?}"))),
        }
    }
}

/// What sits behind one of the four sides of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Internal edge, by index into `Domain::edges`.
    Internal(usize),
    /// Termination, by position in the counter-clockwise order.
    Term(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Termination {
    pub cell: usize,
    pub dir: Dir,
}

/// Unit face of the lattice with all four corners in the domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Plaquette {
    /// Lower-left corner.
    pub x: i32,
    pub y: i32,
    /// Internal edges in cyclic order: bottom, right, top, left.
    pub edges: [usize; 4],
}

#[derive(Clone)]
pub struct Domain {
    cells: Vec<(i32, i32)>,
    index: HashMap<(i32, i32), usize>,
    anchor: usize,
    slots: Vec<[Slot; 4]>,
    edges: Vec<(usize, usize)>,
    terms: Vec<Termination>,
    steps: Vec<i8>,
    plaquettes: Vec<Plaquette>,
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells && self.anchor == other.anchor
    }
}

impl Eq for Domain {}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Domain")
            .field("cells", &self.cells)
            .field("anchor", &self.anchor)
            .finish()
    }
}

/// Largest accepted cell coordinate in absolute value.
pub const MAX_COORD: i32 = 1 << 24;

#[derive(Serialize, Deserialize)]
struct DomainFile {
    cells: Vec<[i32; 2]>,
    anchor: usize,
}

impl Domain {
    /// Builds a domain from its cells; `anchor` is an offset into the
    /// boundary walk that starts on the south side of the lowest, then
    /// leftmost, cell.
    pub fn new(cells: &[(i32, i32)], anchor: usize) -> Result<Domain> {
        if cells.is_empty() {
            return Err(Error::InvalidDomain("no cells".into()));
        }
        if let Some(c) = cells.iter().find(|c| c.0.unsigned_abs() > MAX_COORD as u32 || c.1.unsigned_abs() > MAX_COORD as u32) {
            return Err(Error::InvalidDomain(format!("cell {c:?} outside ±{MAX_COORD}")));
        }
        let mut cells: Vec<(i32, i32)> = cells.to_vec();
        cells.sort_by_key(|&(x, y)| (y, x));
        let len_before = cells.len();
        cells.dedup();
        if cells.len() != len_before {
            return Err(Error::InvalidDomain("repeated cell".into()));
        }
        let index: HashMap<(i32, i32), usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        // connectivity
        let mut seen = vec![false; cells.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            let (x, y) = cells[u];
            for d in Dir::ALL {
                let (dx, dy) = d.delta();
                if let Some(&v) = index.get(&(x + dx, y + dy)) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDomain("cells are not connected".into()));
        }

        // internal edges in canonical order: per cell, east then north
        let mut edges = Vec::new();
        let mut slots = vec![[Slot::Term(usize::MAX); 4]; cells.len()];
        for (u, &(x, y)) in cells.iter().enumerate() {
            for d in [Dir::E, Dir::N] {
                let (dx, dy) = d.delta();
                if let Some(&v) = index.get(&(x + dx, y + dy)) {
                    slots[u][d as usize] = Slot::Internal(edges.len());
                    slots[v][d.opposite() as usize] = Slot::Internal(edges.len());
                    edges.push((u, v));
                }
            }
        }
        let boundary_sides = 4 * cells.len() - 2 * edges.len();

        // boundary walk
        let mut walk = Vec::with_capacity(boundary_sides);
        let mut steps_walk = Vec::with_capacity(boundary_sides);
        let start = (0usize, Dir::S);
        let mut cur = start;
        loop {
            walk.push(cur);
            if walk.len() > boundary_sides {
                return Err(Error::InvalidDomain("boundary walk does not close".into()));
            }
            let (c, d) = cur;
            let (x, y) = cells[c];
            let (tx, ty) = d.travel();
            let (ox, oy) = d.delta();
            let a = (x + tx, y + ty);
            let b = (a.0 + ox, a.1 + oy);
            let next = if let Some(&bi) = index.get(&b) {
                if !index.contains_key(&a) {
                    return Err(Error::InvalidDomain(format!(
                        "cells {:?} and {:?} touch only at a corner",
                        cells[c], b
                    )));
                }
                steps_walk.push(-1);
                (bi, d.cw())
            } else if let Some(&ai) = index.get(&a) {
                steps_walk.push(0);
                (ai, d)
            } else {
                steps_walk.push(1);
                (c, d.ccw())
            };
            if next == start {
                break;
            }
            cur = next;
        }
        if walk.len() != boundary_sides {
            return Err(Error::InvalidDomain(
                "domain is not simply connected".into(),
            ));
        }
        if anchor >= walk.len() {
            return Err(Error::InvalidDomain(format!(
                "anchor {anchor} out of range for {} terminations",
                walk.len()
            )));
        }
        let m = walk.len();
        let mut terms = Vec::with_capacity(m);
        let mut steps = Vec::with_capacity(m);
        for k in 0..m {
            let (c, d) = walk[(anchor + k) % m];
            slots[c][d as usize] = Slot::Term(k);
            terms.push(Termination { cell: c, dir: d });
            steps.push(steps_walk[(anchor + k) % m]);
        }

        let mut plaquettes = Vec::new();
        for &(x, y) in &cells {
            let corner = |dx: i32, dy: i32| index.get(&(x + dx, y + dy)).copied();
            if let (Some(ll), Some(lr), Some(ul), Some(_)) =
                (corner(0, 0), corner(1, 0), corner(0, 1), corner(1, 1))
            {
                let int = |s: Slot| match s {
                    Slot::Internal(e) => e,
                    Slot::Term(_) => unreachable!("plaquette side is internal"),
                };
                plaquettes.push(Plaquette {
                    x,
                    y,
                    edges: [
                        int(slots[ll][Dir::E as usize]),
                        int(slots[lr][Dir::N as usize]),
                        int(slots[ul][Dir::E as usize]),
                        int(slots[ll][Dir::N as usize]),
                    ],
                });
            }
        }

        Ok(Domain {
            cells,
            index,
            anchor,
            slots,
            edges,
            terms,
            steps,
            plaquettes,
        })
    }

    /// `w` columns by `h` rows, lower-left cell at the origin, anchored on
    /// the south side of the lower-left cell.
    pub fn rectangle(w: usize, h: usize) -> Result<Domain> {
        if w == 0 || h == 0 {
            return Err(Error::InvalidDomain("empty rectangle".into()));
        }
        let cells: Vec<(i32, i32)> = (0..h as i32)
            .flat_map(|y| (0..w as i32).map(move |x| (x, y)))
            .collect();
        Domain::new(&cells, 0)
    }

    /// Same cells, anchor moved `k` positions counter-clockwise.
    pub fn reanchored(&self, k: i64) -> Domain {
        let m = self.terms.len() as i64;
        let anchor = (self.anchor as i64 + k).rem_euclid(m) as usize;
        Domain::new(&self.cells, anchor).expect("cells already validated")
    }

    pub fn from_json(s: &str) -> Result<Domain> {
        let file: DomainFile = serde_json::from_str(s)?;
        let cells: Vec<(i32, i32)> = file.cells.iter().map(|c| (c[0], c[1])).collect();
        Domain::new(&cells, file.anchor)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DomainFile {
            cells: self.cells.iter().map(|&(x, y)| [x, y]).collect(),
            anchor: self.anchor,
        })
        .expect("plain data serializes")
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_index(&self, x: i32, y: i32) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn slot(&self, cell: usize, d: Dir) -> Slot {
        self.slots[cell][d as usize]
    }

    pub fn slots(&self, cell: usize) -> &[Slot; 4] {
        &self.slots[cell]
    }

    /// Internal edges `(u, v)` with `v` east or north of `u`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_internal(&self) -> usize {
        self.edges.len()
    }

    pub fn terminations(&self) -> &[Termination] {
        &self.terms
    }

    pub fn num_terminations(&self) -> usize {
        self.terms.len()
    }

    /// Total edge count `|E0| + |E1|`.
    pub fn num_edges(&self) -> usize {
        self.edges.len() + self.terms.len()
    }

    /// Canonical index of a slot: internal edges first, then terminations.
    pub fn edge_id(&self, s: Slot) -> usize {
        match s {
            Slot::Internal(e) => e,
            Slot::Term(k) => self.edges.len() + k,
        }
    }

    pub fn term_edge(&self, k: usize) -> usize {
        self.edges.len() + k
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        Dir::ALL.iter().find_map(|&d| match self.slots[u][d as usize] {
            Slot::Internal(e) if u != v && (self.edges[e].0 == v || self.edges[e].1 == v) => Some(e),
            _ => None,
        })
    }

    pub fn plaquettes(&self) -> &[Plaquette] {
        &self.plaquettes
    }

    pub fn plaquette_at(&self, x: i32, y: i32) -> Option<&Plaquette> {
        self.plaquettes.iter().find(|p| p.x == x && p.y == y)
    }

    pub fn boundary_string(&self) -> BoundaryString {
        BoundaryString { steps: self.steps.clone() }
    }

    /// Bounding box `(xmin, ymin, xmax, ymax)`.
    pub fn bounds(&self) -> (i32, i32, i32, i32) {
        let xs = self.cells.iter().map(|c| c.0);
        let ys = self.cells.iter().map(|c| c.1);
        (
            xs.clone().min().unwrap(),
            ys.clone().min().unwrap(),
            xs.max().unwrap(),
            ys.max().unwrap(),
        )
    }
}

/// Free-function form of [`Domain::boundary_string`].
pub fn boundary_string(d: &Domain) -> BoundaryString {
    d.boundary_string()
}

/// Turning steps of the boundary walk; step `k` sits between terminations
/// `k` and `k + 1` (0-based, cyclic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryString {
    pub steps: Vec<i8>,
}

impl BoundaryString {
    pub fn total(&self) -> i64 {
        self.steps.iter().map(|&s| s as i64).sum()
    }

    pub fn count(&self, v: i8) -> usize {
        self.steps.iter().filter(|&&s| s == v).count()
    }
}

impl fmt::Display for BoundaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                -1 => "-",
                0 => "0",
                _ => "+",
            })?;
        }
        Ok(())
    }
}

/// Colours of the terminations, parallel to the counter-clockwise order.
/// `true` is black.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundaryCondition {
    colours: Vec<bool>,
}

impl BoundaryCondition {
    pub fn new(colours: Vec<bool>) -> Result<Self> {
        let black = colours.iter().filter(|&&c| c).count();
        if black % 2 != 0 || (colours.len() - black) % 2 != 0 {
            return Err(Error::InvalidBoundary(format!(
                "{black} black and {} white terminations; both must be even",
                colours.len() - black
            )));
        }
        Ok(BoundaryCondition { colours })
    }

    /// Alternating colours of length `m`, black first for `Plus`.
    pub fn alternating(m: usize, sign: Sign) -> Self {
        let first = sign == Sign::Plus;
        BoundaryCondition {
            colours: (0..m).map(|k| (k % 2 == 0) == first).collect(),
        }
    }

    pub fn colours(&self) -> &[bool] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn is_black(&self, k: usize) -> bool {
        self.colours[k]
    }

    pub fn black_count(&self) -> usize {
        self.colours.iter().filter(|&&c| c).count()
    }

    /// Number of black arcs, `n`.
    pub fn n(&self) -> usize {
        self.black_count() / 2
    }

    pub fn complement(&self) -> Self {
        BoundaryCondition {
            colours: self.colours.iter().map(|c| !c).collect(),
        }
    }

    /// Colours seen from an anchor moved `k` positions forward.
    pub fn rotated(&self, k: i64) -> Self {
        let m = self.colours.len() as i64;
        BoundaryCondition {
            colours: (0..m)
                .map(|i| self.colours[(i + k).rem_euclid(m) as usize])
                .collect(),
        }
    }

    /// Exchanges the colours at positions `k` and `k + 1` (cyclic).
    pub fn swapped(&self, k: usize) -> Self {
        let m = self.colours.len();
        let mut colours = self.colours.clone();
        colours.swap(k % m, (k + 1) % m);
        BoundaryCondition { colours }
    }

    /// 1-based black label of each termination, or `None` for white ones.
    pub fn black_labels(&self) -> Vec<Option<usize>> {
        let mut next = 0;
        self.colours
            .iter()
            .map(|&c| {
                c.then(|| {
                    next += 1;
                    next
                })
            })
            .collect()
    }

    pub fn check_domain(&self, d: &Domain) -> Result<()> {
        if self.len() != d.num_terminations() {
            return Err(Error::InvalidBoundary(format!(
                "{} colours for {} terminations",
                self.len(),
                d.num_terminations()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.colours {
            f.write_str(if c { "b" } else { "w" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundaryCondition({self})")
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let colours = s
            .chars()
            .map(|c| match c {
                'b' | 'B' => Ok(true),
                'w' | 'W' => Ok(false),
                _ => Err(Error::InvalidBoundary(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BoundaryCondition::new(colours)
    }
}

/// The `n x n` square with alternating boundary conditions.
pub fn build_square(n: usize, sign: Sign) -> (Domain, BoundaryCondition) {
    assert!(n >= 1, "square side must be positive");
    let d = Domain::rectangle(n, n).expect("square is a valid domain");
    let t = BoundaryCondition::alternating(4 * n, sign);
    (d, t)
}

/// One cycle of the partition of the glued graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// Canonical edge ids in cyclic order.
    pub edges: Vec<usize>,
    /// Index into `GluedGraph::pairs` when the cycle passes through a glued
    /// vertex.
    pub pair: Option<usize>,
}

/// A domain with its terminations glued in consecutive pairs, and the
/// unique partition of its edges into short cycles.
#[derive(Clone, Debug)]
pub struct GluedGraph {
    domain: Arc<Domain>,
    parity: Sign,
    pairs: Vec<(usize, usize)>,
    original: BoundaryCondition,
    tau: BoundaryCondition,
    swaps: Vec<usize>,
    cycles: Vec<Cycle>,
}

impl GluedGraph {
    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn parity(&self) -> Sign {
        self.parity
    }

    /// Glued termination pairs, by position, in cyclic order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Boundary condition after the applied swaps.
    pub fn tau(&self) -> &BoundaryCondition {
        &self.tau
    }

    /// Boundary condition as given.
    pub fn original_tau(&self) -> &BoundaryCondition {
        &self.original
    }

    /// Positions `k` where terminations `k` and `k + 1` were interchanged.
    pub fn swaps(&self) -> &[usize] {
        &self.swaps
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Pair indices whose two terminations have different colours.
    pub fn bichromatic(&self) -> Vec<usize> {
        (0..self.pairs.len())
            .filter(|&i| {
                let (a, b) = self.pairs[i];
                self.tau.is_black(a) != self.tau.is_black(b)
            })
            .collect()
    }
}

fn pairs_for(m: usize, parity: Sign) -> Vec<(usize, usize)> {
    match parity {
        Sign::Plus => (0..m / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
        Sign::Minus => (0..m / 2).map(|i| ((2 * i + m - 1) % m, 2 * i)).collect(),
    }
}

fn pair_cycle(d: &Domain, a: usize, b: usize) -> Result<Vec<usize>> {
    let ta = d.terms[a];
    let tb = d.terms[b];
    let ea = d.term_edge(a);
    let eb = d.term_edge(b);
    if ta.cell == tb.cell {
        return Ok(vec![ea, eb]);
    }
    if let Some(e) = d.edge_between(ta.cell, tb.cell) {
        return Ok(vec![ea, e, eb]);
    }
    // diagonal cells: go through the common neighbour inside the domain
    let (xa, ya) = d.cells[ta.cell];
    let (xb, yb) = d.cells[tb.cell];
    for m in [(xa, yb), (xb, ya)] {
        if let Some(&mi) = d.index.get(&m) {
            if let (Some(e1), Some(e2)) = (d.edge_between(ta.cell, mi), d.edge_between(mi, tb.cell)) {
                return Ok(vec![ea, e1, e2, eb]);
            }
        }
    }
    Err(Error::InvalidDomain(format!(
        "terminations {a} and {b} are not consecutive around a corner"
    )))
}

/// Glues consecutive terminations according to `parity`, computes the cycle
/// partition, and checks validity of the triplet. When `allow_swaps` is set,
/// an offending pair over a concave corner may be repaired by interchanging
/// the colours on an adjacent convex corner.
pub fn glue_and_gamma(
    d: &Arc<Domain>,
    t: &BoundaryCondition,
    parity: Sign,
    allow_swaps: bool,
) -> Result<GluedGraph> {
    t.check_domain(d)?;
    let m = d.num_terminations();
    let pairs = pairs_for(m, parity);
    let ne = d.num_internal();
    let mut covered = vec![false; ne];
    let mut cycles = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        let edges = pair_cycle(d, a, b)?;
        for &e in &edges {
            if e < ne {
                if covered[e] {
                    return Err(Error::InvalidTriplet(format!(
                        "glued pairs overlap on internal edge {e}"
                    )));
                }
                covered[e] = true;
            }
        }
        cycles.push(Cycle { edges, pair: Some(i) });
    }

    // Remaining internal edges are covered by plaquettes, propagated from
    // the forced ones.
    let plaq = d.plaquettes();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); ne];
    for (pi, p) in plaq.iter().enumerate() {
        for &e in &p.edges {
            by_edge[e].push(pi);
        }
    }
    let mut chosen = vec![false; plaq.len()];
    let available =
        |pi: usize, covered: &[bool]| plaq[pi].edges.iter().all(|&e| !covered[e]);
    loop {
        let mut progress = false;
        let mut remaining = false;
        for e in 0..ne {
            if covered[e] {
                continue;
            }
            remaining = true;
            let cands: Vec<usize> = by_edge[e]
                .iter()
                .copied()
                .filter(|&pi| available(pi, &covered))
                .collect();
            match cands.len() {
                0 => {
                    return Err(Error::InvalidTriplet(format!(
                        "internal edge {e} cannot be covered by any plaquette"
                    )))
                }
                1 => {
                    let pi = cands[0];
                    chosen[pi] = true;
                    for &f in &plaq[pi].edges {
                        covered[f] = true;
                    }
                    progress = true;
                }
                _ => {}
            }
        }
        if !remaining {
            break;
        }
        if !progress {
            return Err(Error::NonUniqueGamma(
                "propagation stalls with undetermined plaquettes".into(),
            ));
        }
    }
    for (pi, p) in plaq.iter().enumerate() {
        if chosen[pi] {
            cycles.push(Cycle { edges: p.edges.to_vec(), pair: None });
        }
    }

    let mut g = GluedGraph {
        domain: Arc::clone(d),
        parity,
        pairs,
        original: t.clone(),
        tau: t.clone(),
        swaps: Vec::new(),
        cycles,
    };
    let steps = &d.steps;
    let violations = |g: &GluedGraph| -> Vec<usize> {
        g.cycles
            .iter()
            .filter(|c| c.edges.len() == 4)
            .filter_map(|c| c.pair)
            .filter(|&i| {
                let (a, b) = g.pairs[i];
                g.tau.is_black(a) != g.tau.is_black(b)
            })
            .collect()
    };
    let bad = violations(&g);
    if !bad.is_empty() && allow_swaps {
        for &i in &bad {
            let (a, b) = g.pairs[i];
            if g.tau.is_black(a) == g.tau.is_black(b) {
                continue;
            }
            let before: HashSet<usize> = violations(&g).into_iter().collect();
            let candidates = [b, (a + m - 1) % m];
            for &k in &candidates {
                if steps[k] != 1 {
                    continue;
                }
                let trial = g.tau.swapped(k);
                let saved = std::mem::replace(&mut g.tau, trial);
                let after: HashSet<usize> = violations(&g).into_iter().collect();
                if !after.contains(&i) && after.is_subset(&before) {
                    g.swaps.push(k);
                    break;
                }
                g.tau = saved;
            }
        }
    }
    let bad = violations(&g);
    if let Some(&i) = bad.first() {
        let (a, b) = g.pairs[i];
        return Err(Error::InvalidTriplet(format!(
            "bichromatic pair ({}, {}) glued over a concave corner",
            a + 1,
            b + 1
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_coordinates_rejected() {
        assert!(Domain::new(&[(i32::MAX, 0)], 0).is_err());
        assert!(Domain::from_json(r#"{"cells":[[-2147483648,-2147483648]],"anchor":0}"#).is_err());
        assert!(Domain::new(&[(MAX_COORD, -MAX_COORD)], 3).is_ok());
    }

    #[test]
    fn square_walk() {
        let (d, t) = build_square(3, Sign::Plus);
        assert_eq!(d.num_terminations(), 12);
        assert_eq!(d.num_internal(), 12);
        let s = d.boundary_string();
        assert_eq!(s.count(1), 4);
        assert_eq!(s.count(-1), 0);
        assert_eq!(s.total(), 4);
        // south legs left to right, then east legs upward
        let sides: Vec<(i32, i32, Dir)> = d
            .terminations()
            .iter()
            .map(|t| (d.cells()[t.cell].0, d.cells()[t.cell].1, t.dir))
            .collect();
        assert_eq!(sides[0], (0, 0, Dir::S));
        assert_eq!(sides[2], (2, 0, Dir::S));
        assert_eq!(sides[3], (2, 0, Dir::E));
        assert_eq!(sides[6], (2, 2, Dir::N));
        assert_eq!(sides[11], (0, 0, Dir::W));
        assert_eq!(t.to_string(), "bwbwbwbwbwbw");
    }

    #[test]
    fn one_cell() {
        let (d, t) = build_square(1, Sign::Plus);
        assert_eq!(d.num_cells(), 1);
        assert_eq!(t.to_string(), "bwbw");
        assert_eq!(build_square(2, Sign::Minus).1, build_square(2, Sign::Plus).1.complement());
    }

    #[test]
    fn notched_square_has_one_concave_step() {
        let cells: Vec<(i32, i32)> = (0..3)
            .flat_map(|y| (0..3).map(move |x| (x, y)))
            .filter(|&c| c != (2, 2))
            .collect();
        let d = Domain::new(&cells, 0).unwrap();
        let s = d.boundary_string();
        assert_eq!(s.count(-1), 1);
        assert_eq!(s.count(1), 5);
        assert_eq!(d.num_terminations(), 12);
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(Domain::new(&[(0, 0), (1, 1)], 0).is_err());
        assert!(Domain::new(&[(0, 0), (2, 0)], 0).is_err());
        let ring: Vec<(i32, i32)> = (0..3)
            .flat_map(|y| (0..3).map(move |x| (x, y)))
            .filter(|&c| c != (1, 1))
            .collect();
        assert!(matches!(Domain::new(&ring, 0), Err(Error::InvalidDomain(_))));
        // pinch: two blocks sharing a corner
        let pinch = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2), (3, 2), (2, 3), (3, 3)];
        assert!(Domain::new(&pinch, 0).is_err());
        assert!(Domain::new(&[(0, 0)], 4).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = Domain::new(&[(0, 0), (1, 0), (1, 1)], 2).unwrap();
        let back = Domain::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert!(Domain::from_json("{\"cells\":[],\"anchor\":0}").is_err());
        assert!("bwb".parse::<BoundaryCondition>().is_err());
        assert!("bwbx".parse::<BoundaryCondition>().is_err());
        assert_eq!("bbww".parse::<BoundaryCondition>().unwrap().to_string(), "bbww");
    }

    fn plaquette_parities(g: &GluedGraph) -> Vec<(i32, i32)> {
        let d = g.domain();
        g.cycles()
            .iter()
            .filter(|c| c.pair.is_none())
            .map(|c| {
                let p = d.plaquettes().iter().find(|p| p.edges.to_vec() == c.edges).unwrap();
                (p.x, p.y)
            })
            .collect()
    }

    #[test]
    fn square_gamma_is_checkerboard() {
        for n in 1..=7 {
            let (d, t) = build_square(n, Sign::Plus);
            let d = Arc::new(d);
            for (tau, parity) in [(&t, Sign::Plus), (&t.complement(), Sign::Minus)] {
                let g = glue_and_gamma(&d, tau, parity, false).unwrap();
                assert!(g.swaps().is_empty());
                let mut count = vec![0; d.num_edges()];
                for c in g.cycles() {
                    assert!(c.edges.len() <= 4);
                    for &e in &c.edges {
                        count[e] += 1;
                    }
                }
                assert!(count.iter().all(|&c| c == 1));
                let want = if parity == Sign::Plus { 1 } else { 0 };
                for (x, y) in plaquette_parities(&g) {
                    assert_eq!((x + y).rem_euclid(2), want, "n={n} {parity}");
                }
            }
        }
    }
}

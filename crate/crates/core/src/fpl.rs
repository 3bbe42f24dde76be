//! Fully-packed loop configurations: enumeration, link patterns, vertex
//! types, plaquette indicators and refined counts.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{build_square, BoundaryCondition, Dir, Domain, Plaquette, Sign, Slot};
use crate::linkpat::{LinkPattern, LpVector};

/// An ice-rule colouring of every edge of a domain. Bit `i` is the colour of
/// canonical edge `i` (internal edges first, then terminations); 1 is black.
#[derive(Clone)]
pub struct FplConfig {
    domain: Arc<Domain>,
    bits: Box<[u64]>,
}

impl PartialEq for FplConfig {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
    }
}

impl Eq for FplConfig {}

impl Hash for FplConfig {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Debug for FplConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FplConfig({})", self.bitstring())
    }
}

fn words_for(edges: usize) -> usize {
    edges.div_ceil(64).max(1)
}

impl FplConfig {
    /// Wraps a colouring, checking the ice rule.
    pub fn from_colours(domain: &Arc<Domain>, colours: &[bool]) -> Result<Self> {
        if colours.len() != domain.num_edges() {
            return Err(Error::Parse(format!(
                "{} colours for {} edges",
                colours.len(),
                domain.num_edges()
            )));
        }
        let mut bits = vec![0u64; words_for(colours.len())];
        for (i, &c) in colours.iter().enumerate() {
            if c {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        let phi = FplConfig {
            domain: Arc::clone(domain),
            bits: bits.into_boxed_slice(),
        };
        if !phi.satisfies_ice_rule() {
            return Err(Error::Parse("colouring violates the ice rule".into()));
        }
        Ok(phi)
    }

    pub(crate) fn from_raw(domain: &Arc<Domain>, bits: Box<[u64]>) -> Self {
        FplConfig { domain: Arc::clone(domain), bits }
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    /// Packed colour words; the canonical hash key.
    pub fn key(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn is_black(&self, e: usize) -> bool {
        self.bits[e / 64] >> (e % 64) & 1 == 1
    }

    #[inline]
    pub fn slot_black(&self, s: Slot) -> bool {
        self.is_black(self.domain.edge_id(s))
    }

    pub(crate) fn flip(&mut self, e: usize) {
        self.bits[e / 64] ^= 1 << (e % 64);
    }

    pub fn bitstring(&self) -> String {
        (0..self.domain.num_edges())
            .map(|e| if self.is_black(e) { '1' } else { '0' })
            .collect()
    }

    pub fn boundary(&self) -> BoundaryCondition {
        let m = self.domain.num_terminations();
        let colours = (0..m).map(|k| self.is_black(self.domain.term_edge(k))).collect();
        BoundaryCondition::new(colours).expect("ice rule forces even counts")
    }

    pub fn complement(&self) -> FplConfig {
        let n = self.domain.num_edges();
        let mut bits = self.bits.clone();
        for (w, word) in bits.iter_mut().enumerate() {
            let valid = if (w + 1) * 64 <= n {
                u64::MAX
            } else {
                (1u64 << (n - w * 64)) - 1
            };
            *word ^= valid;
        }
        FplConfig { domain: Arc::clone(&self.domain), bits }
    }

    /// Exchanges the colours of terminations `k` and `k + 1`, which must sit
    /// on the same cell.
    pub fn swap_terminations(&self, k: usize) -> FplConfig {
        let d = &self.domain;
        let m = d.num_terminations();
        let (a, b) = (k % m, (k + 1) % m);
        debug_assert_eq!(d.terminations()[a].cell, d.terminations()[b].cell);
        let mut out = self.clone();
        let (ea, eb) = (d.term_edge(a), d.term_edge(b));
        if self.is_black(ea) != self.is_black(eb) {
            out.flip(ea);
            out.flip(eb);
        }
        out
    }

    pub fn black_count_at(&self, cell: usize) -> usize {
        self.domain
            .slots(cell)
            .iter()
            .filter(|&&s| self.slot_black(s))
            .count()
    }

    pub fn satisfies_ice_rule(&self) -> bool {
        (0..self.domain.num_cells()).all(|c| self.black_count_at(c) == 2)
    }
}

struct Plan {
    own: Vec<Vec<usize>>,
    prior: Vec<Vec<usize>>,
    checks: Vec<Vec<Vec<usize>>>,
}

impl Plan {
    fn new(d: &Domain) -> Plan {
        let nv = d.num_cells();
        let owner = |s: Slot| -> Option<usize> {
            match s {
                Slot::Internal(e) => Some(d.edges()[e].0),
                Slot::Term(_) => None,
            }
        };
        let mut own = Vec::with_capacity(nv);
        let mut prior = Vec::with_capacity(nv);
        let mut checks = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut mine = Vec::new();
            let mut before = Vec::new();
            for dir in [Dir::E, Dir::N, Dir::S, Dir::W] {
                let s = d.slot(v, dir);
                match owner(s) {
                    Some(o) if o == v => mine.push(d.edge_id(s)),
                    _ => before.push(d.edge_id(s)),
                }
            }
            let mut nb = Vec::new();
            for dir in [Dir::E, Dir::N] {
                if let Slot::Internal(e) = d.slot(v, dir) {
                    let u = d.edges()[e].1;
                    let decided: Vec<usize> = d
                        .slots(u)
                        .iter()
                        .filter(|&&s| owner(s).map_or(true, |o| o <= v))
                        .map(|&s| d.edge_id(s))
                        .collect();
                    nb.push(decided);
                }
            }
            own.push(mine);
            prior.push(before);
            checks.push(nb);
        }
        Plan { own, prior, checks }
    }
}

#[inline]
fn get(bits: &[u64], e: usize) -> bool {
    bits[e / 64] >> (e % 64) & 1 == 1
}

#[inline]
fn put(bits: &mut [u64], e: usize, b: bool) {
    if b {
        bits[e / 64] |= 1 << (e % 64);
    } else {
        bits[e / 64] &= !(1 << (e % 64));
    }
}

/// Depth-first search over the cells in row-major order. Each cell chooses
/// the colours of its east and north edges; neighbours are checked so that
/// no cell ever sees three edges of one colour, which makes a cell with
/// three decided edges force its fourth.
pub struct Enumeration {
    domain: Arc<Domain>,
    plan: Arc<Plan>,
    bits: Vec<u64>,
    next: Vec<u8>,
    level: usize,
    base: usize,
    limit: usize,
    done: bool,
}

impl Enumeration {
    fn new(domain: &Arc<Domain>, plan: &Arc<Plan>, bits: Vec<u64>, base: usize, limit: usize) -> Self {
        let mut next = vec![0u8; domain.num_cells() + 1];
        next[base] = 0;
        Enumeration {
            domain: Arc::clone(domain),
            plan: Arc::clone(plan),
            bits,
            next,
            level: base,
            base,
            limit,
            done: false,
        }
    }

    fn try_option(&mut self, v: usize, o: u8) -> bool {
        let plan = &self.plan;
        let own = &plan.own[v];
        let k = own.len();
        let prior_black = plan.prior[v].iter().filter(|&&e| get(&self.bits, e)).count();
        if prior_black + (o.count_ones() as usize) != 2 {
            return false;
        }
        for (i, &e) in own.iter().enumerate() {
            put(&mut self.bits, e, (o >> (k - 1 - i)) & 1 == 1);
        }
        plan.checks[v].iter().all(|edges| {
            let black = edges.iter().filter(|&&e| get(&self.bits, e)).count();
            black <= 2 && edges.len() - black <= 2
        })
    }

    fn advance(&mut self) -> Option<Vec<u64>> {
        loop {
            if self.done {
                return None;
            }
            if self.level == self.limit {
                let out = self.bits.clone();
                if self.level == self.base {
                    self.done = true;
                } else {
                    self.level -= 1;
                }
                return Some(out);
            }
            let v = self.level;
            let options = 1u8 << self.plan.own[v].len();
            let mut found = false;
            while self.next[v] < options {
                let o = self.next[v];
                self.next[v] += 1;
                if self.try_option(v, o) {
                    found = true;
                    break;
                }
            }
            if found {
                self.level += 1;
                self.next[self.level] = 0;
            } else if self.level == self.base {
                self.done = true;
            } else {
                self.level -= 1;
            }
        }
    }
}

impl Iterator for Enumeration {
    type Item = FplConfig;
    fn next(&mut self) -> Option<FplConfig> {
        self.advance()
            .map(|bits| FplConfig::from_raw(&self.domain, bits.into_boxed_slice()))
    }
}

fn initial_bits(d: &Domain, t: &BoundaryCondition) -> Vec<u64> {
    let mut bits = vec![0u64; words_for(d.num_edges())];
    for k in 0..t.len() {
        put(&mut bits, d.term_edge(k), t.is_black(k));
    }
    bits
}

/// Every configuration on `(d, t)` in lexicographic order of the canonical
/// edge bitstring (white before black).
pub fn enumerate(d: &Arc<Domain>, t: &BoundaryCondition) -> Result<Enumeration> {
    t.check_domain(d)?;
    let plan = Arc::new(Plan::new(d));
    let nv = d.num_cells();
    let mut e = Enumeration::new(d, &plan, initial_bits(d, t), 0, nv);
    if t.black_count() % 2 != 0 {
        e.done = true;
    }
    Ok(e)
}

/// Splits the search tree into ordered, independent subtrees.
fn subtrees(d: &Arc<Domain>, t: &BoundaryCondition, target: usize) -> Vec<Enumeration> {
    let plan = Arc::new(Plan::new(d));
    let nv = d.num_cells();
    if t.black_count() % 2 != 0 {
        return Vec::new();
    }
    let mut frontier = vec![initial_bits(d, t)];
    let mut depth = 0;
    while depth < nv && frontier.len() < target {
        let next_depth = (depth + 1).min(nv);
        frontier = frontier
            .into_iter()
            .flat_map(|bits| {
                let mut e = Enumeration::new(d, &plan, bits, depth, next_depth);
                std::iter::from_fn(move || e.advance()).collect::<Vec<_>>()
            })
            .collect();
        depth = next_depth;
        if frontier.is_empty() {
            break;
        }
    }
    frontier
        .into_iter()
        .map(|bits| Enumeration::new(d, &plan, bits, depth, nv))
        .collect()
}

/// Parallel fold over all configurations.
pub fn fold_configs<T, I, F, R>(d: &Arc<Domain>, t: &BoundaryCondition, init: I, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, FplConfig) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    t.check_domain(d)?;
    let parts = subtrees(d, t, 4 * rayon::current_num_threads().max(1) * 16);
    Ok(parts
        .into_par_iter()
        .map(|e| e.fold(init(), &fold))
        .reduce(&init, &reduce))
}

/// All configurations, in the same order as [`enumerate`], built in parallel.
pub fn collect_configs(d: &Arc<Domain>, t: &BoundaryCondition) -> Result<Vec<FplConfig>> {
    t.check_domain(d)?;
    let parts = subtrees(d, t, 4 * rayon::current_num_threads().max(1) * 16);
    let chunks: Vec<Vec<FplConfig>> = parts.into_par_iter().map(|e| e.collect()).collect();
    Ok(chunks.into_iter().flatten().collect())
}

pub fn count_configs(d: &Arc<Domain>, t: &BoundaryCondition) -> Result<u64> {
    fold_configs(d, t, || 0u64, |acc, _| acc + 1, |a, b| a + b)
}

/// Black and white link patterns and the closed loops of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkData {
    pub black: LinkPattern,
    pub white: LinkPattern,
    pub loops_black: usize,
    pub loops_white: usize,
}

impl LinkData {
    pub fn loops(&self) -> usize {
        self.loops_black + self.loops_white
    }
}

/// Follows the path of colour `black` leaving termination `k`; returns the
/// termination where it ends. Visited internal edges are marked.
fn trace(phi: &FplConfig, k: usize, black: bool, visited: &mut [bool]) -> usize {
    let d = phi.domain();
    let mut cell = d.terminations()[k].cell;
    let mut came = d.term_edge(k);
    loop {
        let out = d
            .slots(cell)
            .iter()
            .map(|&s| (s, d.edge_id(s)))
            .find(|&(_, e)| e != came && phi.is_black(e) == black)
            .expect("ice rule gives two edges of each colour");
        match out.0 {
            Slot::Term(k2) => return k2,
            Slot::Internal(e) => {
                visited[e] = true;
                let (u, v) = d.edges()[e];
                cell = if u == cell { v } else { u };
                came = e;
            }
        }
    }
}

fn count_loops(phi: &FplConfig, black: bool, visited: &mut [bool]) -> usize {
    let d = phi.domain();
    let mut loops = 0;
    for e0 in 0..d.num_internal() {
        if visited[e0] || phi.is_black(e0) != black {
            continue;
        }
        loops += 1;
        let mut e = e0;
        let mut cell = d.edges()[e0].1;
        loop {
            visited[e] = true;
            let next = d
                .slots(cell)
                .iter()
                .map(|&s| d.edge_id(s))
                .find(|&f| f != e && phi.is_black(f) == black)
                .expect("ice rule gives two edges of each colour");
            if next == e0 {
                break;
            }
            let (u, v) = d.edges()[next];
            cell = if u == cell { v } else { u };
            e = next;
        }
    }
    loops
}

fn pattern_of(phi: &FplConfig, black: bool, visited: &mut [bool]) -> LinkPattern {
    let t = phi.boundary();
    let m = t.len();
    let mut label = vec![usize::MAX; m];
    let mut count = 0;
    for k in 0..m {
        if t.is_black(k) == black {
            label[k] = count;
            count += 1;
        }
    }
    let mut partner = vec![usize::MAX; count];
    for k in 0..m {
        if t.is_black(k) == black && partner[label[k]] == usize::MAX {
            let k2 = trace(phi, k, black, visited);
            partner[label[k]] = label[k2];
            partner[label[k2]] = label[k];
        }
    }
    LinkPattern::from_partners(&partner).expect("planar paths do not cross")
}

pub fn link_data(phi: &FplConfig) -> LinkData {
    let mut visited = vec![false; phi.domain().num_internal()];
    let black = pattern_of(phi, true, &mut visited);
    let white = pattern_of(phi, false, &mut visited);
    let loops_black = count_loops(phi, true, &mut visited);
    let loops_white = count_loops(phi, false, &mut visited);
    LinkData { black, white, loops_black, loops_white }
}

/// Black link pattern only.
pub fn black_pattern(phi: &FplConfig) -> LinkPattern {
    let mut visited = vec![false; phi.domain().num_internal()];
    pattern_of(phi, true, &mut visited)
}

/// The three vertex types, up to the colour-complement of each pair of
/// black-edge placements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    A,
    B,
    C,
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexType::A => "a",
            VertexType::B => "b",
            VertexType::C => "c",
        })
    }
}

impl FromStr for VertexType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(VertexType::A),
            "b" => Ok(VertexType::B),
            "c" => Ok(VertexType::C),
            _ => Err(Error::Parse(format!("unknown vertex type {s:?}"))),
        }
    }
}

/// Placements of the two black edges at a vertex, paired with their colour
/// complements: straight, south-west/north-east, north-west/south-east.
pub const PLACEMENT_CLASSES: [[[Dir; 2]; 2]; 3] = [
    [[Dir::N, Dir::S], [Dir::E, Dir::W]],
    [[Dir::S, Dir::W], [Dir::N, Dir::E]],
    [[Dir::N, Dir::W], [Dir::S, Dir::E]],
];

/// Type assigned to each entry of [`PLACEMENT_CLASSES`].
pub const VERTEX_TYPES: [VertexType; 3] = [VertexType::C, VertexType::A, VertexType::B];

fn placement_class(phi: &FplConfig, cell: usize) -> usize {
    let d = phi.domain();
    let black: Vec<Dir> = Dir::ALL
        .into_iter()
        .filter(|&dir| phi.slot_black(d.slot(cell, dir)))
        .collect();
    PLACEMENT_CLASSES
        .iter()
        .position(|class| {
            class.iter().any(|pair| pair.iter().all(|p| black.contains(p)))
        })
        .expect("every two-subset of sides lies in one class")
}

pub fn vertex_type(phi: &FplConfig, cell: usize) -> VertexType {
    VERTEX_TYPES[placement_class(phi, cell)]
}

/// Tries all six assignments of types to placement classes and returns those
/// under which the bottom row of every configuration of the square reads
/// `b..b c a..a` and the corner restrictions that must vanish do vanish.
pub fn calibrate_vertex_types(sizes: &[usize]) -> Vec<[VertexType; 3]> {
    use VertexType::*;
    let perms = [
        [A, B, C],
        [A, C, B],
        [B, A, C],
        [B, C, A],
        [C, A, B],
        [C, B, A],
    ];
    let mut configs = Vec::new();
    for &n in sizes {
        let (d, t) = build_square(n, Sign::Plus);
        let d = Arc::new(d);
        let all: Vec<FplConfig> = enumerate(&d, &t).expect("square is valid").collect();
        configs.push((n, all));
    }
    perms
        .into_iter()
        .filter(|table| {
            configs.iter().all(|(n, all)| {
                all.iter().all(|phi| {
                    let row: Vec<VertexType> =
                        (0..*n).map(|x| table[placement_class(phi, x)]).collect();
                    let c = row.iter().position(|&v| v == C);
                    let shape_ok = match c {
                        Some(i) => {
                            row[..i].iter().all(|&v| v == B)
                                && row[i + 1..].iter().all(|&v| v == A)
                        }
                        None => false,
                    };
                    // first node is never `a`, last node is never `b`
                    shape_ok && row[0] != A && row[n - 1] != B
                })
            })
        })
        .collect()
}

/// Checks that the hard-coded table is the unique calibrated assignment.
pub fn vertex_type_self_test() -> Result<()> {
    let found = calibrate_vertex_types(&[2, 3]);
    if found == [VERTEX_TYPES] {
        Ok(())
    } else {
        Err(Error::InvalidTriplet(format!(
            "vertex type calibration found {found:?}, table is {VERTEX_TYPES:?}"
        )))
    }
}

/// `+1` for black horizontal and white vertical sides, `-1` for the
/// complement, `0` otherwise.
pub fn plaquette_indicator(phi: &FplConfig, alpha: &Plaquette) -> i8 {
    let [bottom, right, top, left] = alpha.edges.map(|e| phi.is_black(e));
    if bottom && top && !left && !right {
        1
    } else if left && right && !bottom && !top {
        -1
    } else {
        0
    }
}

/// `A_n = prod_{j<n} (3j+1)! / (n+j)!`, evaluated as a ratio of two running
/// products of integer ranges.
pub fn asm_count_formula(n: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..n {
        let (hi, lo) = (3 * j + 1, n + j);
        if hi >= lo {
            for i in lo + 1..=hi {
                num *= BigUint::from(i);
            }
        } else {
            for i in hi + 1..=lo {
                den *= BigUint::from(i);
            }
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Restriction of the bottom-row node in column `x` to a vertex type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexConstraint {
    pub x: usize,
    pub vtype: VertexType,
}

/// Refined counts of a square ensemble, keyed by black link pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTable {
    pub n: usize,
    pub sign: Sign,
    pub anchor: usize,
    pub counts: BTreeMap<LinkPattern, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct PsiFile {
    n: usize,
    sign: String,
    anchor: usize,
    counts: BTreeMap<String, String>,
}

impl PsiTable {
    pub fn empty(n: usize, sign: Sign) -> Self {
        PsiTable { n, sign, anchor: 0, counts: BTreeMap::new() }
    }

    pub fn get(&self, p: &LinkPattern) -> BigUint {
        self.counts.get(p).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Adds another table's counts; tables must share their metadata.
    pub fn merge(&mut self, other: &PsiTable) {
        assert_eq!((self.n, self.sign, self.anchor), (other.n, other.sign, other.anchor));
        for (k, v) in &other.counts {
            *self.counts.entry(k.clone()).or_default() += v;
        }
    }

    pub fn to_vector(&self) -> LpVector {
        let mut v = LpVector::zero(self.n);
        for (p, c) in &self.counts {
            v.add_term(p.clone(), num_rational::BigRational::from_integer(c.clone().into()));
        }
        v
    }

    pub fn to_json(&self) -> String {
        let file = PsiFile {
            n: self.n,
            sign: self.sign.to_string(),
            anchor: self.anchor,
            counts: self
                .counts
                .iter()
                .map(|(k, v)| (k.to_word(), v.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: PsiFile = serde_json::from_str(s)?;
        let sign: Sign = file.sign.parse()?;
        let mut counts = BTreeMap::new();
        for (word, value) in file.counts {
            let p = LinkPattern::from_word(&word)?;
            if p.n() != file.n {
                return Err(Error::Parse(format!("pattern {word} is not in LP({})", file.n)));
            }
            let c: BigUint = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad count {value:?}")))?;
            if !c.is_zero() {
                counts.insert(p, c);
            }
        }
        Ok(PsiTable { n: file.n, sign, anchor: file.anchor, counts })
    }
}

/// Counts per black link pattern over the configurations accepted by
/// `filter`, on an arbitrary domain.
pub fn link_counts<F>(d: &Arc<Domain>, t: &BoundaryCondition, filter: F) -> Result<BTreeMap<LinkPattern, u64>>
where
    F: Fn(&FplConfig) -> bool + Sync + Send,
{
    fold_configs(
        d,
        t,
        BTreeMap::new,
        |mut acc, phi| {
            if filter(&phi) {
                *acc.entry(black_pattern(&phi)).or_insert(0u64) += 1;
            }
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}

/// The state `sum_pi count(pi) |pi>` over accepted configurations.
pub fn link_vector<F>(d: &Arc<Domain>, t: &BoundaryCondition, filter: F) -> Result<LpVector>
where
    F: Fn(&FplConfig) -> bool + Sync + Send,
{
    let counts = link_counts(d, t, filter)?;
    let mut v = LpVector::zero(t.n());
    for (p, c) in counts {
        v.add_count(p, c as i64);
    }
    Ok(v)
}

pub fn refined_counts(n: usize, sign: Sign, constraint: Option<VertexConstraint>) -> PsiTable {
    let (d, t) = build_square(n, sign);
    let d = Arc::new(d);
    let counts = link_counts(&d, &t, |phi| match constraint {
        Some(c) => c.x < n && vertex_type(phi, c.x) == c.vtype,
        None => true,
    })
    .expect("square boundary matches its domain");
    PsiTable {
        n,
        sign,
        anchor: 0,
        counts: counts.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect(),
    }
}

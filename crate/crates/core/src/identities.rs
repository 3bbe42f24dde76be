//! Auxiliary states of the square ensemble, restricted by the type of one
//! bottom-row node, and the registry of vector identities relating them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpl::{black_pattern, collect_configs, link_vector, plaquette_indicator, vertex_type, FplConfig, VertexType};
use crate::lattice::{build_square, BoundaryCondition, Dir, Domain, Sign, Slot};
use crate::linkpat::{LinkPattern, LpVector, Operator};

/// Column parity of the restricted node: odd columns `2j-1` (1-based) carry
/// black legs, even columns `2j` carry white legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Column {
    Odd,
    Even,
}

impl Column {
    /// 0-based column of node `j`.
    pub fn x(self, j: usize) -> i64 {
        match self {
            Column::Odd => 2 * j as i64 - 2,
            Column::Even => 2 * j as i64 - 1,
        }
    }

    pub fn max_j(self, n: usize) -> usize {
        match self {
            Column::Odd => n.div_ceil(2),
            Column::Even => n / 2,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Column::Odd => "•",
            Column::Even => "∘",
        }
    }
}

/// Restriction on the node: its type, or for odd `c` nodes the split by the
/// type of the node above it (`Cb`: above is `b`; `Cx`: above is `a` or `c`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxType {
    A,
    B,
    C,
    Cb,
    Cx,
}

impl FromStr for AuxType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(AuxType::A),
            "b" => Ok(AuxType::B),
            "c" => Ok(AuxType::C),
            "cb" => Ok(AuxType::Cb),
            "cx" => Ok(AuxType::Cx),
            _ => Err(Error::Parse(format!("unknown auxiliary type {s:?}"))),
        }
    }
}

impl fmt::Display for AuxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuxType::A => "a",
            AuxType::B => "b",
            AuxType::C => "c",
            AuxType::Cb => "cb",
            AuxType::Cx => "cx",
        })
    }
}

#[derive(Clone, Debug)]
pub struct AuxState {
    pub n: usize,
    pub column: Column,
    pub j: usize,
    pub vtype: AuxType,
    pub value: LpVector,
}

struct Record {
    pattern: LinkPattern,
    /// Column of the unique `c` node of the bottom row.
    c_at: usize,
    /// Type of the node just above the `c` node, if the square has one.
    above: Option<VertexType>,
    /// Indicator of each bottom-row plaquette, by column.
    bottom: Vec<i8>,
}

/// Per-configuration data of the `+` square ensemble, enough to assemble
/// every auxiliary state.
pub struct AuxEnsemble {
    pub n: usize,
    records: Vec<Record>,
}

fn ensemble_cache() -> &'static Mutex<HashMap<usize, Arc<AuxEnsemble>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<AuxEnsemble>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl AuxEnsemble {
    pub fn build(n: usize) -> Result<AuxEnsemble> {
        use rayon::prelude::*;
        let (d, t) = build_square(n, Sign::Plus);
        let d = Arc::new(d);
        let configs = collect_configs(&d, &t)?;
        let records = configs
            .par_iter()
            .map(|phi| {
                let row: Vec<VertexType> = (0..n).map(|x| vertex_type(phi, x)).collect();
                let c_at = row
                    .iter()
                    .position(|&v| v == VertexType::C)
                    .expect("bottom row has a c node");
                let above = d.cell_index(c_at as i32, 1).map(|v| vertex_type(phi, v));
                let bottom = (0..n.saturating_sub(1))
                    .map(|x| plaquette_indicator(phi, d.plaquette_at(x as i32, 0).expect("bottom plaquette")))
                    .collect();
                Record { pattern: black_pattern(phi), c_at, above, bottom }
            })
            .collect();
        Ok(AuxEnsemble { n, records })
    }

    /// Shared, lazily built ensemble for `n`.
    pub fn get(n: usize) -> Result<Arc<AuxEnsemble>> {
        if let Some(e) = ensemble_cache().lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(e));
        }
        let e = Arc::new(AuxEnsemble::build(n)?);
        ensemble_cache().lock().expect("cache lock").insert(n, Arc::clone(&e));
        Ok(e)
    }

    fn sum(&self, keep: impl Fn(&Record) -> i64) -> LpVector {
        let mut acc: HashMap<&LinkPattern, i64> = HashMap::new();
        for r in &self.records {
            let w = keep(r);
            if w != 0 {
                *acc.entry(&r.pattern).or_insert(0) += w;
            }
        }
        let mut v = LpVector::zero(self.n);
        for (p, c) in acc {
            v.add_count(p.clone(), c);
        }
        v
    }

    /// `|s>`.
    pub fn full(&self) -> LpVector {
        self.sum(|_| 1)
    }

    /// The restricted state; a node outside the row gives the zero vector.
    pub fn state(&self, column: Column, j: i64, t: AuxType) -> LpVector {
        let n = self.n as i64;
        let x = match column {
            Column::Odd => 2 * j - 2,
            Column::Even => 2 * j - 1,
        };
        if j < 1 || x >= n {
            return LpVector::zero(self.n);
        }
        let x = x as usize;
        // the row reads b..b c a..a, so the type at x follows from c_at
        let type_at = |r: &Record| match r.c_at.cmp(&x) {
            std::cmp::Ordering::Greater => VertexType::B,
            std::cmp::Ordering::Equal => VertexType::C,
            std::cmp::Ordering::Less => VertexType::A,
        };
        match t {
            AuxType::A => self.sum(|r| (type_at(r) == VertexType::A) as i64),
            AuxType::B => self.sum(|r| (type_at(r) == VertexType::B) as i64),
            AuxType::C => self.sum(|r| (r.c_at == x) as i64),
            AuxType::Cb => self.sum(|r| (r.c_at == x && r.above == Some(VertexType::B)) as i64),
            AuxType::Cx => self.sum(|r| (r.c_at == x && r.above != Some(VertexType::B)) as i64),
        }
    }

    /// `sum_phi N_alpha(phi) |pi(phi)>` for the bottom plaquette whose
    /// lower-left corner is in column `x`; zero if there is none.
    pub fn bottom_indicator_state(&self, x: i64) -> LpVector {
        if x < 0 || x + 2 > self.n as i64 {
            return LpVector::zero(self.n);
        }
        self.sum(|r| r.bottom[x as usize] as i64)
    }
}

pub fn aux_state(n: usize, column: Column, j: usize, vtype: AuxType) -> Result<AuxState> {
    let max = column.max_j(n);
    if j < 1 || j > max {
        return Err(Error::IndexOutOfRange { what: format!("ŝ{} state", column.symbol()), j, max });
    }
    if matches!(vtype, AuxType::Cb | AuxType::Cx) && column != Column::Odd {
        return Err(Error::IndexOutOfRange { what: "cb/cx split (odd columns only)".into(), j, max: 0 });
    }
    let e = AuxEnsemble::get(n)?;
    Ok(AuxState { n, column, j, vtype, value: e.state(column, j as i64, vtype) })
}

/// Checks that the restriction freezes the part of the bottom row it
/// claims to: the whole row for `c`, the nodes left of and at the restricted
/// one for `b`, those right of and at it for `a`. Returns the list of edges
/// that are constant across contributing configurations.
pub fn frozen_edges(n: usize, column: Column, j: usize, t: AuxType) -> Result<Vec<usize>> {
    let (d, tau) = build_square(n, Sign::Plus);
    let d = Arc::new(d);
    let x = column.x(j);
    if x < 0 || x >= n as i64 {
        return Err(Error::IndexOutOfRange { what: "bottom node".into(), j, max: column.max_j(n) });
    }
    let x = x as usize;
    let vt = match t {
        AuxType::A => VertexType::A,
        AuxType::B => VertexType::B,
        _ => VertexType::C,
    };
    let configs: Vec<FplConfig> = collect_configs(&d, &tau)?
        .into_iter()
        .filter(|phi| vertex_type(phi, x) == vt)
        .collect();
    let claimed: Vec<usize> = match vt {
        VertexType::C => (0..n).collect(),
        VertexType::B => (0..=x).collect(),
        VertexType::A => (x..n).collect(),
    };
    let mut constant = Vec::new();
    if let Some(first) = configs.first() {
        for e in 0..d.num_edges() {
            if configs.iter().all(|p| p.is_black(e) == first.is_black(e)) {
                constant.push(e);
            }
        }
        for &v in &claimed {
            for &s in d.slots(v) {
                let e = d.edge_id(s);
                if !constant.contains(&e) {
                    return Err(Error::GeometryMismatch(format!(
                        "edge {e} at bottom node {v} is not frozen"
                    )));
                }
            }
        }
    }
    Ok(constant)
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub identity: String,
    pub n: usize,
    pub j: Option<usize>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// First component where two sides differ.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub equation: String,
    pub pattern: String,
    pub lhs: String,
    pub rhs: String,
}

/// Canonical identity names.
pub const IDENTITIES: [&str; 16] = [
    "ose", "lrd", "ec", "rec_a1", "rec_a2", "rec_b1", "rec_b2", "gyr_a•", "gyr_b•", "gyr_c•",
    "gyr_a∘", "gyr_b∘", "split_c", "ncx", "rs_decomposition", "spr",
];

/// Maps ASCII aliases (`gyr_a_odd`, `gyr_b_even`, ...) to canonical names.
/// A bare `gyr_a`, `gyr_b` or `gyr_c` means the odd-column relation.
pub fn canonical_name(name: &str) -> Result<&'static str> {
    let mut ascii = name.replace("_odd", "•").replace("_even", "∘");
    if matches!(name, "gyr_a" | "gyr_b" | "gyr_c") {
        ascii.push('•');
    }
    IDENTITIES
        .iter()
        .copied()
        .find(|&n| n == name || n == ascii)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Range of `j` for an identity; `None` when the identity takes no index.
pub fn index_range(name: &str, n: usize) -> Result<Option<std::ops::RangeInclusive<usize>>> {
    let odd = n.div_ceil(2);
    let even = n / 2;
    Ok(match canonical_name(name)? {
        "lrd" | "rs_decomposition" => None,
        "ec" | "rec_a2" | "rec_b1" | "gyr_a∘" | "gyr_b∘" => Some(1..=even),
        _ => Some(1..=odd),
    })
}

struct Ctx {
    e: Arc<AuxEnsemble>,
    n: usize,
}

impl Ctx {
    fn s(&self, c: Column, j: i64, t: AuxType) -> LpVector {
        self.e.state(c, j, t)
    }

    /// `e_j` with cyclic index.
    fn e_op(&self, j: i64) -> Operator {
        let m = 2 * self.n as i64;
        Operator::E(((j - 1).rem_euclid(m) + 1) as usize)
    }

    fn apply(&self, ops: &[Operator], v: &LpVector) -> LpVector {
        v.apply_product(ops).expect("operator indices are in range")
    }
}

fn compare(equation: &str, lhs: &LpVector, rhs: &LpVector) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(p, a, b)| Witness {
        equation: equation.to_string(),
        pattern: p.to_word(),
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

fn first_failure(checks: Vec<(String, LpVector, LpVector)>) -> Option<Witness> {
    checks.into_iter().find_map(|(eq, l, r)| compare(&eq, &l, &r))
}

/// The five gyration relations with rotation exponent `d`; `gyr_b∘` uses
/// `-d`.
fn gyration_relation(ctx: &Ctx, name: &str, j: i64, d: i64) -> (String, LpVector, LpVector) {
    let (col, t, shift, sign) = match name {
        "gyr_a•" => (Column::Odd, AuxType::A, -1, 1),
        "gyr_b•" => (Column::Odd, AuxType::B, -1, 1),
        "gyr_c•" => (Column::Odd, AuxType::C, -1, 1),
        "gyr_a∘" => (Column::Even, AuxType::A, -1, 1),
        "gyr_b∘" => (Column::Even, AuxType::B, 1, -1),
        _ => unreachable!("not a gyration relation"),
    };
    let s = ctx.s(col, j, t);
    let lhs = ctx.apply(&[ctx.e_op(j)], &s);
    let rhs = ctx.apply(&[Operator::Rotate(sign * d), ctx.e_op(j + shift)], &s);
    (format!("e_{j} s = R^{} e_{} s", sign * d, j + shift), lhs, rhs)
}

/// Finds the rotation exponent under which every gyration relation holds
/// for the given sizes. Returns every exponent in `{-1, 1}` that works.
pub fn pin_gyration_direction(sizes: &[usize]) -> Result<Vec<i64>> {
    let mut ok = Vec::new();
    for d in [-1i64, 1] {
        let mut all = true;
        'outer: for &n in sizes {
            let ctx = Ctx { e: AuxEnsemble::get(n)?, n };
            for name in ["gyr_a•", "gyr_b•", "gyr_c•", "gyr_a∘", "gyr_b∘"] {
                for j in index_range(name, n)?.expect("indexed") {
                    let (_, l, r) = gyration_relation(&ctx, name, j as i64, d);
                    if l != r {
                        all = false;
                        break 'outer;
                    }
                }
            }
        }
        if all {
            ok.push(d);
        }
    }
    Ok(ok)
}

/// The rotation exponent pinned on `n = 3, 4`.
pub fn gyration_direction() -> Result<i64> {
    static PINNED: OnceLock<std::result::Result<i64, Error>> = OnceLock::new();
    PINNED
        .get_or_init(|| {
            let found = pin_gyration_direction(&[3, 4])?;
            match found.as_slice() {
                [d] => Ok(*d),
                _ => Err(Error::GeometryMismatch(format!(
                    "gyration relations hold for exponents {found:?}"
                ))),
            }
        })
        .clone()
}

fn sym(v: &LpVector) -> LpVector {
    v.apply(Operator::Sym).expect("Sym acts on every size")
}

fn minus_one(ctx: &Ctx, j: i64, v: &LpVector) -> LpVector {
    &ctx.apply(&[ctx.e_op(j)], v) - v
}

/// Checks one identity. `j` is ignored by identities without an index.
pub fn check_identity(name: &str, n: usize, j: Option<usize>) -> Result<IdentityResult> {
    let name = canonical_name(name)?;
    let range = index_range(name, n)?;
    let j = match (&range, j) {
        (None, _) => None,
        (Some(r), Some(j)) if r.contains(&j) => Some(j),
        (Some(r), j) => {
            return Err(Error::IndexOutOfRange {
                what: name.to_string(),
                j: j.unwrap_or(0),
                max: *r.end(),
            })
        }
    };
    let ctx = Ctx { e: AuxEnsemble::get(n)?, n };
    let ji = j.unwrap_or(0) as i64;
    let s = ctx.e.full();
    let mut note = None;
    use AuxType::*;
    use Column::*;
    let checks: Vec<(String, LpVector, LpVector)> = match name {
        "ose" => {
            let mut v = vec![(
                "s = ŝ•a + ŝ•b + ŝ•c".to_string(),
                s.clone(),
                [A, B, C].iter().map(|&t| ctx.s(Odd, ji, t)).sum(),
            )];
            if ji as usize <= n / 2 {
                v.push((
                    "s = ŝ∘a + ŝ∘b + ŝ∘c".to_string(),
                    s.clone(),
                    [A, B, C].iter().map(|&t| ctx.s(Even, ji, t)).sum(),
                ));
            }
            v
        }
        "lrd" => {
            let mut total = LpVector::zero(n);
            for k in 1..=n.div_ceil(2) as i64 {
                total = &total + &ctx.s(Odd, k, C);
            }
            for k in 1..=(n / 2) as i64 {
                total = &total + &ctx.s(Even, k, C);
            }
            vec![("s = Σ ŝ•c + Σ ŝ∘c".into(), s.clone(), total)]
        }
        "ec" => {
            let v = ctx.s(Even, ji, C);
            vec![("e_j ŝ∘c_j = ŝ∘c_j".into(), ctx.apply(&[ctx.e_op(ji)], &v), v)]
        }
        "rec_a1" => vec![(
            "ŝ•b_j = ŝ∘c_j + ŝ∘b_j".into(),
            ctx.s(Odd, ji, B),
            &ctx.s(Even, ji, C) + &ctx.s(Even, ji, B),
        )],
        "rec_a2" => vec![(
            "ŝ∘b_j = ŝ•c_{j+1} + ŝ•b_{j+1}".into(),
            ctx.s(Even, ji, B),
            &ctx.s(Odd, ji + 1, C) + &ctx.s(Odd, ji + 1, B),
        )],
        "rec_b1" => vec![(
            "ŝ∘a_j = ŝ•c_j + ŝ•a_j".into(),
            ctx.s(Even, ji, A),
            &ctx.s(Odd, ji, C) + &ctx.s(Odd, ji, A),
        )],
        "rec_b2" => vec![(
            "ŝ•a_j = ŝ∘c_{j-1} + ŝ∘a_{j-1}".into(),
            ctx.s(Odd, ji, A),
            &ctx.s(Even, ji - 1, C) + &ctx.s(Even, ji - 1, A),
        )],
        "gyr_a•" | "gyr_b•" | "gyr_c•" | "gyr_a∘" | "gyr_b∘" => {
            let d = gyration_direction()?;
            note = Some(format!("rotation exponent {d} pinned on n = 3, 4"));
            vec![gyration_relation(&ctx, name, ji, d)]
        }
        "split_c" => {
            let cb = ctx.s(Odd, ji, Cb);
            vec![
                ("ŝ•c = ŝ•cb + ŝ•cx".into(), ctx.s(Odd, ji, C), &cb + &ctx.s(Odd, ji, Cx)),
                ("(e_j - 1) ŝ•cb = 0".into(), minus_one(&ctx, ji, &cb), LpVector::zero(n)),
            ]
        }
        "ncx" => {
            let cx = ctx.s(Odd, ji, Cx);
            vec![(
                "(e_j - 1) ŝ•cx = Σ N_α_j |π>".into(),
                minus_one(&ctx, ji, &cx),
                ctx.e.bottom_indicator_state(Odd.x(j.unwrap_or(1))),
            )]
        }
        "rs_decomposition" => rs_decomposition(&ctx, &s),
        "spr" if n == 1 => {
            note = Some("no rows above the frozen one".into());
            Vec::new()
        }
        "spr" => {
            let j = j.expect("indexed");
            match spr_geometry(n, j)? {
                Some((dom, t1)) => {
                    let r = check_spr(&dom, &t1)?;
                    vec![
                        ("e_{2m-1} s1 = a_{2m-1} s2".into(), r.e_s1, r.a_s2),
                        ("c_{2m-1} s1 = s2".into(), r.c_s1, r.s2),
                    ]
                }
                None => {
                    note = Some("leg j+1 shares a cell with leg j; ŝ•cx_j must vanish".into());
                    vec![("ŝ•cx_j = 0".into(), ctx.s(Odd, ji, Cx), LpVector::zero(n))]
                }
            }
        }
        _ => unreachable!("registry is closed"),
    };
    let witness = first_failure(checks);
    Ok(IdentityResult {
        identity: name.to_string(),
        n,
        j,
        status: if witness.is_none() { "pass" } else { "fail" },
        witness,
        note,
    })
}

fn rs_decomposition(ctx: &Ctx, s: &LpVector) -> Vec<(String, LpVector, LpVector)> {
    let n = ctx.n;
    let zero = LpVector::zero(n);
    let rs = crate::groundstate::rs_residual(s);
    let mut checks = Vec::new();
    for j in 1..=(2 * n) as i64 {
        checks.push((format!("RS = Sym (e_{j} - 1) s"), rs.clone(), sym(&minus_one(ctx, j, s))));
    }
    let mut via_c = LpVector::zero(n);
    let mut via_n = LpVector::zero(n);
    for j in 1..=n.div_ceil(2) as i64 {
        via_c = &via_c + &sym(&minus_one(ctx, j, &ctx.s(Column::Odd, j, AuxType::C)));
        via_n = &via_n + &sym(&ctx.e.bottom_indicator_state(Column::Odd.x(j as usize)));
    }
    checks.push(("RS = Sym Σ (e_j - 1) ŝ•c_j".into(), rs.clone(), via_c));
    checks.push(("RS = Σ Sym Π Ñ_α_j s".into(), rs.clone(), via_n));
    checks.push(("RS = 0".into(), rs, zero.clone()));
    // every plaquette, through the class sums
    let (d, t) = build_square(n, Sign::Plus);
    let d = Arc::new(d);
    for a in d.plaquettes().to_vec() {
        let v = link_vector_weighted(&d, &t, |phi| plaquette_indicator(phi, &a) as i64);
        checks.push((format!("Sym Π Ñ_α s = 0 at ({}, {})", a.x, a.y), sym(&v), zero.clone()));
    }
    checks
}

fn link_vector_weighted<F>(d: &Arc<Domain>, t: &BoundaryCondition, w: F) -> LpVector
where
    F: Fn(&FplConfig) -> i64 + Sync + Send,
{
    let map = crate::fpl::fold_configs(
        d,
        t,
        HashMap::new,
        |mut acc: HashMap<LinkPattern, i64>, phi| {
            let x = w(&phi);
            if x != 0 {
                *acc.entry(black_pattern(&phi)).or_insert(0) += x;
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
    .expect("boundary matches domain");
    let mut v = LpVector::zero(t.n());
    for (p, c) in map {
        v.add_count(p, c);
    }
    v
}

/// Vectors of the simple path reversal relation.
#[derive(Clone, Debug)]
pub struct SprResult {
    pub m: usize,
    pub s1: LpVector,
    pub s2: LpVector,
    pub e_s1: LpVector,
    pub a_s2: LpVector,
    pub c_s1: LpVector,
}

impl SprResult {
    pub fn holds(&self) -> bool {
        self.e_s1 == self.a_s2 && self.c_s1 == self.s2
    }
}

/// Simple path reversal on `(d, t1)`: the last two terminations are black
/// and sit on cells joined by an internal edge `e`. `s1` counts
/// configurations with `e` white; `s2` counts those on the boundary with the
/// last two terminations white and `e` black.
pub fn check_spr(d: &Domain, t1: &BoundaryCondition) -> Result<SprResult> {
    t1.check_domain(d)?;
    let k = d.num_terminations();
    if k < 2 || !t1.is_black(k - 1) || !t1.is_black(k - 2) {
        return Err(Error::GeometryMismatch("last two terminations must be black".into()));
    }
    let (ta, tb) = (d.terminations()[k - 2], d.terminations()[k - 1]);
    let e = d
        .edge_between(ta.cell, tb.cell)
        .ok_or_else(|| Error::GeometryMismatch("last two terminations are not on adjacent cells".into()))?;
    let mut colours = t1.colours().to_vec();
    colours[k - 1] = false;
    colours[k - 2] = false;
    let t2 = BoundaryCondition::new(colours)?;
    let dom = Arc::new(d.clone());
    let s1 = link_vector(&dom, t1, |phi| !phi.is_black(e))?;
    let s2 = link_vector(&dom, &t2, |phi| phi.is_black(e))?;
    let m = t1.n();
    let e_s1 = s1.apply(Operator::E(2 * m - 1))?;
    let a_s2 = s2.apply(Operator::Add(2 * m - 1))?;
    let c_s1 = s1.apply(Operator::Close(2 * m - 1))?;
    Ok(SprResult { m, s1, s2, e_s1, a_s2, c_s1 })
}

/// The `(n-1) x n` rectangle left when the bottom row is frozen by a `c`
/// node in column `2j-2`, with the boundary colours the frozen row imposes:
/// alternating, except that black legs `j-1`, `j`, `j+1` are consecutive.
pub fn c_rectangle(n: usize, j: usize) -> Result<(Domain, BoundaryCondition)> {
    let max = n.div_ceil(2);
    if n < 2 || j < 1 || j > max {
        return Err(Error::IndexOutOfRange { what: "frozen c rectangle".into(), j, max });
    }
    let x = 2 * j - 2;
    let (sq, tau) = build_square(n, Sign::Plus);
    let sq = Arc::new(sq);
    let phi = collect_configs(&sq, &tau)?
        .into_iter()
        .find(|phi| vertex_type(phi, x) == VertexType::C)
        .ok_or_else(|| Error::GeometryMismatch("no configuration with a c node there".into()))?;
    let rect = Domain::rectangle(n, n - 1)?;
    let colours: Vec<bool> = rect
        .terminations()
        .iter()
        .map(|t| {
            let (cx, cy) = rect.cells()[t.cell];
            let v = sq.cell_index(cx, cy + 1).expect("cell of the upper rows");
            match sq.slot(v, t.dir) {
                s @ Slot::Internal(_) if t.dir == Dir::S && cy == 0 => phi.slot_black(s),
                s @ Slot::Term(_) => phi.slot_black(s),
                Slot::Internal(_) => unreachable!("rectangle side is a square side"),
            }
        })
        .collect();
    Ok((rect, BoundaryCondition::new(colours)?))
}

/// The `c_rectangle` re-anchored so that black legs `j` and `j+1` are the
/// last two terminations. `None` when leg `j+1` is not on the next cell of
/// the bottom side.
pub fn spr_geometry(n: usize, j: usize) -> Result<Option<(Domain, BoundaryCondition)>> {
    let x = 2 * j - 2;
    if n < 2 || x + 1 >= n {
        return Ok(None);
    }
    let (rect, t) = c_rectangle(n, j)?;
    // leg j+1 is the south termination in column x+1
    let shift = (x + 2) as i64;
    Ok(Some((rect.reanchored(shift), t.rotated(shift))))
}

/// Every identity at every valid index for one `n`.
pub fn run_suite(n: usize) -> Result<Vec<IdentityResult>> {
    use rayon::prelude::*;
    let mut jobs = Vec::new();
    for name in IDENTITIES {
        match index_range(name, n)? {
            None => jobs.push((name, None)),
            Some(r) => jobs.extend(r.map(|j| (name, Some(j)))),
        }
    }
    AuxEnsemble::get(n)?;
    jobs.into_par_iter().map(|(name, j)| check_identity(name, n, j)).collect()
}

pub fn report_json(results: &[IdentityResult]) -> String {
    serde_json::to_string_pretty(results).expect("plain data serializes")
}

//! Link patterns and the diagram operators acting on them.
//!
//! A link pattern of size `n` is a non-crossing perfect matching of `2n`
//! points labelled `1..=2n` counter-clockwise around a disk. Every operator
//! here uses 1-based cyclic labels on its public surface; internally the
//! matching is stored 0-based.
//!
//! The loop weight is fixed to 1, so every diagram operator maps a basis
//! pattern to exactly one basis pattern.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `n`; partners are stored as `u8`.
pub const MAX_N: usize = 127;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkPattern {
    partner: Vec<u8>,
}

impl LinkPattern {
    /// The empty pattern in LP(0).
    pub fn empty() -> Self {
        LinkPattern { partner: Vec::new() }
    }

    /// Builds a pattern from 0-based partner indices, checking the involution
    /// and non-crossing conditions.
    pub fn from_partners(partner: &[usize]) -> Result<Self> {
        let m = partner.len();
        if m % 2 != 0 {
            return Err(Error::InvalidLinkPattern(format!("odd number of points {m}")));
        }
        if m / 2 > MAX_N {
            return Err(Error::InvalidLinkPattern(format!("n = {} exceeds {MAX_N}", m / 2)));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= m || p == i || partner[p] != i {
                return Err(Error::InvalidLinkPattern(format!(
                    "point {} is not properly matched",
                    i + 1
                )));
            }
        }
        // Non-crossing iff the induced parenthesis word matches its own pairs.
        let mut stack = Vec::with_capacity(m / 2);
        for (i, &p) in partner.iter().enumerate() {
            if p > i {
                stack.push(i);
            } else if stack.pop() != Some(p) {
                return Err(Error::InvalidLinkPattern(format!(
                    "arc ({}, {}) crosses another arc",
                    p + 1,
                    i + 1
                )));
            }
        }
        Ok(LinkPattern {
            partner: partner.iter().map(|&p| p as u8).collect(),
        })
    }

    /// Builds a pattern from 1-based arcs.
    pub fn from_arcs(arcs: &[(usize, usize)]) -> Result<Self> {
        let m = arcs.len() * 2;
        let mut partner = vec![usize::MAX; m];
        for &(a, b) in arcs {
            if a == 0 || b == 0 || a > m || b > m || a == b {
                return Err(Error::InvalidLinkPattern(format!("bad arc ({a}, {b})")));
            }
            if partner[a - 1] != usize::MAX || partner[b - 1] != usize::MAX {
                return Err(Error::InvalidLinkPattern(format!("point reused in ({a}, {b})")));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Self::from_partners(&partner)
    }

    /// Parses a balanced parenthesis word, e.g. `"(())()"`.
    pub fn from_word(word: &str) -> Result<Self> {
        let bytes = word.as_bytes();
        if bytes.len() / 2 > MAX_N {
            return Err(Error::InvalidLinkPattern(format!("word too long ({})", bytes.len())));
        }
        let mut partner = vec![0usize; bytes.len()];
        let mut stack = Vec::new();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                b'(' => stack.push(i),
                b')' => {
                    let o = stack.pop().ok_or_else(|| {
                        Error::InvalidLinkPattern(format!("unbalanced word {word:?}"))
                    })?;
                    partner[o] = i;
                    partner[i] = o;
                }
                _ => {
                    return Err(Error::InvalidLinkPattern(format!(
                        "unexpected character in {word:?}"
                    )))
                }
            }
        }
        if !stack.is_empty() {
            return Err(Error::InvalidLinkPattern(format!("unbalanced word {word:?}")));
        }
        Ok(LinkPattern {
            partner: partner.into_iter().map(|p| p as u8).collect(),
        })
    }

    pub fn to_word(&self) -> String {
        (0..self.partner.len())
            .map(|i| if self.opens(i) { '(' } else { ')' })
            .collect()
    }

    /// Number of arcs.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of boundary points, `2n`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    #[inline]
    fn opens(&self, i: usize) -> bool {
        self.partner[i] as usize > i
    }

    /// Partner of the 1-based cyclic label `i`, as a label in `1..=2n`.
    pub fn partner(&self, i: i64) -> usize {
        let m = self.points() as i64;
        let k = (i - 1).rem_euclid(m) as usize;
        self.partner[k] as usize + 1
    }

    /// Arcs as 1-based pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.points())
            .filter(|&i| self.opens(i))
            .map(|i| (i + 1, self.partner[i] as usize + 1))
            .collect()
    }

    /// All of LP(n) in lexicographic order of parenthesis words.
    pub fn all(n: usize) -> Vec<LinkPattern> {
        fn rec(word: &mut String, open: usize, close: usize, n: usize, out: &mut Vec<LinkPattern>) {
            if close == n {
                out.push(LinkPattern::from_word(word).expect("generated word is balanced"));
                return;
            }
            if open < n {
                word.push('(');
                rec(word, open + 1, close, n, out);
                word.pop();
            }
            if close < open {
                word.push(')');
                rec(word, open, close + 1, n, out);
                word.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut String::with_capacity(2 * n), 0, 0, n, &mut out);
        out
    }

    /// The serial-arcs pattern `((1,2),(3,4),...)`.
    pub fn serial(n: usize) -> LinkPattern {
        LinkPattern::from_word(&"()".repeat(n)).expect("serial word is balanced")
    }

    /// `R^k`: each arc `(i, j)` becomes `(i - k, j - k)` cyclically.
    pub fn rotate(&self, k: i64) -> LinkPattern {
        let m = self.points();
        if m == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(m as i64) as usize;
        let partner = (0..m)
            .map(|i| ((self.partner[(i + k) % m] as usize + m - k) % m) as u8)
            .collect();
        LinkPattern { partner }
    }

    /// Temperley-Lieb generator `e_j`, `1 <= j <= 2n`, with `e_{2n}` joining
    /// points `2n` and `1`.
    pub fn tl_e(&self, j: usize) -> LinkPattern {
        let m = self.points();
        assert!(j >= 1 && j <= m, "e_{j} undefined on LP({})", self.n());
        let a = j - 1;
        let b = j % m;
        let pa = self.partner[a] as usize;
        if pa == b {
            return self.clone();
        }
        let pb = self.partner[b] as usize;
        let mut partner = self.partner.clone();
        partner[a] = b as u8;
        partner[b] = a as u8;
        partner[pa] = pb as u8;
        partner[pb] = pa as u8;
        LinkPattern { partner }
    }

    /// Close operator `c_j : LP(n) -> LP(n-1)`, `1 <= j <= 2n - 1`. Points
    /// `j` and `j+1` are capped together; a detached loop has weight 1.
    pub fn close(&self, j: usize) -> LinkPattern {
        let m = self.points();
        assert!(j >= 1 && j < m, "c_{j} undefined on LP({})", self.n());
        let a = j - 1;
        let b = j;
        let pa = self.partner[a] as usize;
        let pb = self.partner[b] as usize;
        let mut full: Vec<usize> = self.partner.iter().map(|&p| p as usize).collect();
        if pa != b {
            full[pa] = pb;
            full[pb] = pa;
        }
        let relabel = |i: usize| if i > b { i - 2 } else { i };
        let partner = (0..m)
            .filter(|&i| i != a && i != b)
            .map(|i| relabel(full[i]) as u8)
            .collect();
        LinkPattern { partner }
    }

    /// Add operator `a_j : LP(n) -> LP(n+1)`, `1 <= j <= 2n + 1`: inserts the
    /// arc `(j, j+1)` and shifts the labels from `j` on by two.
    pub fn add(&self, j: usize) -> LinkPattern {
        let m = self.points();
        assert!(j >= 1 && j <= m + 1, "a_{j} undefined on LP({})", self.n());
        let at = j - 1;
        let shift = |i: usize| if i >= at { i + 2 } else { i };
        let mut partner = vec![0u8; m + 2];
        for i in 0..m {
            partner[shift(i)] = shift(self.partner[i] as usize) as u8;
        }
        partner[at] = (at + 1) as u8;
        partner[at + 1] = at as u8;
        LinkPattern { partner }
    }

    /// Reflection `(i, j) -> (2n+1-i, 2n+1-j)`.
    pub fn reflect(&self) -> LinkPattern {
        let m = self.points();
        let partner = (0..m)
            .map(|i| (m - 1 - self.partner[m - 1 - i] as usize) as u8)
            .collect();
        LinkPattern { partner }
    }
}

impl Ord for LinkPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.points().cmp(&other.points()).then_with(|| {
            for i in 0..self.points() {
                match (self.opens(i), other.opens(i)) {
                    (true, false) => return Ordering::Less,
                    (false, true) => return Ordering::Greater,
                    _ => {}
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for LinkPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkPattern({})", self.to_word())
    }
}

impl FromStr for LinkPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LinkPattern::from_word(s)
    }
}

/// Catalan number `C_n` as an exact integer.
pub fn catalan(n: usize) -> BigInt {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    let mut c = BigInt::one();
    for k in 0..n {
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
    }
    c
}

/// Orbit of LP(n) under rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationClass {
    /// Lexicographically smallest word among all rotations.
    pub representative: LinkPattern,
    /// Members in order of increasing rotation `R^0, R^1, ...`.
    pub members: Vec<LinkPattern>,
    /// Order of the stabilizer subgroup, `2n / |orbit|`.
    pub stabilizer_order: usize,
}

impl RotationClass {
    pub fn of(p: &LinkPattern) -> RotationClass {
        let m = p.points().max(1);
        let mut members = vec![p.clone()];
        let mut q = p.rotate(1);
        while &q != p {
            members.push(q.clone());
            q = q.rotate(1);
        }
        let representative = members.iter().min().expect("orbit is nonempty").clone();
        RotationClass {
            representative,
            stabilizer_order: m / members.len(),
            members,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All rotation classes of LP(n), sorted by representative.
pub fn rotation_classes(n: usize) -> Vec<RotationClass> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for p in LinkPattern::all(n) {
        if seen.contains(&p) {
            continue;
        }
        let class = RotationClass::of(&p);
        seen.extend(class.members.iter().cloned());
        out.push(class);
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// Linear operators on the link-pattern spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    /// `R^k`.
    Rotate(i64),
    /// `e_j`, `1 <= j <= 2n`.
    E(usize),
    /// `c_j`, `1 <= j <= 2n-1`, lowers `n` by one.
    Close(usize),
    /// `a_j`, `1 <= j <= 2n+1`, raises `n` by one.
    Add(usize),
    /// `Sym = sum_k R^k`.
    Sym,
    /// `H = sum_k e_k`.
    Hamiltonian,
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Rotate(k) => write!(f, "R^{k}"),
            Operator::E(j) => write!(f, "e_{j}"),
            Operator::Close(j) => write!(f, "c_{j}"),
            Operator::Add(j) => write!(f, "a_{j}"),
            Operator::Sym => write!(f, "Sym"),
            Operator::Hamiltonian => write!(f, "H"),
        }
    }
}

/// A sparse exact vector in the space spanned by LP(n).
#[derive(Clone, PartialEq, Eq)]
pub struct LpVector {
    n: usize,
    entries: BTreeMap<LinkPattern, BigRational>,
}

impl LpVector {
    pub fn zero(n: usize) -> Self {
        LpVector { n, entries: BTreeMap::new() }
    }

    pub fn basis(p: &LinkPattern) -> Self {
        let mut v = LpVector::zero(p.n());
        v.add_term(p.clone(), BigRational::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &LinkPattern) -> BigRational {
        self.entries.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinkPattern, &BigRational)> {
        self.entries.iter()
    }

    /// Number of nonzero components.
    pub fn support(&self) -> usize {
        self.entries.len()
    }

    /// Adds `c |p>`; panics if `p` has the wrong size.
    pub fn add_term(&mut self, p: LinkPattern, c: BigRational) {
        assert_eq!(p.n(), self.n, "pattern {p} does not live in LP({})", self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_count(&mut self, p: LinkPattern, c: i64) {
        self.add_term(p, BigRational::from_integer(BigInt::from(c)));
    }

    pub fn sum_entries(&self) -> BigRational {
        self.entries.values().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &BigRational) -> LpVector {
        if c.is_zero() {
            return LpVector::zero(self.n);
        }
        LpVector {
            n: self.n,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Linear extension of a map on basis patterns.
    pub fn map_basis(&self, target_n: usize, f: impl Fn(&LinkPattern) -> LinkPattern) -> LpVector {
        let mut out = LpVector::zero(target_n);
        for (p, c) in &self.entries {
            out.add_term(f(p), c.clone());
        }
        out
    }

    /// Exact action of `op`.
    pub fn apply(&self, op: Operator) -> Result<LpVector> {
        let n = self.n;
        let m = 2 * n;
        let bad = || Error::ArityMismatch { op: op.to_string(), n };
        Ok(match op {
            Operator::Rotate(k) => self.map_basis(n, |p| p.rotate(k)),
            Operator::E(j) => {
                if j == 0 || j > m {
                    return Err(bad());
                }
                self.map_basis(n, |p| p.tl_e(j))
            }
            Operator::Close(j) => {
                if n == 0 || j == 0 || j >= m {
                    return Err(bad());
                }
                self.map_basis(n - 1, |p| p.close(j))
            }
            Operator::Add(j) => {
                if j == 0 || j > m + 1 || n + 1 > MAX_N {
                    return Err(bad());
                }
                self.map_basis(n + 1, |p| p.add(j))
            }
            Operator::Sym => {
                let mut out = LpVector::zero(n);
                for k in 0..m.max(1) {
                    out = &out + &self.map_basis(n, |p| p.rotate(k as i64));
                }
                out
            }
            Operator::Hamiltonian => {
                let mut out = LpVector::zero(n);
                for j in 1..=m {
                    out = &out + &self.map_basis(n, |p| p.tl_e(j));
                }
                out
            }
        })
    }

    /// Applies operators right to left, as in `ops[0] ops[1] ... |v>`.
    pub fn apply_product(&self, ops: &[Operator]) -> Result<LpVector> {
        let mut v = self.clone();
        for &op in ops.iter().rev() {
            v = v.apply(op)?;
        }
        Ok(v)
    }

    /// First component, in basis order, where the two vectors differ.
    pub fn first_difference(&self, other: &LpVector) -> Option<(LinkPattern, BigRational, BigRational)> {
        if self.n != other.n {
            let p = self
                .entries
                .keys()
                .next()
                .or_else(|| other.entries.keys().next())
                .cloned()
                .unwrap_or_else(LinkPattern::empty);
            return Some((p, self.sum_entries(), other.sum_entries()));
        }
        let mut keys: Vec<&LinkPattern> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let a = self.get(k);
            let b = other.get(k);
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> String {
        let file = LpVectorFile {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.to_word(), v.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<LpVector> {
        let file: LpVectorFile = serde_json::from_str(s)?;
        let mut v = LpVector::zero(file.n);
        for (word, value) in file.entries {
            let p = LinkPattern::from_word(&word)?;
            if p.n() != file.n {
                return Err(Error::Parse(format!("pattern {word} is not in LP({})", file.n)));
            }
            let c: BigRational = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {value:?}")))?;
            v.add_term(p, c);
        }
        Ok(v)
    }
}

#[derive(Serialize, Deserialize)]
struct LpVectorFile {
    n: usize,
    entries: BTreeMap<String, String>,
}

impl<'a> std::ops::Add for &'a LpVector {
    type Output = LpVector;
    fn add(self, rhs: &'a LpVector) -> LpVector {
        assert_eq!(self.n, rhs.n, "adding vectors of different sizes");
        let mut out = self.clone();
        for (k, v) in &rhs.entries {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<'a> std::ops::Sub for &'a LpVector {
    type Output = LpVector;
    fn sub(self, rhs: &'a LpVector) -> LpVector {
        assert_eq!(self.n, rhs.n, "subtracting vectors of different sizes");
        let mut out = self.clone();
        for (k, v) in &rhs.entries {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

impl std::iter::Sum for LpVector {
    fn sum<I: Iterator<Item = LpVector>>(mut iter: I) -> LpVector {
        let first = iter.next().expect("sum of an empty vector sequence");
        iter.fold(first, |acc, v| &acc + &v)
    }
}

impl fmt::Debug for LpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LpVector[n={}]{{", self.n)?;
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(arcs: &[(usize, usize)]) -> LinkPattern {
        LinkPattern::from_arcs(arcs).unwrap()
    }

    #[test]
    fn word_roundtrip_and_order() {
        let all = LinkPattern::all(3);
        let words: Vec<String> = all.iter().map(|p| p.to_word()).collect();
        assert_eq!(words, ["((()))", "(()())", "(())()", "()(())", "()()()"]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn rejects_crossing_and_bad_words() {
        assert!(LinkPattern::from_arcs(&[(1, 3), (2, 4)]).is_err());
        assert!(LinkPattern::from_word("(()").is_err());
        assert!(LinkPattern::from_word(")(").is_err());
        assert!(LinkPattern::from_word("(x)").is_err());
    }

    #[test]
    fn rotate_example() {
        let p = lp(&[(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)]);
        let q = lp(&[(10, 5), (1, 2), (3, 4), (6, 9), (7, 8)]);
        assert_eq!(p.rotate(1), q);
        assert_eq!(p.rotate(10), p);
        assert_eq!(p.rotate(1).rotate(-1), p);
    }

    #[test]
    fn tl_e_examples() {
        let p = lp(&[(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)]);
        assert_eq!(p.tl_e(1), lp(&[(1, 2), (3, 6), (4, 5), (7, 10), (8, 9)]));
        assert_eq!(p.tl_e(2), p);
        // affine generator joins 2n and 1
        assert_eq!(p.tl_e(10), lp(&[(10, 1), (6, 7), (2, 3), (4, 5), (8, 9)]));
    }

    #[test]
    fn close_add_examples() {
        assert_eq!(LinkPattern::serial(2).close(1), LinkPattern::serial(1));
        let p = lp(&[(1, 4), (2, 3)]);
        assert_eq!(p.close(1), LinkPattern::serial(1));
        assert_eq!(LinkPattern::serial(1).add(2), lp(&[(1, 4), (2, 3)]));
        assert_eq!(LinkPattern::serial(1).add(3), LinkPattern::serial(2));
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<BigInt> = (0..=10).map(catalan).collect();
        let expect = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(c[n], BigInt::from(*e));
            if n <= 8 {
                assert_eq!(BigInt::from(LinkPattern::all(n).len()), c[n]);
            }
        }
    }

    #[test]
    fn rotation_classes_small() {
        // LP(2) is a single orbit of size two.
        let c2 = rotation_classes(2);
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].size(), 2);
        assert_eq!(c2[0].stabilizer_order, 2);
        let c4 = rotation_classes(4);
        let sizes: Vec<usize> = c4.iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 14);
        assert_eq!(c4.len(), 3);
    }

    #[test]
    fn vector_ops() {
        let v = LpVector::basis(&LinkPattern::serial(2));
        let sym = v.apply(Operator::Sym).unwrap();
        let mut expect = LpVector::zero(2);
        expect.add_count(LinkPattern::from_word("()()").unwrap(), 2);
        expect.add_count(LinkPattern::from_word("(())").unwrap(), 2);
        assert_eq!(sym, expect);
        let one = LpVector::basis(&LinkPattern::serial(1));
        assert_eq!(one.apply(Operator::Hamiltonian).unwrap(), one.scale(&BigRational::from_integer(2.into())));
        assert!(matches!(v.apply(Operator::E(5)), Err(Error::ArityMismatch { .. })));
        assert!(matches!(v.apply(Operator::Close(4)), Err(Error::ArityMismatch { .. })));
        assert!((&v - &v).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let mut v = LpVector::zero(2);
        v.add_term(LinkPattern::serial(2), BigRational::new(3.into(), 4.into()));
        v.add_count(LinkPattern::from_word("(())").unwrap(), -5);
        let s = v.to_json();
        assert!(s.contains("\"3/4\""));
        assert_eq!(LpVector::from_json(&s).unwrap(), v);
        assert!(LpVector::from_json(r#"{"n":1,"entries":{"(())":"1"}}"#).is_err());
    }
}

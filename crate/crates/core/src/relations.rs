//! Pointwise checks of the Temperley-Lieb relations and of the relations
//! between `e_j`, the close operators `c_j` and the add operators `a_j`.
//! Every check returns a description of the first violated relation.

use crate::linkpat::LinkPattern;

fn cyclic(j: i64, m: usize) -> usize {
    ((j - 1).rem_euclid(m as i64) + 1) as usize
}

fn fail(rel: &str, p: &LinkPattern, a: &LinkPattern, b: &LinkPattern) -> Option<String> {
    (a != b).then(|| format!("{rel} on {p}: {a} vs {b}"))
}

/// The Temperley-Lieb relations at generators `i` and `j` (cyclic, `1..=2n`):
/// `e_i = R e_{i+1} R^-1`, `e_i^2 = e_i`, `e_i e_j = e_j e_i` when `i` and
/// `j` are not neighbours, `e_i e_j e_i = e_i` when they are.
pub fn check_tl(p: &LinkPattern, i: usize, j: usize) -> Option<String> {
    let m = p.points();
    if m == 0 {
        return None;
    }
    let (i, j) = (cyclic(i as i64, m), cyclic(j as i64, m));
    let ei = p.tl_e(i);
    let conj = p.rotate(-1).tl_e(cyclic(i as i64 + 1, m)).rotate(1);
    if let Some(f) = fail(&format!("e_{i} = R e_{} R^-1", cyclic(i as i64 + 1, m)), p, &ei, &conj) {
        return Some(f);
    }
    if let Some(f) = fail(&format!("e_{i}^2 = e_{i}"), p, &ei.tl_e(i), &ei) {
        return Some(f);
    }
    let neighbours = cyclic(i as i64 + 1, m) == j || cyclic(j as i64 + 1, m) == i;
    // with two points the generators coincide
    if m == 2 {
        return None;
    }
    if neighbours {
        fail(&format!("e_{i} e_{j} e_{i} = e_{i}"), p, &ei.tl_e(j).tl_e(i), &ei)
    } else if i != j {
        fail(&format!("e_{i} e_{j} = e_{j} e_{i}"), p, &p.tl_e(j).tl_e(i), &ei.tl_e(j))
    } else {
        None
    }
}

/// `c_j a_j = 1`, `a_j c_j = e_j`, and `[e_j, c_k] = [e_j, a_k] = 0` for
/// `k - j >= 2`. `j` ranges over `1..=2n-1`, `k` over the valid indices.
pub fn check_close_add(p: &LinkPattern, j: usize, k: usize) -> Option<String> {
    let m = p.points();
    if j < 1 || j > m + 1 {
        return None;
    }
    if let Some(f) = fail(&format!("c_{j} a_{j} = 1"), p, &p.add(j).close(j), p) {
        return Some(f);
    }
    if j < m {
        if let Some(f) = fail(&format!("a_{j} c_{j} = e_{j}"), p, &p.close(j).add(j), &p.tl_e(j)) {
            return Some(f);
        }
    }
    if k >= j + 2 && j < m {
        if k < m {
            // e_j acts on the smaller pattern with the same label
            let lhs = p.close(k).tl_e(j);
            let rhs = p.tl_e(j).close(k);
            if let Some(f) = fail(&format!("e_{j} c_{k} = c_{k} e_{j}"), p, &lhs, &rhs) {
                return Some(f);
            }
        }
        if k <= m + 1 {
            let lhs = p.add(k).tl_e(j);
            let rhs = p.tl_e(j).add(k);
            if let Some(f) = fail(&format!("e_{j} a_{k} = a_{k} e_{j}"), p, &lhs, &rhs) {
                return Some(f);
            }
        }
    }
    None
}

/// `(prod_{J desc} a_j)(prod_{J asc} c_j) = prod_J e_j` for a set `J` of
/// indices in `1..=2n-1` without two consecutive elements. Operator
/// products act right to left, so the closes run from the largest index
/// down and the adds from the smallest up.
pub fn check_close_add_product(p: &LinkPattern, set: &[usize]) -> Option<String> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let m = p.points();
    if set.iter().any(|&j| j < 1 || j >= m) || set.windows(2).any(|w| w[1] == w[0] + 1) {
        return None;
    }
    let mut q = p.clone();
    for &j in set.iter().rev() {
        q = q.close(j);
    }
    for &j in &set {
        q = q.add(j);
    }
    let mut e = p.clone();
    for &j in &set {
        e = e.tl_e(j);
    }
    fail(&format!("a/c product over {set:?}"), p, &q, &e)
}

/// Subsets of `1..=m-1` without consecutive elements.
pub fn sparse_subsets(m: usize) -> Vec<Vec<usize>> {
    let top = m.saturating_sub(1);
    (0u32..1 << top)
        .filter(|mask| mask & (mask >> 1) == 0)
        .map(|mask| (1..=top).filter(|j| mask >> (j - 1) & 1 == 1).collect())
        .collect()
}

/// Every relation above, over all patterns of size `n` and all indices.
/// Returns the number of checks and the first failure.
pub fn exhaustive(n: usize) -> (usize, Option<String>) {
    let m = 2 * n;
    let mut count = 0;
    let subsets = sparse_subsets(m);
    for p in LinkPattern::all(n) {
        for i in 1..=m {
            for j in 1..=m {
                count += 1;
                if let Some(f) = check_tl(&p, i, j) {
                    return (count, Some(f));
                }
            }
        }
        for j in 1..=m + 1 {
            for k in 1..=m + 1 {
                count += 1;
                if let Some(f) = check_close_add(&p, j, k) {
                    return (count, Some(f));
                }
            }
        }
        for s in &subsets {
            count += 1;
            if let Some(f) = check_close_add_product(&p, s) {
                return (count, Some(f));
            }
        }
    }
    (count, None)
}

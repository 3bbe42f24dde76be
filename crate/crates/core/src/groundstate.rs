//! The loop-model Hamiltonian `H = sum_k e_k` on LP(n) and its exact
//! stationary vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fpl::{refined_counts, PsiTable};
use crate::lattice::Sign;
use crate::linkpat::{LinkPattern, LpVector, Operator};

/// Dense `C_n x C_n` matrix of `H` in the lexicographic basis of
/// parenthesis words. `entries[row][col]` counts the generators sending
/// basis pattern `col` to basis pattern `row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianMatrix {
    pub n: usize,
    pub basis: Vec<LinkPattern>,
    pub entries: Vec<Vec<u32>>,
}

impl HamiltonianMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn column_sum(&self, col: usize) -> u32 {
        self.entries.iter().map(|r| r[col]).sum()
    }
}

pub fn build_h_matrix(n: usize) -> HamiltonianMatrix {
    let basis = LinkPattern::all(n);
    let index: std::collections::HashMap<&LinkPattern, usize> =
        basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let columns: Vec<Vec<usize>> = basis
        .par_iter()
        .map(|p| (1..=2 * n).map(|k| index[&p.tl_e(k)]).collect())
        .collect();
    let dim = basis.len();
    let mut entries = vec![vec![0u32; dim]; dim];
    for (col, images) in columns.iter().enumerate() {
        for &row in images {
            entries[row][col] += 1;
        }
    }
    HamiltonianMatrix { n, basis, entries }
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Rational basis of the kernel of an integer matrix, by integer-preserving
/// elimination: rows are combined with lcm multipliers and divided by their
/// content; the pivot is the first nonzero entry in column order.
pub fn integer_kernel(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigRational>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let mul_self = &pv / &g;
            let mul_pivot = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &mul_self - y * &mul_pivot;
            }
            let h = content(row);
            if !h.is_zero() && !h.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &h;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -BigRational::new(rows[r][f].clone(), rows[r][pc].clone());
            }
            v
        })
        .collect()
}

/// Scales a nonzero rational vector to coprime integers with a positive
/// first nonzero entry.
pub fn normalize(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = content(&ints);
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

fn shifted(h: &HamiltonianMatrix) -> Vec<Vec<BigInt>> {
    let shift = 2 * h.n as i64;
    h.entries
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &x)| BigInt::from(x as i64 - if i == j { shift } else { 0 }))
                .collect()
        })
        .collect()
}

/// Exact kernel vector of `H - 2n`, as coprime positive integers.
pub fn stationary_vector(n: usize) -> Result<LpVector> {
    let h = build_h_matrix(n);
    let kernel = integer_kernel(shifted(&h));
    if kernel.len() != 1 {
        return Err(Error::KernelDimension { n, dim: kernel.len() });
    }
    let ints = normalize(&kernel[0]);
    if ints.iter().any(|x| !x.is_positive()) {
        return Err(Error::KernelDimension { n, dim: 1 });
    }
    let mut v = LpVector::zero(n);
    for (p, c) in h.basis.iter().zip(ints) {
        v.add_term(p.clone(), BigRational::from_integer(c));
    }
    Ok(v)
}

/// Largest prime below `2^32`.
pub const RANK_PRIME: u64 = 4_294_967_291;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of an integer matrix modulo a prime below `2^32`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let prow: Vec<u64> = m[rank].iter().map(|&x| x * inv % p).collect();
        m[rank] = prow.clone();
        let tail = &mut m[rank + 1..];
        tail.par_iter_mut().for_each(|row| {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&prow).skip(c) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        });
        rank += 1;
    }
    rank
}

/// Dimension of the kernel of `H - 2n` over `F_p`. It bounds the rational
/// kernel dimension from above; the rational kernel is never trivial
/// because every column of `H` sums to `2n`.
pub fn kernel_dimension_mod_p(n: usize) -> usize {
    let h = build_h_matrix(n);
    let shift = 2 * n as i64;
    let rows: Vec<Vec<i64>> = h
        .entries
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &x)| x as i64 - if i == j { shift } else { 0 })
                .collect()
        })
        .collect();
    h.dim() - rank_mod_p(&rows, RANK_PRIME)
}

/// Outcome of comparing the refined counts with the stationary vector.
#[derive(Clone, Debug)]
pub struct RsReport {
    pub n: usize,
    /// First component of `(H - 2n) Psi` that is not zero.
    pub residual_witness: Option<(LinkPattern, BigRational)>,
    /// First component where `Psi` and the kernel vector disagree.
    pub kernel_witness: Option<(LinkPattern, BigRational, BigRational)>,
    pub total: BigRational,
}

impl RsReport {
    pub fn passed(&self) -> bool {
        self.residual_witness.is_none() && self.kernel_witness.is_none()
    }
}

/// `(H - 2n) v`.
pub fn rs_residual(v: &LpVector) -> LpVector {
    let n = v.n();
    let hv = v.apply(Operator::Hamiltonian).expect("H acts on every size");
    &hv - &v.scale(&BigRational::from_integer(BigInt::from(2 * n)))
}

pub fn verify_rs_with(psi: &PsiTable) -> Result<RsReport> {
    let v = psi.to_vector();
    let residual = rs_residual(&v);
    let residual_witness = residual.iter().next().map(|(p, c)| (p.clone(), c.clone()));
    let kernel = stationary_vector(psi.n)?;
    let kernel_witness = v.first_difference(&kernel);
    Ok(RsReport { n: psi.n, residual_witness, kernel_witness, total: v.sum_entries() })
}

pub fn verify_rs(n: usize) -> Result<RsReport> {
    verify_rs_with(&refined_counts(n, Sign::Plus, None))
}

//! Reduced simplicial homology ranks over the rationals.
//!
//! Ranks come from exact fraction-free elimination: machine integers with
//! overflow checks first, arbitrary precision if a pivot ever overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{invalid, Result};
use crate::varset::VarSet;

/// Signed incidence matrix of `∂_d : C_d → C_{d-1}` for the augmented chain complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: Vec<VarSet>,
    cols: Vec<VarSet>,
    entries: Vec<Vec<i64>>,
}

impl BoundaryMatrix {
    /// Rows are `(d-1)`-faces, columns `d`-faces; entry is `(-1)^k` when the row
    /// face is the column face minus its `k`-th smallest vertex.
    pub fn from_faces(rows: Vec<VarSet>, cols: Vec<VarSet>) -> Self {
        let mut entries = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            for (k, v) in face.iter().enumerate() {
                let sub = face.without(v);
                if let Ok(r) = rows.binary_search(&sub) {
                    entries[r][c] = if k % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        BoundaryMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// A matrix with arbitrary entries and no face labels.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Self {
        BoundaryMatrix {
            rows: Vec::new(),
            cols: Vec::new(),
            entries,
        }
    }

    pub fn rows(&self) -> &[VarSet] {
        &self.rows
    }

    pub fn cols(&self) -> &[VarSet] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(self.cols.len(), Vec::len)
    }

    /// Plain integer product `self · other`.
    pub fn mul(&self, other: &BoundaryMatrix) -> Vec<Vec<i64>> {
        let inner = other.nrows();
        assert_eq!(self.ncols(), inner, "dimension mismatch");
        let cols = other.ncols();
        self.entries
            .iter()
            .map(|row| {
                (0..cols)
                    .map(|c| (0..inner).map(|k| row[k] * other.entries[k][c]).sum())
                    .collect()
            })
            .collect()
    }
}

/// `∂_d` of `complex` for `0 ≤ d ≤ dim`; `∂_0` maps every vertex to `∅`.
pub fn boundary_matrix(complex: &SimplicialComplex, d: isize) -> Result<BoundaryMatrix> {
    if d < 0 || d > complex.dim() {
        return Err(invalid(format!(
            "boundary degree {d} outside 0..={}",
            complex.dim()
        )));
    }
    let rows = complex.faces_of_dim(d - 1)?;
    let cols = complex.faces_of_dim(d)?;
    Ok(BoundaryMatrix::from_faces(rows, cols))
}

/// Exact rank over the rationals.
pub fn rank_exact(mat: &BoundaryMatrix) -> usize {
    rank_of(mat.entries.clone())
}

pub(crate) fn rank_of(rows: Vec<Vec<i64>>) -> usize {
    match rank_i64(rows.clone()) {
        Some(r) => r,
        None => rank_big(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

/// Fraction-free elimination with row-content removal; `None` on overflow.
fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    rows.retain(|r| r.iter().any(|&v| v != 0));
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col];
        for row in tail.iter_mut() {
            let v = row[col];
            if v == 0 {
                continue;
            }
            let g = pv.gcd(&v);
            let (a, b) = (pv / g, v / g);
            let mut content = 0i64;
            for (x, &y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = x.checked_mul(a)?.checked_sub(y.checked_mul(b)?)?;
                content = content.gcd(x);
            }
            if content > 1 {
                for x in row.iter_mut().skip(col) {
                    *x /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let a = &pv / &g;
            let b = &row[col] / &g;
            let mut content = BigInt::zero();
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = &*x * &a - y * &b;
                content = content.gcd(x);
            }
            if content > BigInt::from(1) {
                for x in row.iter_mut().skip(col) {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Ranks of `H̃_d` for `d = -1, …, dim`; entry `k` holds degree `k - 1`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    reduced_homology_ranks_with(complex, &Caps::default())
}

pub fn reduced_homology_ranks_with(complex: &SimplicialComplex, caps: &Caps) -> Result<Vec<usize>> {
    caps.check_homology(complex.vertex_count())?;
    Ok(homology_below(complex, complex.dim() + 1))
}

/// Ranks of `H̃_d` for `-1 ≤ d < top`, uncapped.
pub(crate) fn homology_below(complex: &SimplicialComplex, top: isize) -> Vec<usize> {
    let dim = complex.dim();
    let top = top.min(dim + 1);
    // faces[d + 1] holds the d-faces, d = -1..=dim
    let faces: Vec<Vec<VarSet>> = (-1..=dim)
        .map(|d| complex.faces_of_dim(d).expect("degree in range"))
        .collect();
    // boundary_rank[d + 1] = rank ∂_d; ∂_{-1} and ∂_{dim+1} vanish
    let mut boundary_rank = vec![0usize; (dim + 3) as usize];
    for d in 0..=top.min(dim) {
        let d = d as usize;
        let m = BoundaryMatrix::from_faces(faces[d].clone(), faces[d + 1].clone());
        boundary_rank[d + 1] = rank_exact(&m);
    }
    (-1..top)
        .map(|d| {
            let k = (d + 1) as usize;
            faces[k].len() - boundary_rank[k] - boundary_rank[k + 1]
        })
        .collect()
}

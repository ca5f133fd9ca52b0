//! Exact Gauss-Jordan elimination over `Rational64`.

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<Rational64>>;

/// Solves `a * x = b` for `x`, where `a` has `m` rows and `n` columns.
///
/// Returns `None` if the system is inconsistent or underdetermined.
pub fn solve(a: &[Vec<Rational64>], b: &[Rational64]) -> Option<Vec<Rational64>> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = a.first().map_or(0, Vec::len);
    let mut aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivot_cols = Vec::with_capacity(n);
    for col in 0..n {
        let Some(p) = (pivot_row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, p);
        let inv = aug[pivot_row][col].recip();
        for v in aug[pivot_row].iter_mut() {
            *v *= inv;
        }
        for r in 0..m {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col];
                for c in col..=n {
                    let delta = factor * aug[pivot_row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    if pivot_cols.len() < n {
        return None;
    }
    if aug[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational64::zero(); n];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[r][n];
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(a: &[Vec<Rational64>]) -> Option<QMatrix> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational64> = (0..n)
            .map(|i| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            })
            .collect();
        cols.push(solve(a, &e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect(),
    )
}

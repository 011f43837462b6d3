//! Cyclic Jacobi eigensolver for small dense symmetric matrices.
//!
//! Floating point here is advisory only: it backs the interlacing checks and
//! the float/exact cross-validation, never an exact verdict.

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, sqrt};

/// Jacobi iteration failed to drive the off-diagonal mass below tolerance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceFailure;

impl core::fmt::Display for ConvergenceFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "jacobi eigensolver did not converge")
    }
}

const MAX_ROTATIONS_PER_DIM: usize = 4000;
const OFF_TOLERANCE: f64 = 1e-13;

/// Eigenvalues and eigenvectors (columns) of a symmetric matrix.
pub fn eigh(rows: &[Vec<i64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), ConvergenceFailure> {
    let n = rows.len();
    let mut d: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    if n < 2 {
        let vals = (0..n).map(|i| d[i][i]).collect();
        return Ok((vals, v));
    }
    let max_rot = MAX_ROTATIONS_PER_DIM * n * n;
    for _ in 0..max_rot {
        // Largest off-diagonal element.
        let (mut p, mut q, mut max) = (0usize, 1usize, 0.0f64);
        for i in 0..n {
            for j in (i + 1)..n {
                let val = fabs(d[i][j]);
                if val > max {
                    max = val;
                    p = i;
                    q = j;
                }
            }
        }
        if max <= OFF_TOLERANCE {
            let vals = (0..n).map(|i| d[i][i]).collect();
            return Ok((vals, v));
        }
        let app = d[p][p];
        let aqq = d[q][q];
        let apq = d[p][q];
        let tau = (aqq - app) / (2.0 * apq);
        let t = if tau >= 0.0 {
            1.0 / (tau + sqrt(1.0 + tau * tau))
        } else {
            -1.0 / (-tau + sqrt(1.0 + tau * tau))
        };
        let c = 1.0 / sqrt(1.0 + t * t);
        let s = t * c;
        for i in 0..n {
            if i != p && i != q {
                let dip = d[i][p];
                let diq = d[i][q];
                d[i][p] = c * dip - s * diq;
                d[p][i] = d[i][p];
                d[i][q] = s * dip + c * diq;
                d[q][i] = d[i][q];
            }
        }
        d[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        d[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        d[p][q] = 0.0;
        d[q][p] = 0.0;
        for row in v.iter_mut() {
            let vip = row[p];
            let viq = row[q];
            row[p] = c * vip - s * viq;
            row[q] = s * vip + c * viq;
        }
    }
    Err(ConvergenceFailure)
}

/// Eigenvalues of a symmetric matrix, sorted descending.
pub fn eigenvalues_desc(rows: &[Vec<i64>]) -> Result<Vec<f64>, ConvergenceFailure> {
    let (mut vals, _) = eigh(rows)?;
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Largest residual `max_i |(A x - lambda x)_i|` over all eigenpairs.
pub fn max_residual(rows: &[Vec<i64>], vals: &[f64], vecs: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut worst = 0.0f64;
    for k in 0..n {
        for i in 0..n {
            let mut ax = 0.0;
            for j in 0..n {
                ax += rows[i][j] as f64 * vecs[j][k];
            }
            let r = fabs(ax - vals[k] * vecs[i][k]);
            if r > worst {
                worst = r;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_spectrum() {
        let l = vec![
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ];
        let vals = eigenvalues_desc(&l).unwrap();
        let expect = [4.0, 2.0, 2.0, 0.0];
        for (a, b) in vals.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        let (v, e) = eigh(&l).unwrap();
        assert!(max_residual(&l, &v, &e) < 1e-9);
    }

    #[test]
    fn p4_spectrum_closed_form() {
        let l = vec![
            vec![1, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 1],
        ];
        let vals = eigenvalues_desc(&l).unwrap();
        let s = 2.0f64.sqrt();
        let expect = [2.0 + s, 2.0, 2.0 - s, 0.0];
        for (a, b) in vals.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }
}

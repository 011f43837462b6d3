//! Exact integer and rational linear algebra kernels.
//!
//! Rank and determinant use Bareiss fraction-free elimination. A fast path
//! runs in `i128` with overflow checks and falls back to big integers; for
//! the matrix sizes this crate works at (n well under 25, entries bounded by
//! vertex degrees) the fast path essentially always suffices, but the
//! fallback keeps results exact unconditionally.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = Ratio<BigInt>;

/// Rank of an integer matrix, exact.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut flat: Vec<i128> = Vec::with_capacity(nrows * ncols);
    for row in rows {
        flat.extend(row.iter().map(|&x| x as i128));
    }
    match rank_i128(&mut flat, nrows, ncols) {
        Some(r) => r,
        None => rank_bigint(rows),
    }
}

/// Rank of `rows - mu*I` without materializing the shifted matrix.
pub fn rank_shifted(rows: &[Vec<i64>], mu: i64) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut flat: Vec<i128> = Vec::with_capacity(nrows * ncols);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            flat.push(if i == j { (x - mu) as i128 } else { x as i128 });
        }
    }
    match rank_i128(&mut flat, nrows, ncols) {
        Some(r) => r,
        None => {
            let shifted: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &x)| if i == j { x - mu } else { x })
                        .collect()
                })
                .collect();
            rank_bigint(&shifted)
        }
    }
}

/// Fraction-free elimination over a flat row-major buffer; `None` on
/// overflow or inexact division (the caller falls back to big integers).
fn rank_i128(a: &mut [i128], nrows: usize, ncols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| a[i * ncols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..ncols {
                a.swap(r * ncols + j, p * ncols + j);
            }
        }
        let pivot = a[r * ncols + c];
        for i in (r + 1)..nrows {
            let head = a[i * ncols + c];
            for j in (c + 1)..ncols {
                let t1 = a[i * ncols + j].checked_mul(pivot)?;
                let t2 = head.checked_mul(a[r * ncols + j])?;
                let num = t1.checked_sub(t2)?;
                if num % prev != 0 {
                    return None;
                }
                a[i * ncols + j] = num / prev;
            }
            a[i * ncols + c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut prev = Int::one();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let num = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = Int::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn determinant(rows: &[Vec<i64>]) -> Int {
    let n = rows.len();
    let mut a: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let mut prev = Int::one();
    let mut sign = 1i32;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Int::zero();
        };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        for i in (c + 1)..n {
            for j in (c + 1)..n {
                let num = &a[i][j] * &a[c][c] - &a[i][c] * &a[c][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = Int::zero();
        }
        prev = a[c][c].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}

/// Coefficients of `det(xI - A)` for an integer matrix, ascending:
/// `coeffs[j]` multiplies `x^j`, `coeffs[n] = 1`.
///
/// Faddeev–LeVerrier over big integers; the trace division by the step
/// index is exact.
pub fn char_poly_coeffs(rows: &[Vec<i64>]) -> Vec<Int> {
    let n = rows.len();
    let a: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    if n == 0 {
        return coeffs;
    }
    let mut m = a.clone();
    for k in 1..=n {
        let trace: Int = (0..n).map(|i| m[i][i].clone()).sum();
        let ck = -trace / Int::from(k as i64);
        coeffs[n - k] = ck.clone();
        if k < n {
            // M <- A * (M + ck * I)
            let mut shifted = m;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &ck;
            }
            let mut next = vec![vec![Int::zero(); n]; n];
            for i in 0..n {
                for p in 0..n {
                    if a[i][p].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] += &a[i][p] * &shifted[p][j];
                    }
                }
            }
            m = next;
        }
    }
    coeffs
}

/// Multiplicity of `root` as a zero of the polynomial with ascending
/// coefficients `coeffs`, by repeated exact synthetic division.
pub fn root_multiplicity(coeffs: &[Int], root: i64) -> usize {
    let r = Int::from(root);
    let mut cur: Vec<Int> = coeffs.to_vec();
    while cur.last().map(|c| c.is_zero()) == Some(true) {
        cur.pop();
    }
    let mut mult = 0usize;
    loop {
        if cur.len() <= 1 {
            // Constant polynomial: zero iff identically zero, which cannot
            // happen for a characteristic polynomial.
            break;
        }
        // Horner division by (x - r): quotient b, remainder rem.
        let deg = cur.len() - 1;
        let mut b = vec![Int::zero(); deg];
        b[deg - 1] = cur[deg].clone();
        for j in (1..deg).rev() {
            b[j - 1] = &cur[j] + &r * &b[j];
        }
        let rem = &cur[0] + &r * &b[0];
        if !rem.is_zero() {
            break;
        }
        mult += 1;
        cur = b;
    }
    mult
}

/// Basis of the rational nullspace of an integer matrix, each vector
/// normalized so its first nonzero entry is `1`.
pub fn nullspace(rows: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut a: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from(Int::from(x))).collect())
        .collect();
    // Gauss-Jordan to reduced row echelon form.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for j in c..ncols {
            let v = a[r][j].clone() / inv.clone();
            a[r][j] = v;
        }
        for i in 0..nrows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..ncols {
                let v = a[i][j].clone() - f.clone() * a[r][j].clone();
                a[i][j] = v;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &c in &pivot_cols {
            s[c] = true;
        }
        s
    };
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        normalize_first_nonzero(&mut v);
        basis.push(v);
    }
    basis
}

/// Scales a rational vector so its first nonzero entry equals `1`.
pub fn normalize_first_nonzero(v: &mut [Rat]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = x.clone() / first.clone();
        }
    }
}

/// Matrix-vector product of an integer matrix with a rational vector.
pub fn mat_vec(rows: &[Vec<i64>], v: &[Rat]) -> Vec<Rat> {
    rows.iter()
        .map(|row| {
            let mut acc = Rat::zero();
            for (a, x) in row.iter().zip(v.iter()) {
                if *a != 0 && !x.is_zero() {
                    acc += Rat::from(Int::from(*a)) * x.clone();
                }
            }
            acc
        })
        .collect()
}

/// True iff every entry of the vector is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// True iff the entries take exactly the two values `t` and `-t` for a
/// single nonzero rational `t`.
pub fn is_plus_minus_single(v: &[Rat]) -> bool {
    let Some(first) = v.first() else {
        return false;
    };
    if first.is_zero() {
        return false;
    }
    let t = first.abs();
    v.iter().all(|x| x.abs() == t)
}

//! Dense Gaussian elimination over the rationals.

use super::Rational;

/// Reduces `rows` in place to reduced row echelon form over the first `ncols`
/// columns (further columns are carried along as right-hand sides).
///
/// Columns are scanned left to right; the pivot for a column is the first
/// remaining row with a nonzero entry. Returns the pivot column of each
/// leading row.
pub(crate) fn row_reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Outcome of solving `A x = b`.
pub(crate) struct Solved {
    pub rank: usize,
    /// Canonical solution (free variables zero), or `None` if inconsistent.
    pub solution: Option<Vec<Rational>>,
}

pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Solved {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows, ncols);
    let rank = pivots.len();
    if rows[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return Solved { rank, solution: None };
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &col) in rows.iter().zip(&pivots) {
        x[col] = row[ncols].clone();
    }
    Solved {
        rank,
        solution: Some(x),
    }
}

/// Basis of the null space of `a`, one vector per free column (that column
/// set to one, the other free columns zero).
pub(crate) fn null_space(a: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows = a.to_vec();
    let pivots = row_reduce(&mut rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -&row[free];
            }
            v
        })
        .collect()
}

pub(crate) fn rank(a: &[Vec<Rational>], ncols: usize) -> usize {
    let mut rows = a.to_vec();
    row_reduce(&mut rows, ncols).len()
}

/// Determinant of a square matrix.
pub(crate) fn determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].recip();
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    det
}

//! A small exact two-phase simplex method (Bland's rule), used to decide
//! whether two simplices intersect properly.

use crate::exact_math::Rational;

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj·x` over columns `0..allowed`; returns false if unbounded.
    fn optimize(&mut self, obj: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut rc = obj[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !obj[b].is_zero() && !self.rows[i][j].is_zero() {
                        rc = rc - &obj[b] * &self.rows[i][j];
                    }
                }
                rc.is_positive()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn value(&self, obj: &[Rational]) -> Rational {
        self.basis.iter().enumerate().map(|(i, &b)| &obj[b] * self.rhs(i)).sum()
    }
}

/// Maximizes `c·x` subject to `a x = b`, `x ≥ 0`.
pub(crate) fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<Rational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        t.push(if flip { -rhs } else { rhs.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        ncols: n + m,
    };

    let mut phase1 = vec![Rational::zero(); n + m];
    for x in phase1.iter_mut().skip(n) {
        *x = -Rational::one();
    }
    tab.optimize(&phase1, n + m);
    if !tab.value(&phase1).is_zero() {
        return LpOutcome::Infeasible;
    }
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }

    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat_n(Rational::zero(), m));
    if !tab.optimize(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal(tab.value(&phase2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn small_program() {
        // max x + y  s.t. x + 2y + s = 4, 3x + y + t = 6
        let a = vec![vec![q(1), q(2), q(1), q(0)], vec![q(3), q(1), q(0), q(1)]];
        let out = maximize(&a, &[q(4), q(6)], &[q(1), q(1), q(0), q(0)]);
        assert_eq!(out, LpOutcome::Optimal(Rational::new(14, 5)));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![vec![q(1), q(1)]];
        assert_eq!(maximize(&a, &[q(-1)], &[q(1), q(0)]), LpOutcome::Infeasible);
        let a = vec![vec![q(1), q(-1)]];
        assert_eq!(maximize(&a, &[q(0)], &[q(1), q(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(maximize(&a, &[q(1), q(2)], &[q(1), q(0)]), LpOutcome::Optimal(q(1)));
    }
}

//! Exact linear feasibility: find `x >= 0` with `A x <= b`.
//!
//! Phase I of the primal simplex method on a dense rational tableau, with
//! Bland's rule for both the entering and the leaving variable.

use crate::rational::Rational;

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-one objective; last entry is minus its value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &piv;
        }
        let pivot_row = self.rows[row].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for (t, p) in target.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *t = &*t - &(&factor * p);
                }
            }
        };
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(r);
            }
        }
        eliminate(&mut self.obj);
        self.basis[row] = col;
    }
}

/// A point of `{x in Q^n : x >= 0, A x <= b}`, or `None` if the set is empty.
///
/// Every row of `a` must have length `n`.
pub fn find_feasible(n: usize, a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per row");
    let m = a.len();
    let artificial_rows: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let cols = n + m + artificial_rows.len();

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), n, "row {i} has the wrong length");
        let mut row = vec![Rational::zero(); cols + 1];
        let flip = b[i].is_negative();
        for j in 0..n {
            row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
        }
        row[n + i] = if flip { -Rational::one() } else { Rational::one() };
        row[cols] = b[i].abs();
        if flip {
            let k = artificial_rows.iter().position(|&r| r == i).expect("listed");
            row[n + m + k] = Rational::one();
            basis.push(n + m + k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }

    let mut obj = vec![Rational::zero(); cols + 1];
    for k in 0..artificial_rows.len() {
        obj[n + m + k] = Rational::one();
    }
    for &i in &artificial_rows {
        for (o, v) in obj.iter_mut().zip(&rows[i]) {
            *o = &*o - v;
        }
    }
    let mut t = Tableau { rows, obj, basis };

    while let Some(col) = (0..cols).find(|&j| t.obj[j].is_negative()) {
        let mut best: Option<(Rational, usize, usize)> = None;
        for (i, r) in t.rows.iter().enumerate() {
            if r[col].is_positive() {
                let ratio = &r[cols] / &r[col];
                let better = match &best {
                    None => true,
                    Some((br, bb, _)) => ratio < *br || (ratio == *br && t.basis[i] < *bb),
                };
                if better {
                    best = Some((ratio, t.basis[i], i));
                }
            }
        }
        let (_, _, row) = best.expect("phase-one objective is bounded below");
        t.pivot(row, col);
    }

    if !t.obj[cols].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &var) in t.basis.iter().enumerate() {
        if var < n {
            x[var] = t.rows[i][cols].clone();
        }
    }
    Some(x)
}

//! Exact phase-one simplex for `A x = b, x >= 0`.
//!
//! Pivoting follows Bland's rule (smallest eligible entering column, ties in
//! the ratio test broken by smallest basic variable), which cannot cycle, so
//! the solver always terminates. When the system is infeasible the optimal
//! phase-one basis yields a Farkas vector `y` with `A^T y <= 0` and
//! `b^T y > 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::geometry::Rational;
use crate::linalg::dot;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phase1 {
    /// A nonnegative solution of `A x = b`.
    Feasible(Vec<Rational>),
    /// `y` with `A^T y <= 0` componentwise and `b^T y > 0`.
    Infeasible(Vec<Rational>),
}

/// Decides feasibility of `A x = b, x >= 0`. Every row of `a` must have the
/// same length.
pub fn phase_one(a: &[Vec<Rational>], b: &[Rational]) -> Phase1 {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Phase1::Feasible(vec![Rational::zero(); n]);
    }
    let width = n + m;
    let rhs = width;

    // Flip rows so the artificial start basis is feasible.
    let flips: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), n, "ragged constraint matrix");
        let mut row = Vec::with_capacity(width + 1);
        for v in &a[i] {
            row.push(if flips[i] { -v } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(if flips[i] { -&b[i] } else { b[i].clone() });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..width).collect();

    // Reduced costs of the phase-one objective (sum of artificials); the last
    // entry holds minus the current objective value.
    let mut cost = vec![Rational::zero(); width + 1];
    for j in (0..n).chain(core::iter::once(rhs)) {
        cost[j] = -tab.iter().map(|row| &row[j]).sum::<Rational>();
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let Some((row, _)) = leave else {
            unreachable!("phase-one objective cannot be unbounded")
        };
        pivot(&mut tab, &mut cost, row, enter);
        basis[row] = enter;
    }

    let objective = -cost[rhs].clone();
    if objective.is_positive() {
        // y_k = c_k - reduced_cost_k on the artificial columns, then undo row flips.
        let y = (0..m)
            .map(|k| {
                let yk = Rational::one() - &cost[n + k];
                if flips[k] {
                    -yk
                } else {
                    yk
                }
            })
            .collect();
        Phase1::Infeasible(y)
    } else {
        let mut x = vec![Rational::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = tab[i][rhs].clone();
            }
        }
        Phase1::Feasible(x)
    }
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for v in tab[row].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let pivot_row = tab[row].clone();
    let nz: Vec<usize> = (0..pivot_row.len())
        .filter(|&k| !pivot_row[k].is_zero())
        .collect();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for &k in &nz {
            r[k] -= &f * &pivot_row[k];
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for &k in &nz {
            cost[k] -= &f * &pivot_row[k];
        }
    }
}

/// Checks that `x >= 0` solves `A x = b`.
pub fn check_solution(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| dot(row, x) == *bi)
}

/// Checks that `y` is a Farkas certificate of infeasibility for `A x = b, x >= 0`.
pub fn check_farkas(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) -> bool {
    if y.len() != a.len() {
        return false;
    }
    let n = a.first().map_or(0, Vec::len);
    let columns_ok = (0..n).all(|j| {
        let s: Rational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
        !s.is_positive()
    });
    columns_ok && dot(b, y).is_positive()
}

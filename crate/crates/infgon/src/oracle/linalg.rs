//! Small dense linear algebra over exact rationals.
//!
//! Every system solved by the oracle has a handful of unknowns (graded pieces
//! are at most two-dimensional), so plain Gauss-Jordan elimination over
//! `BigRational` is exact and fast enough.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Row-reduce in place; returns the pivot column of each nonzero row.
pub fn rref(rows: &mut [Vec<Rat>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of `{ v : A v = 0 }` for an `m x n` matrix given by rows.
pub fn nullspace(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = a.to_vec();
    let pivots = rref(&mut rows);
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Is `v` in the row span of `rows`?
pub fn in_span(rows: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    let base = rank(rows.to_vec());
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    rank(with) == base
}

/// Any exact solution of `A x = b`, or `None` when inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); ncols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(a.clone()), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot: Rat = row.iter().zip(&ns[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = solve(&a, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);

        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&b, &[rat(1), rat(3)]).is_none());
        assert!(solve(&b, &[rat(1), rat(2)]).is_some());
    }

    #[test]
    fn span_membership() {
        let rows = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(in_span(&rows, &[rat(2), rat(3), rat(5)]));
        assert!(!in_span(&rows, &[rat(0), rat(0), rat(1)]));
    }
}

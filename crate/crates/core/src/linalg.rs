//! Dense exact linear algebra over Q, lifted coefficientwise to Q[q].

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::Scalar;

/// Rank of a rational matrix given by rows.
pub(crate) fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &pivot;
            let (top, rest) = m.split_at_mut(i);
            for (x, y) in rest[0][c..ncols].iter_mut().zip(&top[r][c..ncols]) {
                *x -= &factor * y;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Expresses vectors in terms of a fixed family of column vectors.
///
/// Gauss-Jordan on `[A | I]` yields `E` with `E·A` in reduced row echelon
/// form; for a full-column-rank `A` the top block of `E·A` is the identity,
/// so `x = (E·b)[..r]` and `b` is in the span iff `(E·b)[r..] = 0`.
#[derive(Clone, Debug)]
pub(crate) struct SpanSolver {
    dim: usize,
    size: usize,
    rank: usize,
    transform: Vec<Vec<BigRational>>,
}

impl SpanSolver {
    /// `columns[j]` is the coordinate vector (length `dim`) of the j-th family member.
    pub(crate) fn new(dim: usize, columns: &[Vec<BigRational>]) -> Self {
        let size = columns.len();
        let width = size + dim;
        let mut m: Vec<Vec<BigRational>> = (0..dim)
            .map(|i| {
                let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
                row.extend((0..dim).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        let mut r = 0;
        for c in 0..size {
            let Some(p) = (r..dim).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for j in c..width {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &factor * &pivot_row[j];
                    }
                }
            }
            r += 1;
        }
        let transform = m.into_iter().map(|row| row[size..].to_vec()).collect();
        SpanSolver { dim, size, rank: r, transform }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn is_independent(&self) -> bool {
        self.rank == self.size
    }

    /// Coefficients `x` with `Σ_j x_j · column_j = target`.
    pub(crate) fn solve(&self, target: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(target.len(), self.dim);
        if !self.is_independent() {
            return Err(Error::Singular { rank: self.rank, size: self.size });
        }
        let y: Vec<Scalar> = self
            .transform
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (e, b) in row.iter().zip(target) {
                    if !e.is_zero() && !b.is_zero() {
                        acc += &b.scale(e);
                    }
                }
                acc
            })
            .collect();
        if y[self.size..].iter().any(|s| !s.is_zero()) {
            return Err(Error::NotInSpan);
        }
        Ok(y[..self.size].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&rows[..2]), 1);
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // columns (1,1,0) and (0,1,1)
        let solver = SpanSolver::new(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        assert!(solver.is_independent());
        let x = solver.solve(&[Scalar::from_int(2), Scalar::from_int(5), Scalar::q()]).unwrap_err();
        assert_eq!(x, Error::NotInSpan);
        let x = solver
            .solve(&[Scalar::from_int(2), &Scalar::from_int(2) + &Scalar::q(), Scalar::q()])
            .unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::q()]);
    }

    #[test]
    fn singular_family_reported() {
        let solver = SpanSolver::new(2, &[vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert_eq!(solver.rank(), 1);
        assert_eq!(
            solver.solve(&[Scalar::one(), Scalar::one()]).unwrap_err(),
            Error::Singular { rank: 1, size: 2 }
        );
    }
}

//! Dense exact matrices over a field.
//!
//! Everything here is elimination-based and exact: reduced row echelon form
//! with unit-pivot preference (keeps rational entries small), null spaces,
//! a reusable factored solver, and a fraction-free Bareiss determinant.
//! No floating point anywhere.

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<S: Field> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Field> Mat<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<T: Field>(&self, f: impl FnMut(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Mat<S> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Prefer a +-1 pivot, otherwise the first nonzero entry.
    fn pick_pivot(&self, col: usize, from_row: usize) -> Option<usize> {
        let mut first_nonzero = None;
        for i in from_row..self.rows {
            let v = &self[(i, col)];
            if v.is_zero() {
                continue;
            }
            if v.is_one() || (-v.clone()).is_one() {
                return Some(i);
            }
            if first_nonzero.is_none() {
                first_nonzero = Some(i);
            }
        }
        first_nonzero
    }

    /// In-place Gauss-Jordan reduction; returns the pivot columns.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = self.pick_pivot(c, r) else {
                continue;
            };
            self.swap_rows(r, pr);
            let pivot = self[(r, c)].clone();
            if !pivot.is_one() {
                for j in c..self.cols {
                    self[(r, j)] = self[(r, j)].clone() / pivot.clone();
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if !self[(r, j)].is_zero() {
                        let delta = factor.clone() * self[(r, j)].clone();
                        self[(i, j)] = self[(i, j)].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.reduce().len()
    }

    /// Basis of the right null space, one vector per free column, in
    /// ascending column order. Each vector has a unit in its free column.
    pub fn null_space(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                set[col] = Some(row);
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -m[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Fraction-free Bareiss determinant.
    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return S::zero();
                };
                m.swap_rows(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)].clone() * m[(i, j)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = S::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl<S: Field> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Field> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Factored solver for repeated exact solves against a fixed matrix.
///
/// Reduces [A | I] once; solving A x = b applies the stored row transform
/// and reads the pivot coordinates (free variables pinned to zero). Returns
/// `None` for inconsistent systems.
#[derive(Debug, Clone)]
pub struct Solver<S: Field> {
    cols: usize,
    reduced: Mat<S>,
    pivots: Vec<usize>,
}

impl<S: Field> Solver<S> {
    pub fn new(a: &Mat<S>) -> Self {
        let mut aug = Mat::zero(a.rows(), a.cols() + a.rows());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                aug[(i, j)] = a[(i, j)].clone();
            }
            aug[(i, a.cols() + i)] = S::one();
        }
        // reduce only up to the original columns: run a bounded Gauss-Jordan
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols() {
            if r == aug.rows {
                break;
            }
            let Some(pr) = aug.pick_pivot(c, r) else {
                continue;
            };
            aug.swap_rows(r, pr);
            let pivot = aug[(r, c)].clone();
            if !pivot.is_one() {
                for j in 0..aug.cols {
                    if !aug[(r, j)].is_zero() {
                        aug[(r, j)] = aug[(r, j)].clone() / pivot.clone();
                    }
                }
            }
            for i in 0..aug.rows {
                if i == r || aug[(i, c)].is_zero() {
                    continue;
                }
                let factor = aug[(i, c)].clone();
                for j in 0..aug.cols {
                    if !aug[(r, j)].is_zero() {
                        let delta = factor.clone() * aug[(r, j)].clone();
                        aug[(i, j)] = aug[(i, j)].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Solver {
            cols: a.cols(),
            reduced: aug,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solve A x = b exactly; free variables are zero. `None` if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        let rows = self.reduced.rows();
        assert_eq!(b.len(), rows);
        let transform_row = |i: usize| -> S {
            let mut acc = S::zero();
            for (k, rhs) in b.iter().enumerate() {
                let t = &self.reduced[(i, self.cols + k)];
                if !t.is_zero() && !rhs.is_zero() {
                    acc = acc + t.clone() * rhs.clone();
                }
            }
            acc
        };
        let mut x = vec![S::zero(); self.cols];
        for (row, &col) in self.pivots.iter().enumerate() {
            x[col] = transform_row(row);
        }
        for row in self.pivots.len()..rows {
            if !transform_row(row).is_zero() {
                return None;
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    fn rmat(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_null_space() {
        let m = rmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            let prod = m.mul_vec(v);
            assert!(prod.iter().all(|x| x == &int(0)));
        }
    }

    #[test]
    fn determinant_bareiss() {
        assert_eq!(rmat(&[&[2, 0], &[0, 3]]).det(), int(6));
        assert_eq!(rmat(&[&[0, 1], &[1, 0]]).det(), int(-1));
        assert_eq!(rmat(&[&[1, 2], &[2, 4]]).det(), int(0));
        let m = rmat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        assert_eq!(m.det(), int(-90));
    }

    #[test]
    fn rational_entries_stay_exact() {
        let m = Mat::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 5)],
        ]);
        assert_eq!(m.det(), ratio(1, 10) - ratio(1, 12));
    }

    #[test]
    fn solver_round_trip() {
        let m = rmat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let solver = Solver::new(&m);
        assert_eq!(solver.rank(), 3);
        let b = vec![int(5), int(10), int(9)];
        let x = solver.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn solver_detects_inconsistency() {
        let m = rmat(&[&[1, 1], &[2, 2]]);
        let solver = Solver::new(&m);
        assert!(solver.solve(&[int(1), int(3)]).is_none());
        assert!(solver.solve(&[int(1), int(2)]).is_some());
    }

    #[test]
    fn identity_behaves() {
        let id: Mat<Rational> = Mat::identity(4);
        assert_eq!(id.det(), int(1));
        assert_eq!(id.rank(), 4);
        assert!(id.null_space().is_empty());
    }
}

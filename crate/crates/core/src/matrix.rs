//! Dense matrices over exact rationals, with reduced row echelon form as the
//! canonical workhorse. Pivot selection is the first nonzero entry in column
//! order, which makes every reduction (and everything built on it)
//! deterministic.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn vector_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(target: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    for (t, s) in target.iter_mut().zip(src) {
        *t += s * c;
    }
}

pub fn scale_vector(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn display_vector(v: &[Scalar]) -> String {
    let body: Vec<String> = v.iter().map(scalar::display).collect();
    format!("({})", body.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vector {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        Ok(out)
    }

    /// Matrix applied to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = zero_vector(self.rows);
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                acc += &self[(i, j)] * &v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    /// Pivots are found by scanning each column for the first nonzero entry
    /// below the current row.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() / &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = self[(i, j)].clone() - &factor * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right nullspace `{x : Mx = 0}`, one row per
    /// basis vector. The raw free-variable parametrization is canonicalized
    /// through a final RREF so the result is independent of presentation.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = zero_vector(self.cols);
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        let mut canon = Matrix::from_rows(basis);
        canon.rref_in_place();
        (0..canon.rows()).map(|i| canon.row_vec(i)).filter(|v| !vector_is_zero(v)).collect()
    }

    /// Particular solution of `Mx = b` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "right-hand side length");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| k != p) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::display).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Convenience constructor from integer literals, used heavily in tests.
pub fn mat_i64(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| scalar::int(x)).collect()).collect())
}

pub fn vec_i64(v: &[i64]) -> Vector {
    v.iter().map(|&x| scalar::int(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zero(2, 3);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_example() {
        let m = mat_i64(&[&[1, 2], &[2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, mat_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots.len(), 1);
    }

    #[test]
    fn nullspace_of_row() {
        let m = mat_i64(&[&[1, 2, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let prod = m.mul_vec(v).unwrap();
            assert!(vector_is_zero(&prod));
        }
        // The canonical basis must span (-2,1,0) and (0,0,1).
        let want = Matrix::from_rows(vec![vec_i64(&[-2, 1, 0]), vec_i64(&[0, 0, 1])]);
        let (a, _) = Matrix::from_rows(ns).rref();
        let (b, _) = want.rref();
        assert_eq!(a, b);
    }

    #[test]
    fn nullspace_of_invertible_is_empty() {
        let m = mat_i64(&[&[1, 1], &[0, 3]]);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat_i64(&[&[1, 2], &[2, 4]]);
        let sol = m.solve(&vec_i64(&[3, 6])).unwrap();
        assert_eq!(sol, vec![int(3), int(0)]);
        assert!(m.solve(&vec_i64(&[3, 7])).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv[(0, 0)], int(1));
        let singular = mat_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = Matrix::zero(2, 3);
        let b = Matrix::zero(2, 3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn rational_pivoting_stays_exact() {
        let m = Matrix::from_rows(vec![
            vec![frac(1, 3), frac(1, 2)],
            vec![frac(2, 3), frac(1, 1)],
        ]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r[(0, 1)], frac(3, 2));
    }

    #[test]
    fn zero_by_zero_edge() {
        let m = Matrix::zero(0, 0);
        assert_eq!(m.rank(), 0);
        assert!(m.nullspace().is_empty());
        assert_eq!(m.inverse().unwrap(), Matrix::zero(0, 0));
    }
}

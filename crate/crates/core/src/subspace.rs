//! Subspaces of Q^n held in a canonical form: the basis is the nonzero part
//! of the RREF of any spanning set, so two subspaces are equal exactly when
//! their stored bases are equal componentwise.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Rows of the canonical (RREF) basis.
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, Matrix::identity(ambient).to_rows())
    }

    /// Span of arbitrary vectors, canonicalized. Vectors of the wrong length
    /// are a programming error and panic.
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector length");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(vectors);
        m.rref_in_place();
        let basis = m
            .to_rows()
            .into_iter()
            .filter(|row| !matrix::vector_is_zero(row))
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zero(0, self.ambient)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        if matrix::vector_is_zero(v) {
            return true;
        }
        // Reduce v against the RREF basis; membership iff the residual dies.
        let mut residual = v.to_vec();
        for row in &self.basis {
            let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            if residual[pivot].is_zero() {
                continue;
            }
            let c = -residual[pivot].clone();
            matrix::add_scaled(&mut residual, row, &c);
        }
        matrix::vector_is_zero(&residual)
    }

    /// Coordinates of `v` in the stored basis, if the vector lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient {
            return None;
        }
        if self.basis.is_empty() {
            return matrix::vector_is_zero(v).then(Vec::new);
        }
        self.basis_matrix().transpose().solve(v)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.clone());
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Intersection computed from the kernel of [Uᵀ | -Vᵀ]: a joint
    /// coefficient vector (x, y) with Uᵀx = Vᵀy names a common element Uᵀx.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let du = self.dim();
        let dv = other.dim();
        let stacked = Matrix::from_fn(self.ambient, du + dv, |i, j| {
            if j < du {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - du][i].clone()
            }
        });
        let mut members = Vec::new();
        for coeffs in stacked.nullspace() {
            let mut w = matrix::zero_vector(self.ambient);
            for (k, row) in self.basis.iter().enumerate() {
                matrix::add_scaled(&mut w, row, &coeffs[k]);
            }
            members.push(w);
        }
        Ok(Subspace::span(self.ambient, members))
    }

    /// Representatives extending `sub` to a basis of `self`: standard greedy
    /// sweep over this subspace's basis vectors, keeping those that raise the
    /// rank. Errors unless `sub` is contained in `self`.
    pub fn quotient_representatives(&self, sub: &Subspace) -> Result<Vec<Vector>> {
        self.check_ambient(sub)?;
        if !self.contains(sub)? {
            return Err(Error::NotContained);
        }
        let mut current = sub.clone();
        let mut reps = Vec::new();
        for v in &self.basis {
            if current.dim() == self.dim() {
                break;
            }
            if !current.contains_vector(v) {
                reps.push(v.clone());
                current = current.sum(&Subspace::span(self.ambient, vec![v.clone()]))?;
            }
        }
        Ok(reps)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

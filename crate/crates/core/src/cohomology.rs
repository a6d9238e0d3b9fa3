//! Second cohomology of an algebra with scalar coefficients: the cocycle
//! space Z² cut out by the two Novikov compatibility conditions, the
//! coboundary space B² spanned by δf(x,y) = f(xy), and H² = Z²/B² with a
//! deterministic choice of representatives.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// A scalar-valued bilinear form θ on the algebra, stored as the matrix
/// Θ\[i]\[j] = θ(e_i, e_j). Forms are flattened row-major (index i·n + j) when
/// treated as vectors, and Δ_ij denotes the matrix unit at (i, j), written
/// D⟨i⟩⟨j⟩ with 1-based indices everywhere user-facing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    mat: Matrix,
}

impl BilinearForm {
    pub fn zero(n: usize) -> Self {
        BilinearForm { mat: Matrix::zero(n, n) }
    }

    pub fn from_matrix(mat: Matrix) -> Result<Self> {
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch { expected: mat.rows(), got: mat.cols() });
        }
        Ok(BilinearForm { mat })
    }

    /// Matrix unit Δ with 0-based indices: delta(n, i, j) is D⟨i+1⟩⟨j+1⟩.
    pub fn delta(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        m[(i, j)] = Scalar::one();
        BilinearForm { mat: m }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.mat[(i, j)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Scalar) {
        self.mat[(i, j)] = value;
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: x.len() });
        }
        if y.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: y.len() });
        }
        let mut acc = Scalar::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[j].is_zero() {
                    acc += &x[i] * &y[j] * &self.mat[(i, j)];
                }
            }
        }
        Ok(acc)
    }

    pub fn flatten(&self) -> Vector {
        let n = self.dim();
        let mut v = matrix::zero_vector(n * n);
        for i in 0..n {
            for j in 0..n {
                v[i * n + j] = self.mat[(i, j)].clone();
            }
        }
        v
    }

    pub fn from_flat(n: usize, v: &[Scalar]) -> Result<Self> {
        if v.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: v.len() });
        }
        Ok(BilinearForm { mat: Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()) })
    }

    pub fn is_zero(&self) -> bool {
        matrix::vector_is_zero(&self.flatten())
    }

    pub fn linear_combination(n: usize, terms: &[(Scalar, &BilinearForm)]) -> Result<Self> {
        let mut acc = BilinearForm::zero(n);
        for (coeff, form) in terms {
            if form.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: form.dim() });
            }
            for i in 0..n {
                for j in 0..n {
                    let add = coeff * form.entry(i, j);
                    let v = acc.entry(i, j).clone() + add;
                    acc.set_entry(i, j, v);
                }
            }
        }
        Ok(acc)
    }
}

impl std::fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.dim();
        let mut parts = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.entry(i, j);
                if c.is_zero() {
                    continue;
                }
                let label = format!("D{}{}", i + 1, j + 1);
                if c.is_one() {
                    parts.push(label);
                } else if (-c.clone()).is_one() {
                    parts.push(format!("-{label}"));
                } else {
                    parts.push(format!("{} {}", scalar::display(c), label));
                }
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

/// First failed cocycle condition of θ on `a`, as (condition name, i, j, k)
/// with 0-based triple, or None when θ ∈ Z².
pub fn first_cocycle_violation(
    a: &Algebra,
    theta: &BilinearForm,
) -> Option<(&'static str, usize, usize, usize)> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let eij = a.basis_product(i, j);
                let eik = a.basis_product(i, k);
                let ek = matrix::unit_vector(n, k);
                let ej = matrix::unit_vector(n, j);
                let rc = theta.apply(&eij, &ek).unwrap() - theta.apply(&eik, &ej).unwrap();
                if !rc.is_zero() {
                    return Some(("theta(xy,z) = theta(xz,y)", i, j, k));
                }
                let ei = matrix::unit_vector(n, i);
                let eji = a.basis_product(j, i);
                let ejk = a.basis_product(j, k);
                let ls = theta.apply(&eij, &ek).unwrap() - theta.apply(&ei, &ejk).unwrap()
                    - theta.apply(&eji, &ek).unwrap()
                    + theta.apply(&ej, &eik).unwrap();
                if !ls.is_zero() {
                    return Some(("theta(xy,z)-theta(x,yz) = theta(yx,z)-theta(y,xz)", i, j, k));
                }
            }
        }
    }
    None
}

pub fn is_cocycle(a: &Algebra, theta: &BilinearForm) -> bool {
    first_cocycle_violation(a, theta).is_none()
}

fn cocycle_error(a: &Algebra, theta: &BilinearForm) -> Error {
    match first_cocycle_violation(a, theta) {
        Some((condition, i, j, k)) => Error::NotACocycle { condition, i, j, k },
        None => Error::Invalid("form unexpectedly passed the cocycle test".into()),
    }
}

/// Z²(A): nullspace of the linear system imposed by
/// θ(e_i e_j, e_k) = θ(e_i e_k, e_j) and
/// θ(e_i e_j, e_k) − θ(e_i, e_j e_k) = θ(e_j e_i, e_k) − θ(e_j, e_i e_k)
/// over the n² unknowns Θ\[l]\[m], flattened row-major.
pub fn cocycle_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut rows: Vec<Vector> = Vec::with_capacity(2 * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut rc = matrix::zero_vector(n * n);
                for l in 0..n {
                    rc[l * n + k] += a.c(i, j, l);
                    rc[l * n + j] -= a.c(i, k, l);
                }
                rows.push(rc);
                let mut ls = matrix::zero_vector(n * n);
                for l in 0..n {
                    ls[l * n + k] += a.c(i, j, l);
                    ls[l * n + k] -= a.c(j, i, l);
                }
                for m in 0..n {
                    ls[i * n + m] -= a.c(j, k, m);
                    ls[j * n + m] += a.c(i, k, m);
                }
                rows.push(ls);
            }
        }
    }
    Subspace::span(n * n, Matrix::from_rows(rows).nullspace())
}

/// B²(A): span of the matrices C_k with (C_k)\[i]\[j] = c\[i]\[j]\[k], i.e. all
/// δf(x,y) = f(xy) for linear functionals f.
pub fn coboundary_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut spanning = Vec::with_capacity(n);
    for k in 0..n {
        let mut flat = matrix::zero_vector(n * n);
        for i in 0..n {
            for j in 0..n {
                flat[i * n + j] = a.c(i, j, k).clone();
            }
        }
        spanning.push(flat);
    }
    Subspace::span(n * n, spanning)
}

#[derive(Debug, Clone)]
pub struct CohomologyData {
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_reps: Vec<BilinearForm>,
    /// Columns: flattened h2_reps then the B² basis; reduce_class solves
    /// against this matrix.
    reduction: Matrix,
    dim: usize,
}

impl CohomologyData {
    pub fn h2_dim(&self) -> usize {
        self.h2_reps.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.dim
    }
}

pub fn cohomology(a: &Algebra) -> CohomologyData {
    let z2 = cocycle_space(a);
    let b2 = coboundary_space(a);
    assert!(z2.contains(&b2).expect("same ambient"), "B2 not inside Z2");
    let reps = z2.quotient_representatives(&b2).expect("B2 inside Z2");
    let n = a.dim();
    let mut columns: Vec<Vector> = reps.clone();
    columns.extend(b2.basis().iter().cloned());
    let reduction = if columns.is_empty() {
        Matrix::zero(n * n, 0)
    } else {
        Matrix::from_rows(columns).transpose()
    };
    CohomologyData {
        z2,
        b2,
        h2_reps: reps
            .into_iter()
            .map(|v| BilinearForm::from_flat(n, &v).expect("flat length"))
            .collect(),
        reduction,
        dim: n,
    }
}

/// Coordinates of \[θ] in the h2_reps basis. Errors with the violated
/// condition when θ is not a cocycle of `a`.
pub fn reduce_class(a: &Algebra, data: &CohomologyData, theta: &BilinearForm) -> Result<Vector> {
    if theta.dim() != data.dim {
        return Err(Error::DimensionMismatch { expected: data.dim, got: theta.dim() });
    }
    let flat = theta.flatten();
    if !data.z2.contains_vector(&flat) {
        return Err(cocycle_error(a, theta));
    }
    let solution = data
        .reduction
        .solve(&flat)
        .ok_or(Error::Invalid("cocycle failed to reduce against Z2 basis".into()))?;
    Ok(solution[..data.h2_reps.len()].to_vec())
}

/// Ann(θ) = {x : θ(x, A) = 0 and θ(A, x) = 0}: the joint nullspace of Θᵀ
/// and Θ.
pub fn cocycle_annihilator(a: &Algebra, theta: &BilinearForm) -> Result<Subspace> {
    let n = a.dim();
    if theta.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: theta.dim() });
    }
    let mut stacked = Matrix::zero(2 * n, n);
    for i in 0..n {
        for j in 0..n {
            stacked[(i, j)] = theta.entry(j, i).clone();
            stacked[(n + i, j)] = theta.entry(i, j).clone();
        }
    }
    Ok(Subspace::span(n, stacked.nullspace()))
}

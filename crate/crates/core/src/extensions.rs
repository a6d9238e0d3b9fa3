//! Central extensions A_θ = A ⊕ V with product xy + Σ_t θ_t(x,y)·e_{n+t},
//! together with the two gatekeeping predicates of the extension method:
//! no annihilator component (classes independent in H²) and admissibility
//! (⋂ Ann(θ_i) ∩ Ann(A) = 0), plus the inverse construction A → A/Ann(A).

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::cohomology::{self, BilinearForm, CohomologyData};
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::subspace::Subspace;

/// Build A_θ without checking that the forms are cocycles. The result is
/// Novikov iff every form is; see `central_extension` for the checked path.
pub fn central_extension_unchecked(base: &Algebra, cocycles: &[BilinearForm]) -> Result<Algebra> {
    let n = base.dim();
    let s = cocycles.len();
    if s == 0 {
        return Err(Error::Invalid("central extension needs at least one form".into()));
    }
    for theta in cocycles {
        if theta.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: theta.dim() });
        }
    }
    let mut ext = Algebra::zero(n + s);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = base.c(i, j, k);
                if !c.is_zero() {
                    ext.add_term(i, j, c.clone(), k)?;
                }
            }
            for (t, theta) in cocycles.iter().enumerate() {
                let v = theta.entry(i, j);
                if !v.is_zero() {
                    ext.add_term(i, j, v.clone(), n + t)?;
                }
            }
        }
    }
    Ok(ext)
}

/// Checked central extension: every form must lie in Z²(base).
pub fn central_extension(base: &Algebra, cocycles: &[BilinearForm]) -> Result<Algebra> {
    for theta in cocycles {
        if theta.dim() != base.dim() {
            return Err(Error::DimensionMismatch { expected: base.dim(), got: theta.dim() });
        }
        if let Some((condition, i, j, k)) = cohomology::first_cocycle_violation(base, theta) {
            return Err(Error::NotACocycle { condition, i, j, k });
        }
    }
    central_extension_unchecked(base, cocycles)
}

/// True iff the extension defined by these cocycles has an annihilator
/// component, i.e. the classes \[θ_1], …, \[θ_s] are linearly dependent in H².
pub fn has_annihilator_component(
    a: &Algebra,
    data: &CohomologyData,
    cocycles: &[BilinearForm],
) -> Result<bool> {
    let mut class_rows = Vec::with_capacity(cocycles.len());
    for theta in cocycles {
        class_rows.push(cohomology::reduce_class(a, data, theta)?);
    }
    let rank = if data.h2_dim() == 0 {
        0
    } else {
        Matrix::from_rows(class_rows).rank()
    };
    Ok(rank < cocycles.len())
}

/// Joint annihilator ⋂_i Ann(θ_i) ∩ Ann(A).
pub fn joint_annihilator(a: &Algebra, cocycles: &[BilinearForm]) -> Result<Subspace> {
    let mut acc = a.annihilator();
    for theta in cocycles {
        acc = acc.intersect(&cohomology::cocycle_annihilator(a, theta)?)?;
    }
    Ok(acc)
}

/// Admissibility in the sense of T_s(A): ⋂ Ann(θ_i) ∩ Ann(A) = 0, so the
/// extension's annihilator is exactly the new space V. Each form must be a
/// cocycle.
pub fn is_admissible(a: &Algebra, cocycles: &[BilinearForm]) -> Result<bool> {
    for theta in cocycles {
        if let Some((condition, i, j, k)) = cohomology::first_cocycle_violation(a, theta) {
            return Err(Error::NotACocycle { condition, i, j, k });
        }
    }
    Ok(joint_annihilator(a, cocycles)?.is_zero())
}

/// A/Ann(A) realized on the lexicographically first standard basis vectors
/// that complete Ann(A); the product is the projection of the representative
/// product along Ann(A).
pub fn quotient_by_annihilator(a: &Algebra) -> Algebra {
    let n = a.dim();
    let ann = a.annihilator();
    let mut picks: Vec<usize> = Vec::new();
    let mut current = ann.clone();
    for i in 0..n {
        if current.dim() == n {
            break;
        }
        let e = matrix::unit_vector(n, i);
        if !current.contains_vector(&e) {
            picks.push(i);
            current = current
                .sum(&Subspace::span(n, vec![e]))
                .expect("ambient fixed");
        }
    }
    let q = picks.len();
    // Change-of-basis matrix: columns are the picked vectors then Ann(A).
    let mut columns: Vec<Vector> = picks.iter().map(|&i| matrix::unit_vector(n, i)).collect();
    columns.extend(ann.basis().iter().cloned());
    let basis = Matrix::from_rows(columns).transpose();
    let mut out = Algebra::zero(q);
    for (bi, &i) in picks.iter().enumerate() {
        for (bj, &j) in picks.iter().enumerate() {
            let product = a.basis_product(i, j);
            let coords = basis.solve(&product).expect("basis spans the algebra");
            for k in 0..q {
                if !coords[k].is_zero() {
                    out.add_term(bi, bj, coords[k].clone(), k).expect("index in range");
                }
            }
        }
    }
    out
}

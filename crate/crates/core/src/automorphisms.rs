//! Automorphisms and their action on cocycles: φθ(x,y) = θ(φx, φy), i.e.
//! Θ ↦ φᵀΘφ with basis images as columns. Automorphism groups enter as
//! parameterized matrix templates that are verified on instantiation, and
//! the printed α* coordinate formulas are checked against the matrix
//! computation on seeded random samples.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::Algebra;
use crate::cohomology::{self, BilinearForm, CohomologyData};
use crate::error::{Error, Result};
use crate::expr::{Bindings, Expr};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// True iff `m` is invertible and multiplicative on all basis pairs:
/// m(e_i·e_j) = (m e_i)·(m e_j).
pub fn is_automorphism(a: &Algebra, m: &Matrix) -> Result<bool> {
    let n = a.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.rows().max(m.cols()) });
    }
    if !m.is_invertible() {
        return Ok(false);
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = m.mul_vec(&a.basis_product(i, j))?;
            let rhs = a.multiply(&m.col_vec(i), &m.col_vec(j))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pullback action on bilinear forms: (φθ)(x,y) = θ(φx, φy) = (φᵀΘφ)(x,y).
pub fn act_on_cocycle(m: &Matrix, theta: &BilinearForm) -> Result<BilinearForm> {
    if m.rows() != theta.dim() || m.cols() != theta.dim() {
        return Err(Error::DimensionMismatch { expected: theta.dim(), got: m.rows() });
    }
    let acted = m.transpose().mul(theta.matrix())?.mul(m)?;
    BilinearForm::from_matrix(acted)
}

/// Coordinates of \[θ] in a declared ∇ basis of H² (rather than the internal
/// canonical representatives): solve Rᵀ·x = reduce(θ) where R's rows are the
/// ∇ classes in canonical coordinates.
pub fn class_coordinates_in(
    a: &Algebra,
    data: &CohomologyData,
    nablas: &[BilinearForm],
    theta: &BilinearForm,
) -> Result<Vector> {
    let mut rows = Vec::with_capacity(nablas.len());
    for nabla in nablas {
        rows.push(cohomology::reduce_class(a, data, nabla)?);
    }
    let target = cohomology::reduce_class(a, data, theta)?;
    if nablas.is_empty() {
        return if target.iter().all(Zero::is_zero) {
            Ok(Vector::new())
        } else {
            Err(Error::Invalid("class outside the declared basis".into()))
        };
    }
    Matrix::from_rows(rows)
        .transpose()
        .solve(&target)
        .ok_or(Error::Invalid("class outside the declared basis".into()))
}

/// A parameterized family of automorphisms: an n×n grid of expressions in
/// template variables (and catalog parameters), with nonvanishing
/// constraints. Instantiations are verified, not trusted.
#[derive(Debug, Clone)]
pub struct AutTemplate {
    entries: Vec<Vec<Expr>>,
    nonzero: Vec<Expr>,
}

impl AutTemplate {
    /// Rows are comma-separated expression lists, e.g.
    /// `["x, 0, 0", "y, x^2, 0", "z, x*y, x^3"]`.
    pub fn parse(rows: &[&str], nonzero: &[&str]) -> Result<AutTemplate> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n);
        for (line, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != n {
                return Err(Error::Invalid(format!(
                    "template row {} has {} entries, expected {}",
                    line + 1,
                    cells.len(),
                    n
                )));
            }
            let mut parsed = Vec::with_capacity(n);
            for cell in cells {
                parsed.push(Expr::parse_at(cell.trim(), line + 1)?);
            }
            entries.push(parsed);
        }
        let nonzero = nonzero
            .iter()
            .map(|c| Expr::parse(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(AutTemplate { entries, nonzero })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Template variables: everything mentioned that `params` does not bind.
    pub fn variables(&self, params: &Bindings) -> Vec<String> {
        let mut vars = std::collections::BTreeSet::new();
        for row in &self.entries {
            for e in row {
                vars.extend(e.vars());
            }
        }
        for c in &self.nonzero {
            vars.extend(c.vars());
        }
        vars.into_iter().filter(|v| !params.contains_key(v)).collect()
    }

    /// Evaluate at a full binding; all nonvanishing constraints must hold.
    pub fn instantiate(&self, env: &Bindings) -> Result<Matrix> {
        for c in &self.nonzero {
            if c.eval(env)?.is_zero() {
                return Err(Error::Invalid(format!("template constraint {c} = 0 violated")));
            }
        }
        let n = self.n();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.entries[i][j].eval(env)?;
            }
        }
        Ok(m)
    }

    /// Draw random small rationals for all unbound template variables until
    /// the nonvanishing constraints hold, and instantiate. Deterministic for
    /// a fixed RNG state.
    pub fn sample(&self, rng: &mut impl Rng, params: &Bindings) -> Result<(Bindings, Matrix)> {
        let vars = self.variables(params);
        for _ in 0..200 {
            let mut env = params.clone();
            for v in &vars {
                env.insert(v.clone(), random_scalar(rng));
            }
            match self.instantiate(&env) {
                Ok(m) => {
                    if m.is_invertible() {
                        return Ok((env, m));
                    }
                }
                Err(Error::Invalid(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Invalid("no constraint-satisfying template sample found".into()))
    }
}

/// Small random rational with numerator in [-3, 3] and denominator in {1, 2}.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let numer = rng.gen_range(-3i64..=3);
    let denom = rng.gen_range(1i64..=2);
    scalar::frac(numer, denom)
}

/// Printed coordinate action: expressions for α*_i in the variables
/// alpha1…alphar, the template variables, and the catalog parameters.
#[derive(Debug, Clone)]
pub struct ActionFormula {
    pub exprs: Vec<Expr>,
}

impl ActionFormula {
    pub fn parse(exprs: &[&str]) -> Result<ActionFormula> {
        Ok(ActionFormula {
            exprs: exprs.iter().map(|e| Expr::parse(e)).collect::<Result<Vec<_>>>()?,
        })
    }
}

#[derive(Debug, Clone)]
pub struct ActionCheck {
    pub samples_run: usize,
    pub mismatches: Vec<String>,
}

impl ActionCheck {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verify that the α* formula agrees with the matrix computation
/// reduce(φᵀ(Σ α_i ∇_i)φ) on `samples` seeded random instantiations.
pub fn verify_action_formula(
    a: &Algebra,
    data: &CohomologyData,
    nablas: &[BilinearForm],
    template: &AutTemplate,
    formula: &ActionFormula,
    params: &Bindings,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<ActionCheck> {
    if formula.exprs.len() != nablas.len() {
        return Err(Error::DimensionMismatch {
            expected: nablas.len(),
            got: formula.exprs.len(),
        });
    }
    let mut mismatches = Vec::new();
    for run in 0..samples {
        let (mut env, m) = template.sample(rng, params)?;
        if !is_automorphism(a, &m)? {
            mismatches.push(format!("sample {run}: instantiation is not an automorphism"));
            continue;
        }
        let mut terms = Vec::with_capacity(nablas.len());
        for (i, nabla) in nablas.iter().enumerate() {
            let alpha = random_scalar(rng);
            env.insert(format!("alpha{}", i + 1), alpha.clone());
            terms.push((alpha, nabla));
        }
        let theta = BilinearForm::linear_combination(a.dim(), &terms)?;
        let acted = act_on_cocycle(&m, &theta)?;
        let actual = class_coordinates_in(a, data, nablas, &acted)?;
        for (i, expr) in formula.exprs.iter().enumerate() {
            let expected = expr.eval(&env)?;
            if actual[i] != expected {
                mismatches.push(format!(
                    "sample {run}: alpha{}* = {} from the matrix action but {} from the formula",
                    i + 1,
                    scalar::display(&actual[i]),
                    scalar::display(&expected)
                ));
            }
        }
    }
    Ok(ActionCheck { samples_run: samples, mismatches })
}

/// Push W1 ⊆ H² through the automorphism `m` and compare with W2: subspaces
/// are given in the canonical representative coordinates of `data`.
pub fn same_orbit(
    a: &Algebra,
    data: &CohomologyData,
    w1: &Subspace,
    w2: &Subspace,
    m: &Matrix,
) -> Result<bool> {
    if !is_automorphism(a, m)? {
        return Err(Error::NotAutomorphism);
    }
    let r = data.h2_dim();
    let mut pushed = Vec::new();
    for coords in w1.basis() {
        let terms: Vec<(Scalar, &BilinearForm)> = coords
            .iter()
            .cloned()
            .zip(data.h2_reps.iter())
            .collect();
        let theta = BilinearForm::linear_combination(a.dim(), &terms)?;
        let acted = act_on_cocycle(m, &theta)?;
        pushed.push(cohomology::reduce_class(a, data, &acted)?);
    }
    Subspace::span(r, pushed).equal(w2)
}

//! Algebras given by structure constants over Q, together with the predicates
//! this crate revolves around: the Novikov identities, nilpotency, annihilators,
//! one-generatedness, and generator words (straight-line product expressions
//! that rebuild each basis element from the generator).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// The two defining identities, checked on basis triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NovikovIdentity {
    RightCommutative,
    LeftSymmetric,
}

impl std::fmt::Display for NovikovIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NovikovIdentity::RightCommutative => write!(f, "right-commutative"),
            NovikovIdentity::LeftSymmetric => write!(f, "left-symmetric"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityViolation {
    pub identity: NovikovIdentity,
    /// 0-based basis indices (i, j, k) of the witnessing triple.
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl std::fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (i, j, k) = self.triple;
        write!(
            f,
            "{} identity fails at (e{}, e{}, e{}): residual {}",
            self.identity,
            i + 1,
            j + 1,
            k + 1,
            matrix::display_vector(&self.residual)
        )
    }
}

/// Isomorphism-invariant signature. Equality is necessary (not sufficient)
/// for two algebras to be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub power_chain: Vec<usize>,
    pub ann_dim: usize,
    pub left_ann_dim: usize,
    pub right_ann_dim: usize,
    pub a_a2_dim: usize,
    pub a2_a_dim: usize,
    pub commutative: bool,
}

impl Fingerprint {
    /// Named components, in comparison order, for certificates and reports.
    pub fn components(&self) -> Vec<(&'static str, String)> {
        vec![
            ("dim", self.dim.to_string()),
            ("power_chain", format!("{:?}", self.power_chain)),
            ("annihilator_dim", self.ann_dim.to_string()),
            ("left_annihilator_dim", self.left_ann_dim.to_string()),
            ("right_annihilator_dim", self.right_ann_dim.to_string()),
            ("dim_A_A2", self.a_a2_dim.to_string()),
            ("dim_A2_A", self.a2_a_dim.to_string()),
            ("commutative", self.commutative.to_string()),
        ]
    }
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.components().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// One step of a generator word: either a product of two already-derived
/// basis images, or an already-derived basis image itself (a correction term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordTerm {
    Prod(usize, usize),
    Elem(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Generator,
    Combo(Vec<(Scalar, WordTerm)>),
}

/// Straight-line presentation of every basis element from a single generator:
/// `order` starts at the generator and each later element's word refers only
/// to earlier elements. This is what lets an isomorphism candidate be
/// determined by the generator's image alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWords {
    pub generator: usize,
    pub order: Vec<usize>,
    pub words: Vec<Word>,
}

impl GeneratorWords {
    /// Evaluate the words inside `target`, seeding the generator with
    /// `gen_image`. Returns the image of each source basis element.
    pub fn evaluate_in(&self, target: &Algebra, gen_image: &[Scalar]) -> Result<Vec<Vector>> {
        if gen_image.len() != target.dim() {
            return Err(Error::DimensionMismatch { expected: target.dim(), got: gen_image.len() });
        }
        let mut images: Vec<Option<Vector>> = vec![None; self.words.len()];
        for &k in &self.order {
            let img = match &self.words[k] {
                Word::Generator => gen_image.to_vec(),
                Word::Combo(terms) => {
                    let mut acc = matrix::zero_vector(target.dim());
                    for (coeff, term) in terms {
                        let value = match term {
                            WordTerm::Prod(a, b) => {
                                let (ia, ib) = (resolved(&images, *a)?, resolved(&images, *b)?);
                                target.multiply(ia, ib)?
                            }
                            WordTerm::Elem(d) => resolved(&images, *d)?.to_vec(),
                        };
                        matrix::add_scaled(&mut acc, &value, coeff);
                    }
                    acc
                }
            };
            images[k] = Some(img);
        }
        images
            .into_iter()
            .map(|img| img.ok_or(Error::Invalid("generator words do not cover every basis element".into())))
            .collect()
    }
}

fn resolved<'a>(images: &'a [Option<Vector>], idx: usize) -> Result<&'a Vector> {
    images
        .get(idx)
        .and_then(|v| v.as_ref())
        .ok_or(Error::Invalid(format!("generator word refers to underived element e{}", idx + 1)))
}

#[derive(Debug, Clone)]
pub struct Algebra {
    dim: usize,
    /// Structure constants, index (i·n + j)·n + k for e_i·e_j = Σ_k c_ijk e_k.
    structure: Vec<Scalar>,
    labels: Vec<String>,
    generator_words: Option<GeneratorWords>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.structure == other.structure
    }
}
impl Eq for Algebra {}

impl Algebra {
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            structure: vec![Scalar::zero(); dim * dim * dim],
            labels: (1..=dim).map(|i| format!("e{i}")).collect(),
            generator_words: None,
        }
    }

    /// Build from a sparse product list: `(i, j, [(coeff, k), …])` meaning
    /// e_i·e_j = Σ coeff·e_k, all indices 0-based.
    pub fn from_products(dim: usize, products: &[(usize, usize, Vec<(Scalar, usize)>)]) -> Result<Self> {
        let mut a = Algebra::zero(dim);
        for (i, j, combo) in products {
            for (coeff, k) in combo {
                a.add_term(*i, *j, coeff.clone(), *k)?;
            }
        }
        Ok(a)
    }

    pub fn add_term(&mut self, i: usize, j: usize, coeff: Scalar, k: usize) -> Result<()> {
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(Error::IndexOutOfRange { index: idx + 1, dim: self.dim });
            }
        }
        let pos = (i * self.dim + j) * self.dim + k;
        self.structure[pos] += coeff;
        Ok(())
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: &[Scalar]) -> Result<()> {
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: value.len() });
        }
        for (k, coeff) in value.iter().enumerate() {
            let pos = (i * self.dim + j) * self.dim + k;
            self.structure[pos] = coeff.clone();
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Product of basis elements, e_i·e_j, as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.structure[start..start + self.dim].to_vec()
    }

    pub fn generator_words(&self) -> Option<&GeneratorWords> {
        self.generator_words.as_ref()
    }

    pub fn set_generator_words(&mut self, words: GeneratorWords) -> Result<()> {
        self.verify_generator_words(&words)?;
        self.generator_words = Some(words);
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: u.len() });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let mut out = matrix::zero_vector(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let factor = &u[i] * &v[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &factor;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Scan all basis triples for failures of right-commutativity
    /// (xy)z = (xz)y and left-symmetry (xy)z - x(yz) = (yx)z - y(xz).
    /// Both identities are trilinear, so basis triples decide them.
    pub fn check_novikov(&self) -> Vec<IdentityViolation> {
        let n = self.dim;
        let mut violations = Vec::new();
        let e: Vec<Vector> = (0..n).map(|i| matrix::unit_vector(n, i)).collect();
        let prod = |u: &Vector, v: &Vector| self.multiply(u, v).expect("basis product");
        for i in 0..n {
            for j in 0..n {
                let eij = self.basis_product(i, j);
                let eji = self.basis_product(j, i);
                for k in 0..n {
                    let mut rc = prod(&eij, &e[k]);
                    let xz_y = prod(&self.basis_product(i, k), &e[j]);
                    for (a, b) in rc.iter_mut().zip(&xz_y) {
                        *a -= b;
                    }
                    if !matrix::vector_is_zero(&rc) {
                        violations.push(IdentityViolation {
                            identity: NovikovIdentity::RightCommutative,
                            triple: (i, j, k),
                            residual: rc,
                        });
                    }
                    let mut ls = prod(&eij, &e[k]);
                    let x_yz = prod(&e[i], &self.basis_product(j, k));
                    let yx_z = prod(&eji, &e[k]);
                    let y_xz = prod(&e[j], &self.basis_product(i, k));
                    for (((a, b), c), d) in ls.iter_mut().zip(&x_yz).zip(&yx_z).zip(&y_xz) {
                        *a -= b;
                        *a -= c;
                        *a += d;
                    }
                    if !matrix::vector_is_zero(&ls) {
                        violations.push(IdentityViolation {
                            identity: NovikovIdentity::LeftSymmetric,
                            triple: (i, j, k),
                            residual: ls,
                        });
                    }
                }
            }
        }
        violations
    }

    pub fn is_novikov(&self) -> bool {
        self.check_novikov().is_empty()
    }

    /// Span of all products u·v with u in `left`, v in `right`.
    pub fn product_subspace(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for u in left.basis() {
            for v in right.basis() {
                products.push(self.multiply(u, v).expect("subspace product"));
            }
        }
        Subspace::span(self.dim, products)
    }

    /// The descending powers A¹ ⊇ A² ⊇ …, A^k = Σ_{i+j=k} A^i·A^j, as
    /// subspaces. Stops after the first zero or the first repeat.
    pub fn power_subspaces(&self) -> Vec<Subspace> {
        let mut powers = vec![Subspace::full(self.dim)];
        loop {
            let k = powers.len() + 1;
            let mut next = Subspace::zero(self.dim);
            for i in 1..k {
                let part = self.product_subspace(&powers[i - 1], &powers[k - i - 1]);
                next = next.sum(&part).expect("ambient fixed");
            }
            let stabilized = next.dim() == powers.last().unwrap().dim();
            let is_zero = next.is_zero();
            powers.push(next);
            if is_zero || stabilized {
                return powers;
            }
        }
    }

    /// Dimension chain of the power subspaces, e.g. [4, 3, 2, 0] or [3, 0].
    /// Nilpotent iff the chain ends in 0.
    pub fn power_chain(&self) -> Vec<usize> {
        self.power_subspaces().iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.power_chain().last().copied() == Some(0) || self.dim == 0
    }

    /// A² as a subspace.
    pub fn square(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.product_subspace(&full, &full)
    }

    /// {x : xA = 0}, from the linear system Σ_i c\[i]\[j]\[k] x_i = 0 over (j,k).
    pub fn left_annihilator(&self) -> Subspace {
        let n = self.dim;
        let m = Matrix::from_fn(n * n, n, |row, i| self.c(i, row / n, row % n).clone());
        Subspace::span(n, m.nullspace())
    }

    /// {x : Ax = 0}.
    pub fn right_annihilator(&self) -> Subspace {
        let n = self.dim;
        let m = Matrix::from_fn(n * n, n, |row, i| self.c(row / n, i, row % n).clone());
        Subspace::span(n, m.nullspace())
    }

    /// Two-sided annihilator {x : xA + Ax = 0}.
    pub fn annihilator(&self) -> Subspace {
        self.left_annihilator()
            .intersect(&self.right_annihilator())
            .expect("same ambient")
    }

    /// Smallest subspace containing `seed` and closed under the product.
    pub fn subalgebra_closure(&self, seed: Vec<Vector>) -> Subspace {
        let mut s = Subspace::span(self.dim, seed);
        loop {
            let grown = s.sum(&self.product_subspace(&s, &s)).expect("ambient fixed");
            if grown.dim() == s.dim() {
                return grown;
            }
            s = grown;
        }
    }

    /// One-generatedness for nilpotent algebras: dim A/A² = 1, with the
    /// witness (first standard basis vector outside A²) additionally checked
    /// to generate the whole algebra. Errors when not nilpotent.
    pub fn is_one_generated(&self) -> Result<(bool, Option<Vector>)> {
        let chain = self.power_chain();
        if self.dim > 0 && chain.last().copied() != Some(0) {
            return Err(Error::NotNilpotent { stabilized_dim: *chain.last().unwrap() });
        }
        let sq = self.square();
        if self.dim != sq.dim() + 1 {
            return Ok((false, None));
        }
        let witness = (0..self.dim)
            .map(|i| matrix::unit_vector(self.dim, i))
            .find(|v| !sq.contains_vector(v))
            .expect("codim 1 leaves a basis vector outside");
        let closure = self.subalgebra_closure(vec![witness.clone()]);
        Ok((closure.dim() == self.dim, Some(witness)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i))
        })
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let full = Subspace::full(self.dim);
        let sq = self.square();
        Fingerprint {
            dim: self.dim,
            power_chain: self.power_chain(),
            ann_dim: self.annihilator().dim(),
            left_ann_dim: self.left_annihilator().dim(),
            right_ann_dim: self.right_annihilator().dim(),
            a_a2_dim: self.product_subspace(&full, &sq).dim(),
            a2_a_dim: self.product_subspace(&sq, &full).dim(),
            commutative: self.is_commutative(),
        }
    }

    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let n = self.dim;
        let m = other.dim;
        let mut out = Algebra::zero(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.structure[((i * (n + m)) + j) * (n + m) + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    out.structure[(((n + i) * (n + m)) + n + j) * (n + m) + n + k] =
                        other.c(i, j, k).clone();
                }
            }
        }
        out
    }

    /// Check that `words` really rebuild every basis element inside `self`.
    pub fn verify_generator_words(&self, words: &GeneratorWords) -> Result<()> {
        if words.words.len() != self.dim || words.order.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: words.words.len() });
        }
        if words.order.first().copied() != Some(words.generator)
            || !matches!(words.words[words.generator], Word::Generator)
        {
            return Err(Error::Invalid("generator word list must start at the generator".into()));
        }
        let gen_image = matrix::unit_vector(self.dim, words.generator);
        let images = words.evaluate_in(self, &gen_image)?;
        for (k, img) in images.iter().enumerate() {
            if *img != matrix::unit_vector(self.dim, k) {
                return Err(Error::Invalid(format!(
                    "generator word for e{} evaluates to {}",
                    k + 1,
                    matrix::display_vector(img)
                )));
            }
        }
        Ok(())
    }

    /// Mechanically derive generator words: starting from the one-generated
    /// witness, repeatedly express a new basis element as a combination of
    /// products of already-derived elements (plus already-derived correction
    /// terms). The catalog tables are triangular in exactly this sense.
    pub fn derive_generator_words(&self) -> Result<GeneratorWords> {
        let (ok, witness) = self.is_one_generated()?;
        if !ok {
            return Err(Error::NotOneGenerated);
        }
        let witness = witness.expect("witness accompanies true");
        let generator = witness
            .iter()
            .position(|x| x.is_one())
            .expect("witness is a standard basis vector");

        let n = self.dim;
        let mut words: Vec<Option<Word>> = vec![None; n];
        let mut order = vec![generator];
        words[generator] = Some(Word::Generator);

        'outer: while order.len() < n {
            // Columns: products of derived pairs (lex in derivation order),
            // then the derived elements themselves as correction terms.
            let mut terms = Vec::new();
            let mut columns = Vec::new();
            for &a in &order {
                for &b in &order {
                    terms.push(WordTerm::Prod(a, b));
                    columns.push(self.basis_product(a, b));
                }
            }
            for &d in &order {
                terms.push(WordTerm::Elem(d));
                columns.push(matrix::unit_vector(n, d));
            }
            let m = Matrix::from_fn(n, columns.len(), |r, c| columns[c][r].clone());
            for k in 0..n {
                if words[k].is_some() {
                    continue;
                }
                if let Some(coords) = m.solve(&matrix::unit_vector(n, k)) {
                    let combo: Vec<(Scalar, WordTerm)> = coords
                        .into_iter()
                        .zip(&terms)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, t)| (c, t.clone()))
                        .collect();
                    words[k] = Some(Word::Combo(combo));
                    order.push(k);
                    continue 'outer;
                }
            }
            return Err(Error::Invalid(
                "no triangular generator-word presentation found".into(),
            ));
        }

        let gw = GeneratorWords {
            generator,
            order,
            words: words.into_iter().map(|w| w.expect("all derived")).collect(),
        };
        self.verify_generator_words(&gw)?;
        Ok(gw)
    }

    /// Convenience: derive and attach generator words.
    pub fn with_generator_words(mut self) -> Result<Self> {
        let words = self.derive_generator_words()?;
        self.generator_words = Some(words);
        Ok(self)
    }
}

impl std::fmt::Display for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut any = false;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if matrix::vector_is_zero(&p) {
                    continue;
                }
                let terms: Vec<String> = p
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            self.labels[k].clone()
                        } else {
                            format!("{} {}", scalar::display(c), self.labels[k])
                        }
                    })
                    .collect();
                writeln!(f, "{}*{} = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
                any = true;
            }
        }
        if !any {
            writeln!(f, "(zero algebra of dim {})", self.dim)?;
        }
        Ok(())
    }
}

//! Catalog of one-generated nilpotent Novikov algebras of dimension at most
//! six: parameterized multiplication tables, tabulated cohomology data
//! (cocycle bases, automorphism templates, induced actions on classes),
//! central-extension provenance, and the identifications between families at
//! excluded parameter values. Everything recorded here is re-checkable; the
//! verification routines recompute each claim from the multiplication tables
//! alone.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::automorphisms::{self, ActionFormula, AutTemplate};
use crate::cohomology::{self, BilinearForm};
use crate::dsl;
use crate::error::{Error, Result};
use crate::expr::{self, Bindings, Expr, SymbolKind};
use crate::extensions;
use crate::isomorphism::{self, IsoOutcome};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{self, Scalar};

mod data;

pub use data::{ENTRIES, EQUIVALENCES};

/// One family in the catalog. Parameter-free entries have empty `params`;
/// for the rest, `defaults` assigns every parameter a generic value and
/// `excluded` lists expressions that must stay nonzero for the family to be
/// defined (its values there coincide with other entries, see
/// [`EQUIVALENCES`]).
#[derive(Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub dim: usize,
    pub params: &'static [&'static str],
    pub excluded: &'static [&'static str],
    pub defaults: &'static [(&'static str, &'static str)],
    /// Multiplication table in the text format `dsl::parse_algebra` accepts.
    pub products: &'static [&'static str],
    /// Annihilator dimension away from degenerate parameter loci.
    pub ann_dim: usize,
    pub cohomology: &'static [CohomologyRecord],
    pub constructions: &'static [ConstructionRecord],
}

/// Recorded second-cohomology data for one parameter regime: a basis of the
/// relevant classes (as D⟨i⟩⟨j⟩ combinations), the automorphism-group
/// template, and the induced action on class coordinates. A record with an
/// empty `regime` is generic and applies wherever its `regime_excluded`
/// expressions are nonzero; pinned records take precedence.
#[derive(Debug)]
pub struct CohomologyRecord {
    pub regime: &'static [(&'static str, &'static str)],
    pub regime_excluded: &'static [&'static str],
    pub nablas: &'static [&'static str],
    /// Comma-separated matrix rows; entries are expressions in the template
    /// variables and the entry parameters.
    pub aut_rows: &'static [&'static str],
    pub aut_nonzero: &'static [&'static str],
    /// Expression for each alpha_i^* in alpha1..alphar, the template
    /// variables, and the entry parameters.
    pub action: &'static [&'static str],
}

/// How an entry arises as a central extension of a smaller catalog entry:
/// base id, base parameter values (expressions in this entry's parameters),
/// and the cocycles spanning the extension subspace.
#[derive(Debug)]
pub struct ConstructionRecord {
    pub regime: &'static [(&'static str, &'static str)],
    pub regime_excluded: &'static [&'static str],
    pub base: &'static str,
    pub base_params: &'static [(&'static str, &'static str)],
    pub cocycles: &'static [&'static str],
}

/// An isomorphism between two entries at specific parameter values, used
/// where a family's formula at an excluded value lands in another family.
#[derive(Debug)]
pub struct EquivalenceClaim {
    pub left: &'static str,
    pub left_params: &'static [(&'static str, &'static str)],
    pub right: &'static str,
    pub right_params: &'static [(&'static str, &'static str)],
    /// Image of the left entry's generator in the right entry's basis, for
    /// maps the coefficient ladder cannot reach. Empty means search. The
    /// stated image is still checked, never trusted.
    pub witness: &'static [&'static str],
}

pub fn catalog() -> &'static [CatalogEntry] {
    data::ENTRIES
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    data::ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Full parameter assignment: given values first, defaults for the rest.
/// Rejects names the entry does not declare.
pub fn resolve_params(fam: &CatalogEntry, given: &Bindings) -> Result<Bindings> {
    for name in given.keys() {
        if !fam.params.contains(&name.as_str()) {
            return Err(Error::Invalid(format!(
                "unknown parameter `{name}` for {}",
                fam.id
            )));
        }
    }
    let mut out = Bindings::new();
    for name in fam.params {
        match given.get(*name) {
            Some(v) => {
                out.insert((*name).to_string(), v.clone());
            }
            None => {
                let (_, text) = fam
                    .defaults
                    .iter()
                    .find(|(n, _)| n == name)
                    .ok_or_else(|| Error::UnboundParameter((*name).to_string()))?;
                out.insert((*name).to_string(), scalar::parse_rational(text)?);
            }
        }
    }
    Ok(out)
}

/// Display label such as `N5_03(lambda=1,mu=-1)`; `params` must be resolved.
pub fn entry_label(fam: &CatalogEntry, params: &Bindings) -> String {
    if fam.params.is_empty() {
        return fam.id.to_string();
    }
    let parts: Vec<String> = fam
        .params
        .iter()
        .map(|p| match params.get(*p) {
            Some(v) => format!("{p}={}", scalar::display(v)),
            None => format!("{p}=?"),
        })
        .collect();
    format!("{}({})", fam.id, parts.join(","))
}

/// Err when the (fully resolved) parameters land on the family's excluded
/// locus, where its table belongs to a different entry (see [`EQUIVALENCES`]).
pub fn check_excluded(fam: &CatalogEntry, params: &Bindings) -> Result<()> {
    for text in fam.excluded {
        if Expr::parse(text)?.eval(params)?.is_zero() {
            return Err(Error::Invalid(format!(
                "{} is defined only where {} != 0",
                fam.id, text
            )));
        }
    }
    Ok(())
}

fn build_algebra(fam: &CatalogEntry, params: &Bindings) -> Result<Algebra> {
    let mut doc = format!("dim {}\n", fam.dim);
    for (name, value) in params {
        doc.push_str(&format!("param {name} = {}\n", scalar::display(value)));
    }
    for line in fam.products {
        doc.push_str(line);
        doc.push('\n');
    }
    dsl::parse_algebra(&doc)?.with_generator_words()
}

/// Instantiate at the given (or default) parameters, rejecting values on the
/// entry's excluded locus.
pub fn instantiate(fam: &CatalogEntry, given: &Bindings) -> Result<Algebra> {
    let params = resolve_params(fam, given)?;
    check_excluded(fam, &params)?;
    build_algebra(fam, &params)
}

/// Instantiate the family formula even on the excluded locus, where it
/// reproduces another entry rather than a new algebra.
pub fn instantiate_unchecked(fam: &CatalogEntry, given: &Bindings) -> Result<Algebra> {
    let params = resolve_params(fam, given)?;
    build_algebra(fam, &params)
}

/// Parse a cocycle written as a D⟨i⟩⟨j⟩ combination, e.g.
/// `"2 D23 - 2 D32 + D41"`, with parameters supplied by `params`.
pub fn parse_cocycle(text: &str, dim: usize, params: &Bindings) -> Result<BilinearForm> {
    let terms = expr::parse_combo(text, dim, SymbolKind::Delta, 1)?;
    let flat = expr::eval_combo(&terms, dim * dim, params)?;
    BilinearForm::from_flat(dim, &flat)
}

/// All entries of one dimension at the given parameters (defaults for the
/// rest), with skip notices for entries whose excluded locus the parameters
/// hit. Parameter names apply to every family that declares them.
pub fn catalog_entries(
    dim: usize,
    given: &Bindings,
) -> Result<(Vec<(String, Algebra)>, Vec<String>)> {
    let families: Vec<&CatalogEntry> = data::ENTRIES.iter().filter(|e| e.dim == dim).collect();
    if families.is_empty() {
        return Err(Error::UnknownDimension(dim));
    }
    let mut algebras = Vec::new();
    let mut notices = Vec::new();
    for fam in families {
        let local: Bindings = fam
            .params
            .iter()
            .filter_map(|p| given.get(*p).map(|v| ((*p).to_string(), v.clone())))
            .collect();
        let params = resolve_params(fam, &local)?;
        let label = entry_label(fam, &params);
        match check_excluded(fam, &params).and_then(|()| build_algebra(fam, &params)) {
            Ok(a) => algebras.push((label, a)),
            Err(err) => notices.push(format!("{label}: skipped ({err})")),
        }
    }
    Ok((algebras, notices))
}

/// Entries of one dimension that share an invariant signature at the given
/// parameters. The catalog's families are pairwise non-isomorphic at generic
/// parameters, but a shared signature is where invariants alone stop
/// certifying that, so each coincidence gets a notice.
pub fn distinctness_notices(dim: usize, given: &Bindings) -> Result<Vec<String>> {
    let (list, _) = catalog_entries(dim, given)?;
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (label, a) in &list {
        groups
            .entry(a.fingerprint().to_string())
            .or_default()
            .push(label.clone());
    }
    Ok(groups
        .into_iter()
        .filter(|(_, members)| members.len() > 1)
        .map(|(fp, members)| {
            format!(
                "{} share invariants ({fp}); distinctness at these parameters is not certified by invariants alone",
                members.join(", ")
            )
        })
        .collect())
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Deterministic per-entry RNG: one base seed reproduces every entry's
/// sampling independently of verification order.
pub fn entry_rng(seed: u64, id: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(id))
}

fn regime_applies(
    regime: &[(&str, &str)],
    excluded: &[&str],
    params: &Bindings,
) -> Result<bool> {
    for (name, value) in regime {
        let want = scalar::parse_rational(value)?;
        if params.get(*name) != Some(&want) {
            return Ok(false);
        }
    }
    for text in excluded {
        if Expr::parse(text)?.eval(params)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn select_cohomology<'a>(
    fam: &'a CatalogEntry,
    params: &Bindings,
) -> Result<Option<&'a CohomologyRecord>> {
    for rec in fam.cohomology.iter().filter(|r| !r.regime.is_empty()) {
        if regime_applies(rec.regime, rec.regime_excluded, params)? {
            return Ok(Some(rec));
        }
    }
    for rec in fam.cohomology.iter().filter(|r| r.regime.is_empty()) {
        if regime_applies(rec.regime, rec.regime_excluded, params)? {
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// The construction record applying at these (fully resolved) parameters:
/// a pinned regime wins over the generic record.
pub fn select_construction<'a>(
    fam: &'a CatalogEntry,
    params: &Bindings,
) -> Result<Option<&'a ConstructionRecord>> {
    for rec in fam.constructions.iter().filter(|r| !r.regime.is_empty()) {
        if regime_applies(rec.regime, rec.regime_excluded, params)? {
            return Ok(Some(rec));
        }
    }
    for rec in fam.constructions.iter().filter(|r| r.regime.is_empty()) {
        if regime_applies(rec.regime, rec.regime_excluded, params)? {
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// Base algebra and cocycles of a construction record, with the base
/// parameters evaluated in the extension entry's parameter values.
pub fn construction_parts(
    rec: &ConstructionRecord,
    dim: usize,
    params: &Bindings,
) -> Result<(Algebra, Vec<BilinearForm>)> {
    let base = entry(rec.base)?;
    let mut base_params = Bindings::new();
    for (name, text) in rec.base_params {
        base_params.insert((*name).to_string(), Expr::parse(text)?.eval(params)?);
    }
    let base_alg = instantiate(base, &base_params)?;
    let forms = rec
        .cocycles
        .iter()
        .map(|t| parse_cocycle(t, base.dim, params))
        .collect::<Result<Vec<_>>>()?;
    if base.dim + forms.len() != dim {
        return Err(Error::Invalid(format!(
            "construction of a {dim}-dimensional algebra from {} ({}-dimensional) needs {} cocycles, not {}",
            rec.base,
            base.dim,
            dim - base.dim,
            forms.len()
        )));
    }
    Ok((base_alg, forms))
}

fn construction_roundtrip(
    rec: &ConstructionRecord,
    a: &Algebra,
    params: &Bindings,
) -> Result<(bool, Option<String>)> {
    let (base_alg, forms) = construction_parts(rec, a.dim(), params)?;
    let ext = extensions::central_extension(&base_alg, &forms)?.with_generator_words()?;
    match isomorphism::find_isomorphism(a, &ext, None)? {
        IsoOutcome::Witness(_) => Ok((true, None)),
        IsoOutcome::Distinct(c) => Ok((false, Some(format!("extension differs: {c}")))),
        IsoOutcome::Unknown { .. } => match isomorphism::find_isomorphism(&ext, a, None)? {
            IsoOutcome::Witness(_) => {
                Ok((true, Some("roundtrip isomorphism found in the reverse direction".into())))
            }
            IsoOutcome::Distinct(c) => Ok((false, Some(format!("extension differs: {c}")))),
            IsoOutcome::Unknown { candidates_tried } => Ok((
                false,
                Some(format!(
                    "no isomorphism with the recorded central extension within {candidates_tried} candidates"
                )),
            )),
        },
    }
}

/// Everything `verify_entry` checked about one instantiation. `None` means a
/// check did not apply (no recorded data for the regime, or the parameters
/// lie on a degenerate locus and family-level data was skipped).
#[derive(Debug, Clone)]
pub struct EntryReport {
    pub id: String,
    pub params: Bindings,
    pub novikov_ok: bool,
    pub nilpotent_ok: bool,
    pub one_generated_ok: bool,
    pub annihilator_dim: usize,
    pub expected_annihilator_dim: usize,
    /// The annihilator dimension differs from the family's generic value:
    /// the parameters sit on a degenerate locus. Not a failure.
    pub degenerate: bool,
    pub h2_dim: Option<usize>,
    pub nabla_in_z2: Option<bool>,
    pub nabla_independent: Option<bool>,
    pub aut_template_ok: Option<bool>,
    pub action_formula_ok: Option<bool>,
    pub construction_roundtrip_ok: Option<bool>,
    pub notes: Vec<String>,
}

impl EntryReport {
    /// True when every check that ran succeeded. Degeneracy is reported via
    /// `degenerate`, never here, and never excuses a failed check.
    pub fn passed(&self) -> bool {
        self.novikov_ok
            && self.nilpotent_ok
            && self.one_generated_ok
            && self.nabla_in_z2 != Some(false)
            && self.nabla_independent != Some(false)
            && self.aut_template_ok != Some(false)
            && self.action_formula_ok != Some(false)
            && self.construction_roundtrip_ok != Some(false)
    }

    pub fn label(&self) -> String {
        match entry(&self.id) {
            Ok(fam) => entry_label(fam, &self.params),
            Err(_) => self.id.clone(),
        }
    }
}

/// Samples drawn when checking that a template instantiates to automorphisms.
const TEMPLATE_SAMPLES: usize = 6;
/// Seeded random instantiations compared against each action formula.
const ACTION_SAMPLES: usize = 20;

/// Recheck one entry at the given (or default) parameters: the Novikov
/// identities, nilpotency, one-generatedness, and the annihilator dimension
/// always; the recorded cohomology basis, automorphism template, action
/// formula, and central-extension roundtrip wherever a record covers the
/// regime. On a degenerate parameter locus the family-level records are
/// skipped with a note.
pub fn verify_entry(fam: &CatalogEntry, given: &Bindings, seed: u64) -> Result<EntryReport> {
    let params = resolve_params(fam, given)?;
    check_excluded(fam, &params)?;
    let a = build_algebra(fam, &params)?;

    let ann_dim = a.annihilator().dim();
    let mut report = EntryReport {
        id: fam.id.to_string(),
        params: params.clone(),
        novikov_ok: a.is_novikov(),
        nilpotent_ok: a.is_nilpotent(),
        one_generated_ok: a.is_one_generated()?.0,
        annihilator_dim: ann_dim,
        expected_annihilator_dim: fam.ann_dim,
        degenerate: ann_dim != fam.ann_dim,
        h2_dim: None,
        nabla_in_z2: None,
        nabla_independent: None,
        aut_template_ok: None,
        action_formula_ok: None,
        construction_roundtrip_ok: None,
        notes: Vec::new(),
    };
    if report.degenerate {
        report.notes.push(format!(
            "annihilator dimension {} differs from the family's generic value {}: \
             the parameters lie on a degenerate locus, so family-level cohomology \
             and construction records were not checked",
            ann_dim, fam.ann_dim
        ));
        return Ok(report);
    }

    let mut rng = entry_rng(seed, fam.id);
    if let Some(rec) = select_cohomology(fam, &params)? {
        let cohom = cohomology::cohomology(&a);
        report.h2_dim = Some(cohom.h2_dim());

        let nablas = rec
            .nablas
            .iter()
            .map(|t| parse_cocycle(t, fam.dim, &params))
            .collect::<Result<Vec<_>>>()?;
        report.nabla_in_z2 = Some(nablas.iter().all(|f| cohomology::is_cocycle(&a, f)));

        let mut rows: Vec<Vector> = cohom.b2.basis().to_vec();
        rows.extend(nablas.iter().map(BilinearForm::flatten));
        let independent =
            Matrix::from_rows(rows).rank() == cohom.b2.dim() + nablas.len();
        report.nabla_independent = Some(independent);

        let template = AutTemplate::parse(rec.aut_rows, rec.aut_nonzero)?;
        let mut template_ok = true;
        for _ in 0..TEMPLATE_SAMPLES {
            let (_, m) = template.sample(&mut rng, &params)?;
            if !automorphisms::is_automorphism(&a, &m)? {
                template_ok = false;
                break;
            }
        }
        report.aut_template_ok = Some(template_ok);

        let formula = ActionFormula::parse(rec.action)?;
        let action_ok = match automorphisms::verify_action_formula(
            &a,
            &cohom,
            &nablas,
            &template,
            &formula,
            &params,
            ACTION_SAMPLES,
            &mut rng,
        ) {
            Ok(check) => {
                if !check.ok() {
                    report.notes.extend(check.mismatches.iter().take(3).cloned());
                }
                check.ok()
            }
            Err(Error::Invalid(msg)) => {
                report.notes.push(format!("action check: {msg}"));
                false
            }
            Err(e) => return Err(e),
        };
        report.action_formula_ok = Some(action_ok);
    }

    if let Some(rec) = select_construction(fam, &params)? {
        match construction_roundtrip(rec, &a, &params) {
            Ok((ok, note)) => {
                report.construction_roundtrip_ok = Some(ok);
                if let Some(n) = note {
                    report.notes.push(n);
                }
            }
            Err(err) => {
                report.construction_roundtrip_ok = Some(false);
                report.notes.push(format!("construction: {err}"));
            }
        }
    }

    Ok(report)
}

/// Outcome of searching for the isomorphism one claim asserts.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub left: String,
    pub right: String,
    /// The witness was found searching right-to-left instead.
    pub reversed: bool,
    pub outcome: IsoOutcome,
}

fn literal_bindings(pairs: &[(&str, &str)]) -> Result<Bindings> {
    let mut out = Bindings::new();
    for (name, text) in pairs {
        out.insert((*name).to_string(), scalar::parse_rational(text)?);
    }
    Ok(out)
}

fn check_stated_witness(
    la: &Algebra,
    ra: &Algebra,
    coords: &[&str],
) -> Result<isomorphism::IsoWitness> {
    if coords.len() != ra.dim() {
        return Err(Error::DimensionMismatch { expected: ra.dim(), got: coords.len() });
    }
    let gen_image: Vec<Scalar> =
        coords.iter().map(|c| scalar::parse_rational(c)).collect::<Result<_>>()?;
    let words = la.generator_words().ok_or(Error::MissingGeneratorWords)?;
    let images = words.evaluate_in(ra, &gen_image)?;
    let n = la.dim();
    let m = Matrix::from_fn(n, n, |i, j| images[j][i].clone());
    if !isomorphism::verify_isomorphism(la, ra, &m)? {
        return Err(Error::Invalid("stated witness is not an isomorphism".into()));
    }
    Ok(isomorphism::IsoWitness { matrix: m, generator_image: gen_image, products_checked: n * n })
}

/// Search for the isomorphism behind every recorded identification. Entries
/// on the left sit at excluded parameter values, so they are instantiated
/// through the unchecked path.
pub fn verify_equivalences(budget: Option<usize>) -> Result<Vec<EquivalenceReport>> {
    let mut out = Vec::new();
    for claim in data::EQUIVALENCES {
        let left = entry(claim.left)?;
        let right = entry(claim.right)?;
        let lb = literal_bindings(claim.left_params)?;
        let rb = literal_bindings(claim.right_params)?;
        let la = instantiate_unchecked(left, &lb)?;
        let ra = instantiate_unchecked(right, &rb)?;
        let stated = if claim.witness.is_empty() {
            None
        } else {
            Some(check_stated_witness(&la, &ra, claim.witness)?)
        };
        let (outcome, reversed) = match stated {
            Some(w) => (IsoOutcome::Witness(w), false),
            None => match isomorphism::find_isomorphism(&la, &ra, budget)? {
                IsoOutcome::Unknown { .. } => {
                    (isomorphism::find_isomorphism(&ra, &la, budget)?, true)
                }
                found => (found, false),
            },
        };
        out.push(EquivalenceReport {
            left: entry_label(left, &resolve_params(left, &lb)?),
            right: entry_label(right, &resolve_params(right, &rb)?),
            reversed,
            outcome,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::bindings;
    use crate::scalar::{frac, int};

    #[test]
    fn counts_per_dimension() {
        let count = |d| data::ENTRIES.iter().filter(|e| e.dim == d).count();
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 2);
        assert_eq!(count(4), 5);
        assert_eq!(count(5), 13);
        assert_eq!(count(6), 38);
        assert_eq!(data::ENTRIES.len(), 59);
        assert_eq!(data::EQUIVALENCES.len(), 9);
    }

    #[test]
    fn entries_are_well_formed() {
        for fam in data::ENTRIES {
            for name in fam.params {
                assert!(
                    fam.defaults.iter().any(|(n, _)| n == name),
                    "{}: parameter {name} has no default",
                    fam.id
                );
            }
            let a = instantiate(fam, &Bindings::new())
                .unwrap_or_else(|e| panic!("{}: {e}", fam.id));
            assert_eq!(a.dim(), fam.dim, "{}", fam.id);
            assert!(a.is_novikov(), "{}: Novikov identities fail at defaults", fam.id);
            assert!(a.is_nilpotent(), "{}: not nilpotent at defaults", fam.id);
        }
    }

    #[test]
    fn lookup_and_labels() {
        let fam = entry("N5_03").unwrap();
        let params = resolve_params(fam, &Bindings::new()).unwrap();
        assert_eq!(entry_label(fam, &params), "N5_03(lambda=1,mu=-1)");
        assert!(matches!(entry("N9_99"), Err(Error::UnknownEntry(_))));
        assert!(matches!(
            catalog_entries(7, &Bindings::new()),
            Err(Error::UnknownDimension(7))
        ));
        assert!(matches!(
            resolve_params(fam, &bindings(&[("sigma", int(1))])),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn excluded_locus_is_rejected_but_unchecked_instantiation_works() {
        let fam = entry("N6_16").unwrap();
        let at3 = bindings(&[("lambda", int(3))]);
        assert!(matches!(instantiate(fam, &at3), Err(Error::Invalid(_))));
        let a = instantiate_unchecked(fam, &at3).unwrap();
        assert!(a.is_novikov());
    }

    #[test]
    fn instantiation_matches_hand_table() {
        let fam = entry("N4_03").unwrap();
        let a = instantiate(fam, &bindings(&[("lambda", frac(1, 2))])).unwrap();
        // e1e3 = (2 - 1/2) e4 and e2e1 = (1/2) e3.
        assert_eq!(a.basis_product(0, 2)[3], frac(3, 2));
        assert_eq!(a.basis_product(1, 0)[2], frac(1, 2));
        assert_eq!(a.basis_product(1, 0)[3], int(0));
    }

    #[test]
    fn skip_notices_for_excluded_values() {
        let (list, notices) = catalog_entries(6, &bindings(&[("lambda", int(0))])).unwrap();
        // N6_25, N6_26, and N6_35 are undefined at lambda = 0.
        assert_eq!(list.len(), 35);
        assert_eq!(notices.len(), 3);
        assert!(notices.iter().all(|n| n.contains("skipped")));
    }

    #[test]
    fn verify_entry_runs_all_checks() {
        let fam = entry("N4_01").unwrap();
        let report = verify_entry(fam, &Bindings::new(), 0).unwrap();
        assert!(report.passed());
        assert!(!report.degenerate);
        assert_eq!(report.h2_dim, Some(3));
        assert_eq!(report.nabla_in_z2, Some(true));
        assert_eq!(report.nabla_independent, Some(true));
        assert_eq!(report.aut_template_ok, Some(true));
        assert_eq!(report.action_formula_ok, Some(true));
        // N4_01 is not recorded as an extension, so no roundtrip runs.
        assert_eq!(report.construction_roundtrip_ok, None);

        let report = verify_entry(entry("N3_01").unwrap(), &Bindings::new(), 0).unwrap();
        assert!(report.passed());
        assert_eq!(report.construction_roundtrip_ok, Some(true));
    }

    #[test]
    fn degenerate_locus_flags_instead_of_failing() {
        let fam = entry("N5_03").unwrap();
        let report =
            verify_entry(fam, &bindings(&[("lambda", int(0)), ("mu", int(0))]), 0).unwrap();
        assert!(report.degenerate);
        assert!(report.passed());
        assert_eq!(report.annihilator_dim, 2);
        assert_eq!(report.expected_annihilator_dim, 1);
        assert_eq!(report.h2_dim, None);
        assert!(report.notes.iter().any(|n| n.contains("degenerate locus")));
    }

    #[test]
    fn coinciding_families_are_isomorphic() {
        // N6_35 at lambda = 0 has the same table as N6_34 at lambda = 0.
        let claim = &data::EQUIVALENCES[6];
        assert_eq!((claim.left, claim.right), ("N6_35", "N6_34"));
        let la = instantiate_unchecked(
            entry(claim.left).unwrap(),
            &literal_bindings(claim.left_params).unwrap(),
        )
        .unwrap();
        let ra = instantiate_unchecked(
            entry(claim.right).unwrap(),
            &literal_bindings(claim.right_params).unwrap(),
        )
        .unwrap();
        assert!(isomorphism::find_isomorphism(&la, &ra, None)
            .unwrap()
            .is_witness());
    }

    #[test]
    fn fingerprint_coincidences_get_notices() {
        let notices = distinctness_notices(4, &Bindings::new()).unwrap();
        for n in &notices {
            assert!(n.contains("not certified"));
        }
    }
}

//! C ABI over the algebra toolkit: opaque handles, integer status codes,
//! NUL-terminated UTF-8 strings. Every entry point catches panics, so the
//! worst a misuse short of an invalid pointer can do is return
//! `NVK_STATUS_PANIC`. On any failure `nvk_last_error` carries a message for
//! the calling thread until the next call that fails or succeeds.
//!
//! Ownership rules: handles from `nvk_*_parse`/`nvk_*_instantiate`/
//! `nvk_algebra_extend` are released with `nvk_algebra_free`; strings
//! returned through `char **` out-parameters are released with
//! `nvk_string_free`. Strings returned as `const char *` are static and must
//! not be freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use novikov_lab::algebra::Algebra;
use novikov_lab::catalog;
use novikov_lab::cohomology;
use novikov_lab::dsl;
use novikov_lab::expr::Bindings;
use novikov_lab::extensions;
use novikov_lab::isomorphism::{self, IsoOutcome};
use novikov_lab::report;
use novikov_lab::scalar;
use novikov_lab::Error;

/// Opaque handle to a finite-dimensional algebra with rational structure
/// constants.
pub struct NvkAlgebra {
    inner: Algebra,
}

/// Result of every fallible call. Nonzero means the out-parameters are
/// untouched except where documented, and `nvk_last_error` explains why.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NvkStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse.
    ParseError = 3,
    /// The operation is undefined for these inputs (dimension mismatch,
    /// non-cocycle form, non-nilpotent algebra, excluded parameters, ...).
    DomainError = 4,
    /// No catalog entry with that identifier (or no entries in a dimension).
    UnknownEntry = 5,
    /// An internal invariant failed; the library state is still sound.
    Panic = 6,
}

/// Isomorphism verdict from `nvk_algebra_isomorphic`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NvkIsoResult {
    /// A witness was found and reverified.
    Isomorphic = 0,
    /// An invariant separates the two algebras.
    Distinct = 1,
    /// The search budget ran out without a verdict.
    Unknown = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("NUL-free message");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn error_status(err: &Error) -> NvkStatus {
    set_last_error(err.to_string());
    match err {
        Error::Syntax { .. } => NvkStatus::ParseError,
        Error::UnknownEntry(_) | Error::UnknownDimension(_) => NvkStatus::UnknownEntry,
        _ => NvkStatus::DomainError,
    }
}

fn null_argument(name: &str) -> NvkStatus {
    set_last_error(format!("argument `{name}` is NULL"));
    NvkStatus::NullArgument
}

fn guard(f: impl FnOnce() -> NvkStatus) -> NvkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic".into());
            NvkStatus::Panic
        }
    }
}

unsafe fn require_str<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, NvkStatus> {
    if ptr.is_null() {
        return Err(null_argument(name));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error(format!("argument `{name}` is not valid UTF-8"));
        NvkStatus::InvalidUtf8
    })
}

unsafe fn require_algebra<'a>(
    ptr: *const NvkAlgebra,
    name: &str,
) -> Result<&'a Algebra, NvkStatus> {
    match ptr.as_ref() {
        Some(h) => Ok(&h.inner),
        None => Err(null_argument(name)),
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> NvkStatus {
    let c = CString::new(s.replace('\0', " ")).expect("NUL-free string");
    unsafe { *out = c.into_raw() };
    clear_last_error();
    NvkStatus::Ok
}

fn give_algebra(a: Algebra, out: *mut *mut NvkAlgebra) -> NvkStatus {
    unsafe { *out = Box::into_raw(Box::new(NvkAlgebra { inner: a })) };
    clear_last_error();
    NvkStatus::Ok
}

/// `name=value` pairs separated by commas, e.g. `"lambda=1/2,mu=-3"`.
/// NULL or empty means no parameters.
unsafe fn parse_param_list(text: *const c_char) -> Result<Bindings, NvkStatus> {
    let mut out = Bindings::new();
    if text.is_null() {
        return Ok(out);
    }
    let text = require_str(text, "params")?;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((name, value)) = item.split_once('=') else {
            set_last_error(format!("expected name=value, got `{item}`"));
            return Err(NvkStatus::ParseError);
        };
        match scalar::parse_rational(value.trim()) {
            Ok(v) => out.insert(name.trim().to_string(), v),
            Err(e) => return Err(error_status(&e)),
        };
    }
    Ok(out)
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn nvk_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(env!("CARGO_PKG_VERSION")).unwrap())
        .as_ptr()
}

/// Message for the calling thread's most recent failure, or NULL after a
/// success. The pointer is valid until this thread's next library call.
#[no_mangle]
pub extern "C" fn nvk_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.as_ptr(),
        None => ptr::null(),
    })
}

/// Release a string obtained from a `char **` out-parameter. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn nvk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse the text format (`dim n`, optional `param` lines, product lines)
/// into a fresh handle.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_parse(
    text: *const c_char,
    out: *mut *mut NvkAlgebra,
) -> NvkStatus {
    guard(|| {
        if out.is_null() {
            return null_argument("out");
        }
        *out = ptr::null_mut();
        let text = match require_str(text, "text") {
            Ok(s) => s,
            Err(st) => return st,
        };
        match dsl::parse_algebra(text) {
            Ok(a) => give_algebra(a, out),
            Err(e) => error_status(&e),
        }
    })
}

/// Release an algebra handle. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_free(a: *mut NvkAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension of the algebra; 0 if the handle is NULL.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_dim(a: *const NvkAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.inner.dim())
}

/// Serialize the multiplication table back into the text format.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_serialize(
    a: *const NvkAlgebra,
    out: *mut *mut c_char,
) -> NvkStatus {
    guard(|| {
        if out.is_null() {
            return null_argument("out");
        }
        *out = ptr::null_mut();
        match require_algebra(a, "a") {
            Ok(alg) => give_string(dsl::serialize_algebra(alg), out),
            Err(st) => st,
        }
    })
}

/// True when both defining identities hold on all basis triples.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_is_novikov(
    a: *const NvkAlgebra,
    out: *mut bool,
) -> NvkStatus {
    guard(|| {
        let (Some(out), Ok(alg)) = (out.as_mut(), require_algebra(a, "a")) else {
            return null_argument("a/out");
        };
        *out = alg.is_novikov();
        clear_last_error();
        NvkStatus::Ok
    })
}

/// True when the descending power chain reaches zero.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_is_nilpotent(
    a: *const NvkAlgebra,
    out: *mut bool,
) -> NvkStatus {
    guard(|| {
        let (Some(out), Ok(alg)) = (out.as_mut(), require_algebra(a, "a")) else {
            return null_argument("a/out");
        };
        *out = alg.is_nilpotent();
        clear_last_error();
        NvkStatus::Ok
    })
}

/// True when a single element generates the algebra. Only defined for
/// nilpotent algebras; otherwise `NVK_STATUS_DOMAIN_ERROR`.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_is_one_generated(
    a: *const NvkAlgebra,
    out: *mut bool,
) -> NvkStatus {
    guard(|| {
        let (Some(out), Ok(alg)) = (out.as_mut(), require_algebra(a, "a")) else {
            return null_argument("a/out");
        };
        match alg.is_one_generated() {
            Ok((flag, _)) => {
                *out = flag;
                clear_last_error();
                NvkStatus::Ok
            }
            Err(e) => error_status(&e),
        }
    })
}

/// Dimension of the annihilator (two-sided).
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_annihilator_dim(
    a: *const NvkAlgebra,
    out: *mut usize,
) -> NvkStatus {
    guard(|| {
        let (Some(out), Ok(alg)) = (out.as_mut(), require_algebra(a, "a")) else {
            return null_argument("a/out");
        };
        *out = alg.annihilator().dim();
        clear_last_error();
        NvkStatus::Ok
    })
}

/// Dimensions of the cocycle space, the coboundary space, and the second
/// cohomology. Any of the out-pointers may be NULL to skip that value.
#[no_mangle]
pub unsafe extern "C" fn nvk_cohomology_dims(
    a: *const NvkAlgebra,
    z2: *mut usize,
    b2: *mut usize,
    h2: *mut usize,
) -> NvkStatus {
    guard(|| {
        let alg = match require_algebra(a, "a") {
            Ok(alg) => alg,
            Err(st) => return st,
        };
        let data = cohomology::cohomology(alg);
        if let Some(z2) = z2.as_mut() {
            *z2 = data.z2.dim();
        }
        if let Some(b2) = b2.as_mut() {
            *b2 = data.b2.dim();
        }
        if let Some(h2) = h2.as_mut() {
            *h2 = data.h2_dim();
        }
        clear_last_error();
        NvkStatus::Ok
    })
}

/// Central extension of `a` by `len` cocycles, each a combination like
/// `"2 D13 - D22"` on the basis pairings of `a`. Fails with
/// `NVK_STATUS_DOMAIN_ERROR` when a form is not a cocycle.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_extend(
    a: *const NvkAlgebra,
    cocycles: *const *const c_char,
    len: usize,
    out: *mut *mut NvkAlgebra,
) -> NvkStatus {
    guard(|| {
        if out.is_null() {
            return null_argument("out");
        }
        *out = ptr::null_mut();
        let alg = match require_algebra(a, "a") {
            Ok(alg) => alg,
            Err(st) => return st,
        };
        if cocycles.is_null() && len > 0 {
            return null_argument("cocycles");
        }
        let mut forms = Vec::with_capacity(len);
        for k in 0..len {
            let text = match require_str(*cocycles.add(k), "cocycles[k]") {
                Ok(s) => s,
                Err(st) => return st,
            };
            match catalog::parse_cocycle(text, alg.dim(), &Bindings::new()) {
                Ok(f) => forms.push(f),
                Err(e) => return error_status(&e),
            }
        }
        match extensions::central_extension(alg, &forms) {
            Ok(ext) => give_algebra(ext, out),
            Err(e) => error_status(&e),
        }
    })
}

/// Decide whether two algebras are isomorphic: invariants first, then a
/// generator-image search in both directions. `budget` 0 means the default
/// search budget. `NVK_STATUS_OK` with `NVK_ISO_RESULT_UNKNOWN` is a normal
/// outcome for hostile inputs, not an error.
#[no_mangle]
pub unsafe extern "C" fn nvk_algebra_isomorphic(
    a: *const NvkAlgebra,
    b: *const NvkAlgebra,
    budget: usize,
    out: *mut NvkIsoResult,
) -> NvkStatus {
    guard(|| {
        let Some(out) = out.as_mut() else {
            return null_argument("out");
        };
        let (a, b) = match (require_algebra(a, "a"), require_algebra(b, "b")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        let budget = (budget > 0).then_some(budget);
        match decide_isomorphic(a, b, budget) {
            Ok(result) => {
                *out = result;
                clear_last_error();
                NvkStatus::Ok
            }
            Err(e) => error_status(&e),
        }
    })
}

fn decide_isomorphic(
    a: &Algebra,
    b: &Algebra,
    budget: Option<usize>,
) -> novikov_lab::Result<NvkIsoResult> {
    if isomorphism::distinguish(a, b).is_some() {
        return Ok(NvkIsoResult::Distinct);
    }
    if let Ok(wa) = a.clone().with_generator_words() {
        match isomorphism::find_isomorphism(&wa, b, budget)? {
            IsoOutcome::Witness(_) => return Ok(NvkIsoResult::Isomorphic),
            IsoOutcome::Distinct(_) => return Ok(NvkIsoResult::Distinct),
            IsoOutcome::Unknown { .. } => {}
        }
    }
    if let Ok(wb) = b.clone().with_generator_words() {
        match isomorphism::find_isomorphism(&wb, a, budget)? {
            IsoOutcome::Witness(_) => return Ok(NvkIsoResult::Isomorphic),
            IsoOutcome::Distinct(_) => return Ok(NvkIsoResult::Distinct),
            IsoOutcome::Unknown { .. } => {}
        }
    }
    Ok(NvkIsoResult::Unknown)
}

/// Number of catalog entries.
#[no_mangle]
pub extern "C" fn nvk_catalog_len() -> usize {
    catalog::catalog().len()
}

/// Identifier of the catalog entry at `index` (static string), or NULL when
/// the index is out of range.
#[no_mangle]
pub extern "C" fn nvk_catalog_id(index: usize) -> *const c_char {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    let ids = IDS.get_or_init(|| {
        catalog::catalog().iter().map(|e| CString::new(e.id).unwrap()).collect()
    });
    match ids.get(index) {
        Some(id) => id.as_ptr(),
        None => ptr::null(),
    }
}

/// Instantiate a catalog entry at the given parameters (NULL or `""` for the
/// defaults), rejecting values on the entry's excluded locus.
#[no_mangle]
pub unsafe extern "C" fn nvk_catalog_instantiate(
    id: *const c_char,
    params: *const c_char,
    out: *mut *mut NvkAlgebra,
) -> NvkStatus {
    guard(|| {
        if out.is_null() {
            return null_argument("out");
        }
        *out = ptr::null_mut();
        let id = match require_str(id, "id") {
            Ok(s) => s,
            Err(st) => return st,
        };
        let given = match parse_param_list(params) {
            Ok(b) => b,
            Err(st) => return st,
        };
        let fam = match catalog::entry(id) {
            Ok(f) => f,
            Err(e) => return error_status(&e),
        };
        match catalog::instantiate(fam, &given) {
            Ok(a) => give_algebra(a, out),
            Err(e) => error_status(&e),
        }
    })
}

/// Recheck one catalog entry at the given parameters and return the full
/// report as a JSON document (same schema as the CLI's `orbit-verify`
/// `checks`/`data` sections). Degenerate parameter loci are reported, not
/// failed.
#[no_mangle]
pub unsafe extern "C" fn nvk_catalog_verify(
    id: *const c_char,
    params: *const c_char,
    seed: u64,
    out_json: *mut *mut c_char,
) -> NvkStatus {
    guard(|| {
        if out_json.is_null() {
            return null_argument("out_json");
        }
        *out_json = ptr::null_mut();
        let id = match require_str(id, "id") {
            Ok(s) => s,
            Err(st) => return st,
        };
        let given = match parse_param_list(params) {
            Ok(b) => b,
            Err(st) => return st,
        };
        let fam = match catalog::entry(id) {
            Ok(f) => f,
            Err(e) => return error_status(&e),
        };
        let rep = match catalog::verify_entry(fam, &given, seed) {
            Ok(r) => r,
            Err(e) => return error_status(&e),
        };
        let doc = serde_json::json!({
            "label": rep.label(),
            "passed": rep.passed(),
            "degenerate": rep.degenerate,
            "checks": report::entry_checks(&rep),
            "entry": report::entry_value(&rep),
        });
        let text = serde_json::to_string_pretty(&doc).expect("report serializes");
        give_string(text, out_json)
    })
}

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use novikov_lab_capi::*;

fn text(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn instantiate(id: &str, params: Option<&str>) -> *mut NvkAlgebra {
    let id = text(id);
    let params = params.map(text);
    let mut out = ptr::null_mut();
    let st = nvk_catalog_instantiate(
        id.as_ptr(),
        params.as_ref().map_or(ptr::null(), |p| p.as_ptr()),
        &mut out,
    );
    assert_eq!(st, NvkStatus::Ok, "instantiate failed: {}", last_error());
    out
}

fn last_error() -> String {
    let p = nvk_last_error();
    if p.is_null() {
        return "(no message)".into();
    }
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_serialize_roundtrip() {
    unsafe {
        let src = text("dim 3\ne1*e1 = e2\ne2*e1 = e3\n");
        let mut a = ptr::null_mut();
        assert_eq!(nvk_algebra_parse(src.as_ptr(), &mut a), NvkStatus::Ok);
        assert_eq!(nvk_algebra_dim(a), 3);

        let mut s = ptr::null_mut();
        assert_eq!(nvk_algebra_serialize(a, &mut s), NvkStatus::Ok);
        let serialized = CStr::from_ptr(s).to_str().unwrap().to_owned();
        assert!(serialized.starts_with("dim 3\n"), "{serialized}");

        let reparse = text(&serialized);
        let mut b = ptr::null_mut();
        assert_eq!(nvk_algebra_parse(reparse.as_ptr(), &mut b), NvkStatus::Ok);
        let mut s2 = ptr::null_mut();
        assert_eq!(nvk_algebra_serialize(b, &mut s2), NvkStatus::Ok);
        assert_eq!(CStr::from_ptr(s), CStr::from_ptr(s2));

        nvk_string_free(s);
        nvk_string_free(s2);
        nvk_algebra_free(a);
        nvk_algebra_free(b);
    }
}

#[test]
fn error_reporting() {
    unsafe {
        let mut a = ptr::null_mut();

        let bad = text("e1*e1 = e2");
        assert_eq!(nvk_algebra_parse(bad.as_ptr(), &mut a), NvkStatus::ParseError);
        assert!(a.is_null());
        assert!(last_error().contains("dim"), "{}", last_error());

        assert_eq!(nvk_algebra_parse(ptr::null(), &mut a), NvkStatus::NullArgument);

        let invalid = CString::new([0xffu8, 0x28]).unwrap();
        assert_eq!(nvk_algebra_parse(invalid.as_ptr(), &mut a), NvkStatus::InvalidUtf8);

        let mut dim = 0usize;
        assert_eq!(nvk_algebra_annihilator_dim(ptr::null(), &mut dim), NvkStatus::NullArgument);

        // The message is cleared once a call succeeds.
        let good = text("dim 2\ne1*e1 = e2\n");
        assert_eq!(nvk_algebra_parse(good.as_ptr(), &mut a), NvkStatus::Ok);
        assert!(nvk_last_error().is_null());
        nvk_algebra_free(a);
    }
}

#[test]
fn catalog_and_invariants() {
    assert_eq!(nvk_catalog_len(), 59);
    let first = nvk_catalog_id(0);
    assert!(!first.is_null());
    assert_eq!(unsafe { CStr::from_ptr(first) }.to_str().unwrap(), "N2_01");
    assert!(nvk_catalog_id(nvk_catalog_len()).is_null());

    unsafe {
        let a = instantiate("N4_01", None);
        let mut flag = false;
        assert_eq!(nvk_algebra_is_novikov(a, &mut flag), NvkStatus::Ok);
        assert!(flag);
        assert_eq!(nvk_algebra_is_nilpotent(a, &mut flag), NvkStatus::Ok);
        assert!(flag);
        assert_eq!(nvk_algebra_is_one_generated(a, &mut flag), NvkStatus::Ok);
        assert!(flag);
        let mut ann = 0usize;
        assert_eq!(nvk_algebra_annihilator_dim(a, &mut ann), NvkStatus::Ok);
        assert_eq!(ann, 2);

        let (mut z2, mut b2, mut h2) = (0usize, 0usize, 0usize);
        assert_eq!(nvk_cohomology_dims(a, &mut z2, &mut b2, &mut h2), NvkStatus::Ok);
        assert_eq!((z2, b2, h2), (6, 3, 3));
        nvk_algebra_free(a);

        let with_params = instantiate("N4_03", Some("lambda=1/2"));
        assert_eq!(nvk_algebra_dim(with_params), 4);
        nvk_algebra_free(with_params);

        let mut out = ptr::null_mut();
        let unknown = text("N9_99");
        assert_eq!(
            nvk_catalog_instantiate(unknown.as_ptr(), ptr::null(), &mut out),
            NvkStatus::UnknownEntry
        );

        let id = text("N6_25");
        let excluded = text("lambda=0");
        assert_eq!(
            nvk_catalog_instantiate(id.as_ptr(), excluded.as_ptr(), &mut out),
            NvkStatus::DomainError,
            "excluded locus should be rejected"
        );
        assert!(out.is_null());
    }
}

#[test]
fn extensions_and_isomorphism() {
    unsafe {
        let a = instantiate("N4_01", None);

        let combos = [text("D13")];
        let ptrs = [combos[0].as_ptr()];
        let mut ext = ptr::null_mut();
        assert_eq!(nvk_algebra_extend(a, ptrs.as_ptr(), 1, &mut ext), NvkStatus::Ok);
        assert_eq!(nvk_algebra_dim(ext), 5);
        let mut flag = false;
        assert_eq!(nvk_algebra_is_novikov(ext, &mut flag), NvkStatus::Ok);
        assert!(flag);

        let bad = [text("D14")];
        let bad_ptrs = [bad[0].as_ptr()];
        let mut rejected = ptr::null_mut();
        assert_eq!(
            nvk_algebra_extend(a, bad_ptrs.as_ptr(), 1, &mut rejected),
            NvkStatus::DomainError
        );
        assert!(last_error().contains("cocycle"), "{}", last_error());

        let b = instantiate("N4_01", None);
        let mut verdict = NvkIsoResult::Unknown;
        assert_eq!(nvk_algebra_isomorphic(a, b, 0, &mut verdict), NvkStatus::Ok);
        assert_eq!(verdict, NvkIsoResult::Isomorphic);

        let c = instantiate("N4_02", None);
        assert_eq!(nvk_algebra_isomorphic(a, c, 0, &mut verdict), NvkStatus::Ok);
        assert_eq!(verdict, NvkIsoResult::Distinct);

        nvk_algebra_free(ext);
        nvk_algebra_free(c);
        nvk_algebra_free(b);
        nvk_algebra_free(a);
    }
}

#[test]
fn verify_reports_degeneracy() {
    unsafe {
        let id = text("N5_03");
        let params = text("lambda=0,mu=0");
        let mut json = ptr::null_mut();
        assert_eq!(nvk_catalog_verify(id.as_ptr(), params.as_ptr(), 0, &mut json), NvkStatus::Ok);
        let doc: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(doc["passed"], true);
        assert_eq!(doc["degenerate"], true);
        assert_eq!(doc["entry"]["annihilator_dim"], 2);
        nvk_string_free(json);
    }
}

/// The generated header plus the static library make a working C toolchain
/// target: compile and run a small client.
#[test]
fn c_client_builds_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    assert!(include.join("novikov_lab.h").is_file(), "header not generated");

    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let debug = deps.parent().unwrap().to_path_buf();
    let staticlib = if debug.join("libnovikov_lab_capi.a").is_file() {
        debug.join("libnovikov_lab_capi.a")
    } else {
        let mut candidates: Vec<_> = std::fs::read_dir(&deps)
            .unwrap()
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with("libnovikov_lab_capi") && n.ends_with(".a"))
            })
            .collect();
        candidates.sort_by_key(|p| p.metadata().and_then(|m| m.modified()).ok());
        candidates.pop().expect("staticlib artifact not found")
    };

    let work = std::env::temp_dir().join(format!("nvk-capi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "novikov_lab.h"

int main(void) {
    NvkAlgebra *a = NULL;
    if (nvk_catalog_instantiate("N4_01", NULL, &a) != NVK_STATUS_OK) return 1;
    if (nvk_algebra_dim(a) != 4) return 2;
    size_t z2, b2, h2;
    if (nvk_cohomology_dims(a, &z2, &b2, &h2) != NVK_STATUS_OK) return 3;
    if (z2 != 6 || b2 != 3 || h2 != 3) return 4;
    const char *combos[1] = {"D13"};
    NvkAlgebra *ext = NULL;
    if (nvk_algebra_extend(a, combos, 1, &ext) != NVK_STATUS_OK) return 5;
    bool ok = false;
    if (nvk_algebra_is_novikov(ext, &ok) != NVK_STATUS_OK || !ok) return 6;
    NvkAlgebra *missing = NULL;
    if (nvk_catalog_instantiate("N9_99", NULL, &missing) != NVK_STATUS_UNKNOWN_ENTRY) return 7;
    if (nvk_last_error() == NULL) return 8;
    nvk_algebra_free(ext);
    nvk_algebra_free(a);
    printf("dims %zu %zu %zu\n", z2, b2, h2);
    return 0;
}
"#,
    )
    .unwrap();

    let exe = work.join("smoke");
    let compile = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .expect("cc not available");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "client exited with {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "dims 6 3 3\n");

    std::fs::remove_dir_all(&work).ok();
}

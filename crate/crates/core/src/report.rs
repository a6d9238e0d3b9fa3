//! Run reports: the JSON and text shapes the command-line front end emits.
//! Timing is kept out of the JSON so that repeated runs on the same inputs
//! and seed are byte-identical.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::EntryReport;
use crate::cohomology::BilinearForm;
use crate::matrix::{Matrix, Vector};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Degenerate,
    Unknown,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Degenerate => "degenerate",
            Status::Unknown => "unknown",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Check {
        Check { name: name.into(), status, detail: None }
    }

    pub fn with_detail(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status, detail: Some(detail.into()) }
    }

    pub fn bool(name: impl Into<String>, ok: bool) -> Check {
        Check::new(name, if ok { Status::Pass } else { Status::Fail })
    }
}

/// One command invocation's outcome. `status` is `Fail` exactly when a hard
/// check failed; `Degenerate` and `Unknown` never mask a failure (they apply
/// only when nothing failed).
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub status: Status,
    pub data: Value,
}

impl RunReport {
    pub fn new(command: impl Into<String>, seed: u64) -> RunReport {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            seed,
            checks: Vec::new(),
            status: Status::Pass,
            data: Value::Null,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, check: Check) {
        self.status = self.status.max(check.status);
        self.checks.push(check);
    }

    /// Raise the overall status without attaching a named check.
    pub fn raise(&mut self, status: Status) {
        self.status = self.status.max(status);
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn exit_code(&self) -> u8 {
        if self.status == Status::Fail {
            1
        } else {
            0
        }
    }
}

/// "D12 - 2 D31" style rendering, parseable by the Delta combo grammar.
pub fn format_form(form: &BilinearForm) -> String {
    let n = form.dim();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = form.entry(i, j);
            if !c.is_zero() {
                terms.push((c.clone(), format!("D{}{}", i + 1, j + 1)));
            }
        }
    }
    format_terms(terms)
}

/// "e1 - 1/54 e2" style rendering, parseable by the basis combo grammar.
pub fn format_vector(v: &Vector) -> String {
    let mut terms = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            terms.push((c.clone(), format!("e{}", i + 1)));
        }
    }
    format_terms(terms)
}

fn format_terms(terms: Vec<(Scalar, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, sym)) in terms.iter().enumerate() {
        let neg = scalar::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != scalar::one() {
            out.push_str(&scalar::display(&mag));
            out.push(' ');
        }
        out.push_str(sym);
    }
    out
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| Value::String(scalar::display(c))).collect()))
            .collect(),
    )
}

/// Per-entry checks in report form. Optional verifications appear only when
/// the catalog holds data for them; the annihilator check degrades to
/// `Degenerate` (never `Fail`) because a dimension jump marks a parameter
/// regime boundary, not a wrong table.
pub fn entry_checks(rep: &EntryReport) -> Vec<Check> {
    let mut out = vec![
        Check::bool("novikov", rep.novikov_ok),
        Check::bool("nilpotent", rep.nilpotent_ok),
        Check::bool("one_generated", rep.one_generated_ok),
        Check::with_detail(
            "annihilator_dim",
            if rep.degenerate { Status::Degenerate } else { Status::Pass },
            format!("{} (table: {})", rep.annihilator_dim, rep.expected_annihilator_dim),
        ),
    ];
    let mut opt = |name: &str, v: Option<bool>| {
        if let Some(ok) = v {
            out.push(Check::bool(name, ok));
        }
    };
    opt("nabla_cocycles", rep.nabla_in_z2);
    opt("nabla_independent", rep.nabla_independent);
    opt("aut_template", rep.aut_template_ok);
    opt("action_formula", rep.action_formula_ok);
    opt("construction_roundtrip", rep.construction_roundtrip_ok);
    out
}

pub fn entry_value(rep: &EntryReport) -> Value {
    let params: BTreeMap<String, String> =
        rep.params.iter().map(|(k, v)| (k.clone(), scalar::display(v))).collect();
    json!({
        "id": rep.id,
        "label": rep.label(),
        "params": params,
        "passed": rep.passed(),
        "degenerate": rep.degenerate,
        "annihilator_dim": rep.annihilator_dim,
        "expected_annihilator_dim": rep.expected_annihilator_dim,
        "h2_dim": rep.h2_dim,
        "notes": rep.notes,
    })
}

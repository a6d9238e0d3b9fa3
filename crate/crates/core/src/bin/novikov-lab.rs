//! Command-line front end. Every subcommand produces a [`RunReport`]; with
//! `--json` the report is printed as JSON (byte-identical across runs on the
//! same inputs and seed), otherwise as a short text summary with timing.
//!
//! Exit codes: 0 when no hard check failed (degenerate and unknown outcomes
//! included), 1 when one did, 2 on usage, file, or parse errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use novikov_lab::algebra::Algebra;
use novikov_lab::catalog::{self, CatalogEntry};
use novikov_lab::cohomology::{self, BilinearForm};
use novikov_lab::dsl;
use novikov_lab::error::{Error, Result};
use novikov_lab::expr::{eval_combo, parse_combo, Bindings, SymbolKind};
use novikov_lab::extensions;
use novikov_lab::isomorphism::{self, IsoOutcome};
use novikov_lab::report::{self, Check, RunReport, Status};
use novikov_lab::scalar;

#[derive(Parser)]
#[command(
    name = "novikov-lab",
    version,
    about = "Exact-arithmetic toolkit for nilpotent Novikov algebras: \
             cohomology, central extensions, isomorphism search, and a \
             verified catalog of one-generated families up to dimension six"
)]
struct Cli {
    /// Emit the run report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized template instantiations.
    #[arg(long, global = true, env = "NOVIKOV_LAB_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Novikov identities, nilpotency, and one-generatedness of an
    /// algebra file.
    Check { file: PathBuf },

    /// Compute the cocycle space, coboundary space, and second cohomology of
    /// an algebra file.
    Cohomology { file: PathBuf },

    /// Build the central extension of an algebra by one or more cocycles.
    Extend {
        file: PathBuf,
        /// Cocycle as a Delta combination, e.g. "D12 - 2 D31". Repeat for a
        /// multi-dimensional extension.
        #[arg(long = "cocycle", value_name = "COMBO", required = true)]
        cocycles: Vec<String>,
    },

    /// Decide whether two algebra files are isomorphic: invariant separation
    /// first, then a generator-image search.
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Candidate budget for the search (default 200000).
        #[arg(long)]
        budget: Option<usize>,
    },

    /// Verify one catalog entry: structure checks, tabulated cocycles,
    /// automorphism template, action formula, and construction round-trip.
    OrbitVerify {
        /// Catalog id, e.g. N5_03.
        entry: String,
        /// Parameter values, e.g. --params lambda=1,mu=-1.
        #[arg(long = "params", value_name = "K=V", value_delimiter = ',')]
        params: Vec<String>,
    },

    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Verify every entry, optionally restricted to one dimension, at default
    /// or explicitly given parameter values.
    Verify {
        #[arg(long)]
        dim: Option<usize>,
        /// Parameter values applied to every family that declares them.
        #[arg(long = "params", value_name = "K=V", value_delimiter = ',')]
        params: Vec<String>,
    },
    /// List the catalog entries with their parameters and defaults.
    List {
        #[arg(long)]
        dim: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(rep) => {
            if cli.json {
                print!("{}", rep.to_json());
            } else {
                print!("{}", render_text(&rep, started.elapsed().as_millis()));
            }
            ExitCode::from(rep.exit_code())
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Check { file } => cmd_check(file, cli.seed),
        Command::Cohomology { file } => cmd_cohomology(file, cli.seed),
        Command::Extend { file, cocycles } => cmd_extend(file, cocycles, cli.seed),
        Command::Iso { file_a, file_b, budget } => cmd_iso(file_a, file_b, *budget, cli.seed),
        Command::OrbitVerify { entry, params } => cmd_orbit_verify(entry, params, cli.seed),
        Command::Catalog { command: CatalogCommand::Verify { dim, params } } => {
            cmd_catalog_verify(*dim, params, cli.seed)
        }
        Command::Catalog { command: CatalogCommand::List { dim } } => {
            cmd_catalog_list(*dim, cli.seed)
        }
    }
}

fn read_algebra(path: &Path) -> Result<Algebra> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    dsl::parse_algebra(&text)
}

fn parse_params(pairs: &[String]) -> Result<Bindings> {
    let mut out = Bindings::new();
    for pair in pairs {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::Invalid(format!("expected K=V, got {pair:?}")))?;
        out.insert(name.trim().to_string(), scalar::parse_rational(value.trim())?);
    }
    Ok(out)
}

fn cmd_check(file: &Path, seed: u64) -> Result<RunReport> {
    let a = read_algebra(file)?;
    let mut rep = RunReport::new("check", seed);
    rep.input("file", file.display().to_string());

    let violations = a.check_novikov();
    let mut violation_value = Value::Null;
    match violations.first() {
        None => rep.push(Check::new("novikov", Status::Pass)),
        Some(v) => {
            let (i, j, k) = v.triple;
            violation_value = json!({
                "identity": v.identity.to_string(),
                "triple": [i + 1, j + 1, k + 1],
            });
            rep.push(Check::with_detail("novikov", Status::Fail, v.to_string()));
        }
    }

    let nilpotent = a.is_nilpotent();
    rep.push(Check::bool("nilpotent", nilpotent));

    let mut generator = Value::Null;
    if nilpotent {
        let (one_gen, witness) = a.is_one_generated()?;
        rep.push(Check::bool("one_generated", one_gen));
        if let Some(g) = witness {
            generator = Value::String(report::format_vector(&g));
        }
    } else {
        rep.push(Check::with_detail(
            "one_generated",
            Status::Unknown,
            "requires nilpotency",
        ));
    }

    let fp: BTreeMap<&str, String> = a.fingerprint().components().into_iter().collect();
    rep.data = json!({
        "dim": a.dim(),
        "power_chain": a.power_chain(),
        "annihilator_dim": a.annihilator().dim(),
        "generator": generator,
        "violation": violation_value,
        "violation_count": violations.len(),
        "fingerprint": fp,
    });
    Ok(rep)
}

fn cmd_cohomology(file: &Path, seed: u64) -> Result<RunReport> {
    let a = read_algebra(file)?;
    let mut rep = RunReport::new("cohomology", seed);
    rep.input("file", file.display().to_string());

    let data = cohomology::cohomology(&a);
    let basis_texts = |basis: &[Vec<novikov_lab::scalar::Scalar>]| -> Result<Vec<String>> {
        basis
            .iter()
            .map(|flat| Ok(report::format_form(&BilinearForm::from_flat(a.dim(), flat)?)))
            .collect()
    };
    rep.data = json!({
        "dims": {"z2": data.z2.dim(), "b2": data.b2.dim(), "h2": data.h2_dim()},
        "z2_basis": basis_texts(data.z2.basis())?,
        "b2_basis": basis_texts(data.b2.basis())?,
        "h2_representatives": data.h2_reps.iter().map(report::format_form).collect::<Vec<_>>(),
    });
    Ok(rep)
}

fn cmd_extend(file: &Path, cocycle_texts: &[String], seed: u64) -> Result<RunReport> {
    let a = read_algebra(file)?;
    let mut rep = RunReport::new("extend", seed);
    rep.input("file", file.display().to_string());
    for (k, text) in cocycle_texts.iter().enumerate() {
        rep.input(&format!("cocycle_{}", k + 1), text.clone());
    }

    let mut forms = Vec::with_capacity(cocycle_texts.len());
    for text in cocycle_texts {
        let terms = parse_combo(text, a.dim(), SymbolKind::Delta, 1)?;
        let flat = eval_combo(&terms, a.dim() * a.dim(), &Bindings::new())?;
        forms.push(BilinearForm::from_flat(a.dim(), &flat)?);
    }

    let mut bad = None;
    for (k, theta) in forms.iter().enumerate() {
        if let Some((condition, i, j, k2)) = cohomology::first_cocycle_violation(&a, theta) {
            bad = Some(format!(
                "form {} violates the {condition} condition at (e{}, e{}, e{})",
                k + 1,
                i + 1,
                j + 1,
                k2 + 1
            ));
            break;
        }
    }
    match bad {
        Some(detail) => {
            rep.push(Check::with_detail("cocycles", Status::Fail, detail));
            rep.data = json!({ "extension": Value::Null });
        }
        None => {
            rep.push(Check::new("cocycles", Status::Pass));
            let ext = extensions::central_extension(&a, &forms)?;
            rep.push(Check::bool("extension_novikov", ext.check_novikov().is_empty()));
            let hdata = cohomology::cohomology(&a);
            let joint = extensions::joint_annihilator(&a, &forms)?;
            rep.data = json!({
                "extension": dsl::serialize_algebra(&ext),
                "extension_dim": ext.dim(),
                "admissible": joint.is_zero(),
                "joint_annihilator_dim": joint.dim(),
                "annihilator_component": extensions::has_annihilator_component(&a, &hdata, &forms)?,
                "extension_nilpotent": ext.is_nilpotent(),
            });
        }
    }
    Ok(rep)
}

fn cmd_iso(file_a: &Path, file_b: &Path, budget: Option<usize>, seed: u64) -> Result<RunReport> {
    let a = read_algebra(file_a)?;
    let b = read_algebra(file_b)?;
    let mut rep = RunReport::new("iso", seed);
    rep.input("file_a", file_a.display().to_string());
    rep.input("file_b", file_b.display().to_string());
    if let Some(n) = budget {
        rep.input("budget", n.to_string());
    }

    let (outcome, reversed) = if let Some(cert) = isomorphism::distinguish(&a, &b) {
        (IsoOutcome::Distinct(cert), false)
    } else {
        match a.clone().with_generator_words() {
            Ok(aw) => match isomorphism::find_isomorphism(&aw, &b, budget)? {
                IsoOutcome::Unknown { candidates_tried } => {
                    match b.clone().with_generator_words() {
                        Ok(bw) => (isomorphism::find_isomorphism(&bw, &a, budget)?, true),
                        Err(_) => (IsoOutcome::Unknown { candidates_tried }, false),
                    }
                }
                found => (found, false),
            },
            Err(_) => match b.clone().with_generator_words() {
                Ok(bw) => (isomorphism::find_isomorphism(&bw, &a, budget)?, true),
                Err(_) => (IsoOutcome::Unknown { candidates_tried: 0 }, false),
            },
        }
    };

    rep.data = match &outcome {
        IsoOutcome::Witness(w) => json!({
            "outcome": "isomorphic",
            "reversed": reversed,
            "generator_image": report::format_vector(&w.generator_image),
            "matrix": report::matrix_value(&w.matrix),
            "products_checked": w.products_checked,
        }),
        IsoOutcome::Distinct(cert) => json!({
            "outcome": "distinct",
            "invariant": cert.component,
            "left": cert.left,
            "right": cert.right,
        }),
        IsoOutcome::Unknown { candidates_tried } => {
            rep.raise(Status::Unknown);
            json!({ "outcome": "unknown", "candidates_tried": candidates_tried })
        }
    };
    Ok(rep)
}

fn cmd_orbit_verify(entry_id: &str, params: &[String], seed: u64) -> Result<RunReport> {
    let fam = catalog::entry(entry_id)?;
    let given = parse_params(params)?;
    let erep = catalog::verify_entry(fam, &given, seed)?;
    let mut rep = RunReport::new("orbit-verify", seed);
    rep.input("entry", erep.label());
    for check in report::entry_checks(&erep) {
        rep.push(check);
    }
    rep.data = report::entry_value(&erep);
    Ok(rep)
}

fn entries_in(dim: Option<usize>) -> Result<Vec<&'static CatalogEntry>> {
    let fams: Vec<_> =
        catalog::catalog().iter().filter(|f| dim.is_none_or(|d| f.dim == d)).collect();
    match dim {
        Some(d) if fams.is_empty() => Err(Error::UnknownDimension(d)),
        _ => Ok(fams),
    }
}

fn cmd_catalog_verify(dim: Option<usize>, params: &[String], seed: u64) -> Result<RunReport> {
    let given = parse_params(params)?;
    let mut rep = RunReport::new("catalog verify", seed);
    if let Some(d) = dim {
        rep.input("dim", d.to_string());
    }
    for (name, value) in &given {
        rep.input(&format!("param_{name}"), scalar::display(value));
    }

    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for fam in entries_in(dim)? {
        let relevant: Bindings = given
            .iter()
            .filter(|(k, _)| fam.params.contains(&k.as_str()))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let resolved = catalog::resolve_params(fam, &relevant)?;
        if let Err(err) = catalog::check_excluded(fam, &resolved) {
            skipped.push(err.to_string());
            continue;
        }
        let erep = catalog::verify_entry(fam, &relevant, seed)?;
        let status = if !erep.passed() {
            Status::Fail
        } else if erep.degenerate {
            Status::Degenerate
        } else {
            Status::Pass
        };
        let detail = report::entry_checks(&erep)
            .into_iter()
            .filter(|c| c.status != Status::Pass)
            .map(|c| c.name)
            .collect::<Vec<_>>()
            .join(", ");
        rep.push(if detail.is_empty() {
            Check::new(erep.label(), status)
        } else {
            Check::with_detail(erep.label(), status, detail)
        });
        entries.push(report::entry_value(&erep));
    }
    rep.data = json!({ "entries": entries, "skipped": skipped });
    Ok(rep)
}

fn cmd_catalog_list(dim: Option<usize>, seed: u64) -> Result<RunReport> {
    let mut rep = RunReport::new("catalog list", seed);
    if let Some(d) = dim {
        rep.input("dim", d.to_string());
    }
    let mut entries = Vec::new();
    for fam in entries_in(dim)? {
        let defaults: BTreeMap<&str, &str> = fam.defaults.iter().copied().collect();
        entries.push(json!({
            "id": fam.id,
            "dim": fam.dim,
            "params": fam.params,
            "defaults": defaults,
            "excluded": fam.excluded,
            "products": fam.products,
            "annihilator_dim": fam.ann_dim,
            "cohomology_records": fam.cohomology.len(),
            "construction_records": fam.constructions.len(),
        }));
    }
    rep.data = json!({ "count": entries.len(), "entries": entries });
    Ok(rep)
}

fn render_text(rep: &RunReport, elapsed_ms: u128) -> String {
    let mut out = String::new();
    out.push_str(&rep.command);
    for (key, value) in &rep.inputs {
        out.push_str(&format!(" {key}={value}"));
    }
    out.push('\n');
    for check in &rep.checks {
        out.push_str(&format!("  {}: {}", check.name, check.status));
        if let Some(detail) = &check.detail {
            out.push_str(&format!("  ({detail})"));
        }
        out.push('\n');
    }
    render_data(rep, &mut out);
    out.push_str(&format!("status: {}  seed: {}  elapsed: {elapsed_ms} ms\n", rep.status, rep.seed));
    out
}

fn render_data(rep: &RunReport, out: &mut String) {
    let data = &rep.data;
    match rep.command.as_str() {
        "check" => {
            if let (Some(dim), Some(ann)) = (data["dim"].as_u64(), data["annihilator_dim"].as_u64())
            {
                out.push_str(&format!(
                    "  dim {dim}, annihilator dim {ann}, power chain {}\n",
                    data["power_chain"]
                ));
            }
            if let Some(g) = data["generator"].as_str() {
                out.push_str(&format!("  generator: {g}\n"));
            }
        }
        "cohomology" => {
            let d = &data["dims"];
            out.push_str(&format!(
                "  dim Z2 = {}, dim B2 = {}, dim H2 = {}\n",
                d["z2"], d["b2"], d["h2"]
            ));
            for (label, key) in
                [("Z2", "z2_basis"), ("B2", "b2_basis"), ("H2 reps", "h2_representatives")]
            {
                if let Some(items) = data[key].as_array() {
                    let texts: Vec<_> = items.iter().filter_map(|v| v.as_str()).collect();
                    out.push_str(&format!("  {label}: {}\n", texts.join(";  ")));
                }
            }
        }
        "extend" => {
            if let Some(text) = data["extension"].as_str() {
                out.push_str(&format!(
                    "  admissible: {}, annihilator component: {}\n",
                    data["admissible"], data["annihilator_component"]
                ));
                for line in text.lines() {
                    out.push_str(&format!("  | {line}\n"));
                }
            }
        }
        "iso" => match data["outcome"].as_str() {
            Some("isomorphic") => {
                let dir = if data["reversed"].as_bool() == Some(true) { "B -> A" } else { "A -> B" };
                out.push_str(&format!(
                    "  isomorphic ({dir}), generator image {}\n",
                    data["generator_image"].as_str().unwrap_or("?")
                ));
            }
            Some("distinct") => {
                out.push_str(&format!(
                    "  distinct: {} differs ({} vs {})\n",
                    data["invariant"].as_str().unwrap_or("?"),
                    data["left"].as_str().unwrap_or("?"),
                    data["right"].as_str().unwrap_or("?")
                ));
            }
            _ => {
                out.push_str(&format!(
                    "  unknown after {} candidates\n",
                    data["candidates_tried"]
                ));
            }
        },
        "orbit-verify" => {
            if let Some(notes) = data["notes"].as_array() {
                for note in notes.iter().filter_map(|v| v.as_str()) {
                    out.push_str(&format!("  note: {note}\n"));
                }
            }
        }
        "catalog verify" => {
            if let Some(skipped) = data["skipped"].as_array() {
                for s in skipped.iter().filter_map(|v| v.as_str()) {
                    out.push_str(&format!("  skipped: {s}\n"));
                }
            }
            let n = data["entries"].as_array().map_or(0, Vec::len);
            out.push_str(&format!("  {n} entries verified\n"));
        }
        "catalog list" => {
            if let Some(items) = data["entries"].as_array() {
                for e in items {
                    let params = e["params"]
                        .as_array()
                        .map(|ps| {
                            ps.iter()
                                .filter_map(|p| p.as_str())
                                .map(|p| format!("{p}={}", e["defaults"][p].as_str().unwrap_or("?")))
                                .collect::<Vec<_>>()
                                .join(", ")
                        })
                        .unwrap_or_default();
                    out.push_str(&format!(
                        "  {}  dim {}  {}\n",
                        e["id"].as_str().unwrap_or("?"),
                        e["dim"],
                        if params.is_empty() { "-".to_string() } else { params }
                    ));
                }
            }
        }
        _ => {}
    }
}

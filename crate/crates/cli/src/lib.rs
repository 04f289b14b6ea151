//! CLI front end: spec ingestion, subcommand dispatch, JSON and text
//! reporting, and the acceptance self-test suite.

pub mod selftest;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use ringkt_core::field::{load_field, FieldSpec, Order};
use ringkt_core::report;
use ringkt_core::{Error as CoreError, Result as CoreResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ringkt", about = "Exact K-theory for ring C*-algebras of rings of integers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field invariants only: degree, roots of unity, real places,
    /// admissibility modulus, maximal classes, rational ranks.
    Analyze(AnalyzeArgs),
    /// Emit the eta structure matrix for one admissible modulus as JSON.
    Eta(EtaArgs),
    /// Full K-theory pipeline report.
    Ktheory(KtheoryArgs),
    /// Telescope colimit of a user-supplied matrix file.
    Limit(LimitArgs),
    /// Exhaustive double-coset formula check for one catalog group.
    CheckDoublecoset(DoubleCosetArgs),
    /// Run the full acceptance suite.
    Selftest,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Field spec file (TOML or JSON)
    pub spec: PathBuf,
    /// Machine-readable JSON output
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EtaArgs {
    pub spec: PathBuf,
    /// Admissible modulus
    #[arg(long)]
    pub c: i64,
}

#[derive(Args, Debug)]
pub struct KtheoryArgs {
    pub spec: PathBuf,
    /// Admissible modulus (required for the ring-cstar target)
    #[arg(long)]
    pub c: Option<i64>,
    /// Tower truncation depth
    #[arg(long, default_value_t = 2)]
    pub truncate: u64,
    /// ring-cstar or group-cstar
    #[arg(long, default_value = "ring-cstar")]
    pub target: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    /// JSON file: {"matrix": [["…"]], "certificate": {"c": "…", "diag":
    /// ["c^2","1","0"]}, "invert_all_primes": true}
    pub matrix: PathBuf,
}

#[derive(Args, Debug)]
pub struct DoubleCosetArgs {
    /// Catalog group name (C1–C12, D2–D6, S3, A4, Q8)
    #[arg(long)]
    pub group: String,
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_VALIDATION
            }
        }
    }
}

fn load_order(path: &PathBuf) -> CoreResult<Order> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CoreError::SpecParse(format!("{}: {e}", path.display())))?;
    let spec = FieldSpec::parse(&text)?;
    load_field(&spec)
}

fn dispatch(cli: Cli) -> CoreResult<i32> {
    match cli.command {
        Command::Analyze(args) => {
            let order = load_order(&args.spec)?;
            let rep = report::analyze_report(&order)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!("field {}: degree {}, |mu| = {}", rep.field.name, rep.field.degree, rep.field.m);
                println!("  real places: {}", rep.field.real_places);
                println!("  mu maximality: {}", rep.field.mu_maximality);
                println!("  admissibility modulus D = {:?}", rep.field.admissibility_modulus);
                println!("  maximal finite classes ({}):", rep.maximal_classes.len());
                for c in &rep.maximal_classes {
                    println!(
                        "    i = {}, order {}, rep {:?}{}",
                        c.i,
                        c.subgroup_order,
                        c.rep,
                        if c.is_mu { "  (mu)" } else { "" }
                    );
                }
                println!("  rational inf ranks (k, d_k): {:?}", rep.inf_ranks);
                println!("  delta = {}, K0 rank = {}", rep.delta, rep.k0_rank);
            }
            Ok(EXIT_OK)
        }
        Command::Eta(args) => {
            let order = load_order(&args.spec)?;
            let ctx = ringkt_core::eta::EtaContext::new(&order)?;
            let eta = ctx.eta_matrix(&BigInt::from(args.c))?;
            println!("{}", serde_json::to_string_pretty(&eta.to_json()).unwrap());
            Ok(EXIT_OK)
        }
        Command::Ktheory(args) => {
            let order = load_order(&args.spec)?;
            let rep = match args.target.as_str() {
                "ring-cstar" => {
                    let c = args.c.ok_or_else(|| {
                        CoreError::SpecParse("--c is required for the ring-cstar target".into())
                    })?;
                    report::ktheory_report(&order, &BigInt::from(c), args.truncate)?
                }
                "group-cstar" => report::group_algebra_report(&order, args.truncate)?,
                other => {
                    return Err(CoreError::SpecParse(format!(
                        "unknown target {other:?}; use ring-cstar or group-cstar"
                    )))
                }
            };
            if args.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                print_ktheory_summary(&rep);
            }
            Ok(EXIT_OK)
        }
        Command::Limit(args) => {
            let text = std::fs::read_to_string(&args.matrix)
                .map_err(|e| CoreError::SpecParse(format!("{}: {e}", args.matrix.display())))?;
            let g = run_limit(&text)?;
            println!("colimit: {}", g.display());
            Ok(EXIT_OK)
        }
        Command::CheckDoublecoset(args) => {
            let g = ringkt_core::indres::catalog(&args.group)?;
            let results = ringkt_core::indres::double_coset_check_all(&g)?;
            let mut failures = 0usize;
            for (h, k, ok) in &results {
                println!(
                    "{}: |H| = {h:2}, |K| = {k:2}  {}",
                    g.name,
                    if *ok { "ok" } else { "FAIL" }
                );
                if !ok {
                    failures += 1;
                }
            }
            if failures > 0 {
                eprintln!("{failures} pair(s) failed");
                return Ok(EXIT_INTERNAL);
            }
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let results = selftest::run_all_with(|r| {
                println!(
                    "criterion {:2} [{}] {:<28} ({:.2}s)  {}",
                    r.id,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.seconds,
                    r.detail
                );
            });
            let all_ok = results.iter().all(|r| r.passed);
            Ok(if all_ok { EXIT_OK } else { EXIT_INTERNAL })
        }
    }
}

fn print_ktheory_summary(rep: &report::KTheoryReport) {
    println!(
        "K-theory report for {} (target {})",
        rep.field.name, rep.target
    );
    println!("  degree n = {}, |mu| = m = {}, real places = {}", rep.field.degree, rep.field.m, rep.field.real_places);
    println!("  mu maximality: {}", rep.field.mu_maximality);
    println!("  inf ranks (k, d_k): {:?}, delta = {}", rep.inf_ranks, rep.delta);
    println!("  maximal classes: {}", rep.maximal_classes.len());
    if let Some(eta) = &rep.eta {
        println!("  eta at c = {}: basis size {}, inf diagonal {:?}", eta.c, eta.basis.len(), eta.inf_diagonal);
    }
    println!("  subalgebra K: ({}, {})", rep.subalgebra_k.deg0.display, rep.subalgebra_k.deg1.display);
    println!("  after PV step: ({}, {})", rep.pv_first.deg0.display, rep.pv_first.deg1.display);
    for (t, tr) in rep.truncations.iter().enumerate() {
        println!("  Gamma_{t}: ({}, {})", tr.deg0.display, tr.deg1.display);
    }
    println!("  K_* = {}", rep.final_formula);
    if let Some(agree) = rep.theorem_paths_agree {
        println!("  higher-roots path agrees: {agree}");
    }
    println!("  invariant suite: {}", if rep.invariant_suite_passed { "pass" } else { "FAIL" });
    println!("  note: {}", rep.classification_note);
}

/// Parse and run a telescope-limit request.
pub fn run_limit(text: &str) -> CoreResult<ringkt_core::tower::GradedGroup> {
    use ringkt_core::linalg::IntMatrix;
    use ringkt_core::tower::{telescope_colimit, DiagClass, TelescopeSystem, TriangularCertificate};

    #[derive(serde::Deserialize)]
    struct CertInput {
        c: String,
        diag: Vec<String>,
    }
    #[derive(serde::Deserialize)]
    struct LimitInput {
        matrix: Vec<Vec<String>>,
        certificate: Option<CertInput>,
        #[serde(default)]
        invert_all_primes: bool,
    }

    let input: LimitInput =
        serde_json::from_str(text).map_err(|e| CoreError::SpecParse(e.to_string()))?;
    let matrix = IntMatrix::from_string_rows(&input.matrix)?;
    let sys = match input.certificate {
        Some(cert) => {
            let c: BigInt = cert
                .c
                .parse()
                .map_err(|_| CoreError::SpecParse("bad certificate parameter".into()))?;
            let diag = cert
                .diag
                .iter()
                .map(|s| match s.as_str() {
                    "0" => Ok(DiagClass::Nilpotent),
                    "1" | "c^0" => Ok(DiagClass::Unit),
                    other => other
                        .strip_prefix("c^")
                        .and_then(|e| e.parse::<u64>().ok())
                        .filter(|&e| e >= 1)
                        .map(DiagClass::CPower)
                        .ok_or_else(|| {
                            CoreError::SpecParse(format!("bad diagonal class {other:?}"))
                        }),
                })
                .collect::<CoreResult<Vec<_>>>()?;
            TelescopeSystem::certified(matrix, TriangularCertificate { c, diag })?
        }
        None => TelescopeSystem::uncertified(matrix)?,
    };
    telescope_colimit(&sys, input.invert_all_primes)
}

//! `curv`: derive the (2 1)-block idempotents, expand the curvature master
//! formulas, run the pair-system reduction pipeline, and re-verify the
//! headline claims. All output is deterministic; exit code 0 means success,
//! 1 a failed verification, 2 a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use curv_core::checks::{self, CheckResult};
use curv_core::dft::Dft;
use curv_core::formula::{
    alpha_generator, five_index_formula, gamma_generator, gamma_hat_generator, sixteen_term_formula,
    FactorSymmetry, TensorFormula,
};
use curv_core::perm::Partition;
use curv_core::rational::{Q, RationalFunction};
use curv_core::reduction::{
    full_scan, reduce_formula, render_table_latex, render_table_text, scan_roots, solve_pair,
    Family, IdentityMatrix, Pair, ReductionOutcome, ReductionReport, SecondFactor,
};
use curv_core::ring::{eta_idempotent, xi_idempotent, GroupRingElement};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "curv", version, about = "Exact group-ring engine for curvature tensor generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Xi,
    Eta,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Xi => Family::Xi,
            FamilyArg::Eta => Family::Eta,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Vector,
    Sym2,
    Alt2,
}

impl From<ShapeArg> for SecondFactor {
    fn from(s: ShapeArg) -> SecondFactor {
        match s {
            ShapeArg::Vector => SecondFactor::Vector,
            ShapeArg::Sym2 => SecondFactor::Sym2,
            ShapeArg::Alt2 => SecondFactor::Alt2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Generator {
    Gamma,
    Alpha,
    GammaHat,
}

#[derive(Args)]
struct OutputArgs {
    /// text, json or latex
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to a file instead of stdout (relative paths resolve against
    /// $CURV_OUTPUT_DIR when set)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Prepend the tool version
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print an idempotent of the (2 1) block (symbolic parameter unless
    /// --nu is given)
    Idempotents {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Exact rational like `1/2`
        #[arg(long)]
        nu: Option<String>,
        /// Re-verify idempotency and the transform round trip
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a master formula or one of the classical generators
    Formula {
        /// Master formula family: vector (order 4), sym2 or alt2 (order 5)
        #[arg(long, value_enum, conflicts_with = "generator")]
        shape: Option<ShapeArg>,
        /// gamma, alpha or gamma-hat
        #[arg(long, value_enum)]
        generator: Option<Generator>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reduce a master formula over a pair of index arrangements and scan
    /// the parameter roots
    Reduce {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Two-digit pair like `12`
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        pair: Option<String>,
        /// Run all 15 pairs and print the length table
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "vector")]
        shape: ShapeArg,
        /// Additionally specialize the reduced formula at this value
        #[arg(long)]
        nu: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-run the verification suite
    Verify {
        /// Run every check
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// One of: sigma, f0, idempotents, dft, factor-swap, membership,
        /// pieri, table
        #[arg(long)]
        claim: Option<String>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(out: &OutputArgs, body: String) -> ExitCode {
    let mut payload = String::new();
    if out.verbose {
        payload.push_str(&format!("curv {}\n", env!("CARGO_PKG_VERSION")));
    }
    payload.push_str(&body);
    if !payload.ends_with('\n') {
        payload.push('\n');
    }
    match &out.output {
        None => {
            print!("{payload}");
            ExitCode::SUCCESS
        }
        Some(path) => {
            let resolved = if path.is_relative() {
                match std::env::var_os("CURV_OUTPUT_DIR") {
                    Some(dir) => PathBuf::from(dir).join(path),
                    None => path.clone(),
                }
            } else {
                path.clone()
            };
            match std::fs::File::create(&resolved).and_then(|mut f| f.write_all(payload.as_bytes())) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(&format!("cannot write {}: {e}", resolved.display())),
            }
        }
    }
}

fn latex_document(body: &str, math: bool) -> String {
    let inner = if math {
        format!("\\[\n{body}\n\\]")
    } else {
        body.to_string()
    };
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath}}\n\\begin{{document}}\n{inner}\n\\end{{document}}\n"
    )
}

fn parse_nu(s: &str) -> Result<Q, String> {
    Q::from_str(s)
}

fn element_json(label: &str, nu: Option<&Q>, e: &GroupRingElement) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .terms()
        .map(|(p, c)| serde_json::json!({"perm": p.to_string(), "coeff": c.to_string()}))
        .collect();
    serde_json::json!({
        "family": label,
        "nu": nu.map(|q| q.to_string()),
        "text": e.to_string(),
        "terms": terms,
    })
}

fn run_idempotents(family: FamilyArg, nu: Option<String>, check: bool, out: OutputArgs) -> ExitCode {
    let nu_q = match nu.as_deref().map(parse_nu) {
        None => None,
        Some(Ok(q)) => Some(q),
        Some(Err(e)) => return usage_error(&e),
    };
    let (label, element) = match (family, &nu_q) {
        (FamilyArg::Eta, _) => ("eta".to_string(), eta_idempotent()),
        (FamilyArg::Xi, None) => ("xi(v)".to_string(), xi_idempotent(&RationalFunction::variable())),
        (FamilyArg::Xi, Some(q)) => (
            format!("xi({q})"),
            xi_idempotent(&RationalFunction::constant(q.clone())),
        ),
    };

    let mut notes = Vec::new();
    if matches!(family, FamilyArg::Xi) && nu_q == Some(Q::new(1, 2)) {
        notes.push("note: xi(1/2) = f0, the one idempotent whose symmetry class generates no curvature tensors".to_string());
    }

    let mut check_passed = None;
    if check {
        let sq = element.checked_mul(&element).unwrap();
        let mut ok = sq == element;
        let dft = Dft::new(3);
        let image = dft.forward(&element);
        ok &= dft.inverse(&image) == element;
        let block = image.block(&Partition::of(&[2, 1]));
        match family {
            FamilyArg::Eta => {
                ok &= block == &curv_core::dft::y_block();
            }
            FamilyArg::Xi => {
                let nu_rf = match &nu_q {
                    None => RationalFunction::variable(),
                    Some(q) => RationalFunction::constant(q.clone()),
                };
                ok &= block == &curv_core::dft::x_nu_block(&nu_rf);
            }
        }
        notes.push(format!(
            "check (idempotency, transform round trip, block image): {}",
            if ok { "PASS" } else { "FAIL" }
        ));
        check_passed = Some(ok);
    }

    let body = match out.format {
        Format::Text => {
            let mut s = format!("{label} = {element}");
            for n in &notes {
                s.push('\n');
                s.push_str(n);
            }
            s
        }
        Format::Json => {
            let mut v = element_json(&label, nu_q.as_ref(), &element);
            if let Some(ok) = check_passed {
                v["check_passed"] = serde_json::json!(ok);
            }
            serde_json::to_string_pretty(&v).unwrap()
        }
        Format::Latex => latex_document(&element.to_latex(), true),
    };
    let code = emit(&out, body);
    if check_passed == Some(false) {
        return ExitCode::from(1);
    }
    code
}

fn run_formula(shape: Option<ShapeArg>, generator: Option<Generator>, out: OutputArgs) -> ExitCode {
    let (label, formula): (String, TensorFormula) = match (shape, generator) {
        (_, Some(Generator::Gamma)) => ("gamma(S) = (1/4) y_t*(S⊗S)".into(), gamma_generator()),
        (_, Some(Generator::Alpha)) => ("alpha(A) = (1/4) y_t*(A⊗A)".into(), alpha_generator()),
        (_, Some(Generator::GammaHat)) => (
            "gamma-hat(S,Sh) = (1/4) y_t'*(S⊗Sh)".into(),
            gamma_hat_generator(),
        ),
        (Some(ShapeArg::Sym2), None) => (
            "(1/24) y_t'*(U⊗S)".into(),
            five_index_formula(FactorSymmetry::Symmetric),
        ),
        (Some(ShapeArg::Alt2), None) => (
            "(1/24) y_t'*(U⊗A)".into(),
            five_index_formula(FactorSymmetry::Alternating),
        ),
        (Some(ShapeArg::Vector) | None, None) => ("(1/12) y_t*(U⊗w)".into(), sixteen_term_formula()),
    };
    let body = match out.format {
        Format::Text => format!("{label}  [{} terms]\n{formula}", formula.term_count()),
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "label": label,
            "length": formula.term_count(),
            "formula": formula.to_string(),
        }))
        .unwrap(),
        Format::Latex => latex_document(&formula.to_latex(), true),
    };
    emit(&out, body)
}

fn render_report_text(report: &ReductionReport, specialized: Option<(&Q, &TensorFormula)>) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "family: {}\nshape: {}\npair: {}\ndeterminant: {}\n",
        report.family, report.second_factor, report.pair, report.determinant
    ));
    match &report.outcome {
        ReductionOutcome::Skipped => {
            s.push_str("skipped: singular pair\n");
        }
        ReductionOutcome::Reduced {
            generic,
            generic_length,
            roots,
        } => {
            s.push_str(&format!("reduced ({generic_length} terms):\n  {generic}\n"));
            for root in roots {
                s.push_str(&format!(
                    "root v = {} ({} terms):\n  {}\n",
                    root.nu, root.length, root.formula
                ));
            }
            if roots.is_empty() {
                s.push_str("no allowed specialization roots\n");
            }
            if let Some((nu, f)) = specialized {
                s.push_str(&format!("at v = {} ({} terms):\n  {}\n", nu, f.term_count(), f));
            }
        }
    }
    s
}

fn run_reduce(
    family: FamilyArg,
    pair: Option<String>,
    all: bool,
    shape: ShapeArg,
    nu: Option<String>,
    out: OutputArgs,
) -> ExitCode {
    let family: Family = family.into();
    let kind: SecondFactor = shape.into();
    if all {
        let reports = full_scan(kind, family);
        let body = match out.format {
            Format::Text => render_table_text(&reports),
            Format::Json => {
                let rows: Vec<serde_json::Value> = reports.iter().map(ReductionReport::to_json).collect();
                serde_json::to_string_pretty(&serde_json::Value::Array(rows)).unwrap()
            }
            Format::Latex => latex_document(&render_table_latex(&reports), false),
        };
        return emit(&out, body);
    }

    let pair = match Pair::parse(&pair.expect("clap enforces --pair without --all")) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let matrix = IdentityMatrix::for_family(family);
    let det = matrix.pair_determinant(pair);
    let report = match solve_pair(&matrix, pair) {
        Err(_) => ReductionReport {
            family,
            second_factor: kind,
            pair,
            determinant: det,
            outcome: ReductionOutcome::Skipped,
        },
        Ok(sys) => {
            let reduced = reduce_formula(&kind.base_formula(), &sys);
            ReductionReport {
                family,
                second_factor: kind,
                pair,
                determinant: det,
                outcome: scan_roots(&reduced, &sys),
            }
        }
    };

    let mut specialized: Option<(Q, TensorFormula)> = None;
    if let Some(nu_str) = nu {
        let nu_q = match parse_nu(&nu_str) {
            Ok(q) => q,
            Err(e) => return usage_error(&e),
        };
        match &report.outcome {
            ReductionOutcome::Skipped => {
                return usage_error(&format!("pair {pair} is singular for {family}; nothing to specialize"))
            }
            ReductionOutcome::Reduced { generic, .. } => {
                if report.determinant.eval(&nu_q).map(|d| d.is_zero()).unwrap_or(true) {
                    return usage_error(&format!("v = {nu_q} makes pair {pair} singular"));
                }
                match generic.specialize(&nu_q) {
                    Ok(f) => specialized = Some((nu_q, f)),
                    Err(e) => return usage_error(&format!("{e}")),
                }
            }
        }
    }

    let body = match out.format {
        Format::Text => render_report_text(&report, specialized.as_ref().map(|(q, f)| (q, f))),
        Format::Json => {
            let mut v = report.to_json();
            if let Some((q, f)) = &specialized {
                v["specialized"] = serde_json::json!({
                    "nu": q.to_string(),
                    "length": f.term_count(),
                    "formula": f.to_string(),
                });
            }
            serde_json::to_string_pretty(&v).unwrap()
        }
        Format::Latex => {
            let mut body = String::new();
            match &report.outcome {
                ReductionOutcome::Skipped => body.push_str("\\text{singular pair}"),
                ReductionOutcome::Reduced { generic, roots, .. } => {
                    body.push_str(&generic.to_latex());
                    for root in roots {
                        body.push_str(&format!(
                            "\n\\]\n\\[\n\\nu = {}:\\quad {}",
                            root.nu,
                            root.formula.to_latex()
                        ));
                    }
                }
            }
            latex_document(&body, true)
        }
    };
    emit(&out, body)
}

fn print_check(result: &CheckResult) {
    println!("{} {}", if result.passed { "PASS" } else { "FAIL" }, result.name);
    for line in &result.details {
        println!("  {line}");
    }
}

fn run_verify(all: bool, claim: Option<String>) -> ExitCode {
    let results: Vec<CheckResult> = if all || claim.is_none() {
        checks::all_checks()
    } else {
        let name = claim.unwrap();
        match checks::check_by_name(&name) {
            Some(r) => vec![r],
            None => {
                return usage_error(&format!(
                    "unknown claim `{name}`; available: {}",
                    checks::CHECK_NAMES.join(", ")
                ))
            }
        }
    };
    let mut all_passed = true;
    for result in &results {
        print_check(result);
        all_passed &= result.passed;
    }
    if all_passed {
        println!("verified: {} check(s) passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("verification FAILED");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Idempotents {
            family,
            nu,
            check,
            out,
        } => run_idempotents(family, nu, check, out),
        Command::Formula { shape, generator, out } => run_formula(shape, generator, out),
        Command::Reduce {
            family,
            pair,
            all,
            shape,
            nu,
            out,
        } => run_reduce(family, pair, all, shape, nu, out),
        Command::Verify { all, claim } => run_verify(all, claim),
    }
}

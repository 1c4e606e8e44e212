//! Command-line front end: parse group presentations, dispatch the
//! computations, and emit text or JSON envelopes.

use clap::{Parser, Subcommand, ValueEnum};
use gaugekit_cli::{output, parser};
use gaugekit_core::abelian::AbGroupDescriptor;
use gaugekit_core::homotopy::{self, Base, GaugeQuery, ModuliError};
use gaugekit_core::verify::{self, CheckReport};
use gaugekit_core::{classify, validate, PiTables, Validated};
use output::{tags, Envelope, Status};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "gaugekit",
    about = "Exact homotopy invariants of gauge groups over Riemann surfaces",
    after_help = "Group presentations are written as 'U(n)', 'S1xSU(5)', \
                  'S1x_2_Sp(3)', 'S1x_2_Spin(12):d-', or in full quotient form \
                  '(S1 x SU(3) x Sp(2)) / <(1/6; 1, 1)>'."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Extend the homotopy-group tables with records from a file
    /// (lines: `family n i free_rank torsion`).
    #[arg(long, global = true, value_name = "FILE")]
    tables: Option<std::path::PathBuf>,
    /// Include derivation traces in the output.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Surface,
    Sphere,
}

#[derive(Subcommand)]
enum Command {
    /// s(G), factor orders, Samelson order, and the canonical presentation.
    S { spec: String },
    /// Decide whether the gauge groups of bundles k and l agree.
    Classify {
        spec: String,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
    },
    /// Count the homotopy types over all bundle classes.
    Classes { spec: String },
    /// Homotopy group pi_i of the gauge group (i = 0 gives components).
    Pi {
        spec: String,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value_t = BaseArg::Surface)]
        base: BaseArg,
    },
    /// Homotopy group of the moduli space of stable bundles M(n, k).
    Moduli {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        i: u32,
    },
    /// Run embedded verification cases.
    Verify {
        #[command(subcommand)]
        case: VerifyCase,
    },
}

#[derive(Subcommand)]
enum VerifyCase {
    /// Wu-formula expansion of Sq^i w_j in BSO(n).
    Wu {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        n: u32,
    },
    /// The congruence-case decomposability lemma in BSO(n).
    SqLemma {
        #[arg(long)]
        n: u32,
    },
    /// The Steenrod-operation nontriviality criterion.
    Criterion {
        #[command(subcommand)]
        which: CriterionCase,
    },
    /// Hopf commutator pullbacks.
    Commutator {
        #[command(subcommand)]
        which: CommutatorCase,
    },
    /// Every embedded case.
    All,
}

#[derive(Subcommand)]
enum CriterionCase {
    /// K = PSp(2n); defaults to n = 2 and 3.
    Psp {
        #[arg(long)]
        n: Option<u32>,
    },
    /// K = SO(n) for odd n; defaults to n = 9 and 13.
    SoOdd {
        #[arg(long)]
        n: Option<u32>,
    },
    /// K = SO(n) for even n; defaults to n = 8 and 12.
    SoEven {
        #[arg(long)]
        n: Option<u32>,
    },
    /// K = Ad(E7).
    E7,
}

#[derive(Subcommand)]
enum CommutatorCase {
    /// gamma* in PO(4n); defaults to n = 3 and 4.
    Po4n {
        #[arg(long)]
        n: Option<u32>,
    },
    /// gamma* in Ad(E6) at p = 3.
    E6,
}

fn main() {
    let cli = Cli::parse();
    let mut tables = PiTables::embedded().clone();
    if let Some(path) = &cli.tables {
        match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| PiTables::parse(&text).map_err(|e| e.to_string()))
        {
            Ok(extra) => tables.extend_with(extra),
            Err(e) => {
                let env = Envelope::invalid("tables", format!("cannot load {path:?}: {e}"));
                emit(&cli, env);
                return;
            }
        }
    }
    let envelope = dispatch(&cli, &tables);
    emit(&cli, envelope);
}

fn emit(cli: &Cli, mut envelope: Envelope) {
    if !cli.verbose {
        envelope.trace.clear();
    }
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&envelope).expect("envelope serializes")
        ),
        Format::Text => print!("{}", envelope.render_text()),
    }
    std::process::exit(envelope.status.exit_code());
}

fn parse_and_validate(command: &str, spec: &str) -> Result<Validated, Box<Envelope>> {
    let p = parser::parse_presentation(spec)
        .map_err(|e| Box::new(Envelope::invalid(command, e)))?;
    validate(&p).map_err(|d| Box::new(Envelope::invalid(command, d)))
}

fn descriptor_status(d: &AbGroupDescriptor) -> Status {
    if d.is_unknown() {
        Status::Unknown
    } else {
        Status::Ok
    }
}

fn dispatch(cli: &Cli, tables: &PiTables) -> Envelope {
    match &cli.command {
        Command::S { spec } => {
            let v = match parse_and_validate("s", spec) {
                Ok(v) => v,
                Err(e) => return *e,
            };
            let canonical = v.canonicalize();
            Envelope::new(
                format!("s {spec}"),
                Status::Ok,
                json!({
                    "presentation": v.presentation().to_string(),
                    "s": v.s_invariant(),
                    "factor_orders": v.factor_orders(),
                    "samelson_order": classify::samelson_order(&v),
                    "canonical_presentation": canonical.presentation().to_string(),
                }),
            )
            .cite(tags::S_DEFINITION)
            .cite(tags::S_LCM)
            .cite(classify::citations::SAMELSON_ORDER)
        }
        Command::Classify { spec, k, l } => {
            let v = match parse_and_validate("classify", spec) {
                Ok(v) => v,
                Err(e) => return *e,
            };
            let eq = classify::equivalent(&v, *k, *l);
            Envelope::new(
                format!("classify {spec} --k {k} --l {l}"),
                Status::Ok,
                json!({
                    "verdict": eq.verdict.to_string(),
                    "s": eq.s,
                    "gcd_k": eq.gcd_k,
                    "gcd_l": eq.gcd_l,
                }),
            )
            .cite(eq.citation)
        }
        Command::Classes { spec } => {
            let v = match parse_and_validate("classes", spec) {
                Ok(v) => v,
                Err(e) => return *e,
            };
            let c = classify::class_count(&v);
            Envelope::new(
                format!("classes {spec}"),
                Status::Ok,
                json!({
                    "s": v.s_invariant(),
                    "count": c.count,
                    "representatives": c.representatives,
                    "exactness": c.exactness,
                }),
            )
            .cite(classify::citations::GCD_SUFFICIENT)
            .cite(if matches!(c.exactness, classify::Exactness::Exact) {
                classify::citations::GCD_COMPLETE_FOR_FAMILY
            } else {
                classify::citations::SUFFICIENT_ONLY
            })
        }
        Command::Pi { spec, genus, k, i, base } => {
            let v = match parse_and_validate("pi", spec) {
                Ok(v) => v,
                Err(e) => return *e,
            };
            let base = match base {
                BaseArg::Surface => Base::Surface,
                BaseArg::Sphere => Base::Sphere,
            };
            let command = format!("pi {spec} --genus {genus} --k {k} --i {i}");
            if *i == 0 {
                let d = homotopy::gauge_components(&v, *genus, *k, base);
                return Envelope::new(command, Status::Ok, json!({ "pi_0": d }))
                    .cite(tags::CONNECTED);
            }
            let q = GaugeQuery { genus: *genus, k: *k, degree: *i, base };
            let r = homotopy::gauge_pi(&v, &q, tables);
            let mut env = Envelope::new(
                command,
                descriptor_status(&r.value),
                json!({ "group": r.value, "route": r.route }),
            )
            .with_trace(r.trace);
            for w in r.warnings {
                env = env.warn(w);
            }
            env = match r.route {
                homotopy::Route::Decomposition => {
                    env.cite(tags::TRIVIAL_SPLITTING).cite(tags::SURFACE_LOOPS)
                }
                homotopy::Route::ExactSequence => {
                    env.cite(tags::EVALUATION_FIBRATION).cite(tags::BOTT_MULTIPLIER)
                }
                homotopy::Route::Unresolved => env.cite(tags::EVALUATION_FIBRATION),
            };
            env
        }
        Command::Moduli { n, k, genus, i } => {
            let command = format!("moduli --n {n} --k {k} --genus {genus} --i {i}");
            match homotopy::moduli_pi(*n, *k, *genus, *i, tables) {
                Ok(r) => {
                    let mut env = Envelope::new(
                        command,
                        descriptor_status(&r.value),
                        json!({ "group": r.value, "route": r.route }),
                    )
                    .with_trace(r.trace)
                    .cite(tags::DU_RANGE);
                    for w in r.warnings {
                        env = env.warn(w);
                    }
                    env
                }
                Err(e @ ModuliError::Rejected) => {
                    Envelope::new(command, Status::Rejected, json!({ "error": e.to_string() }))
                        .cite(tags::DU_RANGE)
                }
                Err(e @ ModuliError::OutOfRange { .. }) => {
                    Envelope::new(command, Status::OutOfRange, json!({ "error": e.to_string() }))
                        .cite(tags::DU_RANGE)
                }
                Err(e) => Envelope::invalid(command, e),
            }
        }
        Command::Verify { case } => run_verify(case),
    }
}

fn collect_reports(
    command: String,
    reports: Result<Vec<CheckReport>, verify::VerifyError>,
    citation: &'static str,
) -> Envelope {
    match reports {
        Err(e) => Envelope::invalid(command, e),
        Ok(reports) => {
            let all_pass = reports.iter().all(CheckReport::all_pass);
            let status = if all_pass { Status::Ok } else { Status::VerificationFailed };
            let trace: Vec<String> = reports
                .iter()
                .flat_map(|r| {
                    r.checks
                        .iter()
                        .map(move |c| format!("{}/{}: {}", r.case_id, c.name, c.detail))
                        .chain(r.notes.iter().map(move |n| format!("{}/{}", r.case_id, n)))
                })
                .collect();
            let summary: Vec<_> = reports
                .iter()
                .map(|r| json!({ "case": r.case_id, "pass": r.all_pass(), "checks": r.checks }))
                .collect();
            Envelope::new(command, status, json!({ "all_pass": all_pass, "cases": summary }))
                .cite(citation)
                .with_trace(trace)
        }
    }
}

fn run_verify(case: &VerifyCase) -> Envelope {
    match case {
        VerifyCase::Wu { i, j, n } => collect_reports(
            format!("verify wu --i {i} --j {j} --n {n}"),
            verify::verify_wu(*i, *j, *n).map(|r| vec![r]),
            tags::WU_FORMULA,
        ),
        VerifyCase::SqLemma { n } => collect_reports(
            format!("verify sq-lemma --n {n}"),
            verify::verify_sq_lemma(*n).map(|r| vec![r]),
            tags::SQ_LEMMA,
        ),
        VerifyCase::Criterion { which } => {
            let (label, runs) = match which {
                CriterionCase::Psp { n } => {
                    let ns = n.map(|n| vec![n]).unwrap_or_else(|| vec![2, 3]);
                    (
                        "psp",
                        ns.into_iter().map(verify::verify_criterion_psp).collect::<Vec<_>>(),
                    )
                }
                CriterionCase::SoOdd { n } => {
                    let ns = n.map(|n| vec![n]).unwrap_or_else(|| vec![9, 13]);
                    ("so-odd", ns.into_iter().map(verify::verify_criterion_so).collect())
                }
                CriterionCase::SoEven { n } => {
                    let ns = n.map(|n| vec![n]).unwrap_or_else(|| vec![8, 12]);
                    ("so-even", ns.into_iter().map(verify::verify_criterion_so).collect())
                }
                CriterionCase::E7 => ("e7", vec![verify::verify_criterion_e7()]),
            };
            collect_reports(
                format!("verify criterion {label}"),
                runs.into_iter().collect(),
                tags::CRITERION,
            )
        }
        VerifyCase::Commutator { which } => {
            let (label, runs) = match which {
                CommutatorCase::Po4n { n } => {
                    let ns = n.map(|n| vec![n]).unwrap_or_else(|| vec![3, 4]);
                    (
                        "po4n",
                        ns.into_iter().map(verify::verify_commutator_po4n).collect::<Vec<_>>(),
                    )
                }
                CommutatorCase::E6 => ("e6", vec![verify::verify_commutator_e6()]),
            };
            collect_reports(
                format!("verify commutator {label}"),
                runs.into_iter().collect(),
                tags::COMMUTATOR,
            )
        }
        VerifyCase::All => {
            collect_reports("verify all".to_string(), verify::verify_all(), tags::CRITERION)
        }
    }
}

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use jetlaw::determining::{cosym_residual, noether_scan, sym_residual, OperatorKind, ScanOutcome};
use jetlaw::dsl::{parse, parse_equation, Context};
use jetlaw::report::{Case, Report, Verdict};
use jetlaw::{euler, ConservationLaw, Error, Expr};

#[derive(Parser)]
#[command(
    name = "jetlaw",
    version,
    about = "Conservation laws, cosymmetries and Noether operators of evolution equations"
)]
struct Cli {
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Declare a function, e.g. `--fn g/1`. Repeatable.
    #[arg(long = "fn", value_name = "NAME/ARITY", global = true)]
    functions: Vec<String>,

    /// Worker threads for concurrent work.
    #[arg(long, env = "JETLAW_JOBS", global = true)]
    jobs: Option<usize>,

    /// Report zero timings (for reproducible output).
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check D_t(rho) + D_x(sigma) + D_y(zeta) = 0.
    Verify {
        #[arg(long)]
        eq: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// Variational derivative of an expression.
    Euler {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Cosymmetry residual D_t(gamma) + D_F*(gamma).
    Cosym {
        #[arg(long)]
        eq: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Symmetry residual D_t(G) - D_F(G).
    Sym {
        #[arg(long)]
        eq: String,
        #[arg(long = "char", allow_hyphen_values = true)]
        characteristic: String,
    },
    /// Try to force every coefficient of a generic operator ansatz to zero.
    NoetherScan {
        #[arg(long, default_value = "gir(a=a, f=f)")]
        eq: String,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        #[arg(long, default_value_t = 2)]
        smax: u32,
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Scan for inverse Noether operators.
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite.
    Suite { name: SuiteName },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Ir,
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e)
    }
}

fn single_case(
    id: &str,
    inputs: Vec<(&str, String)>,
    residual: &Expr,
    expected: Verdict,
    start: Instant,
) -> Report {
    Report {
        suite: id.to_string(),
        cases: vec![Case {
            id: id.to_string(),
            verdict: Verdict::of(residual),
            residual: residual.to_string(),
            millis: start.elapsed().as_millis() as u64,
            expected,
            tag: "cli".into(),
            inputs: inputs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect::<BTreeMap<_, _>>(),
        }],
        notes: vec![],
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let mut ctx = Context::new();
    for spec in &cli.functions {
        ctx.declare_spec(spec)?;
    }
    let start = Instant::now();
    let report = match cli.command {
        Command::Verify {
            eq,
            rho,
            sigma,
            zeta,
        } => {
            let equation = parse_equation(&eq, &mut ctx)?;
            let law = ConservationLaw::new(
                &equation,
                parse(&rho, &ctx)?,
                parse(&sigma, &ctx)?,
                parse(&zeta, &ctx)?,
            );
            let inputs = vec![("eq", eq), ("rho", rho), ("sigma", sigma), ("zeta", zeta)];
            single_case("verify", inputs, &law.residual(), Verdict::Zero, start)
        }
        Command::Euler { expr } => {
            let e = parse(&expr, &ctx)?;
            let image = euler(&e);
            let mut r = single_case(
                "euler",
                vec![("expr", expr)],
                &image,
                Verdict::of(&image),
                start,
            );
            r.cases[0].tag = "value".into();
            r
        }
        Command::Cosym { eq, gamma } => {
            let equation = parse_equation(&eq, &mut ctx)?;
            let g = parse(&gamma, &ctx)?;
            let residual = cosym_residual(&equation, &g);
            single_case(
                "cosym",
                vec![("eq", eq), ("gamma", gamma)],
                &residual,
                Verdict::Zero,
                start,
            )
        }
        Command::Sym { eq, characteristic } => {
            let equation = parse_equation(&eq, &mut ctx)?;
            let g = parse(&characteristic, &ctx)?;
            let residual = sym_residual(&equation, &g);
            single_case(
                "sym",
                vec![("eq", eq), ("char", characteristic)],
                &residual,
                Verdict::Zero,
                start,
            )
        }
        Command::NoetherScan {
            eq,
            rmax,
            smax,
            order,
            inverse,
        } => {
            let equation = parse_equation(&eq, &mut ctx)?;
            let kind = if inverse {
                OperatorKind::InverseNoether
            } else {
                OperatorKind::Noether
            };
            let scan = jetlaw::par::with_jobs(cli.jobs, || {
                noether_scan(&equation, rmax, smax, order, kind)
            });
            let steps: Vec<String> = scan
                .steps
                .iter()
                .map(|s| {
                    format!(
                        "{}_{}_{}@{:?}:{}",
                        if inverse { "b" } else { "p" },
                        s.coefficient.0,
                        s.coefficient.1,
                        s.position,
                        s.factor
                    )
                })
                .collect();
            let (verdict, residual) = match &scan.outcome {
                ScanOutcome::AllForced => (Verdict::ForcedZero, "0".to_string()),
                ScanOutcome::Inconclusive { coefficient, .. } => {
                    (Verdict::Inconclusive, coefficient.to_string())
                }
                ScanOutcome::Unforced { remaining } => {
                    (Verdict::Inconclusive, format!("unforced {remaining:?}"))
                }
            };
            Report {
                suite: "noether-scan".into(),
                cases: vec![Case {
                    id: if inverse {
                        "inverse-noether-scan".into()
                    } else {
                        "noether-scan".into()
                    },
                    verdict,
                    residual,
                    millis: start.elapsed().as_millis() as u64,
                    expected: Verdict::ForcedZero,
                    tag: "scan".into(),
                    inputs: BTreeMap::from([
                        ("eq".to_string(), eq),
                        ("rmax".to_string(), rmax.to_string()),
                        ("smax".to_string(), smax.to_string()),
                        ("order".to_string(), order.to_string()),
                        ("steps".to_string(), steps.join(" ")),
                    ]),
                }],
                notes: vec![],
            }
        }
        Command::Suite {
            name: SuiteName::Ir,
        } => jetlaw::suite::run_ir(cli.jobs),
    };
    let report = if cli.no_timing {
        report.without_timing()
    } else {
        report
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.all_passed() {
        Ok(report)
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

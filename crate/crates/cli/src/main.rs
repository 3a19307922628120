use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use nashjet_core::derivations::{derivation_spaces, full_window};
use nashjet_core::report::{derivation_report, ideal_report, jacobian_report, quotient_report};
use nashjet_core::verify::{
    bundled_catalog, parse_catalog, render_table, verify_all, CatalogReport, SingularityInstance, VerifyConfig,
};
use nashjet_core::{
    build_jacobian, maximal_minors, parse_polynomial, quotient_basis, Error, MonomialOrder, Polynomial, Variant,
    WeightSystem, DEFAULT_MAX_MINORS, VERSION,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "nashjet", version, about = "Higher-order Jacobian minors, quotient algebras and their derivations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Omit the generation time from the report envelope.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Maximum number of column subsets to enumerate [env: NASHJET_MAX_MINORS].
    #[arg(long, global = true)]
    max_minors: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order-n Jacobian matrix, optionally with its maximal minors.
    Jacobian {
        #[command(flatten)]
        input: Input,
        /// Also list the distinct maximal minors.
        #[arg(long)]
        minors: bool,
    },
    /// Generators of the minor ideal and the reduced basis of ⟨f⟩ + J_n(f).
    Ideal {
        #[command(flatten)]
        input: Input,
    },
    /// Standard monomials and graded dimensions of Q[x]/⟨f, J_n(f)⟩.
    Basis {
        #[command(flatten)]
        input: Input,
    },
    /// Graded derivation spaces of Q[x]/⟨f, J_n(f)⟩.
    Derivations {
        #[command(flatten)]
        input: Input,
        /// Degree range `a..b` (inclusive); defaults to the full window.
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
    },
    /// Check one singularity: hypotheses, degree bound and negative derivations.
    Verify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        weights: WeightSystem,
        /// Single order to check; defaults to 2 and 3.
        #[arg(short, long)]
        n: Option<u32>,
        /// Run the full battery (adds inclusion, gradedness and variant checks).
        #[arg(long)]
        all: bool,
    },
    /// Work with singularity catalogs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Verify every entry of a catalog file.
    Run {
        #[arg(required_unless_present = "bundled")]
        file: Option<PathBuf>,
        /// Use the catalog shipped with the tool.
        #[arg(long, conflicts_with = "file")]
        bundled: bool,
    },
    /// Print the bundled catalog.
    Show,
}

#[derive(Args)]
struct Input {
    /// Polynomial, e.g. "x^3 + y^3".
    #[arg(long)]
    poly: String,
    /// Positive integer weights, comma separated; their count fixes the number of variables.
    #[arg(long)]
    weights: WeightSystem,
    /// Order of the Jacobian.
    #[arg(short, long, default_value_t = 2)]
    n: u32,
    #[arg(long, default_value = "zero")]
    variant: Variant,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::TooManyMinors { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        let message = match &e {
            Error::Parse(p) => p.render(),
            other => format!("error: {other}"),
        };
        Failure { code, message }
    }
}

struct Loaded {
    f: Polynomial,
    w: WeightSystem,
    n: u32,
    variant: Variant,
}

impl Input {
    fn load(&self) -> Result<Loaded, Failure> {
        let f = parse_polynomial(&self.poly, self.weights.nvars()).map_err(Error::from)?;
        if self.n == 0 {
            return Err(Error::InvalidOrder(0).into());
        }
        Ok(Loaded { f, w: self.weights.clone(), n: self.n, variant: self.variant })
    }

    fn config(&self) -> Value {
        json!({ "poly": self.poly, "weights": self.weights.as_slice(), "n": self.n, "variant": self.variant })
    }
}

fn cap(cli: &Cli) -> Result<usize, Failure> {
    if let Some(c) = cli.max_minors {
        return Ok(c);
    }
    match std::env::var("NASHJET_MAX_MINORS") {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("error: NASHJET_MAX_MINORS={v:?} is not a non-negative integer"),
        }),
        Err(_) => Ok(DEFAULT_MAX_MINORS),
    }
}

fn parse_degrees(text: &str) -> Result<Vec<i64>, Failure> {
    let bad = || Failure { code: EXIT_USAGE, message: format!("error: degree range {text:?} is not of the form a..b") };
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    Ok((a..=b).collect())
}

/// A report plus the verdict that decides the exit code.
struct Output {
    body: Value,
    table: String,
    failed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn catalog_output(report: &CatalogReport) -> Output {
    Output { body: to_value(report), table: render_table(report), failed: report.any_failed() }
}

fn run(cli: &Cli) -> Result<(Value, Output), Failure> {
    let cap = cap(cli)?;
    let cfg = VerifyConfig { max_minors: cap, full_battery: true };
    match &cli.command {
        Command::Jacobian { input, minors } => {
            let l = input.load()?;
            let j = build_jacobian(&l.f, l.n, l.variant)?;
            let m = if *minors { Some(maximal_minors(&j, cap)?) } else { None };
            let r = jacobian_report(&j, &l.w, m.as_ref());
            let mut table = format!("{} × {} matrix, rows {:?}, columns {:?}\n", r.rows.len(), r.cols.len(), r.rows, r.cols);
            for e in &r.entries {
                table.push_str(&format!("[{}, {}] {}\n", e.row, e.col, e.value));
            }
            for mv in r.minors.iter().flatten() {
                table.push_str(&format!("minor {:?} degree {:?}: {}\n", mv.columns, mv.degree, mv.polynomial));
            }
            Ok((input.config(), Output { body: to_value(&r), table, failed: false }))
        }
        Command::Ideal { input } => {
            let l = input.load()?;
            let j = build_jacobian(&l.f, l.n, l.variant)?;
            let m = maximal_minors(&j, cap)?;
            let mut gens = vec![l.f.clone()];
            gens.extend(m.generators.iter().cloned());
            let q = quotient_basis(&gens, &MonomialOrder::new(l.w.clone()));
            let r = ideal_report(&j, &m, &q);
            let mut table = format!("{} subsets, {} nonzero minors, {} generators\n", r.subsets, r.nonzero_minors, r.generators.len());
            for g in &r.generators {
                table.push_str(&format!("  {:?} deg {:?}: {}\n", g.columns, g.degree, g.polynomial));
            }
            table.push_str("reduced basis of <f, J_n(f)>:\n");
            for b in &r.reduced_basis {
                table.push_str(&format!("  {b}\n"));
            }
            Ok((input.config(), Output { body: to_value(&r), table, failed: false }))
        }
        Command::Basis { input } => {
            let l = input.load()?;
            let q = tn_quotient(&l, cap)?;
            let r = quotient_report(&q);
            let table = match (&r.dims_by_degree, r.total_dim) {
                (Some(dims), Some(total)) => {
                    let mut t = format!("dimension {total}\n");
                    for (d, k) in dims {
                        t.push_str(&format!("  degree {d}: {k}\n"));
                    }
                    t
                }
                _ => "quotient is infinite-dimensional\n".to_string(),
            };
            Ok((input.config(), Output { body: to_value(&r), table, failed: false }))
        }
        Command::Derivations { input, degrees } => {
            let l = input.load()?;
            let q = tn_quotient(&l, cap)?;
            if !q.is_finite() {
                return Err(Error::InfiniteDimensional.into());
            }
            let degrees = match degrees {
                Some(text) => parse_degrees(text)?,
                None => full_window(&q, &l.w).collect(),
            };
            let order = MonomialOrder::new(l.w.clone());
            let reports = derivation_spaces(&q, &l.w, degrees)?;
            let views: Vec<_> = reports.iter().map(|r| derivation_report(r, &order)).collect();
            let mut table = String::new();
            for v in &views {
                table.push_str(&format!("degree {:>3}: dimension {}\n", v.degree, v.dimension));
                for b in &v.basis {
                    table.push_str(&format!("    ({})\n", b.join(", ")));
                }
            }
            let mut config = input.config();
            config["degrees"] = json!(views.iter().map(|v| v.degree).collect::<Vec<_>>());
            Ok((config, Output { body: to_value(&views), table, failed: false }))
        }
        Command::Verify { poly, weights, n, all } => {
            let n_range = match n {
                Some(0) => return Err(Error::InvalidOrder(0).into()),
                Some(n) => vec![*n],
                None => vec![2, 3],
            };
            let inst = SingularityInstance::new(poly, poly, weights.as_slice(), &n_range)?;
            let cfg = VerifyConfig { full_battery: *all, ..cfg };
            let config = json!({
                "poly": poly,
                "weights": weights.as_slice(),
                "n_range": n_range,
                "all": all,
                "max_minors": cap,
            });
            Ok((config, catalog_output(&verify_all(&[inst], &cfg))))
        }
        Command::Catalog { action: CatalogAction::Show } => {
            let text = nashjet_core::verify::BUNDLED_CATALOG;
            let body: Value = serde_json::from_str(text).expect("bundled catalog is JSON");
            Ok((json!({}), Output { body, table: text.to_string(), failed: false }))
        }
        Command::Catalog { action: CatalogAction::Run { file, bundled } } => {
            let (instances, source) = if *bundled {
                (bundled_catalog(), "bundled".to_string())
            } else {
                let path = file.as_ref().expect("required");
                let text = std::fs::read_to_string(path).map_err(|e| Failure {
                    code: EXIT_USAGE,
                    message: format!("error: cannot read {}: {e}", path.display()),
                })?;
                (parse_catalog(&text)?, path.display().to_string())
            };
            let config = json!({ "catalog": source, "max_minors": cap });
            Ok((config, catalog_output(&verify_all(&instances, &cfg))))
        }
    }
}

fn tn_quotient(l: &Loaded, cap: usize) -> Result<nashjet_core::GradedQuotient, Failure> {
    let j = build_jacobian(&l.f, l.n, l.variant)?;
    let m = maximal_minors(&j, cap)?;
    let mut gens = vec![l.f.clone()];
    gens.extend(m.generators);
    Ok(quotient_basis(&gens, &MonomialOrder::new(l.w.clone())))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Jacobian { .. } => "jacobian",
        Command::Ideal { .. } => "ideal",
        Command::Basis { .. } => "basis",
        Command::Derivations { .. } => "derivations",
        Command::Verify { .. } => "verify",
        Command::Catalog { action: CatalogAction::Run { .. } } => "catalog run",
        Command::Catalog { action: CatalogAction::Show } => "catalog show",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (config, output) = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("{}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let text = match cli.format {
        Format::Table => output.table,
        Format::Json => {
            let mut envelope = json!({
                "tool": "nashjet",
                "version": VERSION,
                "command": command_name(&cli.command),
                "config": config,
                "report": output.body,
            });
            if !cli.no_timestamp {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
                envelope["generated_unix"] = json!(secs);
            }
            serde_json::to_string_pretty(&envelope).expect("serializable") + "\n"
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    if output.failed {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

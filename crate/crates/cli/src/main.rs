//! `jackal`: compute Jack functions and g-polynomials, run the verification
//! suites and the conjecture sweeps.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jackal_core::jack::{JackStore, CACHE_FORMAT_VERSION};
use jackal_core::verify::{self, conjecture_lowest, PiTable, Report, CONJECTURES, SUITES};
use jackal_core::{
    g_poly, hook_products, jack_gs, lr_coeff, skew_def, skew_stanley, JackExpansion, Method,
    Partition, SkewShape,
};

#[derive(Parser)]
#[command(
    name = "jackal",
    version,
    about = "Exact Jack symmetric functions and Stanley g-polynomials"
)]
struct Cli {
    /// Directory for cached expansions and findings files.
    #[arg(long, global = true, default_value = "./.jackal-cache")]
    cache_dir: PathBuf,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Zero the wall-clock fields in reports so runs compare byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Jack,
    Skew,
    G,
    Norm,
    Lr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Ks,
    Gs,
    Stanley,
    Definition,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single object.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Run a verification suite over proven identities.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(suite_names()))]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// Sweep a conjecture; findings are saved under <cache-dir>/findings.
    Conjecture {
        #[arg(value_parser = PossibleValuesParser::new(CONJECTURES))]
        name: String,
        /// Defaults to 6, or |μ|+4 for `lowest`.
        #[arg(long)]
        max_size: Option<usize>,
        /// Inner partition for `lowest`.
        #[arg(long, default_value = "1")]
        mu: Partition,
    },
    /// Inspect or empty the on-disk cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Stats,
    Clear,
}

fn suite_names() -> Vec<&'static str> {
    SUITES.iter().copied().chain(["all"]).collect()
}

enum Fail {
    Usage(String),
    Io(String),
}

impl From<jackal_core::Error> for Fail {
    fn from(e: jackal_core::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Io(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Text => out.text,
                Format::Json => {
                    serde_json::to_string_pretty(&out.json).expect("output serializes") + "\n"
                }
            };
            if let Err(e) = emit(cli.out.as_deref(), &rendered) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(path: Option<&Path>, s: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, s),
        None => std::io::stdout().lock().write_all(s.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<Output, Fail> {
    if !matches!(cli.command, Command::Cache { .. }) {
        JackStore::global().set_cache_dir(Some(cli.cache_dir.clone()));
    }
    match &cli.command {
        Command::Compute {
            kind,
            lambda,
            mu,
            nu,
            method,
        } => compute(*kind, lambda, mu, nu.as_ref(), *method),
        Command::Verify { suite, max_size } => {
            let reports = verify::run_suite(suite, *max_size)
                .ok_or_else(|| Fail::Usage(format!("unknown suite {suite}")))?;
            Ok(reports_output(reports, cli.no_timing, suite == "all"))
        }
        Command::Conjecture { name, max_size, mu } => conjecture(cli, name, *max_size, mu),
        Command::Cache { action } => cache(&cli.cache_dir, *action),
    }
}

fn expansion_output(e: JackExpansion) -> Output {
    Output {
        text: format!("{}\n", e.expansion),
        json: serde_json::to_value(&e).expect("expansion serializes"),
        ok: true,
    }
}

fn compute(
    kind: Kind,
    lambda: &Partition,
    mu: &Partition,
    nu: Option<&Partition>,
    method: Option<MethodArg>,
) -> Result<Output, Fail> {
    let need_nu = || nu.ok_or_else(|| Fail::Usage("--nu is required for this kind".into()));
    match kind {
        Kind::Jack => {
            let e = match method.unwrap_or(MethodArg::Ks) {
                MethodArg::Ks => JackExpansion {
                    shape: SkewShape::straight(lambda.clone()),
                    method: Method::Ks,
                    expansion: (*JackStore::global().jack(lambda)).clone(),
                },
                MethodArg::Gs => jack_gs(lambda)?,
                _ => return Err(Fail::Usage("jack accepts --method ks or gs".into())),
            };
            Ok(expansion_output(e))
        }
        Kind::Skew => {
            let shape = SkewShape::new(lambda.clone(), mu.clone())?;
            let e = match method.unwrap_or(MethodArg::Stanley) {
                MethodArg::Stanley => skew_stanley(&shape),
                MethodArg::Definition => skew_def(&shape)?,
                _ => {
                    return Err(Fail::Usage(
                        "skew accepts --method stanley or definition".into(),
                    ))
                }
            };
            Ok(expansion_output(e))
        }
        Kind::G => {
            let nu = need_nu()?;
            let g = g_poly(lambda, mu, nu)?;
            Ok(Output {
                text: format!("{g}\n"),
                json: json!({ "lambda": lambda, "mu": mu, "nu": nu, "g": g, "text": g.to_string() }),
                ok: true,
            })
        }
        Kind::Norm => {
            let h = hook_products(lambda);
            Ok(Output {
                text: format!("c = {}\nc' = {}\nj = {}\n", h.c, h.c_prime, h.j),
                json: serde_json::to_value(&h).expect("hook data serializes"),
                ok: true,
            })
        }
        Kind::Lr => {
            let nu = need_nu()?;
            let n = lr_coeff(lambda, mu, nu)?;
            Ok(Output {
                text: format!("{n}\n"),
                json: json!({ "lambda": lambda, "mu": mu, "nu": nu, "lr": n }),
                ok: true,
            })
        }
    }
}

fn report_text(r: &Report, out: &mut String) {
    out.push_str(&r.summary_line());
    out.push('\n');
    for f in &r.failures {
        out.push_str(&format!("  FAIL {}: {} != {}", f.input, f.lhs, f.rhs));
        if !f.note.is_empty() {
            out.push_str(&format!(" ({})", f.note));
        }
        out.push('\n');
    }
    for f in &r.findings {
        out.push_str(&format!("  FINDING {}: {} vs {}", f.input, f.lhs, f.rhs));
        if !f.note.is_empty() {
            out.push_str(&format!(" ({})", f.note));
        }
        out.push('\n');
    }
}

fn reports_output(reports: Vec<Report>, no_timing: bool, many: bool) -> Output {
    let reports: Vec<Report> = if no_timing {
        reports.into_iter().map(Report::without_timing).collect()
    } else {
        reports
    };
    let mut text = String::new();
    for r in &reports {
        report_text(r, &mut text);
    }
    let ok = reports.iter().all(Report::passed);
    let json = if many {
        serde_json::to_value(&reports)
    } else {
        serde_json::to_value(&reports[0])
    }
    .expect("report serializes");
    Output { text, json, ok }
}

fn pi_table_text(t: &PiTable, out: &mut String) {
    for c in &t.classes {
        match &c.pi {
            Some(v) => out.push_str(&format!("  π{} = {}\n", c.cells, v)),
            None => out.push_str(&format!("  π{} undetermined\n", c.cells)),
        }
    }
}

fn conjecture(
    cli: &Cli,
    name: &str,
    max_size: Option<usize>,
    mu: &Partition,
) -> Result<Output, Fail> {
    let (report, table) = if name == "lowest" {
        let n = max_size.unwrap_or(mu.size() + 4);
        let (r, t) = conjecture_lowest(mu, n);
        (r, Some(t))
    } else {
        let r = verify::run_conjecture(name, max_size.unwrap_or(6), None)
            .ok_or_else(|| Fail::Usage(format!("unknown conjecture {name}")))?;
        (r, None)
    };
    let report = if cli.no_timing {
        report.without_timing()
    } else {
        report
    };
    let mut out = reports_output(vec![report.clone()], false, false);
    if let Some(t) = &table {
        pi_table_text(t, &mut out.text);
    }
    if !report.findings.is_empty() {
        let dir = cli.cache_dir.join("findings");
        fs::create_dir_all(&dir)?;
        let mut file = format!("{name}-n{}", report.bound);
        if name == "lowest" {
            file.push_str(&format!(
                "-mu{}",
                mu.parts()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join("_")
            ));
        }
        let path = dir.join(format!("{file}.json"));
        fs::write(
            &path,
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        )?;
        out.text
            .push_str(&format!("findings written to {}\n", path.display()));
    }
    Ok(out)
}

fn cache(dir: &Path, action: CacheAction) -> Result<Output, Fail> {
    let jdir = dir.join("J");
    match action {
        CacheAction::Stats => {
            let mut by_degree = serde_json::Map::new();
            let mut files = 0u64;
            let mut bytes = 0u64;
            let mut degrees: Vec<(usize, PathBuf)> = match fs::read_dir(&jdir) {
                Ok(rd) => rd
                    .filter_map(|e| e.ok())
                    .filter_map(|e| Some((e.file_name().to_str()?.parse().ok()?, e.path())))
                    .collect(),
                Err(_) => Vec::new(),
            };
            degrees.sort();
            let mut text = format!(
                "cache {} (format version {CACHE_FORMAT_VERSION})\n",
                dir.display()
            );
            for (n, path) in degrees {
                let mut count = 0u64;
                for e in fs::read_dir(&path)?.filter_map(|e| e.ok()) {
                    count += 1;
                    bytes += e.metadata()?.len();
                }
                files += count;
                text.push_str(&format!("  degree {n}: {count} expansions\n"));
                by_degree.insert(n.to_string(), json!(count));
            }
            text.push_str(&format!("  total: {files} files, {bytes} bytes\n"));
            Ok(Output {
                text,
                json: json!({
                    "cache_dir": dir.display().to_string(),
                    "format_version": CACHE_FORMAT_VERSION,
                    "files": files,
                    "bytes": bytes,
                    "by_degree": by_degree,
                }),
                ok: true,
            })
        }
        CacheAction::Clear => {
            let mut removed = Vec::new();
            for sub in ["J", "findings"] {
                let p = dir.join(sub);
                if p.exists() {
                    fs::remove_dir_all(&p)?;
                    removed.push(sub);
                }
            }
            Ok(Output {
                text: format!("cleared {}\n", dir.display()),
                json: json!({ "cache_dir": dir.display().to_string(), "removed": removed }),
                ok: true,
            })
        }
    }
}

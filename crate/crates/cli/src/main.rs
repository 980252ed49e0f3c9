use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser};

use siggb::{ModuleOrderKind, OrderKind, RewriteOrderKind, Strategy};
use siggb_cli::bench::BenchSpec;
use siggb_cli::driver::{format_record, run, RunConfig, StatsFormat};
use siggb_cli::ideal_file::IdealFile;

/// Signature-based Groebner basis engine.
#[derive(Parser, Debug)]
#[command(name = "siggb", version, about)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "bench"])))]
struct Cli {
    /// Ideal file to read.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Built-in benchmark system: katsura:N or cyclic:N.
    #[arg(long)]
    bench: Option<String>,

    /// Field characteristic (0 = rationals); overrides the file header.
    #[arg(long = "char")]
    characteristic: Option<u32>,

    /// Term order (grevlex, grlex, lex); overrides the file header.
    #[arg(long)]
    order: Option<String>,

    /// Module order: pot or schreyer.
    #[arg(long, default_value = "schreyer")]
    module_order: String,

    /// Rewrite order: f5, gvw, or inverted (test-only, known inadmissible).
    #[arg(long, default_value = "gvw")]
    rewrite_order: String,

    /// Pair selection strategy: sig, degree, or fifo.
    #[arg(long, default_value = "sig")]
    strategy: String,

    /// Check the result: Groebner test, labeled sampler, and (on small
    /// systems) a criteria-free oracle comparison.
    #[arg(long)]
    verify: bool,

    /// Output format: kv or table.
    #[arg(long, default_value = "kv")]
    stats_format: String,

    /// Seed for the verification sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Abort after this many popped pairs.
    #[arg(long, default_value_t = 1_000_000)]
    max_pairs: u64,

    /// Abort when a popped pair's lcm degree exceeds this.
    #[arg(long, default_value_t = 64)]
    max_degree: u32,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn resolve(cli: &Cli) -> Result<RunConfig, String> {
    let (label, mut ideal) = if let Some(path) = &cli.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let ideal = IdealFile::parse(&text).map_err(|e| e.to_string())?;
        (path.display().to_string(), ideal)
    } else {
        let spec = BenchSpec::from_str(cli.bench.as_deref().unwrap_or_default())
            .map_err(|e| e.to_string())?;
        let ideal = spec.generate().map_err(|e| e.to_string())?;
        (spec.name(), ideal)
    };
    if let Some(p) = cli.characteristic {
        if p != 0 {
            siggb::PrimeField::new(p).map_err(|e| format!("--char {p}: {e}"))?;
        }
        ideal.characteristic = p;
    }
    if let Some(name) = &cli.order {
        ideal.order =
            OrderKind::parse(name).ok_or_else(|| format!("unknown term order `{name}`"))?;
    }
    let module_order = ModuleOrderKind::parse(&cli.module_order)
        .ok_or_else(|| format!("unknown module order `{}`", cli.module_order))?;
    let rewrite_order = RewriteOrderKind::parse(&cli.rewrite_order)
        .ok_or_else(|| format!("unknown rewrite order `{}`", cli.rewrite_order))?;
    let strategy = Strategy::parse(&cli.strategy)
        .ok_or_else(|| format!("unknown strategy `{}`", cli.strategy))?;
    Ok(RunConfig {
        label,
        ideal,
        module_order,
        rewrite_order,
        strategy,
        verify: cli.verify,
        seed: cli.seed,
        max_pairs: cli.max_pairs,
        max_degree: cli.max_degree,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    let format = match StatsFormat::parse(&cli.stats_format) {
        Some(f) => f,
        None => return usage_error(&format!("unknown stats format `{}`", cli.stats_format)),
    };
    let cfg = match resolve(&cli) {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let outcome = run(&cfg);
    print!("{}", format_record(&outcome.record, format));
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(outcome.exit)
}

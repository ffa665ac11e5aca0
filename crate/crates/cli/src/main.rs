//! `agreelin` — solve, check, generate and census marked-hypergraph
//! instances from the command line.
//!
//! Exit codes are part of the contract: 0 when an order exists (or the
//! command succeeded), 1 when the answer is "no", 2 on any error.

mod format;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use agreelin::constructions::{self, Family, FamilySpec};
use agreelin::helly::{self, CensusMode, CensusReport, HellyScanReport};
use agreelin::model::{check_order, LinearOrder, MarkVariant, MarkedHypergraph};
use agreelin::{oracle, solvers};

use format::{parse_instance, serialize_instance};

#[derive(Parser)]
#[command(
    name = "agreelin",
    version,
    about = "Agreeing linear orders of marked uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether an instance has an agreeing linear order.
    Solve {
        /// Instance file.
        file: PathBuf,
        /// Use the exhaustive backtracking oracle instead of the structured
        /// solver.
        #[arg(long)]
        oracle: bool,
        /// Use the structured per-variant solver (the default).
        #[arg(long, conflicts_with = "oracle")]
        structured: bool,
        /// Also count all agreeing orders of the whole vertex set.
        #[arg(long)]
        count: bool,
    },
    /// Check one linear order against an instance.
    Check {
        /// Instance file.
        file: PathBuf,
        /// Comma-separated vertex ids, e.g. `--order 2,1,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<u32>,
    },
    /// Generate a named instance family.
    Gen {
        /// Family: two-extreme-tight, min-max-tight, one-extreme-cycle,
        /// sparse-cycle or natural.
        #[arg(long)]
        family: String,
        /// Uniformity.
        #[arg(long)]
        r: u32,
        /// Vertex count (one-extreme-cycle, natural).
        #[arg(long)]
        n: Option<u32>,
        /// Cycle length (sparse-cycle).
        #[arg(long)]
        m: Option<u32>,
        /// Mark variant (natural).
        #[arg(long)]
        variant: Option<String>,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide every k-subset of an instance plus the whole vertex set.
    Helly {
        /// Instance file.
        file: PathBuf,
        /// Subset size, r <= k <= n.
        #[arg(long)]
        k: u32,
        /// Also write the report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sweep markings of the (r, n)-clique for Helly counterexamples at k.
    Census {
        /// Mark variant.
        #[arg(long)]
        variant: String,
        /// Uniformity.
        #[arg(long)]
        r: u32,
        /// Vertex count.
        #[arg(long)]
        n: u32,
        /// Subset size.
        #[arg(long)]
        k: u32,
        /// Sample this many random markings instead of exhausting the space.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for random sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; never changes the output, only wall time.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Solve {
            file,
            oracle: use_oracle,
            structured: _,
            count,
        } => cmd_solve(&file, use_oracle, count),
        Cmd::Check { file, order } => cmd_check(&file, order),
        Cmd::Gen {
            family,
            r,
            n,
            m,
            variant,
            out,
        } => cmd_gen(&family, r, n, m, variant.as_deref(), out.as_deref()),
        Cmd::Helly { file, k, report } => cmd_helly(&file, k, report.as_deref()),
        Cmd::Census {
            variant,
            r,
            n,
            k,
            samples,
            seed,
            jobs,
        } => cmd_census(&variant, r, n, k, samples, seed, jobs),
    }
}

fn load(file: &std::path::Path) -> Result<MarkedHypergraph> {
    let text =
        fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    parse_instance(&text).with_context(|| format!("cannot parse {}", file.display()))
}

fn cmd_solve(file: &std::path::Path, use_oracle: bool, count: bool) -> Result<u8> {
    let h = load(file)?;
    let all = h.vertex_vec();
    let result = if use_oracle {
        oracle::decide(&h, &all)
    } else {
        solvers::solve_auto(&h)
    };
    println!("EXISTS {}", if result.exists { "yes" } else { "no" });
    if let Some(order) = &result.order {
        debug_assert!(check_order(&h, order).unwrap().agrees);
        println!("ORDER {order}");
    }
    if count {
        let counted = oracle::count(&h, &all);
        println!("COUNT {}", counted.count.unwrap_or(0));
    }
    Ok(u8::from(!result.exists))
}

fn cmd_check(file: &std::path::Path, order: Vec<u32>) -> Result<u8> {
    let h = load(file)?;
    let order = LinearOrder::new(order).context("invalid order")?;
    let verdict = check_order(&h, &order).context("invalid order")?;
    println!("AGREES {}", if verdict.agrees { "yes" } else { "no" });
    if let Some(witness) = verdict.witness {
        let ids: Vec<String> = witness.verts().iter().map(u32::to_string).collect();
        println!("WITNESS {}", ids.join(","));
    }
    Ok(u8::from(!verdict.agrees))
}

fn cmd_gen(
    family: &str,
    r: u32,
    n: Option<u32>,
    m: Option<u32>,
    variant: Option<&str>,
    out: Option<&std::path::Path>,
) -> Result<u8> {
    let family =
        Family::from_token(family).with_context(|| format!("unknown family {family:?}"))?;
    let variant = variant
        .map(|tok| MarkVariant::from_token(tok).with_context(|| format!("unknown variant {tok:?}")))
        .transpose()?;
    let spec = FamilySpec {
        family,
        r,
        n,
        m,
        variant,
    };
    let h = constructions::generate(&spec)?;
    let text = serialize_instance(&h);
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn render_helly(report: &HellyScanReport) -> String {
    let mut out = format!(
        "SUBSETS {} FAIL {} WHOLE {}\n",
        report.subsets_checked,
        report.failing_total,
        if report.whole_exists { "yes" } else { "no" }
    );
    for subset in &report.failing_subsets {
        let ids: Vec<String> = subset.iter().map(u32::to_string).collect();
        writeln!(out, "FAILING {}", ids.join(",")).unwrap();
    }
    out
}

fn cmd_helly(file: &std::path::Path, k: u32, report_path: Option<&std::path::Path>) -> Result<u8> {
    let h = load(file)?;
    if k < h.r() || k > h.n() {
        bail!("k must satisfy r <= k <= n (r={}, n={})", h.r(), h.n());
    }
    let report = helly::scan_subsets(&h, k);
    let text = render_helly(&report);
    print!("{text}");
    if let Some(path) = report_path {
        fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(0)
}

fn render_census(report: &CensusReport) -> String {
    let mut out = format!(
        "CENSUS {} r={} n={} k={}",
        report.variant.token(),
        report.r,
        report.n,
        report.k
    );
    match report.mode {
        CensusMode::Exhaustive => out.push_str(" MODE exhaustive\n"),
        CensusMode::Random { samples, seed } => {
            writeln!(out, " MODE random SAMPLES {samples} SEED {seed}").unwrap()
        }
    }
    writeln!(out, "INSTANCES {}", report.instances_total).unwrap();
    writeln!(out, "HELLY-K-PASS {}", report.instances_helly_k_pass).unwrap();
    writeln!(out, "COUNTEREXAMPLES {}", report.counterexamples_total).unwrap();
    for c in &report.counterexamples {
        let digits: Vec<String> = c.digits.iter().map(u32::to_string).collect();
        writeln!(out, "COUNTEREXAMPLE {} {}", c.index, digits.join(",")).unwrap();
    }
    out
}

fn cmd_census(
    variant: &str,
    r: u32,
    n: u32,
    k: u32,
    samples: Option<u64>,
    seed: u64,
    jobs: usize,
) -> Result<u8> {
    let variant =
        MarkVariant::from_token(variant).with_context(|| format!("unknown variant {variant:?}"))?;
    if r < 3 || k < r || k > n {
        bail!("census requires 3 <= r <= k <= n");
    }
    let report = match samples {
        Some(samples) => helly::census_random(variant, r, n, k, samples, seed, jobs),
        None => helly::census_exhaustive(variant, r, n, k, helly::DEFAULT_CENSUS_BUDGET, jobs)?,
    };
    print!("{}", render_census(&report));
    Ok(0)
}

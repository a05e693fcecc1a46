//! `pfactor`: find parity factors, evaluate degree conditions and run seeded
//! validation sweeps from the command line.
//!
//! Graphs are read in the edge-list text format (`-` reads stdin). Results
//! are JSON on stdout. Exit codes: 0 ran to completion, 1 usage or input
//! error, 2 a validation run found a counterexample.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pfactor::conditions::{check_li_cai, check_main_with, check_nishimura, check_odd_lemma, MainOptions};
use pfactor::experiment::{Family, Mode};
use pfactor::extremal::{build_apex_extremal, build_bipartite_extremal};
use pfactor::generate::{generate, Model, Probability};
use pfactor::parity::{certificate_search, DEFAULT_CERT_MAX_N};
use pfactor::reduction::{build_gadget, clamp_spec};
use pfactor::{
    find_parity_factor, format_graph_text, parse_graph_text, run_validation, Graph, ParitySpec, TheoremId,
    TrialConfig,
};

/// Environment variable giving the worker-thread count for `validate`.
const WORKERS_ENV: &str = "PFACTOR_WORKERS";

#[derive(Parser)]
#[command(name = "pfactor", version, about = "Parity factors of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has an (a,b)-parity factor.
    Find {
        graph: PathBuf,
        a: usize,
        b: usize,
        /// Attach an exhaustive deficiency certificate when there is no factor.
        #[arg(long)]
        certificate: bool,
        #[arg(long, default_value_t = DEFAULT_CERT_MAX_N)]
        cert_max_n: usize,
        /// Write the matching gadget to PATH and its node map to PATH.map.
        #[arg(long, value_name = "PATH")]
        dump_gadget: Option<PathBuf>,
    },
    /// Evaluate a theorem's hypothesis clause by clause.
    Check {
        graph: PathBuf,
        #[arg(long)]
        theorem: TheoremArg,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Count connectivity towards the main theorem's verdict.
        #[arg(long)]
        require_connected: bool,
    },
    /// Exhaustive search for a negative-deficiency pair (S, T).
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = DEFAULT_CERT_MAX_N)]
        max_n: usize,
    },
    /// Print a generated graph in text form.
    Gen {
        #[arg(long)]
        model: ModelArg,
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability `num/den` for gnp.
        #[arg(long)]
        p: Option<Probability>,
        /// Part sizes for bipartite.
        #[arg(long)]
        left: Option<usize>,
        #[arg(long)]
        right: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print an extremal graph in text form.
    Extremal {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a seeded validation sweep and print the JSON report.
    Validate(ValidateArgs),
}

#[derive(clap::Args)]
struct ValidateArgs {
    /// JSON config file; excludes the other flags.
    #[arg(long, conflicts_with_all = ["theorem", "a", "b", "k", "n_min", "n_max", "p", "trials", "seed"])]
    config: Option<PathBuf>,
    #[arg(long)]
    theorem: Option<TheoremArg>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Edge probability `num/den`; repeatable.
    #[arg(long)]
    p: Vec<Probability>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    allow_disconnected: bool,
    #[arg(long)]
    certificates: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Random)]
    mode: ModeArg,
    #[arg(long)]
    family: Option<FamilyArg>,
    #[arg(long)]
    m_min: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Main,
    Nishimura,
    Licai,
    Oddlemma,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Main => TheoremId::Main,
            TheoremArg::Nishimura => TheoremId::Nishimura,
            TheoremArg::Licai => TheoremId::LiCai,
            TheoremArg::Oddlemma => TheoremId::OddLemma,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Complete,
    Cycle,
    Path,
    Bipartite,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bipartite,
    Apex,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Bipartite => Family::Bipartite,
            FamilyArg::Apex => Family::Apex,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Random,
    Exhaustive,
    Sharpness,
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_graph_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn need<T>(value: Option<T>, flag: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("missing --{flag}"))
}

fn find(
    path: &Path,
    a: usize,
    b: usize,
    certificate: bool,
    cert_max_n: usize,
    dump: Option<&Path>,
) -> anyhow::Result<()> {
    let graph = read_graph(path)?;
    let spec = ParitySpec::uniform(graph.vertex_count(), a, b)?;
    if let Some(dump) = dump {
        let clamped = clamp_spec(&graph, &spec)?;
        let gadget = build_gadget(&graph, &clamped).context("no gadget: some vertex has degree below a")?;
        fs::write(dump, format_graph_text(&gadget.gadget)).with_context(|| format!("writing {}", dump.display()))?;
        let mut map = dump.as_os_str().to_owned();
        map.push(".map");
        fs::write(&map, gadget.node_map_text()).with_context(|| format!("writing {}", dump.display()))?;
    }
    print_json(&find_parity_factor(&graph, &spec, certificate, cert_max_n)?)
}

fn check(
    path: &Path,
    theorem: TheoremId,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    require_connected: bool,
) -> anyhow::Result<()> {
    let graph = read_graph(path)?;
    let report = match theorem {
        TheoremId::Main => check_main_with(&graph, need(a, "a")?, need(b, "b")?, MainOptions { require_connected })?,
        TheoremId::LiCai => check_li_cai(&graph, need(a, "a")?, need(b, "b")?)?,
        TheoremId::Nishimura => check_nishimura(&graph, need(k, "k")?)?,
        TheoremId::OddLemma => check_odd_lemma(&graph, need(k, "k")?)?,
    };
    print_json(&report)
}

fn oracle(path: &Path, a: usize, b: usize, max_n: usize) -> anyhow::Result<()> {
    let graph = read_graph(path)?;
    let spec = ParitySpec::uniform(graph.vertex_count(), a, b)?;
    let certificate = certificate_search(&graph, &spec, max_n)?;
    print_json(&json!({
        "factor_exists": certificate.is_none(),
        "certificate": certificate,
    }))
}

struct GenArgs {
    model: ModelArg,
    n: Option<usize>,
    p: Option<Probability>,
    left: Option<usize>,
    right: Option<usize>,
    seed: u64,
}

fn gen(GenArgs { model, n, p, left, right, seed }: GenArgs) -> anyhow::Result<()> {
    let model = match model {
        ModelArg::Complete => Model::Complete { n: need(n, "n")? },
        ModelArg::Cycle => Model::Cycle { n: need(n, "n")? },
        ModelArg::Path => Model::Path { n: need(n, "n")? },
        ModelArg::Bipartite => Model::CompleteBipartite { p: need(left, "left")?, q: need(right, "right")? },
        ModelArg::Gnp => Model::Gnp { n: need(n, "n")?, p: need(p, "p")? },
    };
    print!("{}", format_graph_text(&generate(model, seed)?));
    Ok(())
}

fn extremal(family: FamilyArg, a: usize, b: usize, m: usize) -> anyhow::Result<()> {
    let graph = match family {
        FamilyArg::Bipartite => build_bipartite_extremal(a, b, m)?,
        FamilyArg::Apex => build_apex_extremal(a, b, m)?,
    };
    print!("{}", format_graph_text(&graph));
    Ok(())
}

fn validate_config(args: ValidateArgs) -> anyhow::Result<TrialConfig> {
    if let Some(path) = args.config {
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        return serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()));
    }
    let mode = match args.mode {
        ModeArg::Random => Mode::Random,
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Sharpness => Mode::Sharpness {
            family: need(args.family, "family")?.into(),
            m_min: need(args.m_min, "m-min")?,
            m_max: need(args.m_max, "m-max")?,
        },
    };
    Ok(TrialConfig {
        theorem: need(args.theorem, "theorem")?.into(),
        a: args.a,
        b: args.b,
        k: args.k,
        n_min: args.n_min.unwrap_or(0),
        n_max: args.n_max.unwrap_or(0),
        probabilities: args.p,
        trials: args.trials,
        seed: args.seed,
        connected_only: !args.allow_disconnected,
        certificates: args.certificates,
        mode,
    })
}

fn configure_workers() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let workers: usize = raw.parse().with_context(|| format!("{WORKERS_ENV}={raw:?} is not a count"))?;
        if workers == 0 {
            bail!("{WORKERS_ENV} must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    }
    Ok(())
}

/// Returns whether the run was free of counterexamples.
fn validate(args: ValidateArgs) -> anyhow::Result<bool> {
    configure_workers()?;
    let config = validate_config(args)?;
    let report = run_validation(&config)?;
    print!("{}", report.to_json());
    eprintln!(
        "{} trials, {} passing hypothesis, {} counterexamples in {:.3}s",
        report.trials_generated,
        report.trials_passing_hypothesis,
        report.counterexamples.len(),
        report.elapsed.as_secs_f64()
    );
    Ok(report.counterexamples.is_empty())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Find { graph, a, b, certificate, cert_max_n, dump_gadget } => {
            find(&graph, a, b, certificate, cert_max_n, dump_gadget.as_deref())?
        }
        Command::Check { graph, theorem, a, b, k, require_connected } => {
            check(&graph, theorem.into(), a, b, k, require_connected)?
        }
        Command::Oracle { graph, a, b, max_n } => oracle(&graph, a, b, max_n)?,
        Command::Gen { model, n, p, left, right, seed } => gen(GenArgs { model, n, p, left, right, seed })?,
        Command::Extremal { family, a, b, m } => extremal(family, a, b, m)?,
        Command::Validate(args) => {
            if !validate(args)? {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

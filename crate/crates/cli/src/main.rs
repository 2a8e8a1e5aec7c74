//! `domstruct`: domination-structure analysis of 3-connected graphs.
//!
//! Subcommands: `gamma` (exact + greedy domination number of one graph),
//! `analyze` (structures, families, label assignments, DOT export),
//! `verify` (a claim-checking campaign over a corpus), and `generate`
//! (corpus emission).  Exit codes: 0 success, 1 usage error, 2 I/O or
//! input error.  Failed claims are findings in the reports, never a
//! nonzero exit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use domstruct_cli::campaign::{build_corpus, run_campaign, CampaignConfig, CampaignError};
use domstruct_cli::dot::structure_dot;
use domstruct_cli::formats::{parse_by_extension, write_edge_list, write_graph6, ParseError};
use domstruct_cli::report::summarize;
use domstruct_core::domination::DEFAULT_ORACLE_LIMIT;
use domstruct_core::{
    brute_force_gamma, build_families, enumerate_structures, greedy_gamma, min_assignment,
    random_3connected, CycleBudget, Graph, NamedGraph,
};

// ============================================================
// Argument surface
// ============================================================

#[derive(Parser)]
#[command(
    name = "domstruct",
    version,
    about = "Domination structures on 3-connected graphs: enumerate, label, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination number of one graph (exact oracle + greedy).
    Gamma {
        /// Graph file; `.g6` is graph6, anything else is edge-list text.
        file: PathBuf,
        /// Exact-oracle size cap; beyond it only the greedy bound is run.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
    /// Enumerate structures, families, and minimum label assignments.
    Analyze {
        /// Graph file; `.g6` is graph6, anything else is edge-list text.
        file: PathBuf,
        /// Write one Graphviz file per structure into this directory.
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Write the JSON analysis here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the claim-checking campaign over a corpus of graphs.
    Verify {
        /// Campaign config (JSON); omitted, the built-in corpus runs.
        config: Option<PathBuf>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Override the random-corpus seed from the config.
        #[arg(long)]
        seed: Option<u64>,
        /// Record per-graph wall-clock times (costs byte determinism).
        #[arg(long)]
        timings: bool,
        /// Write the JSON Lines reports here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a corpus graph in edge-list or graph6 form.
    Generate {
        /// A named graph: k4, k5, prism3, wheel<k>, petersen, cube_q3,
        /// moebius_kantor.
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        named: Option<String>,
        /// Generate a random 3-connected graph with this many vertices.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Attempt cap for --random.
        #[arg(long, default_value_t = 64)]
        attempts: usize,
        /// Emit graph6 (implied by an `--out` path ending in .g6).
        #[arg(long)]
        g6: bool,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Search-budget overrides, merged over the config (or built-in) values.
#[derive(Args)]
struct BudgetArgs {
    /// Cycle length cap (default: the vertex count).
    #[arg(long)]
    max_cycle_len: Option<usize>,
    /// Cap on enumerated cycles of length divisible by three.
    #[arg(long)]
    max_cycles: Option<usize>,
    /// Cap on enumerated structures.
    #[arg(long)]
    max_structures: Option<usize>,
    /// Cap on enumerated families.
    #[arg(long)]
    max_families: Option<usize>,
    /// Exact-oracle size cap.
    #[arg(long)]
    oracle_limit: Option<usize>,
    /// Let a single shared vertex count as a seam.
    #[arg(long)]
    allow_vertex_seam: bool,
    /// Score phase assignments with the relaxed window rule.
    #[arg(long)]
    loose_pattern: bool,
}

impl BudgetArgs {
    fn apply(&self, config: &mut CampaignConfig) {
        if self.max_cycle_len.is_some() {
            config.max_cycle_len = self.max_cycle_len;
        }
        if let Some(v) = self.max_cycles {
            config.max_cycles = v;
        }
        if let Some(v) = self.max_structures {
            config.max_structures = v;
        }
        if let Some(v) = self.max_families {
            config.max_families = v;
        }
        if let Some(v) = self.oracle_limit {
            config.oracle_limit = v;
        }
        config.allow_vertex_seam |= self.allow_vertex_seam;
        config.loose_pattern |= self.loose_pattern;
    }
}

// ============================================================
// Errors and exit codes
// ============================================================

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    BadGraphFile { path: PathBuf, source: ParseError },
    #[error("{path}: invalid config: {source}")]
    BadConfig {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Campaign(#[from] CampaignError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // A bad graph name is a usage mistake; everything else is an
            // input/output problem.
            CliError::Campaign(CampaignError::UnknownGraph(_)) => 1,
            _ => 2,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gamma { file, oracle_limit } => cmd_gamma(&file, oracle_limit),
        Command::Analyze {
            file,
            dot,
            budgets,
            out,
        } => cmd_analyze(&file, dot.as_deref(), &budgets, out.as_deref()),
        Command::Verify {
            config,
            budgets,
            seed,
            timings,
            out,
        } => cmd_verify(config.as_deref(), &budgets, seed, timings, out.as_deref()),
        Command::Generate {
            named,
            random,
            seed,
            attempts,
            g6,
            out,
        } => cmd_generate(named, random, seed, attempts, g6, out.as_deref()),
    }
}

// ============================================================
// Subcommands
// ============================================================

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_by_extension(path, &text).map_err(|source| CliError::BadGraphFile {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content).map_err(io_err(path)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_gamma(file: &Path, oracle_limit: usize) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let oracle = brute_force_gamma(&g, oracle_limit).ok();
    let greedy = greedy_gamma(&g);
    let value = serde_json::json!({
        "file": file.display().to_string(),
        "n": g.n(),
        "m": g.m(),
        "oracle_gamma": oracle.as_ref().map(|r| r.gamma),
        "oracle_witness": oracle.as_ref().map(|r| r.witness.to_vec()),
        "greedy_gamma": greedy.gamma,
        "greedy_witness": greedy.witness.to_vec(),
    });
    println!("{value}");
    Ok(())
}

fn cmd_analyze(
    file: &Path,
    dot_dir: Option<&Path>,
    budgets: &BudgetArgs,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let mut config = CampaignConfig::default();
    budgets.apply(&mut config);
    let params = config.params();

    let budget = CycleBudget::new(params.max_cycle_len.unwrap_or(g.n()), params.max_cycles);
    let sset = enumerate_structures(&g, &budget, params.max_structures, params.seam);
    let fset = build_families(&sset.structures, params.max_families);
    let assignments: Vec<_> = sset
        .structures
        .iter()
        .map(|s| min_assignment(s, params.pattern))
        .collect();

    if let Some(dir) = dot_dir {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        for (i, s) in sset.structures.iter().enumerate() {
            let labels = assignments[i].as_ref().map(|a| &a.labels);
            let path = dir.join(format!("structure-{i:03}.dot"));
            fs::write(&path, structure_dot(s, labels)).map_err(io_err(&path))?;
        }
    }

    let structures: Vec<_> = sset
        .structures
        .iter()
        .zip(&assignments)
        .enumerate()
        .map(|(i, (s, a))| {
            serde_json::json!({
                "index": i,
                "member_cycles": s.cycles().len(),
                "pattern_cycles": s.pattern_indices().len(),
                "union_vertices": s.union_vertices().to_vec(),
                "min_labels": a.as_ref().map(|a| a.labels.to_vec()),
                "min_phases": a.as_ref().map(|a| a.phases.clone()),
            })
        })
        .collect();
    let families: Vec<_> = fset
        .families
        .iter()
        .map(|f| {
            serde_json::json!({
                "members": f.members,
                "covered": f.covered.to_vec(),
            })
        })
        .collect();
    let value = serde_json::json!({
        "file": file.display().to_string(),
        "n": g.n(),
        "m": g.m(),
        "is_3_connected": g.is_3_connected(),
        "cycle_count": sset.pool.cycles.len(),
        "cycles_truncated": sset.pool.truncated,
        "structures": structures,
        "structures_truncated": sset.truncated,
        "families": families,
        "families_truncated": fset.truncated,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("analysis serializes");
    text.push('\n');
    emit(out, &text)
}

fn cmd_verify(
    config_path: Option<&Path>,
    budgets: &BudgetArgs,
    seed: Option<u64>,
    timings: bool,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let mut config = match config_path {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            serde_json::from_str(&text).map_err(|source| CliError::BadConfig {
                path: path.to_path_buf(),
                source,
            })?
        }
        None => CampaignConfig::default(),
    };
    budgets.apply(&mut config);
    if let (Some(seed), Some(random)) = (seed, config.random.as_mut()) {
        random.seed = seed;
    }

    let corpus = build_corpus(&config)?;
    let params = config.params();
    let reports = run_campaign(&corpus, &params, timings);
    let summary = summarize(&reports);

    let mut text = String::new();
    for r in &reports {
        text.push_str(&serde_json::to_string(r).expect("report serializes"));
        text.push('\n');
    }
    let tail = serde_json::json!({ "summary": summary });
    text.push_str(&serde_json::to_string(&tail).expect("summary serializes"));
    text.push('\n');
    emit(out, &text)?;

    eprintln!(
        "campaign: {} graphs, {} structure-accepted, {} counterexamples \
         (optimality {} pass / {} fail / {} inconclusive)",
        summary.graphs,
        summary.structure_accepted,
        summary.counterexamples,
        summary.optimality.pass,
        summary.optimality.fail,
        summary.optimality.inconclusive,
    );
    Ok(())
}

fn cmd_generate(
    named: Option<String>,
    random: Option<usize>,
    seed: u64,
    attempts: usize,
    g6: bool,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = match (named, random) {
        (Some(name), None) => NamedGraph::from_str(&name)
            .map_err(|_| CampaignError::UnknownGraph(name))?
            .build(),
        (None, Some(n)) => random_3connected(n, seed, attempts).map_err(CampaignError::from)?,
        _ => unreachable!("clap enforces exactly one graph source"),
    };
    let want_g6 = g6
        || out
            .and_then(Path::extension)
            .is_some_and(|e| e == "g6");
    let content = if want_g6 {
        let mut s = write_graph6(&g);
        s.push('\n');
        s
    } else {
        write_edge_list(&g)
    };
    emit(out, &content)
}

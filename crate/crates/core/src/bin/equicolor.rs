use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use equicolor::bounds::{q_lower_bound_with, validate_tables_for, BoundOptions, FamilyKind, VALIDATION_T};
use equicolor::constructive::{solve_equitable_with, BaseCase, ConstructiveConfig};
use equicolor::gen::{generate, GenConfig, GenMode};
use equicolor::harness::{build_corpus, run_bound_validation, run_on_corpus, CampaignSpec, EXIT_CLEAN, EXIT_CRITICAL};
use equicolor::io::{coloring_to_json, read_edge_list, write_coloring, write_edge_list};
use equicolor::{decide_equitable, FamilySpec, Result, SolveBudget, Verdict};

#[derive(Parser)]
#[command(name = "equicolor", version, about = "Equitable coloring of sparse planar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Search node limit.
    #[arg(long, default_value_t = 10_000_000)]
    node_limit: u64,
    /// Wall-clock limit in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    time_limit_ms: u64,
}

impl BudgetArgs {
    fn budget(self) -> Result<SolveBudget> {
        SolveBudget::new(self.node_limit, Duration::from_millis(self.time_limit_ms))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Edgeless,
    SmallOrDense,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide equitable k-colorability exactly. Exit 0 yes, 1 no, 2 exhausted.
    Decide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print the coloring as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Color with the constructive solver.
    Color {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "any")]
        family: FamilySpec,
        /// Write the per-level mechanism trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgeless")]
        base: BaseArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Generate family members as edge-list files.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: FamilySpec,
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Number of random graphs.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lower bound on the size of a non-colorable member, with provenance.
    Bounds {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        /// Drop the r = 1 row when the degree budget rules it out.
        #[arg(long)]
        degree_budget: bool,
        /// Also recompute every published table claim.
        #[arg(long)]
        validate: bool,
    },
    /// Run a campaign from a TOML file. Exit 0 clean, 2 exhaustions, 3 critical.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Directory for report.json, report.csv and witnesses.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check density bounds over the corpus instead of coloring it.
        #[arg(long)]
        density: bool,
        /// Worker threads (overrides EQUICOLOR_THREADS).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Recompute the published bound tables. Exit 3 on any mismatch.
    ValidateTables {
        #[arg(long, default_value_t = VALIDATION_T.0)]
        t_min: usize,
        #[arg(long, default_value_t = VALIDATION_T.1)]
        t_max: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(64)
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Decide { input, k, budget, json } => {
            let g = read_edge_list(&input)?;
            let out = decide_equitable(&g, k, budget.budget()?)?;
            println!("{}", out.verdict.label());
            if let Verdict::Yes(p) = &out.verdict {
                print!("{}", if json { coloring_to_json(p) + "\n" } else { write_coloring(p) });
            }
            eprintln!("nodes {} in {:.3}s", out.stats.nodes, out.stats.duration.as_secs_f64());
            Ok(match out.verdict {
                Verdict::Yes(_) => 0,
                Verdict::No => 1,
                Verdict::Exhausted => 2,
            })
        }
        Cmd::Color { input, m, family, trace, base, budget } => {
            let g = read_edge_list(&input)?;
            if let Err(v) = family.check(&g) {
                return Err(equicolor::Error::Config(format!("graph is not in family {family}: {v}")));
            }
            let base = match base {
                BaseArg::Edgeless => BaseCase::Edgeless,
                BaseArg::SmallOrDense => BaseCase::SmallOrDense,
            };
            let out = solve_equitable_with(&g, m, &ConstructiveConfig { budget: budget.budget()?, base })?;
            if let Some(path) = trace {
                std::fs::write(path, serde_json::to_string_pretty(&out.trace)? + "\n")?;
            }
            println!("{}", out.outcome.verdict.label());
            if let Some(p) = out.outcome.coloring() {
                print!("{}", write_coloring(p));
            }
            let counts: Vec<String> = out.trace.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
            eprintln!("mechanisms: {}", counts.join(" "));
            Ok(match out.outcome.verdict {
                Verdict::Yes(_) => 0,
                Verdict::No => 1,
                Verdict::Exhausted => 2,
            })
        }
        Cmd::Gen { n, family, exhaustive, random, seed, connected, max_edges, out } => {
            let mode = match (exhaustive, random) {
                (_, Some(count)) => GenMode::Random { count, seed, target_edges: None },
                _ => GenMode::Exhaustive,
            };
            let c = GenConfig { n, family, mode, connected, max_edges };
            let graphs = generate(&c)?;
            write_graphs(&out, n, &graphs)?;
            println!("{} graphs written to {}", graphs.len(), out.display());
            Ok(0)
        }
        Cmd::Bounds { family, delta, t, m, degree_budget, validate } => {
            let q = q_lower_bound_with(family, m, delta, t, BoundOptions { degree_budget })?;
            let mut report = json!({ "bound": q });
            if validate {
                report["tables"] = serde_json::to_value(validate_tables_for(VALIDATION_T)?)?;
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(0)
        }
        Cmd::Verify { config, out, density, threads } => {
            let spec = CampaignSpec::from_file(&config)?;
            let threads = match threads {
                Some(n) => Some(n),
                None => equicolor::harness::threads_from_env()?,
            };
            if density {
                let report = run_bound_validation(&spec.family, &spec.corpus)?;
                match &out {
                    Some(dir) => report.write_to(dir)?,
                    None => print!("{}", report.to_json()?),
                }
                for o in &report.orders {
                    eprintln!("n={:<3} graphs={:<6} max_e={:<4} bound={:?}", o.n, o.graphs, o.max_edges, o.bound);
                }
                eprintln!("critical: {}", report.critical.len());
                return Ok(report.exit_code());
            }
            let corpus = build_corpus(&spec.family, &spec.corpus)?;
            let report = run_on_corpus(&spec, &corpus, threads)?;
            match &out {
                Some(dir) => report.write_to(dir)?,
                None => print!("{}", report.to_json()?),
            }
            let c = report.counts;
            eprintln!(
                "corpus {} yes {} no {} exhausted {} exceptions skipped {} confirmed {} critical {}",
                c.corpus,
                c.yes,
                c.no,
                c.exhausted,
                c.exceptions_skipped,
                c.exceptions_confirmed,
                report.critical.len()
            );
            Ok(report.exit_code())
        }
        Cmd::ValidateTables { t_min, t_max, json } => {
            let report = validate_tables_for((t_min, t_max))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.claims {
                    println!("{:<16} {:<15} {}", c.id, format!("{:?}", c.status), c.description);
                    for note in &c.notes {
                        println!("{:<16} note: {note}", "");
                    }
                }
            }
            Ok(if report.all_match() { EXIT_CLEAN } else { EXIT_CRITICAL })
        }
    }
}

fn write_graphs(dir: &Path, n: usize, graphs: &[equicolor::Graph]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let width = graphs.len().max(1).to_string().len();
    for (i, g) in graphs.iter().enumerate() {
        std::fs::write(dir.join(format!("n{n}_{i:0width$}.dimacs")), write_edge_list(g))?;
    }
    Ok(())
}

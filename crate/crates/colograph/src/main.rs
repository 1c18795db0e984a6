//! Command-line surface over the library: per-graph queries, rewriting
//! moves, maximization sweeps, and the verification harness.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use colograph::census::{cycle_census, gurau_degree};
use colograph::embedding::embedding_stats;
use colograph::graph::{parse_graph, serialize_graph, Bubble, ColorSupport, ColoredGraph};
use colograph::harness::{run_all, run_suite, HarnessConfig, SuiteResult, SUITES};
use colograph::moves::{contract, flip, reduce_to_canonical, ReductionVerdict};
use colograph::search::{
    bubble_occurrences, check_max_two_cut, max_gluings, max_pairings, verify_only_planar, C1Cache,
    MaxReport, DEFAULT_VERTEX_BUDGET,
};

#[derive(Parser)]
#[command(name = "colograph", version, about = "Edge-colored graph combinatorics of 3d colored triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Total-vertex budget for gluing sweeps.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Worker threads for partitioned sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory to write maximizer graphs and suite reports to.
    #[arg(long, global = true, value_name = "DIR")]
    emit_graphs: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check graph files against all structural invariants.
    Validate { files: Vec<PathBuf> },
    /// Print the bicolored cycle census and, for closed graphs, the degree.
    Census { files: Vec<PathBuf> },
    /// Print V E F genus and the face profile of cubic 3-colored graphs.
    Embed { files: Vec<PathBuf> },
    /// List the bubble occurrences of closed graphs.
    Bubbles { files: Vec<PathBuf> },
    /// Flip two color-0 edges and print the result with its cycle delta.
    Flip { file: PathBuf, e1: usize, e2: usize },
    /// Contract a color-0 edge and print the result with its cycle delta.
    Contract { file: PathBuf, edge: usize },
    /// Reduce through topological dipole removals and report the verdict.
    Reduce { file: PathBuf },
    /// Exhaust all pairings of a bubble and report C_1 with the maximizers.
    Maxpair { file: PathBuf },
    /// Exhaust all gluings of bubbles and report C_max with the maximizers.
    Maxglue {
        files: Vec<PathBuf>,
        /// Index of the marked bubble for the closed-form comparison.
        #[arg(long)]
        marked: Option<usize>,
    },
    /// Check the maximal 2-cut property of one bubble occurrence.
    Check2cut {
        file: PathBuf,
        #[arg(long)]
        bubble: usize,
    },
    /// Run a named verification suite (or only-planar on given bubble files).
    Verify {
        suite: String,
        files: Vec<PathBuf>,
    },
    /// Run every verification suite.
    RunAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn harness_config(cli: &Cli) -> HarnessConfig {
    HarnessConfig {
        vertex_budget: cli.budget.unwrap_or(DEFAULT_VERTEX_BUDGET),
        jobs: cli.jobs,
        output_dir: cli.emit_graphs.clone(),
        ..HarnessConfig::default()
    }
}

fn load(file: &PathBuf) -> Result<ColoredGraph, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn load_bubble(file: &PathBuf) -> Result<Bubble, String> {
    let g = load(file)?;
    let tag = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Bubble::new(g, tag).map_err(|e| format!("{}: {e}", file.display()))
}

fn emit_maximizers(dir: &Option<PathBuf>, report: &MaxReport) -> Result<(), String> {
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        for (i, g) in report.maximizers.iter().enumerate() {
            std::fs::write(dir.join(format!("{i}.cg")), serialize_graph(g))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

/// Ok(true) = success/pass (exit 0), Ok(false) = check failure (exit 1),
/// Err = usage or input error (exit 2).
fn dispatch(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Validate { files } => {
            require_files(files)?;
            let mut ok = true;
            for f in files {
                match load(f) {
                    Ok(g) => println!(
                        "{}: valid d={} n={} edges={} {}",
                        f.display(),
                        g.dimension(),
                        g.n_vertices(),
                        g.n_edges(),
                        match g.support() {
                            ColorSupport::Full => "closed",
                            ColorSupport::NoZero => "bubble",
                        }
                    ),
                    Err(e) => {
                        println!("{e}");
                        ok = false;
                    }
                }
            }
            Ok(ok)
        }
        Command::Census { files } => {
            require_files(files)?;
            for f in files {
                let g = load(f)?;
                let census = cycle_census(&g);
                println!("{}:", f.display());
                for ((a, b), cycles) in &census.pairs {
                    println!("pair {a} {b} count={}", cycles.len());
                    for cyc in cycles {
                        println!(
                            "  cycle {}",
                            cyc.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
                        );
                    }
                }
                println!("C0={} Ctotal={}", census.c0(), census.total());
                if g.support() == ColorSupport::Full && g.is_connected() {
                    let deg = gurau_degree(&g).map_err(|e| e.to_string())?;
                    println!("degree={}", deg.value);
                }
            }
            Ok(true)
        }
        Command::Embed { files } => {
            require_files(files)?;
            for f in files {
                let g = load(f)?;
                let s = embedding_stats(&g).map_err(|e| format!("{}: {e}", f.display()))?;
                let profile = s
                    .face_profile
                    .iter()
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("{}: V={} E={} F={} genus={} profile {profile}", f.display(), s.v, s.e, s.f, s.genus);
            }
            Ok(true)
        }
        Command::Bubbles { files } => {
            require_files(files)?;
            for f in files {
                let g = load(f)?;
                let occ = bubble_occurrences(&g);
                println!("{}: {} bubble(s)", f.display(), occ.len());
                for (i, vs) in occ.iter().enumerate() {
                    println!(
                        "bubble {i} vertices {}",
                        vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    );
                }
            }
            Ok(true)
        }
        Command::Flip { file, e1, e2 } => {
            let g = load(file)?;
            let r = flip(&g, *e1, *e2).map_err(|e| e.to_string())?;
            println!(
                "C0 {} -> {} interaction {{{}}}",
                r.c0_before,
                r.c0_after,
                r.interaction.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            );
            for (i, c) in r.components.iter().enumerate() {
                println!("component {i}:");
                print!("{}", serialize_graph(c));
            }
            Ok(true)
        }
        Command::Contract { file, edge } => {
            let g = load(file)?;
            let r = contract(&g, *edge).map_err(|e| e.to_string())?;
            println!("C0 {} -> {} case {:?}", r.c0_before, r.c0_after, r.case);
            for (i, c) in r.components.iter().enumerate() {
                println!("component {i}:");
                print!("{}", serialize_graph(c));
            }
            Ok(true)
        }
        Command::Reduce { file } => {
            let g = load(file)?;
            let trace = reduce_to_canonical(&g, None);
            for m in &trace.moves {
                println!(
                    "remove dipole ({}, {}) colors {{{}}}",
                    m.white,
                    m.black,
                    m.colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                );
            }
            let verdict = match trace.verdict {
                ReductionVerdict::CanonicalSphere => "canonical-sphere",
                ReductionVerdict::Stuck => "stuck",
            };
            println!("verdict {verdict} after {} moves, terminal n={}", trace.moves.len(), trace.terminal.n_vertices());
            Ok(trace.verdict == ReductionVerdict::CanonicalSphere)
        }
        Command::Maxpair { file } => {
            let b = load_bubble(file)?;
            let r = max_pairings(&b);
            println!(
                "C1={} connected={} maximizers={} classes={}",
                r.max_c0,
                r.connected_count,
                r.maximizer_count,
                r.maximizers.len()
            );
            emit_maximizers(&cli.emit_graphs, &r)?;
            Ok(true)
        }
        Command::Maxglue { files, marked } => {
            require_files(files)?;
            let bubbles: Vec<Bubble> = files.iter().map(load_bubble).collect::<Result<_, _>>()?;
            let budget = cli.budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
            let r = max_gluings(&bubbles, budget).map_err(|e| e.to_string())?;
            println!(
                "Cmax={} connected={} maximizers={} classes={}",
                r.max_c0,
                r.connected_count,
                r.maximizer_count,
                r.maximizers.len()
            );
            if let Some(m) = marked {
                let v = verify_only_planar(&bubbles, *m, budget).map_err(|e| e.to_string())?;
                println!("formula={} {}", v.formula, if v.formula_matches { "matches" } else { "MISMATCH" });
                emit_maximizers(&cli.emit_graphs, &r)?;
                return Ok(v.formula_matches);
            }
            emit_maximizers(&cli.emit_graphs, &r)?;
            Ok(true)
        }
        Command::Check2cut { file, bubble } => {
            let g = load(file)?;
            let cache = C1Cache::new();
            let v = check_max_two_cut(&g, *bubble, &cache).map_err(|e| e.to_string())?;
            if v.ok {
                println!("bubble {bubble}: maximal 2-cut property holds");
            } else {
                println!("bubble {bubble}: violated: {:?}", v.violation);
            }
            Ok(v.ok)
        }
        Command::Verify { suite, files } => {
            if suite == "only-planar" {
                require_files(files)?;
                let bubbles: Vec<Bubble> =
                    files.iter().map(load_bubble).collect::<Result<_, _>>()?;
                let budget = cli.budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
                let r = verify_only_planar(&bubbles, 0, budget).map_err(|e| e.to_string())?;
                println!(
                    "formula={} brute={} equivalence={}",
                    r.formula,
                    r.brute_max,
                    if r.equivalence_holds { "holds" } else { "VIOLATED" }
                );
                return Ok(r.formula_matches && r.equivalence_holds);
            }
            if !files.is_empty() {
                return Err(format!("suite `{suite}` takes no files"));
            }
            let r = run_suite(suite, &harness_config(cli)).map_err(|e| e.to_string())?;
            print_suite(&r);
            Ok(r.pass)
        }
        Command::RunAll => {
            let results = run_all(&harness_config(cli)).map_err(|e| e.to_string())?;
            let mut pass = true;
            for r in &results {
                print_suite(r);
                pass &= r.pass;
            }
            Ok(pass)
        }
    }
}

fn print_suite(r: &SuiteResult) {
    print!("{}", r.render());
}

fn require_files(files: &[PathBuf]) -> Result<(), String> {
    if files.is_empty() {
        Err(format!(
            "at least one file is required; known suites: {}",
            SUITES.join(", ")
        ))
    } else {
        Ok(())
    }
}

//! `prismdom`: domination numbers of graphs and permutation prisms, family
//! generators, property checks and the family-value table.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use prismdom::io::{read_graph, write_dot, write_edge_list, write_graph6, GraphFile};
use prismdom::verify::{
    counterexample_table, run_check, search_wcon_fixer_conjecture, CheckId, TableOptions,
    VerifyConfig,
};
use prismdom::{
    oracle_gamma_variant, solve, Family, GammaVariant, Outcome, PrismGraph, SolveOptions,
};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "prismdom",
    version,
    about = "Domination numbers of graphs and their permutation prisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact domination number of a graph (or of its prism) as JSON.
    Gamma {
        /// Edge list or graph6 file; standard input when omitted.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// dom, connected, wcon or con.
        #[arg(long, default_value = "dom")]
        variant: String,
        /// Include the witness set in the report.
        #[arg(long)]
        witness: bool,
        /// Use the brute-force solver (small graphs only).
        #[arg(long)]
        oracle: bool,
        #[arg(long, env = "PRISMDOM_BUDGET_MS")]
        budget_ms: Option<u64>,
        /// Solve on the prism under --perm, or under the file's `#!perm` directive.
        #[arg(long)]
        prism: bool,
        /// Permutation in cycle notation on the graph's labels.
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Builds the prism of a graph under a permutation.
    Prism {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
    },
    /// Writes a member of a named family as a labeled edge list.
    Family {
        /// path, cycle, star, complete, cycle-gadget, path-gadget, spider-tree or sept-path-gadget.
        name: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: Option<usize>,
        /// Attach the family's canonical permutation.
        #[arg(long)]
        with_perm: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs property checks over graph universes; prints one JSON report per check.
    Verify {
        /// A check id or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// Largest order examined; orders above --exhaustive-max are sampled.
        #[arg(long)]
        nmax: Option<usize>,
        /// Largest order enumerated exhaustively (at most 8; default 5).
        #[arg(long)]
        exhaustive_max: Option<usize>,
        /// Random graphs drawn per sampled order.
        #[arg(long)]
        random_graphs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Random permutations per graph, in addition to the identity.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Recomputes the table of family values.
    Table5 {
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        /// Per-row budget.
        #[arg(long, env = "PRISMDOM_BUDGET_MS")]
        budget_ms: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print JSON instead of the text table.
        #[arg(long)]
        json: bool,
    },
    /// Looks for a prism lowering γ_wcon of a diameter-2 graph with γ_wcon(G) = |V|.
    SearchConjecture {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "PRISMDOM_BUDGET_MS")]
        budget_ms: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Graph6,
    Dot,
}

/// An error carrying the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure {
            code: USAGE,
            message: e.to_string(),
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<GraphFile, Failure> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(read_graph(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json renders")
    );
}

fn build_prism(file: &GraphFile, perm: Option<&str>) -> Result<PrismGraph, Failure> {
    let perm = match perm {
        Some(text) => file.parse_perm(text)?,
        None => file
            .perm
            .clone()
            .ok_or("no permutation: pass --perm or use a file with a #!perm directive")?,
    };
    Ok(PrismGraph::build(&file.graph, &perm)?)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gamma {
            graph,
            variant,
            witness,
            oracle,
            budget_ms,
            prism,
            perm,
            threads,
        } => {
            let variant = GammaVariant::from_str(&variant)?;
            let file = read_input(graph.as_deref())?;
            let (g, labels) = if prism || perm.is_some() {
                let p = build_prism(&file, perm.as_deref())?;
                let labels = p.vertex_labels(file.labels.as_ref());
                (p.into_graph(), labels)
            } else {
                let labels = file.label_strings();
                (file.graph, labels)
            };
            let report = if oracle {
                oracle_gamma_variant(&g, variant)?
            } else {
                let opts = SolveOptions {
                    budget: budget_ms.map(Duration::from_millis),
                    threads,
                };
                match solve(&g, variant, &opts)? {
                    Outcome::Solved(r) => r,
                    Outcome::Inconclusive(i) => {
                        print_json(&serde_json::json!({
                            "variant": variant,
                            "inconclusive": true,
                            "lower_bound": i.lower_bound,
                            "explored": i.explored,
                            "elapsed_ms": i.elapsed.as_millis() as u64,
                        }));
                        return Ok(BUDGET);
                    }
                }
            };
            let mut json = report.to_json(Some(&labels));
            if !witness {
                let obj = json.as_object_mut().expect("report is an object");
                obj.remove("witness");
                obj.remove("witness_labels");
            }
            print_json(&json);
            Ok(OK)
        }
        Command::Prism {
            graph,
            perm,
            out,
            format,
        } => {
            let file = read_input(graph.as_deref())?;
            let p = build_prism(&file, perm.as_deref())?;
            let labels = p.vertex_labels(file.labels.as_ref());
            let text = match format {
                Format::Edges => format!(
                    "# vertices: {}\n{}",
                    labels.join(" "),
                    write_edge_list(p.graph(), None, None)
                ),
                Format::Graph6 => format!("{}\n", write_graph6(p.graph())),
                Format::Dot => write_dot(p.graph(), Some(&labels)),
            };
            emit(out.as_deref(), &text)?;
            Ok(OK)
        }
        Command::Family {
            name,
            k,
            l,
            with_perm,
            out,
        } => {
            let family = Family::from_str(&name)?;
            let g = family.build(k, l)?;
            let perm = if with_perm {
                Some(
                    g.canonical_perm
                        .as_ref()
                        .ok_or_else(|| format!("family {name} has no canonical permutation"))?,
                )
            } else {
                None
            };
            emit(
                out.as_deref(),
                &write_edge_list(&g.graph, Some(&g.labels), perm),
            )?;
            Ok(OK)
        }
        Command::Verify {
            check,
            nmax,
            exhaustive_max,
            random_graphs,
            seed,
            trials,
        } => {
            let ids: Vec<CheckId> = if check == "all" {
                CheckId::ALL.to_vec()
            } else {
                vec![CheckId::from_str(&check)?]
            };
            let mut config = VerifyConfig::default();
            if let Some(e) = exhaustive_max {
                if e > 8 {
                    return Err("--exhaustive-max is limited to 8".into());
                }
                config.exhaustive_max = e;
                config.random_max = config.random_max.max(e);
            }
            if let Some(n) = nmax {
                config.random_max = n;
                config.exhaustive_max = config.exhaustive_max.min(n);
            }
            if let Some(r) = random_graphs {
                config.random_graphs = r;
            }
            if let Some(s) = seed {
                config.seed = s;
            }
            if let Some(t) = trials {
                config.trials = t;
            }
            let mut code = OK;
            let mut reports = Vec::new();
            for id in ids {
                let r = run_check(id, &config)?;
                eprintln!(
                    "{} {} ({} ms)",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check_id,
                    r.elapsed_ms
                );
                if !r.pass {
                    code = FAILED;
                }
                reports.push(r.to_json());
            }
            print_json(&serde_json::Value::Array(reports));
            Ok(code)
        }
        Command::Table5 {
            max_k,
            budget_ms,
            threads,
            json,
        } => {
            let table = counterexample_table(&TableOptions {
                max_k,
                budget: budget_ms.map(Duration::from_millis),
                threads,
            })?;
            if json {
                print_json(&table.to_json());
            } else {
                print!("{}", table.render());
            }
            let failed = table
                .rows
                .iter()
                .any(|r| r.status == prismdom::verify::RowStatus::Fail);
            Ok(if failed {
                FAILED
            } else if table.failures().next().is_some() {
                BUDGET
            } else {
                OK
            })
        }
        Command::SearchConjecture { n, budget_ms } => {
            let report = search_wcon_fixer_conjecture(n, budget_ms.map(Duration::from_millis))?;
            print_json(&report.to_json());
            Ok(if !report.hits.is_empty() {
                FAILED
            } else if !report.complete {
                BUDGET
            } else {
                OK
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! romankit: exact solvers, generators, and verification suites for
//! `{k}`-Roman domination on small graphs.
//!
//! Exit codes: 0 success / true verdict, 1 false verdict (classify,
//! check-function, hyper pm, verify), 2 usage or input error.

mod io;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use romankit_core::codec;
use romankit_core::constructions::{
    co_sun, exact_cover_reduction, middle_graph, split_join_decompose, sun, Decomposition,
    SplitLabeledGraph,
};
use romankit_core::domination::{gamma, gamma_rk, is_k_roman, is_krdf};
use romankit_core::graph::{find_split_partition, Graph, SplitPartition};
use romankit_core::verifier::{
    self, Budget, Counterexample, SolverHooks, SuiteId, SuiteStatus, VerificationReport,
};

use io::Format;

const EXIT_FALSE: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "romankit", version, about = "Exact {k}-Roman domination toolkit")]
struct Cli {
    /// Emit a JSON object instead of line-oriented text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (`-` for stdin); `.g6` and `.el` extensions are detected
    path: String,
    /// Input format override
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct HyperInput {
    /// Hypergraph file (`-` for stdin), `hg` format
    path: String,
    /// Input format override
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number and a minimum dominating set
    Gamma(GraphInput),
    /// {k}-Roman domination number and an optimal weight function
    GammaRk {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        k: u64,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide whether the graph is {k}-Roman (exit 1 when it is not)
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=64))]
        k: u64,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check a weight function file against the {k}-Roman condition
    CheckFunction {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        k: u64,
        /// Weight function file: one line `k`, one line of weights
        #[arg(long)]
        function: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Maximum-clique split partition, if the graph is split
    SplitPartition(GraphInput),
    /// Split-join decomposition into prime factors
    Decompose {
        #[command(flatten)]
        input: GraphInput,
        /// Partition file (clique line, independent line); defaults to the
        /// computed maximum-clique partition
        #[arg(long)]
        partition: Option<String>,
    },
    /// Graph and reduction generators
    #[command(subcommand)]
    Gen(GenCommand),
    /// Hypergraph solvers
    #[command(subcommand)]
    Hyper(HyperCommand),
    /// Run a verification suite
    Verify {
        /// Suite name, e.g. `suns`, `join-additivity`, `k-roman-iff-pm`
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_t: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The t-sun split graph
    Sun {
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// The complement of the t-sun
    Cosun {
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// The middle graph of the input graph
    Middle {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long = "out-format", value_enum, default_value = "g6")]
        out_format: Format,
    },
    /// The bipartite incidence graph of a hypergraph
    Incidence {
        #[command(flatten)]
        input: HyperInput,
        #[arg(long = "out-format", value_enum, default_value = "g6")]
        out_format: Format,
    },
    /// The maximal compatible split graph of a hypergraph
    CompatSplit {
        #[command(flatten)]
        input: HyperInput,
        #[arg(long = "out-format", value_enum, default_value = "g6")]
        out_format: Format,
    },
    /// The split graph of the {k}-Roman hardness reduction (requires a
    /// k-uniform hypergraph without isolated vertices)
    Reduce {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        k: u64,
        #[command(flatten)]
        input: HyperInput,
        #[arg(long = "out-format", value_enum, default_value = "g6")]
        out_format: Format,
    },
}

#[derive(Subcommand)]
enum HyperCommand {
    /// Lexicographically least perfect matching (exit 1 if none exists)
    Pm(HyperInput),
    /// Edge cover number
    Rho(HyperInput),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn join_set(set: &BTreeSet<usize>) -> String {
    if set.is_empty() {
        return String::from("-");
    }
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn join_slice(values: &[usize]) -> String {
    if values.is_empty() {
        return String::from("-");
    }
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// The exact solvers are exponential searches over 128-bit vertex sets;
/// refuse anything larger up front.
fn ensure_solver_size(n: usize, what: &str) -> Result<()> {
    if n > 128 {
        bail!("{what} has {n} vertices; exact solvers support at most 128");
    }
    Ok(())
}

fn graph_text(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::G6 => Ok(format!("{}\n", codec::graph6_encode(g))),
        Format::El => Ok(codec::edge_list_encode(g)),
        Format::Hg => bail!("graphs cannot be written in hypergraph format"),
    }
}

fn print_generated(
    labeled: Option<&SplitPartition>,
    g: &Graph,
    format: Format,
    json: bool,
) -> Result<()> {
    if json {
        let mut obj = json!({ "graph6": codec::graph6_encode(g) });
        if let Some(p) = labeled {
            obj["clique"] = json!(p.clique.iter().collect::<Vec<_>>());
            obj["independent"] = json!(p.independent.iter().collect::<Vec<_>>());
        }
        println!("{obj}");
    } else {
        print!("{}", graph_text(g, format)?);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Gamma(input) => {
            let g = io::load_graph(&input.path, input.format)?;
            ensure_solver_size(g.n(), "graph")?;
            let cert = gamma(&g);
            if json {
                println!(
                    "{}",
                    json!({ "gamma": cert.gamma, "witness": cert.witness.iter().collect::<Vec<_>>() })
                );
            } else {
                println!("gamma = {}", cert.gamma);
                println!("witness = {}", join_set(&cert.witness));
            }
            Ok(0)
        }
        Command::GammaRk { k, input } => {
            let g = io::load_graph(&input.path, input.format)?;
            ensure_solver_size(g.n(), "graph")?;
            let cert = gamma_rk(&g, k as usize);
            if json {
                println!(
                    "{}",
                    json!({ "k": cert.k, "gamma_rk": cert.gamma_rk, "witness": cert.witness.weights() })
                );
            } else {
                println!("k = {}", cert.k);
                println!("gamma_rk = {}", cert.gamma_rk);
                println!("witness = {}", join_slice(cert.witness.weights()));
            }
            Ok(0)
        }
        Command::Classify { k, input } => {
            let g = io::load_graph(&input.path, input.format)?;
            ensure_solver_size(g.n(), "graph")?;
            let k = k as usize;
            let gamma_cert = gamma(&g);
            let roman_cert = gamma_rk(&g, k);
            let verdict = is_k_roman(&g, k).map_err(|e| anyhow!("{e}"))?;
            debug_assert_eq!(verdict, roman_cert.gamma_rk == k * gamma_cert.gamma);
            if json {
                println!(
                    "{}",
                    json!({
                        "k": k,
                        "gamma": gamma_cert.gamma,
                        "gamma_rk": roman_cert.gamma_rk,
                        "k_roman": verdict,
                    })
                );
            } else {
                println!("k = {k}");
                println!("gamma = {}", gamma_cert.gamma);
                println!("gamma_rk = {}", roman_cert.gamma_rk);
                println!("k_roman = {verdict}");
            }
            Ok(if verdict { 0 } else { EXIT_FALSE })
        }
        Command::CheckFunction { k, function, input } => {
            let g = io::load_graph(&input.path, input.format)?;
            let f = io::load_weight_function(&function)?;
            if f.k() != k as usize {
                bail!("{function}: function has k = {}, command line says k = {k}", f.k());
            }
            let valid = is_krdf(&g, &f).map_err(|e| anyhow!("{function}: {e}"))?;
            if json {
                println!(
                    "{}",
                    json!({ "k": f.k(), "weight": f.weight(), "valid": valid })
                );
            } else {
                println!("k = {}", f.k());
                println!("weight = {}", f.weight());
                println!("valid = {valid}");
            }
            Ok(if valid { 0 } else { EXIT_FALSE })
        }
        Command::SplitPartition(input) => {
            let g = io::load_graph(&input.path, input.format)?;
            match find_split_partition(&g) {
                Some(p) => {
                    if json {
                        println!(
                            "{}",
                            json!({
                                "split": true,
                                "clique": p.clique.iter().collect::<Vec<_>>(),
                                "independent": p.independent.iter().collect::<Vec<_>>(),
                            })
                        );
                    } else {
                        println!("split = true");
                        println!("clique = {}", join_set(&p.clique));
                        println!("independent = {}", join_set(&p.independent));
                    }
                }
                None => {
                    if json {
                        println!("{}", json!({ "split": false }));
                    } else {
                        println!("split = false");
                    }
                }
            }
            Ok(0)
        }
        Command::Decompose { input, partition } => {
            let g = io::load_graph(&input.path, input.format)?;
            let (p, computed) = match partition {
                Some(path) => (io::load_partition(&path, &g)?, false),
                None => {
                    let p = find_split_partition(&g)
                        .ok_or_else(|| anyhow!("{}: not a split graph", input.path))?;
                    (p, true)
                }
            };
            let labeled = SplitLabeledGraph::new(g, p.clone()).map_err(|e| anyhow!("{e}"))?;
            let decomposition = split_join_decompose(&labeled);
            let note = "computed default maximum-clique partition; \
                        other split partitions may decompose differently";
            if json {
                let factors = match &decomposition {
                    Decomposition::Prime => Vec::new(),
                    Decomposition::Factors(fs) => fs
                        .iter()
                        .map(|f| {
                            json!({
                                "graph6": codec::graph6_encode(f.graph()),
                                "clique": f.partition().clique.iter().collect::<Vec<_>>(),
                                "independent": f.partition().independent.iter().collect::<Vec<_>>(),
                            })
                        })
                        .collect(),
                };
                let mut obj = json!({
                    "prime": decomposition.is_prime(),
                    "clique": p.clique.iter().collect::<Vec<_>>(),
                    "independent": p.independent.iter().collect::<Vec<_>>(),
                    "factors": factors,
                });
                if computed {
                    obj["note"] = json!(note);
                }
                println!("{obj}");
            } else {
                println!("prime = {}", decomposition.is_prime());
                println!("clique = {}", join_set(&p.clique));
                println!("independent = {}", join_set(&p.independent));
                if computed {
                    println!("note = {note}");
                }
                if let Decomposition::Factors(fs) = &decomposition {
                    println!("factors = {}", fs.len());
                    for (i, f) in fs.iter().enumerate() {
                        println!(
                            "factor {i}: g6 = {} clique = {} independent = {}",
                            codec::graph6_encode(f.graph()),
                            join_set(&f.partition().clique),
                            join_set(&f.partition().independent),
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Gen(gen) => run_gen(gen, json),
        Command::Hyper(hyper) => run_hyper(hyper, json),
        Command::Verify { suite, max_n, max_t, seed } => {
            let suite = SuiteId::parse(&suite).map_err(|e| anyhow!("{e}"))?;
            let mut budget = Budget::default();
            if let Some(n) = max_n {
                budget.max_n = n;
            }
            if let Some(t) = max_t {
                budget.max_t = t;
            }
            if let Some(s) = seed {
                budget.seed = s;
            }
            let report = run_verify(suite, budget)?;
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("suite = {}", report.suite);
                println!("checked = {}", report.checked);
                println!(
                    "status = {}",
                    match report.status {
                        SuiteStatus::Pass => "pass",
                        SuiteStatus::Fail => "fail",
                    }
                );
                if let Some(cx) = &report.counterexample {
                    println!("counterexample = {}", cx.instance);
                    println!("observed = {}", cx.observed);
                    println!("expected = {}", cx.expected);
                }
            }
            Ok(if report.status == SuiteStatus::Pass { 0 } else { EXIT_FALSE })
        }
    }
}

fn run_gen(gen: GenCommand, json: bool) -> Result<u8> {
    match gen {
        GenCommand::Sun { t, format } => {
            let s = sun(t).map_err(|e| anyhow!("{e}"))?;
            print_generated(Some(s.partition()), s.graph(), format, json)?;
        }
        GenCommand::Cosun { t, format } => {
            let s = co_sun(t).map_err(|e| anyhow!("{e}"))?;
            print_generated(Some(s.partition()), s.graph(), format, json)?;
        }
        GenCommand::Middle { input, out_format } => {
            let g = io::load_graph(&input.path, input.format)?;
            print_generated(None, &middle_graph(&g), out_format, json)?;
        }
        GenCommand::Incidence { input, out_format } => {
            let h = io::load_hypergraph(&input.path, input.format)?;
            print_generated(None, &h.incidence_graph(), out_format, json)?;
        }
        GenCommand::CompatSplit { input, out_format } => {
            let h = io::load_hypergraph(&input.path, input.format)?;
            let (g, p) = h.compatible_split();
            print_generated(Some(&p), &g, out_format, json)?;
        }
        GenCommand::Reduce { k, input, out_format } => {
            let h = io::load_hypergraph(&input.path, input.format)?;
            let labeled = exact_cover_reduction(&h, k as usize).map_err(|e| anyhow!("{e}"))?;
            print_generated(Some(labeled.partition()), labeled.graph(), out_format, json)?;
        }
    }
    Ok(0)
}

fn run_hyper(hyper: HyperCommand, json: bool) -> Result<u8> {
    match hyper {
        HyperCommand::Pm(input) => {
            let h = io::load_hypergraph(&input.path, input.format)?;
            ensure_solver_size(h.n(), "hypergraph")?;
            let pm = h.perfect_matching();
            if json {
                println!("{}", json!({ "perfect_matching": pm }));
            } else {
                match &pm {
                    Some(indices) => println!("perfect_matching = {}", join_slice(indices)),
                    None => println!("perfect_matching = none"),
                }
            }
            Ok(if pm.is_some() { 0 } else { EXIT_FALSE })
        }
        HyperCommand::Rho(input) => {
            let h = io::load_hypergraph(&input.path, input.format)?;
            ensure_solver_size(h.n(), "hypergraph")?;
            let rho = h.edge_cover_number().map_err(|e| anyhow!("{e}"))?;
            if json {
                println!("{}", json!({ "rho": rho }));
            } else {
                println!("rho = {rho}");
            }
            Ok(0)
        }
    }
}

/// Worker count for `verify`: `ROMANKIT_THREADS` caps it, 0 or 1 means
/// serial, unset uses the available parallelism.
fn verify_threads() -> Result<usize> {
    match std::env::var("ROMANKIT_THREADS") {
        Ok(value) => {
            let n: usize = value
                .parse()
                .map_err(|_| anyhow!("ROMANKIT_THREADS must be an integer, got {value:?}"))?;
            Ok(n.max(1))
        }
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn run_verify(suite: SuiteId, budget: Budget) -> Result<VerificationReport> {
    let threads = verify_threads()?;
    if threads <= 1 {
        return verifier::run_suite(suite, &budget).map_err(|e| anyhow!("{e}"));
    }
    // Same aggregation as the serial path: count everything, keep the
    // lexicographically least failing instance.
    let instances = verifier::suite_instances(suite, &budget).map_err(|e| anyhow!("{e}"))?;
    let hooks = SolverHooks::default();
    let next = AtomicUsize::new(0);
    let failures: Mutex<Vec<Counterexample>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= instances.len() {
                    break;
                }
                let verdict = verifier::check_instance(suite, &instances[i], &hooks)
                    .expect("self-generated instances are well-formed");
                if let Some(cx) = verdict {
                    failures.lock().unwrap().push(cx);
                }
            });
        }
    });
    let mut failures = failures.into_inner().expect("worker threads joined");
    failures.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(VerificationReport {
        suite: suite.name().into(),
        budget,
        checked: instances.len() as u64,
        status: if failures.is_empty() { SuiteStatus::Pass } else { SuiteStatus::Fail },
        counterexample: failures.into_iter().next(),
    })
}

//! Command-line front end: spectra, connectivity, extremal constructions,
//! format conversion and the verification campaigns.
//!
//! Exit codes: 0 success, 1 verification failure (a minimality check that
//! did not match), 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use essspec_core::connectivity::{
    digraph_essential_connectivity, essential_connectivity, vertex_connectivity,
    EssentialCutCertificate,
};
use essspec_core::formats::{
    parse_digraph6, parse_edge_list, parse_graph6, write_digraph6, write_edge_list,
    write_edge_list_digraph, write_graph6, ParsedGraph,
};
use essspec_core::spectral::{spectral_radius, DistanceMatrix, SpectrumReport};
use essspec_core::verify::{
    arc_monotonicity_campaign, balancing_campaign, edge_monotonicity_campaign,
    objective_endpoint_campaign, verify_theorem1, verify_theorem2, verify_theorem3_family,
    VerificationReport, VerifyOptions,
};
use essspec_core::{extremal, Digraph, Error, Graph};

#[derive(Parser)]
#[command(
    name = "essspec",
    version,
    about = "Distance spectral radius toolkit: spectra, essential connectivity, \
             extremal constructions and desk-scale verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Edge list: header `n m [directed]`, then one `u v` line per edge
    El,
    /// graph6 (undirected)
    G6,
    /// digraph6 (directed)
    D6,
}

#[derive(Args)]
struct InputArgs {
    /// Input file
    #[arg(long)]
    file: PathBuf,
    /// Input format
    #[arg(long, value_enum, default_value_t = Format::El)]
    format: Format,
}

#[derive(Args)]
struct VerifyCommon {
    /// Relative enclosure tolerance for spectral computations
    #[arg(long, default_value_t = essspec_core::DEFAULT_TOLERANCE)]
    tol: f64,
    /// Worker threads (0 = all cores, 1 = sequential)
    #[arg(long, env = "ESSSPEC_THREADS", default_value_t = 0)]
    threads: usize,
    /// Seed for randomized campaigns
    #[arg(long, default_value_t = essspec_core::DEFAULT_SEED)]
    seed: u64,
    /// Enumeration cost-guard override
    #[arg(long, default_value_t = essspec_core::ENUMERATION_GUARD)]
    max_n: usize,
    /// Emit the full JSON report
    #[arg(long)]
    json: bool,
}

impl VerifyCommon {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            tol: self.tol,
            threads: self.threads,
            seed: self.seed,
            max_n: self.max_n,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of the distance matrix of a graph or digraph
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = essspec_core::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Essential connectivity with a cut certificate
    Essconn {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Vertex connectivity (undirected inputs)
    Vconn {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build an extremal construction and print it
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run a verification campaign
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Convert between the supported formats
    Convert {
        #[command(flatten)]
        input: InputArgs,
        /// Output format
        #[arg(long, value_enum)]
        to: Format,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Joined cliques minimizing the spectral radius at fixed essential connectivity
    Thm1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        out: Format,
    },
    /// Same with the minimum degree also fixed
    Thm2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        out: Format,
    },
    /// Extremal digraph family member
    Thm3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long, value_enum, default_value_t = Format::D6)]
        out: Format,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Exhaustive minimizer check at fixed essential connectivity
    Thm1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Exhaustive minimizer check at fixed essential connectivity and minimum degree
    Thm2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        delta: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Digraph family sweep plus random sampling against the family minimum
    Thm3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Sampled digraphs required (n <= 7)
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Rejection sampling attempt budget
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Random trials: removing a non-bridge edge raises the spectral radius
    LemmaEdge {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 4)]
        n_lo: usize,
        #[arg(long, default_value_t = 8)]
        n_hi: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Random trials: adding a missing arc lowers the spectral radius
    LemmaArc {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 4)]
        n_lo: usize,
        #[arg(long, default_value_t = 7)]
        n_hi: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Exhaustive joined-clique balancing check
    LemmaBalance {
        #[arg(long, default_value_t = 3)]
        max_s: usize,
        #[arg(long, default_value_t = 3)]
        max_c: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Family objective endpoint check over a range of n - k
    LemmaF {
        #[arg(long, default_value_t = 5)]
        nk_lo: usize,
        #[arg(long, default_value_t = 50)]
        nk_hi: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &InputArgs) -> essspec_core::Result<ParsedGraph> {
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| Error::invalid(format!("{}: {e}", input.file.display())))?;
    Ok(match input.format {
        Format::El => parse_edge_list(&text)?,
        Format::G6 => ParsedGraph::Undirected(parse_graph6(&text)?),
        Format::D6 => ParsedGraph::Directed(parse_digraph6(&text)?),
    })
}

fn certificate_json(cert: &Option<EssentialCutCertificate>) -> serde_json::Value {
    match cert {
        None => serde_json::json!({
            "essential_connectivity": serde_json::Value::Null,
            "defined": false,
        }),
        Some(c) => serde_json::json!({
            "essential_connectivity": c.cut_size(),
            "defined": true,
            "cut": c.cut,
            "blocks": c.partition.blocks(),
            "nontrivial_blocks": c.nontrivial_blocks,
        }),
    }
}

fn print_report(report: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        let lambda = report
            .min_lambda1
            .as_ref()
            .map(|e| format!("{:.12}", e.value))
            .unwrap_or_else(|| "-".into());
        println!(
            "{} {:?}: candidates={} min_lambda1={} matches={} unique={} ({} ms)",
            report.claim,
            report.parameters,
            report.candidates_examined,
            lambda,
            report.extremal_matches,
            report.uniqueness,
            report.runtime_ms
        );
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    if report.extremal_matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> essspec_core::Result<ExitCode> {
    match command {
        Command::Spectrum { input, tol, json } => {
            let matrix = match read_input(&input)? {
                ParsedGraph::Undirected(g) => DistanceMatrix::from_graph(&g)?,
                ParsedGraph::Directed(d) => DistanceMatrix::from_digraph(&d)?,
            };
            let r = spectral_radius(&matrix, tol)?;
            if json {
                println!("{}", SpectrumReport::new(&matrix, &r).to_json());
            } else {
                println!(
                    "lambda1 = {:.12}  enclosure [{:.12}, {:.12}]  iterations {}",
                    r.lambda1, r.lower, r.upper, r.iterations
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Essconn { input, json } => {
            let cert = match read_input(&input)? {
                ParsedGraph::Undirected(g) => essential_connectivity(&g)?,
                ParsedGraph::Directed(d) => digraph_essential_connectivity(&d)?,
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&certificate_json(&cert)).expect("serializable")
                );
            } else {
                match &cert {
                    None => println!("essential connectivity: undefined (no essential cut exists)"),
                    Some(c) => println!(
                        "essential connectivity: {} cut {:?} blocks {:?}",
                        c.cut_size(),
                        c.cut,
                        c.partition.blocks()
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Vconn { input, json } => {
            let g = match read_input(&input)? {
                ParsedGraph::Undirected(g) => g,
                ParsedGraph::Directed(_) => {
                    return Err(Error::invalid(
                        "vertex connectivity expects an undirected input",
                    ))
                }
            };
            let k = vertex_connectivity(&g);
            if json {
                println!("{}", serde_json::json!({ "vertex_connectivity": k }));
            } else {
                println!("vertex connectivity: {k}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct(cmd) => {
            match cmd {
                ConstructCmd::Thm1 { n, kappa, out } => {
                    print_graph(&extremal::theorem1_extremal(n, kappa)?, out)?
                }
                ConstructCmd::Thm2 {
                    n,
                    kappa,
                    delta,
                    out,
                } => print_graph(&extremal::theorem2_extremal(n, kappa, delta)?, out)?,
                ConstructCmd::Thm3 { n, k, n1, out } => {
                    print_digraph(&extremal::theorem3_extremal(n, k, n1)?, out)?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(cmd) => {
            let (report, json) = match cmd {
                VerifyCmd::Thm1 { n, kappa, common } => {
                    (verify_theorem1(n, kappa, &common.options())?, common.json)
                }
                VerifyCmd::Thm2 {
                    n,
                    kappa,
                    delta,
                    common,
                } => (
                    verify_theorem2(n, kappa, delta, &common.options())?,
                    common.json,
                ),
                VerifyCmd::Thm3 {
                    n,
                    k,
                    samples,
                    budget,
                    common,
                } => {
                    let mut opts = common.options();
                    opts.sample_target = samples;
                    opts.sample_budget = budget;
                    (verify_theorem3_family(n, k, &opts)?, common.json)
                }
                VerifyCmd::LemmaEdge {
                    trials,
                    n_lo,
                    n_hi,
                    common,
                } => (
                    edge_monotonicity_campaign(trials, n_lo, n_hi, &common.options())?,
                    common.json,
                ),
                VerifyCmd::LemmaArc {
                    trials,
                    n_lo,
                    n_hi,
                    common,
                } => (
                    arc_monotonicity_campaign(trials, n_lo, n_hi, &common.options())?,
                    common.json,
                ),
                VerifyCmd::LemmaBalance {
                    max_s,
                    max_c,
                    p,
                    max_order,
                    common,
                } => (
                    balancing_campaign(max_s, max_c, p, max_order, &common.options())?,
                    common.json,
                ),
                VerifyCmd::LemmaF {
                    nk_lo,
                    nk_hi,
                    common,
                } => (
                    objective_endpoint_campaign(nk_lo, nk_hi, &common.options())?,
                    common.json,
                ),
            };
            Ok(print_report(&report, json))
        }
        Command::Convert { input, to } => {
            match (read_input(&input)?, to) {
                (ParsedGraph::Undirected(g), Format::El) => print!("{}", write_edge_list(&g)),
                (ParsedGraph::Undirected(g), Format::G6) => println!("{}", write_graph6(&g)?),
                (ParsedGraph::Undirected(_), Format::D6) => {
                    return Err(Error::invalid("digraph6 output needs a directed input"))
                }
                (ParsedGraph::Directed(d), Format::El) => {
                    print!("{}", write_edge_list_digraph(&d))
                }
                (ParsedGraph::Directed(d), Format::D6) => println!("{}", write_digraph6(&d)?),
                (ParsedGraph::Directed(_), Format::G6) => {
                    return Err(Error::invalid("graph6 output needs an undirected input"))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_graph(g: &Graph, out: Format) -> essspec_core::Result<()> {
    match out {
        Format::El => print!("{}", write_edge_list(g)),
        Format::G6 => println!("{}", write_graph6(g)?),
        Format::D6 => {
            return Err(Error::invalid(
                "this construction is undirected; use el or g6",
            ))
        }
    }
    Ok(())
}

fn print_digraph(d: &Digraph, out: Format) -> essspec_core::Result<()> {
    match out {
        Format::El => print!("{}", write_edge_list_digraph(d)),
        Format::D6 => println!("{}", write_digraph6(d)?),
        Format::G6 => {
            return Err(Error::invalid(
                "this construction is directed; use el or d6",
            ))
        }
    }
    Ok(())
}

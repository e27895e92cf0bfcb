use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ribbon_graph::duality::{contract_all, partial_dual};
use ribbon_graph::oracle::{br_poly, multivariate_br, signed_br, signed_multivariate_br};
use ribbon_graph::poly::{rank_poly, tutte, RankArgs};
use ribbon_graph::quasitree::{qt_expansion_signed, qt_report};
use ribbon_graph::virtual_link::{bracket_via_ribbon, connected_state_expansion, kauffman_statesum, State, VirtualDiagram};
use ribbon_graph::{verify, EdgeOrder, Error, RibbonGraph};

#[derive(Parser)]
#[command(name = "ribbon", version, about = "Ribbon graph polynomials, partial duals and Kauffman brackets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "R")]
    R,
    #[value(name = "Rs")]
    Rs,
    #[value(name = "Z")]
    Z,
    #[value(name = "Zs")]
    Zs,
    Tutte,
    Rank,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Statesum,
    Connected,
    Ribbon,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial of a ribbon graph.
    Poly {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "Rs")]
        which: Which,
    },
    /// Quasi-tree table and the signed polynomial assembled from it.
    Qtexp {
        file: PathBuf,
        /// Edge labels from lowest to highest, comma separated.
        #[arg(long)]
        order: Option<String>,
    },
    /// Partial dual with respect to a set of edges.
    Dual {
        file: PathBuf,
        #[arg(long, default_value = "")]
        edges: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Contract a set of edges.
    Contract {
        file: PathBuf,
        #[arg(long, default_value = "")]
        edges: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kauffman bracket of a signed Gauss code.
    Bracket {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "statesum")]
        method: Method,
        /// Crossing labels from lowest to highest, for `connected`.
        #[arg(long)]
        order: Option<String>,
    },
    /// Run the oracle and duality suites on generated graphs.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn split_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect()
}

fn edge_order(g: &RibbonGraph, order_text: Option<&str>) -> Result<EdgeOrder, Error> {
    match order_text {
        None => Ok(EdgeOrder::identity(g.num_edges())),
        Some(s) => {
            let seq = split_labels(s).into_iter().map(|l| g.edge_index(l)).collect::<Result<Vec<_>, _>>()?;
            EdgeOrder::from_sequence(&seq, g.num_edges())
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|e| Error::InvalidState(format!("{}: {e}", p.display()))),
    }
}

fn run(cmd: Command) -> Result<bool, Error> {
    match cmd {
        Command::Poly { file, which } => {
            let g: RibbonGraph = read(&file)?.parse()?;
            let p = match which {
                Which::R => br_poly(&g),
                Which::Rs => signed_br(&g),
                Which::Z => multivariate_br(&g),
                Which::Zs => signed_multivariate_br(&g),
                Which::Tutte => tutte(&g.underlying_graph()),
                Which::Rank => rank_poly(&g.underlying_graph(), &RankArgs::symbolic()),
            };
            println!("{p}");
        }
        Command::Qtexp { file, order } => {
            let g: RibbonGraph = read(&file)?.parse()?;
            let order = edge_order(&g, order.as_deref())?;
            for row in qt_report(&g, &order)? {
                println!("{}  N={}  S={}", row.record.display(&g), row.n, row.s);
            }
            println!("total {}", qt_expansion_signed(&g, &order)?);
        }
        Command::Dual { file, edges, output } => {
            let g: RibbonGraph = read(&file)?.parse()?;
            let set = g.edge_set(&split_labels(&edges))?;
            emit(&partial_dual(&g, set).to_string(), output.as_deref())?;
        }
        Command::Contract { file, edges, output } => {
            let g: RibbonGraph = read(&file)?.parse()?;
            let set = g.edge_set(&split_labels(&edges))?;
            emit(&contract_all(&g, set).to_string(), output.as_deref())?;
        }
        Command::Bracket { file, method, order } => {
            let d: VirtualDiagram = read(&file)?.parse()?;
            let n = d.num_crossings();
            let p = match method {
                Method::Statesum => kauffman_statesum(&d),
                Method::Ribbon => bracket_via_ribbon(&d, &State::all_a(n))?,
                Method::Connected => {
                    let order = match order {
                        None => EdgeOrder::identity(n),
                        Some(s) => {
                            let seq = split_labels(&s)
                                .into_iter()
                                .map(|l| d.crossing_index(l))
                                .collect::<Result<Vec<_>, _>>()?;
                            EdgeOrder::from_sequence(&seq, n)?
                        }
                    };
                    connected_state_expansion(&d, &order)?
                }
            };
            println!("{p}");
        }
        Command::Verify { max_edges, seed } => {
            println!("seed {seed}");
            let reports = verify::run_all(max_edges, seed);
            for r in &reports {
                println!("{r}");
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("RIBBON_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Zero leaves the choice to rayon.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

//! Thin command-line front end over the library's `cli` module.

use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};

use digraph_ideals::cli::{
    exit_code, run_command, AnalysisRequest, Command, DoubleKind, Method, OrderChoice,
    OutputFormat,
};

#[derive(Parser)]
#[command(name = "digraph-ideals", version, about = "Structural digraph analysis through polynomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced basis of the binomial edge ideal.
    Ideal(Common),
    /// Cycles read off the ideal generators, or verified against the linear basis.
    Cycles(Common),
    /// Integer basis of the rational cycle space.
    CycleBasis(Common),
    /// Test for directed acyclicity.
    IsDag(Common),
    /// Test whether paths between vertex pairs are unique.
    IsUpd(Common),
    /// Minimal source and sink covers.
    Covers(Common),
    /// Test whether every non-isolated vertex is purely a source or purely a sink.
    Bipartite(Common),
    /// DOT export of the doubled graph.
    Hgraph {
        #[command(flatten)]
        common: Common,
        /// Doubled graph to export: with the matching (h) or without it (k).
        #[arg(long, value_enum, default_value_t = KindArg::H)]
        kind: KindArg,
    },
    /// Full report: ideal, cycles, dag, upd, bipartite, covers.
    Analyze(Common),
}

#[derive(Args)]
struct Common {
    /// Input graph file, JSON or DOT.
    input: PathBuf,
    /// Term order over the edge variables.
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Comma-separated edge ids, highest priority first.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Cycle route.
    #[arg(long, value_enum, default_value_t = MethodArg::Toric)]
    method: MethodArg,
    /// Orientation seed, required for undirected input.
    #[arg(long)]
    seed: Option<u64>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Bound on enumerated cycles.
    #[arg(long, default_value_t = 10_000)]
    max_cycles: usize,
    /// Bound on enumerated covers.
    #[arg(long, default_value_t = 10_000)]
    max_covers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Toric,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    H,
    K,
}

fn request(command: Command, common: Common) -> AnalysisRequest {
    AnalysisRequest {
        command,
        input: common.input,
        order: match common.order {
            OrderArg::Lex => OrderChoice::Lex,
            OrderArg::Grevlex => OrderChoice::Grevlex,
        },
        vars: common.vars,
        method: match common.method {
            MethodArg::Toric => Method::Toric,
            MethodArg::Linear => Method::Linear,
        },
        seed: common.seed,
        format: match common.format {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        },
        max_cycles: common.max_cycles,
        max_covers: common.max_covers,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            exit(code);
        }
    };
    let req = match cli.command {
        Cmd::Ideal(c) => request(Command::Ideal, c),
        Cmd::Cycles(c) => request(Command::Cycles, c),
        Cmd::CycleBasis(c) => request(Command::CycleBasis, c),
        Cmd::IsDag(c) => request(Command::IsDag, c),
        Cmd::IsUpd(c) => request(Command::IsUpd, c),
        Cmd::Covers(c) => request(Command::Covers, c),
        Cmd::Bipartite(c) => request(Command::Bipartite, c),
        Cmd::Hgraph { common, kind } => request(
            Command::HGraph {
                kind: match kind {
                    KindArg::H => DoubleKind::WithMatching,
                    KindArg::K => DoubleKind::WithoutMatching,
                },
            },
            common,
        ),
        Cmd::Analyze(c) => request(Command::Analyze, c),
    };
    match run_command(&req) {
        Ok(report) => {
            // Exit quietly if the reading end of a pipe has already closed.
            if let Err(e) = writeln!(std::io::stdout(), "{report}") {
                if e.kind() != ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    exit(2);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(exit_code(&e));
        }
    }
}

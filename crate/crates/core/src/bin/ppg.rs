use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ppg_core::analysis::Analysis;
use ppg_core::groups::{resolve_group, DEFAULT_MAX_ORDER};
use ppg_core::report::{parse_block, run, Command, Format};

#[derive(Parser)]
#[command(name = "ppg", version, about = "Pointed p-subgroups, pieces and generalized pieces of group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pieces Q_φ over the subgroup classes of a Sylow p-subgroup
    Pieces(Opts),
    /// Generalized pieces P ↑ Q_φ with their multiplicities
    Generalized(Opts),
    /// Points of every subgroup class on the group algebra
    Points(Opts),
    /// The multiposet of substantive generalized pieces
    Multiposet(Opts),
    /// Run the full invariant suite; exits 4 on any failure
    Verify(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Dot,
    Table,
}

#[derive(Args)]
struct Opts {
    /// Group file (JSON permutation generators) or builtin:<name>
    #[arg(long)]
    group: String,
    #[arg(long)]
    prime: u64,
    /// principal, all, or a 0-based block index
    #[arg(long, default_value = "principal")]
    block: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Fmt,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Cross-check relative multiplicities by explicit decomposition
    #[arg(long)]
    oracle_slow: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, opts) = match cli.command {
        Cmd::Pieces(o) => (Command::Pieces, o),
        Cmd::Generalized(o) => (Command::Generalized, o),
        Cmd::Points(o) => (Command::Points, o),
        Cmd::Multiposet(o) => (Command::Multiposet, o),
        Cmd::Verify(o) => (Command::Verify, o),
    };
    let format = match opts.format {
        Fmt::Json => Format::Json,
        Fmt::Dot => Format::Dot,
        Fmt::Table => Format::Table,
    };
    let result = (|| {
        let filter = parse_block(&opts.block)?;
        let group = resolve_group(&opts.group, opts.max_order)?;
        let a = Analysis::new(&group, opts.prime, opts.seed)?;
        run(&a, cmd, filter, format, opts.oracle_slow)
    })();
    match result {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("ppg: verification failed");
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("ppg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use suppkit::poly::MonomialOrder;
use suppkit_cli::commands::{Command, Options};
use suppkit_cli::report::{error_json, exit_code};

#[derive(Parser)]
#[command(name = "suppkit", version, about = "Supports, local cohomology and cohomology operators, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gröbner basis of an ideal, with membership probes.
    Gb(Job),
    /// Support of R/I, of a presented module, of a complex, or of an FD module.
    Support(Job),
    /// Rank variety of an FD module, cross-checked against Ext.
    Rankvar(Job),
    /// Ext with its Eisenbud-operator action and annihilator.
    Ext(Job),
    /// Build a Carlson module and its variety.
    Carlson(Job),
    /// Support membership through Ext of tensor products of Carlson modules.
    Benson(Job),
    /// Local cohomology of a multigraded complex in a degree box.
    Localcoh(Job),
    /// Supports across the localization triangle.
    Triangle(Job),
    /// Mayer–Vietoris support check for two ideals.
    MvCheck(Job),
    /// Indecomposable summands and their KRS grouping.
    Decompose(Job),
    /// Axiom checks over a corpus directory.
    Axioms(Job),
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args)]
struct Job {
    /// Input JSON file, or a corpus directory for `axioms`.
    input: PathBuf,
    /// Field characteristic (0 for the rationals); defaults to 2.
    #[arg(long = "char")]
    characteristic: Option<u64>,
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    /// Ext is computed through this cohomological degree.
    #[arg(long, default_value_t = 12)]
    bound: usize,
    /// Query box [-B, B]^n; derived from the input when absent.
    #[arg(long = "box")]
    box_radius: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (cmd, job) = match cli.command {
        Cmd::Gb(j) => (Command::Gb, j),
        Cmd::Support(j) => (Command::Support, j),
        Cmd::Rankvar(j) => (Command::Rankvar, j),
        Cmd::Ext(j) => (Command::Ext, j),
        Cmd::Carlson(j) => (Command::Carlson, j),
        Cmd::Benson(j) => (Command::Benson, j),
        Cmd::Localcoh(j) => (Command::Localcoh, j),
        Cmd::Triangle(j) => (Command::Triangle, j),
        Cmd::MvCheck(j) => (Command::MvCheck, j),
        Cmd::Decompose(j) => (Command::Decompose, j),
        Cmd::Axioms(j) => (Command::Axioms, j),
    };
    let opts = Options {
        char: job.characteristic,
        order: match job.order {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        },
        bound: job.bound,
        box_radius: job.box_radius,
        seed: job.seed,
    };
    match suppkit_cli::run_path(cmd, &job.input, &opts) {
        Ok((report, ok)) => {
            match serde_json::to_string_pretty(&report) {
                Ok(s) => println!("{s}"),
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(3);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(cmd.name(), &e));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

//! `hurwitz`: exact Hurwitz numbers, tables, cross-validation and branch
//! divisors from the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_core::Method;

use crate::output::CommandResult;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz numbers and branch divisors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a single H_{g,d}.
    Compute {
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(short = 'd', long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Character)]
        method: MethodArg,
    },
    /// Tabulate H_{g,d} for g <= gmax, 1 <= d <= dmax under one method.
    Table {
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        dmax: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Character)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::AlignedText)]
        format: Format,
    },
    /// Compute every cell under every applicable method and compare.
    Crosscheck {
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        dmax: u32,
    },
    /// Validate a stable map description and evaluate its branch divisor.
    BranchDivisor {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Character,
    Recursion,
    ClosedForm,
    ElsvG0,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Character => Method::Character,
            MethodArg::Recursion => Method::Recursion,
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::ElsvG0 => Method::ElsvG0,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    AlignedText,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.kind().to_string();
            eprint!("{e}");
            let result = CommandResult::invalid(message);
            print!("{}", result.render());
            return ExitCode::from(result.status.exit_code() as u8);
        }
    };

    let result = match cli.command {
        Command::Compute {
            genus,
            degree,
            method,
        } => commands::compute(genus, degree, method.into()),
        Command::Table {
            gmax,
            dmax,
            method,
            format,
        } => commands::table(gmax, dmax, method.into(), format),
        Command::Crosscheck { gmax, dmax } => commands::crosscheck(gmax, dmax),
        Command::BranchDivisor { input } => commands::branch_divisor(&input),
    };

    if let Some(diagnostic) = &result.diagnostic {
        eprintln!("error: {diagnostic}");
    }
    print!("{}", result.render());
    ExitCode::from(result.status.exit_code() as u8)
}

mod args;
mod bench;
mod commands;
mod report;
mod verify;

use std::process::ExitCode;

use clap::Parser;
use diagquartic::{Element, Field, FieldContext};

use args::{Cli, Command, Common};
use report::{emit, Report};

/// Exit 2: bad input. Exit 1: a check or cross-method comparison failed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<diagquartic::Error> for CliError {
    fn from(e: diagquartic::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn field_context(p: u64, m: u32, common: &Common) -> CliResult<FieldContext> {
    let field = match &common.modulus {
        Some(modulus) => {
            if modulus.len() != m as usize + 1 {
                return Err(CliError::Usage(format!(
                    "--modulus has degree {} but --m is {m}",
                    modulus.len().saturating_sub(1)
                )));
            }
            Field::with_modulus(p, modulus.clone())?
        }
        None => Field::new(p, m)?,
    };
    let ctx = FieldContext::from_parts(field.clone(), diagquartic::GeneratorData::find(&field))?;
    match common.generator {
        Some(g) => Ok(ctx.with_generator(field.element(g)?)?),
        None => Ok(ctx),
    }
}

pub fn configured_context(common: &Common) -> CliResult<FieldContext> {
    let p = common
        .p
        .ok_or_else(|| CliError::Usage("--p is required for this subcommand".into()))?;
    field_context(p, common.m, common)
}

pub fn element(ctx: &FieldContext, v: u64) -> CliResult<Element> {
    Ok(ctx.element(v)?)
}

fn finish(report: &impl Report, common: &Common) -> CliResult<()> {
    emit(report, common.format()).map_err(|e| CliError::Failed(format!("write failed: {e}")))?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed("checks failed".into()))
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let common = &cli.common;
    match &cli.command {
        Command::Field => finish(&commands::field(&configured_context(common)?)?, common),
        Command::Cyclotomic { k } => finish(&commands::cyclotomic(&configured_context(common)?, *k)?, common),
        Command::Count(a) => finish(&commands::count(&configured_context(common)?, a)?, common),
        Command::Series { c, y, terms } => {
            finish(&commands::series(&configured_context(common)?, *c, *y, *terms)?, common)
        }
        Command::Verify {
            nmax,
            expsums,
            perturb_t,
        } => finish(&verify::run(common, *nmax, *expsums, *perturb_t)?, common),
        Command::Bench { nmax, fields } => finish(&bench::run(common, *nmax, fields.as_deref())?, common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

//! Command-line driver for the `pslet` binary.

pub mod args;
pub mod compute;
pub mod render;
pub mod report;

use std::path::PathBuf;

use thiserror::Error;

use args::{Cli, Cmd, Format, OutputArgs};
use compute::Request;
use report::{Document, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{stage} stage failed: {source}")]
    Solver {
        stage: &'static str,
        #[source]
        source: pslet_core::Error,
    },

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn points(command: &str, points: Vec<report::PointReport>) -> Document {
    Document { schema_version: SCHEMA_VERSION, command: command.into(), points: Some(points), table: None }
}

/// Runs one parsed command and writes its output.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let (doc, output) = match &cli.command {
        Cmd::Energy(a) => {
            let req = Request { series: true, terms: Some(a.terms as usize), pade: None, oracle: a.with_oracle };
            (points("energy", vec![compute::point(a.alpha, a.l, req)?]), &a.output)
        }
        Cmd::Pade(a) => {
            compute::check_pade_order(a.n, a.m)?;
            let req = Request { series: true, terms: None, pade: Some((a.n, a.m)), oracle: a.with_oracle };
            (points("pade", vec![compute::point(a.alpha, a.l, req)?]), &a.output)
        }
        Cmd::Oracle(a) => {
            let req = Request { oracle: true, ..Request::default() };
            (points("oracle", vec![compute::point(a.alpha, a.l, req)?]), &a.output)
        }
        Cmd::Table(a) => {
            let table = compute::table(a.id, a.with_oracle)?;
            let doc = Document { schema_version: SCHEMA_VERSION, command: "table".into(), points: None, table: Some(table) };
            (doc, &a.output)
        }
        Cmd::Sweep(a) => {
            let pade = a.n.zip(a.m);
            if let Some((n, m)) = pade {
                compute::check_pade_order(n, m)?;
            }
            let req = Request { series: false, terms: Some(a.terms as usize), pade, oracle: a.with_oracle };
            (points("sweep", compute::sweep(&a.alpha, &a.l, req)?), &a.output)
        }
    };
    emit(&doc, output)
}

fn emit(doc: &Document, output: &OutputArgs) -> Result<(), CliError> {
    let body = match output.format {
        Format::Text => render::text(doc),
        Format::Csv => render::csv(doc)?,
        Format::Json => report::to_json(doc)?,
    };
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

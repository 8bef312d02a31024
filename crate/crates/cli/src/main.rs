use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use inss::io::{load_reference_matrix, load_soft_set, render_report, render_table, SoftSetDocument};
use inss::reference_oracle::oracle_matrix;
use inss::soft_algebra::{and, complement, equals, intersection, is_subset, or, union};
use inss::{select_best, Error, Parameter, SoftSet};

/// Intuitionistic neutrosophic soft sets: validate, combine and decide.
#[derive(Parser)]
#[command(name = "inss", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document loads and every triple is valid.
    Validate { file: PathBuf },
    /// Print a document as an aligned table.
    Show { file: PathBuf },
    /// Complement over the negated parameters.
    Complement {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Union of two soft sets.
    Union(Binary),
    /// Intersection of two soft sets; their parameter sets must overlap.
    Intersect(Binary),
    /// AND over all parameter pairs.
    And(Binary),
    /// OR over all parameter pairs.
    Or(Binary),
    /// Print whether the first soft set is contained in the second.
    Subset { left: PathBuf, right: PathBuf },
    /// Print whether two soft sets are equal.
    Equals { left: PathBuf, right: PathBuf },
    /// Score every object on the chosen parameters and select the best.
    Decide {
        file: PathBuf,
        /// Comma-separated choice parameters, matched by label.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<String>,
        /// Matrix document to diff the recomputed matrix against.
        #[arg(long)]
        reference_matrix: Option<PathBuf>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Recount the matrix with the reference oracle and fail on disagreement.
        #[arg(long, hide = true)]
        audit: bool,
    },
}

#[derive(Args)]
struct Binary {
    left: PathBuf,
    right: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Write the result document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Domain(Error),
    /// The hidden audit found the oracle and the production matrix apart.
    Audit,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit(set: &SoftSet, out: &Output) -> inss::Result<String> {
    match &out.out {
        Some(path) => {
            inss::io::save_soft_set(set, path)?;
            Ok(String::new())
        }
        None => Ok(SoftSetDocument::from_soft_set(set).to_canonical_json()),
    }
}

fn binary(b: &Binary, op: fn(&SoftSet, &SoftSet) -> inss::Result<SoftSet>) -> inss::Result<String> {
    let result = op(&load_soft_set(&b.left)?, &load_soft_set(&b.right)?)?;
    emit(&result, &b.out)
}

fn choice(set: &SoftSet, labels: &[String]) -> inss::Result<Vec<Parameter>> {
    labels
        .iter()
        .map(|l| {
            let l = l.trim();
            set.parameter_by_label(l)
                .cloned()
                .ok_or_else(|| Error::UnknownParameter(l.to_string()))
        })
        .collect()
}

fn decide(file: &Path, params: &[String], reference: Option<&Path>, json: bool, audit: bool) -> Result<String, Failure> {
    let set = load_soft_set(file)?;
    let sel = select_best(&set, &choice(&set, params)?)?;
    let reference = reference.map(load_reference_matrix).transpose()?;
    let report = sel.report(reference.as_ref())?;
    let audit_line = if audit {
        let recount = oracle_matrix(&sel.table);
        if recount != sel.matrix {
            return Err(Failure::Audit);
        }
        "Audit: oracle recount agrees\n"
    } else {
        ""
    };
    if json {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        return Ok(text);
    }
    Ok(format!(
        "Decision table\n{}\n{}{audit_line}",
        render_table(sel.table.soft_set()),
        render_report(&report)
    ))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    Ok(match &cli.command {
        Command::Validate { file } => {
            let set = load_soft_set(file)?;
            format!(
                "valid: {} elements, {} parameters\n",
                set.universe().len(),
                set.parameter_count()
            )
        }
        Command::Show { file } => render_table(&load_soft_set(file)?),
        Command::Complement { file, out } => emit(&complement(&load_soft_set(file)?), out)?,
        Command::Union(b) => binary(b, union)?,
        Command::Intersect(b) => binary(b, intersection)?,
        Command::And(b) => binary(b, and)?,
        Command::Or(b) => binary(b, or)?,
        Command::Subset { left, right } => format!("{}\n", is_subset(&load_soft_set(left)?, &load_soft_set(right)?)?),
        Command::Equals { left, right } => format!("{}\n", equals(&load_soft_set(left)?, &load_soft_set(right)?)?),
        Command::Decide {
            file,
            params,
            reference_matrix,
            json,
            audit,
        } => decide(file, params, reference_matrix.as_deref(), *json, *audit)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Audit) => {
            eprintln!("error: AuditMismatch: oracle recount disagrees with the comparison matrix");
            ExitCode::from(1)
        }
    }
}

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symp_verma::tensor::{certificate_json, VermaMatrix};
use symp_verma::verma::basis_records;
use symp_verma::{
    check_triangular, enumerate_kn4, enumerate_tuples, independence_rank, is_kn_sp4, relation_check,
    tableau_to_tuple, tableau_weight, tuple_to_tableau, verma_weight, weyl_dim, Ambient, Budget, Error,
    HighestWeight,
};

/// Verma bases of irreducible sp(4)-modules.
#[derive(Parser)]
#[command(name = "symp-verma", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the KN tableaux of shape (m1 + m2, m2), largest first.
    Tableaux(ListArgs),
    /// List the Verma basis: tuple, monomial, tableau and weight.
    Basis(ListArgs),
    /// Run every consistency check and print a pass/fail table.
    Verify(VerifyArgs),
    /// Export the Verma vectors as a sparse integer matrix.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct Weight {
    #[arg(long)]
    m1: u32,
    #[arg(long)]
    m2: u32,
}

impl Weight {
    fn hw(&self) -> HighestWeight {
        HighestWeight::new(self.m1, self.m2)
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Largest tensor space dimension 4^m1 * 6^m2 to accept.
    #[arg(long, env = "SYMP_VERMA_BUDGET", default_value_t = Budget::DEFAULT.0)]
    budget: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Latex,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    weight: Weight,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    weight: Weight,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long)]
    skip_rank: bool,
    /// Write the triangularity certificate (JSON) to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    weight: Weight,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Largest space on which `verify` runs the relation check.
const RELATION_CHECK_LIMIT: u128 = 100_000;

enum Failure {
    Math(String),
    Resource(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Math(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tableaux(args) => tableaux(args),
        Command::Basis(args) => basis(args),
        Command::Verify(args) => verify(args),
        Command::Matrix(args) => matrix(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn tableaux(args: ListArgs) -> Result<(), Failure> {
    let mut w = output(&args.out)?;
    for (i, t) in enumerate_kn4(args.weight.hw()).iter().enumerate() {
        match args.format.unwrap_or(Format::Ascii) {
            Format::Ascii => {
                if i > 0 {
                    writeln!(w)?;
                }
                writeln!(w, "{t}")?;
            }
            Format::Json => writeln!(w, "{}", t.to_json())?,
            Format::Latex => writeln!(w, "{}", t.to_latex())?,
        }
    }
    w.flush()?;
    Ok(())
}

fn basis(args: ListArgs) -> Result<(), Failure> {
    let mut w = output(&args.out)?;
    for r in basis_records(args.weight.hw())? {
        match args.format.unwrap_or(Format::Json) {
            Format::Json => writeln!(w, "{}", r.to_json())?,
            Format::Ascii => {
                let wt = r.weight.coords();
                writeln!(w, "{}  {}  weight ({}, {})", r.tuple, r.monomial(), wt[0], wt[1])?;
                for line in r.tableau.to_string().lines() {
                    writeln!(w, "    {line}")?;
                }
            }
            Format::Latex => writeln!(w, "% {} {}\n{}", r.tuple, r.monomial(), r.tableau.to_latex())?,
        }
    }
    w.flush()?;
    Ok(())
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

fn outcome(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let hw = args.weight.hw();
    let budget = Budget(args.budget.budget);
    let ambient = Ambient::from(hw);
    budget.check(ambient)?;

    let mut checks: Vec<(&str, Outcome)> = Vec::new();
    let (l1, l2) = hw.partition();
    let tuples = enumerate_tuples(hw);
    let tableaux = enumerate_kn4(hw);
    let dim = weyl_dim(l1.into(), l2.into())?;
    checks.push((
        "counts",
        outcome(
            tuples.len() == tableaux.len() && tableaux.len() as u64 == dim,
            format!("{} tuples, {} tableaux, Weyl dimension {dim}", tuples.len(), tableaux.len()),
        ),
    ));

    let mut images = BTreeSet::new();
    let mut bijective = true;
    let mut weights_agree = true;
    for &a in &tuples {
        let t = tuple_to_tableau(a, hw)?;
        bijective &= is_kn_sp4(&t)? && tableau_to_tuple(&t)? == a;
        weights_agree &= tableau_weight(&t) == verma_weight(a, hw);
        images.insert(format!("{t:?}"));
    }
    let listed: BTreeSet<String> = tableaux.iter().map(|t| format!("{t:?}")).collect();
    bijective &= images == listed;
    checks.push(("bijection", outcome(bijective, "tuple -> tableau -> tuple".into())));
    checks.push(("weights", outcome(weights_agree, "closed form vs tableau weight".into())));

    match check_triangular(hw, budget) {
        Ok(records) => {
            let terms: usize = records.iter().map(|r| r.num_terms).sum();
            checks.push(("triangularity", Outcome::Pass(format!("{} vectors, {terms} terms", records.len()))));
            if let Some(path) = &args.out {
                let mut w = output(&Some(path.clone()))?;
                serde_json::to_writer_pretty(&mut w, &certificate_json(&records)).map_err(io::Error::from)?;
                writeln!(w)?;
                w.flush()?;
            }
        }
        Err(e) if e.is_resource() => return Err(e.into()),
        Err(e) => checks.push(("triangularity", Outcome::Fail(e.to_string()))),
    }

    if args.skip_rank {
        checks.push(("rank", Outcome::Skipped("--skip-rank".into())));
    } else {
        let rank = independence_rank(hw, budget)?;
        checks.push(("rank", outcome(rank as u64 == dim, format!("rank {rank}, expected {dim}"))));
    }

    if ambient.dimension() <= RELATION_CHECK_LIMIT {
        checks.push(("relations", outcome(relation_check(hw), format!("on all {} basis tensors", ambient.dimension()))));
    } else {
        checks.push(("relations", Outcome::Skipped(format!("dim W > {RELATION_CHECK_LIMIT}"))));
    }

    println!("verify {hw}");
    let mut failed = false;
    for (name, result) in &checks {
        let (label, detail) = match result {
            Outcome::Pass(d) => ("pass", d),
            Outcome::Fail(d) => {
                failed = true;
                ("FAIL", d)
            }
            Outcome::Skipped(d) => ("skip", d),
        };
        println!("  {name:<14} {label}  {detail}");
    }
    if failed {
        return Err(Failure::Math("some checks failed".into()));
    }
    Ok(())
}

fn matrix(args: MatrixArgs) -> Result<(), Failure> {
    let m = VermaMatrix::build(args.weight.hw(), Budget(args.budget.budget))?;
    let mut w = output(&args.out)?;
    m.write_coordinate_list(&mut w)?;
    w.flush()?;
    Ok(())
}

//! Command implementations for the `epr-verify` binary. Every command writes
//! to caller-supplied sinks and returns the process exit code.

use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use epr_algebra::suite::{search_assignments, ClassicalAssignment, Observable, ValueConstraint};
use epr_algebra::triples::{build_incidence, diff_with_paper_list, enumerate_basic_triples, listed_positions};
use epr_algebra::{build_singlet, parse_expr, run_full_report, Element, Evaluator, LetterTable, PauliWord, SingletState};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const EXPR_HELP: &str = "Expressions use E<ij> (i,j in 0..3), e<k> (k in 1..3), psi, I, \
integers, fractions a/b and i, combined with + - * and parentheses. \
There is no division: write x/i as -i*x.";

#[derive(Debug, Parser)]
#[command(name = "epr-verify", version, about = "Exact checks of the singlet-state Pauli algebra", after_help = EXPR_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check and print the report. Exit 0 on pass, 1 on failure.
    Verify {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Flip one entry of the composition table (fault injection).
        #[arg(long, hide = true)]
        corrupt_table: bool,
    },
    /// Singlet expectation of an expression and its outcome probabilities.
    Expect {
        expr: String,
        /// Let `psi` denote the projector -psi.
        #[arg(long)]
        projector: bool,
    },
    /// List the basic triples of two-site words.
    Triples {
        /// Append the comparison with the published listing.
        #[arg(long)]
        diff_paper: bool,
    },
    /// Exhaustive classical +-1 assignment table.
    Peres,
    /// Print an expression in canonical element form.
    Eval {
        expr: String,
        /// Let `psi` denote the projector -psi.
        #[arg(long)]
        projector: bool,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Verify { format, out: path, corrupt_table } => verify(format, path, corrupt_table, out, err),
        Command::Expect { expr, projector } => expect(&expr, projector, out),
        Command::Triples { diff_paper } => triples(diff_paper, out),
        Command::Peres => peres(out),
        Command::Eval { expr, projector } => eval(&expr, projector, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn verify(
    format: Format,
    path: Option<PathBuf>,
    corrupt: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let table = if corrupt { LetterTable::corrupted() } else { LetterTable::standard() };
    let report = run_full_report(&SingletState::build_with(table));
    let text = match format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };
    match path {
        Some(p) => std::fs::write(&p, &text).with_context(|| format!("writing {}", p.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    for c in report.failing() {
        writeln!(err, "FAILED: {} [{}]", c.name, c.kind)?;
    }
    Ok(report.exit_code())
}

fn evaluate(src: &str, projector: bool) -> anyhow::Result<(Element, SingletState)> {
    let expr = parse_expr(src)?;
    let state = build_singlet();
    let psi = if projector { state.projector().clone() } else { state.psi().clone() };
    let value = Evaluator::new(state.table().clone(), psi).eval(&expr, 2)?;
    Ok((value, state))
}

fn expect(src: &str, projector: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (value, state) = evaluate(src, projector)?;
    if value.arity() != 2 {
        anyhow::bail!("expectations need a two-site expression, got arity {}", value.arity());
    }
    writeln!(out, "expr: {value}")?;
    writeln!(out, "mean: {}", state.expectation(&value)?)?;
    let (p, m) = state.outcome_probabilities(&value)?;
    writeln!(out, "born: p(+1) = {p}, p(-1) = {m}")?;
    let (lp, lm) = state.literal_probabilities(&value)?;
    writeln!(out, "literal (1/2 +- mean): p(+1) = {lp}, p(-1) = {lm}")?;
    Ok(EXIT_PASS)
}

fn eval(src: &str, projector: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (value, _) = evaluate(src, projector)?;
    writeln!(out, "{value}")?;
    Ok(EXIT_PASS)
}

fn triples(diff_paper: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let found = enumerate_basic_triples();
    for t in &found {
        let [a, b, c] = t.cyclic();
        writeln!(out, "{t}  {a}*{b} = i*{c}")?;
    }
    if diff_paper {
        let diff = diff_with_paper_list(&found);
        writeln!(out)?;
        writeln!(out, "found {} triples; published listing has 17", found.len())?;
        writeln!(out, "found but not listed:")?;
        for t in &diff.found_not_listed {
            writeln!(out, "  ({})", t.join(", "))?;
        }
        writeln!(out, "listed but not found:")?;
        for t in &diff.listed_not_found {
            writeln!(out, "  ({})", t.join(", "))?;
        }
        let e12 = PauliWord::pair(1, 2);
        let incidence = build_incidence(&found);
        writeln!(out, "E12 belongs to:")?;
        for t in incidence.get(&e12).unwrap_or_default() {
            writeln!(out, "  {t}")?;
        }
        let positions: Vec<_> = listed_positions(&e12).iter().map(ToString::to_string).collect();
        writeln!(out, "E12 listed at sets {}", positions.join(", "))?;
    }
    Ok(EXIT_PASS)
}

fn peres(out: &mut dyn Write) -> anyhow::Result<i32> {
    let sign = |v: i8| if v > 0 { "+1" } else { "-1" };
    let mark = |b: bool| if b { "yes" } else { "no" };
    let header: Vec<_> = Observable::ALL.iter().map(|o| o.name()).collect();
    writeln!(out, "{} | c1  c2  c3  | all", header.join("  "))?;
    for a in ClassicalAssignment::all() {
        let vals: Vec<_> = Observable::ALL.iter().map(|&o| format!("{:>3}", sign(a.value(o)))).collect();
        let cs: Vec<_> = ValueConstraint::ALL.iter().map(|&c| format!("{:<3}", mark(a.satisfies(c)))).collect();
        let all = ValueConstraint::ALL.iter().all(|&c| a.satisfies(c));
        writeln!(out, "{} | {} | {}", vals.join("  "), cs.join(" "), mark(all))?;
    }
    writeln!(out)?;
    for (k, c) in ValueConstraint::ALL.iter().enumerate() {
        writeln!(out, "c{}: {}", k + 1, c.describe())?;
    }
    writeln!(out, "satisfying all constraints: {}", search_assignments(&ValueConstraint::ALL).len())?;
    writeln!(
        out,
        "satisfying c1 and c2 only: {}",
        search_assignments(&[ValueConstraint::OppositeFirstAxis, ValueConstraint::OppositeSecondAxis]).len()
    )?;
    Ok(EXIT_PASS)
}

//! Command-line front end. Results go to stdout (JSON by default),
//! diagnostics to stderr.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a checked claim failed
//! (a singular candidate family or an identity that does not hold).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bases::{basis_element, expand_in_family, transition_matrix, BasisFamily, TransitionMatrix};
use crate::conjecture::{check_conjecture, ConjectureVariant};
use crate::error::{Error, Result};
use crate::mixedbasis::{mixed_expand, verify_mixed_basis, FirstFamily, Generator, MixedVariant};
use crate::partition::{count_table, Partition};
use crate::polyring::{Scalar, SymPoly};
use crate::quotient::{classical_spec, quantum_spec, reduce, schur_product, QuotientSpec};

#[derive(Parser, Debug)]
#[command(name = "symquot", version, about = "Mixed bases and quotient rings of symmetric polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a polynomial in one of the classical families
    Expand {
        #[command(flatten)]
        input: InputArgs,
        /// Target family: m, e, h, s, p or e'
        #[arg(long)]
        family: BasisFamily,
        /// Restrict the target to partitions in the k x (n-k) box
        #[arg(long)]
        restrict_n: Option<usize>,
    },
    /// Expand a polynomial over a mixed basis X_λ Y_μ
    MixedExpand {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        first: FirstFamily,
        #[arg(long)]
        second: Generator,
        #[arg(long)]
        n: usize,
    },
    /// Transition matrix between two families on one degree
    TransitionMatrix {
        #[arg(long)]
        row: BasisFamily,
        #[arg(long)]
        col: BasisFamily,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        restrict_n: Option<usize>,
    },
    /// Canonical form in S/J (family p) or S/I (family h)
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        quotient: QuotientArgs,
        /// Output basis: s, m or e (meaning e_{λ'})
        #[arg(long, default_value = "s")]
        basis: FirstFamily,
    },
    /// Products s_λ s_μ in a quotient
    StructureConstants {
        #[arg(long, value_enum, default_value_t = Mode::Classical)]
        mode: Mode,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// Generator family, custom mode only
        #[arg(long, default_value = "h")]
        family: Generator,
        /// Deformation `<t>=<value>`, custom mode only
        #[arg(long = "b", value_name = "T=VALUE")]
        deformations: Vec<String>,
    },
    /// Check that a mixed family is a basis in a range of degrees
    CheckBasis {
        #[arg(long)]
        first: FirstFamily,
        #[arg(long)]
        second: Generator,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long)]
        max_degree: usize,
    },
    /// Rank evidence for the h_λ p_μ (7.1) or h_{λ'} p_μ (7.2) families
    CheckConjecture {
        #[arg(long)]
        variant: ConjectureVariant,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
    },
    /// Per-degree partition counts behind the dimension identity
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Classical,
    Quantum,
    Custom,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long)]
    k: usize,
    /// `<family>:<partition>` such as `s:3,1` or `m:-`, or a JSON term list
    #[arg(long, alias = "input", conflicts_with = "input_file", required_unless_present = "input_file")]
    element: Option<String>,
    /// File holding a JSON term list
    #[arg(long)]
    input_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct QuotientArgs {
    #[arg(long)]
    n: usize,
    /// Generator family: p or h
    #[arg(long)]
    family: Generator,
    /// Deformation `<t>=<value>`; value is a JSON term list or a scalar like `-q`
    #[arg(long = "b", value_name = "T=VALUE")]
    deformations: Vec<String>,
}

impl InputArgs {
    fn polynomial(&self) -> Result<SymPoly> {
        match (&self.element, &self.input_file) {
            (Some(text), _) => parse_element(text, self.k),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                parse_json_poly(&text, self.k)
            }
            (None, None) => Err(Error::Parse("no input given".into())),
        }
    }
}

/// Parses `<family>:<partition>` or a JSON term list.
pub fn parse_element(text: &str, k: usize) -> Result<SymPoly> {
    let text = text.trim();
    if text.starts_with('[') {
        return parse_json_poly(text, k);
    }
    let (family, partition) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected <family>:<partition>, got {text:?}")))?;
    let family: BasisFamily = family.parse()?;
    let lambda: Partition = partition.parse()?;
    Ok(basis_element(family, &lambda, k))
}

fn parse_json_poly(text: &str, k: usize) -> Result<SymPoly> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    SymPoly::from_json(k, &value)
}

fn parse_deformations(items: &[String], k: usize) -> Result<BTreeMap<usize, SymPoly>> {
    let mut out = BTreeMap::new();
    for item in items {
        let (t, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected <t>=<value>, got {item:?}")))?;
        let t: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad index in {item:?}")))?;
        let value = value.trim();
        let b = if value.starts_with('[') {
            parse_json_poly(value, k)?
        } else {
            SymPoly::constant(k, value.parse::<Scalar>()?)
        };
        if out.insert(t, b).is_some() {
            return Err(Error::Parse(format!("b_{t} given twice")));
        }
    }
    Ok(out)
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(Verdict::Holds) => 0,
        Ok(Verdict::Fails(why)) => {
            let _ = writeln!(err, "claim failed: {why}");
            3
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_falsified_claim() {
                3
            } else {
                2
            }
        }
    }
}

enum Verdict {
    Holds,
    Fails(String),
}

fn emit(out: &mut dyn Write, format: Output, json: &impl Serialize, table: impl FnOnce() -> String) -> Result<()> {
    let text = match format {
        Output::Json => {
            serde_json::to_string_pretty(json).map_err(|e| Error::Parse(e.to_string()))? + "\n"
        }
        Output::Table => table(),
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::Parse(e.to_string()))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict> {
    let format = cli.output;
    match &cli.command {
        Command::Expand { input, family, restrict_n } => {
            let f = input.polynomial()?;
            let coeffs = expand_in_family(&f, *family, *restrict_n)?;
            let json = serde_json::json!({ "family": family, "k": input.k, "coeffs": coeffs });
            emit(out, format, &json, || {
                coeffs.iter().map(|(l, c)| format!("{c}\t{family}[{l}]\n")).collect()
            })?;
        }
        Command::MixedExpand { input, first, second, n } => {
            let variant = MixedVariant::new(*first, *second, input.k, *n)?;
            let x = mixed_expand(&input.polynomial()?, variant)?;
            emit(out, format, &x.to_json(), || {
                x.terms()
                    .map(|((l, m), c)| format!("{c}\t{first}[{l}] {second}[{m}]\n"))
                    .collect()
            })?;
        }
        Command::TransitionMatrix { row, col, degree, k, restrict_n } => {
            let t = transition_matrix(*row, *col, *degree, *k, *restrict_n)?;
            emit(out, format, &t, || matrix_table(&t))?;
        }
        Command::Reduce { input, quotient, basis } => {
            let spec = QuotientSpec::new(
                input.k,
                quotient.n,
                quotient.family,
                parse_deformations(&quotient.deformations, input.k)?,
            )?;
            let r = reduce(&input.polynomial()?, &spec, *basis)?;
            emit(out, format, &r.to_json(), || format!("{r}\n"))?;
        }
        Command::StructureConstants { mode, k, n, lambda, mu, family, deformations } => {
            if *mode != Mode::Custom && !deformations.is_empty() {
                return Err(Error::InvalidParameters("--b is only accepted with --mode custom".into()));
            }
            let spec = match mode {
                Mode::Classical => classical_spec(*k, *n)?,
                Mode::Quantum => quantum_spec(*k, *n)?,
                Mode::Custom => QuotientSpec::new(*k, *n, *family, parse_deformations(deformations, *k)?)?,
            };
            let r = schur_product(lambda, mu, &spec)?;
            if !r.is_integral() {
                let _ = writeln!(err, "note: non-integral structure constants");
            }
            emit(out, format, &r.to_json(), || format!("{r}\n"))?;
        }
        Command::CheckBasis { first, second, k, n, min_degree, max_degree } => {
            let variant = MixedVariant::new(*first, *second, *k, *n)?;
            let verdicts = (*min_degree..=*max_degree)
                .map(|i| verify_mixed_basis(variant, i))
                .collect::<Result<Vec<_>>>()?;
            let json = serde_json::json!({ "variant": variant, "degrees": verdicts });
            emit(out, format, &json, || {
                let mut s = format!("{variant}\n{:>6} {:>10} {:>9} {:>5}  verdict\n", "degree", "candidates", "dimension", "rank");
                for v in &verdicts {
                    let verdict = if v.is_ok() { "ok" } else { "SINGULAR" };
                    s.push_str(&format!("{:>6} {:>10} {:>9} {:>5}  {verdict}\n", v.degree, v.candidates, v.dimension, v.rank));
                }
                s
            })?;
            if let Some(v) = verdicts.iter().find(|v| !v.is_ok()) {
                return Ok(Verdict::Fails(format!(
                    "{variant}: degree {} has {} candidates of rank {} in dimension {}",
                    v.degree, v.candidates, v.rank, v.dimension
                )));
            }
        }
        Command::CheckConjecture { variant, k, n, max_degree } => {
            let report = check_conjecture(*variant, *k, *n, *max_degree)?;
            emit(out, format, &report, || report.table())?;
            if let Some(v) = report.first_failure() {
                return Ok(Verdict::Fails(format!(
                    "conjecture {variant} k={k} n={n}: degree {} has rank {} of {} candidates (dimension {})",
                    v.degree, v.rank, v.candidates, v.dimension
                )));
            }
        }
        Command::Count { k, n, max_degree } => {
            let rows = count_table(*k, *n, *max_degree)?;
            emit(out, format, &rows, || {
                let mut s = format!(
                    "{:>6} {:>6} {:>6} {:>6} {:>8} {:>7}\n",
                    "degree", "box", "band", "P_k", "gauss", "product"
                );
                for r in &rows {
                    s.push_str(&format!(
                        "{:>6} {:>6} {:>6} {:>6} {:>8} {:>7}\n",
                        r.degree, r.boxed, r.banded, r.at_most_k, r.gaussian, r.product
                    ));
                }
                s
            })?;
            if let Some(r) = rows.iter().find(|r| !r.holds()) {
                return Ok(Verdict::Fails(format!("counting identity fails at degree {}", r.degree)));
            }
        }
    }
    Ok(Verdict::Holds)
}

fn matrix_table(t: &TransitionMatrix) -> String {
    let cells: Vec<Vec<String>> = t.entries.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect();
    let corner = format!("{}\\{}", t.row_family, t.col_family);
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(t.cols.iter().map(|c| c.to_string().len()))
        .max()
        .unwrap_or(1);
    let row_width = t.rows.iter().map(|r| r.to_string().len()).chain([corner.len()]).max().unwrap_or(1);
    let mut s = format!("{corner:row_width$} |");
    for c in &t.cols {
        s.push_str(&format!(" {:>width$}", c.to_string()));
    }
    s.push('\n');
    for (r, row) in t.rows.iter().zip(&cells) {
        s.push_str(&format!("{:row_width$} |", r.to_string()));
        for c in row {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.push('\n');
    }
    s
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse error,
//! 3 unsupported request.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Basis, Element};
use crate::composition::{Composition, SkewShape};
use crate::convert::{canonical, to_basis};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_sit, Tableau};
use crate::verify::Suite;
use crate::{pieri, render};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "immaculate",
    version,
    about = "Dual immaculate functions and their Pieri rules"
)]
pub struct Cli {
    #[command(flatten)]
    pub format: FormatArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormatArgs {
    /// Canonically ordered JSON.
    #[arg(long, global = true, conflicts_with = "latex")]
    pub json: bool,
    /// LaTeX in the usual notation.
    #[arg(long, global = true)]
    pub latex: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

impl FormatArgs {
    pub fn format(&self) -> Format {
        match (self.json, self.latex) {
            (true, _) => Format::Json,
            (_, true) => Format::Latex,
            _ => Format::Plain,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a basis element (straight or skew) in another basis.
    Expand {
        /// Source basis: M, F, dualimm, rsdualimm, H, E, imm, rsimm.
        #[arg(long)]
        from: String,
        /// A composition such as `1,2`, or a skew shape such as `1,2,1/1,1`.
        #[arg(long)]
        index: String,
        #[arg(long)]
        to: String,
    },
    /// The skew Pieri rule for F_(s) times a skew dual immaculate function.
    SkewPieri {
        #[arg(short)]
        s: usize,
        #[arg(long)]
        shape: String,
        /// Use F_(1^s) and the row-strict dual immaculate functions.
        #[arg(long)]
        row_strict: bool,
        /// Compare against the direct product and exit 1 on a mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// The left Pieri coefficient c^gamma_{s,alpha}.
    PieriCoeff {
        #[arg(long)]
        gamma: String,
        #[arg(short)]
        s: usize,
        #[arg(long)]
        alpha: String,
    },
    /// List the standard immaculate tableaux of a (skew) shape.
    Tableaux {
        #[arg(long)]
        shape: String,
    },
    /// Run a verification sweep: duality, psi, lemmas, skew-pieri,
    /// coefficients, or all.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::ZeroPart(_) => EXIT_PARSE,
        _ => EXIT_UNSUPPORTED,
    }
}

/// Parses a basis tag. Skew indices select the skew variant later.
pub fn parse_basis(tag: &str) -> Result<Basis> {
    Ok(match tag {
        "M" => Basis::M,
        "F" => Basis::F,
        "dualimm" | "S*" => Basis::DualImmaculate,
        "rsdualimm" | "RS*" => Basis::RsDualImmaculate,
        "H" => Basis::H,
        "E" => Basis::E,
        "imm" | "I" => Basis::Immaculate,
        "rsimm" | "RI" => Basis::RsImmaculate,
        _ => return Err(Error::Parse(format!("unknown basis {tag:?}"))),
    })
}

fn source_element(basis: Basis, index: &str) -> Result<Element> {
    let shape: SkewShape = index.parse()?;
    if shape.inner().is_empty() {
        return Ok(Element::basis(basis, shape.outer().clone()));
    }
    let skew = match basis {
        Basis::DualImmaculate => Basis::SkewDualImmaculate,
        Basis::RsDualImmaculate => Basis::SkewRsDualImmaculate,
        b => {
            return Err(Error::Unsupported(format!(
                "{} has no skew elements",
                b.name()
            )))
        }
    };
    Ok(Element::skew(skew, shape))
}

fn render(e: &Element, format: Format) -> String {
    match format {
        Format::Plain => render::plain(e),
        Format::Json => render::json(e),
        Format::Latex => render::latex(e),
    }
}

/// Output of one command: text for stdout and an exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn expand(from: &str, index: &str, to: &str, format: Format) -> Result<Outcome> {
    let (source, target) = (parse_basis(from)?, parse_basis(to)?);
    let e = to_basis(&source_element(source, index)?, target)?;
    Ok(Outcome::ok(render(&e, format)))
}

pub fn skew_pieri(
    s: usize,
    shape: &str,
    row_strict: bool,
    verify: bool,
    format: Format,
) -> Result<Outcome> {
    if s == 0 {
        return Err(Error::Parse("s must be positive".into()));
    }
    let shape: SkewShape = shape.parse()?;
    let (out, oracle) = if row_strict {
        (
            pieri::skew_pieri_rs(s, &shape),
            pieri::skew_pieri_rs_oracle as fn(_, &_) -> _,
        )
    } else {
        (
            pieri::skew_pieri(s, &shape),
            pieri::skew_pieri_oracle as fn(_, &_) -> _,
        )
    };
    if !verify {
        return Ok(Outcome::ok(render(&out, format)));
    }
    let matched = canonical(&out)? == canonical(&oracle(s, &shape))?;
    let multiplicity_free = pieri::multiplicity_check(&out);
    let verdict = if matched { "MATCH" } else { "MISMATCH" };
    let stdout = match format {
        Format::Json => json!({
            "expansion": render::json_value(&out),
            "verdict": verdict,
            "multiplicity_free": multiplicity_free,
        })
        .to_string(),
        _ => {
            let mut t = render(&out, format);
            write!(t, "\n{verdict}").unwrap();
            if !multiplicity_free {
                t.push_str("\nnote: some term has coefficient other than +1 or -1");
            }
            t
        }
    };
    let code = if matched { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { stdout, code })
}

pub fn pieri_coeff(gamma: &str, s: usize, alpha: &str, format: Format) -> Result<Outcome> {
    let gamma: Composition = gamma.parse()?;
    let alpha: Composition = alpha.parse()?;
    let c = pieri::pieri_coeff(&gamma, s, &alpha)?;
    let stdout = match format {
        Format::Json => serde_json::to_value(&c)
            .expect("case serializes")
            .to_string(),
        Format::Latex => format!("c^{{{gamma}}}_{{{s},{alpha}}} = {}", c.value),
        Format::Plain => {
            let mut t = format!("{:+}", c.value);
            let case = serde_json::to_value(c.case).expect("case serializes");
            write!(t, "\ncase: {}", case.as_str().unwrap_or_default()).unwrap();
            if let (Some(j), Some(r)) = (c.j, c.r) {
                write!(t, "\nj = {j}, r = {r}").unwrap();
            }
            if let Some(v) = &c.vector {
                write!(t, "\nvector: {v}").unwrap();
            }
            t
        }
    };
    Ok(Outcome::ok(stdout))
}

fn latex_tableau(t: &Tableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .enumerate()
        .rev()
        .map(|(j, row)| {
            let skip = t.shape().inner().part(j + 1);
            let cells: Vec<String> = std::iter::repeat_n("\\none".to_string(), skip)
                .chain(row.iter().map(|v| v.to_string()))
                .collect();
            cells.join(" & ")
        })
        .collect();
    format!(
        "\\begin{{ytableau}}\n{}\n\\end{{ytableau}}",
        rows.join(" \\\\\n")
    )
}

fn set_string(d: &std::collections::BTreeSet<usize>) -> String {
    let p: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", p.join(","))
}

pub fn tableaux(shape: &str, format: Format) -> Result<Outcome> {
    let shape: SkewShape = shape.parse()?;
    let all = enumerate_sit(&shape);
    let stdout = match format {
        Format::Json => Value::Array(
            all.iter()
                .map(|t| {
                    json!({
                        "rows": t.to_json(),
                        "descents": t.descent_set().into_iter().collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
        .to_string(),
        Format::Latex => all.iter().map(latex_tableau).collect::<Vec<_>>().join("\n"),
        Format::Plain => {
            let mut t = format!(
                "{} standard immaculate tableaux of shape {shape}",
                all.len()
            );
            for x in &all {
                write!(
                    t,
                    "\n\nDes = {}\n{}",
                    set_string(&x.descent_set()),
                    x.to_string().trim_end()
                )
                .unwrap();
            }
            t
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn verify(suite: &str, max: usize, format: Format) -> Result<Outcome> {
    let suites = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>()?]
    };
    let reports: Vec<_> = suites.into_iter().flat_map(|s| s.run(max)).collect();
    let passed = reports.iter().all(|r| r.passed());
    let stdout = match format {
        Format::Json => Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "checked": r.checked,
                        "passed": r.passed(),
                        "failures": r.failures,
                    })
                })
                .collect(),
        )
        .to_string(),
        _ => {
            let mut t: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            t.push(if passed { "PASS".into() } else { "FAIL".into() });
            t.join("\n")
        }
    };
    let code = if passed { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { stdout, code })
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.format.format();
    match &cli.command {
        Command::Expand { from, index, to } => expand(from, index, to, format),
        Command::SkewPieri {
            s,
            shape,
            row_strict,
            verify,
        } => skew_pieri(*s, shape, *row_strict, *verify, format),
        Command::PieriCoeff { gamma, s, alpha } => pieri_coeff(gamma, *s, alpha, format),
        Command::Tableaux { shape } => tableaux(shape, format),
        Command::Verify { suite, max } => verify(suite, *max, format),
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_parse() {
        assert_eq!(parse_basis("dualimm").unwrap(), Basis::DualImmaculate);
        assert_eq!(exit_code(&parse_basis("Q").unwrap_err()), EXIT_PARSE);
    }

    #[test]
    fn skew_index_on_a_basis_without_skews() {
        let e = source_element(Basis::F, "2/1").unwrap_err();
        assert_eq!(exit_code(&e), EXIT_UNSUPPORTED);
    }
}

//! Command-line front end over the presentations and verification suites.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::expr::parse_element;
use crate::fib::{family_by_closed_form, nu, FamilyId};
use crate::names::combo_str;
use crate::presentation::Presentation;
use crate::report::{render_csv, render_json, render_text, table_report};
use crate::space::{CoeffRing, Field, SpaceSpec, Trunc};
use crate::verify::{self, Suite};

#[derive(Parser)]
#[command(
    name = "sympow",
    version,
    about = "Exact cohomology rings of symmetric squares of projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    match s {
        "C" | "c" => Ok(Field::C),
        "H" | "h" => Ok(Field::H),
        _ => Err(format!("expected C or H, got {s:?}")),
    }
}

fn parse_coeff(s: &str) -> std::result::Result<CoeffRing, String> {
    match s {
        "Z" | "z" => Ok(CoeffRing::Z),
        "F2" | "f2" => Ok(CoeffRing::F2),
        _ => Err(format!("expected Z or F2, got {s:?}")),
    }
}

fn parse_trunc(s: &str) -> std::result::Result<Trunc, String> {
    Trunc::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    match s {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        _ => Err(format!("expected text, json, or csv, got {s:?}")),
    }
}

#[derive(Clone, Copy)]
enum FamilyArg {
    Delta,
    Sigma,
    Nu,
    R,
}

fn parse_family(s: &str) -> std::result::Result<FamilyArg, String> {
    match s {
        "delta" => Ok(FamilyArg::Delta),
        "sigma" => Ok(FamilyArg::Sigma),
        "nu" => Ok(FamilyArg::Nu),
        "r" => Ok(FamilyArg::R),
        _ => Err(format!("expected delta, sigma, nu, or r, got {s:?}")),
    }
}

#[derive(Args)]
struct SpaceArgs {
    /// Space token: kp kpn rp rk rkn gamma gamman borel boreln mp thn sp2 sp2n grass
    #[arg(long)]
    space: String,

    /// Ground field: C or H
    #[arg(long, value_parser = parse_field)]
    field: Field,

    /// Coefficient ring: Z or F2
    #[arg(long, default_value = "Z", value_parser = parse_coeff)]
    coeff: CoeffRing,

    /// Truncation: a positive integer or inf
    #[arg(long, default_value = "inf", value_parser = parse_trunc)]
    n: Trunc,
}

impl SpaceArgs {
    fn presentation(&self) -> Result<Presentation> {
        let spec = SpaceSpec::from_cli(&self.space, self.field, self.coeff, self.n)?;
        Presentation::new(spec)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print generators, relations, and the additive basis over a degree range
    Ring {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 0)]
        deg_from: usize,
        #[arg(long)]
        deg_to: usize,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Print the additive basis table over a degree range
    Basis {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 0)]
        deg_from: usize,
        #[arg(long)]
        deg_to: usize,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Multiply two elements and print the canonical normal form
    Mul {
        #[command(flatten)]
        space: SpaceArgs,
        /// First factor, e.g. "g^3*h/2"
        a: String,
        /// Second factor; pass "1" to normalize a single element
        b: String,
    },
    /// Print the k-th member of a polynomial family
    Poly {
        /// Family: delta, sigma, nu, or r
        #[arg(long, value_parser = parse_family)]
        family: FamilyArg,
        #[arg(long)]
        k: usize,
        /// Ground field fixing d for delta and nu
        #[arg(long, default_value = "C", value_parser = parse_field)]
        field: Field,
        /// Coefficient ring for nu
        #[arg(long, default_value = "Z", value_parser = parse_coeff)]
        coeff: CoeffRing,
    },
    /// Print free and order-2 ranks per degree
    Poincare {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        max_deg: usize,
    },
    /// Run a verification suite and print one PASS/FAIL line per check
    Verify {
        /// Suite: appendix, oracle, kernels, closedforms, exactness, or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn table_output(p: &Presentation, from: usize, to: usize, format: Format) -> Result<String> {
    let report = table_report(p, from, to)?;
    match format {
        Format::Text => Ok(render_text(&report)),
        Format::Json => render_json(&report),
        Format::Csv => render_csv(&report),
    }
}

fn execute(cli: Cli) -> Result<(String, u8)> {
    match cli.cmd {
        Command::Ring {
            space,
            deg_from,
            deg_to,
            format,
        } => {
            let p = space.presentation()?;
            let mut out = String::new();
            if format == Format::Text {
                let info = p.ring_info();
                out.push_str("generators:\n");
                for (name, deg) in &info.generators {
                    out.push_str(&format!("  {name}  (degree {deg})\n"));
                }
                out.push_str("relations:\n");
                if info.relations.is_empty() {
                    out.push_str("  (none)\n");
                }
                for r in &info.relations {
                    out.push_str(&format!("  {r}\n"));
                }
            }
            out.push_str(&table_output(&p, deg_from, deg_to, format)?);
            Ok((out, 0))
        }
        Command::Basis {
            space,
            deg_from,
            deg_to,
            format,
        } => {
            let p = space.presentation()?;
            Ok((table_output(&p, deg_from, deg_to, format)?, 0))
        }
        Command::Mul { space, a, b } => {
            let p = space.presentation()?;
            let ea = parse_element(&a)?;
            let eb = parse_element(&b)?;
            let (deg, combo) = p.multiply(&ea, &eb)?;
            Ok((format!("degree {deg}: {}\n", combo_str(&combo)), 0))
        }
        Command::Poly {
            family,
            k,
            field,
            coeff,
        } => {
            let rendered = match family {
                FamilyArg::Delta => {
                    family_by_closed_form(FamilyId::Delta { d: field.d() }, k).rendered()
                }
                FamilyArg::Sigma => family_by_closed_form(FamilyId::Sigma, k).rendered(),
                FamilyArg::R => family_by_closed_form(FamilyId::R, k).rendered(),
                FamilyArg::Nu => nu(k, field.d(), coeff).rendered(),
            };
            Ok((format!("{rendered}\n"), 0))
        }
        Command::Poincare { space, max_deg } => {
            let p = space.presentation()?;
            let mut out = format!(
                "space: {}  field: {}  d: {}  coeff: {}  n: {}\n",
                p.spec.display_name(),
                match p.spec.field {
                    Field::C => "C",
                    Field::H => "H",
                },
                p.spec.d(),
                match p.spec.coeff {
                    CoeffRing::Z => "Z",
                    CoeffRing::F2 => "F2",
                },
                p.spec.trunc
            );
            out.push_str("degree  free  torsion2\n");
            for k in 0..=max_deg {
                let (f, t) = p.poincare(k)?;
                out.push_str(&format!("{k:<7} {f:<5} {t}\n"));
            }
            Ok((out, 0))
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(&suite)?;
            let report = verify::run(suite);
            let code = if report.all_passed() { 0 } else { 1 };
            Ok((report.render(), code))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CheckFailed(_) | Error::Io(_) => 1,
        Error::BadArg(_) | Error::Parse { .. } | Error::Unsupported { .. } | Error::NotInRing(_) => {
            2
        }
    }
}

/// Entry point for the binary: parses argv, runs the command, and maps
/// errors onto the documented exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<(String, u8)> {
        let cli = Cli::try_parse_from(args).expect("argv should parse");
        execute(cli)
    }

    #[test]
    fn mul_normalizes_with_unit_factor() {
        let (text, code) = run(&[
            "sympow", "mul", "--space", "sp2n", "--n", "3", "--field", "C", "--coeff", "Z",
            "g^3*h/2", "1",
        ])
        .unwrap();
        assert_eq!(code, 0);
        assert_eq!(text, "degree 10: 3*(g*h^2/4)\n");
    }

    #[test]
    fn poly_r_zero_is_two() {
        let (text, code) = run(&["sympow", "poly", "--family", "r", "--k", "0"]).unwrap();
        assert_eq!(code, 0);
        assert_eq!(text, "2\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        let err = run(&[
            "sympow", "basis", "--space", "nowhere", "--field", "C", "--deg-to", "4",
        ])
        .unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn element_errors_carry_positions() {
        let err = run(&[
            "sympow", "mul", "--space", "sp2", "--field", "C", "g^", "1",
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}

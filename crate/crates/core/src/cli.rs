//! Command-line front end. [`run`] returns the rendered output and the exit
//! code: 0 on success, 1 on a failed verification, 2 on a usage or parse error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::curve::{enumerate, AElem, EnumMode};
use crate::drinfeld::rho_three_ways;
use crate::ekpoly::{ek_recursive, EkChain};
use crate::error::Error;
use crate::series::Symbols;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MAX_TABLE_K: usize = 14;
pub const MAX_RHO_DEG: usize = 12;
pub const MAX_EK_K: usize = 14;
pub const MAX_LIST_K: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "drinfeld", version, about = "Exact arithmetic for the rank-one Drinfeld module over F2[x,y]/(y^2+y+x^3+x+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rows (k, d_k, ell_k, D_k), cross-checked against the D_k formulas.
    Table {
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients of rho_a, computed three ways.
    Rho {
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients B_(k,i) of e_k(w) and the value D_k.
    Ek {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Elements of A of degree below k, or exactly k.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Mode::Below)]
        mode: Mode,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Below,
    Exact,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            (e.render().to_string(), code)
        }
    }
}

pub fn execute(command: &Command) -> (String, i32) {
    let result = match command {
        Command::Table { max_k, format } => table(*max_k, *format),
        Command::Rho { element, format } => rho(element, *format),
        Command::Ek { degree, format } => ek(*degree, *format),
        Command::Enumerate { degree, mode } => list(*degree, *mode),
        Command::Verify { suite, max_k } => return verify(*suite, *max_k),
    };
    match result {
        Ok(out) => (out, EXIT_OK),
        Err(e) => (format!("error: {e}\n"), exit_code(&e)),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) | Error::Inconsistent(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn check_range(what: &'static str, got: usize, min: usize, max: usize) -> Result<(), Error> {
    if got < min {
        return Err(Error::Domain(format!("{what} must be at least {min}, got {got}")));
    }
    if got > max {
        return Err(Error::Budget { what, got, max });
    }
    Ok(())
}

fn table(max_k: usize, format: Format) -> Result<String, Error> {
    check_range("max-k", max_k, 2, MAX_TABLE_K)?;
    let rows = crate::ekpoly::main_theorem_table(max_k)?;
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in &rows {
                writeln!(out, "k = {}", r.k).unwrap();
                writeln!(out, "  d   = {}", r.d).unwrap();
                writeln!(out, "  ell = {}", r.ell).unwrap();
                writeln!(out, "  D   = {}", r.big_d).unwrap();
            }
            writeln!(out, "main theorem check: OK").unwrap();
        }
        Format::Csv => {
            writeln!(out, "k,d,ell,D").unwrap();
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.k, r.d, r.ell, r.big_d).unwrap();
            }
        }
        Format::Json => {
            for r in &rows {
                writeln!(
                    out,
                    "{{\"k\":{},\"d\":{},\"ell\":{},\"D\":{},\"check\":\"OK\"}}",
                    r.k,
                    json_str(&r.d.to_string()),
                    json_str(&r.ell.to_string()),
                    json_str(&r.big_d.to_string())
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

fn rho(element: &str, format: Format) -> Result<String, Error> {
    let a: AElem = element.parse()?;
    let deg = a.deg();
    if let Some(d) = deg {
        check_range("element degree", d, 0, MAX_RHO_DEG)?;
    }
    let symbols = Symbols::new(deg.unwrap_or(0).max(2))?;
    let coeffs = rho_three_ways(&a, &symbols)?;
    let shown = deg.map_or(0, |d| d + 1);
    let mut out = String::new();
    match format {
        Format::Text => {
            match deg {
                Some(d) => writeln!(out, "deg({a}) = {d}").unwrap(),
                None => writeln!(out, "deg({a}) = -inf").unwrap(),
            }
            for (k, c) in coeffs.iter().take(shown).enumerate() {
                writeln!(out, "rho_{k} = {c}").unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "k,coeff").unwrap();
            for (k, c) in coeffs.iter().take(shown).enumerate() {
                writeln!(out, "{k},{c}").unwrap();
            }
        }
        Format::Json => {
            for (k, c) in coeffs.iter().take(shown).enumerate() {
                writeln!(out, "{{\"k\":{k},\"coeff\":{}}}", json_str(&c.to_string())).unwrap();
            }
        }
    }
    Ok(out)
}

fn ek(k: usize, format: Format) -> Result<String, Error> {
    check_range("degree", k, 1, MAX_EK_K)?;
    let e = ek_recursive(k)?;
    let big_d = if k >= 2 { Some(EkChain::new(k)?.big_d(k).clone()) } else { None };
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "e_{k}(w) = {e}").unwrap();
            for (i, c) in e.coeffs().iter().enumerate() {
                writeln!(out, "B_({k},{i}) = {c}").unwrap();
            }
            if let Some(d) = &big_d {
                writeln!(out, "D_{k} = {d}").unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "i,B").unwrap();
            for (i, c) in e.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}").unwrap();
            }
        }
        Format::Json => {
            for (i, c) in e.coeffs().iter().enumerate() {
                writeln!(out, "{{\"i\":{i},\"B\":{}}}", json_str(&c.to_string())).unwrap();
            }
            if let Some(d) = &big_d {
                writeln!(out, "{{\"D\":{}}}", json_str(&d.to_string())).unwrap();
            }
        }
    }
    Ok(out)
}

fn list(k: usize, mode: Mode) -> Result<String, Error> {
    check_range("degree", k, 0, MAX_LIST_K)?;
    let mode = match mode {
        Mode::Below => EnumMode::Below,
        Mode::Exact => EnumMode::Exact,
    };
    let mut out = String::new();
    for a in enumerate(k, mode)? {
        writeln!(out, "{a}").unwrap();
    }
    Ok(out)
}

fn verify(suite: Suite, max_k: usize) -> (String, i32) {
    match run_suite(suite, max_k) {
        Ok(report) => {
            let mut out = report.lines.join("\n");
            out.push('\n');
            let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
            (out, code)
        }
        Err(e) => (format!("error: {e}\n"), exit_code(&e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (String, i32) {
        run(std::iter::once("drinfeld").chain(args.iter().copied()))
    }

    #[test]
    fn table_formats() {
        let (out, code) = cli(&["table", "--max-k", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "k,d,ell,D");
        assert_eq!(lines[1], "2,x^2+x,(x^2+x)/(x^2+x+1),x^2+x");
        assert!(lines[2].ends_with(",x^6+x^5+x^4+x^3+x^2+x+1"));

        let (out, code) = cli(&["table", "--max-k", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["D"], "x^2+x");
        assert_eq!(v["ell"], "(x^2+x)/(x^2+x+1)");

        assert_eq!(cli(&["table", "--max-k", "15"]).1, 2);
        assert_eq!(cli(&["table", "--max-k", "1"]).1, 2);
    }

    #[test]
    fn rho_command() {
        let (out, code) = cli(&["rho", "--element", "x"]);
        assert_eq!(code, 0);
        assert_eq!(out, "deg(x) = 2\nrho_0 = x\nrho_1 = x^2+x\nrho_2 = 1\n");
        let (out, _) = cli(&["rho", "--element", "x+1", "--format", "csv"]);
        assert_eq!(out, "k,coeff\n0,x+1\n1,x^2+x\n2,1\n");
        let (out, _) = cli(&["rho", "--element", "y"]);
        assert!(out.contains("rho_2 = x^4+x^2+x\nrho_3 = 1"));
        assert_eq!(cli(&["rho", "--element", "x+"]).1, 2);
        assert_eq!(cli(&["rho", "--element", "1/x"]).1, 2);
    }

    #[test]
    fn other_commands() {
        let (out, code) = cli(&["ek", "--degree", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("B_(3,1) = x^2+x+1"));
        assert!(out.contains("D_3 = x^6+x^5+x^4+x^3+x^2+x+1"));
        let (out, _) = cli(&["enumerate", "--degree", "3", "--mode", "exact"]);
        assert_eq!(out.lines().count(), 4);
        let (out, _) = cli(&["enumerate", "--degree", "1"]);
        assert_eq!(out, "0\n");
        let (out, code) = cli(&["verify", "--suite", "main", "--max-k", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("k = 4: d_k OK / ell_k OK"));
        assert_eq!(cli(&["verify", "--suite", "bogus"]).1, 2);
        assert_eq!(cli(&["frobnicate"]).1, 2);
        assert_eq!(cli(&["--help"]).1, 0);
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a theorem check or census comparison failed,
//! 2 usage or parse error, 3 I/O error.

mod census;
mod familyfile;

pub use census::{census, CensusRow, CensusTable};
pub use familyfile::{header, read_family, read_header, write_family, FamilyFileError};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::charverify::{confirm_search_q2, forward_generate, reconstruct, verify_theorem, color_points};
use crate::gf::{supported_orders, FieldSpec, DEFAULT_MAX_ORDER};
use crate::linalg::Matrix;
use crate::pg3::Geometry;
use crate::quadric::{point_set, QuadraticForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "conicplanes", version, about = "Generate and verify plane families of PG(3,q)")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the secant planes of the standard hyperbolic quadric.
    Gen {
        #[arg(long, value_parser = parse_q)]
        q: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every check on a family file and emit a certificate.
    Verify {
        #[arg(long, value_parser = parse_q)]
        q: u32,
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print measured incidence counts next to their formulas.
    Stats {
        #[arg(long, value_parser = parse_q)]
        q: u32,
    },
    /// Scan every plane subset of PG(3,2).
    Search {
        #[arg(long, value_parser = parse_q)]
        q: u32,
    },
    /// Census, forward verification and reconstruction for every order up to a bound.
    Selftest {
        #[arg(long, value_parser = parse_q)]
        max_q: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Accepts `9` or `3^2`, within the default order bound.
fn parse_q(text: &str) -> Result<u32, String> {
    let (p, e) = FieldSpec::parse_order(text).map_err(|e| e.to_string())?;
    let field = FieldSpec::with_bound(p, e, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    Ok(field.q())
}

/// Failure that ends a command with a given exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Exit { code: EXIT_USAGE, message: message.into() }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Exit {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

fn geometry(q: u32) -> Result<Geometry, Exit> {
    Geometry::of_order(q).map_err(|e| Exit::usage(e.to_string()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version also arrive here
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut text = String::new();
    let result = execute(&config, &mut text);
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return EXIT_IO;
    }
    match result {
        Ok(code) => code,
        Err(exit) => {
            let _ = writeln!(err, "error: {}", exit.message);
            exit.code
        }
    }
}

fn execute(config: &RunConfig, out: &mut String) -> Result<i32, Exit> {
    match &config.command {
        Command::Gen { q, out: path } => cmd_gen(*q, path, out),
        Command::Verify { q, input, report, format } => cmd_verify(*q, input, report.as_deref(), *format, out),
        Command::Stats { q } => cmd_stats(*q, out),
        Command::Search { q } => cmd_search(*q, out),
        Command::Selftest { max_q } => cmd_selftest(*max_q, out),
    }
}

fn cmd_gen(q: u32, path: &Path, out: &mut String) -> Result<i32, Exit> {
    let geom = geometry(q)?;
    let family = forward_generate(&geom, &QuadraticForm::standard_hyperbolic(geom.field()))
        .expect("the standard form is hyperbolic");
    std::fs::write(path, write_family(&geom, &family)).map_err(|e| Exit::io(path, e))?;
    writeln!(out, "wrote {} planes to {}", family.len(), path.display()).unwrap();
    Ok(EXIT_OK)
}

fn cmd_verify(q: u32, input: &Path, report: Option<&Path>, format: Format, out: &mut String) -> Result<i32, Exit> {
    let geom = geometry(q)?;
    let text = std::fs::read_to_string(input).map_err(|e| Exit::io(input, e))?;
    let family = read_family(&geom, &text).map_err(|e| Exit::usage(format!("{}: {e}", input.display())))?;
    let cert = verify_theorem(&geom, &family);
    let rendered = match format {
        Format::Json => cert.to_json(),
        Format::Text => cert.to_text(),
    };
    match report {
        Some(path) => {
            std::fs::write(path, &rendered).map_err(|e| Exit::io(path, e))?;
            write!(out, "verdict {}", cert.verdict).unwrap();
            if let Some(f) = cert.first_failure() {
                write!(out, " at {}", f.name).unwrap();
                if let Some(w) = f.witness {
                    write!(out, " witness=[{w}]").unwrap();
                }
            }
            out.push('\n');
        }
        None => out.push_str(&rendered),
    }
    Ok(if cert.passed() { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_stats(q: u32, out: &mut String) -> Result<i32, Exit> {
    let geom = geometry(q)?;
    let rows = census(&geom);
    write!(out, "{}", CensusTable { q: geom.field().to_string(), rows: &rows }).unwrap();
    Ok(if rows.iter().all(|r| r.ok) { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_search(q: u32, out: &mut String) -> Result<i32, Exit> {
    if q != 2 {
        return Err(Exit::usage(format!("search is only feasible for q=2, not q={q}")));
    }
    let c = confirm_search_q2();
    writeln!(out, "subsets scanned          {}", c.scanned).unwrap();
    writeln!(out, "passing P1               {}", c.p1_survivors).unwrap();
    writeln!(out, "passing P1 and P2        {}", c.survivors).unwrap();
    writeln!(out, "hyperbolic forms         {}", c.hyperbolic_forms).unwrap();
    writeln!(out, "survivors with 6 planes  {}", c.survivors_of_expected_size).unwrap();
    writeln!(out, "survivor set matches     {}", c.sets_equal).unwrap();
    writeln!(out, "reconstructions          {}", c.round_trips).unwrap();
    let ok = c.holds();
    writeln!(out, "{}", if ok { "confirmed" } else { "MISMATCH" }).unwrap();
    Ok(if ok { EXIT_OK } else { EXIT_CHECK })
}

/// Deterministic invertible 4x4 matrices over `field`, as rank arrays.
pub fn invertible_substitutions(field: &FieldSpec, count: usize, seed: u64) -> Vec<[[u16; 4]; 4]> {
    let mut rng = StdRng::seed_from_u64(seed);
    let q = field.q() as u16;
    let mut found = Vec::with_capacity(count);
    while found.len() < count {
        let m: [[u16; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(0..q)));
        let rows: Vec<Vec<u16>> = m.iter().map(|r| r.to_vec()).collect();
        if Matrix::from_rows(4, &rows).rank(field) == 4 {
            found.push(m);
        }
    }
    found
}

/// Generates the family of `form`, verifies it and reconstructs; true when
/// the certificate passes and the rebuilt zero set equals the original.
pub fn round_trip(geom: &Geometry, form: &QuadraticForm) -> bool {
    let Ok(family) = forward_generate(geom, form) else {
        return false;
    };
    if !verify_theorem(geom, &family).passed() {
        return false;
    }
    reconstruct(geom, &color_points(geom, &family))
        .is_ok_and(|r| point_set(geom, &r.form) == point_set(geom, form))
}

fn cmd_selftest(max_q: u32, out: &mut String) -> Result<i32, Exit> {
    let mut ok = true;
    for q in supported_orders(max_q) {
        let geom = geometry(q)?;
        let census_ok = census(&geom).iter().all(|r| r.ok);
        let standard = QuadraticForm::standard_hyperbolic(geom.field());
        let forward_ok = round_trip(&geom, &standard);
        let substituted = invertible_substitutions(geom.field(), 5, q as u64)
            .iter()
            .filter(|m| round_trip(&geom, &standard.substitute(geom.field(), m)))
            .count();
        let line_ok = census_ok && forward_ok && substituted == 5;
        ok &= line_ok;
        writeln!(
            out,
            "q={:<4} census {:<4} forward {:<4} substitutions {substituted}/5  {}",
            geom.field().to_string(),
            if census_ok { "ok" } else { "FAIL" },
            if forward_ok { "ok" } else { "FAIL" },
            if line_ok { "PASS" } else { "FAIL" },
        )
        .unwrap();
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK })
}

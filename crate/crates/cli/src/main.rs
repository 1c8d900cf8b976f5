use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use raycalc::cocycle::{classify_with, default_degree, Admissibility, InfExponent, InfExponentJson};
use raycalc::lie::{catalog, Catalog, LieAlgebraSpec};
use raycalc::realization::family_theta;
use raycalc::report::{
    parse_theta, to_json_string, CheckReport, ClassifyReport, GalileanReport, MilneTableReport,
    RealizeReport,
};
use raycalc::{Error, Rational};

const EXIT_INPUT: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "raycalc", version, about = "Exponents of projective representations on Lie algebras and Milne groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Emit JSON (default).
    #[arg(long, conflicts_with = "text", global = true)]
    json: bool,
    /// Emit a plain text table.
    #[arg(long, global = true)]
    text: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify infinitesimal exponents up to coboundaries.
    Classify {
        /// Algebra JSON file or `catalog:<name>` (galilean, milne:M, abelian:N, heisenberg).
        #[arg(long)]
        algebra: String,
        /// Polynomial degree bound in t.
        #[arg(long, alias = "degree-bound")]
        degree: Option<usize>,
        /// generatorwise or symmetrized.
        #[arg(long, default_value = "generatorwise")]
        admissibility: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check the generalized Jacobi identity for a given exponent.
    Check {
        #[arg(long)]
        algebra: String,
        /// Exponent JSON file.
        #[arg(long)]
        xi: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Realizability of Milne classes by phase laws.
    Realize {
        #[arg(long)]
        m: usize,
        /// Phase law over v{n}_{i}, b, x1..x3, t.
        #[arg(long, conflicts_with = "family", allow_hyphen_values = true)]
        theta: Option<String>,
        /// Use the family theta = -sum gamma_k d^kA/dt^k . x.
        #[arg(long)]
        family: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Recurrent integration table P^(l,n)(t).
    MilneTable {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The standard Galilean phase law and its mass.
    GalileanDemo {
        #[arg(long, default_value = "1")]
        mass: String,
        #[command(flatten)]
        out: Output,
    },
}

fn load_algebra(src: &str) -> Result<(String, LieAlgebraSpec), Error> {
    if let Some(name) = src.strip_prefix("catalog:") {
        let c: Catalog = name.parse()?;
        return Ok((c.to_string(), catalog(c)?));
    }
    let text = fs::read_to_string(src)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {src}: {e}")))?;
    Ok((src.to_string(), LieAlgebraSpec::parse_json(&text)?))
}

fn load_xi(path: &PathBuf, dim: usize) -> Result<InfExponent, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let j: InfExponentJson = serde_json::from_str(&text).map_err(|e| Error::Schema {
        field: "xi".into(),
        msg: e.to_string(),
    })?;
    let xi = InfExponent::from_json(&j)?;
    if xi.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: xi.dim(),
        });
    }
    Ok(xi)
}

fn emit(out: &Output, json: String, text: String) -> Result<(), Error> {
    let body = if out.text && !out.json { text } else { json };
    match &out.output {
        Some(p) => fs::write(p, body)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Classify {
            algebra,
            degree,
            admissibility,
            out,
        } => {
            let (label, spec) = load_algebra(&algebra)?;
            spec.require_valid()?;
            let mode: Admissibility = admissibility.parse()?;
            let d = degree.unwrap_or_else(|| default_degree(&spec));
            let c = classify_with(&spec, d, mode)?;
            let r = ClassifyReport::build(&label, &spec, mode, &c)?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            emit(&out, to_json_string(&r), r.to_text())?;
            Ok(if r.inconclusive { EXIT_INCONCLUSIVE } else { 0 })
        }
        Command::Check { algebra, xi, out } => {
            let (label, spec) = load_algebra(&algebra)?;
            let x = load_xi(&xi, spec.dim())?;
            let r = CheckReport::build(&label, &spec, &x)?;
            emit(&out, to_json_string(&r), r.to_text())?;
            Ok(if r.pass { 0 } else { EXIT_CHECK_FAILED })
        }
        Command::Realize {
            m,
            theta,
            family,
            out,
        } => {
            let fam = if family { Some(family_theta(m)?) } else { None };
            let th = match theta {
                Some(s) => Some(parse_theta(m, &s)?),
                None => None,
            };
            let r = RealizeReport::build(m, fam.as_ref(), th.as_ref())?;
            emit(&out, to_json_string(&r), r.to_text())?;
            Ok(0)
        }
        Command::MilneTable { m, out } => {
            let r = MilneTableReport::build(m)?;
            emit(&out, to_json_string(&r), r.to_text())?;
            Ok(0)
        }
        Command::GalileanDemo { mass, out } => {
            let mass: Rational = mass
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad mass {mass:?}")))?;
            let r = GalileanReport::build(&mass)?;
            emit(&out, to_json_string(&r), r.to_text())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // usage errors share exit code 1 with other input errors; 2 means inconclusive
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

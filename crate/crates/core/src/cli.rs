//! The `semistar` command line.
//!
//! Exit codes: 0 success, 1 failed verification, 2 guard refusal, 3 I/O
//! error, 4 malformed input.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extvec::Spectrum;
use crate::format::{
    family_from_str, family_to_json, star_from_str, star_to_json, vector_from_str, FamilyRecord,
};
use crate::moore::{count_moore, enumerate_moore, MooreFamily, KNOWN_COUNTS};
use crate::poset::{to_dot, Poset, POSET_GUARD};
use crate::semistar::{d_of_overring, star_join, star_meet, v_of, Star};
use crate::subset::Subset;
use crate::verify::{run_suite, Suite};
use crate::zadapter::{module_member, parse_rational, vector_of_module, FracIdealSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_MALFORMED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "semistar", version, about = "Semistar operations over a finite spectrum")]
pub struct Cli {
    /// Worker threads for parallel enumeration (output does not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stream every Moore family on n points, one record per line.
    Enumerate {
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lift the n <= 5 guard.
        #[arg(long)]
        force: bool,
    },
    /// Number of semistar operations for an n-point spectrum.
    Count {
        n: usize,
        #[arg(long)]
        force: bool,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Star algebra on families, stars and vectors.
    Star {
        #[arg(value_enum)]
        op: StarOp,
        /// Family record, inline or a file path (repeatable).
        #[arg(long)]
        family: Vec<String>,
        /// Star record, inline or a file path (repeatable).
        #[arg(long)]
        star: Vec<String>,
        /// Vector, `(a,b,..)` or a record, inline or a file path.
        #[arg(long)]
        module: Option<String>,
        /// Spectrum size for `d-of` without `--primes`.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated prime labels for `d-of`.
        #[arg(long)]
        primes: Option<String>,
        /// Comma-separated indices, e.g. `0,2`; empty for the empty set.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Valuation vectors of fractional ideals of Z localized at finitely many primes.
    Adapter {
        #[arg(long)]
        primes: String,
        #[arg(long)]
        gens: String,
        /// Test membership of this rational instead of printing the vector.
        #[arg(long)]
        member: Option<String>,
    },
    /// Hasse diagram of the star lattice for n points, or of given stars.
    Hasse {
        n: Option<usize>,
        #[arg(long)]
        star: Vec<String>,
        #[arg(long, value_enum, default_value_t = HasseFormat::Dot)]
        format: HasseFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StarOp {
    Apply,
    Meet,
    Join,
    Classify,
    VOf,
    DOf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HasseFormat {
    Dot,
    Json,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Refused(_) => EXIT_REFUSED,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_MALFORMED,
    }
}

/// Parse `args` (program name first) and run, writing to `out` and `err`.
pub fn run_with<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_MALFORMED
                }
            };
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, out)),
            Err(e) => Err(Error::Malformed(e.to_string())),
        },
        None => dispatch(cli.command, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let mut out = BufWriter::new(io::stdout());
    let mut err = io::stderr();
    let code = run_with(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}

fn dispatch(command: Command, out: &mut (dyn Write + Send)) -> Result<i32> {
    match command {
        Command::Enumerate {
            n,
            count_only,
            out: path,
            force,
        } => cmd_enumerate(n, count_only, path, force, out),
        Command::Count { n, force } => {
            writeln!(out, "{}", count_moore(n, force)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, n, max_n } => cmd_verify(suite, max_n.or(n), out),
        Command::Star {
            op,
            family,
            star,
            module,
            n,
            primes,
            subset,
        } => cmd_star(op, &family, &star, module.as_deref(), n, primes, subset, out),
        Command::Adapter {
            primes,
            gens,
            member,
        } => cmd_adapter(&primes, &gens, member.as_deref(), out),
        Command::Hasse { n, star, format } => cmd_hasse(n, &star, format, out),
    }
}

fn cmd_enumerate(
    n: usize,
    count_only: bool,
    path: Option<PathBuf>,
    force: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    if count_only {
        let count = count_moore(n, force)?;
        match path {
            Some(p) => fs::write(p, format!("{count}\n"))?,
            None => writeln!(out, "{count}")?,
        }
        return Ok(EXIT_OK);
    }
    let families = enumerate_moore(n, force)?;
    let mut file;
    let sink: &mut dyn Write = match path {
        Some(p) => {
            file = BufWriter::new(fs::File::create(p)?);
            &mut file
        }
        None => out,
    };
    for family in families {
        writeln!(sink, "{}", family_to_json(&family))?;
    }
    sink.flush()?;
    Ok(EXIT_OK)
}

fn cmd_verify(suite: Suite, n: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let checks = run_suite(suite, n)?;
    let passed = checks.iter().filter(|c| c.passed).count();
    for check in &checks {
        writeln!(out, "{check}")?;
    }
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    Ok(if passed == checks.len() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

/// Inline text when it looks like a record or tuple, otherwise a file path.
fn inline_or_file(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('(') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))
    }
}

fn load_stars(families: &[String], stars: &[String]) -> Result<Vec<Star>> {
    let mut out = Vec::new();
    for f in families {
        out.push(Star::indexed(family_from_str(&inline_or_file(f)?)?)?);
    }
    for s in stars {
        out.push(star_from_str(&inline_or_file(s)?)?);
    }
    Ok(out)
}

fn is_indexed(s: &Spectrum) -> bool {
    Spectrum::indexed(s.len()).is_ok_and(|d| &d == s)
}

/// Family record for stars over the default labels, star record otherwise.
fn star_text(s: &Star) -> String {
    if is_indexed(s.spectrum()) {
        family_to_json(s.family())
    } else {
        star_to_json(s)
    }
}

fn one_star(stars: Vec<Star>, op: &str) -> Result<Star> {
    let mut it = stars.into_iter();
    match (it.next(), it.next()) {
        (Some(s), None) => Ok(s),
        _ => Err(Error::Malformed(format!("{op} takes exactly one star"))),
    }
}

fn parse_subset(text: &str, n: usize) -> Result<Subset> {
    let mut indices = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok
            .parse()
            .map_err(|_| Error::Malformed(format!("bad index {tok:?}")))?;
        if i >= n {
            return Err(Error::Malformed(format!("index {i} outside {n} primes")));
        }
        indices.push(i);
    }
    Ok(Subset::from_indices(indices))
}

#[allow(clippy::too_many_arguments)]
fn cmd_star(
    op: StarOp,
    families: &[String],
    stars: &[String],
    module: Option<&str>,
    n: Option<usize>,
    primes: Option<String>,
    subset: Option<String>,
    out: &mut dyn Write,
) -> Result<i32> {
    let need_module = || {
        module
            .map(inline_or_file)
            .transpose()?
            .ok_or_else(|| Error::Malformed("--module is required".into()))
    };
    match op {
        StarOp::Apply => {
            let s = one_star(load_stars(families, stars)?, "apply")?;
            let f = vector_from_str(&need_module()?, Some(s.spectrum()))?;
            writeln!(out, "{}", s.apply(&f)?)?;
        }
        StarOp::Meet | StarOp::Join => {
            let ss = load_stars(families, stars)?;
            let r = if op == StarOp::Meet {
                star_meet(&ss)?
            } else {
                star_join(&ss)?
            };
            writeln!(out, "{}", star_text(&r))?;
        }
        StarOp::Classify => {
            let s = one_star(load_stars(families, stars)?, "classify")?;
            let labels: Vec<String> = s.classify().iter().map(ToString::to_string).collect();
            writeln!(out, "{}", labels.join(", "))?;
        }
        StarOp::VOf => {
            let j = vector_from_str(&need_module()?, None)?;
            writeln!(out, "{}", star_text(&v_of(&j)?))?;
        }
        StarOp::DOf => {
            let spectrum = match (primes, n) {
                (Some(p), _) => Spectrum::new(
                    p.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from),
                )?,
                (None, Some(n)) => Spectrum::indexed(n)?,
                (None, None) => return Err(Error::Malformed("d-of needs --n or --primes".into())),
            };
            let x = parse_subset(subset.as_deref().unwrap_or(""), spectrum.len())?;
            writeln!(out, "{}", star_text(&d_of_overring(&spectrum, x)?))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_adapter(primes: &str, gens: &str, member: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let spec = FracIdealSpec::parse(primes, gens)?;
    let f = vector_of_module(&spec)?;
    match member {
        Some(r) => writeln!(out, "{}", module_member(&f, &parse_rational(r)?)?)?,
        None => writeln!(out, "{f}")?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct HasseJson {
    nodes: Vec<Vec<Vec<usize>>>,
    edges: Vec<(usize, usize)>,
}

fn member_lists(f: &MooreFamily) -> Vec<Vec<usize>> {
    FamilyRecord::from(f).members
}

fn cmd_hasse(
    n: Option<usize>,
    star_args: &[String],
    format: HasseFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let stars = match (n, star_args.is_empty()) {
        (Some(n), true) => {
            if let Some(&count) = KNOWN_COUNTS.get(n.wrapping_sub(1)) {
                if count > POSET_GUARD as u64 {
                    return Err(Error::Refused(format!(
                        "the star lattice for n={n} has {count} elements, more than {POSET_GUARD}"
                    )));
                }
            }
            let spectrum = Spectrum::indexed(n)?;
            enumerate_moore(n, false)?
                .map(|f| Star::from_moore(spectrum.clone(), f))
                .collect::<Result<Vec<_>>>()?
        }
        (None, false) => load_stars(&[], star_args)?,
        _ => {
            return Err(Error::Malformed(
                "hasse takes either n or --star files".into(),
            ))
        }
    };
    if stars.len() > POSET_GUARD {
        return Err(Error::Refused(format!(
            "{} stars exceed the diagram limit of {POSET_GUARD}",
            stars.len()
        )));
    }
    if let Some(first) = stars.first() {
        for s in &stars[1..] {
            first.spectrum().check(s.spectrum())?;
        }
    }
    let edges = Poset::from_elements(&stars, |a, b| a.le(b)).covers();
    match format {
        HasseFormat::Dot => {
            let labels: Vec<String> = stars
                .iter()
                .map(|s| serde_json::to_string(&member_lists(s.family())).expect("lists serialize"))
                .collect();
            out.write_all(to_dot("stars", &labels, &edges).as_bytes())?;
        }
        HasseFormat::Json => {
            let record = HasseJson {
                nodes: stars.iter().map(|s| member_lists(s.family())).collect(),
                edges,
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("diagram serializes"))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            std::iter::once("semistar").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_and_guard() {
        assert_eq!(run(&["count", "2"]), (0, "7\n".into(), String::new()));
        assert_eq!(run(&["count", "6"]).0, EXIT_REFUSED);
    }

    #[test]
    fn bad_usage_is_malformed() {
        assert_eq!(run(&["count"]).0, EXIT_MALFORMED);
        assert_eq!(run(&["frobnicate"]).0, EXIT_MALFORMED);
        assert_eq!(run(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(parse_subset("0,2", 3).unwrap(), Subset::from_indices([0, 2]));
        assert_eq!(parse_subset("", 3).unwrap(), Subset::EMPTY);
        assert!(parse_subset("3", 3).is_err());
        assert!(parse_subset("x", 3).is_err());
    }
}

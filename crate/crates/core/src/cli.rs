//! Command-line front end. `run` parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code: 0 on
//! success, 1 on a domain error, 2 on a usage error.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::actions::{
    builtin_spec, free_quotient_genus, realizable_boundary_count, transposition_as_two_involutions,
    z3_fixed_point_profiles,
};
use crate::braids::{braid_permutation, braid_to_genus2_word, BraidWord};
use crate::error::{Error, Result};
use crate::homrep::{HomologyRep, RelationCheck};
use crate::intlinalg::{cokernel, smith_normal_form, IntMatrix};
use crate::presentations::{abelianize, gamma_0r_presentation, Presentation};
use crate::surfaces::CurveSystem;
use crate::theorem::{cross_check, torsion_generation_verdict};
use crate::words::parse_word;

#[derive(Parser, Debug)]
#[command(
    name = "mcg-torsion",
    version,
    about = "Exact computations with mapping class groups of surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WordInput {
    /// Curve system: torus, torus-arc, chain:g=G or planar:r=R.
    #[arg(long)]
    system: String,
    /// A twist word such as "C1 C2^-1 C3".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    word: Option<String>,
    /// File with one word per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the homology matrix of a word.
    Eval(WordInput),
    /// Order of a word on homology.
    Order {
        #[command(flatten)]
        input: WordInput,
        /// Treat the word as a known periodic mapping class.
        #[arg(long)]
        assert_periodic: bool,
    },
    /// Compare two words on homology.
    Relcheck {
        #[arg(long)]
        system: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Abelianize a presentation file or a built-in presentation.
    Abelianize {
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<PathBuf>,
        /// gamma0r:r=R
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Smith normal form of an integer matrix file.
    Snf {
        file: PathBuf,
        /// Also print the unimodular U and V with U M V = D.
        #[arg(long)]
        transforms: bool,
    },
    /// Can r boundary components be cut out as a union of orbits?
    Admissible {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        r: u64,
    },
    /// Admissibility over an inclusive range such as 0..30.
    Census {
        #[arg(long)]
        spec: String,
        #[arg(long, value_parser = parse_range)]
        r: (u64, u64),
    },
    /// Quotient genus of a free cyclic action.
    FreeQuotient {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b: u32,
    },
    /// Fixed-point profiles of order-3 symmetries.
    Z3Profiles {
        #[arg(long)]
        g: u32,
    },
    /// Write (i j) as a product of two involutions.
    DecomposeTransposition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Permutation image of a braid word.
    BraidPerm {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
    },
    /// Lift a six-strand braid word to a genus-2 twist word.
    BraidLift {
        #[arg(long)]
        word: String,
    },
    /// Torsion-generation verdict for one surface or a grid.
    Theorem {
        #[arg(long, requires = "r", conflicts_with = "grid")]
        g: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        /// gmax,rmax
        #[arg(long, value_parser = parse_grid, required_unless_present = "g")]
        grid: Option<(u32, u32)>,
        /// Run the cross-check on every grid cell.
        #[arg(long, requires = "grid")]
        check: bool,
    },
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

fn parse_grid(s: &str) -> std::result::Result<(u32, u32), String> {
    let (g, r) = s
        .split_once(',')
        .ok_or_else(|| format!("expected GMAX,RMAX, got `{s}`"))?;
    let g = g
        .trim()
        .parse()
        .map_err(|_| format!("bad genus bound `{g}`"))?;
    let r = r
        .trim()
        .parse()
        .map_err(|_| format!("bad boundary bound `{r}`"))?;
    Ok((g, r))
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::invalid(format!("I/O error: {e}"))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn words_of(input: &WordInput) -> Result<(Arc<CurveSystem>, Vec<String>)> {
    let system = Arc::new(CurveSystem::builtin(&input.system)?);
    let words = match (&input.word, &input.file) {
        (Some(w), _) => vec![w.clone()],
        (None, Some(path)) => read(path)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect(),
        (None, None) => unreachable!("clap requires one of --word and --file"),
    };
    Ok((system, words))
}

/// Returns `Ok(false)` when a check ran but failed.
fn execute(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Eval(input) => {
            let (system, words) = words_of(&input)?;
            let rep = HomologyRep::new(system.clone())?;
            for (k, text) in words.iter().enumerate() {
                let w = parse_word(text, &system)?;
                if words.len() > 1 {
                    if k > 0 {
                        writeln!(out).map_err(io)?;
                    }
                    writeln!(out, "# {w}").map_err(io)?;
                }
                write!(out, "{}", rep.word_matrix(&w)?).map_err(io)?;
            }
        }
        Command::Order {
            input,
            assert_periodic,
        } => {
            let (system, words) = words_of(&input)?;
            let rep = HomologyRep::new(system.clone())?;
            for text in &words {
                let w = parse_word(text, &system)?;
                let cert = rep.order_certificate(&w, assert_periodic)?;
                if words.len() > 1 {
                    writeln!(out, "{w}: {cert}").map_err(io)?;
                } else {
                    writeln!(out, "{cert}").map_err(io)?;
                }
            }
        }
        Command::Relcheck { system, lhs, rhs } => {
            let system = Arc::new(CurveSystem::builtin(&system)?);
            let rep = HomologyRep::new(system.clone())?;
            let u = parse_word(&lhs, &system)?;
            let v = parse_word(&rhs, &system)?;
            let check = rep.check_relation_homology(&u, &v)?;
            if check == RelationCheck::Equal && !check.is_conclusive(system.genus()) {
                writeln!(
                    out,
                    "equal on homology (not conclusive in genus {})",
                    system.genus()
                )
                .map_err(io)?;
            } else {
                writeln!(out, "{check}").map_err(io)?;
            }
        }
        Command::Abelianize { file, builtin } => {
            let p = match (file, builtin) {
                (Some(path), _) => read(&path)?.parse::<Presentation>()?,
                (None, Some(name)) => {
                    let r = name
                        .trim()
                        .to_ascii_lowercase()
                        .strip_prefix("gamma0r:r=")
                        .and_then(|r| r.parse::<u32>().ok())
                        .ok_or_else(|| Error::UnknownName(name.clone()))?;
                    gamma_0r_presentation(r)?
                }
                (None, None) => unreachable!("clap requires a source"),
            };
            let ab = abelianize(&p);
            writeln!(out, "{}", ab.group).map_err(io)?;
            for (name, img) in p.generators().iter().zip(&ab.generator_images) {
                let coords: Vec<String> = img.iter().map(ToString::to_string).collect();
                writeln!(out, "{name} -> ({})", coords.join(", ")).map_err(io)?;
            }
        }
        Command::Snf { file, transforms } => {
            let m: IntMatrix = read(&file)?.parse()?;
            let snf = smith_normal_form(&m);
            write!(out, "{}", snf.d).map_err(io)?;
            if transforms {
                write!(out, "U\n{}V\n{}", snf.u, snf.v).map_err(io)?;
            }
            writeln!(out, "cokernel: {}", cokernel(&m)).map_err(io)?;
        }
        Command::Admissible { spec, r } => {
            let spec = builtin_spec(&spec)?;
            let ok = realizable_boundary_count(&spec, r);
            writeln!(out, "{}", if ok { "realizable" } else { "not realizable" }).map_err(io)?;
        }
        Command::Census { spec, r: (lo, hi) } => {
            let spec = builtin_spec(&spec)?;
            writeln!(out, "r\trealizable").map_err(io)?;
            for r in lo..=hi {
                let ok = realizable_boundary_count(&spec, r);
                writeln!(out, "{r}\t{}", if ok { "yes" } else { "no" }).map_err(io)?;
            }
        }
        Command::FreeQuotient { g, n, b } => match free_quotient_genus(g, n, b)? {
            Some(gq) => writeln!(out, "{gq}").map_err(io)?,
            None => writeln!(out, "none").map_err(io)?,
        },
        Command::Z3Profiles { g } => {
            writeln!(out, "g'\tfixed points").map_err(io)?;
            for (gq, t) in z3_fixed_point_profiles(g) {
                writeln!(out, "{gq}\t{t}").map_err(io)?;
            }
        }
        Command::DecomposeTransposition { n, i, j } => {
            let (alpha, beta) = transposition_as_two_involutions(n, i, j)?;
            writeln!(out, "alpha = {alpha}\nbeta = {beta}").map_err(io)?;
        }
        Command::BraidPerm { strands, word } => {
            let w = BraidWord::parse(&word, strands)?;
            writeln!(out, "{}", braid_permutation(&w)).map_err(io)?;
        }
        Command::BraidLift { word } => {
            let w = BraidWord::parse(&word, 6)?;
            writeln!(out, "{}", braid_to_genus2_word(&w)?).map_err(io)?;
        }
        Command::Theorem { g, r, grid, check } => {
            if let (Some(g), Some(r)) = (g, r) {
                writeln!(out, "{}", torsion_generation_verdict(g, r)?).map_err(io)?;
                return Ok(true);
            }
            let (gmax, rmax) = grid.expect("clap requires --grid without --g");
            return theorem_grid(gmax, rmax, check, out);
        }
    }
    Ok(true)
}

fn theorem_grid(gmax: u32, rmax: u32, check: bool, out: &mut dyn Write) -> Result<bool> {
    let mut all_ok = true;
    if check {
        writeln!(out, "g\tr\tindex\tcheck").map_err(io)?;
    } else {
        writeln!(out, "g\tr\tverdict").map_err(io)?;
    }
    for g in 0..=gmax {
        for r in 0..=rmax {
            if g == 0 && r < 3 {
                continue;
            }
            if check {
                let report = cross_check(g, r)?;
                all_ok &= report.passed();
                let status = if report.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{g}\t{r}\t{}\t{status}", report.index).map_err(io)?;
                if !report.passed() {
                    let failed: BTreeSet<&str> = report
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.name.as_str())
                        .collect();
                    for name in failed {
                        writeln!(out, "\t\tfailed: {name}").map_err(io)?;
                    }
                }
            } else {
                writeln!(out, "{g}\t{r}\t{}", torsion_generation_verdict(g, r)?).map_err(io)?;
            }
        }
    }
    Ok(all_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["mcg-torsion"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_prints_matrix() {
        let (code, out, _) = call(&["eval", "--system", "chain:g=2", "--word", "C1 C2 C3 C4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 1 0 0\n0 0 1 0\n0 0 0 1\n-1 1 -1 1\n");
    }

    #[test]
    fn theorem_and_order() {
        assert_eq!(
            call(&["theorem", "--g", "2", "--r", "9"]).1,
            "not generated by torsion; index 5\n"
        );
        assert_eq!(
            call(&[
                "order",
                "--system",
                "torus",
                "--word",
                "A B",
                "--assert-periodic"
            ])
            .1,
            "6 (certified)\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["eval", "--system", "torus"]).0, 2);
        let (code, _, err) = call(&["eval", "--system", "torus", "--word", "A Q"]);
        assert_eq!(code, 1);
        assert!(err.contains("Q"), "{err}");
        assert_eq!(call(&["theorem", "--g", "0", "--r", "2"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..30"), Ok((0, 30)));
        assert_eq!(parse_range("2..=4"), Ok((2, 4)));
        assert!(parse_range("5..1").is_err());
        assert_eq!(parse_grid("5,20"), Ok((5, 20)));
    }
}

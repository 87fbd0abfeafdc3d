//! Command-line interface: `pushforward`, `verify`, `tables` and `expand`.
//!
//! Exit codes are 0 on success, 2 for bad input and 3 when a computed result
//! disagrees with an independent check.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{parse_poly, parse_poly_in, VarKind, VarSet};
use crate::charclasses::{same_class, schur_expand, to_chern, to_segre, CharPoly};
use crate::combinatorics::{parse_int_list, FlagType, WeightVector};
use crate::error::{Error, Result};
use crate::gysin::{build_ftilde_general, build_ftilde_weight, Provenance, PushforwardResult};
use crate::oracle::oracle_chern;
use crate::render::{render_class, ClassView, Format, OutputBasis};
use crate::tables::{compute_tables, render_tables, tables_pass};
use crate::verify::{default_engine, run_verify, with_workers, Engine, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gysin",
    version,
    about = "Exact Gysin push-forwards from flag bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Push a class forward from a flag bundle to its base.
    Pushforward(PushforwardArgs),
    /// Run the verification grid.
    Verify(VerifyArgs),
    /// Recompute the worked examples and check them against their known values.
    Tables(TablesArgs),
    /// Rewrite a class given in Chern or Segre classes in every basis.
    Expand(ExpandArgs),
}

#[derive(Args, Debug)]
struct PushforwardArgs {
    /// Rank of the bundle (may be omitted when --flag is given).
    #[arg(long)]
    rank: Option<u32>,
    /// Flag type `0,ρ_1,…,r` (default: complete flags).
    #[arg(long)]
    flag: Option<String>,
    /// Weight vector, constant on blocks; the class is `c_1(Q^a)^power`.
    #[arg(long, conflicts_with = "poly")]
    weight: Option<String>,
    /// Homogeneous polynomial in `u1..um`, `u_j` the first Chern class of the
    /// `j`-th quotient.
    #[arg(long)]
    poly: Option<String>,
    /// Exponent of `c_1(Q^a)`.
    #[arg(long, conflicts_with = "k")]
    power: Option<u32>,
    /// Degree of the result; the power is `k` plus the fiber dimension.
    #[arg(long)]
    k: Option<u32>,
    /// Number of Segre classes on the base (default: the degree).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value = "segre")]
    basis: OutputBasisArg,
    #[arg(long, default_value = "text")]
    format: FormatArg,
    /// Recompute through the symmetrizer oracle and fail on disagreement.
    #[arg(long)]
    check: bool,
    #[arg(long)]
    workers: Option<usize>,
    /// File of `key=value` lines supplying options not given on the command line.
    #[arg(long)]
    config: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_rank: u32,
    #[arg(long, default_value_t = 2)]
    max_k: u32,
    /// Largest weight entry in the grid.
    #[arg(long, default_value_t = 4)]
    max_entry: i64,
    /// Largest rank for split-bundle evaluation.
    #[arg(long, default_value_t = 3)]
    split_rank: u32,
    #[arg(long, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    config: Option<String>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    config: Option<String>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    rank: Option<u32>,
    /// Polynomial in `c1..cr` or in `s1..sn`.
    #[arg(long)]
    poly: Option<String>,
    #[arg(long, default_value = "all")]
    basis: OutputBasisArg,
    #[arg(long, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    config: Option<String>,
}

// clap wants `Clone + Send + Sync + 'static` value types with a string parser.
#[derive(Debug, Clone, Copy)]
struct FormatArg(Format);

impl std::str::FromStr for FormatArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(FormatArg)
    }
}

#[derive(Debug, Clone, Copy)]
struct OutputBasisArg(OutputBasis);

impl std::str::FromStr for OutputBasisArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(OutputBasisArg)
    }
}

/// Options that exclude each other; a config value is dropped when any
/// member of its group was given on the command line.
const EXCLUSIVE: [[&str; 2]; 2] = [["weight", "poly"], ["power", "k"]];
const SWITCHES: [&str; 1] = ["check"];

/// Appends options from the `--config` file that the command line leaves unset.
fn merge_config(args: Vec<String>) -> Result<Vec<String>> {
    let Some(pos) = args
        .iter()
        .position(|a| a == "--config" || a.starts_with("--config="))
    else {
        return Ok(args);
    };
    let path = match args[pos].strip_prefix("--config=") {
        Some(p) => p.to_string(),
        None => args
            .get(pos + 1)
            .cloned()
            .ok_or_else(|| Error::Contract("--config needs a file name".into()))?,
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Contract(format!("cannot read config {path}: {e}")))?;

    let given = |key: &str| {
        let flag = format!("--{key}");
        let eq = format!("--{key}=");
        args.iter().any(|a| a == &flag || a.starts_with(&eq))
    };
    let mut extra = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Contract(format!("{path}:{}: expected key=value", lineno + 1)))?;
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        if key == "config" || given(&key) {
            continue;
        }
        let blocked = EXCLUSIVE
            .iter()
            .any(|group| group.contains(&key.as_str()) && group.iter().any(|k| given(k)));
        if blocked {
            continue;
        }
        if SWITCHES.contains(&key.as_str()) {
            match value {
                "true" | "1" | "yes" => extra.push(format!("--{key}")),
                "false" | "0" | "no" => {}
                _ => {
                    return Err(Error::Contract(format!(
                        "{path}:{}: {key} takes true or false",
                        lineno + 1
                    )))
                }
            }
        } else {
            extra.push(format!("--{key}={value}"));
        }
    }
    let mut merged = args;
    merged.extend(extra);
    Ok(merged)
}

/// Runs the CLI with the production engine. `args` excludes the program name.
pub fn run(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    run_with_engine(args, out, err, default_engine)
}

/// Runs the CLI with the given push-forward engine; used to test that broken
/// engines are caught.
pub fn run_with_engine(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
    engine: Engine,
) -> i32 {
    let args = match merge_config(args.into_iter().collect()) {
        Ok(a) => a,
        Err(e) => return report(err, &e),
    };
    let cli = match Cli::try_parse_from(std::iter::once("gysin".to_string()).chain(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let outcome = match cli.command {
        Command::Pushforward(a) => cmd_pushforward(&a, engine),
        Command::Verify(a) => cmd_verify(&a, engine),
        Command::Tables(a) => cmd_tables(&a, engine),
        Command::Expand(a) => cmd_expand(&a),
    };
    match outcome {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Internal(_) => EXIT_INCONSISTENT,
        _ => EXIT_INPUT,
    }
}

fn resolve_flag(rank: Option<u32>, flag: Option<&str>) -> Result<FlagType> {
    match (rank, flag) {
        (_, Some(text)) => {
            let flag: FlagType = text.parse()?;
            match rank {
                Some(r) if r != flag.rank() => Err(Error::InvalidFlag(format!(
                    "flag {flag} has rank {}, but --rank is {r}",
                    flag.rank()
                ))),
                _ => Ok(flag),
            }
        }
        (Some(r), None) if r > 0 => Ok(FlagType::complete(r)),
        (Some(_), None) => Err(Error::InvalidFlag("rank must be positive".into())),
        (None, None) => Err(Error::Contract("give --rank or --flag".into())),
    }
}

fn cmd_pushforward(a: &PushforwardArgs, engine: Engine) -> Result<(String, i32)> {
    let flag = resolve_flag(a.rank, a.flag.as_deref())?;
    let ell = flag.relative_dim();
    let ftilde = match (&a.weight, &a.poly) {
        (Some(w), None) => {
            let power = match (a.power, a.k) {
                (Some(p), None) => p,
                (None, Some(k)) => k + ell,
                _ => {
                    return Err(Error::Contract(
                        "give exactly one of --power and --k".into(),
                    ))
                }
            };
            let weight = WeightVector::validate(&flag, &parse_int_list(w)?)?;
            build_ftilde_weight(&flag, &weight, power)?
        }
        (None, Some(text)) => {
            if a.power.is_some() || a.k.is_some() {
                return Err(Error::Contract(
                    "--power and --k apply to --weight; a polynomial fixes its own degree".into(),
                ));
            }
            let f = parse_poly_in(text, &VarSet::formal(flag.blocks() as u32))?;
            build_ftilde_general(&flag, &f)?
        }
        _ => {
            return Err(Error::Contract(
                "give exactly one of --weight and --poly".into(),
            ))
        }
    };
    let k = ftilde
        .homogeneous_degree()?
        .map_or(0, |d| (d - i64::from(ell)).max(0) as u32);
    let n = a.n.unwrap_or(k);

    let (segre, oracle) = with_workers(a.workers, || -> Result<_> {
        let segre = engine(&flag, &ftilde, n)?;
        let oracle = if a.check {
            Some(oracle_chern(&flag, &ftilde)?)
        } else {
            None
        };
        Ok((segre, oracle))
    })??;
    if let Some(oracle) = oracle {
        if !same_class(&segre, &oracle, flag.rank())? {
            return Err(Error::Internal(format!(
                "extraction gives {segre}, the oracle gives {oracle} (flag {flag})"
            )));
        }
    }
    let result = PushforwardResult::from_segre(segre, flag.rank(), Provenance::DpGeneral)?;
    let text = render_class(&ClassView::from(&result), a.basis.0, a.format.0);
    Ok((text, EXIT_OK))
}

fn cmd_verify(a: &VerifyArgs, engine: Engine) -> Result<(String, i32)> {
    if a.max_entry < 0 {
        return Err(Error::Contract("--max-entry must be nonnegative".into()));
    }
    let config = VerifyConfig {
        max_rank: a.max_rank,
        max_k: a.max_k,
        max_entry: a.max_entry,
        split_max_rank: a.split_rank,
        workers: a.workers,
        engine,
        ..VerifyConfig::default()
    };
    let report = run_verify(&config)?;
    let text = match a.format.0 {
        Format::Json => report.render_json(),
        _ => report.render_text(),
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    Ok((text, code))
}

fn cmd_tables(a: &TablesArgs, engine: Engine) -> Result<(String, i32)> {
    let lines = compute_tables(engine)?;
    let code = if tables_pass(&lines) {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    Ok((render_tables(&lines, a.format.0), code))
}

fn cmd_expand(a: &ExpandArgs) -> Result<(String, i32)> {
    let text = a
        .poly
        .as_deref()
        .ok_or_else(|| Error::Contract("give --poly".into()))?;
    let p = parse_poly(text)?;
    let kind = match p.varset().kind() {
        Some(kind @ (VarKind::Chern | VarKind::Segre)) => Some(kind),
        None if p.varset().is_empty() => None,
        _ => {
            return Err(Error::Contract(format!(
                "expand takes a polynomial in c1..cr or in s1..sn, got variables {}",
                p.varset()
            )))
        }
    };
    let used = p.varset().len() as u32;
    let rank = match (a.rank, kind) {
        (Some(r), _) => r,
        (None, Some(VarKind::Chern)) => used.max(1),
        _ => return Err(Error::Contract("give --rank".into())),
    };
    if rank == 0 {
        return Err(Error::Contract("rank must be positive".into()));
    }
    let p = match kind {
        Some(VarKind::Chern) if used > rank => {
            return Err(Error::Contract(format!(
                "c{used} does not exist in rank {rank}"
            )))
        }
        Some(VarKind::Chern) | None => p.embed(&VarSet::chern(rank))?,
        _ => p,
    };
    let class = CharPoly::from_poly(p)?;
    let chern = to_chern(&class, rank)?;
    let segre = to_segre(&chern, rank)?;
    let schur = schur_expand(&chern, rank)?;
    let view = ClassView {
        rank,
        degree: chern.degree(),
        segre: &segre,
        chern: &chern,
        schur: &schur,
        provenance: None,
    };
    Ok((render_class(&view, a.basis.0, a.format.0), EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().map(|s| s.to_string()), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn projective_bundle() {
        let (code, out, _) = call(&[
            "pushforward",
            "--rank",
            "3",
            "--flag",
            "0,1,3",
            "--weight",
            "1,1,0",
            "--power",
            "5",
            "--basis",
            "chern",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "4*c1^3 - 3*c1*c2 - c3\n");
    }

    #[test]
    fn tied_weight_vanishes() {
        let (code, out, _) = call(&[
            "pushforward",
            "--rank",
            "3",
            "--flag",
            "0,1,2,3",
            "--weight",
            "2,2,0",
            "--k",
            "1",
        ]);
        assert_eq!((code, out.as_str()), (0, "0\n"));
    }

    #[test]
    fn polynomial_source_with_check() {
        // u1^2 on P(E) for rank 2: the pushforward of c_1(Q)^2 is −s1
        let (code, out, err) = call(&[
            "pushforward",
            "--flag",
            "0,1,2",
            "--poly",
            "u1^2",
            "--check",
        ]);
        assert_eq!(code, 0, "{err}");
        let expected = call(&[
            "pushforward",
            "--flag",
            "0,1,2",
            "--weight",
            "1,0",
            "--power",
            "2",
        ]);
        assert_eq!(out, expected.1);
    }

    #[test]
    fn validation_errors_exit_two() {
        let bad = [
            vec![
                "pushforward",
                "--flag",
                "0,2,3",
                "--weight",
                "2,1,0",
                "--k",
                "1",
            ],
            vec![
                "pushforward",
                "--rank",
                "4",
                "--flag",
                "0,1,3",
                "--weight",
                "1,1,0",
                "--k",
                "1",
            ],
            vec![
                "pushforward",
                "--rank",
                "3",
                "--weight",
                "3,2,0",
                "--k",
                "1",
                "--n",
                "0",
            ],
            vec![
                "pushforward",
                "--rank",
                "3",
                "--weight",
                "3,2,0",
                "--power",
                "4",
                "--k",
                "1",
            ],
            vec!["pushforward", "--rank", "3", "--poly", "u1+"],
            vec!["expand", "--poly", "t1"],
            vec!["frobnicate"],
        ];
        for args in bad {
            let (code, _, err) = call(&args);
            assert_eq!(code, 2, "{args:?}");
            assert!(!err.is_empty());
        }
        let (_, _, err) = call(&[
            "pushforward",
            "--flag",
            "0,2,3",
            "--weight",
            "2,1,0",
            "--k",
            "1",
        ]);
        assert!(err.contains("block-constancy"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("pushforward"));
    }

    #[test]
    fn expand_signed_segre() {
        let (code, out, _) = call(&["expand", "--rank", "3", "--poly", "s2", "--basis", "schur"]);
        assert_eq!((code, out.as_str()), (0, "S(1,1,0)\n"));
        let (code, out, _) = call(&["expand", "--poly", "c1^2 - c2", "--basis", "segre"]);
        assert_eq!((code, out.as_str()), (0, "s2\n"));
    }

    #[test]
    fn config_fills_missing_options() {
        let dir = std::env::temp_dir().join(format!("gysin-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        std::fs::write(
            &path,
            "# projective bundle\nflag = 0,1,3\nweight = 1,1,0\nk = 1\nbasis = chern\ncheck = true\n",
        )
        .unwrap();
        let path = path.to_str().unwrap();
        let (code, out, err) = call(&["pushforward", "--config", path]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out, "2*c1\n");
        // the command line wins, including over the other half of an exclusive pair
        let (code, out, _) = call(&["pushforward", "--config", path, "--power", "5"]);
        assert_eq!((code, out.as_str()), (0, "4*c1^3 - 3*c1*c2 - c3\n"));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn broken_engine_fails_check() {
        fn flipped(flag: &FlagType, ft: &crate::algebra::SparsePoly, n: u32) -> Result<CharPoly> {
            let p = default_engine(flag, ft, n)?;
            CharPoly::new(p.basis(), p.degree(), -p.poly().clone())
        }
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = [
            "pushforward",
            "--rank",
            "3",
            "--weight",
            "3,2,0",
            "--k",
            "2",
            "--check",
        ];
        let code = run_with_engine(args.map(String::from), &mut out, &mut err, flipped);
        assert_eq!(code, 3);
        assert!(String::from_utf8(err).unwrap().contains("oracle"));
    }
}

//! Command-line front end.
//!
//! Every subcommand prints plain text to `out`; diagnostics go to `err`.
//! Exit status is 0 on success, 1 when the mathematics refuses the input
//! (zero divisors, domain restrictions, singular loops) and 2 when the
//! command line or an input file cannot be parsed.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{fmt_real, Tricomplex};
use crate::calculus::{check_analytic, loop_integral_pole, residue_sum, winding_number, Path3, PoleSpec};
use crate::cosexp::cosexp_triple;
use crate::error::{Error, Result};
use crate::functions::{tcos, tcosh, texp, tlog, tpow, tsin, tsinh};
use crate::geometry::{polar, rho_surface_distance, to_canonical};
use crate::poly::{enumerate_root_sets, factor, RootSet, TriPolynomial};
use crate::series::{eval_series, radius_cylindrical, TriSeries};

#[derive(Parser, Debug)]
#[command(
    name = "tricomplex",
    version,
    about = "Three-dimensional commutative hypercomplex calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FnArg {
    Exp,
    Log,
    Pow,
    Sin,
    Cos,
    Sinh,
    Cosh,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an elementary function at a point.
    Eval {
        #[arg(long = "fn", value_enum)]
        func: FnArg,
        #[arg(long, value_parser = parse_tri)]
        at: Tricomplex,
        /// Exponent for `--fn pow`.
        #[arg(long, allow_negative_numbers = true)]
        exponent: Option<f64>,
    },
    /// Geometric and canonical description of a point.
    Decompose {
        #[arg(long, value_parser = parse_tri)]
        at: Tricomplex,
    },
    /// Factor a monic polynomial read from CSV rows `p,q,r`, leading first.
    Factor {
        #[arg(long)]
        poly: PathBuf,
        /// Print every distinct root set instead of the canonical one.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 720, requires = "all")]
        cap: usize,
    },
    /// Loop integral of `residue/(u - pole)`.
    Integrate {
        #[arg(long, value_parser = parse_tri)]
        pole: Tricomplex,
        #[arg(long, value_parser = parse_tri, default_value = "(1,0,0)")]
        residue: Tricomplex,
        /// `circle:center=(x,y,z),radius=r,turns=n`
        #[arg(long = "loop", value_parser = parse_loop, required_unless_present = "loop_file", conflicts_with = "loop_file")]
        loop_spec: Option<CircleSpec>,
        /// Closed polyline as CSV rows `x,y,z`.
        #[arg(long)]
        loop_file: Option<PathBuf>,
    },
    /// Finite-difference check of the analyticity relations.
    CheckAnalytic {
        #[arg(long = "fn", value_enum)]
        func: FnArg,
        #[arg(long, value_parser = parse_tri)]
        at: Tricomplex,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        #[arg(long, allow_negative_numbers = true)]
        exponent: Option<f64>,
    },
    /// CSV table of cx, mx, px.
    CosexpTable {
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
    /// CSV table of the distance to a surface of constant amplitude.
    RhoSurface {
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
    /// Evaluate a power series read from CSV rows `p,q,r`, constant term first.
    Series {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, value_parser = parse_tri)]
        at: Tricomplex,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct CircleSpec {
    center: Tricomplex,
    radius: f64,
    turns: i32,
}

fn parse_tri(s: &str) -> std::result::Result<Tricomplex, String> {
    s.parse::<Tricomplex>().map_err(|e| e.to_string())
}

/// Splits on commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_loop(s: &str) -> std::result::Result<CircleSpec, String> {
    let body = s
        .strip_prefix("circle:")
        .ok_or_else(|| "loop must look like circle:center=(x,y,z),radius=r,turns=n".to_string())?;
    let (mut center, mut radius, mut turns) = (None, None, 1);
    for part in split_top_level(body) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        match key.trim() {
            "center" => center = Some(parse_tri(value)?),
            "radius" => radius = Some(value.trim().parse::<f64>().map_err(|e| format!("radius: {e}"))?),
            "turns" => turns = value.trim().parse::<i32>().map_err(|e| format!("turns: {e}"))?,
            other => return Err(format!("unknown loop key {other:?}")),
        }
    }
    let radius = radius.ok_or("loop needs radius=")?;
    if !(radius.is_finite() && radius > 0.0) {
        return Err("radius must be positive".into());
    }
    if turns == 0 {
        return Err("turns must be nonzero".into());
    }
    Ok(CircleSpec {
        center: center.ok_or("loop needs center=")?,
        radius,
        turns,
    })
}

/// Failure of a subcommand, split by exit status.
enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(msg) => Failure::Usage(msg),
            other => Failure::Math(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn function(
    func: FnArg,
    exponent: Option<f64>,
) -> std::result::Result<Box<dyn Fn(Tricomplex) -> Result<Tricomplex>>, Failure> {
    let f: Box<dyn Fn(Tricomplex) -> Result<Tricomplex>> = match (func, exponent) {
        (FnArg::Pow, Some(m)) => Box::new(move |u| tpow(u, m)),
        (FnArg::Pow, None) => return Err(Failure::Usage("--fn pow needs --exponent".into())),
        (_, Some(_)) => return Err(Failure::Usage("--exponent only applies to --fn pow".into())),
        (FnArg::Exp, None) => Box::new(texp),
        (FnArg::Log, None) => Box::new(tlog),
        (FnArg::Sin, None) => Box::new(tsin),
        (FnArg::Cos, None) => Box::new(tcos),
        (FnArg::Sinh, None) => Box::new(tsinh),
        (FnArg::Cosh, None) => Box::new(tcosh),
    };
    Ok(f)
}

fn read_triples(path: &Path) -> std::result::Result<Vec<Tricomplex>, Failure> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if record.len() != 3 {
            return Err(Failure::Usage(format!(
                "{}: row {} has {} fields, expected 3",
                path.display(),
                i + 1,
                record.len()
            )));
        }
        let mut v = [0.0; 3];
        for (slot, field) in v.iter_mut().zip(record.iter()) {
            *slot =
                field.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(|| {
                    Failure::Usage(format!("{}: row {}: bad number {field:?}", path.display(), i + 1))
                })?;
        }
        rows.push(Tricomplex::from(v));
    }
    Ok(rows)
}

fn grid(from: f64, to: f64, step: f64) -> std::result::Result<Vec<f64>, Failure> {
    if !(step.is_finite() && step > 0.0) || !from.is_finite() || !to.is_finite() || to < from {
        return Err(Failure::Usage("need finite --from <= --to and --step > 0".into()));
    }
    let n = ((to - from) / step + 1e-9).floor();
    if n > 1e7 {
        return Err(Failure::Usage("table would exceed 10^7 rows".into()));
    }
    // with short decimal inputs, step in exact integer units so that rows
    // print as 0.3 rather than 0.30000000000000004
    let decimals = |v: f64| format!("{v}").split_once('.').map_or(0, |(_, f)| f.len());
    let d = decimals(from).max(decimals(step));
    let scale = 10f64.powi(d as i32);
    let (f0, s0) = ((from * scale).round(), (step * scale).round());
    let exact = d <= 15 && (f0.abs() + n * s0.abs()) < 2f64.powi(53);
    Ok((0..=n as usize)
        .map(|i| {
            if exact {
                (f0 + i as f64 * s0) / scale
            } else {
                from + i as f64 * step
            }
        })
        .collect())
}

fn write_root_set(out: &mut dyn Write, index: usize, set: &RootSet) -> std::io::Result<()> {
    let pairing: Vec<String> = set.pairing.iter().map(|p| p.to_string()).collect();
    writeln!(out, "root_set={index} pairing={}", pairing.join(","))?;
    for r in &set.roots {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Eval { func, at, exponent } => {
            let f = function(func, exponent)?;
            writeln!(out, "{}", f(at)?)?;
        }
        Command::Decompose { at } => {
            match polar(at) {
                Ok(p) => writeln!(out, "{p}")?,
                Err(Error::UndefinedAngle(partial)) => writeln!(out, "{partial}")?,
                Err(e) => return Err(e.into()),
            }
            let c = to_canonical(at);
            writeln!(out, "v1={}", fmt_real(c.v1))?;
            writeln!(out, "v1t={}", fmt_real(c.v1t))?;
            writeln!(out, "vp={}", fmt_real(c.vp))?;
        }
        Command::Factor { poly, all, cap } => {
            let p = TriPolynomial::new(read_triples(&poly)?)?;
            if all {
                for (i, set) in enumerate_root_sets(&p, cap)?.iter().enumerate() {
                    write_root_set(out, i + 1, set)?;
                }
            } else {
                write_root_set(out, 1, &factor(&p)?)?;
            }
        }
        Command::Integrate {
            pole,
            residue,
            loop_spec,
            loop_file,
        } => {
            let path = match (loop_spec, loop_file) {
                (Some(c), _) => Path3::circle(c.center, c.radius, c.turns)?,
                (None, Some(file)) => Path3::closed_polyline(read_triples(&file)?)?,
                (None, None) => return Err(Failure::Usage("need --loop or --loop-file".into())),
            };
            let integral = loop_integral_pole(pole, &path)? * residue;
            let spec = PoleSpec::new(pole, residue);
            writeln!(out, "integral={integral}")?;
            writeln!(out, "winding={}", winding_number(pole, &path)?)?;
            writeln!(out, "residue_sum={}", residue_sum(&[spec], &path)?)?;
        }
        Command::CheckAnalytic {
            func,
            at,
            step,
            exponent,
        } => {
            if !(step.is_finite() && step > 0.0) {
                return Err(Failure::Usage("--step must be positive".into()));
            }
            let f = function(func, exponent)?;
            let r = check_analytic(f, at, step)?;
            let row = |v: [f64; 3]| v.map(fmt_real).join(",");
            writeln!(out, "first_order={}", row(r.first_order_group_max()))?;
            writeln!(out, "second_order={}", row(r.second_order_max()))?;
            writeln!(out, "laplacian={}", row(r.laplacian))?;
            writeln!(out, "max={}", fmt_real(r.max_residual()))?;
        }
        Command::CosexpTable { from, to, step } => {
            let ys = grid(from, to, step)?;
            writeln!(out, "y,cx,mx,px")?;
            for y in ys {
                let (c, m, p) = cosexp_triple(y);
                writeln!(out, "{},{},{},{}", fmt_real(y), fmt_real(c), fmt_real(m), fmt_real(p))?;
            }
        }
        Command::RhoSurface { rho, from, to, step } => {
            if !(rho.is_finite() && rho > 0.0) {
                return Err(Failure::Usage("--rho must be positive".into()));
            }
            let thetas = grid(from, to, step)?;
            writeln!(out, "theta,d")?;
            for theta in thetas {
                let d = rho_surface_distance(rho, theta)?;
                writeln!(out, "{},{}", fmt_real(theta), fmt_real(d))?;
            }
        }
        Command::Series { coeffs, at } => {
            let s = TriSeries::new(read_triples(&coeffs)?)?;
            writeln!(out, "value={}", eval_series(&s, at)?)?;
            match radius_cylindrical(&s) {
                Ok(r) => {
                    writeln!(out, "c0={}", fmt_real(r.c0))?;
                    writeln!(out, "c1={}", fmt_real(r.c1))?;
                    writeln!(out, "cplus={}", fmt_real(r.cplus))?;
                    writeln!(out, "inside={}", r.in_cylinder(at))?;
                }
                Err(Error::Indeterminate) => writeln!(out, "radius=indeterminate")?,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(())
}

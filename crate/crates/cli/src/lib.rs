//! The `sobopoly` command line: families, zeros, extremal points, endpoint
//! dominance reports and figure data as JSON or CSV.
//!
//! Exit codes: 0 on success, 1 on a parse or precondition error, 2 when a
//! verification in the output fails.

use anyhow::{Context, Result};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sobopoly_core::{
    dn_asymptotic_ratio, endpoint_dominance_report, extremal_profile, gegenbauer_zeros,
    interlacing_verdict, normalized, real_zeros_cascade, sobolev_family, Interlacing, PolyEval,
};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Largest degree accepted on the command line; beyond it the raw
/// high-order derivatives overflow binary64.
pub const MAX_DEGREE: usize = 170;

#[derive(Parser, Debug)]
#[command(
    name = "sobopoly",
    version,
    about = "Gegenbauer-Sobolev polynomials and their endpoint extremal properties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Q_n coefficients, Sobolev norms and connection coefficients.
    Seq(SeqArgs),
    /// Zeros of Q_n and C_n with the interlacing verdict.
    Zeros(PointArgs),
    /// The constant N and the extremal point M.
    Mvalue(PointArgs),
    /// Endpoint dominance reports for n = 3..nmax and every derivative order.
    Verify(VerifyArgs),
    /// The profile h(q) of the normalized q on [-M, M].
    Profile(PointArgs),
    /// Sampled |q^(k)| curves on [-M, M] plus a JSON sidecar.
    Figure(FigureArgs),
    /// Table of n, d_n and 16 lambda n^2 d_n.
    Dn(FamilyArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct Params {
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    lambda: f64,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    nmax: usize,
    #[command(flatten)]
    params: Params,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SeqArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Half-width of the interval, at least M.
    #[arg(long = "K", allow_negative_numbers = true)]
    k: Option<f64>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// 1: n = 4, alpha = 1, lambda = 1, k = 0,1,2.
    /// 2: n = 7, alpha = -1/4, lambda = 1/2, k = 0,2,3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2),
          conflicts_with_all = ["n", "alpha", "lambda", "k"])]
    id: Option<u8>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Derivative orders, comma separated.
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    #[arg(long, default_value_t = 800)]
    samples: usize,
    #[arg(long)]
    out: PathBuf,
}

/// Why a command did not succeed.
#[derive(Debug)]
enum Failure {
    /// Parameters outside the supported range; printed with the usage line.
    Usage(String),
    /// The command ran but a check it reports on did not hold.
    Verification,
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<sobopoly_core::Error> for Failure {
    fn from(e: sobopoly_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                if !text.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", usage_for(&args));
                }
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let name = subcommand_name(&cli.command);
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => report(&f, name, err),
    }
}

/// Usage line of the first subcommand named in `args`, else the top level.
fn usage_for(args: &[OsString]) -> String {
    let mut cmd = Cli::command();
    cmd.build();
    let name = args
        .iter()
        .skip(1)
        .filter_map(|a| a.to_str())
        .find(|a| cmd.find_subcommand(a).is_some());
    match name {
        Some(name) => subcommand_usage(name),
        None => cmd.render_usage().to_string(),
    }
}

fn subcommand_usage(name: &str) -> String {
    let mut cmd = Cli::command();
    cmd.build();
    cmd.find_subcommand_mut(name)
        .map(|c| c.render_usage().to_string())
        .unwrap_or_default()
}

fn report(failure: &Failure, name: &str, err: &mut dyn Write) -> i32 {
    match failure {
        Failure::Usage(msg) => {
            let usage = subcommand_usage(name);
            let _ = writeln!(err, "error: {msg}\n\n{usage}");
            1
        }
        Failure::Verification => {
            let _ = writeln!(err, "verification failed");
            2
        }
        Failure::Other(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Seq(_) => "seq",
        Command::Zeros(_) => "zeros",
        Command::Mvalue(_) => "mvalue",
        Command::Verify(_) => "verify",
        Command::Profile(_) => "profile",
        Command::Figure(_) => "figure",
        Command::Dn(_) => "dn",
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Seq(a) => seq(&a, out),
        Command::Zeros(a) => zeros(&a, out),
        Command::Mvalue(a) => mvalue(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Profile(a) => profile(&a, out),
        Command::Figure(a) => figure(&a),
        Command::Dn(a) => dn(&a, out),
    }
}

fn check_params(p: Params) -> Outcome {
    if !(p.alpha > -0.5 && p.alpha.is_finite()) {
        return Err(Failure::Usage(format!(
            "--alpha must exceed -0.5, got {}",
            p.alpha
        )));
    }
    if !(p.lambda >= 0.0 && p.lambda.is_finite()) {
        return Err(Failure::Usage(format!(
            "--lambda must be >= 0, got {}",
            p.lambda
        )));
    }
    Ok(())
}

fn check_degree(flag: &str, n: usize, min: usize) -> Outcome {
    if n < min || n > MAX_DEGREE {
        return Err(Failure::Usage(format!(
            "--{flag} must lie in {min}..={MAX_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn emit_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).context("serializing output")?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SeqRow {
    n: usize,
    snorm: f64,
    /// `d_n`, present for `n <= nmax - 2`; null when infinite.
    d_n: Option<f64>,
    coeffs: Vec<f64>,
}

fn seq(a: &SeqArgs, out: &mut dyn Write) -> Outcome {
    let f = &a.family;
    check_params(f.params)?;
    check_degree("nmax", f.nmax, 0)?;
    let fam = sobolev_family(f.nmax, f.params.alpha, f.params.lambda)?;
    let rows: Vec<SeqRow> = (0..=f.nmax)
        .map(|n| SeqRow {
            n,
            snorm: fam.snorms[n],
            d_n: fam.dcoeffs.get(n).copied(),
            coeffs: fam.polys[n].coeffs().to_vec(),
        })
        .collect();
    match a.format {
        Format::Json => emit_json(&rows, out),
        Format::Csv => {
            let mut s = String::from("n,snorm,d_n");
            for i in 0..=f.nmax {
                let _ = write!(s, ",c{i}");
            }
            s.push('\n');
            for r in &rows {
                let _ = write!(s, "{},{},{}", r.n, num(r.snorm), opt_num(r.d_n));
                for i in 0..=f.nmax {
                    let _ = write!(s, ",{}", num(r.coeffs.get(i).copied().unwrap_or(0.0)));
                }
                s.push('\n');
            }
            out.write_all(s.as_bytes())?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ZerosReport {
    n: usize,
    alpha: f64,
    lambda: f64,
    q_zeros: Vec<f64>,
    c_zeros: Vec<f64>,
    interlacing: Interlacing,
}

fn zeros(a: &PointArgs, out: &mut dyn Write) -> Outcome {
    check_params(a.params)?;
    check_degree("n", a.n, 1)?;
    let Params { alpha, lambda } = a.params;
    let mut fam = sobolev_family(a.n, alpha, lambda)?;
    let q_zeros = real_zeros_cascade(&fam.series.swap_remove(a.n))?.zeros;
    let c_zeros = gegenbauer_zeros(a.n, alpha)?.zeros;
    let interlacing = interlacing_verdict(&q_zeros, &c_zeros);
    emit_json(
        &ZerosReport {
            n: a.n,
            alpha,
            lambda,
            q_zeros,
            c_zeros,
            interlacing,
        },
        out,
    )?;
    if interlacing == Interlacing::Violated {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn mvalue(a: &PointArgs, out: &mut dyn Write) -> Outcome {
    check_params(a.params)?;
    check_degree("n", a.n, 2)?;
    let m = sobopoly_core::compute_m(a.n, a.params.alpha, a.params.lambda)?;
    writeln!(out, "N = {}", num(m.big_n))?;
    writeln!(out, "M = {}", num(m.m))?;
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    alpha: f64,
    lambda: f64,
    #[serde(rename = "M")]
    m: f64,
    half_width: f64,
    k: usize,
    endpoint_value: f64,
    interior_max: f64,
    margin: f64,
    pass: bool,
    gated: bool,
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let f = &a.family;
    check_params(f.params)?;
    check_degree("nmax", f.nmax, 3)?;
    if let Some(k) = a.k {
        if !k.is_finite() {
            return Err(Failure::Usage(format!("--K must be finite, got {k}")));
        }
    }
    let mut rows = Vec::new();
    let mut passed = true;
    for n in 3..=f.nmax {
        let r = endpoint_dominance_report(n, f.params.alpha, f.params.lambda, a.k)?;
        passed &= r.passed();
        rows.extend(r.rows.iter().map(|row| VerifyRow {
            n,
            alpha: r.alpha,
            lambda: r.lambda,
            m: r.m,
            half_width: r.half_width,
            k: row.k,
            endpoint_value: row.endpoint_value,
            interior_max: row.interior_max,
            margin: row.margin,
            pass: row.pass,
            gated: row.gated,
        }));
    }
    emit_json(&rows, out)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct ProfileReport {
    n: usize,
    alpha: f64,
    lambda: f64,
    #[serde(rename = "M")]
    m: f64,
    tpoints: Vec<f64>,
    hvalues: Vec<f64>,
}

fn profile(a: &PointArgs, out: &mut dyn Write) -> Outcome {
    check_params(a.params)?;
    check_degree("n", a.n, 2)?;
    let Params { alpha, lambda } = a.params;
    let nq = normalized(a.n, alpha, lambda)?;
    let m = nq.mvalue.m;
    let p = extremal_profile(&nq.q, -m, m)?;
    emit_json(
        &ProfileReport {
            n: a.n,
            alpha,
            lambda,
            m,
            tpoints: p.tpoints,
            hvalues: p.hvalues,
        },
        out,
    )
}

#[derive(Serialize)]
struct Sidecar {
    id: String,
    n: usize,
    alpha: f64,
    lambda: f64,
    k: Vec<usize>,
    samples: usize,
    #[serde(rename = "M")]
    m: f64,
    #[serde(rename = "N")]
    big_n: f64,
}

struct FigureSpec {
    prefix: String,
    n: usize,
    params: Params,
    ks: Vec<usize>,
}

fn figure_spec(a: &FigureArgs) -> std::result::Result<FigureSpec, Failure> {
    match (a.id, a.n, a.alpha, a.lambda, &a.k) {
        (Some(1), ..) => Ok(FigureSpec {
            prefix: "fig1".into(),
            n: 4,
            params: Params {
                alpha: 1.0,
                lambda: 1.0,
            },
            ks: vec![0, 1, 2],
        }),
        (Some(_), ..) => Ok(FigureSpec {
            prefix: "fig2".into(),
            n: 7,
            params: Params {
                alpha: -0.25,
                lambda: 0.5,
            },
            ks: vec![0, 2, 3],
        }),
        (None, Some(n), Some(alpha), Some(lambda), Some(ks)) => {
            let params = Params { alpha, lambda };
            check_params(params)?;
            check_degree("n", n, 2)?;
            if ks.is_empty() {
                return Err(Failure::Usage("--k needs at least one order".into()));
            }
            if let Some(&k) = ks.iter().find(|&&k| k > n) {
                return Err(Failure::Usage(format!(
                    "--k order {k} exceeds the degree {n}"
                )));
            }
            let mut ks = ks.clone();
            ks.sort_unstable();
            ks.dedup();
            Ok(FigureSpec {
                prefix: "custom".into(),
                n,
                params,
                ks,
            })
        }
        _ => Err(Failure::Usage(
            "give either --id, or all of --n, --alpha, --lambda and --k".into(),
        )),
    }
}

/// Writes `contents` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(contents)
        .with_context(|| format!("writing {}", path.display()))?;
    tmp.persist(path)
        .with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn figure(a: &FigureArgs) -> Outcome {
    if a.samples < 16 {
        return Err(Failure::Usage(format!(
            "--samples must be at least 16, got {}",
            a.samples
        )));
    }
    let spec = figure_spec(a)?;
    let Params { alpha, lambda } = spec.params;
    let nq = normalized(spec.n, alpha, lambda)?;
    let m = nq.mvalue.m;

    std::fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let s = a.samples as f64;
    let xs: Vec<f64> = (0..=a.samples)
        .map(|i| match i {
            0 => -m,
            i if i == a.samples => m,
            i => m * ((2 * i) as f64 - s) / s,
        })
        .collect();
    for &k in &spec.ks {
        let mut csv = String::from("x,abs_dk_q\n");
        for &x in &xs {
            let _ = writeln!(csv, "{},{}", num(x), num(nq.q.derivative_at(k, x).0.abs()));
        }
        write_atomic(
            &a.out.join(format!("{}_k{k}.csv", spec.prefix)),
            csv.as_bytes(),
        )?;
    }
    let sidecar = Sidecar {
        id: spec.prefix.clone(),
        n: spec.n,
        alpha,
        lambda,
        k: spec.ks.clone(),
        samples: a.samples,
        m,
        big_n: nq.mvalue.big_n,
    };
    let mut json = serde_json::to_vec_pretty(&sidecar).context("serializing sidecar")?;
    json.push(b'\n');
    write_atomic(&a.out.join(format!("{}.json", spec.prefix)), &json)?;
    Ok(())
}

fn dn(a: &FamilyArgs, out: &mut dyn Write) -> Outcome {
    check_params(a.params)?;
    check_degree("nmax", a.nmax, 2)?;
    let fam = sobolev_family(a.nmax, a.params.alpha, a.params.lambda)?;
    let mut csv = String::from("n,d_n,ratio\n");
    for (n, &d) in fam.dcoeffs.iter().enumerate() {
        let ratio = if a.params.lambda > 0.0 && n >= 1 {
            Some(dn_asymptotic_ratio(n, &fam)?)
        } else {
            None
        };
        let _ = writeln!(csv, "{n},{},{}", num(d), opt_num(ratio));
    }
    out.write_all(csv.as_bytes())?;
    Ok(())
}

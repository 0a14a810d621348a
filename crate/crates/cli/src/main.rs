#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghbounds::bounds::{minimize_over_q, round3, table1, BoundKind, BoundResult, TABLE1_P};
use ghbounds::harmonic::{hm_omega1, lower_sandwich, wos_harmonic_measure, WOS_EPS};
use ghbounds::verify::inequality::DEFAULT_TOL;
use ghbounds::verify::{
    parse_polyline_instance, theorem3_normalize, verify_inequality, verify_theorem3, Family,
    RatioReport, TestFunction, A1_PUBLISHED_UPPER,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Seed used for Monte Carlo runs unless `--seed` is given.
const DEFAULT_SEED: u64 = 20_240_521;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "ghbounds",
    version,
    about = "Length-distortion bounds for meromorphic univalent maps"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "GHBOUNDS_FORMAT",
        default_value = "text"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one bound at a pole position p.
    Bounds {
        #[arg(long)]
        p: f64,
        /// One of lb, thmC, thm1, thm2, a1.
        #[arg(long)]
        kind: BoundKind,
    },
    /// Print the comparison table of bounds.
    Table {
        /// Comma-separated pole positions; defaults to the standard eleven.
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
    },
    /// Check the diameter/half-circle length inequality on a test family.
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
        p: Option<f64>,
        /// Inclusive grid `start:stop:step`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Harmonic measure of [a, b] in the slit half-plane, exact and sampled.
    Harmonic {
        /// Query point as `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        p: f64,
        /// Number of walk-on-spheres samples.
        #[arg(long)]
        wos: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = WOS_EPS)]
        eps: f64,
    },
    /// Compare a geodesic segment with a polyline arc read from a file.
    Theorem3 {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Constant used on the outside branch.
        #[arg(long, default_value_t = A1_PUBLISHED_UPPER, conflicts_with = "a1_computed")]
        a1: f64,
        /// Use the minimized limit bound instead of `--a1`.
        #[arg(long)]
        a1_computed: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s.parse()? {
        Family::Identity => Err("the identity has no pole; use mobius or koebe".into()),
        f => Ok(f),
    }
}

/// Bad input or a domain violation; exits with code 2. Failed inequalities
/// are reported through the `bool` returned alongside the output instead.
enum Failure {
    Usage(String),
}

impl From<ghbounds::Error> for Failure {
    fn from(e: ghbounds::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct BoundRecord {
    p: f64,
    kind: String,
    value: f64,
    q_star: Option<f64>,
    bracket_lo: Option<f64>,
    bracket_hi: Option<f64>,
    evaluations: usize,
    ill_conditioned: bool,
}

impl From<BoundResult> for BoundRecord {
    fn from(r: BoundResult) -> Self {
        Self {
            p: r.p,
            kind: r.kind.short_name().to_string(),
            value: r.value,
            q_star: r.q_star,
            bracket_lo: r.bracket.map(|b| b.0),
            bracket_hi: r.bracket.map(|b| b.1),
            evaluations: r.evaluations,
            ill_conditioned: r.ill_conditioned,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TableRecord {
    p: f64,
    lb: f64,
    thm_c: Option<f64>,
    thm1: f64,
    thm2: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct VerifyRecord {
    family: String,
    p: f64,
    length_i1: f64,
    length_t_minus: f64,
    ratio: f64,
    bound: f64,
    q_star: Option<f64>,
    pass: bool,
    error_i1: f64,
    error_t_minus: f64,
}

impl From<RatioReport> for VerifyRecord {
    fn from(r: RatioReport) -> Self {
        Self {
            family: r.function_id,
            p: r.p,
            length_i1: r.length_i1,
            length_t_minus: r.length_t_minus,
            ratio: r.ratio,
            bound: r.bound.value,
            q_star: r.bound.q_star,
            pass: r.pass,
            error_i1: r.error_i1,
            error_t_minus: r.error_t_minus,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct HarmonicRecord {
    z_re: f64,
    z_im: f64,
    a: f64,
    b: f64,
    p: f64,
    exact: f64,
    sandwich_lower: Option<f64>,
    sandwich_upper: Option<f64>,
    wos_mean: Option<f64>,
    wos_std_error: Option<f64>,
    wos_completed: Option<u64>,
    wos_capped: Option<u64>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Theorem3Record {
    family: String,
    pole_re: f64,
    pole_im: f64,
    normalized: bool,
    branch: String,
    tau: f64,
    tilde_gamma_lo: f64,
    tilde_gamma_hi: f64,
    a1_source: String,
    a1_value: f64,
    constant: f64,
    length_gamma: f64,
    length_j: f64,
    ratio: f64,
    pass: bool,
}

/// Renders `records`; JSON gets a bare object when `single` is set and an
/// array otherwise.
fn emit<T: Serialize>(
    format: Format,
    records: &[T],
    single: bool,
    text: impl FnOnce() -> String,
) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(text()),
        Format::Json => {
            let value = if single {
                serde_json::to_value(&records[0])
            } else {
                serde_json::to_value(records)
            };
            let mut s = value
                .and_then(|v| serde_json::to_string_pretty(&v))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in records {
                w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "invalid grid `{spec}`: expected start:stop:step with step > 0"
        ))
    };
    let parts: Vec<f64> = spec
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || !(stop >= start) {
        return Err(bad());
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    // round away accumulated binary noise such as 0.30000000000000004
    Ok((0..=n)
        .map(|k| ((start + step * k as f64) * 1e12).round() / 1e12)
        .collect())
}

fn parse_point(s: &str) -> Result<Complex64, Failure> {
    let bad = || Failure::Usage(format!("invalid point `{s}`: expected re,im"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    Ok(Complex64::new(
        re.trim().parse().map_err(|_| bad())?,
        im.trim().parse().map_err(|_| bad())?,
    ))
}

fn opt3(x: Option<f64>) -> String {
    x.map_or_else(|| "---".to_string(), |v| format!("{:.3}", round3(v)))
}

fn cmd_bounds(format: Format, p: f64, kind: BoundKind) -> Result<String, Failure> {
    let r = minimize_over_q(p, kind)?;
    let record = BoundRecord::from(r);
    emit(format, &[&record], true, || {
        let mut s = format!(
            "{} at p = {}: {:.3} ({:.10})\n",
            kind,
            p,
            round3(r.value),
            r.value
        );
        if let Some(q) = r.q_star {
            let _ = writeln!(s, "q* = {q:.8}, {} evaluations", r.evaluations);
        }
        if r.ill_conditioned {
            s.push_str(
                "warning: arccot argument is large at q*; the value may be ill-conditioned\n",
            );
        }
        s
    })
}

fn cmd_table(format: Format, p: Vec<f64>) -> Result<String, Failure> {
    let p_list = if p.is_empty() { TABLE1_P.to_vec() } else { p };
    let rows = table1(&p_list)?;
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Failure::Usage(e.to_string());
        w.write_record(["p", "lb", "thm_c", "thm1", "thm2"])
            .map_err(io)?;
        for r in &rows {
            w.write_record([
                r.p.to_string(),
                r.lower.to_string(),
                r.theorem_c
                    .map_or_else(|| "---".to_string(), |v| v.to_string()),
                r.theorem1.to_string(),
                r.theorem2.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
        return String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()));
    }
    let records: Vec<TableRecord> = rows
        .iter()
        .map(|r| TableRecord {
            p: r.p,
            lb: r.lower,
            thm_c: r.theorem_c,
            thm1: r.theorem1,
            thm2: r.theorem2,
        })
        .collect();
    emit(format, &records, false, || {
        let mut s = format!(
            "{:>7} {:>8} {:>10} {:>10} {:>10}\n",
            "p", "LB", "Thm C", "Thm 1", "Thm 2"
        );
        for r in &rows {
            let _ = writeln!(
                s,
                "{:>7} {:>8} {:>10} {:>10} {:>10}",
                r.p,
                opt3(Some(r.lower)),
                opt3(r.theorem_c),
                opt3(Some(r.theorem1)),
                opt3(Some(r.theorem2)),
            );
        }
        s
    })
}

fn cmd_verify(
    format: Format,
    family: Family,
    p: Option<f64>,
    grid: Option<String>,
    tol: f64,
) -> Result<(String, bool), Failure> {
    if !(tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let ps = match (p, grid) {
        (Some(p), _) => vec![p],
        (None, Some(g)) => parse_grid(&g)?,
        (None, None) => unreachable!("clap requires one of --p and --grid"),
    };
    let mut records = Vec::with_capacity(ps.len());
    for p in ps {
        let f = TestFunction::new(family, p)?;
        records.push(VerifyRecord::from(verify_inequality(&f, tol)?));
    }
    let all_pass = records.iter().all(|r| r.pass);
    let out = emit(format, &records, false, || {
        let mut s = String::new();
        for r in &records {
            let _ = writeln!(
                s,
                "{} p={} ratio={:.6} bound={:.3} {}",
                r.family,
                r.p,
                r.ratio,
                r.bound,
                if r.pass { "PASS" } else { "FAIL" }
            );
        }
        s
    })?;
    Ok((out, all_pass))
}

#[allow(clippy::too_many_arguments)]
fn cmd_harmonic(
    format: Format,
    z: &str,
    a: f64,
    b: f64,
    p: f64,
    wos: Option<u64>,
    seed: u64,
    eps: f64,
) -> Result<String, Failure> {
    let z = parse_point(z)?;
    let exact = hm_omega1(z, a, b, p)?;
    let on_segment = z.re == 0.0 && z.im >= a && z.im <= b;
    let lower = if on_segment {
        Some(lower_sandwich(p, a, b)?)
    } else {
        None
    };
    let est = match wos {
        Some(n) => Some(wos_harmonic_measure(z, a, b, p, n, eps, seed)?),
        None => None,
    };
    let record = HarmonicRecord {
        z_re: z.re,
        z_im: z.im,
        a,
        b,
        p,
        exact,
        sandwich_lower: lower,
        sandwich_upper: lower.map(|_| 0.5),
        wos_mean: est.map(|e| e.mean),
        wos_std_error: est.map(|e| e.std_error),
        wos_completed: est.map(|e| e.completed),
        wos_capped: est.map(|e| e.capped),
        seed: est.map(|_| seed),
    };
    emit(format, &[&record], true, || {
        let mut s = format!("exact: {exact:.12}\n");
        if let Some(lo) = lower {
            let _ = writeln!(s, "sandwich: [{lo:.12}, 0.5]");
        }
        if let Some(e) = est {
            let _ = writeln!(
                s,
                "walk-on-spheres: {:.6} ± {:.6} ({} walks, {} capped, seed {seed})",
                e.mean, e.std_error, e.completed, e.capped
            );
        }
        s
    })
}

fn cmd_theorem3(
    format: Format,
    file: &PathBuf,
    family: Family,
    a1: f64,
    a1_computed: bool,
    tol: f64,
) -> Result<(String, bool), Failure> {
    let text =
        fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let (s, arc) = parse_polyline_instance(&text)?;
    let n = theorem3_normalize(s, &arc)?;
    let normalized = n.arc != arc;
    let (a1_source, a1_value) = if a1_computed {
        ("computed", minimize_over_q(0.5, BoundKind::A1Limit)?.value)
    } else {
        ("given", a1)
    };
    let f = TestFunction::with_pole(family, n.s)?;
    let r = verify_theorem3(&f, &n.arc, a1_value, tol)?;
    let branch = serde_json::to_value(r.branch)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let record = Theorem3Record {
        family: r.function_id.clone(),
        pole_re: s.re,
        pole_im: s.im,
        normalized,
        branch,
        tau: r.tau,
        tilde_gamma_lo: r.tilde_gamma.y_min,
        tilde_gamma_hi: r.tilde_gamma.y_max,
        a1_source: a1_source.into(),
        a1_value,
        constant: r.constant,
        length_gamma: r.length_gamma,
        length_j: r.length_j,
        ratio: r.ratio,
        pass: r.pass,
    };
    let out = emit(format, &[&record], true, || {
        format!(
            "{} branch={} tau={:.6} constant={:.3} ({} A1 = {:.3})\nratio={:.6} {}\n",
            record.family,
            record.branch,
            record.tau,
            record.constant,
            record.a1_source,
            record.a1_value,
            record.ratio,
            if record.pass { "PASS" } else { "FAIL" }
        )
    })?;
    Ok((out, r.pass))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Bounds { p, kind } => cmd_bounds(format, p, kind).map(|s| (s, true)),
        Command::Table { p } => cmd_table(format, p).map(|s| (s, true)),
        Command::Verify {
            family,
            p,
            grid,
            tol,
        } => cmd_verify(format, family, p, grid, tol),
        Command::Harmonic {
            z,
            a,
            b,
            p,
            wos,
            seed,
            eps,
        } => cmd_harmonic(format, &z, a, b, p, wos, seed, eps).map(|s| (s, true)),
        Command::Theorem3 {
            file,
            family,
            a1,
            a1_computed,
            tol,
        } => cmd_theorem3(format, &file, family, a1, a1_computed, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, pass)) => {
            print!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

mod figure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jinverse::chain::invert_verified_with;
use jinverse::forward::j_paper;
use jinverse::literal::{format_complex, format_real, parse_complex};
use jinverse::special::table;
use jinverse::sweep::{self, SweepConfig};
use jinverse::verify::verify_table;
use jinverse::{AgmConfig, ComplexScalar, ThetaConfig, UpperHalfPoint};
use serde::Serialize;

const KLEIN_FACTOR: f64 = 1728.0;

#[derive(Debug, Parser)]
#[command(
    name = "jinverse",
    version,
    about = "Evaluate and invert the modular invariant j(τ), normalized so that j(i) = 1"
)]
struct Cli {
    /// Significant digits in printed values.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,

    /// Tolerance for inversion and verification.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tol)]
    tol: f64,

    /// Use Klein's normalization j(i) = 1728 for printed and input values of j.
    #[arg(long, global = true)]
    klein: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate j at a point of the upper half-plane, e.g. `jeval 0.5+1.2i`.
    Jeval {
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Find τ in the fundamental domain with j(τ) = x.
    Jinv {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Check the table of special values and the inverse on each of them.
    Verify {
        /// Also write the report as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Invert seeded random points of [−5, 5] × [−5, 5] and measure the defect.
    Roundtrip {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Replace the first sample by x = 0.
        #[arg(long)]
        include_zero: bool,
    },
    /// Draw the fundamental domain with the table points as SVG.
    Figure {
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}

#[derive(Debug)]
enum Failure {
    Verification(String),
    Usage(String),
    Math(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Math(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Math(m) | Failure::Io(m) => m,
        }
    }
}

impl From<jinverse::Error> for Failure {
    fn from(e: jinverse::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<jinverse::literal::ParseError> for Failure {
    fn from(e: jinverse::literal::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Zero out components below the printed resolution.
fn snap(z: ComplexScalar, digits: u8) -> ComplexScalar {
    let cut = 10f64.powi(-i32::from(digits)) * z.norm().max(1.0);
    let clean = |v: f64| if v.abs() < cut { 0.0 } else { v };
    ComplexScalar::new(clean(z.re), clean(z.im))
}

fn format_value(z: ComplexScalar, digits: u8) -> String {
    let z = snap(z, digits);
    if z.im == 0.0 {
        format_real(z.re, digits.into())
    } else {
        format_complex(z, digits.into())
    }
}

fn jeval(cli: &Cli, tau: &str) -> Result<(), Failure> {
    let tau = UpperHalfPoint::from_complex(parse_complex(tau)?)?;
    let mut j = j_paper(tau, &ThetaConfig::default())?;
    if cli.klein {
        j *= KLEIN_FACTOR;
    }
    println!("{}", format_value(j, cli.digits));
    Ok(())
}

fn jinv(cli: &Cli, x: &str) -> Result<(), Failure> {
    let mut x = parse_complex(x)?;
    if cli.klein {
        x /= KLEIN_FACTOR;
    }
    let r = invert_verified_with(x, cli.tol, &AgmConfig::default(), &ThetaConfig::default())?;
    println!(
        "tau: {}",
        format_complex(snap(r.tau.to_complex(), cli.digits), cli.digits.into())
    );
    println!("branch: {}", r.branch_used);
    println!("residual: {:.3e}", r.residual);
    Ok(())
}

#[derive(Serialize)]
struct RowRecord<'a> {
    label: &'a str,
    tau: [f64; 2],
    expected: f64,
    forward: f64,
    rel_err: f64,
    roundtrip_ok: bool,
}

fn verify(cli: &Cli, json: Option<&PathBuf>) -> Result<(), Failure> {
    let report = verify_table(cli.tol, &AgmConfig::default(), &ThetaConfig::default());
    let scale = if cli.klein { KLEIN_FACTOR } else { 1.0 };
    let digits = cli.digits.into();
    for row in &report.rows {
        println!(
            "{:>2}  {:<18}  expected {}  forward {}  rel_err {:.2e}  roundtrip {}  {}",
            row.order_index,
            row.label,
            format_real(row.expected * scale, digits),
            format_real(row.forward * scale, digits),
            row.rel_err,
            if row.roundtrip_ok { "ok" } else { "failed" },
            if row.passed(report.tol) {
                "PASS"
            } else {
                "FAIL"
            },
        );
    }
    println!(
        "ascending: {}",
        if report.ascending { "ok" } else { "FAILED" }
    );
    let passed = report.rows.len() - report.failed_rows();
    println!(
        "rows passed: {passed}/{} at tol {:e}",
        report.rows.len(),
        report.tol
    );

    if let Some(path) = json {
        let records: Vec<RowRecord> = report
            .rows
            .iter()
            .map(|row| RowRecord {
                label: &row.label,
                tau: [row.tau.re(), row.tau.im()],
                expected: row.expected * scale,
                forward: row.forward * scale,
                rel_err: row.rel_err,
                roundtrip_ok: row.roundtrip_ok,
            })
            .collect();
        let text =
            serde_json::to_string_pretty(&records).map_err(|e| Failure::Io(e.to_string()))?;
        std::fs::write(path, text + "\n")
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }

    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "verification failed: {} row(s) failed, ascending {}",
            report.failed_rows(),
            if report.ascending { "ok" } else { "failed" }
        )))
    }
}

fn roundtrip(cli: &Cli, samples: u64, seed: u64, include_zero: bool) -> Result<(), Failure> {
    let samples = usize::try_from(samples)
        .map_err(|_| Failure::Usage(format!("too many samples: {samples}")))?;
    let mut cfg = SweepConfig::new(samples, seed, cli.tol);
    cfg.include_zero = include_zero;
    let s = sweep::run(&cfg);
    println!("samples: {}", s.samples);
    println!("seed: {seed}");
    println!("successes: {}", s.successes());
    println!("max defect: {:.3e}", s.max_defect());
    println!("median defect: {:.3e}", s.median_defect());
    for (label, count) in sweep::branch_labels().iter().zip(s.branch_histogram) {
        println!("branch {label}: {count}");
    }
    for f in &s.failures {
        eprintln!("failed at x = {}: {}", format_complex(f.x, 17), f.error);
    }
    let limit = 10.0 * cli.tol;
    if s.failures.is_empty() && s.max_defect() <= limit {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "round trip failed: {} failure(s), max defect {:.3e} (limit {limit:.1e})",
            s.failures.len(),
            s.max_defect()
        )))
    }
}

fn draw(out: &PathBuf) -> Result<(), Failure> {
    let svg = figure::render(&table());
    std::fs::write(out, svg).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Jeval { tau } => jeval(&cli, tau),
        Command::Jinv { x } => jinv(&cli, x),
        Command::Verify { json } => verify(&cli, json.as_ref()),
        Command::Roundtrip {
            samples,
            seed,
            include_zero,
        } => roundtrip(&cli, *samples, *seed, *include_zero),
        Command::Figure { out } => draw(out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("jinverse: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

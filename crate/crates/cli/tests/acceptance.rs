//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jinverse::chain::{invert_verified, k1, BranchChoice};
use jinverse::forward::{j_paper, lambda_from_theta, theta_nullwerte};
use jinverse::numerics::{agm, principal_sqrt};
use jinverse::reduction::is_equivalent;
use jinverse::special::{check_ascending, evaluate_entry, table};
use jinverse::sweep::{branch_labels, run, SweepConfig};
use jinverse::{AgmConfig, ThetaConfig, UpperHalfPoint};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jinverse"))
}

fn special_values_forward() -> Outcome {
    let start = Instant::now();
    let cfg = ThetaConfig::default();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for row in table() {
        let v = evaluate_entry(&row);
        let err = match j_paper(row.tau, &cfg) {
            Ok(j) => (j - v).norm() / (1.0 + v.abs()),
            Err(_) => f64::INFINITY,
        };
        worst = worst.max(err);
        if err > 1e-9 {
            bad.push(row.label);
        }
    }
    let elapsed = start.elapsed();
    check(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("19 rows, worst rel err {worst:.2e}, {elapsed:.2?}, failing {bad:?}"),
    )
}

fn inverse_round_trip() -> Outcome {
    let agm_cfg = AgmConfig::default();
    let theta = ThetaConfig::default();
    let mut bad = Vec::new();
    let mut non_default = 0;
    for row in table() {
        let ok = match invert_verified(Complex64::new(evaluate_entry(&row), 0.0), 1e-8, &agm_cfg) {
            Ok(r) => {
                if r.branch_used != BranchChoice::default() {
                    non_default += 1;
                }
                is_equivalent(r.tau, row.tau, 1e-8, &theta).unwrap_or(false)
            }
            Err(_) => false,
        };
        if !ok {
            bad.push(row.label);
        }
    }
    check(
        bad.is_empty(),
        format!("19 rows, {non_default} needed a non-default branch, failing {bad:?}"),
    )
}

fn ascending_chain() -> Outcome {
    let rows = table();
    check(
        check_ascending(&rows),
        format!("{} rows in strictly increasing order", rows.len()),
    )
}

fn random_round_trip() -> Outcome {
    let start = Instant::now();
    let s = run(&SweepConfig::new(1000, 1, 1e-8));
    let elapsed = start.elapsed();
    let histogram: Vec<String> = branch_labels()
        .iter()
        .zip(s.branch_histogram)
        .map(|(l, n)| format!("{l}: {n}"))
        .collect();
    check(
        s.successes() == 1000 && s.max_defect() <= 1e-8 && elapsed < Duration::from_secs(5),
        format!(
            "{}/1000 succeeded, max defect {:.2e}, median {:.2e}, {elapsed:.2?}; branches [{}]",
            s.successes(),
            s.max_defect(),
            s.median_defect(),
            histogram.join(", ")
        ),
    )
}

fn theta_consistency() -> Outcome {
    let cfg = ThetaConfig::default();
    let mut rng = SplitMix64::seed_from_u64(5);
    let mut jacobi = 0.0f64;
    let mut invariance = 0.0f64;
    for _ in 0..100 {
        let re = rng.random_range(-0.5..=0.5);
        let im = (1.0f64 - re * re).sqrt() + rng.random_range(0.0..3.0);
        let t = UpperHalfPoint::new(re, im).unwrap();
        let th = theta_nullwerte(t, &cfg).map_err(|e| e.to_string())?;
        let r = (th.theta2.powi(4) + th.theta4.powi(4) - th.theta3.powi(4)).norm()
            / th.theta3.norm().powi(4);
        jacobi = jacobi.max(r);

        let t = UpperHalfPoint::new(re, rng.random_range(0.5..3.0)).unwrap();
        let j = j_paper(t, &cfg).map_err(|e| e.to_string())?;
        let shifted = j_paper(UpperHalfPoint::new(re + 1.0, t.im()).unwrap(), &cfg)
            .map_err(|e| e.to_string())?;
        let inverted = j_paper(
            UpperHalfPoint::from_complex(-t.to_complex().inv()).unwrap(),
            &cfg,
        )
        .map_err(|e| e.to_string())?;
        let scale = 1.0 + j.norm();
        invariance = invariance
            .max((shifted - j).norm() / scale)
            .max((inverted - j).norm() / scale);
    }
    let lambda_i = lambda_from_theta(UpperHalfPoint::new(0.0, 1.0).unwrap(), &cfg)
        .map_err(|e| e.to_string())?;
    let lambda_err = (lambda_i - 0.5).norm();
    check(
        jacobi <= 1e-12 && lambda_err <= 1e-12 && invariance <= 1e-9,
        format!("Jacobi {jacobi:.2e}, |λ(i) − 1/2| {lambda_err:.2e}, invariance {invariance:.2e}"),
    )
}

fn agm_kernel() -> Outcome {
    let cfg = AgmConfig::default();
    let m = agm(
        Complex64::new(1.0, 0.0),
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        &cfg,
    )
    .map_err(|e| e.to_string())?;
    let value_err = (m - 0.847_213_084_8).norm();
    let mut rng = SplitMix64::seed_from_u64(6);
    let mut symmetry = 0.0f64;
    let mut homogeneity = 0.0f64;
    let mut pairs = 0;
    while pairs < 1000 {
        let mut draw = || Complex64::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let (a, b) = (draw(), draw());
        if a.norm() < 1e-3 || b.norm() < 1e-3 || (a + b).norm() < 1e-3 {
            continue;
        }
        let t = 10f64.powf(rng.random_range(-3.0..3.0));
        let ab = agm(a, b, &cfg).map_err(|e| e.to_string())?;
        let ba = agm(b, a, &cfg).map_err(|e| e.to_string())?;
        let scaled = agm(a * t, b * t, &cfg).map_err(|e| e.to_string())?;
        symmetry = symmetry.max((ab - ba).norm() / ab.norm());
        homogeneity = homogeneity.max((scaled - ab * t).norm() / (ab * t).norm());
        pairs += 1;
    }
    check(
        value_err <= 1e-10 && symmetry <= 1e-14 && homogeneity <= 1e-14,
        format!(
            "agm(1, 1/√2) = {:.12}, symmetry {symmetry:.2e}, homogeneity {homogeneity:.2e}",
            m.re
        ),
    )
}

fn stability() -> Outcome {
    let x = Complex64::new(1e16, 0.0);
    let reference = Complex64::new(2.0, 0.0) / (principal_sqrt(x + 4.0) + principal_sqrt(x));
    let k1_err = (k1(x) - reference).norm() / reference.norm();
    // 50-digit recomputations of the two rows built on A = 33 + 24√2 ∓ 4√(140 + 99√2).
    let rows = table();
    let a_rows = [
        (0usize, -165.513_888_586_345_4_f64),
        (18usize, 3_912_712_369_665_429_647.842_233_413_07_f64),
    ];
    let mut a_err = 0.0f64;
    for (k, want) in a_rows {
        a_err = a_err.max((evaluate_entry(&rows[k]) - want).abs() / want.abs());
    }
    check(
        k1_err <= 1e-12 && a_err <= 1e-10,
        format!("k1(1e16) rel err {k1_err:.2e}, A rows rel err {a_err:.2e}"),
    )
}

fn cli_contract() -> Outcome {
    let verify = bin().arg("verify").output().map_err(|e| e.to_string())?;
    let verify_ok = verify.status.code() == Some(0);

    let jinv = bin()
        .args(["jinv", "166.375"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&jinv.stdout);
    let tau = text
        .lines()
        .find_map(|l| l.strip_prefix("tau:"))
        .and_then(|t| jinverse::literal::parse_complex(t.trim()).ok());
    let tau_err = tau.map_or(f64::INFINITY, |t| (t - Complex64::new(0.0, 2.0)).norm());

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("domain.svg");
    let figure = bin()
        .arg("figure")
        .arg("--out")
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let svg = std::fs::read_to_string(&path).unwrap_or_default();
    let markers = match roxmltree::Document::parse(&svg) {
        Ok(doc) if doc.root_element().has_tag_name("svg") => doc
            .descendants()
            .filter(|n| n.has_tag_name("circle"))
            .filter(|n| {
                n.attribute("class")
                    .is_some_and(|c| c.split(' ').any(|w| w == "marker"))
            })
            .count(),
        _ => 0,
    };
    check(
        verify_ok && tau_err <= 1e-8 && figure.status.success() && markers >= 18,
        format!(
            "verify exit {:?}, jinv 166.375 |τ − 2i| = {tau_err:.2e}, figure exit {:?} with {markers} markers",
            verify.status.code(),
            figure.status.code()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("special-values forward check", special_values_forward),
        ("inverse round trip on the table", inverse_round_trip),
        ("ascending chain", ascending_chain),
        ("random round trip", random_round_trip),
        ("theta self-consistency", theta_consistency),
        ("AGM kernel", agm_kernel),
        ("stability", stability),
        ("CLI contract", cli_contract),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

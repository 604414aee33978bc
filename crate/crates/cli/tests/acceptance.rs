//! Acceptance suite. Each test prints one `acceptance: <criterion>: pass`
//! line (visible with `--nocapture`) and fails loudly otherwise.
//!
//! Run with: cargo test -p wellbuilt-cli --test acceptance -- --nocapture

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wellbuilt_core::{
    apply_rational_similarity, central_angle_cosine, dihedral_cosine, float_oracle_dihedral, rat,
    rat_int, rat_to_f64, run_ledger, standard_simplex, RatVector, SignedPermutation,
};

fn criterion(name: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("acceptance: {name}: pass"),
        Err(why) => println!("acceptance: {name}: FAIL ({why})"),
    }
    if let Err(why) = result {
        panic!("{name}: {why}");
    }
}

fn wellbuilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wellbuilt"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn c01_well_built_sweep_to_64_is_exact_and_fast() {
    criterion(
        "well-built ratio = n^2 for n <= 64, under 10s",
        (|| {
            let start = Instant::now();
            for n in 1..=64usize {
                let s = standard_simplex(n);
                let want = rat_int((n * n) as i64);
                for v in [0, n / 2] {
                    let got = s.well_built_ratio(v).map_err(|e| e.to_string())?;
                    if got != want {
                        return Err(format!("n={n} vertex {v}: ratio {got}"));
                    }
                }
            }
            let elapsed = start.elapsed();
            if elapsed >= Duration::from_secs(10) {
                return Err(format!("sweep took {elapsed:?}"));
            }
            Ok(())
        })(),
    );
}

#[test]
fn c02_dihedral_law_to_64() {
    criterion(
        "dihedral cosine = 1/n for n <= 64",
        (|| {
            for n in 2..=64usize {
                let got = dihedral_cosine(n).map_err(|e| e.to_string())?;
                if got != rat(1, n as i64) {
                    return Err(format!("n={n}: {got}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c03_central_angle_law_to_64() {
    criterion(
        "central cosine = -1/n for n <= 64",
        (|| {
            for n in 2..=64usize {
                let got = central_angle_cosine(n).map_err(|e| e.to_string())?;
                if got != rat(-1, n as i64) {
                    return Err(format!("n={n}: {got}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c04_full_ledger_to_32() {
    criterion(
        "all 27 ledger entries pass for n <= 32",
        (|| {
            for n in 2..=32usize {
                let results = run_ledger(n).map_err(|e| e.to_string())?;
                if results.len() != 27 {
                    return Err(format!("n={n}: {} entries", results.len()));
                }
                for id in ["S5.3", "S5.4", "S5.7"] {
                    if !results.iter().any(|r| r.lemma_id == id) {
                        return Err(format!("n={n}: scene certificate {id} missing"));
                    }
                }
                if let Some(r) = results.iter().find(|r| !r.passed) {
                    return Err(format!("n={n}: {} failed [{}]", r.lemma_id, r.witness));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c05_altitude_hypotheses_to_32() {
    criterion(
        "altitudes congruent, concurrent, and internal for n <= 32",
        (|| {
            for n in 1..=32usize {
                let check = standard_simplex(n)
                    .verify_altitude_properties()
                    .map_err(|e| e.to_string())?;
                if check.records.len() != n + 1 {
                    return Err(format!("n={n}: incomplete report"));
                }
                if !check.all_pass() {
                    return Err(format!("n={n}: an altitude check failed"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c06_oracle_agreement_to_32() {
    criterion(
        "float oracle within 1e-9 of exact for n <= 32",
        (|| {
            for n in 2..=32usize {
                let exact = rat_to_f64(&dihedral_cosine(n).map_err(|e| e.to_string())?);
                let approx = float_oracle_dihedral(n).map_err(|e| e.to_string())?;
                let err = (exact - approx).abs();
                if err.is_nan() || err > 1e-9 {
                    return Err(format!("n={n}: |{exact} - {approx}| = {err}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c07_angle_table_spot_checks() {
    criterion(
        "table reports 60, 70.528779 and 109.471221 degrees",
        (|| {
            let out = wellbuilt(&["table", "--from", "2", "--to", "3", "--format", "csv"]);
            if out.status.code() != Some(0) {
                return Err(format!("exit {:?}", out.status.code()));
            }
            let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
            let lines: Vec<&str> = text.lines().collect();
            if lines[1] != "2,1/2,60.000000,-1/2,120.000000" {
                return Err(format!("n=2 row: {}", lines[1]));
            }
            let row3: Vec<&str> = lines[2].split(',').collect();
            if row3[2] != "70.528779" || row3[4] != "109.471221" {
                return Err(format!("n=3 row: {}", lines[2]));
            }
            // printed degrees must match arccos of the exact cosines
            for (cos, printed) in [
                (0.5, "60.000000"),
                (1.0 / 3.0, "70.528779"),
                (-1.0 / 3.0, "109.471221"),
            ] {
                let want = cos_to_degrees(cos);
                let got: f64 = printed
                    .parse()
                    .map_err(|e: std::num::ParseFloatError| e.to_string())?;
                if (got - want).abs() >= 5e-7 {
                    return Err(format!("{printed} vs arccos {want}"));
                }
            }
            Ok(())
        })(),
    );
}

fn cos_to_degrees(c: f64) -> f64 {
    c.acos().to_degrees()
}

#[test]
fn c08_similarity_invariance_100_transforms() {
    criterion(
        "100 random similarities leave ratio and cosines unchanged",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for round in 0..100 {
                let n: usize = rng.gen_range(2..=6);
                let dim = n + 1;
                let s = standard_simplex(n);

                let scale = rat(rng.gen_range(1..=60), rng.gen_range(1..=60));
                let mut targets: Vec<usize> = (0..dim).collect();
                targets.shuffle(&mut rng);
                let negate: Vec<bool> = (0..dim).map(|_| rng.gen()).collect();
                let perm = SignedPermutation::new(targets, negate).map_err(|e| e.to_string())?;
                let shift = RatVector::new(
                    (0..dim)
                        .map(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=12)))
                        .collect(),
                );

                let image = apply_rational_similarity(&s, &scale, &perm, &shift)
                    .map_err(|e| format!("round {round}: {e}"))?;
                let checks = [
                    (image.well_built_ratio(0), s.well_built_ratio(0)),
                    (image.dihedral_cosine_at(0, 1), s.dihedral_cosine_at(0, 1)),
                    (
                        image.central_angle_cosine_at(0, 1),
                        s.central_angle_cosine_at(0, 1),
                    ),
                ];
                for (got, want) in checks {
                    let got = got.map_err(|e| e.to_string())?;
                    let want = want.map_err(|e| e.to_string())?;
                    if got != want {
                        return Err(format!("round {round} (n={n}): {got} != {want}"));
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c09_fault_injections_exit_one() {
    criterion(
        "each of 8 point injections fails the ledger with exit 1",
        (|| {
            let specs = [
                "A:1:1/1000",
                "B:2:-1/1000",
                "C:4:1/7",
                "D:3:1/1000",
                "E:4:1/1000",
                "F:1:-2/5",
                "G:2:1/9",
                "H:1:1/13",
            ];
            for spec in specs {
                let out = wellbuilt(&[
                    "verify",
                    "--max-dim",
                    "4",
                    "--format",
                    "json",
                    "--inject",
                    spec,
                ]);
                if out.status.code() != Some(1) {
                    return Err(format!("{spec}: exit {:?}", out.status.code()));
                }
                let doc: serde_json::Value =
                    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
                let failed_lemmas = doc["entries"]
                    .as_array()
                    .ok_or("entries missing")?
                    .iter()
                    .flat_map(|e| e["ledger"].as_array().cloned().unwrap_or_default())
                    .filter(|l| l["passed"] == false)
                    .count();
                if failed_lemmas == 0 {
                    return Err(format!("{spec}: no ledger failure recorded"));
                }
                if doc["summary"]["failed"].as_u64() == Some(0) {
                    return Err(format!("{spec}: summary shows no failure"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn c10_golden_outputs_are_deterministic() {
    criterion(
        "verify and table outputs for max dim 8 are byte-identical",
        (|| {
            let json_args = ["verify", "--max-dim", "8", "--format", "json"];
            let first = wellbuilt(&json_args);
            let second = wellbuilt(&json_args);
            if first.status.code() != Some(0) {
                return Err(format!("verify exit {:?}", first.status.code()));
            }
            if first.stdout != second.stdout {
                return Err("verify JSON differs between runs".into());
            }
            let doc: serde_json::Value =
                serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
            if doc["n_max"] != 8 || doc["entries"].as_array().map(|e| e.len()) != Some(7) {
                return Err("unexpected report shape".into());
            }
            let n3 = &doc["entries"][1];
            if n3["n"] != 3 || n3["dihedral_cos"]["num"] != "1" || n3["dihedral_cos"]["den"] != "3"
            {
                return Err(format!("entry n=3 malformed: {n3}"));
            }
            if doc["summary"]["passed"] != 7 || doc["summary"]["failed"] != 0 {
                return Err(format!("summary: {}", doc["summary"]));
            }

            let csv_args = ["table", "--from", "2", "--to", "8", "--format", "csv"];
            let first = wellbuilt(&csv_args);
            let second = wellbuilt(&csv_args);
            if first.status.code() != Some(0) {
                return Err(format!("table exit {:?}", first.status.code()));
            }
            if first.stdout != second.stdout {
                return Err("table CSV differs between runs".into());
            }
            Ok(())
        })(),
    );
}

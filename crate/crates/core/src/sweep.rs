//! The certification sweep: for every dimension up to a bound, check the
//! well-built ratio, both exact angle laws, the lemma ledger for the step
//! to the next dimension, and agreement with the floating-point oracle.

use rayon::prelude::*;

use crate::error::{GeometryError, Result};
use crate::ledger::{run_ledger_on, LemmaResult};
use crate::oracle::float_oracle_dihedral;
use crate::rational::{rat, rat_int, rat_to_f64, Rational};
use crate::scene::{build_construction, Injection};
use crate::simplex::{central_angle_cosine, dihedral_cosine, standard_simplex};

/// Tolerance for the exact-versus-floating-point cross-check.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Everything certified about one dimension. The ledger covers the step
/// from `n` to `n+1`, so the final dimension of a sweep carries none.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEntry {
    pub n: usize,
    pub well_built: bool,
    pub dihedral_cos: Rational,
    pub central_cos: Rational,
    pub ledger: Vec<LemmaResult>,
    pub oracle_abs_err: f64,
}

impl DimensionEntry {
    pub fn passed(&self) -> bool {
        let n = self.n as i64;
        self.well_built
            && self.dihedral_cos == rat(1, n)
            && self.central_cos == rat(-1, n)
            && self.ledger.iter().all(|r| r.passed)
            && self.oracle_abs_err.is_finite()
            && self.oracle_abs_err <= ORACLE_TOLERANCE
    }
}

/// Aggregated sweep outcome over dimensions 2..=n_max.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    pub n_max: usize,
    pub entries: Vec<DimensionEntry>,
}

impl CertificationReport {
    pub fn passed_count(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn failed_count(&self) -> usize {
        self.entries.len() - self.passed_count()
    }

    pub fn overall(&self) -> bool {
        self.failed_count() == 0
    }
}

fn build_entry(n: usize, n_max: usize, injection: Option<&Injection>) -> Result<DimensionEntry> {
    let simplex = standard_simplex(n);
    let ratio = simplex.well_built_ratio(0)?;
    let well_built = ratio == rat_int((n * n) as i64);

    let dihedral_cos = dihedral_cosine(n)?;
    let central_cos = central_angle_cosine(n)?;

    let ledger = if n < n_max {
        let scene = build_construction(n)?;
        let scene = match injection {
            Some(inj) => scene.perturb(inj),
            None => scene,
        };
        run_ledger_on(&scene)?
    } else {
        Vec::new()
    };

    let oracle_abs_err = match float_oracle_dihedral(n) {
        Ok(approx) => (rat_to_f64(&dihedral_cos) - approx).abs(),
        Err(_) => f64::INFINITY,
    };

    Ok(DimensionEntry {
        n,
        well_built,
        dihedral_cos,
        central_cos,
        ledger,
        oracle_abs_err,
    })
}

/// Runs the sweep, optionally with a fault injection applied to every
/// constructed scene. Entries are computed in parallel but aggregated in
/// dimension order.
pub fn induction_sweep_with(
    n_max: usize,
    injection: Option<&Injection>,
) -> Result<CertificationReport> {
    if n_max < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: n_max });
    }
    let entries = (2..=n_max)
        .into_par_iter()
        .map(|n| build_entry(n, n_max, injection))
        .collect::<Result<Vec<_>>>()?;
    Ok(CertificationReport { n_max, entries })
}

/// The plain sweep over 2..=n_max.
pub fn induction_sweep(n_max: usize) -> Result<CertificationReport> {
    induction_sweep_with(n_max, None)
}

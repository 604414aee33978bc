//! Report documents: the JSON certificate schema, plain-text rendering,
//! the angle table, and the scene dump. Rationals travel as decimal
//! strings because JSON numbers cannot carry big integers losslessly.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::rational::{rat_display, rat_to_f64, Rational};
use crate::scene::ConstructionScene;
use crate::simplex::{central_angle_cosine, dihedral_cosine};
use crate::sweep::CertificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

impl RationalDoc {
    pub fn of(r: &Rational) -> RationalDoc {
        RationalDoc {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaDoc {
    pub lemma_id: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub n: usize,
    pub well_built: bool,
    pub dihedral_cos: RationalDoc,
    pub central_cos: RationalDoc,
    pub ledger: Vec<LemmaDoc>,
    pub oracle_abs_err: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub n_max: usize,
    pub entries: Vec<EntryDoc>,
    pub summary: SummaryDoc,
}

impl ReportDocument {
    pub fn from_report(report: &CertificationReport) -> ReportDocument {
        let entries = report
            .entries
            .iter()
            .map(|e| EntryDoc {
                n: e.n,
                well_built: e.well_built,
                dihedral_cos: RationalDoc::of(&e.dihedral_cos),
                central_cos: RationalDoc::of(&e.central_cos),
                ledger: e
                    .ledger
                    .iter()
                    .map(|r| LemmaDoc {
                        lemma_id: r.lemma_id.to_string(),
                        passed: r.passed,
                        witness: r.witness.clone(),
                    })
                    .collect(),
                oracle_abs_err: format!("{:.3e}", e.oracle_abs_err),
            })
            .collect();
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            n_max: report.n_max,
            entries,
            summary: SummaryDoc {
                passed: report.passed_count(),
                failed: report.failed_count(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Human-readable sweep rendering; failing ledger entries are expanded.
pub fn render_report_text(report: &CertificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "certification sweep over n = 2..={}\n\n",
        report.n_max
    ));
    for e in &report.entries {
        let ledger_note = if e.ledger.is_empty() {
            "-".to_string()
        } else {
            format!(
                "{}/{}",
                e.ledger.iter().filter(|r| r.passed).count(),
                e.ledger.len()
            )
        };
        out.push_str(&format!(
            "n={:<3} {}  well-built={}  dihedral={}  central={}  oracle-err={:.3e}  ledger={}\n",
            e.n,
            if e.passed() { "ok  " } else { "FAIL" },
            e.well_built,
            rat_display(&e.dihedral_cos),
            rat_display(&e.central_cos),
            e.oracle_abs_err,
            ledger_note,
        ));
        for r in e.ledger.iter().filter(|r| !r.passed) {
            out.push_str(&format!(
                "      failed {}: {} [{}]\n",
                r.lemma_id, r.statement, r.witness
            ));
        }
    }
    out.push_str(&format!(
        "\nsummary: {} passed, {} failed\n",
        report.passed_count(),
        report.failed_count()
    ));
    out
}

/// One row of the angle table: exact cosines plus their floating-point
/// angles in degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleRow {
    pub n: usize,
    pub dihedral_cos: Rational,
    pub dihedral_deg: f64,
    pub central_cos: Rational,
    pub central_deg: f64,
}

/// Exact cosines and floating-point degrees for every n in `from..=to`.
pub fn angle_table(from: usize, to: usize) -> Result<Vec<AngleRow>> {
    if from < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: from });
    }
    if from > to {
        return Err(GeometryError::Degenerate(format!(
            "empty dimension range {from}..={to}"
        )));
    }
    (from..=to)
        .map(|n| {
            let dihedral_cos = dihedral_cosine(n)?;
            let central_cos = central_angle_cosine(n)?;
            let dihedral_deg = rat_to_f64(&dihedral_cos).acos().to_degrees();
            let central_deg = rat_to_f64(&central_cos).acos().to_degrees();
            Ok(AngleRow {
                n,
                dihedral_cos,
                dihedral_deg,
                central_cos,
                central_deg,
            })
        })
        .collect()
}

pub fn render_table_csv(rows: &[AngleRow]) -> String {
    let mut out = String::from("n,dihedral_cos,dihedral_deg,central_cos,central_deg\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.6},{},{:.6}\n",
            r.n,
            rat_display(&r.dihedral_cos),
            r.dihedral_deg,
            rat_display(&r.central_cos),
            r.central_deg,
        ));
    }
    out
}

pub fn render_table_text(rows: &[AngleRow]) -> String {
    let mut out = format!(
        "{:>4}  {:>14}  {:>12}  {:>14}  {:>12}\n",
        "n", "dihedral_cos", "dihedral_deg", "central_cos", "central_deg"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>4}  {:>14}  {:>12.6}  {:>14}  {:>12.6}\n",
            r.n,
            rat_display(&r.dihedral_cos),
            r.dihedral_deg,
            rat_display(&r.central_cos),
            r.central_deg,
        ));
    }
    out
}

/// Exact coordinate dump of a construction scene.
pub fn render_scene_text(scene: &ConstructionScene) -> String {
    let mut out = format!(
        "construction over base dimension {} (ambient {})\n",
        scene.base_dim, scene.ambient
    );
    for (label, point) in scene.points() {
        out.push_str(&format!("{label} = {}\n", point.display()));
    }
    out.push_str(&format!(
        "circle: center B = {}, squared radius = {}\n",
        scene.circle_center.display(),
        rat_display(&scene.circle_sq_radius)
    ));
    out.push_str(&format!(
        "plane basis at A: {} and {}\n",
        scene.plane_basis[0].display(),
        scene.plane_basis[1].display()
    ));
    out
}

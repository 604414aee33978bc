//! Exact rational geometry for regular simplices.
//!
//! The kernel ([`rational`], [`vector`], [`predicates`]) decides every
//! length and angle claim over arbitrary-precision rationals: lengths are
//! compared as squares and angles as (cos², sign) witnesses, so the
//! standard-basis embedding never forces a radical or a tolerance.
//!
//! On top of it, [`simplex`] certifies altitude properties, the well-built
//! ratio AO : OH = n : 1, and the two angle laws (dihedral cosine 1/n,
//! centroid-spoke cosine −1/n); [`scene`] and [`ledger`] rebuild the planar
//! construction behind the induction step and check its 27-entry lemma
//! catalog; [`sweep`] runs everything across a dimension range against an
//! independent floating-point [`oracle`]; [`report`] and [`svg`] emit
//! machine-readable certificates, angle tables, and figures.

pub mod error;
pub mod ledger;
pub mod oracle;
pub mod predicates;
pub mod rational;
pub mod report;
pub mod scene;
pub mod similarity;
pub mod simplex;
pub mod svg;
pub mod sweep;
pub mod vector;

pub use error::{GeometryError, Result};
pub use ledger::{catalog_ids, check_lemma, run_ledger, run_ledger_on, LemmaResult};
pub use oracle::float_oracle_dihedral;
pub use predicates::{
    cosine_witness, intersect_lines, rank, rank_le, segment_parameter, CosineWitness,
};
pub use rational::{rat, rat_display, rat_int, rat_to_f64, Rational, Sign};
pub use report::{
    angle_table, render_report_text, render_scene_text, render_table_csv, render_table_text,
    AngleRow, ReportDocument,
};
pub use scene::{build_construction, ConstructionScene, Injection, PointLabel};
pub use similarity::{apply_rational_similarity, SignedPermutation};
pub use simplex::{
    central_angle_cosine, dihedral_cosine, standard_simplex, AltitudeCheck, AltitudeRecord, Simplex,
};
pub use svg::scene_svg;
pub use sweep::{
    induction_sweep, induction_sweep_with, CertificationReport, DimensionEntry, ORACLE_TOLERANCE,
};
pub use vector::{centroid, dot, sq_dist, RatPoint, RatVector};

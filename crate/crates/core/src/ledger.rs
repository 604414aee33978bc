//! The lemma ledger: every claim about the construction scene as an exact
//! predicate with a re-checkable witness. Entries prefixed `S` certify the
//! scene's defining incidences; entries prefixed `L` are the derived facts
//! the induction step rests on.

use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::predicates::{cosine_witness, rank, rank_le, segment_parameter, CosineWitness};
use crate::rational::{rat_display, rat_int, Rational};
use crate::scene::{build_construction, ConstructionScene};
use crate::vector::{dot, sq_dist, RatPoint};

/// Outcome of one ledger entry. The witness carries the exact quantities
/// compared, so a reader can re-verify the predicate without rerunning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaResult {
    pub lemma_id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub witness: String,
}

type Check = fn(&ConstructionScene) -> Result<(bool, String)>;

const CATALOG: [(&str, &str, Check); 27] = [
    ("S5.3", "A through H lie in one plane through A, B, C", s5_3),
    ("S5.4", "D lies strictly between C and F", s5_4),
    ("S5.7", "E lies strictly between C and B", s5_7),
    ("L5.11", "segments AB and CB are congruent", l5_11),
    (
        "L5.12",
        "(n+1)AF = n.AB and (n+1)CE = n.CB along the two altitudes",
        l5_12,
    ),
    ("L5.13", "segments AF and CE are congruent", l5_13),
    ("L5.14", "segments EB and BF are congruent", l5_14),
    ("L5.15a", "segments BG and BF are congruent", l5_15a),
    ("L5.15b", "segments AE and CF are congruent", l5_15b),
    ("L5.16", "angles CFA, CFB, AEC, AEB are right", l5_16),
    (
        "L5.17",
        "vertical angles ADF and CDE at the crossing of lines AE and CF are congruent",
        l5_17,
    ),
    (
        "L5.18",
        "triangles ADF and CDE have pairwise congruent sides",
        l5_18,
    ),
    ("L5.19", "segments DF and DE are congruent", l5_19),
    (
        "L5.21",
        "B is the midpoint of EG, so BE, BF, BG are congruent radii of the circle",
        l5_21,
    ),
    ("L5.22", "angle EFG on the diameter EG is right", l5_22),
    (
        "L5.23",
        "triangles DFB and DEB have pairwise congruent sides (DB shared)",
        l5_23,
    ),
    ("L5.24", "H is the midpoint of EF", l5_24),
    ("L5.25", "triangles EBF and FBG are isosceles at B", l5_25),
    ("L5.26", "angle EHB is right", l5_26),
    (
        "L5.27",
        "base angles BGF and BFG of the isosceles triangle FBG are congruent",
        l5_27,
    ),
    ("L5.28", "angles BFE and BFG are complementary", l5_28),
    (
        "L5.29",
        "base angles BFE and BEF of the isosceles triangle BEF are congruent",
        l5_29,
    ),
    ("L5.30", "angles EBH and HEB are complementary", l5_30),
    ("L5.31", "angles EBH and BFG are congruent", l5_31),
    ("L5.32", "DB is parallel to FG", l5_32),
    (
        "L5.33",
        "CD:DF = CB:BG along the two lines through C",
        l5_33,
    ),
    ("L5.35", "CD = (n+1).DF", l5_35),
];

/// Ids of every catalog entry, in evaluation order.
pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|(id, _, _)| *id).collect()
}

/// Evaluates one catalog entry against a scene. A predicate that cannot be
/// evaluated on a (typically perturbed) scene counts as failed, with the
/// reason recorded in the witness.
pub fn check_lemma(scene: &ConstructionScene, lemma_id: &str) -> Result<LemmaResult> {
    let (id, statement, check) = CATALOG
        .iter()
        .find(|(id, _, _)| *id == lemma_id)
        .ok_or_else(|| GeometryError::UnknownLemma(lemma_id.to_string()))?;
    let (passed, witness) = match check(scene) {
        Ok(outcome) => outcome,
        Err(e) => (false, format!("not evaluable: {e}")),
    };
    Ok(LemmaResult {
        lemma_id: id,
        statement,
        passed,
        witness,
    })
}

/// Evaluates the full catalog, in order, on an already-built scene.
pub fn run_ledger_on(scene: &ConstructionScene) -> Result<Vec<LemmaResult>> {
    CATALOG
        .iter()
        .map(|(id, _, _)| check_lemma(scene, id))
        .collect()
}

/// Builds the scene over base dimension `n` and evaluates the full catalog.
pub fn run_ledger(n: usize) -> Result<Vec<LemmaResult>> {
    run_ledger_on(&build_construction(n)?)
}

fn interior(t: &Rational) -> bool {
    *t > Rational::zero() && *t < Rational::one()
}

fn collinear(p: &RatPoint, q: &RatPoint, r: &RatPoint) -> Result<bool> {
    rank_le(&[q - p, r - p], 1)
}

fn angle(at: &RatPoint, to1: &RatPoint, to2: &RatPoint) -> Result<CosineWitness> {
    cosine_witness(&(to1 - at), &(to2 - at))
}

fn param_witness(name: &str, t: &Option<Rational>) -> String {
    match t {
        Some(t) => format!("{name} = {}", rat_display(t)),
        None => format!("{name}: point is off the line"),
    }
}

fn s5_3(s: &ConstructionScene) -> Result<(bool, String)> {
    let diffs = [&s.b, &s.c, &s.d, &s.e, &s.f, &s.g, &s.h].map(|p| p - &s.a);
    let r = rank(&diffs)?;
    Ok((r <= 2, format!("rank of spans from A = {r}")))
}

fn s5_4(s: &ConstructionScene) -> Result<(bool, String)> {
    let t = segment_parameter(&s.d, &s.c, &s.f)?;
    let pass = t.as_ref().map(interior).unwrap_or(false);
    Ok((pass, param_witness("t with D = C + t(F-C)", &t)))
}

fn s5_7(s: &ConstructionScene) -> Result<(bool, String)> {
    let t = segment_parameter(&s.e, &s.c, &s.b)?;
    let pass = t.as_ref().map(interior).unwrap_or(false);
    Ok((pass, param_witness("t with E = C + t(B-C)", &t)))
}

fn l5_11(s: &ConstructionScene) -> Result<(bool, String)> {
    let ab = sq_dist(&s.a, &s.b)?;
    let cb = sq_dist(&s.c, &s.b)?;
    let w = format!("AB^2 = {}, CB^2 = {}", rat_display(&ab), rat_display(&cb));
    Ok((ab == cb, w))
}

fn l5_12(s: &ConstructionScene) -> Result<(bool, String)> {
    let n = rat_int(s.base_dim as i64);
    let n1 = rat_int(s.base_dim as i64 + 1);
    let (n_sq, n1_sq) = (&n * &n, &n1 * &n1);
    let af = sq_dist(&s.a, &s.f)?;
    let ab = sq_dist(&s.a, &s.b)?;
    let ce = sq_dist(&s.c, &s.e)?;
    let cb = sq_dist(&s.c, &s.b)?;
    let pass = &n1_sq * &af == &n_sq * &ab && &n1_sq * &ce == &n_sq * &cb;
    let w = format!(
        "n = {}, AF^2 = {}, AB^2 = {}, CE^2 = {}, CB^2 = {}",
        s.base_dim,
        rat_display(&af),
        rat_display(&ab),
        rat_display(&ce),
        rat_display(&cb),
    );
    Ok((pass, w))
}

fn l5_13(s: &ConstructionScene) -> Result<(bool, String)> {
    let af = sq_dist(&s.a, &s.f)?;
    let ce = sq_dist(&s.c, &s.e)?;
    let w = format!("AF^2 = {}, CE^2 = {}", rat_display(&af), rat_display(&ce));
    Ok((af == ce, w))
}

fn l5_14(s: &ConstructionScene) -> Result<(bool, String)> {
    let eb = sq_dist(&s.e, &s.b)?;
    let bf = sq_dist(&s.b, &s.f)?;
    let w = format!("EB^2 = {}, BF^2 = {}", rat_display(&eb), rat_display(&bf));
    Ok((eb == bf, w))
}

fn l5_15a(s: &ConstructionScene) -> Result<(bool, String)> {
    let bg = sq_dist(&s.b, &s.g)?;
    let bf = sq_dist(&s.b, &s.f)?;
    let w = format!("BG^2 = {}, BF^2 = {}", rat_display(&bg), rat_display(&bf));
    Ok((bg == bf, w))
}

fn l5_15b(s: &ConstructionScene) -> Result<(bool, String)> {
    let ae = sq_dist(&s.a, &s.e)?;
    let cf = sq_dist(&s.c, &s.f)?;
    let w = format!("AE^2 = {}, CF^2 = {}", rat_display(&ae), rat_display(&cf));
    Ok((ae == cf, w))
}

fn l5_16(s: &ConstructionScene) -> Result<(bool, String)> {
    let cfa = dot(&(&s.c - &s.f), &(&s.a - &s.f))?;
    let cfb = dot(&(&s.c - &s.f), &(&s.b - &s.f))?;
    let aec = dot(&(&s.a - &s.e), &(&s.c - &s.e))?;
    let aeb = dot(&(&s.a - &s.e), &(&s.b - &s.e))?;
    let pass = cfa.is_zero() && cfb.is_zero() && aec.is_zero() && aeb.is_zero();
    let w = format!(
        "FC.FA = {}, FC.FB = {}, EA.EC = {}, EA.EB = {}",
        rat_display(&cfa),
        rat_display(&cfb),
        rat_display(&aec),
        rat_display(&aeb),
    );
    Ok((pass, w))
}

fn l5_17(s: &ConstructionScene) -> Result<(bool, String)> {
    let ade = collinear(&s.a, &s.d, &s.e)?;
    let cdf = collinear(&s.c, &s.d, &s.f)?;
    let adf = angle(&s.d, &s.a, &s.f)?;
    let cde = angle(&s.d, &s.c, &s.e)?;
    let pass = ade && cdf && adf == cde;
    let w = format!(
        "A,D,E collinear = {ade}, C,D,F collinear = {cdf}, ADF = {}, CDE = {}",
        adf.display(),
        cde.display(),
    );
    Ok((pass, w))
}

fn l5_18(s: &ConstructionScene) -> Result<(bool, String)> {
    let ad = sq_dist(&s.a, &s.d)?;
    let cd = sq_dist(&s.c, &s.d)?;
    let df = sq_dist(&s.d, &s.f)?;
    let de = sq_dist(&s.d, &s.e)?;
    let af = sq_dist(&s.a, &s.f)?;
    let ce = sq_dist(&s.c, &s.e)?;
    let pass = ad == cd && df == de && af == ce;
    let w = format!(
        "AD^2 = {}, CD^2 = {}, DF^2 = {}, DE^2 = {}, AF^2 = {}, CE^2 = {}",
        rat_display(&ad),
        rat_display(&cd),
        rat_display(&df),
        rat_display(&de),
        rat_display(&af),
        rat_display(&ce),
    );
    Ok((pass, w))
}

fn l5_19(s: &ConstructionScene) -> Result<(bool, String)> {
    let df = sq_dist(&s.d, &s.f)?;
    let de = sq_dist(&s.d, &s.e)?;
    let w = format!("DF^2 = {}, DE^2 = {}", rat_display(&df), rat_display(&de));
    Ok((df == de, w))
}

fn l5_21(s: &ConstructionScene) -> Result<(bool, String)> {
    let be = sq_dist(&s.b, &s.e)?;
    let bf = sq_dist(&s.b, &s.f)?;
    let bg = sq_dist(&s.b, &s.g)?;
    let twice_b = s.b.scale(&rat_int(2));
    let e_plus_g = &s.e + &s.g;
    let pass = be == bf && bf == bg && twice_b == e_plus_g;
    let w = format!(
        "BE^2 = {}, BF^2 = {}, BG^2 = {}, 2B = {}, E+G = {}",
        rat_display(&be),
        rat_display(&bf),
        rat_display(&bg),
        twice_b.display(),
        e_plus_g.display(),
    );
    Ok((pass, w))
}

fn l5_22(s: &ConstructionScene) -> Result<(bool, String)> {
    let d = dot(&(&s.e - &s.f), &(&s.g - &s.f))?;
    Ok((d.is_zero(), format!("FE.FG = {}", rat_display(&d))))
}

fn l5_23(s: &ConstructionScene) -> Result<(bool, String)> {
    let df = sq_dist(&s.d, &s.f)?;
    let de = sq_dist(&s.d, &s.e)?;
    let fb = sq_dist(&s.f, &s.b)?;
    let eb = sq_dist(&s.e, &s.b)?;
    let db = sq_dist(&s.d, &s.b)?;
    let pass = df == de && fb == eb;
    let w = format!(
        "DF^2 = {}, DE^2 = {}, FB^2 = {}, EB^2 = {}, shared DB^2 = {}",
        rat_display(&df),
        rat_display(&de),
        rat_display(&fb),
        rat_display(&eb),
        rat_display(&db),
    );
    Ok((pass, w))
}

fn l5_24(s: &ConstructionScene) -> Result<(bool, String)> {
    let twice_h = s.h.scale(&rat_int(2));
    let e_plus_f = &s.e + &s.f;
    let pass = twice_h == e_plus_f;
    let w = format!("2H = {}, E+F = {}", twice_h.display(), e_plus_f.display());
    Ok((pass, w))
}

fn l5_25(s: &ConstructionScene) -> Result<(bool, String)> {
    let be = sq_dist(&s.b, &s.e)?;
    let bf = sq_dist(&s.b, &s.f)?;
    let bg = sq_dist(&s.b, &s.g)?;
    let pass = bf == be && bf == bg;
    let w = format!(
        "BE^2 = {}, BF^2 = {}, BG^2 = {}",
        rat_display(&be),
        rat_display(&bf),
        rat_display(&bg),
    );
    Ok((pass, w))
}

fn l5_26(s: &ConstructionScene) -> Result<(bool, String)> {
    let d = dot(&(&s.e - &s.h), &(&s.b - &s.h))?;
    Ok((d.is_zero(), format!("HE.HB = {}", rat_display(&d))))
}

fn l5_27(s: &ConstructionScene) -> Result<(bool, String)> {
    let bgf = angle(&s.g, &s.b, &s.f)?;
    let bfg = angle(&s.f, &s.b, &s.g)?;
    let w = format!("BGF = {}, BFG = {}", bgf.display(), bfg.display());
    Ok((bgf == bfg, w))
}

fn l5_28(s: &ConstructionScene) -> Result<(bool, String)> {
    let bfe = angle(&s.f, &s.b, &s.e)?;
    let bfg = angle(&s.f, &s.b, &s.g)?;
    let w = format!("BFE = {}, BFG = {}", bfe.display(), bfg.display());
    Ok((bfe.complements(&bfg), w))
}

fn l5_29(s: &ConstructionScene) -> Result<(bool, String)> {
    let bfe = angle(&s.f, &s.b, &s.e)?;
    let bef = angle(&s.e, &s.b, &s.f)?;
    let w = format!("BFE = {}, BEF = {}", bfe.display(), bef.display());
    Ok((bfe == bef, w))
}

fn l5_30(s: &ConstructionScene) -> Result<(bool, String)> {
    let ebh = angle(&s.b, &s.e, &s.h)?;
    let heb = angle(&s.e, &s.h, &s.b)?;
    let w = format!("EBH = {}, HEB = {}", ebh.display(), heb.display());
    Ok((ebh.complements(&heb), w))
}

fn l5_31(s: &ConstructionScene) -> Result<(bool, String)> {
    let ebh = angle(&s.b, &s.e, &s.h)?;
    let bfg = angle(&s.f, &s.b, &s.g)?;
    let w = format!("EBH = {}, BFG = {}", ebh.display(), bfg.display());
    Ok((ebh == bfg, w))
}

fn l5_32(s: &ConstructionScene) -> Result<(bool, String)> {
    let db = &s.d - &s.b;
    let gf = &s.g - &s.f;
    let pass = rank_le(&[db.clone(), gf.clone()], 1)?;
    let w = format!("B->D = {}, F->G = {}", db.display(), gf.display());
    Ok((pass, w))
}

fn l5_33(s: &ConstructionScene) -> Result<(bool, String)> {
    let cd = sq_dist(&s.c, &s.d)?;
    let df = sq_dist(&s.d, &s.f)?;
    let cb = sq_dist(&s.c, &s.b)?;
    let bg = sq_dist(&s.b, &s.g)?;
    let cdf = collinear(&s.c, &s.d, &s.f)?;
    let cbg = collinear(&s.c, &s.b, &s.g)?;
    let pass = &cd * &bg == &df * &cb && cdf && cbg;
    let w = format!(
        "CD^2 = {}, DF^2 = {}, CB^2 = {}, BG^2 = {}, C,D,F collinear = {cdf}, C,B,G collinear = {cbg}",
        rat_display(&cd),
        rat_display(&df),
        rat_display(&cb),
        rat_display(&bg),
    );
    Ok((pass, w))
}

fn l5_35(s: &ConstructionScene) -> Result<(bool, String)> {
    let cd = sq_dist(&s.c, &s.d)?;
    let df = sq_dist(&s.d, &s.f)?;
    let n1 = rat_int(s.base_dim as i64 + 1);
    let pass = cd == &(&n1 * &n1) * &df;
    let w = format!(
        "CD^2 = {}, DF^2 = {}, n+1 = {}",
        rat_display(&cd),
        rat_display(&df),
        s.base_dim + 1,
    );
    Ok((pass, w))
}

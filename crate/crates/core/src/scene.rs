//! The planar construction inside a regular (n+1)-simplex: the eight named
//! points A through H, the circle at B, and the 2-plane that carries them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::predicates::{intersect_lines, rank_le, segment_parameter};
use crate::rational::{rat_int, Rational};
use crate::simplex::standard_simplex;
use crate::vector::{centroid, sq_dist, RatPoint, RatVector};

/// Names of the construction points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl PointLabel {
    pub const ALL: [PointLabel; 8] = [
        PointLabel::A,
        PointLabel::B,
        PointLabel::C,
        PointLabel::D,
        PointLabel::E,
        PointLabel::F,
        PointLabel::G,
        PointLabel::H,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PointLabel::A => "A",
            PointLabel::B => "B",
            PointLabel::C => "C",
            PointLabel::D => "D",
            PointLabel::E => "E",
            PointLabel::F => "F",
            PointLabel::G => "G",
            PointLabel::H => "H",
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PointLabel {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<PointLabel> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(PointLabel::A),
            "B" => Ok(PointLabel::B),
            "C" => Ok(PointLabel::C),
            "D" => Ok(PointLabel::D),
            "E" => Ok(PointLabel::E),
            "F" => Ok(PointLabel::F),
            "G" => Ok(PointLabel::G),
            "H" => Ok(PointLabel::H),
            other => Err(GeometryError::BadInjection(format!(
                "unknown point `{other}`"
            ))),
        }
    }
}

/// A single-coordinate perturbation of one construction point, used to
/// demonstrate that the lemma ledger detects broken scenes.
///
/// `coord` is 1-based; an injection aimed past the scene's ambient
/// dimension leaves that scene untouched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injection {
    pub label: PointLabel,
    pub coord: usize,
    pub delta: Rational,
}

impl FromStr for Injection {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Injection> {
        let bad = || GeometryError::BadInjection(s.to_string());
        let mut parts = s.splitn(3, ':');
        let label: PointLabel = parts.next().ok_or_else(bad)?.parse()?;
        let coord: usize = parts
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if coord == 0 {
            return Err(GeometryError::BadInjection(format!(
                "{s}: coordinates are numbered from 1"
            )));
        }
        let delta: Rational = parts
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if delta.is_zero() {
            return Err(GeometryError::BadInjection(format!(
                "{s}: delta must be nonzero"
            )));
        }
        Ok(Injection {
            label,
            coord,
            delta,
        })
    }
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.label, self.coord, self.delta)
    }
}

/// The construction over a base dimension n: inside the regular
/// (n+1)-simplex, A is a base vertex, C the apex, and B, D, E, F are the
/// centroids that carry the two altitudes AB and CF. G reflects E through B
/// and H is where line BD meets line EF. Everything lives in the 2-plane
/// spanned by `plane_basis` at A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionScene {
    pub base_dim: usize,
    pub ambient: usize,
    pub a: RatPoint,
    pub b: RatPoint,
    pub c: RatPoint,
    pub d: RatPoint,
    pub e: RatPoint,
    pub f: RatPoint,
    pub g: RatPoint,
    pub h: RatPoint,
    pub circle_center: RatPoint,
    pub circle_sq_radius: Rational,
    pub plane_basis: [RatVector; 2],
}

impl ConstructionScene {
    pub fn point(&self, label: PointLabel) -> &RatPoint {
        match label {
            PointLabel::A => &self.a,
            PointLabel::B => &self.b,
            PointLabel::C => &self.c,
            PointLabel::D => &self.d,
            PointLabel::E => &self.e,
            PointLabel::F => &self.f,
            PointLabel::G => &self.g,
            PointLabel::H => &self.h,
        }
    }

    pub fn points(&self) -> [(PointLabel, &RatPoint); 8] {
        PointLabel::ALL.map(|l| (l, self.point(l)))
    }

    /// Applies the injection to a copy of the scene. The circle and plane
    /// metadata are left as built; only the named point moves.
    pub fn perturb(&self, injection: &Injection) -> ConstructionScene {
        let mut out = self.clone();
        if injection.coord > self.ambient {
            return out;
        }
        let target = match injection.label {
            PointLabel::A => &mut out.a,
            PointLabel::B => &mut out.b,
            PointLabel::C => &mut out.c,
            PointLabel::D => &mut out.d,
            PointLabel::E => &mut out.e,
            PointLabel::F => &mut out.f,
            PointLabel::G => &mut out.g,
            PointLabel::H => &mut out.h,
        };
        *target.coord_mut(injection.coord - 1) += &injection.delta;
        out
    }
}

/// Builds the scene over base dimension `n` and certifies its defining
/// incidences: all eight points coplanar with the plane through A, B, C;
/// D strictly inside segment CF; E strictly inside segment CB; H strictly
/// inside both BD and EF.
pub fn build_construction(n: usize) -> Result<ConstructionScene> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: n });
    }
    let host = standard_simplex(n + 1);
    let vs = host.vertices();
    let ambient = n + 2;

    let a = vs[0].clone();
    let c = vs[ambient - 1].clone();
    let b = centroid(&vs[1..=n])?;
    let f = centroid(&vs[0..=n])?;
    let e = centroid(&vs[1..=n + 1])?;
    let d = centroid(vs)?;
    let g = &b.scale(&rat_int(2)) - &e;
    let (h, t_bd, s_ef) = intersect_lines(&b, &(&d - &b), &e, &(&f - &e))?;

    let strictly_inside = |t: &Rational| *t > rat_int(0) && *t < rat_int(1);
    let on_segment = |p: &RatPoint, from: &RatPoint, to: &RatPoint| -> Result<bool> {
        Ok(segment_parameter(p, from, to)?
            .map(|t| strictly_inside(&t))
            .unwrap_or(false))
    };
    if !on_segment(&d, &c, &f)? {
        return Err(GeometryError::Degenerate("D is not inside CF".into()));
    }
    if !on_segment(&e, &c, &b)? {
        return Err(GeometryError::Degenerate("E is not inside CB".into()));
    }
    if !strictly_inside(&t_bd) || !strictly_inside(&s_ef) {
        return Err(GeometryError::Degenerate(
            "H is not inside segments BD and EF".into(),
        ));
    }
    let diffs = [&b, &c, &d, &e, &f, &g, &h].map(|p| p - &a);
    if !rank_le(&diffs, 2)? {
        return Err(GeometryError::Degenerate(
            "construction points are not coplanar".into(),
        ));
    }

    let circle_sq_radius = sq_dist(&b, &g)?;
    Ok(ConstructionScene {
        base_dim: n,
        ambient,
        circle_center: b.clone(),
        circle_sq_radius,
        plane_basis: [&b - &a, &c - &a],
        a,
        b,
        c,
        d,
        e,
        f,
        g,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(coords: &[(i64, i64)]) -> RatPoint {
        RatVector::new(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn base_two_scene_has_the_known_coordinates() {
        let s = build_construction(2).unwrap();
        assert_eq!(s.base_dim, 2);
        assert_eq!(s.ambient, 4);
        assert_eq!(s.a, RatVector::from_ints(&[1, 0, 0, 0]));
        assert_eq!(s.b, pt(&[(0, 1), (1, 2), (1, 2), (0, 1)]));
        assert_eq!(s.c, RatVector::from_ints(&[0, 0, 0, 1]));
        assert_eq!(s.d, pt(&[(1, 4), (1, 4), (1, 4), (1, 4)]));
        assert_eq!(s.e, pt(&[(0, 1), (1, 3), (1, 3), (1, 3)]));
        assert_eq!(s.f, pt(&[(1, 3), (1, 3), (1, 3), (0, 1)]));
        assert_eq!(s.g, pt(&[(0, 1), (2, 3), (2, 3), (-1, 3)]));
        assert_eq!(s.h, pt(&[(1, 6), (1, 3), (1, 3), (1, 6)]));
        assert_eq!(s.circle_center, s.b);
        assert_eq!(s.circle_sq_radius, rat(1, 6));
    }

    #[test]
    fn intersection_parameters_are_interior() {
        let s = build_construction(2).unwrap();
        let (_, t, u) = intersect_lines(&s.b, &(&s.d - &s.b), &s.e, &(&s.f - &s.e)).unwrap();
        assert_eq!(t, rat(2, 3));
        assert_eq!(u, rat(1, 2));
        assert_eq!(
            segment_parameter(&s.d, &s.c, &s.f).unwrap(),
            Some(rat(3, 4))
        );
        assert_eq!(
            segment_parameter(&s.e, &s.c, &s.b).unwrap(),
            Some(rat(2, 3))
        );
    }

    #[test]
    fn scenes_build_for_a_range_of_dimensions() {
        for n in 2..=8usize {
            let s = build_construction(n).unwrap();
            assert_eq!(s.ambient, n + 2);
            // G stays on the circle regardless of n.
            assert_eq!(sq_dist(&s.b, &s.g).unwrap(), s.circle_sq_radius);
        }
        assert!(matches!(
            build_construction(1),
            Err(GeometryError::DimensionTooSmall { min: 2, got: 1 })
        ));
    }

    #[test]
    fn injections_parse_and_apply() {
        let inj: Injection = "E:4:1/1000".parse().unwrap();
        assert_eq!(inj.label, PointLabel::E);
        assert_eq!(inj.coord, 4);
        assert_eq!(inj.delta, rat(1, 1000));

        let neg: Injection = "B:2:-3".parse().unwrap();
        assert_eq!(neg.delta, rat(-3, 1));

        let scene = build_construction(2).unwrap();
        let bumped = scene.perturb(&inj);
        assert_eq!(bumped.e, pt(&[(0, 1), (1, 3), (1, 3), (1003, 3000)]));
        assert_eq!(bumped.b, scene.b);

        // beyond the ambient dimension the scene is untouched
        let far: Injection = "A:9:1".parse().unwrap();
        assert_eq!(scene.perturb(&far), scene);
    }

    #[test]
    fn malformed_injections_are_rejected() {
        for bad in ["X:1:1", "E:0:1", "E:1:0", "E:1:abc", "E:1", "E", "E:1:1/0"] {
            assert!(
                bad.parse::<Injection>().is_err(),
                "`{bad}` should not parse"
            );
        }
    }

    #[test]
    fn injection_display_round_trips() {
        let inj: Injection = "G:3:-5/7".parse().unwrap();
        assert_eq!(inj.to_string(), "G:3:-5/7");
        assert_eq!(inj.to_string().parse::<Injection>().unwrap(), inj);
    }
}

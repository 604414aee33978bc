//! Exact geometric predicates: angle witnesses, rank bounds, collinearity
//! and line intersection. Everything here decides equalities over the
//! rationals; nothing returns an approximation.

use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::rational::{rat_display, rat_int, Rational, Sign};
use crate::vector::{RatPoint, RatVector};

/// Exact representation of an angle between two nonzero vectors.
///
/// Two angles in (0°, 180°) are congruent iff their witnesses are equal,
/// so angle congruence never needs a square root: `cos_sq` is
/// (u·v)²/(|u|²|v|²) and `sign` is the sign of u·v.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosineWitness {
    pub cos_sq: Rational,
    pub sign: Sign,
}

impl CosineWitness {
    /// The angle is a right angle.
    pub fn is_right(&self) -> bool {
        self.sign == Sign::Zero
    }

    /// `cos²` of the complement sums with this witness to 1; complementary
    /// acute angles therefore satisfy `a.complements(b)`.
    pub fn complements(&self, other: &CosineWitness) -> bool {
        self.sign == Sign::Positive
            && other.sign == Sign::Positive
            && &self.cos_sq + &other.cos_sq == rat_int(1)
    }

    pub fn display(&self) -> String {
        format!("(cos_sq={}, {})", rat_display(&self.cos_sq), self.sign)
    }
}

/// Angle witness of two nonzero vectors of equal dimension.
pub fn cosine_witness(u: &RatVector, v: &RatVector) -> Result<CosineWitness> {
    if u.is_zero() || v.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let num = u.dot(v)?;
    let cos_sq = (&num * &num) / (u.sq_norm() * v.sq_norm());
    Ok(CosineWitness {
        sign: Sign::of(&num),
        cos_sq,
    })
}

/// Rank of the linear span, by exact Gaussian elimination (pivot on the
/// first nonzero entry; over the rationals any pivot choice is exact).
pub fn rank(vectors: &[RatVector]) -> Result<usize> {
    let first = vectors.first().ok_or(GeometryError::EmptyPointSet)?;
    let dim = first.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                left: dim,
                right: v.dim(),
            });
        }
        rows.push(v.coords().to_vec());
    }

    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (lead, below) = rows[rank..].split_first_mut().expect("nonempty tail");
        for row in below {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &lead[col];
            for (dst, src) in row[col..].iter_mut().zip(&lead[col..]) {
                let delta = &factor * src;
                *dst -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// True iff the span of `vectors` has dimension at most `k`.
pub fn rank_le(vectors: &[RatVector], k: usize) -> Result<bool> {
    Ok(rank(vectors)? <= k)
}

/// If `p` lies on the line through `a` and `b`, returns the exact parameter
/// `t` with `p = a + t·(b − a)`; `None` if `p` is off the line.
///
/// `t` in (0, 1) means strictly between the endpoints.
pub fn segment_parameter(p: &RatPoint, a: &RatPoint, b: &RatPoint) -> Result<Option<Rational>> {
    let dir = b - a;
    if dir.is_zero() {
        return Err(GeometryError::Degenerate(
            "segment endpoints coincide".into(),
        ));
    }
    let offset = p - a;
    let t = &offset.dot(&dir)? / dir.sq_norm();
    // p is on the line iff offset == t*dir, checked exactly.
    if offset == dir.scale(&t) {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// Intersection of the lines `p1 + t·d1` and `p2 + s·d2`.
///
/// Solves the 2-unknown system on a nonsingular coordinate pair and then
/// verifies every remaining coordinate, so skew or parallel lines are
/// rejected exactly.
pub fn intersect_lines(
    p1: &RatPoint,
    d1: &RatVector,
    p2: &RatPoint,
    d2: &RatVector,
) -> Result<(RatPoint, Rational, Rational)> {
    if d1.is_zero() || d2.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let dim = p1.dim();
    let rhs = p2 - p1;
    for i in 0..dim {
        for j in i + 1..dim {
            // | d1[i]  -d2[i] | (t)   (rhs[i])
            // | d1[j]  -d2[j] | (s) = (rhs[j])
            let det = &d1[i] * -&d2[j] - &d1[j] * -&d2[i];
            if det.is_zero() {
                continue;
            }
            let t = (&rhs[i] * -&d2[j] - &rhs[j] * -&d2[i]) / &det;
            let s = (&d1[i] * &rhs[j] - &d1[j] * &rhs[i]) / &det;
            let on_first = p1 + &d1.scale(&t);
            let on_second = p2 + &d2.scale(&s);
            if on_first == on_second {
                return Ok((on_first, t, s));
            }
            return Err(GeometryError::Degenerate("lines do not intersect".into()));
        }
    }
    Err(GeometryError::Degenerate(
        "lines are parallel or collinear".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn pt(coords: &[(i64, i64)]) -> RatVector {
        RatVector::new(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn witness_of_zero_and_right_angles() {
        let e1 = RatVector::from_ints(&[1, 0]);
        let e2 = RatVector::from_ints(&[0, 1]);
        let zero_angle = cosine_witness(&e1, &e1).unwrap();
        assert_eq!(zero_angle.cos_sq, rat_int(1));
        assert_eq!(zero_angle.sign, Sign::Positive);
        let right = cosine_witness(&e1, &e2).unwrap();
        assert_eq!(right.cos_sq, rat_int(0));
        assert_eq!(right.sign, Sign::Zero);
        assert!(right.is_right());
    }

    #[test]
    fn witness_of_the_hyperface_angle() {
        // ∠CBF in the base-2 construction: vectors F−B and C−B, cos = 1/3.
        let b = pt(&[(0, 1), (1, 2), (1, 2), (0, 1)]);
        let f = pt(&[(1, 3), (1, 3), (1, 3), (0, 1)]);
        let c = pt(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        let w = cosine_witness(&(&f - &b), &(&c - &b)).unwrap();
        assert_eq!(w.cos_sq, rat(1, 9));
        assert_eq!(w.sign, Sign::Positive);
    }

    #[test]
    fn witness_rejects_zero_vector() {
        let z = RatVector::zero(3);
        let e = RatVector::basis(3, 0);
        assert_eq!(cosine_witness(&z, &e), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn rank_of_parallel_and_independent_pairs() {
        let u = RatVector::from_ints(&[1, 0]);
        let v = RatVector::from_ints(&[2, 0]);
        let w = RatVector::from_ints(&[0, 1]);
        assert!(rank_le(&[u.clone(), v], 1).unwrap());
        assert!(!rank_le(&[u, w], 1).unwrap());
    }

    #[test]
    fn rank_of_the_plane_scene() {
        // All construction points lie in the 2-plane through A, B, C.
        let a = pt(&[(1, 1), (0, 1), (0, 1), (0, 1)]);
        let b = pt(&[(0, 1), (1, 2), (1, 2), (0, 1)]);
        let c = pt(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        let f = pt(&[(1, 3), (1, 3), (1, 3), (0, 1)]);
        let e = pt(&[(0, 1), (1, 3), (1, 3), (1, 3)]);
        let d = pt(&[(1, 4), (1, 4), (1, 4), (1, 4)]);
        let diffs = vec![&b - &a, &c - &a, &f - &a, &e - &a, &d - &a];
        assert!(rank_le(&diffs, 2).unwrap());
        assert!(!rank_le(&diffs, 1).unwrap());
    }

    #[test]
    fn segment_parameter_detects_betweenness() {
        let a = RatVector::from_ints(&[0, 0]);
        let b = RatVector::from_ints(&[4, 2]);
        let mid = pt(&[(2, 1), (1, 1)]);
        assert_eq!(segment_parameter(&mid, &a, &b).unwrap(), Some(rat(1, 2)));
        let off = RatVector::from_ints(&[2, 2]);
        assert_eq!(segment_parameter(&off, &a, &b).unwrap(), None);
        let beyond = RatVector::from_ints(&[8, 4]);
        assert_eq!(
            segment_parameter(&beyond, &a, &b).unwrap(),
            Some(rat_int(2))
        );
    }

    #[test]
    fn intersect_lines_in_the_plane() {
        let p1 = RatVector::from_ints(&[0, 0]);
        let d1 = RatVector::from_ints(&[1, 1]);
        let p2 = RatVector::from_ints(&[2, 0]);
        let d2 = RatVector::from_ints(&[-1, 1]);
        let (x, t, s) = intersect_lines(&p1, &d1, &p2, &d2).unwrap();
        assert_eq!(x, RatVector::from_ints(&[1, 1]));
        assert_eq!(t, rat_int(1));
        assert_eq!(s, rat_int(1));
    }

    #[test]
    fn intersect_lines_rejects_parallel_and_skew() {
        let p1 = RatVector::from_ints(&[0, 0]);
        let d = RatVector::from_ints(&[1, 1]);
        let p2 = RatVector::from_ints(&[1, 0]);
        assert!(intersect_lines(&p1, &d, &p2, &d).is_err());
        // skew in 3 dimensions
        let p1 = RatVector::from_ints(&[0, 0, 0]);
        let d1 = RatVector::from_ints(&[1, 0, 0]);
        let p2 = RatVector::from_ints(&[0, 1, 1]);
        let d2 = RatVector::from_ints(&[0, 1, 0]);
        assert!(intersect_lines(&p1, &d1, &p2, &d2).is_err());
    }

    fn arb_nonzero_vec(dim: usize) -> impl Strategy<Value = RatVector> {
        proptest::collection::vec((-30i64..30, 1i64..30), dim)
            .prop_map(|cs| RatVector::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
            .prop_filter("nonzero", |v| !v.is_zero())
    }

    fn arb_pos_rat() -> impl Strategy<Value = Rational> {
        (1i64..200, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn witness_is_scale_invariant(
            u in arb_nonzero_vec(4),
            v in arb_nonzero_vec(4),
            c in arb_pos_rat(),
            d in arb_pos_rat(),
        ) {
            let plain = cosine_witness(&u, &v).unwrap();
            let scaled = cosine_witness(&u.scale(&c), &v.scale(&d)).unwrap();
            prop_assert_eq!(plain, scaled);
        }

        #[test]
        fn witness_cos_sq_in_unit_interval(u in arb_nonzero_vec(3), v in arb_nonzero_vec(3)) {
            let w = cosine_witness(&u, &v).unwrap();
            prop_assert!(w.cos_sq >= rat_int(0));
            prop_assert!(w.cos_sq <= rat_int(1));
            prop_assert_eq!(w.sign == Sign::Zero, num_traits::Zero::is_zero(&w.cos_sq));
        }

        #[test]
        fn rank_is_invariant_under_permutation_and_scaling(
            vs in proptest::collection::vec(arb_nonzero_vec(4), 1..5),
            scale in (-20i64..20, 1i64..20).prop_map(|(n, d)| rat(if n == 0 { 1 } else { n }, d)),
            swap in (0usize..4, 0usize..4),
        ) {
            let base = rank(&vs).unwrap();
            let mut permuted = vs.clone();
            let (i, j) = (swap.0 % vs.len(), swap.1 % vs.len());
            permuted.swap(i, j);
            prop_assert_eq!(rank(&permuted).unwrap(), base);
            let mut rescaled = vs.clone();
            rescaled[i] = rescaled[i].scale(&scale);
            prop_assert_eq!(rank(&rescaled).unwrap(), base);
        }
    }
}

//! Fixed-length sequences of rationals, used both as ambient coordinates of
//! points and as displacement vectors (the role is decided by context, e.g.
//! a segment is the difference of its endpoints).

use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{GeometryError, Result};
use crate::rational::{rat_display, rat_int, Rational};

/// A vector (or point) with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatVector {
    coords: Vec<Rational>,
}

/// Ambient coordinates of a point; same representation as a vector.
pub type RatPoint = RatVector;

impl RatVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVector { coords }
    }

    /// Zero vector of the given ambient dimension.
    pub fn zero(dim: usize) -> Self {
        RatVector {
            coords: vec![rat_int(0); dim],
        }
    }

    /// Standard basis point `e_index` (0-based) in the given ambient dimension.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut coords = vec![rat_int(0); dim];
        coords[index] = rat_int(1);
        RatVector { coords }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_ints(coords: &[i64]) -> Self {
        RatVector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(num_traits::Zero::is_zero)
    }

    pub(crate) fn coord_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.coords[i]
    }

    fn check_dim(&self, other: &RatVector) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(GeometryError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    /// Exact inner product.
    pub fn dot(&self, other: &RatVector) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Exact squared Euclidean norm; zero iff the vector is zero.
    pub fn sq_norm(&self) -> Rational {
        self.coords.iter().map(|a| a * a).sum()
    }

    /// Exact squared Euclidean distance to another point.
    pub fn sq_dist(&self, other: &RatPoint) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .sum())
    }

    pub fn scale(&self, factor: &Rational) -> RatVector {
        RatVector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// Text form `(c0, c1, …)` with canonical rational coordinates.
    pub fn display(&self) -> String {
        let inner: Vec<String> = self.coords.iter().map(rat_display).collect();
        format!("({})", inner.join(", "))
    }
}

/// Exact inner product of two vectors of equal length.
pub fn dot(u: &RatVector, v: &RatVector) -> Result<Rational> {
    u.dot(v)
}

/// Exact squared Euclidean distance between two points of equal dimension.
pub fn sq_dist(p: &RatPoint, q: &RatPoint) -> Result<Rational> {
    p.sq_dist(q)
}

/// Coordinate-wise average of a nonempty set of points.
pub fn centroid(points: &[RatPoint]) -> Result<RatPoint> {
    let first = points.first().ok_or(GeometryError::EmptyPointSet)?;
    let dim = first.dim();
    let mut sums = vec![rat_int(0); dim];
    for p in points {
        if p.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                left: dim,
                right: p.dim(),
            });
        }
        for (s, c) in sums.iter_mut().zip(p.iter()) {
            *s += c;
        }
    }
    let count = rat_int(points.len() as i64);
    Ok(RatVector::new(
        sums.into_iter().map(|s| s / &count).collect(),
    ))
}

// Operator impls panic on dimension mismatch; callers that cannot guarantee
// matching dimensions use the Result-returning methods above.

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        RatVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        RatVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Rational> for &RatVector {
    type Output = RatVector;
    fn mul(self, rhs: &Rational) -> RatVector {
        self.scale(rhs)
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

//! Rational similarity maps: positive scaling, signed coordinate
//! permutation, and translation. Ratio and angle quantities are invariant
//! under these, which the test suite exercises at random.

use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::rational::Rational;
use crate::simplex::Simplex;
use crate::vector::{RatPoint, RatVector};

/// An orthogonal map sending coordinate `i` to `±x[targets[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    targets: Vec<usize>,
    negate: Vec<bool>,
}

impl SignedPermutation {
    /// `targets` must be a bijection of `0..targets.len()`.
    pub fn new(targets: Vec<usize>, negate: Vec<bool>) -> Result<SignedPermutation> {
        if negate.len() != targets.len() {
            return Err(GeometryError::BadPermutation(format!(
                "{} signs for {} coordinates",
                negate.len(),
                targets.len()
            )));
        }
        let mut seen = vec![false; targets.len()];
        for &t in &targets {
            if t >= targets.len() || seen[t] {
                return Err(GeometryError::BadPermutation(format!(
                    "targets are not a bijection (index {t})"
                )));
            }
            seen[t] = true;
        }
        Ok(SignedPermutation { targets, negate })
    }

    pub fn identity(dim: usize) -> SignedPermutation {
        SignedPermutation {
            targets: (0..dim).collect(),
            negate: vec![false; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.targets.len()
    }

    pub fn apply(&self, v: &RatVector) -> Result<RatVector> {
        if v.dim() != self.dim() {
            return Err(GeometryError::DimensionMismatch {
                left: self.dim(),
                right: v.dim(),
            });
        }
        let coords = self
            .targets
            .iter()
            .zip(&self.negate)
            .map(|(&t, &neg)| {
                let c = v[t].clone();
                if neg {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Ok(RatVector::new(coords))
    }
}

/// Maps every vertex through x ↦ scale·P(x) + shift and rebuilds the
/// simplex, so the image is re-certified regular rather than assumed.
pub fn apply_rational_similarity(
    s: &Simplex,
    scale: &Rational,
    perm: &SignedPermutation,
    shift: &RatPoint,
) -> Result<Simplex> {
    if *scale <= Rational::zero() {
        return Err(GeometryError::NonPositiveScale);
    }
    let mapped = s
        .vertices()
        .iter()
        .map(|v| Ok(&perm.apply(v)?.scale(scale) + shift))
        .collect::<Result<Vec<RatPoint>>>()?;
    Simplex::from_vertices(mapped)
}

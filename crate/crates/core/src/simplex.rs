//! Regular simplices in the standard embedding: faces, centroids, altitude
//! certification, the well-built ratio, and the exact dihedral and central
//! angle laws.

use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::predicates::{rank, segment_parameter};
use crate::rational::Rational;
use crate::vector::{centroid, sq_dist, RatPoint, RatVector};

/// A simplex with pairwise-equidistant, affinely independent vertices.
///
/// `dim` is the number of vertices minus one; the standard construction
/// lives in ambient dimension `dim + 1` with every squared edge equal to 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<RatPoint>,
}

/// One altitude, fully checked: its foot, squared length, and whether it is
/// perpendicular to the opposite face, passes through the centroid, and
/// meets it strictly inside the segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltitudeRecord {
    pub vertex: usize,
    pub foot: RatPoint,
    pub sq_length: Rational,
    pub perpendicular: bool,
    pub passes_centroid: bool,
    pub internal: bool,
}

/// Altitude report for a whole simplex: one record per vertex plus the
/// congruence of all altitude lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltitudeCheck {
    pub records: Vec<AltitudeRecord>,
    pub lengths_equal: bool,
}

impl AltitudeCheck {
    pub fn all_pass(&self) -> bool {
        self.lengths_equal
            && self
                .records
                .iter()
                .all(|r| r.perpendicular && r.passes_centroid && r.internal)
    }
}

impl Simplex {
    /// The regular n-simplex on the n+1 standard basis points.
    pub fn standard(n: usize) -> Simplex {
        let vertices = (0..=n).map(|i| RatVector::basis(n + 1, i)).collect();
        Simplex { vertices }
    }

    /// Builds a simplex from arbitrary vertices, checking regularity
    /// (all squared edges equal and nonzero) and affine independence.
    pub fn from_vertices(vertices: Vec<RatPoint>) -> Result<Simplex> {
        let first = vertices.first().ok_or(GeometryError::EmptyPointSet)?;
        let ambient = first.dim();
        for v in &vertices {
            if v.dim() != ambient {
                return Err(GeometryError::DimensionMismatch {
                    left: ambient,
                    right: v.dim(),
                });
            }
        }
        if vertices.len() > 1 {
            let edge = sq_dist(&vertices[0], &vertices[1])?;
            if edge.is_zero() {
                return Err(GeometryError::NotRegular("coincident vertices".into()));
            }
            for i in 0..vertices.len() {
                for j in i + 1..vertices.len() {
                    if sq_dist(&vertices[i], &vertices[j])? != edge {
                        return Err(GeometryError::NotRegular(format!(
                            "edge ({i},{j}) differs from edge (0,1)"
                        )));
                    }
                }
            }
            let diffs: Vec<RatVector> = vertices[1..].iter().map(|v| v - &vertices[0]).collect();
            if rank(&diffs)? != vertices.len() - 1 {
                return Err(GeometryError::NotRegular(
                    "vertices are affinely dependent".into(),
                ));
            }
        }
        Ok(Simplex { vertices })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Result<&RatPoint> {
        self.vertices.get(i).ok_or(GeometryError::VertexIndex {
            index: i,
            count: self.vertices.len(),
        })
    }

    /// Squared edge length (all edges are equal; 2 in the standard embedding).
    pub fn edge_sq_length(&self) -> Result<Rational> {
        if self.dim() < 1 {
            return Err(GeometryError::DimensionTooSmall { min: 1, got: 0 });
        }
        sq_dist(&self.vertices[0], &self.vertices[1])
    }

    /// The hyperface opposite vertex `omit`, in vertex order.
    pub fn face(&self, omit: usize) -> Result<Vec<RatPoint>> {
        self.vertex(omit)?;
        Ok(self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omit)
            .map(|(_, v)| v.clone())
            .collect())
    }

    pub fn centroid(&self) -> RatPoint {
        centroid(&self.vertices).expect("a simplex has at least one vertex")
    }

    /// Foot of the altitude from vertex `v`: the centroid of the opposite
    /// hyperface. Orthogonality to that face is certified separately by
    /// [`Simplex::verify_altitude_properties`].
    pub fn altitude_foot(&self, v: usize) -> Result<RatPoint> {
        if self.dim() < 1 {
            return Err(GeometryError::DimensionTooSmall { min: 1, got: 0 });
        }
        centroid(&self.face(v)?)
    }

    /// Certifies, vertex by vertex, that the altitude feet are the opposite
    /// face centroids, the altitudes are perpendicular to their faces, all
    /// pass through the centroid strictly between vertex and foot, and all
    /// have the same squared length.
    pub fn verify_altitude_properties(&self) -> Result<AltitudeCheck> {
        if self.dim() < 1 {
            return Err(GeometryError::DimensionTooSmall { min: 1, got: 0 });
        }
        let center = self.centroid();
        let mut records = Vec::with_capacity(self.vertices.len());
        for (v, vertex) in self.vertices.iter().enumerate() {
            let foot = self.altitude_foot(v)?;
            let u = vertex - &foot;
            // u is orthogonal to every face edge p_a − p_b iff the dot
            // products u·p_a agree across the face; one dot per face vertex
            // keeps the check quadratic instead of cubic.
            let mut dots = self
                .vertices
                .iter()
                .enumerate()
                .filter(|&(a, _)| a != v)
                .map(|(_, p)| u.dot(p));
            let head = dots.next().expect("dim >= 1 leaves a nonempty face")?;
            let mut perpendicular = true;
            for d in dots {
                if d? != head {
                    perpendicular = false;
                    break;
                }
            }
            let t = segment_parameter(&center, vertex, &foot)?;
            let passes_centroid = t.is_some();
            let internal = t
                .map(|t| t > Rational::zero() && t < Rational::from_integer(1.into()))
                .unwrap_or(false);
            records.push(AltitudeRecord {
                vertex: v,
                sq_length: u.sq_norm(),
                foot,
                perpendicular,
                passes_centroid,
                internal,
            });
        }
        let lengths_equal = records.iter().all(|r| r.sq_length == records[0].sq_length);
        Ok(AltitudeCheck {
            records,
            lengths_equal,
        })
    }

    /// The squared ratio AO²/OH² of vertex-to-centroid over
    /// centroid-to-foot; equals dim² exactly iff the simplex is well built.
    /// Also certifies that the centroid lies strictly between vertex and foot.
    pub fn well_built_ratio(&self, v: usize) -> Result<Rational> {
        let vertex = self.vertex(v)?.clone();
        let center = self.centroid();
        let foot = self.altitude_foot(v)?;
        let oh = sq_dist(&center, &foot)?;
        if oh.is_zero() {
            return Err(GeometryError::Degenerate(
                "centroid coincides with the altitude foot".into(),
            ));
        }
        match segment_parameter(&center, &vertex, &foot)? {
            Some(t) if t > Rational::zero() && t < Rational::from_integer(1.into()) => {}
            _ => {
                return Err(GeometryError::Degenerate(
                    "centroid is not interior to the altitude".into(),
                ))
            }
        }
        Ok(sq_dist(&vertex, &center)? / oh)
    }

    /// Exact cosine of the dihedral angle along the ridge opposite vertices
    /// `i` and `j`: with c the ridge centroid and u = v_i − c, w = v_j − c,
    /// both spokes are certified orthogonal to the ridge and of equal length,
    /// and the cosine is u·w / |u|².
    pub fn dihedral_cosine_at(&self, i: usize, j: usize) -> Result<Rational> {
        if self.dim() < 2 {
            return Err(GeometryError::DimensionTooSmall {
                min: 2,
                got: self.dim(),
            });
        }
        let vi = self.vertex(i)?;
        let vj = self.vertex(j)?;
        if i == j {
            return Err(GeometryError::Degenerate(
                "a ridge needs two distinct omitted vertices".into(),
            ));
        }
        let ridge: Vec<RatPoint> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(a, _)| a != i && a != j)
            .map(|(_, p)| p.clone())
            .collect();
        let c = centroid(&ridge)?;
        let u = vi - &c;
        let w = vj - &c;
        for spoke in [&u, &w] {
            let mut dots = ridge.iter().map(|p| spoke.dot(p));
            let head = dots.next().expect("dim >= 2 leaves a nonempty ridge")?;
            for d in dots {
                if d? != head {
                    return Err(GeometryError::Degenerate(
                        "spoke is not orthogonal to the ridge".into(),
                    ));
                }
            }
        }
        if u.sq_norm() != w.sq_norm() {
            return Err(GeometryError::Degenerate(
                "ridge spokes have unequal lengths".into(),
            ));
        }
        Ok(u.dot(&w)? / u.sq_norm())
    }

    /// Exact cosine of the angle at the centroid between the spokes to
    /// vertices `i` and `j`; the spokes are certified congruent first.
    pub fn central_angle_cosine_at(&self, i: usize, j: usize) -> Result<Rational> {
        if self.dim() < 2 {
            return Err(GeometryError::DimensionTooSmall {
                min: 2,
                got: self.dim(),
            });
        }
        if i == j {
            return Err(GeometryError::Degenerate(
                "central angle needs two distinct vertices".into(),
            ));
        }
        let center = self.centroid();
        let u = self.vertex(i)? - &center;
        let w = self.vertex(j)? - &center;
        if u.sq_norm() != w.sq_norm() {
            return Err(GeometryError::Degenerate(
                "centroid spokes have unequal lengths".into(),
            ));
        }
        Ok(u.dot(&w)? / u.sq_norm())
    }
}

/// The regular n-simplex on the standard basis of (n+1)-space.
pub fn standard_simplex(n: usize) -> Simplex {
    Simplex::standard(n)
}

/// Exact dihedral cosine of the regular n-simplex; 1/n for every n ≥ 2.
pub fn dihedral_cosine(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: n });
    }
    standard_simplex(n).dihedral_cosine_at(0, 1)
}

/// Exact cosine of the centroid-spoke angle; −1/n for every n ≥ 2.
pub fn central_angle_cosine(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: n });
    }
    standard_simplex(n).central_angle_cosine_at(0, 1)
}

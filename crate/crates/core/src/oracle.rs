//! Independent floating-point cross-check of the dihedral angle via facet
//! normals and dense linear solves. Shares no code path with the exact
//! kernel; agreement within 1e-9 is asserted by the certification sweep.

use crate::error::{GeometryError, Result};

const PIVOT_FLOOR: f64 = 1e-12;

/// Gaussian elimination with partial pivoting on a square system.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let m = a.len();
    for col in 0..m {
        let (pivot_row, pivot_abs) = (col..m)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("nonempty column range");
        if pivot_abs < PIVOT_FLOOR {
            return Err(GeometryError::OracleFailure(format!(
                "pivot {pivot_abs:.3e} below floor in column {col}"
            )));
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let (pivot, below) = a[col..].split_first_mut().expect("nonempty tail");
        let b_col = b[col];
        for (row, b_r) in below.iter_mut().zip(&mut b[col + 1..]) {
            let factor = row[col] / pivot[col];
            if factor == 0.0 {
                continue;
            }
            for (dst, src) in row[col..].iter_mut().zip(&pivot[col..]) {
                *dst -= factor * src;
            }
            *b_r -= factor * b_col;
        }
    }
    let mut x = vec![0.0; m];
    for row in (0..m).rev() {
        let mut acc = b[row];
        for c in row + 1..m {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

/// Unit inward normal of the facet opposite `omit`, inside the simplex's
/// affine hull. The solve constrains the normal to be orthogonal to every
/// facet edge, orthogonal to the all-ones vector (the hull's normal), and
/// non-degenerate along a transversal toward the omitted vertex.
fn facet_normal(vertices: &[Vec<f64>], omit: usize) -> Result<Vec<f64>> {
    let m = vertices[0].len();
    let facet: Vec<&Vec<f64>> = vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != omit)
        .map(|(_, v)| v)
        .collect();

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
    for k in 1..facet.len() {
        rows.push((0..m).map(|c| facet[k][c] - facet[0][c]).collect());
    }
    rows.push(vec![1.0; m]);
    rows.push((0..m).map(|c| facet[0][c] - vertices[omit][c]).collect());
    let mut rhs = vec![0.0; m];
    rhs[m - 1] = 1.0;

    let mut normal = solve(rows, rhs)?;
    let centroid: Vec<f64> = (0..m)
        .map(|c| facet.iter().map(|v| v[c]).sum::<f64>() / facet.len() as f64)
        .collect();
    let toward_inside: f64 = (0..m)
        .map(|c| normal[c] * (vertices[omit][c] - centroid[c]))
        .sum();
    if toward_inside < 0.0 {
        for c in normal.iter_mut() {
            *c = -*c;
        }
    }
    let len = normal.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !len.is_finite() || len < PIVOT_FLOOR {
        return Err(GeometryError::OracleFailure(
            "facet normal has no usable length".into(),
        ));
    }
    for c in normal.iter_mut() {
        *c /= len;
    }
    Ok(normal)
}

/// Floating-point dihedral cosine of the regular n-simplex, computed from
/// the inward normals of two adjacent facets: cos = -(u . w).
pub fn float_oracle_dihedral(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall { min: 2, got: n });
    }
    let m = n + 1;
    let vertices: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|c| if c == i { 1.0 } else { 0.0 }).collect())
        .collect();
    let u = facet_normal(&vertices, 0)?;
    let w = facet_normal(&vertices, 1)?;
    Ok(-(0..m).map(|c| u[c] * w[c]).sum::<f64>())
}

//! SVG rendering of the construction scene's plane cross-section. The
//! projection runs in floating point; it is presentation only and never
//! feeds back into any predicate.

use crate::rational::rat_to_f64;
use crate::scene::{ConstructionScene, PointLabel};
use crate::vector::RatVector;

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 48.0;

/// Segments drawn in the figure, as label pairs.
const SEGMENTS: [(PointLabel, PointLabel); 7] = [
    (PointLabel::A, PointLabel::B),
    (PointLabel::C, PointLabel::F),
    (PointLabel::A, PointLabel::E),
    (PointLabel::B, PointLabel::D),
    (PointLabel::G, PointLabel::F),
    (PointLabel::E, PointLabel::F),
    (PointLabel::C, PointLabel::G),
];

fn to_f64(v: &RatVector) -> Vec<f64> {
    v.iter().map(rat_to_f64).collect()
}

fn dot_f(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// In-plane coordinates of every point relative to A, via Gram-Schmidt on
/// the plane basis.
fn project(scene: &ConstructionScene) -> Vec<(f64, f64)> {
    let b1 = to_f64(&scene.plane_basis[0]);
    let b2 = to_f64(&scene.plane_basis[1]);
    let n1 = dot_f(&b1, &b1).sqrt();
    let u1: Vec<f64> = b1.iter().map(|c| c / n1).collect();
    let along = dot_f(&b2, &u1);
    let ortho: Vec<f64> = b2.iter().zip(&u1).map(|(c, e)| c - along * e).collect();
    let n2 = dot_f(&ortho, &ortho).sqrt();
    let u2: Vec<f64> = ortho.iter().map(|c| c / n2).collect();

    let origin = to_f64(&scene.a);
    scene
        .points()
        .iter()
        .map(|(_, p)| {
            let rel: Vec<f64> = to_f64(p).iter().zip(&origin).map(|(c, o)| c - o).collect();
            (dot_f(&rel, &u1), dot_f(&rel, &u2))
        })
        .collect()
}

/// Renders the scene as a standalone SVG: the seven construction segments,
/// the circle at B, and one labeled marker per point.
pub fn scene_svg(scene: &ConstructionScene) -> String {
    let plane = project(scene);
    let radius = rat_to_f64(&scene.circle_sq_radius).sqrt();
    let b_idx = PointLabel::ALL
        .iter()
        .position(|&l| l == PointLabel::B)
        .expect("B is in the label list");

    let (bx, by) = plane[b_idx];
    let xs = plane
        .iter()
        .map(|&(x, _)| x)
        .chain([bx - radius, bx + radius]);
    let ys = plane
        .iter()
        .map(|&(_, y)| y)
        .chain([by - radius, by + radius]);
    let (min_x, max_x) = bounds(xs);
    let (min_y, max_y) = bounds(ys);
    let scale = (WIDTH - 2.0 * MARGIN) / (max_x - min_x);
    let height = (max_y - min_y) * scale + 2.0 * MARGIN;

    // SVG y grows downward; flip the plane's second coordinate.
    let place = |(x, y): (f64, f64)| {
        (
            MARGIN + (x - min_x) * scale,
            height - (MARGIN + (y - min_y) * scale),
        )
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {WIDTH:.2} {height:.2}\">\n"
    ));

    let (cx, cy) = place((bx, by));
    out.push_str(&format!(
        "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"#8a8a8a\" stroke-dasharray=\"4 3\"/>\n",
        radius * scale
    ));

    for (from, to) in SEGMENTS {
        let (x1, y1) = place(plane[label_index(from)]);
        let (x2, y2) = place(plane[label_index(to)]);
        out.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#333333\" stroke-width=\"1.2\"/>\n"
        ));
    }

    for (label, _) in scene.points() {
        let (x, y) = place(plane[label_index(label)]);
        out.push_str(&format!(
            "  <rect x=\"{:.2}\" y=\"{:.2}\" width=\"6\" height=\"6\" fill=\"#b02a2a\"/>\n",
            x - 3.0,
            y - 3.0
        ));
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\">{label}</text>\n",
            x + 6.0,
            y - 6.0
        ));
    }

    out.push_str("</svg>\n");
    out
}

fn label_index(label: PointLabel) -> usize {
    PointLabel::ALL
        .iter()
        .position(|&l| l == label)
        .expect("every label is in the list")
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

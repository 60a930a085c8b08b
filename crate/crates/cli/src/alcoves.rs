//! Static SVG of the alcoves of S~_3 up to a given length.
//!
//! `s_1`, `s_2` reflect in the hyperplanes through the origin orthogonal to the
//! simple roots, `s_0` in the hyperplane `<x, theta> = 1`. The alcove of
//! `w = s_{i_1} ... s_{i_l}` is the image of the fundamental alcove under the
//! composite of those reflections, the rightmost applied first.

use std::fmt::Write;

use anyhow::{bail, Result};
use peterson_core::oracle;
use peterson_core::rootsys::is_in_parabolic;

use crate::Highlight;

type Point = (f64, f64);

const SCALE: f64 = 60.0;

fn roots() -> [Point; 3] {
    let r = 2f64.sqrt();
    let a1 = (r, 0.0);
    let a2 = (-r / 2.0, r * 3f64.sqrt() / 2.0);
    let theta = (a1.0 + a2.0, a1.1 + a2.1);
    [theta, a1, a2]
}

fn dot(a: Point, b: Point) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

/// Reflection in `<x, alpha> = k`; roots have squared length 2.
fn reflect(i: usize, x: Point) -> Point {
    let alpha = roots()[i];
    let k = if i == 0 { 1.0 } else { 0.0 };
    let c = dot(x, alpha) - k;
    (x.0 - c * alpha.0, x.1 - c * alpha.1)
}

fn fundamental_alcove() -> [Point; 3] {
    // Fundamental weights: <w_i, alpha_j> = delta_ij.
    let [_, a1, a2] = roots();
    let det = a1.0 * a2.1 - a1.1 * a2.0;
    let w1 = (a2.1 / det, -a2.0 / det);
    let w2 = (-a1.1 / det, a1.0 / det);
    [(0.0, 0.0), w1, w2]
}

enum Kind {
    Plain,
    Grassmannian,
    Inside,
    InsideGrassmannian,
    OutsideGrassmannian,
}

impl Kind {
    fn class(&self) -> &'static str {
        match self {
            Kind::Plain => "plain",
            Kind::Grassmannian => "grassmannian",
            Kind::Inside => "jp",
            Kind::InsideGrassmannian => "jp-grassmannian",
            Kind::OutsideGrassmannian => "outside",
        }
    }
}

pub fn render(n: usize, radius: usize, highlight: Highlight, m: usize) -> Result<String> {
    if n != 3 {
        bail!("alcove pictures exist only for n = 3, got n = {n}");
    }
    if m == 0 || m >= n {
        bail!("cut m = {m} must satisfy 0 < m < {n}");
    }
    let mut elems: Vec<_> = oracle::bfs_lengths(n, radius).into_iter().collect();
    elems.sort_by(|(a, la), (b, lb)| la.cmp(lb).then(a.cmp(b)));

    let mut polys = Vec::new();
    for (w, _) in &elems {
        let word = w.reduced_word();
        let corners = fundamental_alcove().map(|p| word.letters().iter().rev().fold(p, |q, &i| reflect(i, q)));
        let grass = w.is_grassmannian();
        let kind = match highlight {
            Highlight::Grassmannian if grass => Kind::Grassmannian,
            Highlight::Grassmannian => Kind::Plain,
            Highlight::Jp => match (is_in_parabolic(w, m), grass) {
                (true, true) => Kind::InsideGrassmannian,
                (true, false) => Kind::Inside,
                (false, true) => Kind::OutsideGrassmannian,
                (false, false) => Kind::Plain,
            },
        };
        let label = if word.is_empty() { "e".to_string() } else { word.subscript() };
        polys.push((corners, kind, label));
    }

    let pts = polys.iter().flat_map(|(c, _, _)| c.iter());
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.2;
    let (w, h) = ((x1 - x0 + 2.0 * pad) * SCALE, (y1 - y0 + 2.0 * pad) * SCALE);
    // SVG y grows downwards.
    let to_svg = |(x, y): Point| ((x - x0 + pad) * SCALE, (y1 - y + pad) * SCALE);

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    )?;
    writeln!(
        svg,
        "<style>polygon{{stroke:#444;stroke-width:1}}.plain{{fill:#fff}}.grassmannian{{fill:#bcd8f5}}\
.jp{{fill:#dcebfa}}.jp-grassmannian{{fill:#6fa8dc}}.outside{{fill:#f4c2d7}}\
text{{font-family:sans-serif;font-size:9px;text-anchor:middle;dominant-baseline:middle}}</style>"
    )?;
    for (corners, kind, label) in &polys {
        let p: Vec<String> = corners
            .iter()
            .map(|&c| {
                let (x, y) = to_svg(c);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(svg, r#"<polygon class="{}" points="{}"><title>{label}</title></polygon>"#, kind.class(), p.join(" "))?;
        let cx = corners.iter().map(|c| c.0).sum::<f64>() / 3.0;
        let cy = corners.iter().map(|c| c.1).sum::<f64>() / 3.0;
        let (x, y) = to_svg((cx, cy));
        writeln!(svg, r#"<text x="{x:.2}" y="{y:.2}">{label}</text>"#)?;
    }
    writeln!(svg, "</svg>")?;
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections_are_involutions_satisfying_braids() {
        let p = (0.123, 0.456);
        for i in 0..3 {
            let q = reflect(i, reflect(i, p));
            assert!((q.0 - p.0).abs() < 1e-12 && (q.1 - p.1).abs() < 1e-12);
            let j = (i + 1) % 3;
            let a = reflect(i, reflect(j, reflect(i, p)));
            let b = reflect(j, reflect(i, reflect(j, p)));
            assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
        }
    }

    #[test]
    fn generators_fix_a_wall_of_the_fundamental_alcove() {
        let [o, w1, w2] = fundamental_alcove();
        let close = |a: Point, b: Point| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12;
        assert!(close(reflect(1, o), o) && close(reflect(1, w2), w2));
        assert!(close(reflect(2, o), o) && close(reflect(2, w1), w1));
        assert!(close(reflect(0, w1), w1) && close(reflect(0, w2), w2));
    }

    #[test]
    fn alcoves_do_not_overlap() {
        let svg = render(3, 5, Highlight::Grassmannian, 1).unwrap();
        let mut centres: Vec<(i64, i64)> = svg
            .lines()
            .filter(|l| l.starts_with("<text"))
            .map(|l| {
                let num = |key: &str| -> i64 {
                    let rest = &l[l.find(key).unwrap() + key.len()..];
                    let v: f64 = rest[..rest.find('"').unwrap()].parse().unwrap();
                    (v * 10.0).round() as i64
                };
                (num("x=\""), num("y=\""))
            })
            .collect();
        let total = centres.len();
        centres.sort();
        centres.dedup();
        assert_eq!(centres.len(), total);
        // 1 + 3 + 6 + 9 + 12 + 15 elements of length at most 5
        assert_eq!(total, 46);
    }
}

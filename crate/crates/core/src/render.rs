//! Text and SVG pictures of `Λ ⊕ π(S)` on the Auslander-Reiten quiver.

use std::fmt::Write;

use crate::quiver::Vertex;
use crate::resolution::{GenCogenSet, Rectangle};

/// Fundamental domain of the stable quiver: one row per layer (top first),
/// one column per `x`. Members are `#`, everything else `.`.
pub fn ascii_grid(set: &GenCogenSet) -> String {
    let a = set.params();
    let (n, m) = (a.n() as i64, a.m() as i64);
    let width = (n - 1).to_string().len().max(2);
    let label = (m - 1).to_string().len().max(3);

    let mut out = String::new();
    let members = set.members();
    let listed: Vec<String> = members.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "A({n},{m}) stable part, {} member(s)", members.len());
    if !listed.is_empty() {
        let _ = writeln!(out, "members: {}", listed.join(" "));
    }
    let _ = write!(out, "{:>label$}", "t\\x");
    for x in 0..n {
        let _ = write!(out, " {x:>width$}");
    }
    out.push('\n');
    for t in (1..m).rev() {
        let _ = write!(out, "{t:>label$}");
        for x in 0..n {
            let mark = if set.contains(Vertex::new(x, t)) {
                '#'
            } else {
                '.'
            };
            let _ = write!(out, " {mark:>width$}");
        }
        out.push('\n');
    }
    out
}

const STEP: f64 = 40.0;
const PAD: f64 = 30.0;

/// Horizontal slot of a cover vertex; arrows always move one slot to the right.
fn slot(v: Vertex, x_max: i64, m: i64) -> i64 {
    2 * (x_max - v.x) + (m - v.t)
}

/// Extended quiver (zero and projective layers included) over the columns
/// `0..n`, widened to cover every overlay rectangle.
pub fn svg(set: &GenCogenSet, overlay: &[Rectangle]) -> String {
    let a = set.params();
    let (n, m) = (a.n() as i64, a.m() as i64);
    let corners: Vec<[Vertex; 4]> = overlay
        .iter()
        .map(|r| {
            [
                Vertex::new(r.x, r.t),
                Vertex::new(r.x, r.h),
                Vertex::new(r.x + r.t, r.h - r.t),
                Vertex::new(r.x + r.t, 0),
            ]
        })
        .collect();
    let xs = corners.iter().flatten().map(|v| v.x);
    let x_min = xs.clone().chain([0]).min().unwrap_or(0);
    let x_max = xs.chain([n - 1]).max().unwrap_or(n - 1);

    let width = (slot(Vertex::new(x_min, 0), x_max, m) as f64) * STEP / 2.0 + 2.0 * PAD;
    let height = m as f64 * STEP + 2.0 * PAD;
    let pos = |v: Vertex| {
        let px = PAD + slot(v, x_max, m) as f64 * STEP / 2.0;
        let py = PAD + (m - v.t) as f64 * STEP;
        (px, py)
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<title>A({n},{m})</title>"#);

    for quad in &corners {
        let points: Vec<String> = quad
            .iter()
            .map(|&v| {
                let (px, py) = pos(v);
                format!("{px},{py}")
            })
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#f4c542" fill-opacity="0.25" stroke="#c28f00"/>"##,
            points.join(" ")
        );
    }

    // arrows (x, t) -> (x - 1, t + 1) and (x, t) -> (x, t - 1)
    for x in x_min..=x_max {
        for t in 0..=m {
            let from = pos(Vertex::new(x, t));
            let mut targets = Vec::new();
            if t < m && x > x_min {
                targets.push(Vertex::new(x - 1, t + 1));
            }
            if t > 0 {
                targets.push(Vertex::new(x, t - 1));
            }
            for to in targets {
                let to = pos(to);
                let _ = writeln!(
                    out,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999"/>"##,
                    from.0, from.1, to.0, to.1
                );
            }
        }
    }

    for x in x_min..=x_max {
        for t in 0..=m {
            let v = Vertex::new(x, t);
            let (px, py) = pos(v);
            let fill = if t == 0 {
                "#ffffff"
            } else if t == m {
                "#555555"
            } else if set.contains(v) {
                "#d62728"
            } else {
                "#dddddd"
            };
            let _ = writeln!(
                out,
                r##"<circle cx="{px}" cy="{py}" r="6" fill="{fill}" stroke="#333"><title>{v}</title></circle>"##
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::AlgebraParams;
    use crate::resolution::min_approximation;

    #[test]
    fn ascii_for_a23() {
        let a = AlgebraParams::new(2, 3).unwrap();
        let set = GenCogenSet::from_vertices(a, [Vertex::new(0, 1)]).unwrap();
        let expected =
            "A(2,3) stable part, 1 member(s)\nmembers: (0,1)\nt\\x  0  1\n  2  .  .\n  1  #  .\n";
        assert_eq!(ascii_grid(&set), expected);
    }

    #[test]
    fn svg_has_one_circle_per_vertex() {
        let a = AlgebraParams::new(3, 4).unwrap();
        let set = GenCogenSet::from_vertices(a, [Vertex::new(1, 2)]).unwrap();
        let doc = svg(&set, &[]);
        assert!(doc.starts_with("<svg"));
        assert_eq!(doc.matches("<circle").count(), 3 * 5);
        assert_eq!(doc.matches("#d62728").count(), 1);
    }

    #[test]
    fn overlay_widens_the_picture() {
        let a = AlgebraParams::new(2, 3).unwrap();
        let set = GenCogenSet::from_vertices(a, [Vertex::new(0, 1)]).unwrap();
        let approx = min_approximation(Vertex::new(1, 2), &set).unwrap();
        let doc = svg(&set, &approx.rectangles);
        assert_eq!(doc.matches("<polygon").count(), approx.rectangles.len());
        assert!(doc.matches("<circle").count() > 2 * 4);
    }
}

//! Square ice drawing of a half-turn symmetric matrix in half form.

use std::fmt::Write;

use htsasm::HalfTurnAsm;

const STEP: f64 = 40.0;
const HEAD: f64 = 6.0;

/// Whether the edge on `side` (one of `NESW`) points into the vertex.
fn incoming(label: &str, side: char) -> bool {
    label.contains(side)
}

fn arrow(out: &mut String, from: (f64, f64), to: (f64, f64)) {
    let (x0, y0) = from;
    let (x1, y1) = to;
    let _ = writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="1.5"/>"#);
    let len = ((x1 - x0).powi(2) + (y1 - y0).powi(2)).sqrt();
    let (ux, uy) = ((x1 - x0) / len, (y1 - y0) / len);
    let (mx, my) = ((x0 + x1) / 2.0 + ux * HEAD / 2.0, (y0 + y1) / 2.0 + uy * HEAD / 2.0);
    let (bx, by) = (mx - ux * HEAD, my - uy * HEAD);
    let (px, py) = (-uy * HEAD / 2.0, ux * HEAD / 2.0);
    let _ = writeln!(
        out,
        r#"<polygon points="{mx},{my} {},{} {},{}" fill="black"/>"#,
        bx + px,
        by + py,
        bx - px,
        by - py
    );
}

/// SVG of the U-turn square ice configuration: one vertex per matrix entry,
/// arrows given by the compass labels (a label names the two incoming edges),
/// and the left boundary edges of rows `i` and `N + 1 - i` joined by arcs.
pub fn square_ice_svg(m: &HalfTurnAsm) -> String {
    let c = m.to_compass();
    let rows = m.rows();
    let cols = m.cols();
    let n = m.n();
    let left = STEP * (n as f64 + 1.0);
    let px = |j: f64| left + j * STEP;
    let py = |i: f64| STEP + i * STEP;
    let width = px(cols as f64) + STEP / 2.0;
    let height = py(rows as f64) + STEP / 2.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let label = |i: usize, j: usize| c.get(i, j).name();
    for i in 0..rows {
        for j in 0..cols {
            let (x, y) = (px(j as f64), py(i as f64));
            // Horizontal edge east of the vertex, and the west boundary edge.
            let east = (x + if j + 1 == cols { STEP / 2.0 } else { STEP }, y);
            if incoming(label(i, j), 'E') {
                arrow(&mut out, east, (x, y));
            } else {
                arrow(&mut out, (x, y), east);
            }
            if j == 0 {
                let west = (x - STEP / 2.0, y);
                if incoming(label(i, j), 'W') {
                    arrow(&mut out, west, (x, y));
                } else {
                    arrow(&mut out, (x, y), west);
                }
            }
            // Vertical edge south of the vertex, and the north boundary edge.
            let south = (x, y + if i + 1 == rows { STEP / 2.0 } else { STEP });
            if incoming(label(i, j), 'S') {
                arrow(&mut out, south, (x, y));
            } else {
                arrow(&mut out, (x, y), south);
            }
            if i == 0 {
                let north = (x, y - STEP / 2.0);
                if incoming(label(i, j), 'N') {
                    arrow(&mut out, north, (x, y));
                } else {
                    arrow(&mut out, (x, y), north);
                }
            }
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="2.5" fill="black"/>"#);
        }
    }
    // U-turns joining row i to row N+1-i on the left boundary.
    let x0 = px(0.0) - STEP / 2.0;
    for i in 0..n {
        let (ya, yb) = (py(i as f64), py((rows - 1 - i) as f64));
        let reach = STEP / 2.0 * (n - i) as f64;
        let _ = writeln!(
            out,
            r#"<path d="M {x0} {ya} C {} {ya}, {} {yb}, {x0} {yb}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            x0 - reach,
            x0 - reach
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use htsasm::{AsmKind, StrictPartition};

    #[test]
    fn one_vertex_per_entry_and_one_arc_per_pair() {
        let m = HalfTurnAsm::new(AsmKind::EvenB, StrictPartition::new(vec![1]).unwrap(), vec![vec![1], vec![0]]).unwrap();
        let svg = square_ice_svg(&m);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg, square_ice_svg(&m));
    }
}

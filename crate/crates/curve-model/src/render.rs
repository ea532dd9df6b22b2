//! Deterministic drawings of arc diagrams, either as character art or SVG.
//! Nesting depth decides arc height, mirroring the table drawings.

use num_rational::Rational64;

use crate::{ArcDiagram, Pos};

struct Layout {
    /// All landmark positions sorted: b at 0, marked points, crossings.
    points: Vec<Pos>,
    upper: Vec<(Pos, Pos)>,
    lower: Vec<(Pos, Pos)>,
}

fn layout(d: &ArcDiagram) -> Layout {
    let mut points: Vec<Pos> = vec![Rational64::from_integer(0)];
    points.extend((1..=d.n).map(|i| Rational64::from_integer(i as i64)));
    points.extend(d.crossings.iter().copied());
    points.sort();
    points.dedup();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (a, b, up) in d.arcs() {
        let chord = (a.min(b), a.max(b));
        if up {
            upper.push(chord);
        } else {
            lower.push(chord);
        }
    }
    Layout { points, upper, lower }
}

/// Height above (or below) the line: chords containing more chords sit
/// further from the line.
fn heights(chords: &[(Pos, Pos)]) -> Vec<usize> {
    chords
        .iter()
        .map(|&(a, b)| {
            1 + chords
                .iter()
                .filter(|&&(c, d)| (a < c && d <= b) || (a <= c && d < b))
                .count()
        })
        .collect()
}

pub fn render_ascii(d: &ArcDiagram) -> String {
    let lay = layout(d);
    let col = |x: Pos| lay.points.iter().position(|&p| p == x).unwrap() * 3;
    let width = (lay.points.len() - 1) * 3 + 1;
    let hu = heights(&lay.upper);
    let hl = heights(&lay.lower);
    let rows_u = hu.iter().copied().max().unwrap_or(0) + 1;
    let rows_l = hl.iter().copied().max().unwrap_or(0);
    let base = rows_u;
    let mut grid = vec![vec![b' '; width]; rows_u + 1 + rows_l];

    // rays go up from the marked points through all upper rows
    for i in 1..=d.n {
        let c = col(Rational64::from_integer(i as i64));
        for row in grid.iter_mut().take(base) {
            row[c] = b'|';
        }
    }
    for (idx, &(a, b)) in lay.upper.iter().enumerate() {
        let row = base - hu[idx];
        let (ca, cb) = (col(a), col(b));
        grid[row][ca] = b'.';
        grid[row][cb] = b'.';
        for c in ca + 1..cb {
            grid[row][c] = b'-';
        }
    }
    for (idx, &(a, b)) in lay.lower.iter().enumerate() {
        let row = base + hl[idx];
        let (ca, cb) = (col(a), col(b));
        grid[row][ca] = b'\'';
        grid[row][cb] = b'\'';
        for c in ca + 1..cb {
            grid[row][c] = b'-';
        }
    }
    // baseline landmarks drawn last so they stay visible
    let brow = base;
    grid[brow][col(Rational64::from_integer(0))] = b'b';
    for i in 1..=d.n {
        grid[brow][col(Rational64::from_integer(i as i64))] = b'0' + (i % 10) as u8;
    }
    for &x in &d.crossings {
        grid[brow][col(x)] = b'x';
    }
    let s = col(Rational64::from_integer(d.start as i64));
    grid[brow][s] = b'@';

    let mut out = String::new();
    for row in grid {
        let line = String::from_utf8(row).unwrap();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_svg(d: &ArcDiagram) -> String {
    let lay = layout(d);
    let unit = 40.0;
    let xf = |x: Pos| 20.0 + unit * (*x.numer() as f64 / *x.denom() as f64);
    let base_y = 120.0;
    let hu = heights(&lay.upper);
    let hl = heights(&lay.lower);
    let h = base_y + 30.0 * (hl.iter().copied().max().unwrap_or(0) as f64 + 1.0) + 20.0;
    let w = xf(Rational64::from_integer(d.n as i64 + 1)) + 40.0;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" \
         viewBox=\"0 0 {w:.0} {h:.0}\">\n"
    ));
    s.push_str(&format!(
        "<line x1=\"0\" y1=\"{base_y}\" x2=\"{w:.0}\" y2=\"{base_y}\" stroke=\"#ccc\"/>\n"
    ));
    for i in 1..=d.n {
        let x = xf(Rational64::from_integer(i as i64));
        s.push_str(&format!(
            "<line x1=\"{x:.1}\" y1=\"{base_y}\" x2=\"{x:.1}\" y2=\"0\" stroke=\"#999\" \
             stroke-dasharray=\"4 3\"/>\n<circle cx=\"{x:.1}\" cy=\"{base_y}\" r=\"3\" \
             fill=\"#000\"/>\n<text x=\"{x:.1}\" y=\"{y:.1}\" font-size=\"12\" \
             text-anchor=\"middle\">{i}</text>\n",
            y = base_y + 16.0
        ));
    }
    let bx = xf(Rational64::from_integer(0));
    let by = base_y + 30.0;
    s.push_str(&format!(
        "<circle cx=\"{bx:.1}\" cy=\"{by:.1}\" r=\"3\" fill=\"#c00\"/>\n\
         <text x=\"{bx:.1}\" y=\"{y:.1}\" font-size=\"12\" text-anchor=\"middle\">b</text>\n",
        y = by + 14.0
    ));
    fn arc_path(x1: f64, x2: f64, base_y: f64, peak: f64) -> String {
        format!(
            "<path d=\"M {x1:.1} {base_y} Q {mx:.1} {peak:.1} {x2:.1} {base_y}\" \
             fill=\"none\" stroke=\"#05c\" stroke-width=\"1.5\"/>\n",
            mx = (x1 + x2) / 2.0
        )
    }
    for (idx, &(a, b)) in lay.upper.iter().enumerate() {
        s.push_str(&arc_path(xf(a), xf(b), base_y, base_y - 24.0 * hu[idx] as f64));
    }
    for (idx, &(a, b)) in lay.lower.iter().enumerate() {
        // the closing arc runs into b rather than back to the line
        if a == Rational64::from_integer(0) {
            let (x1, x2) = (xf(b), bx);
            s.push_str(&format!(
                "<path d=\"M {x1:.1} {base_y} Q {mx:.1} {py:.1} {x2:.1} {by:.1}\" \
                 fill=\"none\" stroke=\"#05c\" stroke-width=\"1.5\"/>\n",
                mx = (x1 + x2) / 2.0,
                py = base_y + 24.0 * hl[idx] as f64
            ));
        } else {
            s.push_str(&arc_path(xf(a), xf(b), base_y, base_y + 24.0 * hl[idx] as f64));
        }
    }
    s.push_str("</svg>\n");
    s
}

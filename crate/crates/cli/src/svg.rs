//! SVG pictures of tilings. Levels are one row apart, generator `ξ_i`
//! points at angle `π i / (n + 1)` from the negative x-axis, black tiles
//! are stroked bold and terminal vertices drawn as diamonds.

use std::f64::consts::PI;
use std::fmt::Write;

use zonoweave_core::auxgraph::build_aux;
use zonoweave_core::bruhat::{verify_region, RegionTiling};
use zonoweave_core::tiling::{left_boundary, right_boundary, verify, TilingGraph};
use zonoweave_core::{GTiling, GroundSize, Subset, Tile};

use crate::error::CliError;

const UNIT_X: f64 = 60.0;
const UNIT_Y: f64 = 50.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    /// Draw the horizontal edges of the auxiliary graph as dashed diagonals.
    pub gamma: bool,
}

struct Layout {
    n: usize,
    dx: Vec<f64>,
    x_min: f64,
    width: f64,
}

impl Layout {
    fn new(n: GroundSize) -> Self {
        let n = n.get();
        let dx: Vec<f64> = (1..=n)
            .map(|i| -(PI * i as f64 / (n + 1) as f64).cos())
            .collect();
        let x_min: f64 = dx.iter().filter(|&&d| d < 0.0).sum();
        let x_max: f64 = dx.iter().filter(|&&d| d > 0.0).sum();
        Layout {
            n,
            dx,
            x_min,
            width: (x_max - x_min) * UNIT_X + 2.0 * MARGIN,
        }
    }

    fn height(&self) -> f64 {
        self.n as f64 * UNIT_Y + 2.0 * MARGIN
    }

    fn point(&self, x: Subset) -> (f64, f64) {
        let sx: f64 = x.elements().map(|i| self.dx[i - 1]).sum();
        let px = MARGIN + (sx - self.x_min) * UNIT_X;
        let py = MARGIN + (self.n - x.len()) as f64 * UNIT_Y;
        (round(px), round(py))
    }

    fn coords(&self, x: Subset) -> String {
        let (px, py) = self.point(x);
        format!("{px:.2},{py:.2}")
    }
}

fn round(v: f64) -> f64 {
    let r = (v * 100.0).round() / 100.0;
    // avoid printing -0.00
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn render_tiling(t: &GTiling, style: Style) -> Result<String, CliError> {
    if let Some(v) = verify(t).violations().first() {
        return Err(CliError::Schema(format!("tiling does not verify: {v}")));
    }
    let gamma = if style.gamma {
        build_aux(t)?.horizontal().to_vec()
    } else {
        Vec::new()
    };
    Ok(draw(
        t.n(),
        t.tiles(),
        &t.graph(),
        &left_boundary(t.n()),
        &right_boundary(t.n()),
        &gamma,
    ))
}

pub fn render_region(rt: &RegionTiling, style: Style) -> Result<String, CliError> {
    if let Some(v) = verify_region(rt).violations().first() {
        return Err(CliError::Schema(format!(
            "region tiling does not verify: {v}"
        )));
    }
    let gamma: Vec<(Subset, Subset)> = if style.gamma {
        rt.tiles()
            .iter()
            .filter(|t| !t.is_black())
            .map(|t| (t.left(), t.right()))
            .collect()
    } else {
        Vec::new()
    };
    Ok(draw(
        rt.n(),
        rt.tiles(),
        &rt.graph(),
        rt.region().left().vertices(),
        rt.region().right().vertices(),
        &gamma,
    ))
}

fn draw(
    n: GroundSize,
    tiles: &[Tile],
    g: &TilingGraph,
    left: &[Subset],
    right: &[Subset],
    gamma: &[(Subset, Subset)],
) -> String {
    let l = Layout::new(n);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">",
        w = round(l.width),
        h = round(l.height())
    );
    for black in [false, true] {
        for t in tiles.iter().filter(|t| t.is_black() == black) {
            let pts = [t.bottom(), t.left(), t.top(), t.right()]
                .map(|v| l.coords(v))
                .join(" ");
            let (class, fill, width) = if black {
                ("tile black", "#bbbbbb", 3)
            } else {
                ("tile white", "#ffffff", 1)
            };
            let _ = writeln!(
                s,
                "<polygon class=\"{class}\" data-tile=\"{t}\" points=\"{pts}\" fill=\"{fill}\" fill-opacity=\"0.6\" stroke=\"#000000\" stroke-width=\"{width}\"/>"
            );
        }
    }
    for e in g.edges() {
        let ((x1, y1), (x2, y2)) = (l.point(e.tail()), l.point(e.head()));
        let _ = writeln!(
            s,
            "<line class=\"edge\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#000000\" stroke-width=\"1\"/>"
        );
    }
    for (class, path, color) in [
        ("boundary left", left, "#1f5fbf"),
        ("boundary right", right, "#bf3f1f"),
    ] {
        let pts: Vec<String> = path.iter().map(|&v| l.coords(v)).collect();
        let _ = writeln!(
            s,
            "<polyline class=\"{class}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            pts.join(" ")
        );
    }
    for &(a, b) in gamma {
        let ((x1, y1), (x2, y2)) = (l.point(a), l.point(b));
        let _ = writeln!(
            s,
            "<line class=\"gamma\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#2f8f2f\" stroke-dasharray=\"4 3\"/>"
        );
    }
    let mut vertices: Vec<Subset> = g
        .vertices()
        .chain(left.iter().copied())
        .chain(right.iter().copied())
        .collect();
    vertices.sort();
    vertices.dedup();
    for v in vertices {
        let (x, y) = l.point(v);
        if g.is_terminal(v) {
            let _ = writeln!(
                s,
                "<polygon class=\"terminal\" data-set=\"{v}\" points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\" fill=\"#000000\"/>",
                x,
                y - 5.0,
                x + 5.0,
                y,
                x,
                y + 5.0,
                x - 5.0,
                y
            );
        } else {
            let _ = writeln!(
                s,
                "<circle class=\"vertex\" data-set=\"{v}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#000000\"/>"
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

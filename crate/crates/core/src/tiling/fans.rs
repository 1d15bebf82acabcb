//! Local structure of edges and tiles around each vertex.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::groundset::{GroundSize, Subset};
use crate::tiling::{
    left_boundary, right_boundary, verify, Color, Edge, GTiling, Tile, TilingGraph,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Terminal,
    /// Nonterminal with no black edges.
    Ordinary,
    /// Nonterminal with some black edge.
    Mixed,
}

/// Signed angle sum of the tiles at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FullAngle {
    Zero,
    /// The interior angle of the zonogon between the two boundary edges.
    BoundaryWedge,
    FullTurn,
    /// Anything else; never produced by a valid tiling.
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFan {
    pub vertex: Subset,
    pub kind: VertexKind,
    /// By increasing label.
    pub leaving: Vec<Edge>,
    /// By decreasing label.
    pub entering: Vec<Edge>,
    /// Leading black edges in both fans.
    pub r: usize,
    /// Trailing black edges in both fans.
    pub r_prime: usize,
    /// Tiles predicted from the fans, in the order they were derived.
    pub pairings: Vec<Tile>,
    pub angle: FullAngle,
    /// First structural mismatch, if any.
    pub defect: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFanReport {
    pub fans: Vec<VertexFan>,
}

impl LocalFanReport {
    pub fn passed(&self) -> bool {
        self.fans.iter().all(|f| f.defect.is_none())
    }

    pub fn first_defect(&self) -> Option<(Subset, &'static str)> {
        self.fans
            .iter()
            .find_map(|f| f.defect.map(|d| (f.vertex, d)))
    }

    pub fn fan(&self, v: Subset) -> Option<&VertexFan> {
        self.fans.iter().find(|f| f.vertex == v)
    }
}

/// Fan structure and full angle at every vertex of a verified tiling.
pub fn local_fans(t: &GTiling) -> Result<LocalFanReport> {
    if let Some(v) = verify(t).violations().first() {
        return Err(Error::Unverified(format!("{v}")));
    }
    let g = t.graph();
    let n = t.n();
    let lbd: BTreeSet<Subset> = left_boundary(n).into_iter().collect();
    let rbd: BTreeSet<Subset> = right_boundary(n).into_iter().collect();
    let fans = g
        .vertices()
        .map(|v| fan_at(&g, v, lbd.contains(&v), rbd.contains(&v)))
        .collect();
    Ok(LocalFanReport { fans })
}

fn fan_at(g: &TilingGraph, v: Subset, on_left: bool, on_right: bool) -> VertexFan {
    let n = g.n();
    let leaving = g.leaving(v);
    let entering = g.entering(v);
    let black = |e: &Edge| g.is_black_edge(*e);
    let angle = full_angle(g, v, on_left || on_right);
    let mut fan = VertexFan {
        vertex: v,
        kind: VertexKind::Ordinary,
        leaving,
        entering,
        r: 0,
        r_prime: 0,
        pairings: Vec::new(),
        angle,
        defect: None,
    };

    if g.is_terminal(v) {
        fan.kind = VertexKind::Terminal;
        fan.defect = terminal_defect(g, v, &fan, on_left || on_right);
        return fan;
    }
    if fan.leaving.iter().chain(&fan.entering).any(black) {
        fan.kind = VertexKind::Mixed;
    }

    let (p, pp) = (fan.leaving.len(), fan.entering.len());
    let r = fan.leaving.iter().take_while(|e| black(e)).count();
    let rp = fan
        .leaving
        .iter()
        .rev()
        .take_while(|e| black(e))
        .count()
        .min(p - r);
    fan.r = r;
    fan.r_prime = rp;

    let extreme = v.is_empty() || v == n.full();
    let pattern_ok = |list: &[Edge]| {
        list.iter()
            .enumerate()
            .all(|(k, e)| black(e) == (k < r || k >= list.len() - rp))
    };
    if !extreme && r + rp >= p.min(pp) {
        fan.defect = Some("too many black edges at a nonterminal vertex");
    } else if !(pattern_ok(&fan.leaving) && (pp == 0 || pp > r + rp) && pattern_ok(&fan.entering)) {
        fan.defect = Some("black edges are not at the ends of both fans");
    } else if (on_left && r > 0) || (on_right && rp > 0) {
        fan.defect = Some("black edge at a boundary vertex");
    }
    if fan.defect.is_some() {
        return fan;
    }

    let (e, f) = (&fan.leaving, &fan.entering);
    let mut predicted: Vec<Tile> = Vec::new();
    let mut bad = false;
    let mut push = |base: Subset, a: usize, b: usize, color: Color, ok: bool| {
        if ok && a != b && !base.contains(a) && !base.contains(b) {
            predicted.push(Tile::raw(base, a.min(b), a.max(b), color));
        } else {
            bad = true;
        }
    };
    // consecutive leaving edges: tiles with bottom v
    for q in r..p.saturating_sub(rp + 1) {
        push(v, e[q].label(), e[q + 1].label(), Color::White, true);
    }
    // consecutive entering edges: tiles with top v
    for q in r..pp.saturating_sub(rp + 1) {
        let (a, b) = (f[q].label(), f[q + 1].label());
        push(v.without(a).without(b), a, b, Color::White, true);
    }
    // tiles with right vertex v: leaving label a < entering label b
    if !on_left {
        for k in 0..=r {
            let (a, b) = (e[k].label(), f[r - k].label());
            push(v.without(b), a, b, Color::White, a < b);
        }
        for k in 0..r {
            let (a, b) = (e[k].label(), f[r - 1 - k].label());
            push(v.without(b), a, b, Color::Black, a < b);
        }
    }
    // tiles with left vertex v: entering label i < leaving label j
    if !on_right {
        for k in 0..=rp {
            let (j, i) = (e[p - 1 - k].label(), f[pp - 1 - rp + k].label());
            push(v.without(i), i, j, Color::White, i < j);
        }
        for k in 0..rp {
            let (j, i) = (e[p - 1 - k].label(), f[pp - rp + k].label());
            push(v.without(i), i, j, Color::Black, i < j);
        }
    }
    fan.pairings = predicted;
    if bad {
        fan.defect = Some("paired edges do not form a tile");
        return fan;
    }

    let mut expected: Vec<Tile> = fan.pairings.clone();
    expected.sort();
    let mut actual: Vec<Tile> = g.tiles_at(v).iter().map(|&k| g.tiles()[k]).collect();
    actual.sort();
    if expected != actual {
        fan.defect = Some("tiles at the vertex differ from the fan pairings");
    } else if angle != expected_angle(n, on_left || on_right) {
        fan.defect = Some("full angle has the wrong class");
    }
    fan
}

fn terminal_defect(
    g: &TilingGraph,
    v: Subset,
    fan: &VertexFan,
    on_boundary: bool,
) -> Option<&'static str> {
    if on_boundary {
        return Some("terminal vertex on the boundary");
    }
    let black: Vec<Edge> = fan
        .leaving
        .iter()
        .chain(&fan.entering)
        .filter(|e| g.is_black_edge(**e))
        .copied()
        .collect();
    if black.len() != 2 {
        return Some("terminal vertex without exactly two black edges");
    }
    let (lo, hi) = {
        let (a, b) = (black[0].label(), black[1].label());
        (a.min(b), a.max(b))
    };
    let whites: Vec<&Edge> = fan
        .leaving
        .iter()
        .chain(&fan.entering)
        .filter(|e| !g.is_black_edge(**e))
        .collect();
    if whites.is_empty() {
        return Some("terminal vertex without white edges");
    }
    if whites.iter().any(|e| !(lo < e.label() && e.label() < hi)) {
        return Some("white edge outside the black pair at a terminal vertex");
    }
    for &k in g.tiles_at(v) {
        let t = g.tiles()[k];
        if !t.is_black()
            && t.edges_at(v)
                .iter()
                .any(|e| !(lo..=hi).contains(&e.label()))
        {
            return Some("white tile outside the black pair at a terminal vertex");
        }
    }
    if fan.angle != FullAngle::Zero {
        return Some("full angle at a terminal vertex is not zero");
    }
    None
}

fn expected_angle(n: GroundSize, on_boundary: bool) -> FullAngle {
    if on_boundary {
        // Z_1 has no tiles, so its two vertices see nothing
        if n.get() == 1 {
            FullAngle::Zero
        } else {
            FullAngle::BoundaryWedge
        }
    } else {
        FullAngle::FullTurn
    }
}

/// Counterclockwise index of the direction of `e` seen from `v` among the
/// `2n` generator directions `±ξ_k`.
fn direction(n: usize, v: Subset, e: Edge) -> usize {
    let k = e.label();
    if e.tail() == v {
        n - k
    } else {
        2 * n - k
    }
}

/// Sectors `s` (between directions `s` and `s + 1`) on the short arc from
/// `a` to `b`.
fn short_arc(n: usize, a: usize, b: usize) -> impl Iterator<Item = usize> {
    let m = 2 * n;
    let ccw = (b + m - a) % m;
    let (start, len) = if ccw < n { (a, ccw) } else { (b, m - ccw) };
    (0..len).map(move |d| (start + d) % m)
}

fn full_angle(g: &TilingGraph, v: Subset, on_boundary: bool) -> FullAngle {
    let n = g.n().get();
    let mut cover = alloc::vec![0i32; 2 * n];
    for &k in g.tiles_at(v) {
        let t = g.tiles()[k];
        let [x, y] = t.edges_at(v);
        let sign = if t.is_black() { -1 } else { 1 };
        for s in short_arc(n, direction(n, v, x), direction(n, v, y)) {
            cover[s] += sign;
        }
    }
    if on_boundary {
        let bd: Vec<Edge> = g
            .incident(v)
            .iter()
            .filter(|e| g.tiles_on(**e).len() == 1)
            .copied()
            .collect();
        if bd.len() == 2 {
            let mut wedge = alloc::vec![0i32; 2 * n];
            for s in short_arc(n, direction(n, v, bd[0]), direction(n, v, bd[1])) {
                wedge[s] = 1;
            }
            if cover == wedge && wedge.iter().any(|&c| c != 0) {
                return FullAngle::BoundaryWedge;
            }
        }
    }
    if cover.iter().all(|&c| c == 0) {
        FullAngle::Zero
    } else if cover.iter().all(|&c| c == 1) {
        FullAngle::FullTurn
    } else {
        FullAngle::Irregular
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::enumerate_gtilings;
    use crate::tiling::fixtures::*;

    #[test]
    fn fig1_fans() {
        let rep = local_fans(&fig1()).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_defect());
        let term = rep.fan(s(&[2])).unwrap();
        assert_eq!(term.kind, VertexKind::Terminal);
        assert_eq!(term.angle, FullAngle::Zero);
        let z0 = rep.fan(s(&[])).unwrap();
        assert_eq!(z0.kind, VertexKind::Ordinary);
        assert_eq!((z0.r, z0.r_prime), (0, 0));
        assert_eq!(z0.angle, FullAngle::BoundaryWedge);
        let inner = rep.fan(s(&[2, 4])).unwrap();
        assert_eq!(inner.angle, FullAngle::FullTurn);
        assert!(rep.fans.iter().any(|f| f.kind == VertexKind::Mixed));
    }

    #[test]
    fn all_small_tilings() {
        for n in 1..=4 {
            for t in enumerate_gtilings(gs(n), false).unwrap() {
                let rep = local_fans(&t).unwrap();
                assert!(rep.passed(), "{t:?}: {:?}", rep.first_defect());
                for f in &rep.fans {
                    if f.kind == VertexKind::Ordinary {
                        assert_eq!((f.r, f.r_prime), (0, 0));
                    }
                }
            }
        }
    }

    #[test]
    fn unverified_input_is_rejected() {
        assert!(local_fans(&GTiling::empty(gs(2))).is_err());
    }
}

//! Contraction and expansion of tilings along the strip of the last or the
//! first label.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::groundset::{GroundSize, Subset};
use crate::tiling::{chain_edges, left_boundary, Color, Edge, GTiling, Tile, TilingGraph};
use crate::{Error, Result};

/// Which extreme label is removed or inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The largest label `n`.
    N,
    /// The label `1`; the others shift by one.
    One,
}

impl Side {
    pub fn label(self, n: GroundSize) -> usize {
        match self {
            Side::N => n.get(),
            Side::One => 1,
        }
    }
}

/// One edge of a path, with its traversal direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub edge: Edge,
    pub forward: bool,
}

/// A path from `∅` to `[n]` in a tiling's graph, checked to be legal for
/// expansion on the given side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LegalPath {
    side: Side,
    vertices: Vec<Subset>,
}

impl LegalPath {
    pub fn new(t: &GTiling, side: Side, vertices: Vec<Subset>) -> Result<Self> {
        is_legal_in(&t.graph(), side, &vertices)?;
        Ok(LegalPath { side, vertices })
    }

    pub(crate) fn unchecked(side: Side, vertices: Vec<Subset>) -> Self {
        LegalPath { side, vertices }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn steps(&self) -> Vec<Step> {
        steps_of(&self.vertices).expect("vertices checked on construction")
    }
}

fn steps_of(vertices: &[Subset]) -> Result<Vec<Step>> {
    vertices
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let up = b.difference(a);
            let down = a.difference(b);
            match (up.len(), down.len()) {
                (1, 0) => Ok(Step {
                    edge: Edge::raw(a, up.min_element().unwrap()),
                    forward: true,
                }),
                (0, 1) => Ok(Step {
                    edge: Edge::raw(b, down.min_element().unwrap()),
                    forward: false,
                }),
                _ => Err(Error::PathNotEmbedded(format!(
                    "{a} and {b} are not adjacent"
                ))),
            }
        })
        .collect()
}

/// Checks the label conditions on consecutive steps for expansion on side
/// `n`: no two backward steps in a row, a forward `i` followed by a backward
/// `j` needs `i > j`, a backward `i` followed by a forward `j` needs `i < j`.
fn check_turns(steps: &[Step]) -> Result<()> {
    for w in steps.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (i, j) = (a.edge.label(), b.edge.label());
        let ok = match (a.forward, b.forward) {
            (false, false) => false,
            (true, false) => i > j,
            (false, true) => i < j,
            (true, true) => true,
        };
        if !ok {
            return Err(Error::IllegalPath(format!(
                "turn {} then {} is not allowed",
                a.edge, b.edge
            )));
        }
    }
    Ok(())
}

fn is_legal_in(g: &TilingGraph, side: Side, vertices: &[Subset]) -> Result<()> {
    let n = g.n();
    match side {
        Side::N => {}
        Side::One => {
            let mirrored: Vec<Subset> = vertices.iter().map(|v| v.mirror(n)).collect();
            let gm = TilingGraph::new(&GTiling::from_sorted(
                n,
                g.tiles().iter().map(|t| t.mirrored(n)).collect(),
            ));
            return is_legal_in(&gm, Side::N, &mirrored);
        }
    }
    if vertices.first() != Some(&Subset::EMPTY) || vertices.last() != Some(&n.full()) {
        return Err(Error::IllegalPath("path must run from ∅ to [n]".into()));
    }
    let steps = steps_of(vertices)?;
    for s in &steps {
        if !g.has_edge(s.edge) {
            return Err(Error::PathNotEmbedded(format!("{} is not an edge", s.edge)));
        }
    }
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if !seen.insert(v) {
            return Err(Error::IllegalPath(format!("{v} visited twice")));
        }
        if g.is_terminal(v) {
            return Err(Error::IllegalPath(format!("{v} is terminal")));
        }
    }
    check_turns(&steps)
}

/// Whether `vertices` is a legal expansion path in `t` on `side`.
pub fn is_legal(t: &GTiling, side: Side, vertices: &[Subset]) -> bool {
    is_legal_in(&t.graph(), side, vertices).is_ok()
}

/// Marks the tiles lying left of a path from `∅` to `[n]`: the faces
/// reachable from left-boundary edges off the path without crossing it.
pub fn left_tiles(t: &GTiling, vertices: &[Subset]) -> Result<Vec<bool>> {
    let g = t.graph();
    let steps = steps_of(vertices)?;
    let on_path: BTreeSet<Edge> = steps.iter().map(|s| s.edge).collect();
    Ok(flood_left(&g, &on_path))
}

fn flood_left(g: &TilingGraph, on_path: &BTreeSet<Edge>) -> Vec<bool> {
    let mut left = alloc::vec![false; g.tiles().len()];
    let mut queue = VecDeque::new();
    for e in chain_edges(&left_boundary(g.n())) {
        if on_path.contains(&e) {
            continue;
        }
        for &k in g.tiles_on(e) {
            if !left[k] {
                left[k] = true;
                queue.push_back(k);
            }
        }
    }
    while let Some(k) = queue.pop_front() {
        for e in g.tiles()[k].edges() {
            if on_path.contains(&e) {
                continue;
            }
            for &o in g.tiles_on(e) {
                if !left[o] {
                    left[o] = true;
                    queue.push_back(o);
                }
            }
        }
    }
    left
}

/// Inserts a new strip along `path`, producing a tiling of `Z_{n+1}`.
pub fn expand(t: &GTiling, path: &LegalPath) -> Result<GTiling> {
    let g = t.graph();
    is_legal_in(&g, path.side, &path.vertices)?;
    match path.side {
        Side::N => Ok(expand_last(&g, &path.vertices)),
        Side::One => {
            let n = t.n();
            let m = t.mirror();
            let vs: Vec<Subset> = path.vertices.iter().map(|v| v.mirror(n)).collect();
            Ok(expand_last(&m.graph(), &vs).mirror())
        }
    }
}

fn expand_last(g: &TilingGraph, vertices: &[Subset]) -> GTiling {
    let n = g.n().larger().expect("ground size below the limit");
    let new = n.get();
    let steps = steps_of(vertices).expect("legal path");
    let on_path: BTreeSet<Edge> = steps.iter().map(|s| s.edge).collect();
    let left = flood_left(g, &on_path);
    let mut tiles: Vec<Tile> = g
        .tiles()
        .iter()
        .zip(&left)
        .map(|(t, &l)| {
            if l {
                *t
            } else {
                t.with_base(t.base().with(new))
            }
        })
        .collect();
    for s in &steps {
        let color = if s.forward {
            Color::White
        } else {
            Color::Black
        };
        tiles.push(Tile::raw(s.edge.tail(), s.edge.label(), new, color));
    }
    GTiling::from_sorted(n, tiles)
}

/// Removes the strip of the label on `side`, producing a tiling of
/// `Z_{n-1}`.
pub fn contract(t: &GTiling, side: Side) -> Result<GTiling> {
    let n = t.n();
    let m = n.smaller().ok_or(Error::GroundSize(0))?;
    let k = side.label(n);
    let tiles = t
        .tiles()
        .iter()
        .filter(|x| !x.has_label(k))
        .map(|x| {
            let base = x.base().without(k).delete_and_shift(k);
            match side {
                Side::N => x.with_base(base),
                Side::One => Tile::raw(base, x.i() - 1, x.j() - 1, x.color()),
            }
        })
        .collect();
    Ok(GTiling::from_sorted(m, tiles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::fixtures::*;
    use crate::tiling::{right_boundary, strip_of, verify};

    fn z2() -> GTiling {
        GTiling::new(gs(2), [w(&[], 1, 2)]).unwrap()
    }

    #[test]
    fn expand_z2_along_boundaries() {
        let t = z2();
        let lp = LegalPath::new(&t, Side::N, left_boundary(gs(2))).unwrap();
        let e = expand(&t, &lp).unwrap();
        assert_eq!(e.tiles(), [w(&[], 1, 3), w(&[1], 2, 3), w(&[3], 1, 2)]);
        let rp = LegalPath::new(&t, Side::N, right_boundary(gs(2))).unwrap();
        let e = expand(&t, &rp).unwrap();
        assert_eq!(e.tiles(), [w(&[], 1, 2), w(&[], 2, 3), w(&[2], 1, 3)]);
        assert!(verify(&e).passed());
        let o = expand(
            &t,
            &LegalPath::new(&t, Side::One, left_boundary(gs(2))).unwrap(),
        )
        .unwrap();
        assert!(verify(&o).passed());
        assert_eq!(contract(&o, Side::One).unwrap(), t);
    }

    #[test]
    fn contract_fig1() {
        let t = fig1();
        let c = contract(&t, Side::N).unwrap();
        assert!(verify(&c).passed());
        let expect: Vec<Subset> = gs(3)
            .all_subsets()
            .into_iter()
            .filter(|&x| x != s(&[1, 3]))
            .collect();
        assert_eq!(c.spectrum().unwrap().to_vec(), expect);
        let c1 = contract(&t, Side::One).unwrap();
        assert!(verify(&c1).passed());
        assert_eq!(c1, contract(&t.mirror(), Side::N).unwrap().mirror());
    }

    #[test]
    fn fig1_strip_is_a_legal_path() {
        let t = fig1();
        let q = strip_of(&t, 4).unwrap();
        let c = contract(&t, Side::N).unwrap();
        // the right side of the 4-strip, read from the bottom
        let mut path: Vec<Subset> = q.right();
        path.reverse();
        let lp = LegalPath::new(&c, Side::N, path).unwrap();
        assert!(lp.steps().iter().any(|s| !s.forward));
        assert_eq!(expand(&c, &lp).unwrap(), t);
    }

    #[test]
    fn illegal_turns() {
        let st = |tail: &[usize], l, forward| Step {
            edge: Edge::raw(s(tail), l),
            forward,
        };
        assert!(check_turns(&[st(&[], 2, true), st(&[], 1, false)]).is_ok());
        assert!(check_turns(&[st(&[], 1, true), st(&[], 2, false)]).is_err());
        assert!(check_turns(&[st(&[1], 2, false), st(&[1], 3, true)]).is_ok());
        assert!(check_turns(&[st(&[1], 3, false), st(&[1], 2, true)]).is_err());
        assert!(check_turns(&[st(&[1], 3, false), st(&[1], 2, false)]).is_err());
    }

    #[test]
    fn rejects_bad_paths() {
        let t = z2();
        assert!(!is_legal(&t, Side::N, &[s(&[]), s(&[1, 2])]));
        assert!(!is_legal(&t, Side::N, &[s(&[]), s(&[1])]));
        assert!(matches!(
            LegalPath::new(
                &t,
                Side::N,
                alloc::vec![s(&[]), s(&[1]), s(&[]), s(&[2]), s(&[1, 2])]
            ),
            Err(Error::IllegalPath(_))
        ));
    }
}

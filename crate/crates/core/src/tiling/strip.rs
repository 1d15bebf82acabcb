//! The `i`-strip: the dual path through all tiles carrying label `i`.

use alloc::format;
use alloc::vec::Vec;

use crate::groundset::Subset;
use crate::tiling::{Color, Edge, GTiling, Tile, TilingGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub label: usize,
    /// `e_0, ..., e_r`, all `i`-edges.
    pub edges: Vec<Edge>,
    /// `τ_1, ..., τ_r`.
    pub tiles: Vec<Tile>,
}

impl Strip {
    /// Vertices of the right boundary `R_Q`: tails of `e_0, ..., e_r`.
    pub fn right(&self) -> Vec<Subset> {
        self.edges.iter().map(|e| e.tail()).collect()
    }

    /// Vertices of the left boundary `L_Q`: heads of `e_0, ..., e_r`.
    pub fn left(&self) -> Vec<Subset> {
        self.edges.iter().map(|e| e.head()).collect()
    }

    /// Whether the `p`-th edge of the right boundary (from `v_{p-1}` to
    /// `v_p`, `1 <= p <= r`) is traversed forward.
    pub fn right_edge_forward(&self, p: usize) -> bool {
        self.edges[p].tail().len() > self.edges[p - 1].tail().len()
    }

    /// Label of the `p`-th boundary edge.
    pub fn side_label(&self, p: usize) -> usize {
        let t = &self.tiles[p - 1];
        if t.i() == self.label {
            t.j()
        } else {
            t.i()
        }
    }

    /// Forward/backward rule for boundary edges: forward exactly for white
    /// `i*`-tiles and black `*i`-tiles.
    pub fn predicted_forward(&self, p: usize) -> bool {
        let t = &self.tiles[p - 1];
        let first = t.i() == self.label;
        matches!(
            (t.color(), first),
            (Color::White, true) | (Color::Black, false)
        )
    }
}

/// Follows the `i`-strip from the left-boundary edge `[i-1] → [i]`.
pub fn strip_of(t: &GTiling, i: usize) -> Result<Strip> {
    let n = t.n().get();
    if !(1..=n).contains(&i) {
        return Err(Error::ElementOutOfRange {
            element: i,
            n: n as u8,
        });
    }
    let g = TilingGraph::new(t);
    strip_in(&g, i)
}

pub(crate) fn strip_in(g: &TilingGraph, i: usize) -> Result<Strip> {
    let n = g.n().get();
    let start = Edge::raw(Subset::interval(1, i - 1), i);
    let end = Edge::raw(Subset::interval(i + 1, n), i);
    let mut edges = alloc::vec![start];
    let mut tiles: Vec<Tile> = Vec::new();
    let mut prev: Option<usize> = None;
    let mut cur = start;
    loop {
        let next = g.tiles_on(cur).iter().copied().find(|&k| Some(k) != prev);
        let Some(k) = next else { break };
        if tiles.len() > g.tiles().len() {
            return Err(Error::Unverified(format!("{i}-strip does not terminate")));
        }
        let tile = g.tiles()[k];
        let p = if tile.i() == i { tile.j() } else { tile.i() };
        let y = cur.tail();
        cur = if y.contains(p) {
            Edge::raw(y.without(p), i)
        } else {
            Edge::raw(y.with(p), i)
        };
        tiles.push(tile);
        edges.push(cur);
        prev = Some(k);
    }
    if cur != end {
        return Err(Error::Unverified(format!(
            "{i}-strip ends at {cur}, expected {end}"
        )));
    }
    Ok(Strip {
        label: i,
        edges,
        tiles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::fixtures::*;

    #[test]
    fn single_tile() {
        let t = GTiling::new(gs(2), [w(&[], 1, 2)]).unwrap();
        let q = strip_of(&t, 1).unwrap();
        assert_eq!(q.edges, [Edge::raw(s(&[]), 1), Edge::raw(s(&[2]), 1)]);
        assert_eq!(q.tiles, [w(&[], 1, 2)]);
        assert!(strip_of(&t, 3).is_err());
    }

    #[test]
    fn fig1_strips() {
        let t = fig1();
        let q = strip_of(&t, 4).unwrap();
        assert_eq!(q.edges[0], Edge::raw(s(&[1, 2, 3]), 4));
        assert_eq!(*q.edges.last().unwrap(), Edge::raw(s(&[]), 4));
        for i in 1..=4 {
            let q = strip_of(&t, i).unwrap();
            assert_eq!(
                q.tiles.len(),
                t.tiles().iter().filter(|x| x.has_label(i)).count()
            );
            for p in 1..q.edges.len() {
                assert_eq!(
                    q.right_edge_forward(p),
                    q.predicted_forward(p),
                    "i={i} p={p}"
                );
            }
            let left = q.left();
            let right = q.right();
            for (l, r) in left.iter().zip(&right) {
                assert_eq!(*l, r.with(i));
            }
        }
    }
}

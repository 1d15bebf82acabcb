//! The graph `G_T` of a tiling: vertices and edges of its tiles plus the
//! boundary of the zonogon.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::groundset::{GroundSize, Subset};
use crate::tiling::{chain_edges, left_boundary, right_boundary, Color, Edge, GTiling, Tile};
use crate::wscoll::WsCollection;

#[derive(Clone, Debug)]
pub struct TilingGraph {
    n: GroundSize,
    tiles: Vec<Tile>,
    vertices: BTreeSet<Subset>,
    /// Edge to the indices of tiles containing it.
    edges: BTreeMap<Edge, Vec<usize>>,
    /// Vertex to its incident edges.
    incident: BTreeMap<Subset, Vec<Edge>>,
    /// Vertex to the indices of tiles having it as a corner.
    faces: BTreeMap<Subset, Vec<usize>>,
    terminals: BTreeSet<Subset>,
}

impl TilingGraph {
    pub fn new(t: &GTiling) -> Self {
        let n = t.n();
        let extra: Vec<Edge> = chain_edges(&left_boundary(n))
            .into_iter()
            .chain(chain_edges(&right_boundary(n)))
            .collect();
        Self::with_extra_edges(n, t.tiles(), &extra)
    }

    /// Graph of `tiles` with additional edges that need not lie in any tile
    /// (boundary paths of a region, or of `Z_1`).
    pub fn with_extra_edges(n: GroundSize, tiles: &[Tile], extra: &[Edge]) -> Self {
        let mut edges: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        let mut faces: BTreeMap<Subset, Vec<usize>> = BTreeMap::new();
        let mut terminals = BTreeSet::new();
        for (k, t) in tiles.iter().enumerate() {
            for e in t.edges() {
                edges.entry(e).or_default().push(k);
            }
            for v in t.corners() {
                faces.entry(v).or_default().push(k);
            }
            if t.is_black() {
                terminals.insert(t.bottom());
                terminals.insert(t.top());
            }
        }
        for &e in extra {
            edges.entry(e).or_default();
        }
        let mut vertices = BTreeSet::new();
        let mut incident: BTreeMap<Subset, Vec<Edge>> = BTreeMap::new();
        for &e in edges.keys() {
            vertices.insert(e.tail());
            vertices.insert(e.head());
            incident.entry(e.tail()).or_default().push(e);
            incident.entry(e.head()).or_default().push(e);
        }
        TilingGraph {
            n,
            tiles: tiles.to_vec(),
            vertices,
            edges,
            incident,
            faces,
            terminals,
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn vertices(&self) -> impl Iterator<Item = Subset> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: Subset) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains_key(&e)
    }

    /// Indices of tiles containing `e`.
    pub fn tiles_on(&self, e: Edge) -> &[usize] {
        self.edges.get(&e).map_or(&[], |v| v.as_slice())
    }

    /// Indices of tiles having `v` as a corner.
    pub fn tiles_at(&self, v: Subset) -> &[usize] {
        self.faces.get(&v).map_or(&[], |v| v.as_slice())
    }

    pub fn incident(&self, v: Subset) -> &[Edge] {
        self.incident.get(&v).map_or(&[], |v| v.as_slice())
    }

    /// Edges leaving `v`, by increasing label.
    pub fn leaving(&self, v: Subset) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .incident(v)
            .iter()
            .filter(|e| e.tail() == v)
            .copied()
            .collect();
        out.sort_by_key(|e| e.label());
        out
    }

    /// Edges entering `v`, by decreasing label.
    pub fn entering(&self, v: Subset) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .incident(v)
            .iter()
            .filter(|e| e.head() == v)
            .copied()
            .collect();
        out.sort_by_key(|e| core::cmp::Reverse(e.label()));
        out
    }

    pub fn is_terminal(&self, v: Subset) -> bool {
        self.terminals.contains(&v)
    }

    pub fn terminals(&self) -> impl Iterator<Item = Subset> + '_ {
        self.terminals.iter().copied()
    }

    /// Edge lies in some black tile.
    pub fn is_black_edge(&self, e: Edge) -> bool {
        self.tiles_on(e).iter().any(|&k| self.tiles[k].is_black())
    }

    /// White edge with both ends nonterminal.
    pub fn is_fully_white(&self, e: Edge) -> bool {
        !self.is_black_edge(e) && !self.is_terminal(e.tail()) && !self.is_terminal(e.head())
    }

    /// The tile with the given shape, if present.
    pub fn find_tile(&self, base: Subset, i: usize, j: usize) -> Option<&Tile> {
        let e = Edge::raw(base, i);
        self.tiles_on(e)
            .iter()
            .map(|&k| &self.tiles[k])
            .find(|t| t.base() == base && t.i() == i && t.j() == j)
    }

    pub fn tile_color(&self, base: Subset, i: usize, j: usize) -> Option<Color> {
        self.find_tile(base, i, j).map(|t| t.color())
    }

    /// Subsets at nonterminal vertices.
    pub fn spectrum(&self) -> WsCollection {
        WsCollection::from_members_unchecked(
            self.n,
            self.vertices
                .iter()
                .filter(|v| !self.terminals.contains(v))
                .copied()
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::fixtures::*;

    #[test]
    fn fig1_graph() {
        let g = fig1().graph();
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.terminals().collect::<Vec<_>>(), [s(&[2]), s(&[1, 2, 4])]);
        assert_eq!(g.spectrum(), fig1_spectrum());
        let e = Edge::raw(s(&[2]), 1);
        assert!(g.is_black_edge(e));
        assert!(!g.is_fully_white(Edge::raw(s(&[2]), 3)));
        assert!(g.is_fully_white(Edge::raw(s(&[2, 3]), 4)));
        assert_eq!(
            g.leaving(s(&[4]))
                .iter()
                .map(|e| e.label())
                .collect::<Vec<_>>(),
            [1, 2, 3]
        );
        assert_eq!(
            g.entering(s(&[2, 3, 4]))
                .iter()
                .map(|e| e.label())
                .collect::<Vec<_>>(),
            [4, 3, 2]
        );
    }

    #[test]
    fn empty_tiling_on_z1() {
        let g = GTiling::empty(gs(1)).graph();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.spectrum().to_vec(), [s(&[]), s(&[1])]);
    }
}

//! Generalized tilings of the zonogon `Z_n`.
//!
//! Vertices are subsets of `[n]`; a tile `τ(X; i, j)` has corners `X`, `Xi`,
//! `Xj`, `Xij`. Geometry only enters through the exact same-side test used
//! for overlap decisions and through rendering, both via [`Zonogon`].

mod edges;
mod enumerate;
mod fans;
mod forest;
mod graph;
mod strip;
mod surgery;
mod verify;

use alloc::vec::Vec;
use core::fmt;

use crate::groundset::{GroundSize, Subset};
use crate::wscoll::WsCollection;
use crate::{Error, Result};

pub use edges::{edge_existence_checks, EdgeCheckReport};
pub use enumerate::{enumerate_gtilings, legal_paths, tiling_from_spectrum};
pub use fans::{local_fans, FullAngle, LocalFanReport, VertexFan, VertexKind};
pub use forest::{principal_forest, PrincipalForest};
pub use graph::TilingGraph;
pub use strip::{strip_of, Strip};
pub use surgery::{contract, expand, is_legal, left_tiles, LegalPath, Side, Step};
pub use verify::{verify, verify_surface, Axiom, AxiomReport, Boundary, Violation, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::White => "white",
            Color::Black => "black",
        })
    }
}

/// A directed edge `(X, X ∪ {label})`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    tail: Subset,
    label: u8,
}

impl Edge {
    pub fn new(tail: Subset, label: usize) -> Result<Self> {
        if !(1..=64).contains(&label) || tail.contains(label) {
            return Err(Error::ElementOutOfRange {
                element: label,
                n: 64,
            });
        }
        Ok(Edge {
            tail,
            label: label as u8,
        })
    }

    pub(crate) fn raw(tail: Subset, label: usize) -> Self {
        debug_assert!(!tail.contains(label));
        Edge {
            tail,
            label: label as u8,
        }
    }

    pub fn tail(&self) -> Subset {
        self.tail
    }

    pub fn head(&self) -> Subset {
        self.tail.with(self.label as usize)
    }

    pub fn label(&self) -> usize {
        self.label as usize
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: Subset) -> Subset {
        if v == self.tail {
            self.head()
        } else {
            self.tail
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}->{}", self.tail, self.label, self.head())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A colored tile `τ(X; i, j)` with `i < j` and `i, j ∉ X`.
///
/// Ordering is canonical: base (canonical subset order), then `i`, `j`,
/// color.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    base: Subset,
    i: u8,
    j: u8,
    color: Color,
}

impl Tile {
    pub fn new(base: Subset, i: usize, j: usize, color: Color) -> Result<Self> {
        if i == 0 || i >= j || j > 64 || base.contains(i) || base.contains(j) {
            return Err(Error::Unverified(alloc::format!(
                "malformed tile base {base} labels {i},{j}"
            )));
        }
        Ok(Tile {
            base,
            i: i as u8,
            j: j as u8,
            color,
        })
    }

    pub fn white(base: Subset, i: usize, j: usize) -> Result<Self> {
        Self::new(base, i, j, Color::White)
    }

    pub fn black(base: Subset, i: usize, j: usize) -> Result<Self> {
        Self::new(base, i, j, Color::Black)
    }

    pub(crate) fn raw(base: Subset, i: usize, j: usize, color: Color) -> Self {
        debug_assert!(i < j && !base.contains(i) && !base.contains(j));
        Tile {
            base,
            i: i as u8,
            j: j as u8,
            color,
        }
    }

    pub fn base(&self) -> Subset {
        self.base
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn is_black(&self) -> bool {
        self.color == Color::Black
    }

    pub fn with_color(self, color: Color) -> Tile {
        Tile { color, ..self }
    }

    pub fn with_base(self, base: Subset) -> Tile {
        debug_assert!(!base.contains(self.i()) && !base.contains(self.j()));
        Tile { base, ..self }
    }

    /// `(X, i, j)`: the tile's position, ignoring color.
    pub fn shape(&self) -> (Subset, u8, u8) {
        (self.base, self.i, self.j)
    }

    pub fn bottom(&self) -> Subset {
        self.base
    }

    pub fn left(&self) -> Subset {
        self.base.with(self.i())
    }

    pub fn right(&self) -> Subset {
        self.base.with(self.j())
    }

    pub fn top(&self) -> Subset {
        self.base.with(self.i()).with(self.j())
    }

    pub fn corners(&self) -> [Subset; 4] {
        [self.bottom(), self.left(), self.right(), self.top()]
    }

    /// `bℓ, br, ℓt, rt`.
    pub fn edges(&self) -> [Edge; 4] {
        let (x, i, j) = (self.base, self.i(), self.j());
        [
            Edge::raw(x, i),
            Edge::raw(x, j),
            Edge::raw(x.with(i), j),
            Edge::raw(x.with(j), i),
        ]
    }

    pub fn has_label(&self, k: usize) -> bool {
        self.i() == k || self.j() == k
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }

    /// Whether `v` is a corner.
    pub fn has_vertex(&self, v: Subset) -> bool {
        self.corners().contains(&v)
    }

    /// The two edges of this tile incident to corner `v`.
    pub fn edges_at(&self, v: Subset) -> [Edge; 2] {
        let [bl, br, lt, rt] = self.edges();
        if v == self.bottom() {
            [bl, br]
        } else if v == self.left() {
            [bl, lt]
        } else if v == self.right() {
            [br, rt]
        } else {
            debug_assert_eq!(v, self.top());
            [lt, rt]
        }
    }

    /// `τ([n] - Xij; i, j)`.
    pub fn reversed(&self, n: GroundSize) -> Tile {
        Tile {
            base: self.top().complement(n),
            ..*self
        }
    }

    /// Image under the label reversal `k -> n + 1 - k`.
    pub fn mirrored(&self, n: GroundSize) -> Tile {
        let m = n.get() + 1;
        Tile {
            base: self.base.mirror(n),
            i: (m - self.j()) as u8,
            j: (m - self.i()) as u8,
            color: self.color,
        }
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.color {
            Color::White => "w",
            Color::Black => "b",
        };
        write!(f, "τ({};{},{}){c}", self.base, self.i, self.j)
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact plane geometry of `Z_n`: generator `ξ_i = (a_i, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zonogon {
    n: GroundSize,
    offsets: Vec<i128>,
}

impl Zonogon {
    /// `a_i = 2^(i-1)`.
    pub fn standard(n: GroundSize) -> Self {
        Zonogon {
            n,
            offsets: (0..n.get()).map(|k| 1i128 << k).collect(),
        }
    }

    /// Custom offsets; must be strictly increasing with pairwise distinct
    /// subset sums. The distinct-sums check is exhaustive and limited to
    /// `n <= 20`.
    pub fn with_offsets(offsets: &[i128]) -> Result<Self> {
        let n = GroundSize::new(offsets.len())?;
        if offsets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Unverified("offsets must increase".into()));
        }
        if n.get() > 20 {
            return Err(Error::CostGuard {
                n: n.get(),
                limit: 20,
            });
        }
        let mut sums: Vec<(usize, i128)> = (0u64..1 << n.get())
            .map(|b| {
                let s = Subset::from_bits(b);
                (s.len(), s.elements().map(|k| offsets[k - 1]).sum())
            })
            .collect();
        sums.sort();
        if sums.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Unverified("subset sums collide".into()));
        }
        Ok(Zonogon {
            n,
            offsets: offsets.to_vec(),
        })
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn offset(&self, k: usize) -> i128 {
        self.offsets[k - 1]
    }

    /// `Σ_{k ∈ X} ξ_k` as `(x, height)`.
    pub fn point(&self, x: Subset) -> (i128, i128) {
        (x.elements().map(|k| self.offset(k)).sum(), x.len() as i128)
    }

    /// `det(ξ_p, ξ_q)`; negative exactly when `p < q`.
    pub fn cross(&self, p: usize, q: usize) -> i128 {
        self.offset(p) - self.offset(q)
    }
}

/// A collection of colored tiles on `Z_n`.
///
/// Tiles are kept in canonical order. Duplicates are allowed so that
/// verification can report them; constructors check only that each tile is
/// well formed and fits in `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTiling {
    n: GroundSize,
    tiles: Vec<Tile>,
}

impl GTiling {
    pub fn new<I: IntoIterator<Item = Tile>>(n: GroundSize, tiles: I) -> Result<Self> {
        let mut tiles: Vec<Tile> = tiles.into_iter().collect();
        for t in &tiles {
            if t.j() > n.get() || !t.base().fits(n) {
                return Err(Error::ElementOutOfRange {
                    element: t.j().max(t.base().max_or_zero()),
                    n: n.get() as u8,
                });
            }
        }
        tiles.sort();
        Ok(GTiling { n, tiles })
    }

    pub(crate) fn from_sorted(n: GroundSize, mut tiles: Vec<Tile>) -> Self {
        tiles.sort();
        GTiling { n, tiles }
    }

    /// The empty tiling, a g-tiling only for `n = 1`.
    pub fn empty(n: GroundSize) -> Self {
        GTiling {
            n,
            tiles: Vec::new(),
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn black_tiles(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| t.is_black())
    }

    pub fn white_tiles(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| !t.is_black())
    }

    pub fn is_pure(&self) -> bool {
        self.black_tiles().next().is_none()
    }

    pub fn graph(&self) -> TilingGraph {
        TilingGraph::new(self)
    }

    /// Subsets at nonterminal vertices. Fails on tilings that do not verify.
    pub fn spectrum(&self) -> Result<WsCollection> {
        let report = verify(self);
        if let Some(v) = report.violations().first() {
            return Err(Error::Unverified(alloc::format!("{v}")));
        }
        Ok(self.spectrum_unchecked())
    }

    /// Spectrum without running verification first.
    pub fn spectrum_unchecked(&self) -> WsCollection {
        self.graph().spectrum()
    }

    /// `T^rev`: every `τ(X; i, j)` becomes `τ([n] - Xij; i, j)`.
    pub fn reverse(&self) -> GTiling {
        GTiling::from_sorted(
            self.n,
            self.tiles.iter().map(|t| t.reversed(self.n)).collect(),
        )
    }

    /// Image under the label reversal `k -> n + 1 - k`.
    pub fn mirror(&self) -> GTiling {
        GTiling::from_sorted(
            self.n,
            self.tiles.iter().map(|t| t.mirrored(self.n)).collect(),
        )
    }
}

impl fmt::Debug for GTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GTiling(n={}, ", self.n)?;
        f.debug_list().entries(self.tiles.iter()).finish()?;
        f.write_str(")")
    }
}

/// Vertices `[0], [1], ..., [n]` of the left boundary.
pub fn left_boundary(n: GroundSize) -> Vec<Subset> {
    (0..=n.get()).map(|k| Subset::interval(1, k)).collect()
}

/// Vertices `[n+1..n], [n..n], ..., [1..n]` of the right boundary, from
/// `∅` up to `[n]`.
pub fn right_boundary(n: GroundSize) -> Vec<Subset> {
    (0..=n.get())
        .map(|k| Subset::interval(n.get() + 1 - k, n.get()))
        .collect()
}

/// Edges of a vertex chain `∅ = C0 ⊂ C1 ⊂ ... ⊂ Cn`.
pub fn chain_edges(chain: &[Subset]) -> Vec<Edge> {
    chain
        .windows(2)
        .map(|w| Edge::raw(w[0], w[1].difference(w[0]).min_element().unwrap()))
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn gs(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    pub fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    pub fn w(x: &[usize], i: usize, j: usize) -> Tile {
        Tile::white(s(x), i, j).unwrap()
    }

    pub fn b(x: &[usize], i: usize, j: usize) -> Tile {
        Tile::black(s(x), i, j).unwrap()
    }

    /// The n = 4 tiling with spectrum
    /// {∅,1,4,12,14,23,24,34,123,234,1234} and the single black tile
    /// τ({2};1,4).
    pub fn fig1() -> GTiling {
        GTiling::new(
            gs(4),
            [
                w(&[], 1, 4),
                w(&[1], 2, 4),
                w(&[4], 1, 2),
                w(&[4], 2, 3),
                w(&[2], 1, 3),
                w(&[2], 3, 4),
                b(&[2], 1, 4),
                w(&[2, 3], 1, 4),
            ],
        )
        .unwrap()
    }

    pub fn fig1_spectrum() -> WsCollection {
        WsCollection::new(
            gs(4),
            [
                s(&[]),
                s(&[1]),
                s(&[4]),
                s(&[1, 2]),
                s(&[1, 4]),
                s(&[2, 3]),
                s(&[2, 4]),
                s(&[3, 4]),
                s(&[1, 2, 3]),
                s(&[2, 3, 4]),
                s(&[1, 2, 3, 4]),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn tile_corners_and_edges() {
        let t = w(&[2], 1, 4);
        assert_eq!(
            t.corners(),
            [s(&[2]), s(&[1, 2]), s(&[2, 4]), s(&[1, 2, 4])]
        );
        assert_eq!(t.edges_at(s(&[1, 2]))[1].head(), s(&[1, 2, 4]));
        assert!(Tile::white(s(&[1]), 1, 2).is_err());
        assert!(Tile::white(s(&[]), 2, 2).is_err());
        assert_eq!(t.reversed(gs(4)), w(&[3], 1, 4));
        assert_eq!(t.mirrored(gs(4)), w(&[3], 1, 4));
        assert_eq!(w(&[], 1, 2).mirrored(gs(3)), w(&[], 2, 3));
    }

    #[test]
    fn canonical_tile_order() {
        let t = GTiling::new(gs(3), [w(&[1], 2, 3), w(&[], 2, 3), w(&[], 1, 3)]).unwrap();
        assert_eq!(t.tiles(), &[w(&[], 1, 3), w(&[], 2, 3), w(&[1], 2, 3)]);
        assert!(GTiling::new(gs(2), [w(&[], 1, 3)]).is_err());
    }

    #[test]
    fn zonogon_geometry() {
        let z = Zonogon::standard(gs(4));
        assert_eq!(z.point(s(&[1, 3])), (5, 2));
        assert!(z.cross(1, 2) < 0 && z.cross(3, 2) > 0);
        assert!(Zonogon::with_offsets(&[1, 2, 3, 4]).is_err());
        assert!(Zonogon::with_offsets(&[1, 2, 3]).is_ok());
        assert!(Zonogon::with_offsets(&[1, 3, 2]).is_err());
        assert!(Zonogon::with_offsets(&[-3, 0, 5]).is_ok());
    }

    #[test]
    fn boundary_chains() {
        assert_eq!(left_boundary(gs(2)), [s(&[]), s(&[1]), s(&[1, 2])]);
        assert_eq!(right_boundary(gs(2)), [s(&[]), s(&[2]), s(&[1, 2])]);
        let e = chain_edges(&right_boundary(gs(2)));
        assert_eq!(e.iter().map(|e| e.label()).collect::<Vec<_>>(), [2, 1]);
    }
}

//! Axiom verification for tilings of a zonogon or of a region bounded by two
//! vertex chains.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::groundset::{GroundSize, Subset};
use crate::tiling::{
    chain_edges, left_boundary, right_boundary, Color, Edge, GTiling, Tile, TilingGraph, Zonogon,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Edge multiplicities and distinct tiles.
    T1,
    /// Overlap rules across shared edges.
    T2,
    /// Black tiles: isolated bottoms and tops, all edges leave the bottom
    /// and enter the top.
    T3,
    /// The surface glued from the tiles is a disc.
    T4,
    /// Region boundaries must consist of nonterminal vertices.
    BoundaryVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Tile(Tile),
    Tiles(Tile, Tile),
    Edge(Edge),
    Vertex(Subset),
    Surface {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
    pub reason: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} (", self.axiom, self.reason)?;
        match self.witness {
            Witness::Tile(t) => write!(f, "tile {t}")?,
            Witness::Tiles(a, b) => write!(f, "tiles {a}, {b}")?,
            Witness::Edge(e) => write!(f, "edge {e}")?,
            Witness::Vertex(v) => write!(f, "vertex {v}")?,
            Witness::Surface {
                vertices,
                edges,
                faces,
            } => write!(f, "V={vertices} E={edges} F={faces}")?,
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passed_axiom(&self, a: Axiom) -> bool {
        self.first(a).is_none()
    }

    pub fn first(&self, a: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == a)
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    fn push(&mut self, axiom: Axiom, witness: Witness, reason: &'static str) {
        self.violations.push(Violation {
            axiom,
            witness,
            reason,
        });
    }
}

/// Where the surface is expected to end.
///
/// `single` edges must lie in exactly one tile, `shared` edges in none, and
/// every other edge in exactly two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub single: BTreeSet<Edge>,
    pub shared: BTreeSet<Edge>,
    /// Vertices that must be nonterminal.
    pub nonterminal: BTreeSet<Subset>,
    /// Whether pieces of the surface may touch at a single vertex.
    pub allow_pinch: bool,
}

impl Boundary {
    /// Region between two vertex chains from `∅` to `[n]`.
    pub fn between_chains(left: &[Subset], right: &[Subset]) -> Self {
        let l: BTreeSet<Edge> = chain_edges(left).into_iter().collect();
        let r: BTreeSet<Edge> = chain_edges(right).into_iter().collect();
        let shared: BTreeSet<Edge> = l.intersection(&r).copied().collect();
        let single = l.symmetric_difference(&r).copied().collect();
        // the chains may touch only at their ends unless they share a vertex
        let ends = [left.first(), left.last()];
        let allow_pinch = left
            .iter()
            .filter(|v| !ends.contains(&Some(*v)))
            .any(|v| right.contains(v));
        Boundary {
            single,
            shared,
            nonterminal: left.iter().chain(right).copied().collect(),
            allow_pinch,
        }
    }

    /// The boundary of `Z_n`.
    pub fn zonogon(n: GroundSize) -> Self {
        let mut b = Self::between_chains(&left_boundary(n), &right_boundary(n));
        b.nonterminal.clear();
        b.allow_pinch = false;
        b
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.single.iter().chain(&self.shared).copied()
    }
}

/// Checks all four axioms for a tiling of `Z_n`.
pub fn verify(t: &GTiling) -> AxiomReport {
    verify_surface(t.n(), t.tiles(), &Boundary::zonogon(t.n()))
}

/// Checks the axioms for `tiles` against an arbitrary boundary.
pub fn verify_surface(n: GroundSize, tiles: &[Tile], boundary: &Boundary) -> AxiomReport {
    let mut report = AxiomReport::default();

    let mut seen: BTreeMap<(Subset, u8, u8), Tile> = BTreeMap::new();
    let mut distinct = Vec::new();
    for &t in tiles {
        if t.j() > n.get() || !t.base().fits(n) {
            report.push(Axiom::T1, Witness::Tile(t), "tile outside the ground set");
            continue;
        }
        match seen.get(&t.shape()) {
            Some(&prev) => report.push(Axiom::T1, Witness::Tiles(prev, t), "tiles coincide"),
            None => {
                seen.insert(t.shape(), t);
                distinct.push(t);
            }
        }
    }

    let extra: Vec<Edge> = boundary.edges().collect();
    let g = TilingGraph::with_extra_edges(n, &distinct, &extra);

    check_multiplicities(&g, boundary, &mut report);
    check_overlaps(&g, &mut report);
    check_black_tiles(&g, &mut report);
    check_disc(&g, boundary, &mut report);

    for &v in &boundary.nonterminal {
        if g.is_terminal(v) {
            report.push(
                Axiom::BoundaryVertices,
                Witness::Vertex(v),
                "boundary vertex is terminal",
            );
        }
    }
    report
}

fn check_multiplicities(g: &TilingGraph, boundary: &Boundary, report: &mut AxiomReport) {
    for e in g.edges() {
        let count = g.tiles_on(e).len();
        let (expected, reason) = if boundary.shared.contains(&e) {
            (0, "shared boundary edge lies in a tile")
        } else if boundary.single.contains(&e) {
            (1, "boundary edge not in exactly one tile")
        } else {
            (2, "inner edge not in exactly two tiles")
        };
        if count != expected {
            report.push(Axiom::T1, Witness::Edge(e), reason);
        }
    }
}

/// Sign of `det(ξ_p, d)` where `d` points from edge `e` into tile `t`.
fn side_of(z: &Zonogon, t: &Tile, e: Edge) -> i128 {
    let p = e.label();
    let q = if t.i() == p { t.j() } else { t.i() };
    let c = z.cross(p, q).signum();
    if e.tail().contains(q) {
        -c
    } else {
        c
    }
}

/// Whether two tiles sharing edge `e` lie on the same side of it.
pub(crate) fn overlap_at(z: &Zonogon, a: &Tile, b: &Tile, e: Edge) -> bool {
    side_of(z, a, e) == side_of(z, b, e)
}

fn check_overlaps(g: &TilingGraph, report: &mut AxiomReport) {
    let z = Zonogon::standard(g.n());
    for e in g.edges() {
        let on = g.tiles_on(e);
        for (x, &ka) in on.iter().enumerate() {
            for &kb in &on[x + 1..] {
                let (a, b) = (&g.tiles()[ka], &g.tiles()[kb]);
                let overlap = overlap_at(&z, a, b, e);
                match (a.color(), b.color()) {
                    (Color::Black, Color::Black) => report.push(
                        Axiom::T2,
                        Witness::Tiles(*a, *b),
                        "black tiles share an edge",
                    ),
                    (Color::White, Color::White) if overlap => {
                        report.push(Axiom::T2, Witness::Tiles(*a, *b), "white tiles overlap")
                    }
                    (Color::White, Color::Black) | (Color::Black, Color::White) if !overlap => {
                        report.push(
                            Axiom::T2,
                            Witness::Tiles(*a, *b),
                            "white and black tiles do not overlap",
                        )
                    }
                    _ => {}
                }
            }
        }
    }
}

fn check_black_tiles(g: &TilingGraph, report: &mut AxiomReport) {
    for (k, t) in g.tiles().iter().enumerate() {
        if !t.is_black() {
            continue;
        }
        for v in [t.bottom(), t.top()] {
            for &o in g.tiles_at(v) {
                if o != k && g.tiles()[o].is_black() {
                    report.push(
                        Axiom::T3,
                        Witness::Tiles(*t, g.tiles()[o]),
                        "black tiles share a terminal vertex",
                    );
                }
            }
        }
        if g.incident(t.bottom())
            .iter()
            .any(|e| e.head() == t.bottom())
        {
            report.push(
                Axiom::T3,
                Witness::Vertex(t.bottom()),
                "edge enters the bottom of a black tile",
            );
        }
        if g.incident(t.top()).iter().any(|e| e.tail() == t.top()) {
            report.push(
                Axiom::T3,
                Witness::Vertex(t.top()),
                "edge leaves the top of a black tile",
            );
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn check_disc(g: &TilingGraph, boundary: &Boundary, report: &mut AxiomReport) {
    let vertices: Vec<Subset> = g.vertices().collect();
    let index: BTreeMap<Subset, usize> =
        vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    for e in g.edges() {
        let (a, b) = (index[&e.tail()], index[&e.head()]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let components = (0..vertices.len())
        .filter(|&k| find(&mut parent, k) == k)
        .count();
    let (v, e, f) = (vertices.len(), g.edge_count(), g.tiles().len());
    let surface = Witness::Surface {
        vertices: v,
        edges: e,
        faces: f,
    };
    if components != 1 {
        report.push(Axiom::T4, surface, "surface is not connected");
    }
    if v as i64 - e as i64 + f as i64 != 1 {
        report.push(Axiom::T4, surface, "Euler characteristic differs from 1");
    }

    for &x in &vertices {
        if let Some(reason) = link_defect(g, x, boundary.allow_pinch) {
            report.push(Axiom::T4, Witness::Vertex(x), reason);
        }
    }
}

/// Examines the link of `v`: the graph on its incident edges in which every
/// tile at `v` joins its two edges at `v`. On a disc this is one cycle at an
/// inner vertex and one path at a boundary vertex.
fn link_defect(g: &TilingGraph, v: Subset, allow_pinch: bool) -> Option<&'static str> {
    let inc = g.incident(v);
    let pos: BTreeMap<Edge, usize> = inc.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let degree: Vec<usize> = inc.iter().map(|&e| g.tiles_on(e).len()).collect();
    if degree.iter().any(|&d| d > 2) {
        // already a multiplicity failure
        return None;
    }
    let mut parent: Vec<usize> = (0..inc.len()).collect();
    for &k in g.tiles_at(v) {
        let [a, b] = g.tiles()[k].edges_at(v);
        let (ra, rb) = (find(&mut parent, pos[&a]), find(&mut parent, pos[&b]));
        parent[ra] = rb;
    }
    let mut paths = 0;
    let mut cycles = 0;
    let mut isolated = 0;
    let mut roots = BTreeMap::new();
    for k in 0..inc.len() {
        let r = find(&mut parent, k);
        let entry = roots.entry(r).or_insert((0usize, 0usize));
        entry.0 += 1;
        if degree[k] == 1 {
            entry.1 += 1;
        }
    }
    for (&r, &(size, ends)) in &roots {
        if size == 1 && degree[r] == 0 {
            isolated += 1;
        } else if ends == 0 {
            cycles += 1;
        } else {
            paths += 1;
        }
    }
    if cycles > 0 && (cycles > 1 || paths > 0 || isolated > 0) {
        return Some("several sheets meet at an inner vertex");
    }
    if !allow_pinch && paths > 1 {
        return Some("surface is pinched at a boundary vertex");
    }
    if !allow_pinch && isolated > 0 && paths + cycles > 0 {
        return Some("dangling edge at a vertex");
    }
    None
}

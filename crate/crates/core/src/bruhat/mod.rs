//! Ideal paths of permutations, tilings of the region between two such
//! paths, and the stripping constructions that produce pure tilings of it.

mod equiv;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub use equiv::{theorem_equiv_check, Certification, EquivReport, EXHAUSTIVE_LIMIT};

use crate::groundset::{weak_bruhat_leq, GroundSize, Permutation, Subset};
use crate::tiling::{
    chain_edges, verify, verify_surface, AxiomReport, Boundary, Color, GTiling, Tile, TilingGraph,
};
use crate::wscoll::WsCollection;
use crate::{Error, Result};

/// The path `P_ω` through the ideals `I_ω^0 ⊂ ... ⊂ I_ω^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPath {
    w: Permutation,
    vertices: Vec<Subset>,
}

impl IdealPath {
    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    /// Edge labels `ω⁻¹(1), ..., ω⁻¹(n)`.
    pub fn labels(&self) -> Vec<usize> {
        (1..=self.w.n().get()).map(|k| self.w.preimage(k)).collect()
    }
}

pub fn path_of(w: &Permutation) -> IdealPath {
    IdealPath {
        w: w.clone(),
        vertices: w.ideals(),
    }
}

/// The closed region between `P_{ω'}` (left) and `P_ω` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    left: IdealPath,
    right: IdealPath,
}

impl Region {
    pub fn new(wp: &Permutation, w: &Permutation) -> Result<Self> {
        if wp.n() != w.n() {
            return Err(Error::MismatchedGroundSize(
                wp.n().get() as u8,
                w.n().get() as u8,
            ));
        }
        Ok(Region {
            left: path_of(wp),
            right: path_of(w),
        })
    }

    pub fn n(&self) -> GroundSize {
        self.left.w.n()
    }

    pub fn left(&self) -> &IdealPath {
        &self.left
    }

    pub fn right(&self) -> &IdealPath {
        &self.right
    }

    /// Every vertex of the right path lies weakly right of the left-path
    /// vertex on the same level, with generators `ξ_i = (2^(i-1), 1)`.
    pub fn is_oriented(&self) -> bool {
        self.left
            .vertices
            .iter()
            .zip(&self.right.vertices)
            .all(|(l, r)| r.bits() >= l.bits())
    }

    pub fn boundary(&self) -> Boundary {
        Boundary::between_chains(&self.left.vertices, &self.right.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionTiling {
    region: Region,
    tiles: Vec<Tile>,
}

impl RegionTiling {
    pub fn new(region: Region, mut tiles: Vec<Tile>) -> Self {
        tiles.sort();
        RegionTiling { region, tiles }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn n(&self) -> GroundSize {
        self.region.n()
    }

    pub fn graph(&self) -> TilingGraph {
        let mut extra = chain_edges(&self.region.left.vertices);
        extra.extend(chain_edges(&self.region.right.vertices));
        TilingGraph::with_extra_edges(self.n(), &self.tiles, &extra)
    }

    /// Nonterminal vertices, boundary paths included.
    pub fn spectrum(&self) -> WsCollection {
        self.graph().spectrum()
    }

    pub fn is_pure(&self) -> bool {
        self.tiles.iter().all(|t| !t.is_black())
    }
}

/// Axioms for a tiling of a region: edges on exactly one of the two paths
/// lie in one tile, shared edges in none, every boundary vertex is
/// nonterminal.
pub fn verify_region(rt: &RegionTiling) -> AxiomReport {
    verify_surface(rt.n(), &rt.tiles, &rt.region.boundary())
}

/// One stripping pass: tiles laid along the right path while moving it onto
/// the left one. Fails when a required label inequality does not hold.
fn strip_below_engine(wp: &Permutation, w: &Permutation) -> Result<Vec<Tile>> {
    let n = w.n().get();
    let target: Vec<usize> = (1..=n).map(|k| wp.preimage(k)).collect();
    let mut seq: Vec<usize> = (1..=n).map(|k| w.preimage(k)).collect();
    let mut tiles = Vec::new();
    while let Some(i) = (0..n).find(|&p| seq[p] != target[p]) {
        let c = target[i];
        let k = seq.iter().position(|&x| x == c).unwrap();
        if k <= i {
            return Err(Error::NotBruhat);
        }
        let mut base: Subset = seq[..i].iter().fold(Subset::EMPTY, |s, &x| s.with(x));
        for &cj in &seq[i..k] {
            if cj <= c {
                return Err(Error::NotBruhat);
            }
            tiles.push(Tile::raw(base, c, cj, Color::White));
            base = base.with(cj);
        }
        seq.remove(k);
        seq.insert(i, c);
    }
    Ok(tiles)
}

fn require_bruhat(wp: &Permutation, w: &Permutation) -> Result<()> {
    if weak_bruhat_leq(wp, w)? {
        Ok(())
    } else {
        Err(Error::NotBruhat)
    }
}

/// Pure tiling of `Z(ω', ω)` by stripping along `P_ω` from below.
pub fn strip_from_below(wp: &Permutation, w: &Permutation) -> Result<RegionTiling> {
    require_bruhat(wp, w)?;
    let tiles = strip_below_engine(wp, w)?;
    Ok(RegionTiling::new(Region::new(wp, w)?, tiles))
}

/// `X ↦ mirror([n] - X)`: turns the picture upside down, keeping left and
/// right.
fn flip_vertical(w: &Permutation) -> Permutation {
    w.complemented().mirrored()
}

fn flip_vertical_tile(t: &Tile, n: GroundSize) -> Tile {
    t.reversed(n).mirrored(n)
}

/// Pure tiling of `Z(ω', ω)` by stripping along `P_ω` from above: the
/// stripping from below of the upside-down region, turned back.
pub fn strip_from_above(wp: &Permutation, w: &Permutation) -> Result<RegionTiling> {
    require_bruhat(wp, w)?;
    let n = w.n();
    let tiles = strip_below_engine(&flip_vertical(wp), &flip_vertical(w))?
        .iter()
        .map(|t| flip_vertical_tile(t, n))
        .collect();
    Ok(RegionTiling::new(Region::new(wp, w)?, tiles))
}

/// Pure tiling of `Z(ω', ω)` by stripping along the left path `P_{ω'}`
/// from above, via the half-turn `X ↦ [n] - X` that swaps the two paths.
pub fn strip_from_above_along_left(wp: &Permutation, w: &Permutation) -> Result<RegionTiling> {
    require_bruhat(wp, w)?;
    let n = w.n();
    let tiles = strip_below_engine(&w.complemented(), &wp.complemented())?
        .iter()
        .map(|t| t.reversed(n))
        .collect();
    Ok(RegionTiling::new(Region::new(wp, w)?, tiles))
}

/// `{ I_{ω'}^i ∩ I_ω^j }` over all `i, j`.
pub fn standard_spectrum(wp: &Permutation, w: &Permutation) -> WsCollection {
    let mut sets = BTreeSet::new();
    for a in wp.ideals() {
        for b in w.ideals() {
            sets.insert(a.intersection(b));
        }
    }
    WsCollection::from_members_unchecked(w.n(), sets)
}

/// Completes a region tiling to a tiling of `Z_n` with pure tilings of
/// `Z(id, ω')` and `Z(ω, ω0)`.
pub fn pad_to_zonogon(rt: &RegionTiling) -> Result<GTiling> {
    let n = rt.n();
    let wp = rt.region.left.permutation();
    let w = rt.region.right.permutation();
    let below = strip_from_below(&Permutation::identity(n), wp)?;
    let above = strip_from_above(w, &Permutation::longest(n))?;
    let mut tiles: Vec<Tile> = rt.tiles.clone();
    tiles.extend_from_slice(below.tiles());
    tiles.extend_from_slice(above.tiles());
    let t = GTiling::new(n, tiles)?;
    if let Some(v) = verify(&t).violations().first() {
        return Err(Error::Unverified(alloc::format!("padding: {v}")));
    }
    Ok(t)
}

/// Removes the padding of [`pad_to_zonogon`] from a tiling of `Z_n`,
/// leaving the tiles inside `Z(ω', ω)`.
pub fn unpad(t: &GTiling, region: &Region) -> Result<RegionTiling> {
    let n = t.n();
    if n != region.n() {
        return Err(Error::MismatchedGroundSize(
            n.get() as u8,
            region.n().get() as u8,
        ));
    }
    let below = strip_from_below(&Permutation::identity(n), region.left.permutation())?;
    let above = strip_from_above(region.right.permutation(), &Permutation::longest(n))?;
    let mut tiles: Vec<Tile> = t.tiles().to_vec();
    for pad in below.tiles().iter().chain(above.tiles()) {
        let k = tiles
            .iter()
            .position(|x| x == pad)
            .ok_or_else(|| Error::Unverified(alloc::format!("padding tile {pad} missing")))?;
        tiles.remove(k);
    }
    let rt = RegionTiling::new(region.clone(), tiles);
    if let Some(v) = verify_region(&rt).violations().first() {
        return Err(Error::Unverified(alloc::format!("{v}")));
    }
    Ok(rt)
}

/// The region tiling whose spectrum is `c`, found by padding `c` to a
/// largest collection on `[n]`, rebuilding its tiling and cutting the
/// padding off again.
pub fn region_tiling_from_spectrum(
    wp: &Permutation,
    w: &Permutation,
    c: &WsCollection,
) -> Result<RegionTiling> {
    let region = Region::new(wp, w)?;
    let n = region.n();
    let below = strip_from_below(&Permutation::identity(n), wp)?.spectrum();
    let above = strip_from_above(w, &Permutation::longest(n))?.spectrum();
    let members: BTreeSet<Subset> = c
        .members()
        .chain(below.members())
        .chain(above.members())
        .copied()
        .collect();
    let full = WsCollection::new(n, members)?;
    let t = crate::tiling::tiling_from_spectrum(&full)?;
    let rt = unpad(&t, &region)?;
    if rt.spectrum() != *c {
        return Err(Error::Unverified(
            "region spectrum differs from the input".into(),
        ));
    }
    Ok(rt)
}

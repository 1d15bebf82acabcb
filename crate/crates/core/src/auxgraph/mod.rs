//! The auxiliary graph `Γ_T` of a tiling and the two orders on its spectrum:
//! reachability in `Γ_T` and `A ≺* B`.

mod poset;

use alloc::format;
use alloc::vec::Vec;

pub use poset::FinitePoset;

use crate::groundset::{star_less, GroundSize, Subset};
use crate::tiling::{verify, GTiling};
use crate::wscoll::WsCollection;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    n: GroundSize,
    vertices: Vec<Subset>,
    /// Fully white edges `(X, Xi)`.
    ascending: Vec<(Subset, Subset)>,
    /// `ℓ(τ) → r(τ)` for each white tile `τ`.
    horizontal: Vec<(Subset, Subset)>,
}

impl AuxGraph {
    /// Assembles a graph from explicit parts, e.g. to study a modified `Γ`.
    pub fn from_parts(
        n: GroundSize,
        vertices: Vec<Subset>,
        ascending: Vec<(Subset, Subset)>,
        horizontal: Vec<(Subset, Subset)>,
    ) -> Self {
        AuxGraph {
            n,
            vertices,
            ascending,
            horizontal,
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn ascending(&self) -> &[(Subset, Subset)] {
        &self.ascending
    }

    pub fn horizontal(&self) -> &[(Subset, Subset)] {
        &self.horizontal
    }

    pub fn edges(&self) -> Vec<(Subset, Subset)> {
        self.ascending
            .iter()
            .chain(&self.horizontal)
            .copied()
            .collect()
    }

    /// The graph with the `k`-th horizontal edge removed.
    pub fn without_horizontal(&self, k: usize) -> AuxGraph {
        let mut g = self.clone();
        g.horizontal.remove(k);
        g
    }
}

pub fn build_aux(t: &GTiling) -> Result<AuxGraph> {
    if let Some(v) = verify(t).violations().first() {
        return Err(Error::Unverified(format!("{v}")));
    }
    let g = t.graph();
    let vertices = g.spectrum().to_vec();
    let ascending = g
        .edges()
        .filter(|e| g.is_fully_white(*e))
        .map(|e| (e.tail(), e.head()))
        .collect();
    let mut horizontal = Vec::new();
    for tile in t.white_tiles() {
        let (l, r) = (tile.left(), tile.right());
        if g.is_terminal(l) || g.is_terminal(r) {
            return Err(Error::Unverified(format!(
                "white tile {tile} has a terminal side vertex"
            )));
        }
        horizontal.push((l, r));
    }
    Ok(AuxGraph {
        n: t.n(),
        vertices,
        ascending,
        horizontal,
    })
}

/// Reachability order `≺_Γ`.
pub fn order_of_graph(g: &AuxGraph) -> Result<FinitePoset> {
    FinitePoset::from_dag(g.vertices.clone(), &g.edges())
}

/// The relation `≺*` on `c`, as given; it is transitive on ws-collections,
/// which [`FinitePoset::transitivity_violation`] can confirm.
pub fn order_star(c: &WsCollection) -> FinitePoset {
    FinitePoset::from_relation(c.to_vec(), star_less)
}

/// Whether `≺_Γ` and `≺*` coincide on the spectrum of `t`.
pub fn posets_equal(t: &GTiling) -> Result<bool> {
    let g = build_aux(t)?;
    let a = order_of_graph(&g)?;
    let b = order_star(&t.spectrum_unchecked());
    Ok(a.relation() == b.relation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::fixtures::*;
    use crate::tiling::{enumerate_gtilings, left_boundary, right_boundary};

    #[test]
    fn fig1_graph() {
        let t = fig1();
        let g = build_aux(&t).unwrap();
        assert_eq!(g.horizontal().len(), t.white_tiles().count());
        for h in [
            (s(&[1, 2]), s(&[1, 4])),
            (s(&[1, 4]), s(&[2, 4])),
            (s(&[1, 2]), s(&[2, 3])),
            (s(&[2, 3]), s(&[2, 4])),
        ] {
            assert!(g.horizontal().contains(&h), "{h:?}");
        }
        assert!(posets_equal(&t).unwrap());
        let star = order_star(&t.spectrum().unwrap());
        assert!(star.less(s(&[1]), s(&[1, 4])));
        assert!(!star.less(s(&[1, 4]), s(&[2, 3])));
        // {1} ⋖ {4} with equal sizes, so {4} is already an upper bound
        assert_eq!(star.join(s(&[1]), s(&[4])).unwrap(), s(&[4]));
        assert_eq!(star.join(s(&[1, 2]), s(&[4])).unwrap(), s(&[1, 4]));
        assert!(star.is_lattice());
    }

    #[test]
    fn join_against_brute_force() {
        // minimal common upper bounds computed straight from the relation
        let c = fig1_spectrum();
        let p = order_star(&c);
        let members = c.to_vec();
        let le = |x: Subset, y: Subset| x == y || star_less(x, y);
        for &a in &members {
            for &b in &members {
                let ub: Vec<Subset> = members
                    .iter()
                    .copied()
                    .filter(|&u| le(a, u) && le(b, u))
                    .collect();
                let least: Vec<Subset> = ub
                    .iter()
                    .copied()
                    .filter(|&u| ub.iter().all(|&v| le(u, v)))
                    .collect();
                assert_eq!(least.len(), 1);
                assert_eq!(p.join(a, b).unwrap(), least[0]);
            }
        }
    }

    #[test]
    fn all_small_tilings() {
        for n in 1..=4 {
            for t in enumerate_gtilings(gs(n), false).unwrap() {
                let g = build_aux(&t).unwrap();
                for &(a, b) in &g.edges() {
                    assert!(star_less(a, b), "{a} -> {b}");
                }
                let order = order_of_graph(&g).unwrap();
                assert_eq!(order.minimal_elements(), [Subset::EMPTY]);
                assert_eq!(order.maximal_elements(), [gs(n).full()]);
                assert!(posets_equal(&t).unwrap());
                let star = order_star(&t.spectrum().unwrap());
                assert!(star.transitivity_violation().is_none());
                assert!(star.is_lattice());
                if t.is_pure() {
                    assert_eq!(g.ascending().len(), t.graph().edge_count());
                }
                let lbd = left_boundary(gs(n));
                let rbd = right_boundary(gs(n));
                for &v in g.vertices() {
                    if !lbd.contains(&v) {
                        assert!(g.horizontal().iter().any(|e| e.1 == v), "{v}");
                    }
                    if !rbd.contains(&v) {
                        assert!(g.horizontal().iter().any(|e| e.0 == v), "{v}");
                    }
                }
            }
        }
    }

    #[test]
    fn dropping_a_horizontal_edge_breaks_equality() {
        let t = fig1();
        let g = build_aux(&t).unwrap();
        let star = order_star(&t.spectrum().unwrap());
        let changed = (0..g.horizontal().len()).any(|k| {
            order_of_graph(&g.without_horizontal(k)).unwrap().relation() != star.relation()
        });
        assert!(changed);
    }
}

//! Maximal ws-collections as maximal cliques of the weak-separation graph.
//!
//! Bron–Kerbosch with Tomita pivoting over bit-set adjacency. The search is
//! split into independent top-level branches so callers can run them on
//! several threads; results are sorted afterwards, so the output never
//! depends on scheduling.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::groundset::{weakly_separated, GroundSize, Subset};
use crate::wscoll::WsCollection;

/// One independent branch of the search: the clique built so far and the
/// candidate and excluded vertex sets.
#[derive(Clone, Debug)]
pub struct CliqueTask {
    clique: Vec<usize>,
    candidates: BitSet,
    excluded: BitSet,
}

/// Weak-separation graph on the subsets accepted by a ground predicate.
pub struct MaximalCliqueSearch {
    n: GroundSize,
    vertices: Vec<Subset>,
    adjacency: Vec<BitSet>,
}

impl MaximalCliqueSearch {
    pub fn new<F: Fn(Subset) -> bool>(n: GroundSize, ground: F) -> Self {
        let vertices: Vec<Subset> = n.all_subsets().into_iter().filter(|&x| ground(x)).collect();
        let m = vertices.len();
        let mut adjacency = alloc::vec![BitSet::new(m); m];
        for a in 0..m {
            for b in a + 1..m {
                if weakly_separated(vertices[a], vertices[b]) {
                    adjacency[a].insert(b);
                    adjacency[b].insert(a);
                }
            }
        }
        MaximalCliqueSearch {
            n,
            vertices,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The top-level branches, in the order the sequential search visits them.
    pub fn tasks(&self) -> Vec<CliqueTask> {
        let m = self.vertices.len();
        if m == 0 {
            return Vec::new();
        }
        let mut p = BitSet::full(m);
        let mut x = BitSet::new(m);
        let pivot = self.pivot(&p, &x);
        let mut out = Vec::new();
        for v in p
            .difference(&self.adjacency[pivot])
            .iter()
            .collect::<Vec<_>>()
        {
            out.push(CliqueTask {
                clique: alloc::vec![v],
                candidates: p.intersection(&self.adjacency[v]),
                excluded: x.intersection(&self.adjacency[v]),
            });
            p.remove(v);
            x.insert(v);
        }
        out
    }

    /// Runs one branch, calling `emit` on every maximal clique in it.
    pub fn run<F: FnMut(WsCollection)>(&self, task: &CliqueTask, emit: &mut F) {
        let mut clique = task.clique.clone();
        self.expand(
            &mut clique,
            task.candidates.clone(),
            task.excluded.clone(),
            emit,
        );
    }

    fn pivot(&self, p: &BitSet, x: &BitSet) -> usize {
        p.iter()
            .chain(x.iter())
            .max_by_key(|&u| {
                (
                    p.intersection_count(&self.adjacency[u]),
                    core::cmp::Reverse(u),
                )
            })
            .expect("pivot requested on empty sets")
    }

    fn expand<F: FnMut(WsCollection)>(
        &self,
        clique: &mut Vec<usize>,
        mut p: BitSet,
        mut x: BitSet,
        emit: &mut F,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let members = clique.iter().map(|&v| self.vertices[v]).collect();
                emit(WsCollection::from_members_unchecked(self.n, members));
            }
            return;
        }
        let pivot = self.pivot(&p, &x);
        for v in p
            .difference(&self.adjacency[pivot])
            .iter()
            .collect::<Vec<_>>()
        {
            clique.push(v);
            self.expand(
                clique,
                p.intersection(&self.adjacency[v]),
                x.intersection(&self.adjacency[v]),
                emit,
            );
            clique.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Streams every maximal ws-collection inside `{X : ground(X)}`, in search
/// order.
pub fn for_each_maximal<G, F>(n: GroundSize, ground: G, mut emit: F)
where
    G: Fn(Subset) -> bool,
    F: FnMut(WsCollection),
{
    let search = MaximalCliqueSearch::new(n, ground);
    for task in search.tasks() {
        search.run(&task, &mut emit);
    }
}

/// All maximal ws-collections inside `{X : ground(X)}`, sorted canonically.
/// An empty ground set yields an empty list.
pub fn enumerate_maximal<G: Fn(Subset) -> bool>(n: GroundSize, ground: G) -> Vec<WsCollection> {
    let mut out = Vec::new();
    for_each_maximal(n, ground, |c| out.push(c));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groundset::{is_chamber_set, Permutation};
    use crate::wscoll::largest_size;

    fn gs(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    // Independent oracle: grow every subset-family bitmask over 2^[n] and keep
    // the inclusion-maximal pairwise-separated ones. Feasible for n <= 3.
    fn brute_force_maximal(n: usize) -> Vec<WsCollection> {
        let all = gs(n).all_subsets();
        let m = all.len();
        let ok = |mask: u32| {
            (0..m).all(|a| {
                mask >> a & 1 == 0
                    || (a + 1..m).all(|b| mask >> b & 1 == 0 || weakly_separated(all[a], all[b]))
            })
        };
        let mut out = Vec::new();
        for mask in 0u32..1 << m {
            if ok(mask) && (0..m).all(|v| mask >> v & 1 == 1 || !ok(mask | 1 << v)) {
                let members = (0..m).filter(|&v| mask >> v & 1 == 1).map(|v| all[v]);
                out.push(WsCollection::new(gs(n), members).unwrap());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        let two = enumerate_maximal(gs(2), |_| true);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_vec(), gs(2).all_subsets());

        let three = enumerate_maximal(gs(3), |_| true);
        assert_eq!(three.len(), 2);
        let without = |x: Subset| {
            WsCollection::new(
                gs(3),
                gs(3).all_subsets().into_iter().filter(move |&y| y != x),
            )
            .unwrap()
        };
        assert!(three.contains(&without(s(&[2]))));
        assert!(three.contains(&without(s(&[1, 3]))));

        let id = Permutation::identity(gs(3));
        let chamber = enumerate_maximal(gs(3), |x| is_chamber_set(x, &id));
        assert_eq!(chamber.len(), 1);
        assert_eq!(chamber[0].len(), 4);

        assert!(enumerate_maximal(gs(3), |_| false).is_empty());
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=3 {
            assert_eq!(enumerate_maximal(gs(n), |_| true), brute_force_maximal(n));
        }
    }

    #[test]
    fn all_maximal_are_largest_n4() {
        let all = enumerate_maximal(gs(4), |_| true);
        assert!(!all.is_empty());
        for c in &all {
            assert!(c.validate());
            assert_eq!(c.len(), largest_size(gs(4)));
        }
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn tasks_partition_the_search() {
        let search = MaximalCliqueSearch::new(gs(4), |_| true);
        let mut via_tasks = Vec::new();
        for t in search.tasks() {
            search.run(&t, &mut |c| via_tasks.push(c));
        }
        via_tasks.sort();
        assert_eq!(via_tasks, enumerate_maximal(gs(4), |_| true));
    }
}

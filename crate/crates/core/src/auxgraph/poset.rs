//! Finite posets on subsets, stored as strict-order bit matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::groundset::Subset;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<Subset>,
    index: BTreeMap<Subset, usize>,
    /// `above[a]` holds every `b` with `a < b`.
    above: Vec<BitSet>,
}

impl FinitePoset {
    /// A relation taken as given, without closing it. Use
    /// [`FinitePoset::transitivity_violation`] to audit it.
    pub fn from_relation(elements: Vec<Subset>, less: impl Fn(Subset, Subset) -> bool) -> Self {
        let m = elements.len();
        let mut above = alloc::vec![BitSet::new(m); m];
        for a in 0..m {
            for b in 0..m {
                if a != b && less(elements[a], elements[b]) {
                    above[a].insert(b);
                }
            }
        }
        Self::assemble(elements, above)
    }

    /// Reachability order of a directed graph; fails on a directed cycle.
    pub fn from_dag(elements: Vec<Subset>, edges: &[(Subset, Subset)]) -> Result<Self> {
        let m = elements.len();
        let index: BTreeMap<Subset, usize> =
            elements.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
        let mut indeg = alloc::vec![0usize; m];
        for (a, b) in edges {
            let (Some(&a), Some(&b)) = (index.get(a), index.get(b)) else {
                continue;
            };
            out[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's order, then closure in reverse topological order
        let mut order: Vec<usize> = (0..m).filter(|&k| indeg[k] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in &out[v] {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    order.push(u);
                }
            }
        }
        if order.len() != m {
            return Err(Error::CyclicGraph);
        }
        let mut above = alloc::vec![BitSet::new(m); m];
        for &v in order.iter().rev() {
            let mut acc = BitSet::new(m);
            for &u in &out[v] {
                acc.insert(u);
                acc.union_with(&above[u]);
            }
            above[v] = acc;
        }
        Ok(Self::assemble(elements, above))
    }

    fn assemble(elements: Vec<Subset>, above: Vec<BitSet>) -> Self {
        let index = elements.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        FinitePoset {
            elements,
            index,
            above,
        }
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: Subset) -> Option<usize> {
        self.index.get(&x).copied()
    }

    /// Strict comparison by index.
    pub fn less_at(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    /// Strict comparison; `false` for non-members.
    pub fn less(&self, a: Subset, b: Subset) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(a), Some(b)) => self.less_at(a, b),
            _ => false,
        }
    }

    /// Strictly comparable pairs `(a, b)` with `a < b`, by index.
    pub fn relation(&self) -> Vec<(Subset, Subset)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.above[a].iter() {
                out.push((self.elements[a], self.elements[b]));
            }
        }
        out
    }

    /// Some `a < b < c` with `a < c` failing.
    pub fn transitivity_violation(&self) -> Option<(Subset, Subset, Subset)> {
        for a in 0..self.len() {
            for b in self.above[a].iter() {
                let missing = self.above[b].difference(&self.above[a]);
                let first = missing.iter().next();
                if let Some(c) = first {
                    return Some((self.elements[a], self.elements[b], self.elements[c]));
                }
            }
        }
        None
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.len()).all(|a| !self.above[a].contains(a))
    }

    /// Irreflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        self.is_irreflexive()
            && self.transitivity_violation().is_none()
            && (0..self.len()).all(|a| self.above[a].iter().all(|b| !self.above[b].contains(a)))
    }

    /// Pairs `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Subset, Subset)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.above[a].iter() {
                let between = self.above[a].iter().any(|c| self.above[c].contains(b));
                if !between {
                    out.push((self.elements[a], self.elements[b]));
                }
            }
        }
        out
    }

    fn up_closed(&self, a: usize) -> BitSet {
        let mut s = self.above[a].clone();
        s.insert(a);
        s
    }

    fn down_closed(&self, a: usize) -> BitSet {
        let mut s = BitSet::new(self.len());
        for x in 0..self.len() {
            if x == a || self.above[x].contains(a) {
                s.insert(x);
            }
        }
        s
    }

    /// Minimal elements of the common upper bounds of `a` and `b`.
    pub fn minimal_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let common = self.up_closed(a).intersection(&self.up_closed(b));
        common
            .iter()
            .filter(|&x| !common.iter().any(|y| self.above[y].contains(x)))
            .collect()
    }

    /// Maximal elements of the common lower bounds of `a` and `b`.
    pub fn maximal_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let common = self.down_closed(a).intersection(&self.down_closed(b));
        common
            .iter()
            .filter(|&x| !common.iter().any(|y| self.above[x].contains(y)))
            .collect()
    }

    fn unique(&self, a: usize, b: usize, v: Vec<usize>) -> Result<Subset> {
        match v[..] {
            [x] => Ok(self.elements[x]),
            _ => Err(Error::NotLatticePair {
                a,
                b,
                count: v.len(),
            }),
        }
    }

    pub fn join(&self, a: Subset, b: Subset) -> Result<Subset> {
        let (ia, ib) = (self.member(a)?, self.member(b)?);
        self.unique(ia, ib, self.minimal_upper_bounds(ia, ib))
    }

    pub fn meet(&self, a: Subset, b: Subset) -> Result<Subset> {
        let (ia, ib) = (self.member(a)?, self.member(b)?);
        self.unique(ia, ib, self.maximal_lower_bounds(ia, ib))
    }

    fn member(&self, x: Subset) -> Result<usize> {
        self.index_of(x).ok_or(Error::IndexOutOfRange {
            index: x.bits() as usize,
            max: self.len(),
        })
    }

    /// First pair without a unique join or meet.
    pub fn lattice_violation(&self) -> Option<(Subset, Subset)> {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.minimal_upper_bounds(a, b).len() != 1
                    || self.maximal_lower_bounds(a, b).len() != 1
                {
                    return Some((self.elements[a], self.elements[b]));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        !self.is_empty() && self.lattice_violation().is_none()
    }

    /// Elements with no strict predecessor.
    pub fn minimal_elements(&self) -> Vec<Subset> {
        (0..self.len())
            .filter(|&x| !(0..self.len()).any(|y| self.above[y].contains(x)))
            .map(|x| self.elements[x])
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<Subset> {
        (0..self.len())
            .filter(|&x| self.above[x].is_empty())
            .map(|x| self.elements[x])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let (a, b, c, d) = (s(&[1]), s(&[2]), s(&[3]), s(&[4]));
        let p = FinitePoset::from_dag(alloc::vec![a, b, c, d], &[(a, c), (a, d), (b, c), (b, d)])
            .unwrap();
        assert!(p.is_partial_order());
        assert!(!p.is_lattice());
        assert!(matches!(
            p.join(a, b),
            Err(Error::NotLatticePair { count: 2, .. })
        ));
        assert_eq!(p.maximal_elements(), [c, d]);
    }

    #[test]
    fn chain_and_diamond() {
        let (a, b, c, d) = (s(&[]), s(&[1]), s(&[2]), s(&[1, 2]));
        let p = FinitePoset::from_dag(alloc::vec![a, b, c, d], &[(a, b), (a, c), (b, d), (c, d)])
            .unwrap();
        assert!(p.is_lattice());
        assert_eq!(p.join(b, c).unwrap(), d);
        assert_eq!(p.meet(b, c).unwrap(), a);
        assert_eq!(p.covers().len(), 4);
        assert!(p.less(a, d));
        let cyc = FinitePoset::from_dag(alloc::vec![a, b], &[(a, b), (b, a)]);
        assert_eq!(cyc, Err(Error::CyclicGraph));
    }

    #[test]
    fn raw_relation_audit() {
        let (a, b, c) = (s(&[1]), s(&[2]), s(&[3]));
        let p = FinitePoset::from_relation(alloc::vec![a, b, c], |x, y| {
            (x, y) == (a, b) || (x, y) == (b, c)
        });
        assert_eq!(p.transitivity_violation(), Some((a, b, c)));
    }
}

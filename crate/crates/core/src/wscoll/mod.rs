//! Weakly separated collections.

mod cliques;
mod flip;
mod lr;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groundset::{lessdot, weakly_separated, GroundSize, Subset};
use crate::{Error, Result};

pub use cliques::{enumerate_maximal, for_each_maximal, CliqueTask, MaximalCliqueSearch};
pub use flip::{available_flips, flip, flip_reachability, FlipDirection, FlipGraph, FlipMove};
pub use lr::{lr_extend_maximal, lr_pair_of, lr_validate, LrPair};

/// Size of every largest ws-collection in `2^[n]`: `n(n+1)/2 + 1`.
pub fn largest_size(n: GroundSize) -> usize {
    let n = n.get();
    n * (n + 1) / 2 + 1
}

/// A set of subsets of `[n]`, kept in canonical order.
///
/// Construction only checks that members fit in `[n]`; weak separation is a
/// separate question answered by [`WsCollection::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WsCollection {
    n: GroundSize,
    members: BTreeSet<Subset>,
}

impl WsCollection {
    pub fn new<I: IntoIterator<Item = Subset>>(n: GroundSize, members: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            if !m.fits(n) {
                return Err(Error::ElementOutOfRange {
                    element: m.max_or_zero(),
                    n: n.get() as u8,
                });
            }
            set.insert(m);
        }
        Ok(WsCollection { n, members: set })
    }

    pub(crate) fn from_members_unchecked(n: GroundSize, members: BTreeSet<Subset>) -> Self {
        debug_assert!(members.iter().all(|m| m.fits(n)));
        WsCollection { n, members }
    }

    pub fn empty(n: GroundSize) -> Self {
        WsCollection {
            n,
            members: BTreeSet::new(),
        }
    }

    /// All intervals `[p..q]` of `[n]`, including `∅`.
    pub fn intervals(n: GroundSize) -> Self {
        let mut members = BTreeSet::new();
        members.insert(Subset::EMPTY);
        for p in 1..=n.get() {
            for q in p..=n.get() {
                members.insert(Subset::interval(p, q));
            }
        }
        WsCollection { n, members }
    }

    /// Complements of all intervals.
    pub fn co_intervals(n: GroundSize) -> Self {
        Self::intervals(n).complement()
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.members.contains(&x)
    }

    /// Members in canonical order.
    pub fn members(&self) -> impl DoubleEndedIterator<Item = &Subset> + ExactSizeIterator {
        self.members.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<Subset> {
        &self.members
    }

    pub fn to_vec(&self) -> Vec<Subset> {
        self.members.iter().copied().collect()
    }

    /// Inserts without any separation check. Returns whether `x` was new.
    pub fn insert(&mut self, x: Subset) -> Result<bool> {
        if !x.fits(self.n) {
            return Err(Error::ElementOutOfRange {
                element: x.max_or_zero(),
                n: self.n.get() as u8,
            });
        }
        Ok(self.members.insert(x))
    }

    pub fn remove(&mut self, x: Subset) -> bool {
        self.members.remove(&x)
    }

    /// First pair of members (in canonical order) that is not weakly separated.
    pub fn first_conflict(&self) -> Option<(Subset, Subset)> {
        let v = self.to_vec();
        for (k, &a) in v.iter().enumerate() {
            for &b in &v[k + 1..] {
                if !weakly_separated(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Whether all pairs of members are weakly separated.
    pub fn validate(&self) -> bool {
        self.first_conflict().is_none()
    }

    pub fn check(&self) -> Result<()> {
        match self.first_conflict() {
            Some((a, b)) => Err(Error::NotWeaklySeparated(a, b)),
            None => Ok(()),
        }
    }

    pub fn is_largest(&self) -> bool {
        self.len() == largest_size(self.n) && self.validate()
    }

    /// Whether `x` is weakly separated from every member.
    pub fn accepts(&self, x: Subset) -> bool {
        self.members.iter().all(|&m| weakly_separated(m, x))
    }

    /// Subsets outside the collection that could be added to it.
    pub fn addable(&self) -> Vec<Subset> {
        self.n
            .all_subsets()
            .into_iter()
            .filter(|&x| !self.contains(x) && self.accepts(x))
            .collect()
    }

    /// Inclusion-maximality among ws-collections of `2^[n]`.
    pub fn is_maximal(&self) -> Result<bool> {
        self.check()?;
        Ok(self.addable().is_empty())
    }

    /// Extends to a maximal ws-collection by scanning `2^[n]` in canonical
    /// order.
    pub fn greedy_complete(&self) -> Result<WsCollection> {
        self.greedy_complete_with(core::iter::empty())
    }

    /// Scans `order` first, then the canonical order, adding every subset that
    /// keeps the collection weakly separated.
    pub fn greedy_complete_with<I: IntoIterator<Item = Subset>>(
        &self,
        order: I,
    ) -> Result<WsCollection> {
        self.check()?;
        let mut out = self.clone();
        for x in order.into_iter().chain(self.n.all_subsets()) {
            if x.fits(self.n) && !out.contains(x) && out.accepts(x) {
                out.members.insert(x);
            }
        }
        Ok(out)
    }

    /// Greedy completion over a uniformly shuffled scan order drawn from
    /// `seed`.
    pub fn greedy_complete_seeded(&self, seed: u64) -> Result<WsCollection> {
        let mut order = self.n.all_subsets();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        self.greedy_complete_with(order)
    }

    /// `{[n] - X : X ∈ self}`.
    pub fn complement(&self) -> WsCollection {
        WsCollection {
            n: self.n,
            members: self.members.iter().map(|x| x.complement(self.n)).collect(),
        }
    }

    /// Image under `k -> n + 1 - k`.
    pub fn mirror(&self) -> WsCollection {
        WsCollection {
            n: self.n,
            members: self.members.iter().map(|x| x.mirror(self.n)).collect(),
        }
    }

    /// `Σ |X|` over members.
    pub fn total_size(&self) -> usize {
        self.members.iter().map(|x| x.len()).sum()
    }

    /// Members not containing `k`, together with members containing `k` with
    /// `k` removed. For `k = n` this is the spectrum of the `n`-contraction.
    pub fn contract(&self, k: usize) -> Result<WsCollection> {
        let n = self.n.smaller().ok_or(Error::GroundSize(0))?;
        if !(1..=self.n.get()).contains(&k) {
            return Err(Error::InvalidSide(k));
        }
        Ok(WsCollection {
            n,
            members: self
                .members
                .iter()
                .map(|x| x.without(k).delete_and_shift(k))
                .collect(),
        })
    }

    /// `A ≺* B`, i.e. `A ⋖ B` and `|A| <= |B|`, restricted to members.
    pub fn star_pairs(&self) -> Vec<(Subset, Subset)> {
        let v = self.to_vec();
        let mut out = Vec::new();
        for &a in &v {
            for &b in &v {
                if a.len() <= b.len() && lessdot(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Debug for WsCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WsCollection(n={}, ", self.n)?;
        f.debug_set().entries(self.members.iter()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    #[test]
    fn validate_examples() {
        for n in 1..=6 {
            let c = WsCollection::intervals(gs(n));
            assert_eq!(c.len(), largest_size(gs(n)));
            assert!(c.validate());
            assert!(c.is_largest());
        }
        let bad = WsCollection::new(gs(3), [s(&[2]), s(&[1, 3])]).unwrap();
        assert!(!bad.validate());
        assert_eq!(
            bad.check(),
            Err(Error::NotWeaklySeparated(s(&[2]), s(&[1, 3])))
        );
        assert!(WsCollection::new(gs(3), [s(&[2])]).unwrap().validate());
        assert!(WsCollection::new(gs(3), [s(&[4])]).is_err());
    }

    #[test]
    fn maximality_examples() {
        let all2 = WsCollection::new(gs(2), gs(2).all_subsets()).unwrap();
        assert!(all2.is_maximal().unwrap());
        for n in 1..=5 {
            assert!(WsCollection::intervals(gs(n)).is_maximal().unwrap());
        }
        let just_empty = WsCollection::new(gs(3), [Subset::EMPTY]).unwrap();
        assert!(!just_empty.is_maximal().unwrap());
        let bad = WsCollection::new(gs(3), [s(&[2]), s(&[1, 3])]).unwrap();
        assert!(bad.is_maximal().is_err());
    }

    #[test]
    fn greedy_examples() {
        let start = WsCollection::new(gs(3), [Subset::EMPTY]).unwrap();
        assert_eq!(start.greedy_complete().unwrap().len(), 7);
        let c = WsCollection::new(gs(3), [s(&[1, 3])]).unwrap();
        let done = c.greedy_complete().unwrap();
        let expect: Vec<Subset> = gs(3)
            .all_subsets()
            .into_iter()
            .filter(|&x| x != s(&[2]))
            .collect();
        assert_eq!(done.to_vec(), expect);
        assert_eq!(done.greedy_complete().unwrap(), done);
    }

    #[test]
    fn seeded_greedy_reaches_largest_size() {
        for n in 1..=5 {
            let start = WsCollection::empty(gs(n));
            for seed in 0..20 {
                let c = start.greedy_complete_seeded(seed).unwrap();
                assert!(c.is_largest(), "n={n} seed={seed}");
            }
        }
        // seeded orders are reproducible
        let a = WsCollection::empty(gs(5))
            .greedy_complete_seeded(7)
            .unwrap();
        let b = WsCollection::empty(gs(5))
            .greedy_complete_seeded(7)
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn contraction_of_collection() {
        let fig1 = WsCollection::new(
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
        .unwrap();
        let c = fig1.contract(4).unwrap();
        let expect: Vec<Subset> = gs(3)
            .all_subsets()
            .into_iter()
            .filter(|&x| x != s(&[1, 3]))
            .collect();
        assert_eq!(c.to_vec(), expect);
    }

    #[test]
    fn complement_and_mirror_preserve_separation() {
        let c = WsCollection::intervals(gs(5));
        assert!(c.complement().is_largest());
        assert!(c.mirror().is_largest());
        assert_eq!(c.mirror(), c);
        assert_eq!(WsCollection::co_intervals(gs(3)).to_vec().len(), 7);
    }
}

//! Elements, subsets and permutations of `[n]`, and the binary relations that
//! everything else is built from.
//!
//! Elements are 1-based everywhere in the public API. Internally element `i`
//! is bit `i - 1` of a `u64`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::wscoll::WsCollection;
use crate::{Error, Result};

/// Number of elements of the ground set `[n]`, `1 <= n <= 64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSize(u8);

impl GroundSize {
    pub const MAX: usize = 64;

    pub fn new(n: usize) -> Result<Self> {
        if (1..=Self::MAX).contains(&n) {
            Ok(GroundSize(n as u8))
        } else {
            Err(Error::GroundSize(n))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// `[n]` itself.
    pub fn full(self) -> Subset {
        Subset::interval(1, self.get())
    }

    /// All `2^n` subsets in canonical order. Only sensible for small `n`.
    pub fn all_subsets(self) -> Vec<Subset> {
        assert!(self.get() < 32, "refusing to list 2^{} subsets", self.get());
        let mut v: Vec<Subset> = (0..1u64 << self.get()).map(Subset).collect();
        v.sort();
        v
    }

    pub fn smaller(self) -> Option<GroundSize> {
        (self.0 > 1).then(|| GroundSize(self.0 - 1))
    }

    pub fn larger(self) -> Result<GroundSize> {
        GroundSize::new(self.get() + 1)
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A subset of `[n]` stored as a bit set.
///
/// The ordering is the canonical one used for all outputs: by cardinality,
/// then lexicographically by the ascending element tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if !(1..=64).contains(&e) {
                return Err(Error::ElementOutOfRange { element: e, n: 64 });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=64).contains(&i));
        Subset(1 << (i - 1))
    }

    /// `[p..q]`; empty when `p > q`.
    pub fn interval(p: usize, q: usize) -> Self {
        if p > q || q == 0 {
            return Subset::EMPTY;
        }
        let p = p.max(1);
        let hi = if q >= 64 { u64::MAX } else { (1u64 << q) - 1 };
        let lo = (1u64 << (p - 1)) - 1;
        Subset(hi & !lo)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << (i - 1))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << (i - 1)))
    }

    #[inline]
    pub fn union(self, o: Subset) -> Self {
        Subset(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Subset) -> Self {
        Subset(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Subset) -> Self {
        Subset(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_or_zero(self) -> usize {
        self.max_element().unwrap_or(0)
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut w = self.0;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let tz = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(tz + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// `[n] - self`.
    pub fn complement(self, n: GroundSize) -> Self {
        n.full().difference(self)
    }

    /// Image under the label reversal `k -> n + 1 - k`.
    pub fn mirror(self, n: GroundSize) -> Self {
        let n = n.get();
        Subset(self.elements().fold(0, |acc, k| acc | 1 << (n - k)))
    }

    /// Whether all elements lie in `[n]`.
    pub fn fits(self, n: GroundSize) -> bool {
        self.is_subset(n.full())
    }

    /// Removes element `k` and shifts every larger element down by one.
    pub fn delete_and_shift(self, k: usize) -> Self {
        let below = self.0 & ((1u64 << (k - 1)) - 1);
        let above = if k >= 64 { 0 } else { self.0 >> k };
        Subset(below | above << (k - 1))
    }

    /// Inverse of [`Subset::delete_and_shift`]: shifts elements `>= k` up by
    /// one, leaving `k` absent.
    pub fn insert_gap(self, k: usize) -> Self {
        let below = self.0 & ((1u64 << (k - 1)) - 1);
        let above = self.0 >> (k - 1);
        Subset(below | above << k)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let d = self.0 ^ other.0;
            if d == 0 {
                Ordering::Equal
            } else if self.0 & d & d.wrapping_neg() != 0 {
                // the smallest differing element belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a ⋖ b`: `b - a` is nonempty and every element of `a - b` precedes every
/// element of `b - a`.
pub fn lessdot(a: Subset, b: Subset) -> bool {
    let ab = a.difference(b);
    let ba = b.difference(a);
    match (ab.max_element(), ba.min_element()) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(i), Some(j)) => i < j,
    }
}

/// `a ⋖ b` or `a = b`.
pub fn lessdot_eq(a: Subset, b: Subset) -> bool {
    a == b || lessdot(a, b)
}

/// `a ▷ b`: both differences are nonempty and `b - a` splits into a nonempty
/// block below `a - b` and a nonempty block above it.
pub fn splits(a: Subset, b: Subset) -> bool {
    let ab = a.difference(b);
    let ba = b.difference(a);
    let (Some(lo), Some(hi)) = (ab.min_element(), ab.max_element()) else {
        return false;
    };
    if ba.is_empty() {
        return false;
    }
    let below = ba.intersection(Subset::interval(1, lo - 1));
    let above = ba.intersection(Subset::interval(hi + 1, 64));
    !below.is_empty() && !above.is_empty() && below.union(above) == ba
}

pub fn weakly_separated(a: Subset, b: Subset) -> bool {
    a == b
        || lessdot(a, b)
        || lessdot(b, a)
        || (splits(a, b) && a.len() >= b.len())
        || (splits(b, a) && b.len() >= a.len())
}

pub fn strongly_separated(a: Subset, b: Subset) -> bool {
    a == b || lessdot(a, b) || lessdot(b, a)
}

/// `a ≺* b`: `a ⋖ b` and `|a| <= |b|`.
pub fn star_less(a: Subset, b: Subset) -> bool {
    a.len() <= b.len() && lessdot(a, b)
}

/// Pairs `(i, j)`, `i < j`, with `ω(j) < ω(i)`.
pub type InversionSet = BTreeSet<(u8, u8)>;

/// A permutation `ω` of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// From one-line notation, e.g. `[3, 1, 5, 2, 4]`.
    pub fn from_one_line(images: &[u8]) -> Result<Self> {
        let n = images.len();
        GroundSize::new(n)?;
        let mut seen = 0u64;
        for &v in images {
            let v = v as usize;
            if !(1..=n).contains(&v) || seen >> (v - 1) & 1 == 1 {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen |= 1 << (v - 1);
        }
        Ok(Permutation {
            images: images.to_vec(),
        })
    }

    pub fn identity(n: GroundSize) -> Self {
        Permutation {
            images: (1..=n.get() as u8).collect(),
        }
    }

    /// `ω0: i -> n - i + 1`.
    pub fn longest(n: GroundSize) -> Self {
        Permutation {
            images: (1..=n.get() as u8).rev().collect(),
        }
    }

    /// All `n!` permutations in lexicographic order of one-line notation.
    pub fn all(n: GroundSize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (1..=n.get() as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..cur.len().saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    pub fn n(&self) -> GroundSize {
        GroundSize(self.images.len() as u8)
    }

    pub fn one_line(&self) -> &[u8] {
        &self.images
    }

    /// `ω(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// `ω⁻¹(k)`.
    pub fn preimage(&self, k: usize) -> usize {
        self.images.iter().position(|&v| v as usize == k).unwrap() + 1
    }

    pub fn inversions(&self) -> InversionSet {
        let n = self.images.len();
        let mut inv = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(j) < self.apply(i) {
                    inv.insert((i as u8, j as u8));
                }
            }
        }
        inv
    }

    /// Number of inversions `ℓ(ω)`.
    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// `I_ω^k = {i : ω(i) <= k}`.
    pub fn ideal(&self, k: usize) -> Result<Subset> {
        let n = self.images.len();
        if k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        Ok(self.ideal_unchecked(k))
    }

    pub(crate) fn ideal_unchecked(&self, k: usize) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, &v) in self.images.iter().enumerate() {
            if (v as usize) <= k {
                s = s.with(i + 1);
            }
        }
        s
    }

    /// `I_ω^0, ..., I_ω^n`.
    pub fn ideals(&self) -> Vec<Subset> {
        (0..=self.images.len())
            .map(|k| self.ideal_unchecked(k))
            .collect()
    }

    /// The permutation whose `k`-th ideal is the `k`-th set of a maximal
    /// chain `∅ = C0 ⊂ C1 ⊂ ... ⊂ Cn = [n]`.
    pub fn from_ideal_chain(chain: &[Subset]) -> Result<Self> {
        let n = chain.len().checked_sub(1).ok_or(Error::GroundSize(0))?;
        let mut images = alloc::vec![0u8; n];
        for k in 1..=n {
            let d = chain[k].difference(chain[k - 1]);
            if d.len() != 1 || !chain[k - 1].is_subset(chain[k]) {
                return Err(Error::NotAPermutation(Vec::new()));
            }
            let i = d.min_element().unwrap();
            if i > n {
                return Err(Error::ElementOutOfRange {
                    element: i,
                    n: n as u8,
                });
            }
            images[i - 1] = k as u8;
        }
        Permutation::from_one_line(&images)
    }

    /// `k -> ω(n + 1 - k)`: the permutation whose ideals are the mirrored
    /// ideals of `self`.
    pub fn mirrored(&self) -> Permutation {
        let mut images = self.images.clone();
        images.reverse();
        Permutation { images }
    }

    /// `ω0 ∘ ω`: ideals are complements of the ideals of `self`, reversed.
    pub fn complemented(&self) -> Permutation {
        let n = self.images.len() as u8;
        Permutation {
            images: self.images.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    fn check_same_n(&self, other: &Permutation) -> Result<()> {
        if self.images.len() == other.images.len() {
            Ok(())
        } else {
            Err(Error::MismatchedGroundSize(
                self.images.len() as u8,
                other.images.len() as u8,
            ))
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.images.len() > 9 { "," } else { "" };
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// The ω-checker `{ I_ω^k ∩ [j..n] : 1 <= j <= ω⁻¹(k), 0 <= k <= n }`, with
/// `∅` always present.
pub fn checker(w: &Permutation) -> WsCollection {
    let n = w.n();
    let mut sets = BTreeSet::new();
    sets.insert(Subset::EMPTY);
    for k in 1..=n.get() {
        let ideal = w.ideal_unchecked(k);
        for j in 1..=w.preimage(k) {
            sets.insert(ideal.intersection(Subset::interval(j, n.get())));
        }
    }
    WsCollection::from_members_unchecked(n, sets)
}

/// ω-chamber (left) set: `i ∈ x`, `j < i`, `ω(j) < ω(i)` imply `j ∈ x`.
pub fn is_chamber_set(x: Subset, w: &Permutation) -> bool {
    x.elements()
        .all(|i| (1..i).all(|j| w.apply(j) > w.apply(i) || x.contains(j)))
}

/// Right set: `i ∈ x`, `j > i`, `ω(j) < ω(i)` imply `j ∈ x`.
pub fn is_right_set(x: Subset, w: &Permutation) -> bool {
    let n = w.n().get();
    x.elements()
        .all(|i| (i + 1..=n).all(|j| w.apply(j) > w.apply(i) || x.contains(j)))
}

/// Reflexive weak Bruhat relation `Inv(wp) ⊆ Inv(w)`.
pub fn weak_bruhat_leq(wp: &Permutation, w: &Permutation) -> Result<bool> {
    wp.check_same_n(w)?;
    Ok(wp.inversions().is_subset(&w.inversions()))
}

/// Strict weak Bruhat relation `Inv(wp) ⊊ Inv(w)`.
pub fn weak_bruhat_less(wp: &Permutation, w: &Permutation) -> Result<bool> {
    Ok(wp != w && weak_bruhat_leq(wp, w)?)
}

/// For all `i, j ∈ [n]`: `I_{wp}^i ⋖ I_w^j` or `I_{wp}^i ⊇ I_w^j`.
pub fn cond_ideals(wp: &Permutation, w: &Permutation) -> Result<bool> {
    wp.check_same_n(w)?;
    let n = w.n().get();
    let left = wp.ideals();
    let right = w.ideals();
    Ok((1..=n).all(|i| (1..=n).all(|j| lessdot(left[i], right[j]) || right[j].is_subset(left[i]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    fn p(v: &[u8]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    fn gs(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    // Definition-literal oracles, independent of the bit tricks above.
    fn lessdot_oracle(a: Subset, b: Subset) -> bool {
        let ab: Vec<usize> = a.elements().filter(|&x| !b.contains(x)).collect();
        let ba: Vec<usize> = b.elements().filter(|&x| !a.contains(x)).collect();
        !ba.is_empty() && ab.iter().all(|&i| ba.iter().all(|&j| i < j))
    }

    fn splits_oracle(a: Subset, b: Subset) -> bool {
        let ab = a.difference(b);
        let ba: Vec<usize> = b.difference(a).to_vec();
        if ab.is_empty() || ba.is_empty() {
            return false;
        }
        // try every 2-block partition of b - a
        (1..(1u32 << ba.len()) - 1).any(|mask| {
            let (mut lo, mut hi) = (Subset::EMPTY, Subset::EMPTY);
            for (k, &e) in ba.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    lo = lo.with(e);
                } else {
                    hi = hi.with(e);
                }
            }
            lessdot_oracle(lo, ab) && lessdot_oracle(ab, hi)
        })
    }

    #[test]
    fn canonical_order() {
        let mut v = gs(3).all_subsets();
        v.dedup();
        let expect = vec![
            s(&[]),
            s(&[1]),
            s(&[2]),
            s(&[3]),
            s(&[1, 2]),
            s(&[1, 3]),
            s(&[2, 3]),
            s(&[1, 2, 3]),
        ];
        assert_eq!(v, expect);
        assert!(s(&[1, 4]) < s(&[2, 3]));
    }

    #[test]
    fn subset_helpers() {
        assert_eq!(Subset::interval(2, 4), s(&[2, 3, 4]));
        assert_eq!(Subset::interval(3, 2), Subset::EMPTY);
        assert_eq!(Subset::interval(1, 64).len(), 64);
        assert_eq!(s(&[1, 3]).complement(gs(4)), s(&[2, 4]));
        assert_eq!(s(&[1, 3]).mirror(gs(4)), s(&[2, 4]));
        assert_eq!(s(&[1, 3, 5]).delete_and_shift(3), s(&[1, 4]));
        assert_eq!(s(&[1, 4]).insert_gap(3), s(&[1, 5]));
        assert_eq!(s(&[2, 5]).to_string(), "{2,5}");
        assert!(Subset::from_elements([0]).is_err());
        assert!(Subset::from_elements([65]).is_err());
    }

    #[test]
    fn lessdot_examples() {
        assert!(lessdot(s(&[1, 3]), s(&[2, 3])));
        assert!(lessdot(s(&[2, 3]), s(&[2, 4])));
        assert!(!lessdot(s(&[1, 3]), s(&[2, 4])));
        assert!(lessdot(s(&[]), s(&[2])));
        assert!(lessdot(s(&[1]), s(&[1, 2])));
        assert!(!lessdot(s(&[1, 2]), s(&[1, 2])));
    }

    #[test]
    fn splits_examples() {
        assert!(splits(s(&[3, 4, 6]), s(&[2, 5, 6])));
        assert!(splits(s(&[2, 5, 6]), s(&[1, 5, 7])));
        assert!(!splits(s(&[3, 4, 6]), s(&[1, 5, 7])));
        assert!(splits(s(&[2]), s(&[1, 3])));
    }

    #[test]
    fn separation_examples() {
        assert!(weakly_separated(s(&[3, 4, 6]), s(&[2, 5, 6])));
        assert!(weakly_separated(s(&[1, 2]), s(&[1, 2])));
        assert!(!weakly_separated(s(&[2]), s(&[1, 3])));
        assert!(strongly_separated(s(&[1, 3]), s(&[2, 3])));
        assert!(!strongly_separated(s(&[1, 3]), s(&[2, 4])));
        assert!(strongly_separated(s(&[4]), s(&[4])));
    }

    #[test]
    fn relations_match_oracles_exhaustively() {
        for n in 1..=5 {
            let all = gs(n).all_subsets();
            for &a in &all {
                for &b in &all {
                    assert_eq!(lessdot(a, b), lessdot_oracle(a, b), "{a} {b}");
                    assert_eq!(splits(a, b), splits_oracle(a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn separation_invariants_exhaustive() {
        for n in 1..=5 {
            let g = gs(n);
            let all = g.all_subsets();
            for &a in &all {
                for &b in &all {
                    let ws = weakly_separated(a, b);
                    assert_eq!(ws, weakly_separated(b, a));
                    assert_eq!(ws, weakly_separated(a.complement(g), b.complement(g)));
                    if strongly_separated(a, b) {
                        assert!(ws);
                    }
                }
            }
        }
    }

    #[test]
    fn lessdot_transitivity_witness() {
        for n in 1..=5 {
            let all = gs(n).all_subsets();
            for &a in &all {
                for &b in all.iter().filter(|&&b| lessdot(a, b) && a.len() <= b.len()) {
                    for &c in all.iter().filter(|&&c| lessdot(b, c) && b.len() <= c.len()) {
                        if weakly_separated(a, c) {
                            assert!(lessdot(a, c), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inversions_and_length() {
        for n in 1..=6 {
            let w0 = Permutation::longest(gs(n));
            assert_eq!(w0.length(), n * (n - 1) / 2);
            assert_eq!(Permutation::identity(gs(n)).length(), 0);
        }
        let w = p(&[3, 1, 5, 2, 4]);
        assert_eq!(w.length(), 4);
        assert_eq!(
            w.inversions().into_iter().collect::<Vec<_>>(),
            vec![(1, 2), (1, 4), (3, 4), (3, 5)]
        );
        for w in Permutation::all(gs(4)) {
            let w0 = Permutation::longest(gs(4));
            let diff = w0.inversions().difference(&w.inversions()).count();
            assert_eq!(w0.length() - w.length(), diff);
        }
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[]).is_err());
        assert_eq!(Permutation::all(gs(4)).len(), 24);
        let w = p(&[2, 3, 1]);
        assert_eq!(w.inverse(), p(&[3, 1, 2]));
        assert_eq!(Permutation::from_ideal_chain(&w.ideals()).unwrap(), w);
    }

    #[test]
    fn ideals() {
        let w = p(&[3, 1, 5, 2, 4]);
        assert_eq!(w.ideal(0).unwrap(), Subset::EMPTY);
        assert_eq!(w.ideal(5).unwrap(), gs(5).full());
        assert_eq!(w.ideal(2).unwrap(), s(&[2, 4]));
        assert!(w.ideal(6).is_err());
    }

    #[test]
    fn mirrored_and_complemented_ideals() {
        let g = gs(5);
        for w in Permutation::all(g) {
            let m = w.mirrored();
            let c = w.complemented();
            for k in 0..=5 {
                assert_eq!(m.ideal(k).unwrap(), w.ideal(k).unwrap().mirror(g));
                assert_eq!(c.ideal(k).unwrap(), w.ideal(5 - k).unwrap().complement(g));
            }
        }
    }

    #[test]
    fn checker_examples() {
        let id3 = Permutation::identity(gs(3));
        let c = checker(&id3);
        assert_eq!(c.len(), 7);
        for p_ in 1..=3 {
            for q in p_..=3 {
                assert!(c.contains(Subset::interval(p_, q)));
            }
        }
        for n in 1..=5 {
            let w0 = Permutation::longest(gs(n));
            let mut expect: Vec<Subset> = (1..=n).map(|i| Subset::interval(i, n)).collect();
            expect.push(Subset::EMPTY);
            expect.sort();
            assert_eq!(checker(&w0).members().copied().collect::<Vec<_>>(), expect);
        }
        let c = checker(&p(&[2, 3, 1]));
        assert_eq!(
            c.members().copied().collect::<Vec<_>>(),
            vec![s(&[]), s(&[3]), s(&[1, 3]), s(&[2, 3]), s(&[1, 2, 3])]
        );
    }

    #[test]
    fn chamber_and_right_examples() {
        let g = gs(4);
        let w0 = Permutation::longest(g);
        let id = Permutation::identity(g);
        for x in g.all_subsets() {
            assert!(is_chamber_set(x, &w0));
            assert_eq!(is_chamber_set(x, &id), x == Subset::interval(1, x.len()));
            assert!(is_right_set(x, &id));
            assert_eq!(
                is_right_set(x, &w0),
                x.is_empty() || x == Subset::interval(5 - x.len(), 4)
            );
        }
        assert!(!is_chamber_set(s(&[1, 3]), &p(&[3, 1, 5, 2, 4])));
        assert!(!is_right_set(s(&[2]), &p(&[2, 3, 1])));
    }

    #[test]
    fn checker_facts() {
        for n in 1..=6 {
            for w in Permutation::all(gs(n)) {
                let c = checker(&w);
                assert!(c.validate());
                let ideals: BTreeSet<Subset> = w.ideals().into_iter().collect();
                for &x in c.members() {
                    assert_eq!(is_chamber_set(x, &w), ideals.contains(&x), "{w} {x}");
                }
                for x in &ideals {
                    assert!(c.contains(*x));
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = gs(3);
        for w in Permutation::all(g) {
            assert!(weak_bruhat_leq(&Permutation::identity(g), &w).unwrap());
            assert!(weak_bruhat_leq(&w, &Permutation::longest(g)).unwrap());
            assert!(cond_ideals(&w, &w).unwrap());
            assert!(!weak_bruhat_less(&w, &w).unwrap());
        }
        assert!(!weak_bruhat_leq(&p(&[2, 1, 3]), &p(&[2, 3, 1])).unwrap());
        assert!(!cond_ideals(&p(&[2, 1, 3]), &p(&[2, 3, 1])).unwrap());
        assert!(cond_ideals(&Permutation::identity(g), &Permutation::longest(g)).unwrap());
        assert!(weak_bruhat_leq(&p(&[1, 2]), &p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn bruhat_iff_cond_ideals() {
        for n in 1..=5 {
            let perms = Permutation::all(gs(n));
            for a in &perms {
                for b in &perms {
                    assert_eq!(
                        weak_bruhat_leq(a, b).unwrap(),
                        cond_ideals(a, b).unwrap(),
                        "{a} {b}"
                    );
                }
            }
        }
    }
}

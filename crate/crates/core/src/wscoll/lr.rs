//! Left-right pairs: two collections over `[n']` whose union is weakly
//! separated and where every left member `L` and right member `R` with
//! `|L| <= |R|` satisfy `L ⋖ R` or `L = R`.

use alloc::format;

use crate::groundset::{lessdot_eq, weakly_separated, Subset};
use crate::wscoll::WsCollection;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrPair {
    pub left: WsCollection,
    pub right: WsCollection,
}

impl LrPair {
    pub fn new(left: WsCollection, right: WsCollection) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::MismatchedGroundSize(
                left.n().get() as u8,
                right.n().get() as u8,
            ));
        }
        Ok(LrPair { left, right })
    }

    fn left_accepts(&self, x: Subset) -> bool {
        self.left.accepts(x)
            && self.right.accepts(x)
            && self
                .right
                .members()
                .all(|&r| x.len() > r.len() || lessdot_eq(x, r))
    }

    fn right_accepts(&self, x: Subset) -> bool {
        self.left.accepts(x)
            && self.right.accepts(x)
            && self
                .left
                .members()
                .all(|&l| l.len() > x.len() || lessdot_eq(l, x))
    }

    /// Whether `(left ∪ {x}, right)` is still a left-right pair.
    pub fn can_add_left(&self, x: Subset) -> bool {
        x.fits(self.left.n()) && self.left_accepts(x)
    }

    /// Whether `(left, right ∪ {x})` is still a left-right pair.
    pub fn can_add_right(&self, x: Subset) -> bool {
        x.fits(self.right.n()) && self.right_accepts(x)
    }

    /// `({[n'] - R}, {[n'] - L})`.
    pub fn complementary(&self) -> LrPair {
        LrPair {
            left: self.right.complement(),
            right: self.left.complement(),
        }
    }
}

/// Union weakly separated and the left-right condition holds.
pub fn lr_validate(p: &LrPair) -> Result<bool> {
    if p.left.n() != p.right.n() {
        return Err(Error::MismatchedGroundSize(
            p.left.n().get() as u8,
            p.right.n().get() as u8,
        ));
    }
    let members: alloc::vec::Vec<Subset> =
        p.left.members().chain(p.right.members()).copied().collect();
    for (k, &a) in members.iter().enumerate() {
        for &b in &members[k + 1..] {
            if !weakly_separated(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(p.left.members().all(|&l| {
        p.right
            .members()
            .all(|&r| l.len() > r.len() || lessdot_eq(l, r))
    }))
}

/// Adds subsets, scanning `2^[n']` canonically, first to the left and then
/// to the right collection, until neither side accepts anything new.
pub fn lr_extend_maximal(p: &LrPair) -> Result<LrPair> {
    if !lr_validate(p)? {
        return Err(Error::InvalidLrPair(format!(
            "left {:?} / right {:?}",
            p.left, p.right
        )));
    }
    let mut out = p.clone();
    let all = out.left.n().all_subsets();
    loop {
        let mut changed = false;
        for &x in &all {
            if !out.left.contains(x) && out.left_accepts(x) {
                out.left.insert(x)?;
                changed = true;
            }
        }
        for &x in &all {
            if !out.right.contains(x) && out.right_accepts(x) {
                out.right.insert(x)?;
                changed = true;
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}

/// The pair `({X ⊆ [n-1] : X ∈ c}, {X ⊆ [n-1] : X ∪ {n} ∈ c})` over `[n-1]`.
pub fn lr_pair_of(c: &WsCollection) -> Result<LrPair> {
    let n = c.n().get();
    let smaller = c.n().smaller().ok_or(Error::GroundSize(0))?;
    let left = c.members().filter(|x| !x.contains(n)).copied();
    let right = c.members().filter(|x| x.contains(n)).map(|x| x.without(n));
    LrPair::new(
        WsCollection::new(smaller, left)?,
        WsCollection::new(smaller, right)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groundset::{lessdot_eq, GroundSize};
    use alloc::vec::Vec;

    fn gs(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied()).unwrap()
    }

    fn coll(n: usize, v: &[Subset]) -> WsCollection {
        WsCollection::new(gs(n), v.iter().copied()).unwrap()
    }

    #[test]
    fn validate_examples() {
        for n in 1..=5 {
            let pre: Vec<Subset> = (0..=n).map(|k| Subset::interval(1, k)).collect();
            let suf: Vec<Subset> = (1..=n + 1).map(|k| Subset::interval(k, n)).collect();
            let p = LrPair::new(coll(n, &pre), coll(n, &suf)).unwrap();
            assert!(lr_validate(&p).unwrap());
        }
        let bad = LrPair::new(coll(3, &[s(&[2])]), coll(3, &[s(&[1, 3])])).unwrap();
        assert!(!lr_validate(&bad).unwrap());
        let empty = LrPair::new(coll(3, &[]), coll(3, &[])).unwrap();
        assert!(lr_validate(&empty).unwrap());
        assert!(LrPair::new(coll(3, &[]), coll(2, &[])).is_err());
    }

    #[test]
    fn extend_examples() {
        let p = LrPair::new(coll(2, &[]), coll(2, &[])).unwrap();
        let m = lr_extend_maximal(&p).unwrap();
        assert!(lr_validate(&m).unwrap());
        for x in [s(&[]), s(&[1]), s(&[1, 2])] {
            assert!(m.left.contains(x));
        }
        assert_eq!(lr_extend_maximal(&m).unwrap(), m);

        let bad = LrPair::new(coll(3, &[s(&[2])]), coll(3, &[s(&[1, 3])])).unwrap();
        assert!(lr_extend_maximal(&bad).is_err());
    }

    #[test]
    fn maximal_pairs_contain_boundary_intervals() {
        for n in 1..=4 {
            for c in crate::wscoll::enumerate_maximal(gs(n + 1), |_| true) {
                let p = lr_pair_of(&c).unwrap();
                assert!(lr_validate(&p).unwrap(), "{c:?}");
                let m = lr_extend_maximal(&p).unwrap();
                for k in 0..=n {
                    assert!(m.left.contains(Subset::interval(1, k)));
                    assert!(m.right.contains(Subset::interval(k + 1, n)));
                }
            }
        }
    }

    #[test]
    fn union_rule_exhaustive() {
        for n in 1..=4 {
            let all = gs(n).all_subsets();
            for &a in &all {
                for &b in &all {
                    let ab = a.union(b);
                    for &c in &all {
                        if lessdot_eq(a, c) && lessdot_eq(b, c) {
                            let strict_sub = c.is_subset(ab) && c != ab;
                            assert!(strict_sub || lessdot_eq(ab, c), "{a} {b} {c}");
                        }
                        if lessdot_eq(c, a) && lessdot_eq(c, b) {
                            assert!(lessdot_eq(c, ab), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    // For every left-right pair over [3] (all 2^8 x 2^8 family pairs), the
    // augmentation rules produce left-right pairs again.
    #[test]
    fn augmentation_rules_exhaustive_n3() {
        let n = 3;
        let all = gs(n).all_subsets();
        let fam = |mask: u32| -> WsCollection {
            WsCollection::new(gs(n), (0..8).filter(|b| mask >> b & 1 == 1).map(|b| all[b])).unwrap()
        };
        let mut checked = 0;
        for lm in 0u32..256 {
            let l = fam(lm);
            if !l.validate() {
                continue;
            }
            for rm in 0u32..256 {
                let p = LrPair {
                    left: l.clone(),
                    right: fam(rm),
                };
                if !lr_validate(&p).unwrap() {
                    continue;
                }
                checked += check_augmentations(&p);
            }
        }
        assert!(checked > 0);
    }

    pub(super) fn check_augmentations(p: &LrPair) -> usize {
        let n = p.left.n();
        let mut applied = 0;
        for x in n.all_subsets() {
            for i in 1..=n.get() {
                for j in i + 1..=n.get() {
                    for k in j + 1..=n.get() {
                        let inside = x.contains(i) && x.contains(j) && x.contains(k);
                        if inside
                            && p.left.contains(x.without(k))
                            && p.left.contains(x.without(j))
                            && p.right.contains(x.without(j))
                            && p.right.contains(x.without(i))
                        {
                            let mut q = p.clone();
                            q.left.insert(x).unwrap();
                            assert!(lr_validate(&q).unwrap(), "left {x} {i}{j}{k} {p:?}");
                            applied += 1;
                        }
                        let outside = !x.contains(i) && !x.contains(j) && !x.contains(k);
                        if outside
                            && p.left.contains(x.with(i))
                            && p.left.contains(x.with(j))
                            && p.right.contains(x.with(j))
                            && p.right.contains(x.with(k))
                        {
                            let mut q = p.clone();
                            q.right.insert(x).unwrap();
                            assert!(lr_validate(&q).unwrap(), "right {x} {i}{j}{k} {p:?}");
                            applied += 1;
                        }
                    }
                }
            }
        }
        applied
    }

    #[test]
    fn augmentation_rules_on_contracted_pairs_n4() {
        let mut applied = 0;
        for c in crate::wscoll::enumerate_maximal(gs(5), |_| true) {
            let p = lr_pair_of(&c).unwrap();
            // drop members to expose premises whose conclusion is not already present
            for drop in p.left.to_vec() {
                let mut q = p.clone();
                q.left.remove(drop);
                applied += check_augmentations(&q);
            }
            for drop in p.right.to_vec() {
                let mut q = p.clone();
                q.right.remove(drop);
                applied += check_augmentations(&q);
            }
        }
        assert!(applied > 0);
    }

    #[test]
    fn complementary_pair_is_valid() {
        let pre: Vec<Subset> = (0..=3).map(|k| Subset::interval(1, k)).collect();
        let p = LrPair::new(coll(3, &pre), coll(3, &[s(&[3]), s(&[2, 3])])).unwrap();
        assert!(lr_validate(&p.complementary()).unwrap());
    }
}

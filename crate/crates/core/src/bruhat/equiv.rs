//! Five equivalent conditions on a pair of permutations.

use alloc::vec::Vec;

use super::{strip_from_below, verify_region, Region, RegionTiling};
use crate::groundset::{cond_ideals, weak_bruhat_less, weakly_separated, Permutation, Subset};
use crate::tiling::{Color, Tile};
use crate::{Error, Result};

/// Largest `n` for which the tiling flags come from an exhaustive search over
/// all tile sets instead of the stripping construction.
pub const EXHAUSTIVE_LIMIT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Every set of (coloured) tiles on `Z_n` was tried.
    Exhaustive,
    /// Pure tiling by stripping from below; a pure tiling is a g-tiling.
    Constructive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivReport {
    /// `I_{ω'}^i ⋖ I_ω^j` conditions on the ideals.
    pub ideals: bool,
    /// `ω' < ω` in the weak Bruhat order.
    pub bruhat: bool,
    /// Right-of and a pure tiling of `Z(ω', ω)` exists.
    pub pure_tiling: bool,
    /// Right-of and some g-tiling of `Z(ω', ω)` exists.
    pub g_tiling: bool,
    /// Right-of and the ideals of both form a ws-collection.
    pub ws_ideals: bool,
    pub certification: Certification,
}

impl EquivReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.ideals,
            self.bruhat,
            self.pure_tiling,
            self.g_tiling,
            self.ws_ideals,
        ]
    }

    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }
}

/// Evaluates the five conditions for `ω' ≠ ω`.
pub fn theorem_equiv_check(wp: &Permutation, w: &Permutation) -> Result<EquivReport> {
    let region = Region::new(wp, w)?;
    if wp == w {
        return Err(Error::EqualPermutations);
    }
    let n = w.n().get();
    let oriented = region.is_oriented();
    let ideals = cond_ideals(wp, w)?;
    let bruhat = weak_bruhat_less(wp, w)?;

    let mut all: Vec<Subset> = wp.ideals();
    all.extend(w.ideals());
    let ws_ideals = oriented
        && all
            .iter()
            .enumerate()
            .all(|(k, &a)| all[k + 1..].iter().all(|&b| weakly_separated(a, b)));

    let (pure_tiling, g_tiling, certification) = if n <= EXHAUSTIVE_LIMIT {
        let (pure, any) = exhaustive_search(&region);
        (oriented && pure, oriented && any, Certification::Exhaustive)
    } else {
        let pure = oriented
            && match strip_from_below(wp, w) {
                Ok(rt) => verify_region(&rt).passed(),
                Err(Error::NotBruhat) => false,
                Err(e) => return Err(e),
            };
        (pure, pure, Certification::Constructive)
    };

    Ok(EquivReport {
        ideals,
        bruhat,
        pure_tiling,
        g_tiling,
        ws_ideals,
        certification,
    })
}

/// Tries every assignment of {absent, white, black} to the tile shapes of
/// `Z_n`; returns whether a pure and whether any tiling of the region exists.
fn exhaustive_search(region: &Region) -> (bool, bool) {
    let n = region.n().get();
    let mut shapes = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let rest = region.n().full().without(i).without(j);
            for bits in 0..(1u64 << n) {
                let x = Subset::from_bits(bits);
                if x.is_subset(rest) {
                    shapes.push((x, i, j));
                }
            }
        }
    }
    let (mut pure, mut any) = (false, false);
    let total = 3usize.pow(shapes.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut tiles = Vec::new();
        let mut black = false;
        for &(x, i, j) in &shapes {
            match c % 3 {
                1 => tiles.push(Tile::raw(x, i, j, Color::White)),
                2 => {
                    black = true;
                    tiles.push(Tile::raw(x, i, j, Color::Black));
                }
                _ => {}
            }
            c /= 3;
        }
        if (black && any) || (!black && pure) {
            continue;
        }
        if verify_region(&RegionTiling::new(region.clone(), tiles)).passed() {
            any = true;
            pure |= !black;
            if pure {
                break;
            }
        }
    }
    (pure, any)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groundset::GroundSize;

    fn p(v: &[u8]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn examples() {
        let n = GroundSize::new(3).unwrap();
        let r = theorem_equiv_check(&Permutation::identity(n), &Permutation::longest(n)).unwrap();
        assert_eq!(r.flags(), [true; 5]);
        assert_eq!(r.certification, Certification::Exhaustive);
        let r = theorem_equiv_check(&p(&[2, 1, 3]), &p(&[2, 3, 1])).unwrap();
        assert_eq!(r.flags(), [false; 5]);
        assert_eq!(
            theorem_equiv_check(&p(&[2, 1, 3]), &p(&[2, 1, 3])),
            Err(Error::EqualPermutations)
        );
    }

    #[test]
    fn all_pairs_agree() {
        for n in 1..=4 {
            let perms = Permutation::all(GroundSize::new(n).unwrap());
            for wp in &perms {
                for w in perms.iter().filter(|w| *w != wp) {
                    let r = theorem_equiv_check(wp, w).unwrap();
                    assert!(r.agree(), "{wp} {w}: {:?}", r.flags());
                }
            }
        }
    }
}

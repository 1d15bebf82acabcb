//! Chamber sets, ideals and region tilings checked against direct
//! definitions over all permutations of small ground sets.

use zonoweave_core::bruhat::{
    pad_to_zonogon, path_of, region_tiling_from_spectrum, strip_from_above, strip_from_below,
    unpad, verify_region, Region,
};
use zonoweave_core::groundset::{
    checker, is_chamber_set, is_right_set, lessdot_eq, weak_bruhat_less, weakly_separated,
};
use zonoweave_core::wscoll::enumerate_maximal;
use zonoweave_core::{GroundSize, Permutation};

fn gs(n: usize) -> GroundSize {
    GroundSize::new(n).unwrap()
}

#[test]
fn chamber_sets_by_ideals() {
    for n in 1..=5 {
        for w in Permutation::all(gs(n)) {
            let ideals = w.ideals();
            for x in gs(n).all_subsets() {
                let ws = ideals.iter().all(|&i| weakly_separated(x, i));
                let below = lessdot_eq(x, ideals[x.len()]);
                assert_eq!(is_chamber_set(x, &w), ws && below, "{w} {x}");
            }
        }
    }
}

#[test]
fn chamber_sets_lie_left_of_the_path() {
    for n in 1..=5 {
        for w in Permutation::all(gs(n)) {
            let path = path_of(&w);
            for x in gs(n)
                .all_subsets()
                .into_iter()
                .filter(|&x| is_chamber_set(x, &w))
            {
                assert!(x.bits() <= path.vertices()[x.len()].bits(), "{w} {x}");
            }
        }
    }
}

#[test]
fn checker_facts() {
    for n in 1..=6 {
        for w in Permutation::all(gs(n)) {
            let c = checker(&w);
            assert!(c.validate());
            let ideals = w.ideals();
            for x in c.members() {
                assert_eq!(is_chamber_set(*x, &w), ideals.contains(x), "{w} {x}");
            }
        }
    }
}

#[test]
fn maximal_region_collections_are_region_spectra() {
    for n in 1..=4 {
        let perms = Permutation::all(gs(n));
        for wp in &perms {
            for w in &perms {
                if !weak_bruhat_less(wp, w).unwrap() {
                    continue;
                }
                let expected = w.length() - wp.length() + n + 1;
                let cs = enumerate_maximal(gs(n), |x| is_chamber_set(x, w) && is_right_set(x, wp));
                assert!(!cs.is_empty());
                for c in cs {
                    assert_eq!(c.len(), expected, "{wp} {w}");
                    let rt = region_tiling_from_spectrum(wp, w, &c).unwrap();
                    assert!(verify_region(&rt).passed());
                    assert_eq!(rt.spectrum(), c);
                }
            }
        }
    }
}

#[test]
fn padding_round_trip() {
    let p = |v: &[u8]| Permutation::from_one_line(v).unwrap();
    let rt = strip_from_below(&p(&[2, 1, 3]), &p(&[3, 1, 2])).unwrap();
    let t = pad_to_zonogon(&rt).unwrap();
    assert_eq!(t.spectrum().unwrap().len(), 7);
    assert_eq!(unpad(&t, rt.region()).unwrap(), rt);
    // the standard tilings padded from either end agree on Z(id, ω)
    for w in Permutation::all(gs(4)) {
        let id = Permutation::identity(gs(4));
        let rt = strip_from_above(&id, &w).unwrap();
        let spec = pad_to_zonogon(&rt).unwrap().spectrum().unwrap();
        for x in rt.spectrum().members() {
            assert!(spec.contains(*x));
        }
        assert!(Region::new(&id, &w).unwrap().is_oriented());
    }
}

//! Properties of g-tilings grown by random expansions.

use proptest::prelude::*;
use zonoweave_core::auxgraph::{order_star, posets_equal};
use zonoweave_core::tiling::{
    contract, edge_existence_checks, expand, legal_paths, local_fans, principal_forest, strip_of,
    tiling_from_spectrum, verify, Side,
};
use zonoweave_core::{GTiling, GroundSize};

/// Grows a tiling of `Z_1` one side-`n` expansion at a time, picking the
/// path by `choices`.
fn grow(choices: &[usize]) -> Vec<GTiling> {
    let mut t = GTiling::empty(GroundSize::new(1).unwrap());
    let mut out = vec![t.clone()];
    for &c in choices {
        let paths = legal_paths(&t, Side::N);
        let path = &paths[c % paths.len()];
        t = expand(&t, path).unwrap();
        out.push(t.clone());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grown_tilings_are_valid(choices in prop::collection::vec(any::<usize>(), 1..6)) {
        let ts = grow(&choices);
        for w in ts.windows(2) {
            let (small, big) = (&w[0], &w[1]);
            prop_assert!(verify(big).passed());
            prop_assert_eq!(&contract(big, Side::N).unwrap(), small);
            let c = big.spectrum().unwrap();
            prop_assert!(c.is_largest());
            prop_assert_eq!(&tiling_from_spectrum(&c).unwrap(), big);
        }
    }

    #[test]
    fn structure_of_grown_tilings(choices in prop::collection::vec(any::<usize>(), 1..5)) {
        let t = grow(&choices).pop().unwrap();
        let n = t.n().get();
        prop_assert!(edge_existence_checks(&t).passed());
        prop_assert!(local_fans(&t).unwrap().passed());
        for i in 1..=n {
            let s = strip_of(&t, i).unwrap();
            prop_assert_eq!(s.edges.len(), s.tiles.len() + 1);
            if t.is_pure() {
                prop_assert_eq!(s.tiles.len(), n - 1);
            }
        }
        for h in 1..=n {
            principal_forest(&t, h).unwrap();
        }
        prop_assert!(posets_equal(&t).unwrap());
        prop_assert!(order_star(&t.spectrum().unwrap()).is_lattice());
        // side 1 contraction also lands on a valid tiling
        prop_assert!(verify(&contract(&t, Side::One).unwrap()).passed());
        prop_assert!(verify(&t.reverse()).passed());
        prop_assert!(verify(&t.mirror()).passed());
    }
}

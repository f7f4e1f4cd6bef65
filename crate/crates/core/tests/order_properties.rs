mod common;

use distlat::order::enumerate_downsets;
use distlat::{Lattice, Poset};
use proptest::prelude::*;

proptest! {
    #[test]
    fn birkhoff_round_trip(n in 0usize..=6, seed in any::<u64>()) {
        let p = common::random_poset(&mut common::rng(seed), n);
        let dl = Lattice::of_downsets(&p).unwrap();
        prop_assert!(dl.lattice.is_distributive());
        let b = dl.lattice.join_irreducibles().unwrap();
        prop_assert!(b.poset.is_isomorphic(&p));
        // the downsets of J_L give back the lattice
        let again = Lattice::of_downsets(&b.poset).unwrap();
        prop_assert!(again.lattice.is_isomorphic(&dl.lattice));
        for (k, d) in b.representation.iter().enumerate() {
            prop_assert_eq!(b.element_of(*d), Some(k));
        }
    }

    #[test]
    fn downset_lattice_operations(n in 0usize..=6, seed in any::<u64>()) {
        let p = common::random_poset(&mut common::rng(seed), n);
        let dl = Lattice::of_downsets(&p).unwrap();
        let l = &dl.lattice;
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(dl.downsets[l.meet(x, y)], dl.downsets[x].intersection(dl.downsets[y]));
                prop_assert_eq!(dl.downsets[l.join(x, y)], dl.downsets[x].union(dl.downsets[y]));
                prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
            }
        }
        prop_assert_eq!(enumerate_downsets(&p).unwrap(), dl.downsets);
    }

    #[test]
    fn products_and_joins_of_chains_are_distributive(a in 1usize..5, b in 1usize..5) {
        let prod = Lattice::chain(a).product(&Lattice::chain(b));
        prop_assert!(prod.is_distributive());
        prop_assert_eq!(prod.covers().len(), (a - 1) * b + a * (b - 1));
        let joined = Lattice::simple_join(&[Lattice::chain(a), prod.clone()]).unwrap();
        prop_assert!(joined.is_distributive());
        prop_assert_eq!(joined.len(), a + a * b);
    }
}

#[test]
fn non_distributive_lattices_detected() {
    // M3: 0 < 1,2,3 < 4
    let m3 = Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
    assert!(!Lattice::from_order(m3, 0, 4).unwrap().is_distributive());
    // N5: 0 < 1 < 2 < 4, 0 < 3 < 4
    let n5 = Poset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
    let n5 = Lattice::from_order(n5, 0, 4).unwrap();
    assert!(!n5.is_distributive());
    assert!(n5.join_irreducibles().is_err());
}

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mwsplit::chow_witt::{self, eta_mul, EtaClass};
use mwsplit::motive;
use mwsplit::schubert::{self, Cycle, Ring};
use mwsplit::verify;
use mwsplit::{tableau, Grassmannian, Shape, Truncation, Twist};

fn twist(b: bool) -> Twist {
    if b {
        Twist::Twisted
    } else {
        Twist::Untwisted
    }
}

/// A random integral cycle on `Gr(k,n)` from a coefficient seed list.
fn cycle(k: usize, n: usize, tw: Twist, coeffs: &[i64], ring: Ring) -> Cycle {
    let g = Grassmannian::new(k, n).unwrap();
    let shapes: Vec<Shape> = g.tableaux(tw).into_iter().flatten().map(|t| t.shape).collect();
    let terms = shapes.into_iter().zip(coeffs.iter().cycle()).map(|(s, &c)| (s, BigInt::from(c)));
    Cycle::from_terms(ring, tw, g.truncation(), terms).unwrap()
}

fn gr() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=6).prop_flat_map(|n| (0..=n, Just(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sq2_squares_to_zero((k, n) in gr(), tw in any::<bool>(), coeffs in prop::collection::vec(0i64..2, 1..8)) {
        let c = cycle(k, n, twist(tw), &coeffs, Ring::Mod2);
        prop_assert!(schubert::sq2(&schubert::sq2(&c)).is_zero());
    }

    #[test]
    fn sq2_is_a_derivation(
        (k, n) in gr(), t1 in any::<bool>(), t2 in any::<bool>(),
        a in prop::collection::vec(0i64..2, 1..6), b in prop::collection::vec(0i64..2, 1..6),
    ) {
        let x = cycle(k, n, twist(t1), &a, Ring::Mod2);
        let y = cycle(k, n, twist(t2), &b, Ring::Mod2);
        let lhs = schubert::sq2(&schubert::product(&x, &y).unwrap());
        let rhs = schubert::product(&schubert::sq2(&x), &y).unwrap()
            .add(&schubert::product(&x, &schubert::sq2(&y)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_commutative_and_associative(
        (k, n) in gr(),
        a in prop::collection::vec(-2i64..3, 1..5), b in prop::collection::vec(-2i64..3, 1..5), c in prop::collection::vec(-2i64..3, 1..5),
    ) {
        let tw = Twist::Untwisted;
        let (x, y, z) = (cycle(k, n, tw, &a, Ring::Integers), cycle(k, n, tw, &b, Ring::Integers), cycle(k, n, tw, &c, Ring::Integers));
        let p = |u: &Cycle, v: &Cycle| schubert::product(u, v).unwrap();
        prop_assert_eq!(p(&x, &y), p(&y, &x));
        prop_assert_eq!(p(&p(&x, &y), &z), p(&x, &p(&y, &z)));
    }

    #[test]
    fn eta_products_are_associative((k, n) in gr(), seed in any::<u64>()) {
        prop_assert!(verify::eta_ring_axioms(Grassmannian::new(k, n).unwrap(), 2, seed).unwrap());
    }

    #[test]
    fn eta_products_satisfy_the_condition((k, n) in gr(), seed in any::<u64>(), t1 in any::<bool>(), t2 in any::<bool>()) {
        let g = Grassmannian::new(k, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = verify::random_eta_class(g, twist(t1), (seed % 4) as usize % (g.dim() + 1), &mut rng).unwrap();
        let v = verify::random_eta_class(g, twist(t2), (seed / 7 % 5) as usize % (g.dim() + 1), &mut rng).unwrap();
        let p = eta_mul(&u, &v).unwrap();
        prop_assert!(EtaClass::new(p.degree, p.a().clone(), p.b().clone()).is_ok());
        prop_assert_eq!(eta_mul(&EtaClass::identity(g.truncation()), &p).unwrap(), p);
    }

    #[test]
    fn lattice_equal_ignores_unimodular_changes(
        (k, n) in gr(), d in 0usize..6, seed in prop::collection::vec(-3i64..4, 1..12), q in -3i64..4,
    ) {
        let g = Grassmannian::new(k, n).unwrap();
        let tr = g.truncation();
        let shapes = g.shapes_of_degree(d);
        prop_assume!(!shapes.is_empty());
        let gens: Vec<Cycle> = (0..3)
            .map(|i| {
                let terms = shapes.iter().enumerate().map(|(j, s)| (s.clone(), BigInt::from(seed[(i * 5 + j) % seed.len()])));
                Cycle::from_terms(Ring::Integers, Twist::Untwisted, tr, terms).unwrap()
            })
            .collect();
        let mut moved = gens.clone();
        moved[0] = moved[0].add(&gens[1].scale(&BigInt::from(q))).unwrap();
        moved.swap(1, 2);
        prop_assert!(chow_witt::lattice_equal(&gens, &moved, d).unwrap());
    }

    #[test]
    fn eta_counts_round_trip((k, n) in gr(), tw in any::<bool>()) {
        let c = motive::decompose_grassmannian(k, n, twist(tw)).unwrap().unshifted().counts();
        prop_assert_eq!(motive::eta_from_counts(&c.s, &c.w).unwrap(), c.t);
    }

    #[test]
    fn closure_members_are_reachable((k, n) in gr(), tw in any::<bool>()) {
        let tr = Truncation::boxed(k, n).unwrap();
        let comps = tableau::irredundant_components(tr, twist(tw), None).unwrap();
        let total: usize = comps.iter().map(|c| c.members.len()).sum();
        let count: usize = Grassmannian::new(k, n).unwrap().tableaux(twist(tw)).iter().map(Vec::len).sum();
        prop_assert_eq!(total, count);
        for c in &comps {
            prop_assert!(c.members.iter().all(|m| c.root.is_contained_in(m)));
        }
    }
}

//! Randomized algebraic laws: ring axioms for the sparse polynomials,
//! order axioms for the monomial comparisons, homomorphism of
//! substitution, and invariances of the higher layers.

use std::collections::BTreeMap;

use proptest::prelude::*;

use commvar::groebner::{buchberger, GroebnerConfig, Ideal};
use commvar::ring::{Coeff, CoefficientField, Monomial, MonomialOrder, Polynomial, Ring};
use commvar::support::{is_p_regular, support_variety, WeightA2};

fn f7_ring() -> Ring {
    Ring::new(
        vec!["x", "y", "z"],
        MonomialOrder::Grevlex,
        CoefficientField::prime(7).unwrap(),
    )
    .unwrap()
}

fn poly_strategy(ring: Ring) -> impl Strategy<Value = Polynomial> {
    let terms = prop::collection::vec(
        (prop::collection::vec(0u32..4, 3), 0u64..7),
        0..6,
    );
    terms.prop_map(move |raw| {
        let pairs = raw
            .into_iter()
            .map(|(exps, c)| (Monomial::from_exps(exps), Coeff::Fp(c)))
            .collect();
        Polynomial::from_terms(&ring, pairs)
    })
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, 3).prop_map(Monomial::from_exps)
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(
        a in poly_strategy(f7_ring()),
        b in poly_strategy(f7_ring()),
        c in poly_strategy(f7_ring()),
    ) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_distributes(
        a in poly_strategy(f7_ring()),
        b in poly_strategy(f7_ring()),
        c in poly_strategy(f7_ring()),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn additive_inverses_cancel(a in poly_strategy(f7_ring())) {
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.sub(&a), f7_ring().zero());
    }

    #[test]
    fn monomial_orders_are_total_and_multiplicative(
        a in monomial_strategy(),
        b in monomial_strategy(),
        c in monomial_strategy(),
    ) {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            // antisymmetry
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
            // equality only for equal exponent vectors
            if order.cmp(&a, &b) == std::cmp::Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            // compatibility with multiplication
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), order.cmp(&a, &b));
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in poly_strategy(f7_ring()),
        b in poly_strategy(f7_ring()),
    ) {
        let ring = f7_ring();
        let target = Ring::new(
            vec!["u", "v"],
            MonomialOrder::Grevlex,
            CoefficientField::prime(7).unwrap(),
        )
        .unwrap();
        let mut assignment = BTreeMap::new();
        assignment.insert("x".to_string(), target.parse("u + v").unwrap());
        assignment.insert("y".to_string(), target.parse("u*v - 2").unwrap());
        assignment.insert("z".to_string(), target.parse("3").unwrap());
        let a2 = a.substitute(&assignment, &target).unwrap();
        let b2 = b.substitute(&assignment, &target).unwrap();
        prop_assert_eq!(a.add(&b).substitute(&assignment, &target).unwrap(), a2.add(&b2));
        prop_assert_eq!(a.mul(&b).substitute(&assignment, &target).unwrap(), a2.mul(&b2));
        let _ = ring;
    }

    #[test]
    fn groebner_basis_ignores_generator_order(
        mut gens in prop::collection::vec(poly_strategy(f7_ring()), 1..4),
        seed in 0usize..6,
    ) {
        let ring = f7_ring();
        let config = GroebnerConfig::default();
        let forward = Ideal::new(ring.clone(), gens.clone()).unwrap();
        // a deterministic shuffle driven by the seed
        let len = gens.len().max(1);
        gens.rotate_left(seed % len);
        gens.reverse();
        let shuffled = Ideal::new(ring, gens).unwrap();
        let gb1 = buchberger(&forward, &config).unwrap();
        let gb2 = buchberger(&shuffled, &config).unwrap();
        prop_assert_eq!(gb1.basis(), gb2.basis());
    }

    #[test]
    fn regularity_respects_diagram_symmetry(c1 in 0u64..200, c2 in 0u64..200) {
        prop_assert_eq!(
            is_p_regular(WeightA2::new(c1, c2), 7),
            is_p_regular(WeightA2::new(c2, c1), 7)
        );
    }

    #[test]
    fn support_depends_only_on_digit_counts(
        pattern in prop::collection::vec(any::<bool>(), 1..6),
        seed in 0usize..5,
    ) {
        // the same multiset of digit classes in a different order
        let p = 7u64;
        let weight_for = |pat: &[bool]| {
            let (mut c1, mut c2) = (0u64, 0u64);
            for (k, &singular) in pat.iter().enumerate() {
                let d = if singular { (6, 0) } else { (1, 1) };
                c1 += d.0 * p.pow(k as u32);
                c2 += d.1 * p.pow(k as u32);
            }
            WeightA2::new(c1, c2)
        };
        let mut rotated = pattern.clone();
        rotated.rotate_left(seed % pattern.len());
        let r = pattern.len();
        let one = support_variety(weight_for(&pattern), p, r).unwrap();
        let two = support_variety(weight_for(&rotated), p, r).unwrap();
        prop_assert_eq!((one.a, one.b, one.dim, one.irreducible),
                        (two.a, two.b, two.dim, two.irreducible));
    }
}

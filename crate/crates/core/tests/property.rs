//! Property tests for the algebraic laws the kernel relies on.

mod common;

use defring::coeff::FieldDescriptor;
use defring::factor;
use defring::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use proptest::prelude::*;
use std::cmp::Ordering;

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::DegRevLex,
        MonomialOrder::NegDegRevLex,
        MonomialOrder::elimination_block(2),
    ]
}

fn arb_monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, nvars).prop_map(Monomial::new)
}

fn q_ring() -> Ring {
    Ring::new(FieldDescriptor::rationals(), &["x", "y", "z"]).unwrap()
}

fn f5_ring() -> Ring {
    Ring::new(FieldDescriptor::prime_field(5).unwrap(), &["x", "y", "z"]).unwrap()
}

fn arb_poly(ring: Ring, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let nvars = ring.nvars();
    prop::collection::vec((arb_monomial(nvars), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        let mut acc = ring.zero();
        for (m, c) in terms {
            acc = acc.add(&ring.monomial_term(m, ring.field().from_integer(c)));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn orders_are_antisymmetric_and_transitive(
        a in arb_monomial(3),
        b in arb_monomial(3),
        c in arb_monomial(3),
    ) {
        for order in orders() {
            let ab = order.compare(&a, &b);
            let ba = order.compare(&b, &a);
            prop_assert_eq!(ab, ba.reverse());
            if order.compare(&a, &b) != Ordering::Greater
                && order.compare(&b, &c) != Ordering::Greater
            {
                prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
            }
            prop_assert_eq!(order.compare(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn orders_are_multiplicative(
        a in arb_monomial(3),
        b in arb_monomial(3),
        n in arb_monomial(3),
    ) {
        for order in orders() {
            let before = order.compare(&a, &b);
            let after = order.compare(&a.mul(&n), &b.mul(&n));
            prop_assert_eq!(before, after);
        }
    }

    #[test]
    fn global_orders_put_one_at_the_bottom(m in arb_monomial(3)) {
        let one = Monomial::one(3);
        if !m.is_one() {
            prop_assert_eq!(MonomialOrder::Lex.compare(&one, &m), Ordering::Less);
            prop_assert_eq!(MonomialOrder::DegRevLex.compare(&one, &m), Ordering::Less);
            prop_assert_eq!(
                MonomialOrder::NegDegRevLex.compare(&one, &m),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn multiplication_distributes(
        f in arb_poly(f5_ring(), 4),
        g in arb_poly(f5_ring(), 4),
        h in arb_poly(f5_ring(), 4),
    ) {
        let lhs = f.add(&g).mul(&h);
        let rhs = f.mul(&h).add(&g.mul(&h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_roundtrip_rational(f in arb_poly(q_ring(), 5)) {
        let ring = q_ring();
        let printed = f.to_string();
        prop_assert_eq!(ring.parse(&printed).unwrap(), f);
    }

    #[test]
    fn print_parse_roundtrip_modular(f in arb_poly(f5_ring(), 5)) {
        let ring = f5_ring();
        let printed = f.to_string();
        prop_assert_eq!(ring.parse(&printed).unwrap(), f);
    }

    #[test]
    fn gcd_divides_both_inputs(
        f in arb_poly(q_ring(), 3),
        g in arb_poly(q_ring(), 3),
    ) {
        let d = factor::gcd(&f, &g);
        if !d.is_zero() {
            prop_assert!(f.div_exact(&d).is_some());
            prop_assert!(g.div_exact(&d).is_some());
        } else {
            prop_assert!(f.is_zero() && g.is_zero());
        }
    }

    #[test]
    fn common_factors_pass_through_gcd(
        f in arb_poly(f5_ring(), 2),
        g in arb_poly(f5_ring(), 2),
        h in arb_poly(f5_ring(), 2),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let lhs = factor::gcd(&f.mul(&h), &g.mul(&h));
        let rhs = h.mul(&factor::gcd(&f, &g)).make_monic(&MonomialOrder::DegRevLex);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sqrt_of_a_square_recovers_the_root(f in arb_poly(q_ring(), 3)) {
        let sq = f.mul(&f);
        let s = factor::poly_sqrt(&sq).expect("squares have square roots");
        prop_assert!(s == f || s == f.neg());
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(f in arb_poly(q_ring(), 3)) {
        prop_assume!(!f.is_zero());
        let s = factor::squarefree_part(&f).unwrap();
        prop_assert!(f.div_exact(&s).is_some());
        // squarefree in characteristic zero: the joint gcd with all partials
        // is constant
        if !s.is_constant() {
            let mut g = s.clone();
            for v in 0..3 {
                g = factor::gcd(&g, &s.derivative(v));
            }
            prop_assert!(g.is_constant());
        }
    }
}

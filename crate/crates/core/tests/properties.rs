use std::collections::HashMap;

use octohopf::poly::Monomial;
use octohopf::{Polynomial, Rational, VariableId};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = VariableId> {
    (0usize..3, any::<bool>()).prop_map(|(i, x)| if x { VariableId::x(i) } else { VariableId::y(i) })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec((var(), 1u16..3), 0..3), -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(f, n, d)| (Monomial::from_pairs(f), Rational::new(n, d))))
    })
}

fn point() -> impl Strategy<Value = HashMap<VariableId, Rational>> {
    prop::collection::vec(-4i64..=4, 6).prop_map(|v| {
        (0..3)
            .flat_map(|i| [(VariableId::x(i), Rational::from_integer(v[i])), (VariableId::y(i), Rational::from_integer(v[3 + i]))])
            .collect()
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_is_a_derivation(p in poly(), q in poly(), v in var()) {
        let lhs = (&p * &q).derive(v).unwrap();
        let rhs = &(&p.derive(v).unwrap() * &q) + &(&p * &q.derive(v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_ring_morphism(p in poly(), q in poly(), a in point()) {
        let ev = |f: &Polynomial| f.evaluate(&a).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), &ev(&p) * &ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), &ev(&p) + &ev(&q));
    }
}

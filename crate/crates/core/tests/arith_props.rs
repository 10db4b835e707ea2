use std::sync::Arc;

use dashu_int::IBig;
use proptest::prelude::*;
use qudit_hierarchy::arith::{Cyclotomic, CyclotomicField, Qudit, Residue, ScaledMatrix};

fn field() -> Arc<CyclotomicField> {
    CyclotomicField::new(36)
}

fn element() -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((0i64..36, -5i64..6, 1i64..4), 0..5).prop_map(|terms| {
        let f = field();
        terms.into_iter().fold(Cyclotomic::zero(&f), |acc, (e, n, d)| {
            &acc + &Cyclotomic::root(&f, e).scale(&IBig::from(n), &IBig::from(d))
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(&field()), a.clone());
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in element(), b in element()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn nonzero_elements_invert(a in element()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn roots_multiply_by_adding_exponents(e in -100i64..100, f in -100i64..100) {
        let fl = field();
        prop_assert_eq!(&Cyclotomic::root(&fl, e) * &Cyclotomic::root(&fl, f), Cyclotomic::root(&fl, e + f));
        prop_assert_eq!(Cyclotomic::root(&fl, e).root_of_unity_exponent(), Some(e.rem_euclid(36) as u32));
    }

    #[test]
    fn residues_form_a_field(a in 1i64..1000, b in -1000i64..1000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let x = Residue::new(a, p);
        prop_assume!(!x.is_zero());
        prop_assert_eq!((x * x.inverse().unwrap()).value(), 1);
        let y = Residue::new(b, p);
        prop_assert_eq!((x + y).value(), (a + b).rem_euclid(p as i64) as u64);
        prop_assert_eq!(x.pow(p - 1).value(), 1);
    }
}

#[test]
fn scaled_products_fold_pairs_of_half_powers() {
    let q = Qudit::new(5, 1).unwrap();
    let h = qudit_hierarchy::clifford::hadamard(&q);
    let h4 = h.pow(4);
    assert_eq!(h4.half_log_scale(), 0);
    assert!(h4.same_value(&ScaledMatrix::identity(&q, 5)));
}

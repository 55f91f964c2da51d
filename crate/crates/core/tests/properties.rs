use mixed_tate::k0::{lambda_i, schur_op, zeta, LaurentPolynomial};
use mixed_tate::motive::GradedTateObject;
use mixed_tate::partition::{partitions_up_to, sub_partitions, Partition};
use mixed_tate::schur::{alt_power, classify, schur_apply, schur_vanishes, sym_power};
use num_bigint::BigInt;
use proptest::prelude::*;

fn object(max_dim: usize) -> impl Strategy<Value = GradedTateObject> {
    prop::collection::vec((-2i64..=3, -2i64..=2), 0..=max_dim).prop_map(|gens| {
        let mut x = GradedTateObject::zero();
        for (a, w) in gens {
            x.add_generator(a, w, 1);
        }
        x
    })
}

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = partitions_up_to(max_size).into_iter().filter(|l| !l.is_empty()).collect();
    prop::sample::select(all)
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..=4).prop_map(LaurentPolynomial::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn shift_duality(x in object(4), l in partition(5)) {
        let n = l.size() as i64;
        prop_assert_eq!(schur_apply(&l, &x.shift(1)), schur_apply(&l.transpose(), &x).shift(n));
        prop_assert_eq!(schur_apply(&l, &x.shift(-1)), schur_apply(&l.transpose(), &x).shift(-n));
    }

    #[test]
    fn twist_scales_weights(x in object(4), l in partition(5), n in -2i64..=2) {
        let k = l.size() as i64;
        prop_assert_eq!(schur_apply(&l, &x.twist(n)), schur_apply(&l, &x).twist(n * k));
    }

    #[test]
    fn vanishing_is_monotone(x in object(4), l in partition(6)) {
        if schur_vanishes(&l, &x).unwrap() {
            return Ok(());
        }
        // Every shape inside a nonvanishing one is nonvanishing.
        for mu in sub_partitions(&l).into_iter().filter(|m| !m.is_empty()) {
            prop_assert!(!schur_apply(&mu, &x).is_zero(), "{} inside {}", mu, l);
        }
    }

    #[test]
    fn vanishing_on_sums(x in object(3), y in object(3), l in partition(5)) {
        let both = schur_apply(&l, &x.direct_sum(&y)).is_zero();
        if both {
            prop_assert!(schur_apply(&l, &x).is_zero() && schur_apply(&l, &y).is_zero());
        }
        let c = classify(&x.direct_sum(&y));
        prop_assert_eq!(c.d_plus, x.d_plus() + y.d_plus());
        prop_assert_eq!(c.d_minus, x.d_minus() + y.d_minus());
        prop_assert_eq!(both, schur_vanishes(&l, &x.direct_sum(&y)).unwrap());
    }

    #[test]
    fn finiteness_is_closed_under_sums(x in object(3), y in object(3)) {
        let (cx, cy, cs) = (classify(&x), classify(&y), classify(&x.direct_sum(&y)));
        prop_assert_eq!(cs.evenly_finite, cx.evenly_finite && cy.evenly_finite);
        prop_assert_eq!(cs.oddly_finite, cx.oddly_finite && cy.oddly_finite);
        prop_assert_eq!(cs.kimura_dimension, cx.kimura_dimension + cy.kimura_dimension);
    }

    #[test]
    fn alt_and_sym_have_the_right_classes(x in object(4), n in 0usize..=5) {
        let class = x.k0_class();
        prop_assert_eq!(alt_power(&x, n).k0_class(), lambda_i(&class, n));
        prop_assert_eq!(sym_power(&x, n).k0_class(), zeta(&class, 5).coefficient(n));
    }

    #[test]
    fn determinant_matches_tableaux(x in object(4), l in partition(5)) {
        prop_assert_eq!(schur_op(&l, &x.k0_class()), schur_apply(&l, &x).k0_class());
    }

    #[test]
    fn class_is_additive(x in object(4), y in object(4)) {
        prop_assert_eq!(x.direct_sum(&y).k0_class(), &x.k0_class() + &y.k0_class());
    }

    #[test]
    fn augmentation_is_super_dimension(x in object(5)) {
        let expect = BigInt::from(x.d_plus() as i64 - x.d_minus() as i64);
        prop_assert_eq!(x.k0_class().augmentation(), expect);
    }

    #[test]
    fn zeta_is_multiplicative(x in laurent(), y in laurent()) {
        prop_assert_eq!(zeta(&(&x + &y), 10), zeta(&x, 10).mul(&zeta(&y, 10)));
    }
}

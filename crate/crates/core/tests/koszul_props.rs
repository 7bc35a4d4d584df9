use arrtwist_core::algebra::{CyclotomicField, Laurent, Rational, Ring};
use arrtwist_core::koszul::{build_koszul, UnitAssignment};
use arrtwist_core::linalg::Matrix;
use arrtwist_core::subsets::binomial;
use proptest::prelude::*;

type LQ = Laurent<Rational>;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_boundaries_square_to_zero(weights in prop::collection::vec(-4i64..=4, 1..=6)) {
        let n = weights.len();
        let kc = build_koszul(&UnitAssignment::<LQ>::laurent_character((), &weights), n).unwrap();
        let ranks: Vec<usize> = (0..=n).map(|q| binomial(n, q)).collect();
        prop_assert_eq!(kc.complex.ranks(), ranks.as_slice());
        for q in 1..n {
            prop_assert!(kc.complex.boundary(q).unwrap().mul(kc.complex.boundary(q + 1).unwrap()).is_zero());
        }
    }

    #[test]
    fn cyclotomic_boundaries_square_to_zero(powers in prop::collection::vec(0i64..7, 1..=6)) {
        let field = CyclotomicField::new(7);
        let n = powers.len();
        let units = powers.iter().map(|&k| field.root_power(k)).collect();
        let kc = build_koszul(&UnitAssignment::scalars(field.clone(), units).unwrap(), n).unwrap();
        for q in 1..n {
            prop_assert!(kc.complex.boundary(q).unwrap().mul(kc.complex.boundary(q + 1).unwrap()).is_zero());
        }
    }

    #[test]
    fn matrix_units_square_to_zero(n in 1usize..=4, shift in -3i64..=3) {
        let ctx = ();
        let unipotent = |k: i64| Matrix::from_rows(ctx, vec![
            vec![Rational::one(&ctx), Rational::from_i64(&ctx, k)],
            vec![Rational::zero(&ctx), Rational::one(&ctx)],
        ], 2).unwrap();
        let units = (0..n as i64).map(|i| unipotent(i + shift)).collect();
        let kc = build_koszul(&UnitAssignment::matrices(ctx, 2, units).unwrap(), n).unwrap();
        prop_assert_eq!(kc.complex.ranks()[n], 2);
        for q in 1..n {
            prop_assert!(kc.complex.boundary(q).unwrap().mul(kc.complex.boundary(q + 1).unwrap()).is_zero());
        }
    }

    #[test]
    fn equal_units_scale_one_sign_pattern(n in 1usize..=5, a in -3i64..=3, b in -3i64..=3) {
        prop_assume!(a != 0 && b != 0);
        let ta = LQ::t_power(&(), a);
        let tb = LQ::t_power(&(), b);
        let one = LQ::one(&());
        let ka = build_koszul(&UnitAssignment::scalars((), vec![ta.clone(); n]).unwrap(), n).unwrap();
        let kb = build_koszul(&UnitAssignment::scalars((), vec![tb.clone(); n]).unwrap(), n).unwrap();
        let fa = ta.inverse().unwrap().sub(&one);
        let fb = tb.inverse().unwrap().sub(&one);
        for (da, db) in ka.complex.boundaries().iter().zip(kb.complex.boundaries()) {
            prop_assert_eq!(da.scale(&fb), db.scale(&fa));
        }
    }
}

mod common;

use arrtwist_core::automorphism::Substitution;
use arrtwist_core::fox::{fox_derivative, FreeWord, GroupRingElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fundamental_residual(w: &FreeWord, generators: usize) -> GroupRingElement {
    let mut sum = GroupRingElement::zero();
    for i in 0..generators {
        let slot = GroupRingElement::from_word(FreeWord::generator(i)).sub(&GroupRingElement::one());
        sum = sum.add(&fox_derivative(w, i).mul(&slot));
    }
    sum.sub(&GroupRingElement::from_word(w.clone()).sub(&GroupRingElement::one()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fundamental_identity(seed in any::<u64>(), generators in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = common::random_word(&mut rng, generators, 12);
        prop_assert!(fundamental_residual(&w, generators).is_zero());
    }

    #[test]
    fn chain_rule(seed in any::<u64>(), generators in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = common::random_word(&mut rng, generators, 12);
        let beta = Substitution::new((0..generators).map(|_| common::random_word(&mut rng, generators, 4)).collect());
        let image = beta.apply(&w);
        for m in 0..generators {
            let mut expected = GroupRingElement::zero();
            for p in 0..generators {
                let outer = beta.apply_element(&fox_derivative(&w, p));
                expected = expected.add(&outer.mul(&fox_derivative(beta.image(p), m)));
            }
            prop_assert_eq!(fox_derivative(&image, m), expected);
        }
    }
}

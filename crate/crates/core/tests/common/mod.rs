#![allow(dead_code)]

use arrtwist_core::automorphism::Substitution;
use arrtwist_core::fox::{FreeWord, Letter};
use arrtwist_core::tower::{TowerCharacter, TowerSpec};
use rand::Rng;

pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..generators), rng.gen_bool(0.5))))
}

/// An automorphism of `F_d` acting trivially on homology: conjugation by a
/// short word, or conjugation of two generators by their product.
fn random_monodromy(rng: &mut impl Rng, d: usize) -> Substitution {
    if d >= 2 && rng.gen_bool(0.5) {
        let a = rng.gen_range(0..d);
        let b = (a + rng.gen_range(1..d)) % d;
        let by = FreeWord::generator(a).mul(&FreeWord::generator(b));
        Substitution::partial_conjugation(d, &[a, b], &by)
    } else {
        Substitution::conjugation(d, &random_word(rng, d, 2))
    }
}

fn power(s: &Substitution, k: i64) -> Substitution {
    let base = if k < 0 { s.inverse().unwrap() } else { s.clone() };
    (0..k.unsigned_abs()).fold(Substitution::identity(s.rank()), |acc, _| acc.compose(&base))
}

/// A valid tower: on each level `y ↦ φ^{λ(y)}` for one automorphism `φ`
/// and `λ(y) ∈ {-1, 0, 1}`, which is well defined because relators have
/// zero exponent sums.
pub fn random_tower(rng: &mut impl Rng, max_levels: usize, max_rank: usize) -> TowerSpec {
    let levels = rng.gen_range(1..=max_levels);
    let exponents: Vec<usize> = (0..levels).map(|_| rng.gen_range(1..=max_rank)).collect();
    let mut below = 0;
    let mut monodromy = Vec::new();
    for &d in &exponents {
        let phi = random_monodromy(rng, d);
        monodromy.push((0..below).map(|_| power(&phi, rng.gen_range(-1..=1))).collect());
        below += d;
    }
    TowerSpec::new(exponents, monodromy, None).unwrap()
}

pub fn random_character(rng: &mut impl Rng, tw: &TowerSpec) -> TowerCharacter {
    let weights = (0..tw.generator_count()).map(|_| rng.gen_range(-2..=2)).collect();
    TowerCharacter::new(tw, weights).unwrap()
}

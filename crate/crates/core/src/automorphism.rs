//! Endomorphisms of free groups given by generator images, and inversion of
//! automorphisms by Stallings folding.

use crate::fox::{FreeWord, GroupRingElement, Letter};
use crate::{Error, Result};
use std::fmt;

/// `x_i ↦ images[i]` on the free group of rank `images.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Substitution {
    images: Vec<FreeWord>,
}

impl Substitution {
    pub fn new(images: Vec<FreeWord>) -> Self {
        Substitution { images }
    }

    pub fn identity(rank: usize) -> Self {
        Substitution { images: (0..rank).map(FreeWord::generator).collect() }
    }

    /// Conjugation `x ↦ c x c^{-1}` of every generator.
    pub fn conjugation(rank: usize, by: &FreeWord) -> Self {
        Self::partial_conjugation(rank, &(0..rank).collect::<Vec<_>>(), by)
    }

    /// `x_i ↦ c x_i c^{-1}` for `i` in `which`, identity elsewhere.
    pub fn partial_conjugation(rank: usize, which: &[usize], by: &FreeWord) -> Self {
        let images = (0..rank)
            .map(|i| {
                let x = FreeWord::generator(i);
                if which.contains(&i) {
                    x.conjugate_by(by)
                } else {
                    x
                }
            })
            .collect();
        Substitution { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for l in w.letters() {
            let image = &self.images[l.generator];
            out = if l.exponent > 0 { out.mul(image) } else { out.mul(&image.inverse()) };
        }
        out
    }

    pub fn apply_element(&self, e: &GroupRingElement) -> GroupRingElement {
        e.map_words(|w| self.apply(w))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Substitution { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == FreeWord::generator(i))
    }

    /// Whether each `x_i` abelianizes back to `x_i`.
    pub fn trivial_on_homology(&self) -> bool {
        let n = self.rank();
        self.images.iter().enumerate().all(|(i, w)| {
            w.max_generator().is_none_or(|g| g < n)
                && w.abelianization(n).iter().enumerate().all(|(j, &e)| e == i64::from(i == j))
        })
    }

    /// The inverse automorphism; fails when the images are not a basis.
    pub fn inverse(&self) -> Result<Self> {
        Folding::new(self)?.run(self.rank())
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().enumerate().map(|(i, w)| format!("x{} -> {w}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    to: usize,
    letter: usize,
    label: FreeWord,
}

/// A graph whose edges read letters of the target group and carry labels in
/// the source group; reading a closed path at vertex 0 gives the image of its
/// label.
struct Folding {
    edges: Vec<Edge>,
}

fn not_basis(reason: &str) -> Error {
    Error::NotInvertible(format!("images do not form a free basis ({reason})"))
}

impl Folding {
    fn new(s: &Substitution) -> Result<Self> {
        let mut edges = Vec::new();
        let mut vertices = 1;
        for (i, w) in s.images().iter().enumerate() {
            if w.is_empty() {
                return Err(not_basis(&format!("x{} maps to 1", i + 1)));
            }
            let mut current = 0;
            for (pos, &Letter { generator, exponent }) in w.letters().iter().enumerate() {
                let next = if pos + 1 == w.len() {
                    0
                } else {
                    vertices += 1;
                    vertices - 1
                };
                let label = if pos == 0 { FreeWord::generator(i) } else { FreeWord::identity() };
                let edge = if exponent > 0 {
                    Edge { from: current, to: next, letter: generator, label }
                } else {
                    Edge { from: next, to: current, letter: generator, label: label.inverse() }
                };
                edges.push(edge);
                current = next;
            }
        }
        Ok(Folding { edges })
    }

    fn find_fold(&self) -> Option<(usize, usize, bool)> {
        for a in 0..self.edges.len() {
            for b in a + 1..self.edges.len() {
                let (ea, eb) = (&self.edges[a], &self.edges[b]);
                if ea.letter != eb.letter {
                    continue;
                }
                if ea.from == eb.from {
                    return Some((a, b, true));
                }
                if ea.to == eb.to {
                    return Some((a, b, false));
                }
            }
        }
        None
    }

    fn run(mut self, rank: usize) -> Result<Substitution> {
        while let Some((a, b, forward)) = self.find_fold() {
            let (va, vb) =
                if forward { (self.edges[a].to, self.edges[b].to) } else { (self.edges[a].from, self.edges[b].from) };
            if va == vb {
                if self.edges[a].label != self.edges[b].label {
                    return Err(not_basis("not injective"));
                }
                self.edges.remove(b);
                continue;
            }
            let (keep, drop, keep_vertex, drop_vertex) = if vb == 0 { (b, a, vb, va) } else { (a, b, va, vb) };
            let (keep_label, drop_label) = (&self.edges[keep].label, &self.edges[drop].label);
            let shift =
                if forward { drop_label.inverse().mul(keep_label) } else { drop_label.mul(&keep_label.inverse()) };
            let shift_inverse = shift.inverse();
            for e in &mut self.edges {
                if e.to == drop_vertex {
                    e.label = e.label.mul(&shift);
                    e.to = keep_vertex;
                }
                if e.from == drop_vertex {
                    e.label = shift_inverse.mul(&e.label);
                    e.from = keep_vertex;
                }
            }
            debug_assert_eq!(self.edges[keep].label, self.edges[drop].label);
            self.edges.remove(drop);
        }
        if self.edges.len() != rank || self.edges.iter().any(|e| e.from != 0 || e.to != 0) {
            return Err(not_basis("not surjective"));
        }
        let mut images = vec![FreeWord::identity(); rank];
        for e in self.edges {
            images[e.letter] = e.label;
        }
        Ok(Substitution { images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> FreeWord {
        FreeWord::parse_letters(text).unwrap()
    }

    fn sub(images: &[&str]) -> Substitution {
        Substitution::new(images.iter().map(|s| w(s)).collect())
    }

    fn check_inverse(s: &Substitution) {
        let inv = s.inverse().unwrap();
        assert!(s.compose(&inv).is_identity(), "{s} * {inv}");
        assert!(inv.compose(s).is_identity(), "{inv} * {s}");
    }

    #[test]
    fn inverts_standard_automorphisms() {
        check_inverse(&Substitution::identity(3));
        check_inverse(&sub(&["ab", "b"]));
        check_inverse(&sub(&["b", "a"]));
        check_inverse(&sub(&["a-1", "b"]));
        check_inverse(&Substitution::conjugation(3, &w("abc-1")));
        check_inverse(&Substitution::partial_conjugation(3, &[0, 1], &w("ab")));
        check_inverse(&sub(&["a", "aba-1"]));
        assert_eq!(sub(&["ab", "b"]).inverse().unwrap(), sub(&["ab-1", "b"]));
    }

    #[test]
    fn rejects_non_automorphisms() {
        assert!(sub(&["ab", "ab"]).inverse().is_err());
        assert!(sub(&["a", "bb"]).inverse().is_err());
        assert!(sub(&["aa"]).inverse().is_err());
        assert!(sub(&["a", ""]).inverse().is_err());
        assert!(sub(&["a", "a"]).inverse().is_err());
    }

    #[test]
    fn homology_action() {
        assert!(sub(&["a", "aba-1"]).trivial_on_homology());
        assert!(!sub(&["b", "a"]).trivial_on_homology());
        assert!(!sub(&["aa", "b"]).trivial_on_homology());
    }

    fn elementary(rank: usize, kind: u8, i: usize, j: usize) -> Substitution {
        let mut images: Vec<FreeWord> = (0..rank).map(FreeWord::generator).collect();
        let (i, j) = (i % rank, j % rank);
        match kind % 4 {
            0 if i != j => images[i] = images[i].mul(&FreeWord::generator(j)),
            1 if i != j => images[i] = FreeWord::generator(j).inverse().mul(&images[i]),
            2 => images[i] = images[i].inverse(),
            _ => images.swap(i, j),
        }
        Substitution::new(images)
    }

    proptest! {
        #[test]
        fn products_of_nielsen_moves_invert(
            rank in 1usize..4,
            moves in proptest::collection::vec((0u8..4, 0usize..4, 0usize..4), 0..8),
        ) {
            let s = moves
                .iter()
                .fold(Substitution::identity(rank), |acc, &(k, i, j)| acc.compose(&elementary(rank, k, i, j)));
            let inv = s.inverse().unwrap();
            prop_assert!(s.compose(&inv).is_identity());
            prop_assert!(inv.compose(&s).is_identity());
        }
    }
}

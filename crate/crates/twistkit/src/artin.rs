//! The braid group acting on a free group: the exact equality oracle.
//!
//! A braid word on `n` strands acts on the free group `F_n = <x1 ... xn>` by
//!
//! ```text
//! s_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   x_j fixed otherwise
//! ```
//!
//! and this action is faithful, so two braid words are equal exactly when
//! they induce the same automorphism. Words compose right-to-left: in a
//! product the rightmost letter acts first.
//!
//! Image words can grow during long compositions; every application reduces
//! immediately, and a configurable total-length budget turns runaway growth
//! into a clean error instead of memory exhaustion.

use std::fmt;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::word::{GenWord, Letter};

/// Default ceiling on the summed image lengths during evaluation.
pub const DEFAULT_IMAGE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error(
        "image length budget exceeded while applying letter {letter} of {total}: \
         {len} letters > budget {budget}"
    )]
    BudgetExceeded {
        letter: usize,
        total: usize,
        len: usize,
        budget: usize,
    },
}

/// An automorphism of a free group of rank `n`, given by the images of the
/// basis letters as reduced words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAuto {
    rank: usize,
    images: Vec<GenWord>,
}

impl FreeAuto {
    pub fn identity(rank: usize) -> Self {
        FreeAuto {
            rank,
            images: (1..=rank as u32).map(GenWord::generator).collect(),
        }
    }

    /// The automorphism induced by the braid generator `s_i^sign` on `F_n`.
    pub fn braid_generator(rank: usize, i: u32, sign: i32) -> Result<Self, ArtinError> {
        if i == 0 || i as usize >= rank {
            return Err(ArtinError::IndexOutOfRange {
                index: i,
                max: rank.saturating_sub(1) as u32,
            });
        }
        let mut auto = FreeAuto::identity(rank);
        let xi = GenWord::generator(i);
        let xi1 = GenWord::generator(i + 1);
        if sign >= 0 {
            auto.images[(i - 1) as usize] = xi.multiply(&xi1).multiply(&xi.invert());
            auto.images[i as usize] = xi;
        } else {
            auto.images[(i - 1) as usize] = xi1.clone();
            auto.images[i as usize] = xi1.invert().multiply(&xi).multiply(&xi1);
        }
        Ok(auto)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of the basis letter `x_i` (1-based).
    pub fn image(&self, i: u32) -> &GenWord {
        &self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> &[GenWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w == &GenWord::generator(i as u32 + 1))
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(GenWord::len).sum()
    }

    /// Applies the automorphism to a word: substitutes each basis letter by
    /// its image and reduces.
    pub fn apply(&self, w: &GenWord) -> GenWord {
        let mut out = GenWord::identity();
        for l in w.letters() {
            let img = self.image(l.index());
            out = if l.sign() > 0 {
                out.multiply(img)
            } else {
                out.multiply(&img.invert())
            };
        }
        out
    }

    /// `self ∘ inner`: `inner` acts first.
    pub fn compose(&self, inner: &Self) -> Self {
        FreeAuto {
            rank: self.rank,
            images: inner.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Right-multiplies by a generator automorphism in place. Only the images
    /// of `x_i` and `x_{i+1}` change:
    ///
    /// ```text
    /// s_i:    (A_i, A_{i+1}) <- (A_i A_{i+1} A_i^-1, A_i)
    /// s_i^-1: (A_i, A_{i+1}) <- (A_{i+1}, A_{i+1}^-1 A_i A_{i+1})
    /// ```
    fn right_mul_generator(&mut self, l: Letter) {
        let i = (l.index() - 1) as usize;
        let a = &self.images[i];
        let b = &self.images[i + 1];
        if l.sign() > 0 {
            let new_a = a.multiply(b).multiply(&a.invert());
            self.images[i + 1] = self.images[i].clone();
            self.images[i] = new_a;
        } else {
            let new_b = b.invert().multiply(a).multiply(b);
            self.images[i] = self.images[i + 1].clone();
            self.images[i + 1] = new_b;
        }
    }
}

impl fmt::Display for FreeAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rank as u32 {
            if i > 1 {
                f.write_str("\n")?;
            }
            let img = self.image(i);
            if img.is_identity() {
                write!(f, "x{i} -> 1")?;
            } else {
                // Images are words over the free basis; print x-tokens.
                let rendered = img
                    .letters()
                    .iter()
                    .map(|l| {
                        if l.sign() > 0 {
                            format!("x{}", l.index())
                        } else {
                            format!("x{}^-1", l.index())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                write!(f, "x{i} -> {rendered}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAuto(rank={}, {})", self.rank, self)
    }
}

/// Evaluates a braid word to its free-group automorphism with the default
/// image budget.
pub fn evaluate(w: &BraidWord) -> Result<FreeAuto, ArtinError> {
    evaluate_with_budget(w, DEFAULT_IMAGE_BUDGET)
}

/// Evaluates with an explicit image-length budget.
pub fn evaluate_with_budget(w: &BraidWord, budget: usize) -> Result<FreeAuto, ArtinError> {
    let letters = w.word().letters();
    let mut acc = FreeAuto::identity(w.strands());
    for (pos, &l) in letters.iter().enumerate() {
        acc.right_mul_generator(l);
        let len = acc.total_len();
        if len > budget {
            return Err(ArtinError::BudgetExceeded {
                letter: pos + 1,
                total: letters.len(),
                len,
                budget,
            });
        }
    }
    Ok(acc)
}

/// Exact equality in the braid group, decided through the free-group action.
/// Compares the images of all basis letters; a non-identity automorphism can
/// fix many of them.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, ArtinError> {
    if u.strands() != v.strands() {
        return Err(ArtinError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(evaluate(u)? == evaluate(v)?)
}

/// Like [`braid_equal`] but returns the first distinguishing basis letter and
/// the two image words on inequality.
pub fn braid_equal_witness(
    u: &BraidWord,
    v: &BraidWord,
) -> Result<Option<(u32, GenWord, GenWord)>, ArtinError> {
    if u.strands() != v.strands() {
        return Err(ArtinError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let fu = evaluate(u)?;
    let fv = evaluate(v)?;
    for i in 1..=u.strands() as u32 {
        if fu.image(i) != fv.image(i) {
            return Ok(Some((i, fu.image(i).clone(), fv.image(i).clone())));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid;
    use crate::braid::to_permutation;

    fn bw(n: usize, s: &str) -> BraidWord {
        BraidWord::new(n, s.parse().unwrap()).unwrap()
    }

    #[test]
    fn generator_images() {
        let f = FreeAuto::braid_generator(2, 1, 1).unwrap();
        assert_eq!(f.image(1), &"s1 s2 s1^-1".parse().unwrap());
        assert_eq!(f.image(2), &"s1".parse().unwrap());

        let inv = FreeAuto::braid_generator(2, 1, -1).unwrap();
        assert_eq!(inv.image(1), &"s2".parse().unwrap());
        assert_eq!(inv.image(2), &"s2^-1 s1 s2".parse().unwrap());

        // Both compositions of a generator with its inverse are the identity,
        // which certifies the inverse images above.
        assert!(f.compose(&inv).is_identity());
        assert!(inv.compose(&f).is_identity());

        let g = FreeAuto::braid_generator(3, 2, 1).unwrap();
        assert_eq!(g.image(1), &"s1".parse().unwrap());
    }

    #[test]
    fn generator_index_range() {
        assert!(FreeAuto::braid_generator(3, 0, 1).is_err());
        assert!(FreeAuto::braid_generator(3, 3, 1).is_err());
        assert!(FreeAuto::braid_generator(3, 2, 1).is_ok());
    }

    #[test]
    fn evaluate_identity_and_cancellation() {
        assert!(evaluate(&BraidWord::identity(4)).unwrap().is_identity());
        assert!(evaluate(&bw(2, "s1 s1^-1")).unwrap().is_identity());
    }

    #[test]
    fn evaluate_matches_generator_composition() {
        // Incremental evaluation agrees with composing generator maps.
        let w = bw(4, "s1 s3^-1 s2 s1");
        let mut by_compose = FreeAuto::identity(4);
        for l in w.word().letters() {
            by_compose = by_compose.compose(&FreeAuto::braid_generator(4, l.index(), l.sign())
                .unwrap());
        }
        // compose(acc, gen) applies gen first, so fold left-to-right gives
        // rightmost-first semantics for the whole word read left to right.
        // Rebuild in the homomorphism order to compare:
        let mut h = FreeAuto::identity(4);
        for l in w.word().letters() {
            let gen = FreeAuto::braid_generator(4, l.index(), l.sign()).unwrap();
            h = h.compose(&gen);
        }
        assert_eq!(evaluate(&w).unwrap(), h);
        assert_eq!(evaluate(&w).unwrap(), by_compose);
    }

    #[test]
    fn braid_relation_instance() {
        let u = bw(3, "s1 s2 s1");
        let v = bw(3, "s2 s1 s2");
        assert_eq!(evaluate(&u).unwrap(), evaluate(&v).unwrap());
        assert!(braid_equal(&u, &v).unwrap());
    }

    #[test]
    fn far_commutation_and_inequality() {
        assert!(braid_equal(&bw(4, "s1 s3"), &bw(4, "s3 s1")).unwrap());
        assert!(!braid_equal(&bw(3, "s1"), &bw(3, "s2")).unwrap());
        assert!(braid_equal(&bw(3, "s1"), &bw(4, "s1")).is_err());
    }

    #[test]
    fn braid_relations_hold_at_every_rank() {
        for n in 2..=8usize {
            for i in 1..n as u32 - 1 {
                let u = BraidWord::generator(n, i)
                    .unwrap()
                    .multiply(&BraidWord::generator(n, i + 1).unwrap())
                    .unwrap()
                    .multiply(&BraidWord::generator(n, i).unwrap())
                    .unwrap();
                let v = BraidWord::generator(n, i + 1)
                    .unwrap()
                    .multiply(&BraidWord::generator(n, i).unwrap())
                    .unwrap()
                    .multiply(&BraidWord::generator(n, i + 1).unwrap())
                    .unwrap();
                assert!(braid_equal(&u, &v).unwrap(), "n={n} i={i}");
            }
            for i in 1..n as u32 {
                for j in i + 2..n as u32 {
                    let u = BraidWord::generator(n, i)
                        .unwrap()
                        .multiply(&BraidWord::generator(n, j).unwrap())
                        .unwrap();
                    let v = BraidWord::generator(n, j)
                        .unwrap()
                        .multiply(&BraidWord::generator(n, i).unwrap())
                        .unwrap();
                    assert!(braid_equal(&u, &v).unwrap(), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn equality_implies_equal_permutations() {
        let (lhs, rhs) = braid::theorem3_sides(2).unwrap();
        assert!(braid_equal(&lhs, &rhs).unwrap());
        assert_eq!(to_permutation(&lhs), to_permutation(&rhs));
    }

    #[test]
    fn oracle_equality_implies_permutation_equality() {
        for case in braid::lemma_cases(braid::LemmaId::L3, 3) {
            assert!(braid_equal(&case.lhs, &case.rhs).unwrap());
            assert_eq!(to_permutation(&case.lhs), to_permutation(&case.rhs));
        }
    }

    #[test]
    fn full_twist_is_central() {
        for g in 0..=4u32 {
            let delta = braid::half_twist(g).unwrap();
            let full = delta.power(2);
            for i in 1..=(2 * g + 1) {
                let s = BraidWord::generator(braid::strand_count(g), i).unwrap();
                let a = full.multiply(&s).unwrap();
                let b = s.multiply(&full).unwrap();
                assert!(braid_equal(&a, &b).unwrap(), "g={g} i={i}");
            }
        }
    }

    #[test]
    fn budget_aborts_cleanly() {
        let w = braid::half_twist(3).unwrap();
        match evaluate_with_budget(&w, 10) {
            Err(ArtinError::BudgetExceeded { budget: 10, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn witness_reports_distinguishing_letter() {
        let got = braid_equal_witness(&bw(3, "s1"), &bw(3, "s2")).unwrap();
        let (i, _, _) = got.expect("words differ");
        assert_eq!(i, 1);
        assert!(braid_equal_witness(&bw(3, "s1 s2"), &bw(3, "s1 s2"))
            .unwrap()
            .is_none());
    }
}

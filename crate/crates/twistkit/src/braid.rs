//! Braid words on a fixed strand count and the named words of the twist
//! relation family.
//!
//! Throughout, `g` is the genus and the ambient group is the braid group on
//! `2g + 2` strands with generators `s1 ... s{2g+1}`. The named words:
//!
//! * `delta(g, k)`      = s1 s2 ... sk                     (`Δ_k`, `Δ_0 = 1`)
//! * `bar_delta(g, k)`  = sk ... s2 s1                     (`Δ̄_k`; the overline
//!   is spelled `bar_` in identifiers)
//! * `beta_sub(g, k)`   = Δ̄_k Δ_{2g+1-k} Δ_{2g-k}^-1 Δ̄_k^-1
//! * `beta(g)`          = Δ̄_g^{g+1}
//! * `gamma_sub(g, k)`  = Δ̄_k Δ_{2g-1-k} Δ_{2g-2-k}^-1 Δ̄_k^-1, with
//!   `gamma_sub(g, g) = 1` by convention
//! * `gamma(g)`         = Δ̄_{g-1}^g
//!
//! Words in a subgroup generated by an initial segment of the generators
//! embed into a larger braid group by widening the strand count, never by
//! guessing the ambient group.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::word::{GenWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: u32, strands: usize },
    #[error("parameter {name}={value} outside valid range {range} (genus {genus})")]
    ParamOutOfRange {
        name: &'static str,
        value: i64,
        range: String,
        genus: u32,
    },
}

/// A word in the braid group on `strands` strands; every letter index is in
/// `1..=strands-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: GenWord,
}

impl BraidWord {
    pub fn new(strands: usize, word: GenWord) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(max) = word.max_index() {
            if max as usize > strands - 1 {
                return Err(BraidError::IndexOutOfRange {
                    index: max,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            word: GenWord::identity(),
        }
    }

    pub fn generator(strands: usize, index: u32) -> Result<Self, BraidError> {
        Self::new(strands, GenWord::generator(index))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &GenWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Reinterprets the word in a braid group on more strands; this is the
    /// subgroup inclusion generated by the initial generators.
    pub fn widen(&self, strands: usize) -> Result<Self, BraidError> {
        if strands < self.strands {
            return Err(BraidError::TooFewStrands(strands));
        }
        Ok(BraidWord {
            strands,
            word: self.word.clone(),
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::IndexOutOfRange {
                index: other.word.max_index().unwrap_or(0),
                strands: self.strands,
            });
        }
        Ok(BraidWord {
            strands: self.strands,
            word: self.word.multiply(&other.word),
        })
    }

    pub fn invert(&self) -> Self {
        BraidWord {
            strands: self.strands,
            word: self.word.invert(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        BraidWord {
            strands: self.strands,
            word: self.word.power(k),
        }
    }

    pub fn conjugate(&self, by: &Self) -> Result<Self, BraidError> {
        Ok(BraidWord {
            strands: self.strands,
            word: self.word.conjugate(&by.word),
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{:?}]", self.strands, self.word)
    }
}

/// A permutation of `{1..n}`, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images; must be a bijection on `{1..n}`.
    pub fn from_images(images_1based: &[usize]) -> Option<Self> {
        let n = images_1based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in images_1based {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Some(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based application.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            wrote = true;
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            loop {
                seen[p] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            f.write_str(")")?;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Projection to the symmetric group, `s_i -> (i, i+1)`, rightmost letter
/// applied first.
pub fn to_permutation(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands());
    // Right-to-left application: fold letters from the right.
    for l in w.word().letters().iter().rev() {
        // Transpositions are involutions, so the sign is irrelevant here.
        p = Permutation::transposition(w.strands(), l.index() as usize).compose(&p);
    }
    p
}

pub fn strand_count(g: u32) -> usize {
    2 * g as usize + 2
}

fn check_range(
    name: &'static str,
    value: i64,
    lo: i64,
    hi: i64,
    genus: u32,
) -> Result<(), BraidError> {
    if value < lo || value > hi {
        return Err(BraidError::ParamOutOfRange {
            name,
            value,
            range: format!("{lo}..={hi}"),
            genus,
        });
    }
    Ok(())
}

/// `Δ_k = s1 s2 ... sk` on `2g+2` strands; `Δ_0` is the identity.
pub fn delta(g: u32, k: u32) -> Result<BraidWord, BraidError> {
    check_range("k", k as i64, 0, (2 * g + 1) as i64, g)?;
    let word = GenWord::reduce((1..=k).map(Letter::positive));
    BraidWord::new(strand_count(g), word)
}

/// `Δ̄_k = sk ... s2 s1` on `2g+2` strands.
pub fn bar_delta(g: u32, k: u32) -> Result<BraidWord, BraidError> {
    check_range("k", k as i64, 0, (2 * g + 1) as i64, g)?;
    let word = GenWord::reduce((1..=k).rev().map(Letter::positive));
    BraidWord::new(strand_count(g), word)
}

/// `β_k = Δ̄_k Δ_{2g+1-k} Δ_{2g-k}^-1 Δ̄_k^-1` for `0 <= k <= g`.
pub fn beta_sub(g: u32, k: u32) -> Result<BraidWord, BraidError> {
    check_range("k", k as i64, 0, g as i64, g)?;
    let bd = bar_delta(g, k)?;
    let lhs = bd
        .multiply(&delta(g, 2 * g + 1 - k)?)?
        .multiply(&delta(g, 2 * g - k)?.invert())?
        .multiply(&bd.invert())?;
    Ok(lhs)
}

/// `β = Δ̄_g^{g+1}`.
pub fn beta(g: u32) -> Result<BraidWord, BraidError> {
    Ok(bar_delta(g, g)?.power((g + 1) as i64))
}

/// `γ_k = Δ̄_k Δ_{2g-1-k} Δ_{2g-2-k}^-1 Δ̄_k^-1` for `0 <= k <= g-1`, and
/// `γ_g = 1` by convention.
pub fn gamma_sub(g: u32, k: u32) -> Result<BraidWord, BraidError> {
    check_range("k", k as i64, 0, g as i64, g)?;
    if k == g {
        return Ok(BraidWord::identity(strand_count(g)));
    }
    let bd = bar_delta(g, k)?;
    bd.multiply(&delta(g, 2 * g - 1 - k)?)?
        .multiply(&delta(g, 2 * g - 2 - k)?.invert())?
        .multiply(&bd.invert())
}

/// `γ = Δ̄_{g-1}^g` for `g >= 1`.
pub fn gamma(g: u32) -> Result<BraidWord, BraidError> {
    check_range("g", g as i64, 1, i64::MAX, g)?;
    Ok(bar_delta(g, g - 1)?.power(g as i64))
}

/// Both sides of the product identity
/// `β_0 β_1 ... β_g β^2 = Δ_{2g+1} Δ_{2g} ... Δ_2 Δ_1`.
pub fn theorem3_sides(g: u32) -> Result<(BraidWord, BraidWord), BraidError> {
    let mut lhs = BraidWord::identity(strand_count(g));
    for k in 0..=g {
        lhs = lhs.multiply(&beta_sub(g, k)?)?;
    }
    lhs = lhs.multiply(&beta(g)?.power(2))?;

    let mut rhs = BraidWord::identity(strand_count(g));
    for k in (1..=2 * g + 1).rev() {
        rhs = rhs.multiply(&delta(g, k)?)?;
    }
    Ok((lhs, rhs))
}

/// `Δ = Δ_{2g+1} Δ_{2g} ... Δ_1`, the positive half twist.
pub fn half_twist(g: u32) -> Result<BraidWord, BraidError> {
    Ok(theorem3_sides(g)?.1)
}

/// Identifiers for the verified word identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    L1a,
    L1b,
    L1c,
    L1d,
    L2a,
    L2b,
    L3,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::L1a,
        LemmaId::L1b,
        LemmaId::L1c,
        LemmaId::L1d,
        LemmaId::L2a,
        LemmaId::L2b,
        LemmaId::L3,
    ];
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LemmaId::L1a => "L1a",
            LemmaId::L1b => "L1b",
            LemmaId::L1c => "L1c",
            LemmaId::L1d => "L1d",
            LemmaId::L2a => "L2a",
            LemmaId::L2b => "L2b",
            LemmaId::L3 => "L3",
        };
        f.write_str(s)
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L1a" => Ok(LemmaId::L1a),
            "L1b" => Ok(LemmaId::L1b),
            "L1c" => Ok(LemmaId::L1c),
            "L1d" => Ok(LemmaId::L1d),
            "L2a" => Ok(LemmaId::L2a),
            "L2b" => Ok(LemmaId::L2b),
            "L3" => Ok(LemmaId::L3),
            other => Err(format!("unknown lemma identifier {other:?}")),
        }
    }
}

/// Which of the two length-`m` products an identity instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaKind {
    Delta,
    BarDelta,
}

/// `s_k^sign Δ_m = Δ_m s_{k-1}^sign` for `1 < k <= m`.
pub fn lemma1a_sides(
    g: u32,
    k: u32,
    m: u32,
    sign: i32,
) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("m", m as i64, 1, (2 * g + 1) as i64, g)?;
    check_range("k", k as i64, 2, m as i64, g)?;
    let n = strand_count(g);
    let d = delta(g, m)?;
    let sk = BraidWord::new(n, GenWord::reduce([Letter::new(k, sign)]))?;
    let sk1 = BraidWord::new(n, GenWord::reduce([Letter::new(k - 1, sign)]))?;
    Ok((sk.multiply(&d)?, d.multiply(&sk1)?))
}

/// `s_k^sign Δ̄_m = Δ̄_m s_{k+1}^sign` for `1 <= k < m`.
pub fn lemma1b_sides(
    g: u32,
    k: u32,
    m: u32,
    sign: i32,
) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("m", m as i64, 1, (2 * g + 1) as i64, g)?;
    check_range("k", k as i64, 1, m as i64 - 1, g)?;
    let n = strand_count(g);
    let d = bar_delta(g, m)?;
    let sk = BraidWord::new(n, GenWord::reduce([Letter::new(k, sign)]))?;
    let sk1 = BraidWord::new(n, GenWord::reduce([Letter::new(k + 1, sign)]))?;
    Ok((sk.multiply(&d)?, d.multiply(&sk1)?))
}

/// `s_k Δ_m = Δ_m s_k` and `s_k Δ̄_m = Δ̄_m s_k` for `k > m+1`.
pub fn lemma1c_sides(
    g: u32,
    k: u32,
    m: u32,
    kind: DeltaKind,
) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("m", m as i64, 0, (2 * g + 1) as i64, g)?;
    check_range("k", k as i64, m as i64 + 2, (2 * g + 1) as i64, g)?;
    let d = match kind {
        DeltaKind::Delta => delta(g, m)?,
        DeltaKind::BarDelta => bar_delta(g, m)?,
    };
    let sk = BraidWord::generator(strand_count(g), k)?;
    Ok((sk.multiply(&d)?, d.multiply(&sk)?))
}

/// `Δ_g^k = Δ_{g-1} Δ_g^{k-1} s_{g-k+1}` and
/// `Δ̄_g^k = s_{g-k+1} Δ̄_g^{k-1} Δ̄_{g-1}` for `1 <= k <= g`.
pub fn lemma1d_sides(
    g: u32,
    k: u32,
    kind: DeltaKind,
) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("k", k as i64, 1, g as i64, g)?;
    let s = BraidWord::generator(strand_count(g), g - k + 1)?;
    match kind {
        DeltaKind::Delta => {
            let lhs = delta(g, g)?.power(k as i64);
            let rhs = delta(g, g - 1)?
                .multiply(&delta(g, g)?.power(k as i64 - 1))?
                .multiply(&s)?;
            Ok((lhs, rhs))
        }
        DeltaKind::BarDelta => {
            let lhs = bar_delta(g, g)?.power(k as i64);
            let rhs = s
                .multiply(&bar_delta(g, g)?.power(k as i64 - 1))?
                .multiply(&bar_delta(g, g - 1)?)?;
            Ok((lhs, rhs))
        }
    }
}

/// `β = Δ̄_g Δ_g Δ̄_{g-1}^g` for `g >= 1`.
pub fn lemma2a_sides(g: u32) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("g", g as i64, 1, i64::MAX, g)?;
    let rhs = bar_delta(g, g)?
        .multiply(&delta(g, g)?)?
        .multiply(&bar_delta(g, g - 1)?.power(g as i64))?;
    Ok((beta(g)?, rhs))
}

/// `(Δ̄_g Δ_g) s_k = s_k (Δ̄_g Δ_g)` for `1 <= k < g`: the element
/// `Δ̄_g Δ_g` centralizes the subgroup generated by `s1 ... s_{g-1}`.
pub fn lemma2b_sides(g: u32, k: u32) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("k", k as i64, 1, g as i64 - 1, g)?;
    let z = bar_delta(g, g)?.multiply(&delta(g, g)?)?;
    let sk = BraidWord::generator(strand_count(g), k)?;
    Ok((z.multiply(&sk)?, sk.multiply(&z)?))
}

/// `Δ_{2g-k}^-1 Δ̄_k^-1 Δ̄_{k+1} Δ_{2g-k} Δ̄_{k+1} Δ_{2g-k-1}
///  = Δ̄_k Δ_{2g-k} γ_k` for `0 <= k <= g-1`.
pub fn lemma3_sides(g: u32, k: u32) -> Result<(BraidWord, BraidWord), BraidError> {
    check_range("k", k as i64, 0, g as i64 - 1, g)?;
    let lhs = delta(g, 2 * g - k)?
        .invert()
        .multiply(&bar_delta(g, k)?.invert())?
        .multiply(&bar_delta(g, k + 1)?)?
        .multiply(&delta(g, 2 * g - k)?)?
        .multiply(&bar_delta(g, k + 1)?)?
        .multiply(&delta(g, 2 * g - k - 1)?)?;
    let rhs = bar_delta(g, k)?
        .multiply(&delta(g, 2 * g - k)?)?
        .multiply(&gamma_sub(g, k)?)?;
    Ok((lhs, rhs))
}

/// One fully instantiated identity: both sides plus a human-readable label
/// for the parameter choice.
#[derive(Clone)]
pub struct LemmaCase {
    pub id: LemmaId,
    pub genus: u32,
    pub label: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

/// Every valid parameter choice of an identity at a given genus. Ranges are
/// tiny at desk scale, so the enumeration is exhaustive rather than sampled;
/// an empty list means the identity is vacuous at this genus.
pub fn lemma_cases(id: LemmaId, g: u32) -> Vec<LemmaCase> {
    let mut cases = Vec::new();
    let mut push = |label: String, sides: (BraidWord, BraidWord)| {
        cases.push(LemmaCase {
            id,
            genus: g,
            label,
            lhs: sides.0,
            rhs: sides.1,
        });
    };
    match id {
        LemmaId::L1a => {
            for m in 1..=2 * g + 1 {
                for k in 2..=m {
                    for sign in [1, -1] {
                        push(
                            format!("k={k} m={m} sign={sign:+}"),
                            lemma1a_sides(g, k, m, sign).unwrap(),
                        );
                    }
                }
            }
        }
        LemmaId::L1b => {
            for m in 1..=2 * g + 1 {
                for k in 1..m {
                    for sign in [1, -1] {
                        push(
                            format!("k={k} m={m} sign={sign:+}"),
                            lemma1b_sides(g, k, m, sign).unwrap(),
                        );
                    }
                }
            }
        }
        LemmaId::L1c => {
            for m in 0..=2 * g + 1 {
                for k in m + 2..=2 * g + 1 {
                    for kind in [DeltaKind::Delta, DeltaKind::BarDelta] {
                        push(
                            format!("k={k} m={m} {kind:?}"),
                            lemma1c_sides(g, k, m, kind).unwrap(),
                        );
                    }
                }
            }
        }
        LemmaId::L1d => {
            for k in 1..=g {
                for kind in [DeltaKind::Delta, DeltaKind::BarDelta] {
                    push(format!("k={k} {kind:?}"), lemma1d_sides(g, k, kind).unwrap());
                }
            }
        }
        LemmaId::L2a => {
            if g >= 1 {
                push(String::new(), lemma2a_sides(g).unwrap());
            }
        }
        LemmaId::L2b => {
            for k in 1..g {
                push(format!("k={k}"), lemma2b_sides(g, k).unwrap());
            }
        }
        LemmaId::L3 => {
            for k in 0..g {
                push(format!("k={k}"), lemma3_sides(g, k).unwrap());
            }
        }
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gw(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    #[test]
    fn delta_words() {
        assert!(delta(1, 0).unwrap().is_empty());
        assert_eq!(delta(1, 3).unwrap().word(), &gw("s1 s2 s3"));
        assert_eq!(delta(2, 1).unwrap().word(), &gw("s1"));
        assert_eq!(delta(2, 1).unwrap().strands(), 6);
        assert!(delta(1, 4).is_err());
    }

    #[test]
    fn bar_delta_words() {
        assert_eq!(bar_delta(1, 3).unwrap().word(), &gw("s3 s2 s1"));
        assert!(bar_delta(2, 0).unwrap().is_empty());
        assert_eq!(bar_delta(2, 2).unwrap().word(), &gw("s2 s1"));
    }

    #[test]
    fn beta_zero_is_delta_quotient() {
        // beta_0 = Delta_{2g+1} Delta_{2g}^-1 as reduced words
        for g in 0..4 {
            let b0 = beta_sub(g, 0).unwrap();
            let expect = delta(g, 2 * g + 1)
                .unwrap()
                .multiply(&delta(g, 2 * g).unwrap().invert())
                .unwrap();
            assert_eq!(b0, expect);
        }
        assert_eq!(beta_sub(0, 0).unwrap().word(), &GenWord::generator(1));
    }

    #[test]
    fn beta_small_cases() {
        assert!(beta(0).unwrap().is_empty());
        assert_eq!(beta(1).unwrap().word(), &gw("s1 s1"));
    }

    #[test]
    fn beta_sub_is_conjugate_of_generator() {
        // beta_k = (bar_delta_k delta_{2g-k}) s_{2g+1-k} (...)^-1 holds as
        // reduced words, not merely up to the braid relations.
        for g in 0..5 {
            for k in 0..=g {
                let direct = beta_sub(g, k).unwrap();
                let conj_by = bar_delta(g, k)
                    .unwrap()
                    .multiply(&delta(g, 2 * g - k).unwrap())
                    .unwrap();
                let conj = BraidWord::generator(strand_count(g), 2 * g + 1 - k)
                    .unwrap()
                    .conjugate(&conj_by)
                    .unwrap();
                assert_eq!(direct, conj, "g={g} k={k}");
            }
        }
    }

    #[test]
    fn gamma_conventions() {
        for g in 1..5 {
            assert!(gamma_sub(g, g).unwrap().is_empty());
        }
        // g=1, k=0: gamma_0 = Delta_1 = s1
        assert_eq!(gamma_sub(1, 0).unwrap().word(), &gw("s1"));
    }

    #[test]
    fn theorem3_base_case() {
        let (lhs, rhs) = theorem3_sides(0).unwrap();
        assert_eq!(lhs.word(), &gw("s1"));
        assert_eq!(rhs.word(), &gw("s1"));
    }

    #[test]
    fn lemma1d_example() {
        let (lhs, rhs) = lemma1d_sides(3, 1, DeltaKind::BarDelta).unwrap();
        assert_eq!(lhs.word(), &gw("s3 s2 s1"));
        assert_eq!(rhs.word(), &gw("s3 s2 s1"));
    }

    #[test]
    fn lemma1a_example_words() {
        let (lhs, rhs) = lemma1a_sides(2, 2, 3, 1).unwrap();
        assert_eq!(lhs.word(), &gw("s2 s1 s2 s3"));
        assert_eq!(rhs.word(), &gw("s1 s2 s3 s1"));
    }

    #[test]
    fn lemma_param_validation() {
        assert!(lemma1a_sides(2, 1, 3, 1).is_err()); // needs k > 1
        assert!(lemma1a_sides(2, 4, 3, 1).is_err()); // needs k <= m
        assert!(lemma1b_sides(2, 3, 3, 1).is_err()); // needs k < m
        assert!(lemma1c_sides(2, 3, 2, DeltaKind::Delta).is_err()); // needs k > m+1
        assert!(lemma1d_sides(2, 3, DeltaKind::Delta).is_err()); // needs k <= g
        assert!(lemma2b_sides(2, 2).is_err()); // needs k < g
        assert!(lemma3_sides(2, 2).is_err()); // needs k <= g-1
    }

    #[test]
    fn permutation_of_generator() {
        let w = BraidWord::generator(2, 1).unwrap();
        let p = to_permutation(&w);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.to_string(), "(1 2)");
    }

    #[test]
    fn permutation_of_identity() {
        assert!(to_permutation(&BraidWord::identity(5)).is_identity());
    }

    #[test]
    fn permutation_is_right_to_left() {
        // s1 s2 s1 on 3 strands: apply (1 2), then (2 3), then (1 2) -> (1 3)
        let w = BraidWord::new(3, gw("s1 s2 s1")).unwrap();
        assert_eq!(to_permutation(&w).to_string(), "(1 3)");
    }

    #[test]
    fn half_twist_squares_to_identity_permutation() {
        for g in 0..=8 {
            let d = half_twist(g).unwrap();
            let p = to_permutation(&d);
            // The half twist reverses the strands: i -> 2g+3-i.
            for i in 1..=strand_count(g) {
                assert_eq!(p.apply(i), strand_count(g) + 1 - i, "g={g}");
            }
            assert!(p.compose(&p).is_identity(), "g={g}");
        }
    }

    #[test]
    fn theorem3_sides_permutation_equal() {
        for g in 0..=8 {
            let (lhs, rhs) = theorem3_sides(g).unwrap();
            assert_eq!(to_permutation(&lhs), to_permutation(&rhs), "g={g}");
        }
    }

    #[test]
    fn permutation_is_homomorphism() {
        let u = BraidWord::new(4, gw("s1 s2 s3")).unwrap();
        let v = BraidWord::new(4, gw("s3 s1 s2^-1")).unwrap();
        let uv = u.multiply(&v).unwrap();
        assert_eq!(
            to_permutation(&uv),
            to_permutation(&u).compose(&to_permutation(&v))
        );
    }

    #[test]
    fn case_enumeration_counts() {
        // L1a at genus g: pairs 2 <= k <= m <= 2g+1, two signs each.
        let g = 2;
        let expect = (2..=(2 * g + 1)).map(|m| (m - 1) as usize).sum::<usize>() * 2;
        assert_eq!(lemma_cases(LemmaId::L1a, g).len(), expect);
        // Vacuous instantiations are fine.
        assert!(lemma_cases(LemmaId::L2b, 1).is_empty());
        assert!(lemma_cases(LemmaId::L1d, 0).is_empty());
    }

    #[test]
    fn widen_embeds_subgroup() {
        let w = BraidWord::new(4, gw("s1 s3")).unwrap();
        let wide = w.widen(8).unwrap();
        assert_eq!(wide.strands(), 8);
        assert_eq!(wide.word(), w.word());
        assert!(w.widen(2).is_err());
    }
}

//! Freely reduced words over indexed generators with formal inverses.
//!
//! `GenWord` is the shared carrier for braid words over `s1, s2, ...`,
//! free-group elements over `x1, x2, ...`, and relators of finitely
//! presented groups. A word is reduced after every operation, so equality
//! of group elements in a free group is structural equality of words.
//!
//! Text format: whitespace-separated tokens `s<k>` and `s<k>^-1`, with the
//! empty string denoting the identity.

use std::fmt;
use std::num::NonZeroI32;
use std::str::FromStr;

use thiserror::Error;

/// One occurrence of a generator: a 1-based index and a sign.
///
/// Packed as a nonzero `i32` whose sign is the exponent sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(NonZeroI32);

impl Letter {
    /// The generator `s_index`.
    pub fn positive(index: u32) -> Self {
        Self::new(index, 1)
    }

    /// The inverse generator `s_index^-1`.
    pub fn negative(index: u32) -> Self {
        Self::new(index, -1)
    }

    /// Panics if `index` is zero or does not fit in `i32`.
    pub fn new(index: u32, sign: i32) -> Self {
        assert!(index > 0, "generator index must be positive");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let v = i32::try_from(index).expect("generator index overflow") * sign;
        Letter(NonZeroI32::new(v).unwrap())
    }

    pub fn index(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    pub fn sign(self) -> i32 {
        self.0.get().signum()
    }

    pub fn inverse(self) -> Self {
        Letter(NonZeroI32::new(-self.0.get()).unwrap())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign() > 0 {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^-1", self.index())
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GenWord {
    letters: Vec<Letter>,
}

/// Appends a letter, cancelling against the current last letter.
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl GenWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The single-letter word `s_index`.
    pub fn generator(index: u32) -> Self {
        GenWord {
            letters: vec![Letter::positive(index)],
        }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters = Vec::new();
        for l in raw {
            push_reduced(&mut letters, l);
        }
        GenWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word.
    pub fn max_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index()).max()
    }

    /// `self * other`, reduced. When a word denotes a composite map, the
    /// rightmost factor acts first.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        GenWord { letters }
    }

    pub fn invert(&self) -> Self {
        GenWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `by * self * by^-1`.
    pub fn conjugate(&self, by: &Self) -> Self {
        by.multiply(self).multiply(&by.invert())
    }

    /// `self^k`; negative exponents invert first.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = GenWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Total exponent of each generator, indexed by generator number.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0i64; rank];
        for l in &self.letters {
            let i = l.index() as usize;
            if i <= rank {
                sums[i - 1] += i64::from(l.sign());
            }
        }
        sums
    }

    /// Rotations of the word (not reduced further; a reduced word stays
    /// reduced under rotation except possibly at the seam).
    pub(crate) fn rotations(&self) -> impl Iterator<Item = GenWord> + '_ {
        (0..self.letters.len().max(1)).map(move |r| {
            let mut letters = Vec::with_capacity(self.letters.len());
            for i in 0..self.letters.len() {
                push_reduced(&mut letters, self.letters[(i + r) % self.letters.len()]);
            }
            GenWord { letters }
        })
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{:?}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("1")
        } else {
            write!(f, "{}", self)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("malformed token {token:?} at byte {position}: expected `s<k>` or `s<k>^-1`")]
    Malformed { position: usize, token: String },
    #[error("generator index 0 at byte {position}: indices are 1-based")]
    ZeroIndex { position: usize },
}

impl FromStr for GenWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        let mut rest = s;
        let mut offset = 0usize;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed
                .find(char::is_whitespace)
                .unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            let position = offset;

            let malformed = || ParseWordError::Malformed {
                position,
                token: token.to_string(),
            };
            let body = token.strip_prefix('s').ok_or_else(malformed)?;
            let (digits, sign) = match body.strip_suffix("^-1") {
                Some(d) => (d, -1),
                None => (body, 1),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let index: u32 = digits.parse().map_err(|_| malformed())?;
            if index == 0 {
                return Err(ParseWordError::ZeroIndex { position });
            }
            push_reduced(&mut letters, Letter::new(index, sign));

            rest = &trimmed[end..];
            offset += end;
        }
        Ok(GenWord { letters })
    }
}

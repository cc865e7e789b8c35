//! The action of Dehn twist words on the first homology of a closed
//! genus-`g` surface.
//!
//! Homology classes live in `Z^{2g}` in the ordered basis
//! `(a_1, ..., a_g, b_1, ..., b_g)` with the standard symplectic pairing
//! `<a_i, b_i> = +1` and all other basis pairs zero. A right Dehn twist
//! about a curve of class `c` acts by the transvection
//! `x -> x + <x, c> c`, and a twist word evaluates to a product of
//! transvections with the rightmost factor acting first.
//!
//! The named curves:
//!
//! * `a1..ag`, `b1..bg` — the basis curves;
//! * `A1..A{2g+1}` — the twist chain: `[A_1] = a_1`, `[A_{2j}] = b_j`,
//!   `[A_{2j+1}] = a_j - a_{j+1}`, `[A_{2g+1}] = a_g`. (Taking the interior
//!   odd classes as consecutive differences is what makes consecutive chain
//!   classes pair to ±1; see the chain pattern test below.)
//! * `B0..Bg` — images of chain curves under twist-word transport:
//!   `[B_k]` is `[A_{2g+1-k}]` pushed through `Δ̄_k Δ_{2g-k}`,
//!   sign-normalized so the first nonzero coordinate is positive;
//! * `c` — the separating curve of even genus, null-homologous, so its
//!   class is zero;
//! * `bd1`, `bd2` — for odd genus, the two boundary classes of a regular
//!   neighborhood of the chain `A_1 ... A_g`, recovered from the chain
//!   relation by [`chain_boundary_classes`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::braid;
use crate::intmat::IntMatrix;
use crate::word::GenWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("genus must be at least {min}, got {genus}")]
    GenusTooSmall { genus: u32, min: u32 },
    #[error("unknown curve label {0:?}")]
    UnknownLabel(String),
    #[error("label {label} is not defined at genus {genus} ({reason})")]
    LabelParity {
        label: String,
        genus: u32,
        reason: &'static str,
    },
    #[error("curve index {index} out of range for genus {genus}")]
    CurveIndexOutOfRange { index: u32, genus: u32 },
    #[error("boundary-class extraction failed: {0}")]
    Extraction(String),
    #[error("matrix entry overflow (i64) during exact evaluation")]
    Overflow,
}

/// An integer homology class on the genus-`g` surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HClass {
    genus: u32,
    coords: Vec<i64>,
}

impl HClass {
    pub fn zero(genus: u32) -> Self {
        HClass {
            genus,
            coords: vec![0; 2 * genus as usize],
        }
    }

    pub fn new(genus: u32, coords: Vec<i64>) -> Result<Self, HomologyError> {
        if coords.len() != 2 * genus as usize {
            return Err(HomologyError::GenusMismatch(
                genus,
                (coords.len() / 2) as u32,
            ));
        }
        Ok(HClass { genus, coords })
    }

    /// Basis class `a_i`, `1 <= i <= g`.
    pub fn basis_a(genus: u32, i: u32) -> Result<Self, HomologyError> {
        if i == 0 || i > genus {
            return Err(HomologyError::CurveIndexOutOfRange { index: i, genus });
        }
        let mut c = Self::zero(genus);
        c.coords[(i - 1) as usize] = 1;
        Ok(c)
    }

    /// Basis class `b_i`, `1 <= i <= g`.
    pub fn basis_b(genus: u32, i: u32) -> Result<Self, HomologyError> {
        if i == 0 || i > genus {
            return Err(HomologyError::CurveIndexOutOfRange { index: i, genus });
        }
        let mut c = Self::zero(genus);
        c.coords[(genus + i - 1) as usize] = 1;
        Ok(c)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&v| v == 0)
    }

    pub fn neg(&self) -> Self {
        HClass {
            genus: self.genus,
            coords: self.coords.iter().map(|v| -v).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, HomologyError> {
        if self.genus != other.genus {
            return Err(HomologyError::GenusMismatch(self.genus, other.genus));
        }
        Ok(HClass {
            genus: self.genus,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HomologyError> {
        self.add(&other.neg())
    }

    /// Divides out the content (gcd of the coordinates); zero stays zero.
    pub fn primitive(&self) -> Self {
        let g = self
            .coords
            .iter()
            .fold(0i64, |acc, &v| num_integer::gcd(acc, v.abs()));
        if g <= 1 {
            return self.clone();
        }
        HClass {
            genus: self.genus,
            coords: self.coords.iter().map(|v| v / g).collect(),
        }
    }

    /// Flips the sign if the first nonzero coordinate is negative.
    pub fn sign_normalized(&self) -> Self {
        match self.coords.iter().find(|&&v| v != 0) {
            Some(&v) if v < 0 => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for HClass {
    /// Renders as a combination of the basis, e.g. `a1 - a2 + 2 b3`; `0` for
    /// the zero class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus as usize;
        let mut wrote = false;
        for (idx, &v) in self.coords.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let name = if idx < g {
                format!("a{}", idx + 1)
            } else {
                format!("b{}", idx - g + 1)
            };
            if wrote {
                f.write_str(if v > 0 { " + " } else { " - " })?;
            } else if v < 0 {
                f.write_str("-")?;
            }
            let mag = v.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            f.write_str(&name)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The algebraic intersection pairing; antisymmetric, with
/// `<a_i, b_i> = +1`.
pub fn intersection(x: &HClass, y: &HClass) -> Result<i64, HomologyError> {
    if x.genus != y.genus {
        return Err(HomologyError::GenusMismatch(x.genus, y.genus));
    }
    let g = x.genus as usize;
    let mut total: i128 = 0;
    for i in 0..g {
        total += x.coords[i] as i128 * y.coords[g + i] as i128;
        total -= x.coords[g + i] as i128 * y.coords[i] as i128;
    }
    i64::try_from(total).map_err(|_| HomologyError::Overflow)
}

/// An integer matrix preserving the standard symplectic form on `Z^{2g}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SpMatrix {
    genus: u32,
    // row-major (2g)^2 entries
    data: Vec<i64>,
}

impl SpMatrix {
    pub fn identity(genus: u32) -> Self {
        let n = 2 * genus as usize;
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        SpMatrix { genus, data }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus as usize
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim() + j]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entry(i, j) == i64::from(i == j)))
    }

    /// `M^T J M == J` with `J` the matrix of the intersection pairing.
    pub fn is_symplectic(&self) -> bool {
        let n = self.dim();
        let g = self.genus as usize;
        // (M^T J M)[i][j] = <col_i, col_j>; compare against J.
        for i in 0..n {
            for j in 0..n {
                let mut v: i128 = 0;
                for k in 0..g {
                    v += self.entry(k, i) as i128 * self.entry(g + k, j) as i128;
                    v -= self.entry(g + k, i) as i128 * self.entry(k, j) as i128;
                }
                let expect = if j == i + g && i < g {
                    1
                } else if i == j + g && j < g {
                    -1
                } else {
                    0
                };
                if v != expect {
                    return false;
                }
            }
        }
        true
    }

    /// `self * other`: the composite in which `other` acts first.
    pub fn mul(&self, other: &Self) -> Result<Self, HomologyError> {
        if self.genus != other.genus {
            return Err(HomologyError::GenusMismatch(self.genus, other.genus));
        }
        let n = self.dim();
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a as i128 * other.entry(k, j) as i128;
                    let sum = data[i * n + j] as i128 + prod;
                    data[i * n + j] = i64::try_from(sum).map_err(|_| HomologyError::Overflow)?;
                }
            }
        }
        Ok(SpMatrix {
            genus: self.genus,
            data,
        })
    }

    pub fn apply(&self, x: &HClass) -> Result<HClass, HomologyError> {
        if self.genus != x.genus {
            return Err(HomologyError::GenusMismatch(self.genus, x.genus));
        }
        let n = self.dim();
        let mut coords = vec![0i64; n];
        for (i, out) in coords.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for j in 0..n {
                acc += self.entry(i, j) as i128 * x.coords[j] as i128;
            }
            *out = i64::try_from(acc).map_err(|_| HomologyError::Overflow)?;
        }
        Ok(HClass {
            genus: self.genus,
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        SpMatrix {
            genus: self.genus,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let n = self.dim();
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = BigInt::from(self.entry(i, j));
            }
        }
        m
    }

    /// First entry where the two matrices differ, as `(row, col, left,
    /// right)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, i64, i64)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.entry(i, j) != other.entry(i, j) {
                    return Some((i, j, self.entry(i, j), other.entry(i, j)));
                }
            }
        }
        None
    }
}

impl fmt::Debug for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpMatrix(g={})\n{}", self.genus, self.to_int_matrix())
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int_matrix())
    }
}

/// The transvection `x -> x + e <x, c> c` as a matrix, `I + e c (Jc)^T`.
/// With `e = 1` this is the homology action of a right Dehn twist about a
/// curve of class `c`; `e = -1` inverts it, and general `e` is the `e`-th
/// power. The class `c` itself is always fixed.
pub fn transvection(c: &HClass, e: i64) -> SpMatrix {
    let g = c.genus as usize;
    let n = 2 * g;
    // (Jc)[i] = c[g+i] for i < g, -c[i-g] for i >= g.
    let jc: Vec<i64> = (0..n)
        .map(|i| if i < g { c.coords[g + i] } else { -c.coords[i - g] })
        .collect();
    let mut m = SpMatrix::identity(c.genus);
    for i in 0..n {
        if c.coords[i] == 0 {
            continue;
        }
        for (j, &jcj) in jc.iter().enumerate() {
            let add = e as i128 * c.coords[i] as i128 * jcj as i128;
            let v = m.data[i * n + j] as i128 + add;
            m.data[i * n + j] = i64::try_from(v).expect("transvection entry overflow");
        }
    }
    debug_assert!(m.is_symplectic());
    m
}

/// The homology action of the hyperelliptic involution: minus the identity.
pub fn hyperelliptic_matrix(genus: u32) -> SpMatrix {
    SpMatrix::identity(genus).neg()
}

/// Labels for the curves whose twists appear in the verified words.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveLabel {
    /// Basis curve `a_i`.
    BasisA(u32),
    /// Basis curve `b_i`.
    BasisB(u32),
    /// Chain curve `A_k`, `1 <= k <= 2g+1`.
    Chain(u32),
    /// Transported curve `B_k`, `0 <= k <= g`.
    BSeries(u32),
    /// The separating curve `c` (even genus only).
    Separating,
    /// First boundary class of the odd chain neighborhood (`bd1`).
    Boundary1,
    /// Second boundary class (`bd2`).
    Boundary2,
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveLabel::BasisA(i) => write!(f, "a{i}"),
            CurveLabel::BasisB(i) => write!(f, "b{i}"),
            CurveLabel::Chain(k) => write!(f, "A{k}"),
            CurveLabel::BSeries(k) => write!(f, "B{k}"),
            CurveLabel::Separating => f.write_str("c"),
            CurveLabel::Boundary1 => f.write_str("bd1"),
            CurveLabel::Boundary2 => f.write_str("bd2"),
        }
    }
}

impl fmt::Debug for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for CurveLabel {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HomologyError::UnknownLabel(s.to_string());
        match s {
            "c" => return Ok(CurveLabel::Separating),
            "bd1" => return Ok(CurveLabel::Boundary1),
            "bd2" => return Ok(CurveLabel::Boundary2),
            _ => {}
        }
        if s.len() < 2 || !s.is_char_boundary(1) {
            return Err(bad());
        }
        let (head, rest) = s.split_at(1);
        let index: u32 = rest.parse().map_err(|_| bad())?;
        match head {
            "a" => Ok(CurveLabel::BasisA(index)),
            "b" => Ok(CurveLabel::BasisB(index)),
            "A" => Ok(CurveLabel::Chain(index)),
            "B" => Ok(CurveLabel::BSeries(index)),
            _ => Err(bad()),
        }
    }
}

/// Class of the chain curve `A_k` at genus `g`.
fn chain_class(genus: u32, k: u32) -> Result<HClass, HomologyError> {
    if k == 0 || k > 2 * genus + 1 {
        return Err(HomologyError::CurveIndexOutOfRange { index: k, genus });
    }
    if k == 1 {
        return HClass::basis_a(genus, 1);
    }
    if k == 2 * genus + 1 {
        return HClass::basis_a(genus, genus);
    }
    if k.is_multiple_of(2) {
        HClass::basis_b(genus, k / 2)
    } else {
        let j = k / 2; // k = 2j+1, 1 <= j <= g-1
        HClass::basis_a(genus, j)?.sub(&HClass::basis_a(genus, j + 1)?)
    }
}

/// Resolves a curve label to its homology class at genus `g`.
///
/// `B_k` classes are computed, not tabulated: the chain class
/// `[A_{2g+1-k}]` is pushed through the twist word `Δ̄_k Δ_{2g-k}` and the
/// result is sign-normalized. `c` resolves to zero (a separating curve is
/// null-homologous), and the boundary pair comes from
/// [`chain_boundary_classes`].
pub fn curve_class(label: CurveLabel, genus: u32) -> Result<HClass, HomologyError> {
    match label {
        CurveLabel::BasisA(i) => HClass::basis_a(genus, i),
        CurveLabel::BasisB(i) => HClass::basis_b(genus, i),
        CurveLabel::Chain(k) => chain_class(genus, k),
        CurveLabel::BSeries(k) => {
            if k > genus {
                return Err(HomologyError::CurveIndexOutOfRange { index: k, genus });
            }
            let bd = braid::bar_delta(genus, k).expect("range checked");
            let d = braid::delta(genus, 2 * genus - k).expect("range checked");
            let word = bd.multiply(&d).expect("same strand count");
            let transport =
                evaluate_twistword(&TwistWord::from_braid_word(genus, word.word())?)?;
            let image = transport.apply(&chain_class(genus, 2 * genus + 1 - k)?)?;
            Ok(image.sign_normalized())
        }
        CurveLabel::Separating => {
            if !genus.is_multiple_of(2) {
                return Err(HomologyError::LabelParity {
                    label: "c".into(),
                    genus,
                    reason: "the separating curve c exists only for even genus",
                });
            }
            Ok(HClass::zero(genus))
        }
        CurveLabel::Boundary1 | CurveLabel::Boundary2 => {
            if genus.is_multiple_of(2) {
                return Err(HomologyError::LabelParity {
                    label: label.to_string(),
                    genus,
                    reason: "the chain boundary pair exists only for odd genus",
                });
            }
            let (alpha, beta) = chain_boundary_classes(genus)?;
            Ok(match label {
                CurveLabel::Boundary1 => alpha,
                _ => beta,
            })
        }
    }
}

/// A formal product of twists `t_label^exp`, rightmost factor acting first.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistWord {
    genus: u32,
    factors: Vec<(CurveLabel, i64)>,
}

impl TwistWord {
    pub fn new(genus: u32, factors: Vec<(CurveLabel, i64)>) -> Result<Self, HomologyError> {
        for (label, _) in &factors {
            curve_class(*label, genus)?; // every label must resolve
        }
        Ok(TwistWord { genus, factors })
    }

    pub fn identity(genus: u32) -> Self {
        TwistWord {
            genus,
            factors: Vec::new(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn factors(&self) -> &[(CurveLabel, i64)] {
        &self.factors
    }

    /// Number of twist letters counted with multiplicity (absolute
    /// exponents).
    pub fn twist_count(&self) -> u64 {
        self.factors.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Projects a braid word to a twist word: `s_k` becomes a twist about
    /// the chain curve `A_k`.
    pub fn from_braid_word(genus: u32, w: &GenWord) -> Result<Self, HomologyError> {
        let factors = w
            .letters()
            .iter()
            .map(|l| {
                if l.index() > 2 * genus + 1 {
                    Err(HomologyError::CurveIndexOutOfRange {
                        index: l.index(),
                        genus,
                    })
                } else {
                    Ok((CurveLabel::Chain(l.index()), i64::from(l.sign())))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TwistWord { genus, factors })
    }

    /// `(t_g ... t_2 t_1)^power` over the chain curves.
    pub fn chain_descending(genus: u32, power: u32) -> Self {
        let mut factors = Vec::new();
        for _ in 0..power {
            for k in (1..=genus).rev() {
                factors.push((CurveLabel::Chain(k), 1));
            }
        }
        TwistWord { genus, factors }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, HomologyError> {
        if self.genus != other.genus {
            return Err(HomologyError::GenusMismatch(self.genus, other.genus));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(TwistWord {
            genus: self.genus,
            factors,
        })
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (label, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "t[{label}]")?;
            } else {
                write!(f, "t[{label}]^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Evaluates a twist word to its symplectic matrix.
pub fn evaluate_twistword(w: &TwistWord) -> Result<SpMatrix, HomologyError> {
    let mut acc = SpMatrix::identity(w.genus);
    // Left-to-right matrix product; applying the result to a vector then
    // runs the rightmost factor first.
    for (label, e) in &w.factors {
        let t = transvection(&curve_class(*label, w.genus)?, *e);
        acc = acc.mul(&t)?;
    }
    Ok(acc)
}

/// The global monodromy word `W` at genus `g >= 2`:
/// `(t_{B_0} t_{B_1} ... t_{B_g} t_c)^2` for even `g` and
/// `(t_{B_0} t_{B_1} ... t_{B_g} t_a^2 t_b^2)^2` for odd `g`,
/// a product of `2g+4` resp. `2g+10` right twists.
pub fn relation_word(genus: u32) -> Result<TwistWord, HomologyError> {
    if genus < 2 {
        return Err(HomologyError::GenusTooSmall { genus, min: 2 });
    }
    let mut half: Vec<(CurveLabel, i64)> = (0..=genus)
        .map(|k| (CurveLabel::BSeries(k), 1))
        .collect();
    if genus.is_multiple_of(2) {
        half.push((CurveLabel::Separating, 1));
    } else {
        half.push((CurveLabel::Boundary1, 2));
        half.push((CurveLabel::Boundary2, 2));
    }
    let mut factors = half.clone();
    factors.extend(half);
    TwistWord::new(genus, factors)
}

/// Vanishing-cycle labels of `W` in monodromy order, with multiplicity.
pub fn relation_cycle_labels(genus: u32) -> Result<Vec<CurveLabel>, HomologyError> {
    let w = relation_word(genus)?;
    let mut labels = Vec::new();
    for (label, e) in w.factors() {
        for _ in 0..e.unsigned_abs() {
            labels.push(*label);
        }
    }
    Ok(labels)
}

/// Recovers the two boundary classes of a regular neighborhood of the chain
/// `A_1 ... A_g` for odd `g >= 3` from the homology action of
/// `(t_g ... t_2 t_1)^{g+1}`.
///
/// That action is a product of commuting twists about the two boundary
/// curves, so `M - I` has rank at most 2; and the boundary classes are
/// opposite (the two curves co-bound the neighborhood), which makes the rank
/// exactly 1 with `M = T_alpha^2`. The extraction verifies all of this
/// exactly and reports any failure as a falsification of the chain relation
/// instead of guessing.
///
/// The first class is sign-normalized (first nonzero coordinate positive);
/// the pair is the two boundary classes up to orientation.
pub fn chain_boundary_classes(genus: u32) -> Result<(HClass, HClass), HomologyError> {
    if genus.is_multiple_of(2) || genus < 3 {
        return Err(HomologyError::GenusTooSmall { genus, min: 3 });
    }
    let m = evaluate_twistword(&TwistWord::chain_descending(genus, genus + 1))?;
    let n = m.dim();
    let mut diff = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            diff[(i, j)] = BigInt::from(m.entry(i, j) - i64::from(i == j));
        }
    }
    let rank = diff.rank();
    if rank > 2 {
        return Err(HomologyError::Extraction(format!(
            "M - I has rank {rank} > 2 at genus {genus}"
        )));
    }
    let Some(col) = (0..n).find(|&j| (0..n).any(|i| !diff[(i, j)].is_zero())) else {
        return Err(HomologyError::Extraction(format!(
            "chain power acts trivially at genus {genus}"
        )));
    };
    let column: Vec<i64> = (0..n)
        .map(|i| m.entry(i, col) - i64::from(i == col))
        .collect();
    let alpha = HClass::new(genus, column)?.primitive().sign_normalized();
    let beta = alpha.neg();

    // Exact reconstruction: M == transvection(alpha,1) * transvection(beta,1).
    let rebuilt = transvection(&alpha, 1).mul(&transvection(&beta, 1))?;
    if rebuilt != m {
        return Err(HomologyError::Extraction(format!(
            "boundary classes do not reconstruct the chain action at genus {genus}"
        )));
    }
    if intersection(&alpha, &beta)? != 0 {
        return Err(HomologyError::Extraction(
            "boundary classes are not disjoint in homology".into(),
        ));
    }
    Ok((alpha, beta))
}

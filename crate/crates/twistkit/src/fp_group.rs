//! Abelianizations of the fibration fundamental groups, vanishing-cycle
//! class lists for the monodromy words `W` and `W_n`, and a word-level
//! presentation simplifier.
//!
//! First homology of the total space is the quotient of `Z^{2g}` by the
//! lattice spanned by the vanishing-cycle classes, computed exactly through
//! Smith normal form. That is the rigorous route to the fundamental-group
//! statements restricted to `H_1`; the word-level presentation and its
//! Tietze simplification are a cross-check, not the source of truth.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::homology::{
    self, curve_class, evaluate_twistword, CurveLabel, HClass, HomologyError, TwistWord,
};
use crate::intmat::{smith_normal_form, IntMatrix};
use crate::word::{GenWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("twist multiplicity n must be at least 1")]
    ZeroMultiplicity,
    #[error("classes have mixed genus: {0} vs {1}")]
    MixedGenus(u32, u32),
    #[error("the word-level presentation is tabulated only for even genus, got {0}")]
    OddGenusPresentation(u32),
    #[error("invariant factor does not fit in u64")]
    TorsionOverflow,
}

/// A finitely generated abelian group: free rank plus invariant factors
/// `d_1 | d_2 | ...`, each at least 2.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z + Z/n`, with `n = 1` normalized to no torsion factor.
    pub fn z_plus_cyclic(n: u64) -> Self {
        AbelianGroup {
            free_rank: 1,
            torsion: if n <= 1 { Vec::new() } else { vec![n] },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Which monodromy word the vanishing cycles come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monodromy {
    /// The base relation word `W`.
    W,
    /// `W_n`: the product of `g` conjugated copies of `W`, with the twist
    /// multiplicity `n` on the distinguished conjugator.
    Wn(u64),
}

/// The conjugating twist words of the `W_n` factorization, identity first.
///
/// For `g = 2r` the conjugators are
/// `t_{a_1}, ..., t_{a_{r-1}}, t_{a_r}^n, t_{b_{r+2}}, ..., t_{b_g}`;
/// for `g = 2r+1` they are
/// `t_{A_3}^n, t_{A_5}, ..., t_{A_{2r+1}}, t_{b_{r+2}}, ..., t_{b_g}`.
/// Either way there are `g` factors in total.
fn conjugators(genus: u32, n: u64) -> Result<Vec<TwistWord>, FpError> {
    let n = i64::try_from(n).expect("multiplicity fits i64");
    let r = genus / 2;
    let mut out = vec![TwistWord::identity(genus)];
    if genus.is_multiple_of(2) {
        for k in 1..r {
            out.push(TwistWord::new(genus, vec![(CurveLabel::BasisA(k), 1)])?);
        }
        out.push(TwistWord::new(genus, vec![(CurveLabel::BasisA(r), n)])?);
    } else {
        out.push(TwistWord::new(genus, vec![(CurveLabel::Chain(3), n)])?);
        for j in 2..=r {
            out.push(TwistWord::new(
                genus,
                vec![(CurveLabel::Chain(2 * j + 1), 1)],
            )?);
        }
    }
    for k in r + 2..=genus {
        out.push(TwistWord::new(genus, vec![(CurveLabel::BasisB(k), 1)])?);
    }
    debug_assert_eq!(out.len(), genus as usize);
    Ok(out)
}

/// The homology classes of all vanishing cycles of the chosen monodromy, in
/// factorization order and with multiplicity.
///
/// For `W^f` the cycles are the `f`-images of the cycles of `W`, so their
/// classes are `M_f * [cycle]` with `M_f` the symplectic matrix of `f`.
/// The total count is `2g+4` (even `g`) or `2g+10` (odd `g`) per factor,
/// with `g` factors for `W_n`.
pub fn vanishing_cycle_classes(genus: u32, variant: Monodromy) -> Result<Vec<HClass>, FpError> {
    if genus < 2 {
        return Err(FpError::GenusTooSmall(genus));
    }
    let base: Vec<HClass> = homology::relation_cycle_labels(genus)?
        .into_iter()
        .map(|label| curve_class(label, genus))
        .collect::<Result<_, _>>()?;
    match variant {
        Monodromy::W => Ok(base),
        Monodromy::Wn(n) => {
            if n == 0 {
                return Err(FpError::ZeroMultiplicity);
            }
            let mut out = Vec::with_capacity(base.len() * genus as usize);
            for f in conjugators(genus, n)? {
                let m = evaluate_twistword(&f)?;
                for class in &base {
                    out.push(m.apply(class)?);
                }
            }
            Ok(out)
        }
    }
}

/// Cokernel of the row lattice spanned by the classes: the first homology of
/// `Z^{2g}` modulo the cycles. Free rank is `2g - rank`, torsion the
/// nontrivial invariant factors.
pub fn abelianization(classes: &[HClass]) -> Result<AbelianGroup, FpError> {
    let Some(first) = classes.first() else {
        return Ok(AbelianGroup::free(0));
    };
    let genus = first.genus();
    for c in classes {
        if c.genus() != genus {
            return Err(FpError::MixedGenus(genus, c.genus()));
        }
    }
    let rows: Vec<Vec<i64>> = classes.iter().map(|c| c.coords().to_vec()).collect();
    let m = IntMatrix::from_rows(&rows);
    cokernel(&m)
}

/// Cokernel of `Z^cols` by the rows of `m`.
pub fn cokernel(m: &IntMatrix) -> Result<AbelianGroup, FpError> {
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let torsion = factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().ok_or(FpError::TorsionOverflow))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AbelianGroup {
        free_rank: m.cols() - factors.len(),
        torsion,
    })
}

/// `H_1` of the fibration with monodromy `W` or `W_n` at the given genus.
pub fn first_homology(genus: u32, variant: Monodromy) -> Result<AbelianGroup, FpError> {
    abelianization(&vanishing_cycle_classes(genus, variant)?)
}

/// A finite presentation: named generators and relator words whose letter
/// indices point into the generator list (1-based).
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GenWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<GenWord>) -> Self {
        let rank = generators.len() as u32;
        for r in &relators {
            assert!(
                r.max_index().unwrap_or(0) <= rank,
                "relator uses undeclared generator"
            );
        }
        Presentation {
            generators,
            relators,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GenWord] {
        &self.relators
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.generators.len()))
            .collect();
        if rows.is_empty() {
            IntMatrix::zero(0, self.generators.len())
        } else {
            IntMatrix::from_rows(&rows)
        }
    }

    pub fn abelianization(&self) -> Result<AbelianGroup, FpError> {
        let m = self.relation_matrix();
        if m.rows() == 0 {
            return Ok(AbelianGroup::free(self.generators.len()));
        }
        cokernel(&m)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(" ")?;
            let rendered: Vec<String> = r
                .letters()
                .iter()
                .map(|l| {
                    let name = &self.generators[(l.index() - 1) as usize];
                    if l.sign() > 0 {
                        name.clone()
                    } else {
                        format!("{name}^-1")
                    }
                })
                .collect();
            f.write_str(&rendered.join(" "))?;
        }
        f.write_str(" >")
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// Generator numbering for the surface presentations: interleaved
// a1, b1, a2, b2, ..., so a_k has letter index 2k-1 and b_k index 2k.
fn gen_a(k: u32) -> Letter {
    Letter::positive(2 * k - 1)
}

fn gen_b(k: u32) -> Letter {
    Letter::positive(2 * k)
}

fn commutator(x: Letter, y: Letter) -> GenWord {
    GenWord::reduce([x, y, x.inverse(), y.inverse()])
}

/// `[a_1,b_1][a_2,b_2]...[a_j,b_j]`, the genus-`j` commutator product. The
/// middle symbols `c_j` of the relator table expand to these words; they
/// abelianize to zero, and eliminating a generator collapses its commutator
/// factor by free reduction.
fn commutator_product(j: u32) -> GenWord {
    let mut w = GenWord::identity();
    for i in 1..=j {
        w = w.multiply(&commutator(gen_a(i), gen_b(i)));
    }
    w
}

/// The fundamental-group presentation of the total space for even genus:
/// generators `a_1, b_1, ..., a_g, b_g`, the surface relation, the relator
/// words of `B_0, ..., B_g` and `c`, and (when `n` is given) the extra
/// relators `a_1, ..., a_{r-1}, a_r^n, b_{r+2}, ..., b_g` of `W_n`.
///
/// The relator table (`g = 2r`):
///
/// ```text
/// B_0      = b_1 b_2 ... b_g
/// B_{2k-1} = a_k  b_k ... b_{g+1-k}  c_{g+1-k}  a_{g+1-k}     1 <= k <= r
/// B_{2k}   = a_k  b_{k+1} ... b_{g-k}  c_{g-k}  a_{g+1-k}     1 <= k <= r-1
/// B_g      = a_r  c_r  a_{r+1}
/// c        = c_r
/// ```
///
/// with `c_j` the commutator product `[a_1,b_1]...[a_j,b_j]`.
///
/// For odd genus the table is not available and the homology route through
/// [`vanishing_cycle_classes`] is the only supported path.
pub fn fundamental_group_presentation(
    genus: u32,
    n: Option<u64>,
) -> Result<Presentation, FpError> {
    if genus < 2 {
        return Err(FpError::GenusTooSmall(genus));
    }
    if !genus.is_multiple_of(2) {
        return Err(FpError::OddGenusPresentation(genus));
    }
    if n == Some(0) {
        return Err(FpError::ZeroMultiplicity);
    }
    let r = genus / 2;
    let mut generators = Vec::new();
    for k in 1..=genus {
        generators.push(format!("a{k}"));
        generators.push(format!("b{k}"));
    }

    let mut relators = Vec::new();
    relators.push(commutator_product(genus)); // surface relation

    // B_0
    relators.push(GenWord::reduce((1..=genus).map(gen_b)));
    // B_{2k-1} and B_{2k} in index order B_1, B_2, ..., B_{g-1}
    for k in 1..=r {
        let mut w = GenWord::reduce([gen_a(k)]);
        for j in k..=genus + 1 - k {
            w = w.multiply(&GenWord::reduce([gen_b(j)]));
        }
        w = w.multiply(&commutator_product(genus + 1 - k));
        w = w.multiply(&GenWord::reduce([gen_a(genus + 1 - k)]));
        relators.push(w); // B_{2k-1}
        if k < r {
            let mut w = GenWord::reduce([gen_a(k)]);
            for j in k + 1..=genus - k {
                w = w.multiply(&GenWord::reduce([gen_b(j)]));
            }
            w = w.multiply(&commutator_product(genus - k));
            w = w.multiply(&GenWord::reduce([gen_a(genus + 1 - k)]));
            relators.push(w); // B_{2k}
        }
    }
    // B_g = a_r c_r a_{r+1}
    relators.push(
        GenWord::reduce([gen_a(r)])
            .multiply(&commutator_product(r))
            .multiply(&GenWord::reduce([gen_a(r + 1)])),
    );
    // c = c_r
    relators.push(commutator_product(r));

    if let Some(n) = n {
        for k in 1..r {
            relators.push(GenWord::reduce([gen_a(k)]));
        }
        relators.push(GenWord::reduce([gen_a(r)]).power(n as i64));
        for k in r + 2..=genus {
            relators.push(GenWord::reduce([gen_b(k)]));
        }
    }

    Ok(Presentation::new(generators, relators))
}

/// Repeatedly eliminates generators that occur exactly once in some relator.
///
/// If a relator has a cyclic rotation of the form `x^e w` where the
/// generator `x` occurs exactly once in the relator, then `x = w^{-e}`
/// everywhere: the substitution removes both the generator and the relator.
/// The generator count strictly decreases, so the loop terminates; the
/// result is a fixed point, not necessarily minimal. The abelianization is
/// unchanged by every step.
pub fn tietze_eliminate(p: &Presentation) -> Presentation {
    let mut generators = p.generators.clone();
    let mut relators: Vec<GenWord> = p.relators.clone();

    'outer: loop {
        relators.retain(|r| !r.is_identity());
        // Deduplicate identical relators; order is otherwise preserved.
        let mut seen = HashSet::new();
        relators.retain(|r| seen.insert(r.clone()));

        for ri in 0..relators.len() {
            let occurrences =
                |w: &GenWord, x: u32| w.letters().iter().filter(|l| l.index() == x).count();
            let candidate = relators[ri].rotations().find_map(|rot| {
                let first = *rot.letters().first()?;
                if occurrences(&rot, first.index()) == 1 {
                    Some((first, rot))
                } else {
                    None
                }
            });
            let Some((x, rot)) = candidate else {
                continue;
            };
            // rot = x^e w, so x = w^{-e}.
            let w = GenWord::reduce(rot.letters()[1..].iter().copied());
            let replacement = if x.sign() > 0 { w.invert() } else { w };
            let dead = x.index();

            relators.remove(ri);
            relators = relators
                .iter()
                .map(|r| substitute(r, dead, &replacement))
                .collect();
            generators.remove((dead - 1) as usize);
            // Renumber letters above the removed generator.
            relators = relators.iter().map(|r| shift_down(r, dead)).collect();
            continue 'outer;
        }
        break;
    }
    Presentation {
        generators,
        relators,
    }
}

/// Replaces every occurrence of generator `x` by `replacement` and reduces.
fn substitute(w: &GenWord, x: u32, replacement: &GenWord) -> GenWord {
    let mut out = GenWord::identity();
    for l in w.letters() {
        if l.index() == x {
            out = if l.sign() > 0 {
                out.multiply(replacement)
            } else {
                out.multiply(&replacement.invert())
            };
        } else {
            out = out.multiply(&GenWord::reduce([*l]));
        }
    }
    out
}

/// Shifts letter indices above `removed` down by one.
fn shift_down(w: &GenWord, removed: u32) -> GenWord {
    GenWord::reduce(w.letters().iter().map(|l| {
        debug_assert_ne!(l.index(), removed);
        if l.index() > removed {
            Letter::new(l.index() - 1, l.sign())
        } else {
            *l
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ss: &[&str]) -> Vec<GenWord> {
        ss.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn abelian_group_display_and_normalization() {
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::z_plus_cyclic(5).to_string(), "Z + Z/5");
        assert_eq!(AbelianGroup::z_plus_cyclic(1), AbelianGroup::free(1));
        assert_eq!(
            AbelianGroup {
                free_rank: 0,
                torsion: vec![]
            }
            .to_string(),
            "0"
        );
    }

    #[test]
    fn abelian_group_json_shape() {
        let g = AbelianGroup::z_plus_cyclic(5);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"free_rank":1,"torsion":[5]}"#
        );
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(vanishing_cycle_classes(2, Monodromy::W).unwrap().len(), 8);
        assert_eq!(vanishing_cycle_classes(3, Monodromy::W).unwrap().len(), 16);
        for (g, expect) in [(2u32, 16), (3, 48), (4, 48), (5, 100)] {
            assert_eq!(
                vanishing_cycle_classes(g, Monodromy::Wn(3)).unwrap().len(),
                expect as usize,
                "g={g}"
            );
        }
        assert!(vanishing_cycle_classes(1, Monodromy::W).is_err());
        assert!(vanishing_cycle_classes(2, Monodromy::Wn(0)).is_err());
    }

    #[test]
    fn conjugated_cycle_class_example() {
        // t_{a_1}^n applied to [B_0] = b_1 + b_2 gives b_1 + b_2 - n a_1.
        let n = 3;
        let classes = vanishing_cycle_classes(2, Monodromy::Wn(n)).unwrap();
        // The second factor starts at offset 8; its first cycle is the image
        // of B_0.
        assert_eq!(classes[8].coords(), &[-(n as i64), 0, 1, 1]);
    }

    #[test]
    fn h1_of_base_relation() {
        // Even genus: Z^g. Odd genus: Z^{g-1}.
        for g in 2..=6u32 {
            let h1 = first_homology(g, Monodromy::W).unwrap();
            let expect = if g.is_multiple_of(2) { g } else { g - 1 } as usize;
            assert_eq!(h1, AbelianGroup::free(expect), "g={g}");
        }
    }

    #[test]
    fn h1_of_fiber_sum() {
        // Even genus: Z + Z/n. Odd genus: the stated conjugator list
        // over-kills the b-generators (see the B_g and boundary classes) and
        // the quotient is Z/n; the acceptance suite tracks the discrepancy
        // against the claimed Z + Z/n.
        for g in 2..=5u32 {
            for n in [1u64, 2, 5] {
                let h1 = first_homology(g, Monodromy::Wn(n)).unwrap();
                let expect = if g.is_multiple_of(2) {
                    AbelianGroup::z_plus_cyclic(n)
                } else {
                    AbelianGroup {
                        free_rank: 0,
                        torsion: if n == 1 { vec![] } else { vec![n] },
                    }
                };
                assert_eq!(h1, expect, "g={g} n={n}");
            }
        }
    }

    #[test]
    fn abelianization_invariant_under_row_operations() {
        let classes = vanishing_cycle_classes(2, Monodromy::Wn(4)).unwrap();
        let before = abelianization(&classes).unwrap();
        // Replace class_i by class_i + 3 * class_j: same lattice.
        let mut rows: Vec<HClass> = classes.clone();
        let bump = rows[5].clone();
        for _ in 0..3 {
            rows[2] = rows[2].add(&bump).unwrap();
        }
        assert_eq!(abelianization(&rows).unwrap(), before);
    }

    #[test]
    fn presentation_matches_cycle_lattice() {
        // The abelianized relator table and the transported cycle classes
        // span the same lattice: equal cokernels for both and for the
        // stacked matrix (quotients of Z^n with equal invariants and a
        // surjection between them are equal).
        for g in [2u32, 4] {
            for n in [None, Some(1u64), Some(3), Some(10)] {
                let p = fundamental_group_presentation(g, n).unwrap();
                let pres_rows: Vec<Vec<i64>> = p
                    .relators()
                    .iter()
                    .map(|r| interleaved_to_block(g, &r.exponent_sums(2 * g as usize)))
                    .collect();
                let variant = match n {
                    None => Monodromy::W,
                    Some(n) => Monodromy::Wn(n),
                };
                let cycle_rows: Vec<Vec<i64>> = vanishing_cycle_classes(g, variant)
                    .unwrap()
                    .iter()
                    .map(|c| c.coords().to_vec())
                    .collect();
                let a = cokernel(&IntMatrix::from_rows(&pres_rows)).unwrap();
                let b = cokernel(&IntMatrix::from_rows(&cycle_rows)).unwrap();
                let mut stacked = pres_rows.clone();
                stacked.extend(cycle_rows);
                let c = cokernel(&IntMatrix::from_rows(&stacked)).unwrap();
                assert_eq!(a, b, "g={g} n={n:?}");
                assert_eq!(a, c, "g={g} n={n:?}");
            }
        }
    }

    /// Reorders exponent sums from the presentation's interleaved generator
    /// order (a1, b1, a2, b2, ...) to the homology basis order
    /// (a1..ag, b1..bg).
    fn interleaved_to_block(g: u32, sums: &[i64]) -> Vec<i64> {
        let g = g as usize;
        let mut out = vec![0; 2 * g];
        for k in 0..g {
            out[k] = sums[2 * k];
            out[g + k] = sums[2 * k + 1];
        }
        out
    }

    #[test]
    fn transported_b_classes_against_relator_table() {
        // The relators B_0..B_g abelianize to the table classes. Under the
        // pinned twist sign, transport reproduces them coordinatewise in
        // absolute value for every k, exactly for B_0 (= b_1 + ... + b_g)
        // and B_g (= a_r + a_{r+1}), and with the b-part negated for the
        // middle classes. The lattices spanned are identical either way
        // (presentation_matches_cycle_lattice), which is what every H_1
        // computation consumes.
        for g in [2u32, 4, 6] {
            let p = fundamental_group_presentation(g, None).unwrap();
            // relators[0] is the surface relation; B_k sits at index k+1.
            for k in 0..=g {
                let table = interleaved_to_block(
                    g,
                    &p.relators()[(k + 1) as usize].exponent_sums(2 * g as usize),
                );
                let transported = curve_class(CurveLabel::BSeries(k), g).unwrap();
                let half = g as usize;
                let (ta, tb) = transported.coords().split_at(half);
                let (ra, rb) = table.split_at(half);
                assert_eq!(ta, ra, "g={g} k={k}: a-part");
                assert!(
                    tb == rb || tb.iter().zip(rb).all(|(x, y)| *x == -y),
                    "g={g} k={k}: b-part differs beyond sign: {tb:?} vs {rb:?}"
                );
                if k == 0 || k == g {
                    assert_eq!(transported.coords(), &table, "g={g} k={k}: exact");
                }
            }
        }
    }

    #[test]
    fn presentation_shape_g2() {
        let p = fundamental_group_presentation(2, Some(1)).unwrap();
        assert_eq!(p.generators(), &["a1", "b1", "a2", "b2"]);
        // B_0 relator: b1 b2
        assert!(p.relators().contains(&"s2 s4".parse().unwrap()));
        // B_2 relator: a1 c1 a2 with c1 = [a1, b1]
        let b2: GenWord = "s1"
            .parse::<GenWord>()
            .unwrap()
            .multiply(&commutator(gen_a(1), gen_b(1)))
            .multiply(&"s3".parse().unwrap());
        assert!(p.relators().contains(&b2));
        // relators: surface + (B_0, B_1, B_2, c) + a_r^n
        assert_eq!(p.relators().len(), 6);
        assert!(fundamental_group_presentation(3, Some(1)).is_err());
        assert!(fundamental_group_presentation(2, Some(0)).is_err());
    }

    #[test]
    fn presentation_abelianization_matches_h1() {
        for g in [2u32, 4, 6] {
            let p = fundamental_group_presentation(g, None).unwrap();
            assert_eq!(
                p.abelianization().unwrap(),
                AbelianGroup::free(g as usize),
                "g={g}"
            );
            for n in [1u64, 4, 7] {
                let p = fundamental_group_presentation(g, Some(n)).unwrap();
                assert_eq!(
                    p.abelianization().unwrap(),
                    AbelianGroup::z_plus_cyclic(n),
                    "g={g} n={n}"
                );
            }
        }
    }

    #[test]
    fn tietze_simple_examples() {
        // <x, y | x, y^n> -> <y | y^n>
        let p = Presentation::new(vec!["x".into(), "y".into()], words(&["s1", "s2 s2 s2"]));
        let q = tietze_eliminate(&p);
        assert_eq!(q.generators(), &["y"]);
        assert_eq!(q.relators(), &words(&["s1 s1 s1"]));

        // <x, y | x y> -> <y | > (free of rank 1)
        let p = Presentation::new(vec!["x".into(), "y".into()], words(&["s1 s2"]));
        let q = tietze_eliminate(&p);
        assert_eq!(q.generators(), &["y"]);
        assert!(q.relators().is_empty());
        assert_eq!(q.abelianization().unwrap(), AbelianGroup::free(1));
    }

    #[test]
    fn tietze_uses_rotations() {
        // The single occurrence of x is only at the head after rotation.
        let p = Presentation::new(vec!["x".into(), "y".into()], words(&["s2 s2 s1"]));
        let q = tietze_eliminate(&p);
        assert_eq!(q.generators(), &["y"]);
        assert!(q.relators().is_empty());
    }

    #[test]
    fn tietze_preserves_abelianization() {
        let cases: Vec<Presentation> = vec![
            fundamental_group_presentation(2, Some(6)).unwrap(),
            fundamental_group_presentation(4, Some(3)).unwrap(),
            Presentation::new(
                vec!["x".into(), "y".into(), "z".into()],
                words(&["s1 s2 s1^-1 s2^-1 s3", "s1 s1 s2"]),
            ),
        ];
        for p in cases {
            let q = tietze_eliminate(&p);
            assert_eq!(
                p.abelianization().unwrap(),
                q.abelianization().unwrap(),
                "{p}"
            );
            assert!(q.generators().len() <= p.generators().len());
        }
    }

    #[test]
    fn tietze_reduces_fiber_sum_presentation_to_two_generators() {
        for n in [1u64, 2, 5, 9] {
            let p = fundamental_group_presentation(2, Some(n)).unwrap();
            let q = tietze_eliminate(&p);
            assert!(
                q.generators().len() <= 2,
                "n={n}: fixed point kept {} generators",
                q.generators().len()
            );
            assert_eq!(q.abelianization().unwrap(), AbelianGroup::z_plus_cyclic(n));
        }
    }
}

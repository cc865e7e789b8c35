//! Dense integer matrices with exact big-integer arithmetic: Smith normal
//! form, fraction-free determinants, and rank.
//!
//! The Smith normal form routine returns `D = U * M * V` with `U`, `V`
//! unimodular and the diagonal forming a divisibility chain. Pivots are
//! chosen by minimal absolute value, which keeps coefficient growth tame
//! without any probabilistic steps.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense `rows x cols` integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading_minor_matrix(&self, k: usize) -> Self {
        assert!(k <= self.rows.min(self.cols));
        let mut m = Self::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, k, k) * at(&a, i, j) - at(&a, i, k) * at(&a, k, j);
                    // Exact division is a Bareiss invariant.
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i * n + j] = q;
                }
            }
            for i in k + 1..n {
                a[i * n + k] = BigInt::zero();
            }
            prev = at(&a, k, k);
        }
        let det = at(&a, n - 1, n - 1);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Rank over the rationals (equivalently over the integers).
    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[a] += q * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * &self[(b, j)];
            self[(a, j)] += delta;
        }
    }

    /// col[a] += q * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = q * &self[(i, b)];
            self[(i, a)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self[(i, j)].to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", self[(i, j)].to_string(), w = widths[j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// The result of a Smith normal form computation: `d = u * m * v`.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|v| !v.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Exact check of `u * m * v == d` plus unimodularity of `u` and `v`.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        self.u.mul(m).mul(&self.v) == self.d
            && self.u.determinant().abs().is_one()
            && self.v.determinant().abs().is_one()
    }
}

/// Computes the Smith normal form of `m`.
///
/// Repeatedly moves a minimal-magnitude nonzero entry of the working
/// submatrix to the pivot, clears its row and column by Euclidean steps, and
/// folds any remaining entry not divisible by the pivot back into the pivot
/// row, so the divisibility chain holds on exit. Diagonal entries are
/// normalized to be nonnegative.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let steps = m.rows().min(m.cols());

    for t in 0..steps {
        'pivot: loop {
            // Minimal |entry| in the remaining submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if !d[(i, j)].is_zero()
                        && best
                            .map(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // submatrix is zero, done
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Reduce column t and row t against the pivot.
            let mut dirty = false;
            for i in t + 1..d.rows() {
                if !d[(i, t)].is_zero() {
                    let q = -div_round(&d[(i, t)], &d[(t, t)]);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d[(i, t)].is_zero() {
                        dirty = true; // remainder survives; pivot will shrink
                    }
                }
            }
            for j in t + 1..d.cols() {
                if !d[(t, j)].is_zero() {
                    let q = -div_round(&d[(t, j)], &d[(t, t)]);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    if !d[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Pivot must divide the rest of the submatrix for the chain.
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..d.rows())
                .find(|&i| (t + 1..d.cols()).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            if let Some(i) = offender {
                d.add_row_multiple(t, i, &BigInt::one());
                u.add_row_multiple(t, i, &BigInt::one());
                continue 'pivot;
            }
            break 'pivot;
        }
    }

    // Sign normalization: diagonal entries nonnegative.
    for t in 0..steps {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { d, u, v }
}

/// Quotient rounded to nearest, so the remainder has magnitude at most
/// |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if a.is_negative() == b.is_negative() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn snf_of_diagonal_is_fixed() {
        let a = m(&[vec![2, 0], vec![0, 4]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
        assert!(s.verify(&a));
    }

    #[test]
    fn snf_small_example() {
        // d1 = gcd of all entries = 2; d1*d2 = |det| = |16-24| = 8, so d2 = 4.
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let gcd_all = BigInt::from(2);
        let det = a.determinant();
        assert_eq!(det, BigInt::from(-8));
        let s = smith_normal_form(&a);
        let f = s.invariant_factors();
        assert_eq!(f[0], gcd_all);
        assert_eq!(&f[0] * &f[1], det.abs());
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(4)]);
        assert!(s.verify(&a));
    }

    #[test]
    fn snf_zero_and_empty() {
        let z = IntMatrix::zero(3, 2);
        let s = smith_normal_form(&z);
        assert!(s.invariant_factors().is_empty());
        assert_eq!(s.rank(), 0);
        assert!(s.verify(&z));

        let e = IntMatrix::zero(0, 4);
        let s = smith_normal_form(&e);
        assert_eq!(s.rank(), 0);
        assert!(s.verify(&e));
    }

    #[test]
    fn snf_invariant_under_permutation() {
        let a = m(&[vec![6, 4, 2], vec![2, 8, 10], vec![0, 4, 6]]);
        let mut b = a.clone();
        b.swap_rows(0, 2);
        b.swap_cols(1, 2);
        assert_eq!(
            smith_normal_form(&a).invariant_factors(),
            smith_normal_form(&b).invariant_factors()
        );
    }

    #[test]
    fn divisibility_chain() {
        let a = m(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
        let s = smith_normal_form(&a);
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{f:?}");
        }
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(1), BigInt::from(30)]);
        assert!(s.verify(&a));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(a.determinant(), BigInt::from(-3));
        let singular = m(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.determinant(), BigInt::zero());
        assert_eq!(IntMatrix::identity(5).determinant(), BigInt::one());
    }

    #[test]
    fn determinant_needs_row_swap() {
        let a = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.determinant(), BigInt::from(-1));
        let b = m(&[vec![0, 2, 1], vec![3, 0, 0], vec![0, 0, 4]]);
        assert_eq!(b.determinant(), BigInt::from(-24));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(&[vec![1, 0], vec![0, 1]]).rank(), 2);
        assert_eq!(IntMatrix::zero(4, 4).rank(), 0);
    }

    #[test]
    fn div_round_is_nearest() {
        assert_eq!(div_round(&BigInt::from(7), &BigInt::from(3)), BigInt::from(2));
        assert_eq!(div_round(&BigInt::from(-7), &BigInt::from(3)), BigInt::from(-2));
        assert_eq!(div_round(&BigInt::from(5), &BigInt::from(2)), BigInt::from(2));
        assert_eq!(div_round(&BigInt::from(4), &BigInt::from(2)), BigInt::from(2));
    }
}

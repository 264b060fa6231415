//! Dense exact integer matrices and the fraction-free algorithms built on
//! them: Bareiss rank/determinant, row-style Hermite normal form and Smith
//! normal form with unimodular transforms.
//!
//! Everything here is exact. No floating point is used anywhere in the
//! crate; entries are arbitrary-precision integers because jet-matrix
//! entries are products of falling factorials and minors grow quickly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Row-major dense matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        IntMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor used heavily in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// 0xN matrix (no rows); a legal generator set for the zero lattice.
    pub fn empty(cols: usize) -> Self {
        IntMatrix::new(0, cols, Vec::new())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.entry(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.entry(r, k) * other.entry(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.entry(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_subtract(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.entry(dst, c) - q * self.entry(src, c);
            self.set(dst, c, v);
        }
    }

    /// row[dst] += row[src]
    fn row_add(&mut self, dst: usize, src: usize) {
        for c in 0..self.cols {
            let v = self.entry(dst, c) + self.entry(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_subtract(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.entry(r, dst) - q * self.entry(r, src);
            self.set(r, dst, v);
        }
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Fraction-free (Bareiss) elimination with full pivoting.
/// Returns the rank and the determinant of the leading min(r,c) pivots,
/// which for square full-rank input is the determinant of the matrix.
fn bareiss(m: &IntMatrix) -> (usize, BigInt) {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let steps = rows.min(cols);

    for step in 0..steps {
        // pick the smallest nonzero entry of the trailing submatrix as pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in step..rows {
            for j in step..cols {
                if !a.entry(i, j).is_zero() {
                    match pivot {
                        Some((pi, pj)) if a.entry(pi, pj).abs() <= a.entry(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != step {
            a.swap_rows(pi, step);
            sign = -sign;
        }
        if pj != step {
            a.swap_cols(pj, step);
            sign = -sign;
        }
        rank += 1;
        let pivot_val = a.entry(step, step).clone();
        for i in step + 1..rows {
            for j in step + 1..cols {
                let num = &pivot_val * a.entry(i, j) - a.entry(i, step) * a.entry(step, j);
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a.set(i, j, num / &prev);
            }
            a.set(i, step, BigInt::zero());
        }
        prev = pivot_val;
    }

    let det = if rank == steps {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Rank over the rationals, by fraction-free elimination.
pub fn rank_exact(m: &IntMatrix) -> usize {
    bareiss(m).0
}

/// Exact determinant of a square matrix (Bareiss elimination).
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(BigInt::one());
    }
    let (rank, det) = bareiss(m);
    Ok(if rank == m.rows { det } else { BigInt::zero() })
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `h = u * m`. Convention: pivots
/// are positive, each pivot sits strictly right of the pivot above it,
/// entries above a pivot are reduced into `[0, pivot)`, zero rows come last.
/// `h` is uniquely determined by the row span of `m` (and its row count).
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows;
    let cols = m.cols;
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean reduction: shrink the column below pivot_row to a single
        // nonzero entry sitting at pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !h.entry(r, col).is_zero() {
                    match best {
                        Some(b) if h.entry(b, col).abs() <= h.entry(r, col).abs() => {}
                        _ => best = Some(r),
                    }
                }
            }
            let Some(best) = best else { break };
            if best != pivot_row {
                h.swap_rows(best, pivot_row);
                u.swap_rows(best, pivot_row);
            }
            let pivot = h.entry(pivot_row, col).clone();
            let mut dirty = false;
            for r in pivot_row + 1..rows {
                if !h.entry(r, col).is_zero() {
                    let q = h.entry(r, col).div_floor(&pivot);
                    h.row_subtract(r, pivot_row, &q);
                    u.row_subtract(r, pivot_row, &q);
                    if !h.entry(r, col).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if h.entry(pivot_row, col).is_zero() {
            continue;
        }
        if h.entry(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h.entry(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.entry(r, col).div_floor(&pivot);
            h.row_subtract(r, pivot_row, &q);
            u.row_subtract(r, pivot_row, &q);
        }
        pivot_row += 1;
    }

    (h, u)
}

/// The canonical HNF basis of the row span of `m`: the nonzero rows of the
/// Hermite normal form. Two generator sets span the same sublattice of Z^n
/// iff this agrees.
pub fn row_span_hnf(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(m);
    let nonzero = (0..h.rows())
        .filter(|&r| h.row(r).iter().any(|v| !v.is_zero()))
        .map(|r| h.row(r).to_vec())
        .collect::<Vec<_>>();
    if nonzero.is_empty() {
        IntMatrix::empty(m.cols())
    } else {
        IntMatrix::from_rows(nonzero)
    }
}

/// Smith normal form decomposition: `s = u * m * v` with `u`, `v`
/// unimodular and `s` diagonal with a divisibility chain d1 | d2 | ...
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn snf(m: &IntMatrix) -> Snf {
    snf_with_inverse(m).0
}

/// Smith normal form that also returns the inverse of `v`, tracked through
/// the elementary column operations. The rows of `v^{-1}` form a basis of
/// Z^cols adapted to the row span of `m`.
pub(crate) fn snf_with_inverse(m: &IntMatrix) -> (Snf, IntMatrix) {
    let rows = m.rows;
    let cols = m.cols;
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    for t in 0..steps {
        'pivot: loop {
            // smallest nonzero entry of the trailing block as pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !s.entry(i, j).is_zero() {
                        match pivot {
                            Some((pi, pj)) if s.entry(pi, pj).abs() <= s.entry(i, j).abs() => {}
                            _ => pivot = Some((i, j)),
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'pivot };
            if pi != t {
                s.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                s.swap_cols(pj, t);
                v.swap_cols(pj, t);
                v_inv.swap_rows(pj, t);
            }
            let pivot_val = s.entry(t, t).clone();

            let mut dirty = false;
            for i in t + 1..rows {
                if !s.entry(i, t).is_zero() {
                    let q = s.entry(i, t).div_floor(&pivot_val);
                    s.row_subtract(i, t, &q);
                    u.row_subtract(i, t, &q);
                    if !s.entry(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !s.entry(t, j).is_zero() {
                    let q = s.entry(t, j).div_floor(&pivot_val);
                    s.col_subtract(j, t, &q);
                    v.col_subtract(j, t, &q);
                    // (v * E)^{-1} = E^{-1} * v^{-1}: row t gains q * row j
                    if !q.is_zero() {
                        for c in 0..cols {
                            let val = v_inv.entry(t, c) + &q * v_inv.entry(j, c);
                            v_inv.set(t, c, val);
                        }
                    }
                    if !s.entry(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // pivot row and column are clear; enforce divisibility
            let pivot_val = s.entry(t, t).clone();
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(s.entry(i, j) % &pivot_val).is_zero() {
                        s.row_add(t, i);
                        u.row_add(t, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if s.entry(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    (Snf { s, u, v }, v_inv)
}

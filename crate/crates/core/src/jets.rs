//! Matrices of k-jets of monomial parameterizations.
//!
//! For a configuration A in Z^n, the matrix of k-jets at a torus point has
//! one row per partial-derivative order (a multi-index of total order at
//! most k) and one column per monomial x^u, u in A. At the distinguished
//! point (1,...,1) the entry for multi-index a and exponent u is the product
//! of falling factorials u_i (u_i - 1) ... (u_i - a_i + 1), an integer; for
//! toric embeddings the rank at (1,...,1) equals the generic rank over the
//! whole torus, which is what every downstream computation consumes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};
use crate::point::{LatticePoint, PointConfiguration};

/// A vector of partial-derivative orders, one per coordinate.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn order(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// Binomial coefficient as usize, panicking on overflow (desk-scale sizes).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .expect("binomial coefficient overflow");
        acc /= (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient exceeds usize")
}

/// Number of rows of a jet matrix of order k in n variables: C(n+k, k).
pub fn jet_row_count(n: usize, k: u32) -> usize {
    binomial(n + k as usize, k as usize)
}

/// All multi-indices of total order at most k in n variables, in graded
/// lexicographic order: grades ascending, and within a grade the larger
/// tuple first, so the constant row (0,...,0) always comes first.
pub fn multi_indices(n: usize, k: u32) -> Vec<MultiIndex> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(jet_row_count(n, k));
    let mut current = vec![0u32; n];
    for grade in 0..=k {
        compositions_desc(grade, 0, &mut current, &mut out);
    }
    debug_assert_eq!(out.len(), jet_row_count(n, k));
    out
}

fn compositions_desc(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(MultiIndex::new(current.clone()));
        return;
    }
    for first in (0..=remaining).rev() {
        current[pos] = first;
        compositions_desc(remaining - first, pos + 1, current, out);
    }
}

/// u (u-1) ... (u-a+1); the empty product (a = 0) is 1. Negative u is
/// legal: Laurent monomials are regular at (1,...,1) and translating a
/// configuration must not change any rank decision.
pub fn falling_factorial(u: &BigInt, a: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..a {
        acc *= u - BigInt::from(j);
    }
    acc
}

/// The integer matrix of k-jets at the point (1,...,1).
#[derive(Clone, Debug)]
pub struct JetMatrix {
    pub order: u32,
    pub row_index: Vec<MultiIndex>,
    pub matrix: IntMatrix,
}

impl JetMatrix {
    pub fn rank(&self) -> usize {
        matrix::rank_exact(&self.matrix)
    }
}

pub fn jet_matrix(cfg: &PointConfiguration, k: u32) -> JetMatrix {
    let rows = multi_indices(cfg.ambient_rank().max(1), k);
    let row_index = if cfg.ambient_rank() == 0 {
        vec![MultiIndex::new(Vec::new())]
    } else {
        rows
    };
    let mut entries = Vec::with_capacity(row_index.len() * cfg.len());
    for alpha in &row_index {
        for point in cfg.iter() {
            entries.push(jet_entry(point, alpha));
        }
    }
    JetMatrix {
        order: k,
        row_index: row_index.clone(),
        matrix: IntMatrix::new(row_index.len(), cfg.len(), entries),
    }
}

fn jet_entry(point: &LatticePoint, alpha: &MultiIndex) -> BigInt {
    let mut acc = BigInt::one();
    for (u, &a) in point.coords().iter().zip(alpha.exponents()) {
        if acc.is_zero() {
            break;
        }
        acc *= falling_factorial(u, a);
    }
    acc
}

/// Dense matrix over the rationals; only what jet evaluation at general
/// points needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        RationalMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    /// Rank by exact Gaussian elimination over Q.
    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<BigRational>, r: usize, c: usize| a[r * cols + c].clone();
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot_row) = (rank..rows).find(|&r| !at(&a, r, col).is_zero()) else {
                continue;
            };
            for c in 0..cols {
                a.swap(rank * cols + c, pivot_row * cols + c);
            }
            let pivot = at(&a, rank, col);
            for r in 0..rows {
                if r != rank && !at(&a, r, col).is_zero() {
                    let factor = at(&a, r, col) / pivot.clone();
                    for c in 0..cols {
                        let v = at(&a, r, c) - factor.clone() * at(&a, rank, c);
                        a[r * cols + c] = v;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

/// The rational matrix of k-jets evaluated at an arbitrary torus point
/// (all coordinates nonzero): entry(a, u) = (falling factorials) * p^(u-a).
#[derive(Clone, Debug)]
pub struct RationalJetMatrix {
    pub order: u32,
    pub row_index: Vec<MultiIndex>,
    pub matrix: RationalMatrix,
}

pub fn jet_matrix_at_point(
    cfg: &PointConfiguration,
    k: u32,
    point: &[BigRational],
) -> Result<RationalJetMatrix> {
    if point.len() != cfg.ambient_rank() {
        return Err(Error::DimensionMismatch(format!(
            "evaluation point has {} coordinates, expected {}",
            point.len(),
            cfg.ambient_rank()
        )));
    }
    if let Some(index) = point.iter().position(Zero::is_zero) {
        return Err(Error::ZeroCoordinate { index });
    }
    let row_index = multi_indices(cfg.ambient_rank().max(1), k);
    let mut entries = Vec::with_capacity(row_index.len() * cfg.len());
    for alpha in &row_index {
        for u in cfg.iter() {
            entries.push(rational_jet_entry(u, alpha, point));
        }
    }
    Ok(RationalJetMatrix {
        order: k,
        row_index: row_index.clone(),
        matrix: RationalMatrix::new(row_index.len(), cfg.len(), entries),
    })
}

fn rational_jet_entry(u: &LatticePoint, alpha: &MultiIndex, point: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for ((ui, &ai), pi) in u.coords().iter().zip(alpha.exponents()).zip(point) {
        let coeff = falling_factorial(ui, ai);
        if coeff.is_zero() {
            return BigRational::zero();
        }
        let exponent = ui - BigInt::from(ai);
        acc *= BigRational::from(coeff) * rational_pow(pi, &exponent);
    }
    acc
}

fn rational_pow(base: &BigRational, exponent: &BigInt) -> BigRational {
    let e = i32::try_from(exponent.clone()).expect("exponent fits in i32 at desk scale");
    // Ratio::pow handles negative exponents by inverting.
    base.pow(e)
}

/// The general osculating dimension d_k: the rank of the matrix of k-jets
/// at (1,...,1), which equals the generic jet rank over the torus.
pub fn osculating_dimension(cfg: &PointConfiguration, k: u32) -> usize {
    jet_matrix(cfg, k).rank()
}

/// Whether the osculating dimension attains its maximum C(n+k, k).
pub fn is_generically_kjet_spanned(cfg: &PointConfiguration, k: u32) -> bool {
    osculating_dimension(cfg, k) == jet_row_count(cfg.ambient_rank(), k)
}

/// Guard used by the gauss module: errors unless generically spanned.
pub fn require_spanned(cfg: &PointConfiguration, k: u32) -> Result<JetMatrix> {
    let jm = jet_matrix(cfg, k);
    let required = jet_row_count(cfg.ambient_rank(), k);
    let rank = jm.rank();
    if rank != required {
        return Err(Error::NotGenericallySpanned {
            order: k,
            rank,
            required,
        });
    }
    Ok(jm)
}

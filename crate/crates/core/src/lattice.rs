//! Sublattices of Z^n: saturation and torsion-free quotient projections.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

/// A sublattice of Z^n presented by a basis in row-style Hermite normal
/// form. The basis rows are linearly independent; the form is the unique
/// HNF of the row span, so two `Sublattice` values are equal iff they are
/// the same sublattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Sublattice {
    /// The sublattice generated by the rows of `generators` (no saturation).
    pub fn from_generators(generators: &IntMatrix) -> Sublattice {
        Sublattice {
            ambient_rank: generators.cols(),
            basis: matrix::row_span_hnf(generators),
        }
    }

    pub fn full(n: usize) -> Sublattice {
        Sublattice {
            ambient_rank: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Basis rows, in Hermite normal form.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Whether Z^n modulo this sublattice is torsion-free.
    pub fn is_saturated(&self) -> bool {
        let s = matrix::snf(&self.basis).s;
        (0..self.rank()).all(|i| s.entry(i, i).is_one())
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank && self.basis == IntMatrix::identity(self.ambient_rank)
    }
}

/// The saturation of the row span of `generators` inside Z^ambient_rank:
/// all v with q*v in the span for some positive integer q. The result has
/// the same rank as the generator set and a torsion-free quotient.
pub fn saturate(generators: &IntMatrix, ambient_rank: usize) -> Sublattice {
    assert_eq!(
        generators.cols(),
        ambient_rank,
        "generators must have ambient_rank columns"
    );
    let r = matrix::rank_exact(generators);
    if r == 0 {
        return Sublattice {
            ambient_rank,
            basis: IntMatrix::empty(ambient_rank),
        };
    }
    // u * G * v = diag(d_1..d_r, 0..): the first r rows of v^{-1} are a
    // basis of Z^n whose Z-span has the same rational span as G, and being
    // part of a basis of Z^n it is saturated.
    let (_, v_inv) = matrix::snf_with_inverse(generators);
    let rows = (0..r).map(|i| v_inv.row(i).to_vec()).collect();
    Sublattice {
        ambient_rank,
        basis: matrix::row_span_hnf(&IntMatrix::from_rows(rows)),
    }
}

/// A surjection Z^n -> Z^(n-r) whose kernel is exactly the saturated
/// sublattice `s`, as an (n-r) x n integer matrix acting on column vectors.
/// Saturation guarantees the cokernel is torsion-free, which makes such a
/// projection exist; it is unique up to unimodular coordinate change on the
/// target.
pub fn quotient_projection(s: &Sublattice) -> Result<IntMatrix> {
    let n = s.ambient_rank();
    let r = s.rank();
    let (snf, _) = matrix::snf_with_inverse(s.basis());
    for i in 0..r {
        if !snf.s.entry(i, i).is_one() {
            return Err(Error::NotSaturated);
        }
    }
    // basis * v = [I_r | 0] (up to the left unimodular factor), so the last
    // n-r columns of v annihilate the basis rows and complete them to a
    // coordinate system: transposing them gives the projection.
    let mut p = IntMatrix::zero(n - r, n);
    for a in 0..n - r {
        for i in 0..n {
            p.set(a, i, snf.v.entry(i, r + a).clone());
        }
    }
    Ok(p)
}

/// Membership test used by tests and by the saturation oracle.
pub fn lattice_contains(basis: &IntMatrix, v: &[BigInt]) -> bool {
    // reduce v against the HNF basis rows by exact division on pivots
    let mut rem: Vec<BigInt> = v.to_vec();
    for r in 0..basis.rows() {
        let Some(pivot_col) = (0..basis.cols()).find(|&c| !basis.entry(r, c).is_zero()) else {
            continue;
        };
        let pivot = basis.entry(r, pivot_col);
        if (&rem[pivot_col] % pivot).is_zero() {
            let q = &rem[pivot_col] / pivot;
            for (c, rem_c) in rem.iter_mut().enumerate() {
                *rem_c -= &q * basis.entry(r, c);
            }
        } else {
            return false;
        }
    }
    rem.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn saturate_divides_out_multiples() {
        let g = IntMatrix::from_i64(&[&[2, 0]]);
        let s = saturate(&g, 2);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.basis(), &IntMatrix::from_i64(&[&[1, 0]]));
        assert!(s.is_saturated());
    }

    #[test]
    fn saturate_empty_generators() {
        let s = saturate(&IntMatrix::empty(3), 3);
        assert_eq!(s.rank(), 0);
        assert!(s.is_saturated());
    }

    #[test]
    fn saturate_rank_two_example() {
        // generators {(2,2),(0,4)}: saturation contains (1,1) and (0,2)...
        // verified against the small-vector oracle below.
        let g = IntMatrix::from_i64(&[&[2, 2], &[0, 4]]);
        let s = saturate(&g, 2);
        assert_eq!(s.rank(), 2);

        // oracle: v is in the saturation iff some positive multiple of v
        // lies in the row span of g. Enumerate |v|_inf <= 4.
        let unsat = Sublattice::from_generators(&g);
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = vec![BigInt::from(x), BigInt::from(y)];
                let in_saturation = (1..=8).any(|q: i64| {
                    let qv: Vec<BigInt> = v.iter().map(|c| c * q).collect();
                    lattice_contains(unsat.basis(), &qv)
                });
                assert_eq!(
                    lattice_contains(s.basis(), &v),
                    in_saturation,
                    "disagreement at ({x},{y})"
                );
            }
        }
    }

    #[test]
    fn saturate_is_idempotent() {
        for g in [
            IntMatrix::from_i64(&[&[2, 2], &[0, 4]]),
            IntMatrix::from_i64(&[&[3, 6, 9]]),
            IntMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 4]]),
        ] {
            let once = saturate(&g, g.cols());
            let twice = saturate(once.basis(), g.cols());
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn projection_of_axis_line() {
        let s = saturate(&IntMatrix::from_i64(&[&[1, 0]]), 2);
        let p = quotient_projection(&s).unwrap();
        assert_eq!(p.rows(), 1);
        assert_eq!(p.apply(&[BigInt::from(1), BigInt::from(0)]), vec![BigInt::from(0)]);
        // surjectivity: the single row is primitive
        let g = p.row(0).iter().fold(BigInt::from(0), |acc, v| {
            num_integer::Integer::gcd(&acc, v)
        });
        assert!(g.is_one());
    }

    #[test]
    fn projection_of_full_lattice_is_empty() {
        let s = Sublattice::full(2);
        let p = quotient_projection(&s).unwrap();
        assert_eq!((p.rows(), p.cols()), (0, 2));
    }

    #[test]
    fn projection_of_diagonal_line() {
        let s = saturate(&IntMatrix::from_i64(&[&[1, 1]]), 2);
        let p = quotient_projection(&s).unwrap();
        assert_eq!(p.apply(&[BigInt::from(1), BigInt::from(1)]), vec![BigInt::from(0)]);
        let g = num_integer::Integer::gcd(p.entry(0, 0), p.entry(0, 1));
        assert!(g.abs().is_one());
    }

    #[test]
    fn projection_rejects_unsaturated() {
        let s = Sublattice::from_generators(&IntMatrix::from_i64(&[&[2, 0]]));
        assert!(matches!(quotient_projection(&s), Err(Error::NotSaturated)));
    }

    #[test]
    fn projection_kernel_and_extension() {
        let s = saturate(&IntMatrix::from_i64(&[&[2, 4, 5]]), 3);
        let p = quotient_projection(&s).unwrap();
        assert_eq!(p.rows(), 2);
        for r in 0..s.basis().rows() {
            let image = p.apply(s.basis().row(r));
            assert!(image.iter().all(Zero::is_zero));
        }
        // rows of p extend to a basis of Z^3, equivalently p is surjective
        // onto Z^2: all invariant factors are 1
        let snf = matrix::snf(&p).s;
        for i in 0..p.rows() {
            assert!(snf.entry(i, i).is_one());
        }
    }
}

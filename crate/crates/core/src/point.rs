//! Lattice points and point configurations, the input data of every
//! pipeline: a finite set A in Z^n defines the monomial map x -> (x^u)_{u in A}
//! whose image closure is the projective toric variety X_A.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{self, Sublattice};
use crate::matrix::{self, IntMatrix};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<BigInt>,
}

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint::new(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: i64) -> LatticePoint {
        LatticePoint::new(self.coords.iter().map(|c| c * factor).collect())
    }
}

impl std::fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// An ordered, duplicate-free finite set of lattice points in Z^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfiguration {
    ambient_rank: usize,
    points: Vec<LatticePoint>,
    affine_rank: usize,
}

impl PointConfiguration {
    /// Builds a configuration, dropping duplicate points (first occurrence
    /// wins) and caching the rank of the affine span.
    pub fn new(ambient_rank: usize, points: Vec<LatticePoint>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut deduped = Vec::with_capacity(points.len());
        for p in points {
            if p.dim() != ambient_rank {
                return Err(Error::DimensionMismatch(format!(
                    "point {:?} has {} coordinates, expected {}",
                    p,
                    p.dim(),
                    ambient_rank
                )));
            }
            if seen.insert(p.clone()) {
                deduped.push(p);
            }
        }
        let affine_rank = affine_rank_of(&deduped, ambient_rank);
        Ok(PointConfiguration {
            ambient_rank,
            points: deduped,
            affine_rank,
        })
    }

    pub fn from_rows(ambient_rank: usize, rows: &[&[i64]]) -> Self {
        PointConfiguration::new(
            ambient_rank,
            rows.iter().map(|r| LatticePoint::from_i64(r)).collect(),
        )
        .expect("literal configuration must be well formed")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn affine_rank(&self) -> usize {
        self.affine_rank
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_rank == self.ambient_rank
    }

    /// Differences p_i - p_0 as matrix rows ((len-1) x n; empty for fewer
    /// than two points).
    pub fn difference_matrix(&self) -> IntMatrix {
        if self.points.len() < 2 {
            return IntMatrix::empty(self.ambient_rank);
        }
        let base = &self.points[0];
        IntMatrix::from_rows(
            self.points[1..]
                .iter()
                .map(|p| p.sub(base).coords().to_vec())
                .collect(),
        )
    }

    pub fn translate(&self, t: &LatticePoint) -> PointConfiguration {
        PointConfiguration {
            ambient_rank: self.ambient_rank,
            points: self.points.iter().map(|p| p.add(t)).collect(),
            affine_rank: self.affine_rank,
        }
    }

    /// Applies an n x n integer matrix to every point. For unimodular
    /// matrices this is a lattice automorphism and preserves every invariant
    /// computed downstream.
    pub fn transform(&self, m: &IntMatrix) -> Result<PointConfiguration> {
        if m.rows() != self.ambient_rank || m.cols() != self.ambient_rank {
            return Err(Error::DimensionMismatch(format!(
                "transform must be {n}x{n}",
                n = self.ambient_rank
            )));
        }
        let points = self
            .points
            .iter()
            .map(|p| LatticePoint::new(m.apply(p.coords())))
            .collect();
        PointConfiguration::new(self.ambient_rank, points)
    }

    /// Re-expresses the configuration in coordinates of its affine span.
    ///
    /// The span lattice used is the saturation of the difference lattice,
    /// i.e. the ambient lattice points of the affine hull; this keeps polytope
    /// lattice data (lattice points, edge lengths, vertex cones) identical to
    /// what the ambient embedding induces.
    pub fn reduce_to_affine_span(&self) -> (PointConfiguration, AffineReduction) {
        let base = self
            .points
            .first()
            .cloned()
            .unwrap_or_else(|| LatticePoint::origin(self.ambient_rank));
        let span = lattice::saturate(&self.difference_matrix(), self.ambient_rank);
        let r = span.rank();
        let points = self
            .points
            .iter()
            .map(|p| {
                LatticePoint::new(
                    coords_in_basis(span.basis(), p.sub(&base).coords())
                        .expect("differences lie in the saturated span"),
                )
            })
            .collect();
        let reduced = PointConfiguration {
            ambient_rank: r,
            points,
            affine_rank: r,
        };
        (
            reduced,
            AffineReduction {
                base_point: base,
                span,
            },
        )
    }
}

/// Record of a reduction to the affine span: original coordinates are
/// recovered as base_point + (reduced coords) * span basis rows.
#[derive(Clone, Debug)]
pub struct AffineReduction {
    pub base_point: LatticePoint,
    pub span: Sublattice,
}

fn affine_rank_of(points: &[LatticePoint], ambient_rank: usize) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let base = &points[0];
    let rows = points[1..]
        .iter()
        .map(|p| p.sub(base).coords().to_vec())
        .collect::<Vec<_>>();
    matrix::rank_exact(&IntMatrix::new(
        rows.len(),
        ambient_rank,
        rows.into_iter().flatten().collect(),
    ))
}

/// Coordinates of `v` in the row basis `basis` (HNF, full row rank), or
/// None if `v` is outside the spanned sublattice.
pub fn coords_in_basis(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem: Vec<BigInt> = v.to_vec();
    let mut coords = vec![BigInt::zero(); basis.rows()];
    for (r, coord) in coords.iter_mut().enumerate() {
        let pivot_col = (0..basis.cols()).find(|&c| !basis.entry(r, c).is_zero())?;
        let pivot = basis.entry(r, pivot_col);
        if !(&rem[pivot_col] % pivot).is_zero() {
            return None;
        }
        let q = &rem[pivot_col] / pivot;
        for (c, rem_c) in rem.iter_mut().enumerate() {
            *rem_c -= &q * basis.entry(r, c);
        }
        *coord = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_preserves_order() {
        let cfg = PointConfiguration::from_rows(2, &[&[1, 0], &[0, 1], &[1, 0], &[0, 0]]);
        assert_eq!(cfg.len(), 3);
        assert_eq!(cfg.points()[0], LatticePoint::from_i64(&[1, 0]));
        assert_eq!(cfg.points()[2], LatticePoint::from_i64(&[0, 0]));
    }

    #[test]
    fn affine_rank_is_cached() {
        let cfg = PointConfiguration::from_rows(2, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(cfg.affine_rank(), 1);
        assert!(!cfg.is_full_dimensional());
        let full = PointConfiguration::from_rows(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(full.is_full_dimensional());
    }

    #[test]
    fn reduction_recovers_lattice_structure() {
        // points on the line (2t, 2t): saturated span basis (1,1), so the
        // reduced coordinates keep the intermediate lattice point visible.
        let cfg = PointConfiguration::from_rows(2, &[&[0, 0], &[2, 2]]);
        let (reduced, reduction) = cfg.reduce_to_affine_span();
        assert_eq!(reduced.ambient_rank(), 1);
        assert_eq!(reduction.span.basis(), &IntMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(reduced.points()[1], LatticePoint::from_i64(&[2]));
    }

    #[test]
    fn mismatched_point_dimension_is_rejected() {
        let r = PointConfiguration::new(
            2,
            vec![LatticePoint::from_i64(&[1, 2, 3])],
        );
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }
}

//! The order-k Gauss map analysis for toric embeddings.
//!
//! Let A be a generically k-jet spanned configuration in Z^n and let
//! q = C(n+k, k). Summing every q-point subset of A whose columns of the
//! jet matrix at (1,...,1) are linearly independent yields a finite point
//! set B_k; the toric variety of B_k is, up to projective equivalence, the
//! closure of the image of the order-k Gauss map, and the general fiber is
//! the toric variety of the image of A under the projection of Z^n killing
//! the saturation of the difference lattice of B_k. In particular the fiber
//! dimension equals n minus the rank of that difference lattice; the map is
//! generically finite iff the rank is n and birational iff the difference
//! lattice is all of Z^n.
//!
//! Two enumeration strategies are provided: full depth-first enumeration of
//! independent q-subsets with matroid pruning, and a basis-exchange walk
//! that generates the difference lattice from single-column exchanges
//! without visiting every subset.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jets::{self, JetMatrix};
use crate::lattice::{self, Sublattice};
use crate::matrix::{self, IntMatrix};
use crate::point::{LatticePoint, PointConfiguration};
use crate::polytope;

/// Default cap on enumeration work (subset extensions or exchange tests).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Instances at most this large fall back to full enumeration when the
/// exchange walk runs out of budget before stabilizing.
pub const EXCHANGE_FALLBACK_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerationMode {
    Full,
    Exchange,
}

/// Which strategy actually produced the report.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportedMode {
    FullEnumeration,
    ExchangeWalk,
}

impl ReportedMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportedMode::FullEnumeration => "full-enumeration",
            ReportedMode::ExchangeWalk => "exchange-walk",
        }
    }
}

/// Everything the order-k Gauss map analysis produces.
#[derive(Clone, Debug)]
pub struct GaussReport {
    pub order: u32,
    pub ambient_rank: usize,
    /// C(n+k, k), the subset size.
    pub q: usize,
    pub mode: ReportedMode,
    /// Subset sums with nonsingular jet submatrix, deduplicated and sorted.
    /// In exchange mode this may be a subset of the full set; the lattice
    /// spanned by its differences is identical.
    pub b_k: Vec<LatticePoint>,
    /// Rank of the difference lattice of b_k.
    pub span_rank: usize,
    /// n - span_rank: dimension of the general fiber of the order-k Gauss
    /// map.
    pub fiber_dimension: usize,
    /// Projection of Z^n with kernel the saturated difference lattice.
    pub projection: IntMatrix,
    /// Image of A under the projection, deduplicated and sorted: the point
    /// set of the general fiber variety.
    pub fiber_points: PointConfiguration,
    /// Whether the (unsaturated) difference lattice is all of Z^n.
    pub span_is_full_lattice: bool,
    /// fiber_dimension == 0.
    pub finite: bool,
    /// Full difference lattice; for finite maps this is the birationality
    /// criterion.
    pub birational: bool,
    /// Whether conv(A) is a dilated unimodular simplex of factor k, the one
    /// polarization whose order-k map contracts everything.
    pub veronese_exception: bool,
}

/// Outcome of [`classify`]: the Gauss-map data combined with the polytope
/// predicates that govern it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub finite: bool,
    pub birational: bool,
    pub veronese: bool,
    pub smooth: bool,
    /// Full k-jet spannedness established through the edge criterion; false
    /// when the hull is not smooth (the criterion then does not apply).
    pub kjet_spanned: bool,
}

/// Incremental exact independence state for a set of integer columns:
/// candidate columns are reduced against the stored eliminated basis by
/// cross-multiplication, with content reduction to keep entries small.
#[derive(Clone, Default)]
struct ColumnBasis {
    reduced: Vec<(Vec<BigInt>, usize)>,
}

impl ColumnBasis {
    /// Reduces `col`; returns the reduced vector and its pivot position if
    /// independent of the current basis, None if dependent.
    fn reduce(&self, col: &[BigInt]) -> Option<(Vec<BigInt>, usize)> {
        let mut work = col.to_vec();
        for (basis, pivot) in &self.reduced {
            if work[*pivot].is_zero() {
                continue;
            }
            let scale_basis = work[*pivot].clone();
            let scale_work = basis[*pivot].clone();
            for (w, b) in work.iter_mut().zip(basis) {
                *w = &*w * &scale_work - b * &scale_basis;
            }
            let mut g = BigInt::zero();
            for w in &work {
                g = g.gcd(w);
            }
            if !g.is_zero() && !g.is_one() {
                for w in &mut work {
                    *w /= &g;
                }
            }
        }
        let pivot = work.iter().position(|w| !w.is_zero())?;
        Some((work, pivot))
    }

    fn push(&mut self, entry: (Vec<BigInt>, usize)) {
        self.reduced.push(entry);
    }

    fn pop(&mut self) {
        self.reduced.pop();
    }

    fn len(&self) -> usize {
        self.reduced.len()
    }
}

fn subset_sum(cfg: &PointConfiguration, subset: &[usize]) -> LatticePoint {
    let mut acc = LatticePoint::origin(cfg.ambient_rank());
    for &i in subset {
        acc = acc.add(&cfg.points()[i]);
    }
    acc
}

/// Number of q-subsets of an m-set, saturating at u128::MAX.
pub fn subset_count(m: usize, q: usize) -> u128 {
    if q > m {
        return 0;
    }
    let q = q.min(m - q);
    let mut acc: u128 = 1;
    for i in 0..q {
        match acc.checked_mul((m - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// The set B_k: coordinate-wise sums of all q-subsets of A whose q x q jet
/// submatrix at (1,...,1) is nonsingular, deduplicated and sorted.
///
/// Enumeration is a depth-first walk over columns in index order with
/// incremental fraction-free elimination; a partial subset whose columns
/// are dependent can never extend to a nonsingular one and is pruned.
/// Work is partitioned over the first chosen column and counted per
/// partition, so budget behavior is independent of thread scheduling.
pub fn compute_bk(cfg: &PointConfiguration, k: u32, budget: u64) -> Result<Vec<LatticePoint>> {
    let jm = jets::require_spanned(cfg, k)?;
    let q = jm.matrix.rows();
    let cols = jm.matrix.cols();

    let results: Vec<Result<(BTreeSet<LatticePoint>, u64)>> = (0..cols)
        .into_par_iter()
        .map(|first| {
            let mut sums = BTreeSet::new();
            let mut counter = 1u64;
            let mut basis = ColumnBasis::default();
            let mut chosen = Vec::with_capacity(q);
            if let Some(entry) = basis.reduce(&jm.matrix.column(first)) {
                basis.push(entry);
                chosen.push(first);
                dfs_subsets(
                    cfg,
                    &jm,
                    q,
                    first,
                    &mut chosen,
                    &mut basis,
                    &mut sums,
                    &mut counter,
                    budget,
                )?;
            }
            Ok((sums, counter))
        })
        .collect();

    let mut all = BTreeSet::new();
    let mut total: u64 = 0;
    for r in results {
        let (sums, counter) = r?;
        all.extend(sums);
        total = total.saturating_add(counter);
    }
    if total > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(all.into_iter().collect())
}

#[allow(clippy::too_many_arguments)]
fn dfs_subsets(
    cfg: &PointConfiguration,
    jm: &JetMatrix,
    q: usize,
    last: usize,
    chosen: &mut Vec<usize>,
    basis: &mut ColumnBasis,
    sums: &mut BTreeSet<LatticePoint>,
    counter: &mut u64,
    budget: u64,
) -> Result<()> {
    if basis.len() == q {
        sums.insert(subset_sum(cfg, chosen));
        return Ok(());
    }
    let cols = jm.matrix.cols();
    let needed = q - basis.len();
    for next in last + 1..cols {
        if cols - next < needed {
            break;
        }
        *counter += 1;
        if *counter > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        if let Some(entry) = basis.reduce(&jm.matrix.column(next)) {
            basis.push(entry);
            chosen.push(next);
            dfs_subsets(cfg, jm, q, next, chosen, basis, sums, counter, budget)?;
            chosen.pop();
            basis.pop();
        }
    }
    Ok(())
}

/// Result of the exchange walk: difference-lattice generators plus the
/// subset sums of the bases actually visited.
struct ExchangeWalk {
    generators: IntMatrix,
    visited_sums: Vec<LatticePoint>,
}

/// Generators of the difference lattice of B_k obtained without full
/// enumeration: starting from one nonsingular q-subset found by greedy
/// pivoting, walk the basis-exchange graph of the column matroid of the jet
/// matrix; each valid single exchange (u out, u' in) contributes the
/// difference u' - u. Differences of arbitrary B_k elements telescope along
/// connecting paths of single exchanges, so the walk generates the full
/// difference lattice once it has seen enough of the graph; it stops when a
/// whole frontier sweep leaves the generated lattice unchanged, or
/// immediately once the lattice is all of Z^n.
pub fn span_generators_exchange(
    cfg: &PointConfiguration,
    k: u32,
    budget: u64,
) -> Result<IntMatrix> {
    Ok(exchange_walk(cfg, k, budget)?.generators)
}

fn exchange_walk(cfg: &PointConfiguration, k: u32, budget: u64) -> Result<ExchangeWalk> {
    let jm = jets::require_spanned(cfg, k)?;
    let q = jm.matrix.rows();
    let cols = jm.matrix.cols();
    let n = cfg.ambient_rank();

    // greedy starting basis
    let mut basis = ColumnBasis::default();
    let mut start = Vec::with_capacity(q);
    for c in 0..cols {
        if let Some(entry) = basis.reduce(&jm.matrix.column(c)) {
            basis.push(entry);
            start.push(c);
            if start.len() == q {
                break;
            }
        }
    }
    debug_assert_eq!(start.len(), q, "spanned input has a column basis");

    let is_basis = |subset: &[usize]| -> bool {
        let mut b = ColumnBasis::default();
        for &c in subset {
            match b.reduce(&jm.matrix.column(c)) {
                Some(entry) => b.push(entry),
                None => return false,
            }
        }
        true
    };

    let mut visited: BTreeSet<Vec<usize>> = BTreeSet::new();
    visited.insert(start.clone());
    let mut frontier: Vec<Vec<usize>> = vec![start];
    let mut generators: Vec<Vec<BigInt>> = Vec::new();
    let mut current_hnf = IntMatrix::empty(n);
    let mut tested = 0u64;
    let identity = IntMatrix::identity(n);

    while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for subset in &frontier {
            let inside: BTreeSet<usize> = subset.iter().copied().collect();
            for out_col in 0..cols {
                if inside.contains(&out_col) {
                    continue;
                }
                for pos in 0..q {
                    tested += 1;
                    if tested > budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    let mut candidate = subset.clone();
                    candidate[pos] = out_col;
                    candidate.sort_unstable();
                    if !is_basis(&candidate) {
                        continue;
                    }
                    let diff = cfg.points()[out_col].sub(&cfg.points()[subset[pos]]);
                    generators.push(diff.coords().to_vec());
                    if visited.insert(candidate.clone()) {
                        next_frontier.push(candidate);
                    }
                }
            }
        }
        let gen_matrix = if generators.is_empty() {
            IntMatrix::empty(n)
        } else {
            IntMatrix::from_rows(generators.clone())
        };
        let new_hnf = matrix::row_span_hnf(&gen_matrix);
        // keep only the lattice basis so the generator list stays bounded
        generators = new_hnf.row_vecs();
        if new_hnf == identity || new_hnf == current_hnf {
            break;
        }
        current_hnf = new_hnf;
        frontier = next_frontier;
    }

    let visited_sums: BTreeSet<LatticePoint> = visited
        .iter()
        .map(|subset| subset_sum(cfg, subset))
        .collect();
    let generators = if generators.is_empty() {
        IntMatrix::empty(n)
    } else {
        IntMatrix::from_rows(generators)
    };
    Ok(ExchangeWalk {
        generators,
        visited_sums: visited_sums.into_iter().collect(),
    })
}

/// Rows b - b_0 for the sorted set `b_k`; they generate the same lattice as
/// all pairwise differences.
fn difference_rows(b_k: &[LatticePoint], n: usize) -> IntMatrix {
    if b_k.len() < 2 {
        return IntMatrix::empty(n);
    }
    let base = &b_k[0];
    IntMatrix::from_rows(
        b_k[1..]
            .iter()
            .map(|b| b.sub(base).coords().to_vec())
            .collect(),
    )
}

/// Full analysis of the order-k Gauss map of X_A.
pub fn analyze(
    cfg: &PointConfiguration,
    k: u32,
    mode: EnumerationMode,
    budget: u64,
) -> Result<GaussReport> {
    let n = cfg.ambient_rank();
    let q = jets::jet_row_count(n, k);

    let (b_k, diffs, reported) = match mode {
        EnumerationMode::Full => {
            let b_k = compute_bk(cfg, k, budget)?;
            let diffs = difference_rows(&b_k, n);
            (b_k, diffs, ReportedMode::FullEnumeration)
        }
        EnumerationMode::Exchange => match exchange_walk(cfg, k, budget) {
            Ok(walk) => (
                walk.visited_sums,
                walk.generators,
                ReportedMode::ExchangeWalk,
            ),
            Err(Error::BudgetExceeded { .. })
                if subset_count(cfg.len(), q) <= EXCHANGE_FALLBACK_LIMIT =>
            {
                let b_k = compute_bk(cfg, k, budget)?;
                let diffs = difference_rows(&b_k, n);
                (b_k, diffs, ReportedMode::FullEnumeration)
            }
            Err(e) => return Err(e),
        },
    };

    let span = lattice::saturate(&diffs, n);
    let span_rank = span.rank();
    let fiber_dimension = n - span_rank;
    let projection = lattice::quotient_projection(&span)?;
    let fiber_points = {
        let mut pts: Vec<LatticePoint> = cfg
            .iter()
            .map(|p| LatticePoint::new(projection.apply(p.coords())))
            .collect();
        pts.sort();
        PointConfiguration::new(fiber_dimension, pts)?
    };
    let span_is_full_lattice = span_rank == n && Sublattice::from_generators(&diffs).is_full();
    let veronese_exception = polytope::convex_hull(cfg)
        .map(|hull| polytope::is_k_veronese(&hull, k))
        .unwrap_or(false);

    Ok(GaussReport {
        order: k,
        ambient_rank: n,
        q,
        mode: reported,
        b_k,
        span_rank,
        fiber_dimension,
        projection,
        fiber_points,
        span_is_full_lattice,
        finite: fiber_dimension == 0,
        birational: span_is_full_lattice,
        veronese_exception,
    })
}

/// Combines the Gauss-map analysis with the polytope predicates and checks
/// the classification for consistency: a smooth polytope with all edge
/// lengths at least k that is not the k-fold dilated unimodular simplex
/// must yield a finite and birational order-k Gauss map. A violation means
/// a bug somewhere in the pipeline and is reported as a hard error rather
/// than a report.
pub fn classify(cfg: &PointConfiguration, k: u32, budget: u64) -> Result<Classification> {
    let report = analyze(cfg, k, EnumerationMode::Full, budget)?;
    let hull = polytope::convex_hull(cfg)?;
    let smooth = polytope::is_smooth(&hull);
    let kjet_spanned = smooth && polytope::edge_criterion_kjet(&hull, k)?;
    let classification = Classification {
        finite: report.finite,
        birational: report.birational,
        veronese: report.veronese_exception,
        smooth,
        kjet_spanned,
    };
    if smooth
        && kjet_spanned
        && !classification.veronese
        && !(classification.finite && classification.birational)
    {
        return Err(Error::ConsistencyViolation(format!(
            "smooth {k}-jet spanned non-Veronese input produced fiber dimension {} \
             with span_is_full_lattice = {}",
            report.fiber_dimension, report.span_is_full_lattice
        )));
    }
    Ok(classification)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::from_rows(rows[0].len(), rows)
    }

    fn pts(rows: &[&[i64]]) -> Vec<LatticePoint> {
        rows.iter().map(|r| LatticePoint::from_i64(r)).collect()
    }

    #[test]
    fn bk_of_three_collinear_points_order_one() {
        // subsets {0,1}, {0,2}, {1,2} have jet determinants 1, 2, 1
        let a = cfg(&[&[0], &[1], &[2]]);
        let b = compute_bk(&a, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(b, pts(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn bk_of_quadrilateral_surface_is_a_single_sum() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let b = compute_bk(&a, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(b, pts(&[&[5, 4]]));
    }

    #[test]
    fn bk_of_segment_order_two() {
        let a = cfg(&[&[0], &[1], &[2]]);
        let b = compute_bk(&a, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(b, pts(&[&[3]]));
    }

    #[test]
    fn unspanned_input_is_rejected() {
        let square = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            compute_bk(&square, 2, DEFAULT_BUDGET),
            Err(Error::NotGenericallySpanned { .. })
        ));
        assert!(matches!(
            span_generators_exchange(&square, 2, DEFAULT_BUDGET),
            Err(Error::NotGenericallySpanned { .. })
        ));
    }

    #[test]
    fn exchange_generators_on_a_segment() {
        let a = cfg(&[&[0], &[1], &[2]]);
        let gens = span_generators_exchange(&a, 1, DEFAULT_BUDGET).unwrap();
        let span = lattice::saturate(&gens, 1);
        assert_eq!(span.rank(), 1);
        // unsaturated span is already all of Z
        assert!(Sublattice::from_generators(&gens).is_full());
    }

    #[test]
    fn exchange_generators_with_unique_basis_are_empty() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let gens = span_generators_exchange(&a, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(gens.rows(), 0);
    }

    #[test]
    fn exchange_on_unit_square_spans_the_plane() {
        // four 3-subsets of the square; all are nonsingular and the
        // exchanges span Z^2
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let gens = span_generators_exchange(&a, 1, DEFAULT_BUDGET).unwrap();
        let span = lattice::saturate(&gens, 2);
        assert_eq!(span.rank(), 2);

        let b = compute_bk(&a, 1, DEFAULT_BUDGET).unwrap();
        let full_span = lattice::saturate(&difference_rows(&b, 2), 2);
        assert_eq!(span, full_span);
    }

    #[test]
    fn analyze_quadrilateral_surface_contracts_everything() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let r = analyze(&a, 2, EnumerationMode::Full, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.b_k, pts(&[&[5, 4]]));
        assert_eq!(r.span_rank, 0);
        assert_eq!(r.fiber_dimension, 2);
        assert!(!r.finite);
        assert!(!r.veronese_exception);
        // rank-zero span: the projection is a lattice automorphism and the
        // fiber points are the configuration itself
        assert_eq!(r.projection, IntMatrix::identity(2));
        let mut sorted: Vec<LatticePoint> = a.points().to_vec();
        sorted.sort();
        assert_eq!(r.fiber_points.points(), &sorted[..]);
    }

    #[test]
    fn analyze_dilated_simplices_hit_the_veronese_exception() {
        for (n, k) in [(1usize, 1u32), (1, 2), (2, 2), (2, 3), (3, 2)] {
            let config = crate::families::dilated_simplex(n, k);
            let r = analyze(&config, k, EnumerationMode::Full, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.b_k.len(), 1, "n={n} k={k}");
            assert_eq!(r.fiber_dimension, n, "n={n} k={k}");
            assert!(!r.finite);
            assert!(r.veronese_exception, "n={n} k={k}");
        }
    }

    #[test]
    fn analyze_order_zero_is_the_embedding() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let r = analyze(&a, 0, EnumerationMode::Full, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.q, 1);
        let mut expected: Vec<LatticePoint> = a.points().to_vec();
        expected.sort();
        assert_eq!(r.b_k, expected);
        assert_eq!(r.fiber_dimension, 0);
        assert!(r.finite);
    }

    #[test]
    fn classify_doubled_square_is_finite_and_birational() {
        let config = crate::families::grid_box(&[2, 2]);
        let c = classify(&config, 2, DEFAULT_BUDGET).unwrap();
        assert!(c.smooth);
        assert!(c.kjet_spanned);
        assert!(!c.veronese);
        assert!(c.finite);
        assert!(c.birational);
    }

    #[test]
    fn classify_quadrilateral_surface_is_singular_and_infinite() {
        let a = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let c = classify(&a, 2, DEFAULT_BUDGET).unwrap();
        assert!(!c.smooth);
        assert!(!c.finite);
        assert!(!c.veronese);
    }

    #[test]
    fn classify_dilated_simplex_is_the_exception() {
        let config = crate::families::dilated_simplex(2, 3);
        let c = classify(&config, 3, DEFAULT_BUDGET).unwrap();
        assert!(c.veronese);
        assert!(!c.finite);
        assert!(c.smooth);
        assert!(c.kjet_spanned);
    }

    #[test]
    fn tiny_budget_is_enforced() {
        let config = crate::families::grid_box(&[2, 2]);
        assert!(matches!(
            compute_bk(&config, 2, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exchange_and_full_mode_agree_on_small_fixtures() {
        let fixtures: Vec<(PointConfiguration, u32)> = vec![
            (cfg(&[&[0], &[1], &[2]]), 1),
            (cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 1),
            (crate::families::grid_box(&[2, 2]), 2),
            (crate::families::pn_family(2, 3), 2),
            (crate::families::hexagon(), 2),
        ];
        for (config, k) in fixtures {
            let full = analyze(&config, k, EnumerationMode::Full, DEFAULT_BUDGET).unwrap();
            let walk = analyze(&config, k, EnumerationMode::Exchange, DEFAULT_BUDGET).unwrap();
            assert_eq!(full.span_rank, walk.span_rank);
            assert_eq!(full.fiber_dimension, walk.fiber_dimension);
            assert_eq!(full.span_is_full_lattice, walk.span_is_full_lattice);
            assert_eq!(full.projection, walk.projection);
        }
    }
}

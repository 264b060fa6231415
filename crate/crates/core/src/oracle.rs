//! Brute-force reference implementations used to validate the optimized
//! enumeration paths. Everything here is deliberately written without
//! pruning and with determinant code independent of the Bareiss route in
//! [`crate::matrix`] (cofactor expansion for small sizes, rational Gaussian
//! elimination above), so that a bug in the main path cannot hide behind a
//! correlated bug here. Only the `IntMatrix` container is shared.

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::{self, EnumerationMode};
use crate::lattice::{self, Sublattice};
use crate::matrix::IntMatrix;
use crate::point::{LatticePoint, PointConfiguration};

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_cofactor(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(det_cofactor_inner(m))
}

fn det_cofactor_inner(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m.entry(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m.entry(0, j).is_zero() {
            continue;
        }
        let minor_entries: Vec<BigInt> = (1..n)
            .flat_map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(move |c| m.entry(r, c).clone())
            })
            .collect();
        let minor = IntMatrix::new(n - 1, n - 1, minor_entries);
        let term = m.entry(0, j) * det_cofactor_inner(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Determinant by Gaussian elimination over exact rationals.
fn det_rational(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<BigRational> = (0..n)
        .flat_map(|r| (0..n).map(move |c| BigRational::from(m.entry(r, c).clone())))
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != col {
            for c in 0..n {
                a.swap(col * n + c, pivot_row * n + c);
            }
            det = -det;
        }
        let pivot = a[col * n + col].clone();
        det *= pivot.clone();
        for r in col + 1..n {
            if a[r * n + col].is_zero() {
                continue;
            }
            let f = a[r * n + col].clone() / pivot.clone();
            for c in col..n {
                let v = a[r * n + c].clone() - f.clone() * a[col * n + c].clone();
                a[r * n + c] = v;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

fn oracle_det(m: &IntMatrix) -> BigInt {
    if m.rows() <= 7 {
        det_cofactor_inner(m)
    } else {
        det_rational(m)
    }
}

/// Jet entry written independently of the jets module: the product over
/// coordinates of u (u-1) ... (u-a+1).
fn oracle_jet_entry(point: &LatticePoint, alpha: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    for (u, &a) in point.coords().iter().zip(alpha) {
        for j in 0..a {
            acc *= u - BigInt::from(j);
        }
    }
    acc
}

fn oracle_multi_indices(n: usize, k: u32) -> Vec<Vec<u32>> {
    // plain product enumeration filtered by total order, then graded sort;
    // only the row SET matters for determinants up to sign
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            if prefix.iter().sum::<u32>() <= k {
                out.push(prefix);
            }
            continue;
        }
        for v in 0..=k {
            let mut next = prefix.clone();
            next.push(v);
            stack.push(next);
        }
    }
    out.sort_by_key(|m| (m.iter().sum::<u32>(), m.iter().map(|&v| -(v as i64)).collect::<Vec<_>>()));
    out
}

/// B_k by plain exhaustive iteration over all q-subsets, zero pruning.
/// Errors with BudgetExceeded when C(|A|, q) is larger than `budget`, and
/// with NotGenericallySpanned when no subset at all is nonsingular.
pub fn brute_force_bk(
    cfg: &PointConfiguration,
    k: u32,
    budget: u64,
) -> Result<Vec<LatticePoint>> {
    let n = cfg.ambient_rank();
    let indices = oracle_multi_indices(n.max(1), k);
    let q = indices.len();
    let count = gauss::subset_count(cfg.len(), q);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { budget });
    }
    let mut sums: BTreeSet<LatticePoint> = BTreeSet::new();
    for subset in (0..cfg.len()).combinations(q) {
        let entries: Vec<BigInt> = indices
            .iter()
            .flat_map(|alpha| {
                subset
                    .iter()
                    .map(|&i| oracle_jet_entry(&cfg.points()[i], alpha))
            })
            .collect();
        let minor = IntMatrix::new(q, q, entries);
        if !oracle_det(&minor).is_zero() {
            let mut acc = LatticePoint::origin(n);
            for &i in &subset {
                acc = acc.add(&cfg.points()[i]);
            }
            sums.insert(acc);
        }
    }
    if sums.is_empty() {
        return Err(Error::NotGenericallySpanned {
            order: k,
            rank: 0,
            required: q,
        });
    }
    Ok(sums.into_iter().collect())
}

/// Agreement report between the oracle, the pruned full enumeration and
/// the exchange walk. Timings are diagnostic only.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub order: u32,
    pub q: usize,
    pub subsets_examined: u128,
    pub b_k_size: usize,
    pub full_matches_oracle: bool,
    pub exchange_lattice_matches: bool,
    pub oracle_micros: u128,
    pub full_micros: u128,
    pub exchange_micros: u128,
}

/// Runs all three paths and verifies: the pruned enumeration returns
/// exactly the oracle's B_k, and all three saturated difference lattices
/// coincide. Any disagreement is an error carrying the first differing
/// element.
pub fn cross_check(cfg: &PointConfiguration, k: u32, budget: u64) -> Result<CrossCheck> {
    let n = cfg.ambient_rank();

    let t0 = Instant::now();
    let oracle_bk = brute_force_bk(cfg, k, budget)?;
    let oracle_micros = t0.elapsed().as_micros();

    let t1 = Instant::now();
    let fast_bk = gauss::compute_bk(cfg, k, budget)?;
    let full_micros = t1.elapsed().as_micros();

    if oracle_bk != fast_bk {
        let first = oracle_bk
            .iter()
            .find(|p| !fast_bk.contains(p))
            .or_else(|| fast_bk.iter().find(|p| !oracle_bk.contains(p)))
            .expect("unequal sets differ somewhere");
        return Err(Error::Mismatch(format!(
            "pruned enumeration disagrees with the oracle at {first:?} \
             (oracle size {}, pruned size {})",
            oracle_bk.len(),
            fast_bk.len()
        )));
    }

    let difference_lattice = |points: &[LatticePoint]| -> Sublattice {
        if points.len() < 2 {
            return lattice::saturate(&IntMatrix::empty(n), n);
        }
        let rows: Vec<Vec<BigInt>> = points[1..]
            .iter()
            .map(|p| p.sub(&points[0]).coords().to_vec())
            .collect();
        lattice::saturate(&IntMatrix::from_rows(rows), n)
    };

    let oracle_span = difference_lattice(&oracle_bk);

    let t2 = Instant::now();
    let exchange = gauss::span_generators_exchange(cfg, k, budget)?;
    let exchange_micros = t2.elapsed().as_micros();
    let exchange_span = lattice::saturate(&exchange, n);

    if exchange_span != oracle_span {
        return Err(Error::Mismatch(format!(
            "exchange-walk lattice (rank {}) disagrees with the oracle lattice (rank {})",
            exchange_span.rank(),
            oracle_span.rank()
        )));
    }

    // the full-mode report derives its lattice from the same set, but keep
    // the three-way agreement explicit
    let full_report = gauss::analyze(cfg, k, EnumerationMode::Full, budget)?;
    if difference_lattice(&full_report.b_k) != oracle_span {
        return Err(Error::Mismatch(
            "full-mode lattice disagrees with the oracle lattice".to_string(),
        ));
    }

    Ok(CrossCheck {
        order: k,
        q: full_report.q,
        subsets_examined: gauss::subset_count(cfg.len(), full_report.q),
        b_k_size: oracle_bk.len(),
        full_matches_oracle: true,
        exchange_lattice_matches: true,
        oracle_micros,
        full_micros,
        exchange_micros,
    })
}

//! Exact lattice polytope machinery: incremental convex hulls at small
//! dimension, lattice point enumeration, edge extraction from the facet
//! lattice, the unimodular vertex-cone smoothness test, the edge criterion
//! for k-jet spannedness and detection of dilated standard simplices.
//!
//! Everything is computed over the integers; there is no floating-point
//! prefilter. The hull is an incremental beneath-beyond construction that
//! keeps full point-incidence sets per facet, which makes degenerate
//! (many-coplanar-point) inputs exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};
use crate::point::{AffineReduction, LatticePoint, PointConfiguration};

/// A supporting halfspace `normal . x <= offset` with primitive normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

/// A full-dimensional lattice polytope with V-representation,
/// H-representation and edge graph, all exact.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    edges: Vec<(usize, usize)>,
    reduction: Option<AffineReduction>,
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme points, lexicographically sorted.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Edges as pairs of indices into `vertices()`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_endpoints(&self, e: usize) -> (&LatticePoint, &LatticePoint) {
        let (a, b) = self.edges[e];
        (&self.vertices[a], &self.vertices[b])
    }

    /// Set when the input was not full-dimensional and was re-expressed in
    /// a lattice basis of its affine span.
    pub fn reduction(&self) -> Option<&AffineReduction> {
        self.reduction.as_ref()
    }

    pub fn contains(&self, point: &LatticePoint) -> bool {
        self.facets.iter().all(|f| {
            let v: BigInt = f
                .normal
                .iter()
                .zip(point.coords())
                .map(|(a, b)| a * b)
                .sum();
            v <= f.offset
        })
    }
}

/// Convex hull of a configuration. Input whose affine span is a proper
/// subspace is re-expressed in a lattice basis of the span (recorded on the
/// result); use [`convex_hull_strict`] to reject such input instead.
pub fn convex_hull(cfg: &PointConfiguration) -> Result<Polytope> {
    if cfg.is_full_dimensional() && cfg.ambient_rank() > 0 {
        return hull_full_dim(cfg, None);
    }
    let (reduced, reduction) = cfg.reduce_to_affine_span();
    if reduced.ambient_rank() == 0 {
        return Err(Error::NotFullDimensional {
            ambient: cfg.ambient_rank(),
            found: 0,
        });
    }
    hull_full_dim(&reduced, Some(reduction))
}

/// Convex hull that rejects non-full-dimensional input.
pub fn convex_hull_strict(cfg: &PointConfiguration) -> Result<Polytope> {
    if !cfg.is_full_dimensional() || cfg.ambient_rank() == 0 {
        return Err(Error::NotFullDimensional {
            ambient: cfg.ambient_rank(),
            found: cfg.affine_rank(),
        });
    }
    hull_full_dim(cfg, None)
}

struct FacetBuild {
    normal: Vec<BigInt>,
    offset: BigInt,
    incident: BTreeSet<usize>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>, offset: BigInt) -> (Vec<BigInt>, BigInt) {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return (v, offset);
    }
    // supporting hyperplanes through lattice points have offsets divisible
    // by the normal's content
    debug_assert!((&offset % &g).is_zero());
    for c in &mut v {
        *c /= &g;
    }
    (v, offset / g)
}

/// Normal of the hyperplane through d affinely independent points in Z^d,
/// via the generalized cross product of the difference vectors (cofactor
/// expansion). Sign is arbitrary; callers orient it afterwards.
fn hyperplane_normal(points: &[&LatticePoint], dim: usize) -> Vec<BigInt> {
    debug_assert_eq!(points.len(), dim);
    let base = points[0];
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.sub(base).coords().to_vec())
        .collect();
    let mut normal = Vec::with_capacity(dim);
    for j in 0..dim {
        let minor_rows: Vec<BigInt> = diffs
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
            })
            .collect();
        let minor = IntMatrix::new(dim - 1, dim - 1, minor_rows);
        let d = matrix::det_exact(&minor).expect("minor is square");
        normal.push(if j % 2 == 0 { d } else { -d });
    }
    normal
}

fn affine_dim(points: &[&LatticePoint], ambient: usize) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let base = points[0];
    let rows: Vec<BigInt> = points[1..]
        .iter()
        .flat_map(|p| p.sub(base).coords().to_vec())
        .collect();
    matrix::rank_exact(&IntMatrix::new(points.len() - 1, ambient, rows))
}

fn hull_full_dim(cfg: &PointConfiguration, reduction: Option<AffineReduction>) -> Result<Polytope> {
    let dim = cfg.ambient_rank();
    let points = cfg.points();
    debug_assert!(cfg.is_full_dimensional() && dim >= 1);

    // initial simplex: greedily grow an affinely independent subset
    let mut simplex = vec![0usize];
    for i in 1..points.len() {
        if simplex.len() == dim + 1 {
            break;
        }
        let mut trial: Vec<&LatticePoint> = simplex.iter().map(|&j| &points[j]).collect();
        trial.push(&points[i]);
        if affine_dim(&trial, dim) == trial.len() - 1 {
            simplex.push(i);
        }
    }
    debug_assert_eq!(simplex.len(), dim + 1, "input is full-dimensional");

    let mut facets: Vec<FacetBuild> = Vec::new();
    for leave_out in 0..dim + 1 {
        let face: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != leave_out)
            .map(|(_, &i)| i)
            .collect();
        let face_points: Vec<&LatticePoint> = face.iter().map(|&i| &points[i]).collect();
        let mut normal = hyperplane_normal(&face_points, dim);
        let mut offset = dot(&normal, face_points[0].coords());
        let apex = &points[simplex[leave_out]];
        let apex_val = dot(&normal, apex.coords());
        debug_assert_ne!(apex_val, offset, "simplex is nondegenerate");
        if apex_val > offset {
            for c in &mut normal {
                *c = -c.clone();
            }
            offset = -offset;
        }
        let (normal, offset) = primitive(normal, offset);
        let incident: BTreeSet<usize> = simplex
            .iter()
            .copied()
            .filter(|&i| dot(&normal, points[i].coords()) == offset)
            .collect();
        facets.push(FacetBuild {
            normal,
            offset,
            incident,
        });
    }

    let mut active: Vec<usize> = simplex.clone();

    for ip in 0..points.len() {
        if simplex.contains(&ip) {
            continue;
        }
        let p = &points[ip];
        let values: Vec<BigInt> = facets
            .iter()
            .map(|f| dot(&f.normal, p.coords()) - &f.offset)
            .collect();
        if values.iter().all(|v| !v.is_positive()) {
            // inside or on the boundary
            for (f, v) in facets.iter_mut().zip(&values) {
                if v.is_zero() {
                    f.incident.insert(ip);
                }
            }
            active.push(ip);
            continue;
        }

        let visible: Vec<usize> = (0..facets.len())
            .filter(|&f| values[f].is_positive())
            .collect();
        let invisible: Vec<usize> = (0..facets.len())
            .filter(|&f| values[f].is_negative())
            .collect();
        debug_assert!(!invisible.is_empty(), "a bounded hull always has a far side");

        // cone facets over horizon ridges between visible and invisible
        let mut new_facets: Vec<FacetBuild> = Vec::new();
        let mut seen: BTreeSet<(Vec<BigInt>, BigInt)> = facets
            .iter()
            .enumerate()
            .filter(|&(f, _)| !values[f].is_positive())
            .map(|(_, f)| (f.normal.clone(), f.offset.clone()))
            .collect();
        for &fv in &visible {
            for &fi in &invisible {
                let ridge: Vec<usize> = facets[fv]
                    .incident
                    .intersection(&facets[fi].incident)
                    .copied()
                    .collect();
                let ridge_points: Vec<&LatticePoint> =
                    ridge.iter().map(|&i| &points[i]).collect();
                // a horizon ridge is a (dim-2)-face; in dimension 1 it is
                // the empty face between the two endpoint facets
                let is_ridge = if dim >= 2 {
                    ridge.len() + 1 >= dim && affine_dim(&ridge_points, dim) + 2 == dim
                } else {
                    ridge.is_empty()
                };
                if !is_ridge {
                    continue;
                }
                // d-1 affinely independent ridge points plus p span the wall
                let mut span: Vec<&LatticePoint> = Vec::with_capacity(dim);
                for rp in &ridge_points {
                    let mut trial = span.clone();
                    trial.push(rp);
                    if affine_dim(&trial, dim) == trial.len() - 1 {
                        span.push(rp);
                    }
                    if span.len() + 1 == dim {
                        break;
                    }
                }
                span.push(p);
                let mut normal = hyperplane_normal(&span, dim);
                let mut offset = dot(&normal, p.coords());
                // orient against the far side
                let mut flip = false;
                for &i in &facets[fi].incident {
                    let v = dot(&normal, points[i].coords());
                    if v != offset {
                        flip = v > offset;
                        break;
                    }
                }
                if flip {
                    for c in &mut normal {
                        *c = -c.clone();
                    }
                    offset = -offset;
                }
                let (normal, offset) = primitive(normal, offset);
                if !seen.insert((normal.clone(), offset.clone())) {
                    continue;
                }
                debug_assert!(
                    active
                        .iter()
                        .all(|&i| dot(&normal, points[i].coords()) <= offset),
                    "cone facet must support the extended hull"
                );
                let mut incident: BTreeSet<usize> = active
                    .iter()
                    .copied()
                    .filter(|&i| dot(&normal, points[i].coords()) == offset)
                    .collect();
                incident.insert(ip);
                new_facets.push(FacetBuild {
                    normal,
                    offset,
                    incident,
                });
            }
        }

        let mut kept: Vec<FacetBuild> = Vec::new();
        for (f, facet) in std::mem::take(&mut facets).into_iter().enumerate() {
            if values[f].is_positive() {
                continue;
            }
            let mut facet = facet;
            if values[f].is_zero() {
                facet.incident.insert(ip);
            }
            kept.push(facet);
        }
        kept.extend(new_facets);
        facets = kept;
        active.push(ip);
    }

    // vertices: points whose active facet normals span the whole space
    let normal_rank = |normals: Vec<Vec<BigInt>>| -> usize {
        if normals.is_empty() {
            0
        } else {
            matrix::rank_exact(&IntMatrix::from_rows(normals))
        }
    };

    let mut vertex_indices: Vec<usize> = active
        .iter()
        .copied()
        .filter(|&i| {
            let normals: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.incident.contains(&i))
                .map(|f| f.normal.clone())
                .collect();
            normal_rank(normals) == dim
        })
        .collect();
    vertex_indices.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let vertices: Vec<LatticePoint> = vertex_indices.iter().map(|&i| points[i].clone()).collect();

    // edges: vertex pairs whose common facets cut out a 1-dimensional face
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..vertex_indices.len() {
        for b in a + 1..vertex_indices.len() {
            let (ia, ib) = (vertex_indices[a], vertex_indices[b]);
            let common: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.incident.contains(&ia) && f.incident.contains(&ib))
                .map(|f| f.normal.clone())
                .collect();
            if normal_rank(common) + 1 == dim {
                edges.push((a, b));
            }
        }
    }

    Ok(Polytope {
        dim,
        vertices,
        facets: facets
            .into_iter()
            .map(|f| Facet {
                normal: f.normal,
                offset: f.offset,
            })
            .collect(),
        edges,
        reduction,
    })
}

/// All lattice points of the polytope, in lexicographic order, enumerated
/// by a bounding-box scan with facet-inequality membership tests.
pub fn lattice_points(p: &Polytope) -> PointConfiguration {
    let dim = p.dim;
    let mut lo = p.vertices[0].coords().to_vec();
    let mut hi = lo.clone();
    for v in &p.vertices {
        for (c, coord) in v.coords().iter().enumerate() {
            if coord < &lo[c] {
                lo[c] = coord.clone();
            }
            if coord > &hi[c] {
                hi[c] = coord.clone();
            }
        }
    }
    let mut found = Vec::new();
    let mut counter = lo.clone();
    'scan: loop {
        let candidate = LatticePoint::new(counter.clone());
        if p.contains(&candidate) {
            found.push(candidate);
        }
        // odometer increment on the least significant coordinate; scanning
        // most-significant-first keeps the output lexicographically sorted
        let mut pos = dim;
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            counter[pos] += 1;
            if counter[pos] <= hi[pos] {
                break;
            }
            counter[pos] = lo[pos].clone();
        }
    }
    PointConfiguration::new(dim, found).expect("lattice points are well formed")
}

/// Lattice length of edge `e`: the number of lattice points on it minus
/// one, i.e. the gcd of the coordinate differences of its endpoints.
pub fn edge_lattice_length(p: &Polytope, e: usize) -> BigInt {
    let (a, b) = p.edge_endpoints(e);
    let mut g = BigInt::zero();
    for d in b.sub(a).coords() {
        g = g.gcd(d);
    }
    g
}

/// Smoothness of the polytope: at every vertex there are exactly dim edges
/// and their primitive direction vectors form a basis of the lattice
/// (determinant +-1). For the polytope of a polarized toric variety this is
/// smoothness of the variety.
pub fn is_smooth(p: &Polytope) -> bool {
    let dim = p.dim;
    for v in 0..p.vertices.len() {
        let mut dirs: Vec<Vec<BigInt>> = Vec::new();
        for &(a, b) in &p.edges {
            let (from, to) = if a == v {
                (a, b)
            } else if b == v {
                (b, a)
            } else {
                continue;
            };
            let d = p.vertices[to].sub(&p.vertices[from]);
            let mut g = BigInt::zero();
            for c in d.coords() {
                g = g.gcd(c);
            }
            dirs.push(d.coords().iter().map(|c| c / &g).collect());
        }
        if dirs.len() != dim {
            return false;
        }
        let det = matrix::det_exact(&IntMatrix::from_rows(dirs)).expect("square by construction");
        if !det.abs().is_one() {
            return false;
        }
    }
    true
}

/// The edge criterion: a smooth polytope is the polytope of a k-jet spanned
/// embedding iff every edge has lattice length at least k. The criterion
/// characterizes spannedness only for smooth polytopes, hence the
/// precondition.
pub fn edge_criterion_kjet(p: &Polytope, k: u32) -> Result<bool> {
    if !is_smooth(p) {
        return Err(Error::NotSmooth);
    }
    let k = BigInt::from(k);
    Ok((0..p.edges.len()).all(|e| edge_lattice_length(p, e) >= k))
}

/// Whether the polytope is affinely unimodularly equivalent to the k-th
/// dilation of the standard simplex: a smooth simplex all of whose edges
/// have lattice length exactly k.
pub fn is_k_veronese(p: &Polytope, k: u32) -> bool {
    if p.vertices.len() != p.dim + 1 {
        return false;
    }
    if !is_smooth(p) {
        return false;
    }
    let k = BigInt::from(k);
    (0..p.edges.len()).all(|e| edge_lattice_length(p, e) == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::from_rows(rows[0].len(), rows)
    }

    fn vset(p: &Polytope) -> Vec<Vec<i64>> {
        p.vertices()
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|c| i64::try_from(c.clone()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hull_of_unit_square() {
        let p = convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.edges().len(), 4);
    }

    #[test]
    fn hull_of_dilated_triangle() {
        let p =
            convex_hull(&cfg(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(vset(&p), vec![vec![0, 0], vec![0, 2], vec![2, 0]]);
        assert_eq!(p.edges().len(), 3);
    }

    #[test]
    fn hull_of_quadrilateral_surface_configuration() {
        let p =
            convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]])).unwrap();
        assert_eq!(vset(&p), vec![vec![0, 0], vec![0, 1], vec![1, 2], vec![2, 0]]);
    }

    /// Caratheodory-style membership oracle over exact rationals: v lies in
    /// the hull of `points` iff some (dim+1)-subset contains it with
    /// nonnegative barycentric coordinates.
    fn in_convex_hull(v: &LatticePoint, points: &[&LatticePoint]) -> bool {
        use itertools::Itertools;
        use num_rational::BigRational;
        let dim = v.dim();
        let size = (dim + 1).min(points.len());
        for subset in points.iter().combinations(size) {
            let m = subset.len();
            let mut a: Vec<Vec<BigRational>> = Vec::new();
            for r in 0..dim {
                a.push(
                    subset
                        .iter()
                        .map(|p| BigRational::from(p.coords()[r].clone()))
                        .chain([BigRational::from(v.coords()[r].clone())])
                        .collect(),
                );
            }
            a.push(vec![BigRational::one(); m + 1]);
            let rows = a.len();
            let mut rank = 0;
            let mut pivots = Vec::new();
            for col in 0..m {
                let Some(pr) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                    continue;
                };
                a.swap(rank, pr);
                let pivot = a[rank][col].clone();
                let pivot_row = a[rank].clone();
                for (r, row) in a.iter_mut().enumerate() {
                    if r != rank && !row[col].is_zero() {
                        let f = row[col].clone() / pivot.clone();
                        for (v, pv) in row.iter_mut().zip(&pivot_row) {
                            *v -= f.clone() * pv.clone();
                        }
                    }
                }
                pivots.push((rank, col));
                rank += 1;
            }
            if (rank..rows).any(|r| !a[r][m].is_zero()) {
                continue;
            }
            if rank < m {
                continue; // underdetermined; a smaller subset will catch it
            }
            let feasible = pivots.iter().all(|&(r, c)| {
                a[r][m].clone() / a[r][c].clone() >= BigRational::zero()
            });
            if feasible {
                return true;
            }
        }
        false
    }

    #[test]
    fn hull_vertices_match_caratheodory_oracle() {
        let configs = [
            cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]),
            cfg(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0], &[0, 1], &[2, 2]]),
            cfg(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        ];
        for c in &configs {
            let p = convex_hull(c).unwrap();
            let hull_vertices: BTreeSet<LatticePoint> = p.vertices().iter().cloned().collect();
            for v in c.iter() {
                let others: Vec<&LatticePoint> = c.iter().filter(|w| *w != v).collect();
                let extreme = !in_convex_hull(v, &others);
                assert_eq!(
                    hull_vertices.contains(v),
                    extreme,
                    "vertex disagreement at {v:?}"
                );
            }
        }
    }

    #[test]
    fn lattice_point_counts() {
        let two_delta = convex_hull(&cfg(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert_eq!(lattice_points(&two_delta).len(), 6);

        let square = convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(lattice_points(&square).len(), 4);
    }

    #[test]
    fn lattice_points_contain_generating_configuration() {
        let c = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let p = convex_hull(&c).unwrap();
        let pts: BTreeSet<LatticePoint> = lattice_points(&p).iter().cloned().collect();
        for v in c.iter() {
            assert!(pts.contains(v));
        }
    }

    #[test]
    fn edge_lengths_are_gcds() {
        let p = convex_hull(&cfg(&[&[0, 0], &[2, 0], &[2, 4]])).unwrap();
        let mut lengths: Vec<i64> = (0..p.edges().len())
            .map(|e| i64::try_from(edge_lattice_length(&p, e)).unwrap())
            .collect();
        lengths.sort();
        // (0,0)-(2,0): 2, (2,0)-(2,4): 4, (0,0)-(2,4): gcd(2,4) = 2
        assert_eq!(lengths, vec![2, 2, 4]);
    }

    #[test]
    fn smoothness_of_standard_examples() {
        let square = convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(is_smooth(&square));

        for k in 1..=3i64 {
            let simplex = convex_hull(&cfg(&[&[0, 0], &[k, 0], &[0, k]])).unwrap();
            assert!(is_smooth(&simplex));
        }

        // vertex (2,0) has edge directions (-1,0) and (-1,2): determinant -2
        let quad = convex_hull(&cfg(&[&[0, 0], &[2, 0], &[1, 2], &[0, 1]])).unwrap();
        assert!(!is_smooth(&quad));
    }

    #[test]
    fn edge_criterion_examples() {
        let two_delta = convex_hull(&cfg(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert!(edge_criterion_kjet(&two_delta, 2).unwrap());

        let square = convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(!edge_criterion_kjet(&square, 2).unwrap());

        let hexagon = convex_hull(&cfg(&[
            &[1, 0],
            &[-1, 0],
            &[0, 1],
            &[0, -1],
            &[1, -1],
            &[-1, 1],
        ]))
        .unwrap();
        assert!(!edge_criterion_kjet(&hexagon, 2).unwrap());

        let quad = convex_hull(&cfg(&[&[0, 0], &[2, 0], &[1, 2], &[0, 1]])).unwrap();
        assert!(matches!(edge_criterion_kjet(&quad, 2), Err(Error::NotSmooth)));
    }

    #[test]
    fn veronese_detection() {
        let three_delta = convex_hull(&cfg(&[&[0, 0], &[3, 0], &[0, 3]])).unwrap();
        assert!(is_k_veronese(&three_delta, 3));
        assert!(!is_k_veronese(&three_delta, 2));

        // vertex cone at (3,0) spanned by (-1,0) and (-2,3): determinant -3
        let skew = convex_hull(&cfg(&[&[0, 0], &[3, 0], &[1, 3]])).unwrap();
        assert!(!is_k_veronese(&skew, 3));

        let square = convex_hull(&cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(!is_k_veronese(&square, 1));
    }

    #[test]
    fn hull_postconditions_hold() {
        let c = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]]);
        let p = convex_hull(&c).unwrap();
        for point in c.iter() {
            assert!(p.contains(point));
        }
        for v in p.vertices() {
            let active = p
                .facets()
                .iter()
                .filter(|f| dot(&f.normal, v.coords()) == f.offset)
                .count();
            assert!(active >= p.dim());
        }
        for f in p.facets() {
            let mut g = BigInt::zero();
            for c in &f.normal {
                g = g.gcd(c);
            }
            assert!(g.is_one(), "facet normals are primitive");
        }
    }

    #[test]
    fn three_dimensional_cube() {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    rows.push(vec![x, y, z]);
                }
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let p = convex_hull(&cfg(&refs)).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
        assert_eq!(p.edges().len(), 12);
        assert!(is_smooth(&p));
        assert_eq!(lattice_points(&p).len(), 8);
    }

    #[test]
    fn segment_in_one_dimension() {
        let p = convex_hull(&cfg(&[&[0], &[3], &[1]])).unwrap();
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.edges().len(), 1);
        assert_eq!(edge_lattice_length(&p, 0), BigInt::from(3));
        assert!(is_smooth(&p));
    }

    #[test]
    fn degenerate_input_is_reduced_by_default() {
        let c = cfg(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3]]);
        let p = convex_hull(&c).unwrap();
        assert_eq!(p.dim(), 1);
        assert!(p.reduction().is_some());
        assert_eq!(edge_lattice_length(&p, 0), BigInt::from(3));
        assert!(matches!(
            convex_hull_strict(&c),
            Err(Error::NotFullDimensional { .. })
        ));
    }
}

//! Bundled example families: dilated simplices, grid boxes, the hexagon of
//! the sixth del Pezzo surface, trapezoids and corner-cut simplices, prisms,
//! and the two-parameter singular family with positive-dimensional
//! order-two Gauss fibers. Configurations are produced as the full lattice
//! point sets of their polytopes, through the hull pipeline itself.

use crate::point::{LatticePoint, PointConfiguration};
use crate::polytope;

fn points_of_vertices(ambient: usize, vertices: Vec<Vec<i64>>) -> PointConfiguration {
    let cfg = PointConfiguration::new(
        ambient,
        vertices.into_iter().map(|v| LatticePoint::new(
            v.into_iter().map(Into::into).collect(),
        )).collect(),
    )
    .expect("family vertices are well formed");
    let hull = polytope::convex_hull(&cfg).expect("family polytopes are full-dimensional");
    polytope::lattice_points(&hull)
}

/// All lattice points of the k-fold dilation of the standard n-simplex,
/// the polytope of n-dimensional projective space embedded in degree k.
pub fn dilated_simplex(n: usize, k: u32) -> PointConfiguration {
    let mut vertices = vec![vec![0i64; n]];
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = k as i64;
        vertices.push(v);
    }
    points_of_vertices(n, vertices)
}

/// All lattice points of the box [0, dims_1] x ... x [0, dims_m], the
/// polytope of a product of projective lines with multidegree dims.
pub fn grid_box(dims: &[u32]) -> PointConfiguration {
    let n = dims.len();
    let mut vertices = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        vertices.push(
            (0..n)
                .map(|i| if mask & (1 << i) != 0 { dims[i] as i64 } else { 0 })
                .collect(),
        );
    }
    points_of_vertices(n, vertices)
}

/// The reflexive hexagon (sixth del Pezzo surface) dilated by `k`:
/// conv(+-(k,0), +-(0,k), (k,-k), (-k,k)). Smooth, all edges of lattice
/// length k.
pub fn hexagon_dilated(k: u32) -> PointConfiguration {
    let k = k as i64;
    points_of_vertices(
        2,
        vec![
            vec![k, 0],
            vec![-k, 0],
            vec![0, k],
            vec![0, -k],
            vec![k, -k],
            vec![-k, k],
        ],
    )
}

/// The seven lattice points of the unit hexagon.
pub fn hexagon() -> PointConfiguration {
    hexagon_dilated(1)
}

/// Trapezoid conv((0,0),(2k,0),(k,k),(0,k)): a Hirzebruch surface polytope
/// scaled by k, with edge lengths 2k, k, k, k.
pub fn trapezoid(k: u32) -> PointConfiguration {
    let k = k as i64;
    points_of_vertices(2, vec![vec![0, 0], vec![2 * k, 0], vec![k, k], vec![0, k]])
}

/// The 2k-dilated triangle with one corner cut at depth k:
/// conv((0,0),(k,0),(k,k),(0,2k)), smooth with edge lengths k, k, k, 2k.
pub fn corner_cut_simplex(k: u32) -> PointConfiguration {
    let k = k as i64;
    points_of_vertices(2, vec![vec![0, 0], vec![k, 0], vec![k, k], vec![0, 2 * k]])
}

/// Prism over the k-dilated triangle: conv(k simplex in the first two
/// coordinates) x [0, k].
pub fn simplex_prism(k: u32) -> PointConfiguration {
    let k = k as i64;
    let mut vertices = Vec::new();
    for z in [0, k] {
        vertices.push(vec![0, 0, z]);
        vertices.push(vec![k, 0, z]);
        vertices.push(vec![0, k, z]);
    }
    points_of_vertices(3, vertices)
}

/// The singular n-dimensional family with parameter N >= 2: the lattice
/// points of conv(0, e1 + N e2, 2 e1, e2, {e2 + ej, 2 ej for 2 < j <= n}).
/// The point count is C(n+2, 2) + N - 2: all monomials of degree at most 2
/// except 2 e2, together with e1 + m e2 for 0 <= m <= N. Generically 2-jet
/// spanned for every N >= 2, with order-two Gauss fibers of dimension n
/// when N = 2 and n - 1 for larger N.
pub fn pn_family(n: usize, big_n: u32) -> PointConfiguration {
    assert!(n >= 2, "the family needs dimension at least 2");
    assert!(big_n >= 2, "the family needs parameter at least 2");
    let mut vertices: Vec<Vec<i64>> = Vec::new();
    let e = |i: usize| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    vertices.push(vec![0; n]);
    let mut v = e(0);
    v[1] = big_n as i64;
    vertices.push(v);
    let mut v = e(0);
    v[0] = 2;
    vertices.push(v);
    vertices.push(e(1));
    for j in 2..n {
        let mut v = e(1);
        v[j] = 1;
        vertices.push(v);
        let mut v = e(j);
        v[j] = 2;
        vertices.push(v);
    }
    points_of_vertices(n, vertices)
}

/// The generically 2-jet spanned singular surface whose order-two Gauss map
/// contracts everything: the six lattice points of the quadrilateral
/// conv((0,0),(2,0),(1,2),(0,1)), i.e. exponents of 1, x, y, xy, x^2, xy^2.
pub fn contracted_quadrilateral() -> PointConfiguration {
    pn_family(2, 2)
}

/// Named corpus of smooth polytope configurations with all edge lengths at
/// least k and not a dilated unimodular simplex, paired with the order k
/// they are built for.
pub fn smooth_corpus() -> Vec<(String, PointConfiguration, u32)> {
    let mut corpus: Vec<(String, PointConfiguration, u32)> = Vec::new();
    for k in 1..=2u32 {
        corpus.push((format!("square-{k}"), grid_box(&[k, k]), k));
        corpus.push((format!("rect-{k}x{}", 2 * k), grid_box(&[k, 2 * k]), k));
        corpus.push((format!("trapezoid-{k}"), trapezoid(k), k));
        corpus.push((format!("corner-cut-{k}"), corner_cut_simplex(k), k));
        corpus.push((format!("hexagon-{k}"), hexagon_dilated(k), k));
    }
    corpus.push(("cube-1".to_string(), grid_box(&[1, 1, 1]), 1));
    corpus.push(("prism-1".to_string(), simplex_prism(1), 1));
    corpus.push(("prism-2".to_string(), simplex_prism(2), 2));
    corpus.push(("square-3".to_string(), grid_box(&[3, 3]), 3));
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets;

    #[test]
    fn simplex_point_counts() {
        assert_eq!(dilated_simplex(2, 2).len(), 6);
        assert_eq!(dilated_simplex(3, 3).len(), 20);
        assert_eq!(dilated_simplex(1, 3).len(), 4);
    }

    #[test]
    fn family_point_counts_match_the_closed_form() {
        // |P_n^N| = C(n+2, 2) + N - 2
        for n in 2..=3usize {
            for big_n in 2..=4u32 {
                let expected = jets::binomial(n + 2, 2) + big_n as usize - 2;
                assert_eq!(
                    pn_family(n, big_n).len(),
                    expected,
                    "n={n} N={big_n}"
                );
            }
        }
    }

    #[test]
    fn quadrilateral_is_the_smallest_family_member() {
        let quad = contracted_quadrilateral();
        let direct = PointConfiguration::from_rows(
            2,
            &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 2]],
        );
        let mut a: Vec<_> = quad.points().to_vec();
        let mut b: Vec<_> = direct.points().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn family_members_are_generically_two_jet_spanned() {
        for n in 2..=3usize {
            for big_n in 2..=4u32 {
                assert!(
                    jets::is_generically_kjet_spanned(&pn_family(n, big_n), 2),
                    "n={n} N={big_n}"
                );
            }
        }
    }

    #[test]
    fn hexagon_has_seven_points() {
        assert_eq!(hexagon().len(), 7);
        assert_eq!(hexagon_dilated(2).len(), 19);
    }

    #[test]
    fn corpus_members_are_smooth_with_long_edges() {
        use num_bigint::BigInt;
        for (name, config, k) in smooth_corpus() {
            let hull = crate::polytope::convex_hull(&config).unwrap();
            assert!(crate::polytope::is_smooth(&hull), "{name}");
            for e in 0..hull.edges().len() {
                assert!(
                    crate::polytope::edge_lattice_length(&hull, e) >= BigInt::from(k),
                    "{name} edge {e}"
                );
            }
            assert!(
                !crate::polytope::is_k_veronese(&hull, k),
                "{name} must not be the dilated simplex"
            );
        }
    }
}

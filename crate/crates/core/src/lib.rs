//! Exact combinatorial analysis of higher order Gauss maps of projective
//! toric varieties.
//!
//! Given a finite set A of lattice points and an order k, this crate
//! computes, with exact integer arithmetic throughout:
//!
//! * the matrix of k-jets of the monomial parameterization and the generic
//!   osculating dimension ([`jets`]);
//! * convex hulls, lattice points, edge lattice lengths, smoothness of the
//!   associated polytope, and the edge criterion for k-jet spannedness
//!   ([`polytope`]);
//! * the lattice point set whose toric variety is the order-k osculating
//!   variety, the general fiber dimension of the order-k Gauss map, the
//!   quotient projection describing its fibers, and the
//!   finite/birational/Veronese classification ([`gauss`]);
//! * independent brute-force reference implementations used to cross-check
//!   the optimized paths ([`oracle`]).
//!
//! Supporting layers: Hermite/Smith normal forms, exact rank and
//! determinant ([`matrix`]), sublattice saturation and quotient projections
//! ([`lattice`]), bundled example families ([`families`]) and the JSON
//! document formats used by the command line tool ([`io`]).

pub mod error;
pub mod families;
pub mod gauss;
pub mod io;
pub mod jets;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod point;
pub mod polytope;

pub use error::{Error, Result};
pub use point::{LatticePoint, PointConfiguration};

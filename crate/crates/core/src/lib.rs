//! Simplicial complexes, squarefree monomial ideals and exact verification
//! of geometrically characterized (GC) interpolation node sets.
//!
//! The combinatorial side works with complexes on at most 64 vertices,
//! their Stanley–Reisner ideals and Alexander duals. The geometric side
//! specializes an ideal by linear forms to a finite set of points in `P^d`
//! and checks the GC condition exactly over the rationals.

pub mod chung_yao;
pub mod cli;
pub mod cm;
pub mod combinatorics;
pub mod error;
pub mod fixtures;
pub mod gc;
pub mod geometry;
pub mod ideal;
pub mod linalg;

pub use combinatorics::{binomial, skeleton, FVector, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use ideal::{sr_ideal, PrimeComponent, SquarefreeMonomialIdeal};

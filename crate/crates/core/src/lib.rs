//! Lattice path matroid polytopes in exact arithmetic.
//!
//! A pair of monotone lattice paths `P <= Q` from `(0,0)` to `(m,r)` bounds a
//! region of the grid. The paths staying inside that region are the bases of a
//! transversal matroid on `1..=m+r`, and the convex hull of their 0/1
//! incidence vectors is the lattice path matroid polytope. This crate builds
//! that polytope and computes its vertices, edges, facets, hyperplane-split
//! decompositions into border strips, normalized volume, Ehrhart polynomial
//! and the piecewise-linear unimodular triangulations of hypersimplices and
//! border strips.
//!
//! Every derived quantity has a brute-force counterpart in [`oracle`], which
//! shares only the parsing layer with the rest of the crate.

pub mod decompose;
pub mod ehrhart;
mod error;
pub mod lattice_path;
pub mod matroid;
pub mod oracle;
pub mod polytope;
pub mod triangulate;
pub mod volume;

pub use error::{LpmError, Result};
pub use lattice_path::{GridBox, PathWord, Region, Step};

//! Exact combinatorics of Rothe diagrams, bipartite edge cones, and
//! rigidity of toric matrix Schubert varieties.
//!
//! For a permutation π the matrix Schubert variety attached to π factors
//! as a product of a linear space and a variety Y_π whose torus action has
//! complexity |L′(π)| − Σ(mᵢ + nᵢ − 1).  When that complexity is zero, Y_π
//! is the affine toric variety of the *edge cone* of a bipartite graph G^π
//! read off the Rothe diagram, and its first-order deformation theory —
//! rigid or not — is decided by the three-dimensional faces of that cone.
//!
//! The crate is organized as a pipeline:
//!
//! * [`rothe`] — permutations, Rothe diagrams D(π), the regions NW/dom/L/L′,
//!   essential sets, L-components, hook decompositions, and the
//!   toric/complexity test;
//! * [`bigraph`] — the bipartite graph G^π of an L-component, spanning
//!   subgraphs 𝒢{A}, and the first independent sets 𝓘⁽¹⁾ that name the
//!   extremal rays;
//! * [`edgecone`] — the rays Γ(A), dual generators, faces, pairwise 2-face
//!   rules, essential-chain patterns, and the three-route rigidity
//!   classifier [`edgecone::classify`];
//! * [`polyoracle`] — an independent, general-purpose exact polyhedral
//!   oracle (dual descriptions, face lattices up to dimension 3) used to
//!   cross-check the combinatorial routes;
//! * [`fault`] — opt-in fault injection used to demonstrate that the
//!   cross-checks actually catch inconsistencies.
//!
//! All arithmetic is exact: `i64` vectors with `i128` dot products at the
//! surface and arbitrary-precision integers inside eliminations.  No
//! floating point is used anywhere.
//!
//! # Examples
//!
//! ```
//! use schubcone::edgecone::{classify, MethodSet};
//! use schubcone::rothe::Permutation;
//!
//! // The cone over the quadric surface: toric but not rigid.
//! let p = Permutation::parse("[1,3,2]").unwrap();
//! let c = classify(&p, &MethodSet::all()).unwrap();
//! assert!(c.toric);
//! assert_eq!(c.rigid, Some(false));
//! assert!(c.consistent);
//!
//! // A complete-bipartite K_{3,3} component: rigid, all three routes agree.
//! let p = Permutation::parse("[1,4,5,2,3]").unwrap();
//! let c = classify(&p, &MethodSet::all()).unwrap();
//! assert_eq!(c.rigid, Some(true));
//! ```

mod linalg;

pub mod bigraph;
pub mod edgecone;
pub mod fault;
pub mod polyoracle;
pub mod rothe;

pub use linalg::LinalgError;

pub use bigraph::{BigraphError, BipartiteGraph, IndependentSet};
pub use edgecone::{classify, classify_rigidity, Classification, EdgeConeError, MethodSet};
pub use fault::{fault_mode, set_fault_mode, FaultMode};
pub use polyoracle::{PolyError, RationalCone};
pub use rothe::{Cell, Diagram, Permutation, RotheError};

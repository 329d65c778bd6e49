//! Link homology for diagrams on thickened surfaces, over the two-element field.
//!
//! A link diagram on a compact surface `F` is modelled combinatorially: arcs
//! carry their first-homology class in `H_1(F; F_2)` (an `F_2`-vector of fixed
//! dimension `k`), and crossings record their four arc-ends in rotational
//! order together with a sign. Smoothing every crossing yields a cube of
//! resolutions whose circles inherit labels by XOR; applying a label-graded
//! Frobenius-type algebra to the cube produces a chain complex over `F_2`
//! whose homology is the invariant computed here.
//!
//! The crate ships three built-in algebras (`L`, `Lprime`, `Ldoubleprime`),
//! an exhaustive axiom checker for user-supplied algebras, the mirror duality
//! check, the weak-adequacy / non-vanishing criterion for the extreme
//! homological degree, and an independent genus-zero oracle used to
//! cross-validate the whole pipeline.

pub mod algebra;
pub mod diagram;
pub mod f2;
pub mod fixtures;
pub mod homology;
pub mod selftest;

pub use algebra::{Algebra, AlgebraError, AlgebraName, BasisGen, Element, GenName, Label};
pub use diagram::{Circle, Crossing, DiagramError, ResolvedState, SurfaceDiagram, Transition};
pub use f2::{F2Matrix, F2Vector};
pub use homology::{CubeComplex, HomologyError, HomologyTable};

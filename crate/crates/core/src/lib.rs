//! Exact categorical traces in strict monoidal categories with a switching
//! isomorphism.
//!
//! The crate is organised around the [`category::MonoidalCategory`] trait and
//! four instances of it:
//!
//! * [`vect::FinVect`]: finite-dimensional rational spaces,
//! * [`vect::SuperVect`]: Z/2-graded spaces with the Koszul sign rule,
//! * [`balanced::GradedVect`]: Z-graded spaces, braided by `q^{mn}` and twisted by `q^{m²}`,
//! * [`bordism::RBord1`]: one-dimensional Riemannian bordisms.
//!
//! [`thickened`] holds the calculus of triples `(Z, t, b)`, the maps `Ψ` and
//! `tr̂`, and the trace pairing. [`dsl`] is a small string-diagram language and
//! [`check`] the seeded property harness used by the `traced` binary.

pub mod balanced;
pub mod bordism;
pub mod category;
pub mod check;
pub mod dsl;
pub mod dynamic;
pub mod error;
pub mod thickened;
pub mod vect;

pub use category::{Additive, Balanced, Braided, Capabilities, DualData, Dualizable, MonoidalCategory};
pub use error::{Error, Result};
pub use thickened::{SlideWitness, ThickTriple};

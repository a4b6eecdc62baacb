//! Exact mod-3 computations for the cohomology of the Janko group J2.
//!
//! The crate recomputes the Lyndon–Hochschild–Serre spectral sequence from
//! its E2 page, the order-8 invariants of its E6 page, the invariant subring
//! of Leary's ring and the presented ring of J2, and compares the results.

pub mod gca;
pub mod invariants;
pub mod linalg;
pub mod presentation;
pub mod rings;
pub mod series;
pub mod spectral;
pub mod tables;
pub mod verify;

pub use gca::{Bidegree, Element, Gca, Monomial};
pub use linalg::{Matrix, Subquotient, Subspace, F3};
pub use spectral::{E2Algebra, Page, SpectralSequence};

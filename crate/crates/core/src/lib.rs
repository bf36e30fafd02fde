//! Non-commuting graphs of finite groups.
//!
//! The crate builds the non-commuting graph Γ(G) of a finite group (vertices
//! are the non-central elements, edges join elements that do not commute),
//! computes exact integer characteristic polynomials and spectra of its
//! adjacency and Laplacian matrices, and checks closed-form spectra, energies
//! and factorizations for dihedral groups, GL(2,q) and direct products
//! against brute-force computation.
//!
//! Module map:
//!
//! - [`field`], [`group`]: finite fields and finite groups with exact
//!   multiplication, centers and centralizers.
//! - [`graph`]: non-commuting graphs, the augmented adjacency, Laplacians and
//!   complete-multipartite detection.
//! - [`poly`], [`modular`], [`charpoly`], [`roots`]: exact polynomial
//!   arithmetic, characteristic polynomials (multi-modular and
//!   Faddeev–LeVerrier), and closed-form root solvers.
//! - [`spectra`], [`surd`]: numeric eigensolver, exact spectrum assembly,
//!   energy and Laplacian energy.
//! - [`formulas`], [`report`], [`reference`]: closed-form evaluators with
//!   verification routines and the stored reference values.

pub mod charpoly;
pub mod error;
pub mod field;
pub mod formulas;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod reference;
pub mod report;
pub mod roots;
pub mod spectra;
pub mod surd;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{FiniteGroup, GroupSpec};
pub use poly::IntPolynomial;
pub use spectra::{EnergyValue, Spectrum};

/// Default upper bound on group order / vertex count.
pub const DEFAULT_CAP: usize = 10_000;

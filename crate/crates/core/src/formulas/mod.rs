//! Closed-form evaluators and the routines that check them against the
//! brute-force graph.

pub mod blocks;
pub mod dihedral;
pub mod gl2;
pub mod multipartite;
pub mod products;

pub use blocks::{block_factorization_check, BlockFamily};
pub use gl2::{Gl2FormulaBundle, PRIME_SEED};

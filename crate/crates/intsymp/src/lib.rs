//! Intermediate symplectic characters: exact Laurent-polynomial kernel,
//! shapes and tableaux, character evaluation, identity checks, q-product
//! formulas and lozenge tilings.

pub mod error;
pub mod identities;
pub mod qgen;
pub mod characters;
pub mod cli;
pub mod ring;
pub mod shapes;
pub mod tilings;

pub use error::{Error, Result};

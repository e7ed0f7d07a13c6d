//! Characters: the intermediate symplectic character by every formula, the
//! classical characters, and the ninth-variation machinery.

pub mod classical;
pub mod intsymp;
pub mod ninth;
pub mod symmetric;

pub use classical::{orth_b, orth_d, schur, symplectic};
pub use intsymp::{intsymp_char, sp_kn, tableau_sum, CharSpec, Method};
pub use ninth::{e_circ, e_knk, ninth_schur, rel_e_check};
pub use symmetric::{complete_h, elementary_e};

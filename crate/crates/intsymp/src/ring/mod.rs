//! Exact arithmetic kernel.

pub mod frac;
pub mod matrix;
pub mod poly;
pub mod qseries;
pub mod quotient;

pub use frac::Frac;
pub use matrix::{Matrix, PolyMatrix, RingElem, SkewMatrix, SkewSymMatrix};
pub use poly::{rat, rat_frac, ExpVec, LaurentPoly};
pub use qseries::{q_angle, q_binom, q_bracket, Half, QRatio};
pub use quotient::Quotient;

pub type Rational = num_rational::BigRational;

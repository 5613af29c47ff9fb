//! Type II binary codes of length 24 and their weight enumerators in
//! genus 1, 2 and 3.
//!
//! - [`gf2`]: packed GF(2) words and codes, duals, the `d_n`, `e_7`, `e_8`
//!   and Golay generator matrices.
//! - [`poly`]: exact multivariate polynomials and the genus-lowering map.
//! - [`enumerator`]: genus-g weight enumerators and the named polynomials.
//! - [`codes24`]: the nine classified codes and the glue search.
//! - [`theorems`]: executable checks with structured reports.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod codes24;
pub mod enumerator;
pub mod gf2;
pub mod poly;
pub mod theorems;

pub use codes24::{CodeDatabase, CodeRecord};
pub use enumerator::{weight_enumerator, weight_enumerator_decomposed};
pub use gf2::{BinaryCode, BitWord};
pub use poly::{MultiPoly, Rational};
pub use theorems::{VerificationReport, Verifier};

//! Substitution subshifts and the conjugacy toolkit for the golden-mean
//! family.
//!
//! The crate covers: substitutions on finite alphabets with their factor
//! languages and incidence matrices (`subst`, `matrix`), canonical n-block
//! presentations (`nblock`), exact arithmetic in Z[(sqrt(5)-1)/2] together
//! with singular words, return words, and block decompositions of the
//! Fibonacci subshift (`quadint`, `fib`), partition reshaping and the family
//! of expanding substitutions it produces (`reshape`), conjugacy and
//! non-conjugacy certificates (`conjugacy`), the classification of
//! nonnegative integer matrices with golden-mean Perron-Frobenius eigenvalue
//! (`golden`), and a deterministic end-to-end verification suite (`verify`).

pub mod conjugacy;
pub mod error;
pub mod fib;
pub mod golden;
pub mod matrix;
pub mod nblock;
pub mod quadint;
pub mod reshape;
pub mod subst;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use matrix::IncidenceMatrix;
pub use quadint::QuadInt;
pub use subst::{FactorLanguage, Substitution};
pub use word::{AlphabetStyle, Letter, Word};

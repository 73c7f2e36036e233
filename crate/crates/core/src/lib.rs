//! Words and matrices in the modular group PSL(2,Z).
//!
//! Every element is a product of the matrices `M(c) = ((c, -1), (1, 0))`,
//! and a word `(c1, ..., cn)` names the product `M(c1) ... M(cn)`.
//!
//! - [`matrix`]: exact big-integer matrices, normalization up to sign,
//!   continuants and quiddity cycles.
//! - [`contfrac`]: ceiling and regular continued fractions of rationals.
//! - [`presentation`]: the staircase word of a matrix, the rewrite moves
//!   and the reduction to a shortest word.
//! - [`conjugacy`]: proper and pure cyclic words, canonical class forms and
//!   a complete conjugacy invariant.
//! - [`oracle`]: bounded brute-force searches used for cross-checks.
//! - [`cli`]: the `psl2z` command line.
//!
//! ```
//! use psl2z::matrix::{continuant, Mat2, Word};
//! use psl2z::presentation::minimal_presentation;
//!
//! let a = Mat2::new(38, -17, 9, -4).unwrap();
//! let m = minimal_presentation(&a);
//! assert_eq!(m.word(), &Word::from([4, -4, 2]));
//! assert_eq!(continuant(m.word()), a);
//! ```

pub mod cli;
pub mod conjugacy;
pub mod contfrac;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod presentation;

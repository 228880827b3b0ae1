//! Exact Thom-polynomial calculus.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, graded sparse polynomials over indexed variable
//!   families, truncated total-class series and their quotients/twists.
//! * [`lowering`]: the lowering operator `♭[i]` and the independent
//!   twist-expansion route that it must agree with.
//! * [`catalog`]: Thom series of contact singularities, Giambelli–Thom–Porteous
//!   determinants, the `dᵢ ↦ c_{i+k+1}` specialization and codimension formulas.
//! * [`schur`]: Jacobi–Trudi expansion and Schur-basis positivity.
//! * [`verify`]: fixed check suites producing [`verify::CheckReport`]s.
//! * [`cli`]: the `thomkit` command-line front end.

pub mod algebra;
pub mod catalog;
pub mod cli;
mod error;
pub mod lowering;
pub mod schur;
pub mod verify;

pub use algebra::{Family, Monomial, Polynomial, Rational, TruncatedSeries, Variable};
pub use error::{Error, Result};

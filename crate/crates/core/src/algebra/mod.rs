//! Exact coefficient arithmetic, graded polynomials and total-class series.

mod determinant;
mod monomial;
mod polynomial;
mod series;
pub mod text;

pub use determinant::determinant;
pub use monomial::{Family, Monomial, Variable};
pub use polynomial::Polynomial;
pub use series::{quotient_total_class, twist_total_class, TruncatedSeries, DEFAULT_CAP};

use num_bigint::BigInt;

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"` with the denominator always present.
pub fn rational_to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

use num_integer::binomial;
use num_traits::Zero;

use crate::algebra::Rational;

/// Coefficients `0..=n` of `u(1−u)/(1−3u) = u + 2u² + 6u³ + 18u⁴ + …`.
fn numerator_series(n: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let three = Rational::from_integer(3.into());
    let mut power = Rational::from_integer(1.into());
    // u(1−u) · Σ 3ᵏuᵏ
    for k in 0..n {
        coeffs[k + 1] += &power;
        if k + 2 <= n {
            coeffs[k + 2] -= &power;
        }
        power *= &three;
    }
    coeffs
}

/// `[uⁱvʲ] (u(1−u)/(1−3u) + v(1−v)/(1−3v)) / (1−u−v)`.
///
/// The numerator is expanded as geometric series and multiplied by
/// `1/(1−u−v) = Σ C(p+q, p) uᵖvᵍ`.
pub fn aij(i: usize, j: usize) -> Rational {
    let f = numerator_series(i.max(j));
    let mut acc = Rational::zero();
    // numerator terms u^a (a ≥ 1), paired with u^{i−a} v^j of the binomial kernel
    for (a, fa) in f.iter().enumerate().take(i + 1).skip(1) {
        let kernel = binomial((i - a + j) as u64, j as u64);
        acc += fa * Rational::from_integer(kernel.into());
    }
    for (b, fb) in f.iter().enumerate().take(j + 1).skip(1) {
        let kernel = binomial((i + j - b) as u64, i as u64);
        acc += fb * Rational::from_integer(kernel.into());
    }
    acc
}

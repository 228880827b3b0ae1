use rand::Rng;

use crate::algebra::{rat, Family, Polynomial, Variable};

/// A random monomial of the given Chern degree: a random partition of
/// `degree`, read as `f_{λ₁}f_{λ₂}⋯`.
fn random_partition<R: Rng>(rng: &mut R, degree: u32) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut left = degree;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts
}

/// Homogeneous polynomial in an indexed family with up to `max_terms` terms
/// and nonzero integer coefficients bounded by `max_coeff` in absolute value.
///
/// Duplicate monomials merge, so the result may have fewer terms or, for a
/// cancelling draw, be zero.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    family: Family,
    degree: u32,
    max_terms: usize,
    max_coeff: i64,
) -> Polynomial {
    assert!(family.unit_at_zero(), "random polynomials use a unit family");
    let terms = rng.gen_range(1..=max_terms);
    let mut raw = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut c = rng.gen_range(1..=max_coeff);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let factors: Vec<(Variable, u32)> = random_partition(rng, degree)
            .into_iter()
            .map(|i| (Variable::new(family, i as i32).expect("indexed family"), 1))
            .collect();
        raw.push((rat(c), factors));
    }
    Polynomial::from_raw_terms(raw).expect("positive indices normalize")
}

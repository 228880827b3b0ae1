#![allow(dead_code)]

use proptest::prelude::*;
use thomkit::algebra::ratio;
use thomkit::{Family, Polynomial, Rational, Variable};

pub fn poly(s: &str) -> Polynomial {
    s.parse().unwrap_or_else(|e| panic!("`{s}`: {e}"))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn variable(family: Family, max_index: i32) -> BoxedStrategy<Variable> {
    match family {
        Family::Y => Just(Variable::y()).boxed(),
        Family::D => (-max_index..=max_index).prop_map(Variable::d).boxed(),
        f => (1..=max_index).prop_map(move |i| Variable::new(f, i).unwrap()).boxed(),
    }
}

/// Arbitrary (not necessarily homogeneous) polynomial over `families`.
pub fn polynomial_over(families: Vec<Family>, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let factor = prop::sample::select(families).prop_flat_map(|f| (variable(f, 5), 1u32..=3));
    let term = (rational(), prop::collection::vec(factor, 0..=3));
    prop::collection::vec(term, 0..=max_terms).prop_map(|terms| Polynomial::from_raw_terms(terms).unwrap())
}

/// Homogeneous polynomial of the given Chern degree in one positively
/// indexed family, built from random partitions.
pub fn homogeneous(family: Family, degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (rational(), prop::collection::vec(1u32..=degree.max(1), 1..=degree.max(1) as usize));
    prop::collection::vec(term, 1..=max_terms).prop_map(move |terms| {
        let mut p = Polynomial::zero();
        for (c, parts) in terms {
            // cut the random list to a partition of `degree`
            let mut left = degree;
            let mut factors = Vec::new();
            for part in parts {
                if left == 0 {
                    break;
                }
                let part = part.min(left);
                left -= part;
                factors.push((Variable::new(family, part as i32).unwrap(), 1));
            }
            if left > 0 {
                factors.push((Variable::new(family, left as i32).unwrap(), 1));
            }
            p += &Polynomial::from_raw_terms(vec![(c, factors)]).unwrap();
        }
        p
    })
}

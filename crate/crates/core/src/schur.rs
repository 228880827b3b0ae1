//! Schur polynomials in the quotient Chern classes.
//!
//! `s_λ = det(c_{λᵢ+j−i})` (Jacobi–Trudi with `c` in the role of the complete
//! symmetric functions), so the Giambelli–Thom–Porteous determinants
//! specialize to single rectangle-shaped Schur polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{determinant, rational_to_fraction_string, Family, Monomial, Polynomial, Rational, Variable};
use crate::{Error, Result};

/// Largest weight accepted by [`to_schur`].
pub const MAX_WEIGHT: u32 = 16;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition of a monomial in a single indexed family.
    fn of_monomial(m: &Monomial) -> Partition {
        Partition::new(m.slots().iter().map(|v| v.index() as u32).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::default());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { offset: 0, message: format!("bad partition `{s}`: {e}") })?;
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.0)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `s_λ = det(c_{λᵢ+j−i})_{1≤i,j≤ℓ(λ)}` with `c₀ = 1`, `c_{<0} = 0`.
pub fn jacobi_trudi(lambda: &Partition) -> Polynomial {
    let l = lambda.len() as i32;
    let parts = lambda.parts();
    let matrix: Vec<Vec<Polynomial>> = (0..l)
        .map(|i| (0..l).map(|j| Polynomial::var(Variable::c(parts[i as usize] as i32 + j - i))).collect())
        .collect();
    determinant(&matrix)
}

/// `p = Σ α_λ s_λ`, keyed by partition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `Σ α_λ s_λ` expanded back into Chern monomials.
    pub fn expand(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (lambda, c) in &self.coeffs {
            out += &jacobi_trudi(lambda).scale(c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(l, c)| serde_json::json!({ "partition": l, "coeff": rational_to_fraction_string(c) }))
                .collect(),
        )
    }
}

impl FromIterator<(Partition, Rational)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, Rational)>>(iter: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (l, c) in iter {
            if !c.is_zero() {
                coeffs.insert(l, c);
            }
        }
        SchurExpansion { coeffs }
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}*s{lambda}")?;
        }
        Ok(())
    }
}

/// Writes a homogeneous polynomial in the `c` family in the Schur basis.
///
/// `s_λ` is `c^λ` plus monomials `c^μ` with `μ` dominating `λ`, so repeatedly
/// removing the lexicographically smallest monomial is a triangular solve.
pub fn to_schur(p: &Polynomial) -> Result<SchurExpansion> {
    if let Some(f) = p.families().into_iter().find(|f| *f != Family::C) {
        return Err(Error::WrongFamily { found: f.to_string(), expected: "c".into() });
    }
    let Some(degree) = p.homogeneous_degree()? else {
        return Ok(SchurExpansion::default());
    };
    if degree > i64::from(MAX_WEIGHT) {
        return Err(Error::Precondition(format!("degree {degree} exceeds the Schur weight cap {MAX_WEIGHT}")));
    }

    let mut cache: HashMap<Partition, Polynomial> = HashMap::new();
    let mut rest = p.clone();
    let mut coeffs = BTreeMap::new();
    while !rest.is_zero() {
        let (lambda, c) = rest
            .terms()
            .map(|(m, c)| (Partition::of_monomial(m), c.clone()))
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("nonzero polynomial has a term");
        let s = cache.entry(lambda.clone()).or_insert_with(|| jacobi_trudi(&lambda));
        rest -= &s.scale(&c);
        coeffs.insert(lambda, c);
    }
    Ok(SchurExpansion { coeffs })
}

/// Schur expansion together with its positivity verdict.
pub fn schur_positive(p: &Polynomial) -> Result<(bool, SchurExpansion)> {
    let expansion = to_schur(p)?;
    Ok((expansion.is_positive(), expansion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_are_normalized() {
        assert_eq!(Partition::new(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(part("(2,2,1)").to_string(), "(2,2,1)");
        assert_eq!(part("()"), Partition::default());
        assert!("(a)".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(3), vec![part("(3)"), part("(2,1)"), part("(1,1,1)")]);
    }

    #[test]
    fn small_jacobi_trudi() {
        assert_eq!(jacobi_trudi(&part("(4)")), p("c[4]"));
        assert_eq!(jacobi_trudi(&part("(1,1)")), p("c[1]^2 - c[2]"));
        assert_eq!(jacobi_trudi(&part("(2,1)")), p("c[1]*c[2] - c[3]"));
        assert_eq!(jacobi_trudi(&Partition::default()), Polynomial::one());
    }

    #[test]
    fn known_expansions() {
        let e = to_schur(&p("c[1]^2 + c[2]")).unwrap();
        assert_eq!(e, [(part("(1,1)"), rat(1)), (part("(2)"), rat(2))].into_iter().collect());
        let e = to_schur(&p("c[2]^2 + c[1]*c[3] + 2*c[4]")).unwrap();
        assert_eq!(e, [(part("(2,2)"), rat(1)), (part("(3,1)"), rat(2)), (part("(4)"), rat(4))].into_iter().collect());
        assert_eq!(e.to_string(), "4*s(4) + 2*s(3,1) + 1*s(2,2)");
    }

    #[test]
    fn positivity_verdicts() {
        let (ok, e) = schur_positive(&p("c[1]^2 - 2*c[2]")).unwrap();
        assert!(!ok);
        assert_eq!(e.coefficient(&part("(2)")), rat(-1));
        assert_eq!(e.coefficient(&part("(1,1)")), rat(1));
        assert!(schur_positive(&Polynomial::zero()).unwrap().0);
    }

    #[test]
    fn errors() {
        assert_eq!(to_schur(&p("c[1] + c[2]")), Err(Error::Inhomogeneous));
        assert!(matches!(to_schur(&p("d[1]")), Err(Error::WrongFamily { .. })));
        assert!(to_schur(&p("c[17]")).is_err());
    }
}

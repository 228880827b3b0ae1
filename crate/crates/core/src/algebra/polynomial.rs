use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use indexmap::IndexMap;
use num_traits::{One, Signed, Zero};

use super::{Family, Monomial, Rational, Variable};
use crate::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms keep the order in which they were first produced, so printing is
/// deterministic and follows the natural expansion order of each operation.
/// Equality ignores term order. [`Polynomial::canonical`] sorts graded-lex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: IndexMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    /// A single variable, or zero if it vanishes by convention (e.g. `c₋₁`).
    pub fn var(v: Variable) -> Self {
        match Monomial::var(v) {
            Some(m) => Polynomial::term(m, Rational::one()),
            None => Polynomial::zero(),
        }
    }

    /// Builds from `(coefficient, raw factors)` pairs, normalizing each term.
    pub fn from_raw_terms<I, F>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, F)>,
        F: IntoIterator<Item = (Variable, u32)>,
    {
        let mut p = Polynomial::zero();
        for (c, factors) in terms {
            if let Some(m) = Monomial::normalize(factors)? {
                p.accumulate(m, c);
            }
        }
        p.prune();
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        self.accumulate(m, c);
        self.prune();
    }

    /// Adds without removing cancelled terms; call [`Self::prune`] afterwards.
    pub(crate) fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => *existing += c,
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub(crate) fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn families(&self) -> BTreeSet<Family> {
        self.terms.keys().flat_map(|m| m.families()).collect()
    }

    /// The common Chern degree of all terms, `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Renames variables and renormalizes. Terms that become zero are dropped.
    pub fn map_variables<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(Variable) -> Variable,
    {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let raw = m.factors().iter().map(|&(v, e)| (f(v), e));
            if let Some(m) = Monomial::normalize(raw).expect("renamed factors keep their exponents") {
                out.accumulate(m, c.clone());
            }
        }
        out.prune();
        out
    }

    /// Replaces every variable for which `f` returns `Some` by that
    /// polynomial; other variables are kept.
    pub fn substitute<F>(&self, mut f: F) -> Result<Polynomial>
    where
        F: FnMut(Variable) -> Result<Option<Polynomial>>,
    {
        let mut images: HashMap<Variable, Option<Polynomial>> = HashMap::new();
        let mut powers: HashMap<(Variable, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                if let std::collections::hash_map::Entry::Vacant(slot) = images.entry(v) {
                    slot.insert(f(v)?);
                }
                let factor = match &images[&v] {
                    Some(image) => powers.entry((v, e)).or_insert_with(|| image.pow(e)).clone(),
                    None => Polynomial::term(
                        Monomial::normalize([(v, e)])?.expect("kept variables are live"),
                        Rational::one(),
                    ),
                };
                term = &term * &factor;
                if term.is_zero() {
                    break;
                }
            }
            for (m, c) in term.terms {
                out.accumulate(m, c);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Same polynomial with terms sorted by degree, then by monomial.
    pub fn canonical(&self) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|m1, _, m2, _| (m1.degree(), m1).cmp(&(m2.degree(), m2)));
        Polynomial { terms }
    }

    /// A term of `self − other`, smallest in graded order, if they differ.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Monomial, Rational)> {
        let diff = (self - other).canonical();
        diff.terms.into_iter().next()
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.accumulate(m.clone(), c.clone());
        }
        self.prune();
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.accumulate(m.clone(), -c);
        }
        self.prune();
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.accumulate(m1.mul(m2), c1 * c2);
            }
        }
        out.prune();
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

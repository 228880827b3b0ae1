use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An indexed family of characteristic-class symbols.
///
/// Declaration order is the canonical family order (tag lexicographic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    B,
    C,
    /// Twisted (sharp) quotient classes `c♯ᵢ`.
    Cs,
    /// Shifted classes `dᵢ`; every integer index is a live variable.
    D,
    X,
    /// The single class of `H*(BU(1))`; carries no index.
    Y,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::Cs, Family::D, Family::X, Family::Y];

    pub fn tag(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::Cs => "cs",
            Family::D => "d",
            Family::X => "x",
            Family::Y => "y",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }

    pub fn is_indexed(self) -> bool {
        self != Family::Y
    }

    /// Index 0 is the unit: `a₀ = b₀ = c₀ = c♯₀ = x₀ = 1`.
    pub fn unit_at_zero(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::Cs | Family::X)
    }

    /// Negative indices denote the zero class.
    pub fn vanishes_below_zero(self) -> bool {
        self.unit_at_zero()
    }

    /// Chern degree of the variable with the given index.
    pub fn degree_of(self, index: i32) -> i64 {
        match self {
            Family::Y => 1,
            _ => i64::from(index),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: i32,
}

impl Variable {
    /// Indexed variable. Use [`Variable::y`] for the index-free class.
    pub fn new(family: Family, index: i32) -> Result<Self> {
        if !family.is_indexed() {
            return Err(Error::Malformed(format!("`y` takes no index (got y[{index}])")));
        }
        Ok(Variable { family, index })
    }

    pub fn y() -> Self {
        Variable { family: Family::Y, index: 0 }
    }

    pub fn a(i: i32) -> Self {
        Variable { family: Family::A, index: i }
    }
    pub fn b(i: i32) -> Self {
        Variable { family: Family::B, index: i }
    }
    pub fn c(i: i32) -> Self {
        Variable { family: Family::C, index: i }
    }
    pub fn cs(i: i32) -> Self {
        Variable { family: Family::Cs, index: i }
    }
    pub fn d(i: i32) -> Self {
        Variable { family: Family::D, index: i }
    }
    pub fn x(i: i32) -> Self {
        Variable { family: Family::X, index: i }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> i32 {
        self.index
    }

    pub fn degree(&self) -> i64 {
        self.family.degree_of(self.index)
    }

    pub fn with_index(&self, index: i32) -> Self {
        debug_assert!(self.family.is_indexed());
        Variable { family: self.family, index }
    }

    fn is_unit(&self) -> bool {
        self.family.unit_at_zero() && self.index == 0
    }

    fn is_vanishing(&self) -> bool {
        self.family.vanishes_below_zero() && self.index < 0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Y => f.write_str("y"),
            fam => write!(f, "{}[{}]", fam, self.index),
        }
    }
}

/// A normalized product of variables.
///
/// Factors are sorted by family then index, exponents are positive, and no
/// unit factor (index 0 of a unit family) is stored. Ordering between
/// monomials is lexicographic on the factor list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Option<Self> {
        Monomial::normalize([(v, 1)]).ok().flatten()
    }

    /// Applies the unit and vanishing conventions to a raw product.
    ///
    /// Returns `Ok(None)` when the product is zero (a negative index in a
    /// family that vanishes below zero). `d`-family factors are kept as given.
    pub fn normalize<I>(raw: I) -> Result<Option<Self>>
    where
        I: IntoIterator<Item = (Variable, u32)>,
    {
        let mut merged: BTreeMap<Variable, u32> = BTreeMap::new();
        let mut vanishes = false;
        for (v, e) in raw {
            if e == 0 {
                return Err(Error::Malformed(format!("zero exponent on {v}")));
            }
            if v.family == Family::Y && v.index != 0 {
                return Err(Error::Malformed(format!("`y` takes no index (got y[{}])", v.index)));
            }
            if v.is_vanishing() {
                vanishes = true;
            }
            if v.is_unit() {
                continue;
            }
            *merged.entry(v).or_insert(0) += e;
        }
        if vanishes {
            return Ok(None);
        }
        Ok(Some(Monomial { factors: merged.into_iter().collect() }))
    }

    /// Normalizes a list of single-exponent factor slots.
    pub fn from_slots(slots: &[Variable]) -> Option<Self> {
        Monomial::normalize(slots.iter().map(|&v| (v, 1))).expect("slots carry unit exponents")
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(v, e)| v.degree() * i64::from(*e)).sum()
    }

    /// The factors expanded into slots, one per unit of exponent.
    pub fn slots(&self) -> Vec<Variable> {
        self.factors.iter().flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize)).collect()
    }

    pub fn exponent_of(&self, v: &Variable) -> u32 {
        self.factors.binary_search_by(|(w, _)| w.cmp(v)).map(|k| self.factors[k].1).unwrap_or(0)
    }

    pub fn families(&self) -> impl Iterator<Item = Family> + '_ {
        self.factors.iter().map(|(v, _)| v.family)
    }

    /// Splits off the `y` exponent: `(e, rest)` with `self = yᵉ · rest`.
    pub fn split_y(&self) -> (u32, Monomial) {
        let e = self.exponent_of(&Variable::y());
        let rest = self.factors.iter().copied().filter(|(v, _)| v.family != Family::Y).collect();
        (e, Monomial { factors: rest })
    }

    /// Product of two normalized monomials; the result is normalized.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

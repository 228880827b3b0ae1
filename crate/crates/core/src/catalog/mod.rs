//! Thom series of contact singularities and Thom–Boardman shape data.
//!
//! A Thom series is a formal series in `dᵢ` (`i ∈ ℤ`); the Thom polynomial of
//! a germ `(ℂⁿ,0) → (ℂᵐ,0)` with relative dimension `k = m − n` is obtained
//! by [`specialize`], i.e. `dᵢ ↦ c_{i+k+1}`. Series are infinite, so they are
//! generated over a [`Window`] of admissible indices.

mod aij;
mod boardman;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow};
use serde::Serialize;

pub use aij::aij;
pub use boardman::{codim_sigma_ij, gtp_sigma_r, shape_sigma_ij, BoardmanSymbol};

use crate::algebra::{ratio, Family, Polynomial, Rational, Variable};
use crate::{Error, Result};

pub const MAX_WINDOW: u32 = 64;

/// Window used when none is given; it is also the range in which every
/// catalog coefficient is printed in the source tables.
pub const DEFAULT_WINDOW: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Algebra {
    A0,
    A1,
    A2,
    A3,
    I22,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::A0, Algebra::A1, Algebra::A2, Algebra::A3, Algebra::I22];

    pub fn entry(self) -> &'static AlgebraEntry {
        &ENTRIES[self as usize]
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase();
        Algebra::ALL.into_iter().find(|a| a.name() == key).ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Invariants of a local algebra `Q` together with catalog metadata.
#[derive(Debug, Serialize)]
pub struct AlgebraEntry {
    pub name: &'static str,
    pub presentation: &'static str,
    /// Complex dimension `δ(Q)`.
    pub delta: u32,
    pub gamma: u32,
    /// Minimal `#relations − #generators`. All entries are complete
    /// intersections, hence 0.
    pub defect: Option<i64>,
    /// Proportionality constant between consecutive Thom polynomials.
    pub k_eta: i64,
    /// Largest window in which the coefficients are tabulated verbatim;
    /// `None` when the series is given in closed form.
    pub anchored_window: Option<u32>,
    /// The series is supported by computation only, not by proof.
    pub provisional: bool,
}

static ENTRIES: [AlgebraEntry; 5] = [
    AlgebraEntry {
        name: "A0",
        presentation: "C",
        delta: 1,
        gamma: 0,
        defect: Some(0),
        k_eta: 1,
        anchored_window: None,
        provisional: false,
    },
    AlgebraEntry {
        name: "A1",
        presentation: "C[x]/(x^2)",
        delta: 2,
        gamma: 1,
        defect: Some(0),
        k_eta: 1,
        anchored_window: None,
        provisional: false,
    },
    AlgebraEntry {
        name: "A2",
        presentation: "C[x]/(x^3)",
        delta: 3,
        gamma: 2,
        defect: Some(0),
        k_eta: 1,
        anchored_window: Some(4),
        provisional: false,
    },
    AlgebraEntry {
        name: "A3",
        presentation: "C[x]/(x^4)",
        delta: 4,
        gamma: 3,
        defect: Some(0),
        k_eta: 1,
        anchored_window: None,
        provisional: false,
    },
    AlgebraEntry {
        name: "I22",
        presentation: "C[x,y]/(xy,x^2+y^2)",
        delta: 4,
        gamma: 4,
        defect: Some(0),
        k_eta: 1,
        anchored_window: None,
        provisional: true,
    },
];

impl AlgebraEntry {
    /// Number of factors in every term of the Thom series, `δ − 1`.
    pub fn factor_count(&self) -> u32 {
        self.delta - 1
    }

    /// `d`-degree of the Thom series, `γ − δ + 1`.
    pub fn series_degree(&self) -> i64 {
        i64::from(self.gamma) - i64::from(self.delta) + 1
    }
}

/// Summation ranges used for the A₃ series.
///
/// Read literally, all three sums start at `i = j = 0`; then the `d₀³`
/// coefficient is `1 + 1/3` and the specializations are not integral.
/// Starting the middle sum at `i, j ≥ 1` removes exactly the terms that
/// duplicate the first sum and yields `c₁³ + 3c₁c₂ + 2c₃` at `k = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum A3Ranges {
    #[default]
    Reconciled,
    AsPrinted,
}

impl A3Ranges {
    pub fn describe(self) -> &'static str {
        match self {
            A3Ranges::Reconciled => "first and third sums over i,j >= 0; second sum over i,j >= 1",
            A3Ranges::AsPrinted => "all sums over i,j >= 0",
        }
    }
}

impl FromStr for A3Ranges {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reconciled" => Ok(A3Ranges::Reconciled),
            "as-printed" => Ok(A3Ranges::AsPrinted),
            other => Err(Error::Precondition(format!("unknown A3 range policy `{other}`"))),
        }
    }
}

impl fmt::Display for A3Ranges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            A3Ranges::Reconciled => "reconciled",
            A3Ranges::AsPrinted => "as-printed",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SeriesOptions {
    /// Refuse windows beyond an entry's anchored range.
    pub strict: bool,
    /// Allow windows beyond the anchored range even in strict mode.
    pub extrapolate: bool,
    pub a3_ranges: A3Ranges,
}

/// Largest absolute `d`-index kept when truncating a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Window(u32);

impl Window {
    pub fn new(max_abs_index: u32) -> Result<Self> {
        if max_abs_index == 0 || max_abs_index > MAX_WINDOW {
            return Err(Error::InvalidWindow(max_abs_index));
        }
        Ok(Window(max_abs_index))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn admits(self, indices: &[i32]) -> bool {
        indices.iter().all(|i| i.unsigned_abs() <= self.0)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window(DEFAULT_WINDOW)
    }
}

/// Collects `coeff · Π d_{indices}` terms that fit the window.
struct SeriesBuilder {
    window: Window,
    terms: Vec<(Rational, Vec<(Variable, u32)>)>,
}

impl SeriesBuilder {
    fn new(window: Window) -> Self {
        SeriesBuilder { window, terms: Vec::new() }
    }

    fn push(&mut self, coeff: Rational, indices: &[i32]) {
        if self.window.admits(indices) {
            self.terms.push((coeff, indices.iter().map(|&i| (Variable::d(i), 1)).collect()));
        }
    }

    fn finish(self) -> Polynomial {
        Polynomial::from_raw_terms(self.terms).expect("d-family terms are well formed")
    }
}

fn pow(base: i64, exp: i32) -> Rational {
    Rational::from_integer(BigInt::from(base)).pow(exp)
}

fn choose(n: i32, k: i32) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n as u64, k as u64)))
}

/// The Thom series of a catalog entry truncated to `window`.
pub fn ts_terms(algebra: Algebra, window: Window, opts: &SeriesOptions) -> Result<Polynomial> {
    let entry = algebra.entry();
    if let Some(anchored) = entry.anchored_window {
        if opts.strict && !opts.extrapolate && window.get() > anchored {
            return Err(Error::OutsideAnchor { name: entry.name.into(), window: window.get(), anchored });
        }
    }
    let w = window.get() as i32;
    let mut s = SeriesBuilder::new(window);
    match algebra {
        Algebra::A0 => s.push(Rational::one(), &[]),
        Algebra::A1 => s.push(Rational::one(), &[0]),
        Algebra::A2 => {
            s.push(Rational::one(), &[0, 0]);
            for i in 1..=w {
                s.push(pow(2, i - 1), &[-i, i]);
            }
        }
        Algebra::A3 => {
            let third = ratio(1, 3);
            let half = ratio(1, 2);
            let middle_start = match opts.a3_ranges {
                A3Ranges::Reconciled => 1,
                A3Ranges::AsPrinted => 0,
            };
            for i in 0..=w {
                s.push(pow(2, i), &[-i, 0, i]);
            }
            for i in middle_start..=w {
                for j in middle_start..=w - i {
                    s.push(&third * pow(2, i) * pow(3, j), &[-i, -j, i + j]);
                }
            }
            for i in 0..=w {
                for j in 0..=w - i {
                    s.push(&half * aij(i as usize, j as usize), &[-i - j, i, j]);
                }
            }
        }
        Algebra::I22 => {
            let half = ratio(1, 2);
            for i in 1..=w {
                s.push(pow(2, i - 2), &[-i, 1, i]);
            }
            for i in 1..w {
                s.push(-pow(2, i - 1), &[-i, 0, i + 1]);
            }
            for i in 1..=w {
                for j in 1..=w + 1 - i {
                    s.push(&half * choose(i + j - 2, i - 1), &[-i - j + 1, i, j]);
                }
            }
        }
    }
    Ok(s.finish())
}

/// `dᵢ ↦ c_{i+k+1}`, applying `c₀ = 1` and `c_{<0} = 0`. Other families are
/// left unchanged.
pub fn specialize(p: &Polynomial, k: i64) -> Polynomial {
    let shift = (k + 1) as i32;
    p.map_variables(|v| match v.family() {
        Family::D => Variable::c(v.index() + shift),
        _ => v,
    })
}

/// Thom polynomial of the entry at relative dimension `k`.
pub fn thom_polynomial(algebra: Algebra, k: i64, window: Window, opts: &SeriesOptions) -> Result<Polynomial> {
    Ok(specialize(&ts_terms(algebra, window, opts)?, k))
}

/// Smallest window whose truncation specializes to the full Thom polynomial
/// at relative dimension `k`.
///
/// After specialization an index below `−(k+1)` vanishes, and with the other
/// `δ − 2` factors as negative as that, the remaining one is at most
/// `degree + (δ − 2)(k + 1)`.
pub fn safe_window(algebra: Algebra, k: i64) -> u32 {
    let entry = algebra.entry();
    let f = i64::from(entry.factor_count());
    let bound = if f >= 2 { (k + 1).max(entry.series_degree() + (f - 1) * (k + 1)) } else { 1 };
    bound.clamp(1, i64::from(MAX_WINDOW)) as u32
}

/// Contact codimension `k(δ − 1) + γ`.
pub fn codim_contact(entry: &AlgebraEntry, k: i64, strict: bool) -> Result<i64> {
    if let Some(defect) = entry.defect {
        if strict && k < defect {
            return Err(Error::Precondition(format!(
                "{} needs relative dimension at least {defect} (got {k})",
                entry.name
            )));
        }
    }
    Ok(k * i64::from(entry.delta - 1) + i64::from(entry.gamma))
}

#[derive(Serialize)]
struct CatalogRecord<'a> {
    #[serde(flatten)]
    entry: &'a AlgebraEntry,
    series_degree: i64,
    factor_count: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    range_policy: Option<String>,
}

/// Machine-readable listing of every catalog entry.
pub fn catalog_document(opts: &SeriesOptions) -> serde_json::Value {
    let records: Vec<_> = Algebra::ALL
        .into_iter()
        .map(|a| CatalogRecord {
            entry: a.entry(),
            series_degree: a.entry().series_degree(),
            factor_count: a.entry().factor_count(),
            range_policy: (a == Algebra::A3).then(|| format!("{}: {}", opts.a3_ranges, opts.a3_ranges.describe())),
        })
        .collect();
    serde_json::json!({ "entries": records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ts(a: Algebra, w: u32) -> Polynomial {
        ts_terms(a, Window::new(w).unwrap(), &SeriesOptions::default()).unwrap()
    }

    #[test]
    fn a2_series() {
        assert_eq!(ts(Algebra::A1, 3), p("d[0]"));
        assert_eq!(ts(Algebra::A2, 2).to_string(), "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]");
        assert_eq!(ts(Algebra::A2, 4).to_string(), "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2] + 4*d[-3]*d[3] + 8*d[-4]*d[4]");
    }

    #[test]
    fn a2_specializations() {
        assert_eq!(specialize(&ts(Algebra::A2, 4), 0).to_string(), "c[1]^2 + c[2]");
        assert_eq!(specialize(&ts(Algebra::A2, 4), 1).to_string(), "c[2]^2 + c[1]*c[3] + 2*c[4]");
        assert_eq!(specialize(&ts(Algebra::A0, 1), 3), Polynomial::one());
        assert_eq!(specialize(&gtp_sigma_r(1), 2), p("c[3]"));
    }

    #[test]
    fn i22_half_integer_terms_merge() {
        // 2^{i-2} at i = 1 meets the diagonal of the binomial sum on d₋₁d₁²
        assert_eq!(ts(Algebra::I22, 2), p("d[-1]*d[1]^2 - d[-1]*d[0]*d[2] + 2*d[-2]*d[1]*d[2]"));
        assert_eq!(specialize(&ts(Algebra::I22, 2), 0), p("c[2]^2 - c[1]*c[3]"));
    }

    #[test]
    fn a3_reconciled_policy_at_equidimension() {
        let tp = thom_polynomial(Algebra::A3, 0, Window::new(2).unwrap(), &SeriesOptions::default()).unwrap();
        assert_eq!(tp, p("c[1]^3 + 3*c[1]*c[2] + 2*c[3]"));
    }

    #[test]
    fn a3_printed_ranges_are_not_integral() {
        let opts = SeriesOptions { a3_ranges: A3Ranges::AsPrinted, ..Default::default() };
        let tp = thom_polynomial(Algebra::A3, 0, Window::new(2).unwrap(), &opts).unwrap();
        assert_eq!(tp.coefficient(p("c[1]^3").terms().next().unwrap().0), ratio(4, 3));
        assert!(!tp.has_integer_coefficients());
    }

    #[test]
    fn strict_mode_guards_the_anchor() {
        let strict = SeriesOptions { strict: true, ..Default::default() };
        assert!(matches!(
            ts_terms(Algebra::A2, Window::new(5).unwrap(), &strict),
            Err(Error::OutsideAnchor { anchored: 4, .. })
        ));
        let extrapolate = SeriesOptions { extrapolate: true, ..strict };
        assert!(ts_terms(Algebra::A2, Window::new(5).unwrap(), &extrapolate).is_ok());
        assert!(ts_terms(Algebra::A3, Window::new(9).unwrap(), &strict).is_ok());
        assert!(Window::new(0).is_err());
        assert!(Window::new(MAX_WINDOW + 1).is_err());
    }

    #[test]
    fn names_and_codimensions() {
        assert_eq!("i2,2".parse::<Algebra>(), Ok(Algebra::I22));
        assert_eq!("a2".parse::<Algebra>(), Ok(Algebra::A2));
        assert!("A9".parse::<Algebra>().is_err());
        assert_eq!(codim_contact(Algebra::A2.entry(), 0, true), Ok(2));
        assert_eq!(codim_contact(Algebra::A3.entry(), 1, true), Ok(6));
        assert_eq!(codim_contact(Algebra::A0.entry(), 7, true), Ok(0));
        assert!(codim_contact(Algebra::A1.entry(), -1, true).is_err());
        assert_eq!(codim_contact(Algebra::A1.entry(), -1, false), Ok(0));
    }

    #[test]
    fn safe_windows() {
        assert_eq!(safe_window(Algebra::A2, 3), 4);
        assert_eq!(safe_window(Algebra::A3, 1), 4);
        assert_eq!(safe_window(Algebra::I22, 0), 3);
        assert_eq!(safe_window(Algebra::A1, 3), 1);
    }
}

use num_traits::One;

use super::{Family, Polynomial, Rational, Variable};
use crate::{Error, Result};

/// Cap used when none is given; every identity checked here needs at most 8.
pub const DEFAULT_CAP: usize = 12;

/// Formal series `Σ coeffs[i]·tⁱ` truncated after `t^cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that the result has exactly `cap + 1`
    /// coefficients.
    pub fn new(mut coeffs: Vec<Polynomial>, cap: usize) -> Self {
        coeffs.resize(cap + 1, Polynomial::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(cap: usize) -> Self {
        TruncatedSeries::new(vec![Polynomial::one()], cap)
    }

    /// `1 + f₁t + f₂t² + … + f_cap t^cap` for an indexed family.
    pub fn total_class(family: Family, cap: usize) -> Result<Self> {
        let coeffs =
            (0..=cap).map(|i| Variable::new(family, i as i32).map(Polynomial::var)).collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    /// Reads an ungraded total class such as `1 + 2*y`: the Chern-degree-`i`
    /// part becomes the coefficient of `tⁱ`.
    pub fn from_graded(p: &Polynomial, cap: usize) -> Result<Self> {
        let mut coeffs = vec![Polynomial::zero(); cap + 1];
        for (m, c) in p.terms() {
            let deg = m.degree();
            if deg < 0 || deg as usize > cap {
                return Err(Error::CapOverflow { index: deg, cap });
            }
            coeffs[deg as usize].add_term(m.clone(), c.clone());
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Polynomial::one() && self.coeffs[1..].iter().all(Polynomial::is_zero)
    }

    /// Whether every coefficient lies in the given families only.
    pub fn uses_only(&self, families: &[Family]) -> bool {
        self.coeffs.iter().all(|c| c.families().iter().all(|f| families.contains(f)))
    }

    /// Whether the coefficient of `tⁱ` is homogeneous of Chern degree `i`.
    pub fn is_graded(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| c.terms().all(|(m, _)| m.degree() == i as i64))
    }

    fn check_caps(&self, other: &TruncatedSeries) -> Result<()> {
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch(self.cap(), other.cap()));
        }
        Ok(())
    }

    /// Cauchy product truncated at the common cap.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_caps(other)?;
        let cap = self.cap();
        let mut coeffs = vec![Polynomial::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=cap - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; the constant coefficient must be exactly 1.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        if self.coeffs[0].as_constant() != Some(Rational::one()) {
            return Err(Error::NonUnitConstant);
        }
        let cap = self.cap();
        let mut inv: Vec<Polynomial> = Vec::with_capacity(cap + 1);
        inv.push(Polynomial::one());
        for n in 1..=cap {
            let mut acc = Polynomial::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    acc -= &(&self.coeffs[k] * &inv[n - k]);
                }
            }
            inv.push(acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }
}

/// Quotient total class `b / a`; the coefficient of `tⁱ` is `cᵢ` written in
/// the `a`, `b` variables.
pub fn quotient_total_class(b: &TruncatedSeries, a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if b.coeffs[0].as_constant() != Some(Rational::one()) {
        return Err(Error::NonUnitConstant);
    }
    b.mul(&a.invert()?)
}

/// `c · ξ_num / ξ_den`, the twisted classes `c♯ᵢ` written in `c` and `y`.
pub fn twist_total_class(
    c: &TruncatedSeries,
    xi_num: &TruncatedSeries,
    xi_den: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    for xi in [xi_num, xi_den] {
        if !xi.uses_only(&[Family::Y]) {
            return Err(Error::WrongFamily {
                found: xi
                    .coeffs
                    .iter()
                    .flat_map(|p| p.families())
                    .find(|f| *f != Family::Y)
                    .map(|f| f.to_string())
                    .unwrap_or_default(),
                expected: "y only in the twisting class".into(),
            });
        }
    }
    c.mul(xi_num)?.mul(&xi_den.invert()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn series(items: &[&str], cap: usize) -> TruncatedSeries {
        TruncatedSeries::new(items.iter().map(|s| p(s)).collect(), cap)
    }

    #[test]
    fn invert_geometric() {
        let s = series(&["1", "a[1]", "a[2]"], 2);
        assert_eq!(s.invert().unwrap(), series(&["1", "-a[1]", "a[1]^2 - a[2]"], 2));
        let s = series(&["1", "y"], 3);
        assert_eq!(s.invert().unwrap(), series(&["1", "-y", "y^2", "-y^3"], 3));
    }

    #[test]
    fn product_of_conjugates() {
        let s = series(&["1", "c[1]"], 2);
        let r = series(&["1", "-c[1]"], 2);
        assert_eq!(s.mul(&r).unwrap(), series(&["1", "0", "-c[1]^2"], 2));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        assert_eq!(series(&["2", "y"], 2).invert(), Err(Error::NonUnitConstant));
        assert_eq!(series(&["c[1]"], 2).invert(), Err(Error::NonUnitConstant));
        assert_eq!(series(&["1"], 2).mul(&series(&["1"], 3)), Err(Error::CapMismatch(2, 3)));
    }

    #[test]
    fn quotient_classes() {
        let one = TruncatedSeries::one(2);
        let b = series(&["1", "b[1]"], 2);
        assert_eq!(quotient_total_class(&b, &one).unwrap(), b);
        assert!(quotient_total_class(&b, &b).unwrap().is_one());
        let a = series(&["1", "a[1]"], 2);
        assert_eq!(quotient_total_class(&one, &a).unwrap(), series(&["1", "-a[1]", "a[1]^2"], 2));
    }

    #[test]
    fn twist_by_line() {
        let c = TruncatedSeries::total_class(Family::C, 2).unwrap();
        let num = series(&["1", "y"], 2);
        let sharp = twist_total_class(&c, &num, &TruncatedSeries::one(2)).unwrap();
        assert_eq!(sharp.coeff(1), &p("c[1] + y"));
        assert_eq!(sharp.coeff(2), &p("c[2] + c[1]*y"));
    }

    #[test]
    fn twist_by_double_cover() {
        let one = TruncatedSeries::one(4);
        let num = TruncatedSeries::from_graded(&p("1 + 2*y"), 4).unwrap();
        let den = TruncatedSeries::from_graded(&p("1 + y"), 4).unwrap();
        let got = twist_total_class(&one, &num, &den).unwrap();
        assert_eq!(got, series(&["1", "y", "-y^2", "y^3", "-y^4"], 4));
    }

    #[test]
    fn trivial_twist_is_identity() {
        let c = TruncatedSeries::total_class(Family::C, 5).unwrap();
        let xi = series(&["1", "y"], 5);
        assert_eq!(twist_total_class(&c, &xi, &xi).unwrap(), c);
    }

    #[test]
    fn twist_rejects_non_y_coefficients() {
        let c = TruncatedSeries::total_class(Family::C, 2).unwrap();
        let bad = series(&["1", "c[1]"], 2);
        assert!(matches!(twist_total_class(&c, &bad, &TruncatedSeries::one(2)), Err(Error::WrongFamily { .. })));
    }
}

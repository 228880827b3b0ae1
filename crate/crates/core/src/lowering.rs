//! The lowering operator `♭[i]` and the twist expansion it is checked against.
//!
//! For a monomial `x_{u₁}⋯x_{u_r}` (factors counted with multiplicity),
//! `♭[i]` sums over all `i`-element subsets of the `r` factor slots the
//! monomial obtained by decreasing the selected indices by one. Unit families
//! then apply `x₀ = 1` and `x_{<0} = 0`; the `d` family never normalizes.
//!
//! Substituting `c♯ = c·(1 + y)` into a degree-`l♯` polynomial and collecting
//! by powers of `y` gives the same polynomials: the coefficient of `yⁱ` is
//! `p♭[i]` in the `c` variables, of Chern degree `l♯ − i`. [`twist_expand`] computes that side by
//! plain series arithmetic, independently of [`lower`].

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{twist_total_class, Family, Monomial, Polynomial, TruncatedSeries, Variable};
use crate::{Error, Result};

/// The single family a polynomial is written in, `None` for constants.
fn sole_family(p: &Polynomial) -> Result<Option<Family>> {
    let families = p.families();
    if families.len() > 1 {
        let names = families.iter().map(|f| f.tag()).join(", ");
        return Err(Error::MixedFamilies(names));
    }
    match families.into_iter().next() {
        Some(Family::Y) => Err(Error::WrongFamily { found: "y".into(), expected: "an indexed family".into() }),
        other => Ok(other),
    }
}

/// `♭[i]` of one raw monomial given as factor slots.
///
/// Slots may include formal unit factors such as `x₀`; lowering one of those
/// produces `x₋₁`, which kills the term.
pub fn lower_slots(slots: &[Variable], i: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    if i > slots.len() {
        return out;
    }
    for subset in (0..slots.len()).combinations(i) {
        let mut lowered = slots.to_vec();
        for k in subset {
            lowered[k] = lowered[k].with_index(lowered[k].index() - 1);
        }
        if let Some(m) = Monomial::from_slots(&lowered) {
            out.accumulate(m, num_traits::One::one());
        }
    }
    out.prune();
    out
}

/// `p♭[i]`, extended linearly over the terms of `p`.
///
/// `p` must be written in a single indexed family.
pub fn lower(p: &Polynomial, i: usize) -> Result<Polynomial> {
    sole_family(p)?;
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        if (m.factor_count() as usize) < i {
            continue;
        }
        for (lm, lc) in lower_slots(&m.slots(), i).terms() {
            out.accumulate(lm.clone(), lc * c);
        }
    }
    out.prune();
    Ok(out)
}

/// Renames every `dᵢ` to `d_{i+s}`.
pub fn shift_indices(p: &Polynomial, s: i32) -> Result<Polynomial> {
    if let Some(f) = p.families().into_iter().find(|f| *f != Family::D) {
        return Err(Error::WrongFamily { found: f.to_string(), expected: "d".into() });
    }
    Ok(p.map_variables(|v| v.with_index(v.index() + s)))
}

/// A polynomial in `c` and `y` split by powers of `y`:
/// `Σ parts[e]·yᵉ`, where `parts[e]` has Chern degree `top_degree − e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YExpansion {
    top_degree: i64,
    parts: BTreeMap<u32, Polynomial>,
}

impl YExpansion {
    pub fn top_degree(&self) -> i64 {
        self.top_degree
    }

    /// Coefficient of `yᵉ` (zero when absent).
    pub fn part(&self, e: u32) -> Polynomial {
        self.parts.get(&e).cloned().unwrap_or_default()
    }

    /// The part that the lowering identity pairs with `♭[i]`: the
    /// coefficient of `yⁱ`, of Chern degree `top − i`.
    pub fn lowered(&self, i: usize) -> Polynomial {
        u32::try_from(i).map(|e| self.part(e)).unwrap_or_default()
    }

    /// Nonzero parts in increasing `y` exponent.
    pub fn parts(&self) -> impl Iterator<Item = (u32, &Polynomial)> {
        self.parts.iter().map(|(e, p)| (*e, p))
    }

    /// `Σ parts[e]·yᵉ`.
    pub fn reconstruct(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&e, part) in &self.parts {
            out += &(part * &Polynomial::var(Variable::y()).pow(e));
        }
        out
    }
}

/// Substitutes `c♯ᵢ ↦ [tⁱ] c·ξ_num/ξ_den` (generic `c₁ … c_cap`) into a
/// homogeneous polynomial in the `cs` family and collects by powers of `y`.
pub fn twist_expand(
    p: &Polynomial,
    xi_num: &TruncatedSeries,
    xi_den: &TruncatedSeries,
    cap: usize,
) -> Result<YExpansion> {
    if let Some(f) = p.families().into_iter().find(|f| *f != Family::Cs) {
        return Err(Error::WrongFamily { found: f.to_string(), expected: "cs".into() });
    }
    let top_degree = p.homogeneous_degree()?.unwrap_or(0);
    if top_degree as usize > cap {
        return Err(Error::CapOverflow { index: top_degree, cap });
    }
    for xi in [xi_num, xi_den] {
        if xi.cap() != cap {
            return Err(Error::CapMismatch(xi.cap(), cap));
        }
        if !xi.is_graded() {
            return Err(Error::Precondition("twisting class must have tⁱ-coefficient of degree i".into()));
        }
    }
    let generic = TruncatedSeries::total_class(Family::C, cap)?;
    let sharp = twist_total_class(&generic, xi_num, xi_den)?;
    let substituted = p.substitute(|v| {
        let i = v.index() as usize;
        if i > cap {
            return Err(Error::CapOverflow { index: i as i64, cap });
        }
        Ok(Some(sharp.coeff(i).clone()))
    })?;

    let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for (m, c) in substituted.terms() {
        let (e, rest) = m.split_y();
        parts.entry(e).or_default().accumulate(rest, c.clone());
    }
    for part in parts.values_mut() {
        part.prune();
    }
    parts.retain(|_, part| !part.is_zero());
    Ok(YExpansion { top_degree, parts })
}

/// `twist_expand` with the default twist `ξ = 1 + y`.
pub fn sharp_expand(p: &Polynomial, cap: usize) -> Result<YExpansion> {
    let line = TruncatedSeries::from_graded(&(Polynomial::one() + Polynomial::var(Variable::y())), cap)?;
    twist_expand(p, &line, &TruncatedSeries::one(cap), cap)
}

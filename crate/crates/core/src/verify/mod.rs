//! Executable checks of the lowering calculus, the catalog and the Schur
//! expansions.
//!
//! Each check produces a [`CheckReport`] carrying a provenance note for its
//! expected values. Randomized checks derive their RNG from the suite seed
//! and the check name, so reports are reproducible.

pub mod fixtures;
mod random;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use random::random_homogeneous;

use crate::algebra::{rat, Family, Polynomial, TruncatedSeries, Variable};
use crate::catalog::{
    self, aij, codim_contact, codim_sigma_ij, gtp_sigma_r, safe_window, shape_sigma_ij, specialize, ts_terms, A3Ranges,
    Algebra, BoardmanSymbol, SeriesOptions, Window,
};
use crate::lowering::{lower, sharp_expand, twist_expand};
use crate::schur::{jacobi_trudi, schur_positive, to_schur, Partition, SchurExpansion};
use crate::{Error, Result};
use fixtures::Golden;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_MAX_DEGREE: u32 = 8;
pub const MAX_TERMS: usize = 6;
pub const MAX_COEFF: i64 = 9;

/// Where the expected values of a check come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Printed in the published source.
    Published,
    /// Follows directly from a definition or convention.
    Identity,
    /// Computed by an independent route (oracle, enumeration, expansion).
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Published => "published",
            Provenance::Identity => "identity",
            Provenance::Derived => "derived",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub suite: String,
    pub status: Status,
    pub provenance: Provenance,
    pub anchor: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    /// Smallest witness of a failure, e.g. one differing term.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckReport {
    fn new(name: &str, provenance: Provenance, anchor: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            suite: String::new(),
            status: Status::Pass,
            provenance,
            anchor: anchor.to_string(),
            details: Vec::new(),
            expected: None,
            actual: None,
            counterexample: None,
            seed: None,
        }
    }

    fn from_golden(g: &Golden) -> Self {
        CheckReport::new(g.name, g.provenance, g.anchor)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Records a failure; the first counterexample wins.
    fn fail(&mut self, counterexample: impl Into<String>) {
        if self.status == Status::Pass {
            self.counterexample = Some(counterexample.into());
        }
        self.status = Status::Fail;
    }

    fn require(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok {
            self.fail(counterexample());
        }
    }

    /// Exact polynomial equality; on mismatch keeps both sides and one
    /// differing term.
    fn compare(&mut self, context: &str, expected: &Polynomial, actual: &Polynomial) {
        if let Some((m, c)) = actual.first_difference(expected) {
            if self.status == Status::Pass {
                self.expected = Some(expected.to_string());
                self.actual = Some(actual.to_string());
            }
            self.fail(format!("{context}: term {m} differs by {c}"));
        }
    }

    fn error(&mut self, context: &str, e: Error) {
        self.fail(format!("{context}: {e}"));
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}/{} [{}] {}", self.suite, self.name, self.provenance, self.anchor)?;
        if let Some(seed) = self.seed {
            write!(f, " (seed {seed})")?;
        }
        for d in &self.details {
            write!(f, "\n    {d}")?;
        }
        if let Some(e) = &self.expected {
            write!(f, "\n    expected: {e}")?;
        }
        if let Some(a) = &self.actual {
            write!(f, "\n    actual:   {a}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n    counterexample: {c}")?;
        }
        Ok(())
    }
}

fn golden_poly(g: &Golden) -> Polynomial {
    g.value.parse().unwrap_or_else(|e| panic!("fixture {} does not parse: {e}", g.name))
}

fn golden_schur(g: &Golden) -> SchurExpansion {
    g.value
        .split_whitespace()
        .map(|item| {
            let (lambda, c) = item.rsplit_once(':').expect("fixture entries are `partition:coeff`");
            let lambda: Partition = lambda.parse().expect("fixture partition");
            let c: i64 = c.parse().expect("fixture coefficient");
            (lambda, rat(c))
        })
        .collect()
}

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    // FNV-1a keeps the per-check streams stable across platforms
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn cs_to_c(p: &Polynomial) -> Polynomial {
    p.map_variables(|v| if v.family() == Family::Cs { Variable::c(v.index()) } else { v })
}

fn window(w: u32) -> Window {
    Window::new(w).expect("suite windows are in range")
}

fn tp(algebra: Algebra, k: i64, w: u32) -> Result<Polynomial> {
    catalog::thom_polynomial(algebra, k, window(w), &SeriesOptions::default())
}

/// Compares every lowering `p♭[i]` with the `yⁱ` part of the twisted
/// expansion `p(c·(1+y))`. Returns the first mismatch.
fn flat_mismatch(p_sharp: &Polynomial) -> Result<Option<String>> {
    let degree = p_sharp.homogeneous_degree()?.unwrap_or(0) as usize;
    let expansion = sharp_expand(p_sharp, degree.max(1))?;
    let as_c = cs_to_c(p_sharp);
    for i in 0..=degree + 1 {
        let lowered = lower(&as_c, i)?;
        let part = expansion.lowered(i);
        if let Some((m, c)) = part.first_difference(&lowered) {
            return Ok(Some(format!("p = {p_sharp}, i = {i}: term {m} differs by {c}")));
        }
    }
    Ok(None)
}

/// Lowering identity against `(1 + y)`-twisted expansion on random inputs.
pub fn check_flat_oracle(trials: usize, max_degree: u32, seed: u64) -> CheckReport {
    let mut r = CheckReport::new(
        "flat-random",
        Provenance::Derived,
        "y^i part of p(c(1+y)) equals p flat[i] for random homogeneous p",
    );
    r.seed = Some(seed);
    r.note(format!("{trials} trials, degree 1..={max_degree}, <= {MAX_TERMS} terms, |coeff| <= {MAX_COEFF}"));
    let mut rng = rng_for(seed, "flat-random");
    for trial in 0..trials {
        let degree = rand::Rng::gen_range(&mut rng, 1..=max_degree.max(1));
        let p = random_homogeneous(&mut rng, Family::Cs, degree, MAX_TERMS, MAX_COEFF);
        match flat_mismatch(&p) {
            Ok(None) => {}
            Ok(Some(witness)) => {
                r.fail(format!("trial {trial}: {witness}"));
                break;
            }
            Err(e) => {
                r.error(&format!("trial {trial}"), e);
                break;
            }
        }
    }
    r
}

/// Consecutive Thom polynomials: `p♭[i] = 0` just above the gap and
/// `p♭[gap] = k_η·q`.
pub fn check_tpflat_pair(
    name: &str,
    p_sharp: &Polynomial,
    q: &Polynomial,
    gap: usize,
    expected_k: i64,
) -> Result<CheckReport> {
    let dp = p_sharp.homogeneous_degree()?.unwrap_or(0);
    let dq = q.homogeneous_degree()?.unwrap_or(0);
    if dp - dq != gap as i64 {
        return Err(Error::Precondition(format!("degrees {dp} and {dq} do not differ by the gap {gap}")));
    }
    let mut r = CheckReport::new(
        name,
        Provenance::Derived,
        "flat[i] vanishes above the codimension gap and equals k_eta times the smaller Thom polynomial at it",
    );
    r.note(format!("p = {p_sharp}"));
    r.note(format!("q = {q}, gap {gap}, k_eta {expected_k}"));
    for i in gap + 1..=gap + 3 {
        match lower(p_sharp, i) {
            Ok(l) => r.compare(&format!("flat[{i}]"), &Polynomial::zero(), &l),
            Err(e) => r.error(&format!("flat[{i}]"), e),
        }
    }
    match lower(p_sharp, gap) {
        Ok(l) => r.compare(&format!("flat[{gap}]"), &q.scale(&rat(expected_k)), &l),
        Err(e) => r.error(&format!("flat[{gap}]"), e),
    }
    Ok(r)
}

/// Twisting the `C[x,y]/(x³,y²)` Thom polynomial by `x ↦ x²`.
pub fn check_product_masik() -> CheckReport {
    use fixtures::*;
    let mut r = CheckReport::new(
        "masik",
        Provenance::Published,
        "product with x -> x^2: y^7, y^6 parts vanish, y^5 part is 4 tp(A2), y^4 part as printed",
    );
    let run = || -> Result<_> {
        let cap = 7;
        let num = TruncatedSeries::from_graded(&golden_poly(&MASIK_TWIST_NUM), cap)?;
        let den = TruncatedSeries::from_graded(&golden_poly(&MASIK_TWIST_DEN), cap)?;
        twist_expand(&golden_poly(&MASIK_SHARP), &num, &den, cap)
    };
    match run() {
        Ok(e) => {
            r.note(format!("top degree {}", e.top_degree()));
            r.compare("y^7 part", &Polynomial::zero(), &e.part(7));
            r.compare("y^6 part", &Polynomial::zero(), &e.part(6));
            r.compare("y^5 part", &golden_poly(&MASIK_Y5), &e.part(5));
            r.compare("y^4 part", &golden_poly(&MASIK_Y4), &e.part(4));
            r.compare("y^5 part / 4", &golden_poly(&A2_TP_K0), &e.part(5).scale(&crate::algebra::ratio(1, 4)));
        }
        Err(e) => r.error("twist", e),
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Flat,
    Tpflat,
    Shapes,
    Schur,
    Masik,
    Catalog,
}

impl Suite {
    pub const PARTS: [Suite; 6] =
        [Suite::Flat, Suite::Tpflat, Suite::Shapes, Suite::Schur, Suite::Masik, Suite::Catalog];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Flat => "flat",
            Suite::Tpflat => "tpflat",
            Suite::Shapes => "shapes",
            Suite::Schur => "schur",
            Suite::Masik => "masik",
            Suite::Catalog => "catalog",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::PARTS)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

type Check = Box<dyn Fn(u64) -> CheckReport + Send + Sync>;

fn check<F>(f: F) -> Check
where
    F: Fn(u64) -> CheckReport + Send + Sync + 'static,
{
    Box::new(f)
}

/// Runs a suite; checks fan out in parallel and reports come back in a fixed
/// order.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckReport> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        one => vec![one],
    };
    let jobs: Vec<(Suite, Check)> =
        suites.into_iter().flat_map(|s| checks_for(s).into_iter().map(move |c| (s, c))).collect();
    jobs.par_iter()
        .map(|(s, c)| {
            let mut report = c(seed);
            report.suite = s.name().to_string();
            report
        })
        .collect()
}

pub fn run_suite_named(name: &str, seed: u64) -> Result<Vec<CheckReport>> {
    Ok(run_suite(name.parse()?, seed))
}

fn checks_for(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => Suite::PARTS.into_iter().flat_map(checks_for).collect(),
        Suite::Flat => flat_checks(),
        Suite::Tpflat => tpflat_checks(),
        Suite::Shapes => shape_checks(),
        Suite::Schur => schur_checks(),
        Suite::Masik => vec![check(|_| check_product_masik())],
        Suite::Catalog => catalog_checks(),
    }
}

fn flat_checks() -> Vec<Check> {
    use fixtures::*;
    vec![
        check(|_| {
            let mut r = CheckReport::from_golden(&LOWERING_OUTPUT);
            match lower(&golden_poly(&LOWERING_INPUT), 2) {
                Ok(got) => {
                    let text = got.to_string();
                    r.require(text == LOWERING_OUTPUT.value, || format!("printed `{text}`"));
                    r.compare("flat[2]", &golden_poly(&LOWERING_OUTPUT), &got);
                }
                Err(e) => r.error("flat[2]", e),
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::new("flat-single-monomial", Provenance::Identity, "cs[2]^2: y^2 part is c[1]^2");
            let p: Polynomial = "cs[2]^2".parse().expect("literal");
            match sharp_expand(&p, 4) {
                Ok(e) => r.compare("y^2 part", &"c[1]^2".parse().expect("literal"), &e.part(2)),
                Err(e) => r.error("expand", e),
            }
            match flat_mismatch(&p) {
                Ok(w) => r.require(w.is_none(), || w.unwrap_or_default()),
                Err(e) => r.error("oracle", e),
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::from_golden(&A2_SHARP);
            r.name = "flat-a2-sharp".into();
            let p = golden_poly(&A2_SHARP);
            match sharp_expand(&p, 4) {
                Ok(e) => r.compare("y^2 part", &golden_poly(&A2_TP_K0), &e.part(2)),
                Err(e) => r.error("expand", e),
            }
            match flat_mismatch(&p) {
                Ok(w) => r.require(w.is_none(), || w.unwrap_or_default()),
                Err(e) => r.error("oracle", e),
            }
            r
        }),
        check(|seed| check_flat_oracle(DEFAULT_TRIALS, DEFAULT_MAX_DEGREE, seed)),
    ]
}

fn tpflat_checks() -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for k in 0..=2i64 {
        out.push(check(move |_| {
            let name = format!("tpflat-a2-k{}", k + 1);
            let pair = tp(Algebra::A2, k + 1, 4).and_then(|p| Ok((p, tp(Algebra::A2, k, 4)?)));
            match pair.and_then(|(p, q)| check_tpflat_pair(&name, &p, &q, 2, 1)) {
                Ok(r) => r,
                Err(e) => {
                    let mut r = CheckReport::new(&name, Provenance::Derived, "A2 consecutive Thom polynomials");
                    r.error("setup", e);
                    r
                }
            }
        }));
    }
    for r_ in 1..=3u32 {
        out.push(check(move |_| {
            let name = format!("tpflat-sigma{r_}-k1");
            let g = gtp_sigma_r(r_);
            match check_tpflat_pair(&name, &specialize(&g, 1), &specialize(&g, 0), r_ as usize, 1) {
                Ok(r) => r,
                Err(e) => {
                    let mut r = CheckReport::new(&name, Provenance::Derived, "Giambelli-Thom-Porteous pair");
                    r.error("setup", e);
                    r
                }
            }
        }));
    }
    for algebra in Algebra::ALL {
        out.push(check(move |_| {
            let entry = algebra.entry();
            let gap = entry.factor_count() as usize;
            let mut r = CheckReport::new(
                &format!("tpflat-catalog-{}", entry.name),
                Provenance::Derived,
                "lower(tp(k+1), delta-1) = tp(k) and lower(tp(k+1), i) = 0 for i > delta-1, k = 0..3",
            );
            for k in 0..=3i64 {
                let w = safe_window(algebra, k + 1);
                let pair = tp(algebra, k + 1, w).and_then(|p| Ok((p, tp(algebra, k, w)?)));
                let (p, q) = match pair {
                    Ok(pq) => pq,
                    Err(e) => {
                        r.error(&format!("k = {k}"), e);
                        continue;
                    }
                };
                for i in gap + 1..=gap + 3 {
                    match lower(&p, i) {
                        Ok(l) => r.compare(&format!("k = {k}, flat[{i}]"), &Polynomial::zero(), &l),
                        Err(e) => r.error(&format!("k = {k}, flat[{i}]"), e),
                    }
                }
                match lower(&p, gap) {
                    Ok(l) => r.compare(&format!("k = {k}, flat[{gap}]"), &q.scale(&rat(entry.k_eta)), &l),
                    Err(e) => r.error(&format!("k = {k}, flat[{gap}]"), e),
                }
            }
            r
        }));
    }
    out
}

fn shape_checks() -> Vec<Check> {
    vec![
        check(|_| {
            let mut r = CheckReport::new(
                "series-shape",
                Provenance::Derived,
                "every Thom series term has delta-1 factors and d-degree gamma-delta+1, windows 1..=4",
            );
            for algebra in Algebra::ALL {
                let entry = algebra.entry();
                for w in 1..=4 {
                    match ts_terms(algebra, window(w), &SeriesOptions::default()) {
                        Ok(s) => {
                            for (m, _) in s.terms() {
                                r.require(
                                    m.factor_count() == entry.factor_count() && m.degree() == entry.series_degree(),
                                    || format!("{} W={w}: term {m}", entry.name),
                                );
                            }
                        }
                        Err(e) => r.error(&format!("{} W={w}", entry.name), e),
                    }
                }
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "sigma-r-shape",
                Provenance::Derived,
                "det(d_{r-1+j-i}) has terms with r factors and degree r(r-1), r = 1..=4",
            );
            for rank in 1..=4u32 {
                let g = gtp_sigma_r(rank);
                r.require(!g.is_zero(), || format!("r = {rank}: zero determinant"));
                let (f, d) = (rank, i64::from(rank * (rank - 1)));
                for (m, _) in g.terms() {
                    r.require(m.factor_count() == f && m.degree() == d, || format!("r = {rank}: term {m}"));
                }
                match BoardmanSymbol::corank(rank).and_then(shape_sigma_ij) {
                    Ok(shape) => r.require(shape == (d, i64::from(f)), || format!("shape(r={rank},0) = {shape:?}")),
                    Err(e) => r.error(&format!("shape r = {rank}"), e),
                }
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "sigma-ij-codim",
                Provenance::Derived,
                "codim(i,0,k) = i(i+k); codim(i,j,k) = degree + factors(k+1); codim(1,1,0) = 2; codim(2,2,0) = 10",
            );
            for i in 1..=5u32 {
                for j in 0..=i {
                    for k in 0..=3i64 {
                        let sym = BoardmanSymbol::new(i, j).expect("j <= i");
                        let (codim, shape) = match (codim_sigma_ij(sym, k), shape_sigma_ij(sym)) {
                            (Ok(c), Ok(s)) => (c, s),
                            (Err(e), _) | (_, Err(e)) => {
                                r.error(&format!("{sym}, k = {k}"), e);
                                continue;
                            }
                        };
                        if j == 0 && i <= 4 {
                            let expect = i64::from(i) * (i64::from(i) + k);
                            r.require(codim == expect, || format!("{sym}, k = {k}: {codim} != {expect}"));
                        }
                        r.require(codim == shape.0 + shape.1 * (k + 1), || {
                            format!("{sym}, k = {k}: codim {codim} vs shape {shape:?}")
                        });
                    }
                }
            }
            let small = |i, j| BoardmanSymbol::new(i, j).and_then(|s| codim_sigma_ij(s, 0));
            r.require(small(1, 1) == Ok(2), || "codim(1,1,0) != 2".into());
            r.require(small(2, 2) == Ok(10), || "codim(2,2,0) != 10".into());
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "specialization-degree",
                Provenance::Derived,
                "deg specialize(ts, k) = k(delta-1) + gamma for every entry, k = 0..=4",
            );
            for algebra in Algebra::ALL {
                for k in 0..=4i64 {
                    let expect = codim_contact(algebra.entry(), k, true);
                    match (tp(algebra, k, safe_window(algebra, k)), expect) {
                        (Ok(p), Ok(codim)) => {
                            let deg = p.homogeneous_degree();
                            r.require(deg == Ok(Some(codim)), || format!("{algebra} k = {k}: {deg:?} vs {codim}"));
                        }
                        (Err(e), _) | (_, Err(e)) => r.error(&format!("{algebra} k = {k}"), e),
                    }
                }
            }
            r
        }),
    ]
}

fn schur_golden_check(g: &'static Golden, input: Polynomial) -> CheckReport {
    let mut r = CheckReport::from_golden(g);
    match to_schur(&input) {
        Ok(e) => {
            let want = golden_schur(g);
            r.require(e == want, || format!("expansion {e} != {want}"));
            r.compare("round trip", &input, &e.expand());
        }
        Err(e) => r.error("to_schur", e),
    }
    r
}

fn schur_checks() -> Vec<Check> {
    use fixtures::*;
    vec![
        check(|_| schur_golden_check(&A2_SCHUR_K0, golden_poly(&A2_TP_K0))),
        check(|_| schur_golden_check(&A2_SCHUR_K1, golden_poly(&A2_TP_K1))),
        check(|_| schur_golden_check(&SCHUR_NEGATIVE, "c[1]^2 - 2*c[2]".parse().expect("literal"))),
        check(|seed| {
            let mut r = CheckReport::new(
                "schur-round-trip",
                Provenance::Identity,
                "expanding the Schur coefficients back reproduces p, 100 random p of degree <= 8",
            );
            r.seed = Some(seed);
            let mut rng = rng_for(seed, "schur-round-trip");
            for trial in 0..100 {
                let degree = rand::Rng::gen_range(&mut rng, 1..=DEFAULT_MAX_DEGREE);
                let p = random_homogeneous(&mut rng, Family::C, degree, MAX_TERMS, MAX_COEFF);
                match to_schur(&p) {
                    Ok(e) => r.compare(&format!("trial {trial}, p = {p}"), &p, &e.expand()),
                    Err(e) => r.error(&format!("trial {trial}"), e),
                }
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "sigma-r-rectangle",
                Provenance::Derived,
                "specialize(det(d_{r-1+j-i}), k) is the single Schur polynomial s((r+k)^r), r <= 3, k <= 2",
            );
            for rank in 1..=3u32 {
                for k in 0..=2i64 {
                    let p = specialize(&gtp_sigma_r(rank), k);
                    let rect = Partition::new(vec![rank + k as u32; rank as usize]);
                    match to_schur(&p) {
                        Ok(e) => {
                            let one: SchurExpansion = [(rect.clone(), rat(1))].into_iter().collect();
                            r.require(e == one, || format!("r = {rank}, k = {k}: {e}"));
                            r.compare(&format!("r = {rank}, k = {k}"), &jacobi_trudi(&rect), &p);
                        }
                        Err(e) => r.error(&format!("r = {rank}, k = {k}"), e),
                    }
                }
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "schur-positivity",
                Provenance::Derived,
                "Schur coefficients of specialize(ts(Q), k) are >= 0 for A0, A1, A2, A3, I22, k <= 3, W <= 4",
            );
            for algebra in Algebra::ALL {
                for k in 0..=3i64 {
                    for w in 1..=4 {
                        match tp(algebra, k, w).and_then(|p| schur_positive(&p)) {
                            Ok((ok, e)) => r.require(ok, || format!("{algebra} k = {k} W = {w}: {e}")),
                            Err(e) => r.error(&format!("{algebra} k = {k} W = {w}"), e),
                        }
                    }
                }
            }
            r
        }),
    ]
}

fn catalog_checks() -> Vec<Check> {
    use fixtures::*;
    let series_golden = |g: &'static Golden, algebra: Algebra, w: u32| {
        check(move |_| {
            let mut r = CheckReport::from_golden(g);
            match ts_terms(algebra, window(w), &SeriesOptions::default()) {
                Ok(s) => {
                    r.require(s.to_string() == g.value, || format!("printed `{s}`"));
                    r.compare("series", &golden_poly(g), &s);
                }
                Err(e) => r.error("series", e),
            }
            r
        })
    };
    let tp_golden = |g: &'static Golden, k: i64| {
        check(move |_| {
            let mut r = CheckReport::from_golden(g);
            match tp(Algebra::A2, k, 4) {
                Ok(p) => {
                    r.require(p.to_string() == g.value, || format!("printed `{p}`"));
                    r.compare("specialization", &golden_poly(g), &p);
                }
                Err(e) => r.error("specialization", e),
            }
            r
        })
    };
    vec![
        series_golden(&A1_SERIES, Algebra::A1, 4),
        series_golden(&A2_SERIES_W2, Algebra::A2, 2),
        series_golden(&A2_SERIES_W4, Algebra::A2, 4),
        tp_golden(&A2_TP_K0, 0),
        tp_golden(&A2_TP_K1, 1),
        check(|_| {
            let mut r = CheckReport::from_golden(&CUSP_CODIM);
            let got = codim_contact(Algebra::A2.entry(), 0, true);
            r.require(got == Ok(2), || format!("codim(A2, 0) = {got:?}"));
            r
        }),
        check(|_| {
            let mut r = CheckReport::new(
                "integrality",
                Provenance::Derived,
                "specialize(ts(Q), k) has integer coefficients for A0, A1, A2, I22, k <= 3, W <= 4",
            );
            for algebra in [Algebra::A0, Algebra::A1, Algebra::A2, Algebra::I22] {
                for k in 0..=3i64 {
                    for w in 1..=4 {
                        match tp(algebra, k, w) {
                            Ok(p) => {
                                r.require(p.has_integer_coefficients(), || format!("{algebra} k = {k} W = {w}: {p}"))
                            }
                            Err(e) => r.error(&format!("{algebra} k = {k} W = {w}"), e),
                        }
                    }
                }
            }
            match ts_terms(Algebra::I22, window(4), &SeriesOptions::default()) {
                Ok(s) => r.note(format!("I22 series itself integral: {}", s.has_integer_coefficients())),
                Err(e) => r.error("I22 series", e),
            }
            r
        }),
        check(|_| {
            let mut r = CheckReport::from_golden(&AIJ_CORNERS);
            r.note("symmetry and nonnegativity over i, j <= 8");
            r.require(aij(0, 0) == rat(0), || format!("a(0,0) = {}", aij(0, 0)));
            r.require(aij(1, 0) == rat(1), || format!("a(1,0) = {}", aij(1, 0)));
            r.require(aij(0, 1) == rat(1), || format!("a(0,1) = {}", aij(0, 1)));
            for i in 0..=8 {
                for j in 0..=8 {
                    let (a, b) = (aij(i, j), aij(j, i));
                    r.require(a == b, || format!("a({i},{j}) = {a} != a({j},{i}) = {b}"));
                    r.require(a >= rat(0), || format!("a({i},{j}) = {a} < 0"));
                }
            }
            r
        }),
        check(|_| {
            let policy = A3Ranges::default();
            let mut r = CheckReport::from_golden(&A3_TP_K0);
            r.name = "a3-range-policy".into();
            r.note(format!("range policy {policy}: {}", policy.describe()));
            let opts = SeriesOptions { a3_ranges: policy, ..Default::default() };
            match catalog::thom_polynomial(Algebra::A3, 0, window(safe_window(Algebra::A3, 0)), &opts) {
                Ok(p) => {
                    r.require(p.has_integer_coefficients(), || format!("non-integral: {p}"));
                    match schur_positive(&p) {
                        Ok((ok, e)) => {
                            r.note(format!("Schur expansion {e}"));
                            r.require(ok, || format!("not Schur positive: {e}"));
                        }
                        Err(e) => r.error("schur", e),
                    }
                    r.compare("k = 0", &golden_poly(&A3_TP_K0), &p);
                }
                Err(e) => r.error("A3", e),
            }
            let printed = SeriesOptions { a3_ranges: A3Ranges::AsPrinted, ..Default::default() };
            if let Ok(p) = catalog::thom_polynomial(Algebra::A3, 0, window(2), &printed) {
                r.note(format!("as-printed ranges give {p} (integral: {})", p.has_integer_coefficients()));
            }
            r
        }),
    ]
}

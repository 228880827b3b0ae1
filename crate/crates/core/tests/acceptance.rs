//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thomkit::algebra::{rat, TruncatedSeries};
use thomkit::catalog::{
    aij, catalog_document, codim_sigma_ij, gtp_sigma_r, shape_sigma_ij, specialize, thom_polynomial, ts_terms,
    A3Ranges, Algebra, BoardmanSymbol, SeriesOptions, Window,
};
use thomkit::lowering::{lower, twist_expand};
use thomkit::schur::{jacobi_trudi, schur_positive, to_schur, Partition};
use thomkit::verify::{check_flat_oracle, random_homogeneous, run_suite, Suite};
use thomkit::{Family, Polynomial, Rational, Variable};

type Outcome = Result<(), String>;

fn poly(s: &str) -> Polynomial {
    s.parse().unwrap_or_else(|e| panic!("`{s}`: {e}"))
}

fn window(n: u32) -> Window {
    Window::new(n).unwrap()
}

fn tp(a: Algebra, k: i64, w: u32) -> Result<Polynomial, String> {
    thom_polynomial(a, k, window(w), &SeriesOptions::default()).map_err(|e| e.to_string())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn same(context: &str, expected: &Polynomial, actual: &Polynomial) -> Outcome {
    ensure(expected == actual, || format!("{context}: expected {expected}, got {actual}"))
}

fn lowering_golden() -> Outcome {
    let got = lower(&poly("x[1]*x[2]*x[5] + x[8] + x[4]^2"), 2).map_err(|e| e.to_string())?;
    let want = "x[1]*x[5] + x[2]*x[4] + x[1]^2*x[4] + x[3]^2";
    ensure(got.to_string() == want, || format!("printed `{got}`"))
}

/// Coefficients of `yⁱ` in `p(c(1+y))`, expanded by plain multiplication.
fn sharp_parts(p: &Polynomial) -> Vec<Polynomial> {
    let y = Polynomial::var(Variable::y());
    let mut expanded = Polynomial::zero();
    for (m, c) in p.terms() {
        let mut term = Polynomial::constant(c.clone());
        for v in m.slots() {
            term = term
                * (Polynomial::var(Variable::c(v.index())) + Polynomial::var(Variable::c(v.index() - 1)) * y.clone());
        }
        expanded += &term;
    }
    let mut parts = Vec::new();
    for (m, c) in expanded.terms() {
        let (e, rest) = m.split_y();
        if parts.len() <= e as usize {
            parts.resize(e as usize + 1, Polynomial::zero());
        }
        parts[e as usize] += &Polynomial::term(rest, c.clone());
    }
    parts
}

fn flat_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..200 {
        let degree = rng.gen_range(1..=8);
        let p = random_homogeneous(&mut rng, Family::C, degree, 6, 9);
        let parts = sharp_parts(&p);
        for i in 0..=degree as usize + 1 {
            let want = parts.get(i).cloned().unwrap_or_else(Polynomial::zero);
            let got = lower(&p, i).map_err(|e| e.to_string())?;
            same(&format!("trial {trial}, p = {p}, flat[{i}]"), &want, &got)?;
        }
    }
    let report = check_flat_oracle(200, 8, 1);
    ensure(report.passed(), || report.to_string())
}

fn a2_specializations() -> Outcome {
    let k0 = tp(Algebra::A2, 0, 4)?;
    let k1 = tp(Algebra::A2, 1, 4)?;
    ensure(k0.to_string() == "c[1]^2 + c[2]", || format!("k = 0 printed `{k0}`"))?;
    ensure(k1.to_string() == "c[2]^2 + c[1]*c[3] + 2*c[4]", || format!("k = 1 printed `{k1}`"))?;
    for k in 0..=2 {
        let (p, q) = (tp(Algebra::A2, k + 1, 4)?, tp(Algebra::A2, k, 4)?);
        same(&format!("flat[2] of tp(A2, {})", k + 1), &q, &lower(&p, 2).map_err(|e| e.to_string())?)?;
        for i in 3..=5 {
            let l = lower(&p, i).map_err(|e| e.to_string())?;
            ensure(l.is_zero(), || format!("flat[{i}] of tp(A2, {}) = {l}", k + 1))?;
        }
    }
    Ok(())
}

fn product_example() -> Outcome {
    let p = poly(
        "2*cs[1]*cs[2]^3 - 2*cs[1]^2*cs[2]*cs[3] + 2*cs[2]^2*cs[3] + 2*cs[1]*cs[3]^2 \
         - 4*cs[1]*cs[2]*cs[4] + 2*cs[3]*cs[4] - 2*cs[2]*cs[5]",
    );
    let num = TruncatedSeries::from_graded(&poly("1 + 2*y"), 7).unwrap();
    let den = TruncatedSeries::from_graded(&poly("1 + y"), 7).unwrap();
    let e = twist_expand(&p, &num, &den, 7).map_err(|e| e.to_string())?;
    same("y^7 part", &Polynomial::zero(), &e.part(7))?;
    same("y^6 part", &Polynomial::zero(), &e.part(6))?;
    same("y^5 part", &poly("4*c[1]^2 + 4*c[2]"), &e.part(5))?;
    same("y^4 part", &poly("2*c[1]*c[2] - 2*c[1]^3 + 20*c[3]"), &e.part(4))
}

fn shapes() -> Outcome {
    for a in Algebra::ALL {
        let entry = a.entry();
        for w in 1..=4 {
            let s = ts_terms(a, window(w), &SeriesOptions::default()).map_err(|e| e.to_string())?;
            for (m, _) in s.terms() {
                ensure(m.factor_count() == entry.delta - 1, || format!("{a} W={w}: {m} factor count"))?;
                let want = i64::from(entry.gamma) - i64::from(entry.delta) + 1;
                ensure(m.degree() == want, || format!("{a} W={w}: {m} degree"))?;
            }
        }
    }
    for r in 1..=4u32 {
        let g = gtp_sigma_r(r);
        ensure(!g.is_zero(), || format!("gtp({r}) is zero"))?;
        for (m, _) in g.terms() {
            ensure(m.factor_count() == r && m.degree() == i64::from(r * (r - 1)), || format!("gtp({r}): {m}"))?;
        }
        let shape = shape_sigma_ij(BoardmanSymbol::new(r, 0).unwrap()).map_err(|e| e.to_string())?;
        ensure(shape == (i64::from(r * (r - 1)), i64::from(r)), || format!("shape({r},0) = {shape:?}"))?;
    }
    for i in 1..=4u32 {
        for k in 0..=3i64 {
            let c = codim_sigma_ij(BoardmanSymbol::new(i, 0).unwrap(), k).map_err(|e| e.to_string())?;
            ensure(c == i64::from(i) * (i64::from(i) + k), || format!("codim({i},0,{k}) = {c}"))?;
        }
    }
    Ok(())
}

const POSITIVE_FAMILY: [Algebra; 4] = [Algebra::A0, Algebra::A1, Algebra::A2, Algebra::I22];

fn integrality() -> Outcome {
    for a in POSITIVE_FAMILY {
        for k in 0..=3 {
            for w in 1..=4 {
                let p = tp(a, k, w)?;
                ensure(p.has_integer_coefficients(), || format!("{a} k={k} W={w}: {p}"))?;
            }
        }
    }
    Ok(())
}

fn schur_suite() -> Outcome {
    let e = to_schur(&poly("c[1]^2 + c[2]")).map_err(|e| e.to_string())?;
    let want: thomkit::schur::SchurExpansion =
        [(Partition::new(vec![1, 1]), rat(1)), (Partition::new(vec![2]), rat(2))].into_iter().collect();
    ensure(e == want, || format!("A2 k=0: {e}"))?;
    let e = to_schur(&poly("c[2]^2 + c[1]*c[3] + 2*c[4]")).map_err(|e| e.to_string())?;
    let want: thomkit::schur::SchurExpansion =
        [(Partition::new(vec![2, 2]), rat(1)), (Partition::new(vec![3, 1]), rat(2)), (Partition::new(vec![4]), rat(4))]
            .into_iter()
            .collect();
    ensure(e == want, || format!("A2 k=1: {e}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..100 {
        let degree = rng.gen_range(1..=8);
        let p = random_homogeneous(&mut rng, Family::C, degree, 6, 9);
        let back = to_schur(&p).map_err(|e| e.to_string())?.expand();
        same(&format!("round trip {trial}"), &p, &back)?;
    }
    for r in 1..=3u32 {
        for k in 0..=2i64 {
            let p = specialize(&gtp_sigma_r(r), k);
            let e = to_schur(&p).map_err(|e| e.to_string())?;
            let rect = Partition::new(vec![r + k as u32; r as usize]);
            ensure(e.len() == 1 && e.coefficient(&rect) == rat(1), || format!("sigma{r} k={k}: {e}"))?;
            same(&format!("sigma{r} k={k}"), &jacobi_trudi(&rect), &p)?;
        }
    }
    for a in POSITIVE_FAMILY {
        for k in 0..=3 {
            for w in 1..=4 {
                let (ok, e) = schur_positive(&tp(a, k, w)?).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{a} k={k} W={w}: {e}"))?;
            }
        }
    }
    Ok(())
}

type Bivariate = Vec<Vec<Rational>>;

fn zeros(n: usize) -> Bivariate {
    vec![vec![rat(0); n + 1]; n + 1]
}

/// Product of two bivariate series truncated to degree `n` in each variable.
fn convolve(x: &Bivariate, y: &Bivariate, n: usize) -> Bivariate {
    let mut out = zeros(n);
    for (i1, row) in x.iter().enumerate() {
        for (j1, a) in row.iter().enumerate() {
            for (i2, row2) in y.iter().enumerate().take(n + 1 - i1) {
                for (j2, b) in row2.iter().enumerate().take(n + 1 - j1) {
                    out[i1 + i2][j1 + j2] += a * b;
                }
            }
        }
    }
    out
}

/// `a(i,j)` as coefficients of an honest product of bivariate series.
fn aij_by_series(n: usize) -> Bivariate {
    // u(1-u)/(1-3u): multiply u - u^2 by the geometric series in 3u
    let mut numerator = zeros(n);
    let mut geometric = zeros(n);
    let mut power = rat(1);
    for row in geometric.iter_mut() {
        row[0] = power.clone();
        power *= rat(3);
    }
    let mut poly = zeros(n);
    poly[1][0] = rat(1);
    poly[2.min(n)][0] -= rat(1);
    let in_u = convolve(&poly, &geometric, n);
    for i in 0..=n {
        for j in 0..=n {
            // the same series in v is the transpose
            numerator[i][j] = &in_u[i][j] + &in_u[j][i];
        }
    }
    // 1/(1-u-v), solved from (1-u-v)K = 1 one coefficient at a time
    let mut kernel = zeros(n);
    for i in 0..=n {
        for j in 0..=n {
            let mut v = if i == 0 && j == 0 { rat(1) } else { rat(0) };
            if i > 0 {
                v += &kernel[i - 1][j];
            }
            if j > 0 {
                v += &kernel[i][j - 1];
            }
            kernel[i][j] = v;
        }
    }
    convolve(&numerator, &kernel, n)
}

fn generating_function() -> Outcome {
    ensure(aij(0, 0) == rat(0), || format!("a(0,0) = {}", aij(0, 0)))?;
    ensure(aij(1, 0) == rat(1) && aij(0, 1) == rat(1), || "a(1,0), a(0,1)".into())?;
    for (i, row) in aij_by_series(8).iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            ensure(&aij(i, j) == want, || format!("a({i},{j}) = {} vs {want}", aij(i, j)))?;
            ensure(aij(i, j) == aij(j, i), || format!("a({i},{j}) not symmetric"))?;
        }
    }
    Ok(())
}

fn a3_policy() -> Outcome {
    let opts = SeriesOptions::default();
    let policy = opts.a3_ranges;
    ensure(policy == A3Ranges::Reconciled, || format!("default policy {policy}"))?;
    let p = thom_polynomial(Algebra::A3, 0, window(4), &opts).map_err(|e| e.to_string())?;
    ensure(p.has_integer_coefficients(), || format!("A3 k=0 not integral: {p}"))?;
    let (ok, e) = schur_positive(&p).map_err(|e| e.to_string())?;
    ensure(ok, || format!("A3 k=0 not Schur positive: {e}"))?;
    let doc = catalog_document(&opts);
    let recorded = doc["entries"]
        .as_array()
        .and_then(|v| v.iter().find(|e| e["name"] == "A3"))
        .and_then(|e| e["range_policy"].as_str())
        .unwrap_or_default()
        .to_string();
    ensure(recorded.starts_with("reconciled"), || format!("catalog records `{recorded}`"))?;
    let reports = run_suite(Suite::Catalog, 1);
    let report = reports.iter().find(|r| r.name == "a3-range-policy").ok_or("no A3 report")?;
    ensure(report.passed(), || report.to_string())?;
    ensure(report.details.iter().any(|d| d.contains("reconciled")), || report.to_string())
}

fn verify_all() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_thomkit"))
        .args(["verify", "all", "--seed", "1", "--json"])
        .env_remove("THOMKIT_WINDOW")
        .env_remove("THOMKIT_STRICT")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let reports: Vec<serde_json::Value> =
        text.lines().map(serde_json::from_str).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(reports.len() == run_suite(Suite::All, 1).len(), || format!("{} reports", reports.len()))?;
    ensure(reports.iter().all(|r| r["provenance"].is_string()), || "report without provenance".into())?;
    let failed: Vec<_> = reports.iter().filter(|r| r["status"] != "pass").map(|r| r["name"].to_string()).collect();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}, failing checks {}", out.status.code(), failed.join(", "))
    })
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("lowering golden example", lowering_golden),
        ("lowering equals twisted expansion on 200 seeded polynomials", flat_oracle),
        ("A2 specializations and lowering consistency", a2_specializations),
        ("product example with x -> x^2", product_example),
        ("term shapes and codimensions", shapes),
        ("integrality of specializations", integrality),
        ("Schur suite", schur_suite),
        ("generating function a(i,j)", generating_function),
        ("A3 range policy", a3_policy),
        ("verify all --seed 1", verify_all),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {:>2} PASS  {name}", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

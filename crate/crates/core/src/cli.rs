//! Command-line front end.
//!
//! Exit codes: 0 success, 1 unparsable input or arguments, 2 a
//! precondition failed (wrong family, strict window breach, ...), 3 a
//! verification or positivity check failed.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::algebra::text::to_json_terms;
use crate::algebra::{Polynomial, TruncatedSeries};
use crate::catalog::{
    self, aij, codim_contact, codim_sigma_ij, A3Ranges, Algebra, BoardmanSymbol, SeriesOptions, Window, MAX_WINDOW,
};
use crate::lowering::{lower, twist_expand, YExpansion};
use crate::schur::schur_positive;
use crate::verify::{run_suite, Status, Suite};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "thomkit", version, about = "Exact Thom series, Thom polynomials and the lowering calculus")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Print polynomials as JSON term lists.
    #[arg(long, global = true)]
    pub json_terms: bool,
    /// Sort terms graded-lexicographically instead of in generation order.
    #[arg(long, global = true)]
    pub canonical: bool,
    /// Report degrees in cohomological grading (twice the Chern degree).
    #[arg(long, global = true)]
    pub cohomological: bool,
    /// Refuse series windows beyond an entry's anchored range.
    #[arg(long, global = true, env = "THOMKIT_STRICT")]
    pub strict: bool,
    /// With --strict, allow windows beyond the anchored range anyway.
    #[arg(long, global = true)]
    pub extrapolate: bool,
    /// Largest |index| kept when truncating a Thom series.
    #[arg(
        long,
        global = true,
        env = "THOMKIT_WINDOW",
        default_value_t = catalog::DEFAULT_WINDOW,
        value_parser = clap::value_parser!(u32).range(1..=i64::from(MAX_WINDOW)),
    )]
    pub window: u32,
    /// Summation ranges for the A3 series: reconciled or as-printed.
    #[arg(long, global = true, default_value = "reconciled", value_parser = parse_a3_ranges)]
    pub a3_ranges: A3Ranges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thom series of a catalog entry, truncated to the window.
    Ts {
        #[arg(value_parser = parse_algebra, required_unless_present = "list")]
        name: Option<Algebra>,
        /// Print the catalog as JSON instead.
        #[arg(long)]
        list: bool,
    },
    /// Thom polynomial at relative dimension K.
    Tp {
        #[arg(value_parser = parse_algebra)]
        name: Algebra,
        #[arg(long)]
        reldim: i64,
    },
    /// Lowering operator flat[I].
    Lower {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Expand p(c * num / den) by powers of y.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        /// Series truncation; defaults to the degree of the polynomial.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Substitute d[i] -> c[i+K+1].
    Specialize {
        #[arg(long)]
        reldim: i64,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Schur expansion of a polynomial in the c family.
    Schur {
        /// Exit with status 3 unless every coefficient is nonnegative.
        #[arg(long)]
        require_positive: bool,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Codimension of a contact class or a Thom-Boardman class.
    Codim {
        #[arg(long, value_parser = parse_algebra, conflicts_with = "sigma", required_unless_present = "sigma")]
        algebra: Option<Algebra>,
        /// Boardman symbol `I` or `I,J`.
        #[arg(long, value_parser = parse_sigma)]
        sigma: Option<BoardmanSymbol>,
        #[arg(long)]
        reldim: i64,
    },
    /// Coefficient a(I, J) of the A3 generating function.
    Aij { i: usize, j: usize },
    /// Run a verification suite.
    Verify {
        #[arg(default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = crate::verify::DEFAULT_SEED)]
        seed: u64,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
    },
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_a3_ranges(s: &str) -> Result<A3Ranges, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sigma(s: &str) -> Result<BoardmanSymbol, String> {
    let mut parts = s.split(',').map(|p| p.trim().parse::<u32>());
    let sym = match (parts.next(), parts.next(), parts.next()) {
        (Some(Ok(i)), None, None) => BoardmanSymbol::corank(i),
        (Some(Ok(i)), Some(Ok(j)), None) => BoardmanSymbol::new(i, j),
        _ => return Err(format!("expected `I` or `I,J`, got `{s}`")),
    };
    sym.map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Malformed(_) | Error::UnknownSuite(_) | Error::UnknownEntry(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

/// Output of a successful command, before rendering.
enum Outcome {
    Text(String),
    /// Text plus an exit status (failed checks still print their report).
    Checked(String, bool),
}

struct Session<'a> {
    global: &'a GlobalOpts,
    stdin: &'a mut dyn Read,
}

impl Session<'_> {
    fn options(&self) -> SeriesOptions {
        SeriesOptions {
            strict: self.global.strict,
            extrapolate: self.global.extrapolate,
            a3_ranges: self.global.a3_ranges,
        }
    }

    fn window(&self) -> crate::Result<Window> {
        Window::new(self.global.window)
    }

    fn input(&mut self, inline: Option<String>) -> crate::Result<Polynomial> {
        let text = match inline {
            Some(s) => s,
            None => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Malformed(format!("cannot read standard input: {e}")))?;
                s
            }
        };
        text.trim().parse()
    }

    fn render(&self, p: &Polynomial) -> String {
        let p = if self.global.canonical { p.canonical() } else { p.clone() };
        let mut out = if self.global.json_terms { to_json_terms(&p) } else { p.to_string() };
        if self.global.cohomological {
            if let Ok(Some(d)) = p.homogeneous_degree() {
                out.push_str(&format!("\ndegree: {}", 2 * d));
            }
        }
        out
    }

    fn render_expansion(&self, e: &YExpansion) -> String {
        let top = u32::try_from(e.top_degree()).unwrap_or(0);
        if self.global.json_terms {
            let parts: Vec<_> = (0..=top)
                .rev()
                .map(|k| {
                    let part = e.part(k);
                    let part = if self.global.canonical { part.canonical() } else { part };
                    let terms: serde_json::Value =
                        serde_json::from_str(&to_json_terms(&part)).expect("term lists are valid JSON");
                    serde_json::json!({ "y": k, "terms": terms })
                })
                .collect();
            return serde_json::json!({ "top_degree": e.top_degree(), "parts": parts }).to_string();
        }
        (0..=top)
            .rev()
            .map(|k| {
                let part = e.part(k);
                let part = if self.global.canonical { part.canonical() } else { part };
                format!("y^{k}: {part}")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn execute(&mut self, command: Command) -> crate::Result<Outcome> {
        let text = match command {
            Command::Ts { list: true, .. } => {
                let doc = catalog::catalog_document(&self.options());
                serde_json::to_string_pretty(&doc).expect("catalog serializes")
            }
            Command::Ts { name, .. } => {
                let name = name.ok_or_else(|| Error::Malformed("missing catalog name".into()))?;
                self.render(&catalog::ts_terms(name, self.window()?, &self.options())?)
            }
            Command::Tp { name, reldim } => {
                self.render(&catalog::thom_polynomial(name, reldim, self.window()?, &self.options())?)
            }
            Command::Lower { i, poly } => {
                let p = self.input(poly)?;
                self.render(&lower(&p, i)?)
            }
            Command::Twist { num, den, cap, poly } => {
                let p = self.input(poly)?;
                let degree = p.homogeneous_degree()?.unwrap_or(0);
                let cap = cap.unwrap_or(usize::try_from(degree).unwrap_or(0).max(1));
                let num = TruncatedSeries::from_graded(&num.trim().parse()?, cap)?;
                let den = TruncatedSeries::from_graded(&den.trim().parse()?, cap)?;
                self.render_expansion(&twist_expand(&p, &num, &den, cap)?)
            }
            Command::Specialize { reldim, poly } => {
                let p = self.input(poly)?;
                if let Some(f) = p.families().into_iter().find(|f| *f != crate::Family::D) {
                    return Err(Error::WrongFamily { found: f.to_string(), expected: "d".into() });
                }
                self.render(&catalog::specialize(&p, reldim))
            }
            Command::Schur { require_positive, poly } => {
                let p = self.input(poly)?;
                let (positive, e) = schur_positive(&p)?;
                let text = if self.global.json_terms { e.to_json().to_string() } else { e.to_string() };
                return Ok(Outcome::Checked(text, positive || !require_positive));
            }
            Command::Codim { algebra, sigma, reldim } => {
                let codim = match (algebra, sigma) {
                    (Some(a), _) => codim_contact(a.entry(), reldim, self.global.strict)?,
                    (None, Some(s)) => codim_sigma_ij(s, reldim)?,
                    (None, None) => return Err(Error::Malformed("give --algebra or --sigma".into())),
                };
                let scale = if self.global.cohomological { 2 } else { 1 };
                (scale * codim).to_string()
            }
            Command::Aij { i, j } => aij(i, j).to_string(),
            Command::Verify { suite, seed, json } => {
                let reports = run_suite(suite, seed);
                let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
                let mut lines: Vec<String> = if json || self.global.json_terms {
                    reports.iter().map(|r| serde_json::to_string(r).expect("reports serialize")).collect()
                } else {
                    reports.iter().map(ToString::to_string).collect()
                };
                if !(json || self.global.json_terms) {
                    lines.push(format!("{} checks, {} failed", reports.len(), failed));
                }
                return Ok(Outcome::Checked(lines.join("\n"), failed == 0));
            }
        };
        Ok(Outcome::Text(text))
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_PARSE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut session = Session { global: &cli.global, stdin };
    let result = session.execute(cli.command);
    match result {
        Ok(Outcome::Text(text)) => {
            let _ = writeln!(stdout, "{text}");
            EXIT_OK
        }
        Ok(Outcome::Checked(text, ok)) => {
            let _ = writeln!(stdout, "{text}");
            if ok {
                EXIT_OK
            } else {
                EXIT_CHECK
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("thomkit").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tp_a2() {
        let (code, out, _) = call(&["tp", "A2", "--reldim", "1", "--window", "4"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "c[2]^2 + c[1]*c[3] + 2*c[4]\n");
    }

    #[test]
    fn lower_reads_stdin() {
        let (code, out, _) = call(&["lower", "--i", "2"], "x[1]*x[2]*x[5] + x[8] + x[4]^2\n");
        assert_eq!(code, 0);
        assert_eq!(out, "x[1]*x[5] + x[2]*x[4] + x[1]^2*x[4] + x[3]^2\n");
    }

    #[test]
    fn codim_and_cohomological() {
        assert_eq!(call(&["codim", "--algebra", "A2", "--reldim", "0"], "").1, "2\n");
        assert_eq!(call(&["codim", "--sigma", "2,1", "--reldim", "0", "--cohomological"], "").1, "14\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["lower", "--i", "2", "--poly", "x[1]+"], "").0, EXIT_PARSE);
        assert_eq!(call(&["lower", "--i", "1", "--poly", "x[1] + c[2]"], "").0, EXIT_PRECONDITION);
        assert_eq!(call(&["frobnicate"], "").0, EXIT_PARSE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
        assert_eq!(call(&["schur", "--require-positive", "--poly", "c[1]^2 - 2*c[2]"], "").0, EXIT_CHECK);
        assert_eq!(call(&["tp", "A2", "--reldim", "0", "--strict", "--window", "6"], "").0, EXIT_PRECONDITION);
    }

    #[test]
    fn twist_lists_every_power() {
        let (code, out, _) = call(&["twist", "--num", "1 + y", "--den", "1", "--poly", "cs[1]"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "y^1: 1\ny^0: c[1]\n");
    }
}

//! Command-line front end: parse polynomial expressions, dispatch to the
//! solvers, and emit text or JSON root reports.
//!
//! Exit codes: 0 on success, 1 on input/syntax errors, 2 when a method is
//! not applicable (e.g. a cubic without a pure imaginary root).

pub mod parser;
pub mod report;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use quatpoly::oracle::{numeric_roots, OracleConfig};
use quatpoly::{
    factor_cubic, pure_imaginary_roots, pure_imaginary_roots_two_sided_quadratic, solve_cubic,
    solve_quadratic, spherical_pure_imaginary, verify_root, Error, Quat64, RootSet, StdPoly64,
};

use parser::{extract_two_sided_quadratic, parse_quaternion, parse_std_poly, parse_two_sided_poly};
use report::{quat_array, root_set_human, root_set_json};

#[derive(Parser, Debug)]
#[command(name = "quatpoly", version, about = "Quaternion polynomial root finding")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonOpts {
    /// Relative tolerance for zero tests and root acceptance.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Seed for the numeric cross-check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check the result against the numeric multistart search and
    /// report disagreements.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full root set of a standard polynomial (degree <= 3).
    Solve {
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Pure-imaginary roots (isolated and spheres) for any degree.
    PureImag {
        poly: String,
        /// Refuse inputs above this degree.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Linear factorization chain (degree <= 3).
    Factor {
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate a standard polynomial at a point.
    Eval {
        poly: String,
        /// Point to substitute, e.g. "1+i" or "j".
        #[arg(long)]
        at: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Pure-imaginary roots of a two-sided quadratic z^2 + a z b + c.
    TwoSided {
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Relative residual of a claimed root.
    Verify {
        poly: String,
        /// Claimed root.
        #[arg(long)]
        at: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

/// Everything a command produces; `main` prints and exits.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: String, json_mode: bool) -> Self {
        let stdout = if json_mode {
            format!("{}\n", json!({"status": "error", "message": message}))
        } else {
            String::new()
        };
        Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {message}\n"),
        }
    }

    fn not_supported(message: String, json_mode: bool) -> Self {
        let stdout = if json_mode {
            format!(
                "{}\n",
                json!({"status": "not-supported", "message": message})
            )
        } else {
            format!("status: not-supported ({message})\n")
        };
        Outcome {
            code: 2,
            stdout,
            stderr: String::new(),
        }
    }
}

fn residuals(f: &StdPoly64, set: &RootSet<f64>) -> Vec<f64> {
    set.isolated.iter().map(|&z| verify_root(f, z)).collect()
}

/// Append the oracle cross-check to a root-set report.
fn oracle_section(
    f: &StdPoly64,
    set: &RootSet<f64>,
    opts: &CommonOpts,
    pure_imaginary_only: bool,
) -> (String, serde_json::Value) {
    let cfg = OracleConfig {
        seed: opts.seed,
        tol: opts.tol.max(1e-10),
        ..OracleConfig::default()
    };
    match numeric_roots(f, &cfg) {
        Ok(numeric) => {
            let mut missing: Vec<Quat64> = Vec::new();
            for z in &numeric.isolated {
                if pure_imaginary_only && !z.is_pure_imaginary(1e-6 * (1.0 + z.abs())) {
                    continue;
                }
                if !set.contains(*z, 1e-6) {
                    missing.push(*z);
                }
            }
            let mut text = String::new();
            if missing.is_empty() {
                text.push_str("oracle: agreement (every numeric root is represented)\n");
            } else {
                for z in &missing {
                    text.push_str(&format!("oracle: numeric root {z} is missing from the output\n"));
                }
            }
            let value = json!({
                "roots": numeric.isolated.iter().map(|&z| quat_array(z)).collect::<Vec<_>>(),
                "spheres": numeric.spheres.iter()
                    .map(|s| json!({"re": s.re, "imag_norm": s.imag_norm}))
                    .collect::<Vec<_>>(),
                "disagreements": missing.iter().map(|&z| quat_array(z)).collect::<Vec<_>>(),
            });
            (text, value)
        }
        Err(e) => (
            format!("oracle: failed ({e})\n"),
            json!({"error": e.to_string()}),
        ),
    }
}

fn root_set_outcome(
    f: &StdPoly64,
    set: &RootSet<f64>,
    status: &str,
    opts: &CommonOpts,
    pure_imaginary_only: bool,
) -> Outcome {
    let res = residuals(f, set);
    let (oracle_text, oracle_json) = if opts.oracle {
        let (t, v) = oracle_section(f, set, opts, pure_imaginary_only);
        (t, Some(v))
    } else {
        (String::new(), None)
    };
    if opts.json {
        let mut value = root_set_json(set, &res, status);
        if let Some(v) = oracle_json {
            value["oracle"] = v;
        }
        Outcome::ok(format!("{value}\n"))
    } else {
        Outcome::ok(format!("{}{}", root_set_human(set, &res, status), oracle_text))
    }
}

fn solve_command(poly: &str, opts: &CommonOpts) -> Outcome {
    let f = match parse_std_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    let eps = opts.tol;
    match f.degree() {
        None => Outcome::not_supported(
            "the zero polynomial has every quaternion as a root".into(),
            opts.json,
        ),
        Some(0) => {
            let set = RootSet::new();
            root_set_outcome(&f, &set, "ok", opts, false)
        }
        Some(1) => {
            let set = match f.coeff(1).inverse() {
                Ok(inv) => {
                    let mut set = RootSet::new();
                    set.push_isolated(-(inv * f.coeff(0)));
                    set
                }
                Err(_) => RootSet::new(),
            };
            root_set_outcome(&f, &set, "ok", opts, false)
        }
        Some(2) => {
            let monic = f.make_monic().expect("degree checked");
            let set = solve_quadratic(monic.coeff(1), monic.coeff(0), eps);
            // a quadratic of this shape always has a root; an empty result
            // means verification rejected every candidate
            let status = if set.is_empty() { "anomaly" } else { "ok" };
            root_set_outcome(&f, &set, status, opts, false)
        }
        Some(3) => match solve_cubic(&f, eps) {
            Ok(set) => root_set_outcome(&f, &set, "ok", opts, false),
            Err(Error::NotSupported) => Outcome::not_supported(
                "no pure imaginary root: the cubic factorization method does not apply".into(),
                opts.json,
            ),
            Err(e) => Outcome::not_supported(e.to_string(), opts.json),
        },
        Some(n) => Outcome::not_supported(
            format!("solve handles degree <= 3 (got {n}); pure-imag works at any degree"),
            opts.json,
        ),
    }
}

fn pure_imag_command(poly: &str, max_degree: usize, opts: &CommonOpts) -> Outcome {
    let f = match parse_std_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    if f.degree().unwrap_or(0) > max_degree {
        return Outcome::not_supported(
            format!(
                "degree {} exceeds --max-degree {max_degree}",
                f.degree().unwrap_or(0)
            ),
            opts.json,
        );
    }
    match pure_imaginary_roots(&f, opts.tol) {
        Ok(set) => root_set_outcome(&f, &set, "ok", opts, true),
        Err(e) => Outcome::not_supported(e.to_string(), opts.json),
    }
}

fn factor_command(poly: &str, opts: &CommonOpts) -> Outcome {
    let f = match parse_std_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    let eps = opts.tol;
    let chain: Result<(Quat64, Vec<Quat64>), Outcome> = match f.degree() {
        Some(1) => {
            let lead = f.leading().unwrap();
            match lead.inverse() {
                Ok(inv) => Ok((lead, vec![-(inv * f.coeff(0))])),
                Err(_) => Err(Outcome::not_supported("zero leading coefficient".into(), opts.json)),
            }
        }
        Some(2) => {
            let monic = f.make_monic().expect("degree checked");
            let roots = solve_quadratic(monic.coeff(1), monic.coeff(0), eps);
            let b = roots
                .isolated
                .iter()
                .min_by(|x, y| {
                    (x.norm(), x.re, x.i, x.j, x.k)
                        .partial_cmp(&(y.norm(), y.re, y.i, y.j, y.k))
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .copied()
                .or_else(|| {
                    roots.spheres.first().map(|s| {
                        Quat64::from_real(s.re) + Quat64::unit_i().scale(s.imag_norm.sqrt())
                    })
                });
            match b {
                Some(b) => {
                    let (l, _) = monic.right_div_linear(b).expect("nonzero");
                    Ok((f.leading().unwrap(), vec![-l.coeff(0), b]))
                }
                None => Err(Outcome::not_supported(
                    "no root verified for the quadratic".into(),
                    opts.json,
                )),
            }
        }
        Some(3) => match factor_cubic(&f, eps) {
            Ok(fact) => Ok((fact.lead, fact.chain)),
            Err(Error::NotSupported) => Err(Outcome::not_supported(
                "no pure imaginary root: the cubic factorization method does not apply".into(),
                opts.json,
            )),
            Err(e) => Err(Outcome::not_supported(e.to_string(), opts.json)),
        },
        Some(n) => Err(Outcome::not_supported(
            format!("factor handles degree 1..=3 (got {n})"),
            opts.json,
        )),
        None => Err(Outcome::not_supported("the zero polynomial".into(), opts.json)),
    };
    match chain {
        Err(outcome) => outcome,
        Ok((lead, roots)) => {
            if opts.json {
                let value = json!({
                    "status": "ok",
                    "lead": quat_array(lead),
                    "chain": roots.iter().map(|&c| quat_array(c)).collect::<Vec<_>>(),
                });
                Outcome::ok(format!("{value}\n"))
            } else {
                let mut text = String::new();
                let mut factors = String::new();
                if !lead.approx_eq(Quat64::one(), 1e-15) {
                    factors.push_str(&format!("({lead}) "));
                }
                for c in &roots {
                    if c.is_zero(0.0) {
                        factors.push_str("(z) ");
                    } else {
                        factors.push_str(&format!("(z - ({c})) "));
                    }
                }
                text.push_str(&format!("factorization: {}\n", factors.trim_end()));
                text.push_str("status: ok\n");
                Outcome::ok(text)
            }
        }
    }
}

fn eval_command(poly: &str, at: &str, opts: &CommonOpts) -> Outcome {
    let f = match parse_std_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    let z0 = match parse_quaternion(at) {
        Ok(z) => z,
        Err(e) => return Outcome::input_error(format!("--at: {e}"), opts.json),
    };
    let value = f.eval(z0);
    if opts.json {
        Outcome::ok(format!(
            "{}\n",
            json!({"status": "ok", "value": quat_array(value)})
        ))
    } else {
        Outcome::ok(format!("value: {value}\nstatus: ok\n"))
    }
}

fn verify_command(poly: &str, at: &str, opts: &CommonOpts) -> Outcome {
    let f = match parse_std_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    let z0 = match parse_quaternion(at) {
        Ok(z) => z,
        Err(e) => return Outcome::input_error(format!("--at: {e}"), opts.json),
    };
    let residual = verify_root(&f, z0);
    let is_root = residual <= opts.tol;
    if opts.json {
        Outcome::ok(format!(
            "{}\n",
            json!({"status": "ok", "residual": residual, "is_root": is_root})
        ))
    } else {
        Outcome::ok(format!(
            "residual: {residual:.3e}\nis-root: {is_root}\nstatus: ok\n"
        ))
    }
}

fn two_sided_command(poly: &str, opts: &CommonOpts) -> Outcome {
    let f = match parse_two_sided_poly(poly) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e.to_string(), opts.json),
    };
    let (a, b, c) = match extract_two_sided_quadratic(&f) {
        Ok(t) => t,
        Err(message) => return Outcome::input_error(message, opts.json),
    };
    match pure_imaginary_roots_two_sided_quadratic(a, b, c, opts.tol) {
        Ok(roots) => {
            let ts = quatpoly::TwoSidedPoly::quadratic(a, b, c);
            if opts.json {
                let list: Vec<serde_json::Value> = roots
                    .iter()
                    .map(|(z, n)| {
                        json!({
                            "q": quat_array(*z),
                            "norm": n,
                            "residual": ts.eval(*z).abs() / ts.scale_at(z.abs()),
                        })
                    })
                    .collect();
                Outcome::ok(format!("{}\n", json!({"status": "ok", "roots": list})))
            } else {
                let mut text = String::new();
                for (z, n) in &roots {
                    text.push_str(&format!("root: {z}    (norm {n})\n"));
                }
                if roots.is_empty() {
                    text.push_str("no pure imaginary roots\n");
                }
                text.push_str("status: ok\n");
                Outcome::ok(text)
            }
        }
        Err(e) => Outcome::not_supported(e.to_string(), opts.json),
    }
}

pub fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Solve { poly, opts } => solve_command(poly, opts),
        Command::PureImag {
            poly,
            max_degree,
            opts,
        } => pure_imag_command(poly, *max_degree, opts),
        Command::Factor { poly, opts } => factor_command(poly, opts),
        Command::Eval { poly, at, opts } => eval_command(poly, at, opts),
        Command::TwoSided { poly, opts } => two_sided_command(poly, opts),
        Command::Verify { poly, at, opts } => verify_command(poly, at, opts),
    }
}

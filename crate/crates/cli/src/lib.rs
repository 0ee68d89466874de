//! Argument handling and JSON rendering for the `subpoly` binary.
//!
//! Sets on the command line use 1-based labels (`2,3`, `{2,3}`) or a bitmask
//! (`0b110`, bit `i` standing for element `i + 1`). Every command prints one
//! JSON document; exit status is 0 on success, 2 on bad input and 3 when an
//! enumeration ceiling refuses the request.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use subpoly_core::certificate::{Certificate, EPS};
use subpoly_core::duality::{
    cdst_separate, check_sandwich, check_sandwich_chain, dst_separate, fenchel_concave, fenchel_convex,
    Separator, Validity,
};
use subpoly_core::extensions::{
    concave_ext_exact, concave_ext_super, concave_ext_vondrak, lovasz, multilinear_exact, multilinear_sample,
    Distribution,
};
use subpoly_core::lower::{
    member_base_poly, member_gen_lower, member_lower_poly, member_subdiff, member_subdiff_local, subgradient,
};
use subpoly_core::maximize::{
    certify_global_max, local_max, max_brute, max_unconstrained_third, mmax, Constraint,
};
use subpoly_core::minimize::{certify_min, local_min, mmin, sfm, SfmMethod};
use subpoly_core::upper::{
    member_gen_upper, member_superdiff, member_superdiff_full, member_superdiff_inner, member_superdiff_outer,
    member_upper_poly, supergradient, InnerBoundKind, SupergradientVariant,
};
use subpoly_core::verify::{run_suite, Suite, VerifyOptions};
use subpoly_core::{make_function, AffinePoint, Error, FunctionSpec, ModularVector, Permutation, SetFunction, Subset, Witness};

#[derive(Parser, Debug)]
#[command(name = "subpoly", version, about = "Polyhedral tools for submodular set functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// FunctionSpec JSON file.
    #[arg(long)]
    function: PathBuf,
    /// Absolute tolerance for every inequality test.
    #[arg(long, default_value_t = EPS)]
    eps: f64,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f(S).
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        set: String,
    },
    /// f(j | S).
    Marginal {
        #[command(flatten)]
        common: Common,
        /// 1-based element label.
        #[arg(long)]
        element: usize,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// A sub- or supergradient at a set.
    Gradient {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        variant: GradientKind,
        /// Order for subgradients, as 1-based labels; must list the set first.
        #[arg(long)]
        perm: Option<String>,
    },
    /// A continuous extension at a point of the cube.
    Extension {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: ExtensionKind,
        #[arg(long)]
        point: String,
        /// Sample count for `multilinear-sample`.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Unconstrained minimization.
    Minimize {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MinMethod::Auto)]
        method: MinMethod,
        #[arg(long, default_value = "")]
        init: String,
    },
    /// Maximization, optionally under a constraint.
    Maximize {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MaxMethod::Local)]
        method: MaxMethod,
        /// `none`, `cardinality:K` or `partition:BLOCKS:CAPS` (e.g. `partition:1,2/3:1,1`).
        #[arg(long, default_value = "none")]
        constraint: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value = "")]
        init: String,
    },
    /// Polyhedron membership with a witness on failure.
    Membership {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        poly: Poly,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        point: String,
        /// Offset `c` for the generalized polyhedra.
        #[arg(long, default_value_t = 0.0)]
        offset: f64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(long, value_enum, default_value_t = InnerKind::Conv)]
        inner: InnerKind,
    },
    /// A modular function between this function and a second one.
    Separate {
        #[command(flatten)]
        common: Common,
        /// FunctionSpec of the supermodular partner.
        #[arg(long)]
        other: PathBuf,
        #[arg(long, value_enum)]
        side: Side,
    },
    /// Convex or concave Fenchel dual at a point.
    Fenchel {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: String,
        #[arg(long, value_enum)]
        side: Side,
    },
    /// Randomized property suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GradientKind {
    Grow,
    Shrink,
    Bar,
    Tilde,
    Sub,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExtensionKind {
    Lovasz,
    Multilinear,
    MultilinearSample,
    Concave,
    Grow,
    Shrink,
    Bar,
    Vondrak,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum MinMethod {
    Auto,
    Brute,
    Minnorm,
    Local,
    Mmin,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MaxMethod {
    Local,
    Third,
    Mmax,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Poly {
    Lower,
    Base,
    Subdiff,
    SubdiffLocal,
    GenLower,
    Upper,
    Superdiff,
    SuperdiffOuter,
    SuperdiffInner,
    SuperdiffFull,
    GenUpper,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum InnerKind {
    Hat,
    Check,
    BarBox,
    Conv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Side {
    Convex,
    Concave,
}

/// Parse `argv` (including the program name), run the command and return
/// the exit status with the JSON document to print.
pub fn run<I, T>(argv: I) -> (i32, Value)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, json!({ "help": e.to_string() }));
            }
            return (2, json!({ "error": e.kind().to_string(), "detail": e.to_string() }));
        }
    };
    match execute(cli.command) {
        Ok(mut v) => {
            tidy(&mut v);
            (0, v)
        }
        Err(Failure::Input(msg)) => (2, json!({ "error": msg })),
        Err(Failure::Core(e)) => error_json(&e),
    }
}

/// Snap floating-point noise (`1.7999999999999998`) to 12 decimal places.
fn tidy(v: &mut Value) {
    match v {
        Value::Number(num) => {
            if let Some(x) = num.as_f64().filter(|_| !num.is_i64() && !num.is_u64()) {
                let r = (x * 1e12).round() / 1e12;
                if r.is_finite() && (r - x).abs() <= 1e-12 * x.abs().max(1.0) {
                    *v = json!(r);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(tidy),
        Value::Object(map) => map.values_mut().for_each(tidy),
        _ => {}
    }
}

fn error_json(e: &Error) -> (i32, Value) {
    match e {
        Error::Refused { np_hard_note, .. } => {
            let mut v = json!({ "error": e.to_string(), "refused": true });
            if let Some(note) = np_hard_note {
                v["np_hard_note"] = json!(note);
            }
            (3, v)
        }
        Error::NonConvergence { best_mask, best_value, .. } => (
            2,
            json!({
                "error": e.to_string(),
                "best_set": Subset(*best_mask).one_based(),
                "best_value": best_value,
            }),
        ),
        _ => (2, json!({ "error": e.to_string() })),
    }
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Out = std::result::Result<Value, Failure>;

fn load(path: &PathBuf) -> std::result::Result<SetFunction, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let spec = FunctionSpec::from_json(&text)?;
    Ok(make_function(&spec)?)
}

/// `2,3`, `{2,3}`, `0b110` or the empty string.
pub fn parse_set(text: &str, n: usize) -> std::result::Result<Subset, String> {
    let t = text.trim();
    if let Some(bits) = t.strip_prefix("0b") {
        let m = u32::from_str_radix(bits, 2).map_err(|_| format!("bad mask '{text}'"))?;
        if n < 32 && m >> n != 0 {
            return Err(format!("mask '{text}' has bits beyond n = {n}"));
        }
        return Ok(Subset(m));
    }
    let inner = t.trim_start_matches('{').trim_end_matches('}').trim();
    let mut s = Subset::EMPTY;
    if inner.is_empty() {
        return Ok(s);
    }
    for part in inner.split(',') {
        let label: usize = part.trim().parse().map_err(|_| format!("bad element '{part}' in '{text}'"))?;
        if label == 0 || label > n {
            return Err(format!("element {label} outside 1..={n}"));
        }
        s = s.with(label - 1);
    }
    Ok(s)
}

fn parse_vector(text: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let v: Vec<f64> = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad number '{p}'")))
        .collect::<std::result::Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("point has {} coordinates, expected {n}", v.len()));
    }
    if let Some(x) = v.iter().find(|x| !x.is_finite()) {
        return Err(format!("non-finite coordinate {x}"));
    }
    Ok(v)
}

fn parse_constraint(text: &str, n: usize) -> std::result::Result<Constraint, Failure> {
    let bad = || Failure::Input(format!("bad constraint '{text}'"));
    let mut parts = text.split(':');
    match parts.next() {
        Some("none") | Some("unconstrained") => Ok(Constraint::Unconstrained),
        Some("cardinality") => {
            let k = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
            Ok(Constraint::Cardinality(k))
        }
        Some("partition") => {
            let blocks_text = parts.next().ok_or_else(bad)?;
            let caps_text = parts.next().ok_or_else(bad)?;
            let blocks = blocks_text
                .split('/')
                .map(|b| parse_set(b, n).map(|s| s.elements().collect::<Vec<_>>()))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(Failure::Input)?;
            let caps = caps_text
                .split(',')
                .map(|c| c.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            Ok(Constraint::partition(n, &blocks, &caps)?)
        }
        _ => Err(bad()),
    }
}

fn input<T>(r: std::result::Result<T, String>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Set { set } => json!(set.one_based()),
        Witness::Triple { j, s, k } => json!({ "j": j + 1, "s": s.one_based(), "k": k + 1 }),
        Witness::Exchange { x, y, i } => json!({ "x": x.one_based(), "y": y.one_based(), "i": i + 1 }),
        Witness::Pair { a, b } => json!({ "a": a.one_based(), "b": b.one_based() }),
        Witness::Lambda { lambda } => json!({ "lambda": lambda }),
        Witness::Coordinate { j } => json!({ "coordinate": j + 1 }),
        Witness::Point { point, set } => json!({
            "point": point,
            "set": set.map(|s| s.one_based()),
        }),
    }
}

fn certificate_json(c: &Certificate) -> Value {
    let mut v = json!({ "verdict": c.verdict });
    if let Some(w) = &c.witness {
        v["witness"] = witness_json(w);
    }
    if let Some(g) = &c.guarantee {
        v["guarantee"] = json!(g);
    }
    if let Some(note) = &c.note {
        v["note"] = json!(note);
    }
    v
}

fn distribution_json(d: &Distribution) -> Value {
    Value::Array(
        d.support
            .iter()
            .map(|(s, l)| json!({ "set": s.one_based(), "weight": l }))
            .collect(),
    )
}

fn separator_json(s: &Separator) -> Value {
    let validity = match s.validity {
        Validity::Exhaustive => json!({ "kind": "exhaustive" }),
        Validity::ChainOnly { a } => json!({ "kind": "chain_only", "a": a.one_based() }),
    };
    json!({
        "h": s.h.0,
        "offset": s.offset,
        "branch": s.branch,
        "validity": validity,
    })
}

fn execute(cmd: Command) -> Out {
    match cmd {
        Command::Eval { common, set } => {
            let f = load(&common.function)?;
            let s = input(parse_set(&set, f.n()))?;
            Ok(json!({ "set": s.one_based(), "value": f.evaluate(s)? }))
        }
        Command::Marginal { common, element, set } => {
            let f = load(&common.function)?;
            let s = input(parse_set(&set, f.n()))?;
            if element == 0 || element > f.n() {
                return Err(Failure::Input(format!("element {element} outside 1..={}", f.n())));
            }
            let v = f.marginal_checked(element - 1, s)?;
            Ok(json!({ "element": element, "set": s.one_based(), "value": v }))
        }
        Command::Gradient { common, set, variant, perm } => {
            let f = load(&common.function)?;
            let n = f.n();
            let x = input(parse_set(&set, n))?;
            let v = match variant {
                GradientKind::Grow => supergradient(&f, x, SupergradientVariant::Grow),
                GradientKind::Shrink => supergradient(&f, x, SupergradientVariant::Shrink),
                GradientKind::Bar => supergradient(&f, x, SupergradientVariant::Bar),
                GradientKind::Tilde => supergradient(&f, x, SupergradientVariant::Tilde),
                GradientKind::Sub => {
                    let sigma = match perm {
                        None => Permutation::with_prefix(n, x),
                        Some(p) => {
                            let labels = p
                                .split(',')
                                .map(|t| t.trim().parse::<usize>().ok().filter(|&l| l >= 1 && l <= n).map(|l| l - 1))
                                .collect::<Option<Vec<_>>>()
                                .ok_or_else(|| Failure::Input(format!("bad permutation '{p}'")))?;
                            Permutation::new(labels)?
                        }
                    };
                    subgradient(&f, x, &sigma)?
                }
            };
            Ok(json!({ "vector": v.0 }))
        }
        Command::Extension { common, kind, point, samples } => {
            let f = load(&common.function)?;
            let w = input(parse_vector(&point, f.n()))?;
            Ok(match kind {
                ExtensionKind::Lovasz => {
                    let (v, d) = lovasz(&f, &w)?;
                    json!({ "value": v, "distribution": distribution_json(&d) })
                }
                ExtensionKind::Multilinear => json!({ "value": multilinear_exact(&f, &w)? }),
                ExtensionKind::MultilinearSample => {
                    let (v, se) = multilinear_sample(&f, &w, samples, common.seed)?;
                    json!({ "value": v, "stderr": se, "samples": samples })
                }
                ExtensionKind::Concave => {
                    let (v, d) = concave_ext_exact(&f, &w)?;
                    json!({ "value": v, "distribution": distribution_json(&d) })
                }
                ExtensionKind::Grow | ExtensionKind::Shrink | ExtensionKind::Bar => {
                    let var = match kind {
                        ExtensionKind::Grow => SupergradientVariant::Grow,
                        ExtensionKind::Shrink => SupergradientVariant::Shrink,
                        _ => SupergradientVariant::Bar,
                    };
                    let (v, y) = concave_ext_super(&f, &w, var)?;
                    json!({ "value": v, "argmin": y.one_based() })
                }
                ExtensionKind::Vondrak => {
                    let (v, y) = concave_ext_vondrak(&f, &w, common.eps)?;
                    json!({ "value": v, "argmin": y.one_based() })
                }
            })
        }
        Command::Minimize { common, method, init } => {
            let f = load(&common.function)?;
            let eps = common.eps;
            match method {
                MinMethod::Local => {
                    let (a, c) = local_min(&f, eps);
                    Ok(json!({ "minimizer": a.one_based(), "value": f.value(a), "certificate": certificate_json(&c) }))
                }
                MinMethod::Mmin => {
                    let start = input(parse_set(&init, f.n()))?;
                    let (a, trace) = mmin(&f, start, eps)?;
                    Ok(json!({ "minimizer": a.one_based(), "value": f.value(a), "trace": trace }))
                }
                _ => {
                    let m = match method {
                        MinMethod::Brute => SfmMethod::Brute,
                        MinMethod::Minnorm => SfmMethod::MinNorm,
                        _ => SfmMethod::Auto,
                    };
                    let r = sfm(&f, m)?;
                    let cert = if f.n() <= 16 {
                        Some(certificate_json(&certify_min(&f, r.minimizer, eps)?))
                    } else {
                        None
                    };
                    Ok(json!({
                        "minimizer": r.minimizer.one_based(),
                        "value": r.value,
                        "method": r.method,
                        "iterations": r.iterations,
                        "min_norm_point": r.certificate.map(|p| p.0),
                        "certificate": cert,
                    }))
                }
            }
        }
        Command::Maximize { common, method, constraint, k, l, init } => {
            let f = load(&common.function)?;
            let n = f.n();
            let eps = common.eps;
            let c = parse_constraint(&constraint, n)?;
            let start = input(parse_set(&init, n))?;
            match method {
                MaxMethod::Local => {
                    let (a, cert) = local_max(&f, &c, k, l, start, eps)?;
                    let global = certify_global_max(&f, a, eps);
                    Ok(json!({
                        "set": a.one_based(),
                        "value": f.value(a),
                        "certificate": certificate_json(&cert),
                        "global_max_certified": global.verdict,
                    }))
                }
                MaxMethod::Third => {
                    if !matches!(c, Constraint::Unconstrained) {
                        return Err(Failure::Input("the complement trick is unconstrained only".into()));
                    }
                    let (a, v, cert) = max_unconstrained_third(&f, eps)?;
                    Ok(json!({ "set": a.one_based(), "value": v, "certificate": certificate_json(&cert) }))
                }
                MaxMethod::Mmax => {
                    let (a, trace) = mmax(&f, &c, start, common.seed, eps)?;
                    Ok(json!({ "set": a.one_based(), "value": f.value(a), "trace": trace }))
                }
                MaxMethod::Brute => {
                    let (a, v) = max_brute(&f, &c)?;
                    Ok(json!({ "set": a.one_based(), "value": v }))
                }
            }
        }
        Command::Membership { common, poly, set, point, offset, k, l, inner } => {
            let f = load(&common.function)?;
            let n = f.n();
            let eps = common.eps;
            let x_set = input(parse_set(&set, n))?;
            let x = ModularVector(input(parse_vector(&point, n))?);
            let cert = match poly {
                Poly::Lower => member_lower_poly(&f, &x, eps)?,
                Poly::Base => member_base_poly(&f, &x, eps)?,
                Poly::Subdiff => member_subdiff(&f, x_set, &x, eps)?,
                Poly::SubdiffLocal => member_subdiff_local(&f, x_set, &x, eps),
                Poly::GenLower => member_gen_lower(&f, &AffinePoint { x, c: offset }, eps)?,
                Poly::Upper => member_upper_poly(&f, &x, eps),
                Poly::Superdiff => member_superdiff(&f, x_set, &x, eps)?,
                Poly::SuperdiffOuter => member_superdiff_outer(&f, x_set, &x, k, l, eps)?,
                Poly::SuperdiffInner => {
                    let kind = match inner {
                        InnerKind::Hat => InnerBoundKind::Hat,
                        InnerKind::Check => InnerBoundKind::Check,
                        InnerKind::BarBox => InnerBoundKind::BarBox,
                        InnerKind::Conv => InnerBoundKind::Conv,
                    };
                    member_superdiff_inner(&f, x_set, &x, kind, eps)
                }
                Poly::SuperdiffFull => member_superdiff_full(&f, &x, eps)?,
                Poly::GenUpper => member_gen_upper(&f, &AffinePoint { x, c: offset }, eps)?,
            };
            let mut v = json!({ "member": cert.verdict });
            if let Some(w) = &cert.witness {
                v["witness"] = witness_json(w);
            }
            if let Some(note) = &cert.note {
                v["note"] = json!(note);
            }
            Ok(v)
        }
        Command::Separate { common, other, side } => {
            let f = load(&common.function)?;
            let g = load(&other)?;
            if g.n() != f.n() {
                return Err(Failure::Input("functions live on different ground sets".into()));
            }
            let eps = common.eps;
            let (sep, check) = match side {
                Side::Convex => {
                    let sep = dst_separate(&f, &g, eps)?;
                    let c = check_sandwich(&g, &sep, &f, eps)?;
                    (sep, c)
                }
                Side::Concave => {
                    let sep = cdst_separate(&f, &g, eps)?;
                    let c = match sep.validity {
                        Validity::Exhaustive => check_sandwich(&f, &sep, &g, eps)?,
                        Validity::ChainOnly { a } => check_sandwich_chain(&f, &sep, &g, a, eps)?,
                    };
                    (sep, c)
                }
            };
            let mut v = separator_json(&sep);
            v["sandwich"] = certificate_json(&check);
            Ok(v)
        }
        Command::Fenchel { common, point, side } => {
            let f = load(&common.function)?;
            let y = input(parse_vector(&point, f.n()))?;
            let (v, s) = match side {
                Side::Convex => fenchel_convex(&f, &y)?,
                Side::Concave => fenchel_concave(&f, &y)?,
            };
            Ok(json!({ "value": v, "set": s.one_based() }))
        }
        Command::Verify { common, suite, trials } => {
            let f = load(&common.function)?;
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                trials,
                seed: common.seed,
                eps: common.eps,
            };
            let rep = run_suite(&f, suite, &opts)?;
            Ok(json!({
                "suite": rep.suite,
                "passed": rep.passed,
                "trials": trials,
                "seed": common.seed,
                "checks": rep.checks,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_is_snapped() {
        let mut v = json!({ "x": [1.7999999999999998, 0.1 + 0.2, 1e-20, 3] });
        tidy(&mut v);
        assert_eq!(v, json!({ "x": [1.8, 0.3, 0.0, 3] }));
    }

    #[test]
    fn set_syntax() {
        assert_eq!(parse_set("2,3", 3), Ok(Subset(0b110)));
        assert_eq!(parse_set("{2, 3}", 3), Ok(Subset(0b110)));
        assert_eq!(parse_set("0b110", 3), Ok(Subset(0b110)));
        assert_eq!(parse_set("", 3), Ok(Subset::EMPTY));
        assert_eq!(parse_set("{}", 3), Ok(Subset::EMPTY));
        assert!(parse_set("0", 3).is_err());
        assert!(parse_set("4", 3).is_err());
        assert!(parse_set("0b1000", 3).is_err());
        assert!(parse_set("x", 3).is_err());
    }

    #[test]
    fn vector_syntax() {
        assert_eq!(parse_vector("1,1.5,1.8", 3), Ok(vec![1.0, 1.5, 1.8]));
        assert_eq!(parse_vector("[0.5, 0.5]", 2), Ok(vec![0.5, 0.5]));
        assert!(parse_vector("1,2", 3).is_err());
        assert!(parse_vector("1,nan", 2).is_err());
    }

    #[test]
    fn constraint_syntax() {
        assert!(matches!(parse_constraint("none", 3), Ok(Constraint::Unconstrained)));
        assert!(matches!(parse_constraint("cardinality:2", 3), Ok(Constraint::Cardinality(2))));
        assert!(matches!(
            parse_constraint("partition:1,2/3:1,1", 3),
            Ok(Constraint::PartitionMatroid { .. })
        ));
        assert!(parse_constraint("partition:1,2/2:1,1", 3).is_err());
        assert!(parse_constraint("budget:3", 3).is_err());
    }
}

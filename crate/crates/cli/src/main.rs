//! `gordian`: command-line front end for the signature and gordian-graph
//! machinery.
//!
//! Every invocation prints one JSON document on stdout,
//! `{status, payload, provenance}`, and a short human summary on stderr.
//! Exit status is 0 on success, 1 for domain errors and 2 for usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use gordian_core::circle::{arcs_of_generator_with_limit, generator_sign_at, independence_witness};
use gordian_core::gordian_graph::{
    build_detour, certify_all, certify_pair_with_arity, phi_with_arity, verify_detour,
};
use gordian_core::laurent::{from_basis, is_normalized, to_basis, torus_poly_with_limit};
use gordian_core::signature::{isolate_circle_roots, min_root_gap, signature_of_poly};
use gordian_core::{
    BasisCoeffs, Error, FormalKnot, IntLaurent, PSequence, Sign, TreeVertex, TurnAngle, DEFAULT_MAX_P,
};

#[derive(Parser, Debug)]
#[command(name = "gordian", version, about = "Signature bounds and detours in the gordian graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Laurent polynomial utilities
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Arcs where D_p is negative
    Arcs {
        #[arg(long)]
        p: u64,
    },
    /// Sign of D_p at a turn angle
    SignAt {
        #[arg(long)]
        p: BigUint,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Turn angle with prescribed signs of D_p for increasing p
    Witness {
        /// Comma-separated odd parameters
        #[arg(long, value_delimiter = ',')]
        ps: Vec<BigUint>,
        /// Comma-separated signs, each +1 or -1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Vec<i64>,
    },
    /// Signature step function of a normalized polynomial
    Signature {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Isolate the roots of the Chebyshev form in [-2, 2]
    Rootiso {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Refine intervals to at most this width
        #[arg(long)]
        width: Option<String>,
    },
    /// Minimal gap between consecutive circle roots
    Gap {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Image of a tree vertex, e.g. `--vertex 0,1` or `--vertex root`
    Embed {
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 2)]
        arity: u32,
    },
    /// Distance certificate for two tree vertices
    Certify {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 2)]
        arity: u32,
    },
    /// Certificates for all pairs of vertices up to a depth
    CertifyAll {
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        arity: u32,
    },
    /// Detour around forbidden knots; files hold one JSON knot per line
    Detour {
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        forbidden: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum PolyOp {
    /// Canonical form and normalization check
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Coefficients in the basis 1, (2-t-1/t), (t^i+t^-i)(2-t-1/t)
    Basis {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Polynomial from basis coefficients, e.g. `--coeffs=-1,1`
    Frombasis {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Q with Q(t + 1/t) = d(t)
    Chebyshev {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// D_p = t^{-(p-1)/2} (t^p + 1)/(t + 1)
    Torus {
        #[arg(long)]
        p: u64,
    },
}

/// Domain failure with a message for the user.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Value, String), Failure>;

fn max_p() -> u64 {
    std::env::var("GORDIAN_MAX_P")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_P)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

fn parse_poly(s: &str) -> Result<IntLaurent, Failure> {
    Ok(s.parse()?)
}

fn read_knots(path: &Path) -> Result<Vec<FormalKnot>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Failure(format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}

fn run_poly(op: PolyOp) -> Outcome {
    match op {
        PolyOp::Normalize { poly } => {
            let d = parse_poly(&poly)?;
            let ok = is_normalized(&d);
            let summary = format!("{d} is {}normalized", if ok { "" } else { "not " });
            Ok((json!({ "poly": d.to_string(), "normalized": ok }), summary))
        }
        PolyOp::Basis { poly } => {
            let a = to_basis(&parse_poly(&poly)?)?;
            Ok((to_value(&a), format!("basis coefficients {a}")))
        }
        PolyOp::Frombasis { coeffs } => {
            let a: BasisCoeffs = coeffs.parse()?;
            let d = from_basis(&a);
            Ok((json!(d.to_string()), format!("{a} -> {d}")))
        }
        PolyOp::Chebyshev { poly } => {
            let q = parse_poly(&poly)?.to_chebyshev()?;
            Ok((json!(q.to_string()), format!("Q(x) = {q}")))
        }
        PolyOp::Torus { p } => {
            let d = torus_poly_with_limit(p, max_p())?;
            Ok((json!(d.to_string()), format!("D_{p} = {d}")))
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Poly { op } => run_poly(op),
        Command::Arcs { p } => {
            let a = arcs_of_generator_with_limit(p, max_p())?;
            Ok((to_value(&a), format!("A_{p} = {a}")))
        }
        Command::SignAt { p, theta } => {
            let theta: TurnAngle = theta.parse()?;
            if p.bit(0) && p >= BigUint::from(3u32) {
                let s = generator_sign_at(&p, &theta).to_i8();
                Ok((json!(s), format!("sign of D_{p} at {theta} is {s}")))
            } else if !p.bit(0) {
                Err(Error::EvenParameter(p.to_string()).into())
            } else {
                Err(Error::ParameterTooSmall(p.to_string()).into())
            }
        }
        Command::Witness { ps, signs } => {
            let signs = signs.into_iter().map(Sign::from_unit).collect::<Result<Vec<_>, _>>()?;
            let theta = independence_witness(&ps, &signs)?;
            Ok((to_value(&theta), format!("witness θ = {theta}")))
        }
        Command::Signature { poly } => {
            let f = signature_of_poly(&parse_poly(&poly)?)?;
            let summary = format!("{} breakpoints, values {:?}", f.breakpoints().len(), f.values());
            Ok((to_value(&f), summary))
        }
        Command::Rootiso { poly, width } => {
            let mut iso = isolate_circle_roots(&parse_poly(&poly)?)?;
            if let Some(w) = width {
                let w: TurnAngle = w.parse()?;
                if w.value() > &num_rational::BigRational::from_integer(0.into()) {
                    iso.refine(w.value());
                }
            }
            let summary = format!(
                "{} roots of Q in [-2, 2], {} on the circle",
                iso.root_count(),
                iso.circle_root_count()
            );
            Ok((to_value(&iso), summary))
        }
        Command::Gap { poly } => {
            let g = min_root_gap(&parse_poly(&poly)?)?;
            Ok((to_value(&g), format!("root gap {g:?}")))
        }
        Command::Embed { vertex, arity } => {
            let v: TreeVertex = vertex.parse()?;
            let k = phi_with_arity(&v, arity, &mut PSequence::new())?;
            Ok((to_value(&k), format!("phi({v}) = {k}")))
        }
        Command::Certify { x, y, arity } => {
            let (x, y): (TreeVertex, TreeVertex) = (x.parse()?, y.parse()?);
            let c = certify_pair_with_arity(&x, &y, arity, &mut PSequence::new())?;
            let summary = format!(
                "d_T({x}, {y}) = {}: {} <= d_K <= {} at θ = {}",
                c.tree_distance(),
                c.lower,
                c.upper,
                c.theta
            );
            Ok((to_value(&c), summary))
        }
        Command::CertifyAll { depth, arity } => {
            let all = certify_all(depth, arity)?;
            let tight = all.iter().filter(|c| c.is_tight()).count();
            let summary = format!("{} certificates, {tight} with lower = d_T and upper = 2 d_T", all.len());
            Ok((to_value(&all), summary))
        }
        Command::Detour { path, forbidden } => {
            let path = read_knots(&path)?;
            let forbidden = read_knots(&forbidden)?;
            let plan = build_detour(&path, &forbidden)?;
            let report = verify_detour(&plan);
            let summary = format!(
                "detour through K_{} with {} entries: {}",
                plan.detour_p,
                plan.detoured_path.len(),
                if report.valid { "verified" } else { "NOT verified" }
            );
            if !report.valid {
                return Err(Failure(format!("{summary}; {}", report.failures.join("; "))));
            }
            Ok((json!({ "plan": plan, "report": report }), summary))
        }
    }
}

fn emit(status: &str, payload: Value, args: &[String]) {
    let doc = json!({
        "status": status,
        "payload": payload,
        "provenance": {
            "command": args.get(1).cloned().unwrap_or_default(),
            "args": args.get(1..).unwrap_or_default(),
            "version": env!("CARGO_PKG_VERSION"),
        }
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes"));
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            if code == 0 {
                return ExitCode::SUCCESS;
            }
            emit("error", json!({ "error": e.kind().to_string(), "usage": e.render().to_string() }), &args);
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok((payload, summary)) => {
            eprintln!("{summary}");
            emit("ok", payload, &args);
            ExitCode::SUCCESS
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            emit("error", json!({ "error": msg }), &args);
            ExitCode::from(1)
        }
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tdesign::construct::{fg_design, lift_to_dimension, tight_polygon_design, FgCase};
use tdesign::design::{
    fisher_bound, is_tight, layer_decompose, verify_and_certify, verify_euclidean_design, DesignReport,
    GROUP_TOL, VERIFY_TOL,
};
use tdesign::error::DesignError;
use tdesign::harmonic::verify_design_harmonic;
use tdesign::interval::{build_interval_design, verify_interval_design, INTERVAL_TOL};
use tdesign::io::{render_file_svg, report_json, DesignFile, DesignKind, Metadata};

/// Environment variable overriding the default verification tolerance.
const TOL_ENV: &str = "TDESIGN_TOL";

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

#[derive(Parser)]
#[command(name = "tdesign", version, about = "Construct and verify Euclidean t-designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Fisher-type lower bound N(n, p, t) as JSON
    Bound {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: usize,
        #[arg(short)]
        t: usize,
    },
    /// Build a design, verify it, and write it as JSON
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Output path (stdout when omitted)
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Verify a design file at strength t
    Verify {
        file: PathBuf,
        #[arg(short)]
        t: usize,
        /// Relative tolerance (default from TDESIGN_TOL, else 1e-9; 1e-10 for interval designs)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Method::Moments)]
        method: Method,
    },
    /// Render a planar design as SVG
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Tight planar design on concentric regular polygons
    Polygon {
        #[arg(short)]
        t: usize,
        /// Comma-separated distinct radii
        #[arg(short, long, value_delimiter = ',', required = true)]
        radii: Vec<f64>,
    },
    /// Tight lattice-shell design in dimension 3 or 4
    Fg {
        #[arg(long)]
        case: FgCase,
        #[arg(long)]
        lambda: f64,
    },
    /// Gauss-type interval design for the weight (1-x²)^((n-3)/2)
    Interval {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
    },
    /// Lift a t-design to a higher dimension
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short)]
        t: usize,
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Moments,
    Harmonic,
    Both,
}

enum Failure {
    Usage(String),
    Verification(String),
    Disagreement(String),
}

impl From<DesignError> for Failure {
    fn from(e: DesignError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bound { n, p, t } => bound(n, p, t),
        Command::Construct { kind, out } => construct(kind, out.as_deref()),
        Command::Verify { file, t, tol, method } => verify(&file, t, tol, method),
        Command::Render { file, out } => render(&file, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification(dump)) => {
            eprintln!("{dump}");
            ExitCode::from(EXIT_FAIL)
        }
        Err(Failure::Disagreement(dump)) => {
            eprintln!("internal error: verifiers disagree\n{dump}");
            ExitCode::from(EXIT_DISAGREE)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(report_json(v)? + "\n")
}

fn default_tol(fallback: f64) -> Result<f64, Failure> {
    match std::env::var(TOL_ENV) {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
            _ => Err(Failure::Usage(format!("{TOL_ENV}={s:?} is not a positive number"))),
        },
        Err(_) => Ok(fallback),
    }
}

fn bound(n: usize, p: usize, t: usize) -> Outcome {
    emit(&to_json(&fisher_bound(n, p, t)?)?, None)
}

fn metadata(constructor: &str, parameters: serde_json::Value, t: usize) -> Metadata {
    Metadata {
        constructor: constructor.into(),
        parameters: parameters.as_object().cloned().unwrap_or_default(),
        claimed_strength: Some(t),
    }
}

fn construct(kind: ConstructKind, out: Option<&Path>) -> Outcome {
    let tol = default_tol(VERIFY_TOL)?;
    let file = match kind {
        ConstructKind::Polygon { t, radii } => {
            let x = tight_polygon_design(t, &radii)?;
            self_check(&verify_and_certify(&x, t, tol))?;
            DesignFile::from_euclidean(&x, Some(metadata("polygon", json!({ "t": t, "radii": radii }), t)))
        }
        ConstructKind::Fg { case, lambda } => {
            let x = fg_design(case, lambda)?;
            let t = case.strength();
            self_check(&verify_and_certify(&x, t, tol))?;
            DesignFile::from_euclidean(&x, Some(metadata("fg", json!({ "case": case, "lambda": lambda }), t)))
        }
        ConstructKind::Interval { n, t } => {
            let d = build_interval_design(n, t)?;
            let rep = verify_interval_design(&d, t, default_tol(INTERVAL_TOL)?);
            if !rep.pass {
                return Err(Failure::Verification(to_json(&rep)?));
            }
            DesignFile::from_interval(&d, Some(metadata("interval", json!({ "n": n, "t": t }), t)))
        }
        ConstructKind::Lift { input, t, dim } => {
            let src = DesignFile::read(&input)?.to_point_set()?;
            let pre = verify_euclidean_design(&src, t, tol);
            if !pre.passes_at(t) {
                return Err(Failure::Verification(format!(
                    "source is not a {t}-design\n{}",
                    to_json(&pre)?
                )));
            }
            let x = lift_to_dimension(&src, dim, t)?;
            self_check(&verify_and_certify(&x, t, tol))?;
            let params = json!({ "source": input.display().to_string(), "t": t, "dim": dim });
            DesignFile::from_euclidean(&x, Some(metadata("lift", params, t)))
        }
    };
    emit(&file.to_json()?, out)
}

fn self_check(rep: &DesignReport) -> Outcome {
    if rep.pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!("self-verification failed\n{}", to_json(rep)?)))
    }
}

fn verify(path: &Path, t: usize, tol: Option<f64>, method: Method) -> Outcome {
    let file = DesignFile::read(path)?;
    if file.kind == DesignKind::Interval {
        let d = file.to_interval()?;
        let tol = tol.map_or_else(|| default_tol(INTERVAL_TOL), Ok)?;
        let rep = verify_interval_design(&d, t, tol);
        let text = to_json(&rep)?;
        print!("{text}");
        return if rep.pass { Ok(()) } else { Err(Failure::Verification("verification failed".into())) };
    }
    let x = file.to_point_set()?;
    let tol = tol.map_or_else(|| default_tol(VERIFY_TOL), Ok)?;
    let mut reports = Vec::new();
    if method != Method::Harmonic {
        reports.push(verify_euclidean_design(&x, t, tol));
    }
    if method != Method::Moments {
        reports.push(verify_design_harmonic(&x, t, tol)?);
    }
    let pass = reports[0].pass;
    let agree = reports.iter().all(|r| r.pass == pass);
    let tight = if pass && agree {
        layer_decompose(&x, GROUP_TOL).ok().and_then(|ld| is_tight(&ld, t, &reports[0]).ok())
    } else {
        None
    };
    for r in &mut reports {
        r.tight = tight;
    }
    let text = to_json(&json!({
        "file": path.display().to_string(),
        "strength": t,
        "pass": pass && agree,
        "verifiers_agree": agree,
        "tight": tight,
        "reports": reports,
    }))?;
    print!("{text}");
    if !agree {
        Err(Failure::Disagreement(format!("{}: moments and harmonic verdicts differ", path.display())))
    } else if pass {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn render(path: &Path, out: Option<&Path>) -> Outcome {
    let file = DesignFile::read(path)?;
    emit(&render_file_svg(&file)?, out)
}

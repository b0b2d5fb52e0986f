//! Command-line front end. Every subcommand reads JSON files and writes one
//! JSON document, to standard output or to `--output`.
//!
//! Exit codes: 0 on success, 1 on a numerical or input-domain error, 2 on a
//! usage error. Errors are reported as `{"error": kind, "message": text}` on
//! standard output.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::builders::{hyperelliptic_periods, product_point, random_siegel_seeded, QuadratureSettings};
use crate::cubic::{cone_defect, j_invariant, Invariant};
use crate::error::Error;
use crate::io::{
    from_json, parse_characteristic, to_json, ComplexJson, CubicJson, CurveJson, MatrixJson, PeriodMatrixJson,
    PeriodReportJson, SweepReportJson,
};
use crate::jet::{odd_jet, restrict_cubic, Extension};
use crate::modular::{evaluate_h, sweep_odd, weight_check, ModularSettings};
use crate::siegel::{
    enumerate_characteristics, random_gamma_4_8_word, CVector, IMatrix, ParityFilter, SiegelPoint, SymplecticInt,
    ThetaCharacteristic,
};
use crate::theta::{check_transformation, theta, truncation_radius, ThetaSettings};

#[derive(Debug, Parser)]
#[command(name = "schottky", version, about = "Siegel modular forms from odd theta functions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Absolute error target for theta series.
    #[arg(long, global = true, default_value_t = 1e-14)]
    pub eps: f64,
    /// Cap on the theta summation radius.
    #[arg(long, global = true, default_value_t = 60)]
    pub max_radius: u32,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct XiArgs {
    /// Index into the odd characteristics of the genus, in lexicographic order.
    #[arg(long, conflicts_with = "xi")]
    pub xi_index: Option<usize>,
    /// Characteristic JSON file `{"a": [...], "b": [...]}`.
    #[arg(long)]
    pub xi: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate theta[xi](z, Omega).
    ThetaEval {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
        /// JSON array of `{"re", "im"}`; defaults to z = 0.
        #[arg(long)]
        z: Option<PathBuf>,
    },
    /// Linear and cubic Taylor terms of an odd theta function at 0.
    Jet {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
    },
    /// Cubic term restricted to the hyperplane ell = 0.
    Restrict {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
        /// Use a random basis extension with this seed instead of the unitary one.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// S, T, delta, j and cone defect of a cubic form.
    Invariants {
        #[arg(long)]
        cubic: PathBuf,
    },
    /// One value h_xi(phi)(Omega) at a genus-4 point.
    Schottky {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
        #[arg(long, default_value = "S")]
        invariant: Invariant,
        /// Use a random basis extension with this seed for the raw value.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// h_xi(phi)(Omega) for all 120 odd characteristics.
    Sweep {
        #[arg(long)]
        omega: PathBuf,
        #[arg(long, default_value = "S")]
        invariant: Invariant,
        /// Random basis extension seed for raw values; unitary when absent.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        parallelism: usize,
    },
    /// Numerical check of the theta transformation law under Gamma(4,8).
    TransformCheck {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
        #[command(flatten)]
        gamma: GammaArgs,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Compare h(gamma Omega) with det(C Omega + D)^k h(Omega).
    WeightCheck {
        #[arg(long)]
        omega: PathBuf,
        #[command(flatten)]
        xi: XiArgs,
        /// Image characteristic index, required when gamma is outside Gamma(2).
        #[arg(long)]
        xi_image_index: Option<usize>,
        #[command(flatten)]
        gamma: GammaArgs,
        #[arg(long, default_value = "S")]
        invariant: Invariant,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Period matrix of a real hyperelliptic curve.
    Periods {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Seeded random point X + i(Y Y^T + I).
    RandomOmega {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        spread: f64,
    },
    /// Block-diagonal point from two or more period matrices, in order.
    ProductOmega {
        #[arg(long = "omega", required = true, num_args = 1..)]
        omegas: Vec<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    /// JSON file `{"matrix": [[...]]}` with a 2g x 2g integer symplectic matrix.
    #[arg(long, conflicts_with = "word_length")]
    pub gamma: Option<PathBuf>,
    /// Length of a random word in the Gamma(4,8) generators; needs --seed.
    #[arg(long)]
    pub word_length: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GammaJson {
    matrix: Vec<Vec<i64>>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn error_json(kind: &str, message: &str) -> String {
    to_json(&json!({ "error": kind, "message": message }))
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: e.to_string() },
                _ => Outcome { code: 2, stdout: error_json("UsageError", e.to_string().trim_end()) },
            };
        }
    };
    let result = execute(&cli).and_then(|doc| match &cli.global.output {
        Some(path) => std::fs::write(path, format!("{doc}\n"))
            .map(|()| String::new())
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => Ok(doc),
    });
    match result {
        Ok(stdout) => Outcome { code: 0, stdout },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: error_json("UsageError", &msg) },
        Err(Failure::Io(msg)) => Outcome { code: 1, stdout: error_json("IoError", &msg) },
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: error_json(e.kind(), &e.to_string()) },
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    Ok(from_json(&read(path)?)?)
}

fn read_omega(path: &Path) -> CliResult<SiegelPoint> {
    Ok(read_json::<PeriodMatrixJson>(path)?.to_point()?)
}

fn odd_by_index(g: usize, index: usize, flag: &str) -> CliResult<ThetaCharacteristic> {
    let odd = enumerate_characteristics(g, ParityFilter::Odd);
    odd.get(index)
        .cloned()
        .ok_or_else(|| Failure::Usage(format!("{flag} {index} out of range: genus {g} has {} odd characteristics", odd.len())))
}

fn read_xi(args: &XiArgs, g: usize) -> CliResult<ThetaCharacteristic> {
    let xi = match (&args.xi, args.xi_index) {
        (Some(path), _) => parse_characteristic(&read(path)?)?,
        (None, Some(i)) => odd_by_index(g, i, "--xi-index")?,
        (None, None) => return Err(Failure::Usage("one of --xi-index or --xi is required".into())),
    };
    if xi.genus() != g {
        return Err(Error::DimensionMismatch(format!("characteristic of genus {} for a genus-{g} point", xi.genus())).into());
    }
    Ok(xi)
}

fn read_gamma(args: &GammaArgs, g: usize, seed: Option<u64>) -> CliResult<SymplecticInt> {
    match (&args.gamma, args.word_length) {
        (Some(path), _) => {
            let raw: GammaJson = read_json(path)?;
            let n = 2 * g;
            if raw.matrix.len() != n || raw.matrix.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!("gamma must be {n}x{n}")).into());
            }
            Ok(SymplecticInt::new(IMatrix::from_fn(n, n, |i, j| raw.matrix[i][j]))?)
        }
        (None, Some(len)) => {
            let seed = seed.ok_or_else(|| Failure::Usage("--word-length needs --seed".into()))?;
            Ok(random_gamma_4_8_word(g, len, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        (None, None) => Err(Failure::Usage("one of --gamma or --word-length is required".into())),
    }
}

fn theta_settings(global: &GlobalArgs) -> CliResult<ThetaSettings> {
    Ok(ThetaSettings::new(global.eps, global.max_radius)?)
}

fn complex_list(v: impl IntoIterator<Item = Complex64>) -> Vec<ComplexJson> {
    v.into_iter().map(ComplexJson::from).collect()
}

fn modular_settings(global: &GlobalArgs, seed: Option<u64>) -> CliResult<ModularSettings> {
    Ok(ModularSettings {
        theta: theta_settings(global)?,
        extension: seed.map_or(Extension::Unitary, Extension::Random),
    })
}

fn execute(cli: &Cli) -> CliResult<String> {
    let global = &cli.global;
    let value: Value = match &cli.command {
        Command::ThetaEval { omega, xi, z } => {
            let omega = read_omega(omega)?;
            let g = omega.genus();
            let xi = read_xi(xi, g)?;
            let z = match z {
                Some(path) => {
                    let raw: Vec<ComplexJson> = read_json(path)?;
                    if raw.len() != g {
                        return Err(Error::DimensionMismatch(format!("z has {} entries, genus is {g}", raw.len())).into());
                    }
                    CVector::from_iterator(g, raw.into_iter().map(Complex64::from))
                }
                None => CVector::zeros(g),
            };
            let s = theta_settings(global)?;
            let value = theta(&xi, &z, &omega, &s)?;
            json!({
                "xi": xi,
                "parity": xi.parity(),
                "value": ComplexJson::from(value),
                "truncation_radius": truncation_radius(&omega, &xi.a, s.eps, 0)?,
            })
        }
        Command::Jet { omega, xi } => {
            let omega = read_omega(omega)?;
            let xi = read_xi(xi, omega.genus())?;
            let jet = odd_jet(&xi, &omega, &theta_settings(global)?)?;
            json!({
                "xi": xi,
                "ell": complex_list(jet.ell.iter().copied()),
                "cubic": CubicJson::from_form(&jet.cubic),
                "residual_even": jet.residual_even,
            })
        }
        Command::Restrict { omega, xi, seed } => {
            let omega = read_omega(omega)?;
            let xi = read_xi(xi, omega.genus())?;
            let jet = odd_jet(&xi, &omega, &theta_settings(global)?)?;
            let r = restrict_cubic(&jet, seed.map_or(Extension::Unitary, Extension::Random))?;
            json!({
                "xi": xi,
                "extension": seed.map_or_else(|| "unitary".to_string(), |s| format!("random:{s}")),
                "basis": MatrixJson::from_matrix(&r.basis_covectors),
                "det_b": ComplexJson::from(r.det_b),
                "m_bar": CubicJson::from_form(&r.m_bar),
            })
        }
        Command::Invariants { cubic } => {
            let f = read_json::<CubicJson>(cubic)?.to_form()?;
            let mut doc = json!({ "n": f.n(), "cone_defect": cone_defect(&f) });
            if f.n() == 3 {
                for inv in [Invariant::S, Invariant::T, Invariant::Delta] {
                    doc[inv.name()] = json!(ComplexJson::from(inv.evaluate(&f)?));
                }
                doc["j"] = match j_invariant(&f) {
                    Ok(j) => json!(ComplexJson::from(j)),
                    Err(Error::SingularCubic { .. }) => Value::Null,
                    Err(e) => return Err(e.into()),
                };
            }
            doc
        }
        Command::Schottky { omega, xi, invariant, seed } => {
            let omega = read_omega(omega)?;
            let xi = read_xi(xi, omega.genus())?;
            let v = evaluate_h(&xi, &omega, *invariant, &modular_settings(global, *seed)?)?;
            json!({
                "xi": v.xi,
                "invariant": v.invariant,
                "raw": ComplexJson::from(v.raw),
                "scale_free": v.scale_free,
                "weight": v.weight,
                "p": v.p,
                "det_b": ComplexJson::from(v.det_b),
                "flags": v.flags,
            })
        }
        Command::Sweep { omega, invariant, seed, parallelism } => {
            let omega = read_omega(omega)?;
            if *parallelism == 0 {
                return Err(Failure::Usage("--parallelism must be at least 1".into()));
            }
            let sweep = sweep_odd(&omega, *invariant, &modular_settings(global, *seed)?, Some(*parallelism))?;
            serde_json::to_value(SweepReportJson::new(&omega, &sweep)).expect("sweep report serializes")
        }
        Command::TransformCheck { omega, xi, gamma, samples, seed } => {
            let omega = read_omega(omega)?;
            let g = omega.genus();
            let xi = read_xi(xi, g)?;
            let gamma = read_gamma(gamma, g, Some(*seed))?;
            let report = check_transformation(&xi, &gamma, &omega, *samples, *seed, &theta_settings(global)?)?;
            json!({ "xi": xi, "report": report })
        }
        Command::WeightCheck { omega, xi, xi_image_index, gamma, invariant, seed } => {
            let omega = read_omega(omega)?;
            let g = omega.genus();
            let xi = read_xi(xi, g)?;
            let image = xi_image_index.map(|i| odd_by_index(g, i, "--xi-image-index")).transpose()?;
            let gamma = read_gamma(gamma, g, *seed)?;
            let report = weight_check(&omega, &gamma, &xi, image.as_ref(), *invariant, &modular_settings(global, None)?)?;
            json!({ "xi": xi, "invariant": invariant, "report": report })
        }
        Command::Periods { curve } => {
            let curve = read_json::<CurveJson>(curve)?.to_curve()?;
            let p = hyperelliptic_periods(&curve, &QuadratureSettings::default())?;
            serde_json::to_value(PeriodReportJson::new(&p)).expect("period report serializes")
        }
        Command::RandomOmega { genus, seed, spread } => {
            if *genus == 0 || !(*spread >= 0.0 && spread.is_finite()) {
                return Err(Failure::Usage("--genus must be positive and --spread finite and nonnegative".into()));
            }
            serde_json::to_value(PeriodMatrixJson::from_point(&random_siegel_seeded(*genus, *seed, *spread)))
                .expect("matrix serializes")
        }
        Command::ProductOmega { omegas } => {
            if omegas.len() < 2 {
                return Err(Failure::Usage("product-omega needs at least two --omega files".into()));
            }
            let parts = omegas.iter().map(|p| read_omega(p)).collect::<CliResult<Vec<_>>>()?;
            let prod = product_point(&parts)?;
            let mut doc = serde_json::to_value(PeriodMatrixJson::from_point(&prod.omega)).expect("matrix serializes");
            doc["partition"] = json!(prod.partition);
            doc
        }
    };
    Ok(to_json(&value))
}

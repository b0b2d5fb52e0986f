//! JSON interchange formats.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::builders::{HyperellipticCurve, PeriodResult};
use crate::cubic::{monomials, CubicForm, Invariant};
use crate::error::{Error, Result};
use crate::modular::{Flag, Sweep, SweepSummary};
use crate::siegel::{CMatrix, SiegelPoint, ThetaCharacteristic};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(c: Complex64) -> Self {
        Self { re: c.re, im: c.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(c: ComplexJson) -> Self {
        Complex64::new(c.re, c.im)
    }
}

/// Row-major real and imaginary parts of a square complex matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &CMatrix) -> Self {
        let rows = |f: fn(&Complex64) -> f64| (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| f(&m[(i, j)])).collect()).collect();
        Self { re: rows(|c| c.re), im: rows(|c| c.im) }
    }

    pub fn to_matrix(&self, g: usize) -> Result<CMatrix> {
        let shape_ok = |rows: &Vec<Vec<f64>>| rows.len() == g && rows.iter().all(|r| r.len() == g);
        if !shape_ok(&self.re) || !shape_ok(&self.im) {
            return Err(Error::DimensionMismatch(format!("expected {g}x{g} re and im arrays")));
        }
        Ok(CMatrix::from_fn(g, g, |i, j| Complex64::new(self.re[i][j], self.im[i][j])))
    }
}

/// `{"g", "re", "im"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodMatrixJson {
    pub g: usize,
    #[serde(flatten)]
    pub entries: MatrixJson,
}

impl PeriodMatrixJson {
    pub fn from_point(omega: &SiegelPoint) -> Self {
        Self { g: omega.genus(), entries: MatrixJson::from_matrix(omega.omega()) }
    }

    /// Validates the matrix as a point of `H_g`.
    pub fn to_point(&self) -> Result<SiegelPoint> {
        if self.g == 0 {
            return Err(Error::InvalidInput("genus must be positive".into()));
        }
        SiegelPoint::new(self.entries.to_matrix(self.g)?)
    }
}

pub fn parse_characteristic(json: &str) -> Result<ThetaCharacteristic> {
    let raw: ThetaCharacteristic = from_json(json)?;
    ThetaCharacteristic::new(raw.a, raw.b)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u8>,
    pub re: f64,
    pub im: f64,
}

/// `{"n", "coeffs": [{"alpha", "re", "im"}]}`; absent monomials are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CubicJson {
    pub n: usize,
    pub coeffs: Vec<TermJson>,
}

impl CubicJson {
    /// Lists every monomial, zeros included, in descending lexicographic order.
    pub fn from_form(f: &CubicForm) -> Self {
        let coeffs = monomials(f.n())
            .into_iter()
            .zip(f.coeffs())
            .map(|(alpha, c)| TermJson { alpha, re: c.re, im: c.im })
            .collect();
        Self { n: f.n(), coeffs }
    }

    pub fn to_form(&self) -> Result<CubicForm> {
        if self.n == 0 {
            return Err(Error::InvalidInput("a cubic form needs at least one variable".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for t in &self.coeffs {
            if !seen.insert(&t.alpha) {
                return Err(Error::InvalidInput(format!("monomial {:?} listed twice", t.alpha)));
            }
        }
        CubicForm::from_terms(self.n, self.coeffs.iter().map(|t| (t.alpha.as_slice(), Complex64::new(t.re, t.im))))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveJson {
    pub branch_points: Vec<f64>,
}

impl CurveJson {
    pub fn to_curve(&self) -> Result<HyperellipticCurve> {
        HyperellipticCurve::new(self.branch_points.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodReportJson {
    pub omega: PeriodMatrixJson,
    pub a_periods: MatrixJson,
    pub b_periods: MatrixJson,
    pub symmetry_residual: f64,
    pub quadrature_error_estimate: f64,
    pub lambda_min: f64,
}

impl PeriodReportJson {
    pub fn new(p: &PeriodResult) -> Self {
        Self {
            omega: PeriodMatrixJson::from_point(&p.omega),
            a_periods: MatrixJson::from_matrix(&p.a_periods),
            b_periods: MatrixJson::from_matrix(&p.b_periods),
            symmetry_residual: p.symmetry_residual,
            quadrature_error_estimate: p.quadrature_error_estimate,
            lambda_min: p.omega.lambda_min(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntryJson {
    pub xi_index: usize,
    pub xi: ThetaCharacteristic,
    pub raw: ComplexJson,
    pub scale_free: f64,
    pub flags: Vec<Flag>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReportJson {
    pub omega_hash: String,
    pub invariant: Invariant,
    pub weight: f64,
    pub entries: Vec<SweepEntryJson>,
    pub summary: SweepSummary,
}

impl SweepReportJson {
    pub fn new(omega: &SiegelPoint, sweep: &Sweep) -> Self {
        let entries = sweep
            .entries
            .iter()
            .map(|e| SweepEntryJson {
                xi_index: e.xi_index,
                xi: e.value.xi.clone(),
                raw: e.value.raw.into(),
                scale_free: e.value.scale_free,
                flags: e.value.flags.clone(),
            })
            .collect();
        let weight = sweep.entries.first().map_or(0.0, |e| e.value.weight);
        Self { omega_hash: omega_hash(omega), invariant: sweep.invariant, weight, entries, summary: sweep.summary.clone() }
    }
}

/// SHA-256 over the genus and the little-endian bits of `(re, im)` of each
/// entry in row-major order, as lowercase hex.
pub fn omega_hash(omega: &SiegelPoint) -> String {
    let m = omega.omega();
    let mut h = Sha256::new();
    h.update((omega.genus() as u64).to_le_bytes());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            h.update(m[(i, j)].re.to_le_bytes());
            h.update(m[(i, j)].im.to_le_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn from_json<T: for<'de> Deserialize<'de>>(json: &str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::random_siegel_seeded;
    use crate::cubic::hesse_cubic;

    #[test]
    fn period_matrix_round_trip() {
        let omega = random_siegel_seeded(3, 4, 1.0);
        let json = to_json(&PeriodMatrixJson::from_point(&omega));
        let back = from_json::<PeriodMatrixJson>(&json).unwrap().to_point().unwrap();
        assert_eq!(back, omega);
    }

    #[test]
    fn period_matrix_shape_checked() {
        let json = r#"{"g": 2, "re": [[0, 0], [0, 0]], "im": [[1, 0]]}"#;
        let pm: PeriodMatrixJson = from_json(json).unwrap();
        assert!(matches!(pm.to_point(), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn cubic_round_trip_and_sparse_input() {
        let f = hesse_cubic(Complex64::new(0.3, -0.2));
        let back = from_json::<CubicJson>(&to_json(&CubicJson::from_form(&f))).unwrap().to_form().unwrap();
        assert_eq!(back, f);
        let sparse = r#"{"n": 3, "coeffs": [{"alpha": [3,0,0], "re": 1, "im": 0}]}"#;
        let g = from_json::<CubicJson>(sparse).unwrap().to_form().unwrap();
        assert_eq!(g.coefficient(&[3, 0, 0]).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(g.coefficient(&[0, 3, 0]).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn duplicate_monomial_rejected() {
        let json = r#"{"n": 3, "coeffs": [{"alpha": [3,0,0], "re": 1, "im": 0}, {"alpha": [3,0,0], "re": 1, "im": 0}]}"#;
        assert!(from_json::<CubicJson>(json).unwrap().to_form().is_err());
    }

    #[test]
    fn characteristic_validated() {
        assert!(parse_characteristic(r#"{"a":[1,0],"b":[1,1]}"#).is_ok());
        assert!(parse_characteristic(r#"{"a":[2,0],"b":[1,1]}"#).is_err());
        assert!(parse_characteristic(r#"{"a":[1],"b":[1,1]}"#).is_err());
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = random_siegel_seeded(4, 1, 1.0);
        let b = random_siegel_seeded(4, 2, 1.0);
        assert_eq!(omega_hash(&a), omega_hash(&a.clone()));
        assert_ne!(omega_hash(&a), omega_hash(&b));
        assert_eq!(omega_hash(&a).len(), 64);
    }
}

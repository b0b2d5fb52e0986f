//! Test points of the Siegel upper half space: seeded random points, products,
//! and period matrices of hyperelliptic curves with real branch points.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::siegel::{block_diag, validate_siegel, CMatrix, SiegelPoint, SiegelTolerances};

/// `Omega = X + i(Y Y^T + I)` with `X` symmetric and the entries of `X`, `Y`
/// uniform in `[-spread, spread]`.
pub fn random_siegel<R: Rng + ?Sized>(g: usize, rng: &mut R, spread: f64) -> SiegelPoint {
    let mut draw = || spread * (2.0 * rng.random::<f64>() - 1.0);
    let mut x = DMatrix::<f64>::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let v = draw();
            x[(i, j)] = v;
            x[(j, i)] = v;
        }
    }
    let y = DMatrix::<f64>::from_fn(g, g, |_, _| draw());
    let im = &y * y.transpose() + DMatrix::<f64>::identity(g, g);
    let omega = CMatrix::from_fn(g, g, |i, j| Complex64::new(x[(i, j)], im[(i, j)]));
    SiegelPoint::new(omega).expect("Im(Omega) >= I by construction")
}

/// [`random_siegel`] driven by a ChaCha stream seeded with `seed`.
pub fn random_siegel_seeded(g: usize, seed: u64, spread: f64) -> SiegelPoint {
    random_siegel(g, &mut ChaCha8Rng::seed_from_u64(seed), spread)
}

/// A block-diagonal period matrix together with the genera of its blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductPoint {
    pub omega: SiegelPoint,
    pub partition: Vec<usize>,
}

pub fn product_point(parts: &[SiegelPoint]) -> Result<ProductPoint> {
    if parts.len() < 2 {
        return Err(Error::InvalidInput("a product point needs at least two factors".into()));
    }
    let omega = parts[1..].iter().fold(parts[0].clone(), |acc, p| block_diag(&acc, p));
    Ok(ProductPoint { omega, partition: parts.iter().map(SiegelPoint::genus).collect() })
}

// ---------------------------------------------------------------------------
// Hyperelliptic curves

/// `y^2 = prod (x - e_i)` with real, strictly increasing branch points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperellipticCurve {
    branch_points: Vec<f64>,
}

pub const MIN_BRANCH_GAP: f64 = 1e-8;

impl HyperellipticCurve {
    pub fn new(branch_points: Vec<f64>) -> Result<Self> {
        let count = branch_points.len();
        if count < 4 || count % 2 != 0 {
            return Err(Error::InvalidInput(format!("need an even number >= 4 of branch points, got {count}")));
        }
        if branch_points.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidInput("branch points must be finite".into()));
        }
        for w in branch_points.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidInput("branch points must be strictly increasing".into()));
            }
            if w[1] - w[0] <= MIN_BRANCH_GAP {
                return Err(Error::NearDegenerateGaps { left: w[0], right: w[1], min_gap: MIN_BRANCH_GAP });
            }
        }
        Ok(Self { branch_points })
    }

    pub fn genus(&self) -> usize {
        (self.branch_points.len() - 2) / 2
    }

    pub fn branch_points(&self) -> &[f64] {
        &self.branch_points
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Initial Gauss-Chebyshev node count.
    pub nodes: usize,
    /// Accepted change under node doubling, relative to `max(1, |I|)`.
    pub tol: f64,
    pub max_nodes: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self { nodes: 64, tol: 1e-12, max_nodes: 1 << 14 }
    }
}

#[derive(Debug, Clone)]
pub struct PeriodResult {
    pub omega: SiegelPoint,
    /// `a_periods[(i, k)]` is the integral of `x^k dx/y` over `a_{i+1}`.
    pub a_periods: CMatrix,
    pub b_periods: CMatrix,
    pub symmetry_residual: f64,
    pub quadrature_error_estimate: f64,
}

/// `(pi/N) sum h(cos theta_j)`, the Gauss-Chebyshev rule for
/// `int_{-1}^{1} h(t) / sqrt(1 - t^2) dt`.
fn gauss_chebyshev<F: Fn(f64) -> [f64; 16]>(nodes: usize, h: F, width: usize) -> Vec<f64> {
    let mut acc = vec![0.0; width];
    for j in 1..=nodes {
        let t = ((2 * j - 1) as f64 * PI / (2 * nodes) as f64).cos();
        let vals = h(t);
        for (a, v) in acc.iter_mut().zip(vals.iter()) {
            *a += v;
        }
    }
    acc.iter().map(|a| a * PI / nodes as f64).collect()
}

/// `int_{e_p}^{e_{p+1}} x^k / |p(x)|^{1/2} dx` for `k = 0..g`, with the
/// inverse square roots at both ends absorbed by `x = c + r cos(theta)`.
fn interval_integrals(e: &[f64], p: usize, g: usize, quad: &QuadratureSettings) -> Result<(Vec<f64>, f64)> {
    assert!(g <= 16, "genus above 16 is not supported by the quadrature kernel");
    let (lo, hi) = (e[p], e[p + 1]);
    let (center, half) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
    let integrand = |t: f64| -> [f64; 16] {
        let x = center + half * t;
        let mut q = 1.0;
        for (i, &ei) in e.iter().enumerate() {
            if i != p && i != p + 1 {
                q *= (x - ei).abs();
            }
        }
        let inv = 1.0 / q.sqrt();
        let mut out = [0.0; 16];
        let mut xp = 1.0;
        for slot in out.iter_mut().take(g) {
            *slot = xp * inv;
            xp *= x;
        }
        out
    };
    let mut nodes = quad.nodes.max(2);
    let mut prev = gauss_chebyshev(nodes, integrand, g);
    loop {
        let next = gauss_chebyshev(2 * nodes, integrand, g);
        let err = prev
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
            .fold(0.0, f64::max);
        if err <= quad.tol {
            return Ok((next, err));
        }
        nodes *= 2;
        if 2 * nodes > quad.max_nodes {
            return Err(Error::QuadratureDivergence { estimate: err });
        }
        prev = next;
    }
}

/// Period matrix of `y^2 = prod (x - e_i)` for the differentials
/// `x^{k-1} dx / y`.
///
/// `y` is the branch analytic off the cuts `[e_{2j-1}, e_{2j}]` with
/// `y ~ x^{g+1}` at infinity, evaluated from the upper half plane:
/// `y = i^{#(e_i > x)} |p(x)|^{1/2}` on the real axis. Collapsing the
/// counterclockwise cycles onto the axis,
///
/// * `a_i` around the cut `[e_{2i-1}, e_{2i}]` gives `-2 int_cut`,
/// * `b_i` around `[e_{2i}, e_{2g+1}]`, which changes sheet at both ends,
///   gives `-2 sum` over the gaps `[e_{2j}, e_{2j+1}]`, `j = i..g`.
pub fn hyperelliptic_periods(curve: &HyperellipticCurve, quad: &QuadratureSettings) -> Result<PeriodResult> {
    let e = curve.branch_points();
    let g = curve.genus();
    let count = e.len();
    let mut worst_err = 0.0_f64;
    // i^{-m} for the upper-side branch with m branch points to the right
    let inv_phase = |m: usize| -> Complex64 { Complex64::i().powi(-(m as i32)) };
    let mut interval = Vec::with_capacity(count - 1);
    for p in 0..(count - 1) {
        let (vals, err) = interval_integrals(e, p, g, quad)?;
        worst_err = worst_err.max(err);
        let phase = inv_phase(count - (p + 1));
        interval.push(vals.into_iter().map(|v| phase * v).collect::<Vec<_>>());
    }
    let mut a_periods = CMatrix::zeros(g, g);
    let mut b_periods = CMatrix::zeros(g, g);
    for i in 0..g {
        for k in 0..g {
            a_periods[(i, k)] = interval[2 * i][k] * -2.0;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in i..g {
                acc += interval[2 * j + 1][k];
            }
            b_periods[(i, k)] = acc * -2.0;
        }
    }
    let a_inv = a_periods.clone().try_inverse().ok_or(Error::SingularMatrix { det_abs: a_periods.determinant().norm() })?;
    let raw = &b_periods * a_inv;
    let (omega, symmetry_residual) = symplectic_normalize(raw)?;
    Ok(PeriodResult { omega, a_periods, b_periods, symmetry_residual, quadrature_error_estimate: worst_err })
}

/// Accepts the raw ratio when it is symmetric; if its imaginary part comes
/// out negative definite the b-cycles carry the opposite orientation and the
/// sign is flipped.
fn symplectic_normalize(raw: CMatrix) -> Result<(SiegelPoint, f64)> {
    let scale = raw.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residual = (&raw - raw.transpose()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = SiegelTolerances { sym_tol: 1e-9 * scale, pos_tol: 1e-10 };
    for candidate in [raw.clone(), -raw.clone()] {
        if let Ok(p) = validate_siegel(candidate, tol) {
            return Ok((p, residual));
        }
    }
    Err(Error::SymplecticBasisNotFound { residual })
}

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 1e-16 * a.abs() {
            break;
        }
        let next = ((a + b) / 2.0, (a * b).sqrt());
        a = next.0;
        b = next.1;
    }
    (a + b) / 2.0
}

/// Period ratio of `y^2 = (x - e1)(x - e2)(x - e3)(x - e4)` from complete
/// elliptic integrals evaluated by the AGM:
/// `tau = i K(k') / K(k)` with `k^2 = (e2-e1)(e4-e3) / ((e3-e1)(e4-e2))`.
pub fn elliptic_period_agm(e: [f64; 4]) -> Result<Complex64> {
    if !(e[0] < e[1] && e[1] < e[2] && e[2] < e[3]) {
        return Err(Error::InvalidInput("branch points must be strictly increasing".into()));
    }
    let denom = (e[2] - e[0]) * (e[3] - e[1]);
    let k = ((e[1] - e[0]) * (e[3] - e[2]) / denom).sqrt();
    let kp = ((e[2] - e[1]) * (e[3] - e[0]) / denom).sqrt();
    // K(k) = pi / (2 agm(1, k')), so K(k')/K(k) = agm(1, k')/agm(1, k)
    Ok(Complex64::new(0.0, agm(1.0, kp) / agm(1.0, k)))
}

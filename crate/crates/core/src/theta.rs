//! Riemann theta functions with half-integer characteristics.
//!
//! The lattice sum runs over the ellipsoid `|T(n + a/2 + c)| <= N` where
//! `Im(Omega) = T^T T` and `c = Im(Omega)^{-1} Im(z)` recentres the Gaussian
//! envelope. `N` comes from a counting majorant of the tail, see
//! [`truncation_radius`]. Error claims are absolute, measured against the
//! envelope `exp(pi Im(z)^T Im(Omega)^{-1} Im(z))`, which is 1 for real `z`.

use std::f64::consts::PI;

use nalgebra::{Cholesky, DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::siegel::{in_gamma_4_8, sp_action_z, CMatrix, CVector, SiegelPoint, SymplecticInt, ThetaCharacteristic};

/// Largest `|z|_inf` evaluated directly; larger arguments are reduced by
/// quasi-periodicity first.
pub const EVALUATION_BALL: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaSettings {
    /// Absolute error target; half goes to the truncated tail.
    pub eps: f64,
    /// Cap on the per-coordinate extent of the summation box.
    pub max_radius: u32,
}

impl Default for ThetaSettings {
    fn default() -> Self {
        Self { eps: 1e-14, max_radius: 60 }
    }
}

impl ThetaSettings {
    pub fn new(eps: f64, max_radius: u32) -> Result<Self> {
        if !(eps > 0.0) || max_radius < 1 {
            return Err(Error::InvalidInput("theta settings need eps > 0 and max_radius >= 1".into()));
        }
        Ok(Self { eps, max_radius })
    }
}

/// Value and the first three derivative tensors of a theta function at `z = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaJetRaw {
    pub value: Complex64,
    pub gradient: CVector,
    pub hessian: CMatrix,
    /// Dense symmetric `g x g x g` tensor, index `(i*g + j)*g + k`.
    pub third: Vec<Complex64>,
    pub genus: usize,
}

impl ThetaJetRaw {
    pub fn third_at(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.third[(i * self.genus + j) * self.genus + k]
    }
}

/// Majorant of the tail of `sum (2 pi |v|)^order exp(-pi |u|^2)` over the
/// shifted lattice points `u = T v` with `|u| > radius`.
///
/// Disjoint balls of radius `rho/2` around the lattice points give the count
/// bound `#{|u| <= t} <= ((2t + rho)/rho)^g`, with `rho = sqrt(lambda_min)` a
/// lower bound for the shortest lattice vector. `|v| <= |u|/rho + shift`.
fn tail_majorant(genus: usize, rho: f64, shift: f64, order: u32, radius: f64) -> f64 {
    let weight = |t: f64| -> f64 {
        let v = t / rho + shift;
        (2.0 * PI * v).max(1.0).powi(order as i32) * (-PI * t * t).exp()
    };
    let count = |t: f64| ((2.0 * t + rho) / rho).powi(genus as i32);
    let h = 0.25;
    let mut total = 0.0;
    for j in 0..100_000 {
        let t = radius + j as f64 * h;
        let term = count(t + h) * weight(t);
        total += term;
        if term < 1e-40 && j > 4 {
            break;
        }
    }
    total
}

/// Smallest ellipsoidal radius whose tail bound drops below `eps/2`.
///
/// The radius is measured in the metric of `Im(Omega)`; with `Im(Omega) = I`
/// it is the Euclidean radius of the summation ball.
pub fn truncation_radius(omega: &SiegelPoint, a: &[u8], eps: f64, deriv_order: u32) -> Result<u32> {
    let _ = a; // the bound is uniform over the shift a/2
    radius_for_shift(omega.genus(), omega.lambda_min(), 0.0, eps, deriv_order, u32::MAX)
}

fn radius_for_shift(genus: usize, lambda_min: f64, shift: f64, eps: f64, order: u32, cap: u32) -> Result<u32> {
    let rho = lambda_min.sqrt();
    let start = ((order as f64 / (2.0 * PI)).sqrt().ceil() as u32).max(1);
    let mut n = start;
    loop {
        if tail_majorant(genus, rho, shift, order, n as f64) < eps / 2.0 {
            return Ok(n);
        }
        n += 1;
        if n > 10_000 || n > cap.saturating_mul(64) {
            return Err(Error::RadiusCapExceeded { cap, lambda_min });
        }
    }
}

/// Lattice points and the Cholesky factor for one summation.
struct LatticeSweep {
    points: Vec<Vec<i64>>,
}

fn enumerate_ellipsoid(upper: &DMatrix<f64>, center: &[f64], radius: f64) -> Vec<Vec<i64>> {
    // |T w|^2 <= r^2 with w = n + center, T upper triangular
    let g = center.len();
    let mut out = Vec::new();
    let mut n = vec![0i64; g];
    fn recurse(
        level: usize,
        upper: &DMatrix<f64>,
        center: &[f64],
        remaining: f64,
        n: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let g = center.len();
        let tii = upper[(level, level)];
        let mut partial = 0.0;
        for j in (level + 1)..g {
            partial += upper[(level, j)] * (n[j] as f64 + center[j]);
        }
        // (tii * w + partial)^2 <= remaining
        let half = remaining.max(0.0).sqrt() / tii;
        let mid = -partial / tii - center[level];
        let lo = (mid - half).ceil() as i64;
        let hi = (mid + half).floor() as i64;
        for k in lo..=hi {
            n[level] = k;
            let row = tii * (k as f64 + center[level]) + partial;
            let rest = remaining - row * row;
            if rest < 0.0 {
                continue;
            }
            if level == 0 {
                out.push(n.clone());
            } else {
                recurse(level - 1, upper, center, rest, n, out);
            }
        }
    }
    recurse(g - 1, upper, center, radius * radius, &mut n, &mut out);
    out.sort();
    out
}

fn cholesky_upper(omega: &SiegelPoint) -> DMatrix<f64> {
    let imag = omega.imag();
    Cholesky::new(imag).expect("validated Im(Omega) is positive definite").l().transpose()
}

fn build_sweep(omega: &SiegelPoint, a: &[u8], im_z: &DVector<f64>, order: u32, s: &ThetaSettings) -> Result<LatticeSweep> {
    let g = omega.genus();
    let imag = omega.imag();
    let imag_inv = imag.clone().try_inverse().expect("positive definite");
    let c = &imag_inv * im_z;
    // |v| <= |u|/rho + |c| for v = n + a/2; the a/2 part is absorbed by the
    // lattice shift, only c moves the centre away from v = 0.
    let radius = radius_for_shift(g, omega.lambda_min(), c.norm(), s.eps, order, s.max_radius)?;
    let extent = (0..g).map(|j| radius as f64 * imag_inv[(j, j)].sqrt()).fold(0.0, f64::max);
    if extent > s.max_radius as f64 {
        return Err(Error::RadiusCapExceeded { cap: s.max_radius, lambda_min: omega.lambda_min() });
    }
    let center: Vec<f64> = (0..g).map(|j| a[j] as f64 / 2.0 + c[j]).collect();
    let upper = cholesky_upper(omega);
    Ok(LatticeSweep { points: enumerate_ellipsoid(&upper, &center, radius as f64) })
}

fn check_genus(xi: &ThetaCharacteristic, omega: &SiegelPoint) -> Result<()> {
    if xi.genus() != omega.genus() {
        return Err(Error::DimensionMismatch(format!(
            "characteristic genus {} vs period matrix genus {}",
            xi.genus(),
            omega.genus()
        )));
    }
    Ok(())
}

/// Exponent `pi i (v^T Omega v + 2 v^T (z + b/2))` of one lattice term.
#[inline]
fn term(omega: &CMatrix, v: &[f64], zb: &[Complex64]) -> Complex64 {
    let g = v.len();
    let mut quad = Complex64::new(0.0, 0.0);
    for i in 0..g {
        let mut row = omega[(i, i)] * (v[i] * 0.5);
        for j in (i + 1)..g {
            row += omega[(i, j)] * v[j];
        }
        quad += row * v[i];
    }
    let mut lin = Complex64::new(0.0, 0.0);
    for i in 0..g {
        lin += zb[i] * v[i];
    }
    let exponent = Complex64::i() * PI * (quad * 2.0 + lin * 2.0);
    exponent.exp()
}

fn direct_sum(xi: &ThetaCharacteristic, z: &CVector, omega: &SiegelPoint, s: &ThetaSettings) -> Result<Complex64> {
    let g = omega.genus();
    let im_z = z.map(|w| w.im);
    let sweep = build_sweep(omega, &xi.a, &im_z, 0, s)?;
    let zb: Vec<Complex64> = (0..g).map(|j| z[j] + xi.b[j] as f64 / 2.0).collect();
    let mut v = vec![0.0; g];
    let mut acc = Complex64::new(0.0, 0.0);
    for n in &sweep.points {
        for j in 0..g {
            v[j] = n[j] as f64 + xi.a[j] as f64 / 2.0;
        }
        acc += term(omega.omega(), &v, &zb);
    }
    Ok(acc)
}

/// `theta[xi](z, Omega)`.
pub fn theta(xi: &ThetaCharacteristic, z: &CVector, omega: &SiegelPoint, s: &ThetaSettings) -> Result<Complex64> {
    check_genus(xi, omega)?;
    if z.len() != omega.genus() {
        return Err(Error::DimensionMismatch("z length differs from genus".into()));
    }
    let sup = z.iter().map(|w| w.re.abs().max(w.im.abs())).fold(0.0, f64::max);
    if sup <= EVALUATION_BALL {
        return direct_sum(xi, z, omega, s);
    }
    let (reduced, factor) = reduce_argument(xi, z, omega);
    Ok(factor * direct_sum(xi, &reduced, omega, s)?)
}

/// Writes `z = z' + m + Omega k` with integer `m, k` and returns `z'`
/// together with the factor `f` such that `theta(z) = f * theta(z')`.
fn reduce_argument(xi: &ThetaCharacteristic, z: &CVector, omega: &SiegelPoint) -> (CVector, Complex64) {
    let g = omega.genus();
    let imag_inv = omega.imag().try_inverse().expect("positive definite");
    let w = &imag_inv * z.map(|x| x.im);
    let k: Vec<f64> = w.iter().map(|x| x.round()).collect();
    let kv = CVector::from_iterator(g, k.iter().map(|&x| Complex64::new(x, 0.0)));
    let z1 = z - omega.omega() * &kv;
    let m: Vec<f64> = z1.iter().map(|x| x.re.round()).collect();
    let mv = CVector::from_iterator(g, m.iter().map(|&x| Complex64::new(x, 0.0)));
    let reduced = &z1 - &mv;

    // theta(w + Omega k) = exp(pi i(-k^T Omega k - 2 k^T (w + b/2))) theta(w)
    // theta(w + m) = exp(pi i a.m) theta(w)
    let k_omega_k = (kv.transpose() * omega.omega() * &kv)[(0, 0)];
    let mut lin = Complex64::new(0.0, 0.0);
    for j in 0..g {
        lin += (reduced[j] + mv[j] + xi.b[j] as f64 / 2.0) * k[j];
    }
    let a_dot_m: f64 = (0..g).map(|j| xi.a[j] as f64 * m[j]).sum();
    let exponent = Complex64::i() * PI * (-k_omega_k - lin * 2.0 + a_dot_m);
    (reduced, exponent.exp())
}

/// Value and derivatives up to order three at `z = 0` by the term-wise
/// differentiated series.
pub fn theta_jet(xi: &ThetaCharacteristic, omega: &SiegelPoint, s: &ThetaSettings) -> Result<ThetaJetRaw> {
    check_genus(xi, omega)?;
    let g = omega.genus();
    let sweep = build_sweep(omega, &xi.a, &DVector::zeros(g), 3, s)?;
    let zb: Vec<Complex64> = xi.b.iter().map(|&b| Complex64::new(b as f64 / 2.0, 0.0)).collect();

    let mut value = Complex64::new(0.0, 0.0);
    let mut grad = vec![Complex64::new(0.0, 0.0); g];
    let mut hess = vec![Complex64::new(0.0, 0.0); g * g];
    let mut third = vec![Complex64::new(0.0, 0.0); g * g * g];
    let mut v = vec![0.0; g];
    for n in &sweep.points {
        for j in 0..g {
            v[j] = n[j] as f64 + xi.a[j] as f64 / 2.0;
        }
        let t = term(omega.omega(), &v, &zb);
        value += t;
        for i in 0..g {
            let ti = t * v[i];
            grad[i] += ti;
            for j in i..g {
                let tij = ti * v[j];
                hess[i * g + j] += tij;
                for k in j..g {
                    third[(i * g + j) * g + k] += tij * v[k];
                }
            }
        }
    }

    let w1 = Complex64::new(0.0, 2.0 * PI);
    let w2 = w1 * w1;
    let w3 = w2 * w1;
    let gradient = CVector::from_iterator(g, grad.iter().map(|x| x * w1));
    let mut hessian = CMatrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let val = hess[i * g + j] * w2;
            hessian[(i, j)] = val;
            hessian[(j, i)] = val;
        }
    }
    let mut full = vec![Complex64::new(0.0, 0.0); g * g * g];
    for i in 0..g {
        for j in i..g {
            for k in j..g {
                let val = third[(i * g + j) * g + k] * w3;
                for (p, q, r) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                    full[(p * g + q) * g + r] = val;
                }
            }
        }
    }
    Ok(ThetaJetRaw { value, gradient, hessian, third: full, genus: g })
}

/// Outcome of a numerical check of the level-(4,8) transformation law.
#[derive(Debug, Clone, Serialize)]
pub struct TransformReport {
    /// Mean of `r(z)` over the accepted samples.
    pub mean_ratio: Complex64,
    /// `max |r(z) - mean| / |mean|`.
    pub constancy_deviation: f64,
    /// `det(C Omega + D)`.
    pub det: Complex64,
    /// `|mean^2 - det|`.
    pub det_residual_abs: f64,
    /// `|mean^2 - det| / |det|`.
    pub det_residual_rel: f64,
    pub samples_used: usize,
}

/// Samples `r(z) = theta(z_hat, Omega_hat) / (exp(pi i Q(z)) theta(z, Omega))`
/// for `gamma` in `Gamma(4,8)`. The sign of the square root of
/// `det(C Omega + D)` is not fixed here; the report compares `r^2` with it.
pub fn check_transformation(
    xi: &ThetaCharacteristic,
    gamma: &SymplecticInt,
    omega: &SiegelPoint,
    sample_count: usize,
    seed: u64,
    s: &ThetaSettings,
) -> Result<TransformReport> {
    if !in_gamma_4_8(gamma) {
        return Err(Error::InvalidInput("transformation check requires gamma in Gamma(4,8)".into()));
    }
    check_genus(xi, omega)?;
    let g = omega.genus();
    let cd = gamma.automorphy(omega);
    let det = cd.determinant();
    let cd_inv = cd.clone().try_inverse().ok_or(Error::SingularMatrix { det_abs: det.norm() })?;
    let c_mat = crate::siegel::to_complex(&gamma.c());
    let q_form = &cd_inv * &c_mat;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ratios = Vec::with_capacity(sample_count);
    for _ in 0..sample_count {
        let z = CVector::from_iterator(
            g,
            (0..g).map(|_| Complex64::new(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5))),
        );
        let base = theta(xi, &z, omega, s)?;
        if base.norm() < 1e-13 {
            continue;
        }
        let (z_hat, omega_hat) = sp_action_z(gamma, &z, omega)?;
        let image = theta(xi, &z_hat, &omega_hat, s)?;
        let q = (z.transpose() * &q_form * &z)[(0, 0)];
        let phase = (Complex64::i() * PI * q).exp();
        ratios.push(image / (phase * base));
    }
    if ratios.is_empty() {
        return Err(Error::DegenerateSample);
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    let constancy_deviation = ratios.iter().map(|r| (r - mean).norm()).fold(0.0, f64::max) / mean.norm();
    let det_residual_abs = (mean * mean - det).norm();
    Ok(TransformReport {
        mean_ratio: mean,
        constancy_deviation,
        det,
        det_residual_abs,
        det_residual_rel: det_residual_abs / det.norm(),
        samples_used: ratios.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::random_siegel;
    use crate::siegel::{enumerate_characteristics, ParityFilter};

    fn cz(v: &[(f64, f64)]) -> CVector {
        CVector::from_iterator(v.len(), v.iter().map(|&(r, i)| Complex64::new(r, i)))
    }

    /// Straight sum over the cube `[-r, r]^g`, in reverse order.
    fn brute_force(xi: &ThetaCharacteristic, z: &CVector, omega: &CMatrix, r: i64) -> Complex64 {
        let g = xi.genus();
        let side = (2 * r + 1) as usize;
        let total = side.pow(g as u32);
        let mut acc = Complex64::new(0.0, 0.0);
        for idx in (0..total).rev() {
            let mut rem = idx;
            let mut v = vec![0.0; g];
            for j in 0..g {
                v[j] = (rem % side) as f64 - r as f64 + xi.a[j] as f64 / 2.0;
                rem /= side;
            }
            let mut e = Complex64::new(0.0, 0.0);
            for i in 0..g {
                for j in 0..g {
                    e += omega[(i, j)] * v[i] * v[j];
                }
                e += (z[i] + xi.b[i] as f64 / 2.0) * (2.0 * v[i]);
            }
            acc += (Complex64::i() * PI * e).exp();
        }
        acc
    }

    #[test]
    fn genus_one_matches_brute_force() {
        let xi = ThetaCharacteristic::new(vec![1], vec![1]).unwrap();
        let omega = SiegelPoint::identity_imaginary(1);
        let z = cz(&[(0.1, 0.0)]);
        let fast = theta(&xi, &z, &omega, &ThetaSettings::default()).unwrap();
        let slow = brute_force(&xi, &z, omega.omega(), 50);
        assert!((fast - slow).norm() < 1e-13, "{fast} vs {slow}");
    }

    #[test]
    fn genus_three_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let omega = random_siegel(3, &mut rng, 0.6);
        let z = cz(&[(0.3, -0.2), (-0.1, 0.4), (0.25, 0.1)]);
        for xi in enumerate_characteristics(3, ParityFilter::All).iter().step_by(7) {
            let fast = theta(xi, &z, &omega, &ThetaSettings::default()).unwrap();
            let slow = brute_force(xi, &z, omega.omega(), 8);
            assert!((fast - slow).norm() < 1e-13, "{xi:?}: {fast} vs {slow}");
        }
    }

    #[test]
    fn radius_for_identity_imaginary() {
        let omega = SiegelPoint::identity_imaginary(4);
        let n = truncation_radius(&omega, &[0, 0, 0, 0], 1e-14, 0).unwrap();
        assert!(n <= 6, "radius {n}");
    }

    #[test]
    fn radius_monotonicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let omega = random_siegel(4, &mut rng, 0.8);
            let doubled = SiegelPoint::new(omega.real() .map(|x| Complex64::new(x, 0.0)) + omega.imag().map(|y| Complex64::new(0.0, 2.0 * y))).unwrap();
            for order in 0..=3 {
                let n = truncation_radius(&omega, &[0; 4], 1e-14, order).unwrap();
                let n2 = truncation_radius(&doubled, &[0; 4], 1e-14, order).unwrap();
                assert!(n2 <= n);
            }
            let n0 = truncation_radius(&omega, &[0; 4], 1e-14, 0).unwrap();
            let n3 = truncation_radius(&omega, &[0; 4], 1e-14, 3).unwrap();
            assert!(n3 >= n0);
        }
    }

    #[test]
    fn odd_value_vanishes_at_origin() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let omega = random_siegel(4, &mut rng, 1.0);
        let z = CVector::zeros(4);
        for xi in enumerate_characteristics(4, ParityFilter::Odd).iter().step_by(13) {
            let v = theta(xi, &z, &omega, &ThetaSettings::default()).unwrap();
            assert!(v.norm() < 1e-14, "{v}");
        }
    }

    #[test]
    fn jet_parity_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let omega = random_siegel(4, &mut rng, 0.9);
        let s = ThetaSettings::default();
        for xi in enumerate_characteristics(4, ParityFilter::All).iter().step_by(17) {
            let jet = theta_jet(xi, &omega, &s).unwrap();
            if xi.is_odd() {
                assert!(jet.value.norm() < 1e-13);
                assert!(jet.hessian.iter().all(|h| h.norm() < 1e-12));
            } else {
                assert!(jet.gradient.iter().all(|h| h.norm() < 1e-12));
                assert!(jet.third.iter().all(|h| h.norm() < 1e-11));
            }
        }
    }

    #[test]
    fn gradient_matches_central_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let omega = random_siegel(4, &mut rng, 1.0);
        let s = ThetaSettings::default();
        let h = 1e-5;
        for xi in enumerate_characteristics(4, ParityFilter::Odd).iter().step_by(29) {
            let jet = theta_jet(xi, &omega, &s).unwrap();
            for j in 0..4 {
                let mut zp = CVector::zeros(4);
                zp[j] = Complex64::new(h, 0.0);
                let zm = -zp.clone();
                let fd = (theta(xi, &zp, &omega, &s).unwrap() - theta(xi, &zm, &omega, &s).unwrap()) / (2.0 * h);
                assert!((fd - jet.gradient[j]).norm() < 1e-8, "{fd} vs {}", jet.gradient[j]);
            }
        }
    }

    #[test]
    fn reduction_matches_direct_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let omega = random_siegel(2, &mut rng, 0.5);
        let xi = ThetaCharacteristic::new(vec![1, 0], vec![1, 1]).unwrap();
        let z = cz(&[(2.7, 0.4), (-3.2, 0.1)]);
        let s = ThetaSettings::default();
        let reduced = theta(&xi, &z, &omega, &s).unwrap();
        let direct = direct_sum(&xi, &z, &omega, &s).unwrap();
        assert!((reduced - direct).norm() < 1e-12 * direct.norm().max(1.0), "{reduced} vs {direct}");
    }

    #[test]
    fn translation_transform_is_exact_periodicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let omega = random_siegel(4, &mut rng, 0.7);
        let mut b0 = nalgebra::DMatrix::<i64>::zeros(4, 4);
        b0[(0, 1)] = 4;
        b0[(1, 0)] = 4;
        b0[(2, 2)] = 8;
        let gamma = SymplecticInt::translation(&b0).unwrap();
        let xi = ThetaCharacteristic::new(vec![1, 1, 0, 1], vec![1, 0, 0, 0]).unwrap();
        let report = check_transformation(&xi, &gamma, &omega, 5, 1, &ThetaSettings::default()).unwrap();
        assert!((report.mean_ratio - 1.0).norm() < 1e-11);
        assert!(report.constancy_deviation < 1e-11);
    }

    #[test]
    fn identity_transform_ratio_is_one() {
        let omega = SiegelPoint::identity_imaginary(2);
        let xi = ThetaCharacteristic::new(vec![1, 0], vec![1, 0]).unwrap();
        let report = check_transformation(&xi, &SymplecticInt::identity(2), &omega, 4, 0, &ThetaSettings::default()).unwrap();
        assert!((report.mean_ratio - 1.0).norm() < 1e-14);
    }

    #[test]
    fn radius_cap_is_enforced() {
        let omega = SiegelPoint::new(CMatrix::from_diagonal_element(2, 2, Complex64::new(0.0, 1e-4))).unwrap();
        let xi = ThetaCharacteristic::new(vec![0, 0], vec![0, 0]).unwrap();
        let err = theta(&xi, &CVector::zeros(2), &omega, &ThetaSettings::default()).unwrap_err();
        assert!(matches!(err, Error::RadiusCapExceeded { .. }));
    }
}

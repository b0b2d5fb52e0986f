//! Cubic forms and the classical invariants of ternary cubics.
//!
//! `S` and `T` are evaluated as full contractions of the coefficient tensor
//! against Levi-Civita symbols (Aronhold's symbolic expressions
//! `(abc)(abd)(acd)(bcd)` and `(abc)(abd)(ace)(bcf)(def)^2`) and then
//! rescaled so that on the Hesse pencil `x^3 + y^3 + z^3 + 6m xyz`
//!
//! ```text
//! S = m - m^4,   T = 1 - 20 m^3 - 8 m^6.
//! ```
//!
//! The degree-4 and degree-6 pieces of the invariant ring are one
//! dimensional, so any nonzero contraction of those degrees is a multiple of
//! `S` (resp. `T`).

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::siegel::CMatrix;

/// Multiplier turning the raw `S` contraction into the Hesse normalization.
pub const S_NORMALIZATION: f64 = -1.0 / 24.0;
/// Multiplier turning the raw `T` contraction into the Hesse normalization.
pub const T_NORMALIZATION: f64 = -1.0 / 6.0;

/// Threshold on `|delta| / scale^12` below which a ternary cubic counts as singular.
pub const SINGULAR_DELTA_TOL: f64 = 1e-12;

/// Homogeneous cubic `f(x) = sum_alpha c_alpha x^alpha` in `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicForm {
    n: usize,
    coeffs: Vec<Complex64>,
}

/// Exponent vectors with `|alpha| = 3` in `n` variables, lexicographically
/// descending (`x1^3, x1^2 x2, ...`).
pub fn monomials(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    fn fill(pos: usize, left: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let n = cur.len();
        if pos == n - 1 {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[pos] = k;
            fill(pos + 1, left - k, cur, out);
        }
    }
    if n > 0 {
        fill(0, 3, &mut vec![0; n], &mut out);
    }
    out
}

fn factorial(k: u8) -> f64 {
    (1..=k as u32).product::<u32>() as f64
}

fn alpha_factorial(alpha: &[u8]) -> f64 {
    alpha.iter().map(|&k| factorial(k)).product()
}

fn alpha_of(i: usize, j: usize, k: usize, n: usize) -> Vec<u8> {
    let mut a = vec![0u8; n];
    a[i] += 1;
    a[j] += 1;
    a[k] += 1;
    a
}

impl CubicForm {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: vec![Complex64::new(0.0, 0.0); dimension(n)] }
    }

    /// Coefficients in the order of [`monomials`].
    pub fn from_coeffs(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if n == 0 || coeffs.len() != dimension(n) {
            return Err(Error::DimensionMismatch(format!(
                "a cubic in {n} variables has {} coefficients, got {}",
                dimension(n),
                coeffs.len()
            )));
        }
        Ok(Self { n, coeffs })
    }

    /// Builds a form from `(alpha, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<'a, I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [u8], Complex64)>,
    {
        let mut f = Self::zero(n);
        for (alpha, c) in terms {
            let idx = f.index_of(alpha)?;
            f.coeffs[idx] += c;
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn index_of(&self, alpha: &[u8]) -> Result<usize> {
        if alpha.len() != self.n || alpha.iter().map(|&k| k as u32).sum::<u32>() != 3 {
            return Err(Error::InvalidInput(format!("{alpha:?} is not a cubic exponent in {} variables", self.n)));
        }
        Ok(monomial_index(alpha))
    }

    pub fn coefficient(&self, alpha: &[u8]) -> Result<Complex64> {
        Ok(self.coeffs[self.index_of(alpha)?])
    }

    pub fn evaluate(&self, x: &[Complex64]) -> Complex64 {
        monomials(self.n)
            .iter()
            .zip(&self.coeffs)
            .map(|(alpha, c)| alpha.iter().zip(x).fold(*c, |acc, (&k, xi)| acc * xi.powu(k as u32)))
            .sum()
    }

    /// Symmetric tensor `t` with `f(x) = sum_{ijk} t_ijk x_i x_j x_k`,
    /// flattened as `(i*n + j)*n + k`.
    pub fn tensor(&self) -> Vec<Complex64> {
        let n = self.n;
        let mut t = vec![Complex64::new(0.0, 0.0); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let alpha = alpha_of(i, j, k, n);
                    t[(i * n + j) * n + k] = self.coeffs[monomial_index(&alpha)] * (alpha_factorial(&alpha) / 6.0);
                }
            }
        }
        t
    }

    /// Inverse of [`CubicForm::tensor`] for a symmetric tensor.
    pub fn from_tensor(n: usize, t: &[Complex64]) -> Self {
        let coeffs = monomials(n)
            .iter()
            .map(|alpha| {
                let mut idx = Vec::with_capacity(3);
                for (var, &k) in alpha.iter().enumerate() {
                    for _ in 0..k {
                        idx.push(var);
                    }
                }
                t[(idx[0] * n + idx[1]) * n + idx[2]] * (6.0 / alpha_factorial(alpha))
            })
            .collect();
        Self { n, coeffs }
    }

    /// `x -> f(M x)` for an `n x k` matrix `M`; the result has `k` variables.
    pub fn substitute(&self, m: &CMatrix) -> Result<CubicForm> {
        if m.nrows() != self.n {
            return Err(Error::DimensionMismatch(format!("substitution needs {} rows, got {}", self.n, m.nrows())));
        }
        let (n, k) = (self.n, m.ncols());
        let t = self.tensor();
        // contract one index at a time: n^3 -> n^2 k -> n k^2 -> k^3
        let mut s1 = vec![Complex64::new(0.0, 0.0); n * n * k];
        for i in 0..n {
            for j in 0..n {
                for c in 0..k {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for l in 0..n {
                        acc += t[(i * n + j) * n + l] * m[(l, c)];
                    }
                    s1[(i * n + j) * k + c] = acc;
                }
            }
        }
        let mut s2 = vec![Complex64::new(0.0, 0.0); n * k * k];
        for i in 0..n {
            for b in 0..k {
                for c in 0..k {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for l in 0..n {
                        acc += s1[(i * n + l) * k + c] * m[(l, b)];
                    }
                    s2[(i * k + b) * k + c] = acc;
                }
            }
        }
        let mut s3 = vec![Complex64::new(0.0, 0.0); k * k * k];
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for l in 0..n {
                        acc += s2[(l * k + b) * k + c] * m[(l, a)];
                    }
                    s3[(a * k + b) * k + c] = acc;
                }
            }
        }
        Ok(CubicForm::from_tensor(k, &s3))
    }

    /// Bombieri norm `sqrt(sum |c_alpha|^2 alpha!/3!)`, invariant under
    /// unitary substitutions.
    pub fn bombieri_norm(&self) -> f64 {
        monomials(self.n)
            .iter()
            .zip(&self.coeffs)
            .map(|(alpha, c)| c.norm_sqr() * alpha_factorial(alpha) / 6.0)
            .sum::<f64>()
            .sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: Complex64) -> CubicForm {
        CubicForm { n: self.n, coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    fn require_ternary(&self) -> Result<()> {
        if self.n != 3 {
            return Err(Error::WrongArity { expected: 3, got: self.n });
        }
        Ok(())
    }
}

/// `C(n + 2, 3)`.
pub fn dimension(n: usize) -> usize {
    n * (n + 1) * (n + 2) / 6
}

fn monomial_index(alpha: &[u8]) -> usize {
    // position in the descending lexicographic enumeration
    let n = alpha.len();
    let mut idx = 0;
    let mut left = 3u8;
    for pos in 0..n.saturating_sub(1) {
        // count monomials with a larger exponent at `pos` (same prefix)
        for k in (alpha[pos] + 1)..=left {
            idx += count_with_total(n - pos - 1, (left - k) as usize);
        }
        left -= alpha[pos];
    }
    idx
}

fn count_with_total(vars: usize, total: usize) -> usize {
    // number of exponent vectors in `vars` variables summing to `total`
    if vars == 0 {
        return usize::from(total == 0);
    }
    binomial(total + vars - 1, vars - 1)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `x^3 + y^3 + z^3 + 6m xyz`.
pub fn hesse_cubic(m: Complex64) -> CubicForm {
    let one = Complex64::new(1.0, 0.0);
    let terms: [(&[u8], Complex64); 4] = [(&[3, 0, 0], one), (&[0, 3, 0], one), (&[0, 0, 3], one), (&[1, 1, 1], m * 6.0)];
    CubicForm::from_terms(3, terms).expect("valid ternary exponents")
}

const PERMS: [([usize; 3], f64); 6] = [
    ([0, 1, 2], 1.0),
    ([1, 2, 0], 1.0),
    ([2, 0, 1], 1.0),
    ([0, 2, 1], -1.0),
    ([2, 1, 0], -1.0),
    ([1, 0, 2], -1.0),
];

#[inline]
fn t3(t: &[Complex64], i: usize, j: usize, k: usize) -> Complex64 {
    t[(i * 3 + j) * 3 + k]
}

/// Raw contraction `(abc)(abd)(acd)(bcd)`.
fn s_contraction(t: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (p1, s1) in PERMS {
        for (p2, s2) in PERMS {
            let sign12 = s1 * s2;
            for (p3, s3) in PERMS {
                let fa = t3(t, p1[0], p2[0], p3[0]);
                for (p4, s4) in PERMS {
                    let fb = t3(t, p1[1], p2[1], p4[0]);
                    let fc = t3(t, p1[2], p3[1], p4[1]);
                    let fd = t3(t, p2[2], p3[2], p4[2]);
                    acc += fa * fb * fc * fd * (sign12 * s3 * s4);
                }
            }
        }
    }
    acc
}

/// Raw contraction `(abc)(abd)(ace)(bcf)(def)^2`.
fn t_contraction(t: &[Complex64]) -> Complex64 {
    // (def)^2 only involves d, e, f: precompute
    // W[x1 x2 x3 | y1 y2 y3] = sum_{p5,p6} sgn t[x?]...
    // d slots: (B2[2], B5[0], B6[0]); e: (B3[2], B5[1], B6[1]); f: (B4[2], B5[2], B6[2])
    let mut w = [Complex64::new(0.0, 0.0); 27];
    for d0 in 0..3 {
        for e0 in 0..3 {
            for f0 in 0..3 {
                let mut acc = Complex64::new(0.0, 0.0);
                for (p5, s5) in PERMS {
                    for (p6, s6) in PERMS {
                        acc += t3(t, d0, p5[0], p6[0]) * t3(t, e0, p5[1], p6[1]) * t3(t, f0, p5[2], p6[2]) * (s5 * s6);
                    }
                }
                w[(d0 * 3 + e0) * 3 + f0] = acc;
            }
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (p1, s1) in PERMS {
        for (p2, s2) in PERMS {
            for (p3, s3) in PERMS {
                let fa = t3(t, p1[0], p2[0], p3[0]);
                for (p4, s4) in PERMS {
                    let fb = t3(t, p1[1], p2[1], p4[0]);
                    let fc = t3(t, p1[2], p3[1], p4[1]);
                    acc += fa * fb * fc * w[(p2[2] * 3 + p3[2]) * 3 + p4[2]] * (s1 * s2 * s3 * s4);
                }
            }
        }
    }
    acc
}

/// Aronhold's degree-4 invariant `S`.
pub fn aronhold_s(f: &CubicForm) -> Result<Complex64> {
    f.require_ternary()?;
    Ok(s_contraction(&f.tensor()) * S_NORMALIZATION)
}

/// Aronhold's degree-6 invariant `T`.
pub fn aronhold_t(f: &CubicForm) -> Result<Complex64> {
    f.require_ternary()?;
    Ok(t_contraction(&f.tensor()) * T_NORMALIZATION)
}

/// Discriminant `T^2 + 64 S^3`.
pub fn discriminant3(f: &CubicForm) -> Result<Complex64> {
    let s = aronhold_s(f)?;
    let t = aronhold_t(f)?;
    Ok(t * t + s * s * s * 64.0)
}

/// `S^3 / delta`, with the overall constant set to 1.
pub fn j_invariant(f: &CubicForm) -> Result<Complex64> {
    let s = aronhold_s(f)?;
    let t = aronhold_t(f)?;
    let delta = t * t + s * s * s * 64.0;
    let scale = f.max_coeff();
    if delta.norm() <= SINGULAR_DELTA_TOL * scale.powi(12) || delta.norm() == 0.0 {
        return Err(Error::SingularCubic { delta_abs: delta.norm() });
    }
    Ok(s * s * s / delta)
}

/// `x -> f(g^{-1} x)`.
pub fn act_gl(g: &CMatrix, f: &CubicForm) -> Result<CubicForm> {
    if g.nrows() != f.n() || g.ncols() != f.n() {
        return Err(Error::DimensionMismatch("group element does not match the number of variables".into()));
    }
    let det = g.determinant();
    if det.norm() <= 1e-12 {
        return Err(Error::SingularMatrix { det_abs: det.norm() });
    }
    let inv = g.clone().try_inverse().ok_or(Error::SingularMatrix { det_abs: det.norm() })?;
    f.substitute(&inv)
}

/// Ratio of the smallest to the largest singular value of the matrix whose
/// rows are the coefficient vectors of the partials `df/dx_i`. Zero exactly
/// when some directional derivative vanishes identically (a cone).
pub fn cone_defect(f: &CubicForm) -> f64 {
    let n = f.n();
    let t = f.tensor();
    let cols = n * (n + 1) / 2;
    // df/dx_i = 3 sum_{jk} t_ijk x_j x_k; record quadric coefficients
    let mut m = DMatrix::<Complex64>::zeros(n, cols);
    for i in 0..n {
        let mut col = 0;
        for j in 0..n {
            for k in j..n {
                let mult = if j == k { 3.0 } else { 6.0 };
                m[(i, col)] = t[(i * n + j) * n + k] * mult;
                col += 1;
            }
        }
    }
    let sv = m.svd(false, false).singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    let min = if sv.len() < n { 0.0 } else { sv.iter().copied().fold(f64::INFINITY, f64::min) };
    min / max
}

/// The three ternary invariants as selectable quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Invariant {
    S,
    T,
    #[serde(rename = "delta")]
    Delta,
}

impl Invariant {
    pub fn degree(self) -> u32 {
        match self {
            Invariant::S => 4,
            Invariant::T => 6,
            Invariant::Delta => 12,
        }
    }

    pub fn evaluate(self, f: &CubicForm) -> Result<Complex64> {
        match self {
            Invariant::S => aronhold_s(f),
            Invariant::T => aronhold_t(f),
            Invariant::Delta => discriminant3(f),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::S => "S",
            Invariant::T => "T",
            Invariant::Delta => "delta",
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(Invariant::S),
            "T" => Ok(Invariant::T),
            "delta" => Ok(Invariant::Delta),
            other => Err(Error::InvalidInput(format!("unknown invariant {other:?}; expected S, T or delta"))),
        }
    }
}

/// `|phi(f)| / |f|_B^{deg phi}`, unchanged by rescaling `f`.
pub fn scale_free(value: Complex64, f: &CubicForm, degree: u32) -> f64 {
    let norm = f.bombieri_norm();
    if norm == 0.0 {
        return 0.0;
    }
    value.norm() / norm.powi(degree as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn random_form<R: Rng>(n: usize, rng: &mut R) -> CubicForm {
        let coeffs = (0..dimension(n)).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        CubicForm::from_coeffs(n, coeffs).unwrap()
    }

    fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
        CMatrix::from_fn(n, n, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    }

    #[test]
    fn monomial_indexing_roundtrip() {
        for n in 1..6 {
            let mons = monomials(n);
            assert_eq!(mons.len(), dimension(n));
            for (i, a) in mons.iter().enumerate() {
                assert_eq!(monomial_index(a), i);
            }
        }
        assert_eq!(dimension(3), 10);
        assert_eq!(dimension(4), 20);
    }

    #[test]
    fn tensor_reproduces_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_form(4, &mut rng);
        let t = f.tensor();
        let x: Vec<Complex64> = (0..4).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let mut via_tensor = Complex64::new(0.0, 0.0);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    via_tensor += t[(i * 4 + j) * 4 + k] * x[i] * x[j] * x[k];
                }
            }
        }
        assert!((via_tensor - f.evaluate(&x)).norm() < 1e-13);
        let back = CubicForm::from_tensor(4, &t);
        for (a, b) in back.coeffs().iter().zip(f.coeffs()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn hesse_coefficients() {
        let f = hesse_cubic(c(1.0));
        assert_eq!(f.coefficient(&[1, 1, 1]).unwrap(), c(6.0));
        assert_eq!(f.coeffs().iter().filter(|z| z.norm() > 0.0).count(), 4);
        let fermat = hesse_cubic(c(0.0));
        assert_eq!(fermat.coeffs().iter().filter(|z| z.norm() > 0.0).count(), 3);
    }

    #[test]
    fn hesse_values() {
        let f0 = hesse_cubic(c(0.0));
        assert!(aronhold_s(&f0).unwrap().norm() < 1e-15);
        assert!((aronhold_t(&f0).unwrap() - 1.0).norm() < 1e-14);
        assert!((discriminant3(&f0).unwrap() - 1.0).norm() < 1e-12);
        assert!(j_invariant(&f0).unwrap().norm() < 1e-15);

        let f1 = hesse_cubic(c(1.0));
        assert!(aronhold_s(&f1).unwrap().norm() < 1e-12);
        assert!((aronhold_t(&f1).unwrap() + 27.0).norm() < 1e-11);
        assert!((discriminant3(&f1).unwrap() - 729.0).norm() < 1e-9);
        assert!(j_invariant(&f1).unwrap().norm() < 1e-12);

        let fh = hesse_cubic(c(-0.5));
        assert!((aronhold_s(&fh).unwrap() + 9.0 / 16.0).norm() < 1e-13);
        assert!((aronhold_t(&fh).unwrap() - 27.0 / 8.0).norm() < 1e-13);
        assert!(discriminant3(&fh).unwrap().norm() < 1e-10);
        assert!(matches!(j_invariant(&fh), Err(Error::SingularCubic { .. })));
    }

    #[test]
    fn normalization_on_random_hesse_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..50 {
            let m = Complex64::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
            let f = hesse_cubic(m);
            let s_exp = m - m.powu(4);
            let t_exp = 1.0 - m.powu(3) * 20.0 - m.powu(6) * 8.0;
            let s = aronhold_s(&f).unwrap();
            let t = aronhold_t(&f).unwrap();
            assert!((s - s_exp).norm() <= 1e-12 * s_exp.norm().max(1.0), "{s} vs {s_exp}");
            assert!((t - t_exp).norm() <= 1e-12 * t_exp.norm().max(1.0), "{t} vs {t_exp}");
        }
    }

    #[test]
    fn missing_variable_is_null() {
        let one = c(1.0);
        let f = CubicForm::from_terms(3, [(&[3u8, 0, 0][..], one), (&[0u8, 3, 0][..], one)]).unwrap();
        assert!(aronhold_s(&f).unwrap().norm() < 1e-15);
        assert!(aronhold_t(&f).unwrap().norm() < 1e-15);
    }

    #[test]
    fn wrong_arity() {
        let f = CubicForm::zero(4);
        assert!(matches!(aronhold_s(&f), Err(Error::WrongArity { expected: 3, got: 4 })));
        assert!(matches!(aronhold_t(&f), Err(Error::WrongArity { .. })));
        assert!(matches!(discriminant3(&f), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn gl_action_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = random_form(3, &mut rng);
        let id = act_gl(&CMatrix::identity(3, 3), &f).unwrap();
        for (a, b) in id.coeffs().iter().zip(f.coeffs()) {
            assert!((a - b).norm() < 1e-15);
        }
        let scalar = Complex64::new(1.3, -0.4);
        let scaled = act_gl(&CMatrix::from_diagonal_element(3, 3, scalar), &f).unwrap();
        let expected = f.scaled(scalar.powi(-3));
        for (a, b) in scaled.coeffs().iter().zip(expected.coeffs()) {
            assert!((a - b).norm() < 1e-14);
        }
        assert!(matches!(act_gl(&CMatrix::zeros(3, 3), &f), Err(Error::SingularMatrix { .. })));
    }

    #[test]
    fn relative_invariance_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10 {
            let f = random_form(3, &mut rng);
            let g = random_matrix(3, &mut rng);
            let det = g.determinant();
            let h = act_gl(&g, &f).unwrap();
            // f o g^{-1} picks up det(g)^{-w}
            let s_ratio = aronhold_s(&h).unwrap() * det.powi(4) / aronhold_s(&f).unwrap();
            let t_ratio = aronhold_t(&h).unwrap() * det.powi(6) / aronhold_t(&f).unwrap();
            let d_ratio = discriminant3(&h).unwrap() * det.powi(12) / discriminant3(&f).unwrap();
            assert!((s_ratio - 1.0).norm() < 1e-8, "{s_ratio}");
            assert!((t_ratio - 1.0).norm() < 1e-8, "{t_ratio}");
            assert!((d_ratio - 1.0).norm() < 1e-8, "{d_ratio}");
            if let (Ok(jf), Ok(jh)) = (j_invariant(&f), j_invariant(&h)) {
                assert!((jh - jf).norm() < 1e-8 * jf.norm().max(1.0));
            }
        }
    }

    #[test]
    fn cone_defect_examples() {
        let one = c(1.0);
        assert!(cone_defect(&hesse_cubic(c(0.0))) > 0.1);
        let missing = CubicForm::from_terms(3, [(&[3u8, 0, 0][..], one), (&[2u8, 1, 0][..], one)]).unwrap();
        assert!(cone_defect(&missing) < 1e-15);
        // (x + y + z)^3
        let mut cube = CubicForm::zero(3);
        for (idx, alpha) in monomials(3).iter().enumerate() {
            cube.coeffs[idx] = c(6.0 / alpha_factorial(alpha));
        }
        assert!(cone_defect(&cube) < 1e-14);
        assert!(aronhold_s(&cube).unwrap().norm() < 1e-8 * cube.bombieri_norm().powi(4));
    }

    #[test]
    fn bombieri_norm_is_unitary_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let f = random_form(3, &mut rng);
        let q = random_matrix(3, &mut rng).qr().q();
        let h = f.substitute(&q).unwrap();
        assert!((h.bombieri_norm() - f.bombieri_norm()).abs() < 1e-13 * f.bombieri_norm());
    }
}

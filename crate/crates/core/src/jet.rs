//! Linear and cubic Taylor terms of odd theta functions, and the restriction
//! of the cubic term to the hyperplane `ell = 0`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cubic::CubicForm;
use crate::error::{Error, Result};
use crate::siegel::{condition_number, CMatrix, CVector, SiegelPoint, ThetaCharacteristic};
use crate::theta::{theta_jet, ThetaSettings};

/// `|ell|_inf` below this multiple of the cubic scale counts as `ell = 0`.
pub const SING_TOL: f64 = 1e-10;

/// Random extensions are redrawn until the basis, with its first row scaled
/// to unit length, has condition number at most this.
pub const RANDOM_BASIS_MAX_CONDITION: f64 = 8.0;
const RANDOM_BASIS_ATTEMPTS: usize = 256;

/// Odd theta function near the origin: `theta = ell(z) + m(z) + O(z^5)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddJet {
    pub xi: ThetaCharacteristic,
    /// Coefficients of `ell(z) = sum ell_j z_j`.
    pub ell: CVector,
    /// The degree-3 Taylor term as a cubic form in `g` variables.
    pub cubic: CubicForm,
    /// Largest modulus among the value and second derivatives (zero for an
    /// exact odd function).
    pub residual_even: f64,
}

/// Linear and cubic Taylor terms of `theta[xi](., Omega)` at 0.
pub fn odd_jet(xi: &ThetaCharacteristic, omega: &SiegelPoint, s: &ThetaSettings) -> Result<OddJet> {
    if !xi.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    let raw = theta_jet(xi, omega, s)?;
    let g = omega.genus();
    // m(z) = (1/3!) sum T_ijk z_i z_j z_k
    let tensor: Vec<Complex64> = raw.third.iter().map(|t| t / 6.0).collect();
    let cubic = CubicForm::from_tensor(g, &tensor);
    let residual_even = raw.hessian.iter().map(|h| h.norm()).fold(raw.value.norm(), f64::max);
    let ell_norm = raw.gradient.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if ell_norm < SING_TOL * cubic.max_coeff() || ell_norm == 0.0 {
        return Err(Error::SingularOddTheta { ell_norm });
    }
    Ok(OddJet { xi: xi.clone(), ell: raw.gradient, cubic, residual_even })
}

/// How the rows `ell_2, ..., ell_g` of the covector basis are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Extension {
    /// Complete `ell/|ell|` to a unitary matrix, then put `ell` back in the
    /// first row. Singular values of the basis are `|ell|, 1, ..., 1`.
    #[default]
    Unitary,
    /// Seeded random complex rows, redrawn until well conditioned.
    Random(u64),
}

/// The cubic term read on the hyperplane `ell = 0` in a chosen basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedCubic {
    /// Rows `ell_1 = ell, ell_2, ..., ell_g`.
    pub basis_covectors: CMatrix,
    pub det_b: Complex64,
    /// Columns `v_1, ..., v_g` of the inverse basis; `v_2..v_g` span `ell = 0`.
    pub dual_basis: CMatrix,
    /// `M_B(x) = m(x_2 v_2 + ... + x_g v_g)`.
    pub m_bar: CubicForm,
}

impl RestrictedCubic {
    /// Exponent `p` making `det_b^p * phi(M_B)` independent of the basis,
    /// for an invariant of the given degree: `p = 3d/(g-1)`.
    pub fn p_exponent(&self, degree: u32) -> Result<i32> {
        p_exponent(self.basis_covectors.nrows(), degree)
    }
}

pub fn p_exponent(g: usize, degree: u32) -> Result<i32> {
    let n = g.checked_sub(1).filter(|&n| n > 0).ok_or(Error::GenusUnsupported { required: 2, got: g })?;
    let num = 3 * degree as usize;
    if num % n != 0 {
        return Err(Error::InvalidInput(format!("no relative invariant of degree {degree} for cubics in {n} variables")));
    }
    Ok((num / n) as i32)
}

fn hermitian_dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn unitary_rows(ell: &CVector) -> Vec<Vec<Complex64>> {
    let g = ell.len();
    let norm = ell.norm();
    let mut rows: Vec<Vec<Complex64>> = vec![ell.iter().map(|x| x / norm).collect()];
    let mut candidates: Vec<usize> = (0..g).collect();
    // prefer the coordinate directions least aligned with ell
    candidates.sort_by(|&i, &j| ell[i].norm().partial_cmp(&ell[j].norm()).unwrap().then(i.cmp(&j)));
    for k in candidates {
        if rows.len() == g {
            break;
        }
        let mut w: Vec<Complex64> = (0..g).map(|i| Complex64::new(f64::from(u8::from(i == k)), 0.0)).collect();
        for _ in 0..2 {
            for r in &rows {
                let proj = hermitian_dot(&w, r);
                for (wi, ri) in w.iter_mut().zip(r) {
                    *wi -= proj * ri;
                }
            }
        }
        let len = hermitian_dot(&w, &w).re.sqrt();
        if len > 0.3 {
            rows.push(w.iter().map(|x| x / len).collect());
        }
    }
    rows
}

fn assemble(ell: &CVector, rest: &[Vec<Complex64>]) -> CMatrix {
    let g = ell.len();
    let mut b = CMatrix::zeros(g, g);
    for j in 0..g {
        b[(0, j)] = ell[j];
    }
    for (r, row) in rest.iter().enumerate() {
        for j in 0..g {
            b[(r + 1, j)] = row[j];
        }
    }
    b
}

fn well_conditioned(b: &CMatrix) -> (bool, Complex64) {
    let det = b.determinant();
    let row_norms: f64 = b.row_iter().map(|r| r.norm()).product();
    (det.norm() > 1e-12 * row_norms, det)
}

/// Chooses a basis `{ell, ell_2, ..., ell_g}` of covectors and expresses the
/// cubic term on `ell = 0` in the dual vectors `v_2, ..., v_g`.
pub fn restrict_cubic(jet: &OddJet, extension: Extension) -> Result<RestrictedCubic> {
    let g = jet.ell.len();
    let ell_norm = jet.ell.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if ell_norm < SING_TOL * jet.cubic.max_coeff() || ell_norm == 0.0 {
        return Err(Error::SingularOddTheta { ell_norm });
    }
    let (basis, det_b) = match extension {
        Extension::Unitary => {
            let rows = unitary_rows(&jet.ell);
            let b = assemble(&jet.ell, &rows[1..]);
            let (ok, det) = well_conditioned(&b);
            if !ok {
                return Err(Error::SingularBasis { det_abs: det.norm() });
            }
            (b, det)
        }
        Extension::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            let mut last_det = 0.0;
            for _ in 0..RANDOM_BASIS_ATTEMPTS {
                let rest: Vec<Vec<Complex64>> = (1..g)
                    .map(|_| (0..g).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect())
                    .collect();
                let b = assemble(&jet.ell, &rest);
                let (ok, det) = well_conditioned(&b);
                last_det = det.norm();
                let mut normalized = b.clone();
                normalized.row_mut(0).unscale_mut(jet.ell.norm());
                if ok && condition_number(&normalized) <= RANDOM_BASIS_MAX_CONDITION {
                    found = Some((b, det));
                    break;
                }
            }
            found.ok_or(Error::SingularBasis { det_abs: last_det })?
        }
    };
    let dual = basis.clone().try_inverse().ok_or(Error::SingularBasis { det_abs: det_b.norm() })?;
    let hyperplane = dual.columns(1, g - 1).into_owned();
    let m_bar = jet.cubic.substitute(&hyperplane)?;
    Ok(RestrictedCubic { basis_covectors: basis, det_b, dual_basis: dual, m_bar })
}

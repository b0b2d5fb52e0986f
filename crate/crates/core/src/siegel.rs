//! Period matrices, theta characteristics and integer symplectic matrices.
//!
//! Everything here is a plain value type. Group actions return fresh values
//! and never mutate their inputs.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;
pub type IMatrix = DMatrix<i64>;

/// Maximum condition number of `C*Omega + D` accepted by the group actions.
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiegelTolerances {
    pub sym_tol: f64,
    pub pos_tol: f64,
}

impl Default for SiegelTolerances {
    fn default() -> Self {
        Self { sym_tol: 1e-12, pos_tol: 1e-10 }
    }
}

/// A validated point of the Siegel upper half space.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelPoint {
    omega: CMatrix,
    lambda_min: f64,
}

impl SiegelPoint {
    /// Validates with the default tolerances.
    pub fn new(raw: CMatrix) -> Result<Self> {
        validate_siegel(raw, SiegelTolerances::default())
    }

    /// Builds `re + i*im` from two real matrices and validates it.
    pub fn from_parts(re: &DMatrix<f64>, im: &DMatrix<f64>) -> Result<Self> {
        if re.shape() != im.shape() {
            return Err(Error::DimensionMismatch("real and imaginary parts differ in shape".into()));
        }
        let raw = CMatrix::from_fn(re.nrows(), re.ncols(), |i, j| Complex64::new(re[(i, j)], im[(i, j)]));
        Self::new(raw)
    }

    /// `i * I_g`.
    pub fn identity_imaginary(g: usize) -> Self {
        let omega = CMatrix::from_diagonal_element(g, g, Complex64::i());
        Self { omega, lambda_min: 1.0 }
    }

    pub fn genus(&self) -> usize {
        self.omega.nrows()
    }

    pub fn omega(&self) -> &CMatrix {
        &self.omega
    }

    /// Smallest eigenvalue of `Im(Omega)`.
    pub fn lambda_min(&self) -> f64 {
        self.lambda_min
    }

    pub fn real(&self) -> DMatrix<f64> {
        self.omega.map(|z| z.re)
    }

    pub fn imag(&self) -> DMatrix<f64> {
        self.omega.map(|z| z.im)
    }

    pub fn into_inner(self) -> CMatrix {
        self.omega
    }
}

fn max_asymmetry(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((m[(i, j)] - m[(j, i)]).norm());
        }
    }
    worst
}

pub(crate) fn smallest_eigenvalue(sym: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(sym.clone()).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Checks symmetry and positivity, symmetrizing small asymmetries away.
pub fn validate_siegel(raw: CMatrix, tol: SiegelTolerances) -> Result<SiegelPoint> {
    let g = raw.nrows();
    if g == 0 || raw.ncols() != g {
        return Err(Error::DimensionMismatch(format!(
            "period matrix must be square with g >= 1, got {}x{}",
            raw.nrows(),
            raw.ncols()
        )));
    }
    if raw.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidInput("period matrix has non-finite entries".into()));
    }
    let asymmetry = max_asymmetry(&raw);
    if asymmetry > tol.sym_tol {
        return Err(Error::NotSymmetric { asymmetry, tol: tol.sym_tol });
    }
    let omega = (&raw + raw.transpose()).map(|z| z * 0.5);
    let lambda_min = smallest_eigenvalue(&omega.map(|z| z.im));
    if lambda_min <= tol.pos_tol {
        return Err(Error::NotPositive { lambda_min });
    }
    Ok(SiegelPoint { omega, lambda_min })
}

/// Block-diagonal period matrix of genus `g1 + g2`.
pub fn block_diag(first: &SiegelPoint, second: &SiegelPoint) -> SiegelPoint {
    let (g1, g2) = (first.genus(), second.genus());
    let mut omega = CMatrix::zeros(g1 + g2, g1 + g2);
    omega.view_mut((0, 0), (g1, g1)).copy_from(first.omega());
    omega.view_mut((g1, g1), (g2, g2)).copy_from(second.omega());
    SiegelPoint { omega, lambda_min: first.lambda_min.min(second.lambda_min) }
}

/// Condition number (2-norm) of a complex square matrix.
pub fn condition_number(m: &CMatrix) -> f64 {
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

// ---------------------------------------------------------------------------
// Theta characteristics

/// Half-integer characteristic `[a; b]` stored as bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaCharacteristic {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    Odd,
    Even,
    All,
}

impl ThetaCharacteristic {
    pub fn new(a: Vec<u8>, b: Vec<u8>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::InvalidInput("characteristic halves must be nonempty and of equal length".into()));
        }
        if a.iter().chain(b.iter()).any(|&bit| bit > 1) {
            return Err(Error::InvalidInput("characteristic entries must be 0 or 1".into()));
        }
        Ok(Self { a, b })
    }

    pub fn genus(&self) -> usize {
        self.a.len()
    }

    /// `a^T b mod 2`.
    pub fn parity(&self) -> u8 {
        (self.a.iter().zip(&self.b).map(|(x, y)| (x & y) as u32).sum::<u32>() % 2) as u8
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    /// Splits into the characteristics of the first `g1` and remaining coordinates.
    pub fn split(&self, g1: usize) -> (ThetaCharacteristic, ThetaCharacteristic) {
        (
            ThetaCharacteristic { a: self.a[..g1].to_vec(), b: self.b[..g1].to_vec() },
            ThetaCharacteristic { a: self.a[g1..].to_vec(), b: self.b[g1..].to_vec() },
        )
    }
}

/// All characteristics of genus `g` in lexicographic order of `(a, b)`,
/// filtered by parity.
pub fn enumerate_characteristics(g: usize, parity: ParityFilter) -> Vec<ThetaCharacteristic> {
    assert!(g >= 1 && g <= 16, "genus out of range for enumeration");
    let bits = |word: usize| -> Vec<u8> { (0..g).map(|k| ((word >> (g - 1 - k)) & 1) as u8).collect() };
    let mut out = Vec::new();
    for ai in 0..(1usize << g) {
        for bi in 0..(1usize << g) {
            let xi = ThetaCharacteristic { a: bits(ai), b: bits(bi) };
            let keep = match parity {
                ParityFilter::All => true,
                ParityFilter::Odd => xi.is_odd(),
                ParityFilter::Even => !xi.is_odd(),
            };
            if keep {
                out.push(xi);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Integer symplectic matrices

/// Checks `M^T J M = J` exactly.
pub fn is_symplectic(m: &IMatrix) -> bool {
    let n = m.nrows();
    if n == 0 || n % 2 != 0 || m.ncols() != n {
        return false;
    }
    let j = standard_form(n / 2);
    let lhs = m.map(i128::from).transpose() * j.map(i128::from) * m.map(i128::from);
    lhs == j.map(i128::from)
}

fn standard_form(g: usize) -> IMatrix {
    let mut j = IMatrix::zeros(2 * g, 2 * g);
    for k in 0..g {
        j[(k, g + k)] = 1;
        j[(g + k, k)] = -1;
    }
    j
}

/// An element of `Sp(2g, Z)` with `g x g` blocks `[[A, B], [C, D]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticInt {
    m: IMatrix,
}

impl SymplecticInt {
    pub fn new(m: IMatrix) -> Result<Self> {
        if is_symplectic(&m) {
            Ok(Self { m })
        } else {
            Err(Error::InvalidInput("matrix is not integer symplectic".into()))
        }
    }

    pub fn from_blocks(a: &IMatrix, b: &IMatrix, c: &IMatrix, d: &IMatrix) -> Result<Self> {
        let g = a.nrows();
        for blk in [a, b, c, d] {
            if blk.shape() != (g, g) {
                return Err(Error::DimensionMismatch("symplectic blocks must all be g x g".into()));
            }
        }
        let mut m = IMatrix::zeros(2 * g, 2 * g);
        m.view_mut((0, 0), (g, g)).copy_from(a);
        m.view_mut((0, g), (g, g)).copy_from(b);
        m.view_mut((g, 0), (g, g)).copy_from(c);
        m.view_mut((g, g), (g, g)).copy_from(d);
        Self::new(m)
    }

    pub fn identity(g: usize) -> Self {
        Self { m: IMatrix::identity(2 * g, 2 * g) }
    }

    /// `[[0, I], [-I, 0]]`.
    pub fn inversion(g: usize) -> Self {
        Self { m: standard_form(g) }
    }

    /// `[[I, B], [0, I]]`; requires `B` symmetric.
    pub fn translation(b: &IMatrix) -> Result<Self> {
        let g = b.nrows();
        Self::from_blocks(&IMatrix::identity(g, g), b, &IMatrix::zeros(g, g), &IMatrix::identity(g, g))
    }

    /// `[[I, 0], [C, I]]`; requires `C` symmetric.
    pub fn lower(c: &IMatrix) -> Result<Self> {
        let g = c.nrows();
        Self::from_blocks(&IMatrix::identity(g, g), &IMatrix::zeros(g, g), c, &IMatrix::identity(g, g))
    }

    /// `[[U, 0], [0, U^{-T}]]` given `U` and its integer inverse.
    pub fn change_of_basis(u: &IMatrix, u_inv: &IMatrix) -> Result<Self> {
        let g = u.nrows();
        Self::from_blocks(u, &IMatrix::zeros(g, g), &IMatrix::zeros(g, g), &u_inv.transpose())
    }

    pub fn genus(&self) -> usize {
        self.m.nrows() / 2
    }

    pub fn matrix(&self) -> &IMatrix {
        &self.m
    }

    fn block(&self, r: usize, c: usize) -> IMatrix {
        let g = self.genus();
        self.m.view((r * g, c * g), (g, g)).into_owned()
    }

    pub fn a(&self) -> IMatrix {
        self.block(0, 0)
    }
    pub fn b(&self) -> IMatrix {
        self.block(0, 1)
    }
    pub fn c(&self) -> IMatrix {
        self.block(1, 0)
    }
    pub fn d(&self) -> IMatrix {
        self.block(1, 1)
    }

    /// Matrix product `self * other`, acting as `other` first.
    pub fn compose(&self, other: &SymplecticInt) -> SymplecticInt {
        SymplecticInt { m: &self.m * &other.m }
    }

    /// `C*Omega + D`.
    pub fn automorphy(&self, omega: &SiegelPoint) -> CMatrix {
        to_complex(&self.c()) * omega.omega() + to_complex(&self.d())
    }
}

pub(crate) fn to_complex(m: &IMatrix) -> CMatrix {
    m.map(|x| Complex64::new(x as f64, 0.0))
}

/// Membership in Igusa's group: `gamma = I mod 4` and the diagonals of
/// `A B^T` and `C D^T` vanish mod 8.
pub fn in_gamma_4_8(gamma: &SymplecticInt) -> bool {
    let n = gamma.m.nrows();
    let congruent = (0..n).all(|i| {
        (0..n).all(|j| {
            let target = i64::from(i == j);
            (gamma.m[(i, j)] - target).rem_euclid(4) == 0
        })
    });
    if !congruent {
        return false;
    }
    let ab = gamma.a() * gamma.b().transpose();
    let cd = gamma.c() * gamma.d().transpose();
    (0..gamma.genus()).all(|k| ab[(k, k)].rem_euclid(8) == 0 && cd[(k, k)].rem_euclid(8) == 0)
}

/// Membership in the principal congruence subgroup of level 2.
pub fn in_gamma_2(gamma: &SymplecticInt) -> bool {
    let n = gamma.m.nrows();
    (0..n).all(|i| (0..n).all(|j| (gamma.m[(i, j)] - i64::from(i == j)).rem_euclid(2) == 0))
}

fn affine_image(gamma: &SymplecticInt, omega: &SiegelPoint) -> Result<(CMatrix, CMatrix)> {
    if gamma.genus() != omega.genus() {
        return Err(Error::DimensionMismatch(format!(
            "symplectic genus {} vs period matrix genus {}",
            gamma.genus(),
            omega.genus()
        )));
    }
    let cd = gamma.automorphy(omega);
    let condition = condition_number(&cd);
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { condition });
    }
    let inv = cd.clone().try_inverse().ok_or(Error::IllConditioned { condition })?;
    let image = (to_complex(&gamma.a()) * omega.omega() + to_complex(&gamma.b())) * &inv;
    Ok((image, inv))
}

fn revalidate(image: CMatrix) -> Result<SiegelPoint> {
    let scale = image.iter().map(|z| z.norm()).fold(1.0, f64::max);
    validate_siegel(image, SiegelTolerances { sym_tol: 1e-9 * scale, pos_tol: 1e-300 })
}

/// `gamma . Omega = (A Omega + B)(C Omega + D)^{-1}`.
pub fn sp_action_omega(gamma: &SymplecticInt, omega: &SiegelPoint) -> Result<SiegelPoint> {
    let (image, _) = affine_image(gamma, omega)?;
    revalidate(image)
}

/// `gamma . (z, Omega) = ((C Omega + D)^{-T} z, gamma . Omega)`.
pub fn sp_action_z(gamma: &SymplecticInt, z: &CVector, omega: &SiegelPoint) -> Result<(CVector, SiegelPoint)> {
    if z.len() != omega.genus() {
        return Err(Error::DimensionMismatch("z length differs from genus".into()));
    }
    let (image, inv) = affine_image(gamma, omega)?;
    let z_hat = inv.transpose() * z;
    Ok((z_hat, revalidate(image)?))
}

// ---------------------------------------------------------------------------
// Generators of the level (4,8) group

/// Generators of a subgroup of `Gamma(4,8)`: translations and lower
/// translations by `4S` with `S` an elementary symmetric matrix of even
/// diagonal, the block changes of basis `I + 4E_ij`, and their inverses.
pub fn gamma_4_8_generators(g: usize) -> Vec<SymplecticInt> {
    let mut gens = Vec::new();
    for i in 0..g {
        for j in i..g {
            let mut s = IMatrix::zeros(g, g);
            if i == j {
                s[(i, i)] = 8;
            } else {
                s[(i, j)] = 4;
                s[(j, i)] = 4;
            }
            for sign in [1, -1] {
                let sm = &s * sign;
                gens.push(SymplecticInt::translation(&sm).expect("symmetric translation"));
                gens.push(SymplecticInt::lower(&sm).expect("symmetric lower translation"));
            }
        }
    }
    for i in 0..g {
        for j in 0..g {
            if i == j {
                continue;
            }
            for sign in [4, -4] {
                let mut u = IMatrix::identity(g, g);
                u[(i, j)] = sign;
                let mut u_inv = IMatrix::identity(g, g);
                u_inv[(i, j)] = -sign;
                gens.push(SymplecticInt::change_of_basis(&u, &u_inv).expect("unimodular block"));
            }
        }
    }
    gens
}

/// Random word of exactly `len` generators of [`gamma_4_8_generators`].
pub fn random_gamma_4_8_word<R: Rng + ?Sized>(g: usize, len: usize, rng: &mut R) -> SymplecticInt {
    let gens = gamma_4_8_generators(g);
    (0..len).fold(SymplecticInt::identity(g), |acc, _| acc.compose(&gens[rng.random_range(0..gens.len())]))
}

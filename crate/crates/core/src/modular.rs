//! Modular-form values `h_xi(phi)(Omega) = det(B)^p phi(M_B)` built from the
//! restricted cubic term of an odd theta function, sweeps over all odd
//! characteristics, and automorphy checks.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cubic::{discriminant3, scale_free, CubicForm, Invariant, SINGULAR_DELTA_TOL};
use crate::error::{Error, Result};
use crate::jet::{odd_jet, p_exponent, restrict_cubic, Extension, RestrictedCubic};
use crate::siegel::{
    enumerate_characteristics, in_gamma_2, in_gamma_4_8, sp_action_omega, ParityFilter, SiegelPoint, SymplecticInt,
    ThetaCharacteristic,
};
use crate::theta::ThetaSettings;

/// Genus at which the restricted cubic is ternary.
pub const TERNARY_GENUS: usize = 4;

/// Lower bound for `max_xi scale_free(S)` at a generic point of `H_4`.
/// One hundredth of the median over `random_siegel_seeded(4, seed, 1.0)`,
/// seeds 0..100 (median 4.27e-3, minimum 3.2e-4).
pub const GENERIC_S_FLOOR: f64 = 4.3e-5;

/// A restricted cubic whose norm is below this fraction of the full cubic
/// term's norm is treated as identically zero (scale-free value 0).
pub const ZERO_CUBIC_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ModularSettings {
    pub theta: ThetaSettings,
    /// Basis extension used for `raw`; `scale_free` always uses the unitary one.
    pub extension: Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// `ell = 0`: the point lies outside the domain of the recipe; `raw` is 0.
    SingularOddTheta,
    /// The restricted cubic has scale-free discriminant below `SINGULAR_DELTA_TOL`.
    CubicDegenerate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModularValue {
    pub xi: ThetaCharacteristic,
    pub invariant: Invariant,
    /// `det_b^p * phi`.
    pub raw: Complex64,
    /// `|phi(M_B)| / |M_B|_B^deg` in the unitary extension.
    pub scale_free: f64,
    /// `m d` with `m = (g + 8) / (2 (g - 1))`.
    pub weight: f64,
    pub flags: Vec<Flag>,
    pub det_b: Complex64,
    /// Uncorrected invariant of `M_B` in the chosen extension.
    pub phi: Complex64,
    pub p: i32,
}

impl ModularValue {
    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

/// `m d` for an invariant of degree `d` of cubics in `g - 1` variables.
pub fn modular_weight(g: usize, degree: u32) -> f64 {
    (g as f64 + 8.0) / (2.0 * (g as f64 - 1.0)) * f64::from(degree)
}

fn check_ternary(omega: &SiegelPoint, xi: &ThetaCharacteristic) -> Result<()> {
    if omega.genus() != TERNARY_GENUS {
        return Err(Error::GenusUnsupported { required: TERNARY_GENUS, got: omega.genus() });
    }
    if xi.genus() != TERNARY_GENUS {
        return Err(Error::DimensionMismatch(format!("characteristic of genus {} for a genus-4 point", xi.genus())));
    }
    Ok(())
}

fn corrected(r: &RestrictedCubic, invariant: Invariant, p: i32) -> Result<(Complex64, Complex64)> {
    let phi = invariant.evaluate(&r.m_bar)?;
    Ok((r.det_b.powi(p) * phi, phi))
}

fn cubic_degenerate(m_bar: &CubicForm) -> Result<bool> {
    let delta = discriminant3(m_bar)?;
    Ok(scale_free(delta, m_bar, 12) < SINGULAR_DELTA_TOL)
}

/// `h_xi(phi)(Omega)` for an odd `xi` at a genus-4 point.
pub fn evaluate_h(
    xi: &ThetaCharacteristic,
    omega: &SiegelPoint,
    invariant: Invariant,
    settings: &ModularSettings,
) -> Result<ModularValue> {
    check_ternary(omega, xi)?;
    let g = omega.genus();
    let p = p_exponent(g, invariant.degree())?;
    let weight = modular_weight(g, invariant.degree());
    let singular = |flags| ModularValue {
        xi: xi.clone(),
        invariant,
        raw: Complex64::new(0.0, 0.0),
        scale_free: 0.0,
        weight,
        flags,
        det_b: Complex64::new(0.0, 0.0),
        phi: Complex64::new(0.0, 0.0),
        p,
    };
    let jet = match odd_jet(xi, omega, &settings.theta) {
        Ok(jet) => jet,
        Err(Error::SingularOddTheta { .. }) => return Ok(singular(vec![Flag::SingularOddTheta])),
        Err(e) => return Err(e),
    };
    let unitary = restrict_cubic(&jet, Extension::Unitary)?;
    let (raw_u, phi_u) = corrected(&unitary, invariant, p)?;
    let vanishing = unitary.m_bar.bombieri_norm() <= ZERO_CUBIC_TOL * jet.cubic.bombieri_norm();
    let sf = if vanishing { 0.0 } else { scale_free(phi_u, &unitary.m_bar, invariant.degree()) };
    let mut flags = Vec::new();
    if vanishing || cubic_degenerate(&unitary.m_bar)? {
        flags.push(Flag::CubicDegenerate);
    }
    let (raw, phi, det_b) = match settings.extension {
        Extension::Unitary => (raw_u, phi_u, unitary.det_b),
        ext => {
            let r = restrict_cubic(&jet, ext)?;
            let (raw, phi) = corrected(&r, invariant, p)?;
            (raw, phi, r.det_b)
        }
    };
    Ok(ModularValue { xi: xi.clone(), invariant, raw, scale_free: sf, weight, flags, det_b, phi, p })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    /// Position in `enumerate_characteristics(4, Odd)`.
    pub xi_index: usize,
    pub value: ModularValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub count: usize,
    pub max_scale_free: f64,
    pub min_scale_free: f64,
    pub argmax_xi_index: usize,
    pub singular_odd_theta: usize,
    pub cubic_degenerate: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub invariant: Invariant,
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
}

fn summarize(entries: &[SweepEntry]) -> SweepSummary {
    let mut s = SweepSummary {
        count: entries.len(),
        max_scale_free: 0.0,
        min_scale_free: f64::INFINITY,
        argmax_xi_index: 0,
        singular_odd_theta: 0,
        cubic_degenerate: 0,
    };
    for e in entries {
        let v = e.value.scale_free;
        if v > s.max_scale_free {
            s.max_scale_free = v;
            s.argmax_xi_index = e.xi_index;
        }
        s.min_scale_free = s.min_scale_free.min(v);
        s.singular_odd_theta += usize::from(e.value.has_flag(Flag::SingularOddTheta));
        s.cubic_degenerate += usize::from(e.value.has_flag(Flag::CubicDegenerate));
    }
    if entries.is_empty() {
        s.min_scale_free = 0.0;
    }
    s
}

/// Evaluates `h_xi(phi)` for all 120 odd characteristics. Entries are in
/// characteristic order whatever the thread count; `parallelism = Some(1)`
/// runs serially, `None` uses the global pool.
pub fn sweep_odd(
    omega: &SiegelPoint,
    invariant: Invariant,
    settings: &ModularSettings,
    parallelism: Option<usize>,
) -> Result<Sweep> {
    if omega.genus() != TERNARY_GENUS {
        return Err(Error::GenusUnsupported { required: TERNARY_GENUS, got: omega.genus() });
    }
    let odd = enumerate_characteristics(TERNARY_GENUS, ParityFilter::Odd);
    let run = || -> Vec<Result<ModularValue>> {
        odd.par_iter().map(|xi| evaluate_h(xi, omega, invariant, settings)).collect()
    };
    let results = match parallelism {
        Some(0) => return Err(Error::InvalidInput("parallelism must be at least 1".into())),
        Some(1) => odd.iter().map(|xi| evaluate_h(xi, omega, invariant, settings)).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let entries = results
        .into_iter()
        .enumerate()
        .map(|(xi_index, r)| r.map(|value| SweepEntry { xi_index, value }))
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&entries);
    Ok(Sweep { invariant, entries, summary })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightReport {
    /// `h(gamma Omega)`.
    pub lhs: Complex64,
    /// `det(C Omega + D)^k h(Omega)`.
    pub rhs: Complex64,
    pub det: Complex64,
    pub weight: f64,
    /// `|lhs - rhs| / max(|lhs|, |rhs|)`, 0 when both vanish.
    pub relative_error: f64,
    /// False unless `gamma` lies in `Gamma(4,8)`; other probes carry no
    /// guarantee.
    pub strict: bool,
}

/// Compares `h_xi(gamma Omega)` with `det(C Omega + D)^k h_xi'(Omega)`.
/// `xi_image` defaults to `xi`, which is only meaningful on `Gamma(2)`.
pub fn weight_check(
    omega: &SiegelPoint,
    gamma: &SymplecticInt,
    xi: &ThetaCharacteristic,
    xi_image: Option<&ThetaCharacteristic>,
    invariant: Invariant,
    settings: &ModularSettings,
) -> Result<WeightReport> {
    check_ternary(omega, xi)?;
    if gamma.genus() != omega.genus() {
        return Err(Error::DimensionMismatch(format!("gamma of genus {} for a genus-{} point", gamma.genus(), omega.genus())));
    }
    let xi_prime = match xi_image {
        Some(x) => x,
        None if in_gamma_2(gamma) => xi,
        None => return Err(Error::CharacteristicMoved),
    };
    let weight = modular_weight(omega.genus(), invariant.degree());
    let k = weight.round() as i32;
    if (weight - f64::from(k)).abs() > 1e-12 {
        return Err(Error::InvalidInput(format!("non-integral weight {weight}")));
    }
    let image = sp_action_omega(gamma, omega)?;
    let det = gamma.automorphy(omega).determinant();
    let lhs = evaluate_h(xi, &image, invariant, settings)?.raw;
    let rhs = det.powi(k) * evaluate_h(xi_prime, omega, invariant, settings)?.raw;
    let scale = lhs.norm().max(rhs.norm());
    let relative_error = if scale == 0.0 { 0.0 } else { (lhs - rhs).norm() / scale };
    Ok(WeightReport { lhs, rhs, det, weight, relative_error, strict: in_gamma_4_8(gamma) })
}

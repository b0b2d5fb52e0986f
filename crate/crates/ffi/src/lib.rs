//! C ABI for the `schottky` crate.
//!
//! Period matrices and cubic forms live behind opaque handles created by
//! `*_new` functions and released with the matching `*_free`. Every fallible
//! function returns a [`SchottkyStatus`]; on failure a message for the
//! calling thread is available from [`schottky_last_error`]. Matrices are
//! passed as separate row-major real and imaginary `double` arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use schottky::builders::{hyperelliptic_periods, random_siegel_seeded, HyperellipticCurve, QuadratureSettings};
use schottky::cubic::{dimension, hesse_cubic, j_invariant, CubicForm, Invariant};
use schottky::modular::{evaluate_h, sweep_odd, Flag, ModularSettings, ModularValue};
use schottky::siegel::{enumerate_characteristics, CMatrix, CVector, ParityFilter, SiegelPoint, ThetaCharacteristic};
use schottky::theta::{theta, ThetaSettings};
use schottky::Error;

/// Result codes. Values are stable.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchottkyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotSymmetric = 3,
    NotPositive = 4,
    IllConditioned = 5,
    RadiusCapExceeded = 6,
    DegenerateSample = 7,
    EvenCharacteristic = 8,
    SingularOddTheta = 9,
    SingularBasis = 10,
    WrongArity = 11,
    SingularCubic = 12,
    SingularMatrix = 13,
    GenusUnsupported = 14,
    CharacteristicMoved = 15,
    QuadratureDivergence = 16,
    NearDegenerateGaps = 17,
    SymplecticBasisNotFound = 18,
    DimensionMismatch = 19,
    BufferTooSmall = 20,
    Panic = 99,
}

impl From<&Error> for SchottkyStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotSymmetric { .. } => SchottkyStatus::NotSymmetric,
            Error::NotPositive { .. } => SchottkyStatus::NotPositive,
            Error::IllConditioned { .. } => SchottkyStatus::IllConditioned,
            Error::RadiusCapExceeded { .. } => SchottkyStatus::RadiusCapExceeded,
            Error::DegenerateSample => SchottkyStatus::DegenerateSample,
            Error::EvenCharacteristic => SchottkyStatus::EvenCharacteristic,
            Error::SingularOddTheta { .. } => SchottkyStatus::SingularOddTheta,
            Error::SingularBasis { .. } => SchottkyStatus::SingularBasis,
            Error::WrongArity { .. } => SchottkyStatus::WrongArity,
            Error::SingularCubic { .. } => SchottkyStatus::SingularCubic,
            Error::SingularMatrix { .. } => SchottkyStatus::SingularMatrix,
            Error::GenusUnsupported { .. } => SchottkyStatus::GenusUnsupported,
            Error::CharacteristicMoved => SchottkyStatus::CharacteristicMoved,
            Error::QuadratureDivergence { .. } => SchottkyStatus::QuadratureDivergence,
            Error::NearDegenerateGaps { .. } => SchottkyStatus::NearDegenerateGaps,
            Error::SymplecticBasisNotFound { .. } => SchottkyStatus::SymplecticBasisNotFound,
            Error::DimensionMismatch(_) => SchottkyStatus::DimensionMismatch,
            Error::InvalidInput(_) => SchottkyStatus::InvalidArgument,
        }
    }
}

pub const SCHOTTKY_INVARIANT_S: u32 = 0;
pub const SCHOTTKY_INVARIANT_T: u32 = 1;
pub const SCHOTTKY_INVARIANT_DELTA: u32 = 2;

/// Bits of `SchottkyModularValue::flags`.
pub const SCHOTTKY_FLAG_SINGULAR_ODD_THETA: u32 = 1;
pub const SCHOTTKY_FLAG_CUBIC_DEGENERATE: u32 = 2;

/// Number of odd characteristics in genus 4.
pub const SCHOTTKY_ODD_COUNT: usize = 120;

/// Opaque point of the Siegel upper half space.
pub struct SchottkyPeriodMatrix(SiegelPoint);

/// Opaque cubic form.
pub struct SchottkyCubic(CubicForm);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SchottkyModularValue {
    pub raw_re: f64,
    pub raw_im: f64,
    pub scale_free: f64,
    pub weight: f64,
    pub flags: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SchottkyInvariants {
    pub s_re: f64,
    pub s_im: f64,
    pub t_re: f64,
    pub t_im: f64,
    pub delta_re: f64,
    pub delta_im: f64,
    pub j_re: f64,
    pub j_im: f64,
    /// 0 when the cubic is singular and `j` is undefined.
    pub j_defined: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Fail {
    Status(SchottkyStatus, String),
    Domain(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Domain(e)
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(SchottkyStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail::Status(SchottkyStatus::InvalidArgument, msg.into())
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> SchottkyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SchottkyStatus::Ok
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_last_error(&msg);
            s
        }
        Ok(Err(Fail::Domain(e))) => {
            set_last_error(&e.to_string());
            SchottkyStatus::from(&e)
        }
        Err(_) => {
            set_last_error("internal panic");
            SchottkyStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or valid for reads of `len` values.
unsafe fn slice<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `ptr` must be null or valid for writes of `len` values.
unsafe fn slice_mut<'a, T>(ptr: *mut T, len: usize, what: &str) -> Result<&'a mut [T], Fail> {
    if len == 0 {
        return Ok(&mut []);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts_mut(ptr, len))
}

/// # Safety
/// `out` must be null or valid for one write.
unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn invariant_from(code: u32) -> Result<Invariant, Fail> {
    match code {
        SCHOTTKY_INVARIANT_S => Ok(Invariant::S),
        SCHOTTKY_INVARIANT_T => Ok(Invariant::T),
        SCHOTTKY_INVARIANT_DELTA => Ok(Invariant::Delta),
        other => Err(invalid(format!("unknown invariant code {other}"))),
    }
}

fn modular_value(v: &ModularValue) -> SchottkyModularValue {
    let mut flags = 0;
    if v.has_flag(Flag::SingularOddTheta) {
        flags |= SCHOTTKY_FLAG_SINGULAR_ODD_THETA;
    }
    if v.has_flag(Flag::CubicDegenerate) {
        flags |= SCHOTTKY_FLAG_CUBIC_DEGENERATE;
    }
    SchottkyModularValue { raw_re: v.raw.re, raw_im: v.raw.im, scale_free: v.scale_free, weight: v.weight, flags }
}

/// Moves `value` to the heap; the caller owns the returned pointer.
fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn schottky_status_name(status: SchottkyStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SchottkyStatus::Ok => c"ok",
        SchottkyStatus::NullPointer => c"null pointer",
        SchottkyStatus::InvalidArgument => c"invalid argument",
        SchottkyStatus::NotSymmetric => c"matrix not symmetric",
        SchottkyStatus::NotPositive => c"imaginary part not positive definite",
        SchottkyStatus::IllConditioned => c"ill-conditioned transformation",
        SchottkyStatus::RadiusCapExceeded => c"theta truncation radius cap exceeded",
        SchottkyStatus::DegenerateSample => c"degenerate sample",
        SchottkyStatus::EvenCharacteristic => c"even characteristic",
        SchottkyStatus::SingularOddTheta => c"singular odd theta function",
        SchottkyStatus::SingularBasis => c"singular basis",
        SchottkyStatus::WrongArity => c"wrong number of variables",
        SchottkyStatus::SingularCubic => c"singular cubic",
        SchottkyStatus::SingularMatrix => c"singular matrix",
        SchottkyStatus::GenusUnsupported => c"genus unsupported",
        SchottkyStatus::CharacteristicMoved => c"characteristic moved",
        SchottkyStatus::QuadratureDivergence => c"quadrature divergence",
        SchottkyStatus::NearDegenerateGaps => c"branch points too close",
        SchottkyStatus::SymplecticBasisNotFound => c"symplectic basis not found",
        SchottkyStatus::DimensionMismatch => c"dimension mismatch",
        SchottkyStatus::BufferTooSmall => c"buffer too small",
        SchottkyStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Copies the calling thread's last error message into `buf` (NUL
/// terminated, truncated to `len - 1` bytes) and returns the full message
/// length excluding the terminator.
///
/// # Safety
/// `buf` must be null or valid for writes of `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn schottky_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Validates a `g x g` matrix given as row-major real and imaginary parts.
///
/// # Safety
/// `re` and `im` must be valid for `g * g` reads; `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_new(
    g: usize,
    re: *const f64,
    im: *const f64,
    out: *mut *mut SchottkyPeriodMatrix,
) -> SchottkyStatus {
    guard(|| {
        if g == 0 {
            return Err(invalid("genus must be positive"));
        }
        let n = g.checked_mul(g).ok_or_else(|| invalid("genus too large"))?;
        let re = slice(re, n, "re")?;
        let im = slice(im, n, "im")?;
        let m = CMatrix::from_fn(g, g, |i, j| Complex64::new(re[i * g + j], im[i * g + j]));
        let point = SiegelPoint::new(m)?;
        put(out, boxed(SchottkyPeriodMatrix(point)), "out")
    })
}

/// Seeded random point `X + i(Y Y^T + I)`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_random(
    g: usize,
    seed: u64,
    spread: f64,
    out: *mut *mut SchottkyPeriodMatrix,
) -> SchottkyStatus {
    guard(|| {
        if g == 0 || g > 16 || !(spread >= 0.0 && spread.is_finite()) {
            return Err(invalid("need 1 <= g <= 16 and finite spread >= 0"));
        }
        put(out, boxed(SchottkyPeriodMatrix(random_siegel_seeded(g, seed, spread))), "out")
    })
}

/// Period matrix of `y^2 = prod (x - e_i)` for sorted real branch points.
///
/// # Safety
/// `branch_points` must be valid for `count` reads; `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_hyperelliptic(
    branch_points: *const f64,
    count: usize,
    out: *mut *mut SchottkyPeriodMatrix,
) -> SchottkyStatus {
    guard(|| {
        let pts = slice(branch_points, count, "branch_points")?;
        let curve = HyperellipticCurve::new(pts.to_vec())?;
        let p = hyperelliptic_periods(&curve, &QuadratureSettings::default())?;
        put(out, boxed(SchottkyPeriodMatrix(p.omega)), "out")
    })
}

/// Genus of the handle, or 0 for null.
///
/// # Safety
/// `pm` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_genus(pm: *const SchottkyPeriodMatrix) -> usize {
    pm.as_ref().map_or(0, |p| p.0.genus())
}

/// Copies the matrix into row-major `re` and `im` arrays of `g * g` entries.
///
/// # Safety
/// `pm` must be a live handle; `re` and `im` valid for `g * g` writes.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_get(
    pm: *const SchottkyPeriodMatrix,
    re: *mut f64,
    im: *mut f64,
) -> SchottkyStatus {
    guard(|| {
        let p = &pm.as_ref().ok_or_else(|| null("pm"))?.0;
        let g = p.genus();
        let re = slice_mut(re, g * g, "re")?;
        let im = slice_mut(im, g * g, "im")?;
        for i in 0..g {
            for j in 0..g {
                re[i * g + j] = p.omega()[(i, j)].re;
                im[i * g + j] = p.omega()[(i, j)].im;
            }
        }
        Ok(())
    })
}

/// # Safety
/// `pm` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schottky_period_matrix_free(pm: *mut SchottkyPeriodMatrix) {
    if !pm.is_null() {
        drop(Box::from_raw(pm));
    }
}

/// `theta[a; b](z, Omega)`. `a` and `b` hold `g` bits each; `z_re`, `z_im`
/// may both be null for `z = 0`. `eps <= 0` selects the default accuracy.
///
/// # Safety
/// Array arguments must be valid for `g` reads, outputs for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_theta(
    pm: *const SchottkyPeriodMatrix,
    a: *const u8,
    b: *const u8,
    z_re: *const f64,
    z_im: *const f64,
    eps: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> SchottkyStatus {
    guard(|| {
        let p = &pm.as_ref().ok_or_else(|| null("pm"))?.0;
        let g = p.genus();
        let xi = ThetaCharacteristic::new(slice(a, g, "a")?.to_vec(), slice(b, g, "b")?.to_vec())?;
        let z = if z_re.is_null() && z_im.is_null() {
            CVector::zeros(g)
        } else {
            let (zr, zi) = (slice(z_re, g, "z_re")?, slice(z_im, g, "z_im")?);
            CVector::from_iterator(g, zr.iter().zip(zi).map(|(&r, &i)| Complex64::new(r, i)))
        };
        let s = if eps > 0.0 { ThetaSettings::new(eps, ThetaSettings::default().max_radius)? } else { ThetaSettings::default() };
        let v = theta(&xi, &z, &p, &s)?;
        put(out_re, v.re, "out_re")?;
        put(out_im, v.im, "out_im")
    })
}

/// Writes the `a` and `b` bits of the odd genus-4 characteristic with the
/// given index (0..120) into 4-byte arrays.
///
/// # Safety
/// `a` and `b` must be valid for 4 writes.
#[no_mangle]
pub unsafe extern "C" fn schottky_odd_characteristic(index: usize, a: *mut u8, b: *mut u8) -> SchottkyStatus {
    guard(|| {
        let odd = enumerate_characteristics(4, ParityFilter::Odd);
        let xi = odd.get(index).ok_or_else(|| invalid(format!("index {index} out of range 0..120")))?;
        slice_mut(a, 4, "a")?.copy_from_slice(&xi.a);
        slice_mut(b, 4, "b")?.copy_from_slice(&xi.b);
        Ok(())
    })
}

/// `h_xi(phi)(Omega)` at a genus-4 point for the odd characteristic with
/// index `xi_index`.
///
/// # Safety
/// `pm` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_evaluate(
    pm: *const SchottkyPeriodMatrix,
    xi_index: usize,
    invariant: u32,
    out: *mut SchottkyModularValue,
) -> SchottkyStatus {
    guard(|| {
        let p = &pm.as_ref().ok_or_else(|| null("pm"))?.0;
        let inv = invariant_from(invariant)?;
        let odd = enumerate_characteristics(4, ParityFilter::Odd);
        let xi = odd.get(xi_index).ok_or_else(|| invalid(format!("xi_index {xi_index} out of range 0..120")))?;
        let v = evaluate_h(xi, p, inv, &ModularSettings::default())?;
        put(out, modular_value(&v), "out")
    })
}

/// All 120 odd characteristics in index order. `parallelism = 0` uses all
/// cores.
///
/// # Safety
/// `pm` must be a live handle; `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn schottky_sweep(
    pm: *const SchottkyPeriodMatrix,
    invariant: u32,
    parallelism: usize,
    out: *mut SchottkyModularValue,
    len: usize,
) -> SchottkyStatus {
    guard(|| {
        let p = &pm.as_ref().ok_or_else(|| null("pm"))?.0;
        let inv = invariant_from(invariant)?;
        if len < SCHOTTKY_ODD_COUNT {
            return Err(Fail::Status(SchottkyStatus::BufferTooSmall, format!("need {SCHOTTKY_ODD_COUNT} slots, got {len}")));
        }
        let out = slice_mut(out, SCHOTTKY_ODD_COUNT, "out")?;
        let threads = (parallelism > 0).then_some(parallelism);
        let sweep = sweep_odd(p, inv, &ModularSettings::default(), threads)?;
        for (slot, e) in out.iter_mut().zip(&sweep.entries) {
            *slot = modular_value(&e.value);
        }
        Ok(())
    })
}

/// Cubic in `n` variables from coefficients in descending lexicographic
/// monomial order (`x0^3, x0^2 x1, ...`); `len` must equal the number of
/// monomials.
///
/// # Safety
/// `re` and `im` must be valid for `len` reads; `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_cubic_new(
    n: usize,
    re: *const f64,
    im: *const f64,
    len: usize,
    out: *mut *mut SchottkyCubic,
) -> SchottkyStatus {
    guard(|| {
        if n == 0 || n > 64 {
            return Err(invalid("need 1 <= n <= 64"));
        }
        if len != dimension(n) {
            return Err(invalid(format!("a cubic in {n} variables has {} coefficients, got {len}", dimension(n))));
        }
        let (re, im) = (slice(re, len, "re")?, slice(im, len, "im")?);
        let f = CubicForm::from_coeffs(n, re.iter().zip(im).map(|(&r, &i)| Complex64::new(r, i)).collect())?;
        put(out, boxed(SchottkyCubic(f)), "out")
    })
}

/// Member `x^3 + y^3 + z^3 + 6 m x y z` of the Hesse pencil.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_cubic_hesse(m_re: f64, m_im: f64, out: *mut *mut SchottkyCubic) -> SchottkyStatus {
    guard(|| put(out, boxed(SchottkyCubic(hesse_cubic(Complex64::new(m_re, m_im)))), "out"))
}

/// S, T, the discriminant and `j` of a ternary cubic.
///
/// # Safety
/// `cubic` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn schottky_cubic_invariants(cubic: *const SchottkyCubic, out: *mut SchottkyInvariants) -> SchottkyStatus {
    guard(|| {
        let f = &cubic.as_ref().ok_or_else(|| null("cubic"))?.0;
        let s = Invariant::S.evaluate(f)?;
        let t = Invariant::T.evaluate(f)?;
        let d = Invariant::Delta.evaluate(f)?;
        let (j, j_defined) = match j_invariant(f) {
            Ok(j) => (j, 1),
            Err(Error::SingularCubic { .. }) => (Complex64::new(0.0, 0.0), 0),
            Err(e) => return Err(e.into()),
        };
        put(
            out,
            SchottkyInvariants {
                s_re: s.re,
                s_im: s.im,
                t_re: t.re,
                t_im: t.im,
                delta_re: d.re,
                delta_im: d.im,
                j_re: j.re,
                j_im: j.im,
                j_defined,
            },
            "out",
        )
    })
}

/// # Safety
/// `cubic` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schottky_cubic_free(cubic: *mut SchottkyCubic) {
    if !cubic.is_null() {
        drop(Box::from_raw(cubic));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn last_error() -> String {
        let mut buf = [0 as c_char; 256];
        unsafe { schottky_last_error(buf.as_mut_ptr(), buf.len()) };
        unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn period_matrix_round_trip() {
        let re = [0.1, 0.2, 0.2, -0.3];
        let im = [1.0, 0.1, 0.1, 1.2];
        let mut pm = ptr::null_mut();
        assert_eq!(unsafe { schottky_period_matrix_new(2, re.as_ptr(), im.as_ptr(), &mut pm) }, SchottkyStatus::Ok);
        assert_eq!(unsafe { schottky_period_matrix_genus(pm) }, 2);
        let (mut r2, mut i2) = ([0.0; 4], [0.0; 4]);
        assert_eq!(unsafe { schottky_period_matrix_get(pm, r2.as_mut_ptr(), i2.as_mut_ptr()) }, SchottkyStatus::Ok);
        assert_eq!(r2, re);
        assert_eq!(i2, im);
        unsafe { schottky_period_matrix_free(pm) };
    }

    #[test]
    fn domain_errors_map_to_codes() {
        let re = [0.0, 1.0, 0.0, 0.0];
        let im = [1.0, 0.0, 0.0, 1.0];
        let mut pm = ptr::null_mut();
        let st = unsafe { schottky_period_matrix_new(2, re.as_ptr(), im.as_ptr(), &mut pm) };
        assert_eq!(st, SchottkyStatus::NotSymmetric);
        assert!(pm.is_null());
        assert!(last_error().contains("not symmetric"));
        let st = unsafe { schottky_period_matrix_new(2, ptr::null(), im.as_ptr(), &mut pm) };
        assert_eq!(st, SchottkyStatus::NullPointer);
    }

    #[test]
    fn theta_and_evaluate() {
        let mut pm = ptr::null_mut();
        assert_eq!(unsafe { schottky_period_matrix_random(4, 3, 1.0, &mut pm) }, SchottkyStatus::Ok);
        let (mut a, mut b) = ([0u8; 4], [0u8; 4]);
        assert_eq!(unsafe { schottky_odd_characteristic(7, a.as_mut_ptr(), b.as_mut_ptr()) }, SchottkyStatus::Ok);
        let (mut vr, mut vi) = (1.0, 1.0);
        let st = unsafe { schottky_theta(pm, a.as_ptr(), b.as_ptr(), ptr::null(), ptr::null(), 0.0, &mut vr, &mut vi) };
        assert_eq!(st, SchottkyStatus::Ok);
        assert!(vr.abs() < 1e-13 && vi.abs() < 1e-13);

        let mut v = SchottkyModularValue::default();
        assert_eq!(unsafe { schottky_evaluate(pm, 7, SCHOTTKY_INVARIANT_S, &mut v) }, SchottkyStatus::Ok);
        assert_eq!(v.weight, 8.0);
        assert_eq!(unsafe { schottky_evaluate(pm, 7, 9, &mut v) }, SchottkyStatus::InvalidArgument);
        assert_eq!(unsafe { schottky_evaluate(pm, 120, 0, &mut v) }, SchottkyStatus::InvalidArgument);

        let mut all = vec![SchottkyModularValue::default(); SCHOTTKY_ODD_COUNT];
        let st = unsafe { schottky_sweep(pm, SCHOTTKY_INVARIANT_S, 2, all.as_mut_ptr(), all.len()) };
        assert_eq!(st, SchottkyStatus::Ok);
        assert_eq!(all[7], v);
        let st = unsafe { schottky_sweep(pm, SCHOTTKY_INVARIANT_S, 2, all.as_mut_ptr(), 10) };
        assert_eq!(st, SchottkyStatus::BufferTooSmall);
        unsafe { schottky_period_matrix_free(pm) };
    }

    #[test]
    fn genus_three_is_rejected() {
        let mut pm = ptr::null_mut();
        assert_eq!(unsafe { schottky_period_matrix_random(3, 1, 1.0, &mut pm) }, SchottkyStatus::Ok);
        let mut v = SchottkyModularValue::default();
        assert_eq!(unsafe { schottky_evaluate(pm, 0, 0, &mut v) }, SchottkyStatus::GenusUnsupported);
        unsafe { schottky_period_matrix_free(pm) };
    }

    #[test]
    fn hyperelliptic_sweep_vanishes() {
        let pts: Vec<f64> = (0..10).map(f64::from).collect();
        let mut pm = ptr::null_mut();
        assert_eq!(unsafe { schottky_period_matrix_hyperelliptic(pts.as_ptr(), pts.len(), &mut pm) }, SchottkyStatus::Ok);
        let mut all = vec![SchottkyModularValue::default(); SCHOTTKY_ODD_COUNT];
        assert_eq!(unsafe { schottky_sweep(pm, 0, 0, all.as_mut_ptr(), all.len()) }, SchottkyStatus::Ok);
        assert!(all.iter().all(|v| v.scale_free < 1e-6));
        unsafe { schottky_period_matrix_free(pm) };
    }

    #[test]
    fn cubic_invariants() {
        let mut f = ptr::null_mut();
        assert_eq!(unsafe { schottky_cubic_hesse(0.0, 0.0, &mut f) }, SchottkyStatus::Ok);
        let mut inv = SchottkyInvariants::default();
        assert_eq!(unsafe { schottky_cubic_invariants(f, &mut inv) }, SchottkyStatus::Ok);
        assert!(inv.s_re.abs() < 1e-12 && (inv.t_re - 1.0).abs() < 1e-12 && (inv.delta_re - 1.0).abs() < 1e-12);
        assert_eq!(inv.j_defined, 1);
        unsafe { schottky_cubic_free(f) };

        // x^3 is a cone: delta = 0, j undefined
        let mut re = vec![0.0; 10];
        re[0] = 1.0;
        let im = vec![0.0; 10];
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { schottky_cubic_new(3, re.as_ptr(), im.as_ptr(), 10, &mut g) }, SchottkyStatus::Ok);
        assert_eq!(unsafe { schottky_cubic_invariants(g, &mut inv) }, SchottkyStatus::Ok);
        assert_eq!(inv.j_defined, 0);
        unsafe { schottky_cubic_free(g) };

        let mut h = ptr::null_mut();
        assert_eq!(unsafe { schottky_cubic_new(3, re.as_ptr(), im.as_ptr(), 9, &mut h) }, SchottkyStatus::InvalidArgument);
    }

    #[test]
    fn status_names_are_static() {
        let name = unsafe { CStr::from_ptr(schottky_status_name(SchottkyStatus::SingularCubic)) };
        assert_eq!(name.to_str().unwrap(), "singular cubic");
    }
}

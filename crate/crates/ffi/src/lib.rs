//! C ABI over `padyn`. Maps are opaque handles; every call returns a
//! [`PadynStatus`] and writes results through out-pointers. Strings handed
//! out by the library must be released with [`padyn_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use padyn::map::Map31;
use padyn::padic::literal::parse_rational;
use padyn::padic::NormExp;
use padyn::report::{cmd_classify, cmd_ergodicity, RunConfig};
use padyn::Error;

/// Opaque handle to a canonical map `f(x) = (x^3 + a x^2 + b x)/(a x + b)`.
pub struct PadynMap {
    inner: Map31,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadynStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotPrime = 4,
    DegenerateMap = 5,
    SingularPoint = 6,
    NotInvariantRadius = 7,
    WrongCase = 8,
    Unsupported = 9,
    Panic = 10,
}

fn status_of(e: &Error) -> PadynStatus {
    match e {
        Error::Parse(_) => PadynStatus::Parse,
        Error::NotPrime(_) => PadynStatus::NotPrime,
        Error::ZeroB | Error::DegenerateAB => PadynStatus::DegenerateMap,
        Error::SingularPoint | Error::DivisionByZero => PadynStatus::SingularPoint,
        Error::NotInvariantRadius | Error::NonIntegralRadius => PadynStatus::NotInvariantRadius,
        Error::WrongCase | Error::WrongPrimeOrCase | Error::CriticalRadius => PadynStatus::WrongCase,
        _ => PadynStatus::Unsupported,
    }
}

fn guard(f: impl FnOnce() -> Result<(), PadynStatus>) -> PadynStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PadynStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => PadynStatus::Panic,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PadynStatus> {
    if s.is_null() {
        return Err(PadynStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| PadynStatus::InvalidUtf8)
}

unsafe fn handle<'a>(m: *const PadynMap) -> Result<&'a Map31, PadynStatus> {
    m.as_ref().map(|h| &h.inner).ok_or(PadynStatus::NullArgument)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), PadynStatus> {
    if out.is_null() {
        return Err(PadynStatus::NullArgument);
    }
    // reports never contain interior NULs
    *out = CString::new(s).map_err(|_| PadynStatus::Unsupported)?.into_raw();
    Ok(())
}

fn lift<T>(r: padyn::Result<T>) -> Result<T, PadynStatus> {
    r.map_err(|e| status_of(&e))
}

fn config(m: &Map31) -> RunConfig {
    RunConfig {
        p: Some(m.prime().get()),
        a: Some(m.a().literal()),
        b: Some(m.b().literal()),
        ..RunConfig::default()
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn padyn_status_message(status: PadynStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        PadynStatus::Ok => b"ok\0",
        PadynStatus::NullArgument => b"null argument\0",
        PadynStatus::InvalidUtf8 => b"string is not valid UTF-8\0",
        PadynStatus::Parse => b"cannot parse rational literal\0",
        PadynStatus::NotPrime => b"modulus is not prime\0",
        PadynStatus::DegenerateMap => b"coefficients satisfy a*b = 0\0",
        PadynStatus::SingularPoint => b"point is the pole of the map\0",
        PadynStatus::NotInvariantRadius => b"radius is not an invariant radius\0",
        PadynStatus::WrongCase => b"operation does not apply to this map\0",
        PadynStatus::Unsupported => b"operation failed\0",
        PadynStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}

/// Build the map over `Q_p` from rational literals such as `"-9/10"`.
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_new(p: u64, a: *const c_char, b: *const c_char, out: *mut *mut PadynMap) -> PadynStatus {
    guard(|| {
        if out.is_null() {
            return Err(PadynStatus::NullArgument);
        }
        let inner = lift(Map31::parse(p, read_str(a)?, read_str(b)?))?;
        *out = Box::into_raw(Box::new(PadynMap { inner }));
        Ok(())
    })
}

/// # Safety
/// `m` must come from [`padyn_map_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_free(m: *mut PadynMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Exact `f(x)` as a rational literal.
///
/// # Safety
/// `m` must be a live handle, `x` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_eval(m: *const PadynMap, x: *const c_char, out: *mut *mut c_char) -> PadynStatus {
    guard(|| {
        let m = handle(m)?;
        let x = m.point(lift(parse_rational(read_str(x)?))?);
        write_string(out, lift(m.eval(&x))?.literal())
    })
}

/// Root norms `alpha = p^(an/ad)` and `beta = p^(bn/bd)` of `x^2 + a x + b`.
///
/// # Safety
/// `m` must be a live handle and all four out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_root_norms(
    m: *const PadynMap,
    alpha_num: *mut i64,
    alpha_den: *mut i64,
    beta_num: *mut i64,
    beta_den: *mut i64,
) -> PadynStatus {
    guard(|| {
        let m = handle(m)?;
        if alpha_num.is_null() || alpha_den.is_null() || beta_num.is_null() || beta_den.is_null() {
            return Err(PadynStatus::NullArgument);
        }
        let a = m.alpha().exp().ok_or(PadynStatus::DegenerateMap)?;
        let b = m.beta().exp().ok_or(PadynStatus::DegenerateMap)?;
        *alpha_num = *a.numer();
        *alpha_den = *a.denom();
        *beta_num = *b.numer();
        *beta_den = *b.denom();
        Ok(())
    })
}

/// JSON classification report (case, root norms, sphere table, warnings).
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_classify_json(m: *const PadynMap, out: *mut *mut c_char) -> PadynStatus {
    guard(|| {
        let m = handle(m)?;
        let report = lift(cmd_classify(&config(m)))?.report;
        write_string(out, report.to_json())
    })
}

/// JSON ergodicity verdict on the sphere of radius `p^r_exp`.
///
/// # Safety
/// `m` must be a live handle, `r_exp` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn padyn_map_ergodicity_json(
    m: *const PadynMap,
    r_exp: *const c_char,
    out: *mut *mut c_char,
) -> PadynStatus {
    guard(|| {
        let m = handle(m)?;
        let r = read_str(r_exp)?;
        lift(NormExp::parse_exp(r))?;
        let cfg = RunConfig { r_exp: vec![r.to_string()], ..config(m) };
        let report = lift(cmd_ergodicity(&cfg))?.report;
        write_string(out, report.to_json())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn padyn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

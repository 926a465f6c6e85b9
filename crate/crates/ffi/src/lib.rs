//! C ABI over the commuting-ci engine.
//!
//! Every entry point returns a [`CciStatus`]. Results come back through
//! out-pointers as opaque handles or as NUL-terminated UTF-8 strings owned
//! by the library: release handles with their `_free` function and strings
//! with [`cci_string_free`]. After a non-`Ok` status, [`cci_last_error`]
//! describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use commuting_ci::cidecide::{decide_ci_spec, u6_witness_spec, CIReport, Verdict, WitnessReport};
use commuting_ci::field::{FieldSpec, PrimeField, Rationals};
use commuting_ci::groebner::Limits;
use commuting_ci::groupmat::{commutator_word, GroupKind};
use commuting_ci::koszul::KoszulComplex;
use commuting_ci::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CciStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A resource limit stopped the computation; no verdict was reached.
    Incomplete = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CciVerdict {
    Ci = 0,
    NotCi = 1,
    Incomplete = 2,
    Inconclusive = 3,
}

impl From<Verdict> for CciVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Ci => CciVerdict::Ci,
            Verdict::NotCi => CciVerdict::NotCi,
            Verdict::Incomplete => CciVerdict::Incomplete,
            Verdict::Inconclusive => CciVerdict::Inconclusive,
        }
    }
}

/// Opaque complete-intersection report.
pub struct CciReport {
    inner: CIReport,
}

/// Opaque witness report.
pub struct CciWitness {
    inner: WitnessReport,
}

/// Resource limits; a zero field selects the library default.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CciLimits {
    pub degree_cap: u32,
    pub timeout_seconds: u64,
}

impl CciLimits {
    fn to_limits(self) -> Limits {
        let d = Limits::default();
        Limits {
            degree_cap: if self.degree_cap == 0 { d.degree_cap } else { self.degree_cap },
            timeout: if self.timeout_seconds == 0 { d.timeout } else { Duration::from_secs(self.timeout_seconds) },
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CciStatus {
    match e {
        Error::Incomplete(_) => CciStatus::Incomplete,
        Error::Parse(_) | Error::Config(_) | Error::Shape(_) | Error::NotPositivelyWeighted(_) => CciStatus::InvalidArgument,
        _ => CciStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (CciStatus, String)>) -> CciStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CciStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CciStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (CciStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CciStatus, String)> {
    if p.is_null() {
        return Err((CciStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (CciStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn read_group(p: *const c_char) -> Result<GroupKind, (CciStatus, String)> {
    read_str(p, "group")?.parse().map_err(lib_err)
}

unsafe fn read_field(p: *const c_char) -> Result<FieldSpec, (CciStatus, String)> {
    read_str(p, "field")?.parse().map_err(lib_err)
}

fn check_out<T>(out: *mut T) -> Result<(), (CciStatus, String)> {
    if out.is_null() {
        Err((CciStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> Result<*mut c_char, (CciStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| (CciStatus::Internal, "string contains NUL".into()))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<*mut c_char, (CciStatus, String)> {
    let s = serde_json::to_string(v).map_err(|e| (CciStatus::Internal, e.to_string()))?;
    to_c_string(s)
}

/// Message describing the last failure on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cci_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cci_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Decides whether the genus-`genus` commuting variety of `group` (`"un"`
/// or `"bn"`) is a complete intersection over `field` (`"q"` or `"gf:p"`).
/// A run stopped by `limits` still returns `Ok` with verdict `Incomplete`.
///
/// # Safety
/// `group` and `field` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cci_decide(
    group: *const c_char,
    n: usize,
    genus: usize,
    field: *const c_char,
    order_seed: u64,
    limits: CciLimits,
    out: *mut *mut CciReport,
) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let kind = read_group(group)?;
        let spec = read_field(field)?;
        let inner = decide_ci_spec(spec, kind, n, genus, order_seed, &limits.to_limits()).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CciReport { inner }));
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`cci_decide`] and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_report_verdict(report: *const CciReport, out: *mut CciVerdict) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let r = report.as_ref().ok_or((CciStatus::NullPointer, "report is null".to_string()))?;
        *out = r.inner.verdict.into();
        Ok(())
    })
}

/// Codimension of the generator ideal. Fails with `Incomplete` when the
/// report carries none.
///
/// # Safety
/// `report` must come from [`cci_decide`] and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_report_codim(report: *const CciReport, out: *mut usize) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let r = report.as_ref().ok_or((CciStatus::NullPointer, "report is null".to_string()))?;
        *out = r.inner.codim.ok_or((CciStatus::Incomplete, "no codimension in this report".to_string()))?;
        Ok(())
    })
}

/// JSON rendering of the report; free with [`cci_string_free`].
///
/// # Safety
/// `report` must come from [`cci_decide`] and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_report_json(report: *const CciReport, out: *mut *mut c_char) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let r = report.as_ref().ok_or((CciStatus::NullPointer, "report is null".to_string()))?;
        *out = to_json(&r.inner)?;
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`cci_decide`] or be NULL, and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn cci_report_free(report: *mut CciReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Runs the membership witness for `U_n`, `n ≥ 6`.
///
/// # Safety
/// `field` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_witness(
    field: *const c_char,
    n: usize,
    order_seed: u64,
    limits: CciLimits,
    out: *mut *mut CciWitness,
) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let spec = read_field(field)?;
        let inner = u6_witness_spec(spec, n, order_seed, &limits.to_limits()).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CciWitness { inner }));
        Ok(())
    })
}

/// # Safety
/// `witness` must come from [`cci_witness`] and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_witness_verdict(witness: *const CciWitness, out: *mut CciVerdict) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let w = witness.as_ref().ok_or((CciStatus::NullPointer, "witness is null".to_string()))?;
        *out = w.inner.conclusion.into();
        Ok(())
    })
}

/// # Safety
/// `witness` must come from [`cci_witness`] and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cci_witness_json(witness: *const CciWitness, out: *mut *mut c_char) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let w = witness.as_ref().ok_or((CciStatus::NullPointer, "witness is null".to_string()))?;
        *out = to_json(&w.inner)?;
        Ok(())
    })
}

/// # Safety
/// `witness` must come from [`cci_witness`] or be NULL, and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn cci_witness_free(witness: *mut CciWitness) {
    if !witness.is_null() {
        drop(Box::from_raw(witness));
    }
}

/// JSON slice report `{i, w, chain_dims, h_dim, status}` for `H_i` at
/// weight `w` of the Koszul complex of a unipotent commutator word.
///
/// # Safety
/// `group` and `field` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cci_koszul_slice(
    group: *const c_char,
    n: usize,
    genus: usize,
    field: *const c_char,
    i: usize,
    w: u32,
    slice_cap: usize,
    out: *mut *mut c_char,
) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let kind = read_group(group)?;
        let rep = match read_field(field)? {
            FieldSpec::Rationals => {
                let sys = commutator_word(Rationals, kind, n, genus).map_err(lib_err)?;
                KoszulComplex::from_system(&sys).map_err(lib_err)?.homology_slice(i, w, slice_cap)
            }
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p).map_err(lib_err)?;
                let sys = commutator_word(f, kind, n, genus).map_err(lib_err)?;
                KoszulComplex::from_system(&sys).map_err(lib_err)?.homology_slice(i, w, slice_cap)
            }
        };
        *out = to_json(&rep)?;
        Ok(())
    })
}

/// Generator listing, one `f[i][j]: poly` line each.
///
/// # Safety
/// `group` and `field` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cci_dump_generators(
    group: *const c_char,
    n: usize,
    genus: usize,
    field: *const c_char,
    out: *mut *mut c_char,
) -> CciStatus {
    guard(|| {
        check_out(out)?;
        let kind = read_group(group)?;
        let lines = match read_field(field)? {
            FieldSpec::Rationals => commutator_word(Rationals, kind, n, genus).map_err(lib_err)?.dump_lines(),
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p).map_err(lib_err)?;
                commutator_word(f, kind, n, genus).map_err(lib_err)?.dump_lines()
            }
        };
        *out = to_c_string(lines.join("\n"))?;
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be NULL, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

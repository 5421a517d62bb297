//! C ABI for the bottforge engine.
//!
//! Root systems are exposed as an opaque `BfRootSystem` handle. Every fallible
//! call returns a `BfStatus`; on failure a message is available from
//! `bf_last_error_message` on the same thread. Strings returned through
//! out-parameters are owned by the caller and must be released with
//! `bf_string_free`. Simple-root indices are 1-based, as on the command line.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bottforge::report::{bott_report, demazure_report};
use bottforge::{
    euler_identity_check, line_bundle_cohomology, weyl_dimension, BottOutcome, CartanType, Error,
    RootSystem, Series, Weight,
};

/// Opaque root system handle.
pub struct BfRootSystem(RootSystem);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnsupportedType = 3,
    /// The computation finished but its Euler-characteristic check failed.
    CheckFailed = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: BfStatus, msg: impl Into<String>) -> BfStatus {
    set_error(msg);
    status
}

impl From<Error> for BfStatus {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnsupportedType { .. } | Error::BadCartanType(_) => BfStatus::UnsupportedType,
            _ => BfStatus::InvalidArgument,
        };
        fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<BfStatus, BfStatus>) -> BfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => fail(BfStatus::Panic, "internal panic"),
    }
}

unsafe fn handle<'a>(rs: *const BfRootSystem) -> Result<&'a RootSystem, BfStatus> {
    rs.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(BfStatus::NullPointer, "null root system handle"))
}

unsafe fn read_weight(rs: &RootSystem, coords: *const i64, len: usize) -> Result<Weight, BfStatus> {
    if coords.is_null() && len > 0 {
        return Err(fail(BfStatus::NullPointer, "null weight pointer"));
    }
    let v = if len == 0 {
        vec![]
    } else {
        std::slice::from_raw_parts(coords, len).to_vec()
    };
    Ok(rs.weight(v)?)
}

fn simple_index(rs: &RootSystem, alpha: u32) -> Result<usize, BfStatus> {
    let a = alpha as usize;
    if a == 0 || a > rs.rank() {
        return Err(fail(
            BfStatus::InvalidArgument,
            format!("alpha {alpha} out of range 1..={}", rs.rank()),
        ));
    }
    Ok(a - 1)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), BfStatus> {
    if out.is_null() {
        return Err(fail(BfStatus::NullPointer, "null output pointer"));
    }
    let c = CString::new(s).map_err(|_| fail(BfStatus::Panic, "interior NUL in output"))?;
    *out = c.into_raw();
    Ok(())
}

/// Builds the root system of type `series` (one of `ABCDEFG`) and `rank`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bf_root_system_new(
    series: c_char,
    rank: u32,
    out: *mut *mut BfRootSystem,
) -> BfStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(BfStatus::NullPointer, "null output pointer"));
        }
        let letter = series as u8 as char;
        let series = Series::from_letter(letter).ok_or_else(|| {
            fail(
                BfStatus::UnsupportedType,
                format!("unknown Cartan series {letter:?}"),
            )
        })?;
        let cartan = CartanType::new(series, rank as usize)?;
        *out = Box::into_raw(Box::new(BfRootSystem(RootSystem::new(cartan))));
        Ok(BfStatus::Ok)
    })
}

/// # Safety
/// `rs` must be null or a handle from `bf_root_system_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bf_root_system_free(rs: *mut BfRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bf_root_system_rank(rs: *const BfRootSystem) -> u32 {
    rs.as_ref().map_or(0, |h| h.0.rank() as u32)
}

/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bf_root_system_num_positive_roots(rs: *const BfRootSystem) -> u32 {
    rs.as_ref().map_or(0, |h| h.0.num_positive_roots() as u32)
}

/// Line-bundle cohomology of `lambda` (fundamental-weight coordinates).
///
/// On success `*degree_out` is the unique nonzero degree, or -1 when the
/// cohomology vanishes; in the former case `highest_weight_out[0..rank]`
/// receives the highest weight.
///
/// # Safety
/// `lambda` must point to `len` integers; `highest_weight_out` to `rank`
/// writable integers; `degree_out` to one writable integer.
#[no_mangle]
pub unsafe extern "C" fn bf_bott(
    rs: *const BfRootSystem,
    lambda: *const i64,
    len: usize,
    degree_out: *mut i32,
    highest_weight_out: *mut i64,
) -> BfStatus {
    guard(|| {
        let rs = handle(rs)?;
        let lam = read_weight(rs, lambda, len)?;
        if degree_out.is_null() || highest_weight_out.is_null() {
            return Err(fail(BfStatus::NullPointer, "null output pointer"));
        }
        match line_bundle_cohomology(rs, &lam) {
            BottOutcome::ZeroAllDegrees => *degree_out = -1,
            BottOutcome::Concentrated {
                degree,
                highest_weight,
                ..
            } => {
                *degree_out = degree as i32;
                let dst = std::slice::from_raw_parts_mut(highest_weight_out, rs.rank());
                dst.copy_from_slice(highest_weight.coords());
            }
        }
        Ok(BfStatus::Ok)
    })
}

/// Dimension of `V(mu)` as a decimal string.
///
/// # Safety
/// `mu` must point to `len` integers; `out` to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_weyl_dimension(
    rs: *const BfRootSystem,
    mu: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> BfStatus {
    guard(|| {
        let rs = handle(rs)?;
        let mu = read_weight(rs, mu, len)?;
        let dim = weyl_dimension(rs, &mu)?;
        write_string(out, dim.to_string())?;
        Ok(BfStatus::Ok)
    })
}

/// JSON document (schema 1) for `H^*(M_{alpha,r}(lambda))`, identical to the
/// command-line `demazure --format json` output in compact form.
///
/// Returns `BF_STATUS_CHECK_FAILED` with the document still written if the
/// Euler-characteristic check fails.
///
/// # Safety
/// `lambda` must point to `len` integers; `out` to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_demazure_json(
    rs: *const BfRootSystem,
    alpha: u32,
    r: u32,
    lambda: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> BfStatus {
    guard(|| {
        let rs = handle(rs)?;
        let lam = read_weight(rs, lambda, len)?;
        let alpha = simple_index(rs, alpha)?;
        let doc = demazure_report(rs, alpha, r, &lam)?;
        let passed = doc.passed();
        write_string(out, serde_json::to_string(&doc).expect("serializable"))?;
        if passed {
            Ok(BfStatus::Ok)
        } else {
            Err(fail(
                BfStatus::CheckFailed,
                "Euler characteristic check failed",
            ))
        }
    })
}

/// JSON document (schema 1) for the line-bundle cohomology of `lambda`.
///
/// # Safety
/// `lambda` must point to `len` integers; `out` to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bf_bott_json(
    rs: *const BfRootSystem,
    lambda: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> BfStatus {
    guard(|| {
        let rs = handle(rs)?;
        let lam = read_weight(rs, lambda, len)?;
        let doc = bott_report(rs, &lam)?;
        write_string(out, serde_json::to_string(&doc).expect("serializable"))?;
        Ok(BfStatus::Ok)
    })
}

/// Runs the Euler-characteristic identity for one query.
///
/// # Safety
/// `lambda` must point to `len` integers; `passed_out` to one writable bool.
#[no_mangle]
pub unsafe extern "C" fn bf_euler_check(
    rs: *const BfRootSystem,
    alpha: u32,
    r: u32,
    lambda: *const i64,
    len: usize,
    passed_out: *mut bool,
) -> BfStatus {
    guard(|| {
        let rs = handle(rs)?;
        let lam = read_weight(rs, lambda, len)?;
        let alpha = simple_index(rs, alpha)?;
        if passed_out.is_null() {
            return Err(fail(BfStatus::NullPointer, "null output pointer"));
        }
        let rep = euler_identity_check(rs, alpha, r, &lam)?;
        *passed_out = rep.passed();
        Ok(BfStatus::Ok)
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn bf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

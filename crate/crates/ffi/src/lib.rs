//! C ABI over `qf-core`.
//!
//! Objects are opaque handles created by `qf_*` constructors and released
//! with the matching `qf_*_free`. Every fallible call returns a
//! [`QfStatus`]; on failure, [`qf_last_error_message`] describes the error
//! for the calling thread. Strings returned through out-parameters are
//! owned by the caller and must be released with [`qf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qf_core::adconj::adconj_abelianization;
use qf_core::coset::CosetQuandle;
use qf_core::diagram::wirtinger_quandle;
use qf_core::invariants::{count_colorings, crosscheck_diagram};
use qf_core::limits::DEFAULT_BUDGET;
use qf_core::quandle::validate_quandle;
use qf_core::{Diagram, Error, FiniteGroup, FiniteQuandle};

/// Status codes. The values from 1 to 6 match the exit codes of `qf`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QfStatus {
    Ok = 0,
    /// The input parsed but is not a valid quandle or group.
    Invalid = 1,
    /// Malformed JSON, Gauss code or table, or a string that is not UTF-8.
    Parse = 2,
    /// An argument is out of range or a precondition does not hold.
    Precondition = 3,
    /// A search budget or size cap was exceeded.
    Limit = 4,
    /// A cross-check found disagreeing counts.
    Mismatch = 5,
    /// An enumeration order cap was exceeded.
    OrderCap = 6,
    NullPointer = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

pub struct QfQuandle(FiniteQuandle);

pub struct QfGroup(FiniteGroup);

pub struct QfDiagram(Diagram);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

struct Failure(QfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            1 => QfStatus::Invalid,
            2 => QfStatus::Parse,
            4 => QfStatus::Limit,
            6 => QfStatus::OrderCap,
            _ => QfStatus::Precondition,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: QfStatus, message: impl Into<String>) -> Failure {
    Failure(status, message.into())
}

/// Runs `f`, recording its error and turning panics into [`QfStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QfStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {message}"));
            QfStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(QfStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(QfStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| fail(QfStatus::Parse, format!("{what} is not UTF-8: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(QfStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(QfStatus::NullPointer, "output pointer is null"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|_| fail(QfStatus::Precondition, "output contains NUL"))?;
    write_out(out, s.into_raw())
}

fn budget_or_default(budget: u64) -> u64 {
    if budget == 0 {
        DEFAULT_BUDGET
    } else {
        budget
    }
}

/// Message for the last failed call on this thread, or null after a
/// successful one. The pointer stays valid until the next `qf_*` call on
/// the same thread.
#[no_mangle]
pub extern "C" fn qf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"order": n, "table": [[...]]}` and validates it.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_from_json(json: *const c_char, out: *mut *mut QfQuandle) -> QfStatus {
    guard(|| {
        let q = qf_core::io::quandle_from_json(read_str(json, "json")?)?;
        write_handle(out, QfQuandle(q))
    })
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_trivial(n: usize, out: *mut *mut QfQuandle) -> QfStatus {
    guard(|| {
        if n == 0 {
            return Err(fail(QfStatus::Precondition, "quandle order must be positive"));
        }
        write_handle(out, QfQuandle(FiniteQuandle::trivial(n)))
    })
}

/// The dihedral quandle `a^b = 2b - a mod n`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_dihedral(n: usize, out: *mut *mut QfQuandle) -> QfStatus {
    guard(|| {
        if n == 0 {
            return Err(fail(QfStatus::Precondition, "quandle order must be positive"));
        }
        write_handle(out, QfQuandle(FiniteQuandle::dihedral(n)))
    })
}

/// Order of `q`, or 0 if `q` is null.
///
/// # Safety
/// `q` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_order(q: *const QfQuandle) -> usize {
    q.as_ref().map_or(0, |q| q.0.order())
}

/// Writes `a^b` to `out`.
///
/// # Safety
/// `q` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_op(q: *const QfQuandle, a: usize, b: usize, out: *mut usize) -> QfStatus {
    guard(|| {
        let q = &borrow(q, "quandle")?.0;
        if a >= q.order() || b >= q.order() {
            return Err(fail(QfStatus::Precondition, format!("element out of range for order {}", q.order())));
        }
        write_out(out, q.op(a, b))
    })
}

/// # Safety
/// `q` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_to_json(q: *const QfQuandle, out: *mut *mut c_char) -> QfStatus {
    guard(|| write_string(out, qf_core::io::quandle_to_json(&borrow(q, "quandle")?.0)))
}

/// # Safety
/// `q` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qf_quandle_free(q: *mut QfQuandle) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Checks the quandle axioms on a JSON table and writes the validation
/// report as JSON. Returns [`QfStatus::Invalid`] when an axiom fails; the
/// report is written in that case too.
///
/// # Safety
/// `json` must be a NUL-terminated string and `report` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_validate_json(json: *const c_char, report: *mut *mut c_char) -> QfStatus {
    let mut valid = true;
    let status = guard(|| {
        let file: qf_core::io::QuandleFile = serde_json::from_str(read_str(json, "json")?).map_err(Error::from)?;
        let r = validate_quandle(file.checked_table()?)?;
        valid = r.valid;
        write_string(report, serde_json::to_string(&r).map_err(Error::from)?)
    });
    if status == QfStatus::Ok && !valid {
        set_last_error("table violates the quandle axioms".into());
        return QfStatus::Invalid;
    }
    status
}

/// Parses a group from `{"order", "mult"}` or `{"degree", "perm_gens"}` JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_group_from_json(json: *const c_char, out: *mut *mut QfGroup) -> QfStatus {
    guard(|| {
        let g = qf_core::io::group_from_json(read_str(json, "json")?)?;
        write_handle(out, QfGroup(g))
    })
}

/// The symmetric group on `n` points, for `1 <= n <= 5`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_group_symmetric(n: usize, out: *mut *mut QfGroup) -> QfStatus {
    guard(|| {
        if !(1..=5).contains(&n) {
            return Err(fail(QfStatus::Precondition, format!("symmetric group degree {n} is outside 1..=5")));
        }
        write_handle(out, QfGroup(FiniteGroup::symmetric(n)))
    })
}

/// Order of `g`, or 0 if `g` is null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qf_group_order(g: *const QfGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qf_group_free(g: *mut QfGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Coset quandle of the subgroup generated by `gens[0..gen_count]` with
/// meridian `meridian`. Fails with [`QfStatus::Precondition`] unless the
/// meridian lies in the center of the subgroup.
///
/// # Safety
/// `g` must be a live handle, `gens` must point to `gen_count` elements
/// (or be null when `gen_count` is 0), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qf_coset_quandle(
    g: *const QfGroup,
    gens: *const usize,
    gen_count: usize,
    meridian: usize,
    out: *mut *mut QfQuandle,
) -> QfStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        let gens: &[usize] = if gen_count == 0 {
            &[]
        } else if gens.is_null() {
            return Err(fail(QfStatus::NullPointer, "gens is null"));
        } else {
            std::slice::from_raw_parts(gens, gen_count)
        };
        if let Some(&bad) = gens.iter().chain([&meridian]).find(|&&x| x >= g.order()) {
            return Err(fail(QfStatus::Precondition, format!("element {bad} is out of range")));
        }
        let p = g.subgroup_generated(gens);
        let cq = CosetQuandle::build(g, &p, meridian)?;
        write_handle(out, QfQuandle(cq.into_quandle()))
    })
}

/// Parses a Gauss code such as `"U1+ O2+ U3+ O1+ U2+ O3+"`.
///
/// # Safety
/// `code` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_diagram_parse(code: *const c_char, out: *mut *mut QfDiagram) -> QfStatus {
    guard(|| {
        let d = qf_core::parse_gauss(read_str(code, "code")?)?;
        write_handle(out, QfDiagram(d))
    })
}

/// Number of crossings of `d`, or 0 if `d` is null.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qf_diagram_crossings(d: *const QfDiagram) -> usize {
    d.as_ref().map_or(0, |d| d.0.crossing_count())
}

/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qf_diagram_free(d: *mut QfDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Counts colorings of `d` by `q`. A `budget` of 0 selects the default.
///
/// # Safety
/// `d` and `q` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_count_colorings(
    d: *const QfDiagram,
    q: *const QfQuandle,
    budget: u64,
    out: *mut u64,
) -> QfStatus {
    guard(|| {
        let p = wirtinger_quandle(&borrow(d, "diagram")?.0);
        let n = count_colorings(&p, &borrow(q, "quandle")?.0, budget_or_default(budget))?;
        write_out(out, n)
    })
}

/// Compares colorings by the conjugacy class of `m` in `g` with
/// representations of the knot group sending the meridian into that
/// class. Writes the report as JSON and returns [`QfStatus::Mismatch`] if
/// the counts differ. A `budget` of 0 selects the default.
///
/// # Safety
/// `d` and `g` must be live handles and `report` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_crosscheck(
    d: *const QfDiagram,
    g: *const QfGroup,
    m: usize,
    budget: u64,
    report: *mut *mut c_char,
) -> QfStatus {
    let mut matched = true;
    let status = guard(|| {
        let r = crosscheck_diagram(&borrow(d, "diagram")?.0, &borrow(g, "group")?.0, m, budget_or_default(budget))?;
        matched = r.matched;
        write_string(report, serde_json::to_string(&r).map_err(Error::from)?)
    });
    if status == QfStatus::Ok && !matched {
        set_last_error("colorings and representations disagree".into());
        return QfStatus::Mismatch;
    }
    status
}

/// Abelianization of the associated group of `q` as
/// `{"rank": r, "torsion": [...]}`.
///
/// # Safety
/// `q` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn qf_adconj_abelianization(q: *const QfQuandle, out: *mut *mut c_char) -> QfStatus {
    guard(|| {
        let ab = adconj_abelianization(&borrow(q, "quandle")?.0);
        write_string(out, serde_json::to_string(&ab).map_err(Error::from)?)
    })
}

//! C interface to `mcg_torsion`.
//!
//! Every fallible function returns an [`McgStatus`]; on failure a message is
//! kept per thread and can be read with [`mcg_last_error_message`]. Handles
//! are opaque and must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use mcg_torsion::actions::{builtin_spec, realizable_boundary_count};
use mcg_torsion::homrep::HomologyRep;
use mcg_torsion::intlinalg::{matrix_order, IntMatrix, MatrixOrder};
use mcg_torsion::surfaces::CurveSystem;
use mcg_torsion::theorem::torsion_generation_verdict;
use mcg_torsion::words::parse_word;
use mcg_torsion::Error;
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    UnknownName = 4,
    DimensionMismatch = 5,
    Overflow = 6,
    InfiniteGroup = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

/// A curve system together with its homology representation.
pub struct McgSystem {
    rep: HomologyRep,
}

pub struct McgMatrix {
    matrix: IntMatrix,
}

/// Verdict for `Γ*_{g,r}`. Only the first `generator_order_count` entries of
/// `generator_orders` are meaningful.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct McgVerdict {
    pub generated_by_torsion: bool,
    pub torsion_subgroup_index: u64,
    pub generator_order_count: usize,
    pub generator_orders: [u64; 4],
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> McgStatus {
    match e {
        Error::Parse { .. } | Error::UnknownCurve { .. } | Error::UnknownGenerator { .. } => {
            McgStatus::ParseError
        }
        Error::UnknownName(_) => McgStatus::UnknownName,
        Error::NonSquare { .. } | Error::Dimension(_) | Error::MixedSystems => {
            McgStatus::DimensionMismatch
        }
        Error::InfiniteGroup(_) => McgStatus::InfiniteGroup,
        _ => McgStatus::InvalidArgument,
    }
}

/// Runs `f`, recording its error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (McgStatus, String)>) -> McgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => McgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            McgStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (McgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (McgStatus, String) {
    (McgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (McgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (McgStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mcg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a named curve system (`torus`, `torus-arc`, `chain:g=G`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_system_from_name(
    name: *const c_char,
    out: *mut *mut McgSystem,
) -> McgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let name = str_arg(name, "name")?;
        let system = CurveSystem::builtin(name).map_err(lib_err)?;
        let rep = HomologyRep::new(Arc::new(system)).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(McgSystem { rep }));
        Ok(())
    })
}

/// # Safety
/// `system` must come from [`mcg_system_from_name`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mcg_system_free(system: *mut McgSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Homology matrix of a twist word.
///
/// # Safety
/// `system` must be a live handle, `word` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_word_matrix(
    system: *const McgSystem,
    word: *const c_char,
    out: *mut *mut McgMatrix,
) -> McgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let system = system.as_ref().ok_or_else(|| null("system"))?;
        let word = str_arg(word, "word")?;
        let w = parse_word(word, system.rep.system()).map_err(lib_err)?;
        let matrix = system.rep.word_matrix(&w).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(McgMatrix { matrix }));
        Ok(())
    })
}

/// # Safety
/// `matrix` must be a live handle; `rows` and `cols` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mcg_matrix_dims(
    matrix: *const McgMatrix,
    rows: *mut usize,
    cols: *mut usize,
) -> McgStatus {
    guard(|| {
        let m = matrix.as_ref().ok_or_else(|| null("matrix"))?;
        if rows.is_null() || cols.is_null() {
            return Err(null("rows/cols"));
        }
        *rows = m.matrix.rows();
        *cols = m.matrix.cols();
        Ok(())
    })
}

/// Entry `(row, col)`, 0-based. Fails with `Overflow` if it does not fit.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_matrix_entry(
    matrix: *const McgMatrix,
    row: usize,
    col: usize,
    out: *mut i64,
) -> McgStatus {
    guard(|| {
        let m = matrix.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if row >= m.matrix.rows() || col >= m.matrix.cols() {
            return Err((
                McgStatus::InvalidArgument,
                format!(
                    "index ({row}, {col}) outside {}x{}",
                    m.matrix.rows(),
                    m.matrix.cols()
                ),
            ));
        }
        let v = m.matrix.get(row, col);
        *out = v.to_i64().ok_or_else(|| {
            (
                McgStatus::Overflow,
                format!("entry {v} does not fit in 64 bits"),
            )
        })?;
        Ok(())
    })
}

/// Rows separated by newlines, entries by spaces. Free with
/// [`mcg_string_free`]. Returns null on failure.
///
/// # Safety
/// `matrix` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mcg_matrix_to_string(matrix: *const McgMatrix) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let m = matrix.as_ref().ok_or_else(|| null("matrix"))?;
        result = CString::new(m.matrix.to_string())
            .expect("matrix text has no NUL")
            .into_raw();
        Ok(())
    });
    result
}

/// # Safety
/// `matrix` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mcg_matrix_free(matrix: *mut McgMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mcg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Multiplicative order of a square matrix; `0` means infinite.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_matrix_order(matrix: *const McgMatrix, out: *mut u64) -> McgStatus {
    guard(|| {
        let m = matrix.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = match matrix_order(&m.matrix, None).map_err(lib_err)? {
            MatrixOrder::Finite(n) => n,
            MatrixOrder::Infinite => 0,
        };
        Ok(())
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_theorem_verdict(g: u32, r: u32, out: *mut McgVerdict) -> McgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v = torsion_generation_verdict(g, r).map_err(lib_err)?;
        let mut c = McgVerdict {
            generated_by_torsion: v.generated_by_torsion,
            torsion_subgroup_index: v.torsion_subgroup_index,
            generator_order_count: v.generator_orders.len(),
            generator_orders: [0; 4],
        };
        for (slot, &n) in c.generator_orders.iter_mut().zip(&v.generator_orders) {
            *slot = n;
        }
        *out = c;
        Ok(())
    })
}

/// Whether a built-in symmetry (`tau5`, `tau2(3)`, ...) can realize `r`
/// boundary components.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mcg_realizable(spec: *const c_char, r: u64, out: *mut bool) -> McgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec = builtin_spec(str_arg(spec, "spec")?).map_err(lib_err)?;
        *out = realizable_boundary_count(&spec, r);
        Ok(())
    })
}

//! C ABI over `noncomm`.
//!
//! Groups and graphs are opaque handles released with their `*_free`
//! function. Every fallible call returns an [`NcStatus`] and writes its
//! result through an out-pointer; on failure the message is available from
//! [`nc_last_error_message`] on the same thread. Strings returned to the
//! caller are freed with [`nc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use noncomm::graph::noncommuting_graph;
use noncomm::spectra::{energy, laplacian_energy, EnergyValue};
use noncomm::{charpoly::charpoly, Error, FiniteGroup, Graph, GroupSpec};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed group spec or non-UTF-8 input.
    Parse = 2,
    InvalidArgument = 3,
    /// Order or dimension above the cap.
    CapExceeded = 4,
    /// Any other failure inside the computation.
    Computation = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// Opaque group handle.
pub struct NcGroup {
    inner: Arc<FiniteGroup>,
}

/// Opaque graph handle.
pub struct NcGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> NcStatus {
    match e {
        Error::Parse { .. } => NcStatus::Parse,
        Error::InvalidArgument(_) | Error::NotSymmetric { .. } => NcStatus::InvalidArgument,
        Error::OrderCap { .. } | Error::DimensionCap { .. } => NcStatus::CapExceeded,
        _ => NcStatus::Computation,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (NcStatus, String)>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NcStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside noncomm");
            NcStatus::Panic
        }
    }
}

fn lib(e: Error) -> (NcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (NcStatus, String) {
    (NcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (NcStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (NcStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread. Do not free.
#[no_mangle]
pub extern "C" fn nc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a group spec such as `dihedral:5` or `prod(sym:3,cyclic:2)` and
/// builds the group, refusing orders above `cap`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_group_parse(spec: *const c_char, cap: usize, out: *mut *mut NcGroup) -> NcStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        let s = CStr::from_ptr(spec).to_str().map_err(|_| (NcStatus::Parse, "spec is not UTF-8".to_string()))?;
        let g = s.parse::<GroupSpec>().and_then(|p| p.build(cap)).map_err(lib)?;
        write(out, Box::into_raw(Box::new(NcGroup { inner: g })))
    })
}

/// # Safety
/// `g` must come from [`nc_group_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nc_group_free(g: *mut NcGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_group_order(g: *const NcGroup, out: *mut usize) -> NcStatus {
    guard(|| write(out, deref(g, "group")?.inner.order()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_group_center_size(g: *const NcGroup, out: *mut usize) -> NcStatus {
    guard(|| write(out, deref(g, "group")?.inner.center().len()))
}

/// Builds the non-commuting graph; it has no vertices for abelian groups.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_noncommuting(g: *const NcGroup, out: *mut *mut NcGraph) -> NcStatus {
    guard(|| {
        let graph = noncommuting_graph(&deref(g, "group")?.inner);
        write(out, Box::into_raw(Box::new(NcGraph { inner: graph })))
    })
}

/// # Safety
/// `g` must come from [`nc_graph_noncommuting`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_free(g: *mut NcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_vertex_count(g: *const NcGraph, out: *mut usize) -> NcStatus {
    guard(|| write(out, deref(g, "graph")?.inner.vertex_count()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_edge_count(g: *const NcGraph, out: *mut usize) -> NcStatus {
    guard(|| write(out, deref(g, "graph")?.inner.edge_count()))
}

unsafe fn write_energy(e: EnergyValue, numeric: *mut f64, exact: *mut *mut c_char) -> Result<(), (NcStatus, String)> {
    write(numeric, e.numeric)?;
    if !exact.is_null() {
        exact.write(e.exact.map_or(ptr::null_mut(), |s| to_c_string(s.to_string())));
    }
    Ok(())
}

/// Energy of the graph. `numeric` receives the value; if `exact` is not
/// null it receives the exact form (`a+b*sqrt(d)`, free with
/// [`nc_string_free`]) or null when only a numeric value is known.
///
/// # Safety
/// `g` must be a live handle; `numeric` must be writable; `exact` may be null.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_energy(g: *const NcGraph, numeric: *mut f64, exact: *mut *mut c_char) -> NcStatus {
    guard(|| write_energy(energy(&deref(g, "graph")?.inner).map_err(lib)?, numeric, exact))
}

/// Laplacian energy `Σ|μ − 2m/N|`; outputs as for [`nc_graph_energy`].
///
/// # Safety
/// As [`nc_graph_energy`].
#[no_mangle]
pub unsafe extern "C" fn nc_graph_laplacian_energy(g: *const NcGraph, numeric: *mut f64, exact: *mut *mut c_char) -> NcStatus {
    guard(|| write_energy(laplacian_energy(&deref(g, "graph")?.inner).map_err(lib)?, numeric, exact))
}

/// Characteristic polynomial of the adjacency matrix as JSON
/// (`{"degree":…,"coefficients":["…",…]}`, lowest degree first, decimal
/// strings). Free with [`nc_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_graph_charpoly(g: *const NcGraph, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let p = charpoly(&deref(g, "graph")?.inner.adjacency()).map_err(lib)?;
        let text = serde_json::to_string(&p.to_json()).map_err(|e| (NcStatus::Computation, e.to_string()))?;
        write(out, to_c_string(text))
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

//! C ABI for `etaedge`.
//!
//! Graphs and colorings cross the boundary as opaque handles owned by the
//! caller and released with [`eta_graph_free`] / [`eta_coloring_free`].
//! Every fallible function returns an [`EtaStatus`]; on failure the message
//! is available from [`eta_last_error`] on the same thread. Strings returned
//! by the library must be released with [`eta_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use etaedge::additive::{bound_thm24, build_an, verify_additive};
use etaedge::constructions::{generate, Family};
use etaedge::exact::resistance;
use etaedge::io::{from_graph6, to_graph6};
use etaedge::spaced::{is_spaced, spaced_to_additive};
use etaedge::vizing::proper_edge_color;
use etaedge::{Budgeted, EdgeColoring, Error, Graph, LabelSet};

/// Result codes of the C API.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaStatus {
    Ok = 0,
    NullArgument = 1,
    Malformed = 2,
    InvalidGraph = 3,
    Precondition = 4,
    NotRegular = 5,
    Improper = 6,
    BudgetExhausted = 7,
    NotFound = 8,
    BufferTooSmall = 9,
    Internal = 10,
}

/// Opaque graph handle.
pub struct EtaGraph {
    inner: Graph,
}

/// Opaque edge-coloring handle.
pub struct EtaColoring {
    inner: EdgeColoring,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> EtaStatus {
    match err {
        Error::Malformed { .. } => EtaStatus::Malformed,
        Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::VertexOutOfRange { .. } | Error::InvalidEdge { .. } => {
            EtaStatus::InvalidGraph
        }
        Error::NotRegular => EtaStatus::NotRegular,
        Error::Improper(..) => EtaStatus::Improper,
        Error::NotFound | Error::NoneFound(_) => EtaStatus::NotFound,
        Error::Precondition(_) | Error::NotMinimal { .. } => EtaStatus::Precondition,
        Error::Overflow | Error::Contract(_) => EtaStatus::Internal,
    }
}

fn fail(err: Error) -> EtaStatus {
    set_error(err.to_string());
    status_of(&err)
}

/// Runs `f`, converting panics into `Internal`.
fn guard(f: impl FnOnce() -> EtaStatus) -> EtaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            EtaStatus::Internal
        }
    }
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null argument: ", stringify!($p)));
            return EtaStatus::NullArgument;
        })+
    };
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Copy of the last error message on this thread, or NULL. Release with
/// [`eta_string_free`].
#[no_mangle]
pub extern "C" fn eta_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

#[no_mangle]
pub unsafe extern "C" fn eta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a NUL-terminated graph6 string.
#[no_mangle]
pub unsafe extern "C" fn eta_graph_from_graph6(text: *const c_char, out: *mut *mut EtaGraph) -> EtaStatus {
    nonnull!(text, out);
    guard(|| match from_graph6(CStr::from_ptr(text).to_bytes()) {
        Ok(g) => {
            put(out, EtaGraph { inner: g });
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Builds a graph on `n` vertices from `m` pairs stored as
/// `pairs[2i], pairs[2i+1]`. Edge `i` gets id `i`.
#[no_mangle]
pub unsafe extern "C" fn eta_graph_from_edges(
    n: usize,
    pairs: *const usize,
    m: usize,
    out: *mut *mut EtaGraph,
) -> EtaStatus {
    nonnull!(out);
    if m > 0 {
        nonnull!(pairs);
    }
    guard(|| {
        let flat = if m == 0 { &[][..] } else { slice::from_raw_parts(pairs, 2 * m) };
        match Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(g) => {
                put(out, EtaGraph { inner: g });
                EtaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Generates a named family (`"cycle"`, `"complete"`, `"complete_bipartite"`,
/// `"hypercube"`, `"petersen"`, `"heawood"`).
#[no_mangle]
pub unsafe extern "C" fn eta_graph_generate(
    family: *const c_char,
    params: *const usize,
    nparams: usize,
    out: *mut *mut EtaGraph,
) -> EtaStatus {
    nonnull!(family, out);
    if nparams > 0 {
        nonnull!(params);
    }
    guard(|| {
        let name = CStr::from_ptr(family).to_string_lossy();
        let params = if nparams == 0 { &[][..] } else { slice::from_raw_parts(params, nparams) };
        match name.parse::<Family>().and_then(|f| generate(f, params)) {
            Ok(g) => {
                put(out, EtaGraph { inner: g });
                EtaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn eta_graph_free(g: *mut EtaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eta_graph_vertex_count(g: *const EtaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eta_graph_edge_count(g: *const EtaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Girth, or 0 for a forest.
#[no_mangle]
pub unsafe extern "C" fn eta_graph_girth(g: *const EtaGraph, out: *mut usize) -> EtaStatus {
    nonnull!(g, out);
    guard(|| {
        *out = (*g).inner.girth().finite().unwrap_or(0);
        EtaStatus::Ok
    })
}

/// graph6 encoding; NULL if `g` is NULL. Release with [`eta_string_free`].
#[no_mangle]
pub unsafe extern "C" fn eta_graph_to_graph6(g: *const EtaGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => CString::new(to_graph6(&g.inner)).expect("graph6 has no NUL").into_raw(),
        None => ptr::null_mut(),
    }
}

/// A coloring of `g` with `labels[e]` on edge `e` (`m` must equal the edge
/// count) drawn from the `k` labels in `universe`.
#[no_mangle]
pub unsafe extern "C" fn eta_coloring_new(
    g: *const EtaGraph,
    labels: *const u64,
    m: usize,
    universe: *const u64,
    k: usize,
    out: *mut *mut EtaColoring,
) -> EtaStatus {
    nonnull!(g, out);
    if m > 0 {
        nonnull!(labels);
    }
    if k > 0 {
        nonnull!(universe);
    }
    guard(|| {
        let labels = if m == 0 { Vec::new() } else { slice::from_raw_parts(labels, m).to_vec() };
        let universe = if k == 0 { Vec::new() } else { slice::from_raw_parts(universe, k).to_vec() };
        let built = LabelSet::new(universe)
            .and_then(|u| EdgeColoring::new(labels, u))
            .and_then(|c| c.check_total(&(*g).inner).map(|_| c));
        match built {
            Ok(c) => {
                put(out, EtaColoring { inner: c });
                EtaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn eta_coloring_free(c: *mut EtaColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of labeled edges; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eta_coloring_len(c: *const EtaColoring) -> usize {
    c.as_ref().map_or(0, |c| c.inner.len())
}

/// Copies the labels into `buf`, which must hold `eta_coloring_len(c)` values.
#[no_mangle]
pub unsafe extern "C" fn eta_coloring_labels(c: *const EtaColoring, buf: *mut u64, cap: usize) -> EtaStatus {
    nonnull!(c);
    let labels = (*c).inner.labels();
    if cap < labels.len() {
        set_error(format!("buffer holds {cap} labels, need {}", labels.len()));
        return EtaStatus::BufferTooSmall;
    }
    if !labels.is_empty() {
        nonnull!(buf);
        ptr::copy_nonoverlapping(labels.as_ptr(), buf, labels.len());
    }
    EtaStatus::Ok
}

/// Proper coloring with at most Δ+1 labels.
#[no_mangle]
pub unsafe extern "C" fn eta_proper_color(g: *const EtaGraph, out: *mut *mut EtaColoring) -> EtaStatus {
    nonnull!(g, out);
    guard(|| {
        put(out, EtaColoring { inner: proper_edge_color(&(*g).inner) });
        EtaStatus::Ok
    })
}

/// Additivity check. `violation` (optional, two entries) receives the
/// smallest incident pair with equal neighbor sums, or `SIZE_MAX` twice.
#[no_mangle]
pub unsafe extern "C" fn eta_verify_additive(
    g: *const EtaGraph,
    c: *const EtaColoring,
    require_proper: bool,
    ok: *mut bool,
    violation: *mut usize,
) -> EtaStatus {
    nonnull!(g, c, ok);
    guard(|| match verify_additive(&(*g).inner, &(*c).inner, require_proper) {
        Ok(v) => {
            *ok = v.ok;
            if !violation.is_null() {
                let (e, f) = v.violation.unwrap_or((usize::MAX, usize::MAX));
                *violation = e;
                *violation.add(1) = f;
            }
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

#[no_mangle]
pub unsafe extern "C" fn eta_is_spaced(g: *const EtaGraph, c: *const EtaColoring, out: *mut bool) -> EtaStatus {
    nonnull!(g, c, out);
    guard(|| match is_spaced(&(*g).inner, &(*c).inner) {
        Ok(b) => {
            *out = b;
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

#[no_mangle]
pub unsafe extern "C" fn eta_spaced_to_additive(
    g: *const EtaGraph,
    c: *const EtaColoring,
    out: *mut *mut EtaColoring,
) -> EtaStatus {
    nonnull!(g, c, out);
    guard(|| match spaced_to_additive(&(*g).inner, &(*c).inner) {
        Ok(a) => {
            put(out, EtaColoring { inner: a });
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Resistance of a regular graph. `witness` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn eta_resistance(
    g: *const EtaGraph,
    budget: u64,
    out: *mut usize,
    witness: *mut *mut EtaColoring,
) -> EtaStatus {
    nonnull!(g, out);
    guard(|| match resistance(&(*g).inner, budget) {
        Ok(Budgeted::Done(r)) => {
            *out = r.resistance;
            if !witness.is_null() {
                put(witness, EtaColoring { inner: r.witness });
            }
            EtaStatus::Ok
        }
        Ok(Budgeted::Unknown { expanded }) => {
            set_error(format!("node budget exhausted after {expanded} nodes"));
            EtaStatus::BudgetExhausted
        }
        Err(e) => fail(e),
    })
}

/// Writes `A_n` into `buf` (capacity `cap`) and its size into `len`. With
/// a too small buffer only `len` is set.
#[no_mangle]
pub unsafe extern "C" fn eta_build_an(n: u32, buf: *mut u64, cap: usize, len: *mut usize) -> EtaStatus {
    nonnull!(len);
    guard(|| match build_an(n) {
        Ok(a) => {
            *len = a.len();
            if cap < a.len() {
                set_error(format!("buffer holds {cap} labels, need {}", a.len()));
                return EtaStatus::BufferTooSmall;
            }
            nonnull!(buf);
            ptr::copy_nonoverlapping(a.as_slice().as_ptr(), buf, a.len());
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Label bounds for d-regular graphs: `max(A_n)` and the (d+1)-th element.
#[no_mangle]
pub unsafe extern "C" fn eta_bound(d: u64, paper_bound: *mut u64, refined_bound: *mut u64) -> EtaStatus {
    nonnull!(paper_bound, refined_bound);
    guard(|| match bound_thm24(d) {
        Ok(b) => {
            *paper_bound = b.paper_bound;
            *refined_bound = b.refined_bound;
            EtaStatus::Ok
        }
        Err(e) => fail(e),
    })
}

//! C ABI over the `isogame` solver.
//!
//! Graphs and forbidden families are opaque heap handles released with
//! their `*_free` functions. Every entry point returns an [`IsoStatus`];
//! on failure [`iso_last_error_message`] describes the error for the
//! calling thread. Panics are caught at the boundary and reported as
//! `ISO_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isogame::graph6::{encode, parse_graph6};
use isogame::oracle::isolation_number;
use isogame::{
    make_family, Error, FamilySpec, ForbiddenFamily, Graph, Mover, Solver, SolverConfig, VertexSet,
};

/// Opaque graph handle.
pub struct IsoGraph(Graph);

/// Opaque forbidden-family handle.
pub struct IsoFamily(ForbiddenFamily);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OrderTooLarge = 3,
    BadEdge = 4,
    MalformedGraph6 = 5,
    BadSpec = 6,
    PatternTooLarge = 7,
    IllegalMove = 8,
    TerminalState = 9,
    BudgetExceeded = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoMover {
    Dominator = 0,
    Staller = 1,
}

/// Outcome of [`iso_solve`]. `best_move` is -1 when the start is terminal.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct IsoSolveResult {
    pub value: usize,
    pub best_move: i64,
    pub line_len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> IsoStatus {
    match e {
        Error::OrderTooLarge { .. } => IsoStatus::OrderTooLarge,
        Error::BadEdge(..) => IsoStatus::BadEdge,
        Error::MalformedGraph6(_) => IsoStatus::MalformedGraph6,
        Error::BadSpec(_) => IsoStatus::BadSpec,
        Error::PatternTooLarge(_) => IsoStatus::PatternTooLarge,
        Error::IllegalMove(_) => IsoStatus::IllegalMove,
        Error::TerminalState => IsoStatus::TerminalState,
        Error::StateSpaceBudgetExceeded { .. } | Error::BudgetExceeded(_) => {
            IsoStatus::BudgetExceeded
        }
        Error::Usage(_) | Error::Io(_) => IsoStatus::InvalidArgument,
    }
}

struct Fail(IsoStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> IsoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IsoStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IsoStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(IsoStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(IsoStatus::InvalidArgument, "string is not UTF-8".into()))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(null)
}

unsafe fn graph_arg<'a>(g: *const IsoGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn family_arg<'a>(f: *const IsoFamily) -> Result<&'a ForbiddenFamily, Fail> {
    f.as_ref().map(|h| &h.0).ok_or_else(null)
}

/// Parses a graph6 record into a new graph handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut IsoGraph,
) -> IsoStatus {
    guard(|| {
        let out = out_arg(out)?;
        let g = parse_graph6(str_arg(text)?)?;
        *out = Box::into_raw(Box::new(IsoGraph(g)));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (it may be null when
/// `edge_count` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut IsoGraph,
) -> IsoStatus {
    guard(|| {
        let out = out_arg(out)?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::new(n, &pairs)?;
        *out = Box::into_raw(Box::new(IsoGraph(g)));
        Ok(())
    })
}

/// Builds a named family graph such as `cycle:6` or `hgraph`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_from_family(
    spec: *const c_char,
    out: *mut *mut IsoGraph,
) -> IsoStatus {
    guard(|| {
        let out = out_arg(out)?;
        let spec: FamilySpec = str_arg(spec)?.parse()?;
        let g = make_family(&spec)?;
        *out = Box::into_raw(Box::new(IsoGraph(g)));
        Ok(())
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_order(g: *const IsoGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.order())
}

/// Encodes `g` as graph6. Release the string with [`iso_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_to_graph6(
    g: *const IsoGraph,
    out: *mut *mut c_char,
) -> IsoStatus {
    guard(|| {
        let out = out_arg(out)?;
        let text = encode(graph_arg(g)?);
        *out = CString::new(text).expect("graph6 has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn iso_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_graph_free(g: *mut IsoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a forbidden family: `K1`, `K2`, `P3`, `none` or
/// `custom:<n>:<u-v,...>`, several joined by `;`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn iso_family_parse(
    spec: *const c_char,
    out: *mut *mut IsoFamily,
) -> IsoStatus {
    guard(|| {
        let out = out_arg(out)?;
        let fam: ForbiddenFamily = str_arg(spec)?.parse()?;
        *out = Box::into_raw(Box::new(IsoFamily(fam)));
        Ok(())
    })
}

/// # Safety
/// `f` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_family_free(f: *mut IsoFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Solves the game on `g` from the closure of `initial_marks` (bit v =
/// vertex v). `memo_cap` 0 selects the default cap.
///
/// `result` is always filled on success. The principal line is copied
/// into `line` when `line_capacity >= result.line_len`; otherwise the call
/// returns `BufferTooSmall` with `result` still filled so the caller can
/// retry with a larger buffer.
///
/// # Safety
/// `g` and `f` must be live handles, `result` valid, and `line` must point
/// to `line_capacity` writable values (or be null when it is 0).
#[no_mangle]
pub unsafe extern "C" fn iso_solve(
    g: *const IsoGraph,
    f: *const IsoFamily,
    start: IsoMover,
    initial_marks: u64,
    memo_cap: usize,
    result: *mut IsoSolveResult,
    line: *mut usize,
    line_capacity: usize,
) -> IsoStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let fam = family_arg(f)?;
        let result = out_arg(result)?;
        if initial_marks & !g.vertices().bits() != 0 {
            return Err(Fail(
                IsoStatus::InvalidArgument,
                "initial marks name a vertex outside the graph".into(),
            ));
        }
        let mover = match start {
            IsoMover::Dominator => Mover::Dominator,
            IsoMover::Staller => Mover::Staller,
        };
        let mut config = SolverConfig::default();
        if memo_cap != 0 {
            config.memo_cap = memo_cap;
        }
        let state = isogame::rules::initial_closure(g, fam, VertexSet::from_bits(initial_marks));
        let r = Solver::with_config(g, fam, config).game_value(&state, mover)?;
        *result = IsoSolveResult {
            value: r.value,
            best_move: r.best_move.map_or(-1, |x| x as i64),
            line_len: r.principal_line.len(),
        };
        if r.principal_line.len() > line_capacity {
            return Err(Fail(
                IsoStatus::BufferTooSmall,
                format!("principal line needs {} slots", r.principal_line.len()),
            ));
        }
        if !r.principal_line.is_empty() {
            if line.is_null() {
                return Err(null());
            }
            ptr::copy_nonoverlapping(r.principal_line.as_ptr(), line, r.principal_line.len());
        }
        Ok(())
    })
}

/// Minimum F-isolating set size and its lexicographically least witness
/// (as a bitmask). Supports order up to 24.
///
/// # Safety
/// `g` and `f` must be live handles; `size` and `witness` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn iso_isolation_number(
    g: *const IsoGraph,
    f: *const IsoFamily,
    size: *mut usize,
    witness: *mut u64,
) -> IsoStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let fam = family_arg(f)?;
        let size = out_arg(size)?;
        let witness = out_arg(witness)?;
        let cert = isolation_number(g, fam)?;
        *size = cert.size;
        *witness = cert.witness.bits();
        Ok(())
    })
}

/// Message for the most recent failure on this thread, or "" after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn iso_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

//! C ABI for the geoclique solvers: opaque handles, status codes, and a
//! thread-local last-error message. Instances travel as JSON documents,
//! graphs as flat edge arrays; solutions come back as handles with accessor
//! functions plus a canonical JSON rendering.

use geoclique::cliquefront;
use geoclique::docs::{InstanceDoc, ParamsDoc, SolutionDocument, SOLUTION_FORMAT};
use geoclique::eptas::{self, EptasMode, EptasParams, LogBase};
use geoclique::error::Error;
use geoclique::geometry::{self, GeometricInstance};
use geoclique::graph::Graph;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcStatus {
    GcOk = 0,
    /// Malformed input (JSON, DIMACS, ranges).
    GcErrParse = 1,
    /// Refused: budget caps or infeasible construction.
    GcErrRefused = 2,
    /// A class assumption was violated in strict mode.
    GcErrAssumption = 3,
    /// Null pointer or invalid argument.
    GcErrArgument = 4,
    GcErrInternal = 5,
}

fn status_for(e: &Error) -> GcStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::BadInstance(_) => GcStatus::GcErrParse,
        Error::Refusal(_)
        | Error::BudgetExceeded { .. }
        | Error::TimeBudgetExceeded(_)
        | Error::ConstructionInfeasible(_) => GcStatus::GcErrRefused,
        Error::AssumptionViolated(_) => GcStatus::GcErrAssumption,
        Error::BadParameter(_) | Error::SampleTooLarge { .. } => GcStatus::GcErrArgument,
        _ => GcStatus::GcErrInternal,
    }
}

fn fail(e: &Error) -> GcStatus {
    set_last_error(&e.to_string());
    status_for(e)
}

/// Opaque geometric instance handle.
pub struct GcInstance {
    inner: GeometricInstance,
}

/// Opaque solution handle.
pub struct GcSolution {
    vertices: Vec<usize>,
    weight: f64,
    valid: bool,
    json: String,
}

/// Solver parameters as plain C data. `s_cap == 0` means "choose n/4".
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct GcParams {
    pub epsilon: f64,
    pub beta: f64,
    pub vc_dim: u32,
    pub iocp: u32,
    pub seed: u64,
    pub s_cap: usize,
    pub t_cap: usize,
    pub paper_faithful: bool,
    pub strict: bool,
}

/// Derived constants of the approximation analysis.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct GcConstants {
    pub c: f64,
    pub delta: f64,
    pub s: usize,
    pub t: usize,
    pub z: usize,
}

fn to_eptas_params(p: &GcParams, n_hint: usize) -> EptasParams {
    EptasParams {
        epsilon: p.epsilon,
        beta: p.beta,
        vc_dim: p.vc_dim.max(1),
        iocp: p.iocp.max(1),
        mode: if p.paper_faithful {
            EptasMode::PaperFaithful
        } else {
            EptasMode::Practical
        },
        failure_prob: 1e-10,
        seed: p.seed,
        s_cap: if p.s_cap == 0 {
            (n_hint / 4).max(1)
        } else {
            p.s_cap
        },
        t_cap: p.t_cap.max(1),
        log_base: LogBase::Natural,
        strict: p.strict,
    }
}

/// Message for the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Default solver parameters (ε = 0.2, practical mode, t cap 1000).
#[no_mangle]
pub extern "C" fn gc_params_default() -> GcParams {
    GcParams {
        epsilon: 0.2,
        beta: 0.5,
        vc_dim: 4,
        iocp: 1,
        seed: 0,
        s_cap: 0,
        t_cap: 1000,
        paper_faithful: false,
        strict: false,
    }
}

/// Compute the derived constants for the given parameters.
///
/// # Safety
/// `params` and `out` must be valid, non-null pointers.
#[no_mangle]
pub unsafe extern "C" fn gc_compute_constants(
    params: *const GcParams,
    out: *mut GcConstants,
) -> GcStatus {
    if params.is_null() || out.is_null() {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let p = to_eptas_params(unsafe { &*params }, 0);
    match eptas::compute_constants(&p) {
        Ok(dc) => {
            unsafe {
                *out = GcConstants {
                    c: dc.c,
                    delta: dc.delta,
                    s: dc.s,
                    t: dc.t,
                    z: dc.z,
                };
            }
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

/// Parse an instance document (see the file-format docs) into a handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_instance_parse_json(
    text: *const c_char,
    out: *mut *mut GcInstance,
) -> GcStatus {
    if text.is_null() || out.is_null() {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let text = match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(t) => t,
        Err(_) => {
            set_last_error("instance text is not valid UTF-8");
            return GcStatus::GcErrParse;
        }
    };
    let doc = match InstanceDoc::from_json(text) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    match doc.to_instance() {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(GcInstance { inner })) };
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

/// # Safety
/// `inst` must be a handle from `gc_instance_parse_json`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_instance_free(inst: *mut GcInstance) {
    if !inst.is_null() {
        drop(unsafe { Box::from_raw(inst) });
    }
}

/// Number of objects in the instance.
///
/// # Safety
/// `inst` must be a live instance handle.
#[no_mangle]
pub unsafe extern "C" fn gc_instance_len(inst: *const GcInstance) -> usize {
    if inst.is_null() {
        return 0;
    }
    unsafe { &*inst }.inner.len()
}

fn make_solution(
    problem: &str,
    method: &str,
    vertices: Vec<usize>,
    weight: f64,
    valid: bool,
    params: Option<&EptasParams>,
    diagnostics: Option<eptas::EptasDiagnostics>,
) -> GcSolution {
    let doc = SolutionDocument {
        format: SOLUTION_FORMAT.into(),
        version: 1,
        problem: problem.into(),
        method: method.into(),
        size: vertices.len(),
        weight,
        vertices: vertices.clone(),
        valid,
        params: params.map(ParamsDoc::from),
        derived_constants: params.and_then(|p| eptas::compute_constants(p).ok()),
        diagnostics,
        elapsed_ms: 0,
    };
    GcSolution {
        vertices,
        weight,
        valid,
        json: doc.to_canonical_json(),
    }
}

/// Approximate Maximum Clique on a 2-d (disk) or 3-d (equal-radius ball)
/// instance. Validity is re-verified against the instance.
///
/// # Safety
/// All pointers must be valid; `inst` must be a live instance handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solve_clique(
    inst: *const GcInstance,
    params: *const GcParams,
    out: *mut *mut GcSolution,
) -> GcStatus {
    if inst.is_null() || params.is_null() || out.is_null() {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let instance = &unsafe { &*inst }.inner;
    let p = to_eptas_params(unsafe { &*params }, instance.len());
    let sol = match instance.dim() {
        2 => cliquefront::max_clique_disks(instance, &p),
        3 => cliquefront::max_clique_unit_balls(instance, &p, false),
        d => Err(Error::DimensionMismatch(d, 2)),
    };
    match sol {
        Ok(s) => {
            let solution = make_solution(
                "clique",
                "eptas",
                s.vertices,
                s.weight,
                s.valid,
                Some(&p),
                s.diagnostics,
            );
            unsafe { *out = Box::into_raw(Box::new(solution)) };
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

/// Exact Maximum Clique for a 2-d equal-radius instance (points with a
/// threshold, or balls with one radius).
///
/// # Safety
/// All pointers must be valid; `inst` must be a live instance handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solve_clique_exact_unit_disk(
    inst: *const GcInstance,
    out: *mut *mut GcSolution,
) -> GcStatus {
    if inst.is_null() || out.is_null() {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let instance = &unsafe { &*inst }.inner;
    let (points, r) = match instance {
        GeometricInstance::Points {
            dim: 2,
            points,
            threshold,
            ..
        } => (points.clone(), threshold / 2.0),
        GeometricInstance::Balls { dim: 2, balls, .. } if instance.equal_radii() => (
            balls.iter().map(|b| b.center.clone()).collect(),
            balls.first().map(|b| b.radius).unwrap_or(1.0),
        ),
        _ => {
            set_last_error("exact-unit-disk needs a 2-d equal-radius instance");
            return GcStatus::GcErrArgument;
        }
    };
    match cliquefront::exact_unit_disk_clique(&points, r) {
        Ok(s) => {
            let solution = make_solution(
                "clique",
                "exact-unit-disk",
                s.vertices,
                s.weight,
                s.valid,
                None,
                None,
            );
            unsafe { *out = Box::into_raw(Box::new(solution)) };
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

/// Approximate Maximum Independent Set on an explicit graph given as
/// `edge_count` pairs (u, v) in `edges_flat` (length 2·edge_count).
///
/// # Safety
/// `edges_flat` must point to `2 * edge_count` readable values (may be null
/// when `edge_count` is 0); `params` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gc_solve_mis_graph(
    n: usize,
    edges_flat: *const usize,
    edge_count: usize,
    params: *const GcParams,
    out: *mut *mut GcSolution,
) -> GcStatus {
    if params.is_null() || out.is_null() || (edges_flat.is_null() && edge_count > 0) {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let flat = if edge_count == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(edges_flat, 2 * edge_count) }
    };
    let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let g = match Graph::from_edge_list(n, &edges) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let p = to_eptas_params(unsafe { &*params }, n);
    match eptas::run_eptas_iocp(&g, &p) {
        Ok(o) => {
            let valid = o
                .vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| o.vertices[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            let solution = make_solution(
                "mis",
                "eptas",
                o.vertices,
                o.weight,
                valid,
                Some(&p),
                Some(o.diagnostics),
            );
            unsafe { *out = Box::into_raw(Box::new(solution)) };
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

/// # Safety
/// `sol` must be a solution handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_free(sol: *mut GcSolution) {
    if !sol.is_null() {
        drop(unsafe { Box::from_raw(sol) });
    }
}

/// Number of vertices in the solution.
///
/// # Safety
/// `sol` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_size(sol: *const GcSolution) -> usize {
    if sol.is_null() {
        return 0;
    }
    unsafe { &*sol }.vertices.len()
}

/// Total weight (equals size under unit weights).
///
/// # Safety
/// `sol` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_weight(sol: *const GcSolution) -> f64 {
    if sol.is_null() {
        return 0.0;
    }
    unsafe { &*sol }.weight
}

/// Whether the solution re-verified against its instance.
///
/// # Safety
/// `sol` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_valid(sol: *const GcSolution) -> bool {
    if sol.is_null() {
        return false;
    }
    unsafe { &*sol }.valid
}

/// Copy up to `cap` solution vertices into `buf`; the full count lands in
/// `written` regardless, so call once with cap 0 to size the buffer.
///
/// # Safety
/// `buf` must point to `cap` writable values (may be null when cap is 0);
/// `written` must be valid; `sol` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_vertices(
    sol: *const GcSolution,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> GcStatus {
    if sol.is_null() || written.is_null() || (buf.is_null() && cap > 0) {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    let vs = &unsafe { &*sol }.vertices;
    unsafe { *written = vs.len() };
    let take = vs.len().min(cap);
    if take > 0 {
        let dst = unsafe { std::slice::from_raw_parts_mut(buf, take) };
        dst.copy_from_slice(&vs[..take]);
    }
    GcStatus::GcOk
}

/// The solution as a canonical JSON document; free with `gc_string_free`.
///
/// # Safety
/// `sol` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_to_json(sol: *const GcSolution) -> *mut c_char {
    if sol.is_null() {
        return std::ptr::null_mut();
    }
    let json = &unsafe { &*sol }.json;
    CString::new(json.as_str())
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

/// # Safety
/// `s` must come from `gc_solution_to_json` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Build the intersection graph of an instance and report its edge count;
/// a cheap way for bindings to sanity-check an instance.
///
/// # Safety
/// `inst` must be a live instance handle; `edges_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn gc_instance_edge_count(
    inst: *const GcInstance,
    edges_out: *mut usize,
) -> GcStatus {
    if inst.is_null() {
        set_last_error("null pointer");
        return GcStatus::GcErrArgument;
    }
    match geometry::intersection_graph(&unsafe { &*inst }.inner) {
        Ok(res) => {
            if !edges_out.is_null() {
                unsafe { *edges_out = res.graph.m() };
            }
            GcStatus::GcOk
        }
        Err(e) => fail(&e),
    }
}

//! C ABI for `ncsos`.
//!
//! Problems live behind the opaque [`NcsProblem`] handle. Every fallible call
//! returns an [`NcsErrorCode`]; on failure a message is kept per thread and can
//! be read with [`ncs_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ncsos::cli::generators::{benchmark, box_constraints};
use ncsos::cli::parse_problem;
use ncsos::cli::pipeline::{run_problem, Backend, PipelineError};
use ncsos::ncalg::parse_poly;
use ncsos::relax::{Mode, Problem, RelaxationSpec, Sparsity, TsOrder};
use ncsos::sdpcore::{Settings, SolveStatus};
use ncsos::sparsity::ExtensionKind;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsErrorCode {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Relaxation = 5,
    Solver = 6,
    Io = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsMode {
    Eigen = 0,
    Trace = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsSparsity {
    Dense = 0,
    Ts = 1,
    Cs = 2,
    CsTs = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsExtension {
    Maximal = 0,
    MinFill = 1,
    MinDegree = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsSolveStatus {
    Optimal = 0,
    MaxIterations = 1,
    UnboundedSuspected = 2,
    InfeasibleSuspected = 3,
}

/// Relaxation and solver options. Obtain defaults from [`ncs_options_default`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NcsOptions {
    pub mode: NcsMode,
    pub sparsity: NcsSparsity,
    /// Relaxation order; 0 selects the smallest admissible one.
    pub order: usize,
    /// Sparse order; 0 iterates until the graphs stabilize.
    pub ts_order: usize,
    pub extension: NcsExtension,
    pub csp_extension: NcsExtension,
    pub tol: f64,
    pub max_iter: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NcsReport {
    pub n: usize,
    pub dhat: usize,
    pub k: usize,
    /// Largest block side length.
    pub mb: usize,
    pub num_blocks: usize,
    pub num_moments: usize,
    /// Lower bound (primal objective).
    pub opt: f64,
    pub dual: f64,
    pub status: NcsSolveStatus,
    pub iterations: usize,
    pub t_assemble: f64,
    pub t_solve: f64,
    pub certificate_residual: f64,
}

/// Opaque problem handle.
pub struct NcsProblem {
    inner: Problem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

type Res<T> = Result<T, NcsErrorCode>;

fn fail<T>(code: NcsErrorCode, msg: impl Into<String>) -> Res<T> {
    set_error(msg);
    Err(code)
}

/// Runs `body`, mapping panics to [`NcsErrorCode::Panic`].
fn guard(body: impl FnOnce() -> Res<()>) -> NcsErrorCode {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            NcsErrorCode::Ok
        }
        Ok(Err(code)) => code,
        Err(_) => {
            set_error("internal panic");
            NcsErrorCode::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Res<&'a str> {
    if ptr.is_null() {
        return fail(NcsErrorCode::NullPointer, "null string argument");
    }
    // SAFETY: caller passes a NUL-terminated string valid for this call.
    match unsafe { CStr::from_ptr(ptr) }.to_str() {
        Ok(s) => Ok(s),
        Err(e) => fail(NcsErrorCode::InvalidUtf8, e.to_string()),
    }
}

unsafe fn write_handle(out: *mut *mut NcsProblem, problem: Problem) -> Res<()> {
    if out.is_null() {
        return fail(NcsErrorCode::NullPointer, "null output pointer");
    }
    // SAFETY: `out` is non-null and points to writable storage.
    unsafe { *out = Box::into_raw(Box::new(NcsProblem { inner: problem })) };
    Ok(())
}

fn spec_from(opts: &NcsOptions) -> RelaxationSpec {
    let ext = |e: NcsExtension| match e {
        NcsExtension::Maximal => ExtensionKind::Maximal,
        NcsExtension::MinFill => ExtensionKind::MinFill,
        NcsExtension::MinDegree => ExtensionKind::MinDegree,
    };
    RelaxationSpec {
        mode: match opts.mode {
            NcsMode::Eigen => Mode::Eigen,
            NcsMode::Trace => Mode::Trace,
        },
        sparsity: match opts.sparsity {
            NcsSparsity::Dense => Sparsity::Dense,
            NcsSparsity::Ts => Sparsity::Ts,
            NcsSparsity::Cs => Sparsity::Cs,
            NcsSparsity::CsTs => Sparsity::CsTs,
        },
        order: (opts.order > 0).then_some(opts.order),
        ts_order: if opts.ts_order == 0 { TsOrder::Stabilize } else { TsOrder::Fixed(opts.ts_order) },
        extension: ext(opts.extension),
        csp_extension: ext(opts.csp_extension),
    }
}

fn pipeline_error(e: PipelineError) -> NcsErrorCode {
    let code = match &e {
        PipelineError::Relax(_) => NcsErrorCode::Relaxation,
        PipelineError::Solve(_) => NcsErrorCode::Solver,
        PipelineError::Parse { .. } => NcsErrorCode::Parse,
        PipelineError::Generator(_) => NcsErrorCode::InvalidArgument,
        _ => NcsErrorCode::Io,
    };
    set_error(e.to_string());
    code
}

unsafe fn read_problem<'a>(problem: *const NcsProblem) -> Res<&'a Problem> {
    if problem.is_null() {
        return fail(NcsErrorCode::NullPointer, "null problem handle");
    }
    // SAFETY: non-null handles come from this library and are still live.
    Ok(unsafe { &(*problem).inner })
}

unsafe fn read_options(options: *const NcsOptions) -> Res<NcsOptions> {
    if options.is_null() {
        return Ok(ncs_options_default());
    }
    // SAFETY: non-null and points to an initialized struct.
    let o = unsafe { *options };
    if !(o.tol > 0.0 && o.tol.is_finite()) || o.max_iter == 0 {
        return fail(NcsErrorCode::InvalidArgument, "tol must be positive and max_iter nonzero");
    }
    Ok(o)
}

/// Default options: eigenvalue mode, dense, smallest order, sparse order 1,
/// min-fill extensions, tolerance 1e-6, 200000 iterations.
#[no_mangle]
pub extern "C" fn ncs_options_default() -> NcsOptions {
    let s = Settings::default();
    NcsOptions {
        mode: NcsMode::Eigen,
        sparsity: NcsSparsity::Dense,
        order: 0,
        ts_order: 1,
        extension: NcsExtension::MinFill,
        csp_extension: NcsExtension::MinFill,
        tol: s.tol,
        max_iter: s.max_iter,
    }
}

/// Creates an unconstrained problem from the text of its objective.
///
/// # Safety
/// `objective` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_new(objective: *const c_char, out: *mut *mut NcsProblem) -> NcsErrorCode {
    guard(|| {
        let text = unsafe { read_str(objective) }?;
        let f = parse_poly(text).or_else(|e| fail(NcsErrorCode::Parse, e.to_string()))?;
        unsafe { write_handle(out, Problem::unconstrained(f)) }
    })
}

/// Creates a problem from the problem-file format (`[objective]` and
/// `[constraints]` sections).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_parse(text: *const c_char, out: *mut *mut NcsProblem) -> NcsErrorCode {
    guard(|| {
        let text = unsafe { read_str(text) }?;
        let p = parse_problem(text).or_else(|e| fail(NcsErrorCode::Parse, e.to_string()))?;
        unsafe { write_handle(out, p) }
    })
}

/// Creates a benchmark problem, optionally with the box constraints.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_benchmark(
    name: *const c_char,
    n: usize,
    boxed: bool,
    out: *mut *mut NcsProblem,
) -> NcsErrorCode {
    guard(|| {
        let name = unsafe { read_str(name) }?;
        let f = benchmark(name, n).or_else(|e| fail(NcsErrorCode::InvalidArgument, e.to_string()))?;
        let s = if boxed { box_constraints(n) } else { Vec::new() };
        unsafe { write_handle(out, Problem::new(f, s)) }
    })
}

/// Appends the constraint `g >= 0`.
///
/// # Safety
/// `problem` must be a live handle and `g` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_add_constraint(problem: *mut NcsProblem, g: *const c_char) -> NcsErrorCode {
    guard(|| {
        if problem.is_null() {
            return fail(NcsErrorCode::NullPointer, "null problem handle");
        }
        let text = unsafe { read_str(g) }?;
        let g = parse_poly(text).or_else(|e| fail(NcsErrorCode::Parse, e.to_string()))?;
        // SAFETY: non-null live handle, not aliased during the call.
        let p = unsafe { &mut (*problem).inner };
        let mut constraints = std::mem::take(&mut p.constraints);
        constraints.push(g);
        *p = Problem::new(p.f.clone(), constraints);
        Ok(())
    })
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_num_vars(problem: *const NcsProblem) -> usize {
    unsafe { problem.as_ref() }.map_or(0, |p| p.inner.n)
}

/// Number of constraints, or 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_num_constraints(problem: *const NcsProblem) -> usize {
    unsafe { problem.as_ref() }.map_or(0, |p| p.inner.constraints.len())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `problem` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn ncs_problem_free(problem: *mut NcsProblem) {
    if !problem.is_null() {
        // SAFETY: the handle was created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(problem) });
    }
}

/// Builds and solves the relaxation. `options` may be null for defaults.
///
/// # Safety
/// `problem` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_solve(
    problem: *const NcsProblem,
    options: *const NcsOptions,
    report: *mut NcsReport,
) -> NcsErrorCode {
    guard(|| {
        let p = unsafe { read_problem(problem) }?.clone();
        let opts = unsafe { read_options(options) }?;
        if report.is_null() {
            return fail(NcsErrorCode::NullPointer, "null report pointer");
        }
        let settings = Settings { tol: opts.tol, max_iter: opts.max_iter, ..Settings::default() };
        let out = run_problem(p, &spec_from(&opts), &Backend::Internal, &settings).map_err(pipeline_error)?;
        let sol = out.solution.as_ref().expect("internal backend solves");
        let r = &out.report;
        let status = match sol.status {
            SolveStatus::Optimal => NcsSolveStatus::Optimal,
            SolveStatus::MaxIterations => NcsSolveStatus::MaxIterations,
            SolveStatus::UnboundedSuspected => NcsSolveStatus::UnboundedSuspected,
            SolveStatus::InfeasibleSuspected => NcsSolveStatus::InfeasibleSuspected,
        };
        // SAFETY: non-null and writable.
        unsafe {
            *report = NcsReport {
                n: r.n,
                dhat: r.dhat,
                k: r.k,
                mb: r.mb,
                num_blocks: out.relaxation.sdp.blocks.len(),
                num_moments: r.num_vars,
                opt: sol.primal_objective,
                dual: sol.dual_objective,
                status,
                iterations: sol.iterations,
                t_assemble: r.t_assemble,
                t_solve: r.t_solve,
                certificate_residual: r.certificate_residual.unwrap_or(f64::NAN),
            }
        };
        Ok(())
    })
}

/// Builds the relaxation and writes it to `path` in SDPA sparse format.
///
/// # Safety
/// `problem` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ncs_export_sdpa(
    problem: *const NcsProblem,
    options: *const NcsOptions,
    path: *const c_char,
) -> NcsErrorCode {
    guard(|| {
        let p = unsafe { read_problem(problem) }?.clone();
        let opts = unsafe { read_options(options) }?;
        let path = unsafe { read_str(path) }?;
        let backend = Backend::SdpaExport(path.into());
        run_problem(p, &spec_from(&opts), &backend, &Settings::default()).map_err(pipeline_error)?;
        Ok(())
    })
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ncs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ncs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

//! C ABI for the cspoly toolkit.
//!
//! Polytopes are opaque handles created from constructor expressions (the
//! same grammar as the CLI) or from the vertex text format. Every function
//! returns a [`CspolyStatus`]; on any non-OK status a thread-local message
//! is available through [`cspoly_last_error_message`]. Rich results
//! (conjecture reports, stress reports, the verification table) come back
//! as JSON strings owned by the library; release them with
//! [`cspoly_string_free`].
//!
//! All computation is exact; numeric getters return exact integers, and
//! the one genuinely rational quantity (`alpha`) is returned as a
//! numerator/denominator pair.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use cspoly::flags::{flag_vector, functionals_l1_l2_alpha, g2_toric, s_value, FlagVector};
use cspoly::polytope::{is_centrally_symmetric, FaceLattice, VPolytope};
use cspoly::rigidity::{stress_analysis, triangulate_2_skeleton, FanRoot};

/// Status code of every API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CspolyStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments were structurally invalid (wrong length, bad dimension).
    InvalidArgument = 2,
    /// The expression or file content did not parse.
    ParseError = 3,
    /// The computation itself failed (degenerate input, guard exceeded).
    ComputationError = 4,
    /// The operation requires a centrally symmetric polytope.
    NotCentrallySymmetric = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &cspoly::Error) -> CspolyStatus {
    match err {
        cspoly::Error::Parse { .. } | cspoly::Error::FileFormat { .. } => CspolyStatus::ParseError,
        cspoly::Error::NotCentrallySymmetric => CspolyStatus::NotCentrallySymmetric,
        cspoly::Error::InvalidParameter(_) | cspoly::Error::DimensionMismatch(_) => {
            CspolyStatus::InvalidArgument
        }
        _ => CspolyStatus::ComputationError,
    }
}

/// Opaque polytope handle: the exact vertex data plus lazily computed
/// lattice and flag data, so repeated queries do not recompute.
pub struct CspolyPolytope {
    polytope: VPolytope,
    lattice: OnceLock<FaceLattice>,
    flags: OnceLock<FlagVector>,
}

impl CspolyPolytope {
    fn new(polytope: VPolytope) -> Self {
        CspolyPolytope {
            polytope,
            lattice: OnceLock::new(),
            flags: OnceLock::new(),
        }
    }

    fn lattice(&self) -> Result<&FaceLattice, cspoly::Error> {
        if self.lattice.get().is_none() {
            let lat = self.polytope.face_lattice()?;
            let _ = self.lattice.set(lat);
        }
        Ok(self.lattice.get().expect("just initialized"))
    }

    fn flags(&self) -> Result<&FlagVector, cspoly::Error> {
        if self.flags.get().is_none() {
            let fv = flag_vector(self.lattice()?);
            let _ = self.flags.set(fv);
        }
        Ok(self.flags.get().expect("just initialized"))
    }
}

/// Run a closure, translating panics and errors into status codes.
fn guarded<F: FnOnce() -> Result<CspolyStatus, cspoly::Error>>(f: F) -> CspolyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(err)) => {
            set_error(&err.to_string());
            status_of(&err)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            set_error(&msg);
            CspolyStatus::ComputationError
        }
    }
}

unsafe fn read_handle<'a>(p: *const CspolyPolytope) -> Option<&'a CspolyPolytope> {
    if p.is_null() {
        set_error("null polytope handle");
        None
    } else {
        Some(&*p)
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<CspolyStatus, cspoly::Error> {
    let c = CString::new(s.replace('\0', " ")).unwrap_or_default();
    unsafe { *out = c.into_raw() };
    Ok(CspolyStatus::Ok)
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cspoly_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Build a polytope from a constructor expression such as
/// `slab(cube(4); 1 1 1 1; -2; 2)`.
///
/// # Safety
/// `expr` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_build(
    expr: *const c_char,
    out: *mut *mut CspolyPolytope,
) -> CspolyStatus {
    if expr.is_null() || out.is_null() {
        set_error("null argument to cspoly_polytope_build");
        return CspolyStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(expr).to_str() else {
        set_error("expression is not valid UTF-8");
        return CspolyStatus::ParseError;
    };
    guarded(|| {
        let parsed = cspoly::expr::parse(text)?;
        let polytope = cspoly::expr::build(&parsed)?;
        *out = Box::into_raw(Box::new(CspolyPolytope::new(polytope)));
        Ok(CspolyStatus::Ok)
    })
}

/// Parse a polytope from the vertex text format (`d n` header plus `n`
/// rows of `d` rationals).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_from_text(
    text: *const c_char,
    out: *mut *mut CspolyPolytope,
) -> CspolyStatus {
    if text.is_null() || out.is_null() {
        set_error("null argument to cspoly_polytope_from_text");
        return CspolyStatus::NullArgument;
    }
    let Ok(content) = CStr::from_ptr(text).to_str() else {
        set_error("polytope text is not valid UTF-8");
        return CspolyStatus::ParseError;
    };
    guarded(|| {
        let polytope = cspoly::io::polytope_from_str(content, "<memory>")?;
        *out = Box::into_raw(Box::new(CspolyPolytope::new(polytope)));
        Ok(CspolyStatus::Ok)
    })
}

/// Release a polytope handle. Null is ignored.
///
/// # Safety
/// `p` must come from a cspoly constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_free(p: *mut CspolyPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension of the coordinate space.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_ambient_dim(
    p: *const CspolyPolytope,
    out: *mut usize,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    *out = h.polytope.ambient_dim();
    CspolyStatus::Ok
}

/// Intrinsic (affine-hull) dimension.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_dim(
    p: *const CspolyPolytope,
    out: *mut usize,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    *out = h.polytope.intrinsic_dim();
    CspolyStatus::Ok
}

/// Number of vertices.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_vertex_count(
    p: *const CspolyPolytope,
    out: *mut usize,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    *out = h.polytope.n_vertices();
    CspolyStatus::Ok
}

/// Number of facets.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_facet_count(
    p: *const CspolyPolytope,
    out: *mut usize,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let lat = h.lattice()?;
        *out = lat.layer(lat.dim - 1).len();
        Ok(CspolyStatus::Ok)
    })
}

/// Whether the polytope is centrally symmetric (`P = -P` exactly).
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_is_centrally_symmetric(
    p: *const CspolyPolytope,
    out: *mut bool,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    *out = is_centrally_symmetric(&h.polytope).is_some();
    CspolyStatus::Ok
}

/// Fill `buf` (of length `len`, which must equal the intrinsic dimension)
/// with the f-vector `f_0, ..., f_{d-1}`.
///
/// # Safety
/// `p` must be a live handle; `buf` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_f_vector(
    p: *const CspolyPolytope,
    buf: *mut u64,
    len: usize,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if buf.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let lat = h.lattice()?;
        let f = lat.f_vector();
        if len != f.len() {
            set_error(&format!("f-vector has {} entries, buffer has {len}", f.len()));
            return Ok(CspolyStatus::InvalidArgument);
        }
        for (i, x) in f.iter().enumerate() {
            *buf.add(i) = *x;
        }
        Ok(CspolyStatus::Ok)
    })
}

/// Total number of non-empty faces `s(P)`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_s_value(
    p: *const CspolyPolytope,
    out: *mut u64,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        *out = s_value(h.lattice()?);
        Ok(CspolyStatus::Ok)
    })
}

/// Chain count `f_S` for the strictly increasing dimension set
/// `dims[0..ndims]`.
///
/// # Safety
/// `p` must be a live handle; `dims` must point to `ndims` entries; `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_flag_count(
    p: *const CspolyPolytope,
    dims: *const usize,
    ndims: usize,
    out: *mut u64,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if (dims.is_null() && ndims > 0) || out.is_null() {
        return CspolyStatus::NullArgument;
    }
    let set: Vec<usize> = (0..ndims).map(|i| *dims.add(i)).collect();
    guarded(|| {
        let fv = h.flags()?;
        if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&i| i >= fv.dim()) {
            set_error("dimension set must be strictly increasing and within range");
            return Ok(CspolyStatus::InvalidArgument);
        }
        *out = fv.count(&set);
        Ok(CspolyStatus::Ok)
    })
}

/// The toric `g_2` (an exact integer; requires dimension >= 3).
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_g2_toric(
    p: *const CspolyPolytope,
    out: *mut i64,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let g2 = g2_toric(h.flags()?)?;
        debug_assert!(g2.is_integer());
        *out = i64::try_from(g2.to_integer()).map_err(|_| {
            cspoly::Error::InvalidParameter("g2 exceeds the i64 range".into())
        })?;
        Ok(CspolyStatus::Ok)
    })
}

/// The 4-dimensional functional `alpha = f02 - (3/2)(f1 + f2)` as an exact
/// fraction `num/den` in lowest terms.
///
/// # Safety
/// `p` must be a live handle; `num` and `den` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_alpha(
    p: *const CspolyPolytope,
    num: *mut i64,
    den: *mut i64,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if num.is_null() || den.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let alpha = functionals_l1_l2_alpha(h.flags()?)?.alpha;
        let to_i64 = |x: &cspoly::exact::Int| {
            i64::try_from(x.clone())
                .map_err(|_| cspoly::Error::InvalidParameter("alpha exceeds the i64 range".into()))
        };
        *num = to_i64(alpha.numer())?;
        *den = to_i64(alpha.denom())?;
        Ok(CspolyStatus::Ok)
    })
}

/// Vertex list in the polytope text format; free with
/// [`cspoly_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_polytope_to_text(
    p: *const CspolyPolytope,
    out: *mut *mut c_char,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| give_string(cspoly::io::polytope_to_string(&h.polytope), out))
}

/// Conjecture A/B report as JSON (requires central symmetry); free with
/// [`cspoly_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_conjectures_json(
    p: *const CspolyPolytope,
    out: *mut *mut c_char,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let report = cspoly::hanner::conjecture_report(&h.polytope, &[])?;
        give_string(serde_json::to_string_pretty(&report)?, out)
    })
}

/// Stress report of the triangulated 2-skeleton framework as JSON; free
/// with [`cspoly_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_rigidity_json(
    p: *const CspolyPolytope,
    symmetric: bool,
    out: *mut *mut c_char,
) -> CspolyStatus {
    let Some(h) = read_handle(p) else {
        return CspolyStatus::NullArgument;
    };
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let lat = h.lattice()?;
        let g2 = g2_toric(h.flags()?).ok();
        let fw = triangulate_2_skeleton(&h.polytope, lat, symmetric, FanRoot::Least)?;
        let report = stress_analysis(&fw, g2)?;
        give_string(serde_json::to_string_pretty(&report)?, out)
    })
}

/// Hanner catalog of dimension `d` as CSV; free with
/// [`cspoly_string_free`].
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_hanner_catalog_csv(
    d: usize,
    out: *mut *mut c_char,
) -> CspolyStatus {
    if out.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let catalog = cspoly::hanner::enumerate_hanner(d)?;
        give_string(cspoly::hanner::catalog_csv(&catalog), out)
    })
}

/// Run the whole table-verification harness; the item list is returned as
/// JSON and `all_pass` reports whether every item passed (up to the
/// documented ambiguity whitelist). Free the string with
/// [`cspoly_string_free`].
///
/// # Safety
/// `out` and `all_pass` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cspoly_verify_paper_json(
    out: *mut *mut c_char,
    all_pass: *mut bool,
) -> CspolyStatus {
    if out.is_null() || all_pass.is_null() {
        return CspolyStatus::NullArgument;
    }
    guarded(|| {
        let items = cspoly::verify::verify_paper()?;
        *all_pass = cspoly::verify::overall_pass(&items);
        give_string(cspoly::verify::to_json(&items)?, out)
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a cspoly function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cspoly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

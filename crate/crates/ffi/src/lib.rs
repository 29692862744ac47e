//! C ABI over `hypercert`.
//!
//! Every function returns an [`HcStatus`]. On failure the message is kept in
//! thread-local storage and read with [`hc_last_error`]. Hypergraphs live
//! behind the opaque [`HcHypergraph`] handle; strings returned through out
//! parameters are owned by the caller and released with [`hc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypercert::constructions::Family;
use hypercert::solvers::{max_independent_set, MisOptions};
use hypercert::verify::{Construction, VerifyOptions};
use hypercert::{contains_pattern, Error, Hypergraph, PatternRef, SearchOutcome};

/// Opaque hypergraph handle.
pub struct HcHypergraph(Hypergraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidHypergraph = 4,
    CeilingExceeded = 5,
    Json = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcFamily {
    H2 = 0,
    Hk = 1,
    Jk = 2,
    SudakovG = 3,
    Hf = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcSearch {
    NoCopy = 0,
    Found = 1,
    BudgetExhausted = 2,
}

impl From<HcFamily> for Family {
    fn from(f: HcFamily) -> Family {
        match f {
            HcFamily::H2 => Family::H2,
            HcFamily::Hk => Family::Hk,
            HcFamily::Jk => Family::Jk,
            HcFamily::SudakovG => Family::SudakovG,
            HcFamily::Hf => Family::Hf,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    // interior NULs cannot cross the ABI
    let msg = CString::new(msg.replace('\0', " ")).expect("no NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> HcStatus {
    match e {
        Error::InvalidHypergraph(_)
        | Error::VertexOutOfRange { .. }
        | Error::EmptyVertexSet
        | Error::UniformityMismatch { .. }
        | Error::ConstraintsNeedLabels => HcStatus::InvalidHypergraph,
        Error::CeilingExceeded { .. } => HcStatus::CeilingExceeded,
        Error::Json(_) => HcStatus::Json,
        Error::InvalidParameter(_)
        | Error::ChargingInconclusive { .. }
        | Error::Unchargeable(_) => HcStatus::InvalidArgument,
        Error::Io(_) => HcStatus::Internal,
    }
}

struct Fail(HcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `body`, recording any error or panic; never unwinds across the ABI.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            HcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HcStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(HcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(HcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(h: *const HcHypergraph) -> Result<&'a Hypergraph, Fail> {
    h.as_ref().map(|h| &h.0).ok_or_else(|| null("hypergraph"))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(text: String) -> Result<*mut c_char, Fail> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|_| Fail(HcStatus::Internal, "string contains NUL".into()))
}

fn boxed(h: Hypergraph) -> *mut HcHypergraph {
    Box::into_raw(Box::new(HcHypergraph(h)))
}

/// Builds a construction. `k` is ignored for H2 and Hf.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn hc_build(
    family: HcFamily,
    k: usize,
    n: usize,
    out: *mut *mut HcHypergraph,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let h = Construction::new(family.into(), k, n)?.build()?;
        put(out, boxed(h), "out")
    })
}

/// Parses and validates hypergraph JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hc_from_json(
    json: *const c_char,
    out: *mut *mut HcHypergraph,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let h = Hypergraph::from_json(read_str(json, "json")?)?;
        put(out, boxed(h), "out")
    })
}

/// Serializes a hypergraph; free the result with [`hc_string_free`].
///
/// # Safety
/// `h` must come from this library; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hc_to_json(h: *const HcHypergraph, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let json = handle(h)?.to_json();
        if out.is_null() {
            return Err(null("out"));
        }
        put(out, owned_string(json)?, "out")
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hc_free(h: *mut HcHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Vertex count, edge count and uniformity. Any out pointer may be null.
///
/// # Safety
/// `h` must come from this library; non-null outs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_counts(
    h: *const HcHypergraph,
    num_vertices: *mut usize,
    num_edges: *mut usize,
    uniformity: *mut usize,
) -> HcStatus {
    guard(|| {
        let h = handle(h)?;
        for (out, v) in [
            (num_vertices, h.num_vertices()),
            (num_edges, h.num_edges()),
            (uniformity, h.uniformity()),
        ] {
            if !out.is_null() {
                out.write(v);
            }
        }
        Ok(())
    })
}

/// Exact independence number; fails with `CeilingExceeded` above `ceiling`
/// vertices.
///
/// # Safety
/// `h` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_alpha(
    h: *const HcHypergraph,
    ceiling: usize,
    out: *mut u64,
) -> HcStatus {
    guard(|| {
        let r = max_independent_set(handle(h)?, &MisOptions { ceiling })?;
        put(out, r.optimum, "out")
    })
}

/// Searches for a pattern given in text form (`k4minus`, `tk:3`, `path:4`, ...).
/// `budget == 0` means unbounded. When `witness_json` is non-null it receives
/// the witness JSON on `Found` and null otherwise.
///
/// # Safety
/// `h` must come from this library, `pattern` must be NUL-terminated, and
/// `out` plus a non-null `witness_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_contains_pattern(
    h: *const HcHypergraph,
    pattern: *const c_char,
    budget: u64,
    out: *mut HcSearch,
    witness_json: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let h = handle(h)?;
        let p = read_str(pattern, "pattern")?
            .parse::<PatternRef>()?
            .build()?;
        if out.is_null() {
            return Err(null("out"));
        }
        let outcome = contains_pattern(h, &p, (budget > 0).then_some(budget))?;
        let (kind, witness) = match &outcome {
            SearchOutcome::NoCopy => (HcSearch::NoCopy, None),
            SearchOutcome::Found(w) => (HcSearch::Found, Some(w)),
            SearchOutcome::BudgetExhausted => (HcSearch::BudgetExhausted, None),
        };
        if !witness_json.is_null() {
            let text = match witness {
                Some(w) => owned_string(serde_json::to_string(w).map_err(Error::from)?)?,
                None => ptr::null_mut(),
            };
            witness_json.write(text);
        }
        put(out, kind, "out")
    })
}

/// Runs a construction's claim suite and returns the report JSON. With
/// `timing == false` the report carries no elapsed times and is
/// byte-for-byte reproducible.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_report_json(
    family: HcFamily,
    k: usize,
    n: usize,
    seed: u64,
    timing: bool,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let options = VerifyOptions {
            seed,
            timing,
            ..Default::default()
        };
        let report = Construction::new(family.into(), k, n)?.verify(&options)?;
        put(out, owned_string(report.to_json())?, "out")
    })
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

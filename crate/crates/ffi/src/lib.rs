//! C interface to `ftsurf`.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every fallible call returns an [`FtsStatus`]; on failure a message is
//! kept per thread and read with [`fts_last_error`]. Strings handed out by
//! the library are freed with [`fts_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ftsurf::classify::{self, Classification, ClassifyOptions};
use ftsurf::graph::{self, CubicGraph};
use ftsurf::surface::{self, SimplicialSurface};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    OutOfRange = 5,
    Panic = 6,
}

pub struct FtsSurface(SimplicialSurface);
pub struct FtsGraph(CubicGraph);
pub struct FtsClassification(Classification);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let c = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Res<T> = Result<T, (FtsStatus, String)>;

fn guard(f: impl FnOnce() -> Res<()>) -> FtsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FtsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FtsStatus::Panic
        }
    }
}

fn null() -> (FtsStatus, String) {
    (FtsStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Res<&'a str> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|e| (FtsStatus::InvalidUtf8, e.to_string()))
}

unsafe fn obj<'a, T>(p: *const T) -> Res<&'a T> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Res<()> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn c_string(s: impl Into<Vec<u8>>) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn fts_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a surface from JSON, either `{"faces": [...]}` or a bare face list.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_parse(json: *const c_char, out: *mut *mut FtsSurface) -> FtsStatus {
    guard(|| {
        let text = str_arg(json)?;
        let x = SimplicialSurface::parse(text).map_err(|e| (FtsStatus::Parse, e.to_string()))?;
        put(out, boxed(FtsSurface(x)))
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_free(s: *mut FtsSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live surface handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_counts(
    s: *const FtsSurface,
    vertices: *mut usize,
    edges: *mut usize,
    faces: *mut usize,
) -> FtsStatus {
    guard(|| {
        let x = &obj(s)?.0;
        put(vertices, x.num_vertices())?;
        put(edges, x.num_edges())?;
        put(faces, x.num_faces())
    })
}

/// # Safety
/// `s` must be a live surface handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_topology(s: *const FtsSurface, chi: *mut i64, orientable: *mut bool) -> FtsStatus {
    guard(|| {
        let x = &obj(s)?.0;
        put(chi, x.euler_characteristic())?;
        put(orientable, x.is_orientable())
    })
}

/// Order of the automorphism group, saturating at `UINT64_MAX`.
///
/// # Safety
/// `s` must be a live surface handle and `order` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_automorphism_order(s: *const FtsSurface, order: *mut u64) -> FtsStatus {
    guard(|| {
        let x = &obj(s)?.0;
        put(order, u64::try_from(x.automorphism_order()).unwrap_or(u64::MAX))
    })
}

/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_is_face_transitive(s: *const FtsSurface, out: *mut bool) -> FtsStatus {
    guard(|| put(out, obj(s)?.0.is_face_transitive()))
}

/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_is_minimal(s: *const FtsSurface, out: *mut bool) -> FtsStatus {
    guard(|| put(out, surface::is_minimal(&obj(s)?.0)))
}

/// Subtype tag such as `"(2,1).3"`. Fails with `FTS_STATUS_INVALID_INPUT`
/// if the surface is not face-transitive.
///
/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_subtype(s: *const FtsSurface, out: *mut *mut c_char) -> FtsStatus {
    guard(|| {
        let t = classify::subtype_of(&obj(s)?.0).map_err(|e| (FtsStatus::InvalidInput, e.to_string()))?;
        put(out, c_string(t.to_string()))
    })
}

/// Isomorphism-invariant identifier of the surface.
///
/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_canonical_id(s: *const FtsSurface, out: *mut *mut c_char) -> FtsStatus {
    guard(|| put(out, c_string(obj(s)?.0.canonical_form().id())))
}

/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_to_json(s: *const FtsSurface, out: *mut *mut c_char) -> FtsStatus {
    guard(|| put(out, c_string(obj(s)?.0.to_json())))
}

/// # Safety
/// `s` must be a live surface handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_surface_face_graph(s: *const FtsSurface, out: *mut *mut FtsGraph) -> FtsStatus {
    guard(|| put(out, boxed(FtsGraph(obj(s)?.0.face_graph()))))
}

/// Parse a cubic graph from an edge list, graph6 or sparse6 text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_graph_parse(text: *const c_char, out: *mut *mut FtsGraph) -> FtsStatus {
    guard(|| {
        let g = CubicGraph::parse(str_arg(text)?).map_err(|e| (FtsStatus::Parse, e.to_string()))?;
        put(out, boxed(FtsGraph(g)))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fts_graph_free(g: *mut FtsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_graph_order(g: *const FtsGraph, out: *mut usize) -> FtsStatus {
    guard(|| put(out, obj(g)?.0.order()))
}

/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_graph_to_graph6(g: *const FtsGraph, out: *mut *mut c_char) -> FtsStatus {
    guard(|| put(out, c_string(obj(g)?.0.to_graph6())))
}

/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_graph_is_node_transitive(g: *const FtsGraph, out: *mut bool) -> FtsStatus {
    guard(|| put(out, graph::is_node_transitive(&obj(g)?.0)))
}

/// All face-transitive surfaces with face graph `g`. `max_aut` caps the
/// automorphism group order; 0 means the library default. A skipped graph
/// still yields a handle, with no results and a reason.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_classify(g: *const FtsGraph, max_aut: u64, out: *mut *mut FtsClassification) -> FtsStatus {
    guard(|| {
        let g = &obj(g)?.0;
        let mut opts = ClassifyOptions::default();
        if max_aut != 0 {
            opts.max_aut = max_aut.into();
        }
        put(out, boxed(FtsClassification(classify::classify_graph(g, &opts))))
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fts_classification_free(c: *mut FtsClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live classification handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_classification_len(c: *const FtsClassification, out: *mut usize) -> FtsStatus {
    guard(|| put(out, obj(c)?.0.results().len()))
}

/// Writes the skip reason, or NULL if the graph was classified.
///
/// # Safety
/// `c` must be a live classification handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_classification_skip_reason(
    c: *const FtsClassification,
    out: *mut *mut c_char,
) -> FtsStatus {
    guard(|| match &obj(c)?.0 {
        Classification::Skipped(r) => put(out, c_string(r.to_string())),
        Classification::Done(_) => put(out, ptr::null_mut()),
    })
}

unsafe fn result_at<'a>(c: *const FtsClassification, i: usize) -> Res<&'a classify::ConstructionResult> {
    let all = obj(c)?.0.results();
    let n = all.len();
    all.get(i).ok_or_else(|| (FtsStatus::OutOfRange, format!("index {i} out of range (len {n})")))
}

/// Copy of the `i`-th surface, owned by the caller.
///
/// # Safety
/// `c` must be a live classification handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_classification_surface(
    c: *const FtsClassification,
    i: usize,
    out: *mut *mut FtsSurface,
) -> FtsStatus {
    guard(|| {
        let r = result_at(c, i)?;
        put(out, boxed(FtsSurface(r.surface.clone())))
    })
}

/// # Safety
/// `c` must be a live classification handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fts_classification_subtype(
    c: *const FtsClassification,
    i: usize,
    out: *mut *mut c_char,
) -> FtsStatus {
    guard(|| {
        let r = result_at(c, i)?;
        put(out, c_string(r.subtype.to_string()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_are_reported() {
        let mut s = ptr::null_mut();
        let status = unsafe { fts_surface_parse(c"[[1,2,3]]".as_ptr(), &mut s) };
        assert_eq!(status, FtsStatus::Parse);
        assert!(s.is_null());
        let msg = unsafe { CStr::from_ptr(fts_last_error()) }.to_str().unwrap();
        assert!(!msg.is_empty());
        assert_eq!(unsafe { fts_surface_parse(ptr::null(), &mut s) }, FtsStatus::NullPointer);
    }
}

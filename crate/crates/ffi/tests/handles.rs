use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use ftsurf_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { fts_string_free(s) };
    out
}

fn fixture(name: &str) -> CString {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.txt"));
    CString::new(std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn surface_queries() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(fts_surface_parse(fixture("x22").as_ptr(), &mut s), FtsStatus::Ok);
        let (mut v, mut e, mut f) = (0, 0, 0);
        assert_eq!(fts_surface_counts(s, &mut v, &mut e, &mut f), FtsStatus::Ok);
        assert_eq!((v, e, f), (7, 15, 10));
        let (mut chi, mut orientable) = (0, false);
        assert_eq!(fts_surface_topology(s, &mut chi, &mut orientable), FtsStatus::Ok);
        assert_eq!((chi, orientable), (2, true));
        let mut t = ptr::null_mut();
        assert_eq!(fts_surface_subtype(s, &mut t), FtsStatus::Ok);
        assert_eq!(take(t), "(2,2)");
        let mut ft = false;
        assert_eq!(fts_surface_is_face_transitive(s, &mut ft), FtsStatus::Ok);
        assert!(ft);
        let mut json = ptr::null_mut();
        assert_eq!(fts_surface_to_json(s, &mut json), FtsStatus::Ok);
        let json = CString::new(take(json)).unwrap();
        let mut s2 = ptr::null_mut();
        assert_eq!(fts_surface_parse(json.as_ptr(), &mut s2), FtsStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        fts_surface_canonical_id(s, &mut a);
        fts_surface_canonical_id(s2, &mut b);
        assert_eq!(take(a), take(b));
        fts_surface_free(s2);
        fts_surface_free(s);
    }
}

#[test]
fn tetrahedron_minimal() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(fts_surface_parse(c"[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]".as_ptr(), &mut s), FtsStatus::Ok);
        let mut order = 0;
        fts_surface_automorphism_order(s, &mut order);
        assert_eq!(order, 24);
        let mut minimal = false;
        fts_surface_is_minimal(s, &mut minimal);
        assert!(minimal);
        fts_surface_free(s);
    }
}

#[test]
fn classify_face_graph() {
    unsafe {
        let mut s = ptr::null_mut();
        fts_surface_parse(fixture("x13").as_ptr(), &mut s);
        let mut g = ptr::null_mut();
        assert_eq!(fts_surface_face_graph(s, &mut g), FtsStatus::Ok);
        let mut n = 0;
        fts_graph_order(g, &mut n);
        assert_eq!(n, 14);
        let mut g6 = ptr::null_mut();
        fts_graph_to_graph6(g, &mut g6);
        let g6 = CString::new(take(g6)).unwrap();
        let mut g2 = ptr::null_mut();
        assert_eq!(fts_graph_parse(g6.as_ptr(), &mut g2), FtsStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(fts_classify(g2, 0, &mut c), FtsStatus::Ok);
        let mut reason = ptr::null_mut();
        fts_classification_skip_reason(c, &mut reason);
        assert!(reason.is_null());
        let mut len = 0;
        fts_classification_len(c, &mut len);
        let mut id = ptr::null_mut();
        fts_surface_canonical_id(s, &mut id);
        let id = take(id);
        let mut found = false;
        for i in 0..len {
            let (mut t, mut x, mut xid) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
            assert_eq!(fts_classification_subtype(c, i, &mut t), FtsStatus::Ok);
            assert_eq!(fts_classification_surface(c, i, &mut x), FtsStatus::Ok);
            fts_surface_canonical_id(x, &mut xid);
            if take(xid) == id {
                assert_eq!(take(t), "(1,3).1");
                found = true;
            } else {
                fts_string_free(t);
            }
            fts_surface_free(x);
        }
        assert!(found);
        let mut x = ptr::null_mut();
        assert_eq!(fts_classification_surface(c, len, &mut x), FtsStatus::OutOfRange);
        assert!(x.is_null());
        fts_classification_free(c);
        fts_graph_free(g2);
        fts_graph_free(g);
        fts_surface_free(s);
    }
}

#[test]
fn skipped_graph() {
    // G(9,3), 1-based edge list
    let mut edges = String::from("18 27\n");
    for i in 0..9u32 {
        edges += &format!("{} {}\n{} {}\n{} {}\n", i + 1, (i + 1) % 9 + 1, i + 1, i + 10, i + 10, (i + 3) % 9 + 10);
    }
    let text = CString::new(edges).unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fts_graph_parse(text.as_ptr(), &mut g), FtsStatus::Ok, "{:?}", CStr::from_ptr(fts_last_error()));
        let mut nt = true;
        fts_graph_is_node_transitive(g, &mut nt);
        assert!(!nt);
        let mut c = ptr::null_mut();
        fts_classify(g, 0, &mut c);
        let mut reason = ptr::null_mut();
        fts_classification_skip_reason(c, &mut reason);
        assert_eq!(take(reason), "not node-transitive");
        let mut len = 1;
        fts_classification_len(c, &mut len);
        assert_eq!(len, 0);
        fts_classification_free(c);
        fts_graph_free(g);
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fts_graph_parse(c"4 6\n0 1\n".as_ptr(), &mut g), FtsStatus::Parse);
        assert!(!fts_last_error().is_null());
        let bad = [0xffu8, 0];
        assert_eq!(fts_graph_parse(bad.as_ptr().cast(), &mut g), FtsStatus::InvalidUtf8);
        let mut n = 0;
        assert_eq!(fts_graph_order(ptr::null(), &mut n), FtsStatus::NullPointer);
        let mut s = ptr::null_mut();
        fts_surface_parse(c"[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]".as_ptr(), &mut s);
        assert_eq!(fts_surface_counts(s, ptr::null_mut(), &mut n, &mut n), FtsStatus::NullPointer);
        fts_surface_free(s);
        fts_string_free(ptr::null_mut());
        fts_surface_free(ptr::null_mut());
    }
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ftsurf.h")).unwrap();
    for f in
        ["fts_surface_parse", "fts_classify", "fts_classification_surface", "fts_last_error", "FTS_STATUS_OUT_OF_RANGE"]
    {
        assert!(header.contains(f), "{f}");
    }
    assert!(header.contains("typedef struct FtsSurface FtsSurface;"));
}

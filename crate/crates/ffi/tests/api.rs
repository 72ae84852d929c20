use std::ffi::{c_char, CStr, CString};
use std::ptr;

use wild_mckay_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    wm_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = wm_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_string_lossy().into_owned()
}

#[test]
fn m_st_round_trip() {
    unsafe {
        let dims = [3u64];
        let mut rep = ptr::null_mut();
        assert_eq!(wm_rep_new(3, dims.as_ptr(), dims.len(), &mut rep), WmStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(wm_m_st(rep, &mut v), WmStatus::Ok);
        assert!(wm_last_error().is_null());

        let mut s = ptr::null_mut();
        assert_eq!(wm_value_to_string(v, &mut s), WmStatus::Ok);
        assert_eq!(take(s), "L^3 + 2*L^2");
        assert_eq!(wm_value_to_json(v, &mut s), WmStatus::Ok);
        assert_eq!(take(s), r#"{"scale":1,"num":[[2,2],[3,1]],"den":[[0,1]]}"#);
        assert_eq!(wm_value_euler_char(v, &mut s), WmStatus::Ok);
        assert_eq!(take(s), "3/1");
        assert_eq!(wm_value_point_count(v, 2, &mut s), WmStatus::Ok);
        assert_eq!(take(s), "16/1");

        wm_value_free(v);
        wm_rep_free(rep);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let dims = [2u64, 2];
        let mut rep = ptr::null_mut();
        assert_eq!(wm_rep_new(4, dims.as_ptr(), 2, &mut rep), WmStatus::InvalidArgument);
        assert!(rep.is_null());
        assert!(last_error().contains("not prime"));

        assert_eq!(wm_rep_new(3, dims.as_ptr(), 2, &mut rep), WmStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(wm_m_st(rep, &mut v), WmStatus::Precondition);
        assert!(v.is_null());
        assert!(last_error().contains("D_V"));
        wm_rep_free(rep);

        assert_eq!(wm_m_st(ptr::null(), &mut v), WmStatus::NullArgument);
        assert_eq!(wm_rep_new(3, ptr::null(), 0, &mut rep), WmStatus::NullArgument);
        assert_eq!(last_error(), "dims must not be null");

        wm_rep_free(ptr::null_mut());
        wm_value_free(ptr::null_mut());
        wm_string_free(ptr::null_mut());
    }
}

#[test]
fn covers_and_verify() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(wm_covers_count(2, 3, true, &mut s), WmStatus::Ok);
        assert_eq!(take(s), "4");
        assert_eq!(wm_covers_count(2, 0, true, &mut s), WmStatus::Precondition);

        let series = CString::new("-4:1,-3:1+y,0:y").unwrap();
        assert_eq!(wm_covers_reduce(2, 4, series.as_ptr(), &mut s), WmStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["rep"], "(1+y)*t^-3 + t^-1");
        assert_eq!(v["jump"], 3);
        let bad = CString::new("-1:banana").unwrap();
        assert_eq!(wm_covers_reduce(2, 4, bad.as_ptr(), &mut s), WmStatus::InvalidArgument);

        let mut ok = false;
        assert_eq!(wm_verify_v3(7, &mut ok), WmStatus::Ok);
        assert!(ok);
        assert_eq!(wm_verify_v3(2, &mut ok), WmStatus::InvalidArgument);
        assert!(!ok);
    }
}

#[test]
fn last_error_is_per_thread() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(wm_rep_new(6, [1u64].as_ptr(), 1, &mut rep), WmStatus::InvalidArgument);
        std::thread::spawn(|| assert!(wm_last_error().is_null())).join().unwrap();
        assert!(!wm_last_error().is_null());
    }
}

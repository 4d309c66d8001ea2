//! Exercises the C entry points exactly as a C caller would: raw pointers
//! in, status codes out, explicit frees.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use multiseg_capi::{
    mseg_compose_json, mseg_dual, mseg_handle_free, mseg_oracle_json, mseg_parse_json, mseg_speh,
    mseg_status_name, mseg_string_free, mseg_to_json, MsegHandle, MsegStatus,
};

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let text = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { mseg_string_free(p) };
    text
}

#[test]
fn speh_dual_round_trip() {
    let shift = CString::new("1/2").unwrap();
    let mut h: *mut MsegHandle = ptr::null_mut();
    let status = unsafe { mseg_speh(3, 2, shift.as_ptr(), ptr::null(), &mut h) };
    assert_eq!(status, MsegStatus::Ok);

    let mut dual: *mut MsegHandle = ptr::null_mut();
    assert_eq!(unsafe { mseg_dual(h, false, &mut dual) }, MsegStatus::Ok);

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { mseg_to_json(dual, &mut json) }, MsegStatus::Ok);
    let text = take_string(json);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // The transpose of a 3×2 Speh parameter is the 2×3 one.
    assert_eq!(v["segments"].as_array().unwrap().len(), 2);

    // And parsing the JSON back gives a handle serializing identically.
    let c_text = CString::new(text.clone()).unwrap();
    let mut reparsed: *mut MsegHandle = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_parse_json(c_text.as_ptr(), &mut reparsed) },
        MsegStatus::Ok
    );
    let mut json2: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { mseg_to_json(reparsed, &mut json2) }, MsegStatus::Ok);
    assert_eq!(take_string(json2), text);

    unsafe {
        mseg_handle_free(h);
        mseg_handle_free(dual);
        mseg_handle_free(reparsed);
    }
}

#[test]
fn dual_is_an_involution_through_the_abi() {
    let mut h: *mut MsegHandle = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_speh(2, 3, ptr::null(), ptr::null(), &mut h) },
        MsegStatus::Ok
    );
    let mut once: *mut MsegHandle = ptr::null_mut();
    let mut twice: *mut MsegHandle = ptr::null_mut();
    unsafe {
        assert_eq!(mseg_dual(h, true, &mut once), MsegStatus::Ok);
        assert_eq!(mseg_dual(once, true, &mut twice), MsegStatus::Ok);
    }
    let (mut a, mut b): (*mut c_char, *mut c_char) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(mseg_to_json(h, &mut a), MsegStatus::Ok);
        assert_eq!(mseg_to_json(twice, &mut b), MsegStatus::Ok);
    }
    assert_eq!(take_string(a), take_string(b));
    unsafe {
        mseg_handle_free(h);
        mseg_handle_free(once);
        mseg_handle_free(twice);
    }
}

#[test]
fn compose_report_crosses_as_json() {
    let mut json: *mut c_char = ptr::null_mut();
    let status =
        unsafe { mseg_compose_json(1, 1, 1, false, false, ptr::null(), &mut json) };
    assert_eq!(status, MsegStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["length"], 2);

    // Langlands flavour runs its internal involution self-check.
    let mut l_json: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_compose_json(2, 2, 2, true, true, ptr::null(), &mut l_json) },
        MsegStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(l_json)).unwrap();
    assert_eq!(v["basis"], "L");
    assert_eq!(v["length"], 3);
}

#[test]
fn oracle_crosses_as_json_and_respects_the_cap() {
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_oracle_json(2, 2, 2, 0, ptr::null(), &mut json) },
        MsegStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);

    let mut blocked: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_oracle_json(3, 3, 1, 2, ptr::null(), &mut blocked) },
        MsegStatus::ClosureTooLarge
    );
    assert!(blocked.is_null());
}

#[test]
fn error_paths_report_stable_codes() {
    // Null inputs.
    let mut h: *mut MsegHandle = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_parse_json(ptr::null(), &mut h) },
        MsegStatus::NullPointer
    );
    assert_eq!(
        unsafe { mseg_dual(ptr::null(), false, &mut h) },
        MsegStatus::NullPointer
    );

    // Malformed JSON.
    let bad = CString::new("{\"line\": \"rho\", \"segments\": [{\"b\": \"2\", \"e\": \"0\"}]}")
        .unwrap();
    assert_eq!(
        unsafe { mseg_parse_json(bad.as_ptr(), &mut h) },
        MsegStatus::Parse
    );

    // Zero dimensions.
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { mseg_compose_json(0, 1, 1, false, false, ptr::null(), &mut json) },
        MsegStatus::OutOfRange
    );

    // Status names are stable, static strings.
    let name = unsafe { CStr::from_ptr(mseg_status_name(6)) };
    assert_eq!(name.to_str().unwrap(), "ClosureTooLarge");
    let unknown = unsafe { CStr::from_ptr(mseg_status_name(-7)) };
    assert_eq!(unknown.to_str().unwrap(), "Unknown");
}

#[test]
fn freeing_null_is_a_no_op() {
    unsafe {
        mseg_handle_free(ptr::null_mut());
        mseg_string_free(ptr::null_mut());
    }
}

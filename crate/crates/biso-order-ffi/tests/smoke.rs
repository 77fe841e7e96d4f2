//! Exercises the C ABI through the exported extern "C" functions, the way
//! a foreign binding would.

use biso_order_ffi::*;
use std::ffi::CStr;
use std::ptr;

fn make(f: impl FnOnce(*mut *mut BoChannel) -> BoStatus) -> *mut BoChannel {
    let mut ch: *mut BoChannel = ptr::null_mut();
    assert_eq!(f(&mut ch), BoStatus::Ok);
    assert!(!ch.is_null());
    ch
}

#[test]
fn version_and_status_messages() {
    unsafe {
        let v = CStr::from_ptr(bo_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
        let msg = CStr::from_ptr(bo_status_message(BoStatus::UnitAlpha))
            .to_str()
            .unwrap();
        assert!(msg.contains("alpha = 1"));
    }
}

#[test]
fn capacity_through_the_boundary() {
    unsafe {
        let ch = make(|out| bo_channel_bsc(0.1, out));
        assert_eq!(bo_channel_pair_count(ch), 1);
        let (mut c, mut d) = (0.0, 0.0);
        assert_eq!(bo_alpha_capacity(ch, 2.0, &mut c, &mut d), BoStatus::Ok);
        assert!((c - 0.49469624183610694).abs() < 1e-12);
        assert!((d - 0.9055385138137416).abs() < 1e-12);
        // Shannon branch leaves d_c unset
        assert_eq!(bo_alpha_capacity(ch, 1.0, &mut c, &mut d), BoStatus::Ok);
        assert!((c - 0.3680642071684971).abs() < 1e-12);
        assert!(d.is_nan());
        bo_channel_free(ch);
    }
}

#[test]
fn mi_variants_agree_at_half() {
    unsafe {
        let ch = make(|out| bo_channel_bec(0.3, out));
        let (mut s, mut a, mut sh) = (0.0, 0.0, 0.0);
        assert_eq!(bo_sibson_mi(ch, 0.5, 2.0, &mut s), BoStatus::Ok);
        assert_eq!(bo_arimoto_mi(ch, 0.5, 2.0, &mut a), BoStatus::Ok);
        assert_eq!(bo_shannon_mi(ch, 0.5, &mut sh), BoStatus::Ok);
        assert_eq!(s, a);
        assert!((sh - 0.48520302639196167).abs() < 1e-12);
        bo_channel_free(ch);
    }
}

#[test]
fn json_parsing_and_errors() {
    unsafe {
        let mut ch: *mut BoChannel = ptr::null_mut();
        let good = c"{\"pairs\":[[0.9,0.1]]}";
        assert_eq!(bo_channel_parse_json(good.as_ptr(), &mut ch), BoStatus::Ok);
        assert_eq!(bo_channel_pair_count(ch), 1);
        bo_channel_free(ch);

        let bad_mass = c"{\"pairs\":[[0.6,0.1]]}";
        let mut out: *mut BoChannel = ptr::null_mut();
        assert_eq!(
            bo_channel_parse_json(bad_mass.as_ptr(), &mut out),
            BoStatus::ValidationError
        );
        let not_json = c"nope";
        assert_eq!(
            bo_channel_parse_json(not_json.as_ptr(), &mut out),
            BoStatus::ParseError
        );
        assert_eq!(
            bo_channel_parse_json(ptr::null(), &mut out),
            BoStatus::NullArgument
        );
    }
}

#[test]
fn domain_and_null_errors() {
    unsafe {
        let mut out: *mut BoChannel = ptr::null_mut();
        assert_eq!(bo_channel_bsc(0.7, &mut out), BoStatus::DomainError);
        assert_eq!(bo_channel_bsc(-0.1, &mut out), BoStatus::DomainError);

        let ch = make(|o| bo_channel_bsc(0.1, o));
        let mut v = 0.0;
        assert_eq!(bo_sibson_mi(ch, 0.5, -2.0, &mut v), BoStatus::DomainError);
        assert_eq!(bo_sibson_mi(ch, 1.5, 2.0, &mut v), BoStatus::DomainError);
        assert_eq!(
            bo_sibson_mi(ptr::null(), 0.5, 2.0, &mut v),
            BoStatus::NullArgument
        );
        let mut curve: *mut BoLorenz = ptr::null_mut();
        assert_eq!(bo_lorenz_new(ch, 1.0, &mut curve), BoStatus::UnitAlpha);
        bo_channel_free(ch);
    }
}

#[test]
fn comparison_and_calibration_pipeline() {
    unsafe {
        // calibrate a BSC to the capacity of bec(0.3) at alpha 2
        let bec = make(|o| bo_channel_bec(0.3, o));
        let (mut c, mut p) = (0.0, 0.0);
        assert_eq!(
            bo_alpha_capacity(bec, 2.0, &mut c, ptr::null_mut()),
            BoStatus::Ok
        );
        assert_eq!(bo_calibrate(BoFamily::Bsc, c, 2.0, &mut p), BoStatus::Ok);
        assert!((p - 0.09257832157680296).abs() < 1e-9);
        let bsc = make(|o| bo_channel_bsc(p, o));

        let mut verdict = BoVerdict::Inconclusive;
        let (mut gap, mut witness) = (0.0, 0.0);
        assert_eq!(
            bo_compare_grid(bec, bsc, 2.0, 1001, &mut verdict, &mut gap, &mut witness),
            BoStatus::Ok
        );
        assert_eq!(verdict, BoVerdict::FirstMoreCapable);
        assert!(gap >= -1e-9);
        assert!((0.0..=0.5).contains(&witness));

        let mut cap_gap = 0.0;
        assert_eq!(
            bo_compare_sufficient(bec, bsc, 0.4, &mut verdict, &mut cap_gap),
            BoStatus::Ok
        );
        // capacities were matched at alpha 2, not 0.4
        assert_eq!(verdict, BoVerdict::Inconclusive);

        let mut holds = 0;
        assert_eq!(bo_extremal_sandwich(bec, 2.0, 501, &mut holds), BoStatus::Ok);
        assert_eq!(holds, 1);

        bo_channel_free(bsc);
        bo_channel_free(bec);
    }
}

#[test]
fn lorenz_accessors() {
    unsafe {
        let ch = make(|o| bo_channel_bec(0.3, o));
        let mut curve: *mut BoLorenz = ptr::null_mut();
        assert_eq!(bo_lorenz_new(ch, 2.0, &mut curve), BoStatus::Ok);
        assert_eq!(bo_lorenz_segment_count(curve), 2);
        let d_c = bo_lorenz_d_c(curve);
        assert!((d_c - 0.9121320343559642).abs() < 1e-12);

        let mut t = 0.0;
        assert_eq!(bo_lorenz_breakpoint(curve, 1, &mut t), BoStatus::Ok);
        assert!((t - 0.7).abs() < 1e-12);
        assert_eq!(bo_lorenz_breakpoint(curve, 9, &mut t), BoStatus::UsageError);

        let mut f = 0.0;
        assert_eq!(bo_lorenz_step(curve, 0, &mut f), BoStatus::Ok);
        assert!((f - 1.0).abs() < 1e-12);

        let mut v = 0.0;
        assert_eq!(bo_lorenz_eval(curve, d_c, &mut v), BoStatus::Ok);
        assert!((v - 1.0).abs() < 1e-10);
        assert_eq!(bo_lorenz_eval(curve, -0.5, &mut v), BoStatus::DomainError);

        bo_lorenz_free(curve);
        bo_channel_free(ch);
    }
}

#[test]
fn random_channels_are_deterministic_across_the_boundary() {
    unsafe {
        let a = make(|o| bo_channel_random(3, 42, o));
        let b = make(|o| bo_channel_random(3, 42, o));
        let (mut ca, mut cb) = (0.0, 0.0);
        assert_eq!(
            bo_alpha_capacity(a, 2.0, &mut ca, ptr::null_mut()),
            BoStatus::Ok
        );
        assert_eq!(
            bo_alpha_capacity(b, 2.0, &mut cb, ptr::null_mut()),
            BoStatus::Ok
        );
        assert_eq!(ca, cb);
        bo_channel_free(a);
        bo_channel_free(b);
    }
}

#[test]
fn generated_header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/biso_order.h");
    assert!(
        std::path::Path::new(header).exists(),
        "cbindgen header missing"
    );
    // compile-check the header when a C compiler is around
    let cc = ["cc", "gcc", "clang"]
        .iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok());
    if let Some(cc) = cc {
        let out = std::process::Command::new(cc)
            .args(["-x", "c", "-std=c99", "-fsyntax-only", header])
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "header does not compile: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

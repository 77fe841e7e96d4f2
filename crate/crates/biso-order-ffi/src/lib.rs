//! C ABI for the biso-order library.
//!
//! Channels and Lorenz curves cross the boundary as opaque handles; every
//! fallible function returns a [`BoStatus`] and writes its outputs through
//! pointers only on success. All functions are safe to call from multiple
//! threads as long as each handle is freed exactly once and not used
//! afterwards. Panics are caught at the boundary and surfaced as
//! `BO_STATUS_INTERNAL_PANIC`.

use biso_order::{
    alpha_capacity, arimoto_mi, calibrate, extremality_report, more_capable_grid, shannon_mi,
    sibson_mi, sufficient_condition, AlphaParam, BisoChannel, ComparisonReport, Error, Family,
    LorenzCurve, Verdict,
};
use std::ffi::{c_char, c_double, c_int, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A scalar argument was outside its domain.
    DomainError = 3,
    /// A channel or distribution failed validation.
    ValidationError = 4,
    /// Structurally incompatible arguments.
    UsageError = 5,
    /// The operation is undefined at alpha = 1.
    UnitAlpha = 6,
    CalibrationFailed = 7,
    ParseError = 8,
    InternalPanic = 9,
}

/// Verdict of an order comparison, mirroring the library enum.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoVerdict {
    FirstMoreCapable = 0,
    SecondMoreCapable = 1,
    Equivalent = 2,
    Incomparable = 3,
    Inconclusive = 4,
}

/// Channel family selector for bo_calibrate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoFamily {
    Bsc = 0,
    Bec = 1,
}

/// Opaque handle to a validated BISO channel.
pub struct BoChannel {
    inner: BisoChannel,
}

/// Opaque handle to an α-Lorenz curve.
pub struct BoLorenz {
    inner: LorenzCurve,
}

fn status_of(err: &Error) -> BoStatus {
    match err {
        Error::Domain(_) => BoStatus::DomainError,
        Error::Validation(_) => BoStatus::ValidationError,
        Error::Usage(_) => BoStatus::UsageError,
        Error::UnitAlpha(_) => BoStatus::UnitAlpha,
        Error::Calibration(_) => BoStatus::CalibrationFailed,
        Error::ChannelFile(_) => BoStatus::ParseError,
    }
}

fn verdict_of(v: Verdict) -> BoVerdict {
    match v {
        Verdict::FirstMoreCapable => BoVerdict::FirstMoreCapable,
        Verdict::SecondMoreCapable => BoVerdict::SecondMoreCapable,
        Verdict::Equivalent => BoVerdict::Equivalent,
        Verdict::Incomparable => BoVerdict::Incomparable,
        Verdict::Inconclusive => BoVerdict::Inconclusive,
    }
}

fn guarded(f: impl FnOnce() -> BoStatus) -> BoStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(BoStatus::InternalPanic)
}

/// Writes `value` through `out` unless it is null.
unsafe fn store<T>(out: *mut T, value: T) -> BoStatus {
    if out.is_null() {
        return BoStatus::NullArgument;
    }
    unsafe { out.write(value) };
    BoStatus::Ok
}

unsafe fn channel_ref<'a>(ch: *const BoChannel) -> Option<&'a BisoChannel> {
    unsafe { ch.as_ref() }.map(|c| &c.inner)
}

fn alpha_param(alpha: c_double) -> Result<AlphaParam, BoStatus> {
    AlphaParam::new(alpha).map_err(|e| status_of(&e))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bo_status_message(status: BoStatus) -> *const c_char {
    let msg: &'static str = match status {
        BoStatus::Ok => "ok\0",
        BoStatus::NullArgument => "required pointer argument was null\0",
        BoStatus::InvalidUtf8 => "string argument was not valid UTF-8\0",
        BoStatus::DomainError => "scalar argument outside its domain\0",
        BoStatus::ValidationError => "channel or distribution failed validation\0",
        BoStatus::UsageError => "structurally incompatible arguments\0",
        BoStatus::UnitAlpha => "operation undefined at alpha = 1\0",
        BoStatus::CalibrationFailed => "calibration failed\0",
        BoStatus::ParseError => "channel JSON could not be parsed\0",
        BoStatus::InternalPanic => "internal panic caught at the boundary\0",
    };
    msg.as_ptr() as *const c_char
}

/// Parses a channel from its JSON description (`{"pairs": …}` or
/// `{"matrix": …}`). On success the new handle is written to `out` and
/// must be released with bo_channel_free.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_parse_json(
    json: *const c_char,
    out: *mut *mut BoChannel,
) -> BoStatus {
    guarded(|| {
        if json.is_null() {
            return BoStatus::NullArgument;
        }
        let Ok(text) = unsafe { CStr::from_ptr(json) }.to_str() else {
            return BoStatus::InvalidUtf8;
        };
        match BisoChannel::from_json_str(text) {
            Ok(inner) => unsafe {
                store(out, Box::into_raw(Box::new(BoChannel { inner })))
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Binary symmetric channel with crossover probability `p` in [0, 1/2].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_bsc(p: c_double, out: *mut *mut BoChannel) -> BoStatus {
    guarded(|| match BisoChannel::bsc(p) {
        Ok(inner) => unsafe { store(out, Box::into_raw(Box::new(BoChannel { inner }))) },
        Err(e) => status_of(&e),
    })
}

/// Binary erasure channel with erasure probability `eps` in [0, 1].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_bec(eps: c_double, out: *mut *mut BoChannel) -> BoStatus {
    guarded(|| match BisoChannel::bec(eps) {
        Ok(inner) => unsafe { store(out, Box::into_raw(Box::new(BoChannel { inner }))) },
        Err(e) => status_of(&e),
    })
}

/// Seeded random channel with `n_pairs` output pairs; deterministic in
/// `(n_pairs, seed)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_random(
    n_pairs: usize,
    seed: u64,
    out: *mut *mut BoChannel,
) -> BoStatus {
    guarded(|| match BisoChannel::random(n_pairs, seed) {
        Ok(inner) => unsafe { store(out, Box::into_raw(Box::new(BoChannel { inner }))) },
        Err(e) => status_of(&e),
    })
}

/// Releases a channel handle. Null is ignored.
///
/// # Safety
/// `ch` must have come from a bo_channel_* constructor and not been freed.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_free(ch: *mut BoChannel) {
    if !ch.is_null() {
        drop(unsafe { Box::from_raw(ch) });
    }
}

/// Number of symmetric output pairs, or 0 for a null handle.
///
/// # Safety
/// `ch` must be a live channel handle or null.
#[no_mangle]
pub unsafe extern "C" fn bo_channel_pair_count(ch: *const BoChannel) -> usize {
    unsafe { channel_ref(ch) }.map_or(0, |c| c.n_pairs())
}

/// Sibson mutual information at input probability `x`; alpha = 1 gives the
/// Shannon value. Nats.
///
/// # Safety
/// `ch` must be a live channel handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_sibson_mi(
    ch: *const BoChannel,
    x: c_double,
    alpha: c_double,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match sibson_mi(channel, x, &ap) {
            Ok(v) => unsafe { store(out, v.value) },
            Err(e) => status_of(&e),
        }
    })
}

/// Arimoto mutual information at input probability `x`. Nats.
///
/// # Safety
/// `ch` must be a live channel handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_arimoto_mi(
    ch: *const BoChannel,
    x: c_double,
    alpha: c_double,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match arimoto_mi(channel, x, &ap) {
            Ok(v) => unsafe { store(out, v.value) },
            Err(e) => status_of(&e),
        }
    })
}

/// Shannon mutual information at input probability `x`. Nats.
///
/// # Safety
/// `ch` must be a live channel handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_shannon_mi(
    ch: *const BoChannel,
    x: c_double,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        match shannon_mi(channel, x) {
            Ok(v) => unsafe { store(out, v.value) },
            Err(e) => status_of(&e),
        }
    })
}

/// α-capacity in nats. `out_d_c` receives the pair-mass statistic, or NaN
/// on the Shannon branch; pass null to skip it.
///
/// # Safety
/// `ch` must be a live channel handle; `out_capacity` must be valid for
/// writes; `out_d_c` may be null.
#[no_mangle]
pub unsafe extern "C" fn bo_alpha_capacity(
    ch: *const BoChannel,
    alpha: c_double,
    out_capacity: *mut c_double,
    out_d_c: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match alpha_capacity(channel, &ap) {
            Ok(cap) => {
                if !out_d_c.is_null() {
                    unsafe { out_d_c.write(cap.d_c.unwrap_or(f64::NAN)) };
                }
                unsafe { store(out_capacity, cap.c_alpha) }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// BSC crossover or BEC erasure probability matching `target_capacity`
/// nats at the given order.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_calibrate(
    family: BoFamily,
    target_capacity: c_double,
    alpha: c_double,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let fam = match family {
            BoFamily::Bsc => Family::Bsc,
            BoFamily::Bec => Family::Bec,
        };
        match calibrate(fam, target_capacity, &ap) {
            Ok(p) => unsafe { store(out, p) },
            Err(e) => status_of(&e),
        }
    })
}

unsafe fn write_comparison(
    report: &ComparisonReport,
    out_verdict: *mut BoVerdict,
    out_worst_gap: *mut c_double,
    out_witness_x: *mut c_double,
) -> BoStatus {
    if !out_worst_gap.is_null() {
        unsafe { out_worst_gap.write(report.worst_gap.unwrap_or(f64::NAN)) };
    }
    if !out_witness_x.is_null() {
        unsafe { out_witness_x.write(report.witness_x.unwrap_or(f64::NAN)) };
    }
    unsafe { store(out_verdict, verdict_of(report.verdict)) }
}

/// Exhaustive order test on a `grid_points` input grid. `out_worst_gap`
/// and `out_witness_x` are optional (pass null to skip).
///
/// # Safety
/// `a` and `b` must be live channel handles; `out_verdict` must be valid
/// for writes; the remaining outputs may be null.
#[no_mangle]
pub unsafe extern "C" fn bo_compare_grid(
    a: *const BoChannel,
    b: *const BoChannel,
    alpha: c_double,
    grid_points: usize,
    out_verdict: *mut BoVerdict,
    out_worst_gap: *mut c_double,
    out_witness_x: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let (Some(ca), Some(cb)) = (unsafe { channel_ref(a) }, unsafe { channel_ref(b) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match more_capable_grid(ca, cb, &ap, grid_points) {
            Ok(r) => unsafe { write_comparison(&r, out_verdict, out_worst_gap, out_witness_x) },
            Err(e) => status_of(&e),
        }
    })
}

/// Lorenz-dominance sufficient condition. `out_capacity_gap` is optional.
///
/// # Safety
/// `a` and `b` must be live channel handles; `out_verdict` must be valid
/// for writes; `out_capacity_gap` may be null.
#[no_mangle]
pub unsafe extern "C" fn bo_compare_sufficient(
    a: *const BoChannel,
    b: *const BoChannel,
    alpha: c_double,
    out_verdict: *mut BoVerdict,
    out_capacity_gap: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let (Some(ca), Some(cb)) = (unsafe { channel_ref(a) }, unsafe { channel_ref(b) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match sufficient_condition(ca, cb, &ap) {
            Ok(r) => {
                if !out_capacity_gap.is_null() {
                    unsafe { out_capacity_gap.write(r.capacity_gap) };
                }
                unsafe { store(out_verdict, verdict_of(r.verdict)) }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Whether the calibrated BSC/BEC extremality sandwich holds around `ch`
/// (1) or was violated (0).
///
/// # Safety
/// `ch` must be a live channel handle; `out_holds` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn bo_extremal_sandwich(
    ch: *const BoChannel,
    alpha: c_double,
    grid_points: usize,
    out_holds: *mut c_int,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match extremality_report(channel, &ap, grid_points) {
            Ok(r) => unsafe { store(out_holds, r.sandwich_holds as c_int) },
            Err(e) => status_of(&e),
        }
    })
}

/// Builds the α-Lorenz curve of a channel. The handle must be released
/// with bo_lorenz_free.
///
/// # Safety
/// `ch` must be a live channel handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_new(
    ch: *const BoChannel,
    alpha: c_double,
    out: *mut *mut BoLorenz,
) -> BoStatus {
    guarded(|| {
        let Some(channel) = (unsafe { channel_ref(ch) }) else {
            return BoStatus::NullArgument;
        };
        let ap = match alpha_param(alpha) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match LorenzCurve::new(channel, &ap) {
            Ok(inner) => unsafe { store(out, Box::into_raw(Box::new(BoLorenz { inner }))) },
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a Lorenz-curve handle. Null is ignored.
///
/// # Safety
/// `curve` must have come from bo_lorenz_new and not been freed.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_free(curve: *mut BoLorenz) {
    if !curve.is_null() {
        drop(unsafe { Box::from_raw(curve) });
    }
}

/// Number of linear segments, or 0 for a null handle.
///
/// # Safety
/// `curve` must be a live curve handle or null.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_segment_count(curve: *const BoLorenz) -> usize {
    unsafe { curve.as_ref() }.map_or(0, |c| c.inner.step_values().len())
}

/// Right endpoint d_C of the curve domain, or NaN for a null handle.
///
/// # Safety
/// `curve` must be a live curve handle or null.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_d_c(curve: *const BoLorenz) -> c_double {
    unsafe { curve.as_ref() }.map_or(f64::NAN, |c| c.inner.d_c())
}

/// Breakpoint `t_index` (0 ≤ index ≤ segment count) and the slope of
/// segment `index` (index < segment count).
///
/// # Safety
/// `curve` must be a live curve handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_breakpoint(
    curve: *const BoLorenz,
    index: usize,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(c) = (unsafe { curve.as_ref() }) else {
            return BoStatus::NullArgument;
        };
        match c.inner.breakpoints().get(index) {
            Some(&t) => unsafe { store(out, t) },
            None => BoStatus::UsageError,
        }
    })
}

/// Slope of segment `index`.
///
/// # Safety
/// `curve` must be a live curve handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_step(
    curve: *const BoLorenz,
    index: usize,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(c) = (unsafe { curve.as_ref() }) else {
            return BoStatus::NullArgument;
        };
        match c.inner.step_values().get(index) {
            Some(&f) => unsafe { store(out, f) },
            None => BoStatus::UsageError,
        }
    })
}

/// Evaluates the curve at `t` in [0, d_C].
///
/// # Safety
/// `curve` must be a live curve handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_lorenz_eval(
    curve: *const BoLorenz,
    t: c_double,
    out: *mut c_double,
) -> BoStatus {
    guarded(|| {
        let Some(c) = (unsafe { curve.as_ref() }) else {
            return BoStatus::NullArgument;
        };
        match c.inner.evaluate(t) {
            Ok(v) => unsafe { store(out, v) },
            Err(e) => status_of(&e),
        }
    })
}

//! The verification suite: every check the crate promises, runnable both
//! from the `verify` CLI command and from the acceptance tests.
//!
//! Each check pits a closed form against an independent route (variational
//! minimization, grid maximization, finite differences, randomized
//! instances) at a fixed tolerance and reports the worst deviation it saw.

use crate::channel::BisoChannel;
use crate::error::Result;
use crate::measures::{
    arimoto_conditional_entropy, arimoto_mi, capacity_raw, mi_raw, shannon_mi, sibson_mi,
    sibson_mi_general, special_mi, tilt, SpecialAlpha,
};
use crate::oracle::{
    capacity_argmax_scan, convexity_scan, trial_rng, variational_sibson,
};
use crate::ordering::{
    calibrate, common_refinement, match_to_capacity, more_capable_grid, sufficient_condition,
    Family, LorenzCurve, Verdict, ORDER_TOL,
};
use crate::renyi::{binary_entropy, AlphaParam, FiniteDist};
use rand::Rng;
use serde::Serialize;

/// Rényi orders exercised everywhere: one representative per regime of the
/// Lorenz order direction, the reversal window included.
pub const ALPHA_REPRESENTATIVES: [f64; 7] = [0.25, 0.4, 0.75, 1.5, 2.0, 3.0, 5.0];

/// Orders at which the convexity regimes are verified.
pub const CONVEXITY_ALPHAS: [f64; 8] = [0.3, 0.5, 0.8, 1.5, 2.0, 2.5, 3.0, 4.0];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Worst deviation observed, in the check's own units.
    pub worst: f64,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, worst: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            worst,
            detail: detail.into(),
        }
    }
}

fn alpha(v: f64) -> AlphaParam {
    AlphaParam::new(v).expect("valid alpha")
}

/// The standard test ensemble: `count` seeded random channels with 1–6
/// output pairs.
pub fn ensemble(seed: u64, count: usize) -> Vec<BisoChannel> {
    (0..count)
        .map(|i| BisoChannel::random(1 + i % 6, seed.wrapping_add(i as u64)).expect("random"))
        .collect()
}

/// A deterministic capacity-matched channel pair at the given order.
/// Sides are drawn from {degraded random channel, calibrated BSC,
/// calibrated BEC}; with `families = false` both sides are random.
pub fn matched_random_pair(
    alpha_param: &AlphaParam,
    seed: u64,
    index: u64,
    families: bool,
) -> Result<(BisoChannel, BisoChannel)> {
    let mut rng = trial_rng(seed, index);
    for _ in 0..64 {
        let kind = |rng: &mut rand_chacha::ChaCha8Rng| -> u8 {
            if families {
                match rng.gen::<u64>() % 5 {
                    0..=2 => 0,
                    3 => 1,
                    _ => 2,
                }
            } else {
                0
            }
        };
        let (ka, kb) = (kind(&mut rng), kind(&mut rng));
        let a0 = BisoChannel::random(1 + (rng.gen::<u64>() % 6) as usize, rng.gen())?;
        let b0 = BisoChannel::random(1 + (rng.gen::<u64>() % 6) as usize, rng.gen())?;
        let mut bound = f64::INFINITY;
        if ka == 0 {
            bound = bound.min(capacity_raw(&a0, alpha_param).0);
        }
        if kb == 0 {
            bound = bound.min(capacity_raw(&b0, alpha_param).0);
        }
        if !bound.is_finite() {
            bound = 0.8 * std::f64::consts::LN_2;
        }
        if bound < 1e-3 {
            continue; // degenerate draw; take a fresh one
        }
        let target = (0.3 + 0.65 * rng.gen::<f64>()) * bound;
        let side = |k: u8, ch0: &BisoChannel| -> Result<BisoChannel> {
            match k {
                0 => match_to_capacity(ch0, target, alpha_param),
                1 => BisoChannel::bsc(calibrate(Family::Bsc, target, alpha_param)?),
                _ => BisoChannel::bec(calibrate(Family::Bec, target, alpha_param)?),
            }
        };
        return Ok((side(ka, &a0)?, side(kb, &b0)?));
    }
    unreachable!("matched pair generation kept drawing useless channels")
}

/// |variational minimization - pair closed form| on the ensemble.
pub fn check_variational_agreement(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    let mut runs = 0usize;
    let mut converged = true;
    for ch in ensemble(seed, channels) {
        let kernel = ch.to_kernel()?;
        for &a in &ALPHA_REPRESENTATIVES {
            let ap = alpha(a);
            for &x in &[0.1, 0.3, 0.5] {
                let input = FiniteDist::bernoulli(x)?;
                let oracle = variational_sibson(&kernel, &input, &ap, 60)?;
                let direct = sibson_mi(&ch, x, &ap)?.value;
                worst = worst.max((oracle.value - direct).abs());
                converged &= oracle.passed;
                runs += 1;
            }
        }
    }
    Ok(CheckResult::new(
        "variational_agreement",
        converged && worst <= 1e-6,
        worst,
        format!("{runs} minimizations, tolerance 1e-6"),
    ))
}

/// Grid argmax of the mutual information sits at x = 1/2 with the
/// closed-form capacity value.
pub fn check_capacity_at_uniform_input(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    let mut passed = true;
    let mut runs = 0usize;
    for ch in ensemble(seed, channels) {
        for &a in &ALPHA_REPRESENTATIVES {
            let scan = capacity_argmax_scan(&ch, &alpha(a), 1001)?;
            worst = worst.max(scan.gap_to_closed_form.abs());
            passed &= scan.passed;
            runs += 1;
        }
    }
    Ok(CheckResult::new(
        "capacity_at_uniform_input",
        passed && worst <= 1e-9,
        worst,
        format!("{runs} scans on a 1001-point input grid, tolerance 1e-9"),
    ))
}

/// The α ∈ {1/3, 1/2} closed forms against the pair form, plus the two
/// exactly known values.
pub fn check_special_alpha_closed_forms(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    for ch in ensemble(seed, channels) {
        for which in [SpecialAlpha::OneThird, SpecialAlpha::OneHalf] {
            let ap = alpha(which.alpha());
            for i in 0..=10 {
                let x = i as f64 / 10.0;
                let s = special_mi(&ch, x, which)?.value;
                let g = sibson_mi(&ch, x, &ap)?.value;
                worst = worst.max((s - g).abs());
            }
        }
    }
    // hand-checked anchor values
    let v = special_mi(&BisoChannel::bsc(0.1)?, 0.5, SpecialAlpha::OneHalf)?.value;
    worst = worst.max((v - 0.2231435513142097).abs()); // -ln 0.8
    let v = special_mi(&BisoChannel::bec(0.2)?, 0.5, SpecialAlpha::OneThird)?.value;
    worst = worst.max((v - 0.4581453659370775).abs()); // -(1/2) ln 0.4
    Ok(CheckResult::new(
        "special_alpha_closed_forms",
        worst <= 1e-10,
        worst,
        "closed forms at alpha 1/3 and 1/2, tolerance 1e-10",
    ))
}

/// At α ∈ {1/3, 1/2} the mutual information depends on the channel only
/// through its capacity, so capacity-matched pairs have identical MI
/// profiles.
pub fn check_capacity_determines_special_order(seed: u64, pairs: usize) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    for &a in &[1.0 / 3.0, 0.5] {
        let ap = alpha(a);
        for i in 0..pairs {
            let (w1, w2) = matched_random_pair(&ap, seed ^ 0x5bec, i as u64, false)?;
            for j in 0..=1000 {
                let x = 0.5 * j as f64 / 1000.0;
                let gap = (mi_raw(&w1, x, &ap) - mi_raw(&w2, x, &ap)).abs();
                worst = worst.max(gap);
            }
        }
    }
    Ok(CheckResult::new(
        "capacity_determines_special_order",
        worst <= 1e-10,
        worst,
        format!("{pairs} matched pairs per special order, 1001-point grids, tolerance 1e-10"),
    ))
}

/// Every directed Lorenz verdict must be confirmed by the exhaustive grid,
/// with the direction reversing exactly at α = 0.4 among the
/// representatives.
pub fn check_lorenz_dominance_implies_order(seed: u64, pairs: usize) -> Result<CheckResult> {
    let mut worst = f64::INFINITY;
    let mut confirmed = 0usize;
    let mut crossings = 0usize;
    let mut ok = true;
    let mut detail_fail = String::new();
    for &a in &ALPHA_REPRESENTATIVES {
        let ap = alpha(a);
        let mut directed_here = 0usize;
        for i in 0..pairs {
            let (w1, w2) = matched_random_pair(&ap, seed, i as u64, true)?;
            let s = sufficient_condition(&w1, &w2, &ap)?;
            match s.verdict {
                Verdict::Inconclusive => crossings += 1,
                Verdict::Incomparable => {
                    ok = false;
                    detail_fail = format!("impossible Lorenz verdict at alpha {a}");
                }
                directed => {
                    let g = more_capable_grid(&w1, &w2, &ap, 1001)?;
                    let agrees = match directed {
                        Verdict::FirstMoreCapable => {
                            g.verdict == Verdict::FirstMoreCapable
                                || g.verdict == Verdict::Equivalent
                        }
                        Verdict::SecondMoreCapable => {
                            g.verdict == Verdict::SecondMoreCapable
                                || g.verdict == Verdict::Equivalent
                        }
                        _ => g.verdict == Verdict::Equivalent,
                    };
                    let gap = g.worst_gap.unwrap_or(f64::NEG_INFINITY);
                    if !agrees || gap < -ORDER_TOL {
                        ok = false;
                        detail_fail = format!(
                            "grid contradicts Lorenz verdict {directed:?} at alpha {a} (pair {i}, gap {gap:.3e})"
                        );
                    }
                    worst = worst.min(gap);
                    confirmed += 1;
                    directed_here += 1;
                }
            }
        }
        if directed_here < 10 {
            ok = false;
            detail_fail = format!("only {directed_here} directed verdicts at alpha {a}");
        }
        // the calibrated extreme pair pins the direction per regime
        let c = 0.3;
        let bec = BisoChannel::bec(calibrate(Family::Bec, c, &ap)?)?;
        let bsc = BisoChannel::bsc(calibrate(Family::Bsc, c, &ap)?)?;
        let expect = if (a - 0.4).abs() < 1e-12 {
            Verdict::SecondMoreCapable
        } else {
            Verdict::FirstMoreCapable
        };
        let s = sufficient_condition(&bec, &bsc, &ap)?;
        let g = more_capable_grid(&bec, &bsc, &ap, 1001)?;
        if s.verdict != expect || g.verdict != expect {
            ok = false;
            detail_fail = format!(
                "extreme pair direction at alpha {a}: lorenz {:?}, grid {:?}, expected {expect:?}",
                s.verdict, g.verdict
            );
        }
    }
    let worst = if worst.is_finite() { worst } else { 0.0 };
    Ok(CheckResult::new(
        "lorenz_dominance_implies_order",
        ok && worst >= -ORDER_TOL,
        worst,
        if ok {
            format!("{confirmed} directed verdicts grid-confirmed, {crossings} crossings skipped")
        } else {
            detail_fail
        },
    ))
}

/// Calibrated BSC and BEC sandwich every capacity-matched channel, with
/// the regime-appropriate direction.
pub fn check_extremal_sandwich(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst = f64::INFINITY;
    let mut ok = true;
    let mut detail = String::new();
    let mut runs = 0usize;
    let mut i = 0u64;
    let mut produced = 0usize;
    while produced < channels {
        let ch = BisoChannel::random(1 + (i % 6) as usize, seed.wrapping_add(0xEC).wrapping_add(i))?;
        i += 1;
        if capacity_raw(&ch, &alpha(2.0)).0 <= 1e-6 {
            continue; // effectively useless; the sandwich is vacuous
        }
        produced += 1;
        for &a in &ALPHA_REPRESENTATIVES {
            let ap = alpha(a);
            let report = crate::ordering::extremality_report(&ch, &ap, 1001)?;
            let gap = report
                .bec_vs_channel
                .grid
                .worst_gap
                .unwrap_or(f64::NEG_INFINITY)
                .min(
                    report
                        .channel_vs_bsc
                        .grid
                        .worst_gap
                        .unwrap_or(f64::NEG_INFINITY),
                );
            worst = worst.min(gap);
            runs += 1;
            if !report.sandwich_holds {
                ok = false;
                detail = format!("sandwich violated at alpha {a} (channel seed {i})");
            }
        }
    }
    let worst = if worst.is_finite() { worst } else { 0.0 };
    Ok(CheckResult::new(
        "extremal_sandwich",
        ok && worst >= -ORDER_TOL,
        worst,
        if ok {
            format!("{runs} sandwich reports, grid tolerance 1e-9")
        } else {
            detail
        },
    ))
}

/// Lorenz curves integrate to exactly 1, and among capacity-matched curves
/// the BSC is the pointwise maximum and the BEC the pointwise minimum.
pub fn check_lorenz_curve_identities(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    let mut ok = true;
    let mut detail = String::new();
    for (idx, ch) in ensemble(seed ^ 0x10_53, channels).into_iter().enumerate() {
        for &a in &ALPHA_REPRESENTATIVES {
            let ap = alpha(a);
            let curve = LorenzCurve::new(&ch, &ap)?;
            worst = worst.max((curve.total_integral() - 1.0).abs());
            worst = worst.max(curve.evaluate(0.0)?.abs());
            worst = worst.max((curve.evaluate(curve.d_c())? - 1.0).abs());

            let c = capacity_raw(&ch, &ap).0;
            if c <= 1e-6 {
                continue;
            }
            let bsc_curve = LorenzCurve::new(
                &BisoChannel::bsc(calibrate(Family::Bsc, c, &ap)?)?,
                &ap,
            )?;
            let bec_curve = LorenzCurve::new(
                &BisoChannel::bec(calibrate(Family::Bec, c, &ap)?)?,
                &ap,
            )?;
            for (other, upper) in [(&bsc_curve, true), (&bec_curve, false)] {
                let refinement = common_refinement(&curve, other)?;
                for &t in &refinement.breakpoints {
                    let gap = if upper {
                        curve.evaluate(t)? - other.evaluate(t)?
                    } else {
                        other.evaluate(t)? - curve.evaluate(t)?
                    };
                    if gap > 1e-10 {
                        ok = false;
                        detail = format!(
                            "curve escapes the {} bound at alpha {a} (channel {idx}, t={t:.6}, gap {gap:.3e})",
                            if upper { "BSC" } else { "BEC" }
                        );
                    }
                    worst = worst.max(gap);
                }
            }
        }
    }
    Ok(CheckResult::new(
        "lorenz_curve_identities",
        ok && worst <= 1e-10,
        worst,
        if ok {
            "unit integral and BSC/BEC envelopes at refined breakpoints, tolerance 1e-10".into()
        } else {
            detail
        },
    ))
}

/// Sign table of the information-combining transform curvature.
pub fn check_convexity_regimes() -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    let mut ok = true;
    let mut detail = String::new();
    for &a in &CONVEXITY_ALPHAS {
        let scan = convexity_scan(&alpha(a), 33, 1e-4)?;
        worst = worst.max(scan.worst_violation);
        if !scan.passed {
            ok = false;
            detail = format!(
                "alpha {a}: expected {:?}, observed {:?}, violation {:.3e}",
                scan.expected, scan.observed, scan.worst_violation
            );
        }
    }
    Ok(CheckResult::new(
        "convexity_regimes",
        ok,
        worst,
        if ok {
            "sign pattern on 33x33 grids, h = 1e-4; violations within 1e-8 (1e-6 at the linear orders)"
                .into()
        } else {
            detail
        },
    ))
}

/// Arimoto's variant against the tilted-input route, its chain rule, and
/// the equality of the two capacities.
pub fn check_arimoto_consistency(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst_identity = 0.0_f64;
    let mut worst_capacity = 0.0_f64;
    for ch in ensemble(seed ^ 0xA21, channels) {
        let kernel = ch.to_kernel()?;
        for &a in &ALPHA_REPRESENTATIVES {
            let ap = alpha(a);
            for i in 0..=10 {
                let x = i as f64 / 10.0;
                let ia = arimoto_mi(&ch, x, &ap)?.value;
                // tilt identity, via both the pair form and the raw kernel
                let xt = tilt(x, &ap)?;
                worst_identity = worst_identity.max((ia - sibson_mi(&ch, xt, &ap)?.value).abs());
                let general = sibson_mi_general(&kernel, &FiniteDist::bernoulli(xt)?, &ap)?.value;
                worst_identity = worst_identity.max((ia - general).abs());
                // chain rule
                let h = binary_entropy(x, &ap)?;
                let cond = arimoto_conditional_entropy(&ch, x, &ap)?;
                worst_identity = worst_identity.max((cond - (h - ia)).abs());
            }
            // equal capacities for the two variants (both attained at 1/2)
            let (mut max_a, mut max_s) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                max_a = max_a.max(arimoto_mi(&ch, x, &ap)?.value);
                max_s = max_s.max(sibson_mi(&ch, x, &ap)?.value);
            }
            worst_capacity = worst_capacity.max((max_a - max_s).abs());
        }
    }
    let worst = worst_identity.max(worst_capacity);
    Ok(CheckResult::new(
        "arimoto_consistency",
        worst_identity <= 1e-12 && worst_capacity <= 1e-9,
        worst,
        "tilt identity and chain rule within 1e-12, capacity equality within 1e-9",
    ))
}

/// Continuity across α = 1 and the classical more-capable sandwich at the
/// Shannon point.
pub fn check_shannon_seam(seed: u64, channels: usize) -> Result<CheckResult> {
    let mut worst_seam = 0.0_f64;
    for ch in ensemble(seed ^ 0x5EA, channels) {
        for i in 0..=10 {
            let x = i as f64 / 10.0;
            let sh = shannon_mi(&ch, x)?.value;
            for &a in &[1.0 - 1e-4, 1.0 + 1e-4] {
                worst_seam = worst_seam.max((sibson_mi(&ch, x, &alpha(a))?.value - sh).abs());
            }
        }
    }
    // classical sandwich at alpha = 1 on calibrated extremes
    let unit = alpha(1.0);
    let mut worst_gap = f64::INFINITY;
    let mut sandwich_ok = true;
    let mut produced = 0usize;
    let mut i = 0u64;
    while produced < 20 {
        let ch = BisoChannel::random(1 + (i % 6) as usize, seed ^ 0x1dea ^ i)?;
        i += 1;
        let c = capacity_raw(&ch, &unit).0;
        if c <= 1e-6 {
            continue;
        }
        produced += 1;
        let bec = BisoChannel::bec(calibrate(Family::Bec, c, &unit)?)?;
        let bsc = BisoChannel::bsc(calibrate(Family::Bsc, c, &unit)?)?;
        for (hi, lo) in [(&bec, &ch), (&ch, &bsc), (&bec, &bsc)] {
            let g = more_capable_grid(hi, lo, &unit, 1001)?;
            let gap = g.worst_gap.unwrap_or(f64::NEG_INFINITY);
            worst_gap = worst_gap.min(gap);
            sandwich_ok &= matches!(
                g.verdict,
                Verdict::FirstMoreCapable | Verdict::Equivalent
            ) && gap >= -ORDER_TOL;
        }
    }
    Ok(CheckResult::new(
        "shannon_seam",
        worst_seam <= 1e-3 && sandwich_ok,
        worst_seam,
        format!(
            "seam within 1e-3; classical sandwich worst gap {:.3e} at grid tolerance 1e-9",
            worst_gap
        ),
    ))
}

/// Calibration reproduces its target capacity through the capacity formula.
pub fn check_calibration_round_trip() -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    for &a in &ALPHA_REPRESENTATIVES {
        let ap = alpha(a);
        for &c in &[0.05, 0.2, 0.4, 0.6] {
            let p = calibrate(Family::Bsc, c, &ap)?;
            worst = worst.max((capacity_raw(&BisoChannel::bsc(p)?, &ap).0 - c).abs());
            let e = calibrate(Family::Bec, c, &ap)?;
            worst = worst.max((capacity_raw(&BisoChannel::bec(e)?, &ap).0 - c).abs());
        }
    }
    Ok(CheckResult::new(
        "calibration_round_trip",
        worst <= 1e-9,
        worst,
        "both families, C in {0.05, 0.2, 0.4, 0.6} nats, tolerance 1e-9",
    ))
}

/// Randomized convex-order instances: valid ones must satisfy the
/// transfer inequality, corrupted ones must be rejected by the premise
/// checker.
pub fn check_convex_order_transfer(seed: u64, valid: usize, corrupted: usize) -> Result<CheckResult> {
    use crate::oracle::{
        convex_order_check, random_convex_order_instance, ConvexOrderOutcome, ConvexPiecewise,
    };
    let mut worst = 0.0_f64;
    let mut ok = true;
    let mut detail = String::new();
    for trial in 0..valid as u64 {
        let mut rng = trial_rng(seed ^ 0xC0, trial);
        let len = 3 + (trial % 8) as usize;
        let (xs, ys, xi) = random_convex_order_instance(&mut rng, len, false);
        let f = ConvexPiecewise::random(&mut rng);
        match convex_order_check(&xs, &ys, &xi, |t| f.eval(t))? {
            ConvexOrderOutcome::Holds { margin } => worst = worst.min(margin),
            other => {
                ok = false;
                detail = format!("valid instance {trial} gave {other:?}");
            }
        }
    }
    for trial in 0..corrupted as u64 {
        let mut rng = trial_rng(seed ^ 0xC1, trial);
        let len = 3 + (trial % 8) as usize;
        let (xs, ys, xi) = random_convex_order_instance(&mut rng, len, true);
        match convex_order_check(&xs, &ys, &xi, |t| t * t)? {
            ConvexOrderOutcome::PremiseNotMet => {}
            other => {
                ok = false;
                detail = format!("corrupted instance {trial} slipped through as {other:?}");
            }
        }
    }
    Ok(CheckResult::new(
        "convex_order_transfer",
        ok,
        worst,
        if ok {
            format!("{valid} valid and {corrupted} corrupted instances")
        } else {
            detail
        },
    ))
}

/// Named sub-suites for the CLI.
pub const SUITE_NAMES: [&str; 12] = [
    "variational",
    "capacity",
    "special",
    "degeneracy",
    "order",
    "sandwich",
    "lorenz",
    "convexity",
    "convex-order",
    "arimoto",
    "seam",
    "calibration",
];

/// Runs one named sub-suite (or `"all"`) at the documented scales.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let want = |n: &str| name == "all" || name == n;
    if want("variational") {
        checks.push(check_variational_agreement(seed, 100)?);
    }
    if want("capacity") {
        checks.push(check_capacity_at_uniform_input(seed, 100)?);
    }
    if want("special") {
        checks.push(check_special_alpha_closed_forms(seed, 100)?);
    }
    if want("degeneracy") {
        checks.push(check_capacity_determines_special_order(seed, 50)?);
    }
    if want("order") {
        checks.push(check_lorenz_dominance_implies_order(seed, 200)?);
    }
    if want("sandwich") {
        checks.push(check_extremal_sandwich(seed, 50)?);
    }
    if want("lorenz") {
        checks.push(check_lorenz_curve_identities(seed, 50)?);
    }
    if want("convexity") {
        checks.push(check_convexity_regimes()?);
    }
    if want("convex-order") {
        checks.push(check_convex_order_transfer(seed, 10_000, 1_000)?);
    }
    if want("arimoto") {
        checks.push(check_arimoto_consistency(seed, 30)?);
    }
    if want("seam") {
        checks.push(check_shannon_seam(seed, 30)?);
    }
    if want("calibration") {
        checks.push(check_calibration_round_trip()?);
    }
    if checks.is_empty() {
        return Err(crate::error::Error::Usage(format!(
            "unknown suite {name:?}; expected \"all\" or one of {SUITE_NAMES:?}"
        )));
    }
    Ok(checks)
}

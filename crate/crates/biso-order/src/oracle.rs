//! Independent brute-force verifiers.
//!
//! Everything here checks the closed forms elsewhere in the crate by a
//! different route: the Sibson mutual information via direct minimization
//! over output reference distributions, the capacity via grid
//! maximization, the transform's convexity regimes via finite differences,
//! and the convex-order inequality that underpins the Lorenz sufficient
//! condition via randomized instances. The verification suite trusts this
//! module, so none of it reuses the closed-form minimizers it is checking.

use crate::channel::BisoChannel;
use crate::error::{Error, Result};
use crate::measures::{capacity_raw, mi_raw, sibson_mi_general};
use crate::renyi::{binary_convolve, pow_sum_inv, pow_sum_raw, stable_sum, AlphaParam, FiniteDist};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one oracle run against a closed form.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OracleResult {
    /// The value the oracle computed.
    pub value: f64,
    /// Grid step, probe magnitude or finite-difference step used.
    pub resolution: f64,
    pub gap_to_closed_form: f64,
    pub passed: bool,
}

/// Splittable deterministic generator for randomized trials.
pub(crate) fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

const VARIATIONAL_TOL: f64 = 1e-7;
const PROBE_MAGNITUDE: f64 = 1e-4;
const PROBE_COUNT: usize = 1000;

/// Minimizes the conditional Rényi divergence over output reference
/// distributions, which is the defining variational form of Sibson's
/// mutual information.
///
/// The minimization runs projected coordinate descent on the simplex from
/// the uniform start — golden-section line searches along pairwise mass
/// transfers, for up to `steps` sweeps — and then stress-tests the
/// candidate with [`PROBE_COUNT`] random perturbations of magnitude
/// [`PROBE_MAGNITUDE`]. The descent never uses the known closed-form
/// minimizer. `passed` requires agreement with the closed form within
/// 1e-7 and that no probe beats the candidate.
pub fn variational_sibson(
    kernel: &[FiniteDist],
    input: &FiniteDist,
    alpha: &AlphaParam,
    steps: usize,
) -> Result<OracleResult> {
    alpha.require_not_unit("the variational form needs alpha != 1")?;
    if kernel.is_empty() || kernel.len() != input.len() {
        return Err(Error::Usage(
            "kernel and input must share the input alphabet".into(),
        ));
    }
    let ny = kernel[0].len();
    if kernel.iter().any(|row| row.len() != ny) {
        return Err(Error::Usage("kernel rows differ in length".into()));
    }
    if ny > 16 {
        return Err(Error::Usage(format!(
            "variational oracle is desk-scale only (≤ 16 outputs, got {ny})"
        )));
    }
    let a = alpha.value();
    // weights of Q_y^{1-α} in the divergence exponential
    let coeff: Vec<f64> = (0..ny)
        .map(|y| {
            stable_sum(
                kernel
                    .iter()
                    .zip(input.probs())
                    .map(|(row, &w)| w * row.probs()[y].powf(a)),
            )
        })
        .collect();
    // For α > 1 the divergence is minimized by minimizing
    // φ(Q) = Σ coeff_y · Q_y^{1-α}; for α < 1 by maximizing it. Both are
    // one-signed objectives over the simplex, so descend on ±φ.
    let sign = if a > 1.0 { 1.0 } else { -1.0 };
    let term = |c: f64, q: f64| if c == 0.0 { 0.0 } else { c * q.powf(1.0 - a) };
    let objective = |q: &[f64]| -> f64 {
        sign * stable_sum(q.iter().zip(&coeff).map(|(&qi, &ci)| term(ci, qi)))
    };

    let mut q = vec![1.0 / ny as f64; ny];
    let mut best = objective(&q);
    for _ in 0..steps {
        let before = best;
        for i in 0..ny {
            for j in (i + 1)..ny {
                // line search over mass transfers q_i + t, q_j - t
                let (mut lo, mut hi) = (-q[i], q[j]);
                if hi - lo <= 1e-15 {
                    continue;
                }
                let g = |t: f64| sign * (term(coeff[i], q[i] + t) + term(coeff[j], q[j] - t));
                const INV_PHI: f64 = 0.618_033_988_749_894_9;
                let mut x1 = hi - INV_PHI * (hi - lo);
                let mut x2 = lo + INV_PHI * (hi - lo);
                let (mut g1, mut g2) = (g(x1), g(x2));
                for _ in 0..48 {
                    if g1 < g2 {
                        hi = x2;
                        x2 = x1;
                        g2 = g1;
                        x1 = hi - INV_PHI * (hi - lo);
                        g1 = g(x1);
                    } else {
                        lo = x1;
                        x1 = x2;
                        g1 = g2;
                        x2 = lo + INV_PHI * (hi - lo);
                        g2 = g(x2);
                    }
                }
                let t = 0.5 * (lo + hi);
                let moved = sign * (term(coeff[i], q[i] + t) + term(coeff[j], q[j] - t));
                if moved < g(0.0) {
                    q[i] = (q[i] + t).max(0.0);
                    q[j] = (q[j] - t).max(0.0);
                }
            }
        }
        // keep the iterate on the simplex
        let total: f64 = q.iter().sum();
        q.iter_mut().for_each(|v| *v /= total);
        best = objective(&q);
        if (before - best).abs() <= 1e-16 * (1.0 + best.abs()) {
            break;
        }
    }

    let divergence = |obj: f64| (sign * obj).ln() / (a - 1.0);
    let value = divergence(best);

    // perturbation probes: no nearby point on the simplex may do better
    let mut rng = ChaCha8Rng::seed_from_u64(0x5349_4253);
    let mut probes_ok = true;
    for _ in 0..PROBE_COUNT {
        let mut dir: Vec<f64> = (0..ny).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
        let mean = dir.iter().sum::<f64>() / ny as f64;
        dir.iter_mut().for_each(|d| *d -= mean);
        let norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let mut candidate: Vec<f64> = q
            .iter()
            .zip(&dir)
            .map(|(&qi, &di)| (qi + di * PROBE_MAGNITUDE / norm).max(0.0))
            .collect();
        let total: f64 = candidate.iter().sum();
        if total <= 0.0 {
            continue;
        }
        candidate.iter_mut().for_each(|v| *v /= total);
        if divergence(objective(&candidate)) < value - 1e-9 {
            probes_ok = false;
        }
    }

    let closed = sibson_mi_general(kernel, input, alpha)?.value;
    let gap = value - closed;
    Ok(OracleResult {
        value,
        resolution: PROBE_MAGNITUDE,
        gap_to_closed_form: gap,
        passed: probes_ok && gap.abs() <= VARIATIONAL_TOL,
    })
}

/// Curvature classification of the information-combining transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Curvature {
    Convex,
    Concave,
    Linear,
    Indefinite,
}

/// Curvature expected of `Λ(x, y)` at a given order: convex for α < 1 and
/// 2 < α < 3, concave for 1 < α < 2 and α > 3, exactly linear at α ∈ {2, 3}.
pub fn expected_curvature(alpha: &AlphaParam) -> Result<Curvature> {
    alpha.require_not_unit("curvature is classified for alpha != 1 only")?;
    let a = alpha.value();
    Ok(if (a - 2.0).abs() <= 1e-12 || (a - 3.0).abs() <= 1e-12 {
        Curvature::Linear
    } else if a < 1.0 || (2.0..3.0).contains(&a) {
        Curvature::Convex
    } else {
        Curvature::Concave
    })
}

/// Finite-difference scan of `Λ(x, y) = k_α(k_α⁻¹(x) ∗ k_α⁻¹(y))` over the
/// valid square of transform values.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexityScan {
    pub alpha: f64,
    pub h: f64,
    pub grid_points: usize,
    /// Extremes of the centered second difference in x and in y.
    pub min_second_diff: [f64; 2],
    pub max_second_diff: [f64; 2],
    pub skipped: usize,
    pub observed: Curvature,
    pub expected: Curvature,
    /// Worst violation of the expected sign pattern (0 when clean).
    pub worst_violation: f64,
    pub passed: bool,
}

/// Violations of the expected sign may not exceed this...
const CONVEXITY_SIGN_TOL: f64 = 1e-8;
/// ...and the linear orders must be flat to within this.
const CONVEXITY_LINEAR_TOL: f64 = 1e-6;
/// Raw second differences this small are indistinguishable from roundoff.
const CURVATURE_NOISE_FLOOR: f64 = 1e-11;

/// Verifies the convexity regimes by centered second differences with step
/// `h` on a `grid_points`² grid clipped `2h` inside the valid range.
pub fn convexity_scan(alpha: &AlphaParam, grid_points: usize, h: f64) -> Result<ConvexityScan> {
    alpha.require_not_unit("the transform is constant at alpha = 1")?;
    if !(1e-5..=1e-3).contains(&h) {
        return Err(Error::Domain(format!(
            "finite-difference step must be in [1e-5, 1e-3], got {h}"
        )));
    }
    if grid_points < 5 {
        return Err(Error::Usage("need at least 5 grid points".into()));
    }
    let a = alpha.value();
    let at_half = pow_sum_raw(0.5, a);
    let (v_lo, v_hi) = if at_half < 1.0 {
        (at_half, 1.0)
    } else {
        (1.0, at_half)
    };
    let lo = v_lo + 2.0 * h;
    let hi = v_hi - 2.0 * h;
    if hi <= lo {
        return Err(Error::Domain(format!(
            "valid range of the transform at alpha {a} is narrower than 4h"
        )));
    }
    let coords: Vec<f64> = (0..grid_points)
        .map(|i| lo + (hi - lo) * i as f64 / (grid_points - 1) as f64)
        .collect();
    // Precompute the inverse transform at every coordinate and offset; the
    // bisection dominates the cost otherwise.
    let invert = |v: f64| pow_sum_inv(v, alpha);
    let mut inv_mid = Vec::with_capacity(grid_points);
    let mut inv_plus = Vec::with_capacity(grid_points);
    let mut inv_minus = Vec::with_capacity(grid_points);
    let mut skipped = 0usize;
    for &c in &coords {
        if c - h < v_lo || c + h > v_hi {
            skipped += 1;
            inv_mid.push(None);
            inv_plus.push(None);
            inv_minus.push(None);
            continue;
        }
        inv_mid.push(Some(invert(c)?));
        inv_plus.push(Some(invert(c + h)?));
        inv_minus.push(Some(invert(c - h)?));
    }
    let lam = |p: f64, r: f64| -> Result<f64> {
        Ok(pow_sum_raw(binary_convolve(p, r)?, a))
    };
    let mut min_dd = [f64::INFINITY; 2];
    let mut max_dd = [f64::NEG_INFINITY; 2];
    for i in 0..grid_points {
        for j in 0..grid_points {
            let (Some(pi), Some(pj)) = (inv_mid[i], inv_mid[j]) else {
                continue;
            };
            // in x, with y fixed
            if let (Some(pp), Some(pm)) = (inv_plus[i], inv_minus[i]) {
                let dd = lam(pp, pj)? - 2.0 * lam(pi, pj)? + lam(pm, pj)?;
                min_dd[0] = min_dd[0].min(dd);
                max_dd[0] = max_dd[0].max(dd);
            }
            // in y, with x fixed
            if let (Some(pp), Some(pm)) = (inv_plus[j], inv_minus[j]) {
                let dd = lam(pi, pp)? - 2.0 * lam(pi, pj)? + lam(pi, pm)?;
                min_dd[1] = min_dd[1].min(dd);
                max_dd[1] = max_dd[1].max(dd);
            }
        }
    }
    let global_min = min_dd[0].min(min_dd[1]);
    let global_max = max_dd[0].max(max_dd[1]);
    let observed = if global_min.abs().max(global_max.abs()) <= CURVATURE_NOISE_FLOOR {
        Curvature::Linear
    } else if global_min >= -CONVEXITY_SIGN_TOL {
        Curvature::Convex
    } else if global_max <= CONVEXITY_SIGN_TOL {
        Curvature::Concave
    } else {
        Curvature::Indefinite
    };
    let expected = expected_curvature(alpha)?;
    let worst_violation = match expected {
        Curvature::Linear => global_min.abs().max(global_max.abs()),
        Curvature::Convex => (-global_min).max(0.0),
        Curvature::Concave => global_max.max(0.0),
        Curvature::Indefinite => 0.0,
    };
    let passed = match expected {
        Curvature::Linear => worst_violation <= CONVEXITY_LINEAR_TOL,
        _ => worst_violation <= CONVEXITY_SIGN_TOL,
    };
    Ok(ConvexityScan {
        alpha: a,
        h,
        grid_points,
        min_second_diff: min_dd,
        max_second_diff: max_dd,
        skipped,
        observed,
        expected,
        worst_violation,
        passed,
    })
}

/// Outcome of one convex-order check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ConvexOrderOutcome {
    /// Σ ξ Λ(x) ≥ Σ ξ Λ(y) held; `margin` is the (nonnegative up to
    /// tolerance) difference.
    Holds { margin: f64 },
    Violated { margin: f64 },
    /// The suffix-dominance premise did not hold, so the inequality is not
    /// implied; reported separately from a violation.
    PremiseNotMet,
}

/// Checks the convex-order transfer: given nondecreasing `xs`, `ys` and
/// weights `xi` with suffix dominance Σ_{j≥k} ξ_j x_j ≥ Σ_{j≥k} ξ_j y_j for
/// every k and equality over the full range, any convex Λ must satisfy
/// Σ ξ Λ(x) ≥ Σ ξ Λ(y) (up to 1e-10 here).
pub fn convex_order_check(
    xs: &[f64],
    ys: &[f64],
    xi: &[f64],
    lambda: impl Fn(f64) -> f64,
) -> Result<ConvexOrderOutcome> {
    if xs.len() != ys.len() || xs.len() != xi.len() || xs.is_empty() {
        return Err(Error::Usage(
            "sequences must be nonempty and of equal length".into(),
        ));
    }
    let nondecreasing = |s: &[f64]| s.windows(2).all(|w| w[1] >= w[0] - 1e-15);
    if !nondecreasing(xs) || !nondecreasing(ys) {
        return Ok(ConvexOrderOutcome::PremiseNotMet);
    }
    let mut suffix = 0.0;
    for k in (0..xs.len()).rev() {
        suffix += xi[k] * (xs[k] - ys[k]);
        if suffix < -1e-12 {
            return Ok(ConvexOrderOutcome::PremiseNotMet);
        }
    }
    if suffix.abs() > 1e-12 {
        // equality at the full range is part of the premise
        return Ok(ConvexOrderOutcome::PremiseNotMet);
    }
    let lhs = stable_sum(xs.iter().zip(xi).map(|(&x, &w)| w * lambda(x)));
    let rhs = stable_sum(ys.iter().zip(xi).map(|(&y, &w)| w * lambda(y)));
    let margin = lhs - rhs;
    Ok(if margin >= -1e-10 {
        ConvexOrderOutcome::Holds { margin }
    } else {
        ConvexOrderOutcome::Violated { margin }
    })
}

/// A random convex function: the maximum of a few affine pieces.
#[derive(Clone, Debug)]
pub struct ConvexPiecewise {
    pieces: Vec<(f64, f64)>,
}

impl ConvexPiecewise {
    pub fn random(rng: &mut ChaCha8Rng) -> Self {
        let n = 3 + (rng.gen::<u64>() % 6) as usize;
        let pieces = (0..n)
            .map(|_| {
                (
                    4.0 * rng.gen::<f64>() - 2.0,
                    2.0 * rng.gen::<f64>() - 1.0,
                )
            })
            .collect();
        Self { pieces }
    }

    pub fn affine(slope: f64, intercept: f64) -> Self {
        Self {
            pieces: vec![(slope, intercept)],
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.pieces
            .iter()
            .map(|&(a, b)| a * t + b)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// A randomized convex-order instance satisfying the premise by
/// construction: start from `xs = ys` and transfer weighted mass from
/// earlier to later indices, which preserves the full-range equality and
/// only raises suffix sums. With `corrupt`, the roles of `xs` and `ys`
/// are swapped, so some suffix sum is below its premise bound by at least
/// 1e-6 while both sequences stay nondecreasing.
pub fn random_convex_order_instance(
    rng: &mut ChaCha8Rng,
    len: usize,
    corrupt: bool,
) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    assert!(len >= 2);
    for _ in 0..1000 {
        let xi: Vec<f64> = (0..len).map(|_| 0.1 + 0.9 * rng.gen::<f64>()).collect();
        let mut ys = Vec::with_capacity(len);
        let mut y = 2.0 * rng.gen::<f64>() - 1.0;
        for _ in 0..len {
            ys.push(y);
            y += 0.5 * rng.gen::<f64>();
        }
        let mut xs = ys.clone();
        let transfers = 5 + (rng.gen::<u64>() % 10) as usize;
        let mut biggest = 0.0_f64;
        for _ in 0..transfers {
            let i = (rng.gen::<u64>() % (len as u64 - 1)) as usize;
            let j = i + 1 + (rng.gen::<u64>() % (len as u64 - i as u64 - 1)) as usize;
            let slack_i = if i == 0 {
                f64::INFINITY
            } else {
                xs[i] - xs[i - 1]
            };
            let slack_j = if j + 1 == len {
                f64::INFINITY
            } else {
                (xs[j + 1] - xs[j]) * xi[j] / xi[i]
            };
            let bound = slack_i.min(slack_j).min(0.5);
            if bound <= 0.0 {
                continue;
            }
            let delta = rng.gen::<f64>() * bound;
            xs[i] -= delta;
            xs[j] += delta * xi[i] / xi[j];
            biggest = biggest.max(delta * xi[i]);
        }
        if corrupt {
            if biggest < 1e-6 {
                continue; // too mild for the checker to flag; redraw
            }
            return (ys, xs, xi);
        }
        return (xs, ys, xi);
    }
    unreachable!("instance generation kept drawing degenerate transfers")
}

/// Grid-maximizes the mutual information over the input probability and
/// checks that the uniform input attains the maximum and the closed-form
/// capacity.
pub fn capacity_argmax_scan(
    ch: &BisoChannel,
    alpha: &AlphaParam,
    grid_points: usize,
) -> Result<OracleResult> {
    if grid_points < 101 || grid_points % 2 == 0 {
        return Err(Error::Usage(format!(
            "grid must be odd and at least 101 points so that 1/2 is on it, got {grid_points}"
        )));
    }
    let mut best = f64::NEG_INFINITY;
    for i in 0..grid_points {
        let x = i as f64 / (grid_points - 1) as f64;
        best = best.max(mi_raw(ch, x, alpha));
    }
    let at_half = mi_raw(ch, 0.5, alpha);
    let c = capacity_raw(ch, alpha).0;
    let gap = best - c;
    Ok(OracleResult {
        value: best,
        resolution: 1.0 / (grid_points - 1) as f64,
        gap_to_closed_form: gap,
        passed: gap.abs() <= 1e-9 && at_half >= best - 1e-12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::sibson_mi;
    use approx::assert_abs_diff_eq;

    fn alpha(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    #[test]
    fn variational_matches_closed_form_on_bsc() {
        let ch = BisoChannel::bsc(0.1).unwrap();
        let kernel = ch.to_kernel().unwrap();
        let uni = FiniteDist::uniform(2).unwrap();
        let r = variational_sibson(&kernel, &uni, &alpha(2.0), 80).unwrap();
        assert!(r.passed, "gap {}", r.gap_to_closed_form);
        assert_abs_diff_eq!(r.value, 0.49469624183610694, epsilon = 1e-7);
    }

    #[test]
    fn variational_zero_cases() {
        let flat = vec![
            FiniteDist::new(vec![0.3, 0.7]).unwrap(),
            FiniteDist::new(vec![0.3, 0.7]).unwrap(),
        ];
        let uni = FiniteDist::uniform(2).unwrap();
        let r = variational_sibson(&flat, &uni, &alpha(2.0), 60).unwrap();
        assert!(r.passed);
        assert!(r.value.abs() <= 1e-9);

        let ch = BisoChannel::random(3, 9).unwrap();
        let kernel = ch.to_kernel().unwrap();
        let point = FiniteDist::point_mass(2, 0).unwrap();
        let r = variational_sibson(&kernel, &point, &alpha(0.4), 60).unwrap();
        assert!(r.passed);
        assert!(r.value.abs() <= 1e-9);
    }

    #[test]
    fn variational_handles_alpha_below_one() {
        let ch = BisoChannel::bec(0.3).unwrap();
        let kernel = ch.to_kernel().unwrap();
        let input = FiniteDist::bernoulli(0.3).unwrap();
        let r = variational_sibson(&kernel, &input, &alpha(0.4), 80).unwrap();
        let direct = sibson_mi(&ch, 0.3, &alpha(0.4)).unwrap().value;
        assert!(r.passed, "gap {}", r.gap_to_closed_form);
        assert_abs_diff_eq!(r.value, direct, epsilon = 1e-6);
    }

    #[test]
    fn variational_rejects_oversized_alphabets() {
        let rows: Vec<FiniteDist> = (0..2)
            .map(|_| FiniteDist::uniform(20).unwrap())
            .collect();
        let uni = FiniteDist::uniform(2).unwrap();
        assert!(variational_sibson(&rows, &uni, &alpha(2.0), 10).is_err());
    }

    #[test]
    fn convexity_scan_examples() {
        let scan = convexity_scan(&alpha(2.0), 33, 1e-4).unwrap();
        assert_eq!(scan.expected, Curvature::Linear);
        assert!(scan.passed, "violation {}", scan.worst_violation);
        assert!(scan.worst_violation <= 1e-6);

        let scan = convexity_scan(&alpha(1.5), 33, 1e-4).unwrap();
        assert_eq!(scan.expected, Curvature::Concave);
        assert!(scan.passed, "violation {}", scan.worst_violation);

        let scan = convexity_scan(&alpha(0.5), 33, 1e-4).unwrap();
        assert_eq!(scan.expected, Curvature::Convex);
        assert!(scan.passed, "violation {}", scan.worst_violation);
        assert_eq!(scan.observed, Curvature::Convex);

        assert!(convexity_scan(&alpha(2.0), 33, 1e-2).is_err());
    }

    #[test]
    fn convex_order_check_basics() {
        let xi = [0.5, 1.0, 0.25];
        let xs = [0.0, 1.0, 2.0];
        // equal sequences hold with equality
        let out = convex_order_check(&xs, &xs, &xi, |t| t * t).unwrap();
        match out {
            ConvexOrderOutcome::Holds { margin } => assert!(margin.abs() <= 1e-12),
            other => panic!("unexpected outcome {other:?}"),
        }
        // affine functions give equality on any valid instance
        let mut rng = trial_rng(3, 0);
        let (a, b, w) = random_convex_order_instance(&mut rng, 6, false);
        let f = ConvexPiecewise::affine(1.7, -0.3);
        match convex_order_check(&a, &b, &w, |t| f.eval(t)).unwrap() {
            ConvexOrderOutcome::Holds { margin } => assert!(margin.abs() <= 1e-12),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn convex_order_randomized_trials() {
        for trial in 0..500u64 {
            let mut rng = trial_rng(41, trial);
            let len = 3 + (trial % 6) as usize;
            let (xs, ys, xi) = random_convex_order_instance(&mut rng, len, false);
            let f = ConvexPiecewise::random(&mut rng);
            match convex_order_check(&xs, &ys, &xi, |t| f.eval(t)).unwrap() {
                ConvexOrderOutcome::Holds { .. } => {}
                other => panic!("trial {trial}: {other:?}"),
            }
            // the documented example function
            match convex_order_check(&xs, &ys, &xi, |t| t.max(2.0 * t - 1.0)).unwrap() {
                ConvexOrderOutcome::Holds { .. } => {}
                other => panic!("trial {trial} (max affine): {other:?}"),
            }
        }
    }

    #[test]
    fn convex_order_rejects_corrupted_premise() {
        for trial in 0..200u64 {
            let mut rng = trial_rng(42, trial);
            let (xs, ys, xi) = random_convex_order_instance(&mut rng, 5, true);
            let out = convex_order_check(&xs, &ys, &xi, |t| t * t).unwrap();
            assert_eq!(out, ConvexOrderOutcome::PremiseNotMet, "trial {trial}");
        }
    }

    #[test]
    fn argmax_scan_examples() {
        let r = capacity_argmax_scan(&BisoChannel::bsc(0.1).unwrap(), &alpha(2.0), 101).unwrap();
        assert!(r.passed);
        assert_abs_diff_eq!(r.value, 0.49469624183610694, epsilon = 1e-9);

        let r = capacity_argmax_scan(&BisoChannel::bsc(0.5).unwrap(), &alpha(2.0), 101).unwrap();
        assert!(r.passed);
        assert!(r.value.abs() <= 1e-12);

        let r =
            capacity_argmax_scan(&BisoChannel::random(4, 17).unwrap(), &alpha(0.4), 201).unwrap();
        assert!(r.passed);

        assert!(capacity_argmax_scan(&BisoChannel::bsc(0.1).unwrap(), &alpha(2.0), 100).is_err());
        assert!(capacity_argmax_scan(&BisoChannel::bsc(0.1).unwrap(), &alpha(2.0), 51).is_err());
    }
}

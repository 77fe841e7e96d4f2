//! Scalar Rényi primitives shared by the rest of the crate: binary Rényi
//! entropy, the transform `p ↦ p^α + (1-p)^α` and its inverse, binary
//! convolution, and Rényi divergence on finite distributions.
//!
//! All entropies and divergences are in nats.

use crate::error::{Error, Result};

/// |α - 1| below this counts as α = 1 (Shannon/KL branch).
pub const UNIT_ALPHA_TOL: f64 = 1e-12;

/// Absolute tolerance on distribution mass.
pub const MASS_TOL: f64 = 1e-12;

/// Rényi order α. Must be finite and positive; α = 1 is tracked explicitly
/// so callers can route to the Shannon/KL special cases instead of relying
/// on limits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaParam {
    value: f64,
    is_unit: bool,
}

impl AlphaParam {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be finite and > 0, got {value}"
            )));
        }
        Ok(Self {
            value,
            is_unit: (value - 1.0).abs() < UNIT_ALPHA_TOL,
        })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn is_unit(&self) -> bool {
        self.is_unit
    }

    /// The reciprocal order 1/α, used as the transform parameter by the
    /// Lorenz-curve machinery.
    pub fn reciprocal(&self) -> AlphaParam {
        AlphaParam {
            value: 1.0 / self.value,
            is_unit: self.is_unit,
        }
    }

    pub(crate) fn require_not_unit(&self, what: &'static str) -> Result<()> {
        if self.is_unit {
            Err(Error::UnitAlpha(what))
        } else {
            Ok(())
        }
    }
}

/// A probability distribution on a finite indexed alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDist {
    probs: Vec<f64>,
}

impl FiniteDist {
    /// Validates entries in [0,1] and total mass 1 within [`MASS_TOL`].
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Validation("empty distribution".into()));
        }
        for (i, &p) in probs.iter().enumerate() {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Validation(format!(
                    "probability out of [0,1] at index {i}: {p}"
                )));
            }
        }
        let mass: f64 = stable_sum(probs.iter().copied());
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(Error::Validation(format!(
                "distribution mass {mass} differs from 1 by more than {MASS_TOL}"
            )));
        }
        Ok(Self { probs })
    }

    /// Bernoulli distribution `[p, 1-p]` with `p = P(X = 0)`.
    pub fn bernoulli(p: f64) -> Result<Self> {
        check_probability(p, "p")?;
        Self::new(vec![p, 1.0 - p])
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("empty distribution".into()));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    pub fn point_mass(n: usize, at: usize) -> Result<Self> {
        if at >= n {
            return Err(Error::Usage(format!(
                "point mass index {at} out of range for alphabet of size {n}"
            )));
        }
        let mut probs = vec![0.0; n];
        probs[at] = 1.0;
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

pub(crate) fn check_probability(p: f64, name: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("{name} must be in [0,1], got {p}")));
    }
    Ok(())
}

/// Sums `terms` in ascending order of magnitude with Kahan compensation.
/// Keeps the 1e-12 tolerances elsewhere in the crate honest even for
/// channels with thousands of output pairs.
pub(crate) fn stable_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let mut v: Vec<f64> = terms.collect();
    v.sort_unstable_by(|a, b| a.abs().total_cmp(&b.abs()));
    let mut sum = 0.0;
    let mut comp = 0.0;
    for t in v {
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    sum
}

fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Binary Rényi entropy h_α(p) in nats.
///
/// For α ≠ 1 this is `ln(p^α + (1-p)^α) / (1-α)`; at α = 1 it is the Shannon
/// binary entropy with the 0·ln 0 := 0 convention.
pub fn binary_entropy(p: f64, alpha: &AlphaParam) -> Result<f64> {
    check_probability(p, "p")?;
    if alpha.is_unit() {
        Ok(-xlnx(p) - xlnx(1.0 - p))
    } else {
        Ok(pow_sum_raw(p, alpha.value()).ln() / (1.0 - alpha.value()))
    }
}

#[inline]
pub(crate) fn pow_sum_raw(p: f64, alpha: f64) -> f64 {
    p.powf(alpha) + (1.0 - p).powf(alpha)
}

/// The transform `p^α + (1-p)^α`, the exponential of `(1-α)·h_α(p)`.
///
/// Symmetric under p ↦ 1-p. Rejected at α = 1 where it degenerates to the
/// constant 1.
pub fn pow_sum(p: f64, alpha: &AlphaParam) -> Result<f64> {
    alpha.require_not_unit("pow_sum is identically 1 at alpha = 1")?;
    check_probability(p, "p")?;
    Ok(pow_sum_raw(p, alpha.value()))
}

/// Inverts [`pow_sum`] on [0, 1/2], where it is strictly monotone
/// (decreasing for α > 1, increasing for α < 1).
///
/// `v` must lie in the closed range spanned by `pow_sum(0) = 1` and
/// `pow_sum(1/2) = 2^{1-α}`, with 1e-9 slack; the result satisfies
/// `|pow_sum(p) - v| ≤ 1e-12` for the α ranges used in this crate.
pub fn pow_sum_inv(v: f64, alpha: &AlphaParam) -> Result<f64> {
    alpha.require_not_unit("pow_sum_inv is undefined at alpha = 1")?;
    let a = alpha.value();
    let at_half = pow_sum_raw(0.5, a); // 2^{1-α}
    let (v_min, v_max) = if at_half <= 1.0 {
        (at_half, 1.0)
    } else {
        (1.0, at_half)
    };
    if v < v_min - 1e-9 || v > v_max + 1e-9 {
        return Err(Error::Domain(format!(
            "value {v} outside pow_sum range [{v_min}, {v_max}] for alpha {a}"
        )));
    }
    let v = v.clamp(v_min, v_max);

    // Bisection on [0, 1/2]; k decreasing there for α > 1, increasing for α < 1.
    // k is flat at 1/2, so values there pin p only to ~sqrt(ulp); inside the
    // roundoff band of the target we push toward 1/2, which resolves the
    // plateau to its correct edge instead of stalling a few 1e-9 short.
    let decreasing = a > 1.0;
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    let mut mid = 0.25;
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let km = pow_sum_raw(mid, a);
        if (km - v).abs() <= 1e-12 && hi - lo <= 1e-12 {
            break;
        }
        if (km - v).abs() <= 4.0 * f64::EPSILON || (km > v) == decreasing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}

/// Binary convolution `a ∗ b = a(1-b) + (1-a)b`.
pub fn binary_convolve(a: f64, b: f64) -> Result<f64> {
    check_probability(a, "a")?;
    check_probability(b, "b")?;
    Ok(a * (1.0 - b) + (1.0 - a) * b)
}

/// Rényi divergence D_α(P‖Q) in nats, possibly +∞.
///
/// Conventions: terms with p(a) = 0 contribute 0; for α > 1 a zero of Q on
/// the support of P gives +∞; for α < 1 the sum runs over the common
/// support and an empty common support gives +∞. α = 1 routes to
/// Kullback-Leibler.
pub fn renyi_divergence(p: &FiniteDist, q: &FiniteDist, alpha: &AlphaParam) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::Usage(format!(
            "mismatched alphabets: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    if alpha.is_unit() {
        return kl_divergence(p, q);
    }
    let a = alpha.value();
    let mut terms = Vec::with_capacity(p.len());
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            if a > 1.0 {
                return Ok(f64::INFINITY);
            }
            continue; // α < 1: restrict to the common support
        }
        terms.push(pi.powf(a) * qi.powf(1.0 - a));
    }
    let sum = stable_sum(terms.into_iter());
    if sum == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(sum.ln() / (a - 1.0))
}

/// Kullback-Leibler divergence in nats, possibly +∞.
pub fn kl_divergence(p: &FiniteDist, q: &FiniteDist) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::Usage(format!(
            "mismatched alphabets: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    let mut terms = Vec::with_capacity(p.len());
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Ok(f64::INFINITY);
        }
        terms.push(pi * (pi / qi).ln());
    }
    Ok(stable_sum(terms.into_iter()))
}

/// Conditional Rényi divergence D_α(P_{Y|X} ‖ Q_{Y|X} | P_X), defined as the
/// divergence between the joint distributions P_{Y|X}·P_X and Q_{Y|X}·P_X.
pub fn conditional_renyi_divergence(
    kernel_p: &[FiniteDist],
    kernel_q: &[FiniteDist],
    input: &FiniteDist,
    alpha: &AlphaParam,
) -> Result<f64> {
    if kernel_p.len() != kernel_q.len() || kernel_p.len() != input.len() {
        return Err(Error::Usage(
            "kernels and input must share the input alphabet".into(),
        ));
    }
    if kernel_p.is_empty() {
        return Err(Error::Usage("empty kernel".into()));
    }
    let ny = kernel_p[0].len();
    if kernel_p
        .iter()
        .chain(kernel_q.iter())
        .any(|row| row.len() != ny)
    {
        return Err(Error::Usage(
            "kernel rows must share the output alphabet".into(),
        ));
    }
    let joint = |kernel: &[FiniteDist]| -> Result<FiniteDist> {
        let mut probs = Vec::with_capacity(kernel.len() * ny);
        for (row, &w) in kernel.iter().zip(input.probs()) {
            probs.extend(row.probs().iter().map(|&p| w * p));
        }
        FiniteDist::new(probs)
    };
    renyi_divergence(&joint(kernel_p)?, &joint(kernel_q)?, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alpha(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    #[test]
    fn alpha_param_validation() {
        assert!(AlphaParam::new(0.0).is_err());
        assert!(AlphaParam::new(-2.0).is_err());
        assert!(AlphaParam::new(f64::NAN).is_err());
        assert!(AlphaParam::new(f64::INFINITY).is_err());
        assert!(alpha(1.0).is_unit());
        assert!(alpha(1.0 + 5e-13).is_unit());
        assert!(!alpha(1.0 + 1e-10).is_unit());
    }

    #[test]
    fn entropy_examples() {
        assert_abs_diff_eq!(
            binary_entropy(0.5, &alpha(2.0)).unwrap(),
            std::f64::consts::LN_2,
            epsilon = 1e-15
        );
        assert_eq!(binary_entropy(0.0, &alpha(0.7)).unwrap(), 0.0);
        // -ln(0.82)
        assert_abs_diff_eq!(
            binary_entropy(0.1, &alpha(2.0)).unwrap(),
            0.19845093872383832,
            epsilon = 1e-13
        );
        // Shannon branch
        assert_abs_diff_eq!(
            binary_entropy(0.1, &alpha(1.0)).unwrap(),
            0.3250829733914482,
            epsilon = 1e-13
        );
        assert!(binary_entropy(1.2, &alpha(2.0)).is_err());
        assert!(binary_entropy(-0.1, &alpha(2.0)).is_err());
    }

    #[test]
    fn pow_sum_examples() {
        assert_abs_diff_eq!(pow_sum(0.5, &alpha(2.0)).unwrap(), 0.5, epsilon = 0.0);
        assert_eq!(pow_sum(1.0, &alpha(0.5)).unwrap(), 1.0);
        assert_abs_diff_eq!(pow_sum(0.25, &alpha(2.0)).unwrap(), 0.625, epsilon = 1e-15);
        assert!(matches!(
            pow_sum(0.5, &alpha(1.0)),
            Err(Error::UnitAlpha(_))
        ));
    }

    #[test]
    fn pow_sum_inv_examples() {
        assert_abs_diff_eq!(pow_sum_inv(0.5, &alpha(2.0)).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(pow_sum_inv(1.0, &alpha(2.0)).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            pow_sum_inv(0.625, &alpha(2.0)).unwrap(),
            0.25,
            epsilon = 1e-12
        );
        // out of range beyond the 1e-9 slack
        assert!(pow_sum_inv(1.1, &alpha(2.0)).is_err());
        assert!(pow_sum_inv(0.4, &alpha(2.0)).is_err());
    }

    #[test]
    fn pow_sum_round_trip_grid() {
        for &a in &[0.3, 0.5, 0.8, 1.5, 2.0, 3.0, 5.0] {
            let ap = alpha(a);
            for i in 0..=100 {
                let p = 0.5 * i as f64 / 100.0;
                let v = pow_sum(p, &ap).unwrap();
                let back = pow_sum_inv(v, &ap).unwrap();
                assert!(
                    (back - p).abs() <= 1e-9,
                    "round trip failed: alpha={a} p={p} back={back}"
                );
            }
        }
    }

    #[test]
    fn pow_sum_symmetric_on_dyadic_grid() {
        // Dyadic p keeps 1-(1-p) == p exact, so symmetry must be bit-exact.
        for &a in &[0.3, 0.7, 1.5, 2.0, 4.0] {
            let ap = alpha(a);
            for i in 0..=256u32 {
                let p = i as f64 / 256.0;
                assert_eq!(
                    pow_sum(p, &ap).unwrap().to_bits(),
                    pow_sum(1.0 - p, &ap).unwrap().to_bits()
                );
            }
        }
    }

    #[test]
    fn pow_sum_monotone_on_half_interval() {
        // Strictly decreasing on [0, 1/2] for α > 1, increasing for α < 1.
        for &a in &[0.3, 0.5, 0.8, 1.5, 2.0, 3.0, 5.0] {
            let ap = alpha(a);
            let mut prev = pow_sum(0.0, &ap).unwrap();
            for i in 1..=64 {
                let p = 0.5 * i as f64 / 64.0;
                let v = pow_sum(p, &ap).unwrap();
                if a > 1.0 {
                    assert!(v < prev, "not decreasing at alpha={a}, p={p}");
                } else {
                    assert!(v > prev, "not increasing at alpha={a}, p={p}");
                }
                prev = v;
            }
        }
    }

    #[test]
    fn convolve_examples() {
        assert_eq!(binary_convolve(0.5, 0.9).unwrap(), 0.5);
        assert_eq!(binary_convolve(0.0, 0.37).unwrap(), 0.37);
        assert_abs_diff_eq!(binary_convolve(0.2, 0.3).unwrap(), 0.38, epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn convolve_commutative(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            prop_assert_eq!(
                binary_convolve(a, b).unwrap().to_bits(),
                binary_convolve(b, a).unwrap().to_bits()
            );
        }

        #[test]
        fn convolve_involution(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            let lhs = binary_convolve(a, 1.0 - b).unwrap();
            let rhs = 1.0 - binary_convolve(a, b).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-15);
        }

        #[test]
        fn convolve_stays_in_unit_interval(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            let c = binary_convolve(a, b).unwrap();
            prop_assert!((0.0..=1.0).contains(&c));
        }
    }

    fn random_dist(rng: &mut ChaCha8Rng, n: usize, full_support: bool) -> FiniteDist {
        loop {
            let mut v: Vec<f64> = (0..n)
                .map(|_| {
                    if full_support {
                        0.05 + rng.gen::<f64>()
                    } else {
                        rng.gen::<f64>()
                    }
                })
                .collect();
            let s: f64 = v.iter().sum();
            if s <= 0.0 {
                continue;
            }
            v.iter_mut().for_each(|x| *x /= s);
            if let Ok(d) = FiniteDist::new(v) {
                return d;
            }
        }
    }

    #[test]
    fn divergence_examples() {
        let p = FiniteDist::bernoulli(0.5).unwrap();
        let q = FiniteDist::bernoulli(0.25).unwrap();
        assert_abs_diff_eq!(
            renyi_divergence(&p, &q, &alpha(2.0)).unwrap(),
            0.28768207245178085, // ln(4/3)
            epsilon = 1e-13
        );
        assert_eq!(renyi_divergence(&p, &p, &alpha(3.0)).unwrap(), 0.0);
        let one = FiniteDist::bernoulli(1.0).unwrap();
        let zero = FiniteDist::bernoulli(0.0).unwrap();
        assert_eq!(
            renyi_divergence(&one, &zero, &alpha(0.5)).unwrap(),
            f64::INFINITY
        );
        assert_eq!(
            renyi_divergence(&one, &zero, &alpha(2.0)).unwrap(),
            f64::INFINITY
        );
        let tri = FiniteDist::new(vec![0.2, 0.3, 0.5]).unwrap();
        assert!(matches!(
            renyi_divergence(&p, &tri, &alpha(2.0)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn divergence_nonnegative_and_zero_on_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = 2 + (rng.gen::<u64>() % 7) as usize;
            let p = random_dist(&mut rng, n, false);
            let q = random_dist(&mut rng, n, false);
            for &a in &[0.3, 0.7, 1.0, 1.4, 2.5, 6.0] {
                let d = renyi_divergence(&p, &q, &alpha(a)).unwrap();
                assert!(d >= -1e-12, "negative divergence {d} at alpha {a}");
                let dpp = renyi_divergence(&p, &p, &alpha(a)).unwrap();
                assert!(dpp.abs() <= 1e-12, "nonzero self-divergence {dpp}");
            }
        }
    }

    #[test]
    fn divergence_shannon_limit() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let n = 2 + (rng.gen::<u64>() % 7) as usize;
            let p = random_dist(&mut rng, n, true);
            let q = random_dist(&mut rng, n, true);
            let kl = kl_divergence(&p, &q).unwrap();
            for &a in &[1.0 - 1e-4, 1.0 + 1e-4] {
                let d = renyi_divergence(&p, &q, &alpha(a)).unwrap();
                assert!(
                    (d - kl).abs() <= 1e-3,
                    "seam violated: D_{a} = {d}, KL = {kl}"
                );
            }
        }
    }

    #[test]
    fn conditional_divergence_examples() {
        let bsc = |p: f64| {
            vec![
                FiniteDist::bernoulli(1.0 - p).unwrap(),
                FiniteDist::bernoulli(p).unwrap(),
            ]
        };
        let k1 = bsc(0.1);
        let k2 = bsc(0.2);
        let uni = FiniteDist::uniform(2).unwrap();

        // equal kernels
        assert_abs_diff_eq!(
            conditional_renyi_divergence(&k1, &k1, &uni, &alpha(2.0)).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        // deterministic input reduces to a single row
        let point = FiniteDist::point_mass(2, 0).unwrap();
        let row = renyi_divergence(&k1[0], &k2[0], &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(
            conditional_renyi_divergence(&k1, &k2, &point, &alpha(2.0)).unwrap(),
            row,
            epsilon = 1e-13
        );
        // symmetric rows: equals the Bernoulli divergence
        let expect =
            renyi_divergence(&k1[0], &k2[0], &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(
            conditional_renyi_divergence(&k1, &k2, &uni, &alpha(2.0)).unwrap(),
            expect,
            epsilon = 1e-13
        );
    }

    #[test]
    fn finite_dist_validation() {
        assert!(FiniteDist::new(vec![]).is_err());
        assert!(FiniteDist::new(vec![0.5, 0.6]).is_err());
        assert!(FiniteDist::new(vec![-0.1, 1.1]).is_err());
        assert!(FiniteDist::new(vec![0.25; 4]).is_ok());
    }
}

//! Rényi mutual information measures and the α-capacity.
//!
//! Sibson's mutual information is the minimum over output reference
//! distributions of the conditional Rényi divergence; it admits the closed
//! form
//!
//! ```text
//! I_α(X:Y) = α/(α-1) · ln Σ_y ( Σ_x P(x) P(y|x)^α )^{1/α}
//! ```
//!
//! For a BISO channel in pair form this collapses to a sum over output
//! pairs, and the α-capacity is attained at the uniform input, where it is
//! determined by the single statistic `d_C = Σ_y (p_y^α + p_{-y}^α)^{1/α}`.
//! Arimoto's variant equals the Sibson form evaluated at the tilted input
//! `x_α = x^α / (x^α + (1-x)^α)`. α = 1 is handled by explicit Shannon
//! branches rather than limits.

use crate::channel::BisoChannel;
use crate::error::{Error, Result};
use crate::renyi::{
    binary_entropy, check_probability, stable_sum, AlphaParam, FiniteDist,
};
use serde::Serialize;
use std::f64::consts::LN_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MiVariant {
    Sibson,
    Arimoto,
    Shannon,
}

/// A mutual-information value together with the point it was evaluated at.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MiValue {
    /// Value in nats; nonnegative up to roundoff and at most ln 2 for
    /// binary-input channels.
    pub value: f64,
    pub alpha: f64,
    /// The input distribution parameter x = P(X = 0).
    pub input_x: f64,
    pub variant: MiVariant,
}

/// α-capacity of a channel. `d_c` is the pair-mass statistic that
/// determines the capacity for α ≠ 1; it is unset on the Shannon branch.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CapacityValue {
    pub c_alpha: f64,
    pub d_c: Option<f64>,
    pub alpha: f64,
}

/// The two Rényi orders at which the BISO mutual information degenerates to
/// a function of the α-capacity alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialAlpha {
    OneThird,
    OneHalf,
}

impl SpecialAlpha {
    pub fn alpha(&self) -> f64 {
        match self {
            SpecialAlpha::OneThird => 1.0 / 3.0,
            SpecialAlpha::OneHalf => 0.5,
        }
    }
}

fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Sibson mutual information of a BISO channel at input x, α ≠ 1 assumed.
///
/// Per pair: with q = p^α/(p^α + m^α) and mass (p^α + m^α)^{1/α}, the pair
/// contributes mass · k_{1/α}(x ∗ q), which expands to the two kernel
/// columns (x·m^α + (1-x)·p^α)^{1/α} + (x·p^α + (1-x)·m^α)^{1/α}.
pub(crate) fn sibson_raw(ch: &BisoChannel, x: f64, alpha: f64) -> f64 {
    let inv = 1.0 / alpha;
    let mut terms = Vec::with_capacity(2 * ch.n_pairs());
    for &(p, m) in ch.pairs() {
        let pa = p.powf(alpha);
        let ma = m.powf(alpha);
        if pa + ma == 0.0 {
            continue;
        }
        terms.push((x * ma + (1.0 - x) * pa).powf(inv));
        terms.push((x * pa + (1.0 - x) * ma).powf(inv));
    }
    alpha / (alpha - 1.0) * stable_sum(terms.into_iter()).ln()
}

/// Shannon mutual information of a BISO channel at input x, as
/// H(Y) - H(Y|X) with the 0·ln 0 := 0 convention.
pub(crate) fn shannon_raw(ch: &BisoChannel, x: f64) -> f64 {
    let mut terms = Vec::with_capacity(4 * ch.n_pairs());
    for &(p, m) in ch.pairs() {
        // output marginals of the pair
        terms.push(-xlnx(x * p + (1.0 - x) * m));
        terms.push(-xlnx(x * m + (1.0 - x) * p));
        // conditional entropy contribution (both rows share the pair multiset)
        terms.push(xlnx(p));
        terms.push(xlnx(m));
    }
    stable_sum(terms.into_iter())
}

/// Routes to the Sibson or Shannon branch depending on α.
pub(crate) fn mi_raw(ch: &BisoChannel, x: f64, alpha: &AlphaParam) -> f64 {
    if alpha.is_unit() {
        shannon_raw(ch, x)
    } else {
        sibson_raw(ch, x, alpha.value())
    }
}

/// Sibson mutual information for an arbitrary finite kernel
/// (`kernel[x]` is the row P(·|X = x)) and input distribution.
/// α = 1 routes to the Shannon branch.
pub fn sibson_mi_general(
    kernel: &[FiniteDist],
    input: &FiniteDist,
    alpha: &AlphaParam,
) -> Result<MiValue> {
    validate_kernel(kernel, input)?;
    let input_x = input.probs()[0];
    if alpha.is_unit() {
        return Ok(MiValue {
            value: shannon_mi_general_raw(kernel, input),
            alpha: alpha.value(),
            input_x,
            variant: MiVariant::Shannon,
        });
    }
    let a = alpha.value();
    let ny = kernel[0].len();
    let mut terms = Vec::with_capacity(ny);
    for y in 0..ny {
        let col = stable_sum(
            kernel
                .iter()
                .zip(input.probs())
                .map(|(row, &w)| w * row.probs()[y].powf(a)),
        );
        terms.push(col.powf(1.0 / a));
    }
    Ok(MiValue {
        value: a / (a - 1.0) * stable_sum(terms.into_iter()).ln(),
        alpha: a,
        input_x,
        variant: MiVariant::Sibson,
    })
}

fn validate_kernel(kernel: &[FiniteDist], input: &FiniteDist) -> Result<()> {
    if kernel.is_empty() {
        return Err(Error::Usage("empty kernel".into()));
    }
    if kernel.len() != input.len() {
        return Err(Error::Usage(format!(
            "kernel has {} rows but input has {} symbols",
            kernel.len(),
            input.len()
        )));
    }
    let ny = kernel[0].len();
    if kernel.iter().any(|row| row.len() != ny) {
        return Err(Error::Usage("kernel rows differ in length".into()));
    }
    Ok(())
}

fn shannon_mi_general_raw(kernel: &[FiniteDist], input: &FiniteDist) -> f64 {
    let ny = kernel[0].len();
    let mut terms = Vec::with_capacity(ny + kernel.len() * ny);
    for y in 0..ny {
        let marginal = stable_sum(
            kernel
                .iter()
                .zip(input.probs())
                .map(|(row, &w)| w * row.probs()[y]),
        );
        terms.push(-xlnx(marginal));
    }
    for (row, &w) in kernel.iter().zip(input.probs()) {
        for &p in row.probs() {
            terms.push(w * xlnx(p));
        }
    }
    stable_sum(terms.into_iter())
}

/// Sibson mutual information of a BISO channel at `x = P(X = 0)`.
/// α = 1 routes to [`shannon_mi`].
pub fn sibson_mi(ch: &BisoChannel, x: f64, alpha: &AlphaParam) -> Result<MiValue> {
    check_probability(x, "x")?;
    if alpha.is_unit() {
        return shannon_mi(ch, x);
    }
    Ok(MiValue {
        value: sibson_raw(ch, x, alpha.value()),
        alpha: alpha.value(),
        input_x: x,
        variant: MiVariant::Sibson,
    })
}

/// Shannon mutual information of a BISO channel at `x = P(X = 0)`, in nats.
pub fn shannon_mi(ch: &BisoChannel, x: f64) -> Result<MiValue> {
    check_probability(x, "x")?;
    Ok(MiValue {
        value: shannon_raw(ch, x),
        alpha: 1.0,
        input_x: x,
        variant: MiVariant::Shannon,
    })
}

/// The tilted input `x_α = x^α / (x^α + (1-x)^α)`. Fixes 0, 1/2 and 1 for
/// every α, and is the identity at α = 1.
pub fn tilt(x: f64, alpha: &AlphaParam) -> Result<f64> {
    check_probability(x, "x")?;
    if alpha.is_unit() {
        return Ok(x);
    }
    let a = alpha.value();
    let xa = x.powf(a);
    Ok(xa / (xa + (1.0 - x).powf(a)))
}

/// Arimoto mutual information of a BISO channel: the Sibson pair form
/// evaluated at the tilted input x_α. α = 1 routes to [`shannon_mi`].
pub fn arimoto_mi(ch: &BisoChannel, x: f64, alpha: &AlphaParam) -> Result<MiValue> {
    check_probability(x, "x")?;
    if alpha.is_unit() {
        return shannon_mi(ch, x);
    }
    let xa = tilt(x, alpha)?;
    Ok(MiValue {
        value: sibson_raw(ch, xa, alpha.value()),
        alpha: alpha.value(),
        input_x: x,
        variant: MiVariant::Arimoto,
    })
}

/// Arimoto conditional entropy H_α(X|Y) = H_α(X) - I_α(X:Y), which is the
/// chain rule that distinguishes Arimoto's definition. The Shannon branch
/// is the usual conditional entropy.
pub fn arimoto_conditional_entropy(ch: &BisoChannel, x: f64, alpha: &AlphaParam) -> Result<f64> {
    let h = binary_entropy(x, alpha)?;
    Ok(h - arimoto_mi(ch, x, alpha)?.value)
}

/// Capacity and d_C without the cross-checking asserts; used by the
/// calibration bisections, which call this in a tight loop.
pub(crate) fn capacity_raw(ch: &BisoChannel, alpha: &AlphaParam) -> (f64, Option<f64>) {
    if alpha.is_unit() {
        return (shannon_raw(ch, 0.5), None);
    }
    let a = alpha.value();
    let d_c = stable_sum(
        ch.pairs()
            .iter()
            .map(|&(p, m)| (p.powf(a) + m.powf(a)).powf(1.0 / a)),
    );
    (LN_2 + a / (a - 1.0) * d_c.ln(), Some(d_c))
}

/// α-capacity of a BISO channel, attained at the uniform input:
/// `C_α = ln 2 + α/(α-1) · ln d_C` with
/// `d_C = Σ_y (p_y^α + p_{-y}^α)^{1/α}`.
///
/// At α = 1 this is the Shannon capacity (mutual information at x = 1/2)
/// and `d_c` is unset. Debug builds verify that the closed form matches a
/// direct evaluation at x = 1/2 and that no grid point beats it.
pub fn alpha_capacity(ch: &BisoChannel, alpha: &AlphaParam) -> Result<CapacityValue> {
    let (c_alpha, d_c) = capacity_raw(ch, alpha);
    #[cfg(debug_assertions)]
    if !alpha.is_unit() {
        let direct = sibson_raw(ch, 0.5, alpha.value());
        let scale = 1e-12 + 1e-15 * (alpha.value() / (alpha.value() - 1.0)).abs();
        debug_assert!(
            (c_alpha - direct).abs() <= scale,
            "capacity closed form {c_alpha} != direct evaluation {direct}"
        );
        let worst = (0..=32)
            .map(|i| sibson_raw(ch, i as f64 / 32.0, alpha.value()))
            .fold(f64::NEG_INFINITY, f64::max);
        debug_assert!(
            worst <= c_alpha + 1e-9,
            "grid maximum {worst} exceeds capacity {c_alpha}"
        );
    }
    Ok(CapacityValue {
        c_alpha,
        d_c,
        alpha: alpha.value(),
    })
}

/// Closed forms at α ∈ {1/3, 1/2}, where the mutual information depends on
/// the channel only through d_C:
///
/// ```text
/// I_{1/3}(x) = -1/2 · ln[1 -  x(1-x)·(4 - d)],  d = Σ_y (p^{1/3} + m^{1/3})³
/// I_{1/2}(x) =       -ln[1 - 2x(1-x)·(2 - d)],  d = Σ_y (√p + √m)²
/// ```
pub fn special_mi(ch: &BisoChannel, x: f64, which: SpecialAlpha) -> Result<MiValue> {
    check_probability(x, "x")?;
    let value = match which {
        SpecialAlpha::OneThird => {
            let d = stable_sum(
                ch.pairs()
                    .iter()
                    .map(|&(p, m)| (p.cbrt() + m.cbrt()).powi(3)),
            );
            -0.5 * (1.0 - x * (1.0 - x) * (4.0 - d)).ln()
        }
        SpecialAlpha::OneHalf => {
            let d = stable_sum(
                ch.pairs()
                    .iter()
                    .map(|&(p, m)| (p.sqrt() + m.sqrt()).powi(2)),
            );
            -(1.0 - 2.0 * x * (1.0 - x) * (2.0 - d)).ln()
        }
    };
    Ok(MiValue {
        value,
        alpha: which.alpha(),
        input_x: x,
        variant: MiVariant::Sibson,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alpha(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    const ALPHA_GRID: [f64; 7] = [0.25, 0.4, 0.75, 1.5, 2.0, 3.0, 5.0];

    #[test]
    fn sibson_general_examples() {
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        let kernel = bsc01.to_kernel().unwrap();

        // point mass input gives zero
        let point = FiniteDist::point_mass(2, 1).unwrap();
        let v = sibson_mi_general(&kernel, &point, &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.0, epsilon = 1e-12);

        // identical rows give zero
        let flat = vec![
            FiniteDist::new(vec![0.3, 0.7]).unwrap(),
            FiniteDist::new(vec![0.3, 0.7]).unwrap(),
        ];
        let uni = FiniteDist::uniform(2).unwrap();
        let v = sibson_mi_general(&flat, &uni, &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.0, epsilon = 1e-12);

        // BSC(0.1), uniform input, alpha 2: ln 2 - h_2(0.1)
        let v = sibson_mi_general(&kernel, &uni, &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.49469624183610694, epsilon = 1e-12);
    }

    #[test]
    fn sibson_biso_examples() {
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        let v = sibson_mi(&bsc01, 0.0, &alpha(3.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.0, epsilon = 1e-12);

        let v = sibson_mi(&bsc01, 0.5, &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.49469624183610694, epsilon = 1e-12);

        // brute-force variational value 2·ln(0.5 + sqrt(0.57))
        let v = sibson_mi(&bsc01, 0.3, &alpha(2.0)).unwrap();
        assert_abs_diff_eq!(v.value, 0.4542447601760426, epsilon = 1e-12);
    }

    /// Random channel with a zero-carrying erasure-style pair spliced in,
    /// exercising the exact-zero probability paths.
    fn zero_heavy(n: usize, seed: u64) -> BisoChannel {
        let base = BisoChannel::random(n, seed).unwrap();
        let mut pairs: Vec<(f64, f64)> = base
            .pairs()
            .iter()
            .map(|&(p, m)| (0.75 * p, 0.75 * m))
            .collect();
        pairs.push((0.25, 0.0));
        BisoChannel::new(pairs).unwrap()
    }

    #[test]
    fn sibson_matches_general_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for trial in 0..40 {
            let ch = if trial % 3 == 0 {
                zero_heavy(1 + trial % 6, 100 + trial as u64)
            } else {
                BisoChannel::random(1 + trial % 6, 100 + trial as u64).unwrap()
            };
            let kernel = ch.to_kernel().unwrap();
            for &a in &ALPHA_GRID {
                let x: f64 = rng.gen();
                let input = FiniteDist::bernoulli(x).unwrap();
                let biso = sibson_mi(&ch, x, &alpha(a)).unwrap().value;
                let general = sibson_mi_general(&kernel, &input, &alpha(a)).unwrap().value;
                assert!(
                    (biso - general).abs() <= 1e-10,
                    "pair form {biso} != kernel form {general} at alpha={a}, x={x}"
                );
            }
        }
    }

    #[test]
    fn sibson_input_symmetry() {
        for trial in 0..20 {
            let ch = BisoChannel::random(1 + trial % 6, 200 + trial as u64).unwrap();
            for &a in &ALPHA_GRID {
                for i in 0..=16 {
                    let x = i as f64 / 16.0;
                    let lhs = sibson_mi(&ch, x, &alpha(a)).unwrap().value;
                    let rhs = sibson_mi(&ch, 1.0 - x, &alpha(a)).unwrap().value;
                    assert!((lhs - rhs).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn shannon_examples() {
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        assert_abs_diff_eq!(shannon_mi(&bsc01, 0.0).unwrap().value, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            shannon_mi(&bsc01, 0.5).unwrap().value,
            0.3680642071684971, // ln 2 - h(0.1)
            epsilon = 1e-12
        );
        let bec03 = BisoChannel::bec(0.3).unwrap();
        assert_abs_diff_eq!(
            shannon_mi(&bec03, 0.5).unwrap().value,
            0.48520302639196167, // 0.7 ln 2
            epsilon = 1e-12
        );
    }

    #[test]
    fn tilt_examples() {
        assert_eq!(tilt(0.5, &alpha(3.7)).unwrap(), 0.5);
        assert_abs_diff_eq!(
            tilt(0.3, &alpha(2.0)).unwrap(),
            0.15517241379310345, // 9/58
            epsilon = 1e-15
        );
        assert_eq!(tilt(0.3, &alpha(1.0)).unwrap(), 0.3);
        assert_eq!(tilt(0.0, &alpha(2.0)).unwrap(), 0.0);
        assert_eq!(tilt(1.0, &alpha(2.0)).unwrap(), 1.0);
    }

    #[test]
    fn arimoto_examples() {
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        // equals Sibson at x = 1/2 (tilt fixed point)
        let a2 = alpha(2.0);
        assert_abs_diff_eq!(
            arimoto_mi(&bsc01, 0.5, &a2).unwrap().value,
            sibson_mi(&bsc01, 0.5, &a2).unwrap().value,
            epsilon = 0.0
        );
        assert_abs_diff_eq!(arimoto_mi(&bsc01, 0.0, &a2).unwrap().value, 0.0, epsilon = 1e-12);
        let tilted = tilt(0.3, &a2).unwrap();
        assert_abs_diff_eq!(
            arimoto_mi(&bsc01, 0.3, &a2).unwrap().value,
            sibson_mi(&bsc01, tilted, &a2).unwrap().value,
            epsilon = 1e-15
        );
    }

    #[test]
    fn arimoto_matches_tilted_kernel_route() {
        // Independent route: Arimoto is the general Sibson form with the
        // tilted input distribution on the expanded kernel.
        for trial in 0..20 {
            let ch = BisoChannel::random(1 + trial % 6, 300 + trial as u64).unwrap();
            let kernel = ch.to_kernel().unwrap();
            for &a in &ALPHA_GRID {
                for i in 0..=8 {
                    let x = i as f64 / 8.0;
                    let ap = alpha(a);
                    let xa = tilt(x, &ap).unwrap();
                    let input = FiniteDist::bernoulli(xa).unwrap();
                    let lhs = arimoto_mi(&ch, x, &ap).unwrap().value;
                    let rhs = sibson_mi_general(&kernel, &input, &ap).unwrap().value;
                    assert!(
                        (lhs - rhs).abs() <= 1e-12,
                        "arimoto {lhs} != tilted kernel {rhs} at alpha={a} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn arimoto_conditional_entropy_examples() {
        let a2 = alpha(2.0);
        let noiseless = BisoChannel::bsc(0.0).unwrap();
        assert_abs_diff_eq!(
            arimoto_conditional_entropy(&noiseless, 0.3, &a2).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        let useless = BisoChannel::bsc(0.5).unwrap();
        assert_abs_diff_eq!(
            arimoto_conditional_entropy(&useless, 0.3, &a2).unwrap(),
            binary_entropy(0.3, &a2).unwrap(),
            epsilon = 1e-12
        );
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        assert_abs_diff_eq!(
            arimoto_conditional_entropy(&bsc01, 0.5, &a2).unwrap(),
            0.19845093872383832, // ln 2 - C_2
            epsilon = 1e-12
        );
    }

    #[test]
    fn capacity_examples() {
        let a2 = alpha(2.0);
        let cap = alpha_capacity(&BisoChannel::bsc(0.1).unwrap(), &a2).unwrap();
        assert_abs_diff_eq!(cap.c_alpha, 0.49469624183610694, epsilon = 1e-12);
        assert_abs_diff_eq!(cap.d_c.unwrap(), 0.9055385138137416, epsilon = 1e-13);

        let cap = alpha_capacity(&BisoChannel::bec(0.3).unwrap(), &a2).unwrap();
        assert_abs_diff_eq!(cap.d_c.unwrap(), 0.9121320343559642, epsilon = 1e-13);
        assert_abs_diff_eq!(cap.c_alpha, 0.5092061308129344, epsilon = 1e-12);

        let cap = alpha_capacity(&BisoChannel::bsc(0.5).unwrap(), &a2).unwrap();
        assert_abs_diff_eq!(cap.c_alpha, 0.0, epsilon = 1e-12);

        // Shannon branch
        let cap = alpha_capacity(&BisoChannel::bsc(0.1).unwrap(), &alpha(1.0)).unwrap();
        assert!(cap.d_c.is_none());
        assert_abs_diff_eq!(cap.c_alpha, 0.3680642071684971, epsilon = 1e-12);
    }

    #[test]
    fn capacity_attained_at_half_on_grid() {
        for trial in 0..10 {
            let ch = BisoChannel::random(1 + trial % 6, 400 + trial as u64).unwrap();
            for &a in &ALPHA_GRID {
                let ap = alpha(a);
                let c = alpha_capacity(&ch, &ap).unwrap().c_alpha;
                let mut best = f64::NEG_INFINITY;
                for i in 0..=1000 {
                    best = best.max(sibson_raw(&ch, i as f64 / 1000.0, a));
                }
                assert!(
                    (best - c).abs() <= 1e-9,
                    "grid max {best} vs capacity {c} at alpha={a}"
                );
            }
        }
    }

    #[test]
    fn special_mi_examples() {
        let bsc01 = BisoChannel::bsc(0.1).unwrap();
        let v = special_mi(&bsc01, 0.5, SpecialAlpha::OneHalf).unwrap();
        assert_abs_diff_eq!(v.value, 0.2231435513142097, epsilon = 1e-12); // -ln 0.8

        let bec02 = BisoChannel::bec(0.2).unwrap();
        let v = special_mi(&bec02, 0.5, SpecialAlpha::OneThird).unwrap();
        assert_abs_diff_eq!(v.value, 0.4581453659370775, epsilon = 1e-12); // -(1/2) ln 0.4

        for which in [SpecialAlpha::OneThird, SpecialAlpha::OneHalf] {
            let v = special_mi(&bec02, 0.0, which).unwrap();
            assert_abs_diff_eq!(v.value, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn special_mi_matches_sibson() {
        for trial in 0..25 {
            let ch = BisoChannel::random(1 + trial % 6, 500 + trial as u64).unwrap();
            for which in [SpecialAlpha::OneThird, SpecialAlpha::OneHalf] {
                let ap = alpha(which.alpha());
                for i in 0..=20 {
                    let x = i as f64 / 20.0;
                    let s = special_mi(&ch, x, which).unwrap().value;
                    let g = sibson_mi(&ch, x, &ap).unwrap().value;
                    assert!(
                        (s - g).abs() <= 1e-10,
                        "special {s} != sibson {g} at x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn shannon_seam_continuity() {
        for trial in 0..10 {
            let ch = BisoChannel::random(1 + trial % 6, 600 + trial as u64).unwrap();
            for i in 0..=10 {
                let x = i as f64 / 10.0;
                let sh = shannon_mi(&ch, x).unwrap().value;
                for &a in &[1.0 - 1e-4, 1.0 + 1e-4] {
                    let v = sibson_mi(&ch, x, &alpha(a)).unwrap().value;
                    assert!(
                        (v - sh).abs() <= 1e-3,
                        "seam violated at x={x}, alpha={a}: {v} vs {sh}"
                    );
                }
            }
        }
    }

    #[test]
    fn mi_bounded_by_ln2() {
        for trial in 0..10 {
            let ch = BisoChannel::random(1 + trial % 6, 700 + trial as u64).unwrap();
            for &a in &ALPHA_GRID {
                for i in 0..=20 {
                    let x = i as f64 / 20.0;
                    let v = sibson_mi(&ch, x, &alpha(a)).unwrap().value;
                    assert!(v >= -1e-12 && v <= LN_2 + 1e-9);
                }
            }
        }
    }
}

//! The BISO channel data model.
//!
//! A binary-input symmetric-output channel is described by one row of its
//! transition matrix: the output alphabet splits into symmetric pairs
//! `(y, -y)` with `P(y|0) = P(-y|1)`, so a list of pairs
//! `(p_y, p_{-y}) = (P(y|0), P(-y|0))` determines the whole channel. An odd
//! output alphabet is normalized by splitting the middle symbol into two
//! half-mass outputs, so the canonical form always has an even number of
//! outputs and no all-zero pair.

use crate::error::{Error, Result};
use crate::renyi::{check_probability, stable_sum, FiniteDist};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::path::Path;

/// Total mass must match 1 within this, or construction fails.
pub const MASS_REJECT_TOL: f64 = 1e-9;
/// Mass drift below this is accepted as-is; between the two tolerances it
/// is rebalanced exactly on the largest entry.
pub const MASS_EXACT_TOL: f64 = 1e-12;
/// Raw transition matrices must satisfy `P(y|0) = P(-y|1)` within this.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// A validated BISO channel in canonical pair form.
#[derive(Clone, Debug, PartialEq)]
pub struct BisoChannel {
    pairs: Vec<(f64, f64)>,
    label: Option<String>,
}

impl BisoChannel {
    /// Builds a channel from `(p_y, p_{-y})` pairs.
    ///
    /// All entries must be in [0,1] and sum to 1: a deviation beyond
    /// [`MASS_REJECT_TOL`] is an error, a deviation within
    /// ([`MASS_EXACT_TOL`], [`MASS_REJECT_TOL`]] is rebalanced on the largest
    /// entry. Pairs with both entries exactly zero are dropped.
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Validation("channel needs at least one pair".into()));
        }
        let mut pairs = pairs;
        for (i, &(p, m)) in pairs.iter().enumerate() {
            for v in [p, m] {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::Validation(format!(
                        "pair {i} has probability outside [0,1]: ({p}, {m})"
                    )));
                }
            }
        }
        let mass = stable_sum(pairs.iter().flat_map(|&(p, m)| [p, m].into_iter()));
        let drift = mass - 1.0;
        if drift.abs() > MASS_REJECT_TOL {
            return Err(Error::Validation(format!(
                "total mass {mass} differs from 1 by more than {MASS_REJECT_TOL}"
            )));
        }
        if drift.abs() > MASS_EXACT_TOL {
            // Rebalance exactly on the largest entry rather than renormalizing.
            let (i, first) = pairs
                .iter()
                .enumerate()
                .max_by(|(_, a), (_, b)| a.0.max(a.1).total_cmp(&b.0.max(b.1)))
                .map(|(i, &(p, m))| (i, p >= m))
                .expect("nonempty");
            if first {
                pairs[i].0 -= drift;
            } else {
                pairs[i].1 -= drift;
            }
        }
        pairs.retain(|&(p, m)| p != 0.0 || m != 0.0);
        if pairs.is_empty() {
            return Err(Error::Validation("all pairs carry zero mass".into()));
        }
        Ok(Self { pairs, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Binary symmetric channel with crossover probability `p ≤ 1/2`:
    /// the single pair `(1-p, p)`.
    pub fn bsc(p: f64) -> Result<Self> {
        check_probability(p, "crossover probability")?;
        if p > 0.5 {
            return Err(Error::Domain(format!(
                "crossover probability must be in [0, 1/2], got {p}"
            )));
        }
        Ok(Self::new(vec![(1.0 - p, p)])?.with_label(format!("BSC({p})")))
    }

    /// Binary erasure channel with erasure probability `eps`: the erasure
    /// symbol is split into two half-mass outputs, giving pairs
    /// `[(1-eps, 0), (eps/2, eps/2)]` before zero-pair removal.
    pub fn bec(eps: f64) -> Result<Self> {
        check_probability(eps, "erasure probability")?;
        Ok(
            Self::new(vec![(1.0 - eps, 0.0), (eps / 2.0, eps / 2.0)])?
                .with_label(format!("BEC({eps})")),
        )
    }

    /// Seeded random channel: `2·n_pairs` i.i.d. uniform entries normalized
    /// to total mass 1. Deterministic in `(n_pairs, seed)`.
    pub fn random(n_pairs: usize, seed: u64) -> Result<Self> {
        if n_pairs == 0 {
            return Err(Error::Validation("channel needs at least one pair".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw: Vec<f64> = (0..2 * n_pairs).map(|_| rng.gen::<f64>()).collect();
        let total: f64 = stable_sum(raw.iter().copied());
        let pairs = raw
            .chunks_exact(2)
            .map(|c| (c[0] / total, c[1] / total))
            .collect();
        Self::new(pairs)
    }

    /// Drops all-zero pairs; idempotent and bit-exact on already canonical
    /// channels. Construction canonicalizes, so this mainly serves matrix
    /// ingestion paths that manipulate pairs directly.
    pub fn canonicalized(&self) -> BisoChannel {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(p, m)| p != 0.0 || m != 0.0)
            .collect();
        BisoChannel {
            pairs,
            label: self.label.clone(),
        }
    }

    /// Ingests a raw 2×n transition matrix (`rows[0] = P(·|0)`,
    /// `rows[1] = P(·|1)`), checking the output symmetry
    /// `P(y|0) = P(-y|1)` within [`SYMMETRY_TOL`] with outputs mirrored
    /// around the middle column. An odd middle column is split into two
    /// half-mass outputs.
    pub fn from_matrix(row0: &[f64], row1: &[f64]) -> Result<Self> {
        if row0.is_empty() || row0.len() != row1.len() {
            return Err(Error::Validation(
                "matrix must have two nonempty rows of equal length".into(),
            ));
        }
        let n = row0.len();
        for j in 0..n {
            if (row0[j] - row1[n - 1 - j]).abs() > SYMMETRY_TOL {
                return Err(Error::Validation(format!(
                    "matrix is not output-symmetric: |P(y_{j}|0) - P(-y_{j}|1)| = {}",
                    (row0[j] - row1[n - 1 - j]).abs()
                )));
            }
        }
        let mut pairs: Vec<(f64, f64)> = (0..n / 2).map(|j| (row0[j], row0[n - 1 - j])).collect();
        if n % 2 == 1 {
            let mid = row0[n / 2];
            pairs.push((mid / 2.0, mid / 2.0));
        }
        Self::new(pairs)
    }

    /// Blends every pair toward its symmetric average:
    /// `(p, m) ↦ ((1-λ)p + λs/2, (1-λ)m + λs/2)` with `s = p + m`.
    /// λ = 0 is the identity and λ = 1 yields a useless channel, with the
    /// α-capacity decreasing continuously in between; the capacity-matching
    /// calibration bisects on λ.
    pub fn mix_symmetric(&self, lambda: f64) -> Result<BisoChannel> {
        check_probability(lambda, "lambda")?;
        let pairs = self
            .pairs
            .iter()
            .map(|&(p, m)| {
                let half = 0.5 * (p + m);
                (
                    (1.0 - lambda) * p + lambda * half,
                    (1.0 - lambda) * m + lambda * half,
                )
            })
            .collect();
        BisoChannel::new(pairs)
    }

    /// Expands the pair form into the full 2×2l transition kernel with
    /// columns ordered `y_1, -y_1, y_2, -y_2, …`.
    pub fn to_kernel(&self) -> Result<Vec<FiniteDist>> {
        let mut row0 = Vec::with_capacity(2 * self.pairs.len());
        let mut row1 = Vec::with_capacity(2 * self.pairs.len());
        for &(p, m) in &self.pairs {
            row0.extend([p, m]);
            row1.extend([m, p]);
        }
        Ok(vec![FiniteDist::new(row0)?, FiniteDist::new(row1)?])
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn n_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Parses the channel JSON schema: either
    /// `{"label": …?, "pairs": [[p, m], …]}` or
    /// `{"label": …?, "matrix": [[…row 0…], […row 1…]]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: ChannelFile =
            serde_json::from_str(s).map_err(|e| Error::ChannelFile(e.to_string()))?;
        let ch = match (file.pairs, file.matrix) {
            (Some(pairs), None) => {
                Self::new(pairs.into_iter().map(|[p, m]| (p, m)).collect())?
            }
            (None, Some(matrix)) => {
                if matrix.len() != 2 {
                    return Err(Error::Validation(format!(
                        "matrix must have exactly 2 rows, got {}",
                        matrix.len()
                    )));
                }
                Self::from_matrix(&matrix[0], &matrix[1])?
            }
            _ => {
                return Err(Error::Validation(
                    "channel file must contain exactly one of \"pairs\" or \"matrix\"".into(),
                ))
            }
        };
        Ok(match file.label {
            Some(label) => ch.with_label(label),
            None => ch,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ChannelFile(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChannelFile {
    label: Option<String>,
    pairs: Option<Vec<[f64; 2]>>,
    matrix: Option<Vec<Vec<f64>>>,
}

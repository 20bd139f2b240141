//! Constructions probing sharpness of the Hölder constants.
//!
//! Operators here are diagonal-permutation-diagonal products, so the
//! product spectrum is just the sorted list of paired diagonal products and
//! experiments scale to ranks around 2^20 with no dense SVD. The greedy
//! pairing (largest with largest) is the negative control: on the critical
//! diagonals it is the identity pairing and its ratio is exactly 1. The
//! positive probe is the anti-chain pairing, which spends the pairing
//! budget on a single target index and pushes the ratio toward the optimal
//! constant as the rank grows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::holder::{sz_constant, HolderExponents};
use crate::quasinorm::{renorm_weak_norm, weak_norm};
use crate::random::{random_ginibre, random_permutation, Philox4x64, RandomSeed};
use crate::spectrum::{sorted_products, SingularSpectrum};
use crate::tol::DENSE_DIM_CAP;

/// The critical diagonal spectrum ((k+1)^{-1/p}) for k = 0..n-1.
///
/// Values are stored as 1/w for the exact same w = (k+1)^{1/p} that the
/// classical norm multiplies by, so each discrete norm term is w * (1/w),
/// which never exceeds 1 in floating point: the norm is exactly 1 and is
/// attained at index 0.
pub fn critical_diagonal(n: usize, p: f64) -> SingularSpectrum {
    assert!(n >= 1, "rank must be positive");
    assert!(p.is_finite() && p > 0.0, "exponent must be finite and > 0");
    let inv_p = 1.0 / p;
    let values: Vec<f64> = (0..n)
        .map(|k| 1.0 / ((k + 1) as f64).powf(inv_p))
        .collect();
    SingularSpectrum::from_sorted_unchecked(values)
}

/// Componentwise product of two spectra of equal length; sorted by
/// monotonicity of rounding.
fn commuting_product(t: &SingularSpectrum, s: &SingularSpectrum) -> SingularSpectrum {
    debug_assert_eq!(t.len(), s.len());
    let values: Vec<f64> = t
        .values()
        .iter()
        .zip(s.values())
        .map(|(a, b)| a * b)
        .collect();
    SingularSpectrum::from_sorted_unchecked(values)
}

/// Classical and renormalized Hölder ratios of the commuting pair of
/// critical diagonals of rank n.
pub fn commuting_ratio(n: usize, e: &HolderExponents) -> (f64, f64) {
    assert!(n >= 1, "rank must be positive");
    let t = critical_diagonal(n, e.p());
    let s = critical_diagonal(n, e.q());
    let prod = commuting_product(&t, &s);

    let classical = weak_norm(&prod, e.r()).expect("validated exponent").value
        / (weak_norm(&t, e.p()).expect("validated exponent").value
            * weak_norm(&s, e.q()).expect("validated exponent").value);
    let renorm = renorm_weak_norm(&prod, e.r()).expect("validated exponent").value
        / (renorm_weak_norm(&t, e.p()).expect("validated exponent").value
            * renorm_weak_norm(&s, e.q()).expect("validated exponent").value);
    (classical, renorm)
}

/// A pairing of the two critical diagonals, built to optimize the product
/// spectrum at one target index.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingExtremizer {
    n: usize,
    exponents: HolderExponents,
    pairing: Vec<usize>,
    /// 0-based index of the product-spectrum cell the pairing targets.
    target_index: usize,
}

impl PairingExtremizer {
    pub fn new(
        n: usize,
        exponents: HolderExponents,
        pairing: Vec<usize>,
        k0: usize,
    ) -> Result<Self> {
        if k0 < 1 || k0 > n {
            return Err(Error::InvalidArgument(format!(
                "target rank k0 must satisfy 1 <= k0 <= n, got {k0} for n = {n}"
            )));
        }
        if pairing.len() != n {
            return Err(Error::InvalidArgument(format!(
                "pairing length {} does not match n = {n}",
                pairing.len()
            )));
        }
        crate::matrix::validate_bijection(&pairing)?;
        Ok(Self {
            n,
            exponents,
            pairing,
            target_index: k0 - 1,
        })
    }

    /// The negative control: identity pairing, ratio 1 up to rounding.
    pub fn identity(n: usize, exponents: HolderExponents) -> Self {
        Self {
            n,
            exponents,
            pairing: (0..n).collect(),
            target_index: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &HolderExponents {
        &self.exponents
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn target_index(&self) -> usize {
        self.target_index
    }
}

/// Builds the anti-chain pairing targeting index k0 - 1.
///
/// Rows t = k0 down to 1 are paired with columns along the level curve
/// j = a t^{-q/p} of the product (all products on the curve equal
/// a^{-1/q}), where a = m^{-q} for the threshold m = C k0^{-1/r} and C is
/// the optimal constant. Columns are bumped to stay strictly increasing;
/// pairs whose column exceeds n are dropped, and leftovers are completed
/// order-preserving (completion pairs cannot raise the top-k0 products).
pub fn anti_chain_pairing(
    n: usize,
    e: &HolderExponents,
    k0: usize,
) -> Result<PairingExtremizer> {
    if k0 < 1 || k0 > n {
        return Err(Error::InvalidArgument(format!(
            "target rank k0 must satisfy 1 <= k0 <= n, got {k0} for n = {n}"
        )));
    }
    let threshold = sz_constant(e) * (k0 as f64).powf(-1.0 / e.r());
    let a = threshold.powf(-e.q());
    let curve_exp = e.q() / e.p();

    // The column recurrence grows as t falls, so the first overflow past n
    // drops every remaining pair as well.
    let mut chain: Vec<(usize, usize)> = Vec::with_capacity(k0);
    let mut prev_col = 0usize;
    for t in (1..=k0).rev() {
        let curve = a * (t as f64).powf(-curve_exp);
        let base = if curve >= n as f64 + 1.0 {
            n + 1
        } else {
            curve.ceil() as usize
        };
        let col = base.max(1).max(prev_col + 1);
        if col > n {
            break;
        }
        chain.push((t - 1, col - 1));
        prev_col = col;
    }

    let mut pairing = vec![usize::MAX; n];
    let mut col_used = vec![false; n];
    for &(row, col) in &chain {
        pairing[row] = col;
        col_used[col] = true;
    }
    let mut free_cols = (0..n).filter(|&c| !col_used[c]);
    for slot in pairing.iter_mut() {
        if *slot == usize::MAX {
            *slot = free_cols.next().expect("as many free columns as free rows");
        }
    }
    PairingExtremizer::new(n, *e, pairing, k0)
}

/// One sweep observation: the best ratio a family reached at rank n.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturationRow {
    pub family: String,
    pub n: usize,
    pub exponents: HolderExponents,
    /// Target rank of the pairing construction, when one applies.
    pub k0: Option<usize>,
    pub best_ratio: f64,
    pub best_index: usize,
    /// The optimal constant the ratio is bounded by.
    pub constant: f64,
    pub gap: f64,
}

fn pairing_row(
    t: &SingularSpectrum,
    s: &SingularSpectrum,
    ext: &PairingExtremizer,
) -> SaturationRow {
    let e = ext.exponents;
    let prod = sorted_products(t, s, &ext.pairing).expect("extremizer pairing is validated");
    let norm_t = weak_norm(t, e.p()).expect("validated exponent").value;
    let norm_s = weak_norm(s, e.q()).expect("validated exponent").value;
    // Critical diagonals have unit norm by construction.
    assert!((norm_t - 1.0).abs() <= 1e-12 && (norm_s - 1.0).abs() <= 1e-12);
    let norm_prod = weak_norm(&prod, e.r()).expect("validated exponent");
    let best_ratio = norm_prod.value / (norm_t * norm_s);
    let constant = sz_constant(&e);
    SaturationRow {
        family: "pairing".into(),
        n: ext.n,
        exponents: e,
        k0: Some(ext.target_index + 1),
        best_ratio,
        best_index: norm_prod.attaining_index,
        constant,
        gap: constant - best_ratio,
    }
}

/// Classical Hölder ratio of the pairing extremizer, realized through the
/// sorted-products spectrum.
pub fn pairing_ratio(ext: &PairingExtremizer) -> SaturationRow {
    let t = critical_diagonal(ext.n, ext.exponents.p());
    let s = critical_diagonal(ext.n, ext.exponents.q());
    pairing_row(&t, &s, ext)
}

/// Extremizer families available to the sweep driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Commuting critical diagonals; classical ratio pinned at 1.
    Commuting,
    /// Anti-chain pairing at a single target rank (round(sqrt(n)) unless
    /// overridden).
    Pairing,
    /// Best anti-chain pairing over dyadic target ranks k0 <= n.
    PairingBest,
}

impl Family {
    pub const ALL_NAMES: [&'static str; 3] = ["commuting", "pairing", "pairing-best"];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Commuting => "commuting",
            Family::Pairing => "pairing",
            Family::PairingBest => "pairing-best",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commuting" => Ok(Family::Commuting),
            "pairing" => Ok(Family::Pairing),
            "pairing-best" => Ok(Family::PairingBest),
            other => Err(Error::InvalidArgument(format!(
                "unknown family \"{other}\"; valid families: {}",
                Family::ALL_NAMES.join(", ")
            ))),
        }
    }
}

/// Runs each family at each rank and collects one row per (n, family), in
/// input order. Seed-free and deterministic. `pairing_k0` overrides the
/// round(sqrt(n)) default of the plain pairing family.
pub fn saturation_sweep(
    e: &HolderExponents,
    sizes: &[usize],
    families: &[Family],
    pairing_k0: Option<usize>,
) -> Result<Vec<SaturationRow>> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("size list is empty".into()));
    }
    for w in sizes.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidArgument(format!(
                "sizes must be strictly ascending, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    if sizes[0] == 0 {
        return Err(Error::InvalidArgument("sizes must be positive".into()));
    }

    let mut rows = Vec::with_capacity(sizes.len() * families.len());
    for &n in sizes {
        let t = critical_diagonal(n, e.p());
        let s = critical_diagonal(n, e.q());
        for family in families {
            match family {
                Family::Commuting => {
                    let prod = commuting_product(&t, &s);
                    let norm = weak_norm(&prod, e.r()).expect("validated exponent");
                    let denom = weak_norm(&t, e.p()).expect("validated exponent").value
                        * weak_norm(&s, e.q()).expect("validated exponent").value;
                    let best_ratio = norm.value / denom;
                    let constant = sz_constant(e);
                    rows.push(SaturationRow {
                        family: "commuting".into(),
                        n,
                        exponents: *e,
                        k0: None,
                        best_ratio,
                        best_index: norm.attaining_index,
                        constant,
                        gap: constant - best_ratio,
                    });
                }
                Family::Pairing => {
                    let k0 = pairing_k0
                        .unwrap_or_else(|| (n as f64).sqrt().round() as usize)
                        .clamp(1, n);
                    let ext = anti_chain_pairing(n, e, k0)?;
                    rows.push(pairing_row(&t, &s, &ext));
                }
                Family::PairingBest => {
                    let mut best: Option<SaturationRow> = None;
                    let mut k0 = 1usize;
                    while k0 <= n {
                        let ext = anti_chain_pairing(n, e, k0)?;
                        let row = pairing_row(&t, &s, &ext);
                        if best.as_ref().is_none_or(|b| row.best_ratio > b.best_ratio) {
                            best = Some(row);
                        }
                        match k0.checked_mul(2) {
                            Some(next) => k0 = next,
                            None => break,
                        }
                    }
                    let mut row = best.expect("k0 = 1 always runs");
                    row.family = "pairing-best".into();
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

/// Monte-Carlo lower bound on the optimal constant: best classical ratio
/// over seeded Ginibre pairs and random pairings of the critical diagonals.
pub fn random_ratio_search(
    e: &HolderExponents,
    dim: usize,
    trials: usize,
    seed: RandomSeed,
) -> Result<SaturationRow> {
    if !(1..=DENSE_DIM_CAP).contains(&dim) {
        return Err(Error::InvalidArgument(format!(
            "dimension must be in 1..={DENSE_DIM_CAP}, got {dim}"
        )));
    }
    if trials < 1 {
        return Err(Error::InvalidArgument("trials must be >= 1".into()));
    }

    let diag_t = critical_diagonal(dim, e.p());
    let diag_s = critical_diagonal(dim, e.q());
    let mut best_ratio = f64::NEG_INFINITY;
    let mut best_index = 0usize;

    let mut consider = |norm_ts: crate::quasinorm::QuasiNormResult, denom: f64| {
        if denom > 0.0 {
            let ratio = norm_ts.value / denom;
            if ratio > best_ratio {
                best_ratio = ratio;
                best_index = norm_ts.attaining_index;
            }
        }
    };

    for trial in 0..trials as u64 {
        let t = random_ginibre(dim, seed.derive(4 * trial));
        let s = random_ginibre(dim, seed.derive(4 * trial + 1));
        let ts = t.multiply(&s)?;
        let spec_t = t.singular_values()?;
        let spec_s = s.singular_values()?;
        let spec_ts = ts.singular_values()?;
        let denom = weak_norm(&spec_t, e.p())?.value * weak_norm(&spec_s, e.q())?.value;
        consider(weak_norm(&spec_ts, e.r())?, denom);

        let mut rng = Philox4x64::from_seed(seed.derive(4 * trial + 2));
        let pairing = random_permutation(dim, &mut rng);
        let prod = sorted_products(&diag_t, &diag_s, &pairing).expect("pairing is a permutation");
        let denom = weak_norm(&diag_t, e.p())?.value * weak_norm(&diag_s, e.q())?.value;
        consider(weak_norm(&prod, e.r())?, denom);
    }

    let constant = sz_constant(e);
    Ok(SaturationRow {
        family: "search".into(),
        n: dim,
        exponents: *e,
        k0: None,
        best_ratio,
        best_index,
        constant,
        gap: constant - best_ratio,
    })
}

//! Singular spectra as standalone values, decoupled from matrices.
//!
//! A spectrum is a finite non-increasing, non-negative sequence with an
//! implicit zero tail, viewed as the step function mu(t) = values[floor(t)].
//! Keeping spectra independent of dense matrices lets extremizer
//! experiments run at lengths around 10^6 where an SVD is out of reach.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{validate_bijection, ComplexMatrix};
use crate::tol::{HORN_ABS_FLOOR, HORN_LENGTH_CAP};

/// Finite non-increasing sequence of non-negative singular values,
/// logically extended by zeros.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SingularSpectrum {
    values: Vec<f64>,
}

impl SingularSpectrum {
    /// Validates ordering, sign and finiteness.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    detail: format!("non-finite value {v}"),
                });
            }
            if v < 0.0 {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    detail: format!("negative value {v}"),
                });
            }
            if i > 0 && values[i - 1] < v {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    detail: format!("increases from {} to {v}", values[i - 1]),
                });
            }
        }
        Ok(Self { values })
    }

    /// Construction path for producers whose output is sorted and
    /// non-negative by construction (SVD column norms, sorted products).
    pub(crate) fn from_sorted_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(values.iter().all(|&v| v >= 0.0));
        Self { values }
    }

    /// Singular values of a dense matrix; same contract as
    /// [`ComplexMatrix::singular_values`].
    pub fn from_matrix(a: &ComplexMatrix) -> Result<Self> {
        a.singular_values()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The step-function view: mu(t) = values[floor(t)], zero past the end.
    pub fn mu_at(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "mu is defined for finite t >= 0, got {t}"
            )));
        }
        if t >= self.values.len() as f64 {
            return Ok(0.0);
        }
        Ok(self.values[t as usize])
    }

    /// All values scaled by a non-negative constant.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !c.is_finite() || c < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "scale factor must be finite and >= 0, got {c}"
            )));
        }
        SingularSpectrum::new(self.values.iter().map(|v| v * c).collect())
    }
}

/// One failure of the submultiplicativity inequality
/// mu(j+k, TS) <= mu(j, T) mu(k, S).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HornViolation {
    pub j: usize,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// Scans every integer pair (j, k) with j + k < len(spec_ts) and reports
/// the cells where mu(j+k, TS) exceeds mu(j, T) mu(k, S) beyond `rel_tol`.
///
/// The integer grid is exhaustive for the real-parameter inequality: mu is
/// constant on [k, k+1) and non-increasing, so within each unit cell the
/// left endpoints t1 = j, t2 = k maximize the left side while fixing the
/// right side, and any real violation implies an integer one.
///
/// Violations are data, not errors; an empty list is a verification pass.
pub fn horn_check(
    spec_ts: &SingularSpectrum,
    spec_t: &SingularSpectrum,
    spec_s: &SingularSpectrum,
    rel_tol: f64,
) -> Result<Vec<HornViolation>> {
    if !rel_tol.is_finite() || rel_tol < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "relative tolerance must be finite and >= 0, got {rel_tol}"
        )));
    }
    let len = spec_ts.len();
    if len > HORN_LENGTH_CAP {
        return Err(Error::SpectrumTooLong {
            len,
            cap: HORN_LENGTH_CAP,
        });
    }
    let value_or_zero = |spec: &SingularSpectrum, i: usize| -> f64 {
        spec.values().get(i).copied().unwrap_or(0.0)
    };
    let mut violations = Vec::new();
    for j in 0..len {
        for k in 0..len - j {
            let lhs = spec_ts.values()[j + k];
            let rhs = value_or_zero(spec_t, j) * value_or_zero(spec_s, k);
            let breached = if rhs == 0.0 {
                lhs > HORN_ABS_FLOOR
            } else {
                lhs > rhs * (1.0 + rel_tol)
            };
            if breached {
                violations.push(HornViolation { j, k, lhs, rhs });
            }
        }
    }
    Ok(violations)
}

/// Spectrum of a diagonal-permutation-diagonal product: the multiset of
/// paired products {t[i] * s[pairing[i]]} sorted non-increasing. Exact
/// (up to one rounding per product) and O(n log n), versus a dense SVD.
pub fn sorted_products(
    spec_t: &SingularSpectrum,
    spec_s: &SingularSpectrum,
    pairing: &[usize],
) -> Result<SingularSpectrum> {
    if spec_t.len() != spec_s.len() || spec_t.len() != pairing.len() {
        return Err(Error::InvalidArgument(format!(
            "spectra and pairing must share one length, got {}, {}, {}",
            spec_t.len(),
            spec_s.len(),
            pairing.len()
        )));
    }
    validate_bijection(pairing)?;
    let mut products: Vec<f64> = pairing
        .iter()
        .enumerate()
        .map(|(i, &j)| spec_t.values()[i] * spec_s.values()[j])
        .collect();
    products.sort_unstable_by(|a, b| b.total_cmp(a));
    SingularSpectrum::new(products)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{diagonal_matrix, permutation_matrix};
    use crate::random::{random_ginibre, random_permutation, random_spectrum, Philox4x64, RandomSeed};
    use proptest::prelude::*;

    fn spec(values: &[f64]) -> SingularSpectrum {
        SingularSpectrum::new(values.to_vec()).unwrap()
    }

    #[test]
    fn mu_is_a_step_function() {
        let s = spec(&[5.0, 3.0, 1.0]);
        assert_eq!(s.mu_at(1.99).unwrap(), 3.0);
        assert_eq!(s.mu_at(3.0).unwrap(), 0.0);
        assert_eq!(spec(&[1.0]).mu_at(0.0).unwrap(), 1.0);
        assert_eq!(s.mu_at(1e300).unwrap(), 0.0);
    }

    #[test]
    fn mu_rejects_bad_arguments() {
        let s = spec(&[1.0]);
        assert!(s.mu_at(-0.5).is_err());
        assert!(s.mu_at(f64::NAN).is_err());
        assert!(s.mu_at(f64::INFINITY).is_err());
    }

    #[test]
    fn construction_validates() {
        assert!(SingularSpectrum::new(vec![1.0, 2.0]).is_err());
        assert!(SingularSpectrum::new(vec![1.0, -0.1]).is_err());
        assert!(SingularSpectrum::new(vec![f64::NAN]).is_err());
        assert!(SingularSpectrum::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn from_matrix_call_through() {
        let d = diagonal_matrix(&[1.0, 0.5f64.sqrt()]).unwrap();
        assert_eq!(
            SingularSpectrum::from_matrix(&d).unwrap().values(),
            &[1.0, 0.5f64.sqrt()]
        );
        let z = ComplexMatrix::zeros(3, 3).unwrap();
        assert_eq!(
            SingularSpectrum::from_matrix(&z).unwrap().values(),
            &[0.0, 0.0, 0.0]
        );
        let a = random_ginibre(4, RandomSeed(77));
        assert_eq!(
            SingularSpectrum::from_matrix(&a).unwrap(),
            a.singular_values().unwrap()
        );
    }

    #[test]
    fn horn_accepts_identity_triple() {
        let ones = spec(&[1.0; 4]);
        assert!(horn_check(&ones, &ones, &ones, 1e-10).unwrap().is_empty());
    }

    #[test]
    fn horn_detects_synthetic_violation() {
        let v = horn_check(&spec(&[2.0]), &spec(&[1.0]), &spec(&[1.0]), 1e-10).unwrap();
        assert_eq!(
            v,
            vec![HornViolation {
                j: 0,
                k: 0,
                lhs: 2.0,
                rhs: 1.0
            }]
        );
    }

    #[test]
    fn horn_holds_on_random_products() {
        // 1000 seeded product triples across dimensions up to 64.
        let dims = [4usize, 8, 16, 32, 64];
        for trial in 0..1000u64 {
            let n = dims[trial as usize % dims.len()];
            let t = random_ginibre(n, RandomSeed(trial));
            let s = random_ginibre(n, RandomSeed(trial + 10_000));
            let ts = t.multiply(&s).unwrap();
            let violations = horn_check(
                &ts.singular_values().unwrap(),
                &t.singular_values().unwrap(),
                &s.singular_values().unwrap(),
                1e-10,
            )
            .unwrap();
            assert!(violations.is_empty(), "trial {trial} (n={n}): {violations:?}");
        }
    }

    #[test]
    fn horn_rejects_negative_tolerance() {
        let one = spec(&[1.0]);
        assert!(horn_check(&one, &one, &one, -1e-3).is_err());
        assert!(horn_check(&one, &one, &one, f64::NAN).is_err());
    }

    #[test]
    fn horn_rejects_oversized_spectrum() {
        let long = SingularSpectrum::new(vec![1.0; HORN_LENGTH_CAP + 1]).unwrap();
        let one = spec(&[1.0]);
        assert!(matches!(
            horn_check(&long, &one, &one, 1e-10),
            Err(Error::SpectrumTooLong { .. })
        ));
    }

    #[test]
    fn sorted_products_componentwise_and_swapped() {
        let t = spec(&[1.0, 0.5f64.sqrt()]);
        let s = t.clone();
        let id = sorted_products(&t, &s, &[0, 1]).unwrap();
        assert_eq!(id.values()[0], 1.0);
        assert!((id.values()[1] - 0.5).abs() <= 1e-15);
        let swapped = sorted_products(&t, &s, &[1, 0]).unwrap();
        assert_eq!(swapped.values(), &[0.5f64.sqrt(), 0.5f64.sqrt()]);
    }

    #[test]
    fn sorted_products_identity_with_ones_is_identity() {
        let mut rng = Philox4x64::from_seed(RandomSeed(8));
        let t = random_spectrum(12, &mut rng);
        let ones = spec(&[1.0; 12]);
        let pairing: Vec<usize> = (0..12).collect();
        assert_eq!(sorted_products(&t, &ones, &pairing).unwrap(), t);
    }

    #[test]
    fn sorted_products_rejects_bad_input() {
        let t = spec(&[1.0, 0.5]);
        let s = spec(&[1.0]);
        assert!(sorted_products(&t, &s, &[0, 1]).is_err());
        let s2 = spec(&[1.0, 0.5]);
        assert!(sorted_products(&t, &s2, &[0, 0]).is_err());
    }

    #[test]
    fn sorted_products_matches_dense_svd_oracle() {
        let mut rng = Philox4x64::from_seed(RandomSeed(99));
        let n = 64;
        let t = random_spectrum(n, &mut rng);
        let s = random_spectrum(n, &mut rng);
        let pairing = random_permutation(n, &mut rng);

        let fast = sorted_products(&t, &s, &pairing).unwrap();

        let d_t = diagonal_matrix(t.values()).unwrap();
        let d_s = diagonal_matrix(s.values()).unwrap();
        // D_T * P with P[i][pairing[i]] = 1 places t[i] * s[pairing[i]].
        let p = permutation_matrix(&pairing).unwrap();
        let dense = d_t.multiply(&p).unwrap().multiply(&d_s).unwrap();
        let oracle = dense.singular_values().unwrap();

        for (f, o) in fast.values().iter().zip(oracle.values()) {
            assert!(
                (f - o).abs() <= 1e-10 * o.max(1e-300),
                "fast {f} vs dense {o}"
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mu_is_non_increasing(
            len in 0usize..40,
            seed in 0u64..1000,
            t1 in 0.0f64..50.0,
            t2 in 0.0f64..50.0,
        ) {
            let mut rng = Philox4x64::from_seed(RandomSeed(seed));
            let s = random_spectrum(len, &mut rng);
            let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
            prop_assert!(s.mu_at(lo).unwrap() >= s.mu_at(hi).unwrap());
        }

        #[test]
        fn sorted_products_output_is_valid(
            len in 1usize..30,
            seed in 0u64..1000,
        ) {
            let mut rng = Philox4x64::from_seed(RandomSeed(seed));
            let t = random_spectrum(len, &mut rng);
            let s = random_spectrum(len, &mut rng);
            let pairing = random_permutation(len, &mut rng);
            let prod = sorted_products(&t, &s, &pairing).unwrap();
            prop_assert_eq!(prod.len(), len);
            for w in prod.values().windows(2) {
                prop_assert!(w[0] >= w[1]);
            }
            prop_assert!(prod.values().iter().all(|&v| v >= 0.0));
        }
    }
}

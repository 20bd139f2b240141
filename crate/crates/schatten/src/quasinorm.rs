//! Weak Schatten quasi-norms, classical and renormalized.
//!
//! Both are suprema of t^{1/p} mu(t) style expressions over real t > 0.
//! Because mu is constant on [k, k+1) and t^{1/p} increases, the supremum
//! over each unit cell is its right-endpoint limit, so the exact value is
//! the finite maximum over integer cells:
//!
//!   classical      sup_k (k+1)^{1/p} mu(k)
//!   renormalized   sup_k (p (k+1))^{1/p} mu(k)
//!
//! The reported `attaining_index` is the integer cell whose closure attains
//! the supremum (the sup is not attained at any interior t); ties break to
//! the smallest index for determinism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::SingularSpectrum;

/// Quasi-norm value together with the attaining cell index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuasiNormResult {
    pub value: f64,
    pub attaining_index: usize,
    pub exponent_p: f64,
    pub renormalized: bool,
}

fn validate_exponent(p: f64) -> Result<()> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "exponent p must be finite and > 0, got {p}"
        )));
    }
    Ok(())
}

/// Index maximizing (k+1)^{1/p} mu(k), smallest on ties; 0 for empty or
/// all-zero spectra (every cell gives 0).
fn classical_argmax(spec: &SingularSpectrum, p: f64) -> usize {
    let inv_p = 1.0 / p;
    let mut best_index = 0usize;
    let mut best = f64::NEG_INFINITY;
    for (k, &mu) in spec.values().iter().enumerate() {
        let term = ((k + 1) as f64).powf(inv_p) * mu;
        if term > best {
            best = term;
            best_index = k;
        }
    }
    best_index
}

/// Classical weak quasi-norm: sup_k (k+1)^{1/p} mu(k).
pub fn weak_norm(spec: &SingularSpectrum, p: f64) -> Result<QuasiNormResult> {
    validate_exponent(p)?;
    let k = classical_argmax(spec, p);
    let mu = spec.values().get(k).copied().unwrap_or(0.0);
    Ok(QuasiNormResult {
        value: ((k + 1) as f64).powf(1.0 / p) * mu,
        attaining_index: k,
        exponent_p: p,
        renormalized: false,
    })
}

/// Renormalized weak quasi-norm: sup_k (p (k+1))^{1/p} mu(k), which equals
/// p^{1/p} times the classical norm and shares its attaining index.
pub fn renorm_weak_norm(spec: &SingularSpectrum, p: f64) -> Result<QuasiNormResult> {
    validate_exponent(p)?;
    let k = classical_argmax(spec, p);
    let mu = spec.values().get(k).copied().unwrap_or(0.0);
    Ok(QuasiNormResult {
        value: (p * (k + 1) as f64).powf(1.0 / p) * mu,
        attaining_index: k,
        exponent_p: p,
        renormalized: true,
    })
}

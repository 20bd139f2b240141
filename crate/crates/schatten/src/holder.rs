//! Hölder exponent arithmetic, the optimal constants, and inequality
//! verification for operator pairs.
//!
//! For exponents with 1/r = 1/p + 1/q the product inequality
//! mu(t1 + t2, TS) <= mu(t1, T) mu(t2, S) yields two equivalent bounds:
//! the classical form with constant (p+q)^{1/p+1/q} / (q^{1/p} p^{1/q}),
//! and the renormalized form with constant exactly 1. Both hold for every
//! operator pair; a reported violation beyond tolerance is a numerical
//! bug, never data.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::quasinorm::{renorm_weak_norm, weak_norm};
use crate::spectrum::SingularSpectrum;
use crate::tol::EXPONENT_REL_TOL;

/// Exponent triple (p, q, r) with 1/r = 1/p + 1/q.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderExponents {
    p: f64,
    q: f64,
    r: f64,
}

impl HolderExponents {
    /// Derives r = pq / (p + q) from positive finite p, q.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        for (name, v) in [("p", p), ("q", q)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "exponent {name} must be finite and > 0, got {v}"
                )));
            }
        }
        let r = p * q / (p + q);
        let e = Self { p, q, r };
        debug_assert!(e.identity_residual() <= EXPONENT_REL_TOL);
        Ok(e)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// |1/r - 1/p - 1/q| relative to 1/r.
    pub fn identity_residual(&self) -> f64 {
        let inv_r = 1.0 / self.r;
        ((inv_r - 1.0 / self.p - 1.0 / self.q) / inv_r).abs()
    }
}

/// The optimal constant of the classical-form inequality,
/// (p+q)^{1/p+1/q} q^{-1/p} p^{-1/q}; always >= 1.
pub fn sz_constant(e: &HolderExponents) -> f64 {
    let (p, q) = (e.p, e.q);
    (p + q).powf(1.0 / p + 1.0 / q) * q.powf(-1.0 / p) * p.powf(-1.0 / q)
}

/// The same constant in renormalization form, p^{1/p} q^{1/q} / r^{1/r}.
pub fn renorm_constant(e: &HolderExponents) -> f64 {
    let (p, q, r) = (e.p, e.q, e.r);
    p.powf(1.0 / p) * q.powf(1.0 / q) / r.powf(1.0 / r)
}

/// Verification record for one operator pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderReport {
    pub exponents: HolderExponents,
    /// Classical quasi-norms of T, S and their product TS.
    pub norm_t: f64,
    pub norm_s: f64,
    pub norm_ts: f64,
    /// norm_ts / (norm_t * norm_s); defined only for non-degenerate pairs.
    pub ratio: f64,
    pub sz_constant: f64,
    /// ratio <= sz_constant up to the run tolerance.
    pub classical_ok: bool,
    /// Same ratio measured in renormalized norms; bounded by 1.
    pub renorm_ratio: f64,
    pub renorm_ok: bool,
}

/// Builds the verification report from precomputed spectra. The dense path
/// wraps this; extremizer experiments call it directly with spectra that
/// never touch a matrix.
pub fn spectral_holder_report(
    spec_t: &SingularSpectrum,
    spec_s: &SingularSpectrum,
    spec_ts: &SingularSpectrum,
    e: &HolderExponents,
    tol: f64,
) -> Result<HolderReport> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be finite and >= 0, got {tol}"
        )));
    }
    let norm_t = weak_norm(spec_t, e.p)?.value;
    let norm_s = weak_norm(spec_s, e.q)?.value;
    let norm_ts = weak_norm(spec_ts, e.r)?.value;
    if norm_t * norm_s == 0.0 {
        return Err(Error::DegeneratePair);
    }
    let ratio = norm_ts / (norm_t * norm_s);
    let constant = sz_constant(e);

    let renorm_t = renorm_weak_norm(spec_t, e.p)?.value;
    let renorm_s = renorm_weak_norm(spec_s, e.q)?.value;
    let renorm_ts = renorm_weak_norm(spec_ts, e.r)?.value;
    let renorm_ratio = renorm_ts / (renorm_t * renorm_s);

    Ok(HolderReport {
        exponents: *e,
        norm_t,
        norm_s,
        norm_ts,
        ratio,
        sz_constant: constant,
        classical_ok: ratio <= constant * (1.0 + tol),
        renorm_ratio,
        renorm_ok: renorm_ratio <= 1.0 + tol,
    })
}

/// Computes the spectra of t, s and their product, then verifies both
/// inequality forms. Zero-norm factors yield a degenerate-pair error
/// rather than a NaN ratio.
pub fn holder_report(
    t: &ComplexMatrix,
    s: &ComplexMatrix,
    e: &HolderExponents,
    tol: f64,
) -> Result<HolderReport> {
    let product = t.multiply(s)?;
    spectral_holder_report(
        &t.singular_values()?,
        &s.singular_values()?,
        &product.singular_values()?,
        e,
        tol,
    )
}

/// One point of the scaling chain behind the renormalized inequality:
///
///   lhs = t^{1/r} mu(t/r, TS)
///   rhs = t^{1/p} mu(t/p, T) * t^{1/q} mu(t/q, S)
///
/// When the three spectra come from an actual product, lhs <= rhs up to
/// rounding for every t > 0; taking suprema over t gives the theorem.
pub fn pointwise_chain(
    spec_ts: &SingularSpectrum,
    spec_t: &SingularSpectrum,
    spec_s: &SingularSpectrum,
    e: &HolderExponents,
    t: f64,
) -> Result<(f64, f64)> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "chain parameter t must be finite and > 0, got {t}"
        )));
    }
    let lhs = t.powf(1.0 / e.r) * spec_ts.mu_at(t / e.r)?;
    let rhs = t.powf(1.0 / e.p) * spec_t.mu_at(t / e.p)?
        * (t.powf(1.0 / e.q) * spec_s.mu_at(t / e.q)?);
    Ok((lhs, rhs))
}

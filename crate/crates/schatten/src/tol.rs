//! Central tolerance and limit constants.
//!
//! Every threshold used by the library and the CLI defaults lives here so
//! verification runs are governed by one configuration record rather than
//! ad-hoc magic numbers.

/// Per-pair convergence threshold for the one-sided Jacobi sweep.
///
/// A column pair (x, y) counts as orthogonal once |x^H y| <= threshold *
/// sqrt(|x|^2 |y|^2). Relative to the pair scale, so small singular values
/// keep high relative accuracy.
pub const SVD_PAIR_THRESHOLD: f64 = 1e-14;

/// Hard cap on Jacobi sweeps. Exceeding it is an error, never a silent
/// partial result. Cyclic Jacobi converges in well under 20 sweeps for
/// dense matrices up to 512; 60 leaves a wide margin.
pub const SVD_MAX_SWEEPS: usize = 60;

/// Default relative tolerance for Hölder inequality verification.
///
/// Covers SVD rounding amplified through matrix products at dimensions up
/// to 512 while still catching genuine violations, which would be O(1).
pub const HOLDER_REL_TOL: f64 = 1e-9;

/// Default relative tolerance for the singular-value product inequality
/// checker.
pub const HORN_REL_TOL: f64 = 1e-10;

/// Absolute floor used when the product-inequality right-hand side is zero,
/// avoiding division by zero in the relative comparison.
pub const HORN_ABS_FLOOR: f64 = 1e-300;

/// Length cap for the product-inequality checker; the all-pairs scan is
/// quadratic and intended for validation, not production.
pub const HORN_LENGTH_CAP: usize = 4096;

/// Max-entry orthogonality gate for generated unitaries: |U^H U - I|.
pub const UNITARY_ORTHO_TOL: f64 = 1e-12;

/// Relative slack allowed in the exponent identity 1/r = 1/p + 1/q.
pub const EXPONENT_REL_TOL: f64 = 1e-12;

/// Dense-matrix dimension cap. Beyond this the dense SVD path is out of
/// scope; spectrum-level operations have no such cap.
pub const DENSE_DIM_CAP: usize = 512;

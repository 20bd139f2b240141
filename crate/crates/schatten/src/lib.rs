//! Weak Schatten quasi-norms for finite-rank operators.
//!
//! The toolkit computes singular spectra of dense complex matrices, the
//! classical and renormalized weak quasi-norms, and verifies the two-factor
//! Hölder inequalities together with the optimality of their constants:
//!
//! - [`matrix`]: dense complex arithmetic, the one-sided Jacobi SVD and
//!   structured/random operator generators;
//! - [`spectrum`]: standalone singular spectra, the step-function view,
//!   the submultiplicativity checker and fast product spectra;
//! - [`quasinorm`]: the discrete suprema defining both quasi-norms;
//! - [`holder`]: exponent arithmetic, the optimal constants and
//!   full inequality verification for operator pairs;
//! - [`extremizer`]: commuting and pairing constructions whose ratios
//!   approach the optimal constant, plus sweep and search drivers;
//! - [`io`]: the JSON file formats consumed by the CLI.
//!
//! Everything is a pure function over immutable values; results are safe
//! to share and send across threads without coordination.

pub mod error;
pub mod extremizer;
pub mod holder;
pub mod io;
pub mod matrix;
pub mod quasinorm;
pub mod random;
pub mod spectrum;
mod svd;
pub mod tol;

pub use error::{Error, Result};
pub use extremizer::{
    anti_chain_pairing, commuting_ratio, critical_diagonal, pairing_ratio, random_ratio_search,
    saturation_sweep, Family, PairingExtremizer, SaturationRow,
};
pub use holder::{
    holder_report, pointwise_chain, renorm_constant, spectral_holder_report, sz_constant,
    HolderExponents, HolderReport,
};
pub use matrix::{diagonal_matrix, permutation_matrix, ComplexMatrix};
pub use quasinorm::{renorm_weak_norm, weak_norm, QuasiNormResult};
pub use random::{
    random_ginibre, random_permutation, random_spectrum, random_unitary, Philox4x64, RandomSeed,
    PRNG_NAME,
};
pub use spectrum::{horn_check, sorted_products, HornViolation, SingularSpectrum};

#[cfg(test)]
mod concurrency {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        assert_send_sync::<ComplexMatrix>();
        assert_send_sync::<SingularSpectrum>();
        assert_send_sync::<QuasiNormResult>();
        assert_send_sync::<HolderExponents>();
        assert_send_sync::<HolderReport>();
        assert_send_sync::<PairingExtremizer>();
        assert_send_sync::<SaturationRow>();
        assert_send_sync::<Error>();
    }
}

//! Seeded random generators built on the Philox 4x64-10 counter-based PRNG.
//!
//! The engine reproduces numpy's `Philox(key=seed)` word stream exactly
//! (same round constants, key schedule and counter semantics), so any
//! language with a Philox implementation can regenerate every stream from
//! the recorded 64-bit seed. Reports emit the generator name from
//! [`PRNG_NAME`].

use num_complex::Complex64;

use crate::spectrum::SingularSpectrum;
use crate::matrix::ComplexMatrix;

/// Generator identifier embedded in run metadata.
pub const PRNG_NAME: &str = "philox4x64-10";

const PHILOX_M0: u64 = 0xD2E7_470E_E14C_6C93;
const PHILOX_M1: u64 = 0xCA5A_8263_9512_1157;
const PHILOX_W0: u64 = 0x9E37_79B9_7F4A_7C15;
const PHILOX_W1: u64 = 0xBB67_AE85_84CA_A73B;

/// Stream identifier for [`RandomSeed::derive`], distinct from the primary
/// key space (the little-endian bytes of `b"schatten"`).
const DERIVE_STREAM: u64 = u64::from_le_bytes(*b"schatten");

/// 64-bit seed; identical seed and parameters reproduce outputs bit for bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSeed(pub u64);

impl RandomSeed {
    /// Deterministic child seed for independent sub-streams (per-trial
    /// matrices, permutations). One Philox block keyed off a dedicated
    /// stream constant; indices give unrelated children.
    pub fn derive(self, index: u64) -> RandomSeed {
        let block = philox_block([index, 0, 0, 0], [self.0, DERIVE_STREAM]);
        RandomSeed(block[0])
    }
}

#[inline]
fn mulhilo(a: u64, b: u64) -> (u64, u64) {
    let wide = (a as u128) * (b as u128);
    ((wide >> 64) as u64, wide as u64)
}

/// One 10-round Philox 4x64 block.
fn philox_block(mut ctr: [u64; 4], mut key: [u64; 2]) -> [u64; 4] {
    for round in 0..10 {
        if round > 0 {
            key[0] = key[0].wrapping_add(PHILOX_W0);
            key[1] = key[1].wrapping_add(PHILOX_W1);
        }
        let (hi0, lo0) = mulhilo(PHILOX_M0, ctr[0]);
        let (hi1, lo1) = mulhilo(PHILOX_M1, ctr[2]);
        ctr = [hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0];
    }
    ctr
}

/// Philox 4x64-10 stream: 256-bit counter, 128-bit key, four words per block.
///
/// Matches numpy's `Philox(key=k).random_raw()` stream for key words
/// `[k, 0]`: the counter is incremented before each block is generated.
#[derive(Debug, Clone)]
pub struct Philox4x64 {
    key: [u64; 2],
    counter: [u64; 4],
    buffer: [u64; 4],
    index: usize,
}

impl Philox4x64 {
    pub fn from_seed(seed: RandomSeed) -> Self {
        Self::with_key([seed.0, 0])
    }

    pub fn with_key(key: [u64; 2]) -> Self {
        Self {
            key,
            counter: [0, 0, 0, 0],
            buffer: [0; 4],
            index: 4,
        }
    }

    fn advance_counter(&mut self) {
        for word in self.counter.iter_mut() {
            let (next, carry) = word.overflowing_add(1);
            *word = next;
            if !carry {
                break;
            }
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        if self.index == 4 {
            self.advance_counter();
            self.buffer = philox_block(self.counter, self.key);
            self.index = 0;
        }
        let out = self.buffer[self.index];
        self.index += 1;
        out
    }

    /// Uniform in the half-open interval [0, 1), 53-bit resolution.
    pub fn next_uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform in (0, 1]; safe as a logarithm argument.
    fn next_uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Pair of independent standard real Gaussians (Box-Muller).
    pub fn next_normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_uniform_open();
        let u2 = self.next_uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        (radius * angle.cos(), radius * angle.sin())
    }

    /// Standard complex Gaussian: E|z|^2 = 1, real and imaginary parts
    /// independent N(0, 1/2).
    pub fn next_complex_normal(&mut self) -> Complex64 {
        let (re, im) = self.next_normal_pair();
        Complex64::new(
            re * std::f64::consts::FRAC_1_SQRT_2,
            im * std::f64::consts::FRAC_1_SQRT_2,
        )
    }

    /// Uniform integer in [0, bound) by rejection; no modulo bias.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// n x n matrix of independent standard complex Gaussian entries,
/// row-major fill order; bit-identical per (n, seed).
pub fn random_ginibre(n: usize, seed: RandomSeed) -> ComplexMatrix {
    assert!(n >= 1, "dimension must be positive");
    let mut rng = Philox4x64::from_seed(seed);
    let entries: Vec<Complex64> = (0..n * n).map(|_| rng.next_complex_normal()).collect();
    ComplexMatrix::new(n, n, entries).expect("gaussian entries are finite")
}

/// Haar-style unitary: Gram-Schmidt orthonormalization of a Ginibre draw
/// with a second reorthogonalization pass. Normalizing each residual by its
/// positive real norm fixes the phase convention, so the output is
/// deterministic per seed.
pub fn random_unitary(n: usize, seed: RandomSeed) -> ComplexMatrix {
    assert!(n >= 1, "dimension must be positive");
    let g = random_ginibre(n, seed);
    // Column-major workspace.
    let mut q = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for i in 0..n {
            q[j * n + i] = g.entry(i, j);
        }
    }
    for j in 0..n {
        // Two passes keep orthogonality at machine level ("twice is enough").
        for _pass in 0..2 {
            for l in 0..j {
                let mut proj = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    proj += q[l * n + i].conj() * q[j * n + i];
                }
                for i in 0..n {
                    let correction = proj * q[l * n + i];
                    q[j * n + i] -= correction;
                }
            }
        }
        let norm: f64 = q[j * n..(j + 1) * n]
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(norm > 0.0, "Ginibre draw was rank deficient");
        for i in 0..n {
            q[j * n + i] /= norm;
        }
    }
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for i in 0..n {
            entries[i * n + j] = q[j * n + i];
        }
    }
    ComplexMatrix::new(n, n, entries).expect("orthonormalized entries are finite")
}

/// Uniform random permutation of {0..n-1} (Fisher-Yates).
pub fn random_permutation(n: usize, rng: &mut Philox4x64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Random valid spectrum: `len` uniforms from (0, 1] sorted non-increasing.
pub fn random_spectrum(len: usize, rng: &mut Philox4x64) -> SingularSpectrum {
    let mut values: Vec<f64> = (0..len).map(|_| rng.next_uniform_open()).collect();
    values.sort_unstable_by(|a, b| b.total_cmp(a));
    SingularSpectrum::from_sorted_unchecked(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;

    /// First eight outputs of numpy's `Philox(key=k).random_raw(8)`.
    const NUMPY_KEY0: [u64; 8] = [
        0x02f4ba6408e4d89b,
        0x3dd62b0b9ca8c5b2,
        0x1c8667a55d902e79,
        0x907d7a052fd5b4dc,
        0x809bf322883987c3,
        0x471128b9e807f7dd,
        0xf250ba0dbec065b7,
        0xfc6ed66767a457bc,
    ];
    const NUMPY_KEY1: [u64; 4] = [
        0x4db6a27b756282df,
        0xd944fa03babe0e2f,
        0x27f872e577060d32,
        0x07f697696a0482a2,
    ];
    const NUMPY_KEY_LARGE: [u64; 4] = [
        0x01e08b9944fc9ce9,
        0x4dd35999ef97e4c4,
        0xfb4385fe6262b926,
        0xe8ca5d2e2ace8c50,
    ];

    #[test]
    fn philox_matches_numpy_reference_vectors() {
        let mut rng = Philox4x64::from_seed(RandomSeed(0));
        for &want in &NUMPY_KEY0 {
            assert_eq!(rng.next_u64(), want);
        }
        let mut rng = Philox4x64::from_seed(RandomSeed(1));
        for &want in &NUMPY_KEY1 {
            assert_eq!(rng.next_u64(), want);
        }
        let mut rng = Philox4x64::from_seed(RandomSeed(0xdeadbeef12345678));
        for &want in &NUMPY_KEY_LARGE {
            assert_eq!(rng.next_u64(), want);
        }
    }

    #[test]
    fn philox_counter_carries_across_words() {
        // numpy: Philox(key=3, counter=2^64 - 1).random_raw(4)
        let mut rng = Philox4x64::with_key([3, 0]);
        rng.counter = [u64::MAX - 1, 0, 0, 0];
        rng.index = 4;
        let want: [u64; 4] = [
            0x2aa6d78569aec055,
            0xce81ee011fc5b541,
            0x3ed198649704bfda,
            0x8dfdd24fe1276e18,
        ];
        // First block consumes counter 2^64 - 1; the next wraps into word 1.
        for _ in 0..4 {
            rng.next_u64();
        }
        for &w in &want {
            assert_eq!(rng.next_u64(), w);
        }
        assert_eq!(rng.counter, [0, 1, 0, 0]);
    }

    #[test]
    fn ginibre_is_deterministic_per_seed() {
        let a = random_ginibre(4, RandomSeed(1));
        let b = random_ginibre(4, RandomSeed(1));
        assert_eq!(a, b);
        let c = random_ginibre(4, RandomSeed(2));
        assert_ne!(a, c);
    }

    #[test]
    fn ginibre_scalar_is_finite() {
        let a = random_ginibre(1, RandomSeed(3));
        assert!(a.entry(0, 0).re.is_finite() && a.entry(0, 0).im.is_finite());
    }

    #[test]
    fn ginibre_top_singular_value_concentrates_near_two_sqrt_n() {
        // Monte-Carlo sanity band, not a per-draw guarantee.
        let n = 64;
        let lo = (n as f64).sqrt();
        let hi = 3.0 * (n as f64).sqrt();
        let mut inside = 0;
        for seed in 0..100u64 {
            let top = random_ginibre(n, RandomSeed(seed))
                .singular_values()
                .unwrap()
                .values()[0];
            if top > lo && top < hi {
                inside += 1;
            }
        }
        assert!(inside >= 99, "only {inside}/100 draws in ({lo}, {hi})");
    }

    #[test]
    fn unitary_is_orthonormal() {
        let u = random_unitary(32, RandomSeed(7));
        let gram = u.adjoint().multiply(&u).unwrap();
        let id = ComplexMatrix::identity(32).unwrap();
        let mut max_dev = 0.0f64;
        for i in 0..32 {
            for j in 0..32 {
                max_dev = max_dev.max((gram.entry(i, j) - id.entry(i, j)).norm());
            }
        }
        assert!(
            max_dev <= crate::tol::UNITARY_ORTHO_TOL,
            "max deviation {max_dev}"
        );
    }

    #[test]
    fn unitary_scalar_is_unimodular() {
        let u = random_unitary(1, RandomSeed(4));
        assert!((u.entry(0, 0).norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn unitary_singular_values_are_ones() {
        let u = random_unitary(16, RandomSeed(12));
        for &s in u.singular_values().unwrap().values() {
            assert!((s - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn derive_is_deterministic_and_separates_indices() {
        let s = RandomSeed(42);
        assert_eq!(s.derive(0), s.derive(0));
        assert_ne!(s.derive(0), s.derive(1));
        assert_ne!(s.derive(0), RandomSeed(43).derive(0));
    }

    #[test]
    fn permutation_is_bijective() {
        let mut rng = Philox4x64::from_seed(RandomSeed(5));
        let perm = random_permutation(17, &mut rng);
        crate::matrix::validate_bijection(&perm).unwrap();
    }

    #[test]
    fn random_spectrum_is_valid() {
        let mut rng = Philox4x64::from_seed(RandomSeed(6));
        let spec = random_spectrum(40, &mut rng);
        let v = spec.values();
        for w in v.windows(2) {
            assert!(w[0] >= w[1]);
        }
        assert!(v.iter().all(|&x| x > 0.0 && x <= 1.0));
    }
}

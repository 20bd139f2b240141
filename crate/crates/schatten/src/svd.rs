//! Singular values via one-sided Jacobi orthogonalization.
//!
//! Columns of the (taller orientation of the) matrix are rotated in cyclic
//! pair order until every pair is orthogonal relative to its own scale; the
//! singular values are then the column norms. The per-pair relative
//! criterion keeps small singular values accurate in a relative sense,
//! which the quasi-norm suprema depend on.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectrum::SingularSpectrum;
use crate::tol::{SVD_MAX_SWEEPS, SVD_PAIR_THRESHOLD};

pub(crate) fn jacobi_singular_values(a: &ComplexMatrix) -> Result<SingularSpectrum> {
    // Orthogonalize columns of the taller orientation; singular values agree.
    let work = if a.rows() >= a.cols() {
        a.clone()
    } else {
        a.adjoint()
    };
    let m = work.rows();
    let k = work.cols();

    // Column-major copy for contiguous column sweeps.
    let mut cols = vec![Complex64::new(0.0, 0.0); m * k];
    for i in 0..m {
        for j in 0..k {
            cols[j * m + i] = work.entry(i, j);
        }
    }
    let mut norm_sq: Vec<f64> = (0..k)
        .map(|j| cols[j * m..(j + 1) * m].iter().map(|z| z.norm_sqr()).sum())
        .collect();

    for _sweep in 0..SVD_MAX_SWEEPS {
        let mut max_off = 0.0f64;
        for i in 0..k.saturating_sub(1) {
            for j in i + 1..k {
                let (a_sq, b_sq) = (norm_sq[i], norm_sq[j]);
                let scale = (a_sq * b_sq).sqrt();
                if scale == 0.0 {
                    continue;
                }
                let mut g = Complex64::new(0.0, 0.0);
                {
                    let (head, tail) = cols.split_at(j * m);
                    let x = &head[i * m..i * m + m];
                    let y = &tail[..m];
                    for (xv, yv) in x.iter().zip(y) {
                        g += xv.conj() * yv;
                    }
                }
                let off = g.norm() / scale;
                max_off = max_off.max(off);
                if off <= SVD_PAIR_THRESHOLD {
                    continue;
                }

                // Phase-align the pair, then a real Jacobi rotation
                // annihilates the off-diagonal Gram entry.
                let alpha = g / g.norm();
                let zeta = (b_sq - a_sq) / (2.0 * g.norm());
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;

                let (head, tail) = cols.split_at_mut(j * m);
                let x = &mut head[i * m..i * m + m];
                let y = &mut tail[..m];
                let mut new_a_sq = 0.0;
                let mut new_b_sq = 0.0;
                for (xv, yv) in x.iter_mut().zip(y.iter_mut()) {
                    let xp = c * *xv - s * alpha.conj() * *yv;
                    let yp = s * alpha * *xv + c * *yv;
                    new_a_sq += xp.norm_sqr();
                    new_b_sq += yp.norm_sqr();
                    *xv = xp;
                    *yv = yp;
                }
                norm_sq[i] = new_a_sq;
                norm_sq[j] = new_b_sq;
            }
        }
        if max_off <= SVD_PAIR_THRESHOLD {
            let mut values: Vec<f64> = norm_sq.iter().map(|&v| v.sqrt().max(0.0)).collect();
            values.sort_unstable_by(|a, b| b.total_cmp(a));
            return Ok(SingularSpectrum::from_sorted_unchecked(values));
        }
    }
    Err(Error::SvdDidNotConverge {
        max_sweeps: SVD_MAX_SWEEPS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::diagonal_matrix;
    use crate::random::{random_ginibre, random_unitary, RandomSeed};

    /// Closed-form singular values of a 2x2 complex matrix from the
    /// characteristic polynomial of A^H A.
    fn two_by_two_oracle(a: &ComplexMatrix) -> [f64; 2] {
        let alpha = a.entry(0, 0).norm_sqr() + a.entry(1, 0).norm_sqr();
        let beta = a.entry(0, 1).norm_sqr() + a.entry(1, 1).norm_sqr();
        let gamma = a.entry(0, 0).conj() * a.entry(0, 1) + a.entry(1, 0).conj() * a.entry(1, 1);
        let disc = ((alpha - beta).powi(2) + 4.0 * gamma.norm_sqr()).sqrt();
        let hi = ((alpha + beta + disc) / 2.0).max(0.0).sqrt();
        let lo = ((alpha + beta - disc) / 2.0).max(0.0).sqrt();
        [hi, lo]
    }

    #[test]
    fn diagonal_spectrum_is_sorted_absolute_values() {
        let d = diagonal_matrix(&[3.0, -1.0, 2.0]).unwrap();
        let spec = d.singular_values().unwrap();
        assert_eq!(spec.values(), &[3.0, 2.0, 1.0]);
    }

    #[test]
    fn unitary_spectrum_is_all_ones() {
        let u = random_unitary(8, RandomSeed(21));
        for &s in u.singular_values().unwrap().values() {
            assert!((s - 1.0).abs() <= 1e-12, "singular value {s} not 1");
        }
    }

    #[test]
    fn two_by_two_matches_quadratic_formula_oracle() {
        for seed in 0..50 {
            let a = random_ginibre(2, RandomSeed(seed));
            let got = a.singular_values().unwrap();
            let want = two_by_two_oracle(&a);
            for (g, w) in got.values().iter().zip(want.iter()) {
                assert!(
                    (g - w).abs() <= 1e-12 * w.abs().max(1e-300),
                    "seed {seed}: {g} vs oracle {w}"
                );
            }
        }
    }

    #[test]
    fn rectangular_orientations_agree() {
        let g = random_ginibre(4, RandomSeed(9));
        let a = ComplexMatrix::new(4, 2, g.entries()[..8].to_vec()).unwrap();
        let s1 = a.singular_values().unwrap();
        let s2 = a.adjoint().singular_values().unwrap();
        assert_eq!(s1.len(), 2);
        for (x, y) in s1.values().iter().zip(s2.values()) {
            assert!((x - y).abs() <= 1e-13 * x.max(1.0));
        }
    }

    #[test]
    fn zero_matrix_spectrum_is_zero() {
        let z = ComplexMatrix::zeros(3, 3).unwrap();
        assert_eq!(z.singular_values().unwrap().values(), &[0.0, 0.0, 0.0]);
    }
}

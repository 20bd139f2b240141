//! Dense complex matrices: the concrete finite-rank operator model.
//!
//! Storage is row-major `Complex64`. Construction validates shape and
//! finiteness once; every operation may then assume finite entries.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectrum::SingularSpectrum;
use crate::svd;

/// Dense rectangular complex matrix with validated finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting empty shapes,
    /// length mismatches and non-finite components.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix shape must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "entry count {} does not match shape {rows}x{cols}",
                entries.len()
            )));
        }
        for (idx, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "entry {idx} is non-finite: ({}, {})",
                    z.re, z.im
                )));
            }
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Standard matrix product; requires `self.cols == other.rows`.
    pub fn multiply(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "multiply",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = vec![Complex64::new(0.0, 0.0); m * n];
        for i in 0..m {
            for l in 0..k {
                let a = self.entries[i * k + l];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let lhs_row = &other.entries[l * n..(l + 1) * n];
                let out_row = &mut out[i * n..(i + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(lhs_row) {
                    *o += a * b;
                }
            }
        }
        ComplexMatrix::new(m, n, out)
    }

    /// Conjugate transpose. Involutive: `a.adjoint().adjoint() == a` exactly.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        ComplexMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: out,
        }
    }

    /// Entrywise scaling by a complex constant.
    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entry magnitude; used by orthogonality gates.
    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// The `min(rows, cols)` singular values, non-increasing.
    pub fn singular_values(&self) -> Result<SingularSpectrum> {
        svd::jacobi_singular_values(self)
    }
}

/// Square matrix with the given real diagonal and zeros elsewhere.
/// The empty sequence is rejected (matrices are at least 1x1).
pub fn diagonal_matrix(values: &[f64]) -> Result<ComplexMatrix> {
    if values.is_empty() {
        return Err(Error::InvalidArgument(
            "diagonal requires at least one value (rows >= 1)".into(),
        ));
    }
    let n = values.len();
    let mut m = ComplexMatrix::zeros(n, n)?;
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "diagonal value {i} is non-finite: {v}"
            )));
        }
        m.entries[i * n + i] = Complex64::new(v, 0.0);
    }
    Ok(m)
}

/// 0/1 matrix with entry (i, perm[i]) = 1; unitary for any bijection.
pub fn permutation_matrix(perm: &[usize]) -> Result<ComplexMatrix> {
    validate_bijection(perm)?;
    let n = perm.len();
    let mut m = ComplexMatrix::zeros(n, n)?;
    for (i, &j) in perm.iter().enumerate() {
        m.entries[i * n + j] = Complex64::new(1.0, 0.0);
    }
    Ok(m)
}

/// Checks that `perm` maps {0..n-1} onto itself exactly once each.
pub(crate) fn validate_bijection(perm: &[usize]) -> Result<()> {
    if perm.is_empty() {
        return Err(Error::NotBijective("empty permutation".into()));
    }
    let n = perm.len();
    let mut seen = vec![false; n];
    for (i, &j) in perm.iter().enumerate() {
        if j >= n {
            return Err(Error::NotBijective(format!(
                "index {i} maps to {j}, out of range for n = {n}"
            )));
        }
        if seen[j] {
            return Err(Error::NotBijective(format!("target {j} appears twice")));
        }
        seen[j] = true;
    }
    Ok(())
}

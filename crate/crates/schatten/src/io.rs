//! File formats consumed by the CLI.
//!
//! Matrix files are JSON objects `{"rows": n, "cols": m, "data": [[re, im], ...]}`
//! with row-major data; spectrum files are JSON arrays of non-negative,
//! non-increasing numbers. Parse errors name the offending field or index.

use std::path::Path;

use num_complex::Complex64;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectrum::SingularSpectrum;

/// Either accepted input shape of the `norms` command.
#[derive(Debug, Clone)]
pub enum MatrixOrSpectrum {
    Matrix(ComplexMatrix),
    Spectrum(SingularSpectrum),
}

fn as_positive_dim(value: Option<&Value>, name: &str) -> Result<usize> {
    let v = value.ok_or_else(|| Error::Parse(format!("{name}: missing field")))?;
    let n = v
        .as_u64()
        .ok_or_else(|| Error::Parse(format!("{name}: expected a positive integer, got {v}")))?;
    if n == 0 {
        return Err(Error::Parse(format!(
            "{name}: expected a positive integer, got 0"
        )));
    }
    Ok(n as usize)
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    matrix_from_value(&value)
}

fn matrix_from_value(value: &Value) -> Result<ComplexMatrix> {
    let obj = value.as_object().ok_or_else(|| {
        Error::Parse("matrix file must be an object with rows, cols and data".into())
    })?;
    let rows = as_positive_dim(obj.get("rows"), "rows")?;
    let cols = as_positive_dim(obj.get("cols"), "cols")?;
    let data = obj
        .get("data")
        .ok_or_else(|| Error::Parse("data: missing field".into()))?
        .as_array()
        .ok_or_else(|| Error::Parse("data: expected an array of [re, im] pairs".into()))?;
    if data.len() != rows * cols {
        return Err(Error::Parse(format!(
            "data: expected {} entries for a {rows}x{cols} matrix, got {}",
            rows * cols,
            data.len()
        )));
    }
    let mut entries = Vec::with_capacity(data.len());
    for (idx, entry) in data.iter().enumerate() {
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("data[{idx}]: expected a [re, im] pair")))?;
        let mut parts = [0.0f64; 2];
        for (slot, component) in parts.iter_mut().zip(pair) {
            let x = component.as_f64().ok_or_else(|| {
                Error::Parse(format!("data[{idx}]: component is not a number"))
            })?;
            if !x.is_finite() {
                return Err(Error::Parse(format!("data[{idx}]: non-finite component {x}")));
            }
            *slot = x;
        }
        entries.push(Complex64::new(parts[0], parts[1]));
    }
    ComplexMatrix::new(rows, cols, entries)
}

pub fn parse_spectrum(text: &str) -> Result<SingularSpectrum> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    spectrum_from_value(&value)
}

fn spectrum_from_value(value: &Value) -> Result<SingularSpectrum> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Parse("spectrum file must be an array of numbers".into()))?;
    let mut values = Vec::with_capacity(arr.len());
    for (idx, v) in arr.iter().enumerate() {
        let x = v
            .as_f64()
            .ok_or_else(|| Error::Parse(format!("spectrum[{idx}]: not a number")))?;
        values.push(x);
    }
    SingularSpectrum::new(values).map_err(|e| match e {
        Error::InvalidSpectrum { index, detail } => {
            Error::Parse(format!("spectrum[{index}]: {detail}"))
        }
        other => other,
    })
}

/// Sniffs the input shape: JSON arrays are spectra, objects are matrices.
pub fn parse_input(text: &str) -> Result<MatrixOrSpectrum> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    match &value {
        Value::Array(_) => Ok(MatrixOrSpectrum::Spectrum(spectrum_from_value(&value)?)),
        Value::Object(_) => Ok(MatrixOrSpectrum::Matrix(matrix_from_value(&value)?)),
        _ => Err(Error::Parse(
            "input must be a matrix object or a spectrum array".into(),
        )),
    }
}

pub fn load_input(path: &Path) -> Result<MatrixOrSpectrum> {
    let text = std::fs::read_to_string(path)?;
    parse_input(&text)
}

/// Serializes a matrix in the on-disk format.
pub fn matrix_to_json(m: &ComplexMatrix) -> Value {
    let data: Vec<Value> = m
        .entries()
        .iter()
        .map(|z| Value::Array(vec![z.re.into(), z.im.into()]))
        .collect();
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "data": data,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_ginibre, RandomSeed};

    #[test]
    fn matrix_round_trip() {
        let m = random_ginibre(3, RandomSeed(1));
        let text = matrix_to_json(&m).to_string();
        let back = parse_matrix(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matrix_errors_name_field_or_index() {
        let err = parse_matrix(r#"{"rows": 0, "cols": 1, "data": []}"#).unwrap_err();
        assert!(err.to_string().contains("rows"), "{err}");

        let err = parse_matrix(r#"{"rows": 1, "cols": 1, "data": []}"#).unwrap_err();
        assert!(err.to_string().contains("data"), "{err}");

        let err =
            parse_matrix(r#"{"rows": 1, "cols": 2, "data": [[1, 0], [1, 0, 3]]}"#).unwrap_err();
        assert!(err.to_string().contains("data[1]"), "{err}");

        let err = parse_matrix(r#"{"rows": 1, "cols": 1, "data": [[1, "x"]]}"#).unwrap_err();
        assert!(err.to_string().contains("data[0]"), "{err}");

        let err = parse_matrix(r#"{"cols": 1, "data": [[1, 0]]}"#).unwrap_err();
        assert!(err.to_string().contains("rows"), "{err}");
    }

    #[test]
    fn spectrum_parsing_and_validation() {
        let s = parse_spectrum("[3.0, 2.0, 2.0, 0.5]").unwrap();
        assert_eq!(s.values(), &[3.0, 2.0, 2.0, 0.5]);

        let err = parse_spectrum("[1.0, 2.0]").unwrap_err();
        assert!(err.to_string().contains("spectrum[1]"), "{err}");

        let err = parse_spectrum("[1.0, -0.5]").unwrap_err();
        assert!(err.to_string().contains("spectrum[1]"), "{err}");

        let err = parse_spectrum(r#"[1.0, "a"]"#).unwrap_err();
        assert!(err.to_string().contains("spectrum[1]"), "{err}");
    }

    #[test]
    fn input_sniffing() {
        assert!(matches!(
            parse_input("[1.0]").unwrap(),
            MatrixOrSpectrum::Spectrum(_)
        ));
        assert!(matches!(
            parse_input(r#"{"rows": 1, "cols": 1, "data": [[2, 0]]}"#).unwrap(),
            MatrixOrSpectrum::Matrix(_)
        ));
        assert!(parse_input("42").is_err());
    }
}

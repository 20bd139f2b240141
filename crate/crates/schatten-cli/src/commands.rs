//! The five subcommands: norms, holder, horn, saturate, search.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use schatten::error::Error;
use schatten::io::MatrixOrSpectrum;
use schatten::{
    horn_check, random_ginibre, renorm_weak_norm, saturation_sweep, weak_norm, Family,
    HolderExponents, HolderReport, HornViolation, RandomSeed, SaturationRow,
};

use crate::meta::RunMetadata;
use crate::{CliError, CliResult};

/// Maps library errors to exit classes: bad input is usage (2), a numeric
/// failure inside an otherwise valid run is internal (1).
pub fn lib_error(err: Error) -> CliError {
    match err {
        Error::SvdDidNotConverge { .. } | Error::DegeneratePair => {
            CliError::Internal(err.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn require_positive_finite(name: &str, v: f64) -> CliResult<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(CliError::Usage(format!(
            "{name} must be finite and > 0, got {v}"
        )));
    }
    Ok(())
}

fn require_tolerance(name: &str, v: f64) -> CliResult<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(CliError::Usage(format!(
            "{name} must be finite and >= 0, got {v}"
        )));
    }
    Ok(())
}

fn require_range(name: &str, v: usize, lo: usize, hi: usize) -> CliResult<()> {
    if v < lo || v > hi {
        return Err(CliError::Usage(format!(
            "{name} must be in {lo}..={hi}, got {v}"
        )));
    }
    Ok(())
}

fn exponents(p: f64, q: f64) -> CliResult<HolderExponents> {
    require_positive_finite("--p", p)?;
    require_positive_finite("--q", q)?;
    HolderExponents::new(p, q).map_err(lib_error)
}

pub fn cmd_norms(input: &Path, p: f64, renormalized: bool) -> CliResult<()> {
    require_positive_finite("--p", p)?;
    let loaded = schatten::io::load_input(input).map_err(lib_error)?;
    let spectrum = match loaded {
        MatrixOrSpectrum::Spectrum(s) => s,
        MatrixOrSpectrum::Matrix(m) => m.singular_values().map_err(lib_error)?,
    };
    let result = if renormalized {
        renorm_weak_norm(&spectrum, p)
    } else {
        weak_norm(&spectrum, p)
    }
    .map_err(lib_error)?;

    let metadata = RunMetadata::new(None, BTreeMap::new());
    let doc = json!({ "metadata": metadata, "result": result });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(())
}

#[derive(Debug, Serialize)]
struct HolderTrial {
    trial: usize,
    seed_t: u64,
    seed_s: u64,
    report: HolderReport,
}

pub fn cmd_holder(
    p: f64,
    q: f64,
    dim: usize,
    trials: usize,
    seed: u64,
    tol: f64,
    out: &Path,
) -> CliResult<()> {
    let e = exponents(p, q)?;
    require_range("--dim", dim, 1, schatten::tol::DENSE_DIM_CAP)?;
    require_range("--trials", trials, 1, usize::MAX)?;
    require_tolerance("--tol", tol)?;

    let master = RandomSeed(seed);
    let mut records = Vec::with_capacity(trials);
    let mut offenders = Vec::new();
    for trial in 0..trials {
        let seed_t = master.derive(2 * trial as u64);
        let seed_s = master.derive(2 * trial as u64 + 1);
        let t = random_ginibre(dim, seed_t);
        let s = random_ginibre(dim, seed_s);
        let report = schatten::holder_report(&t, &s, &e, tol).map_err(lib_error)?;
        if !report.classical_ok || !report.renorm_ok {
            offenders.push((trial, seed_t.0, seed_s.0));
        }
        records.push(HolderTrial {
            trial,
            seed_t: seed_t.0,
            seed_s: seed_s.0,
            report,
        });
    }

    let metadata = RunMetadata::new(Some(seed), BTreeMap::from([("holder_rel_tol", tol)]));
    let doc = json!({
        "metadata": metadata,
        "exponents": e,
        "dimension": dim,
        "trials": trials,
        "violations": offenders.len(),
        "reports": records,
    });
    std::fs::write(out, serde_json::to_string_pretty(&doc).expect("serializable"))
        .map_err(|err| CliError::Usage(format!("cannot write {}: {err}", out.display())))?;

    if offenders.is_empty() {
        println!(
            "holder: {trials}/{trials} pairs clean at dim {dim}, (p, q) = ({p}, {q}); report: {}",
            out.display()
        );
        Ok(())
    } else {
        let detail = offenders
            .iter()
            .map(|(t, st, ss)| format!("trial {t} (seed_t {st}, seed_s {ss})"))
            .collect::<Vec<_>>()
            .join(", ");
        Err(CliError::Violations(format!(
            "holder inequality breached on {} of {trials} pairs (numerical bug); offenders: {detail}",
            offenders.len()
        )))
    }
}

#[derive(Debug, Serialize)]
struct HornTrial {
    trial: usize,
    seed_t: u64,
    seed_s: u64,
    violations: Vec<HornViolation>,
}

pub fn cmd_horn(dim: usize, trials: usize, seed: u64, tol: f64) -> CliResult<()> {
    require_range("--dim", dim, 1, schatten::tol::HORN_LENGTH_CAP)?;
    require_range("--trials", trials, 1, usize::MAX)?;
    require_tolerance("--tol", tol)?;

    let master = RandomSeed(seed);
    let mut clean = 0usize;
    let mut offenders: Vec<HornTrial> = Vec::new();
    for trial in 0..trials {
        let seed_t = master.derive(2 * trial as u64);
        let seed_s = master.derive(2 * trial as u64 + 1);
        let t = random_ginibre(dim, seed_t);
        let s = random_ginibre(dim, seed_s);
        let ts = t.multiply(&s).map_err(lib_error)?;
        let violations = horn_check(
            &ts.singular_values().map_err(lib_error)?,
            &t.singular_values().map_err(lib_error)?,
            &s.singular_values().map_err(lib_error)?,
            tol,
        )
        .map_err(lib_error)?;
        if violations.is_empty() {
            clean += 1;
        } else {
            offenders.push(HornTrial {
                trial,
                seed_t: seed_t.0,
                seed_s: seed_s.0,
                violations,
            });
        }
    }

    let metadata = RunMetadata::new(Some(seed), BTreeMap::from([("horn_rel_tol", tol)]));
    let doc = json!({
        "metadata": metadata,
        "dimension": dim,
        "trials": trials,
        "clean_trials": clean,
        "violating_trials": offenders,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));

    if offenders.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violations(format!(
            "product inequality breached on {} of {trials} pairs (numerical bug); first offender trial {}",
            offenders.len(),
            offenders[0].trial
        )))
    }
}

pub fn parse_sizes(text: &str) -> CliResult<Vec<usize>> {
    let parse_one = |s: &str| -> CliResult<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid size \"{s}\"")))
    };
    let sizes: Vec<usize> = if let Some((lo, hi)) = text.split_once("..") {
        // Dyadic range: doubling steps from lo while <= hi.
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if lo == 0 || hi < lo {
            return Err(CliError::Usage(format!(
                "size range must satisfy 1 <= lo <= hi, got {lo}..{hi}"
            )));
        }
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            out.push(v);
            match v.checked_mul(2) {
                Some(next) => v = next,
                None => break,
            }
        }
        out
    } else {
        text.split(',').map(parse_one).collect::<CliResult<_>>()?
    };
    if sizes.is_empty() || sizes[0] == 0 {
        return Err(CliError::Usage("sizes must be positive".into()));
    }
    for w in sizes.windows(2) {
        if w[0] >= w[1] {
            return Err(CliError::Usage(format!(
                "sizes must be strictly ascending, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    Ok(sizes)
}

pub fn parse_families(text: &str) -> CliResult<Vec<Family>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Family>()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn format_csv_row(row: &SaturationRow) -> String {
    let k0 = row.k0.map(|v| v.to_string()).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        row.family,
        row.n,
        row.exponents.p(),
        row.exponents.q(),
        row.exponents.r(),
        k0,
        row.best_ratio,
        row.best_index,
        row.constant,
        row.gap
    )
}

pub fn cmd_saturate(
    p: f64,
    q: f64,
    sizes_text: &str,
    families_text: &str,
    k0: Option<usize>,
    csv: &Path,
) -> CliResult<()> {
    let e = exponents(p, q)?;
    let sizes = parse_sizes(sizes_text)?;
    let families = parse_families(families_text)?;
    if let Some(k0) = k0 {
        require_range("--k0", k0, 1, *sizes.first().expect("validated non-empty"))?;
    }

    let rows = saturation_sweep(&e, &sizes, &families, k0).map_err(lib_error)?;

    let metadata = RunMetadata::new(None, BTreeMap::new());
    let mut out = metadata.csv_comment_lines();
    out.push_str("family,n,p,q,r,k0,best_ratio,best_index,constant,gap\n");
    for row in &rows {
        out.push_str(&format_csv_row(row));
        out.push('\n');
    }
    std::fs::write(csv, out)
        .map_err(|err| CliError::Usage(format!("cannot write {}: {err}", csv.display())))?;

    let best = rows
        .iter()
        .max_by(|a, b| a.best_ratio.total_cmp(&b.best_ratio))
        .expect("sweep produced rows");
    println!(
        "saturate: best_ratio {} (family {}, n {}) against constant {}; rows: {}; csv: {}",
        best.best_ratio,
        best.family,
        best.n,
        best.constant,
        rows.len(),
        csv.display()
    );
    Ok(())
}

pub fn cmd_search(p: f64, q: f64, dim: usize, trials: usize, seed: u64) -> CliResult<()> {
    let e = exponents(p, q)?;
    require_range("--dim", dim, 1, schatten::tol::DENSE_DIM_CAP)?;
    require_range("--trials", trials, 1, usize::MAX)?;

    let row = schatten::random_ratio_search(&e, dim, trials, RandomSeed(seed)).map_err(lib_error)?;
    let metadata = RunMetadata::new(Some(seed), BTreeMap::new());
    let doc = json!({ "metadata": metadata, "row": row });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(())
}

//! Reading JSON inputs with field paths in error messages.

use std::fmt;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use weyl_lie::weyl_core::json::{PolyJson, SkewTerm, WeylTerm};
use weyl_lie::wei_norman::{Algebra, Control, ControlSpec};
use weyl_lie::SkewPoly;

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1.
    Domain(String),
    /// Exit code 1 with a JSON report on stdout.
    Failed(serde_json::Value),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Domain(s) => f.write_str(s),
            CliError::Failed(v) => write!(f, "{v}"),
        }
    }
}

impl From<weyl_lie::Error> for CliError {
    fn from(e: weyl_lie::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Domain(format!("serialization failed: {e}"))
    }
}

fn malformed(path: &Path, at: &str, what: impl fmt::Display) -> CliError {
    CliError::Usage(format!("{}: malformed JSON at `{at}`: {what}", path.display()))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| malformed(path, &e.path().to_string(), e.inner()))
}

/// Appends a field path from `serde_path_to_error` to `at`.
fn join(at: &str, inner: &str) -> String {
    let base = if at == "." { "" } else { at };
    match inner {
        "." => at.to_string(),
        _ if inner.starts_with('[') || base.is_empty() => format!("{base}{inner}"),
        _ => format!("{base}.{inner}"),
    }
}

fn from_value<T: DeserializeOwned>(v: &serde_json::Value, path: &Path, at: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        malformed(path, &join(at, &e.path().to_string()), e.inner())
    })
}

/// `{"skew": [..]}` or `{"weyl": [..]}`, with the failing field reported.
fn to_skew(v: &serde_json::Value, path: &Path, at: &str) -> Result<SkewPoly, CliError> {
    let obj = v
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| malformed(path, at, "expected an object with exactly one key, `skew` or `weyl`"))?;
    let poly = if let Some(terms) = obj.get("skew") {
        PolyJson::Skew {
            skew: from_value::<Vec<SkewTerm>>(terms, path, &join(at, "skew"))?,
        }
    } else if let Some(terms) = obj.get("weyl") {
        PolyJson::Weyl {
            weyl: from_value::<Vec<WeylTerm>>(terms, path, &join(at, "weyl"))?,
        }
    } else {
        return Err(malformed(path, at, "expected key `skew` or `weyl`"));
    };
    poly.to_skew()
        .map_err(|e| CliError::Usage(format!("{}: invalid polynomial at `{at}`: {e}", path.display())))
}

fn read_value(path: &Path) -> Result<serde_json::Value, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| malformed(path, ".", e))
}

/// A JSON array of polynomials in either wire form.
pub fn read_polys(path: &Path) -> Result<Vec<SkewPoly>, CliError> {
    let v = read_value(path)?;
    let items = v.as_array().ok_or_else(|| malformed(path, ".", "expected an array of polynomials"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, p)| to_skew(p, path, &format!("[{i}]")))
        .collect()
}

/// A single polynomial.
pub fn read_poly(path: &Path) -> Result<SkewPoly, CliError> {
    to_skew(&read_value(path)?, path, ".")
}

/// Control file for `simulate`; the algebra comes from the command line.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControlsFile {
    pub h: f64,
    pub n_steps: usize,
    pub controls: Vec<Control>,
}

impl ControlsFile {
    pub fn into_spec(self, algebra: Algebra) -> ControlSpec {
        ControlSpec {
            algebra,
            h: self.h,
            n_steps: self.n_steps,
            controls: self.controls,
        }
    }
}

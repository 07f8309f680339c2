//! On-disk `Psi_d` cache.
//!
//! Format (UTF-8 JSON):
//!
//! ```json
//! {"version": 1, "entries": {"<d>": ["c0", "c1", "..."]}}
//! ```
//!
//! Coefficients are decimal strings in ascending degree. Every entry is
//! validated on load: canonical form, degree `phi(d)/2`, leading coefficient
//! `2^(phi(d)/2)` and vanishing at each `cos(2*pi*k/d)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPoly;
use crate::psi::{check_psi_shape, psi_roots, PsiTable};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access cache file: {0}")]
    Io(#[from] io::Error),
    #[error("cache file is not valid JSON: {0}")]
    Parse(String),
    #[error("unsupported cache version {0}")]
    Version(u32),
    #[error("cache entry \"{key}\" is invalid: {reason}")]
    InvalidEntry { key: String, reason: String },
}

#[derive(Serialize, Deserialize)]
struct RawCache {
    version: u32,
    entries: BTreeMap<String, Vec<String>>,
}

/// Validated cache contents keyed by `d`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PsiCache {
    pub entries: BTreeMap<u64, IntPoly>,
}

/// Relative residual tolerance for the root check on load.
const ROOT_TOLERANCE: f64 = 1e-6;

/// `|p(t)| / (1 + sum |c_i| |t|^i)`: residual scaled by the size of the terms
/// being summed, with an absolute floor for roots at or near zero.
pub fn relative_residual(p: &IntPoly, t: f64) -> f64 {
    let scale: f64 = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let c = num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::INFINITY);
            c.abs() * t.abs().powi(i as i32)
        })
        .sum();
    p.eval_real(t).abs() / (1.0 + scale)
}

fn validate(key: &str, coeffs: &[String]) -> Result<(u64, IntPoly), CacheError> {
    let invalid = |reason: String| CacheError::InvalidEntry {
        key: key.to_owned(),
        reason,
    };
    let d = u64::from_str(key)
        .ok()
        .filter(|&d| d >= 1 && d.to_string() == key)
        .ok_or_else(|| invalid("key is not a positive decimal integer".into()))?;
    let parsed = coeffs
        .iter()
        .map(|s| BigInt::from_str(s).map_err(|_| invalid(format!("bad coefficient `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.last().is_some_and(Zero::is_zero) {
        return Err(invalid("trailing zero coefficient".into()));
    }
    let poly = IntPoly::new(parsed);
    check_psi_shape(d, &poly).map_err(invalid)?;
    for root in psi_roots(d) {
        let r = relative_residual(&poly, root.value());
        if r > ROOT_TOLERANCE {
            return Err(invalid(format!(
                "does not vanish at cos(2*pi*{}/{d}) (relative residual {r:e})",
                root.k
            )));
        }
    }
    Ok((d, poly))
}

impl PsiCache {
    pub fn from_json(text: &str) -> Result<Self, CacheError> {
        let raw: RawCache =
            serde_json::from_str(text).map_err(|e| CacheError::Parse(e.to_string()))?;
        if raw.version != CACHE_VERSION {
            return Err(CacheError::Version(raw.version));
        }
        let entries = raw
            .entries
            .iter()
            .map(|(k, v)| validate(k, v))
            .collect::<Result<_, _>>()?;
        Ok(Self { entries })
    }

    pub fn to_json(&self) -> String {
        let raw = RawCache {
            version: CACHE_VERSION,
            entries: self
                .entries
                .iter()
                .map(|(d, p)| {
                    (
                        d.to_string(),
                        p.coeffs().iter().map(|c| c.to_string()).collect(),
                    )
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("cache serializes")
    }

    /// Loads `path`; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        match fs::read_to_string(path) {
            Ok(text) => Self::from_json(&text),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Self::default()),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes via a temporary file and rename.
    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        fs::write(&tmp, self.to_json())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Copies every entry into `table`.
    pub fn seed(&self, table: &PsiTable) -> Result<(), CacheError> {
        for (d, p) in &self.entries {
            table
                .seed_psi(*d, p.clone())
                .map_err(|reason| CacheError::InvalidEntry {
                    key: d.to_string(),
                    reason,
                })?;
        }
        Ok(())
    }

    /// Adds every `Psi_d` memoized in `table`. Returns whether anything changed.
    pub fn absorb(&mut self, table: &PsiTable) -> bool {
        let mut changed = false;
        for (d, p) in table.psi_entries() {
            if let Entry::Vacant(e) = self.entries.entry(d) {
                e.insert(p);
                changed = true;
            }
        }
        changed
    }
}

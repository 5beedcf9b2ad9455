use std::path::Path;

use super::{validate, FusionRingSpec};
use crate::error::{Error, Result};

/// Parses a ring document, rejecting shape mismatches, and validates it when `strict`.
pub fn from_json_str(text: &str, strict: bool) -> Result<FusionRingSpec> {
    let spec: FusionRingSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let r = spec.rank;
    if r == 0 {
        return Err(Error::Parse("rank must be at least 1".into()));
    }
    if spec.dual.len() != r {
        return Err(Error::Parse(format!("dual has {} entries, rank is {r}", spec.dual.len())));
    }
    if let Some(&bad) = spec.dual.iter().find(|&&d| d >= r) {
        return Err(Error::Parse(format!("dual index {bad} out of range for rank {r}")));
    }
    let shape_ok = spec.n.len() == r && spec.n.iter().all(|m| m.len() == r && m.iter().all(|v| v.len() == r));
    if !shape_ok {
        return Err(Error::Parse(format!("N must be a {r}x{r}x{r} array")));
    }
    if strict {
        let report = validate(&spec);
        if !report.is_valid() {
            return Err(Error::Validation(report));
        }
    }
    Ok(spec)
}

pub fn load(path: impl AsRef<Path>, strict: bool) -> Result<FusionRingSpec> {
    let text = std::fs::read_to_string(path)?;
    from_json_str(&text, strict)
}

pub fn to_json_string(spec: &FusionRingSpec) -> String {
    serde_json::to_string_pretty(spec).expect("ring serialization")
}

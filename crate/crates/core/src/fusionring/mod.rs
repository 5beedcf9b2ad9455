//! Based commutative fusion rings: data model, axiom validation, file format, catalog.

mod catalog;
mod io;
mod validate;

use serde::{Deserialize, Serialize};

use crate::chartable::{compute_table, TableConfig};
use crate::error::Result;
use crate::exactnum::CycNumber;

pub use catalog::{catalog, catalog_names};
pub use io::{from_json_str, load, to_json_string};
pub use validate::{validate, Axiom, ValidationReport, Violation};

/// Fusion data of a based ring with unit at index 0.
///
/// `n[i][j][k]` is the multiplicity of `k` in `i ⊗ j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRingSpec {
    pub name: String,
    pub rank: usize,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u32>>>,
    #[serde(rename = "braided", default)]
    pub declared_braided: bool,
    #[serde(rename = "modular", default)]
    pub declared_modular: bool,
    /// Conductor tried first when searching for the character field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor_hint: Option<u32>,
}

impl FusionRingSpec {
    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[i][j][k]
    }

    /// Matrix of left multiplication by basis element `i`: entry `(k, l)` is `N_{il}^k`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|k| (0..self.rank).map(|l| self.n[i][l][k]).collect()).collect()
    }

    /// `i` is invertible when `i ⊗ i*` is the unit.
    pub fn is_invertible(&self, i: usize) -> bool {
        let d = self.dual[i];
        (0..self.rank).all(|k| self.n[i][d][k] == u32::from(k == 0))
    }
}

/// Frobenius-Perron dimensions of the simple classes and their global dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionVector {
    pub d: Vec<CycNumber>,
    #[serde(rename = "dimC")]
    pub dim_c: CycNumber,
}

/// Exact dimensions, read off the certified Perron column of the character table.
pub fn fpdims(spec: &FusionRingSpec, config: &TableConfig) -> Result<DimensionVector> {
    Ok(compute_table(spec, config)?.dims.clone())
}

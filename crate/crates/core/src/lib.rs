//! Exact character tables, class algebras and Galois symmetries of commutative fusion rings.

// Matrix and tensor code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod chartable;
pub mod checks;
pub mod error;
pub mod exactnum;
pub mod fusionring;
pub mod galois;
pub mod linalg;
pub mod report;
pub mod structconst;
pub mod theorems;

pub use chartable::{compute_table, CharacterTable, TableConfig};
pub use checks::{Check, Status};
pub use error::{Error, Result};
pub use exactnum::{ComplexApprox, CycNumber};
pub use fusionring::{catalog, DimensionVector, FusionRingSpec};
pub use report::{analyze, load_input, modular, verify, Report, RunConfig, Section};
pub use theorems::{PerfectVerdict, SMatrixSpec};

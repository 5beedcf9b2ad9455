//! Zero entries of character tables, the perfect-category identity, and modular data.

mod modular;
mod perfect;
mod zeros;

pub use modular::{modular_check, ModularReport, RestrictionRecord, SMatrixSpec};
pub use perfect::{perfect_identity, PerfectReport, PerfectVerdict};
pub use zeros::{amgm_certificate, zero_rows, AmgmCertificate, ZeroReport, ZeroRow};

//! Exact arithmetic in cyclotomic fields and the numeric bridge into them.

mod approx;
mod cyclotomic;
mod field;
mod lll;
mod reconstruct;

pub use approx::{embed, ComplexApprox, Real, MIN_PRECISION};
pub use cyclotomic::{parse_rational, CycNumber};
pub use field::{cyclotomic_polynomial, divisors, totient, units};
pub use lll::lll_reduce;
pub use reconstruct::reconstruct;

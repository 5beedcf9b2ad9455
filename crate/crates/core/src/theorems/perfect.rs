use serde::Serialize;

use crate::chartable::{class_sums, CharacterTable};
use crate::error::Result;
use crate::exactnum::CycNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerfectVerdict {
    /// The identity holds and there are no nontrivial invertibles.
    PerfectConsistent,
    /// The identity fails and nontrivial invertibles exist.
    NotPerfectConsistent,
    /// Identity and perfectness disagree: the theorem would be violated.
    Inconsistent,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerfectReport {
    pub verdict: PerfectVerdict,
    /// Coordinates of `Σ_j C_j` on the central idempotents.
    pub lhs: Vec<CycNumber>,
    /// Coordinates of `(dim C / ∏_j dim C^j) ∏_j C_j`.
    pub rhs: Vec<CycNumber>,
    pub identity_holds: bool,
    pub nontrivial_invertibles: Vec<usize>,
    pub note: String,
}

/// Compares `Σ C_j` with `(dim C / ∏ dim C^j) ∏ C_j`. The braided hypothesis is taken from
/// the ring's declared metadata; weak integrality is computed.
pub fn perfect_identity(t: &CharacterTable) -> Result<PerfectReport> {
    let r = t.rank();
    let z = class_sums(t)?.z;
    let lhs: Vec<CycNumber> = (0..r).map(|i| z[i].iter().cloned().sum()).collect();
    let prod_cd: CycNumber = t.classdims.iter().fold(CycNumber::one(), |acc, x| &acc * x);
    let factor = t.dim_c().div(&prod_cd)?;
    let rhs: Vec<CycNumber> =
        (0..r).map(|i| &factor * &z[i].iter().fold(CycNumber::one(), |acc, x| &acc * x)).collect();
    let identity_holds = lhs == rhs;
    let nontrivial_invertibles: Vec<usize> = (1..r).filter(|&i| t.is_invertible(i)).collect();
    let perfect = nontrivial_invertibles.is_empty();

    let braided = t.ring.declared_braided;
    let weakly = t.is_weakly_integral();
    let (verdict, note) = if !braided {
        (PerfectVerdict::NotApplicable, "ring is not declared braided".to_string())
    } else if !weakly {
        (PerfectVerdict::NotApplicable, "ring is not weakly integral".to_string())
    } else {
        let v = match (identity_holds, perfect) {
            (true, true) => PerfectVerdict::PerfectConsistent,
            (false, false) => PerfectVerdict::NotPerfectConsistent,
            _ => PerfectVerdict::Inconsistent,
        };
        (v, "braided hypothesis taken from declared metadata".to_string())
    };
    Ok(PerfectReport { verdict, lhs, rhs, identity_holds, nontrivial_invertibles, note })
}

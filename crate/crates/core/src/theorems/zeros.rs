use num::{BigRational, ToPrimitive};
use serde::Serialize;

use crate::chartable::CharacterTable;
use crate::checks::Check;
use crate::error::{Error, Result};
use crate::exactnum::CycNumber;
use crate::galois::galois_group;

/// The weighted AM-GM bound forcing a zero into row `i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AmgmCertificate {
    /// `∏_{j ∈ D_i} (|χ_i(C_j)|² / dim(C^j)²)^{dim(C^j)}`.
    #[serde(rename = "P")]
    pub p: CycNumber,
    pub galois_fixed: bool,
    #[serde(rename = "P_is_positive_integer")]
    pub p_is_positive_integer: bool,
    /// `(Σ_{D_i} |χ_i(C_j)|² / dim(C^j)) / Σ_{D_i} dim(C^j)`, absent when `D_i` is empty.
    pub weighted_mean: Option<CycNumber>,
    pub mean_at_least_one: bool,
    /// `mean^{Σ_{D_i} dim(C^j)} ≥ P`.
    pub amgm_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroRow {
    pub row: usize,
    pub invertible: bool,
    /// Columns where the row vanishes.
    #[serde(rename = "T")]
    pub zeros: Vec<usize>,
    /// Nonzero columns other than 0.
    #[serde(rename = "D")]
    pub nonzero: Vec<usize>,
    /// `Σ_j |χ_i(C_j)|² / dim(C^j) = dim(C)`.
    pub class_norm_identity: bool,
    pub certificate: Option<AmgmCertificate>,
    /// `1 + Σ_{T_i} dim(C^j)`, compared with `d_i²`.
    pub zero_mass: CycNumber,
    pub d_squared: CycNumber,
    pub inequality_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroReport {
    pub weakly_integral: bool,
    pub rows: Vec<ZeroRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<Check>,
}

fn compare_rational(a: &CycNumber, b: &CycNumber) -> Option<std::cmp::Ordering> {
    Some(a.as_rational()?.cmp(&b.as_rational()?))
}

/// `P_i` and the inequalities around it. Needs a weakly integral table and a non-invertible row.
pub fn amgm_certificate(t: &CharacterTable, i: usize) -> Result<AmgmCertificate> {
    if !t.is_weakly_integral() {
        return Err(Error::NotApplicable("the table is not weakly integral".into()));
    }
    if t.is_invertible(i) {
        return Err(Error::NotApplicable(format!("row {i} is invertible")));
    }
    let r = t.rank();
    let nonzero: Vec<usize> = (1..r).filter(|&j| !t.alpha[i][j].is_zero()).collect();
    let mut p = CycNumber::one();
    let mut weight = BigRational::from_integer(0.into());
    let mut mass = CycNumber::zero();
    for &j in &nonzero {
        let cd = t.classdims[j].as_integer().and_then(|v| v.to_u32()).ok_or_else(|| {
            Error::InternalInconsistency(format!("class dimension {} is not a small integer", t.classdims[j]))
        })?;
        // |χ_i(C_j)|² / dim(C^j)² = |α_ij|²
        p = &p * &t.alpha[i][j].norm_sq().pow(cd);
        weight += BigRational::from_integer(cd.into());
        mass = &mass + &(&t.classdims[j] * &t.alpha[i][j].norm_sq());
    }
    let group = galois_group(t);
    let galois_fixed = group.elements.iter().all(|s| s.apply(&p) == p);
    let p_is_positive_integer = p.as_integer().is_some_and(|v| v >= 1.into());
    let (weighted_mean, mean_at_least_one, amgm_holds) = if nonzero.is_empty() {
        (None, true, p == CycNumber::one())
    } else {
        let mean = mass.scale(&weight.recip());
        let at_least_one = compare_rational(&mean, &CycNumber::one()).is_some_and(|o| o.is_ge());
        let holds = match (mean.as_rational(), p.as_rational(), weight.to_integer().to_u32()) {
            (Some(m), Some(pv), Some(w)) => num::pow(m, w as usize) >= pv,
            _ => false,
        };
        (Some(mean), at_least_one, holds)
    };
    Ok(AmgmCertificate { p, galois_fixed, p_is_positive_integer, weighted_mean, mean_at_least_one, amgm_holds })
}

pub fn zero_rows(t: &CharacterTable) -> ZeroReport {
    let r = t.rank();
    let weakly = t.is_weakly_integral();
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let zeros: Vec<usize> = (0..r).filter(|&j| t.alpha[i][j].is_zero()).collect();
        let nonzero: Vec<usize> = (1..r).filter(|&j| !t.alpha[i][j].is_zero()).collect();
        let norm: CycNumber = (0..r).map(|j| &t.classdims[j] * &t.alpha[i][j].norm_sq()).sum();
        let zero_mass = &CycNumber::one() + &zeros.iter().map(|&j| t.classdims[j].clone()).sum::<CycNumber>();
        let d_squared = t.d(i).norm_sq();
        let invertible = t.is_invertible(i);
        let certificate = (!invertible && weakly).then(|| amgm_certificate(t, i).ok()).flatten();
        let inequality_holds =
            (!invertible).then(|| compare_rational(&zero_mass, &d_squared).is_some_and(|o| o.is_ge()));
        rows.push(ZeroRow {
            row: i,
            invertible,
            zeros,
            nonzero,
            class_norm_identity: &norm == t.dim_c(),
            certificate,
            zero_mass,
            d_squared,
            inequality_holds,
        });
    }
    let all_invertible = rows.iter().all(|row| row.invertible);
    let note = if !weakly {
        Some("not weakly integral: zero detection only, no theorem assertion".to_string())
    } else if all_invertible {
        Some("every row is invertible; the zero-entry theorem is vacuous".to_string())
    } else {
        None
    };

    let mut checks = vec![Check::from_witness(
        "class_norm_identity",
        rows.iter().find(|row| !row.class_norm_identity).map(|row| row.row),
    )];
    if weakly {
        let non_inv = || rows.iter().filter(|row| !row.invertible);
        checks.push(Check::from_witness(
            "non_invertible_rows_have_zeros",
            non_inv().find(|row| row.zeros.is_empty()).map(|row| row.row),
        ));
        checks.push(Check::from_witness(
            "amgm_certificate",
            non_inv()
                .find(|row| {
                    row.certificate.as_ref().is_none_or(|c| {
                        !(c.galois_fixed && c.p_is_positive_integer && c.mean_at_least_one && c.amgm_holds)
                    })
                })
                .map(|row| row.row),
        ));
        checks.push(Check::from_witness(
            "zero_mass_inequality",
            non_inv().find(|row| row.inequality_holds != Some(true)).map(|row| row.row),
        ));
    } else {
        for name in ["non_invertible_rows_have_zeros", "amgm_certificate", "zero_mass_inequality"] {
            checks.push(Check::not_applicable(name, "not weakly integral"));
        }
    }
    ZeroReport { weakly_integral: weakly, rows, note, checks }
}

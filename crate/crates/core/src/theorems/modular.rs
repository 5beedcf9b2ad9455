use std::path::Path;

use num::Integer;
use serde::{Deserialize, Serialize};

use crate::chartable::{compute_table, CharacterTable, TableConfig};
use crate::checks::Check;
use crate::error::{Error, Result};
use crate::exactnum::{embed, units, CycNumber};
use crate::fusionring::FusionRingSpec;
use crate::galois::{column_permutation, galois_group};

/// An S-matrix, indexed by simple objects with the unit at 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SMatrixSpec {
    pub rank: usize,
    pub entries: Vec<Vec<CycNumber>>,
}

impl SMatrixSpec {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let s: SMatrixSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if s.rank == 0 {
            return Err(Error::Parse("rank must be at least 1".into()));
        }
        if s.entries.len() != s.rank || s.entries.iter().any(|row| row.len() != s.rank) {
            return Err(Error::Parse(format!("entries must be a {0}x{0} array", s.rank)));
        }
        Ok(s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("S-matrix serialization")
    }

    /// Recovers a symmetric S from a table by matching each column to an object:
    /// `S_ij = α_{i p(j)} d_j` for the first column assignment `p` that passes the S-matrix axioms
    /// and orthogonality. `None` when no assignment does, e.g. for non-modular rings.
    pub fn from_table(t: &CharacterTable) -> Option<Self> {
        let r = t.rank();
        let mut perm: Vec<usize> = (0..r).collect();
        loop {
            if perm[0] == 0 {
                let entries = (0..r).map(|i| (0..r).map(|j| &t.alpha[i][perm[j]] * t.d(j)).collect()).collect();
                let s = SMatrixSpec { rank: r, entries };
                if let Ok(dual) = s_invariants(&s) {
                    if orthogonality_witness(&s, &dual, t.dim_c()).is_none() {
                        return Some(s);
                    }
                }
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }
}

/// How one automorphism of `Q(S)` acts on the derived columns, and what it restricts to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionRecord {
    pub residue: u32,
    /// Column permutation on the S-derived table, if `σ_a` permutes its columns.
    pub tau: Option<Vec<usize>>,
    pub restricted_residue: u32,
    pub restricted_conductor: u32,
    /// The restricted element's column permutation, transported to S-order.
    pub restricted_tau: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModularReport {
    pub rank: usize,
    /// Conductor of `Q(S)`.
    pub conductor: u32,
    pub dims: Vec<CycNumber>,
    #[serde(rename = "dimC")]
    pub dim_c: CycNumber,
    pub classdims: Vec<CycNumber>,
    pub alpha: Vec<Vec<CycNumber>>,
    pub dual: Vec<usize>,
    /// S-order column `j` is column `column_permutation[j]` of the ring's table.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column_permutation: Option<Vec<usize>>,
    pub galois_restriction: Vec<RestrictionRecord>,
    pub checks: Vec<Check>,
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn conductor_of<'a>(xs: impl IntoIterator<Item = &'a CycNumber>) -> u32 {
    xs.into_iter().fold(1u32, |acc, x| acc.lcm(&x.reduce_conductor().conductor()))
}

/// Axioms every S-matrix must satisfy before anything is derived from it; returns the duality.
fn s_invariants(s: &SMatrixSpec) -> Result<Vec<usize>> {
    let r = s.rank;
    if s.entries.len() != r || s.entries.iter().any(|row| row.len() != r) {
        return Err(Error::InvariantViolation(format!("entries must be a {r}x{r} array")));
    }
    for i in 0..r {
        for j in (i + 1)..r {
            if s.entries[i][j] != s.entries[j][i] {
                return Err(Error::InvariantViolation(format!("S is not symmetric at ({i}, {j})")));
            }
        }
    }
    if s.entries[0][0] != CycNumber::one() {
        return Err(Error::InvariantViolation(format!("S_00 = {} is not 1", s.entries[0][0])));
    }
    for (j, d) in s.entries[0].iter().enumerate() {
        if !d.is_real() || d.is_zero() || embed(d, 64).re.is_negative() {
            return Err(Error::InvariantViolation(format!("S_0{j} = {d} is not real and positive")));
        }
    }
    let mut dual = Vec::with_capacity(r);
    for i in 0..r {
        let conj: Vec<CycNumber> = s.entries[i].iter().map(CycNumber::conjugate).collect();
        let k = (0..r)
            .find(|&k| s.entries[k] == conj)
            .ok_or_else(|| Error::InvariantViolation(format!("row {i} has no conjugate row")))?;
        dual.push(k);
    }
    if let Some(i) = (0..r).find(|&i| dual[dual[i]] != i) {
        return Err(Error::InvariantViolation(format!("conjugate rows of {i} are not an involution")));
    }
    Ok(dual)
}

/// First `(i, m)` with `Σ_k S_ik S_{m*k} ≠ δ_im dim C`.
fn orthogonality_witness(s: &SMatrixSpec, dual: &[usize], dim_c: &CycNumber) -> Option<(usize, usize)> {
    let r = s.rank;
    for i in 0..r {
        for m in 0..r {
            let sum: CycNumber = (0..r).map(|k| &s.entries[i][k] * &s.entries[dual[m]][k]).sum();
            let expected = if i == m { dim_c.clone() } else { CycNumber::zero() };
            if sum != expected {
                return Some((i, m));
            }
        }
    }
    None
}

fn apply_columns(alpha: &[Vec<CycNumber>], a: u32, modulus: u32) -> Result<Vec<Vec<CycNumber>>> {
    alpha.iter().map(|row| row.iter().map(|x| x.galois_apply_mod(a, modulus)).collect()).collect()
}

/// `τ` with `σ(α_ij) = α_{iτ(j)}` for the given images, if one exists.
fn match_columns(alpha: &[Vec<CycNumber>], image: &[Vec<CycNumber>]) -> Option<Vec<usize>> {
    let r = alpha.len();
    (0..r).map(|j| (0..r).find(|&k| (0..r).all(|i| image[i][j] == alpha[i][k]))).collect()
}

/// `π` with `a[:, j] = b[:, π(j)]`, bijective.
fn table_permutation(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Option<Vec<usize>> {
    let pi = match_columns(b, a)?;
    let mut seen = vec![false; pi.len()];
    for &k in &pi {
        if std::mem::replace(&mut seen[k], true) {
            return None;
        }
    }
    Some(pi)
}

/// Derives the table `α_ij = S_ij / d_j`, `dim C^k = d_k²`, checks orthogonality of S, and when a
/// ring is given, matches the derived table against the eigen-derived one.
pub fn modular_check(s: &SMatrixSpec, spec: Option<&FusionRingSpec>, config: &TableConfig) -> Result<ModularReport> {
    let dual = s_invariants(s)?;
    let r = s.rank;
    let dims: Vec<CycNumber> = s.entries[0].iter().map(CycNumber::reduce_conductor).collect();
    let dim_c: CycNumber = (0..r).map(|k| &dims[k] * &dims[dual[k]]).sum::<CycNumber>().reduce_conductor();
    let classdims: Vec<CycNumber> = dims.iter().map(|d| (d * d).reduce_conductor()).collect();
    let conductor = conductor_of(s.entries.iter().flatten());
    let inv_d: Vec<CycNumber> = dims.iter().map(CycNumber::inv).collect::<Result<_>>()?;
    let alpha: Vec<Vec<CycNumber>> = (0..r)
        .map(|i| (0..r).map(|j| (&s.entries[i][j] * &inv_d[j]).reduce_conductor().lift(conductor)).collect())
        .collect();

    let mut checks = vec![Check::from_witness("s_matrix_orthogonality", orthogonality_witness(s, &dual, &dim_c))];
    checks.push(Check::from_witness("unit_row", (0..r).find(|&j| alpha[0][j] != CycNumber::one())));
    // dim C^k = dim C / Σ_i |α_ik|²
    let codegree_witness = (0..r).find(|&k| {
        let n: CycNumber = (0..r).map(|i| alpha[i][k].norm_sq()).sum();
        n.is_zero() || dim_c.div(&n).ok().as_ref() != Some(&classdims[k])
    });
    checks.push(Check::from_witness("classdims_match_codegrees", codegree_witness));

    let table = match spec {
        Some(ring) => {
            if ring.rank != r {
                return Err(Error::IncompatibleSpec(format!("S has rank {r}, ring has rank {}", ring.rank)));
            }
            Some(compute_table(ring, config)?)
        }
        None => None,
    };
    let pi = match &table {
        Some(t) => Some(table_permutation(&alpha, &t.alpha).ok_or_else(|| {
            Error::IncompatibleSpec("no column of the ring's table matches the S-derived columns".into())
        })?),
        None => None,
    };
    if let (Some(t), Some(pi)) = (&table, &pi) {
        checks.push(Check::from_witness("classdims_match_ring", (0..r).find(|&j| classdims[j] != t.classdims[pi[j]])));
        checks.push(Check::from_witness("duality_matches_ring", (0..r).find(|&i| dual[i] != t.dual(i))));
    }

    // Restriction of Gal(Q(S)/Q) to the character field.
    let (target_conductor, target_alpha) = match &table {
        Some(t) => (t.conductor, None),
        None => {
            let n = conductor_of(alpha.iter().flatten());
            (
                n,
                Some(
                    alpha
                        .iter()
                        .map(|row| row.iter().map(|x| x.reduce_conductor().lift(n)).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                ),
            )
        }
    };
    let contained = conductor % target_conductor == 0;
    let mut records = Vec::new();
    if contained {
        let group = table.as_ref().map(galois_group);
        for a in units(conductor) {
            let tau = match_columns(&alpha, &apply_columns(&alpha, a, conductor)?);
            let b = if target_conductor == 1 { 1 } else { a % target_conductor };
            let restricted_tau = match (&table, &group, &pi, &target_alpha) {
                (Some(t), Some(g), Some(pi), _) => column_permutation(g.canonical(u64::from(b)), t).ok().map(|tt| {
                    // S-order j ↦ π^{-1}(τ_T(π(j)))
                    (0..r).map(|j| pi.iter().position(|&p| p == tt[pi[j]]).expect("π is a bijection")).collect()
                }),
                (None, _, _, Some(ta)) => match_columns(ta, &apply_columns(ta, b, target_conductor)?),
                _ => None,
            };
            records.push(RestrictionRecord {
                residue: a,
                tau,
                restricted_residue: b,
                restricted_conductor: target_conductor,
                restricted_tau,
            });
        }
    }
    checks
        .push(Check::from_witness("character_field_in_s_field", (!contained).then_some((target_conductor, conductor))));
    checks.push(Check::from_witness(
        "galois_permutes_columns",
        records.iter().find(|rec| rec.tau.is_none()).map(|rec| rec.residue),
    ));
    let m = target_conductor.max(1);
    let surjective = contained
        && units(target_conductor).iter().all(|u| records.iter().any(|rec| rec.restricted_residue % m == u % m));
    checks.push(Check::from_witness("galois_restriction_surjective", (!surjective).then_some(target_conductor)));
    checks.push(Check::from_witness(
        "galois_restriction_compatible",
        records.iter().find(|rec| rec.tau.is_none() || rec.tau != rec.restricted_tau).map(|rec| rec.residue),
    ));

    Ok(ModularReport {
        rank: r,
        conductor,
        dims,
        dim_c,
        classdims,
        alpha,
        dual,
        column_permutation: pi,
        galois_restriction: records,
        checks,
    })
}

//! Structure constants of the class algebra and of its dual, with rationality reporting.

use serde::Serialize;

use crate::chartable::{class_sums, CharacterTable};
use crate::checks::Check;
use crate::error::{Error, Result};
use crate::exactnum::CycNumber;
use crate::linalg::solve_many;

pub type Tensor = Vec<Vec<Vec<CycNumber>>>;

/// `c[i][j][k]`: coefficient of `C_k` in `C_i C_j`; `phat[j1][j2][k]`: coefficient of `μ_k`
/// in `μ_{j1} ⋆ μ_{j2}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassAlgebra {
    pub c: Tensor,
    pub phat: Tensor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalityWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalityReport {
    pub all_rational: bool,
    pub all_integer: bool,
    /// Non-rational entries, truncated to the witness limit.
    pub witnesses: Vec<RationalityWitness>,
    pub total_witnesses: usize,
}

fn cube(r: usize) -> Tensor {
    vec![vec![vec![CycNumber::zero(); r]; r]; r]
}

/// `c_ij^k = (dim C^i dim C^j / dim C) Σ_s α_si α_sj conj(α_sk) / d_s`.
fn via_orthogonality(t: &CharacterTable) -> Result<Tensor> {
    let r = t.rank();
    let inv_d: Vec<CycNumber> = t.dims.d.iter().map(CycNumber::inv).collect::<Result<_>>()?;
    let inv_dim = t.dim_c().inv()?;
    let mut c = cube(r);
    for i in 0..r {
        for j in 0..r {
            let pre = &(&t.classdims[i] * &t.classdims[j]) * &inv_dim;
            for k in 0..r {
                let sum: CycNumber = (0..r)
                    .map(|s| &(&(&t.alpha[s][i] * &t.alpha[s][j]) * &t.alpha[s][k].conjugate()) * &inv_d[s])
                    .sum();
                c[i][j][k] = &pre * &sum;
            }
        }
    }
    Ok(c)
}

/// `c_ij^k = Σ_s χ_s(C_i) χ_s(C_j) χ_{s*}(C_k) / (dim C · dim C^k · d_s)` with `χ_s(C_j) = dim C^j α_sj`.
fn via_characters(t: &CharacterTable) -> Result<Tensor> {
    let r = t.rank();
    let chi = |s: usize, j: usize| &t.classdims[j] * &t.alpha[s][j];
    let mut c = cube(r);
    for k in 0..r {
        let mut inv = Vec::with_capacity(r);
        for s in 0..r {
            inv.push((&(t.dim_c() * &t.classdims[k]) * t.d(s)).inv()?);
        }
        for i in 0..r {
            for j in 0..r {
                c[i][j][k] = (0..r).map(|s| &(&(&chi(s, i) * &chi(s, j)) * &chi(t.dual(s), k)) * &inv[s]).sum();
            }
        }
    }
    Ok(c)
}

/// Multiplies class sums coordinate-wise on the central idempotents and expands back on `{C_k}`.
fn via_class_sums(t: &CharacterTable) -> Result<Tensor> {
    let r = t.rank();
    let z = class_sums(t)?.z;
    let mut rhs = vec![Vec::with_capacity(r * r); r];
    for i in 0..r {
        for j in 0..r {
            for (e, row) in rhs.iter_mut().enumerate() {
                row.push(&z[e][i] * &z[e][j]);
            }
        }
    }
    let sol = solve_many(&z, &rhs).ok_or_else(|| Error::InternalInconsistency("class sums are dependent".into()))?;
    let mut c = cube(r);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                c[i][j][k] = sol[k][i * r + j].clone();
            }
        }
    }
    Ok(c)
}

fn first_difference(a: &Tensor, b: &Tensor) -> Option<(usize, usize, usize)> {
    let r = a.len();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if a[i][j][k] != b[i][j][k] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Class-algebra structure constants, computed three independent ways that must agree exactly.
pub fn class_structure_constants(t: &CharacterTable) -> Result<Tensor> {
    let c = via_orthogonality(t)?;
    for (label, other) in [("character sums", via_characters(t)?), ("class-sum products", via_class_sums(t)?)] {
        if let Some((i, j, k)) = first_difference(&c, &other) {
            return Err(Error::InternalInconsistency(format!(
                "structure constant c_{i}{j}^{k} disagrees with the {label} evaluation: {} vs {}",
                c[i][j][k], other[i][j][k]
            )));
        }
    }
    Ok(c)
}

/// Solves `(1/d_i) α_{ij1} α_{ij2} = Σ_k p̂_k(j1, j2) α_ik` for every pair of columns.
pub fn dual_constants(t: &CharacterTable) -> Result<Tensor> {
    let r = t.rank();
    let inv_d: Vec<CycNumber> = t.dims.d.iter().map(CycNumber::inv).collect::<Result<_>>()?;
    let mut rhs = vec![Vec::with_capacity(r * r); r];
    for j1 in 0..r {
        for j2 in 0..r {
            for (i, row) in rhs.iter_mut().enumerate() {
                row.push(&(&t.alpha[i][j1] * &t.alpha[i][j2]) * &inv_d[i]);
            }
        }
    }
    let sol =
        solve_many(&t.alpha, &rhs).ok_or_else(|| Error::InternalInconsistency("character table is singular".into()))?;
    let mut p = cube(r);
    for j1 in 0..r {
        for j2 in 0..r {
            for k in 0..r {
                p[j1][j2][k] = sol[k][j1 * r + j2].clone();
            }
        }
    }
    Ok(p)
}

/// First `(i, j, k)` with `c_ij^k ≠ (dim C^i dim C^j / dim C^k) p̂_k(i, j)`.
pub fn dual_link_witness(t: &CharacterTable, alg: &ClassAlgebra) -> Result<Option<(usize, usize, usize)>> {
    let r = t.rank();
    for k in 0..r {
        let inv = t.classdims[k].inv()?;
        for i in 0..r {
            for j in 0..r {
                let scaled = &(&(&t.classdims[i] * &t.classdims[j]) * &inv) * &alg.phat[i][j][k];
                if alg.c[i][j][k] != scaled {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

/// Both tensors, with the link between them verified.
pub fn class_algebra(t: &CharacterTable) -> Result<ClassAlgebra> {
    let alg = ClassAlgebra { c: class_structure_constants(t)?, phat: dual_constants(t)? };
    if let Some((i, j, k)) = dual_link_witness(t, &alg)? {
        return Err(Error::InternalInconsistency(format!("dual constants do not match c_{i}{j}^{k}")));
    }
    Ok(alg)
}

/// Rational and integral status of every `c_ij^k`; at most `limit` witnesses are listed.
pub fn rationality_report(alg: &ClassAlgebra, limit: Option<usize>) -> RationalityReport {
    let r = alg.c.len();
    let mut witnesses = Vec::new();
    let mut total = 0;
    let mut all_integer = true;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let v = alg.c[i][j][k].reduce_conductor();
                if !v.is_integer() {
                    all_integer = false;
                }
                if !v.is_rational() {
                    total += 1;
                    if limit.is_none_or(|l| witnesses.len() < l) {
                        witnesses.push(RationalityWitness { i, j, k, value: v.to_string() });
                    }
                }
            }
        }
    }
    RationalityReport { all_rational: total == 0, all_integer, witnesses, total_witnesses: total }
}

fn associativity_witness(c: &Tensor) -> Option<(usize, usize, usize, usize)> {
    let r = c.len();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for t in 0..r {
                    let left: CycNumber = (0..r).map(|l| &c[i][j][l] * &c[l][k][t]).sum();
                    let right: CycNumber = (0..r).map(|l| &c[j][k][l] * &c[i][l][t]).sum();
                    if left != right {
                        return Some((i, j, k, t));
                    }
                }
            }
        }
    }
    None
}

fn unit_witness(c: &Tensor) -> Option<(usize, usize)> {
    let r = c.len();
    for j in 0..r {
        for k in 0..r {
            if c[0][j][k] != CycNumber::from_integer(i64::from(j == k)) {
                return Some((j, k));
            }
        }
    }
    None
}

pub fn algebra_checks(t: &CharacterTable, alg: &ClassAlgebra) -> Vec<Check> {
    let r = t.rank();
    let commut = (0..r)
        .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| alg.c[i][j][k] != alg.c[j][i][k]);
    let agree = match (via_characters(t), via_class_sums(t)) {
        (Ok(a), Ok(b)) => first_difference(&alg.c, &a).or_else(|| first_difference(&alg.c, &b)),
        _ => Some((0, 0, 0)),
    };
    vec![
        Check::from_witness("structure_constants_agree", agree),
        Check::from_witness("dual_constants_link", dual_link_witness(t, alg).unwrap_or(Some((0, 0, 0)))),
        Check::from_witness("class_unit", unit_witness(&alg.c)),
        Check::from_witness("dual_unit", unit_witness(&alg.phat)),
        Check::from_witness("class_algebra_associative", associativity_witness(&alg.c)),
        Check::from_witness("class_algebra_commutative", commut),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{compute_table, TableConfig};
    use crate::fusionring::{catalog, catalog_names};
    use num::BigRational;

    fn algebra(name: &str) -> (CharacterTable, ClassAlgebra) {
        let t = compute_table(&catalog(name).unwrap(), &TableConfig::default()).unwrap();
        let a = class_algebra(&t).unwrap();
        (t, a)
    }

    fn ints(v: &[i64]) -> Vec<CycNumber> {
        v.iter().map(|&x| CycNumber::from_integer(x)).collect()
    }

    #[test]
    fn s3_squares() {
        let (_, a) = algebra("rep_s3");
        assert_eq!(a.c[1][1], ints(&[3, 0, 3]));
        assert_eq!(a.c[2][2], ints(&[2, 0, 1]));
        assert_eq!(a.phat[1][1][0], CycNumber::from_rational(BigRational::new(1.into(), 3.into())));
        let rep = rationality_report(&a, None);
        assert!(rep.all_rational && rep.all_integer && rep.witnesses.is_empty());
    }

    #[test]
    fn every_catalog_algebra_is_consistent() {
        for name in catalog_names() {
            let (t, a) = algebra(name);
            for c in algebra_checks(&t, &a) {
                assert!(c.passed(), "{name}: {c:?}");
            }
        }
    }

    #[test]
    fn witness_limit_truncates() {
        let (_, a) = algebra("fib");
        let full = rationality_report(&a, None);
        assert!(!full.all_rational);
        assert_eq!(full.witnesses.len(), full.total_witnesses);
        let capped = rationality_report(&a, Some(1));
        assert_eq!(capped.witnesses.len(), 1);
        assert_eq!(capped.total_witnesses, full.total_witnesses);
    }
}

use num::{BigInt, BigRational};
use serde::Serialize;

use super::CharacterTable;
use crate::checks::Check;
use crate::error::{Error, Result};
use crate::exactnum::CycNumber;
use crate::fusionring::FusionRingSpec;

/// Codegrees `n_j = Σ_i α_ij conj(α_ij)` and class dimensions `dim(C) / n_j`.
pub fn codegrees(table: &CharacterTable) -> Result<(Vec<CycNumber>, Vec<CycNumber>)> {
    let r = table.rank();
    let n: Vec<CycNumber> = (0..r).map(|j| (0..r).map(|i| table.alpha[i][j].norm_sq()).sum::<CycNumber>()).collect();
    let cd = n.iter().map(|nj| table.dim_c().div(nj)).collect::<Result<Vec<_>>>()?;
    Ok((n, cd))
}

/// Primitive idempotents of the character algebra in the `χ` basis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdempotentDecomposition {
    /// Row `j` holds the `χ`-coordinates of `F_j`.
    #[serde(rename = "F")]
    pub f: Vec<Vec<CycNumber>>,
    /// The cointegral `(1/dim C) Σ d_i χ_i`.
    pub lambda: Vec<CycNumber>,
    pub lambda_index: Option<usize>,
}

pub fn idempotents(table: &CharacterTable) -> Result<IdempotentDecomposition> {
    let r = table.rank();
    let mut f = Vec::with_capacity(r);
    for j in 0..r {
        let inv = table.codegrees[j].inv()?;
        f.push((0..r).map(|i| &table.alpha[i][j].conjugate() * &inv).collect::<Vec<_>>());
    }
    let inv_dim = table.dim_c().inv()?;
    let lambda: Vec<CycNumber> = table.dims.d.iter().map(|d| d * &inv_dim).collect();
    let lambda_index = f.iter().position(|row| *row == lambda);
    Ok(IdempotentDecomposition { f, lambda, lambda_index })
}

/// Product in the character algebra: `χ_a χ_b = Σ_k N_ab^k χ_k`.
pub fn cf_product(ring: &FusionRingSpec, x: &[CycNumber], y: &[CycNumber]) -> Vec<CycNumber> {
    let r = ring.rank;
    let mut out = vec![CycNumber::zero(); r];
    for a in (0..r).filter(|&a| !x[a].is_zero()) {
        for b in (0..r).filter(|&b| !y[b].is_zero()) {
            let xy = &x[a] * &y[b];
            for (k, slot) in out.iter_mut().enumerate() {
                let m = ring.n[a][b][k];
                if m != 0 {
                    *slot = &*slot + &xy.scale(&BigRational::from(BigInt::from(m)));
                }
            }
        }
    }
    out
}

/// Coordinates of the class sums on the primitive central idempotents.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassSumCoordinates {
    /// `z[i][j]`: coordinate of `C_j` on `E_i`.
    #[serde(rename = "Z")]
    pub z: Vec<Vec<CycNumber>>,
}

impl ClassSumCoordinates {
    pub fn column(&self, j: usize) -> Vec<CycNumber> {
        self.z.iter().map(|row| row[j].clone()).collect()
    }
}

pub fn class_sums(table: &CharacterTable) -> Result<ClassSumCoordinates> {
    let r = table.rank();
    let mut z = vec![Vec::with_capacity(r); r];
    for (i, row) in z.iter_mut().enumerate() {
        let inv = table.d(i).inv()?;
        for j in 0..r {
            row.push(&(&table.classdims[j] * &table.alpha[i][j]) * &inv);
        }
    }
    Ok(ClassSumCoordinates { z })
}

/// `μ_j(x)` for `x` given in the `χ` basis.
fn evaluate(table: &CharacterTable, x: &[CycNumber], j: usize) -> CycNumber {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| c * &table.alpha[i][j]).sum()
}

/// The bilinear form `m_C(x, y) = Σ_i x_i y_i`, cross-checked against its expression through
/// the characters `Σ_j (dim C^j / dim C) μ_j(x) μ_j(y*)`, where `y*` dualises the basis of `y`
/// and leaves its coefficients alone.
pub fn pairing_m(table: &CharacterTable, x: &[CycNumber], y: &[CycNumber]) -> Result<CycNumber> {
    let r = table.rank();
    let direct: CycNumber = (0..r).map(|i| &x[i] * &y[i]).sum();
    let mut y_dual = vec![CycNumber::zero(); r];
    for i in 0..r {
        y_dual[table.dual(i)] = y[i].clone();
    }
    let inv_dim = table.dim_c().inv()?;
    let via_characters: CycNumber = (0..r)
        .map(|j| &(&table.classdims[j] * &evaluate(table, x, j)) * &evaluate(table, &y_dual, j))
        .sum::<CycNumber>()
        * inv_dim;
    if direct != via_characters {
        return Err(Error::InternalInconsistency(format!(
            "pairing disagrees with its character expansion: {direct} vs {via_characters}"
        )));
    }
    Ok(direct)
}

/// `Σ_k dim(C^k) α_ik α_{m*k} = δ_im dim(C)`; first failing `(i, m)`.
pub fn first_orthogonality(table: &CharacterTable) -> Option<(usize, usize)> {
    let r = table.rank();
    for i in 0..r {
        for m in 0..r {
            let ms = table.dual(m);
            let lhs: CycNumber =
                (0..r).map(|k| &(&table.classdims[k] * &table.alpha[i][k]) * &table.alpha[ms][k]).sum();
            let rhs = if i == m { table.dim_c().clone() } else { CycNumber::zero() };
            if lhs != rhs {
                return Some((i, m));
            }
        }
    }
    None
}

/// `Σ_i α_il α_{i*k} = δ_lk n_k`; first failing `(l, k)`.
pub fn second_orthogonality(table: &CharacterTable) -> Option<(usize, usize)> {
    let r = table.rank();
    for l in 0..r {
        for k in 0..r {
            let lhs: CycNumber = (0..r).map(|i| &table.alpha[i][l] * &table.alpha[table.dual(i)][k]).sum();
            let rhs = if l == k { table.codegrees[k].clone() } else { CycNumber::zero() };
            if lhs != rhs {
                return Some((l, k));
            }
        }
    }
    None
}

/// `Σ_j n_j F_j ⊗ F_j = Σ_i χ_i ⊗ χ_{i*}` compared in the `χ ⊗ χ` basis; first failing `(a, b)`.
pub fn tensor_identity(table: &CharacterTable, dec: &IdempotentDecomposition) -> Option<(usize, usize)> {
    let r = table.rank();
    for a in 0..r {
        for b in 0..r {
            let lhs: CycNumber = (0..r).map(|j| &(&table.codegrees[j] * &dec.f[j][a]) * &dec.f[j][b]).sum();
            let rhs = CycNumber::from_integer(i64::from(b == table.dual(a)));
            if lhs != rhs {
                return Some((a, b));
            }
        }
    }
    None
}

fn idempotent_witness(table: &CharacterTable, dec: &IdempotentDecomposition) -> Option<String> {
    let r = table.rank();
    for j in 0..r {
        for k in j..r {
            let prod = cf_product(&table.ring, &dec.f[j], &dec.f[k]);
            let want = if j == k { dec.f[j].clone() } else { vec![CycNumber::zero(); r] };
            if prod != want {
                return Some(format!("F_{j} F_{k}"));
            }
        }
    }
    let total: Vec<CycNumber> = (0..r).map(|i| (0..r).map(|j| dec.f[j][i].clone()).sum()).collect();
    let unit: Vec<CycNumber> = (0..r).map(|i| CycNumber::from_integer(i64::from(i == 0))).collect();
    (total != unit).then(|| "sum of F_j is not the unit".to_string())
}

/// Every exact identity of the character table itself.
pub fn table_checks(table: &CharacterTable) -> Vec<Check> {
    let r = table.rank();
    let mut out = vec![
        Check::from_witness("homomorphism_certificate", table.homomorphism_witness()),
        Check::from_witness("distinct_columns", table.duplicate_columns()),
        Check::from_witness("conjugate_rows", table.conjugate_row_witness()),
        Check::from_witness("first_orthogonality", first_orthogonality(table)),
        Check::from_witness("second_orthogonality", second_orthogonality(table)),
    ];
    let sum_cd: CycNumber = table.classdims.iter().cloned().sum();
    out.push(if &sum_cd == table.dim_c() {
        Check::pass("class_dims_sum")
    } else {
        Check::fail("class_dims_sum", format!("{sum_cd}"))
    });
    match idempotents(table) {
        Ok(dec) => {
            out.push(Check::from_witness("idempotent_tensor_identity", tensor_identity(table, &dec)));
            out.push(match idempotent_witness(table, &dec) {
                None => Check::pass("idempotents"),
                Some(w) => Check::fail("idempotents", w),
            });
            out.push(Check::from_witness(
                "cointegral_is_f0",
                (dec.lambda_index != Some(0)).then_some(dec.lambda_index),
            ));
        }
        Err(e) => out.push(Check::fail("idempotents", e.to_string())),
    }
    match class_sums(table) {
        Ok(cs) => {
            let bad = (0..r).find(|&i| cs.z[i][0] != CycNumber::one());
            out.push(Check::from_witness("class_sum_unit_column", bad));
        }
        Err(e) => out.push(Check::fail("class_sum_unit_column", e.to_string())),
    }
    let basis = |i: usize| -> Vec<CycNumber> { (0..r).map(|k| CycNumber::from_integer(i64::from(k == i))).collect() };
    let mut pairing = Check::pass("pairing_orthonormal");
    'outer: for a in 0..r {
        for b in 0..r {
            match pairing_m(table, &basis(a), &basis(b)) {
                Ok(v) if v == CycNumber::from_integer(i64::from(a == b)) => {}
                Ok(v) => {
                    pairing = Check::fail("pairing_orthonormal", format!("m(χ_{a}, χ_{b}) = {v}"));
                    break 'outer;
                }
                Err(e) => {
                    pairing = Check::fail("pairing_orthonormal", e.to_string());
                    break 'outer;
                }
            }
        }
    }
    out.push(pairing);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{compute_table, TableConfig};
    use crate::fusionring::catalog;

    fn table(name: &str) -> CharacterTable {
        compute_table(&catalog(name).unwrap(), &TableConfig::default()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<CycNumber> {
        v.iter().map(|&x| CycNumber::from_integer(x)).collect()
    }

    fn q(a: i64, b: i64) -> CycNumber {
        CycNumber::from_rational(BigRational::new(a.into(), b.into()))
    }

    #[test]
    fn s3_class_sums() {
        let cs = class_sums(&table("rep_s3")).unwrap();
        assert_eq!(cs.column(0), ints(&[1, 1, 1]));
        assert_eq!(cs.column(1), ints(&[3, -3, 0]));
        assert_eq!(cs.column(2), ints(&[2, 2, -1]));
    }

    #[test]
    fn ising_sigma_class_sum() {
        // the column with α = (1, -1, 0) has class dimension 2
        let cs = class_sums(&table("ising")).unwrap();
        assert_eq!(cs.column(1), ints(&[2, -2, 0]));
    }

    #[test]
    fn s3_cointegral() {
        let t = table("rep_s3");
        let dec = idempotents(&t).unwrap();
        assert_eq!(dec.f[0], vec![q(1, 6), q(1, 6), q(1, 3)]);
        assert_eq!(dec.lambda_index, Some(0));
        assert_eq!(cf_product(&t.ring, &dec.f[0], &dec.f[0]), dec.f[0]);
    }

    #[test]
    fn pairing_examples() {
        let s3 = table("rep_s3");
        for a in 0..3 {
            for b in 0..3 {
                let x: Vec<_> = (0..3).map(|k| CycNumber::from_integer(i64::from(k == a))).collect();
                let y: Vec<_> = (0..3).map(|k| CycNumber::from_integer(i64::from(k == b))).collect();
                assert_eq!(pairing_m(&s3, &x, &y).unwrap(), CycNumber::from_integer(i64::from(a == b)));
            }
        }
        let fib = table("fib");
        assert_eq!(pairing_m(&fib, &ints(&[1, 1]), &ints(&[0, 1])).unwrap(), CycNumber::one());
        // complex coefficients stay bilinear
        let a4 = table("rep_a4");
        let i = CycNumber::root_of_unity(4, 1);
        let x = vec![i.clone(), CycNumber::zero(), CycNumber::zero(), CycNumber::zero()];
        assert_eq!(pairing_m(&a4, &x, &x).unwrap(), CycNumber::from_integer(-1));
    }

    #[test]
    fn catalog_tables_pass_every_check() {
        for name in crate::fusionring::catalog_names() {
            let t = table(name);
            for c in table_checks(&t) {
                assert!(c.passed(), "{name}: {c:?}");
            }
        }
    }
}

//! Exact character tables of commutative fusion rings and the quantities derived from them.

mod derived;
mod eigen;

use std::cmp::Ordering;

use num::{BigInt, Integer};
use serde::Serialize;

use crate::error::{Error, ReconstructionFailure, Result};
use crate::exactnum::{embed, reconstruct, ComplexApprox, CycNumber, MIN_PRECISION};
use crate::fusionring::{DimensionVector, FusionRingSpec};

pub use derived::{
    cf_product, class_sums, codegrees, first_orthogonality, idempotents, pairing_m, second_orthogonality, table_checks,
    tensor_identity, ClassSumCoordinates, IdempotentDecomposition,
};

/// Rule used to order the non-Perron columns.
pub const COLUMN_ORDER_RULE: &str =
    "column 0 is the Perron column; the rest ascend lexicographically by exact power-basis coordinates, row by row";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableConfig {
    /// Working precision in bits for the numeric eigen step.
    pub precision: usize,
    pub conductor_max: u32,
    pub seed: u64,
    /// Coordinate bound for reconstruction; derived from the ring when `None`.
    pub height_bound: Option<u64>,
    /// Random Hermitian combinations tried before giving up.
    pub retries: u32,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig { precision: 256, conductor_max: 360, seed: 0, height_bound: None, retries: 8 }
    }
}

impl TableConfig {
    pub fn check(&self) -> Result<()> {
        if self.precision < MIN_PRECISION {
            return Err(Error::Config(format!("precision must be at least {MIN_PRECISION} bits")));
        }
        if self.conductor_max < 1 {
            return Err(Error::Config("conductor_max must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnOrder {
    pub rule: String,
    /// `perm[j]` is the eigenvector index (in numeric output order) that became column `j`.
    pub perm: Vec<usize>,
}

/// The exact table `alpha[i][j] = μ_j(χ_i)`, all entries lifted to `conductor`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterTable {
    #[serde(skip)]
    pub ring: FusionRingSpec,
    pub alpha: Vec<Vec<CycNumber>>,
    pub conductor: u32,
    pub dims: DimensionVector,
    pub codegrees: Vec<CycNumber>,
    pub classdims: Vec<CycNumber>,
    pub column_order: ColumnOrder,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    pub fn dim_c(&self) -> &CycNumber {
        &self.dims.dim_c
    }

    pub fn d(&self, i: usize) -> &CycNumber {
        &self.dims.d[i]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.ring.dual[i]
    }

    /// Every `d_i` is a rational integer.
    pub fn is_integral(&self) -> bool {
        self.dims.d.iter().all(CycNumber::is_integer)
    }

    /// `dim(C)` is a rational integer.
    pub fn is_weakly_integral(&self) -> bool {
        self.dims.dim_c.is_integer()
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.dims.d[i] == CycNumber::one()
    }

    /// Assembles a table from exact columns, filling in dimensions, codegrees and class dimensions.
    pub(crate) fn from_alpha(
        ring: FusionRingSpec,
        alpha: Vec<Vec<CycNumber>>,
        column_order: ColumnOrder,
    ) -> Result<Self> {
        let r = alpha.len();
        let conductor = alpha.iter().flatten().fold(1u32, |m, x| m.lcm(&x.conductor()));
        let alpha: Vec<Vec<CycNumber>> =
            alpha.into_iter().map(|row| row.into_iter().map(|x| x.lift(conductor)).collect()).collect();
        let d: Vec<CycNumber> = (0..r).map(|i| alpha[i][0].clone()).collect();
        let dim_c: CycNumber = (0..r).map(|i| &d[i] * &d[ring.dual[i]]).sum();
        let mut table = CharacterTable {
            ring,
            alpha,
            conductor,
            dims: DimensionVector { d, dim_c },
            codegrees: vec![],
            classdims: vec![],
            column_order,
        };
        let (n, cd) = codegrees(&table)?;
        table.codegrees = n;
        table.classdims = cd;
        Ok(table)
    }

    /// `α_{i₁j} α_{i₂j} = Σ_k N_{i₁i₂}^k α_{kj}`; returns the first failing `(i₁, i₂, j)`.
    pub fn homomorphism_witness(&self) -> Option<(usize, usize, usize)> {
        let r = self.rank();
        for j in 0..r {
            if let Some((a, b)) =
                column_witness(&self.ring, &self.alpha.iter().map(|row| row[j].clone()).collect::<Vec<_>>())
            {
                return Some((a, b, j));
            }
        }
        None
    }

    /// Indices of two equal columns, if any.
    pub fn duplicate_columns(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        for a in 0..r {
            for b in a + 1..r {
                if (0..r).all(|i| self.alpha[i][a] == self.alpha[i][b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First `(i, j)` with `α_{i*j} ≠ conj(α_{ij})`.
    pub fn conjugate_row_witness(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                if self.alpha[self.dual(i)][j] != self.alpha[i][j].conjugate() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

fn column_witness(ring: &FusionRingSpec, col: &[CycNumber]) -> Option<(usize, usize)> {
    let r = col.len();
    if col[0] != CycNumber::one() {
        return Some((0, 0));
    }
    for a in 0..r {
        for b in a..r {
            let rhs: CycNumber = (0..r)
                .filter(|&k| ring.n[a][b][k] != 0)
                .map(|k| col[k].scale(&BigInt::from(ring.n[a][b][k]).into()))
                .sum();
            if &col[a] * &col[b] != rhs {
                return Some((a, b));
            }
        }
    }
    None
}

/// Conductors tried in order: the hint, then every `n ≤ conductor_max` with `n ≢ 2 (mod 4)`.
fn conductor_candidates(hint: Option<u32>, max: u32) -> Vec<u32> {
    let hint = hint.filter(|&h| h >= 1 && h <= max).map(|h| if h % 4 == 2 { h / 2 } else { h });
    let mut out: Vec<u32> = hint.into_iter().collect();
    out.extend((1..=max).filter(|&n| n % 4 != 2 && Some(n) != hint));
    out
}

fn default_height(rank: usize, columns: &[Vec<ComplexApprox>]) -> u64 {
    let max_abs = columns.iter().flatten().map(|z| z.abs().to_f64()).fold(1.0f64, f64::max);
    let h = (rank as f64 * max_abs).powi(2).ceil();
    if h.is_finite() && h < 1e18 {
        (h as u64).max(1000)
    } else {
        u64::MAX / 4
    }
}

enum Attempt {
    Certified(Vec<Vec<CycNumber>>),
    TooTall,
    Miss,
}

fn try_conductor(spec: &FusionRingSpec, columns: &[Vec<ComplexApprox>], n: u32, height: u64) -> Attempt {
    let mut exact = Vec::with_capacity(columns.len());
    let mut too_tall = false;
    for col in columns {
        let mut entries = Vec::with_capacity(col.len());
        for z in col {
            match reconstruct(z, n, height) {
                Ok(x) => entries.push(x),
                Err(Error::ReconstructionFailed { reason: ReconstructionFailure::HeightExceeded, .. }) => {
                    too_tall = true;
                    break;
                }
                Err(_) => break,
            }
        }
        if entries.len() != col.len() {
            return if too_tall { Attempt::TooTall } else { Attempt::Miss };
        }
        if column_witness(spec, &entries).is_some() {
            return Attempt::Miss;
        }
        exact.push(entries);
    }
    for a in 0..exact.len() {
        for b in a + 1..exact.len() {
            if exact[a] == exact[b] {
                return Attempt::Miss;
            }
        }
    }
    Attempt::Certified(exact)
}

fn is_perron(col: &[CycNumber]) -> bool {
    col.iter().all(|x| x.is_real() && !x.is_zero() && !embed(x, 128).re.is_negative())
}

fn cmp_columns(a: &[CycNumber], b: &[CycNumber]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| x.cmp_coords(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// Computes the certified exact character table of a valid commutative ring.
pub fn compute_table(spec: &FusionRingSpec, config: &TableConfig) -> Result<CharacterTable> {
    config.check()?;
    let numeric = eigen::numeric_columns(spec, config)?;
    let height = config.height_bound.unwrap_or_else(|| default_height(spec.rank, &numeric));

    let mut too_tall = false;
    let mut found = None;
    for n in conductor_candidates(spec.conductor_hint, config.conductor_max) {
        match try_conductor(spec, &numeric, n, height) {
            Attempt::Certified(cols) => {
                found = Some(cols);
                break;
            }
            Attempt::TooTall => too_tall = true,
            Attempt::Miss => {}
        }
    }
    let Some(columns) = found else {
        return Err(Error::ConductorNotFound { conductor_max: config.conductor_max, bound_too_small: too_tall });
    };

    // canonical representatives before ordering
    let columns: Vec<Vec<CycNumber>> =
        columns.into_iter().map(|c| c.iter().map(CycNumber::reduce_conductor).collect()).collect();
    let m = columns.iter().flatten().fold(1u32, |m, x| m.lcm(&x.conductor()));
    let columns: Vec<Vec<CycNumber>> =
        columns.into_iter().map(|c| c.into_iter().map(|x| x.lift(m)).collect()).collect();

    let perron: Vec<usize> = (0..columns.len()).filter(|&j| is_perron(&columns[j])).collect();
    if perron.len() != 1 {
        return Err(Error::InternalInconsistency(format!("{} all-positive columns, expected 1", perron.len())));
    }
    let mut rest: Vec<usize> = (0..columns.len()).filter(|&j| j != perron[0]).collect();
    rest.sort_by(|&a, &b| cmp_columns(&columns[a], &columns[b]));
    let perm: Vec<usize> = std::iter::once(perron[0]).chain(rest).collect();

    let r = spec.rank;
    let alpha: Vec<Vec<CycNumber>> = (0..r).map(|i| perm.iter().map(|&j| columns[j][i].clone()).collect()).collect();
    let table =
        CharacterTable::from_alpha(spec.clone(), alpha, ColumnOrder { rule: COLUMN_ORDER_RULE.to_string(), perm })?;
    if let Some((a, b, j)) = table.homomorphism_witness() {
        return Err(Error::InternalInconsistency(format!("homomorphism certificate fails at ({a}, {b}, {j})")));
    }
    Ok(table)
}

/// Numeric approximation of an exact value, used for human-readable renderings.
pub fn approx(x: &CycNumber) -> (f64, f64) {
    let z = embed(x, 128);
    (z.re.to_f64(), z.im.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusionring::catalog;

    fn ints(v: &[i64]) -> Vec<CycNumber> {
        v.iter().map(|&x| CycNumber::from_integer(x)).collect()
    }

    #[test]
    fn trivial_table() {
        let t = compute_table(&catalog("trivial").unwrap(), &TableConfig::default()).unwrap();
        assert_eq!(t.alpha, vec![vec![CycNumber::one()]]);
        assert_eq!(t.conductor, 1);
    }

    #[test]
    fn fibonacci_table() {
        let t = compute_table(&catalog("fib").unwrap(), &TableConfig::default()).unwrap();
        let phi = CycNumber::from_int_coeffs(5, &[0, 0, -1, -1]).unwrap();
        assert_eq!(t.conductor, 5);
        assert_eq!(t.alpha, vec![ints(&[1, 1]), vec![phi.clone(), &CycNumber::one() - &phi]]);
    }

    #[test]
    fn s3_table_matches_group_characters() {
        let t = compute_table(&catalog("rep_s3").unwrap(), &TableConfig::default()).unwrap();
        // columns: identity, transpositions, 3-cycles (χ(g) scaled by class size / χ(1))
        assert_eq!(t.alpha, vec![ints(&[1, 1, 1]), ints(&[1, -1, 1]), ints(&[2, 0, -1])]);
        assert_eq!(t.codegrees, ints(&[6, 2, 3]));
        assert_eq!(t.classdims, ints(&[1, 3, 2]));
        assert_eq!(t.conductor, 1);
    }

    #[test]
    fn ising_classdims_in_table_order() {
        let t = compute_table(&catalog("ising").unwrap(), &TableConfig::default()).unwrap();
        let sqrt2 = CycNumber::from_int_coeffs(8, &[0, 1, 0, -1]).unwrap();
        assert_eq!(t.alpha[2], vec![sqrt2.clone(), CycNumber::zero(), -&sqrt2]);
        assert_eq!(t.classdims, ints(&[1, 2, 1]));
    }

    #[test]
    fn deterministic_across_seeds() {
        let spec = catalog("rep_a4").unwrap();
        let a = compute_table(&spec, &TableConfig::default()).unwrap();
        let b = compute_table(&spec, &TableConfig { seed: 17, ..TableConfig::default() }).unwrap();
        assert_eq!(a.alpha, b.alpha);
    }

    #[test]
    fn conductor_bound_too_small() {
        let spec = catalog("fib").unwrap();
        let err = compute_table(&spec, &TableConfig { conductor_max: 4, ..TableConfig::default() }).unwrap_err();
        assert!(matches!(err, Error::ConductorNotFound { conductor_max: 4, bound_too_small: false }));
    }
}

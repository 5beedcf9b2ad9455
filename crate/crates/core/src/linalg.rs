//! Exact Gauss-Jordan elimination over the scalar fields used in this crate.

use num::{BigRational, One, Zero};

use crate::exactnum::CycNumber;

pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Scalar for CycNumber {
    fn zero() -> Self {
        CycNumber::zero()
    }
    fn one() -> Self {
        CycNumber::one()
    }
    fn is_zero(&self) -> bool {
        CycNumber::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        CycNumber::inv(self).ok()
    }
}

pub type Matrix<T> = Vec<Vec<T>>;

/// Solves `a · X = b` for a square non-singular `a`; `b` holds one right-hand side per column.
/// Returns `None` when `a` is singular.
pub fn solve_many<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut aug: Matrix<T> = a.iter().zip(b).map(|(row, rhs)| row.iter().chain(rhs).cloned().collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv()?;
        for v in aug[col].iter_mut() {
            *v = v.mul(&inv);
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.sub(&factor.mul(p));
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..n + cols].to_vec()).collect())
}

pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let rhs: Matrix<T> = b.iter().map(|v| vec![v.clone()]).collect();
    solve_many(a, &rhs).map(|x| x.into_iter().map(|mut r| r.remove(0)).collect())
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let id: Matrix<T> = (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
    solve_many(a, &id)
}

/// Least-squares-free consistency solve for an overdetermined but consistent system
/// with `a` of full column rank. Returns `None` if inconsistent.
pub fn solve_consistent<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<T> =
        a.iter().zip(b).map(|(row, v)| row.iter().cloned().chain(std::iter::once(v.clone())).collect()).collect();
    let mut pivot_rows = Vec::with_capacity(cols);
    let mut r = 0;
    for col in 0..cols {
        let p = (r..rows).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(r, p);
        let inv = aug[r][col].inv()?;
        for v in aug[r].iter_mut() {
            *v = v.mul(&inv);
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.sub(&factor.mul(pv));
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(pivot_rows.iter().map(|&i| aug[i][cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_inverse() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn overdetermined_consistent() {
        let a = vec![vec![q(1, 1)], vec![q(2, 1)], vec![q(3, 1)]];
        assert_eq!(solve_consistent(&a, &[q(1, 2), q(1, 1), q(3, 2)]), Some(vec![q(1, 2)]));
        assert_eq!(solve_consistent(&a, &[q(1, 2), q(1, 1), q(2, 1)]), None);
    }
}

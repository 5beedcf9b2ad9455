//! Integral LLL reduction (δ = 3/4) over `BigInt`, all Gram-Schmidt data kept as
//! exact integers via the subdeterminants `d_i`.

use num::integer::Integer;
use num::{BigInt, Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `round(a / b)` for `b > 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let num: BigInt = a * 2 + b;
    num.div_floor(&(b * BigInt::from(2)))
}

/// Reduces the rows of `basis` in place. Rows must be linearly independent.
pub fn lll_reduce(basis: &mut [Vec<BigInt>]) {
    let n = basis.len();
    if n < 2 {
        return;
    }
    // d[i + 1] is the Gram determinant of the first i + 1 rows; d[0] = 1.
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::from(1);
    d[1] = dot(&basis[0], &basis[0]);
    let mut k = 1;
    let mut kmax = 0;

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input rows are linearly dependent");
                    d[k + 1] = u;
                }
            }
        }
        loop {
            reduce(basis, &mut lam, &d, k, k - 1);
            let lhs = &d[k + 1] * &d[k - 1] * 4;
            let rhs = &d[k] * &d[k] * 3 - &lam[k][k - 1] * &lam[k][k - 1] * 4;
            if lhs < rhs {
                swap(basis, &mut lam, &mut d, k, kmax);
                k = (k - 1).max(1);
            } else {
                for l in (0..k.saturating_sub(1)).rev() {
                    reduce(basis, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
}

fn reduce(basis: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let twice: BigInt = &lam[k][l] * 2;
    if twice.abs() <= d[l + 1] {
        return;
    }
    let q = round_div(&lam[k][l], &d[l + 1]);
    let (head, tail) = basis.split_at_mut(k);
    for (x, y) in tail[0].iter_mut().zip(&head[l]) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * &d[l + 1];
    for i in 0..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swap(basis: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    basis.swap(k, k - 1);
    for j in 0..k - 1 {
        let t = std::mem::take(&mut lam[k][j]);
        lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
    }
    let l = lam[k][k - 1].clone();
    let b = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&b * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = b;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn norm2(x: &[BigInt]) -> BigInt {
        dot(x, x)
    }

    #[test]
    fn classic_example() {
        // determinant 3, so a vector of squared length at most 3 must surface first
        let mut b = vec![v(&[1, 1, 1]), v(&[-1, 0, 2]), v(&[3, 5, 6])];
        lll_reduce(&mut b);
        assert!(norm2(&b[0]) <= BigInt::from(3));
    }

    #[test]
    fn finds_hidden_relation() {
        // x0 + x1 = x2, so (1, 1, -1, 0) lies in the lattice
        let s = 1_000_000_000i64;
        let xs = [1_000_003i64, 2_000_007, 3_000_010];
        let mut b: Vec<Vec<BigInt>> = (0..3)
            .map(|i| {
                let mut r = vec![BigInt::zero(); 4];
                r[i] = BigInt::from(1);
                r[3] = BigInt::from(xs[i]) * s;
                r
            })
            .collect();
        lll_reduce(&mut b);
        // x0 + x1 - x2 = 0
        let expect = v(&[1, 1, -1, 0]);
        let neg: Vec<BigInt> = expect.iter().map(|x| -x).collect();
        assert!(b[0] == expect || b[0] == neg, "{:?}", b[0]);
    }

    #[test]
    fn preserves_lattice_and_bounds_first_vector() {
        let orig =
            vec![v(&[105, 821, 404, 328]), v(&[881, 667, 644, 927]), v(&[181, 483, 87, 500]), v(&[893, 834, 732, 441])];
        let mut b = orig.clone();
        lll_reduce(&mut b);
        assert_eq!(gram_det(&b), gram_det(&orig));
        // |b_1|^2 <= 2^(n-1) |x|^2 for every nonzero lattice vector x
        for x in &orig {
            assert!(norm2(&b[0]) <= norm2(x) * 8);
        }
    }

    fn gram_det(b: &[Vec<BigInt>]) -> BigInt {
        use num::BigRational;
        let g: Vec<Vec<BigRational>> =
            b.iter().map(|x| b.iter().map(|y| BigRational::from_integer(dot(x, y))).collect()).collect();
        let mut m = g;
        let n = m.len();
        let mut det = BigRational::from_integer(1.into());
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero()).unwrap();
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c].clone();
            for r in c + 1..n {
                let f = &m[r][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[r][j] -= t;
                }
            }
        }
        det.to_integer()
    }
}

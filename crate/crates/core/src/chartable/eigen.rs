//! Numeric common eigenvectors of the fusion matrices.
//!
//! The fusion matrices are normal and commute, so every Hermitian combination
//! `Σ t_i (N_i + N_iᵀ) + i Σ s_i (N_i - N_iᵀ)` is diagonalised by their common
//! eigenbasis; with generic weights its eigenvalues are simple.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TableConfig;
use crate::error::{Error, Result};
use crate::exactnum::{ComplexApprox, Real};
use crate::fusionring::FusionRingSpec;

type CMatrix = Vec<Vec<ComplexApprox>>;

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Returns the (real) eigenvalues and the eigenvectors as columns.
pub(crate) fn hermitian_eigen(mut a: CMatrix, prec: usize) -> (Vec<Real>, CMatrix) {
    let n = a.len();
    let mut v: CMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { ComplexApprox::one(prec) } else { ComplexApprox::zero(prec) }).collect())
        .collect();
    let total: Real = a.iter().flatten().fold(Real::zero(prec), |acc, x| acc + x.norm_sq());
    let eps = Real::pow2(-2 * (prec as i64 - 16), prec) * (total + Real::one(prec));

    for _sweep in 0..80 {
        let mut off = Real::zero(prec);
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[p][q].norm_sq();
            }
        }
        if off <= eps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q, prec);
            }
        }
    }
    let evals = (0..n).map(|i| a[i][i].re.clone()).collect();
    (evals, v)
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize, prec: usize) {
    let b = a[p][q].clone();
    let babs = b.abs();
    if babs.is_zero() {
        return;
    }
    let two = Real::from_i64(2, prec);
    let one = Real::one(prec);
    // phase that makes the pivot real: e^{-iθ} with b = |b| e^{iθ}
    let phase = b.conj().scale(&(&one / &babs));
    let zeta = (&a[q][q].re - &a[p][p].re) / (&two * &babs);
    let root = (&zeta * &zeta + &one).sqrt();
    let t = if zeta.is_negative() { -(&one / &(zeta.abs() + root)) } else { &one / &(zeta.abs() + root) };
    let c = &one / &(&t * &t + &one).sqrt();
    let s = &t * &c;

    // G restricted to (p, q): [[c, s], [-s·phase, c·phase]]
    let g_pp = ComplexApprox::from_real(c.clone());
    let g_pq = ComplexApprox::from_real(s.clone());
    let g_qp = phase.scale(&-&s);
    let g_qq = phase.scale(&c);

    let n = a.len();
    // A <- A G
    for row in a.iter_mut().take(n) {
        let (x, y) = (row[p].clone(), row[q].clone());
        row[p] = &(&x * &g_pp) + &(&y * &g_qp);
        row[q] = &(&x * &g_pq) + &(&y * &g_qq);
    }
    // A <- G^H A
    let (cpp, cpq, cqp, cqq) = (g_pp.conj(), g_pq.conj(), g_qp.conj(), g_qq.conj());
    for k in 0..n {
        let (x, y) = (a[p][k].clone(), a[q][k].clone());
        a[p][k] = &(&cpp * &x) + &(&cqp * &y);
        a[q][k] = &(&cpq * &x) + &(&cqq * &y);
    }
    a[p][q] = ComplexApprox::zero(prec);
    a[q][p] = ComplexApprox::zero(prec);
    a[p][p].im = Real::zero(prec);
    a[q][q].im = Real::zero(prec);
    for row in v.iter_mut() {
        let (x, y) = (row[p].clone(), row[q].clone());
        row[p] = &(&x * &g_pp) + &(&y * &g_qp);
        row[q] = &(&x * &g_pq) + &(&y * &g_qq);
    }
}

/// Numeric character values: `result[j][i] ≈ μ_j(χ_i)`, one entry per common eigenvector.
pub(crate) fn numeric_columns(spec: &FusionRingSpec, config: &TableConfig) -> Result<Vec<Vec<ComplexApprox>>> {
    let r = spec.rank;
    let w = config.precision + 32;
    let mats: Vec<Vec<Vec<Real>>> = (0..r)
        .map(|i| {
            spec.fusion_matrix(i)
                .into_iter()
                .map(|row| row.into_iter().map(|x| Real::from_i64(i64::from(x), w)).collect())
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    for _ in 0..config.retries {
        let t: Vec<i64> = (0..r).map(|_| rng.gen_range(-8..=8)).collect();
        let s: Vec<i64> = (0..r).map(|_| rng.gen_range(-8..=8)).collect();
        let mut h: CMatrix = vec![vec![ComplexApprox::zero(w); r]; r];
        for k in 0..r {
            for l in 0..r {
                let mut re = 0i64;
                let mut im = 0i64;
                for i in 0..r {
                    let (a, b) = (i64::from(spec.n[i][l][k]), i64::from(spec.n[i][k][l]));
                    re += t[i] * (a + b);
                    im += s[i] * (a - b);
                }
                h[k][l] = ComplexApprox::new(Real::from_i64(re, w), Real::from_i64(im, w));
            }
        }
        let (evals, vecs) = hermitian_eigen(h, w);
        if !simple_spectrum(&evals, w) {
            continue;
        }
        let mut columns = Vec::with_capacity(r);
        let mut ok = true;
        for j in 0..r {
            let v: Vec<ComplexApprox> = (0..r).map(|k| vecs[k][j].clone()).collect();
            match column_from_vector(&mats, &v, w) {
                Some(col) => columns.push(col.into_iter().map(|z| z.with_precision(config.precision)).collect()),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(columns);
        }
    }
    Err(Error::DegenerateSpectrum { retries: config.retries })
}

fn simple_spectrum(evals: &[Real], w: usize) -> bool {
    let scale = evals.iter().fold(Real::one(w), |m, x| m.max(x.abs()));
    let gap = Real::pow2(-(w as i64) / 4, w) * scale;
    for (a, x) in evals.iter().enumerate() {
        for y in &evals[a + 1..] {
            if (x - y).abs() <= gap {
                return false;
            }
        }
    }
    true
}

/// Rayleigh quotients `v^H N_i v / v^H v`, rejected unless `v` is a genuine common eigenvector.
fn column_from_vector(mats: &[Vec<Vec<Real>>], v: &[ComplexApprox], w: usize) -> Option<Vec<ComplexApprox>> {
    let r = v.len();
    let vv: Real = v.iter().fold(Real::zero(w), |acc, x| acc + x.norm_sq());
    let tol = Real::pow2(-(w as i64) / 2, w);
    let mut col = Vec::with_capacity(r);
    for m in mats {
        let mv: Vec<ComplexApprox> =
            (0..r)
                .map(|k| {
                    (0..r).fold(ComplexApprox::zero(w), |acc, l| {
                        if m[k][l].is_zero() {
                            acc
                        } else {
                            &acc + &v[l].scale(&m[k][l])
                        }
                    })
                })
                .collect();
        let num = (0..r).fold(ComplexApprox::zero(w), |acc, k| &acc + &(&v[k].conj() * &mv[k]));
        let lam = num.scale(&(&Real::one(w) / &vv));
        let mnorm = m.iter().flatten().fold(Real::one(w), |acc, x| acc + x * x);
        let resid = (0..r).fold(Real::zero(w), |acc, k| acc + (&mv[k] - &(&lam * &v[k])).norm_sq());
        if resid > &(&tol * &mnorm) * &vv {
            return None;
        }
        col.push(lam);
    }
    Some(col)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_on_complex_hermitian() {
        let p = 128;
        let c = |re: i64, im: i64| ComplexApprox::new(Real::from_i64(re, p), Real::from_i64(im, p));
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let h = vec![vec![c(2, 0), c(0, 1)], vec![c(0, -1), c(2, 0)]];
        let (evals, v) = hermitian_eigen(h.clone(), p);
        let mut f: Vec<f64> = evals.iter().map(Real::to_f64).collect();
        f.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((f[0] - 1.0).abs() < 1e-30 && (f[1] - 3.0).abs() < 1e-30);
        // H v = λ v for each column
        for j in 0..2 {
            for k in 0..2 {
                let hv = &(&h[k][0] * &v[0][j]) + &(&h[k][1] * &v[1][j]);
                let lv = v[k][j].scale(&evals[j]);
                assert!((&hv - &lv).abs() < Real::pow2(-100, p));
            }
        }
    }

    #[test]
    fn fibonacci_numeric_values() {
        let spec = crate::fusionring::catalog("fib").unwrap();
        let cols = numeric_columns(&spec, &TableConfig::default()).unwrap();
        let mut tau: Vec<f64> = cols.iter().map(|c| c[1].re.to_f64()).collect();
        tau.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((tau[0] - (1.0 - golden)).abs() < 1e-14);
        assert!((tau[1] - golden).abs() < 1e-14);
    }
}

//! Recovering integer power-basis coordinates from a numeric value.

use num::{BigInt, BigRational, Signed, Zero};

use super::approx::{root_table, ComplexApprox, Real};
use super::cyclotomic::CycNumber;
use super::field::totient;
use super::lll::lll_reduce;
use crate::error::{Error, ReconstructionFailure, Result};

enum Outcome {
    Found(Vec<BigInt>),
    TooTall,
    Miss,
}

/// Finds `c ∈ Z[ξ_n]` with coordinates bounded by `height_bound` whose embedding lies
/// within `2^{-p/2}` of `z`, `p` being the precision of `z`.
///
/// The result is only numerically justified; callers certify it exactly.
pub fn reconstruct(z: &ComplexApprox, n: u32, height_bound: u64) -> Result<CycNumber> {
    let p = z.precision();
    let d = totient(n) as usize;
    let w = p + 32;
    let roots = root_table(n, w);
    let z = z.with_precision(w);
    let tol = Real::pow2(-((p / 2) as i64), w);
    let h = BigInt::from(height_bound.max(1));

    let check = |c: Vec<BigInt>| -> Outcome {
        let mut re = Real::zero(w);
        let mut im = Real::zero(w);
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let x = Real::from_bigint(ck, w);
            re = re + &x * &roots[k].re;
            im = im + &x * &roots[k].im;
        }
        let err = (re - &z.re).abs().max((im - &z.im).abs());
        if err >= tol {
            Outcome::Miss
        } else if c.iter().any(|ck| ck.abs() > h) {
            Outcome::TooTall
        } else {
            Outcome::Found(c)
        }
    };

    let mut too_tall = false;
    let attempts: Vec<Vec<BigInt>> = match d {
        1 => vec![vec![z.re.round_to_bigint()]],
        2 => {
            let (cos, sin) = (&roots[1].re, &roots[1].im);
            let c1 = (&z.im / sin).round_to_bigint();
            let c0 = (&z.re - &(cos * &Real::from_bigint(&c1, w))).round_to_bigint();
            vec![vec![c0, c1]]
        }
        _ => {
            let hbits = h.bits() as usize;
            let scales = [3 * p / 4, p / 2 + hbits + 2 * d];
            scales.iter().filter_map(|&s| lattice_candidate(&z, &roots, d, s, &h, w)).collect()
        }
    };
    for c in attempts {
        match check(c) {
            Outcome::Found(c) => {
                let coeffs = c.into_iter().map(BigRational::from_integer).collect();
                return CycNumber::from_coeffs(n, coeffs);
            }
            Outcome::TooTall => too_tall = true,
            Outcome::Miss => {}
        }
    }
    let reason = if too_tall { ReconstructionFailure::HeightExceeded } else { ReconstructionFailure::NoMatch };
    Err(Error::ReconstructionFailed { conductor: n, reason })
}

/// Closest-vector search by embedding: rows `(e_k, S·Re ξ^k, S·Im ξ^k, 0)` plus the
/// target row `(0, -S·Re z, -S·Im z, M)`; a reduced vector ending in `±M` carries `c`.
fn lattice_candidate(
    z: &ComplexApprox,
    roots: &[ComplexApprox],
    d: usize,
    scale_bits: usize,
    weight: &BigInt,
    w: usize,
) -> Option<Vec<BigInt>> {
    let scale = Real::pow2(scale_bits as i64, w);
    let dim = d + 3;
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    for (k, r) in roots.iter().take(d).enumerate() {
        let mut row = vec![BigInt::zero(); dim];
        row[k] = BigInt::from(1);
        row[d] = (&r.re * &scale).round_to_bigint();
        row[d + 1] = (&r.im * &scale).round_to_bigint();
        basis.push(row);
    }
    let mut target = vec![BigInt::zero(); dim];
    target[d] = -(&z.re * &scale).round_to_bigint();
    target[d + 1] = -(&z.im * &scale).round_to_bigint();
    target[d + 2] = weight.clone();
    basis.push(target);

    lll_reduce(&mut basis);
    basis.into_iter().find_map(|row| {
        if &row[d + 2] == weight {
            Some(row[..d].to_vec())
        } else if row[d + 2] == -weight {
            Some(row[..d].iter().map(|x| -x).collect())
        } else {
            None
        }
    })
}

//! Cyclotomic polynomials and cached reduction tables for `Q(ξ_n)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::integer::Integer;

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Residues in `1..n` coprime to `n`; `[1]` for `n = 1`.
pub fn units(n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|a| a.gcd(&n) == 1).collect()
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by the product of Φ_d over proper divisors d.
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let phi_d: Vec<i128> = cyclotomic_polynomial(d).into_iter().map(i128::from).collect();
        num = exact_div_monic(&num, &phi_d);
    }
    let poly: Vec<i64> = num.into_iter().map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow")).collect();
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn exact_div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Power-basis data for one conductor.
#[derive(Debug)]
pub(crate) struct CycField {
    pub degree: usize,
    /// `powers[k]` holds the power-basis coordinates of `ξ^k` for `0 <= k < n`.
    pub powers: Vec<Vec<i64>>,
}

impl CycField {
    fn build(n: u32) -> Self {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ξ and reduce the overflowing top coefficient
            let top = cur[degree - 1];
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for k in 0..degree {
                    cur[k] -= top * phi[k];
                }
            }
        }
        CycField { degree, powers }
    }
}

pub(crate) fn field(n: u32) -> Arc<CycField> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return Arc::clone(f);
    }
    let f = Arc::new(CycField::build(n));
    cache.lock().unwrap().insert(n, Arc::clone(&f));
    f
}

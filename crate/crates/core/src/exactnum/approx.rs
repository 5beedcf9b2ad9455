//! Binary floating point at configurable precision, backed by `astro-float`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num::bigint::Sign as BigSign;
use num::{BigInt, BigRational, Zero};

use super::cyclotomic::CycNumber;
use super::field::totient;

const RM: RoundingMode = RoundingMode::ToEven;
pub const MIN_PRECISION: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

/// A real number carried at `prec` bits.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    prec: usize,
}

impl Real {
    fn wrap(v: BigFloat, prec: usize) -> Self {
        debug_assert!(!v.is_nan(), "NaN in high precision arithmetic");
        Real { v, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec), prec)
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_f64(v, prec), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: usize) -> Self {
        if v.is_zero() {
            return Self::zero(prec);
        }
        let (sign, words) = v.to_u64_digits();
        let sign = if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos };
        // from_words reads the words as the fraction M / 2^(64·len); exponent 64·len yields M
        let words: Vec<Word> = words.into_iter().collect();
        let e = (words.len() * 64) as i32;
        let exact = BigFloat::from_words(&words, sign, e);
        Self::wrap(exact.add(&BigFloat::from_i64(0, prec), prec, RM), prec)
    }

    pub fn from_rational(q: &BigRational, prec: usize) -> Self {
        let num = Self::from_bigint(q.numer(), prec);
        if q.denom() == &BigInt::from(1) {
            return num;
        }
        &num / &Self::from_bigint(q.denom(), prec)
    }

    /// `2^k`.
    pub fn pow2(k: i64, prec: usize) -> Self {
        let e = i32::try_from(k + 1).expect("exponent out of range");
        Self::wrap(BigFloat::from_words(&[1 << 63], Sign::Pos, e), prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut v = self.v.clone();
        v.set_precision(prec, RM).expect("set precision");
        Self::wrap(v, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.prec, RM), self.prec)
    }

    pub fn pi(prec: usize) -> Self {
        CONSTS.with(|c| Self::wrap(c.borrow_mut().pi(prec, RM), prec))
    }

    pub fn sin(&self) -> Self {
        CONSTS.with(|c| Self::wrap(self.v.sin(self.prec, RM, &mut c.borrow_mut()), self.prec))
    }

    pub fn cos(&self) -> Self {
        CONSTS.with(|c| Self::wrap(self.v.cos(self.prec, RM, &mut c.borrow_mut()), self.prec))
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Nearest integer, ties to even.
    pub fn round_to_bigint(&self) -> BigInt {
        let r = self.v.round(0, RoundingMode::ToEven);
        Self::float_to_bigint(&r)
    }

    fn float_to_bigint(v: &BigFloat) -> BigInt {
        if v.is_zero() {
            return BigInt::zero();
        }
        let (m, _, sign, e, _) = v.as_raw_parts().expect("finite value");
        let mag = BigInt::from_slice(
            BigSign::Plus,
            &m.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect::<Vec<_>>(),
        );
        let shift = e as i64 - (m.len() * 64) as i64;
        let mag = if shift >= 0 { mag << shift as usize } else { mag >> (-shift) as usize };
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        let Some((m, _, sign, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let len = m.len();
        let hi = m[len - 1] as f64;
        let lo = if len > 1 { m[len - 2] as f64 } else { 0.0 };
        let mag = (hi + lo * 2f64.powi(-64)) * 2f64.powi(e - 64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent().map(i64::from)
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                let p = self.prec.max(rhs.prec);
                Real::wrap(self.v.$m(&rhs.v, p, RM), p)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
    };
}
real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.prec)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// A complex number at fixed binary precision.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexApprox {
    pub re: Real,
    pub im: Real,
}

impl ComplexApprox {
    pub fn new(re: Real, im: Real) -> Self {
        ComplexApprox { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(Real::zero(prec), Real::zero(prec))
    }

    pub fn one(prec: usize) -> Self {
        Self::new(Real::one(prec), Real::zero(prec))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.precision();
        Self::new(re, Real::zero(p))
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(Real::from_f64(re, prec), Real::from_f64(im, prec))
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        Self::new(self.re.with_precision(prec), self.im.with_precision(prec))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, r: &Real) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add<&ComplexApprox> for &ComplexApprox {
    type Output = ComplexApprox;
    fn add(self, rhs: &ComplexApprox) -> ComplexApprox {
        ComplexApprox::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&ComplexApprox> for &ComplexApprox {
    type Output = ComplexApprox;
    fn sub(self, rhs: &ComplexApprox) -> ComplexApprox {
        ComplexApprox::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&ComplexApprox> for &ComplexApprox {
    type Output = ComplexApprox;
    fn mul(self, rhs: &ComplexApprox) -> ComplexApprox {
        ComplexApprox::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Div<&ComplexApprox> for &ComplexApprox {
    type Output = ComplexApprox;
    fn div(self, rhs: &ComplexApprox) -> ComplexApprox {
        let den = rhs.norm_sq();
        let num = self * &rhs.conj();
        ComplexApprox::new(&num.re / &den, &num.im / &den)
    }
}

impl Neg for &ComplexApprox {
    type Output = ComplexApprox;
    fn neg(self) -> ComplexApprox {
        ComplexApprox::new(-&self.re, -&self.im)
    }
}

/// `(cos, sin)(2πk/n)` for `0 <= k < n`, computed at `prec` bits.
pub(crate) fn root_table(n: u32, prec: usize) -> Arc<Vec<ComplexApprox>> {
    type Cache = Mutex<HashMap<(u32, usize), Arc<Vec<ComplexApprox>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(n, prec)) {
        return Arc::clone(t);
    }
    let two_pi = Real::pi(prec + 16) * Real::from_i64(2, prec + 16);
    let step = &two_pi / &Real::from_i64(i64::from(n), prec + 16);
    let table: Vec<ComplexApprox> = (0..n)
        .map(|k| {
            let ang = &step * &Real::from_i64(i64::from(k), prec + 16);
            ComplexApprox::new(ang.cos().with_precision(prec), ang.sin().with_precision(prec))
        })
        .collect();
    let table = Arc::new(table);
    cache.lock().unwrap().insert((n, prec), Arc::clone(&table));
    table
}

fn guard_bits(n: u32) -> usize {
    32 + (32 - totient(n).leading_zeros()) as usize
}

/// Evaluates `x` at `ξ = e^{2πi/n}` with `prec` significant bits.
pub fn embed(x: &CycNumber, prec: usize) -> ComplexApprox {
    assert!(prec >= MIN_PRECISION, "precision must be at least {MIN_PRECISION} bits");
    let n = x.conductor();
    let w = prec + guard_bits(n);
    let roots = root_table(n, w);
    let mut re = Real::zero(w);
    let mut im = Real::zero(w);
    for (k, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = Real::from_rational(c, w);
        re = re + &c * &roots[k].re;
        im = im + &c * &roots[k].im;
    }
    ComplexApprox::new(re.with_precision(prec), im.with_precision(prec))
}

//! Elements of cyclotomic fields on the power basis.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{divisors, field, totient, units};
use crate::error::{Error, Result};
use crate::linalg;

/// An element of `Q(ξ_n)`, `ξ_n = e^{2πi/n}`, stored as rational coordinates on
/// `1, ξ, …, ξ^{φ(n)-1}`.
///
/// Values with different conductors are combined in the field of the lcm;
/// equality compares on that common field.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycNumber {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(rat(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }

    pub fn from_rational(v: BigRational) -> Self {
        CycNumber { conductor: 1, coeffs: vec![v] }
    }

    /// `ξ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let f = field(n);
        let e = k.rem_euclid(i64::from(n)) as usize;
        CycNumber { conductor: n, coeffs: f.powers[e].iter().map(|&c| rat(c)).collect() }
    }

    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let phi = totient(conductor) as usize;
        if coeffs.len() != phi {
            return Err(Error::Parse(format!("conductor {conductor} needs {phi} coefficients, got {}", coeffs.len())));
        }
        Ok(CycNumber { conductor, coeffs })
    }

    pub fn from_int_coeffs(conductor: u32, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(conductor, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this number lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// All coordinates are integers (an element of `Z[ξ_n]`).
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Sums `Σ_e bins[e] ξ_n^e` and reduces onto the power basis.
    fn fold(n: u32, bins: Vec<BigRational>) -> Self {
        let f = field(n);
        let mut coeffs = vec![BigRational::zero(); f.degree];
        for (e, b) in bins.into_iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (c, &p) in coeffs.iter_mut().zip(&f.powers[e]) {
                match p {
                    0 => {}
                    1 => *c += &b,
                    -1 => *c -= &b,
                    _ => *c += &b * rat(p),
                }
            }
        }
        CycNumber { conductor: n, coeffs }
    }

    /// Re-expresses `self` inside `Q(ξ_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.conductor), "cannot lift conductor {} to {m}", self.conductor);
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut bins = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            bins[k * step] = c.clone();
        }
        Self::fold(m, bins)
    }

    fn common(&self, other: &Self) -> (u32, Self, Self) {
        if self.conductor == other.conductor {
            return (self.conductor, self.clone(), other.clone());
        }
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lift(m), other.lift(m))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
            return CycNumber { conductor: self.conductor, coeffs };
        }
        let (m, a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect();
        CycNumber { conductor: m, coeffs }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let Some(q) = other.as_rational() {
            return self.scale(&q).lift(self.conductor.lcm(&other.conductor));
        }
        if let Some(q) = self.as_rational() {
            return other.scale(&q).lift(self.conductor.lcm(&other.conductor));
        }
        let (m, a, b) = self.common(other);
        let n = m as usize;
        let mut bins = vec![BigRational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                bins[(i + j) % n] += x * y;
            }
        }
        Self::fold(m, bins)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()).lift(self.conductor));
        }
        // Solve x·y = 1 using the multiplication-by-x matrix.
        let n = self.conductor;
        let d = self.coeffs.len();
        let columns: Vec<Vec<BigRational>> =
            (0..d).map(|k| (self * &CycNumber::root_of_unity(n, k as i64)).lift(n).coeffs).collect();
        let a: Vec<Vec<BigRational>> = (0..d).map(|r| (0..d).map(|c| columns[c][r].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let y = linalg::solve(&a, &rhs)
            .ok_or_else(|| Error::InternalInconsistency("singular multiplication matrix".into()))?;
        Ok(CycNumber { conductor: n, coeffs: y })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycNumber::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The automorphism `ξ ↦ ξ^a` of `Q(ξ_n)`, `n` the current conductor.
    pub fn galois_apply(&self, a: i64) -> Result<Self> {
        let n = self.conductor;
        let a_mod = a.rem_euclid(i64::from(n)) as u64;
        if (a_mod.gcd(&u64::from(n)) != 1) && n != 1 {
            return Err(Error::NotCoprime { residue: a_mod, conductor: n });
        }
        Ok(self.galois_unchecked(a_mod))
    }

    fn galois_unchecked(&self, a: u64) -> Self {
        let n = u64::from(self.conductor);
        if n == 1 {
            return self.clone();
        }
        let mut bins = vec![BigRational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                bins[((k as u64 * a) % n) as usize] = c.clone();
            }
        }
        Self::fold(self.conductor, bins)
    }

    /// Applies `σ_a` where `a` is a residue modulo `modulus`; `self` must lie in `Q(ξ_modulus)`.
    pub fn galois_apply_mod(&self, a: u32, modulus: u32) -> Result<Self> {
        if !modulus.is_multiple_of(self.conductor) {
            return Err(Error::InternalInconsistency(format!(
                "value of conductor {} outside Q(ξ_{modulus})",
                self.conductor
            )));
        }
        if modulus > 1 && a.gcd(&modulus) != 1 {
            return Err(Error::NotCoprime { residue: u64::from(a), conductor: modulus });
        }
        let n = self.conductor;
        Ok(self.galois_unchecked(u64::from(a % n.max(1))))
    }

    /// Complex conjugation, realised as `ξ ↦ ξ^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois_unchecked(u64::from(self.conductor) - 1)
    }

    /// `|x|^2 = x · conj(x)`.
    pub fn norm_sq(&self) -> Self {
        self * &self.conjugate()
    }

    /// The same number at the smallest conductor whose field contains it.
    pub fn reduce_conductor(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q);
        }
        let n = self.conductor;
        let group = units(n);
        for m in divisors(n) {
            if m == n {
                break;
            }
            if m % 4 == 2 {
                // Q(ξ_m) = Q(ξ_{m/2}) was already tried
                continue;
            }
            let fixed =
                group.iter().filter(|&&a| a % m == 1 % m).all(|&a| self.galois_unchecked(u64::from(a)) == *self);
            if !fixed {
                continue;
            }
            let dm = totient(m) as usize;
            let basis: Vec<Vec<BigRational>> =
                (0..dm).map(|k| CycNumber::root_of_unity(m, k as i64).lift(n).coeffs).collect();
            let a: Vec<Vec<BigRational>> =
                (0..self.coeffs.len()).map(|r| (0..dm).map(|c| basis[c][r].clone()).collect()).collect();
            if let Some(y) = linalg::solve_consistent(&a, &self.coeffs) {
                return CycNumber { conductor: m, coeffs: y };
            }
        }
        self.clone()
    }

    /// Lexicographic comparison of coordinate vectors on the common field.
    pub fn cmp_coords(&self, other: &Self) -> Ordering {
        let (_, a, b) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Largest absolute coordinate.
    pub fn height(&self) -> BigRational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let n = f64::from(self.conductor);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl From<i64> for CycNumber {
    fn from(v: i64) -> Self {
        CycNumber::from_integer(v)
    }
}

impl From<BigRational> for CycNumber {
    fn from(v: BigRational) -> Self {
        CycNumber::from_rational(v)
    }
}

impl Add<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl std::iter::Sum for CycNumber {
    fn sum<I: Iterator<Item = CycNumber>>(iter: I) -> Self {
        iter.fold(CycNumber::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [n={}]", self.conductor)
    }
}

/// GAP-style rendering, e.g. `E(8)-E(8)^3` or `-1/2`.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduce_conductor();
        let mut first = true;
        for (k, c) in r.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let root = match k {
                0 => None,
                1 => Some(format!("E({})", r.conductor)),
                _ => Some(format!("E({})^{k}", r.conductor)),
            };
            match root {
                None => write!(f, "{mag}")?,
                Some(root) if mag.is_one() => write!(f, "{root}")?,
                Some(root) => write!(f, "{mag}*{root}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Persisted form: `{"conductor": n, "coeffs": ["p/q", ...]}`, no floating point.
#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycRepr { conductor: self.conductor, coeffs: self.coeffs.iter().map(ToString::to_string).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CycRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycNumber::from_coeffs(repr.conductor, coeffs).map_err(D::Error::custom)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")));
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u32, c: &[i64]) -> CycNumber {
        CycNumber::from_int_coeffs(n, c).unwrap()
    }

    fn golden() -> CycNumber {
        // φ = -ξ5^2 - ξ5^3
        cyc(5, &[0, 0, -1, -1])
    }

    fn sqrt2() -> CycNumber {
        cyc(8, &[0, 1, 0, -1])
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = CycNumber::root_of_unity(4, 1);
        assert_eq!((&i + &i).coeffs(), cyc(4, &[0, 2]).coeffs());
        let sq = &i * &i;
        assert_eq!(sq.conductor(), 4);
        assert_eq!(sq.coeffs(), cyc(4, &[-1, 0]).coeffs());
        assert_eq!(sq, CycNumber::from_integer(-1));
    }

    #[test]
    fn golden_ratio_square() {
        // Φ5 reduction by hand: ξ^4 = -1-ξ-ξ^2-ξ^3, ξ^5 = 1, ξ^6 = ξ;
        // (ξ^2+ξ^3)^2 = ξ^4 + 2ξ^5 + ξ^6 = 1 - ξ^2 - ξ^3 = 1 + φ
        let phi = golden();
        let sq = &phi * &phi;
        let expect = &phi + &CycNumber::one();
        assert_eq!(sq.coeffs(), expect.lift(5).coeffs());
        assert_eq!(sq.coeffs(), cyc(5, &[1, 0, -1, -1]).coeffs());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CycNumber::root_of_unity(4, 1).conjugate(), cyc(4, &[0, -1]));
        // ξ8^-1 - ξ8^-3 = ξ8^7 - ξ8^5 = -ξ8^3 + ξ8
        assert_eq!(sqrt2().conjugate().coeffs(), sqrt2().coeffs());
        let half = CycNumber::from_rational(BigRational::new(3.into(), 2.into()));
        assert_eq!(half.conjugate(), half);
    }

    #[test]
    fn galois_examples() {
        let i = CycNumber::root_of_unity(4, 1);
        assert_eq!(i.galois_apply(3).unwrap(), -&i);
        // σ2: ξ5 -> ξ5^2 sends -ξ^2-ξ^3 to -ξ^4-ξ^6 = 1+ξ^2+ξ^3 = 1-φ
        let phi = golden();
        let expect = &CycNumber::one() - &phi;
        assert_eq!(phi.galois_apply(2).unwrap(), expect);
        assert_eq!(phi.galois_apply(2).unwrap().coeffs(), cyc(5, &[1, 0, 1, 1]).coeffs());
        let q = CycNumber::from_integer(7).lift(12);
        for a in [1, 5, 7, 11] {
            assert_eq!(q.galois_apply(a).unwrap(), CycNumber::from_integer(7));
        }
        assert!(matches!(i.galois_apply(2), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let phi = golden();
        let inv = phi.inv().unwrap();
        assert_eq!(&inv * &phi, CycNumber::one());
        // 1/φ = φ - 1
        assert_eq!(inv, &phi - &CycNumber::one());
        assert!(matches!(CycNumber::zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!(cyc(8, &[0, 0, 0, 0]).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conductor_reduction() {
        let m1 = CycNumber::from_integer(-1).lift(8);
        let r = m1.reduce_conductor();
        assert_eq!((r.conductor(), r.coeffs().to_vec()), (1, vec![rat(-1)]));
        let i = CycNumber::root_of_unity(8, 2).reduce_conductor();
        assert_eq!(i.conductor(), 4);
        assert_eq!(i.coeffs(), cyc(4, &[0, 1]).coeffs());
        assert_eq!(sqrt2().reduce_conductor().conductor(), 8);
        // √5 needs conductor 5 even when embedded in Q(ξ_20)
        let sqrt5 = (&golden() + &golden()) - CycNumber::one();
        assert_eq!(sqrt5.lift(20).reduce_conductor().conductor(), 5);
        // ξ3 lives in Q(ξ_6) and Q(ξ_12); minimal conductor is 3
        assert_eq!(CycNumber::root_of_unity(6, 2).lift(12).reduce_conductor().conductor(), 3);
        let r = sqrt2().reduce_conductor();
        assert_eq!(r.reduce_conductor(), r);
    }

    #[test]
    fn serde_is_exact() {
        let x = CycNumber::from_coeffs(5, vec![BigRational::new(1.into(), 3.into()), rat(0), rat(-2), rat(5)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":5,"coeffs":["1/3","0","-2","5"]}"#);
        let back: CycNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back.coeffs(), x.coeffs());
        assert!(serde_json::from_str::<CycNumber>(r#"{"conductor":5,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display_gap_style() {
        assert_eq!(sqrt2().to_string(), "E(8)-E(8)^3");
        assert_eq!(CycNumber::from_rational(BigRational::new((-1).into(), 2.into())).to_string(), "-1/2");
        assert_eq!(CycNumber::zero().to_string(), "0");
    }
}

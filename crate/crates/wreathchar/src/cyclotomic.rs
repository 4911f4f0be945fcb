//! Exact arithmetic in the ring of integers `Z[zeta_L]`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^{phi(L)-1}`:
//! every coefficient vector is reduced modulo the L-th cyclotomic polynomial
//! `Phi_L`, so equality of values is equality of coefficient vectors (at a
//! common level). Coefficients are arbitrary-precision integers.
//!
//! Mixed-level operands are promoted to the lcm of their levels via
//! `zeta_L = zeta_M^(M/L)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An element of `Z[zeta_level]` in reduced form.
#[derive(Clone, Eq)]
pub struct CyclotomicInt {
    level: usize,
    /// Power-basis coefficients, always of length `phi(level)`.
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// The rational integer `m`, at level 1.
    pub fn from_int<T: Into<BigInt>>(m: T) -> Self {
        CyclotomicInt {
            level: 1,
            coeffs: vec![m.into()],
        }
    }

    /// Zero at the given level.
    pub fn zero_at(level: usize) -> Self {
        assert!(level >= 1);
        CyclotomicInt {
            level,
            coeffs: vec![BigInt::zero(); phi(level)],
        }
    }

    /// `zeta_level^k` (k taken mod level).
    pub fn zeta(level: usize, k: usize) -> Self {
        assert!(level >= 1);
        let mut dense = vec![BigInt::zero(); level];
        dense[k % level] = BigInt::one();
        CyclotomicInt::from_coeffs(level, dense)
    }

    /// Builds `sum_k coeffs[k] * zeta_level^k` and reduces it. Exponents past
    /// the level wrap around.
    pub fn from_coeffs(level: usize, coeffs: Vec<BigInt>) -> Self {
        assert!(level >= 1);
        CyclotomicInt {
            level,
            coeffs: reduce_at(level, coeffs),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Reduced power-basis coefficients (length `phi(level)`).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    /// Returns `m` iff the value equals the rational integer `m`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(BigInt::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Same value expressed at a level this one divides.
    pub fn promoted(&self, level: usize) -> Result<CyclotomicInt> {
        if !level.is_multiple_of(self.level) {
            return Err(Error::InvalidInput(format!(
                "cannot promote level {} to non-multiple {}",
                self.level, level
            )));
        }
        if level == self.level {
            return Ok(self.clone());
        }
        let factor = level / self.level;
        let mut dense = vec![BigInt::zero(); level];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[k * factor] = c.clone();
        }
        Ok(CyclotomicInt::from_coeffs(level, dense))
    }

    pub fn scale_by_int(&self, m: &BigInt) -> CyclotomicInt {
        CyclotomicInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * m).collect(),
        }
    }

    /// Complex conjugate: `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> CyclotomicInt {
        let mut dense = vec![BigInt::zero(); self.level];
        for (k, c) in self.coeffs.iter().enumerate() {
            let exp = if k == 0 { 0 } else { self.level - k };
            dense[exp] += c;
        }
        CyclotomicInt::from_coeffs(self.level, dense)
    }

    fn binary_op(
        &self,
        rhs: &CyclotomicInt,
        f: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> CyclotomicInt {
        let level = self.level.lcm(&rhs.level);
        let a = self.promoted(level).expect("lcm is a multiple");
        let b = rhs.promoted(level).expect("lcm is a multiple");
        CyclotomicInt {
            level,
            coeffs: a
                .coeffs
                .iter()
                .zip(b.coeffs.iter())
                .map(|(x, y)| f(x, y))
                .collect(),
        }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        let level = self.level.lcm(&other.level);
        let a = self.promoted(level).expect("lcm is a multiple");
        let b = other.promoted(level).expect("lcm is a multiple");
        a.coeffs == b.coeffs
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.binary_op(rhs, |a, b| a + b)
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.binary_op(rhs, |a, b| a - b)
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let level = self.level.lcm(&rhs.level);
        let a = self.promoted(level).expect("lcm is a multiple");
        let b = rhs.promoted(level).expect("lcm is a multiple");
        let mut dense = vec![BigInt::zero(); level];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[(i + j) % level] += x * y;
            }
        }
        CyclotomicInt::from_coeffs(level, dense)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit_coeff {
                        write!(f, "{magnitude}*")?;
                    }
                    if k == 1 {
                        write!(f, "z{}", self.level)?;
                    } else {
                        write!(f, "z{}^{}", self.level, k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt[L={}]({})", self.level, self)
    }
}

/// An exact integer as a JSON number token (arbitrary precision).
pub(crate) fn bigint_number(value: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&value.to_string()).expect("integer literal")
}

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Number> = self.coeffs.iter().map(bigint_number).collect();
        let mut state = serializer.serialize_struct("CyclotomicInt", 2)?;
        state.serialize_field("level", &self.level)?;
        state.serialize_field("coeffs", &coeffs)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            level: usize,
            coeffs: Vec<serde_json::Number>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.level == 0 {
            return Err(D::Error::custom("cyclotomic level must be >= 1"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| D::Error::custom("cyclotomic coefficients must be integers"))?;
        Ok(CyclotomicInt::from_coeffs(repr.level, coeffs))
    }
}

/// Degree of `Phi_level`.
pub fn phi(level: usize) -> usize {
    cyclotomic_polynomial(level).len() - 1
}

/// Coefficients of `Phi_n`, ascending, computed by exact division of
/// `x^n - 1` by the `Phi_d` over proper divisors `d`. Results are cached.
pub fn cyclotomic_polynomial(n: usize) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Fill in ascending divisor order so every proper divisor is ready.
    for m in divisors(n) {
        if cache.lock().unwrap().contains_key(&m) {
            continue;
        }
        let mut poly = vec![BigInt::zero(); m + 1];
        poly[0] = -BigInt::one();
        poly[m] = BigInt::one();
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let divisor = cache.lock().unwrap().get(&d).unwrap().clone();
            poly = poly_exact_div(&poly, &divisor);
        }
        cache.lock().unwrap().insert(m, Arc::new(poly));
    }
    cache.lock().unwrap().get(&n).unwrap().clone()
}

fn divisors(n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn poly_exact_div(numerator: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let (quotient, remainder) = poly_divmod(numerator, divisor);
    assert!(
        remainder.iter().all(BigInt::is_zero),
        "division was not exact"
    );
    quotient
}

// Long division by a monic divisor over Z.
fn poly_divmod(numerator: &[BigInt], divisor: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let ddeg = divisor.len() - 1;
    debug_assert!(divisor[ddeg].is_one(), "divisor must be monic");
    let mut rem = numerator.to_vec();
    if rem.len() <= ddeg {
        return (vec![BigInt::zero()], rem);
    }
    let qlen = rem.len() - ddeg;
    let mut quotient = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let lead = std::mem::take(&mut rem[i + ddeg]);
        if lead.is_zero() {
            continue;
        }
        for (j, d) in divisor[..ddeg].iter().enumerate() {
            let sub = d * &lead;
            rem[i + j] -= sub;
        }
        quotient[i] = lead;
    }
    rem.truncate(ddeg);
    (quotient, rem)
}

// Reduces arbitrary exponents: wrap mod `level`, then take the remainder
// modulo `Phi_level`; output has length `phi(level)`.
fn reduce_at(level: usize, coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let mut wrapped = vec![BigInt::zero(); level];
    for (k, c) in coeffs.into_iter().enumerate() {
        if !c.is_zero() {
            wrapped[k % level] += c;
        }
    }
    let modulus = cyclotomic_polynomial(level);
    let (_, mut rem) = poly_divmod(&wrapped, &modulus);
    rem.resize(modulus.len() - 1, BigInt::zero());
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(m: i64) -> CyclotomicInt {
        CyclotomicInt::from_int(m)
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        let as_i64 = |n: usize| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        // First index with a coefficient outside {-1,0,1}.
        assert_eq!(as_i64(105)[7], -2);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(1), 1);
    }

    #[test]
    fn geometric_sums_vanish() {
        for level in 2..=12 {
            let mut sum = CyclotomicInt::zero_at(level);
            for k in 0..level {
                sum = &sum + &CyclotomicInt::zeta(level, k);
            }
            assert!(sum.is_zero(), "level {level}: {sum}");
        }
    }

    #[test]
    fn root_identities() {
        assert_eq!(CyclotomicInt::zeta(2, 1), int(-1));
        let omega = CyclotomicInt::zeta(6, 2);
        let cubed = &(&omega * &omega) * &omega;
        assert_eq!(cubed, int(1));
        assert_eq!(CyclotomicInt::zeta(5, 0), int(1));
        assert_eq!(
            &CyclotomicInt::zeta(6, 5) * &CyclotomicInt::zeta(6, 3),
            CyclotomicInt::zeta(6, 2)
        );
    }

    #[test]
    fn as_integer_examples() {
        assert_eq!(int(7).as_integer(), Some(BigInt::from(7)));
        assert_eq!(CyclotomicInt::zeta(3, 1).as_integer(), None);
        let sum = &CyclotomicInt::zeta(4, 1) + &CyclotomicInt::zeta(4, 3);
        assert_eq!(sum.as_integer(), Some(BigInt::zero()));
        assert!(sum.is_zero());
    }

    #[test]
    fn reduction_is_idempotent() {
        let value =
            CyclotomicInt::from_coeffs(12, (0..30).map(|k| BigInt::from(k * k - 7)).collect());
        let again = CyclotomicInt::from_coeffs(12, value.coeffs().to_vec());
        assert_eq!(value, again);
        assert_eq!(value.coeffs().len(), phi(12));
    }

    #[test]
    fn promotion_preserves_value() {
        let omega = CyclotomicInt::zeta(3, 1);
        let promoted = omega.promoted(6).unwrap();
        assert_eq!(promoted.level(), 6);
        assert_eq!(promoted, CyclotomicInt::zeta(6, 2));
        assert_eq!(promoted, omega);
        assert!(omega.promoted(4).is_err());
    }

    #[test]
    fn conjugation() {
        let z = CyclotomicInt::zeta(5, 2);
        assert_eq!(z.conjugate(), CyclotomicInt::zeta(5, 3));
        let norm = &z * &z.conjugate();
        assert_eq!(norm, int(1));
        assert_eq!(int(-3).conjugate(), int(-3));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(int(0).to_string(), "0");
        assert_eq!(int(-7).to_string(), "-7");
        assert_eq!(CyclotomicInt::zeta(6, 1).to_string(), "z6");
        let x = &int(2) - &CyclotomicInt::zeta(6, 1);
        assert_eq!(x.to_string(), "2 - z6");
        let y = &CyclotomicInt::zeta(8, 3).scale_by_int(&BigInt::from(4)) - &int(1);
        assert_eq!(y.to_string(), "-1 + 4*z8^3");
    }

    #[test]
    fn serde_roundtrip() {
        let value = &CyclotomicInt::zeta(6, 2).scale_by_int(&BigInt::from(-5)) + &int(3);
        let json = serde_json::to_string(&value).unwrap();
        assert_eq!(json, r#"{"level":6,"coeffs":[8,-5]}"#);
        let back: CyclotomicInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back, value);
        assert!(serde_json::from_str::<CyclotomicInt>(r#"{"level":0,"coeffs":[1]}"#).is_err());
    }
}

//! Arithmetic in the prime field F_p.
//!
//! [`PrimeField`] is the context object: it validates the modulus once and
//! then provides raw `u32` arithmetic for the polynomial code. [`FpScalar`] is
//! the value type exposed at the public surface; it carries its modulus so
//! mixing residues of different fields is caught.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Accepts odd primes below 2^16, so every product of two residues fits in a `u32`.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) || p >= 1 << 16 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn elem(self, v: i64) -> FpScalar {
        FpScalar {
            value: self.reduce(v),
            modulus: self.p,
        }
    }

    pub fn zero(self) -> FpScalar {
        self.elem(0)
    }

    pub fn one(self) -> FpScalar {
        self.elem(1)
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroInverse(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        Ok(self.reduce(t0))
    }

    /// `(-1)^e` as a residue.
    #[inline]
    pub fn sign(self, e: i64) -> u32 {
        if e.rem_euclid(2) == 0 {
            1
        } else {
            self.p - 1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: u32,
}

impl FpScalar {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<FpScalar> {
        inv(self)
    }

    pub fn pow(self, e: u64) -> FpScalar {
        FpScalar {
            value: self.field().pow(self.value, e),
            modulus: self.modulus,
        }
    }

    /// Representative in `(-p/2, p/2]`, handy for printing signs.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        if 2 * v > self.modulus as i64 {
            v - self.modulus as i64
        } else {
            v
        }
    }

    fn check(self, other: FpScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between residues of different fields"
        );
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.field().neg(self.value),
            modulus: self.modulus,
        }
    }
}

pub fn inv(a: FpScalar) -> Result<FpScalar> {
    Ok(FpScalar {
        value: a.field().inv(a.value)?,
        modulus: a.modulus,
    })
}

/// `n! mod p`.
pub fn factorial(n: u64, field: PrimeField) -> FpScalar {
    if n >= field.modulus() as u64 {
        return field.zero();
    }
    (1..=n).fold(field.one(), |acc, j| acc * field.elem(j as i64))
}

/// The mod-p image of the Morita gamma function, extended p-periodically.
///
/// On `1..=p` this is `(-1)^x * prod_{1 <= j < x} j`; `gamma_fp(0) = 1`.
pub fn gamma_fp(x: i64, field: PrimeField) -> FpScalar {
    let p = field.modulus() as i64;
    let x = x.rem_euclid(p);
    if x == 0 {
        return field.one();
    }
    let prod = factorial((x - 1) as u64, field);
    field.elem(field.sign(x) as i64) * prod
}

/// Binomial coefficient `C(a, b) mod p` by Lucas' theorem.
pub fn binom_mod_p(a: u64, b: u64, field: PrimeField) -> FpScalar {
    let p = field.modulus() as u64;
    let (mut a, mut b) = (a, b);
    let mut acc = field.one();
    while b > 0 || a > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return field.zero();
        }
        acc = acc * small_binom(ad, bd, field);
        a /= p;
        b /= p;
    }
    acc
}

fn small_binom(a: u64, b: u64, field: PrimeField) -> FpScalar {
    let num = factorial(a, field);
    let den = factorial(b, field) * factorial(a - b, field);
    num * inv(den).expect("factorials below p are units")
}

/// `-(a! b!) / (a + b - p + 1)!`, the coefficient of `x^(p-1)` in `x^a (1-x)^b`.
pub fn beta_fp(a: i64, b: i64, field: PrimeField) -> Result<FpScalar> {
    let p = field.modulus() as i64;
    if !(0 < a && a < p && 0 < b && b < p && p - 1 <= a + b) {
        return Err(Error::Domain(format!(
            "beta_fp needs 0 < a, b < {p} and a + b >= {}, got a = {a}, b = {b}",
            p - 1
        )));
    }
    let num = factorial(a as u64, field) * factorial(b as u64, field);
    let den = factorial((a + b - p + 1) as u64, field);
    Ok(-(num * inv(den)?))
}

/// Exponent `e` in `{0, 1}` with `lhs = (-1)^e * rhs`, or `None` when the two
/// values do not agree up to sign.
pub fn sign_offset(lhs: FpScalar, rhs: FpScalar) -> Option<u8> {
    if lhs == rhs {
        Some(0)
    } else if lhs == -rhs {
        Some(1)
    } else {
        None
    }
}

/// The three printed forms of the scalar `B * C(B-1, p-A-1)` for
/// `0 < A, B < p <= A + B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbScalarForms {
    pub binomial: FpScalar,
    /// `(-1)^(A+1) A! B! / (A+B-p)!`
    pub factorial: FpScalar,
    /// `(-1)^A Gamma(A+1) Gamma(B+1) / Gamma(A+B-p+1)`
    pub gamma_printed: FpScalar,
}

impl AbScalarForms {
    pub fn new(a: i64, b: i64, field: PrimeField) -> Result<Self> {
        let p = field.modulus() as i64;
        if !(0 < a && a < p && 0 < b && b < p && p <= a + b) {
            return Err(Error::Domain(format!(
                "need 0 < A, B < {p} <= A + B, got A = {a}, B = {b}"
            )));
        }
        let binomial = field.elem(b) * binom_mod_p((b - 1) as u64, (p - a - 1) as u64, field);
        let fact_ratio = factorial(a as u64, field)
            * factorial(b as u64, field)
            * inv(factorial((a + b - p) as u64, field))?;
        let factorial = field.elem(field.sign(a + 1) as i64) * fact_ratio;
        let gamma_ratio = gamma_fp(a + 1, field)
            * gamma_fp(b + 1, field)
            * inv(gamma_fp(a + b - p + 1, field))?;
        let gamma_printed = field.elem(field.sign(a) as i64) * gamma_ratio;
        Ok(AbScalarForms {
            binomial,
            factorial,
            gamma_printed,
        })
    }

    /// Sign exponent reconciling the factorial form with the printed gamma form.
    pub fn gamma_offset(&self) -> Option<u8> {
        sign_offset(self.factorial, self.gamma_printed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn pascal_mod(n: usize, p: u32) -> Vec<Vec<u32>> {
        let mut rows = vec![vec![1u32]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u32; i + 1];
            for j in 1..i {
                row[j] = (prev[j - 1] + prev[j]) % p;
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inv(f(5).elem(3)).unwrap().value(), 2);
        assert_eq!(inv(f(13).elem(1)).unwrap().value(), 1);
        assert_eq!(inv(f(7).elem(0)), Err(Error::ZeroInverse(7)));
    }

    #[test]
    fn inverse_roundtrip_all_residues() {
        for p in [3u64, 5, 7, 11, 13, 31, 65521] {
            let field = f(p);
            let step = (p / 200).max(1);
            for a in (1..p).step_by(step as usize) {
                let x = field.elem(a as i64);
                assert_eq!(x * inv(x).unwrap(), field.one());
            }
        }
    }

    #[test]
    fn rejects_non_primes() {
        for n in [0u64, 1, 2, 4, 9, 15, 1 << 16] {
            assert!(PrimeField::new(n).is_err(), "{n}");
        }
    }

    #[test]
    fn gamma_examples() {
        for p in [3u64, 5, 7, 31] {
            assert_eq!(gamma_fp(0, f(p)).value(), 1);
            assert_eq!(gamma_fp(1, f(p)).value(), p as u32 - 1);
        }
        assert_eq!(gamma_fp(4, f(5)).value(), 1);
        assert_eq!(gamma_fp(9, f(5)).value(), 1);
    }

    #[test]
    fn gamma_matches_direct_product() {
        for p in [3u64, 5, 7, 11, 13] {
            let field = f(p);
            for x in 1..=p as i64 {
                let mut prod: i64 = if x % 2 == 0 { 1 } else { -1 };
                for j in 1..x {
                    prod = (prod * j).rem_euclid(p as i64);
                }
                assert_eq!(gamma_fp(x, field), field.elem(prod), "p={p} x={x}");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binom_mod_p(8, 7, f(13)).value(), 8);
        assert_eq!(binom_mod_p(6, 3, f(5)).value(), 0);
        assert_eq!(binom_mod_p(3, 5, f(5)).value(), 0);
        for a in 0..40 {
            assert_eq!(binom_mod_p(a, 0, f(7)).value(), 1);
        }
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [3u32, 5, 7, 13] {
            let rows = pascal_mod(2000, p);
            let field = f(p as u64);
            for a in (0..=2000usize).step_by(7) {
                for b in (0..=a).step_by(3) {
                    assert_eq!(binom_mod_p(a as u64, b as u64, field).value(), rows[a][b]);
                }
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_fp(3, 2, f(5)).unwrap().value(), 3);
        assert_eq!(beta_fp(2, 2, f(5)).unwrap().value(), 1);
        assert!(matches!(beta_fp(4, 5, f(5)), Err(Error::Domain(_))));
        assert!(matches!(beta_fp(1, 1, f(5)), Err(Error::Domain(_))));
    }

    #[test]
    fn ab_forms_small_case() {
        let forms = AbScalarForms::new(3, 3, f(5)).unwrap();
        assert_eq!(forms.binomial.value(), 1);
        assert_eq!(forms.factorial.value(), 1);
        assert_eq!(forms.gamma_printed.value(), 4);
        assert_eq!(forms.gamma_offset(), Some(1));
    }

    #[test]
    fn signed_representative() {
        assert_eq!(f(7).elem(6).signed(), -1);
        assert_eq!(f(7).elem(3).signed(), 3);
        assert_eq!(f(7).elem(4).signed(), -3);
    }
}

//! Exact coefficient arithmetic over a prime field F_p or the rationals.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

use super::RingError;

/// The coefficient domain of a polynomial ring. All arithmetic is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    /// Integers mod a prime p, with p >= 2.
    Prime(u64),
    /// Arbitrary-precision rationals.
    Rationals,
}

/// A single coefficient. Values of the `Fp` variant are always reduced
/// to the canonical range `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(CoefficientField::Prime(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn rationals() -> Self {
        CoefficientField::Rationals
    }

    /// Characteristic of the field: p for F_p, 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Prime(p) => *p,
            CoefficientField::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Prime(_) => Coeff::Fp(0),
            CoefficientField::Rationals => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Prime(_) => Coeff::Fp(1),
            CoefficientField::Rationals => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            CoefficientField::Prime(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
            CoefficientField::Rationals => Coeff::Rat(BigRational::from(BigInt::from(v))),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coeff, RingError> {
        if den == 0 {
            return Err(RingError::Parse("zero denominator".into()));
        }
        match self {
            CoefficientField::Prime(_) => {
                let d = self.from_i64(den);
                let inv = self.inv(&d)?;
                Ok(self.mul(&self.from_i64(num), &inv))
            }
            CoefficientField::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Fp(x)) => {
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff, RingError> {
        if self.is_zero(a) {
            return Err(RingError::DivisionByZero);
        }
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Fp(x)) => Ok(Coeff::Fp(mod_pow(*x, p - 2, *p))),
            (CoefficientField::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, RingError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 1,
            Coeff::Rat(x) => x.is_one(),
        }
    }

    /// Render a coefficient, using the symmetric representative for F_p
    /// so small negative values print as `-c`.
    pub fn format(&self, a: &Coeff) -> String {
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Fp(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    format!("{x}")
                }
            }
            (CoefficientField::Rationals, Coeff::Rat(x)) => {
                if x.is_integer() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// True when `format` would prepend a minus sign.
    pub fn is_negative_display(&self, a: &Coeff) -> bool {
        match (self, a) {
            (CoefficientField::Prime(p), Coeff::Fp(x)) => *x > p / 2,
            (CoefficientField::Rationals, Coeff::Rat(x)) => x.is_negative(),
            _ => panic!("coefficient does not belong to this field"),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Prime(p) => write!(f, "F{p}"),
            CoefficientField::Rationals => write!(f, "Q"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(CoefficientField::prime(2).is_ok());
        assert!(CoefficientField::prime(32003).is_ok());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(32001).is_err());
    }

    #[test]
    fn fp_inverse() {
        let f = CoefficientField::prime(7).unwrap();
        for x in 1..7 {
            let c = Coeff::Fp(x);
            let i = f.inv(&c).unwrap();
            assert!(f.is_one(&f.mul(&c, &i)));
        }
        assert!(f.inv(&Coeff::Fp(0)).is_err());
    }

    #[test]
    fn rational_exactness() {
        let f = CoefficientField::rationals();
        let third = f.from_ratio(1, 3).unwrap();
        let sum = f.add(&f.add(&third, &third), &third);
        assert!(f.is_one(&sum));
    }
}

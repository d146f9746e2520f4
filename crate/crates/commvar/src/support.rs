//! Support varieties for Frobenius kernels of SL3: base-p digit
//! decomposition of a dominant weight, regular/singular classification of
//! the digits, and the induced dimension and irreducibility through the
//! mixed-variety formulas.

use std::fmt;

use thiserror::Error;

use crate::formulas::{dim_cijm, is_irreducible_cijm, MixedParams};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SupportError {
    #[error("the theory requires a prime p >= 7; got {0}")]
    SmallPrime(u64),
    #[error("r must be at least 1")]
    ZeroR,
}

/// A dominant weight for A2, as coefficients on the two fundamental
/// weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightA2 {
    pub c1: u64,
    pub c2: u64,
}

impl WeightA2 {
    pub fn new(c1: u64, c2: u64) -> Self {
        WeightA2 { c1, c2 }
    }
}

impl fmt::Display for WeightA2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// Coordinatewise base-p expansion, truncated to a fixed window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitDecomposition {
    pub p: u64,
    pub digits: Vec<WeightA2>,
    /// True when the weight has nonzero digits above the window; those
    /// are ignored by the r-th Frobenius kernel.
    pub truncated: bool,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_p(p: u64) -> Result<(), SupportError> {
    if p < 7 || !is_prime(p) {
        return Err(SupportError::SmallPrime(p));
    }
    Ok(())
}

/// The first r base-p digits of the weight, coordinatewise, padded with
/// zero digits at the top.
pub fn decompose_digits(
    lambda: WeightA2,
    p: u64,
    r: usize,
) -> Result<DigitDecomposition, SupportError> {
    check_p(p)?;
    if r == 0 {
        return Err(SupportError::ZeroR);
    }
    let (mut c1, mut c2) = (lambda.c1, lambda.c2);
    let mut digits = Vec::with_capacity(r);
    for _ in 0..r {
        digits.push(WeightA2::new(c1 % p, c2 % p));
        c1 /= p;
        c2 /= p;
    }
    Ok(DigitDecomposition {
        p,
        digits,
        truncated: c1 > 0 || c2 > 0,
    })
}

/// A weight is p-regular when none of the three positive-coroot pairings
/// of lambda + rho is divisible by p: c1 + 1, c2 + 1, c1 + c2 + 2.
pub fn is_p_regular(mu: WeightA2, p: u64) -> bool {
    (mu.c1 + 1) % p != 0 && (mu.c2 + 1) % p != 0 && (mu.c1 + mu.c2 + 2) % p != 0
}

#[derive(Clone, Debug)]
pub struct SupportReport {
    /// Number of p-singular digits in the window.
    pub a: usize,
    /// Number of p-regular digits in the window.
    pub b: usize,
    pub dim: i64,
    pub irreducible: bool,
    /// The factor counts of the mixed commuting variety this support is
    /// identified with.
    pub mixed_params: MixedParams,
    pub digits: Vec<(WeightA2, bool)>,
    pub truncated: bool,
}

/// Dimension and irreducibility of the support variety of the simple
/// module of highest weight lambda over the r-th Frobenius kernel.
pub fn support_variety(lambda: WeightA2, p: u64, r: usize) -> Result<SupportReport, SupportError> {
    let decomposition = decompose_digits(lambda, p, r)?;
    let digits: Vec<(WeightA2, bool)> = decomposition
        .digits
        .iter()
        .map(|&d| (d, is_p_regular(d, p)))
        .collect();
    let b = digits.iter().filter(|(_, regular)| *regular).count();
    let a = r - b;
    let mixed_params = MixedParams::new(a as u32, b as u32, 0);
    let dim = dim_cijm(a as u32, b as u32, 0);
    let irreducible = if r == 1 {
        true
    } else {
        is_irreducible_cijm(a as u32, b as u32, 0)
    };
    Ok(SupportReport {
        a,
        b,
        dim,
        irreducible,
        mixed_params,
        digits,
        truncated: decomposition.truncated,
    })
}

/// The flat three-case dimension display: 2b + 4 when every digit is
/// regular, 2r + 3 with exactly one singular digit, 2r + 2 beyond that.
/// Coincides with the mixed-variety formula except at the single point
/// (a, b) = (1, 0), where the variety is the subregular closure of
/// dimension 4.
pub fn case_display_dim(a: usize, b: usize) -> i64 {
    let r = (a + b) as i64;
    match a {
        0 => 2 * (b as i64) + 4,
        1 => 2 * r + 3,
        _ => 2 * r + 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_expansion() {
        let d = decompose_digits(WeightA2::new(0, 0), 7, 3).unwrap();
        assert_eq!(d.digits, vec![WeightA2::new(0, 0); 3]);
        assert!(!d.truncated);

        let d = decompose_digits(WeightA2::new(8, 1), 7, 2).unwrap();
        assert_eq!(d.digits, vec![WeightA2::new(1, 1), WeightA2::new(1, 0)]);
        assert!(!d.truncated);

        for p in [7u64, 11, 13] {
            let d = decompose_digits(WeightA2::new(p - 1, p - 1), p, 1).unwrap();
            assert_eq!(d.digits, vec![WeightA2::new(p - 1, p - 1)]);
        }

        // reconstruction over the window
        let d = decompose_digits(WeightA2::new(123, 45), 7, 4).unwrap();
        let (mut c1, mut c2) = (0u64, 0u64);
        for (k, digit) in d.digits.iter().enumerate() {
            c1 += digit.c1 * 7u64.pow(k as u32);
            c2 += digit.c2 * 7u64.pow(k as u32);
        }
        assert_eq!((c1, c2), (123, 45));

        assert_eq!(decompose_digits(WeightA2::new(0, 0), 5, 1), Err(SupportError::SmallPrime(5)));
        assert!(decompose_digits(WeightA2::new(50, 0), 7, 1).unwrap().truncated);
    }

    #[test]
    fn regularity_pairings() {
        assert!(is_p_regular(WeightA2::new(0, 0), 7));
        assert!(!is_p_regular(WeightA2::new(6, 0), 7));
        assert!(!is_p_regular(WeightA2::new(3, 2), 7));
        // diagram symmetry
        for c1 in 0..7u64 {
            for c2 in 0..7u64 {
                assert_eq!(
                    is_p_regular(WeightA2::new(c1, c2), 7),
                    is_p_regular(WeightA2::new(c2, c1), 7)
                );
            }
        }
    }

    #[test]
    fn support_examples() {
        // trivial module, r = 2: the full nilpotent pair variety
        let rep = support_variety(WeightA2::new(0, 0), 7, 2).unwrap();
        assert_eq!((rep.a, rep.b, rep.dim), (0, 2, 8));
        assert!(rep.irreducible);

        // single singular digit at r = 1: the subregular closure
        let rep = support_variety(WeightA2::new(6, 0), 7, 1).unwrap();
        assert_eq!((rep.a, rep.b, rep.dim), (1, 0, 4));
        assert!(rep.irreducible);

        // one singular digit among three
        let rep = support_variety(WeightA2::new(6, 0), 7, 3).unwrap();
        assert_eq!((rep.a, rep.b, rep.dim), (1, 2, 9));
        assert!(!rep.irreducible);
    }

    #[test]
    fn handoff_identity() {
        for a in 0..=8usize {
            for b in 0..=(8 - a) {
                if a + b == 0 {
                    continue;
                }
                let expected = dim_cijm(a as u32, b as u32, 0);
                if (a, b) != (1, 0) {
                    assert_eq!(case_display_dim(a, b), expected, "({a},{b})");
                } else {
                    assert_eq!(case_display_dim(a, b), 5);
                    assert_eq!(expected, 4);
                }
            }
        }
    }

    #[test]
    fn digit_order_is_immaterial() {
        // (6,0) singular at position 0 vs position 1 (6*7 = 42)
        let low = support_variety(WeightA2::new(6, 0), 7, 2).unwrap();
        let high = support_variety(WeightA2::new(42, 0), 7, 2).unwrap();
        assert_eq!((low.a, low.b, low.dim, low.irreducible),
                   (high.a, high.b, high.dim, high.irreducible));
    }
}

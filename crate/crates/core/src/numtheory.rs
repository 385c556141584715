//! Exact integer helpers: perfect squares, square-free splits, and the gcd and
//! 2-adic valuation of an integral eigenvalue support.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A numeric eigenvalue `x` is declared an integer when `|x - round(x)|` is below this.
pub const INTEGRALITY_TOL: f64 = 1e-7;

/// Largest input accepted by [`squarefree_split`].
pub const MAX_EXACT: u64 = i64::MAX as u64;

/// Rounds `x` to the nearest integer if it is within [`INTEGRALITY_TOL`] of one.
pub fn as_integer(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < INTEGRALITY_TOL && r.abs() < 9.0e15).then_some(r as i64)
}

pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareFreeSplit {
    pub n: u64,
    pub s: u64,
    /// Square-free part: `n = s² c`.
    pub c: u64,
}

/// Writes `n = s² c` with `c` square-free, by trial division up to `√n`.
///
/// Inputs up to [`MAX_EXACT`] are accepted; trial division is only fast for
/// `n` up to roughly `10^12`.
pub fn squarefree_split(n: u64) -> Result<SquareFreeSplit> {
    if n == 0 {
        return invalid("square-free split needs n >= 1");
    }
    if n > MAX_EXACT {
        return invalid(format!("{n} exceeds the exact range 2^63 - 1"));
    }
    let mut rest = n;
    let (mut s, mut c) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            c *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    c *= rest;
    Ok(SquareFreeSplit { n, s, c })
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, r)` where `g` is the gcd of the support (zero entries ignored, signs
/// dropped) and `2^r` is the largest power of two dividing `g`.
pub fn support_gcd_and_valuation(support: &[i64]) -> Result<(u64, u32)> {
    let g = support.iter().map(|x| x.unsigned_abs()).fold(0, gcd);
    if g == 0 {
        return invalid("support has no nonzero eigenvalue");
    }
    Ok((g, g.trailing_zeros()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rationality {
    Rational,
    Irrational,
}

/// Whether `√delta_sq` is rational.
pub fn rationality_class(delta_sq: u64) -> Rationality {
    if is_perfect_square(delta_sq) {
        Rationality::Rational
    } else {
        Rationality::Irrational
    }
}

/// `(m + λ - 1)² + 4m` for integer `λ >= 0`.
pub fn corona_delta_sq(lambda: u64, m: u64) -> u64 {
    let a = m + lambda - 1;
    a * a + 4 * m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(25));
        assert!(!is_perfect_square(73));
        assert!(is_perfect_square(0));
        assert!(is_perfect_square(1));
        assert!(is_perfect_square(u32::MAX as u64 * u32::MAX as u64));
        assert!(!is_perfect_square(u32::MAX as u64 * u32::MAX as u64 + 1));
    }

    #[test]
    fn corona_delta_never_square_for_positive_lambda() {
        for m in 1..=50 {
            for lambda in 1..=50 {
                assert!(
                    !is_perfect_square(corona_delta_sq(lambda, m)),
                    "m={m} λ={lambda}"
                );
            }
        }
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_split(8).unwrap(),
            SquareFreeSplit { n: 8, s: 2, c: 2 }
        );
        assert_eq!(
            squarefree_split(73).unwrap(),
            SquareFreeSplit { n: 73, s: 1, c: 73 }
        );
        assert_eq!(
            squarefree_split(20).unwrap(),
            SquareFreeSplit { n: 20, s: 2, c: 5 }
        );
        assert_eq!(
            squarefree_split(40).unwrap(),
            SquareFreeSplit { n: 40, s: 2, c: 10 }
        );
        assert_eq!(
            squarefree_split(1).unwrap(),
            SquareFreeSplit { n: 1, s: 1, c: 1 }
        );
        assert_eq!(
            squarefree_split(720).unwrap(),
            SquareFreeSplit {
                n: 720,
                s: 12,
                c: 5
            }
        );
        assert!(squarefree_split(0).is_err());
        assert!(squarefree_split(u64::MAX).is_err());
    }

    #[test]
    fn squarefree_round_trip_exhaustive() {
        for n in 1..=1_000_000u64 {
            let sp = squarefree_split(n).unwrap();
            assert_eq!(sp.s * sp.s * sp.c, n);
        }
    }

    #[test]
    fn squarefree_part_has_no_square_factor() {
        for n in 1..=5_000u64 {
            let c = squarefree_split(n).unwrap().c;
            assert!(
                (2..=c.isqrt()).all(|k| !c.is_multiple_of(k * k)),
                "n={n} c={c}"
            );
        }
    }

    #[test]
    fn support_gcd() {
        assert_eq!(support_gcd_and_valuation(&[0, 2]).unwrap(), (2, 1));
        assert_eq!(support_gcd_and_valuation(&[0, 2, 4, 6]).unwrap(), (2, 1));
        assert_eq!(support_gcd_and_valuation(&[0, 4, 8]).unwrap(), (4, 2));
        assert_eq!(support_gcd_and_valuation(&[0, 3, 6]).unwrap(), (3, 0));
        assert!(support_gcd_and_valuation(&[0, 0]).is_err());
        assert!(support_gcd_and_valuation(&[]).is_err());
    }

    #[test]
    fn rationality() {
        assert_eq!(rationality_class(4), Rationality::Rational);
        assert_eq!(rationality_class(8), Rationality::Irrational);
        for m in 1..=50u64 {
            assert_eq!(
                rationality_class((m + 1).pow(2) + 4 * m),
                Rationality::Irrational
            );
        }
    }

    #[test]
    fn integrality_detection() {
        assert_eq!(as_integer(2.0 + 1e-9), Some(2));
        assert_eq!(as_integer(-3.0), Some(-3));
        assert_eq!(as_integer(2.0 + 1e-6), None);
        assert_eq!(as_integer(2.0_f64.sqrt()), None);
    }
}

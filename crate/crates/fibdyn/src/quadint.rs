//! Exact arithmetic in Z[g] where g = (sqrt(5) - 1) / 2.
//!
//! `g` satisfies g^2 = 1 - g, and the golden ratio is 1 + g. Signs, floors,
//! and comparisons reduce to integer square-root tests, so no floating point
//! is involved anywhere.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// `p + q*g` with integer `p`, `q`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadInt {
    pub p: i64,
    pub q: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { p: 0, q: 0 };
    pub const ONE: QuadInt = QuadInt { p: 1, q: 0 };
    /// g itself.
    pub const GAMMA: QuadInt = QuadInt { p: 0, q: 1 };
    /// The golden ratio 1 + g.
    pub const PHI: QuadInt = QuadInt { p: 1, q: 1 };

    pub fn new(p: i64, q: i64) -> Self {
        QuadInt { p, q }
    }

    pub fn from_int(n: i64) -> Self {
        QuadInt { p: n, q: 0 }
    }

    /// Sign of the real value `p + q*g`: -1, 0, or 1.
    /// Writes the value as ((2p - q) + q*sqrt(5)) / 2 and compares squares.
    pub fn signum(self) -> i32 {
        let a = 2 * self.p as i128 - self.q as i128;
        let b = self.q as i128;
        match (a.signum(), b.signum()) {
            (0, 0) => 0,
            (sa, sb) if sa >= 0 && sb >= 0 => 1,
            (sa, sb) if sa <= 0 && sb <= 0 => -1,
            (1, -1) => {
                if a * a > 5 * b * b {
                    1
                } else {
                    -1 // cannot be 0: sqrt(5) is irrational
                }
            }
            (-1, 1) => {
                if 5 * b * b > a * a {
                    1
                } else {
                    -1
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Exact floor of the real value.
    pub fn floor(self) -> i64 {
        self.p + floor_q_gamma(self.q)
    }

    /// Fractional part; the result lies in `[0, 1)`.
    pub fn frac(self) -> QuadInt {
        self - QuadInt::from_int(self.floor())
    }

    pub fn scale(self, n: i64) -> QuadInt {
        QuadInt {
            p: self.p * n,
            q: self.q * n,
        }
    }

    /// Approximate value, for display only.
    pub fn to_f64(self) -> f64 {
        self.p as f64 + self.q as f64 * (5f64.sqrt() - 1.0) / 2.0
    }
}

/// `floor(n * x)` for `x` in Z[g], exactly.
pub fn floor_mul(x: QuadInt, n: i64) -> i64 {
    x.scale(n).floor()
}

/// floor(q * g) for integer q, via integer square roots.
/// q*g = (q*sqrt(5) - q)/2 and floor(q*sqrt(5)) = isqrt(5 q^2) for q >= 0.
fn floor_q_gamma(q: i64) -> i64 {
    match q.cmp(&0) {
        Ordering::Equal => 0,
        Ordering::Greater => {
            let s = (5i128 * (q as i128) * (q as i128)).isqrt() as i64;
            (s - q).div_euclid(2)
        }
        // q*g is never an integer for q != 0, so floor(-x) = -floor(x) - 1
        Ordering::Less => -floor_q_gamma(-q) - 1,
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p - rhs.p,
            q: self.q - rhs.q,
        }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    // (p + qg)(r + sg) = pr + qs + (ps + qr - qs) g, using g^2 = 1 - g
    fn mul(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p * rhs.p + self.q * rhs.q,
            q: self.p * rhs.q + self.q * rhs.p - self.q * rhs.q,
        }
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self - *other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_identities() {
        let g = QuadInt::GAMMA;
        assert_eq!(g * g, QuadInt::ONE - g); // g^2 = 1 - g
        assert_eq!(QuadInt::PHI * g, QuadInt::ONE); // phi * g = 1
        assert_eq!(
            QuadInt::PHI * QuadInt::PHI,
            QuadInt::PHI + QuadInt::ONE
        ); // phi^2 = phi + 1
    }

    #[test]
    fn floors_of_gamma_multiples() {
        // floor(n*g) for n = 1..10: 0 1 1 2 3 3 4 4 5 6
        let expect = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(floor_mul(QuadInt::GAMMA, i as i64 + 1), e, "n={}", i + 1);
        }
        // floor(n*phi) for n = 1..8: 1 3 4 6 8 9 11 12
        let expect_phi = [1, 3, 4, 6, 8, 9, 11, 12];
        for (i, &e) in expect_phi.iter().enumerate() {
            assert_eq!(floor_mul(QuadInt::PHI, i as i64 + 1), e, "n={}", i + 1);
        }
        // negative arguments
        assert_eq!(floor_mul(QuadInt::GAMMA, -1), -1);
        assert_eq!(floor_mul(QuadInt::GAMMA, -2), -2);
        assert_eq!(floor_mul(QuadInt::GAMMA, -3), -2);
    }

    #[test]
    fn ordering_is_exact() {
        // 2g > 1 > g but 3g < 2
        let g = QuadInt::GAMMA;
        assert!(g.scale(2) > QuadInt::ONE);
        assert!(g < QuadInt::ONE);
        assert!(g.scale(3) < QuadInt::from_int(2));
        // frac always lands in [0,1)
        for q in -50..50 {
            for p in -3..3 {
                let f = QuadInt::new(p, q).frac();
                assert!(f.signum() >= 0);
                assert!((f - QuadInt::ONE).signum() < 0);
            }
        }
    }

    #[test]
    fn floor_matches_f64_on_moderate_inputs() {
        for q in -1000..1000i64 {
            let exact = QuadInt::new(0, q).floor();
            let approx = (q as f64 * (5f64.sqrt() - 1.0) / 2.0).floor() as i64;
            assert_eq!(exact, approx, "q={q}");
        }
    }
}

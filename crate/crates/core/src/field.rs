//! Exact arithmetic in the quadratic field Q(√5).

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// An element `(a + b·√5) / d` of Q(√5), kept in lowest terms with `d > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q5 {
    a: i64,
    b: i64,
    d: i64,
}

const fn gcd(mut x: i64, mut y: i64) -> i64 {
    if x < 0 {
        x = -x;
    }
    if y < 0 {
        y = -y;
    }
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

impl Q5 {
    pub const ZERO: Q5 = Q5 { a: 0, b: 0, d: 1 };
    pub const ONE: Q5 = Q5 { a: 1, b: 0, d: 1 };

    /// Builds `(a + b·√5) / d`. Panics if `d == 0`.
    pub const fn new(a: i64, b: i64, d: i64) -> Q5 {
        assert!(d != 0, "zero denominator");
        let (mut a, mut b, mut d) = if d < 0 { (-a, -b, -d) } else { (a, b, d) };
        let g = gcd(gcd(a, b), d);
        if g > 1 {
            a /= g;
            b /= g;
            d /= g;
        }
        Q5 { a, b, d }
    }

    pub const fn int(n: i64) -> Q5 {
        Q5 { a: n, b: 0, d: 1 }
    }

    /// Half of `a + b·√5`; every vertex coordinate of the catalog has this form.
    pub const fn half(a: i64, b: i64) -> Q5 {
        Q5::new(a, b, 2)
    }

    /// The golden ratio (1 + √5)/2.
    pub const fn phi() -> Q5 {
        Q5::half(1, 1)
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn signum(self) -> i32 {
        // sign of a + b√5
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa as i32;
        }
        if sa == 0 || sa == sb {
            return sb as i32;
        }
        // opposite signs: compare a² with 5b²
        let a2 = (self.a as i128) * (self.a as i128);
        let b2 = 5 * (self.b as i128) * (self.b as i128);
        match a2.cmp(&b2) {
            Ordering::Greater => sa as i32,
            Ordering::Less => sb as i32,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(self) -> f64 {
        // √5 to double precision
        const SQRT5: f64 = 2.236_067_977_499_79;
        (self.a as f64 + self.b as f64 * SQRT5) / self.d as f64
    }
}

impl Add for Q5 {
    type Output = Q5;
    fn add(self, o: Q5) -> Q5 {
        Q5::new(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)
    }
}

impl Sub for Q5 {
    type Output = Q5;
    fn sub(self, o: Q5) -> Q5 {
        self + (-o)
    }
}

impl Neg for Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5 { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Mul for Q5 {
    type Output = Q5;
    fn mul(self, o: Q5) -> Q5 {
        Q5::new(
            self.a * o.a + 5 * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d * o.d,
        )
    }
}

impl Ord for Q5 {
    fn cmp(&self, other: &Q5) -> Ordering {
        match (*self - *other).signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for Q5 {
    fn partial_cmp(&self, other: &Q5) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}√5)/{}", self.a, self.b, self.d)
    }
}

/// Dot product of two coordinate vectors.
pub fn dot(x: &[Q5], y: &[Q5]) -> Q5 {
    x.iter().zip(y).fold(Q5::ZERO, |acc, (&p, &q)| acc + p * q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_identities() {
        let phi = Q5::phi();
        assert_eq!(phi * phi, phi + Q5::ONE);
        let inv = Q5::half(-1, 1);
        assert_eq!(phi * inv, Q5::ONE);
    }

    #[test]
    fn ordering_is_exact() {
        // 2.236 < √5 < 2.237
        let s5 = Q5::new(0, 1, 1);
        assert!(Q5::new(2236, 0, 1000) < s5);
        assert!(s5 < Q5::new(2237, 0, 1000));
        assert_eq!(Q5::new(4, 2, 2), Q5::new(2, 1, 1));
        assert_eq!(Q5::half(3, -1).signum(), 1);
        assert_eq!(Q5::new(-9, 4, 1).signum(), -1);
    }
}

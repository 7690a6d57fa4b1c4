//! Exact numbers of the form `(p + q*sqrt(5)) / r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{int, Error, Int, Rational, Result};

/// `(p + q*sqrt5) / r`, kept canonical: `r > 0` and `gcd(p, q, r) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat<T> {
    p: T,
    q: T,
    r: T,
}

impl<T: Int> QuadRat<T> {
    pub fn new(p: T, q: T, r: T) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(p, q, r))
    }

    fn canonical(mut p: T, mut q: T, mut r: T) -> Self {
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p = p / g.clone();
            q = q / g.clone();
            r = r / g;
        }
        QuadRat { p, q, r }
    }

    pub fn from_int(n: T) -> Self {
        QuadRat { p: n, q: T::zero(), r: T::one() }
    }

    pub fn from_rational(v: &Rational<T>) -> Self {
        Self::canonical(v.numer().clone(), T::zero(), v.denom().clone())
    }

    /// The golden ratio `(1 + sqrt5) / 2`.
    pub fn phi() -> Self {
        QuadRat { p: T::one(), q: T::one(), r: int(2) }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn r(&self) -> &T {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Sign of `p + q*sqrt5` (the denominator is positive).
    pub fn signum(&self) -> Ordering {
        sign_of_surd(&self.p, &self.q)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // r / (p + q sqrt5) = r (p - q sqrt5) / (p^2 - 5 q^2); the norm is nonzero
        // for (p, q) != (0, 0) because sqrt5 is irrational.
        let norm = self.p.clone() * self.p.clone() - int::<T>(5) * self.q.clone() * self.q.clone();
        Ok(Self::canonical(
            self.r.clone() * self.p.clone(),
            -(self.r.clone() * self.q.clone()),
            norm,
        ))
    }

    /// Exact `floor`.
    pub fn floor(&self) -> T {
        // floor(q sqrt5) is exact through isqrt(5 q^2); 5 q^2 is a square only for q = 0.
        let root = (int::<T>(5) * self.q.clone() * self.q.clone()).sqrt();
        let surd_floor = if self.q.is_negative() { -root - T::one() } else { root };
        // p + q sqrt5 lies in [a, a + 1) with a integer; dividing by r > 0 keeps the floor.
        (self.p.clone() + surd_floor).div_floor(&self.r)
    }

    pub fn ceil(&self) -> T {
        -(-self.clone()).floor()
    }
}

/// Sign of `p + q*sqrt5` decided without leaving the integers.
pub(crate) fn sign_of_surd<T: Int>(p: &T, q: &T) -> Ordering {
    let zero = T::zero();
    match (p.cmp(&zero), q.cmp(&zero)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        (pa, _) => {
            // opposite signs: compare p^2 against 5 q^2 (never equal)
            let lhs = p.clone() * p.clone();
            let rhs = int::<T>(5) * q.clone() * q.clone();
            if lhs > rhs {
                pa
            } else {
                pa.reverse()
            }
        }
    }
}

impl<T: Int> Ord for QuadRat<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl<T: Int> PartialOrd for QuadRat<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Int> Add for QuadRat<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::canonical(
            self.p * o.r.clone() + o.p * self.r.clone(),
            self.q * o.r.clone() + o.q * self.r.clone(),
            self.r * o.r,
        )
    }
}

impl<T: Int> Sub for QuadRat<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Int> Neg for QuadRat<T> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadRat { p: -self.p, q: -self.q, r: self.r }
    }
}

impl<T: Int> Mul for QuadRat<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let five = int::<T>(5);
        Self::canonical(
            self.p.clone() * o.p.clone() + five * self.q.clone() * o.q.clone(),
            self.p * o.q + self.q * o.p,
            self.r * o.r,
        )
    }
}

impl<T: Int> Div for QuadRat<T> {
    type Output = Self;
    /// Panics on division by zero; use [`QuadRat::recip`] for a checked variant.
    fn div(self, o: Self) -> Self {
        self * o.recip().expect("division by zero QuadRat")
    }
}

impl<T: Int> fmt::Display for QuadRat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt5)/{}", self.p, self.q, self.r)
    }
}

/// `floor((p + q*sqrt5) / r)`.
pub fn quad_floor<T: Int>(v: &QuadRat<T>) -> T {
    v.floor()
}

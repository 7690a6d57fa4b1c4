//! The golden Beatty sequence `f(x) = floor(phi * x)`.
//!
//! `f_floor` is the primary evaluator; `f_zeck` computes the same function from the
//! Zeckendorf representation and serves as an independent cross-check.

use std::cmp::Ordering;

use crate::numeration::{c, fib_table_past, zeckendorf, FibWordBit};
use crate::{int, Error, Int, Result};

/// Largest `s` with `s * s <= n`.
pub fn isqrt<T: Int>(n: &T) -> Result<T> {
    if n.is_negative() {
        return Err(Error::negative("isqrt argument", n));
    }
    Ok(n.sqrt())
}

/// `floor(phi * x)` for `x > 0`, and `0` for `x <= 0`.
///
/// Uses `(x + isqrt(5 x^2)) div 2`, which is exact since `5 x^2` is never a square.
pub fn f_floor<T: Int>(x: &T) -> T {
    if !x.is_positive() {
        return T::zero();
    }
    let five_x2 = int::<T>(5) * x.clone() * x.clone();
    (x.clone() + five_x2.sqrt()).div_floor(&int(2))
}

/// `f(x)` through the Zeckendorf representation: shift every index up by one and
/// subtract 1 when the smallest index is odd.
pub fn f_zeck<T: Int>(x: &T) -> Result<T> {
    let rep = zeckendorf(x)?;
    let mut table = fib_table_past(x);
    while table.len() <= rep.largest() + 1 {
        let n = table.len();
        table.push(table[n - 1].clone() + table[n - 2].clone());
    }
    let sum = rep
        .indices()
        .iter()
        .fold(T::zero(), |acc, &i| acc + table[i + 1].clone());
    Ok(if rep.smallest() % 2 == 1 { sum - T::one() } else { sum })
}

/// The unique `x` with `f(x) = y`, or `None` when `y` lies in the complement
/// sequence `f(x) + x`.
pub fn f_inverse<T: Int>(y: &T) -> Result<Option<T>> {
    let rep = zeckendorf(y)?;
    if rep.smallest() % 2 == 0 {
        return Ok(None);
    }
    let table = fib_table_past(y);
    // index 1 maps to fib(0) = 1
    let x = rep
        .indices()
        .iter()
        .fold(T::zero(), |acc, &i| acc + table[i - 1].clone());
    Ok(Some(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BeattyBranch {
    /// `n = f(x)`
    F,
    /// `n = f(x) + x`
    G,
}

/// Which of the two complementary Beatty sequences `n` belongs to, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BeattyDecomposition<T> {
    pub kind: BeattyBranch,
    pub witness: T,
}

impl<T: Int> BeattyDecomposition<T> {
    /// Recomputes the branch value from the witness.
    pub fn value(&self) -> T {
        match self.kind {
            BeattyBranch::F => f_floor(&self.witness),
            BeattyBranch::G => f_floor(&self.witness) + self.witness.clone(),
        }
    }
}

pub fn decompose<T: Int>(n: &T) -> Result<BeattyDecomposition<T>> {
    let out = match c(n)? {
        FibWordBit::One => BeattyDecomposition {
            kind: BeattyBranch::F,
            witness: f_inverse(n)?.expect("c(n) = 1 has a preimage"),
        },
        FibWordBit::Zero => {
            // n = f(x) + x  =>  n - 1 = f(f(x)), so x = f^-1(f^-1(n - 1)).
            // c(n) = 0 forces n >= 2 and c(n - 1) = 1.
            let y = f_inverse(&(n.clone() - T::one()))?
                .ok_or_else(|| Error::Domain(format!("no preimage for {}", n.clone() - T::one())))?;
            let x = f_inverse(&y)?
                .ok_or_else(|| Error::Domain(format!("no preimage for {y}")))?;
            BeattyDecomposition { kind: BeattyBranch::G, witness: x }
        }
    };
    if &out.value() != n {
        return Err(Error::Domain(format!("decomposition of {n} failed to verify")));
    }
    Ok(out)
}

/// `f(x + y) - f(x) - f(y)`; always 0 or 1.
pub fn additivity_defect<T: Int>(x: &T, y: &T) -> Result<T> {
    if !x.is_positive() {
        return Err(Error::not_positive("x", x));
    }
    if !y.is_positive() {
        return Err(Error::not_positive("y", y));
    }
    Ok(f_floor(&(x.clone() + y.clone())) - f_floor(x) - f_floor(y))
}

/// `f(r x + b) - r f(x) - f(b)`; lies in `[0, r]`.
pub fn linear_defect<T: Int>(r: &T, x: &T, b: &T) -> Result<T> {
    if !r.is_positive() {
        return Err(Error::not_positive("r", r));
    }
    if !x.is_positive() {
        return Err(Error::not_positive("x", x));
    }
    if !b.is_positive() {
        return Err(Error::not_positive("b", b));
    }
    let arg = r.clone() * x.clone() + b.clone();
    Ok(f_floor(&arg) - r.clone() * f_floor(x) - f_floor(b))
}

/// Sign of `p/q - phi`. Never `Equal`.
pub fn compare_phi<T: Int>(p: &T, q: &T) -> Result<Ordering> {
    if !q.is_positive() {
        return Err(Error::not_positive("q", q));
    }
    // p/q < phi  <=>  2p - q < q sqrt5
    let lhs = int::<T>(2) * p.clone() - q.clone();
    if lhs.is_negative() {
        return Ok(Ordering::Less);
    }
    let five_q2 = int::<T>(5) * q.clone() * q.clone();
    Ok(if lhs.clone() * lhs < five_q2 { Ordering::Less } else { Ordering::Greater })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&0i64).unwrap(), 0);
        assert_eq!(isqrt(&20i64).unwrap(), 4);
        assert_eq!(isqrt(&245i64).unwrap(), 15);
        assert!(isqrt(&-1i64).is_err());
        for n in 0..10_000i64 {
            let s = isqrt(&n).unwrap();
            assert!(s * s <= n && (s + 1) * (s + 1) > n);
        }
    }

    #[test]
    fn f_floor_examples() {
        assert_eq!(f_floor(&-3i64), 0);
        assert_eq!(f_floor(&0i64), 0);
        assert_eq!(f_floor(&1i64), 1);
        assert_eq!(f_floor(&7i64), 11);
        let big: BigInt = "1000000000000000000000000".parse().unwrap();
        assert_eq!(f_floor(&big).to_string(), "1618033988749894848204586");
    }

    #[test]
    fn f_zeck_examples() {
        assert_eq!(f_zeck(&4i64).unwrap(), 6);
        assert_eq!(f_zeck(&5i64).unwrap(), 8);
        assert_eq!(f_zeck(&3i64).unwrap(), 4);
        assert!(f_zeck(&0i64).is_err());
    }

    #[test]
    fn evaluators_agree() {
        for x in 1..=200_000i64 {
            assert_eq!(f_floor(&x), f_zeck(&x).unwrap(), "x={x}");
        }
    }

    #[test]
    fn f_inverse_examples() {
        assert_eq!(f_inverse(&11i64).unwrap(), Some(7));
        assert_eq!(f_inverse(&2i64).unwrap(), None);
        assert_eq!(f_inverse(&1i64).unwrap(), Some(1));
        assert!(f_inverse(&0i64).is_err());
        for x in 1..=100_000i64 {
            assert_eq!(f_inverse(&f_floor(&x)).unwrap(), Some(x));
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&4i64).unwrap();
        assert_eq!((d.kind, d.witness), (BeattyBranch::F, 3));
        let d = decompose(&7i64).unwrap();
        assert_eq!((d.kind, d.witness), (BeattyBranch::G, 3));
        let d = decompose(&1i64).unwrap();
        assert_eq!((d.kind, d.witness), (BeattyBranch::F, 1));
        assert!(decompose(&0i64).is_err());
    }

    #[test]
    fn defect_examples() {
        assert_eq!(additivity_defect(&1i64, &1).unwrap(), 1);
        assert_eq!(additivity_defect(&1i64, &2).unwrap(), 0);
        assert_eq!(additivity_defect(&2i64, &2).unwrap(), 0);
        assert_eq!(linear_defect(&1i64, &1, &2).unwrap(), 0);
        assert_eq!(linear_defect(&2i64, &1, &1).unwrap(), 1);
        assert_eq!(linear_defect(&3i64, &2, &1).unwrap(), 1);
        assert!(linear_defect(&0i64, &1, &1).is_err());
        assert!(linear_defect(&1i64, &0, &1).is_err());
        assert!(linear_defect(&1i64, &1, &0).is_err());
    }

    #[test]
    fn linear_defect_bounded_by_r() {
        for r in 1..=12i64 {
            for x in 1..=200 {
                for b in 1..=20 {
                    let d = linear_defect(&r, &x, &b).unwrap();
                    assert!((0..=r).contains(&d), "r={r} x={x} b={b} d={d}");
                }
            }
        }
    }

    #[test]
    fn compare_phi_examples() {
        assert_eq!(compare_phi(&3i64, &2).unwrap(), Ordering::Less);
        assert_eq!(compare_phi(&2i64, &1).unwrap(), Ordering::Greater);
        assert_eq!(compare_phi(&1i64, &1).unwrap(), Ordering::Less);
        assert_eq!(compare_phi(&-5i64, &1).unwrap(), Ordering::Less);
        assert!(compare_phi(&1i64, &0).is_err());
        for q in 1..200i64 {
            for p in 0..400i64 {
                let expect = if (p as f64) / (q as f64) < (1.0 + 5f64.sqrt()) / 2.0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
                assert_eq!(compare_phi(&p, &q).unwrap(), expect, "{p}/{q}");
            }
        }
    }
}

//! Exact arithmetic for the structure `(Z, +, -, <, f, p_n, p_{n,n'}^{m,m'}, 0, 1)`
//! where `f(x) = floor(phi * x)` and `phi` is the golden ratio.
//!
//! The number-theoretic layers are generic over an integer scalar (see [`Int`]):
//!
//! - [`numeration`]: Fibonacci numbers, Zeckendorf representations, Pisano
//!   periods and the Fibonacci word `c_n`.
//! - [`golden`]: two independent evaluators of `f`, its inverse, the Beatty
//!   decomposition and exact numbers of the form `(p + q*sqrt5)/r`.
//! - [`congruence`]: CRT and the solvers for `x = m (n), f(x) = m' (n'), a < x < b`.
//! - [`windows`]: convergents of `phi` and exact solution sets of
//!   `f(x) <|=|> (m/n) x + k`.
//!
//! The [`logic`] layer (parser, evaluator, normal-form decider, axiom audit) works
//! over [`BigInt`](num_bigint::BigInt) since formula literals are unbounded.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub mod congruence;
mod error;
pub mod golden;
pub mod logic;
pub mod numeration;
pub mod quad;
pub mod windows;

pub use error::{Error, Result};

/// Integer scalar the arithmetic layers are generic over.
///
/// Implemented for every signed type that provides exact integer roots; in
/// practice `i64`, `i128` and `BigInt`. Fixed-width instantiations overflow
/// silently on large inputs, so anything fed by user data should use [`Big`].
pub trait Int:
    Integer + Signed + Roots + Clone + Ord + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive
{
}

impl<T> Int for T where
    T: Integer + Signed + Roots + Clone + Ord + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive
{
}

/// Converts a small constant into any [`Int`].
#[inline]
pub(crate) fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("constant fits every Int")
}

pub type Big = num_bigint::BigInt;
pub type Rational<T> = num_rational::Ratio<T>;

pub type BigRational = Rational<Big>;
pub type BigQuadRat = quad::QuadRat<Big>;
pub type BigCongruence = congruence::Congruence<Big>;
pub type BigCongruenceSystem = congruence::CongruenceSystem<Big>;
pub type BigSolveOutcome = congruence::SolveOutcome<Big>;
pub type BigLinearConstraint = windows::LinearConstraint<Big>;
pub type BigWindowSet = windows::WindowSet<Big>;
pub type BigDecomposition = golden::BeattyDecomposition<Big>;

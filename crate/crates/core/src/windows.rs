//! Convergents of `phi` and exact solution sets of `f(x) <|=|> (m/n) x + k` over `x >= 1`.
//!
//! Writing `D = n*phi - m`, the constraint on `x = rho (mod n)` reduces to a bound
//! on `D x`:
//!
//! - `=`: needs `m*rho = 0 (mod n)`, then `n k <= D x < n k + n`;
//! - `<`: `D x < n k + r` with `r = (-m rho) mod n`;
//! - `>`: `D x > n k + n - r'` with `r' = (m rho) mod n`.
//!
//! `D x` is irrational for `x != 0`, so every bound is decided exactly with
//! [`QuadRat`] floors. For `n = 1` this is the familiar interval
//! `k/(phi - m) <= x < (k+1)/(phi - m)`; for `n > 1` the set is a union of
//! residue-class pieces.

use std::cmp::Ordering;
use std::fmt;


use crate::congruence::{crt_combine, Congruence};
use crate::golden::{compare_phi, f_floor};
use crate::numeration::fib;
use crate::quad::QuadRat;
use crate::{int, Error, Int, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }

    pub fn holds(self, ord: Ordering) -> bool {
        matches!(
            (self, ord),
            (Relation::Less, Ordering::Less) | (Relation::Equal, Ordering::Equal) | (Relation::Greater, Ordering::Greater)
        )
    }

    pub const ALL: [Relation; 3] = [Relation::Less, Relation::Equal, Relation::Greater];
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `f(x) <relation> slope * x + offset`, read over integers `x >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint<T: Int> {
    pub relation: Relation,
    pub slope: Rational<T>,
    pub offset: T,
}

impl<T: Int> LinearConstraint<T> {
    pub fn new(relation: Relation, slope: Rational<T>, offset: T) -> Result<Self> {
        if slope.numer().is_negative() {
            return Err(Error::NegativeSlope(slope.to_string()));
        }
        Ok(LinearConstraint { relation, slope, offset })
    }

    /// Builds the constraint from raw numerator and denominator.
    pub fn from_parts(relation: Relation, m: T, n: T, offset: T) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if n.is_negative() {
            return Err(Error::Domain(format!("slope denominator must be positive, got {n}")));
        }
        Self::new(relation, Rational::new(m, n), offset)
    }

    /// Direct evaluation: `n f(x) <|=|> m x + n k`.
    pub fn holds(&self, x: &T) -> bool {
        let n = self.slope.denom().clone();
        let m = self.slope.numer().clone();
        let lhs = n.clone() * f_floor(x);
        let rhs = m * x.clone() + n * self.offset.clone();
        self.relation.holds(lhs.cmp(&rhs))
    }
}

impl<T: Int> fmt::Display for LinearConstraint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(x) {} {}*x + {}", self.relation, self.slope, self.offset)
    }
}

/// `d_i = fib(2i+1) / fib(2i)`, the convergents below `phi`.
pub fn convergent_d<T: Int>(i: usize) -> Rational<T> {
    Rational::new(fib(2 * i + 1), fib(2 * i))
}

/// `u_i = fib(2i+2) / fib(2i+1)`, the convergents above `phi`.
pub fn convergent_u<T: Int>(i: usize) -> Rational<T> {
    Rational::new(fib(2 * i + 2), fib(2 * i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Below,
    Above,
}

/// Position of a slope among the convergents.
///
/// `Below` with `d_j <= slope < d_{j+1}`, or `Above` with `u_{j+1} < slope <= u_j`.
/// Slopes under `d_0 = 1` report `Below, 0` and slopes over `u_0 = 2` report `Above, 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bracket {
    pub side: Side,
    pub index: usize,
}

pub fn locate_slope<T: Int>(slope: &Rational<T>) -> Result<Bracket> {
    if slope.numer().is_negative() {
        return Err(Error::NegativeSlope(slope.to_string()));
    }
    let mut j = 0;
    match compare_phi(slope.numer(), slope.denom())? {
        Ordering::Less => {
            while &convergent_d::<T>(j + 1) <= slope {
                j += 1;
            }
            Ok(Bracket { side: Side::Below, index: j })
        }
        _ => {
            while slope <= &convergent_u::<T>(j + 1) {
                j += 1;
            }
            Ok(Bracket { side: Side::Above, index: j })
        }
    }
}

/// Members of `class` inside `[lo, hi]` (`hi = None` is unbounded).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WindowPiece<T> {
    pub class: Congruence<T>,
    pub lo: T,
    pub hi: Option<T>,
}

impl<T: Int> WindowPiece<T> {
    /// Tightens the bounds onto class members `>= 1`; `None` if nothing is left.
    fn normalized(class: Congruence<T>, lo: T, hi: Option<T>) -> Option<Self> {
        let lo = class.first_at_least(&lo.max(T::one()));
        let hi = hi.map(|h| class.last_at_most(&h));
        if let Some(h) = &hi {
            if h < &lo {
                return None;
            }
        }
        Some(WindowPiece { class, lo, hi })
    }

    pub fn contains(&self, x: &T) -> bool {
        x >= &self.lo && self.hi.as_ref().map_or(true, |h| x <= h) && self.class.holds(x)
    }
}

impl<T: Int> fmt::Display for WindowPiece<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.hi {
            Some(h) => write!(f, "[{}, {}]", self.lo, h)?,
            None => write!(f, "[{}, +inf)", self.lo)?,
        }
        if !self.class.modulus().is_one() {
            write!(f, " step {}", self.class.modulus())?;
        }
        Ok(())
    }
}

/// Coarse description of a [`WindowSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WindowShape<T> {
    Empty,
    FiniteInterval { lo: T, hi: T },
    HalfLineUp { lo: T },
    /// Anything else: a union of residue-class pieces.
    Union,
}

/// A set of positive integers given as disjoint residue-class pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WindowSet<T> {
    pieces: Vec<WindowPiece<T>>,
}

impl<T: Int> WindowSet<T> {
    pub fn empty() -> Self {
        WindowSet { pieces: Vec::new() }
    }

    /// All `x >= 1`.
    pub fn positive() -> Self {
        Self::interval(T::one(), None)
    }

    /// `[lo, hi]` intersected with `x >= 1`.
    pub fn interval(lo: T, hi: Option<T>) -> Self {
        WindowSet {
            pieces: WindowPiece::normalized(Congruence::trivial(), lo, hi).into_iter().collect(),
        }
    }

    pub fn pieces(&self) -> &[WindowPiece<T>] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn min(&self) -> Option<T> {
        self.pieces.iter().map(|p| p.lo.clone()).min()
    }

    pub fn shape(&self) -> WindowShape<T> {
        match self.pieces.as_slice() {
            [] => WindowShape::Empty,
            [p] if p.class.modulus().is_one() => match &p.hi {
                Some(hi) => WindowShape::FiniteInterval { lo: p.lo.clone(), hi: hi.clone() },
                None => WindowShape::HalfLineUp { lo: p.lo.clone() },
            },
            _ => WindowShape::Union,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let Some(class) = crt_combine(&[a.class.clone(), b.class.clone()]) else {
                    continue;
                };
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = match (&a.hi, &b.hi) {
                    (Some(x), Some(y)) => Some(x.clone().min(y.clone())),
                    (Some(x), None) | (None, Some(x)) => Some(x.clone()),
                    (None, None) => None,
                };
                pieces.extend(WindowPiece::normalized(class, lo, hi));
            }
        }
        pieces.sort_by(|p, q| p.lo.cmp(&q.lo));
        WindowSet { pieces }
    }

    /// Builds the set from one optional `[lo, hi]` range per residue class mod `n`,
    /// splitting off the longest full initial segment and full tail.
    fn from_classes(n: &T, ranges: Vec<Option<(T, Option<T>)>>) -> Self {
        let classes: Vec<Option<WindowPiece<T>>> = ranges
            .into_iter()
            .enumerate()
            .map(|(rho, r)| {
                let class = Congruence::new(n.clone(), T::from_usize(rho).unwrap()).unwrap();
                r.and_then(|(lo, hi)| WindowPiece::normalized(class, lo, hi))
            })
            .collect();
        if n.is_one() {
            return WindowSet { pieces: classes.into_iter().flatten().collect() };
        }

        // Full initial segment [1, head]: every class must cover its members from 1 on.
        let mut head: Option<T> = None;
        let mut tail: Option<T> = None;
        let mut tail_possible = true;
        for (rho, piece) in classes.iter().enumerate() {
            let class = Congruence::new(n.clone(), T::from_usize(rho).unwrap()).unwrap();
            let first = class.first_at_least(&T::one());
            let first_missing = match piece {
                Some(p) if p.lo == first => p.hi.clone().map(|h| h + n.clone()),
                _ => Some(first),
            };
            if let Some(fm) = first_missing {
                let h = fm - T::one();
                head = Some(head.map_or(h.clone(), |cur| cur.min(h)));
            }
            match piece {
                Some(p) if p.hi.is_none() => {
                    let t = p.lo.clone() - n.clone() + T::one();
                    tail = Some(tail.map_or(t.clone(), |cur| cur.max(t)));
                }
                _ => tail_possible = false,
            }
        }
        let head = head.filter(|h| h >= &T::one());
        let tail = if tail_possible { tail.map(|t| t.max(T::one())) } else { None };
        if head.is_none() && tail.as_ref().map_or(false, |t| t.is_one()) {
            return Self::positive();
        }

        let mut pieces = Vec::new();
        if let Some(h) = &head {
            pieces.extend(WindowPiece::normalized(Congruence::trivial(), T::one(), Some(h.clone())));
        }
        for p in classes.into_iter().flatten() {
            let lo = match &head {
                Some(h) => p.lo.clone().max(h.clone() + T::one()),
                None => p.lo.clone(),
            };
            let hi = match (&tail, p.hi.clone()) {
                (Some(t), Some(ph)) => Some(ph.min(t.clone() - T::one())),
                (Some(t), None) => Some(t.clone() - T::one()),
                (None, ph) => ph,
            };
            pieces.extend(WindowPiece::normalized(p.class, lo, hi));
        }
        if let Some(t) = tail {
            pieces.extend(WindowPiece::normalized(Congruence::trivial(), t, None));
        }
        pieces.sort_by(|p, q| p.lo.cmp(&q.lo));
        WindowSet { pieces }
    }
}

impl<T: Int> fmt::Display for WindowSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("{}");
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Largest integer strictly below `q`.
fn max_below<T: Int>(q: &QuadRat<T>) -> T {
    q.ceil() - T::one()
}

/// Smallest integer strictly above `q`.
fn min_above<T: Int>(q: &QuadRat<T>) -> T {
    q.floor() + T::one()
}

/// `{x >= 1 : D x < c}` or `{x >= 1 : D x > c}` as an inclusive range.
fn half_bound<T: Int>(d: &QuadRat<T>, c: T, below: bool) -> (T, Option<T>) {
    let q = QuadRat::from_int(c) / d.clone();
    let d_positive = d.signum() == Ordering::Greater;
    if below == d_positive {
        (T::one(), Some(max_below(&q)))
    } else {
        (min_above(&q), None)
    }
}

/// The exact set `{x >= 1 : f(x) <|=|> slope x + k}`.
pub fn solution_window<T: Int>(c: &LinearConstraint<T>) -> Result<WindowSet<T>> {
    if c.slope.numer().is_negative() {
        return Err(Error::NegativeSlope(c.slope.to_string()));
    }
    let n = c.slope.denom().clone();
    let m = c.slope.numer().clone();
    let nk = n.clone() * c.offset.clone();
    // D = n phi - m = (n - 2m + n sqrt5) / 2
    let d = QuadRat::new(n.clone() - int::<T>(2) * m.clone(), n.clone(), int(2))?;
    let d_positive = d.signum() == Ordering::Greater;

    let count = n
        .to_usize()
        .ok_or_else(|| Error::Domain(format!("slope denominator {n} too large to split by residue")))?;
    let mut ranges = Vec::with_capacity(count);
    for rho in 0..count {
        let rho_t = T::from_usize(rho).unwrap();
        let m_rho = (m.clone() * rho_t).mod_floor(&n);
        let range = match c.relation {
            Relation::Less => {
                let r = (n.clone() - m_rho).mod_floor(&n);
                Some(half_bound(&d, nk.clone() + r, true))
            }
            Relation::Greater => Some(half_bound(&d, nk.clone() + n.clone() - m_rho, false)),
            Relation::Equal if !m_rho.is_zero() => None,
            Relation::Equal => {
                let lo_q = QuadRat::from_int(nk.clone()) / d.clone();
                let hi_q = QuadRat::from_int(nk.clone() + n.clone()) / d.clone();
                if d_positive {
                    // lo_q <= x < hi_q
                    Some((lo_q.ceil(), Some(max_below(&hi_q))))
                } else {
                    // hi_q < x <= lo_q
                    Some((min_above(&hi_q), Some(lo_q.floor())))
                }
            }
        };
        ranges.push(range);
    }
    let set = WindowSet::from_classes(&n, ranges);

    // boundary spot-check against direct evaluation
    for p in set.pieces() {
        debug_assert!(c.holds(&p.lo), "{c}: lower end {} fails", p.lo);
        if let Some(h) = &p.hi {
            debug_assert!(c.holds(h), "{c}: upper end {h} fails");
        }
    }
    Ok(set)
}

/// A point where a convergent-substituted implication fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomVCounterexample<T> {
    pub relation: Relation,
    pub x: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomVReport<T: Int> {
    pub bracket: Bracket,
    pub convergent: Rational<T>,
    pub checked: u64,
    pub counterexamples: Vec<AxiomVCounterexample<T>>,
}

impl<T: Int> AxiomVReport<T> {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks, for `x` in `[1, x_range]`, the three implications obtained by putting the
/// convergent `d_i` (slope below phi) or `u_i` (slope above phi) in place of `phi`:
///
/// ```text
/// below:  f(x) = s x + k  =>  k/(d_i - s) <= x < (k+1)/(d_i - s)
///         f(x) > s x + k  =>  x >= (k+1)/(d_i - s)
///         f(x) < s x + k  =>  x <  k/(d_i - s)
/// above:  f(x) = s x + k  =>  (k+1)/(u_i - s) < x <= k/(u_i - s)
///         f(x) > s x + k  =>  x <= (k+1)/(u_i - s)
///         f(x) < s x + k  =>  x >  k/(u_i - s)
/// ```
///
/// Requires `i >= j + 1` for the bracket index `j` of the slope.
pub fn axiom_v_check<T: Int>(slope: &Rational<T>, k: &T, i: usize, x_range: &T) -> Result<AxiomVReport<T>> {
    let bracket = locate_slope(slope)?;
    if i < bracket.index + 1 {
        return Err(Error::IndexTooSmall { index: i, min: bracket.index + 1 });
    }
    let convergent = match bracket.side {
        Side::Below => convergent_d::<T>(i),
        Side::Above => convergent_u::<T>(i),
    };
    let gap = convergent.clone() - slope.clone();
    let lower = Rational::from_integer(k.clone()) / gap.clone();
    let upper = Rational::from_integer(k.clone() + T::one()) / gap;
    let constraint = |rel| LinearConstraint { relation: rel, slope: slope.clone(), offset: k.clone() };
    let (eq, lt, gt) = (constraint(Relation::Equal), constraint(Relation::Less), constraint(Relation::Greater));

    let mut counterexamples = Vec::new();
    let mut checked = 0u64;
    let mut x = T::one();
    while &x <= x_range {
        let xr = Rational::from_integer(x.clone());
        let failed = match bracket.side {
            Side::Below => {
                if eq.holds(&x) {
                    (!(lower <= xr && xr < upper)).then_some(Relation::Equal)
                } else if gt.holds(&x) {
                    (xr < upper).then_some(Relation::Greater)
                } else {
                    (xr >= lower).then_some(Relation::Less)
                }
            }
            Side::Above => {
                if eq.holds(&x) {
                    (!(upper < xr && xr <= lower)).then_some(Relation::Equal)
                } else if gt.holds(&x) {
                    (xr > upper).then_some(Relation::Greater)
                } else {
                    debug_assert!(lt.holds(&x));
                    (xr <= lower).then_some(Relation::Less)
                }
            }
        };
        if let Some(relation) = failed {
            counterexamples.push(AxiomVCounterexample { relation, x: x.clone() });
        }
        checked += 1;
        x = x + T::one();
    }
    Ok(AxiomVReport { bracket, convergent, checked, counterexamples })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: i64, n: i64) -> Rational<i64> {
        Rational::new(m, n)
    }

    fn lc(rel: Relation, m: i64, n: i64, k: i64) -> LinearConstraint<i64> {
        LinearConstraint::from_parts(rel, m, n, k).unwrap()
    }

    #[test]
    fn convergent_examples() {
        assert_eq!(convergent_d::<i64>(0), r(1, 1));
        assert_eq!(convergent_d::<i64>(1), r(3, 2));
        assert_eq!(convergent_d::<i64>(2), r(8, 5));
        assert_eq!(convergent_u::<i64>(0), r(2, 1));
        assert_eq!(convergent_u::<i64>(1), r(5, 3));
        assert_eq!(convergent_u::<i64>(2), r(13, 8));
    }

    #[test]
    fn convergents_bracket_phi() {
        for i in 0..30 {
            let d = convergent_d::<i128>(i);
            let u = convergent_u::<i128>(i);
            assert_eq!(compare_phi(d.numer(), d.denom()).unwrap(), Ordering::Less);
            assert_eq!(compare_phi(u.numer(), u.denom()).unwrap(), Ordering::Greater);
            assert!(convergent_d::<i128>(i + 1) > d);
            assert!(convergent_u::<i128>(i + 1) < u);
        }
    }

    #[test]
    fn locate_examples() {
        assert_eq!(locate_slope(&r(3, 2)).unwrap(), Bracket { side: Side::Below, index: 1 });
        assert_eq!(locate_slope(&r(2, 1)).unwrap(), Bracket { side: Side::Above, index: 0 });
        assert_eq!(locate_slope(&r(1, 1)).unwrap(), Bracket { side: Side::Below, index: 0 });
        assert_eq!(locate_slope(&r(0, 1)).unwrap(), Bracket { side: Side::Below, index: 0 });
        assert_eq!(locate_slope(&r(7, 1)).unwrap(), Bracket { side: Side::Above, index: 0 });
        assert_eq!(locate_slope(&r(13, 8)).unwrap(), Bracket { side: Side::Above, index: 2 });
        assert_eq!(locate_slope(&r(8, 5)).unwrap(), Bracket { side: Side::Below, index: 2 });
        assert!(locate_slope(&r(-1, 2)).is_err());
    }

    #[test]
    fn window_examples() {
        let w = solution_window(&lc(Relation::Equal, 1, 1, 1)).unwrap();
        assert_eq!(w.shape(), WindowShape::FiniteInterval { lo: 2, hi: 3 });
        let w = solution_window(&lc(Relation::Equal, 2, 1, -1)).unwrap();
        assert_eq!(w.shape(), WindowShape::FiniteInterval { lo: 1, hi: 2 });
        let w = solution_window(&lc(Relation::Greater, 1, 1, 1)).unwrap();
        assert_eq!(w.shape(), WindowShape::HalfLineUp { lo: 4 });
        let w = solution_window(&lc(Relation::Equal, 1, 1, 100)).unwrap();
        assert_eq!(w.shape(), WindowShape::FiniteInterval { lo: 162, hi: 163 });
        let w = solution_window(&lc(Relation::Equal, 2, 1, 100)).unwrap();
        assert_eq!(w.shape(), WindowShape::Empty);
        assert!(LinearConstraint::from_parts(Relation::Less, 1i64, -2, 0).is_err());
        assert!(LinearConstraint::from_parts(Relation::Less, -1i64, 2, 0).is_err());
    }

    #[test]
    fn window_matches_scan_on_grid() {
        let slopes = [(0, 1), (1, 1), (3, 2), (8, 5), (5, 3), (2, 1), (13, 8), (1, 3), (7, 4), (21, 13)];
        for (m, n) in slopes {
            for k in -8..=8 {
                for rel in Relation::ALL {
                    let c = lc(rel, m, n, k);
                    let w = solution_window(&c).unwrap();
                    for x in 1..=3000 {
                        assert_eq!(w.contains(&x), c.holds(&x), "{c} x={x} window={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_integer_slope_windows_split_by_class() {
        // f(x) = 3x/2 + k forces x even
        let w = solution_window(&lc(Relation::Equal, 3, 2, 0)).unwrap();
        assert_eq!(w.shape(), WindowShape::Union);
        let members: Vec<i64> = (1..100).filter(|x| w.contains(x)).collect();
        assert_eq!(members, vec![2, 4, 6, 8]);
        // f(x) > 3x/2 first holds at x = 5 (f(5) = 8 > 7.5)
        let w = solution_window(&lc(Relation::Greater, 3, 2, 0)).unwrap();
        assert_eq!(w.min(), Some(5));
    }

    #[test]
    fn trichotomy() {
        for (m, n) in [(0, 1), (3, 2), (5, 3), (13, 8)] {
            for k in -5..=5 {
                let ws: Vec<_> = Relation::ALL.iter().map(|&rel| solution_window(&lc(rel, m, n, k)).unwrap()).collect();
                for x in 1..=2000 {
                    assert_eq!(ws.iter().filter(|w| w.contains(&x)).count(), 1);
                }
            }
        }
    }

    #[test]
    fn equality_endpoints_are_tight() {
        for k in -8..=8 {
            for (m, n) in [(0, 1), (1, 1), (2, 1), (3, 1)] {
                let c = lc(Relation::Equal, m, n, k);
                if let WindowShape::FiniteInterval { lo, hi } = solution_window(&c).unwrap().shape() {
                    assert!(c.holds(&lo) && c.holds(&hi));
                    assert!(lo == 1 || !c.holds(&(lo - 1)));
                    assert!(!c.holds(&(hi + 1)));
                }
            }
        }
    }

    #[test]
    fn intersect_windows() {
        let a = solution_window(&lc(Relation::Greater, 1, 1, 1)).unwrap();
        let b = solution_window(&lc(Relation::Less, 2, 1, 0)).unwrap();
        let both = a.intersect(&b);
        for x in 1..500 {
            assert_eq!(both.contains(&x), a.contains(&x) && b.contains(&x));
        }
        let evens = WindowSet {
            pieces: vec![WindowPiece::normalized(Congruence::new(2, 0).unwrap(), 1, None).unwrap()],
        };
        let w = solution_window(&lc(Relation::Equal, 1, 1, 1)).unwrap().intersect(&evens);
        assert_eq!(w.min(), Some(2));
        assert!(!w.contains(&3));
    }

    #[test]
    fn axiom_v_examples() {
        let rep = axiom_v_check(&r(1, 1), &1, 1, &1000).unwrap();
        assert!(rep.holds(), "{:?}", rep.counterexamples);
        assert_eq!(rep.checked, 1000);
        // f(1) = 1 < 3/2 while 1 >= 0/(d_2 - 3/2) = 0
        let rep = axiom_v_check(&r(3, 2), &0, 2, &1000).unwrap();
        assert_eq!(rep.counterexamples[0], AxiomVCounterexample { relation: Relation::Less, x: 1 });
        // f(5) = 8 > 7.5 while 5 < 1/(8/5 - 3/2) = 10
        assert!(rep.counterexamples.contains(&AxiomVCounterexample { relation: Relation::Greater, x: 5 }));
        // f(13) = 21 = 13 + 8 while 8/(d_1 - 1) = 16 > 13
        let rep = axiom_v_check(&r(1, 1), &8, 1, &1000).unwrap();
        assert!(rep.counterexamples.contains(&AxiomVCounterexample { relation: Relation::Equal, x: 13 }));
        assert!(matches!(axiom_v_check(&r(3, 2), &0, 1, &10), Err(Error::IndexTooSmall { .. })));
    }
}

//! Congruence systems over `x` and `f(x)`.
//!
//! The central question is whether
//!
//! ```text
//! x    = m  (mod n)
//! f(x) = m' (mod n')
//! a < x < b
//! ```
//!
//! has an integer solution. Every witness returned by this module has been
//! re-checked with [`f_floor`] before it leaves the function.

use std::fmt;

use crate::golden::{f_floor, f_inverse};
use crate::numeration::{c, fib, fib_residues, pisano, zeckendorf, FibIndex, FibWordBit};
use crate::{Error, Int, Result};

/// `x = residue (mod modulus)` with `0 <= residue < modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence<T> {
    modulus: T,
    residue: T,
}

impl<T: Int> Congruence<T> {
    /// Builds a congruence, reducing `residue` into `[0, modulus)`.
    pub fn new(modulus: T, residue: T) -> Result<Self> {
        if !modulus.is_positive() {
            return Err(Error::not_positive("modulus", modulus));
        }
        let residue = residue.mod_floor(&modulus);
        Ok(Congruence { modulus, residue })
    }

    /// The congruence every integer satisfies.
    pub fn trivial() -> Self {
        Congruence { modulus: T::one(), residue: T::zero() }
    }

    pub fn modulus(&self) -> &T {
        &self.modulus
    }

    pub fn residue(&self) -> &T {
        &self.residue
    }

    pub fn holds(&self, v: &T) -> bool {
        v.mod_floor(&self.modulus) == self.residue
    }

    /// Smallest member `>= lo`.
    pub fn first_at_least(&self, lo: &T) -> T {
        let shift = (self.residue.clone() - lo.clone()).mod_floor(&self.modulus);
        lo.clone() + shift
    }

    /// Largest member `<= hi`.
    pub fn last_at_most(&self, hi: &T) -> T {
        let shift = (hi.clone() - self.residue.clone()).mod_floor(&self.modulus);
        hi.clone() - shift
    }
}

impl<T: Int> fmt::Display for Congruence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "= {} (mod {})", self.residue, self.modulus)
    }
}

/// Congruences on `x` and `f(x)` plus an exclusive window `lower < x < upper`;
/// `None` stands for an infinite bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceSystem<T> {
    pub on_x: Congruence<T>,
    pub on_fx: Congruence<T>,
    pub lower: Option<T>,
    pub upper: Option<T>,
}

impl<T: Int> CongruenceSystem<T> {
    pub fn new(on_x: Congruence<T>, on_fx: Congruence<T>, lower: Option<T>, upper: Option<T>) -> Result<Self> {
        if let (Some(a), Some(b)) = (&lower, &upper) {
            if a >= b {
                return Err(Error::Domain(format!("empty window: need {a} < {b}")));
            }
        }
        Ok(CongruenceSystem { on_x, on_fx, lower, upper })
    }

    pub fn unbounded(on_x: Congruence<T>, on_fx: Congruence<T>) -> Self {
        CongruenceSystem { on_x, on_fx, lower: None, upper: None }
    }

    pub fn is_satisfied_by(&self, x: &T) -> bool {
        self.lower.as_ref().map_or(true, |a| a < x)
            && self.upper.as_ref().map_or(true, |b| x < b)
            && self.on_x.holds(x)
            && self.on_fx.holds(&f_floor(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolveOutcome<T> {
    Witness(T),
    NoSolution,
    /// The enumeration cap ran out before the question was settled.
    Unknown { cap: u64 },
}

impl<T> SolveOutcome<T> {
    pub fn witness(&self) -> Option<&T> {
        match self {
            SolveOutcome::Witness(x) => Some(x),
            _ => None,
        }
    }
}

/// Which strategy produced a [`solve_system`] answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolvePath {
    /// Fibonacci-jump construction.
    Constructive,
    /// Residue-class enumeration after the construction found no usable index.
    Fallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of candidates any enumeration may visit.
    pub enumeration_cap: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { enumeration_cap: 10_000_000 }
    }
}

/// Merges congruences into one modulo the lcm, or `None` when inconsistent.
/// An empty list yields the trivial congruence.
pub fn crt_combine<T: Int>(cs: &[Congruence<T>]) -> Option<Congruence<T>> {
    let mut acc = Congruence::trivial();
    for c in cs {
        acc = crt_pair(&acc, c)?;
    }
    Some(acc)
}

fn crt_pair<T: Int>(a: &Congruence<T>, b: &Congruence<T>) -> Option<Congruence<T>> {
    let egcd = a.modulus.extended_gcd(&b.modulus);
    let g = egcd.gcd;
    let diff = b.residue.clone() - a.residue.clone();
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let step = b.modulus.clone() / g.clone();
    let t = (diff / g * egcd.x).mod_floor(&step);
    let modulus = a.modulus.clone() * step;
    let residue = a.residue.clone() + a.modulus.clone() * t;
    Congruence::new(modulus, residue).ok()
}

/// Some `c >= 1` with `f(c) = m (mod n)`.
///
/// Scans the residue class `m, m + n, ...` for a value of `f` (a 1 in the
/// Fibonacci word) and inverts it; past `m + n (2 pisano(n) + 2)` it falls back to
/// scanning `c = 1, 2, ...` directly.
pub fn solve_image<T: Int>(n: &T, m: &T, cfg: &SolverConfig) -> Result<T> {
    let target = Congruence::new(n.clone(), m.clone())?;
    let n = target.modulus().clone();
    let m = target.residue().clone();
    let period = T::from_usize(pisano(&n)?).expect("pisano period fits");
    let limit = m.clone() + n.clone() * (T::from_u8(2).unwrap() * period + T::from_u8(2).unwrap());

    let mut y = target.first_at_least(&T::one());
    let mut steps = 0u64;
    while y <= limit && steps < cfg.enumeration_cap {
        if c(&y)? == FibWordBit::One {
            let x = f_inverse(&y)?.expect("c(y) = 1 has a preimage");
            if target.holds(&f_floor(&x)) {
                return Ok(x);
            }
        }
        y = y + n.clone();
        steps += 1;
    }

    let mut x = T::one();
    for _ in 0..cfg.enumeration_cap {
        if target.holds(&f_floor(&x)) {
            return Ok(x);
        }
        x = x + T::one();
    }
    Err(Error::CapExceeded { cap: cfg.enumeration_cap })
}

/// Even `j > min_index` with `fib(j) = 0` and `fib(j + 1) = 1 (mod modulus)`,
/// searched up to `min_index + 4 pisano(modulus) + 4`.
///
/// Such a `j` satisfies `j + 1 = 0 (mod pisano(modulus))`, so it can only exist
/// when the period is odd, i.e. for moduli 1 and 2.
pub fn find_period_index<T: Int>(modulus: &T, min_index: FibIndex) -> Result<FibIndex> {
    let period = pisano(modulus)?;
    let bound = min_index + 4 * period + 4;
    let residues = fib_residues(modulus, bound + 2);
    let one = T::one().mod_floor(modulus);
    (min_index + 1..=bound)
        .filter(|j| j % 2 == 0)
        .find(|&j| residues[j].is_zero() && residues[j + 1] == one)
        .ok_or(Error::NotFoundWithinBound { bound })
}

fn top_index<T: Int>(x: &T) -> FibIndex {
    if x.is_positive() {
        zeckendorf(x).map(|r| r.largest()).unwrap_or(0)
    } else {
        0
    }
}

/// Decides `x = m (mod n), f(x) = m' (mod n')` over the naturals.
pub fn solve_system<T: Int>(sys: &CongruenceSystem<T>, cfg: &SolverConfig) -> Result<SolveOutcome<T>> {
    solve_system_detailed(sys, cfg).map(|(out, _)| out)
}

/// [`solve_system`] that also reports which strategy answered.
pub fn solve_system_detailed<T: Int>(
    sys: &CongruenceSystem<T>,
    cfg: &SolverConfig,
) -> Result<(SolveOutcome<T>, SolvePath)> {
    if sys.lower.is_some() || sys.upper.is_some() {
        return Err(Error::Domain("solve_system expects an unbounded window".into()));
    }
    let n = sys.on_x.modulus();
    let nf = sys.on_fx.modulus();
    let joint = n.lcm(nf);

    // Adding fib(j) (j even, above every current index + 1, fib(j) = 0 mod lcm)
    // keeps x mod n and raises f(x) by fib(j + 1) = 1 mod n'.
    let mut x = sys.on_x.residue().clone();
    let mut constructive = true;
    let mut additions = T::zero();
    loop {
        if sys.on_fx.holds(&f_floor(&x)) {
            break;
        }
        if &additions >= nf {
            constructive = false;
            break;
        }
        let min_index = if x.is_positive() { top_index(&x) + 1 } else { 0 };
        match find_period_index(&joint, min_index) {
            Ok(j) => {
                x = x + fib::<T>(j);
                additions = additions + T::one();
            }
            Err(_) => {
                constructive = false;
                break;
            }
        }
    }
    if constructive && sys.is_satisfied_by(&x) {
        return Ok((SolveOutcome::Witness(x), SolvePath::Constructive));
    }

    let mut x = sys.on_x.residue().clone();
    for _ in 0..cfg.enumeration_cap {
        if sys.on_fx.holds(&f_floor(&x)) {
            debug_assert!(sys.is_satisfied_by(&x));
            return Ok((SolveOutcome::Witness(x), SolvePath::Fallback));
        }
        x = x + n.clone();
    }
    Ok((SolveOutcome::Unknown { cap: cfg.enumeration_cap }, SolvePath::Fallback))
}

/// Decides the system on its window `lower < x < upper` over the integers.
///
/// Finite windows are enumerated through the residue class of `x` (exact up to the
/// cap). A window `(a, +inf)` takes the unbounded witness and, when it is too small,
/// pumps it above `a`; for `x <= 0` the value `f(x) = 0` is used directly.
pub fn solve_system_bounded<T: Int>(sys: &CongruenceSystem<T>, cfg: &SolverConfig) -> SolveOutcome<T> {
    if sys.lower.is_none() && sys.upper.is_none() {
        return solve_system(sys, cfg).unwrap_or(SolveOutcome::Unknown { cap: cfg.enumeration_cap });
    }
    let class = &sys.on_x;

    // x <= 0: f(x) = 0, so only the x-congruence and the window matter.
    if sys.on_fx.holds(&T::zero()) {
        let hi = match &sys.upper {
            Some(b) => (b.clone() - T::one()).min(T::zero()),
            None => T::zero(),
        };
        let candidate = match &sys.lower {
            Some(a) => Some(class.first_at_least(&(a.clone() + T::one()))).filter(|x| x <= &hi),
            None => Some(class.last_at_most(&hi)),
        };
        if let Some(x) = candidate {
            debug_assert!(sys.is_satisfied_by(&x));
            return SolveOutcome::Witness(x);
        }
    }

    let pos_lo = match &sys.lower {
        Some(a) => (a.clone() + T::one()).max(T::one()),
        None => T::one(),
    };
    match &sys.upper {
        Some(b) => {
            let mut x = class.first_at_least(&pos_lo);
            let mut steps = 0u64;
            while &x < b {
                if steps >= cfg.enumeration_cap {
                    return SolveOutcome::Unknown { cap: cfg.enumeration_cap };
                }
                if sys.on_fx.holds(&f_floor(&x)) {
                    return SolveOutcome::Witness(x);
                }
                x = x + class.modulus().clone();
                steps += 1;
            }
            SolveOutcome::NoSolution
        }
        None => {
            let a = sys.lower.clone().expect("lower bound present");
            let base = CongruenceSystem::unbounded(sys.on_x.clone(), sys.on_fx.clone());
            match solve_system(&base, cfg) {
                Ok(SolveOutcome::Witness(w)) if w > a => SolveOutcome::Witness(w),
                Ok(SolveOutcome::Witness(w)) => match pump_above(&base, w, &a) {
                    Some(x) => SolveOutcome::Witness(x),
                    None => scan_up(sys, &pos_lo, cfg),
                },
                _ => scan_up(sys, &pos_lo, cfg),
            }
        }
    }
}

fn scan_up<T: Int>(sys: &CongruenceSystem<T>, from: &T, cfg: &SolverConfig) -> SolveOutcome<T> {
    let mut x = sys.on_x.first_at_least(from);
    for _ in 0..cfg.enumeration_cap {
        if sys.on_fx.holds(&f_floor(&x)) {
            return SolveOutcome::Witness(x);
        }
        x = x + sys.on_x.modulus().clone();
    }
    SolveOutcome::Unknown { cap: cfg.enumeration_cap }
}

/// Adds `n'` fresh even period indices to a witness so it exceeds `a`; each
/// addition keeps `x mod n` and adds 1 to `f(x) mod n'`, so `n'` of them keep both.
fn pump_above<T: Int>(sys: &CongruenceSystem<T>, witness: T, a: &T) -> Option<T> {
    let joint = sys.on_x.modulus().lcm(sys.on_fx.modulus());
    let rounds = sys.on_fx.modulus().to_usize()?;
    let mut x = witness;
    let gap = a.clone() - x.clone();
    let mut min_index = if x.is_positive() { top_index(&x) + 1 } else { 0 };
    for round in 0..rounds {
        let mut j = find_period_index(&joint, min_index).ok()?;
        if round == 0 {
            while fib::<T>(j) <= gap {
                j = find_period_index(&joint, j).ok()?;
            }
        }
        x = x + fib::<T>(j);
        min_index = j + 1;
    }
    let verified = CongruenceSystem {
        lower: Some(a.clone()),
        ..sys.clone()
    };
    verified.is_satisfied_by(&x).then_some(x)
}

//! Evaluation over the standard model `Z` with `f(x) = 0` for `x <= 0`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ast::{CmpOp, Formula, Term};
use crate::congruence::{solve_system_bounded, Congruence, CongruenceSystem, SolveOutcome, SolverConfig};
use crate::golden::f_floor;
use crate::{Big, Error, Result};

/// How much a verdict can be trusted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Holds in the standard model outright.
    Exact,
    /// Only established with quantifiers ranging over `[-B, B]`.
    Bounded(Big),
}

impl Basis {
    fn join(a: &Basis, b: &Basis) -> Basis {
        match (a, b) {
            (Basis::Exact, Basis::Exact) => Basis::Exact,
            (Basis::Bounded(x), Basis::Bounded(y)) => Basis::Bounded(x.clone().min(y.clone())),
            (Basis::Bounded(x), _) | (_, Basis::Bounded(x)) => Basis::Bounded(x.clone()),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Basis::Exact)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Exact => write!(f, "exact"),
            Basis::Bounded(b) => write!(f, "bounded({b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Decision {
    /// `witness` is set for existential sentences answered by exhibiting a value.
    True { witness: Option<Big>, basis: Basis },
    False { basis: Basis },
    Unknown { reason: String },
}

impl Decision {
    pub fn exact(b: bool) -> Self {
        if b {
            Decision::True { witness: None, basis: Basis::Exact }
        } else {
            Decision::False { basis: Basis::Exact }
        }
    }

    pub fn truth(&self) -> Option<bool> {
        match self {
            Decision::True { .. } => Some(true),
            Decision::False { .. } => Some(false),
            Decision::Unknown { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.basis().is_some_and(Basis::is_exact)
    }

    pub fn basis(&self) -> Option<&Basis> {
        match self {
            Decision::True { basis, .. } | Decision::False { basis } => Some(basis),
            Decision::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Big> {
        match self {
            Decision::True { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Decision::True { basis, .. } => Decision::False { basis },
            Decision::False { basis } => Decision::True { witness: None, basis },
            unknown => unknown,
        }
    }

    pub(crate) fn and(a: Decision, b: Decision) -> Decision {
        match (a, b) {
            (f @ Decision::False { basis: Basis::Exact }, _) | (_, f @ Decision::False { basis: Basis::Exact }) => f,
            (f @ Decision::False { .. }, _) | (_, f @ Decision::False { .. }) => f,
            (u @ Decision::Unknown { .. }, _) | (_, u @ Decision::Unknown { .. }) => u,
            (Decision::True { basis: x, .. }, Decision::True { basis: y, .. }) => {
                Decision::True { witness: None, basis: Basis::join(&x, &y) }
            }
        }
    }

    pub(crate) fn or(a: Decision, b: Decision) -> Decision {
        Decision::and(a.negate(), b.negate()).negate()
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::True { witness: Some(w), basis } => write!(f, "true ({basis}, witness {w})"),
            Decision::True { witness: None, basis } => write!(f, "true ({basis})"),
            Decision::False { basis } => write!(f, "false ({basis})"),
            Decision::Unknown { reason } => write!(f, "unknown ({reason})"),
        }
    }
}

pub type Assignment = HashMap<String, Big>;

struct Env<'a> {
    outer: &'a Assignment,
    stack: Vec<(&'a str, Big)>,
}

impl Env<'_> {
    fn lookup(&self, v: &str) -> Result<&Big> {
        self.stack
            .iter()
            .rev()
            .find(|(name, _)| *name == v)
            .map(|(_, val)| val)
            .or_else(|| self.outer.get(v))
            .ok_or_else(|| Error::Unbound(v.to_string()))
    }
}

pub fn eval_term(t: &Term, assignment: &Assignment) -> Result<Big> {
    term_value(t, &Env { outer: assignment, stack: Vec::new() })
}

fn term_value(t: &Term, env: &Env<'_>) -> Result<Big> {
    Ok(match t {
        Term::Var(v) => env.lookup(v)?.clone(),
        Term::Const(c) => c.clone(),
        Term::Add(a, b) => term_value(a, env)? + term_value(b, env)?,
        Term::Sub(a, b) => term_value(a, env)? - term_value(b, env)?,
        Term::Scale(k, a) => k * term_value(a, env)?,
        Term::F(a) => f_floor(&term_value(a, env)?),
    })
}

/// `P[n,n',m,m'](a, b)` in the standard model; `a >= b` is simply false.
pub fn ppred_holds(n: &Big, n2: &Big, m: &Big, m2: &Big, a: &Big, b: &Big, cfg: &SolverConfig) -> Result<Decision> {
    if a >= b {
        return Ok(Decision::exact(false));
    }
    let sys = CongruenceSystem::new(
        Congruence::new(n.clone(), m.clone())?,
        Congruence::new(n2.clone(), m2.clone())?,
        Some(a.clone()),
        Some(b.clone()),
    )?;
    Ok(match solve_system_bounded(&sys, cfg) {
        SolveOutcome::Witness(_) => Decision::exact(true),
        SolveOutcome::NoSolution => Decision::exact(false),
        SolveOutcome::Unknown { cap } => Decision::Unknown { reason: format!("enumeration cap {cap} reached") },
    })
}

/// Evaluates `formula` under `assignment`, letting quantifiers range over `[-bound, bound]`.
///
/// Quantifier-free parts are exact. An `exists` that finds a witness is exact (when its
/// body is); one that exhausts the range answers false tagged `Bounded(bound)`.
/// `forall` is the dual.
pub fn eval(formula: &Formula, assignment: &Assignment, bound: &Big) -> Result<Decision> {
    eval_with(formula, assignment, bound, &SolverConfig::default())
}

pub fn eval_with(formula: &Formula, assignment: &Assignment, bound: &Big, cfg: &SolverConfig) -> Result<Decision> {
    let mut env = Env { outer: assignment, stack: Vec::new() };
    go(formula, &mut env, bound, cfg)
}

/// `0, 1, -1, 2, -2, ..., bound, -bound`.
fn search_order(bound: &Big) -> impl Iterator<Item = Big> + '_ {
    let mut next = Some(Big::zero());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let following = if cur.is_positive() { -cur.clone() } else { -cur.clone() + Big::one() };
        if following.abs() <= *bound {
            next = Some(following);
        }
        Some(cur)
    })
}

fn go<'a>(p: &'a Formula, env: &mut Env<'a>, bound: &Big, cfg: &SolverConfig) -> Result<Decision> {
    Ok(match p {
        Formula::Cmp(a, op, b) => {
            let (a, b) = (term_value(a, env)?, term_value(b, env)?);
            Decision::exact(match op {
                CmpOp::Lt => a < b,
                CmpOp::Eq => a == b,
            })
        }
        Formula::Div(n, t) => Decision::exact(term_value(t, env)?.is_multiple_of(n)),
        Formula::PPred { n, n2, m, m2, lo, hi } => {
            ppred_holds(n, n2, m, m2, &term_value(lo, env)?, &term_value(hi, env)?, cfg)?
        }
        Formula::Not(a) => go(a, env, bound, cfg)?.negate(),
        Formula::And(a, b) => {
            let left = go(a, env, bound, cfg)?;
            if matches!(left, Decision::False { basis: Basis::Exact }) {
                return Ok(left);
            }
            Decision::and(left, go(b, env, bound, cfg)?)
        }
        Formula::Or(a, b) => {
            let left = go(a, env, bound, cfg)?;
            if matches!(left, Decision::True { basis: Basis::Exact, .. }) {
                return Ok(Decision::True { witness: None, basis: Basis::Exact });
            }
            Decision::or(left, go(b, env, bound, cfg)?)
        }
        Formula::Implies(a, b) => {
            let left = go(a, env, bound, cfg)?.negate();
            if matches!(left, Decision::True { basis: Basis::Exact, .. }) {
                return Ok(left);
            }
            Decision::or(left, go(b, env, bound, cfg)?)
        }
        Formula::Exists(v, body) => quantify(v, body, true, env, bound, cfg)?,
        Formula::Forall(v, body) => quantify(v, body, false, env, bound, cfg)?,
    })
}

fn quantify<'a>(
    v: &'a str,
    body: &'a Formula,
    existential: bool,
    env: &mut Env<'a>,
    bound: &Big,
    cfg: &SolverConfig,
) -> Result<Decision> {
    let mut unknown = None;
    for value in search_order(bound) {
        env.stack.push((v, value.clone()));
        let d = go(body, env, bound, cfg);
        env.stack.pop();
        match (d?, existential) {
            (Decision::True { basis, .. }, true) => return Ok(Decision::True { witness: Some(value), basis }),
            (Decision::False { basis }, false) => return Ok(Decision::False { basis }),
            (u @ Decision::Unknown { .. }, _) => {
                unknown.get_or_insert(u);
            }
            _ => {}
        }
    }
    if let Some(u) = unknown {
        return Ok(u);
    }
    let basis = Basis::Bounded(bound.clone());
    Ok(if existential { Decision::False { basis } } else { Decision::True { witness: None, basis } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse;

    fn run(src: &str, bound: i64) -> Decision {
        eval(&parse(src).unwrap(), &Assignment::new(), &Big::from(bound)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(run("f(-3) = 0", 10), Decision::exact(true));
        assert_eq!(run("f(7) = 11", 10), Decision::exact(true));
        assert_eq!(
            run("forall x. (0 < x -> x < f(x) + 1)", 1000),
            Decision::True { witness: None, basis: Basis::Bounded(Big::from(1000)) }
        );
    }

    #[test]
    fn quantifiers() {
        let d = run("exists x. (0 < x & f(x) = x + 1)", 100);
        assert_eq!(d, Decision::True { witness: Some(Big::from(2)), basis: Basis::Exact });
        assert_eq!(run("exists x. f(x) = 2", 100), Decision::False { basis: Basis::Bounded(Big::from(100)) });
        assert_eq!(run("forall x. f(x) < 5", 100), Decision::exact(false));
        // nested: x = f(y) or x = f(y) + y for every x on the range
        let d = run("forall x. (0 < x -> exists y. (x = f(y) | x = f(y) + y))", 30);
        assert_eq!(d.truth(), Some(true));
        assert!(!d.is_exact());
    }

    #[test]
    fn free_variables_come_from_the_assignment() {
        let p = parse("p3(x + 1) & P[2,3,0,1](0, y)").unwrap();
        let mut a = Assignment::new();
        a.insert("x".into(), Big::from(5));
        assert!(matches!(eval(&p, &a, &Big::from(1)), Err(Error::Unbound(v)) if v == "y"));
        a.insert("y".into(), Big::from(20));
        // f(10) = 16 = 1 (mod 3)
        assert_eq!(eval(&p, &a, &Big::from(1)).unwrap(), Decision::exact(true));
        a.insert("y".into(), Big::from(10));
        assert_eq!(eval(&p, &a, &Big::from(1)).unwrap(), Decision::exact(false));
    }

    #[test]
    fn search_order_is_symmetric() {
        let v: Vec<i64> = search_order(&Big::from(2)).map(|b| b.try_into().unwrap()).collect();
        assert_eq!(v, vec![0, 1, -1, 2, -2]);
        assert_eq!(search_order(&Big::zero()).count(), 1);
    }

    #[test]
    fn ppred_matches_enumeration() {
        let cfg = SolverConfig::default();
        for n in 1..=4i64 {
            for n2 in 1..=4i64 {
                for m in 0..n {
                    for m2 in 0..n2 {
                        for (a, b) in [(-5i64, 3i64), (0, 20), (3, 4), (10, 9), (-30, -2), (7, 60)] {
                            let brute = (a + 1..b).any(|x| {
                                x.mod_floor(&n) == m && f_floor(&x).mod_floor(&n2) == m2
                            });
                            let got = ppred_holds(
                                &n.into(), &n2.into(), &m.into(), &m2.into(), &a.into(), &b.into(), &cfg,
                            )
                            .unwrap();
                            assert_eq!(got, Decision::exact(brute), "{n} {n2} {m} {m2} ({a},{b})");
                        }
                    }
                }
            }
        }
    }
}

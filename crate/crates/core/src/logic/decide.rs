//! Sentence decision: exact where the normal-form fragment applies, bounded
//! evaluation elsewhere, with the soundness class carried by every answer.

use num_traits::One;

use super::ast::{CmpOp, Formula, Term};
use super::eval::{eval_with, Assignment, Decision};
use super::normal_form::{decide_existential_nf_with, to_normal_form};
use crate::congruence::SolverConfig;
use crate::Big;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideConfig {
    /// Quantifier range `[-bound, bound]` for the bounded fallback.
    pub bound: Big,
    pub solver: SolverConfig,
    /// Largest disjunctive normal form expanded before giving up on the exact route.
    pub max_disjuncts: usize,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig { bound: Big::from(10_000), solver: SolverConfig::default(), max_disjuncts: 4096 }
    }
}

impl DecideConfig {
    pub fn with_bound(bound: Big) -> Self {
        DecideConfig { bound, ..Self::default() }
    }
}

pub fn decide(formula: &Formula, bound: &Big) -> Decision {
    decide_with(formula, &DecideConfig::with_bound(bound.clone()))
}

pub fn decide_with(formula: &Formula, cfg: &DecideConfig) -> Decision {
    let free = formula.free_vars();
    if !free.is_empty() {
        let names: Vec<_> = free.into_iter().collect();
        return Decision::Unknown { reason: format!("not a sentence: free {}", names.join(", ")) };
    }
    node(formula, cfg)
}

fn node(p: &Formula, cfg: &DecideConfig) -> Decision {
    if p.is_quantifier_free() {
        return bounded(p, cfg);
    }
    match p {
        Formula::Not(a) => node(a, cfg).negate(),
        Formula::And(a, b) => {
            let left = node(a, cfg);
            if left.truth() == Some(false) && left.is_exact() {
                return left;
            }
            Decision::and(left, node(b, cfg))
        }
        Formula::Or(a, b) => {
            let left = node(a, cfg);
            if left.truth() == Some(true) && left.is_exact() {
                return Decision::exact(true);
            }
            Decision::or(left, node(b, cfg))
        }
        Formula::Implies(a, b) => node(&Formula::or(Formula::not((**a).clone()), (**b).clone()), cfg),
        Formula::Exists(v, body) if body.is_quantifier_free() => {
            exists_exact(v, body, cfg).unwrap_or_else(|| bounded(p, cfg))
        }
        Formula::Forall(v, body) if body.is_quantifier_free() => {
            let negated = Formula::not((**body).clone());
            match exists_exact(v, &negated, cfg) {
                Some(d) => d.negate(),
                None => bounded(p, cfg),
            }
        }
        _ => bounded(p, cfg),
    }
}

fn bounded(p: &Formula, cfg: &DecideConfig) -> Decision {
    eval_with(p, &Assignment::new(), &cfg.bound, &cfg.solver)
        .unwrap_or_else(|e| Decision::Unknown { reason: e.to_string() })
}

/// `exists v. body` through the normal-form decider, splitting `body` into
/// disjuncts when needed. `None` when some disjunct leaves the fragment.
fn exists_exact(v: &str, body: &Formula, cfg: &DecideConfig) -> Option<Decision> {
    if let Some(q) = to_normal_form(&Formula::exists(v, body.clone())) {
        return Some(decide_existential_nf_with(&q, &cfg.solver));
    }
    let disjuncts = dnf(body, true, cfg.max_disjuncts)?;
    let mut queries = Vec::with_capacity(disjuncts.len());
    for lits in disjuncts {
        let conj = lits.into_iter().reduce(Formula::and).unwrap_or_else(|| Formula::eq(Term::int(0), Term::int(0)));
        queries.push(to_normal_form(&Formula::exists(v, conj))?);
    }
    let mut acc = Decision::exact(false);
    for q in &queries {
        let d = decide_existential_nf_with(q, &cfg.solver);
        if d.truth() == Some(true) {
            return Some(d);
        }
        acc = Decision::or(acc, d);
    }
    Some(acc)
}

/// Disjunctive normal form with negations folded into the atoms:
/// `!(a < b)` is `b < a + 1`, `!(a = b)` is `a < b | b < a`, `!p_n(t)` is the
/// disjunction of `p_n(t - r)` for `0 < r < n`.
fn dnf(p: &Formula, positive: bool, cap: usize) -> Option<Vec<Vec<Formula>>> {
    let product = |l: Vec<Vec<Formula>>, r: Vec<Vec<Formula>>| -> Option<Vec<Vec<Formula>>> {
        if l.len().saturating_mul(r.len()) > cap {
            return None;
        }
        let mut out = Vec::with_capacity(l.len() * r.len());
        for a in &l {
            for b in &r {
                out.push(a.iter().chain(b).cloned().collect());
            }
        }
        Some(out)
    };
    let union = |mut l: Vec<Vec<Formula>>, r: Vec<Vec<Formula>>| -> Option<Vec<Vec<Formula>>> {
        l.extend(r);
        (l.len() <= cap).then_some(l)
    };
    match (p, positive) {
        (Formula::Not(a), _) => dnf(a, !positive, cap),
        (Formula::And(a, b), true) | (Formula::Or(a, b), false) => product(dnf(a, positive, cap)?, dnf(b, positive, cap)?),
        (Formula::Or(a, b), true) | (Formula::And(a, b), false) => union(dnf(a, positive, cap)?, dnf(b, positive, cap)?),
        (Formula::Implies(a, b), true) => union(dnf(a, false, cap)?, dnf(b, true, cap)?),
        (Formula::Implies(a, b), false) => product(dnf(a, true, cap)?, dnf(b, false, cap)?),
        (Formula::Cmp(..) | Formula::Div(..), true) => Some(vec![vec![p.clone()]]),
        (Formula::Cmp(a, CmpOp::Lt, b), false) => {
            Some(vec![vec![Formula::lt(b.clone(), Term::add(a.clone(), Term::int(1)))]])
        }
        (Formula::Cmp(a, CmpOp::Eq, b), false) => {
            Some(vec![vec![Formula::lt(a.clone(), b.clone())], vec![Formula::lt(b.clone(), a.clone())]])
        }
        (Formula::Div(n, t), false) => {
            if n > &Big::from(cap) {
                return None;
            }
            let mut out = Vec::new();
            let mut r = Big::one();
            while &r < n {
                out.push(vec![Formula::Div(n.clone(), Term::sub(t.clone(), Term::Const(r.clone())))]);
                r += 1;
            }
            // for n = 1 this is the empty disjunction: !p_1(t) is false
            Some(out)
        }
        (Formula::PPred { .. } | Formula::Exists(..) | Formula::Forall(..), _) => None,
    }
}

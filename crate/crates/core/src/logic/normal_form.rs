//! One-variable existential conjunctions of congruences on `x` and `f(x)`, order
//! bounds and linear comparisons of `f(x)` with `(m/n) x + k`, and their decision.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ast::{CmpOp, Formula, Term};
use super::eval::Decision;
use crate::congruence::{crt_combine, solve_system_bounded, Congruence, CongruenceSystem, SolveOutcome, SolverConfig};
use crate::golden::f_floor;
use crate::windows::{solution_window, LinearConstraint, Relation, WindowSet};
use crate::{Big, BigCongruence, BigLinearConstraint, BigRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormQuery {
    pub variable: String,
    pub x_congruences: Vec<BigCongruence>,
    pub fx_congruences: Vec<BigCongruence>,
    /// Exclusive; `None` is minus infinity.
    pub lower: Option<Big>,
    /// Exclusive; `None` is plus infinity.
    pub upper: Option<Big>,
    pub linear: Vec<BigLinearConstraint>,
}

impl NormalFormQuery {
    pub fn new(variable: &str) -> Self {
        NormalFormQuery {
            variable: variable.to_string(),
            x_congruences: Vec::new(),
            fx_congruences: Vec::new(),
            lower: None,
            upper: None,
            linear: Vec::new(),
        }
    }

    /// Whether `x` satisfies every conjunct.
    pub fn holds_at(&self, x: &Big) -> bool {
        let fx = f_floor(x);
        self.lower.as_ref().map_or(true, |a| a < x)
            && self.upper.as_ref().map_or(true, |b| x < b)
            && self.x_congruences.iter().all(|c| c.holds(x))
            && self.fx_congruences.iter().all(|c| c.holds(&fx))
            && self.linear.iter().all(|lc| lc.holds(x))
    }

    fn raise_lower(&mut self, a: Big) {
        self.lower = Some(self.lower.take().map_or(a.clone(), |cur| cur.max(a)));
    }

    fn lower_upper(&mut self, b: Big) {
        self.upper = Some(self.upper.take().map_or(b.clone(), |cur| cur.min(b)));
    }

    /// Records an unsatisfiable conjunct as the empty window `0 < x < 1`.
    fn make_infeasible(&mut self) {
        self.raise_lower(Big::zero());
        self.lower_upper(Big::one());
    }
}

impl fmt::Display for NormalFormQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.variable;
        let mut parts = Vec::new();
        for c in &self.x_congruences {
            parts.push(format!("{v} {c}"));
        }
        for c in &self.fx_congruences {
            parts.push(format!("f({v}) {c}"));
        }
        match (&self.lower, &self.upper) {
            (Some(a), Some(b)) => parts.push(format!("{a} < {v} < {b}")),
            (Some(a), None) => parts.push(format!("{a} < {v}")),
            (None, Some(b)) => parts.push(format!("{v} < {b}")),
            (None, None) => {}
        }
        for lc in &self.linear {
            parts.push(lc.to_string().replace('x', v));
        }
        if parts.is_empty() {
            parts.push("true".into());
        }
        write!(f, "exists {v}: {}", parts.join(", "))
    }
}

/// `a x + b f(x) + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Linear {
    a: Big,
    b: Big,
    c: Big,
}

impl Linear {
    fn constant(c: Big) -> Self {
        Linear { a: Big::zero(), b: Big::zero(), c }
    }

    fn combine(self, o: Linear, sign: i32) -> Self {
        let s = Big::from(sign);
        Linear { a: self.a + &s * o.a, b: self.b + &s * o.b, c: self.c + s * o.c }
    }

    fn scale(self, k: &Big) -> Self {
        Linear { a: k * self.a, b: k * self.b, c: k * self.c }
    }
}

fn linearize(t: &Term, var: &str) -> Option<Linear> {
    Some(match t {
        Term::Var(v) if v == var => Linear { a: Big::one(), b: Big::zero(), c: Big::zero() },
        Term::Var(_) => return None,
        Term::Const(c) => Linear::constant(c.clone()),
        Term::Add(l, r) => linearize(l, var)?.combine(linearize(r, var)?, 1),
        Term::Sub(l, r) => linearize(l, var)?.combine(linearize(r, var)?, -1),
        Term::Scale(k, inner) => linearize(inner, var)?.scale(k),
        Term::F(inner) => match &**inner {
            Term::Var(v) if v == var => Linear { a: Big::zero(), b: Big::one(), c: Big::zero() },
            // f of a compound term containing the variable is not linear
            other => {
                let value = linearize(other, var)?;
                if !value.a.is_zero() || !value.b.is_zero() {
                    return None;
                }
                Linear::constant(f_floor(&value.c))
            }
        },
    })
}

/// `a v + c = 0 (mod n)` as a congruence on `v`, or `None` when unsolvable.
fn solve_linear_congruence(a: &Big, c: &Big, n: &Big) -> Option<BigCongruence> {
    let a = a.mod_floor(n);
    let egcd = a.extended_gcd(n);
    let g = egcd.gcd;
    let target = (-c).mod_floor(n);
    if !target.is_multiple_of(&g) {
        return None;
    }
    let modulus = n / &g;
    let residue = (target / &g) * egcd.x;
    Congruence::new(modulus, residue).ok()
}

fn add_conjunct(q: &mut NormalFormQuery, p: &Formula) -> Option<()> {
    let var = q.variable.clone();
    match p {
        Formula::And(l, r) => {
            add_conjunct(q, l)?;
            add_conjunct(q, r)?;
        }
        Formula::Div(n, t) => {
            let lin = linearize(t, &var)?;
            let target = match (lin.a.is_zero(), lin.b.is_zero()) {
                (true, true) => {
                    if !lin.c.is_multiple_of(n) {
                        q.make_infeasible();
                    }
                    return Some(());
                }
                (false, true) => &mut q.x_congruences,
                (true, false) => &mut q.fx_congruences,
                (false, false) => return None,
            };
            let coeff = if lin.b.is_zero() { &lin.a } else { &lin.b };
            match solve_linear_congruence(coeff, &lin.c, n) {
                Some(c) => target.push(c),
                None => q.make_infeasible(),
            }
        }
        Formula::Cmp(s, op, t) => {
            let d = linearize(s, &var)?.combine(linearize(t, &var)?, -1);
            add_comparison(q, d, *op)?;
        }
        // !(s < t)  <=>  t < s + 1
        Formula::Not(inner) => match &**inner {
            Formula::Cmp(s, CmpOp::Lt, t) => {
                let d = linearize(t, &var)?.combine(linearize(s, &var)?, -1);
                let d = Linear { c: d.c - 1, ..d };
                add_comparison(q, d, CmpOp::Lt)?;
            }
            _ => return None,
        },
        _ => return None,
    }
    Some(())
}

/// Adds `d op 0`.
fn add_comparison(q: &mut NormalFormQuery, d: Linear, op: CmpOp) -> Option<()> {
    let Linear { a, b, c } = d;
    if b.is_zero() {
        if a.is_zero() {
            let ok = match op {
                CmpOp::Lt => c.is_negative(),
                CmpOp::Eq => c.is_zero(),
            };
            if !ok {
                q.make_infeasible();
            }
            return Some(());
        }
        let root = BigRational::new(-c, a.clone());
        match op {
            // a x < -c
            CmpOp::Lt if a.is_positive() => q.lower_upper(root.ceil().to_integer()),
            CmpOp::Lt => q.raise_lower(root.floor().to_integer()),
            CmpOp::Eq if root.is_integer() => {
                let v = root.to_integer();
                q.raise_lower(&v - 1);
                q.lower_upper(v + 1);
            }
            CmpOp::Eq => q.make_infeasible(),
        }
        return Some(());
    }
    // b f(x) + a x + c op 0 with b > 0 after flipping the sign
    let (a, b, c, relation) = match (b.is_positive(), op) {
        (true, CmpOp::Lt) => (a, b, c, Relation::Less),
        (false, CmpOp::Lt) => (-a, -b, -c, Relation::Greater),
        (true, CmpOp::Eq) => (a, b, c, Relation::Equal),
        (false, CmpOp::Eq) => (-a, -b, -c, Relation::Equal),
    };
    if !c.is_multiple_of(&b) {
        return None;
    }
    let offset = -c / &b;
    let slope = BigRational::new(-a, b);
    let lc = LinearConstraint::new(relation, slope, offset).ok()?;
    q.linear.push(lc);
    Some(())
}

/// Merges a congruence list into one entry (none when trivial); an inconsistent list
/// is left as is so the decider reports the contradiction.
fn merge(list: &mut Vec<BigCongruence>) {
    if let Some(c) = crt_combine(list) {
        list.clear();
        if !c.modulus().is_one() {
            list.push(c);
        }
    }
}

/// Recognizes `exists x. C1 & ... & Ck` where each `Ci` is a congruence on `x` or
/// `f(x)`, a constant bound on `x`, or a linear comparison of `f(x)` with `x`.
pub fn to_normal_form(formula: &Formula) -> Option<NormalFormQuery> {
    let Formula::Exists(var, body) = formula else {
        return None;
    };
    if !body.is_quantifier_free() || body.free_vars().iter().any(|v| v != var) {
        return None;
    }
    let mut q = NormalFormQuery::new(var);
    add_conjunct(&mut q, body)?;
    merge(&mut q.x_congruences);
    merge(&mut q.fx_congruences);
    Some(q)
}

/// Solutions `x <= 0`, where `f(x) = 0`: the largest one, if any.
fn nonpositive_witness(q: &NormalFormQuery, cx: &BigCongruence, cf: &BigCongruence) -> Option<Big> {
    if !cf.holds(&Big::zero()) {
        return None;
    }
    let mut lo: Option<Big> = q.lower.as_ref().map(|a| a + 1);
    let mut hi = q.upper.as_ref().map_or(Big::zero(), |b: &Big| (b - 1u32).min(Big::zero()));
    let raise = |lo: &mut Option<Big>, v: Big| *lo = Some(lo.take().map_or(v.clone(), |l| l.max(v)));
    for lc in &q.linear {
        // 0 rel m x + n k
        let (m, n) = (lc.slope.numer(), lc.slope.denom());
        let nk = n * &lc.offset;
        if m.is_zero() {
            if !lc.relation.holds(Big::zero().cmp(&nk)) {
                return None;
            }
            continue;
        }
        let root = BigRational::new(-nk, m.clone());
        match lc.relation {
            Relation::Less => raise(&mut lo, root.floor().to_integer() + 1),
            Relation::Greater => hi = hi.min(root.ceil().to_integer() - 1),
            Relation::Equal => {
                if !root.is_integer() {
                    return None;
                }
                let v = root.to_integer();
                raise(&mut lo, v.clone());
                hi = hi.min(v);
            }
        }
    }
    let x = cx.last_at_most(&hi);
    lo.map_or(true, |l| x >= l).then_some(x)
}

/// Decides a normal-form query exactly: the linear windows are intersected with the
/// order bounds and the merged congruence system is solved on every piece.
pub fn decide_existential_nf(q: &NormalFormQuery) -> Decision {
    decide_existential_nf_with(q, &SolverConfig::default())
}

pub fn decide_existential_nf_with(q: &NormalFormQuery, cfg: &SolverConfig) -> Decision {
    let (Some(cx), Some(cf)) = (crt_combine(&q.x_congruences), crt_combine(&q.fx_congruences)) else {
        return Decision::exact(false);
    };

    let mut window = WindowSet::interval(
        q.lower.as_ref().map_or(Big::one(), |a| a + 1),
        q.upper.as_ref().map(|b| b - 1),
    );
    for lc in &q.linear {
        match solution_window(lc) {
            Ok(w) => window = window.intersect(&w),
            Err(e) => return Decision::Unknown { reason: e.to_string() },
        }
    }

    let mut best: Option<Big> = None;
    let mut unknown = None;
    for piece in window.pieces() {
        let Some(class) = crt_combine(&[piece.class.clone(), cx.clone()]) else {
            continue;
        };
        let sys = CongruenceSystem {
            on_x: class,
            on_fx: cf.clone(),
            lower: Some(&piece.lo - 1),
            upper: piece.hi.as_ref().map(|h| h + 1),
        };
        match solve_system_bounded(&sys, cfg) {
            SolveOutcome::Witness(x) => {
                if best.as_ref().map_or(true, |b| &x < b) {
                    best = Some(x);
                }
            }
            SolveOutcome::NoSolution => {}
            SolveOutcome::Unknown { cap } => {
                unknown.get_or_insert(cap);
            }
        }
    }
    let witness = best.or_else(|| nonpositive_witness(q, &cx, &cf));
    match (witness, unknown) {
        (Some(x), _) if q.holds_at(&x) => Decision::True { witness: Some(x), basis: super::eval::Basis::Exact },
        (Some(x), _) => Decision::Unknown { reason: format!("candidate {x} failed verification") },
        (None, Some(cap)) => Decision::Unknown { reason: format!("enumeration cap {cap} reached") },
        (None, None) => Decision::exact(false),
    }
}

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use crate::Big;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Big),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    /// Multiplication by a literal; the language has no product of variables.
    Scale(Big, Box<Term>),
    F(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_string())
    }

    pub fn int(v: i64) -> Self {
        Term::Const(Big::from(v))
    }

    pub fn add(a: Term, b: Term) -> Self {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Self {
        Term::Sub(Box::new(a), Box::new(b))
    }

    pub fn scale(k: impl Into<Big>, t: Term) -> Self {
        Term::Scale(k.into(), Box::new(t))
    }

    pub fn f(t: Term) -> Self {
        Term::F(Box::new(t))
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Var(v) => {
                out.insert(v);
            }
            Term::Const(_) => {}
            Term::Add(a, b) | Term::Sub(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Scale(_, t) | Term::F(t) => t.collect_vars(out),
        }
    }

    pub fn is_ground(&self) -> bool {
        let mut vs = BTreeSet::new();
        self.collect_vars(&mut vs);
        vs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Eq,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Cmp(Term, CmpOp, Term),
    /// `p_n(t)`: `n` divides `t`.
    Div(Big, Term),
    /// `p_{n,n'}^{m,m'}(a, b)`: some `y` has `y = m (n)`, `f(y) = m' (n')`, `a < y < b`.
    PPred { n: Big, n2: Big, m: Big, m2: Big, lo: Term, hi: Term },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn lt(a: Term, b: Term) -> Self {
        Formula::Cmp(a, CmpOp::Lt, b)
    }

    pub fn eq(a: Term, b: Term) -> Self {
        Formula::Cmp(a, CmpOp::Eq, b)
    }

    /// `p_n(t)`; panics unless `n >= 1`.
    pub fn div(n: impl Into<Big>, t: Term) -> Self {
        let n = n.into();
        assert!(n.is_positive(), "p_n needs n >= 1");
        Formula::Div(n, t)
    }

    /// The predicate with residues reduced; panics unless both moduli are positive.
    pub fn ppred(n: impl Into<Big>, n2: impl Into<Big>, m: impl Into<Big>, m2: impl Into<Big>, lo: Term, hi: Term) -> Self {
        use num_integer::Integer;
        let (n, n2) = (n.into(), n2.into());
        assert!(n.is_positive() && n2.is_positive(), "moduli must be positive");
        let m = m.into().mod_floor(&n);
        let m2 = m2.into().mod_floor(&n2);
        Formula::PPred { n, n2, m, m2, lo, hi }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn exists(v: &str, body: Formula) -> Self {
        Formula::Exists(v.to_string(), Box::new(body))
    }

    pub fn forall(v: &str, body: Formula) -> Self {
        Formula::Forall(v.to_string(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        let mut terms = |ts: &[&'a Term], bound: &Vec<&'a str>| {
            for t in ts {
                let mut vs = BTreeSet::new();
                t.collect_vars(&mut vs);
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)).map(str::to_string));
            }
        };
        match self {
            Formula::Cmp(a, _, b) => terms(&[a, b], bound),
            Formula::Div(_, t) => terms(&[t], bound),
            Formula::PPred { lo, hi, .. } => terms(&[lo, hi], bound),
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                bound.push(v);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Cmp(..) | Formula::Div(..) | Formula::PPred { .. } => true,
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Exists(..) | Formula::Forall(..) => false,
        }
    }
}

// Printing. Every form printed here parses back to the same tree.

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Add(a, b) | Term::Sub(a, b) => {
                let op = if matches!(self, Term::Add(..)) { "+" } else { "-" };
                write!(f, "{a} {op} ")?;
                if matches!(**b, Term::Add(..) | Term::Sub(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            _ => fmt_factor(self, f),
        }
    }
}

fn fmt_factor(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Var(v) => write!(f, "{v}"),
        Term::Const(c) => write!(f, "{c}"),
        Term::Scale(k, inner) => {
            write!(f, "{k}*")?;
            fmt_factor(inner, f)
        }
        Term::F(inner) => write!(f, "f({inner})"),
        Term::Add(..) | Term::Sub(..) => write!(f, "({t})"),
    }
}

// Binding strength: implies 1, or 2, and 3, prefix/atoms 4.
fn level(p: &Formula) -> u8 {
    match p {
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

fn fmt_at(p: &Formula, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let quantified = matches!(p, Formula::Exists(..) | Formula::Forall(..));
    // a quantifier swallows everything to its right, so it is bracketed unless it
    // is printed at the loosest position
    if level(p) < min || (quantified && min > 0) {
        write!(f, "(")?;
        fmt_at(p, 0, f)?;
        return write!(f, ")");
    }
    match p {
        Formula::Cmp(a, op, b) => write!(f, "{a} {} {b}", op.symbol()),
        Formula::Div(n, t) => write!(f, "p{n}({t})"),
        Formula::PPred { n, n2, m, m2, lo, hi } => write!(f, "P[{n},{n2},{m},{m2}]({lo}, {hi})"),
        Formula::Not(a) => {
            write!(f, "!")?;
            fmt_at(a, 4, f)
        }
        Formula::And(a, b) => {
            fmt_at(a, 3, f)?;
            write!(f, " & ")?;
            fmt_at(b, 4, f)
        }
        Formula::Or(a, b) => {
            fmt_at(a, 2, f)?;
            write!(f, " | ")?;
            fmt_at(b, 3, f)
        }
        Formula::Implies(a, b) => {
            fmt_at(a, 2, f)?;
            write!(f, " -> ")?;
            fmt_at(b, 1, f)
        }
        Formula::Exists(v, body) => {
            write!(f, "exists {v}. ")?;
            fmt_at(body, 0, f)
        }
        Formula::Forall(v, body) => {
            write!(f, "forall {v}. ")?;
            fmt_at(body, 0, f)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_at(self, 0, f)
    }
}

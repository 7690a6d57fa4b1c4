//! Executable audit of the axioms of the theory on `[-N, N]`.

use std::fmt;

use num_integer::Integer;

use super::ast::{Formula, Term};
use super::eval::{eval, Assignment, Decision};
use crate::golden::{decompose, f_floor, f_inverse};
use crate::windows::axiom_v_check;
use crate::{Big, Error, Rational, Result};

/// Slopes `m/n` and offsets probed for the convergent implications.
pub const AXIOM_V_SLOPES: [(i64, i64); 7] = [(0, 1), (1, 1), (3, 2), (8, 5), (5, 3), (2, 1), (13, 8)];
pub const AXIOM_V_OFFSETS: std::ops::RangeInclusive<i64> = -8..=8;
/// Convergent indices `i = j + s` checked for each slope with bracket index `j`.
pub const AXIOM_V_SHIFTS: [usize; 2] = [1, 3];

const MAX_RANGE: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// Axiom label: `i` to `v`, or `remark` for the alternative f-axioms.
    pub axiom: &'static str,
    pub description: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl FamilyReport {
    fn new(axiom: &'static str, description: &'static str) -> Self {
        FamilyReport { axiom, description, checked: 0, failures: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub range: u64,
    pub families: Vec<FamilyReport>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    pub fn family(&self, axiom: &str) -> Option<&FamilyReport> {
        self.families.iter().find(|f| f.axiom == axiom)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "axiom audit on [-{0}, {0}]", self.range)?;
        for fam in &self.families {
            let verdict = if fam.passed() { "pass" } else { "FAIL" };
            write!(f, "  {:<6} {verdict}  {}/{} ok  {}", fam.axiom, fam.checked - fam.failures, fam.checked, fam.description)?;
            if let Some(first) = &fam.first_failure {
                write!(f, "  (first failure: {first})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn holds(p: &Formula, x: i64) -> bool {
    let mut a = Assignment::new();
    a.insert("x".into(), Big::from(x));
    matches!(eval(p, &a, &Big::from(0)), Ok(Decision::True { .. }))
}

fn f(x: i64) -> i64 {
    f_floor(&x)
}

/// Runs every axiom family on `[-n, n]`.
pub fn axiom_audit(n: u64) -> Result<AuditReport> {
    if n < 2 {
        return Err(Error::Domain(format!("audit range must be at least 2, got {n}")));
    }
    if n > MAX_RANGE {
        return Err(Error::Domain(format!("audit range must be at most {MAX_RANGE}, got {n}")));
    }
    let n = n as i64;
    let families = vec![presburger(n), minimality(n), partition(n), ppred(n), convergents(n)?, remark(n)];
    Ok(AuditReport { range: n as u64, families })
}

fn presburger(n: i64) -> FamilyReport {
    let mut fam = FamilyReport::new("i", "order discreteness and p_k residue exclusivity, k <= 6");
    let x = || Term::var("x");
    let succ = Formula::and(Formula::lt(x(), Term::add(x(), Term::int(1))), Formula::not(Formula::lt(x(), x())));
    let between: Vec<Formula> = (-1..=2)
        .map(|d| {
            let y = Term::add(x(), Term::int(d));
            Formula::not(Formula::and(Formula::lt(x(), y.clone()), Formula::lt(y, Term::add(x(), Term::int(1)))))
        })
        .collect();
    let residues: Vec<Vec<Formula>> = (1..=6i64)
        .map(|k| (0..k).map(|r| Formula::div(k, Term::sub(x(), Term::int(r)))).collect())
        .collect();
    for v in -n..=n {
        fam.check(holds(&succ, v), || format!("x < x + 1 at x = {v}"));
        for p in &between {
            fam.check(holds(p, v), || format!("{p} at x = {v}"));
        }
        for (k, row) in (1..).zip(&residues) {
            let hits: Vec<i64> = (0..k).filter(|&r| holds(&row[r as usize], v)).collect();
            fam.check(hits == [v.mod_floor(&k)], || format!("p_{k} residues of {v}: {hits:?}"));
        }
    }
    fam
}

fn minimality(n: i64) -> FamilyReport {
    let mut fam = FamilyReport::new("ii", "f = 0 on x <= 0, f(1) = 1, f(x) = min of positives not f(t), f(t)+t for t < x");
    for x in -n..=0 {
        fam.check(f(x) == 0, || format!("f({x}) = {}", f(x)));
    }
    fam.check(f(1) == 1, || format!("f(1) = {}", f(1)));
    // taken[v] marks v in {f(t), f(t) + t : 1 <= t < x}
    let mut taken = vec![false; (f(n) + n + 2) as usize];
    let mut least = 1usize;
    for x in 1..=n {
        while taken[least] {
            least += 1;
        }
        let fx = f(x);
        fam.check(fx == least as i64, || format!("f({x}) = {fx}, least free value {least}"));
        taken[fx as usize] = true;
        taken[(fx + x) as usize] = true;
    }
    fam
}

fn partition(n: i64) -> FamilyReport {
    let mut fam = FamilyReport::new("iii", "every x is f(y) or f(y) + y; exactly one of them for x >= 1");
    for x in -n..=0 {
        // y = x works on the nonpositive side
        fam.check(f(x) + x == x, || format!("no y with f(y) + y = {x}"));
    }
    let mut g_values = vec![false; n as usize + 1];
    let mut y = 1;
    while f(y) + y <= n {
        g_values[(f(y) + y) as usize] = true;
        y += 1;
    }
    for x in 1..=n {
        let in_f = f_inverse(&x).ok().flatten().is_some_and(|y| f(y) == x);
        let in_g = g_values[x as usize];
        let decomposed = decompose(&x).is_ok_and(|d| d.value() == x);
        fam.check(in_f != in_g && decomposed, || format!("x = {x}: in f-image {in_f}, in g-image {in_g}"));
    }
    fam
}

fn ppred(n: i64) -> FamilyReport {
    let mut fam = FamilyReport::new("iv", "P[k,k',m,m'](a,b) agrees with enumeration, k, k' <= 4");
    let fvals: Vec<i64> = (-n..=n).map(f).collect();
    let fv = |x: i64| fvals[(x + n) as usize];
    let span = 2 * n;
    let mut windows: Vec<(i64, i64)> = (0..12i64)
        .map(|t| {
            let a = -n + (t * 7919) % span;
            let width = 1 + (t * 104_729) % span.min(200);
            (a, (a + width).min(n))
        })
        .collect();
    windows.extend([(-n, n), (0, n), (n / 2, n / 2 + 1), (3, 2)]);
    for k in 1..=4i64 {
        for k2 in 1..=4i64 {
            for m in 0..k {
                for m2 in 0..k2 {
                    for &(a, b) in &windows {
                        let brute = (a + 1..b).any(|x| x.mod_floor(&k) == m && fv(x).mod_floor(&k2) == m2);
                        let p = Formula::ppred(k, k2, m, m2, Term::int(a), Term::int(b));
                        let got = eval(&p, &Assignment::new(), &Big::from(0));
                        fam.check(got == Ok(Decision::exact(brute)), || format!("{p}: enumeration says {brute}, eval {got:?}"));
                    }
                }
            }
        }
    }
    fam
}

fn convergents(n: i64) -> Result<FamilyReport> {
    let mut fam = FamilyReport::new("v", "convergent implications for f(x) <|=|> (m/n)x + y, i = j+1 and j+3");
    for (m, d) in AXIOM_V_SLOPES {
        let slope = Rational::new(m, d);
        let j = crate::windows::locate_slope(&slope)?.index;
        for k in AXIOM_V_OFFSETS {
            for s in AXIOM_V_SHIFTS {
                let rep = axiom_v_check(&slope, &k, j + s, &n)?;
                fam.checked += rep.checked;
                fam.failures += rep.counterexamples.len() as u64;
                if let (None, Some(c)) = (&fam.first_failure, rep.counterexamples.first()) {
                    fam.first_failure =
                        Some(format!("slope {slope}, y = {k}, i = {}: relation {} at x = {}", j + s, c.relation, c.x));
                }
            }
        }
    }
    Ok(fam)
}

fn remark(n: i64) -> FamilyReport {
    let mut fam = FamilyReport::new("remark", "f(f(x)) = f(x) + x - 1 and f(f(x) + x) = 2f(x) + x for x >= 1");
    for x in 1..=n {
        let fx = f(x);
        fam.check(f(fx) == fx + x - 1, || format!("f(f({x})) = {}", f(fx)));
        fam.check(f(fx + x) == 2 * fx + x, || format!("f(f({x}) + {x}) = {}", f(fx + x)));
    }
    fam
}

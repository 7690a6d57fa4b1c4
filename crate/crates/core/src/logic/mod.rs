//! Formula language over `(Z, +, -, <, f, p_n, p_{n,n'}^{m,m'}, 0, 1)`.
//!
//! [`parse`] reads the concrete syntax, [`eval`] evaluates in the standard model with
//! quantifiers over a finite range, [`to_normal_form`] and [`decide_existential_nf`]
//! handle the one-variable existential fragment exactly, and [`decide`] routes a
//! sentence to whichever of these applies. [`axiom_audit`] checks the axioms of the
//! theory on a finite range.

mod ast;
mod audit;
mod decide;
mod eval;
mod normal_form;
mod parser;

pub use ast::{CmpOp, Formula, Term};
pub use audit::{axiom_audit, AuditReport, FamilyReport, AXIOM_V_OFFSETS, AXIOM_V_SHIFTS, AXIOM_V_SLOPES};
pub use decide::{decide, decide_with, DecideConfig};
pub use eval::{eval, eval_term, eval_with, ppred_holds, Assignment, Basis, Decision};
pub use normal_form::{decide_existential_nf, decide_existential_nf_with, to_normal_form, NormalFormQuery};
pub use parser::{parse, parse_term, ParseError};

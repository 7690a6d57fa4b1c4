//! Command-line front end for `beatty`.
//!
//! Exit codes: 0 answered, 1 no solution / false, 2 unknown, 64 usage or parse error.

use std::process::ExitCode;
use std::time::Instant;

use beatty::congruence::{self, Congruence, CongruenceSystem, SolveOutcome, SolvePath, SolverConfig};
use beatty::logic::{self, Basis, Decision};
use beatty::numeration::{self, word_to_string};
use beatty::windows::{self, LinearConstraint, Relation, WindowShape};
use beatty::{golden, Big};
use clap::{Parser, Subcommand};

mod output;

use output::{Outcome, OutputRecord, Provenance};

const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "beatty", version, about = "Exact arithmetic with f(x) = floor(phi x)")]
struct Cli {
    /// Print one JSON object per invocation instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// floor(phi * x)
    F {
        #[arg(allow_negative_numbers = true, value_parser = big)]
        x: Big,
    },
    /// The x with f(x) = y, if any
    Inv {
        #[arg(allow_negative_numbers = true, value_parser = big)]
        y: Big,
    },
    /// Zeckendorf representation (fib(0) = fib(1) = 1)
    Zeck {
        #[arg(allow_negative_numbers = true, value_parser = big)]
        n: Big,
    },
    /// First `len` letters c_1 c_2 ... of the Fibonacci word
    Word { len: usize },
    /// The letter c_n
    C {
        #[arg(allow_negative_numbers = true, value_parser = big)]
        n: Big,
    },
    /// Pisano period of n
    Pisano {
        #[arg(allow_negative_numbers = true, value_parser = big)]
        n: Big,
    },
    /// Solve x = xm (mod xn), f(x) = fm (mod fn), lo < x < hi
    Solve {
        #[arg(long, value_parser = big)]
        xn: Big,
        #[arg(long, allow_negative_numbers = true, value_parser = big)]
        xm: Big,
        #[arg(long = "fn", value_parser = big)]
        fn_: Big,
        #[arg(long, allow_negative_numbers = true, value_parser = big)]
        fm: Big,
        #[arg(long, allow_negative_numbers = true, value_parser = big)]
        lo: Option<Big>,
        #[arg(long, allow_negative_numbers = true, value_parser = big)]
        hi: Option<Big>,
    },
    /// Integer solutions x >= 1 of f(x) <rel> (m/n) x + k
    Window {
        /// One of <, =, >
        rel: String,
        /// Slope as m/n (or an integer)
        slope: String,
        #[arg(allow_negative_numbers = true, value_parser = big)]
        k: Big,
    },
    /// Decide a sentence
    Decide {
        formula: String,
        /// Quantifier range [-B, B] for the bounded fallback
        #[arg(long, default_value = "10000", value_parser = big)]
        bound: Big,
    },
    /// Check the axioms on [-N, N]
    Audit { n: u64 },
}

fn big(s: &str) -> Result<Big, String> {
    s.trim().parse::<Big>().map_err(|_| format!("`{s}` is not a decimal integer"))
}

/// A failure that maps to the usage exit code.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = argv[1..].join(" ");
    let started = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            let record = OutputRecord::new(echo, &outcome, started.elapsed());
            if cli.json {
                println!("{}", record.to_json());
            } else {
                println!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit)
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cmd: &Command) -> Result<Outcome, UsageError> {
    Ok(match cmd {
        Command::F { x } => {
            let v = golden::f_floor(x);
            Outcome::answered(v.to_string(), [("value", v.to_string().into())])
        }
        Command::Inv { y } => match golden::f_inverse(y)? {
            Some(x) => Outcome::answered(x.to_string(), [("value", x.to_string().into())]),
            None => {
                let d = golden::decompose(y)?;
                Outcome::negative(
                    format!("none ({y} = f({0}) + {0})", d.witness),
                    [("value", serde_json::Value::Null), ("complement_witness", d.witness.to_string().into())],
                )
            }
        },
        Command::Zeck { n } => {
            let rep = numeration::zeckendorf(n)?;
            let terms: Vec<String> = rep.indices().iter().map(|&i| numeration::fib::<Big>(i).to_string()).collect();
            let mut text = rep.to_string();
            text.push_str(&format!("  ({})", terms.join(" + ")));
            Outcome::answered(
                text,
                [("indices", rep.indices().iter().map(ToString::to_string).collect::<Vec<_>>().into()), ("terms", terms.into())],
            )
        }
        Command::Word { len } => {
            let w = word_to_string(&numeration::fib_word_prefix(*len));
            Outcome::answered(w.clone(), [("word", w.into())])
        }
        Command::C { n } => {
            let bit = numeration::c(n)?.as_char().to_string();
            Outcome::answered(bit.clone(), [("value", bit.into())])
        }
        Command::Pisano { n } => {
            let p = numeration::pisano(n)?;
            Outcome::answered(p.to_string(), [("value", p.to_string().into())])
        }
        Command::Solve { xn, xm, fn_, fm, lo, hi } => solve(xn, xm, fn_, fm, lo, hi)?,
        Command::Window { rel, slope, k } => window(rel, slope, k)?,
        Command::Decide { formula, bound } => {
            let parsed = logic::parse(formula).map_err(|e| {
                let caret = format!("{}^", " ".repeat(e.offset));
                UsageError(format!("{e}\n  {formula}\n  {caret}"))
            })?;
            if bound.sign() == num_bigint::Sign::Minus {
                return Err(UsageError(format!("bound must be non-negative, got {bound}")));
            }
            decision(logic::decide(&parsed, bound))
        }
        Command::Audit { n } => {
            let rep = logic::axiom_audit(*n)?;
            let families: Vec<serde_json::Value> = rep
                .families
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "axiom": f.axiom,
                        "description": f.description,
                        "checked": f.checked.to_string(),
                        "failures": f.failures.to_string(),
                        "passed": f.passed(),
                        "first_failure": f.first_failure,
                    })
                })
                .collect();
            let text = rep.to_string().trim_end().to_string();
            let fields = [("passed", rep.passed().into()), ("families", families.into())];
            if rep.passed() {
                Outcome::answered(text, fields)
            } else {
                Outcome::negative(text, fields)
            }
        }
    })
}

fn solve(xn: &Big, xm: &Big, fn_: &Big, fm: &Big, lo: &Option<Big>, hi: &Option<Big>) -> Result<Outcome, UsageError> {
    let on_x = Congruence::new(xn.clone(), xm.clone())?;
    let on_fx = Congruence::new(fn_.clone(), fm.clone())?;
    let sys = CongruenceSystem::new(on_x, on_fx, lo.clone(), hi.clone())?;
    let cfg = SolverConfig::default();
    let (outcome, path) = if lo.is_none() && hi.is_none() {
        let (o, p) = congruence::solve_system_detailed(&sys, &cfg)?;
        (o, Some(p))
    } else {
        (congruence::solve_system_bounded(&sys, &cfg), None)
    };
    let path_field = path.map(|p| match p {
        SolvePath::Constructive => "constructive",
        SolvePath::Fallback => "fallback",
    });
    Ok(match outcome {
        SolveOutcome::Witness(x) => {
            let fx = golden::f_floor(&x);
            Outcome::answered(
                format!("witness {x} (f = {fx})"),
                [("witness", x.to_string().into()), ("f", fx.to_string().into()), ("path", path_field.into())],
            )
        }
        SolveOutcome::NoSolution => Outcome::negative("no solution".into(), [("witness", serde_json::Value::Null)]),
        SolveOutcome::Unknown { cap } => Outcome::unknown(
            format!("unknown (enumeration cap {cap} reached)"),
            [("cap", cap.to_string().into())],
        ),
    })
}

fn window(rel: &str, slope: &str, k: &Big) -> Result<Outcome, UsageError> {
    let relation = match rel {
        "<" | "lt" => Relation::Less,
        "=" | "eq" => Relation::Equal,
        ">" | "gt" => Relation::Greater,
        other => return Err(UsageError(format!("relation must be <, = or >, got `{other}`"))),
    };
    let (m, n) = match slope.split_once('/') {
        Some((m, n)) => (big(m)?, big(n)?),
        None => (big(slope)?, Big::from(1)),
    };
    let constraint = LinearConstraint::from_parts(relation, m, n, k.clone())?;
    let w = windows::solution_window(&constraint)?;
    let shape = match w.shape() {
        WindowShape::Empty => serde_json::json!({ "kind": "empty" }),
        WindowShape::FiniteInterval { lo, hi } => {
            serde_json::json!({ "kind": "interval", "lo": lo.to_string(), "hi": hi.to_string() })
        }
        WindowShape::HalfLineUp { lo } => serde_json::json!({ "kind": "half_line", "lo": lo.to_string() }),
        WindowShape::Union => serde_json::json!({ "kind": "union" }),
    };
    let pieces: Vec<serde_json::Value> = w
        .pieces()
        .iter()
        .map(|p| {
            serde_json::json!({
                "modulus": p.class.modulus().to_string(),
                "residue": p.class.residue().to_string(),
                "lo": p.lo.to_string(),
                "hi": p.hi.as_ref().map(ToString::to_string),
            })
        })
        .collect();
    let text = format!("{constraint}: {w}");
    let fields = [("shape", shape), ("pieces", pieces.into())];
    Ok(if w.is_empty() { Outcome::negative(text, fields) } else { Outcome::answered(text, fields) })
}

fn decision(d: Decision) -> Outcome {
    let provenance = match d.basis() {
        Some(Basis::Exact) => Provenance::Exact,
        None => Provenance::Unknown,
        Some(Basis::Bounded(b)) => Provenance::Bounded(b.clone()),
    };
    let text = d.to_string();
    let mut out = match &d {
        Decision::True { witness, .. } => Outcome::answered(
            text,
            [("truth", "true".into()), ("witness", witness.as_ref().map(ToString::to_string).into())],
        ),
        Decision::False { .. } => Outcome::negative(text, [("truth", "false".into())]),
        Decision::Unknown { reason } => {
            Outcome::unknown(text, [("truth", "unknown".into()), ("reason", reason.clone().into())])
        }
    };
    out.provenance = provenance;
    out
}

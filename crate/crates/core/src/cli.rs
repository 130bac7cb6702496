//! The `plval` command line.
//!
//! Exit codes: 0 success, 1 malformed input (files or arguments), 2 violated
//! precondition, 3 suite failure or evaluator disagreement. Setting
//! `PLVAL_COLOR=1` colours pass/fail markers.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::codec::{complex_to_string, decomposition_to_string, function_to_string, read_complex, read_function};
use crate::error::{Error, Result};
use crate::exact_math::{AffineFunctional, Point, Rational};
use crate::hats::decompose;
use crate::pl_calculus::{lattice_op, linear_combination, signed_parts, split_by_hyperplane, LatticeOp};
use crate::suites::{run_suite, Suite};
use crate::valuation::{alpha, alpha_plus, alpha_plus_recursive, alpha_recursive, ValuationReport};

#[derive(Parser, Debug)]
#[command(
    name = "plval",
    version,
    about = "Exact piecewise-linear functions and their Euler–Poincaré valuation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristic of a complex.
    Chi { complex: PathBuf },
    /// Valuation of a nonnegative function (of any function with --signed).
    Valuation {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = EvaluatorArg::Topological)]
        evaluator: EvaluatorArg,
        /// Evaluate α = α⁺(f⁺) − α⁺(f⁻) instead of α⁺.
        #[arg(long)]
        signed: bool,
    },
    /// Exact value of a function at a point.
    Eval {
        function: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Combine two functions.
    Combine {
        #[arg(long, value_enum)]
        op: OpArg,
        f: PathBuf,
        g: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Write f⁺ and f⁻ to BASE.plus.json and BASE.minus.json.
    Parts {
        function: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Hat decomposition over the function's own triangulation.
    Decompose { function: PathBuf },
    /// Supplement of the zero set of a nonnegative function.
    Supplement {
        function: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Split a complex along the hyperplane "g1,..,gn;c".
    Refine {
        complex: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Run a seeded property suite.
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EvaluatorArg {
    Topological,
    Recursive,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpArg {
    Meet,
    Join,
    Add,
    Sub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Axioms,
    Lemmas,
    Oracle,
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Style {
    color: bool,
}

impl Style {
    fn from_env() -> Self {
        Style {
            color: std::env::var("PLVAL_COLOR").is_ok_and(|v| v == "1"),
        }
    }

    fn paint(&self, text: &str) -> String {
        if !self.color {
            return text.to_string();
        }
        text.lines()
            .map(|l| {
                if let Some(rest) = l.strip_prefix("pass") {
                    format!("\x1b[32mpass\x1b[0m{rest}\n")
                } else if let Some(rest) = l.strip_prefix("FAIL") {
                    format!("\x1b[31mFAIL\x1b[0m{rest}\n")
                } else {
                    format!("{l}\n")
                }
            })
            .collect()
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let style = Style::from_env();
    match execute(cli.command, &style) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: if e.is_malformed_input() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, format!("{text}\n"))?;
    Ok(())
}

fn ok(stdout: String) -> Result<Outcome> {
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

fn execute(command: Command, style: &Style) -> Result<Outcome> {
    match command {
        Command::Chi { complex } => ok(format!("{}\n", read_complex(&complex)?.euler_characteristic())),
        Command::Valuation {
            function,
            evaluator,
            signed,
        } => {
            let f = read_function(&function)?;
            let topological = || if signed { alpha(&f) } else { alpha_plus(&f) };
            let recursive = || {
                if signed {
                    alpha_recursive(&f)
                } else {
                    alpha_plus_recursive(&f)
                }
            };
            let reports: Vec<ValuationReport> = match evaluator {
                EvaluatorArg::Topological => vec![topological()?],
                EvaluatorArg::Recursive => vec![recursive()?],
                EvaluatorArg::Both => vec![topological()?, recursive()?],
            };
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{}", r.to_json()).unwrap();
            }
            let agree = reports.windows(2).all(|w| w[0].value == w[1].value);
            Ok(Outcome {
                code: if agree { 0 } else { 3 },
                stdout: out,
                stderr: if agree {
                    String::new()
                } else {
                    "error: evaluators disagree\n".into()
                },
            })
        }
        Command::Eval { function, point } => {
            let f = read_function(&function)?;
            let x: Point = point.parse()?;
            ok(format!("{}\n", f.evaluate(&x)?))
        }
        Command::Combine { op, f, g, o } => {
            let (f, g) = (read_function(&f)?, read_function(&g)?);
            let one = Rational::one;
            let h = match op {
                OpArg::Meet => lattice_op(LatticeOp::Meet, &f, &g)?,
                OpArg::Join => lattice_op(LatticeOp::Join, &f, &g)?,
                OpArg::Add => linear_combination(&[(one(), &f), (one(), &g)])?,
                OpArg::Sub => linear_combination(&[(one(), &f), (-one(), &g)])?,
            };
            write_file(&o, &function_to_string(&h))?;
            ok(String::new())
        }
        Command::Parts { function, o } => {
            let (pos, neg) = signed_parts(&read_function(&function)?);
            let base = o.to_string_lossy();
            write_file(Path::new(&format!("{base}.plus.json")), &function_to_string(&pos))?;
            write_file(Path::new(&format!("{base}.minus.json")), &function_to_string(&neg))?;
            ok(String::new())
        }
        Command::Decompose { function } => ok(format!(
            "{}\n",
            decomposition_to_string(&decompose(&read_function(&function)?))
        )),
        Command::Supplement { function, o } => {
            let f = read_function(&function)?;
            let s = f.complex().supplement(&f.zero_set_subcomplex()?)?;
            write_file(&o, &complex_to_string(&s))?;
            ok(String::new())
        }
        Command::Refine { complex, hyperplane, o } => {
            let k = Arc::new(read_complex(&complex)?);
            let l: AffineFunctional = hyperplane.parse()?;
            if l.dim() != k.ambient_dim() {
                return Err(Error::Parse(format!(
                    "hyperplane has {} coefficients, complex lives in dimension {}",
                    l.dim(),
                    k.ambient_dim()
                )));
            }
            let text = complex_to_string(&split_by_hyperplane(&k, &l));
            match o {
                Some(path) => {
                    write_file(&path, &text)?;
                    ok(String::new())
                }
                None => ok(format!("{text}\n")),
            }
        }
        Command::Check { suite, seed, cases } => {
            let suite = match suite {
                SuiteArg::Axioms => Suite::Axioms,
                SuiteArg::Lemmas => Suite::Lemmas,
                SuiteArg::Oracle => Suite::Oracle,
            };
            let report = run_suite(suite, seed, cases.max(1));
            Ok(Outcome {
                code: if report.passed() { 0 } else { 3 },
                stdout: style.paint(&report.to_string()),
                stderr: String::new(),
            })
        }
    }
}

//! Sampling checker for the pc- and vl-valuation axioms.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::codec::function_to_string;
use crate::error::Result;
use crate::exact_math::Rational;
use crate::hats::hat;
use crate::instance::{below, case_rng, positive_rational, random_nonnegative, random_refinement, Preset};
use crate::pl_calculus::{lattice_op, linear_combination, signed_parts, LatticeOp, PLFunction};

/// A candidate valuation.
pub type Valuation<'a> = dyn Fn(&PLFunction) -> Result<i64> + Sync + 'a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomSet {
    Pc,
    Vl,
}

/// Seeded source of random cases on one preset polyhedron.
#[derive(Clone, Debug)]
pub struct Sampler {
    pub preset: Preset,
    pub max_depth: usize,
    pub max_terms: usize,
    pub seed: u64,
}

impl Sampler {
    pub fn new(preset: Preset, seed: u64) -> Self {
        Sampler {
            preset,
            max_depth: 2,
            max_terms: 4,
            seed,
        }
    }

    /// Four nonnegative functions and a positive scalar for case `i`. The
    /// second and fourth live on a further refinement half of the time.
    pub fn case(&self, i: usize) -> ([PLFunction; 4], Rational) {
        let mut rng = case_rng(self.seed, i as u64);
        let mut k = self.preset.complex();
        for _ in 0..below(&mut rng, self.max_depth + 1) {
            k = random_refinement(&mut rng, &k);
        }
        let other = if below(&mut rng, 2) == 0 {
            random_refinement(&mut rng, &k)
        } else {
            Arc::clone(&k)
        };
        let f0 = random_nonnegative(&mut rng, &k, self.max_terms);
        let f1 = random_nonnegative(&mut rng, &other, self.max_terms);
        let f2 = random_nonnegative(&mut rng, &k, self.max_terms);
        let f3 = random_nonnegative(&mut rng, &other, self.max_terms);
        let a = positive_rational(&mut rng, 7, 4);
        ([f0, f1, f2, f3], a)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub case: usize,
    pub law: &'static str,
    /// Function files of the inputs.
    pub inputs: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawTally {
    pub law: &'static str,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub which: AxiomSet,
    pub cases: usize,
    pub laws: Vec<LawTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn failed_laws(&self) -> Vec<&'static str> {
        self.laws.iter().filter(|l| l.failed > 0).map(|l| l.law).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.laws {
            let status = if l.failed == 0 { "pass" } else { "FAIL" };
            writeln!(f, "{status} {:<14} {}/{} cases", l.law, l.checked - l.failed, l.checked)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "counterexample: case {} law {}: {}", c.case, c.law, c.detail)?;
            for input in &c.inputs {
                writeln!(f, "  {input}")?;
            }
        }
        Ok(())
    }
}

const PC_LAWS: [&str; 6] = ["P1", "P2", "P3", "x+ay", "ax", "hat"];
const VL_LAWS: [&str; 5] = ["V1", "V2", "V3", "V4", "hat"];

struct Outcome {
    law: &'static str,
    failure: Option<Counterexample>,
}

fn law(case: usize, law: &'static str, inputs: &[&PLFunction], check: impl FnOnce() -> Result<(i64, i64)>) -> Outcome {
    let failure = match check() {
        Ok((lhs, rhs)) if lhs == rhs => None,
        Ok((lhs, rhs)) => Some(format!("{lhs} != {rhs}")),
        Err(e) => Some(format!("error: {e}")),
    };
    Outcome {
        law,
        failure: failure.map(|detail| Counterexample {
            case,
            law,
            inputs: inputs.iter().map(|f| function_to_string(f)).collect(),
            detail,
        }),
    }
}

fn add(terms: &[(Rational, &PLFunction)]) -> Result<PLFunction> {
    linear_combination(terms)
}

fn pc_case(nu: &Valuation, i: usize, [x, y, _, _]: &[PLFunction; 4], a: &Rational) -> Vec<Outcome> {
    let one = Rational::one;
    let zero = PLFunction::zero(Arc::clone(x.complex()));
    let h = hat(x.complex(), i % x.complex().num_vertices()).expect("vertex in range");
    vec![
        law(i, "P1", &[&zero], || Ok((nu(&zero)?, 0))),
        law(i, "P2", &[x, y], || {
            let join = lattice_op(LatticeOp::Join, x, y)?;
            let meet = lattice_op(LatticeOp::Meet, x, y)?;
            Ok((nu(&join)?, nu(x)? + nu(y)? - nu(&meet)?))
        }),
        law(i, "P3", &[x, y], || {
            let sum = add(&[(one(), x), (one(), y)])?;
            Ok((nu(&sum)?, nu(&lattice_op(LatticeOp::Join, x, y)?)?))
        }),
        law(i, "x+ay", &[x, y], || {
            let scaled = add(&[(one(), x), (a.clone(), y)])?;
            Ok((nu(&scaled)?, nu(&add(&[(one(), x), (one(), y)])?)?))
        }),
        law(i, "ax", &[x], || Ok((nu(&x.scale(a))?, nu(x)?))),
        law(i, "hat", &[&h], || Ok((nu(&h)?, 1))),
    ]
}

fn vl_case(nu: &Valuation, i: usize, [f0, f1, f2, f3]: &[PLFunction; 4], _: &Rational) -> Vec<Outcome> {
    let one = Rational::one;
    let zero = PLFunction::zero(Arc::clone(f0.complex()));
    let h = hat(f0.complex(), i % f0.complex().num_vertices()).expect("vertex in range");
    let x = add(&[(one(), f0), (-one(), f2)]).expect("same triangulation");
    let y = add(&[(one(), f1), (-one(), f3)]).expect("same triangulation");
    let (xp, xn) = signed_parts(&x);
    vec![
        law(i, "V1", &[&zero], || Ok((nu(&zero)?, 0))),
        law(i, "V2", &[&x, &y], || {
            let join = lattice_op(LatticeOp::Join, &x, &y)?;
            let meet = lattice_op(LatticeOp::Meet, &x, &y)?;
            Ok((nu(&x)? + nu(&y)?, nu(&join)? + nu(&meet)?))
        }),
        law(i, "V3", &[f0, f1], || {
            let sum = add(&[(one(), f0), (one(), f1)])?;
            Ok((nu(&sum)?, nu(&lattice_op(LatticeOp::Join, f0, f1)?)?))
        }),
        law(i, "V4", &[&xp, &xn], || {
            let diff = add(&[(one(), &xp), (-one(), &xn)])?;
            Ok((nu(&diff)?, nu(&xp)? - nu(&xn)?))
        }),
        law(i, "hat", &[&h], || Ok((nu(&h)?, 1))),
    ]
}

/// Checks `cases` sampled cases in parallel; results are merged in case order.
pub fn check_axioms(which: AxiomSet, nu: &Valuation, sampler: &Sampler, cases: usize) -> AxiomReport {
    let laws: &[&'static str] = match which {
        AxiomSet::Pc => &PC_LAWS,
        AxiomSet::Vl => &VL_LAWS,
    };
    let outcomes: Vec<Vec<Outcome>> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let (fs, a) = sampler.case(i);
            match which {
                AxiomSet::Pc => pc_case(nu, i, &fs, &a),
                AxiomSet::Vl => vl_case(nu, i, &fs, &a),
            }
        })
        .collect();
    let mut tallies: Vec<LawTally> = laws
        .iter()
        .map(|&law| LawTally {
            law,
            checked: 0,
            failed: 0,
        })
        .collect();
    let mut counterexamples = Vec::new();
    for o in outcomes.into_iter().flatten() {
        let t = tallies.iter_mut().find(|t| t.law == o.law).expect("known law");
        t.checked += 1;
        if let Some(c) = o.failure {
            t.failed += 1;
            counterexamples.push(c);
        }
    }
    AxiomReport {
        which,
        cases,
        laws: tallies,
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{alpha, alpha_plus};

    #[test]
    fn alpha_satisfies_both_axiom_sets() {
        let s = Sampler::new(Preset::Square, 5);
        let pc = check_axioms(AxiomSet::Pc, &|f: &PLFunction| Ok(alpha_plus(f)?.value), &s, 12);
        assert!(pc.passed(), "{pc}");
        let vl = check_axioms(AxiomSet::Vl, &|f: &PLFunction| Ok(alpha(f)?.value), &s, 12);
        assert!(vl.passed(), "{vl}");
        assert_eq!(vl.laws.iter().map(|l| l.checked).sum::<usize>(), 12 * 5);
    }

    #[test]
    fn zero_valuation_fails_only_normalization() {
        let s = Sampler::new(Preset::Interval, 1);
        let r = check_axioms(AxiomSet::Pc, &|_: &PLFunction| Ok(0), &s, 8);
        assert_eq!(r.failed_laws(), vec!["hat"]);
        assert_eq!(r.counterexamples.len(), 8);
        assert!(r.counterexamples[0].inputs[0].contains("\"values\""));
    }

    #[test]
    fn deterministic_cases() {
        let s = Sampler::new(Preset::SquareWithHole, 9);
        assert_eq!(s.case(3).0, s.case(3).0);
        assert_ne!(s.case(3).0, s.case(4).0);
    }
}

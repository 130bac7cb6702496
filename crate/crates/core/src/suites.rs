//! Seeded property suites behind `plval check`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::codec::function_to_string;
use crate::error::Result;
use crate::exact_math::Rational;
use crate::hats::{hat, hat_meet_reduction, shape_apex, HatCheck};
use crate::instance::{below, case_rng, generate_instance, random_refinement, InstanceSpec, Preset};
use crate::pl_calculus::{lattice_op, linear_combination, LatticeOp, PLFunction};
use crate::simplicial::SimplicialComplex;
use crate::valuation::{alpha, alpha_plus, alpha_plus_recursive, check_axioms, AxiomReport, AxiomSet, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Lemmas,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct SuiteLine {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteLine {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub lines: Vec<SuiteLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(SuiteLine::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            let status = if l.passed() { "pass" } else { "FAIL" };
            writeln!(
                f,
                "{status} {} ({}/{} cases)",
                l.name,
                l.checked - l.failures.len(),
                l.checked
            )?;
            for c in &l.failures {
                writeln!(f, "  counterexample: {c}")?;
            }
        }
        Ok(())
    }
}

fn from_axioms(preset: &Preset, r: &AxiomReport) -> Vec<SuiteLine> {
    r.laws
        .iter()
        .map(|l| SuiteLine {
            name: format!("{preset} {}", l.law),
            checked: l.checked,
            failures: r
                .counterexamples
                .iter()
                .filter(|c| c.law == l.law)
                .map(|c| format!("case {}: {} inputs {}", c.case, c.detail, c.inputs.join(" ")))
                .collect(),
        })
        .collect()
}

/// Runs `check` on `cases` indices in parallel, keeping failures in order.
fn sampled(name: String, cases: usize, check: impl Fn(usize) -> Option<String> + Sync) -> SuiteLine {
    let failures: Vec<String> = (0..cases).into_par_iter().filter_map(&check).collect();
    SuiteLine {
        name,
        checked: cases,
        failures,
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    match suite {
        Suite::Axioms => {
            for preset in Preset::BUILT_IN {
                let s = Sampler::new(preset.clone(), seed);
                let pc = check_axioms(AxiomSet::Pc, &|f: &PLFunction| Ok(alpha_plus(f)?.value), &s, cases);
                let vl = check_axioms(AxiomSet::Vl, &|f: &PLFunction| Ok(alpha(f)?.value), &s, cases);
                report.lines.extend(from_axioms(&preset, &pc));
                report.lines.extend(from_axioms(&preset, &vl));
            }
        }
        Suite::Lemmas => {
            for preset in Preset::BUILT_IN {
                report
                    .lines
                    .push(sampled(format!("{preset} hat-meet identity"), cases, |i| {
                        let (hats, hn) = random_hat_family(seed, i as u64, &preset, 6);
                        let k = Arc::clone(hn.complex());
                        hat_meet_check(&hats, &hn, &k).err().map(|e| format!("case {i}: {e}"))
                    }));
                report
                    .lines
                    .push(sampled(format!("{preset} triangulation independence"), cases, |i| {
                        triangulation_independence(seed, i as u64, &preset)
                            .err()
                            .map(|e| format!("case {i}: {e}"))
                    }));
            }
        }
        Suite::Oracle => {
            for preset in Preset::BUILT_IN {
                report
                    .lines
                    .push(sampled(format!("{preset} recursive = topological"), cases, |i| {
                        let spec = InstanceSpec::new(preset.clone(), 1 + i % 2, 1, seed ^ ((i as u64) << 8));
                        let f = &generate_instance(&spec).functions[0];
                        match (alpha_plus_recursive(f), alpha_plus(f)) {
                            (Ok(r), Ok(t)) if r.value == t.value => None,
                            (Ok(r), Ok(t)) => Some(format!(
                                "case {i}: recursive {} topological {} on {}",
                                r.value,
                                t.value,
                                function_to_string(f)
                            )),
                            (Err(e), _) | (_, Err(e)) => Some(format!("case {i}: {e}")),
                        }
                    }));
            }
        }
    }
    report
}

/// Between 2 and `max` distinct hats of one random triangulation of
/// `preset`; the last is `hₙ`.
pub fn random_hat_family(seed: u64, case: u64, preset: &Preset, max: usize) -> (Vec<PLFunction>, PLFunction) {
    let mut rng = case_rng(seed, case);
    let mut k = preset.complex();
    for _ in 0..below(&mut rng, 3) {
        k = random_refinement(&mut rng, &k);
    }
    let n = 2 + below(&mut rng, max.min(k.num_vertices()) - 1);
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    while chosen.len() < n {
        let v = below(&mut rng, k.num_vertices());
        if !chosen.contains(&v) {
            chosen.push(v);
        }
    }
    let mut hats: Vec<PLFunction> = chosen.iter().map(|&v| hat(&k, v).expect("vertex in range")).collect();
    let hn = hats.pop().expect("at least two hats");
    (hats, hn)
}

/// Runs the reduction and checks, beyond its own assertions, that the
/// identity holds, each `kᵢ` lies below `hᵢ` and `hₙ`, and the nonzero
/// `2kᵢ` are hat-shaped and pairwise different.
pub fn hat_meet_check(hats: &[PLFunction], hn: &PLFunction, k: &Arc<SimplicialComplex>) -> Result<()> {
    let fail = |m: String| crate::Error::Assertion {
        message: m,
        trace: String::new(),
    };
    let ks = hat_meet_reduction(hats, hn, &HatCheck::Triangulation(Arc::clone(k)))?;
    let one = Rational::one;
    let sum_h = linear_combination(&hats.iter().map(|h| (one(), h)).collect::<Vec<_>>())?;
    let lhs = lattice_op(LatticeOp::Meet, &sum_h, hn)?;
    let rhs = linear_combination(&ks.iter().map(|k| (one(), k)).collect::<Vec<_>>())?;
    if !lhs.equals(&rhs)? {
        return Err(fail("(Σhᵢ) ∧ hₙ ≠ Σkᵢ".into()));
    }
    let two = Rational::from_integer(2);
    let mut doubled: Vec<PLFunction> = Vec::new();
    for (i, (ki, hi)) in ks.iter().zip(hats).enumerate() {
        if !ki.le(hi)? || !ki.le(hn)? {
            return Err(fail(format!("k{i} is not below its hats")));
        }
        if ki.is_zero() {
            continue;
        }
        let d = ki.scale(&two);
        if shape_apex(&d).is_none() {
            return Err(fail(format!("2k{i} is not hat-shaped")));
        }
        for prev in &doubled {
            if prev.equals(&d)? {
                return Err(fail(format!("2k{i} repeats an earlier output")));
            }
        }
        doubled.push(d);
    }
    Ok(())
}

/// `α⁺` of a random nonnegative function on its triangulation, on the
/// barycentric subdivision, and on a random hyperplane split.
pub fn triangulation_independence(seed: u64, case: u64, preset: &Preset) -> Result<()> {
    let spec = InstanceSpec::new(preset.clone(), (case % 3) as usize, 1, seed ^ (case << 16));
    let f = &generate_instance(&spec).functions[0];
    let mut rng = case_rng(seed, case);
    let derived = f.complex().derived_complex().complex;
    let split = crate::pl_calculus::split_by_hyperplane(
        f.complex(),
        &crate::instance::random_hyperplane(&mut rng, f.complex()),
    );
    let base = alpha_plus(f)?.value;
    for k in [derived, split] {
        let v = alpha_plus(&f.reexpress(&k)?)?.value;
        if v != base {
            return Err(crate::Error::Assertion {
                message: format!("α⁺ is {base} on the original and {v} on a refinement"),
                trace: function_to_string(f),
            });
        }
    }
    Ok(())
}

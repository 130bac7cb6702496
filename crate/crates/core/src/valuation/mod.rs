//! The Euler–Poincaré valuation of PL functions, evaluated two ways, and an
//! axiom checker for candidate valuations.
//!
//! The topological evaluator takes the Euler characteristic of the support,
//! realized as the supplement of the zero-set subcomplex. The recursive
//! evaluator only uses the valuation laws: it reduces a sum of hats with
//! hat meets until single hats remain, each of which counts 1.

mod axioms;
mod recursive;

use std::fmt;

use serde::Serialize;

use crate::codec::fingerprint;
use crate::error::Result;
use crate::pl_calculus::{signed_parts, PLFunction};

pub use axioms::{check_axioms, AxiomReport, AxiomSet, Counterexample, LawTally, Sampler, Valuation};
pub use recursive::alpha_plus_recursive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evaluator {
    Topological,
    Recursive,
}

impl fmt::Display for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evaluator::Topological => "topological",
            Evaluator::Recursive => "recursive",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RecursionStats {
    pub calls: u64,
    pub max_depth: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationReport {
    pub value: i64,
    pub evaluator: Evaluator,
    pub triangulation_fingerprint: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<RecursionStats>,
}

impl ValuationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// `χ(supp f)` for `f ≥ 0`.
pub fn alpha_plus(f: &PLFunction) -> Result<ValuationReport> {
    let z = f.zero_set_subcomplex()?;
    Ok(ValuationReport {
        value: f.complex().supplement_euler_characteristic(&z)?,
        evaluator: Evaluator::Topological,
        triangulation_fingerprint: fingerprint(f.complex()),
        stats: None,
    })
}

/// `α⁺(f⁺) − α⁺(f⁻)`.
pub fn alpha(f: &PLFunction) -> Result<ValuationReport> {
    let (pos, neg) = signed_parts(f);
    let value = alpha_plus(&pos)?.value - alpha_plus(&neg)?.value;
    Ok(ValuationReport {
        value,
        evaluator: Evaluator::Topological,
        triangulation_fingerprint: fingerprint(pos.complex()),
        stats: None,
    })
}

/// `α` through the recursive evaluator on both signed parts.
pub fn alpha_recursive(f: &PLFunction) -> Result<ValuationReport> {
    let (pos, neg) = signed_parts(f);
    let p = alpha_plus_recursive(&pos)?;
    let n = alpha_plus_recursive(&neg)?;
    let (ps, ns) = (p.stats.unwrap_or_default(), n.stats.unwrap_or_default());
    Ok(ValuationReport {
        value: p.value - n.value,
        evaluator: Evaluator::Recursive,
        triangulation_fingerprint: p.triangulation_fingerprint,
        stats: Some(RecursionStats {
            calls: ps.calls + ns.calls,
            max_depth: ps.max_depth.max(ns.max_depth),
        }),
    })
}

//! The recursive evaluator.
//!
//! For hats `h₀..hₘ` sorted by apex,
//! `ν(h₀..hₘ) = ν(h₀..hₘ₋₁) + 1 − ν({2kᵢ ≠ 0})` where the `kᵢ` come from the
//! hat-meet reduction of `h₀..hₘ₋₁` against `hₘ`; `ν(∅) = 0`, `ν(h) = 1`.
//! Coefficients are dropped first: every positive combination of the same
//! hats has the same value.

use std::collections::HashMap;
use std::sync::Arc;

use crate::codec::fingerprint;
use crate::error::{Error, Result};
use crate::exact_math::Rational;
use crate::hats::{apex_point, decompose, hat, hat_meet_reduction, HatCheck};
use crate::pl_calculus::PLFunction;

use super::{Evaluator, RecursionStats, ValuationReport};

struct Recursion {
    memo: HashMap<Vec<PLFunction>, i64>,
    stats: RecursionStats,
}

impl Recursion {
    fn nu(&mut self, hats: &[PLFunction], check: &HatCheck, depth: u64) -> Result<i64> {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        match hats.len() {
            0 => return Ok(0),
            1 => return Ok(1),
            _ => {}
        }
        if let Some(&v) = self.memo.get(hats) {
            return Ok(v);
        }
        let (last, prefix) = hats.split_last().expect("at least two hats");
        let before = self.nu(prefix, check, depth + 1)?;
        let two = Rational::from_integer(2);
        let mut doubled: Vec<PLFunction> = hat_meet_reduction(prefix, last, check)?
            .into_iter()
            .filter(|k| !k.is_zero())
            .map(|k| k.scale(&two))
            .collect();
        sort_by_apex(&mut doubled)?;
        let overlap = self.nu(&doubled, &HatCheck::Shape, depth + 1)?;
        let value = before + 1 - overlap;
        self.memo.insert(hats.to_vec(), value);
        Ok(value)
    }
}

fn sort_by_apex(hats: &mut [PLFunction]) -> Result<()> {
    if let Some(bad) = hats.iter().find(|h| apex_point(h).is_none()) {
        return Err(Error::Assertion {
            message: "reduction produced a function that is not hat-shaped".into(),
            trace: format!("{bad:?}"),
        });
    }
    hats.sort_by(|a, b| apex_point(a).cmp(&apex_point(b)));
    Ok(())
}

/// `ν⁺(f)` computed by the hat recursion alone, for `f ≥ 0`.
pub fn alpha_plus_recursive(f: &PLFunction) -> Result<ValuationReport> {
    if let Some(v) = f.values().iter().position(Rational::is_negative) {
        return Err(Error::NegativeFunction { vertex: v });
    }
    let k = Arc::clone(f.complex());
    let mut hats = decompose(f)
        .terms
        .iter()
        .map(|(_, v)| hat(&k, *v))
        .collect::<Result<Vec<_>>>()?;
    sort_by_apex(&mut hats)?;
    let mut rec = Recursion {
        memo: HashMap::new(),
        stats: RecursionStats::default(),
    };
    let value = rec.nu(&hats, &HatCheck::Triangulation(Arc::clone(&k)), 0)?;
    Ok(ValuationReport {
        value,
        evaluator: Evaluator::Recursive,
        triangulation_fingerprint: fingerprint(&k),
        stats: Some(rec.stats),
    })
}

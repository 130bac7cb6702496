//! Seeded random instances: preset polyhedra, random refinements and random
//! nonnegative functions.
//!
//! The generator is xoshiro256** seeded through SplitMix64 (`seed_from_u64`),
//! so a seed reproduces the same instance on every platform. Bounded draws
//! are `next_u64() % n`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::exact_math::{AffineFunctional, Point, Rational};
use crate::pl_calculus::{split_by_hyperplane, PLFunction};
use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq)]
pub enum Preset {
    Interval,
    Square,
    SquareWithHole,
    TwoComponents,
    Custom(Arc<SimplicialComplex>),
}

impl Preset {
    pub const BUILT_IN: [Preset; 4] = [
        Preset::Interval,
        Preset::Square,
        Preset::SquareWithHole,
        Preset::TwoComponents,
    ];

    pub fn complex(&self) -> Arc<SimplicialComplex> {
        let build = |dim: usize, pts: &[&[i64]], maximal: &[&[usize]]| {
            let k = SimplicialComplex::from_maximal(
                dim,
                pts.iter().map(|p| Point::from_ints(p)).collect(),
                maximal.iter().map(|s| Simplex::new(s.to_vec())),
            )
            .expect("preset complexes are well formed");
            Arc::new(k)
        };
        match self {
            Preset::Interval => build(1, &[&[0], &[1]], &[&[0, 1]]),
            Preset::Square => build(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]], &[&[0, 1, 2], &[0, 2, 3]]),
            // outer square [0,3]², inner square [1,2]² removed
            Preset::SquareWithHole => build(
                2,
                &[&[0, 0], &[3, 0], &[3, 3], &[0, 3], &[1, 1], &[2, 1], &[2, 2], &[1, 2]],
                &[
                    &[0, 1, 4],
                    &[1, 4, 5],
                    &[1, 2, 5],
                    &[2, 5, 6],
                    &[2, 3, 6],
                    &[3, 6, 7],
                    &[0, 3, 7],
                    &[0, 4, 7],
                ],
            ),
            Preset::TwoComponents => build(1, &[&[0], &[1], &[2], &[3]], &[&[0, 1], &[2, 3]]),
            Preset::Custom(k) => Arc::clone(k),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Preset::Interval => "interval",
            Preset::Square => "square",
            Preset::SquareWithHole => "square-with-hole",
            Preset::TwoComponents => "two-components",
            Preset::Custom(_) => "custom",
        })
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "interval" => Ok(Preset::Interval),
            "square" => Ok(Preset::Square),
            "square-with-hole" => Ok(Preset::SquareWithHole),
            "two-components" => Ok(Preset::TwoComponents),
            _ => Err(format!("unknown preset {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub preset: Preset,
    /// Number of random refinement steps.
    pub depth: usize,
    /// Number of functions to emit.
    pub hat_count: usize,
    /// Most hats combined into one function.
    pub max_terms: usize,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(preset: Preset, depth: usize, hat_count: usize, seed: u64) -> Self {
        InstanceSpec {
            preset,
            depth,
            hat_count,
            max_terms: 8,
            seed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub complex: Arc<SimplicialComplex>,
    pub functions: Vec<PLFunction>,
}

pub fn generate_instance(spec: &InstanceSpec) -> Instance {
    let mut rng = Xoshiro256StarStar::seed_from_u64(spec.seed);
    let mut k = spec.preset.complex();
    for _ in 0..spec.depth {
        k = random_refinement(&mut rng, &k);
    }
    let functions = (0..spec.hat_count)
        .map(|_| random_nonnegative(&mut rng, &k, spec.max_terms))
        .collect();
    Instance { complex: k, functions }
}

/// A generator for one case of a seeded family, independent of the others.
pub fn case_rng(seed: u64, case: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed ^ case.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn below(rng: &mut impl Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// `p/q` with `1 ≤ p ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn positive_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    let p = 1 + below(rng, max_num as usize) as i64;
    let q = 1 + below(rng, max_den as usize) as i64;
    Rational::new(p, q)
}

/// Barycentric subdivision with probability 1/4, otherwise a split along a
/// random hyperplane through an interior rational point of a random
/// top-dimensional simplex.
pub fn random_refinement(rng: &mut impl Rng, k: &Arc<SimplicialComplex>) -> Arc<SimplicialComplex> {
    if below(rng, 4) == 0 {
        return k.derived_complex().complex;
    }
    split_by_hyperplane(k, &random_hyperplane(rng, k))
}

pub fn random_hyperplane(rng: &mut impl Rng, k: &SimplicialComplex) -> AffineFunctional {
    let top = k.dim().unwrap_or(0);
    let candidates: Vec<&Simplex> = k.maximal_simplices().iter().filter(|s| s.dim() == top).collect();
    let s = candidates[below(rng, candidates.len())];
    let weights: Vec<Rational> = s
        .vertices()
        .iter()
        .map(|_| Rational::from_integer(1 + below(rng, 4) as i64))
        .collect();
    let total: Rational = weights.iter().sum();
    let normalized: Vec<Rational> = weights.iter().map(|w| w / &total).collect();
    let point = Point::combination(
        k.ambient_dim(),
        normalized.iter().zip(s.vertices()).map(|(w, &v)| (w, k.vertex(v))),
    );
    let gradient = loop {
        let g: Vec<Rational> = (0..k.ambient_dim())
            .map(|_| Rational::from_integer(below(rng, 5) as i64 - 2))
            .collect();
        if g.iter().any(|c| !c.is_zero()) {
            break g;
        }
    };
    let at_point: Rational = gradient.iter().zip(point.coords()).map(|(g, x)| g * x).sum();
    AffineFunctional::new(gradient, -at_point)
}

/// A positive rational combination of between 1 and `max_terms` distinct
/// hats of `k`.
pub fn random_nonnegative(rng: &mut impl Rng, k: &Arc<SimplicialComplex>, max_terms: usize) -> PLFunction {
    let n = k.num_vertices();
    let terms = 1 + below(rng, max_terms.clamp(1, n));
    let mut values = vec![Rational::zero(); n];
    let mut chosen = 0;
    while chosen < terms {
        let v = below(rng, n);
        if values[v].is_zero() {
            values[v] = positive_rational(rng, 4, 3);
            chosen += 1;
        }
    }
    PLFunction::new(Arc::clone(k), values).expect("one value per vertex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        let chis: Vec<i64> = Preset::BUILT_IN
            .iter()
            .map(|p| p.complex().euler_characteristic())
            .collect();
        assert_eq!(chis, vec![1, 1, 0, 2]);
        for p in Preset::BUILT_IN {
            assert!(p.complex().is_valid(), "{p}");
            assert_eq!(p.to_string().parse::<Preset>().unwrap(), p);
        }
        assert_eq!(Preset::SquareWithHole.complex().f_vector(), vec![8, 16, 8]);
    }

    #[test]
    fn depth_zero_uses_no_randomness() {
        for seed in [0, 1, 99, u64::MAX] {
            let inst = generate_instance(&InstanceSpec::new(Preset::Interval, 0, 0, seed));
            assert_eq!(inst.complex.f_vector(), vec![2, 1]);
            assert!(inst.functions.is_empty());
        }
    }

    #[test]
    fn deterministic() {
        let spec = InstanceSpec::new(Preset::Square, 3, 4, 7);
        let a = generate_instance(&spec);
        let b = generate_instance(&spec);
        assert_eq!(*a.complex, *b.complex);
        assert_eq!(a.functions, b.functions);
    }

    #[test]
    fn refined_instances_are_valid_and_nonnegative() {
        for seed in 1..=5 {
            for preset in Preset::BUILT_IN {
                let inst = generate_instance(&InstanceSpec::new(preset.clone(), 2, 3, seed));
                assert!(inst.complex.is_valid(), "{preset} seed {seed}");
                assert_eq!(
                    inst.complex.euler_characteristic(),
                    preset.complex().euler_characteristic()
                );
                assert!(inst.functions.iter().all(|f| f.is_nonnegative() && !f.is_zero()));
            }
        }
    }
}

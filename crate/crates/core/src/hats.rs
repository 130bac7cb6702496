//! Hats of a triangulation, hat decompositions, and the hat-meet reduction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_math::{Point, Rational};
use crate::pl_calculus::{common_refinement, lattice_op, linear_combination, LatticeOp, PLFunction};
use crate::simplicial::SimplicialComplex;

/// `f = Σ aᵢ · hat(K, vᵢ)` over a triangulation `K` linearizing `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatDecomposition {
    pub triangulation: Arc<SimplicialComplex>,
    pub terms: Vec<(Rational, usize)>,
}

impl HatDecomposition {
    pub fn reconstruct(&self) -> PLFunction {
        let mut values = vec![Rational::zero(); self.triangulation.num_vertices()];
        for (a, v) in &self.terms {
            values[*v] = &values[*v] + a;
        }
        PLFunction::new(Arc::clone(&self.triangulation), values).expect("one value per vertex")
    }

    pub fn hats(&self) -> Vec<PLFunction> {
        self.terms
            .iter()
            .map(|(_, v)| hat(&self.triangulation, *v).expect("decomposition vertices are valid"))
            .collect()
    }
}

pub fn hat(k: &Arc<SimplicialComplex>, v: usize) -> Result<PLFunction> {
    if v >= k.num_vertices() {
        return Err(Error::InvalidVertex(v));
    }
    let mut values = vec![Rational::zero(); k.num_vertices()];
    values[v] = Rational::one();
    PLFunction::new(Arc::clone(k), values)
}

/// The apex of `f` as a hat of `k`, or the reason it is not one.
pub fn hat_apex(k: &Arc<SimplicialComplex>, f: &PLFunction) -> std::result::Result<usize, String> {
    let on_k = if SimplicialComplex::same(k, f.complex()) {
        f.clone()
    } else {
        let values = k
            .vertices()
            .iter()
            .map(|p| f.evaluate(p))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| format!("not defined on the triangulation: {e}"))?;
        let g = PLFunction::new(Arc::clone(k), values).expect("one value per vertex");
        match g.equals(f) {
            Ok(true) => g,
            Ok(false) => return Err("not linear on the triangulation".into()),
            Err(e) => return Err(e.to_string()),
        }
    };
    let mut apex = None;
    for (v, x) in on_k.values().iter().enumerate() {
        if x.is_one() {
            if apex.is_some() {
                return Err("value 1 at more than one vertex".into());
            }
            apex = Some(v);
        } else if !x.is_zero() {
            return Err(format!("value {x} at vertex {v}"));
        }
    }
    apex.ok_or_else(|| format!("maximum value {} is not 1", on_k.max_value()))
}

pub fn is_hat_of(k: &Arc<SimplicialComplex>, f: &PLFunction) -> bool {
    hat_apex(k, f).is_ok()
}

/// The vertex carrying the unique value 1 when every other vertex value of
/// `f` is below 1: a shape test needing no reference triangulation.
pub fn shape_apex(f: &PLFunction) -> Option<usize> {
    let mut apex = None;
    for (v, x) in f.values().iter().enumerate() {
        if x.is_one() {
            if apex.is_some() {
                return None;
            }
            apex = Some(v);
        } else if *x > Rational::one() || x.is_negative() {
            return None;
        }
    }
    apex
}

/// Coordinates of the apex of a hat-shaped function.
pub fn apex_point(f: &PLFunction) -> Option<&Point> {
    shape_apex(f).map(|v| f.complex().vertex(v))
}

pub fn decompose(f: &PLFunction) -> HatDecomposition {
    HatDecomposition {
        triangulation: Arc::clone(f.complex()),
        terms: f
            .values()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(v, a)| (a.clone(), v))
            .collect(),
    }
}

/// How the inputs of [`hat_meet_reduction`] are checked to be hats.
#[derive(Clone, Debug)]
pub enum HatCheck {
    /// Hats of this triangulation.
    Triangulation(Arc<SimplicialComplex>),
    /// Hat-shaped on their own triangulations.
    Shape,
}

/// `k₀..kₙ₋₁` with `hₙ⁰ = hₙ`, `kᵢ = hᵢ ∧ hₙⁱ`, `hₙⁱ⁺¹ = hₙⁱ − kᵢ`.
///
/// Asserts that `(Σhᵢ) ∧ hₙ = Σkᵢ` and that every nonzero `2kᵢ` is
/// hat-shaped; a failed assertion is returned with the inputs attached.
pub fn hat_meet_reduction(hats: &[PLFunction], hn: &PLFunction, check: &HatCheck) -> Result<Vec<PLFunction>> {
    let all: Vec<&PLFunction> = hats.iter().chain(std::iter::once(hn)).collect();
    for (i, h) in all.iter().enumerate() {
        let ok = match check {
            HatCheck::Triangulation(k) => hat_apex(k, h).map(|_| ()),
            HatCheck::Shape => shape_apex(h).map(|_| ()).ok_or_else(|| "not hat-shaped".to_string()),
        };
        if let Err(reason) = ok {
            return Err(Error::NotHats(format!("input {i}: {reason}")));
        }
    }
    let aligned = common_refinement(&all)?;
    for i in 0..aligned.len() {
        for j in 0..i {
            if aligned[i].values() == aligned[j].values() {
                return Err(Error::NotHats(format!("inputs {j} and {i} coincide")));
            }
        }
    }
    let (hats, hn) = aligned.split_at(aligned.len() - 1);
    let hn = &hn[0];

    let mut ks = Vec::with_capacity(hats.len());
    let mut rest = hn.clone();
    for h in hats {
        let k = lattice_op(LatticeOp::Meet, h, &rest)?;
        rest = linear_combination(&[(Rational::one(), &rest), (-Rational::one(), &k)])?;
        ks.push(k);
    }

    let fail = |message: String| Error::Assertion {
        message,
        trace: format!("hats: {hats:?}\nh_n: {hn:?}"),
    };
    let two = Rational::from_integer(2);
    for (i, k) in ks.iter().enumerate() {
        if !k.is_zero() && shape_apex(&k.scale(&two)).is_none() {
            return Err(fail(format!("2k{i} is not hat-shaped: {k:?}")));
        }
    }
    if !ks.is_empty() {
        let last = Arc::clone(rest.complex());
        let sum_h = linear_combination(&hats.iter().map(|h| (Rational::one(), h)).collect::<Vec<_>>())?;
        let lhs = lattice_op(LatticeOp::Meet, &sum_h.reexpress(&last)?, &hn.reexpress(&last)?)?;
        let rhs = linear_combination(&ks.iter().map(|k| (Rational::one(), k)).collect::<Vec<_>>())?;
        if !lhs.equals(&rhs)? {
            return Err(fail("(Σhᵢ) ∧ hₙ differs from Σkᵢ".into()));
        }
    }
    Ok(ks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::Simplex;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn complex(ambient: usize, pts: &[&str], maximal: &[&[usize]]) -> Arc<SimplicialComplex> {
        Arc::new(
            SimplicialComplex::new_validated(
                ambient,
                pts.iter().map(|p| p.parse().unwrap()).collect(),
                maximal.iter().map(|m| Simplex::new(m.to_vec())),
            )
            .unwrap(),
        )
    }

    fn path() -> Arc<SimplicialComplex> {
        complex(1, &["0", "1/2", "1"], &[&[0, 1], &[1, 2]])
    }

    fn value_at(f: &PLFunction, x: &str) -> Rational {
        f.evaluate(&x.parse().unwrap()).unwrap()
    }

    #[test]
    fn hats_of_a_path() {
        let k = path();
        assert_eq!(hat(&k, 1).unwrap().values(), &[q("0"), q("1"), q("0")]);
        assert!(matches!(hat(&k, 3), Err(Error::InvalidVertex(3))));
        let point = complex(2, &["1,1"], &[&[0]]);
        assert!(is_hat_of(&point, &PLFunction::one(Arc::clone(&point))));
    }

    #[test]
    fn hat_recognition() {
        let k = path();
        assert_eq!(hat_apex(&k, &hat(&k, 1).unwrap()), Ok(1));
        let edge = complex(1, &["0", "1"], &[&[0, 1]]);
        let tent = lattice_op(LatticeOp::Meet, &hat(&edge, 0).unwrap(), &hat(&edge, 1).unwrap()).unwrap();
        assert!(!is_hat_of(tent.complex(), &tent));
        assert!(is_hat_of(tent.complex(), &tent.scale(&q("2"))));
        // the midpoint hat is not linear on the unsubdivided edge
        assert!(!is_hat_of(&edge, &hat(&k, 1).unwrap()));
        // but an endpoint hat of the edge is a function on the path
        assert!(!is_hat_of(&k, &hat(&edge, 0).unwrap()));
    }

    #[test]
    fn decompositions() {
        let k = path();
        let f = PLFunction::new(Arc::clone(&k), vec![q("0"), q("2"), q("0")]).unwrap();
        assert_eq!(decompose(&f).terms, vec![(q("2"), 1)]);
        let one = decompose(&PLFunction::one(Arc::clone(&k)));
        assert_eq!(one.terms.len(), 3);
        assert!(decompose(&PLFunction::zero(Arc::clone(&k))).terms.is_empty());
        assert_eq!(decompose(&f).reconstruct(), f);
    }

    #[test]
    fn reduction_on_an_edge() {
        let edge = complex(1, &["0", "1"], &[&[0, 1]]);
        let h0 = hat(&edge, 0).unwrap();
        let h1 = hat(&edge, 1).unwrap();
        let ks = hat_meet_reduction(&[h0], &h1, &HatCheck::Triangulation(Arc::clone(&edge))).unwrap();
        assert_eq!(ks.len(), 1);
        assert_eq!(value_at(&ks[0], "1/2"), q("1/2"));
        let doubled = ks[0].scale(&q("2"));
        assert_eq!(apex_point(&doubled), Some(&"1/2".parse().unwrap()));
    }

    #[test]
    fn reduction_on_a_path() {
        let k = path();
        let hats = [hat(&k, 0).unwrap(), hat(&k, 1).unwrap()];
        let ks = hat_meet_reduction(&hats, &hat(&k, 2).unwrap(), &HatCheck::Triangulation(Arc::clone(&k))).unwrap();
        assert!(ks[0].is_zero());
        assert_eq!(value_at(&ks[1], "3/4"), q("1/2"));
        assert_eq!(value_at(&ks[1], "1/2"), q("0"));
        assert_eq!(value_at(&ks[1], "1"), q("0"));
    }

    #[test]
    fn disjoint_supports() {
        let k = complex(
            1,
            &["0", "1/4", "1/2", "3/4", "1"],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]],
        );
        let ks = hat_meet_reduction(
            &[hat(&k, 0).unwrap(), hat(&k, 1).unwrap()],
            &hat(&k, 4).unwrap(),
            &HatCheck::Shape,
        )
        .unwrap();
        assert!(ks.iter().all(PLFunction::is_zero));
    }

    #[test]
    fn rejects_non_hats() {
        let k = path();
        let tent = PLFunction::new(Arc::clone(&k), vec![q("0"), q("1/2"), q("0")]).unwrap();
        let err = hat_meet_reduction(&[tent], &hat(&k, 0).unwrap(), &HatCheck::Shape).unwrap_err();
        assert!(matches!(err, Error::NotHats(_)));
        let h = hat(&k, 1).unwrap();
        let err = hat_meet_reduction(std::slice::from_ref(&h), &h, &HatCheck::Triangulation(k)).unwrap_err();
        assert!(matches!(err, Error::NotHats(_)));
    }
}

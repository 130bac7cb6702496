//! Vector-lattice operations: linear combinations, meets, joins and parts.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_math::Rational;

use super::refine::{common_linearization, common_refinement};
use super::split::split_by_levels;
use super::PLFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// `Σ aᵢ fᵢ` on the iterated common refinement.
pub fn linear_combination(terms: &[(Rational, &PLFunction)]) -> Result<PLFunction> {
    if terms.is_empty() {
        return Err(Error::EmptyCombination);
    }
    let fs: Vec<&PLFunction> = terms.iter().map(|(_, f)| *f).collect();
    let refined = common_refinement(&fs)?;
    let k = Arc::clone(refined[0].complex());
    let mut values = vec![Rational::zero(); k.num_vertices()];
    for ((a, _), f) in terms.iter().zip(&refined) {
        if a.is_zero() {
            continue;
        }
        for (acc, v) in values.iter_mut().zip(f.values()) {
            *acc = &*acc + &(a * v);
        }
    }
    PLFunction::new(k, values)
}

pub fn lattice_op(op: LatticeOp, f: &PLFunction, g: &PLFunction) -> Result<PLFunction> {
    let (f, g) = common_linearization(f, g)?;
    let values = f
        .values()
        .iter()
        .zip(g.values())
        .map(|(a, b)| match op {
            LatticeOp::Meet => a.clone().min(b.clone()),
            LatticeOp::Join => a.clone().max(b.clone()),
        })
        .collect();
    PLFunction::new(Arc::clone(f.complex()), values)
}

/// `(f ∨ 0, (−f) ∨ 0)` on one triangulation, split once along the zero set of `f`.
pub fn signed_parts(f: &PLFunction) -> (PLFunction, PLFunction) {
    let k = split_by_levels(f.complex(), f.values());
    let f = f.reexpress(&k).expect("split refines its source");
    let zero = Rational::zero();
    let pos = f.values().iter().map(|v| v.clone().max(zero.clone())).collect();
    let neg = f.values().iter().map(|v| (-v).max(zero.clone())).collect();
    (
        PLFunction::new(Arc::clone(&k), pos).unwrap(),
        PLFunction::new(k, neg).unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::super::tests::{func, path, q, unit_edge};
    use super::*;

    #[test]
    fn endpoint_hats_sum_to_one() {
        let k = unit_edge();
        let s = linear_combination(&[(q("1"), &func(&k, &["1", "0"])), (q("1"), &func(&k, &["0", "1"]))]).unwrap();
        assert_eq!(s.values(), &[q("1"), q("1")]);
    }

    #[test]
    fn scaling_and_zero() {
        let hat = func(&path(), &["0", "1", "0"]);
        let two = linear_combination(&[(q("2"), &hat)]).unwrap();
        assert_eq!(two.values(), &[q("0"), q("2"), q("0")]);
        assert!(linear_combination(&[(q("0"), &hat)]).unwrap().is_zero());
        assert!(matches!(linear_combination(&[]), Err(Error::EmptyCombination)));
    }

    #[test]
    fn meet_of_endpoint_hats_is_a_half_tent() {
        let k = unit_edge();
        let m = lattice_op(LatticeOp::Meet, &func(&k, &["1", "0"]), &func(&k, &["0", "1"])).unwrap();
        let x = m.complex().vertex_index(&"1/2".parse().unwrap()).unwrap();
        assert_eq!(m.values()[x], q("1/2"));
        assert_eq!(m.max_value(), q("1/2"));
        let doubled = m.scale(&q("2"));
        assert_eq!(doubled.values().iter().filter(|v| v.is_one()).count(), 1);
    }

    #[test]
    fn idempotence() {
        let f = func(&path(), &["1", "-1", "3"]);
        assert!(lattice_op(LatticeOp::Meet, &f, &f).unwrap().equals(&f).unwrap());
        assert!(lattice_op(LatticeOp::Join, &f, &f).unwrap().equals(&f).unwrap());
    }

    #[test]
    fn positive_part_of_a_line() {
        let f = func(&unit_edge(), &["1", "-1"]);
        let zero = PLFunction::zero(Arc::clone(f.complex()));
        let j = lattice_op(LatticeOp::Join, &f, &zero).unwrap();
        assert_eq!(j.values(), &[q("1"), q("0"), q("0")]);
        assert_eq!(j.complex().vertices()[2], "1/2".parse().unwrap());
    }

    #[test]
    fn parts_of_a_line() {
        let f = func(&unit_edge(), &["1", "-1"]);
        let (p, n) = signed_parts(&f);
        assert_eq!(p.values(), &[q("1"), q("0"), q("0")]);
        assert_eq!(n.values(), &[q("0"), q("1"), q("0")]);
        let back = linear_combination(&[(q("1"), &p), (q("-1"), &n)]).unwrap();
        assert!(back.equals(&f).unwrap());
        assert!(lattice_op(LatticeOp::Meet, &p, &n).unwrap().is_zero());
    }

    #[test]
    fn parts_of_nonnegative_and_zero() {
        let hat = func(&path(), &["0", "1", "0"]);
        let (p, n) = signed_parts(&hat);
        assert_eq!(p, hat);
        assert!(n.is_zero());
        let (p, n) = signed_parts(&PLFunction::zero(path()));
        assert!(p.is_zero() && n.is_zero());
    }
}

//! Common refinements of triangulations of one polyhedron.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_math::{affine_extension, hull_equations, AffineFunctional, Point, Rational};
use crate::simplicial::SimplicialComplex;

use super::split::{split_by_hyperplane, split_by_levels};
use super::PLFunction;

/// A triangulation refining both `a` and `b`.
///
/// Shortcuts, in order: identical complexes, one derived from the other by
/// recorded splits or subdivisions, one geometrically refining and covering
/// the other. Otherwise `a` is split along every hyperplane bounding a
/// simplex of `b` that is not already a simplex of `a`, which places each
/// resulting simplex inside a simplex of `b`; the result is then checked to
/// cover `b` exactly.
pub fn common_refinement_complex(
    a: &Arc<SimplicialComplex>,
    b: &Arc<SimplicialComplex>,
) -> Result<Arc<SimplicialComplex>> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    if SimplicialComplex::same(a, b) || SimplicialComplex::is_ancestor(b, a) {
        return Ok(Arc::clone(a));
    }
    if SimplicialComplex::is_ancestor(a, b) {
        return Ok(Arc::clone(b));
    }
    if a.refines(b) {
        return if a.covers_when_refining(b) {
            Ok(Arc::clone(a))
        } else {
            Err(Error::PolyhedraDiffer)
        };
    }
    if b.refines(a) {
        return if b.covers_when_refining(a) {
            Ok(Arc::clone(b))
        } else {
            Err(Error::PolyhedraDiffer)
        };
    }

    let in_a: HashSet<Vec<&Point>> = a
        .maximal_simplices()
        .iter()
        .map(|s| sorted_points(a, s.vertices()))
        .collect();
    let mut seen = HashSet::new();
    let mut cuts: Vec<AffineFunctional> = Vec::new();
    for tau in b.maximal_simplices() {
        if in_a.contains(&sorted_points(b, tau.vertices())) {
            continue;
        }
        let pts = b.points_of(tau);
        let mut planes = hull_equations(&pts)?;
        if pts.len() > 1 {
            for i in 0..pts.len() {
                let values: Vec<Rational> = (0..pts.len())
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect();
                planes.push(affine_extension(&pts, &values)?);
            }
        }
        for l in planes {
            if l.is_constant() {
                continue;
            }
            if seen.insert(l.hyperplane_key()) {
                cuts.push(l);
            }
        }
    }
    let mut k = Arc::clone(a);
    for l in &cuts {
        k = split_by_hyperplane(&k, l);
    }
    if k.refines(b) && k.covers_when_refining(b) {
        Ok(k)
    } else {
        Err(Error::PolyhedraDiffer)
    }
}

fn sorted_points<'a>(k: &'a SimplicialComplex, vs: &[usize]) -> Vec<&'a Point> {
    let mut pts: Vec<&Point> = vs.iter().map(|&v| k.vertex(v)).collect();
    pts.sort();
    pts
}

/// Re-expresses every function on one triangulation refining all of theirs.
pub fn common_refinement(fs: &[&PLFunction]) -> Result<Vec<PLFunction>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let mut k = Arc::clone(first.complex());
    for f in &fs[1..] {
        k = common_refinement_complex(&k, f.complex())?;
    }
    fs.iter().map(|f| f.reexpress(&k)).collect()
}

/// `f` and `g` on a shared triangulation on which `f − g` has constant sign
/// on every simplex.
pub fn common_linearization(f: &PLFunction, g: &PLFunction) -> Result<(PLFunction, PLFunction)> {
    let mut both = common_refinement(&[f, g])?.into_iter();
    let (f1, g1) = (both.next().unwrap(), both.next().unwrap());
    let diff: Vec<Rational> = f1.values().iter().zip(g1.values()).map(|(a, b)| a - b).collect();
    let k = split_by_levels(f1.complex(), &diff);
    Ok((f1.reexpress(&k)?, g1.reexpress(&k)?))
}

//! Point location: carriers, containment of simplices, refinement checks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact_math::{barycentric_coordinates, determinant, Point, Rational};

use super::{Simplex, SimplicialComplex};

/// Axis-aligned box around a simplex, used to skip exact solves.
#[derive(Clone, Debug)]
pub struct BoundingBox {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

impl BoundingBox {
    pub fn of(k: &SimplicialComplex, s: &Simplex) -> Self {
        let first = k.vertex(s.vertices()[0]);
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for &v in &s.vertices()[1..] {
            for (d, c) in k.vertex(v).coords().iter().enumerate() {
                if *c < lo[d] {
                    lo[d] = c.clone();
                }
                if *c > hi[d] {
                    hi[d] = c.clone();
                }
            }
        }
        BoundingBox { lo, hi }
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.coords()
            .iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(c, (lo, hi))| lo <= c && c <= hi)
    }

    pub fn meets(&self, other: &BoundingBox) -> bool {
        (0..self.lo.len()).all(|d| self.lo[d] <= other.hi[d] && other.lo[d] <= self.hi[d])
    }
}

/// Barycentric coordinates of `x` on simplex `s`, if `x ∈ |s|`.
pub(crate) fn coordinates_in(k: &SimplicialComplex, s: &Simplex, x: &Point) -> Option<Vec<Rational>> {
    let pts = k.points_of(s);
    match barycentric_coordinates(&pts, x) {
        Ok(Some(l)) if l.iter().all(|c| !c.is_negative()) => Some(l),
        _ => None,
    }
}

pub(super) fn locate(k: &SimplicialComplex, x: &Point) -> Result<(Simplex, Vec<Rational>)> {
    x.check_dim(k.ambient_dim())?;
    if let Some(v) = k.vertex_index(x) {
        return Ok((Simplex::vertex(v), vec![Rational::one()]));
    }
    for (s, bb) in k.maximal_simplices().iter().zip(k.maximal_boxes()) {
        if !bb.contains(x) {
            continue;
        }
        if let Some(l) = coordinates_in(k, s, x) {
            let (face, coords): (Vec<usize>, Vec<Rational>) = s
                .vertices()
                .iter()
                .zip(l)
                .filter(|(_, c)| c.is_positive())
                .map(|(&v, c)| (v, c))
                .unzip();
            return Ok((Simplex(face), coords));
        }
    }
    Err(Error::PointOutside)
}

pub(super) fn carrier(k: &SimplicialComplex, x: &Point) -> Result<Simplex> {
    locate(k, x).map(|(s, _)| s)
}

/// Whether every maximal simplex of `fine` lies in a simplex of `coarse`.
///
/// A simplex σ lies in some simplex of `coarse` iff it lies in the carrier of
/// its own barycentre, which is the smallest candidate.
pub(super) fn refines(fine: &SimplicialComplex, coarse: &SimplicialComplex) -> bool {
    if fine.ambient_dim() != coarse.ambient_dim() {
        return false;
    }
    fine.maximal_simplices().iter().all(|s| {
        let pts = fine.points_of(s);
        let Ok(tau) = coarse.carrier(&Point::barycentre(&pts)) else {
            return false;
        };
        pts.iter().all(|p| coordinates_in(coarse, &tau, p).is_some())
    })
}

/// Given that `fine` refines `coarse`, whether the simplices of `fine` fill
/// every maximal simplex of `coarse`: the volumes (relative to τ) of the
/// `fine` simplices of dimension `dim τ` carried by τ must add up to one.
pub(super) fn covers(fine: &SimplicialComplex, coarse: &SimplicialComplex) -> bool {
    let mut carried: HashMap<Simplex, Vec<&Simplex>> = HashMap::new();
    for s in fine.simplices() {
        let b = Point::barycentre(&fine.points_of(s));
        match coarse.carrier(&b) {
            Ok(tau) if tau.dim() == s.dim() => carried.entry(tau).or_default().push(s),
            Ok(_) => {}
            Err(_) => return false,
        }
    }
    coarse.maximal_simplices().iter().all(|tau| {
        let Some(pieces) = carried.get(tau) else {
            return false;
        };
        let total: Rational = pieces
            .iter()
            .map(|s| {
                let rows: Vec<Vec<Rational>> = s
                    .vertices()
                    .iter()
                    .map(|&v| coordinates_in(coarse, tau, fine.vertex(v)).expect("fine refines coarse"))
                    .collect();
                determinant(&rows).abs()
            })
            .sum();
        total.is_one()
    })
}

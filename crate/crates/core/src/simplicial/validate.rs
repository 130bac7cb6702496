use std::fmt;

use crate::exact_math::{affinely_independent, Point, Rational};

use super::locate::BoundingBox;
use super::lp::{maximize, LpOutcome};
use super::{Simplex, SimplicialComplex};

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    /// Check that any two simplices meet in a common face. Quadratic in the
    /// number of maximal simplices.
    pub pairwise: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions { pairwise: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexDimension { vertex: usize, found: usize },
    IndexOutOfRange { simplex: Simplex },
    AffinelyDependent { simplex: Simplex },
    MissingFace { simplex: Simplex, face: Simplex },
    UnusedVertex { vertex: usize },
    DuplicateVertex { first: usize, second: usize },
    BadIntersection { first: Simplex, second: Simplex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexDimension { vertex, found } => {
                write!(f, "vertex {vertex} has {found} coordinates")
            }
            Violation::IndexOutOfRange { simplex } => {
                write!(f, "simplex {simplex:?} references a missing vertex")
            }
            Violation::AffinelyDependent { simplex } => {
                write!(f, "simplex {simplex:?} has affinely dependent vertices")
            }
            Violation::MissingFace { simplex, face } => {
                write!(f, "face {face:?} of simplex {simplex:?} is missing")
            }
            Violation::UnusedVertex { vertex } => {
                write!(f, "vertex {vertex} belongs to no simplex")
            }
            Violation::DuplicateVertex { first, second } => {
                write!(f, "vertices {first} and {second} coincide")
            }
            Violation::BadIntersection { first, second } => write!(
                f,
                "simplices {first:?} and {second:?} intersect in more than a common face"
            ),
        }
    }
}

pub(super) fn validate(k: &SimplicialComplex, opts: ValidateOptions) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = k.ambient_dim();
    for (i, v) in k.vertices().iter().enumerate() {
        if v.dim() != n {
            out.push(Violation::VertexDimension {
                vertex: i,
                found: v.dim(),
            });
        }
    }
    if !out.is_empty() {
        return out;
    }

    let mut used = vec![false; k.num_vertices()];
    for s in k.simplices() {
        if s.vertices().iter().any(|&v| v >= k.num_vertices()) {
            out.push(Violation::IndexOutOfRange { simplex: s.clone() });
            continue;
        }
        for &v in s.vertices() {
            used[v] = true;
        }
        if !affinely_independent(&k.points_of(s)) {
            out.push(Violation::AffinelyDependent { simplex: s.clone() });
        }
        for (face, _) in s.facets() {
            if !k.contains(&face) {
                out.push(Violation::MissingFace {
                    simplex: s.clone(),
                    face,
                });
            }
        }
    }
    for (v, u) in used.iter().enumerate() {
        if !u {
            out.push(Violation::UnusedVertex { vertex: v });
        }
    }

    let mut order: Vec<usize> = (0..k.num_vertices()).collect();
    order.sort_by(|&a, &b| k.vertex(a).cmp(k.vertex(b)));
    for w in order.windows(2) {
        if k.vertex(w[0]) == k.vertex(w[1]) {
            out.push(Violation::DuplicateVertex {
                first: w[0].min(w[1]),
                second: w[0].max(w[1]),
            });
        }
    }

    if opts.pairwise && out.is_empty() {
        let maximal = k.maximal_simplices();
        let boxes: Vec<BoundingBox> = maximal.iter().map(|s| BoundingBox::of(k, s)).collect();
        for i in 0..maximal.len() {
            for j in i + 1..maximal.len() {
                if !boxes[i].meets(&boxes[j]) {
                    continue;
                }
                if !meet_properly(k, &maximal[i], &maximal[j]) {
                    out.push(Violation::BadIntersection {
                        first: maximal[i].clone(),
                        second: maximal[j].clone(),
                    });
                }
            }
        }
    }
    out
}

/// Whether `|s| ∩ |t|` is exactly the face spanned by their shared vertices.
///
/// Maximizes, over common points `Σλᵢsᵢ = Σμⱼtⱼ`, the barycentric mass that
/// `s` puts on vertices not shared with `t`; the meet is proper iff that
/// maximum is zero or there is no common point.
pub(crate) fn meet_properly(k: &SimplicialComplex, s: &Simplex, t: &Simplex) -> bool {
    let sp: Vec<&Point> = s.vertices().iter().map(|&v| k.vertex(v)).collect();
    let tp: Vec<&Point> = t.vertices().iter().map(|&v| k.vertex(v)).collect();
    let (ns, nt) = (sp.len(), tp.len());
    let n = k.ambient_dim();
    let mut a = Vec::with_capacity(n + 2);
    for d in 0..n {
        let mut row: Vec<Rational> = sp.iter().map(|p| p[d].clone()).collect();
        row.extend(tp.iter().map(|p| -&p[d]));
        a.push(row);
    }
    let mut sum_s = vec![Rational::one(); ns];
    sum_s.extend(std::iter::repeat_n(Rational::zero(), nt));
    let mut sum_t = vec![Rational::zero(); ns];
    sum_t.extend(std::iter::repeat_n(Rational::one(), nt));
    a.push(sum_s);
    a.push(sum_t);
    let mut b = vec![Rational::zero(); n];
    b.push(Rational::one());
    b.push(Rational::one());
    let mut c: Vec<Rational> = s
        .vertices()
        .iter()
        .map(|&v| {
            if t.contains(v) {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    c.extend(std::iter::repeat_n(Rational::zero(), nt));
    match maximize(&a, &b, &c) {
        LpOutcome::Infeasible => true,
        LpOutcome::Optimal(v) => v.is_zero(),
        LpOutcome::Unbounded => unreachable!("barycentric masses are bounded"),
    }
}

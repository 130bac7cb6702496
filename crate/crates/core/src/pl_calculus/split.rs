//! Splitting a complex along the zero set of a function that is linear on
//! each of its simplices.
//!
//! Each simplex on which the function takes both strict signs is cut into its
//! nonnegative and nonpositive parts. The cut points are the zeros on edges
//! with strictly opposite endpoint signs. Each part is a convex cell whose
//! vertices are its original vertices plus those cut points, triangulated by
//! placing the vertices one at a time in lexicographic coordinate order. The
//! placing triangulation of a cell restricts on every face to the placing
//! triangulation of that face, and the vertices of a face depend only on the
//! face and the function values there, so neighbouring cells agree.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::exact_math::{barycentric_coordinates, AffineFunctional, Point, Rational};
use crate::simplicial::{Lineage, Simplex, SimplicialComplex};

/// Placing triangulation of the convex hull of `cell` (vertex indices into
/// `coords`, every point a vertex of the hull). Returns maximal simplices.
pub(crate) fn placing_triangulation(cell: &[usize], coords: &[Point]) -> Vec<Vec<usize>> {
    let mut order = cell.to_vec();
    order.sort_by(|&a, &b| coords[a].cmp(&coords[b]));
    order.dedup();
    let mut tri: Vec<Vec<usize>> = vec![vec![order[0]]];
    for &p in &order[1..] {
        let x = &coords[p];
        let pts = |s: &[usize]| -> Vec<Point> { s.iter().map(|&v| coords[v].clone()).collect() };
        let in_hull = barycentric_coordinates(&pts(&tri[0]), x)
            .expect("placed simplices are affinely independent")
            .is_some();
        if !in_hull {
            for s in tri.iter_mut() {
                s.push(p);
            }
            continue;
        }
        let mut facet_use: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in &tri {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                f.sort_unstable();
                *facet_use.entry(f).or_default() += 1;
            }
        }
        let mut added = Vec::new();
        for s in &tri {
            let lambda = barycentric_coordinates(&pts(s), x)
                .expect("placed simplices are affinely independent")
                .expect("point lies in the current affine hull");
            for (i, l) in lambda.iter().enumerate() {
                if !l.is_negative() {
                    continue;
                }
                let mut f = s.clone();
                f.remove(i);
                f.sort_unstable();
                if facet_use[&f] == 1 {
                    f.push(p);
                    added.push(f);
                }
            }
        }
        tri.extend(added);
    }
    tri
}

/// Refines `k` so that the piecewise-linear function with vertex values
/// `levels` has constant sign on every simplex. Returns `k` itself when no
/// simplex changes sign.
pub fn split_by_levels(k: &Arc<SimplicialComplex>, levels: &[Rational]) -> Arc<SimplicialComplex> {
    assert_eq!(levels.len(), k.num_vertices(), "one level per vertex");
    let sign: Vec<i32> = levels.iter().map(Rational::signum).collect();

    let mut cuts: Vec<(Point, usize, usize, Rational)> = k
        .simplices()
        .iter()
        .filter(|s| s.dim() == 1)
        .filter_map(|s| {
            let (a, b) = (s.vertices()[0], s.vertices()[1]);
            if sign[a] * sign[b] >= 0 {
                return None;
            }
            let t = &levels[a] / &(&levels[a] - &levels[b]);
            let one_minus = Rational::one() - &t;
            let p = Point::combination(k.ambient_dim(), [(&one_minus, k.vertex(a)), (&t, k.vertex(b))]);
            Some((p, a, b, t))
        })
        .collect();
    if cuts.is_empty() {
        return Arc::clone(k);
    }
    cuts.sort_by(|x, y| x.0.cmp(&y.0));

    let base = k.num_vertices();
    let mut edge_point: HashMap<(usize, usize), usize> = HashMap::new();
    let mut vertices = k.vertices().to_vec();
    let mut new_vertices = Vec::with_capacity(cuts.len());
    for (i, (p, a, b, t)) in cuts.into_iter().enumerate() {
        edge_point.insert((a, b), base + i);
        vertices.push(p);
        new_vertices.push(vec![(a, Rational::one() - &t), (b, t)]);
    }

    let mut simplices = BTreeSet::new();
    for s in k.maximal_simplices() {
        let vs = s.vertices();
        let has_pos = vs.iter().any(|&v| sign[v] > 0);
        let has_neg = vs.iter().any(|&v| sign[v] < 0);
        if !(has_pos && has_neg) {
            simplices.extend(s.faces());
            continue;
        }
        let mut crossing = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if let Some(&c) = edge_point.get(&(a, b)) {
                    crossing.push(c);
                }
            }
        }
        for side in [1, -1] {
            let mut cell: Vec<usize> = vs.iter().copied().filter(|&v| sign[v] * side >= 0).collect();
            cell.extend(&crossing);
            for t in placing_triangulation(&cell, &vertices) {
                simplices.extend(Simplex::new(t).faces());
            }
        }
    }

    let lineage = Lineage {
        parent: Arc::clone(k),
        new_vertices,
    };
    Arc::new(SimplicialComplex::from_closed(
        k.ambient_dim(),
        vertices,
        simplices,
        Some(lineage),
    ))
}

/// Refines `k` so that `l` has constant sign on every simplex; the new
/// vertices are exactly the points where `l = 0` crosses an edge.
pub fn split_by_hyperplane(k: &Arc<SimplicialComplex>, l: &AffineFunctional) -> Arc<SimplicialComplex> {
    let levels: Vec<Rational> = k.vertices().iter().map(|v| l.eval(v)).collect();
    split_by_levels(k, &levels)
}

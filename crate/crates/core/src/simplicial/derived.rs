//! Barycentric subdivision, supplements and simplicial neighbourhoods.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_math::{Point, Rational};

use super::{Lineage, Simplex, SimplicialComplex, Subcomplex};

/// Where a vertex of a derived complex comes from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexTag {
    Original(usize),
    Barycentre(Simplex),
}

impl VertexTag {
    pub fn source(&self) -> Simplex {
        match self {
            VertexTag::Original(v) => Simplex::vertex(*v),
            VertexTag::Barycentre(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DerivedComplex {
    pub complex: Arc<SimplicialComplex>,
    pub tags: Vec<VertexTag>,
}

/// Barycentres of the simplices accepted by `keep`, in derived-vertex order:
/// original vertices by index, then higher simplices in lexicographic order
/// of their tuples. Returns the points, tags and a simplex → index map.
fn derived_vertices(
    k: &SimplicialComplex,
    keep: impl Fn(&Simplex) -> bool,
) -> (Vec<Point>, Vec<VertexTag>, HashMap<&Simplex, usize>) {
    let mut points = Vec::new();
    let mut tags = Vec::new();
    let mut index = HashMap::new();
    let vertex_simplices = k.simplices().iter().filter(|s| s.dim() == 0);
    let higher = k.simplices().iter().filter(|s| s.dim() > 0);
    for s in vertex_simplices.chain(higher) {
        if !keep(s) {
            continue;
        }
        index.insert(s, points.len());
        if s.dim() == 0 {
            points.push(k.vertex(s.vertices()[0]).clone());
            tags.push(VertexTag::Original(s.vertices()[0]));
        } else {
            points.push(Point::barycentre(&k.points_of(s)));
            tags.push(VertexTag::Barycentre(s.clone()));
        }
    }
    (points, tags, index)
}

/// All strictly increasing face chains whose members satisfy `keep`, each as
/// the set of derived-vertex indices of its members.
fn chains(
    k: &SimplicialComplex,
    index: &HashMap<&Simplex, usize>,
    keep: impl Fn(&Simplex) -> bool,
) -> BTreeSet<Simplex> {
    let mut by_dim: Vec<&Simplex> = k.simplices().iter().filter(|s| keep(s)).collect();
    by_dim.sort_by_key(|s| s.dim());
    let mut ending_at: HashMap<&Simplex, Vec<Vec<usize>>> = HashMap::new();
    let mut out = BTreeSet::new();
    for s in by_dim {
        let top = index[s];
        let mut mine = vec![vec![top]];
        for face in s.faces() {
            if face.vertices().len() == s.vertices().len() {
                continue;
            }
            if let Some(below) = ending_at.get(&face) {
                for c in below {
                    let mut c = c.clone();
                    c.push(top);
                    mine.push(c);
                }
            }
        }
        for c in &mine {
            out.insert(Simplex::new(c.clone()));
        }
        ending_at.insert(s, mine);
    }
    out
}

pub(super) fn derived_complex(k: &Arc<SimplicialComplex>) -> DerivedComplex {
    let (points, tags, index) = derived_vertices(k, |_| true);
    let simplices = chains(k, &index, |_| true);
    let new_vertices = tags
        .iter()
        .skip(k.num_vertices())
        .map(|t| {
            let s = t.source();
            let w = Rational::new(1, s.vertices().len() as i64);
            s.vertices().iter().map(|&v| (v, w.clone())).collect()
        })
        .collect();
    let lineage = Lineage {
        parent: Arc::clone(k),
        new_vertices,
    };
    let complex = SimplicialComplex::from_closed(k.ambient_dim(), points, simplices, Some(lineage));
    DerivedComplex {
        complex: Arc::new(complex),
        tags,
    }
}

pub(super) fn supplement(k: &Arc<SimplicialComplex>, sub: &Subcomplex) -> Result<SimplicialComplex> {
    sub.check_within(k)?;
    let keep = |s: &Simplex| !sub.contains(s);
    let (points, _, index) = derived_vertices(k, keep);
    let simplices = chains(k, &index, keep);
    Ok(SimplicialComplex::from_closed(k.ambient_dim(), points, simplices, None))
}

pub(super) fn supplement_euler_characteristic(k: &SimplicialComplex, sub: &Subcomplex) -> Result<i64> {
    sub.check_within(k)?;
    // g(σ) = Σ over chains topped by σ of (−1)^(length−1)
    //      = 1 − Σ_{τ ⊊ σ, τ ∉ sub} g(τ)
    let mut by_dim: Vec<&Simplex> = k.simplices().iter().filter(|s| !sub.contains(s)).collect();
    by_dim.sort_by_key(|s| s.dim());
    let mut g: HashMap<Simplex, i64> = HashMap::with_capacity(by_dim.len());
    let mut chi = 0;
    for s in by_dim {
        let mut val = 1;
        for face in s.faces() {
            if face.vertices().len() < s.vertices().len() {
                if let Some(x) = g.get(&face) {
                    val -= x;
                }
            }
        }
        chi += val;
        g.insert(s.clone(), val);
    }
    Ok(chi)
}

pub(super) fn simplicial_neighbourhood(k: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    if v >= k.num_vertices() {
        return Err(Error::InvalidVertex(v));
    }
    let mut closed = BTreeSet::new();
    for s in k.simplices().iter().filter(|s| s.contains(v)) {
        closed.extend(s.faces());
    }
    Ok(k.induced(closed))
}

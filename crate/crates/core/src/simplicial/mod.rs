//! Geometric simplicial complexes over a shared rational vertex table.
//!
//! Simplices are strictly increasing vertex-index tuples; the geometry lives
//! only in the vertex table. Every complex stores all of its faces.
//!
//! Complexes produced by subdividing another complex (derived complexes,
//! hyperplane splits) remember their parent together with each appended
//! vertex written as an affine combination of parent vertices lying in one
//! parent simplex. Parent vertices keep their indices. This lineage lets a
//! function that is linear on the parent be re-expressed on the child exactly,
//! without point location.

mod derived;
mod locate;
mod lp;
mod validate;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exact_math::{Point, Rational};

pub use derived::{DerivedComplex, VertexTag};
pub use locate::BoundingBox;
pub use validate::{ValidateOptions, Violation};

/// A simplex as a strictly increasing tuple of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and deduplicates `indices`.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Simplex(indices)
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Dimension; the empty tuple (never stored) would be `-1`.
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// All nonempty faces, including `self`.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.0.len();
        (1u64..(1u64 << k))
            .map(move |mask| Simplex((0..k).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect()))
    }

    /// Faces of codimension one, each paired with the vertex it omits.
    pub fn facets(&self) -> impl Iterator<Item = (Simplex, usize)> + '_ {
        (0..self.0.len()).filter(|_| self.0.len() > 1).map(move |i| {
            let mut f = self.0.clone();
            let omitted = f.remove(i);
            (Simplex(f), omitted)
        })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

pub(crate) struct Lineage {
    pub parent: Arc<SimplicialComplex>,
    /// Appended vertex `parent.num_vertices() + i` is `Σ w·parent[j]` over
    /// `new_vertices[i]`.
    pub new_vertices: Vec<Vec<(usize, Rational)>>,
}

/// A finite geometric simplicial complex in `ℚ^ambient_dim`.
pub struct SimplicialComplex {
    ambient_dim: usize,
    vertices: Vec<Point>,
    simplices: BTreeSet<Simplex>,
    maximal: Vec<Simplex>,
    lineage: Option<Arc<Lineage>>,
    vertex_lookup: OnceLock<HashMap<Point, usize>>,
    boxes: OnceLock<Vec<BoundingBox>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.clone(),
            simplices: self.simplices.clone(),
            maximal: self.maximal.clone(),
            lineage: self.lineage.clone(),
            vertex_lookup: OnceLock::new(),
            boxes: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices && self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.vertices.hash(state);
        self.maximal.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("ambient_dim", &self.ambient_dim)
            .field("vertices", &self.vertices)
            .field("maximal", &self.maximal)
            .finish()
    }
}

fn maximal_of(simplices: &BTreeSet<Simplex>) -> Vec<Simplex> {
    // A simplex is maximal iff no one-vertex extension of it is present.
    // Extensions are found by scanning cofaces through a vertex → simplices map.
    let mut by_vertex: HashMap<usize, Vec<&Simplex>> = HashMap::new();
    for s in simplices {
        for &v in s.vertices() {
            by_vertex.entry(v).or_default().push(s);
        }
    }
    simplices
        .iter()
        .filter(|s| {
            let v0 = s.vertices()[0];
            !by_vertex[&v0]
                .iter()
                .any(|t| t.vertices().len() > s.vertices().len() && s.is_face_of(t))
        })
        .cloned()
        .collect()
}

impl SimplicialComplex {
    /// Builds a complex from the given simplices without closing under faces
    /// or validating. Use [`SimplicialComplex::validate`] to check the result.
    pub fn from_simplices(
        ambient_dim: usize,
        vertices: Vec<Point>,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Self {
        let simplices: BTreeSet<Simplex> = simplices.into_iter().filter(|s| !s.vertices().is_empty()).collect();
        let maximal = maximal_of(&simplices);
        SimplicialComplex {
            ambient_dim,
            vertices,
            simplices,
            maximal,
            lineage: None,
            vertex_lookup: OnceLock::new(),
            boxes: OnceLock::new(),
        }
    }

    /// Builds a complex from maximal (or any generating) simplices, closing
    /// under faces. Indices and coordinate lengths are checked; geometric
    /// invariants are not (see [`SimplicialComplex::validate`]).
    pub fn from_maximal(
        ambient_dim: usize,
        vertices: Vec<Point>,
        generators: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        for v in &vertices {
            v.check_dim(ambient_dim)?;
        }
        let mut simplices = BTreeSet::new();
        for g in generators {
            if let Some(&bad) = g.vertices().iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::InvalidVertex(bad));
            }
            if g.vertices().is_empty() {
                continue;
            }
            for f in g.faces() {
                simplices.insert(f);
            }
        }
        Ok(Self::from_closed(ambient_dim, vertices, simplices, None))
    }

    pub(crate) fn from_closed(
        ambient_dim: usize,
        vertices: Vec<Point>,
        simplices: BTreeSet<Simplex>,
        lineage: Option<Lineage>,
    ) -> Self {
        let maximal = maximal_of(&simplices);
        SimplicialComplex {
            ambient_dim,
            vertices,
            simplices,
            maximal,
            lineage: lineage.map(Arc::new),
            vertex_lookup: OnceLock::new(),
            boxes: OnceLock::new(),
        }
    }

    /// Like [`SimplicialComplex::from_maximal`], then runs the full
    /// validation and fails with the violations found.
    pub fn new_validated(
        ambient_dim: usize,
        vertices: Vec<Point>,
        generators: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let k = Self::from_maximal(ambient_dim, vertices, generators)?;
        let violations = k.validate(ValidateOptions::default());
        if violations.is_empty() {
            Ok(k)
        } else {
            Err(Error::InvalidComplex(violations))
        }
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self::from_closed(ambient_dim, Vec::new(), BTreeSet::new(), None)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Maximum simplex dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.maximal.iter().map(Simplex::dim).max()
    }

    pub fn points_of(&self, s: &Simplex) -> Vec<Point> {
        s.vertices().iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Number of simplices of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.simplices {
            let d = s.dim();
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// `Σₘ (−1)ᵐ αₘ` with `αₘ` the number of `m`-simplices; zero when empty.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Bounding boxes of the maximal simplices, in the same order.
    pub(crate) fn maximal_boxes(&self) -> &[BoundingBox] {
        self.boxes
            .get_or_init(|| self.maximal.iter().map(|s| BoundingBox::of(self, s)).collect())
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertex_lookup
            .get_or_init(|| self.vertices.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect())
            .get(p)
            .copied()
    }

    /// Same vertex table and simplex set, lineage ignored; pointer equality
    /// short-circuits.
    pub fn same(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
        Arc::ptr_eq(a, b)
            || (a.vertices.len() == b.vertices.len() && a.simplices.len() == b.simplices.len() && **a == **b)
    }

    /// Equality of the geometric complexes: same set of simplices when each
    /// simplex is read as its set of vertex coordinates.
    pub fn same_geometry(&self, other: &SimplicialComplex) -> bool {
        let key = |k: &SimplicialComplex| -> BTreeSet<Vec<Point>> {
            k.simplices
                .iter()
                .map(|s| {
                    let mut pts = k.points_of(s);
                    pts.sort();
                    pts
                })
                .collect()
        };
        self.ambient_dim == other.ambient_dim && key(self) == key(other)
    }

    /// The parent this complex was subdivided from, if it was built by one of
    /// the refining operations.
    pub fn parent(&self) -> Option<&Arc<SimplicialComplex>> {
        self.lineage.as_ref().map(|l| &l.parent)
    }

    /// True if `descendant` was obtained from `ancestor` by a chain of
    /// refining operations (or is the same complex).
    pub fn is_ancestor(ancestor: &Arc<SimplicialComplex>, descendant: &Arc<SimplicialComplex>) -> bool {
        let mut node = descendant;
        loop {
            if SimplicialComplex::same(ancestor, node) {
                return true;
            }
            match &node.lineage {
                Some(l) => node = &l.parent,
                None => return false,
            }
        }
    }

    /// Re-expresses per-vertex `values` of a function linear on `ancestor` on
    /// the vertices of `descendant`. `None` if `ancestor` is not an ancestor.
    pub fn transport(
        ancestor: &Arc<SimplicialComplex>,
        descendant: &Arc<SimplicialComplex>,
        values: &[Rational],
    ) -> Option<Vec<Rational>> {
        let mut chain: Vec<&Lineage> = Vec::new();
        let mut node = descendant;
        loop {
            if SimplicialComplex::same(ancestor, node) {
                break;
            }
            let l = node.lineage.as_ref()?;
            chain.push(l);
            node = &l.parent;
        }
        let mut vals = values.to_vec();
        for l in chain.into_iter().rev() {
            let extra: Vec<Rational> = l
                .new_vertices
                .iter()
                .map(|ws| ws.iter().map(|(j, w)| w * &vals[*j]).sum())
                .collect();
            vals.extend(extra);
        }
        Some(vals)
    }

    pub fn validate(&self, opts: ValidateOptions) -> Vec<Violation> {
        validate::validate(self, opts)
    }

    pub fn is_valid(&self) -> bool {
        self.validate(ValidateOptions::default()).is_empty()
    }

    /// The unique simplex whose relative interior contains `x`.
    pub fn carrier(&self, x: &Point) -> Result<Simplex> {
        locate::carrier(self, x)
    }

    /// Carrier together with the barycentric coordinates of `x` on it.
    pub fn locate(&self, x: &Point) -> Result<(Simplex, Vec<Rational>)> {
        locate::locate(self, x)
    }

    /// Whether every simplex of `self` lies in a simplex of `coarse`.
    pub fn refines(&self, coarse: &SimplicialComplex) -> bool {
        locate::refines(self, coarse)
    }

    /// Whether `|self| = |other|`, given that `self` refines `other`.
    pub(crate) fn covers_when_refining(&self, other: &SimplicialComplex) -> bool {
        locate::covers(self, other)
    }

    /// First barycentric subdivision, with the source simplex of every vertex.
    pub fn derived_complex(self: &Arc<Self>) -> DerivedComplex {
        derived::derived_complex(self)
    }

    /// The subcomplex of the derived complex made of simplices with no vertex
    /// in the derived complex of `sub`.
    pub fn supplement(self: &Arc<Self>, sub: &Subcomplex) -> Result<SimplicialComplex> {
        derived::supplement(self, sub)
    }

    /// χ of the supplement of `sub`, computed by counting face chains without
    /// realizing the derived complex geometrically.
    pub fn supplement_euler_characteristic(&self, sub: &Subcomplex) -> Result<i64> {
        derived::supplement_euler_characteristic(self, sub)
    }

    /// Face closure of the simplices containing vertex `v`, reindexed to the
    /// vertices it uses.
    pub fn simplicial_neighbourhood(&self, v: usize) -> Result<SimplicialComplex> {
        derived::simplicial_neighbourhood(self, v)
    }

    /// Restriction to the given simplex set (closed under faces by the
    /// caller), reindexed to the vertices it uses in their original order.
    pub fn induced(&self, simplices: impl IntoIterator<Item = Simplex>) -> SimplicialComplex {
        let simplices: BTreeSet<Simplex> = simplices.into_iter().collect();
        let used: BTreeSet<usize> = simplices.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        let remap: HashMap<usize, usize> = used.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices = used.iter().map(|&v| self.vertices[v].clone()).collect();
        let simplices = simplices
            .iter()
            .map(|s| Simplex::new(s.vertices().iter().map(|v| remap[v]).collect()))
            .collect();
        Self::from_closed(self.ambient_dim, vertices, simplices, None)
    }
}

/// A set of simplices of a parent complex, closed under faces.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Subcomplex {
    simplices: BTreeSet<Simplex>,
}

impl Subcomplex {
    /// Closes `generators` under faces.
    pub fn new(generators: impl IntoIterator<Item = Simplex>) -> Self {
        let mut simplices = BTreeSet::new();
        for g in generators {
            for f in g.faces() {
                simplices.insert(f);
            }
        }
        Subcomplex { simplices }
    }

    pub fn full(k: &SimplicialComplex) -> Self {
        Subcomplex {
            simplices: k.simplices().clone(),
        }
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    pub(crate) fn check_within(&self, k: &SimplicialComplex) -> Result<()> {
        match self.simplices.iter().find(|s| !k.contains(s)) {
            Some(s) => Err(Error::NotSubcomplex(s.vertices().to_vec())),
            None => Ok(()),
        }
    }
}

//! Exact scalars, points and the two affine solves everything else is built on.

mod linalg;
mod point;
mod rational;

use std::fmt;

pub use point::Point;
pub use rational::Rational;

pub(crate) use linalg::determinant;

use crate::error::{Error, Result};

/// An affine map `x ↦ gradient·x + offset`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineFunctional {
    pub gradient: Vec<Rational>,
    pub offset: Rational,
}

impl AffineFunctional {
    pub fn new(gradient: Vec<Rational>, offset: Rational) -> Self {
        AffineFunctional { gradient, offset }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        AffineFunctional {
            gradient: vec![Rational::zero(); dim],
            offset: c,
        }
    }

    pub fn dim(&self) -> usize {
        self.gradient.len()
    }

    pub fn eval(&self, x: &Point) -> Rational {
        debug_assert_eq!(x.dim(), self.dim());
        self.gradient.iter().zip(x.coords()).fold(
            self.offset.clone(),
            |acc, (g, c)| {
                if g.is_zero() {
                    acc
                } else {
                    acc + g * c
                }
            },
        )
    }

    pub fn is_constant(&self) -> bool {
        self.gradient.iter().all(Rational::is_zero)
    }

    /// Positive multiple with leading nonzero gradient entry equal to one,
    /// so that functionals defining the same oriented hyperplane compare
    /// equal. Constant functionals are returned unchanged.
    pub fn normalized(&self) -> AffineFunctional {
        match self.gradient.iter().find(|g| !g.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let s = lead.abs().recip();
                AffineFunctional {
                    gradient: self.gradient.iter().map(|g| g * &s).collect(),
                    offset: &self.offset * &s,
                }
            }
        }
    }

    /// Same hyperplane, orientation forgotten.
    pub fn hyperplane_key(&self) -> AffineFunctional {
        let n = self.normalized();
        match n.gradient.iter().find(|g| !g.is_zero()) {
            Some(lead) if lead.is_negative() => AffineFunctional {
                gradient: n.gradient.iter().map(|g| -g).collect(),
                offset: -&n.offset,
            },
            _ => n,
        }
    }
}

impl fmt::Debug for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gradient.iter().map(|g| g.to_string()).collect();
        write!(f, "{};{}", g.join(","), self.offset)
    }
}

impl std::str::FromStr for AffineFunctional {
    type Err = Error;

    /// `"g1,..,gn;c"`.
    fn from_str(s: &str) -> Result<Self> {
        let (g, c) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"g1,..,gn;c\", found {s:?}")))?;
        let gradient: Point = g.parse()?;
        Ok(AffineFunctional {
            gradient: gradient.into_coords(),
            offset: c.trim().parse()?,
        })
    }
}

fn check_dims(vertices: &[Point], x: Option<&Point>) -> Result<usize> {
    let Some(first) = vertices.first() else {
        return Err(Error::AffinelyDependent);
    };
    let n = first.dim();
    for v in vertices {
        v.check_dim(n)?;
    }
    if let Some(x) = x {
        x.check_dim(n)?;
    }
    Ok(n)
}

/// Barycentric coordinates of `x` with respect to the affinely independent
/// `vertices`, or `None` when `x` is off their affine hull.
///
/// `x` lies in the simplex iff every coordinate is nonnegative, and in its
/// relative interior iff every coordinate is positive.
pub fn barycentric_coordinates(vertices: &[Point], x: &Point) -> Result<Option<Vec<Rational>>> {
    let n = check_dims(vertices, Some(x))?;
    let k = vertices.len();
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    for j in 0..n {
        a.push(vertices.iter().map(|v| v[j].clone()).collect());
        b.push(x[j].clone());
    }
    a.push(vec![Rational::one(); k]);
    b.push(Rational::one());
    let s = linalg::solve(&a, &b);
    if s.rank < k {
        return Err(Error::AffinelyDependent);
    }
    Ok(s.solution)
}

pub fn affinely_independent(vertices: &[Point]) -> bool {
    let Ok(n) = check_dims(vertices, None) else {
        return false;
    };
    if vertices.len() > n + 1 {
        return false;
    }
    let rows: Vec<Vec<Rational>> = vertices.iter().map(affine_row).collect();
    linalg::rank(&rows, n + 1) == vertices.len()
}

/// `[1, x₁, …, xₙ]`: the coefficient row of `offset + gradient·x`.
fn affine_row(v: &Point) -> Vec<Rational> {
    std::iter::once(Rational::one())
        .chain(v.coords().iter().cloned())
        .collect()
}

/// An affine functional taking `values[i]` at `vertices[i]`.
///
/// Unknowns are ordered `(offset, g₁, …, gₙ)`; when the vertices span less than
/// the ambient space the free unknowns are set to zero, so equal values yield
/// the constant functional.
pub fn affine_extension(vertices: &[Point], values: &[Rational]) -> Result<AffineFunctional> {
    check_dims(vertices, None)?;
    if values.len() != vertices.len() {
        return Err(Error::ValueCount {
            expected: vertices.len(),
            found: values.len(),
        });
    }
    let a: Vec<Vec<Rational>> = vertices.iter().map(affine_row).collect();
    let s = linalg::solve(&a, values);
    if s.rank < vertices.len() {
        return Err(Error::AffinelyDependent);
    }
    let mut x = s.solution.expect("independent rows are always consistent");
    let offset = x.remove(0);
    Ok(AffineFunctional { gradient: x, offset })
}

/// Affine functionals whose common zero set is the affine hull of `vertices`
/// (empty when the vertices span the ambient space).
pub fn hull_equations(vertices: &[Point]) -> Result<Vec<AffineFunctional>> {
    let n = check_dims(vertices, None)?;
    let a: Vec<Vec<Rational>> = vertices.iter().map(affine_row).collect();
    Ok(linalg::null_space(&a, n + 1)
        .into_iter()
        .map(|mut v| {
            let offset = v.remove(0);
            AffineFunctional { gradient: v, offset }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn barycentric_on_interval() {
        let vs = [p("0"), p("1")];
        assert_eq!(
            barycentric_coordinates(&vs, &p("1/4")).unwrap().unwrap(),
            vec![q("3/4"), q("1/4")]
        );
        assert_eq!(
            barycentric_coordinates(&vs, &p("2")).unwrap().unwrap(),
            vec![q("-1"), q("2")]
        );
    }

    #[test]
    fn barycentric_triangle_centroid() {
        let vs = [p("0,0"), p("1,0"), p("0,1")];
        let t = q("1/3");
        assert_eq!(
            barycentric_coordinates(&vs, &p("1/3,1/3")).unwrap().unwrap(),
            vec![t.clone(), t.clone(), t]
        );
    }

    #[test]
    fn barycentric_off_hull_and_errors() {
        let edge = [p("0,0"), p("1,0")];
        assert_eq!(barycentric_coordinates(&edge, &p("1/2,1")).unwrap(), None);
        let dependent = [p("0,0"), p("1,1"), p("2,2")];
        assert!(matches!(
            barycentric_coordinates(&dependent, &p("0,0")),
            Err(Error::AffinelyDependent)
        ));
        assert!(matches!(
            barycentric_coordinates(&edge, &p("0")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn extension_free_coefficient_pinned_to_zero() {
        let l = affine_extension(&[p("0,0"), p("1,0")], &[q("0"), q("1")]).unwrap();
        assert_eq!(l.gradient, vec![q("1"), q("0")]);
        assert_eq!(l.offset, q("0"));
    }

    #[test]
    fn extension_two_point_interpolation() {
        let l = affine_extension(&[p("0"), p("1")], &[q("1"), q("-1")]).unwrap();
        assert_eq!(l.gradient, vec![q("-2")]);
        assert_eq!(l.offset, q("1"));
    }

    #[test]
    fn extension_of_equal_values_is_constant() {
        for edge in [[p("0,0"), p("1,0")], [p("1,0"), p("1,1")], [p("1/2,3"), p("-2,5/7")]] {
            let l = affine_extension(&edge, &[q("7/3"), q("7/3")]).unwrap();
            assert!(l.is_constant());
            assert_eq!(l.offset, q("7/3"));
        }
    }

    #[test]
    fn extension_rejects_dependent_vertices() {
        assert!(matches!(
            affine_extension(&[p("0"), p("0")], &[q("0"), q("1")]),
            Err(Error::AffinelyDependent)
        ));
    }

    #[test]
    fn hull_equations_vanish_on_hull() {
        let edge = [p("1,0,0"), p("0,1,0")];
        let eqs = hull_equations(&edge).unwrap();
        assert_eq!(eqs.len(), 2);
        for e in &eqs {
            for v in &edge {
                assert!(e.eval(v).is_zero());
            }
            assert!(!e.is_constant());
        }
        assert!(hull_equations(&[p("0,0"), p("1,0"), p("0,1")]).unwrap().is_empty());
    }

    #[test]
    fn functional_text_form() {
        let l: AffineFunctional = "1,-2;1/2".parse().unwrap();
        assert_eq!(l.eval(&p("1,1")), q("-1/2"));
        assert!("1,2".parse::<AffineFunctional>().is_err());
    }
}

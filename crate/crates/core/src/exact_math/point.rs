use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

use super::Rational;

/// A point of rational affine space. Ordered lexicographically by coordinate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// `Σ wᵢ·pᵢ`. Weights are not required to sum to one.
    pub fn combination<'a, I>(dim: usize, terms: I) -> Point
    where
        I: IntoIterator<Item = (&'a Rational, &'a Point)>,
    {
        let mut acc = vec![Rational::zero(); dim];
        for (w, p) in terms {
            if w.is_zero() {
                continue;
            }
            for (a, c) in acc.iter_mut().zip(p.coords()) {
                *a = &*a + &(w * c);
            }
        }
        Point(acc)
    }

    /// Barycentre of a non-empty point list.
    pub fn barycentre<'a, I>(points: I) -> Point
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let pts: Vec<&Point> = points.into_iter().collect();
        assert!(!pts.is_empty(), "barycentre of no points");
        let w = Rational::new(1, pts.len() as i64);
        Point::combination(pts[0].dim(), pts.into_iter().map(|p| (&w, p)))
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Point {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Point {
    type Err = Error;

    /// Comma-separated rationals, e.g. `"1/4,1/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Point(Vec::new()));
        }
        s.split(',').map(|c| c.parse()).collect::<Result<Vec<_>>>().map(Point)
    }
}

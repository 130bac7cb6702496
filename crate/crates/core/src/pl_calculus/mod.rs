//! Continuous piecewise-linear functions on a polyhedron, represented by a
//! linearizing triangulation and one exact value per vertex.
//!
//! Lattice operations refine first and then act vertex-wise: once `f − g`
//! has constant sign on every simplex, the vertex-wise minimum is linear on
//! each simplex and agrees with the pointwise minimum everywhere.

mod lattice;
mod refine;
mod split;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_math::{Point, Rational};
use crate::simplicial::{Simplex, SimplicialComplex, Subcomplex};

pub use lattice::{lattice_op, linear_combination, signed_parts, LatticeOp};
pub use refine::{common_linearization, common_refinement, common_refinement_complex};
pub use split::{split_by_hyperplane, split_by_levels};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    complex: Arc<SimplicialComplex>,
    values: Vec<Rational>,
}

impl PLFunction {
    pub fn new(complex: Arc<SimplicialComplex>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != complex.num_vertices() {
            return Err(Error::ValueCount {
                expected: complex.num_vertices(),
                found: values.len(),
            });
        }
        Ok(PLFunction { complex, values })
    }

    pub fn constant(complex: Arc<SimplicialComplex>, c: Rational) -> Self {
        let values = vec![c; complex.num_vertices()];
        PLFunction { complex, values }
    }

    pub fn zero(complex: Arc<SimplicialComplex>) -> Self {
        Self::constant(complex, Rational::zero())
    }

    /// The unit `𝟙` of the polyhedron.
    pub fn one(complex: Arc<SimplicialComplex>) -> Self {
        Self::constant(complex, Rational::one())
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_at_vertex(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn evaluate(&self, x: &Point) -> Result<Rational> {
        let (carrier, coords) = self.complex.locate(x)?;
        Ok(carrier
            .vertices()
            .iter()
            .zip(&coords)
            .map(|(&v, c)| c * &self.values[v])
            .sum())
    }

    pub fn scale(&self, a: &Rational) -> PLFunction {
        PLFunction {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(|v| v * a).collect(),
        }
    }

    pub fn neg(&self) -> PLFunction {
        PLFunction {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Valid because the function is linear on every simplex.
    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rational::is_zero)
    }

    /// Pointwise equality, decided on a common refinement.
    pub fn equals(&self, other: &PLFunction) -> Result<bool> {
        if SimplicialComplex::same(&self.complex, &other.complex) {
            return Ok(self.values == other.values);
        }
        let both = common_refinement(&[self, other])?;
        Ok(both[0].values == both[1].values)
    }

    /// `f ≤ g` everywhere.
    pub fn le(&self, other: &PLFunction) -> Result<bool> {
        let both = common_refinement(&[self, other])?;
        Ok(both[0].values.iter().zip(&both[1].values).all(|(a, b)| a <= b))
    }

    pub fn max_value(&self) -> Rational {
        self.values.iter().cloned().fold(self.values[0].clone(), Rational::max)
    }

    /// The simplices of the triangulation on which a nonnegative function
    /// vanishes identically; its polyhedron is the zero set of the function.
    pub fn zero_set_subcomplex(&self) -> Result<Subcomplex> {
        if let Some(v) = self.values.iter().position(Rational::is_negative) {
            return Err(Error::NegativeFunction { vertex: v });
        }
        Ok(Subcomplex::new(
            self.complex
                .simplices()
                .iter()
                .filter(|s| s.vertices().iter().all(|&v| self.values[v].is_zero()))
                .cloned()
                .collect::<Vec<Simplex>>(),
        ))
    }

    /// The same function on `target`, which must refine the current
    /// triangulation (checked when there is no lineage to follow).
    pub fn reexpress(&self, target: &Arc<SimplicialComplex>) -> Result<PLFunction> {
        if SimplicialComplex::same(&self.complex, target) {
            return Ok(PLFunction {
                complex: Arc::clone(target),
                values: self.values.clone(),
            });
        }
        if let Some(values) = SimplicialComplex::transport(&self.complex, target, &self.values) {
            return Ok(PLFunction {
                complex: Arc::clone(target),
                values,
            });
        }
        let values = target
            .vertices()
            .iter()
            .map(|p| self.evaluate(p).map_err(|_| Error::PolyhedraDiffer))
            .collect::<Result<Vec<_>>>()?;
        Ok(PLFunction {
            complex: Arc::clone(target),
            values,
        })
    }
}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PLFunction")
            .field("vertices", &self.complex.vertices())
            .field("maximal", &self.complex.maximal_simplices())
            .field("values", &self.values)
            .finish()
    }
}

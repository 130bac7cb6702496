//! JSON file formats for complexes, functions, decompositions and reports.
//!
//! Every rational is written in its text form (`"p/q"` or `"p"`). Writing is
//! canonical: vertices in index order, maximal simplices sorted, compact
//! separators, so equal values serialize to equal bytes.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact_math::{Point, Rational};
use crate::hats::HatDecomposition;
use crate::pl_calculus::PLFunction;
use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub maximal_simplices: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    /// An inline complex object, or a path relative to the function file.
    pub complex: Value,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub vertices: Vec<usize>,
    pub coefficients: Vec<String>,
}

fn rationals(texts: &[String]) -> Result<Vec<Rational>> {
    texts.iter().map(|t| t.parse()).collect()
}

fn texts(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let mut maximal: Vec<Vec<usize>> = k.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect();
        maximal.sort();
        ComplexFile {
            ambient_dim: k.ambient_dim(),
            vertices: k.vertices().iter().map(|p| texts(p.coords())).collect(),
            maximal_simplices: maximal,
        }
    }

    /// Closes faces and validates.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let vertices = self
            .vertices
            .iter()
            .map(|c| rationals(c).map(Point::new))
            .collect::<Result<Vec<_>>>()?;
        let generators = self.maximal_simplices.iter().map(|s| Simplex::new(s.clone()));
        SimplicialComplex::new_validated(self.ambient_dim, vertices, generators).map_err(|e| match e {
            Error::InvalidComplex(_) => e,
            other => Error::Parse(other.to_string()),
        })
    }
}

pub fn complex_to_string(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexFile::from_complex(k)).expect("plain data serializes")
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = serde_json::from_str(text)?;
    file.to_complex()
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

/// Hex SHA-256 of the canonical serialization.
pub fn fingerprint(k: &SimplicialComplex) -> String {
    hex::encode(Sha256::digest(complex_to_string(k).as_bytes()))
}

pub fn function_to_string(f: &PLFunction) -> String {
    let file = FunctionFile {
        complex: serde_json::to_value(ComplexFile::from_complex(f.complex())).expect("plain data serializes"),
        values: texts(f.values()),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Parses a function file; a complex given by path is resolved against `base`.
pub fn parse_function(text: &str, base: Option<&Path>) -> Result<PLFunction> {
    let file: FunctionFile = serde_json::from_str(text)?;
    let complex = match &file.complex {
        Value::String(path) => {
            let path = match base {
                Some(dir) => dir.join(path),
                None => path.into(),
            };
            read_complex(&path)?
        }
        inline => serde_json::from_value::<ComplexFile>(inline.clone())?.to_complex()?,
    };
    let values = rationals(&file.values)?;
    PLFunction::new(Arc::new(complex), values).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_function(path: &Path) -> Result<PLFunction> {
    parse_function(&std::fs::read_to_string(path)?, path.parent())
}

pub fn decomposition_to_string(d: &HatDecomposition) -> String {
    let file = DecompositionFile {
        vertices: d.terms.iter().map(|(_, v)| *v).collect(),
        coefficients: d.terms.iter().map(|(a, _)| a.to_string()).collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Pairs a decomposition file with the triangulation it refers to.
pub fn parse_decomposition(text: &str, triangulation: Arc<SimplicialComplex>) -> Result<HatDecomposition> {
    let file: DecompositionFile = serde_json::from_str(text)?;
    if file.vertices.len() != file.coefficients.len() {
        return Err(Error::Parse("vertices and coefficients differ in length".into()));
    }
    if let Some(&v) = file.vertices.iter().find(|&&v| v >= triangulation.num_vertices()) {
        return Err(Error::Parse(format!("vertex {v} out of range")));
    }
    let coefficients = rationals(&file.coefficients)?;
    Ok(HatDecomposition {
        triangulation,
        terms: coefficients.into_iter().zip(file.vertices).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hats::decompose;
    use crate::instance::{generate_instance, InstanceSpec, Preset};

    const INTERVAL: &str = r#"{"ambient_dim":1,"vertices":[["0"],["1"]],"maximal_simplices":[[0,1]]}"#;

    #[test]
    fn interval_file() {
        let k = parse_complex(INTERVAL).unwrap();
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(complex_to_string(&k), INTERVAL);
    }

    #[test]
    fn normalizes_rationals_and_closes_faces() {
        let k = parse_complex(r#"{"ambient_dim":1,"vertices":[["0"],["2/4"]],"maximal_simplices":[[1,0]]}"#).unwrap();
        assert_eq!(k.vertex(1).to_string(), "(1/2)");
        assert_eq!(k.f_vector(), vec![2, 1]);
    }

    #[test]
    fn malformed_inputs() {
        let bad = [
            r#"{"ambient_dim":1,"vertices":[["0"],["1/0"]],"maximal_simplices":[[0,1]]}"#,
            r#"{"ambient_dim":1,"vertices":[["0"],["1"]],"maximal_simplices":[[0,2]]}"#,
            r#"{"ambient_dim":2,"vertices":[["0"],["1"]],"maximal_simplices":[[0,1]]}"#,
            r#"{"ambient_dim":1,"vertices":[["0"],["0"]],"maximal_simplices":[[0],[1]]}"#,
            r#"{"ambient_dim":1,"vertices":[["0"]]}"#,
            "not json",
        ];
        for text in bad {
            let err = parse_complex(text).unwrap_err();
            assert!(err.is_malformed_input(), "{text}: {err}");
        }
    }

    #[test]
    fn function_with_complex_path() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("k.json"), INTERVAL).unwrap();
        let fpath = dir.path().join("f.json");
        std::fs::write(&fpath, r#"{"complex":"k.json","values":["1","-1/2"]}"#).unwrap();
        let f = read_function(&fpath).unwrap();
        assert_eq!(f.evaluate(&"1/2".parse().unwrap()).unwrap(), "1/4".parse().unwrap());
        let err = parse_function(r#"{"complex":"missing.json","values":[]}"#, Some(dir.path())).unwrap_err();
        assert!(err.is_malformed_input());
        let err = parse_function(&format!(r#"{{"complex":{INTERVAL},"values":["1"]}}"#), None).unwrap_err();
        assert!(err.is_malformed_input());
    }

    #[test]
    fn round_trips() {
        let inst = generate_instance(&InstanceSpec::new(Preset::SquareWithHole, 2, 2, 3));
        let text = complex_to_string(&inst.complex);
        assert_eq!(parse_complex(&text).unwrap(), *inst.complex);
        for f in &inst.functions {
            let back = parse_function(&function_to_string(f), None).unwrap();
            assert_eq!(back.values(), f.values());
            assert_eq!(**back.complex(), **f.complex());
            let d = decompose(f);
            let again = parse_decomposition(&decomposition_to_string(&d), Arc::clone(f.complex())).unwrap();
            assert_eq!(again, d);
        }
        assert_eq!(fingerprint(&inst.complex).len(), 64);
    }
}

// Hat decompositions and the hat-meet reduction.

use std::sync::Arc;

use plval::exact_math::{Point, Rational};
use plval::hats::{apex_point, decompose, hat, hat_meet_reduction, HatCheck};
use plval::pl_calculus::PLFunction;
use plval::simplicial::{Simplex, SimplicialComplex};

pub fn run() -> plval::Result<()> {
    let path = Arc::new(SimplicialComplex::new_validated(
        1,
        vec![Point::from_ints(&[0]), "1/2".parse()?, Point::from_ints(&[1])],
        [Simplex::new(vec![0, 1]), Simplex::new(vec![1, 2])],
    )?);

    let f = PLFunction::new(path.clone(), vec!["3".parse()?, Rational::zero(), "1/2".parse()?])?;
    let d = decompose(&f);
    println!(
        "f = {}",
        d.terms
            .iter()
            .map(|(a, v)| format!("{a}·h{v}"))
            .collect::<Vec<_>>()
            .join(" + ")
    );

    let hats = [hat(&path, 0)?, hat(&path, 1)?];
    let hn = hat(&path, 2)?;
    let ks = hat_meet_reduction(&hats, &hn, &HatCheck::Triangulation(path.clone()))?;
    for (i, k) in ks.iter().enumerate() {
        if k.is_zero() {
            println!("k{i} = 0");
        } else {
            let doubled = k.scale(&Rational::from_integer(2));
            println!("2k{i} is a hat with apex {}", apex_point(&doubled).expect("hat-shaped"));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

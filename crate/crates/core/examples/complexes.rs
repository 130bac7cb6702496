// Building, validating and subdividing simplicial complexes.

use std::sync::Arc;

use plval::exact_math::Point;
use plval::simplicial::{Simplex, SimplicialComplex, Subcomplex, ValidateOptions};

pub fn run() -> plval::Result<()> {
    let square = Arc::new(SimplicialComplex::new_validated(
        2,
        vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[1, 1]),
            Point::from_ints(&[0, 1]),
        ],
        [Simplex::new(vec![0, 1, 2]), Simplex::new(vec![0, 2, 3])],
    )?);
    println!(
        "square: f-vector {:?}, χ = {}",
        square.f_vector(),
        square.euler_characteristic()
    );

    let derived = square.derived_complex();
    println!(
        "derived: f-vector {:?}, χ = {}",
        derived.complex.f_vector(),
        derived.complex.euler_characteristic()
    );

    let x: Point = "1/2,1/2".parse()?;
    println!("carrier of {x}: {:?}", square.carrier(&x)?);

    let corner = Subcomplex::new([Simplex::vertex(0)]);
    let rest = square.supplement(&corner)?;
    println!(
        "supplement of a corner: {} vertices, χ = {}",
        rest.num_vertices(),
        rest.euler_characteristic()
    );

    let apex = derived.complex.vertex_index(&x).expect("barycentre of the diagonal");
    let star = derived.complex.simplicial_neighbourhood(apex)?;
    println!(
        "neighbourhood of {x} in the derived complex: f-vector {:?}",
        star.f_vector()
    );

    let overlapping = SimplicialComplex::from_maximal(
        2,
        ["0,0", "2,0", "0,2", "1,0", "3,0", "1,-2"]
            .iter()
            .map(|p| p.parse())
            .collect::<Result<_, _>>()?,
        [Simplex::new(vec![0, 1, 2]), Simplex::new(vec![3, 4, 5])],
    )?;
    for v in overlapping.validate(ValidateOptions::default()) {
        println!("violation: {v}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

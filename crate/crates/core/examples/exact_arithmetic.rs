// Exact rationals, barycentric coordinates and affine extensions.

use plval::exact_math::{affine_extension, barycentric_coordinates, Point, Rational};

pub fn run() -> plval::Result<()> {
    let a: Rational = "6/8".parse()?;
    let b = Rational::new(-1, 3);
    println!("{a} + {b} = {}", &a + &b);
    println!("{a} * {b} = {}", &a * &b);

    let triangle: Vec<Point> = ["0,0", "1,0", "0,1"]
        .iter()
        .map(|p| p.parse())
        .collect::<Result<_, _>>()?;
    let x: Point = "1/3,1/3".parse()?;
    let lambda = barycentric_coordinates(&triangle, &x)?.expect("x lies in the plane");
    println!("barycentric coordinates of {x}: {lambda:?}");

    let outside: Point = "1,1".parse()?;
    let mu = barycentric_coordinates(&triangle, &outside)?.unwrap();
    println!("{outside} is inside: {}", mu.iter().all(|c| !c.is_negative()));

    let edge: Vec<Point> = vec!["0".parse()?, "1".parse()?];
    let l = affine_extension(&edge, &[Rational::one(), -Rational::one()])?;
    println!("line through (0,1) and (1,-1): {l:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

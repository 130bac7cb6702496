// PL functions as a vector lattice: sums, meets, joins and signed parts.

use plval::exact_math::Rational;
use plval::hats::hat;
use plval::instance::Preset;
use plval::pl_calculus::{lattice_op, linear_combination, signed_parts, LatticeOp, PLFunction};

pub fn run() -> plval::Result<()> {
    let edge = Preset::Interval.complex();
    let h0 = hat(&edge, 0)?;
    let h1 = hat(&edge, 1)?;

    let sum = linear_combination(&[(Rational::one(), &h0), (Rational::one(), &h1)])?;
    println!("h0 + h1 = 1: {}", sum.equals(&PLFunction::one(edge.clone()))?);

    let meet = lattice_op(LatticeOp::Meet, &h0, &h1)?;
    println!("h0 ∧ h1 has vertices {:?}", meet.complex().vertices());
    println!("        and values   {:?}", meet.values());

    let line = linear_combination(&[(Rational::one(), &h0), (-Rational::one(), &h1)])?;
    let (pos, neg) = signed_parts(&line);
    println!("(1 - 2x)+ = {:?}", pos.values());
    println!("(1 - 2x)- = {:?}", neg.values());
    println!("f+ ∧ f- = 0: {}", lattice_op(LatticeOp::Meet, &pos, &neg)?.is_zero());

    let x = "1/4".parse()?;
    println!(
        "(h0 ∨ h1)(1/4) = {}",
        lattice_op(LatticeOp::Join, &h0, &h1)?.evaluate(&x)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

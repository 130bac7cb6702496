// Checking candidate valuations against the valuation axioms.

use plval::instance::Preset;
use plval::pl_calculus::PLFunction;
use plval::valuation::{alpha, alpha_plus, check_axioms, AxiomSet, Sampler};

pub fn run() -> plval::Result<()> {
    let sampler = Sampler::new(Preset::Square, 42);

    let pc = check_axioms(AxiomSet::Pc, &|f: &PLFunction| Ok(alpha_plus(f)?.value), &sampler, 10);
    println!("α⁺ on the positive cone:\n{pc}");
    let vl = check_axioms(AxiomSet::Vl, &|f: &PLFunction| Ok(alpha(f)?.value), &sampler, 10);
    println!("α on the whole lattice:\n{vl}");

    let zero = check_axioms(AxiomSet::Pc, &|_: &PLFunction| Ok(0), &sampler, 3);
    println!("the zero valuation fails {:?}", zero.failed_laws());

    let chi_of_zeros = |f: &PLFunction| Ok(f.zero_set_subcomplex()?.euler_characteristic());
    let wrong = check_axioms(AxiomSet::Pc, &chi_of_zeros, &sampler, 3);
    println!("χ of the zero set fails {:?}", wrong.failed_laws());
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

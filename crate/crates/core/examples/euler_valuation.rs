// The valuation α, computed topologically and by the hat recursion.

use plval::instance::{generate_instance, InstanceSpec, Preset};
use plval::pl_calculus::PLFunction;
use plval::valuation::{alpha, alpha_plus, alpha_plus_recursive};

pub fn run() -> plval::Result<()> {
    for preset in Preset::BUILT_IN {
        let k = preset.complex();
        println!(
            "{preset:>16}: α(1) = {:>2}  χ = {}",
            alpha(&PLFunction::one(k.clone()))?.value,
            k.euler_characteristic()
        );
    }

    let mut spec = InstanceSpec::new(Preset::SquareWithHole, 1, 3, 2024);
    spec.max_terms = 6;
    for f in generate_instance(&spec).functions {
        let t = alpha_plus(&f)?;
        let r = alpha_plus_recursive(&f)?;
        let stats = r.stats.unwrap_or_default();
        println!(
            "α⁺ = {} (topological), {} (recursive, {} calls, depth {})",
            t.value, r.value, stats.calls, stats.max_depth
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

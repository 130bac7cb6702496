// Seeded random instances and their JSON files.

use plval::codec::{complex_to_string, fingerprint, function_to_string, parse_function};
use plval::instance::{generate_instance, InstanceSpec, Preset};

pub fn run() -> plval::Result<()> {
    let spec = InstanceSpec::new(Preset::Square, 2, 2, 7);
    let inst = generate_instance(&spec);
    println!(
        "f-vector {:?}, fingerprint {}",
        inst.complex.f_vector(),
        &fingerprint(&inst.complex)[..16]
    );
    println!("{}", complex_to_string(&inst.complex));

    for f in &inst.functions {
        let text = function_to_string(f);
        let back = parse_function(&text, None)?;
        println!(
            "round trip exact: {}",
            back.values() == f.values() && back.complex() == f.complex()
        );
    }

    let again = generate_instance(&spec);
    println!("same seed, same instance: {}", again.complex == inst.complex);
    Ok(())
}

#[allow(dead_code)]
fn main() -> plval::Result<()> {
    run()
}

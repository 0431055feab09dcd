//! Zero-divisor cup-length lower bounds for TC on the built-in complexes.

use symtc::{lower_bound_tc, Generator, SimplicialSet};

fn main() -> Result<(), symtc::Error> {
    for g in [
        Generator::Point,
        Generator::Sphere(1),
        Generator::Sphere(2),
        Generator::Torus,
        Generator::Rp2,
    ] {
        let x = SimplicialSet::from_complex(&g.generate());
        println!("{:<9} TC ≥ {}", g.to_string(), lower_bound_tc(&x)?);
    }
    Ok(())
}

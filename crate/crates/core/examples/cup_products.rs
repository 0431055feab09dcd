//! Multiplication tables of mod-2 cohomology rings computed with the
//! Alexander–Whitney cup product.

use symtc::{CohomologyRing, Generator, SimplicialSet};

fn print_ring(name: &str, ring: &CohomologyRing) -> Result<(), symtc::Error> {
    println!("{name}: betti {:?}", ring.betti());
    for p in 1..=ring.top_grade() {
        for q in p..=ring.top_grade() {
            for i in 0..ring.dim(p) {
                for j in 0..ring.dim(q) {
                    let product = ring.cup(&ring.basis_class(p, i), &ring.basis_class(q, j))?;
                    if !product.is_zero() {
                        println!("  e{p}_{i} · e{q}_{j} ≠ 0");
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), symtc::Error> {
    for g in [Generator::Rp2, Generator::Torus, Generator::Sphere(2)] {
        let x = SimplicialSet::from_complex(&g.generate());
        print_ring(&g.to_string(), &CohomologyRing::absolute(&x)?)?;
    }
    Ok(())
}

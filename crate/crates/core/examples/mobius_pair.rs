//! SP²(S¹) with its diagonal image dS¹ is a Möbius band with its boundary.
//! Absolute products vanish while the relative square of the degree-1
//! class is nonzero.

use symtc::{cup_length, Analysis, Generator, GradedSubspace, SimplicialSet};

fn main() -> Result<(), symtc::Error> {
    let circle = SimplicialSet::from_complex(&Generator::Sphere(1).generate());
    let a = Analysis::new(&circle, "sphere:1")?;

    println!("H*(SP²)      {:?}", a.symmetric_square.betti());
    println!("H*(dX)       {:?}", a.diagonal.betti());
    println!("H*(SP², dX)  {:?}", a.relative.betti());
    if let Some(m) = a.restriction.matrix(1) {
        println!("restriction in degree 1:\n{}", m.dump());
    }
    let absolute = GradedSubspace::positive_part(&a.symmetric_square);
    println!("absolute cup-length {}", cup_length(&absolute));

    let x = a.relative.basis_class(1, 0);
    let square = a.relative.cup(&x, &x)?;
    println!("relative x·x zero? {}", square.is_zero());
    println!("relative cup-length {}", cup_length(&a.relative_classes()));
    Ok(())
}

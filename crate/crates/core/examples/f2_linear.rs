//! Linear algebra over the two-element field: rank, kernel, solving and
//! quotient representatives, on the boundary matrix of a triangle.

use symtc::f2::quotient_basis;
use symtc::{BitVec, F2Matrix, Subspace};

fn main() -> Result<(), symtc::Error> {
    // Edges 01, 02, 12 mapped to vertices 0, 1, 2.
    let boundary = F2Matrix::parse_dump("110\n101\n011\n").expect("valid dump");
    println!("∂ =\n{}", boundary.dump());
    println!("rank {}", boundary.rank());

    let cycles = boundary.kernel();
    for v in cycles.basis() {
        println!("cycle {v}");
    }

    let target = BitVec::from_str01("110").expect("bits");
    match boundary.solve(&target)? {
        Some(x) => println!("∂({x}) = {target}"),
        None => println!("{target} is not a boundary"),
    }

    let all = Subspace::full(3);
    let image = boundary.image();
    let reps = quotient_basis(&all, &image)?;
    println!("F₂³ / im ∂ has dimension {}; representative {:?}", reps.len(), reps);
    Ok(())
}

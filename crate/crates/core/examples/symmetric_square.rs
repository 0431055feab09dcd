//! Build X × X, SP²(X) and dX for a generator and print their sizes.
//!
//!     cargo run --example symmetric_square -- rp2

use symtc::{symmetric_square, Generator, SimplicialSet};

fn main() -> Result<(), symtc::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "sphere:1".into());
    let g: Generator = name.parse()?;
    let x = SimplicialSet::from_complex(&g.generate());
    let pair = symmetric_square(&x);

    println!("X       {:?}  χ = {}", x.counts(), x.euler_characteristic());
    println!("X × X   {:?}  χ = {}", pair.total().counts(), pair.total().euler_characteristic());
    println!("SP²(X)  {:?}  χ = {}", pair.quotient.counts(), pair.quotient.euler_characteristic());
    println!("dX      {:?}", pair.dx.counts());

    for (k, orbits) in pair.orbits.iter().enumerate() {
        let fixed = orbits.iter().filter(|o| o.on_diagonal).count();
        println!("grade {k}: {} orbits, {fixed} fixed by the swap", orbits.len());
    }
    Ok(())
}

//! The declared connectivity feeds the upper bound and is checked against
//! mod-2 homology before any report is produced.

use symtc::{bounds_report, connectivity_check, upper_bound_sigma, Generator, SimplicialSet};

fn main() -> Result<(), symtc::Error> {
    let torus = SimplicialSet::from_complex(&Generator::Torus.generate());
    for s in 0..=2 {
        println!("torus, s = {s}: {:?}", connectivity_check(&torus, s)?);
    }
    match bounds_report(&torus, "torus", 1) {
        Ok(r) => println!("unexpected report {:?}", r.interval),
        Err(e) => println!("refused: {e}"),
    }

    for (d, s) in [(2, 0), (2, 1), (4, 1), (4, 3), (6, 2)] {
        println!("dim {d}, s = {s}: TC^Σ ≤ {}", upper_bound_sigma(d, s));
    }
    Ok(())
}

//! Bounds report for the spheres S^1 .. S^N (default N = 3), each with its
//! natural connectivity s = n - 1 declared.
//!
//!     cargo run --release --example sphere_bounds -- 4

use std::time::Instant;

use symtc::{Analysis, Generator, SimplicialSet};

fn main() -> Result<(), symtc::Error> {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for n in 1..=top {
        let start = Instant::now();
        let x = SimplicialSet::from_complex(&Generator::Sphere(n).generate());
        let analysis = Analysis::new(&x, format!("sphere:{n}"))?;
        let report = analysis.report(n - 1, true)?;
        println!("{report}");
        println!(
            "SP² grades {:?}, built and analysed in {:.2?}\n",
            analysis.pair.quotient.counts(),
            start.elapsed()
        );
    }
    Ok(())
}

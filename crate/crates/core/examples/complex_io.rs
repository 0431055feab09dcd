//! Parse a complex from either file format, inspect it and write it back.
//!
//!     cargo run --example complex_io -- path/to/complex.cx

use symtc::{Complex, Generator};

const SQUARE: &str = "\
# boundary of a square
0,1
1,2
2,3
0,3
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let complex = match std::env::args().nth(1) {
        Some(path) => Complex::parse(&std::fs::read_to_string(path)?)?,
        None => Complex::parse(SQUARE)?.with_name("square"),
    };
    println!("f-vector {:?}, χ = {}", complex.f_vector(), complex.euler_characteristic());
    println!("text:\n{}", complex.to_text());
    println!("json: {}", complex.to_json());

    let suspended = complex.suspension();
    println!("suspension: f-vector {:?}, χ = {}", suspended.f_vector(), suspended.euler_characteristic());

    for name in ["point", "interval", "sphere:2", "torus", "rp2"] {
        let g: Generator = name.parse()?;
        let c = g.generate();
        println!("{:<9} f = {:?}", g.to_string(), c.f_vector());
    }
    Ok(())
}

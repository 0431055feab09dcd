use std::fs;
use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};
use symtc::{symmetric_square, Complex, EquivariantPair, SimplicialSet};

/// Bumped whenever the stored construction changes shape or meaning.
const PIPELINE_VERSION: &str = "symtc-pair-v1";

pub fn key(complex: &Complex) -> String {
    let mut hasher = Sha256::new();
    hasher.update(PIPELINE_VERSION.as_bytes());
    hasher.update(b"\n");
    hasher.update(complex.vertex_count().to_string().as_bytes());
    hasher.update(b"\n");
    hasher.update(complex.to_text().as_bytes());
    hex::encode(hasher.finalize())
}

/// Loads the symmetric-square construction for `complex` from `dir`, or
/// builds it and stores it. Unreadable or mismatched entries are rebuilt.
pub fn load_or_build(dir: Option<&Path>, complex: &Complex) -> std::io::Result<(EquivariantPair, bool)> {
    let x = SimplicialSet::from_complex(complex);
    let Some(dir) = dir else {
        return Ok((symmetric_square(&x), false));
    };
    let path = dir.join(format!("{}.json", key(complex)));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(pair) = serde_json::from_str::<EquivariantPair>(&text) {
            if pair.base() == &x {
                return Ok((pair, true));
            }
        }
    }
    let pair = symmetric_square(&x);
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &pair)?;
    tmp.flush()?;
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok((pair, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use symtc::Generator;

    #[test]
    fn key_ignores_names_and_input_order() {
        let a = Complex::parse_text("1,2\n0,1\n0,2\n").unwrap();
        let b = Generator::Sphere(1).generate();
        assert_eq!(key(&a), key(&b));
        assert_ne!(key(&a), key(&Generator::Interval.generate()));
    }

    #[test]
    fn stores_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let c = Generator::Sphere(1).generate();
        let (cold, hit) = load_or_build(Some(dir.path()), &c).unwrap();
        assert!(!hit);
        let (warm, hit) = load_or_build(Some(dir.path()), &c).unwrap();
        assert!(hit);
        assert_eq!(cold, warm);
    }
}

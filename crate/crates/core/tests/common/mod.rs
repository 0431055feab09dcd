#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::Rng;
use symtc::{BitVec, CohomologyRing, Complex, Generator, SimplicialSet, Subspace};

pub fn nerve(g: Generator) -> SimplicialSet {
    SimplicialSet::from_complex(&g.generate())
}

/// Octahedron: the suspension of a 4-cycle, a second triangulation of S².
pub fn octahedron() -> Complex {
    Complex::parse_text("0,1\n1,2\n2,3\n0,3\n")
        .unwrap()
        .suspension()
        .with_name("octahedron")
}

/// Random complex on at most `max_vertices` vertices with simplices of
/// dimension at most `max_dim`.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize, max_dim: usize) -> Complex {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=2 * n);
    let simplices: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=(max_dim + 1).min(n));
            let mut s: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                s.swap(i, j);
            }
            s.truncate(k);
            s
        })
        .collect();
    Complex::new(n, simplices, None).unwrap()
}

/// Random connected complex: a random complex plus a path through all vertices.
pub fn random_connected_complex(rng: &mut impl Rng, max_vertices: usize, max_dim: usize) -> Complex {
    let c = random_complex(rng, max_vertices, max_dim);
    let n = c.vertex_count();
    let mut simplices = c.maximal_simplices().to_vec();
    simplices.extend((1..n).map(|v| vec![v - 1, v]));
    Complex::new(n, simplices, None).unwrap()
}

/// Counts simplices of `X × X` per grade as strictly increasing chains in the
/// product vertex order whose two projections are simplices of `X`.
pub fn product_chain_counts(c: &Complex) -> Vec<usize> {
    let simplices: BTreeSet<Vec<usize>> = c.simplices().into_iter().flatten().collect();
    let is_simplex = |vs: &[usize]| {
        let set: Vec<usize> = vs.iter().copied().sorted().dedup().collect();
        simplices.contains(&set)
    };
    let n = c.vertex_count();
    let vertices: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).collect();
    let mut counts = Vec::new();
    // Grow chains one vertex at a time.
    let mut chains: Vec<Vec<(usize, usize)>> = vertices.iter().map(|&v| vec![v]).collect();
    while !chains.is_empty() {
        counts.push(chains.len());
        let mut next = Vec::new();
        for ch in &chains {
            let &(a, b) = ch.last().unwrap();
            for &(x, y) in &vertices {
                if x >= a && y >= b && (x, y) != (a, b) {
                    let mut ext = ch.clone();
                    ext.push((x, y));
                    let firsts: Vec<usize> = ext.iter().map(|p| p.0).collect();
                    let seconds: Vec<usize> = ext.iter().map(|p| p.1).collect();
                    if is_simplex(&firsts) && is_simplex(&seconds) {
                        next.push(ext);
                    }
                }
            }
        }
        chains = next;
    }
    counts
}

/// All nonzero elements of a subspace.
pub fn elements(s: &Subspace) -> Vec<BitVec> {
    let basis = s.basis();
    (1u64..(1 << basis.len()))
        .map(|mask| {
            let mut v = BitVec::zeros(s.ambient());
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            v
        })
        .collect()
}

/// Brute-force cup-length: tries every tuple of homogeneous elements and
/// multiplies representative cocycles at the cochain level, testing the
/// result against the coboundaries. Never touches the multiplication tensors.
pub fn brute_force_cup_length(ring: &CohomologyRing, grades: &[Subspace]) -> usize {
    let complex = ring.complex();
    let mut pool: Vec<(usize, BitVec)> = Vec::new();
    for (k, s) in grades.iter().enumerate().skip(1) {
        for coords in elements(s) {
            let class = ring.class(k, coords).unwrap();
            pool.push((k, ring.representative(&class).unwrap()));
        }
    }
    let nonzero = |k: usize, c: &BitVec| k <= ring.top_grade() && !ring.coboundaries(k).contains(c);

    // Products of length j that are nonzero as cochains modulo coboundaries.
    let mut best = 0;
    let mut frontier: Vec<(usize, BitVec)> = Vec::new();
    for (k, c) in &pool {
        if nonzero(*k, c) {
            best = 1;
        }
        frontier.push((*k, c.clone()));
    }
    if best == 0 {
        return 0;
    }
    let mut length = 1;
    loop {
        length += 1;
        let mut next = Vec::new();
        let mut found = false;
        for (k, c) in &frontier {
            for (p, a) in &pool {
                if k + p > ring.top_grade() {
                    continue;
                }
                let prod = complex.cup_cochains(*k, c, *p, a).unwrap();
                if nonzero(k + p, &prod) {
                    found = true;
                }
                // Keep every product: a zero class can still be a nonzero cochain
                // and is harmless to extend.
                next.push((k + p, prod));
            }
        }
        if !found {
            return best;
        }
        best = length;
        next.sort();
        next.dedup();
        frontier = next;
    }
}

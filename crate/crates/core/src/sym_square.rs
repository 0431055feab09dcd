//! The square `X × X` with its coordinate swap, and the symmetric square
//! `SP²(X) = (X × X) / swap` together with the image `dX` of the diagonal.
//!
//! Products and quotients are taken in simplicial sets, so their geometric
//! realizations are the product and orbit spaces of the realizations.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::sset::{Degeneracy, SSetMap, Simplex, SimplicialSet, Subcomplex};

/// An `m`-simplex of `X × X`: a pair of `m`-simplices of `X` sharing no
/// degeneracy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductSimplex {
    pub first: Simplex,
    pub second: Simplex,
}

impl ProductSimplex {
    pub fn swapped(self) -> Self {
        Self {
            first: self.second,
            second: self.first,
        }
    }

    pub fn dim(&self) -> usize {
        self.first.dim
    }

    pub fn is_jointly_nondegenerate(&self) -> bool {
        self.first.degeneracy.0 & self.second.degeneracy.0 == 0
    }

    /// Lexicographic minimum of the pair and its swap.
    pub fn canonical(self) -> Self {
        self.min(self.swapped())
    }

    pub fn is_diagonal(&self) -> bool {
        self.first == self.second
    }
}

/// A simplex of `SP²(X)`, named by its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSimplex {
    pub representative: ProductSimplex,
    pub on_diagonal: bool,
}

/// `X × X` with the swap involution and the diagonal `X → X × X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSquare {
    pub base: SimplicialSet,
    pub total: SimplicialSet,
    /// `components[m][id]` is the pair behind the product simplex `(m, id)`.
    pub components: Vec<Vec<ProductSimplex>>,
    pub involution: SSetMap,
    pub diagonal: SSetMap,
}

/// Everything needed to study `SP²(X)` and its diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantPair {
    pub product: ProductSquare,
    pub quotient: SimplicialSet,
    pub orbits: Vec<Vec<OrbitSimplex>>,
    /// `X × X → SP²(X)`.
    pub projection: SSetMap,
    /// `dX` as a subcomplex of `SP²(X)`.
    pub image_diagonal: Subcomplex,
    /// `dX` as a simplicial set of its own.
    pub dx: SimplicialSet,
    /// `dX ↪ SP²(X)`.
    pub image_diagonal_inclusion: SSetMap,
    /// The isomorphism `X → dX` induced by the diagonal.
    pub base_to_dx: SSetMap,
}

/// Nondegenerate simplices of `X × X` in grade `m`, sorted.
fn product_grade(x: &SimplicialSet, m: usize) -> Vec<ProductSimplex> {
    let mut out = Vec::new();
    let d = x.dim();
    for p in 0..=d.min(m) {
        for q in m.saturating_sub(p)..=d.min(m) {
            // (m - p) collapses for the first factor, (m - q) for the second,
            // on disjoint positions among 0..m.
            for first_mask in (0..m).combinations(m - p) {
                let free: Vec<usize> = (0..m).filter(|j| !first_mask.contains(j)).collect();
                let w1 = Degeneracy(first_mask.iter().fold(0, |w, j| w | 1 << j));
                for second_mask in free.into_iter().combinations(m - q) {
                    let w2 = Degeneracy(second_mask.iter().fold(0, |w, j| w | 1 << j));
                    for a in 0..x.count(p) {
                        for b in 0..x.count(q) {
                            out.push(ProductSimplex {
                                first: Simplex {
                                    dim: m,
                                    id: a,
                                    degeneracy: w1,
                                },
                                second: Simplex {
                                    dim: m,
                                    id: b,
                                    degeneracy: w2,
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Builds `X × X` with its swap involution and diagonal.
pub fn product_with_swap(x: &SimplicialSet) -> ProductSquare {
    let top = 2 * x.dim();
    let components: Vec<Vec<ProductSimplex>> = (0..=top).map(|m| product_grade(x, m)).collect();
    let index: HashMap<ProductSimplex, usize> = components
        .iter()
        .flat_map(|g| g.iter().enumerate().map(|(id, ps)| (*ps, id)))
        .collect();

    let mut faces = vec![Vec::new()];
    for m in 1..=top {
        let mut table = Vec::with_capacity(components[m].len() * (m + 1));
        for ps in &components[m] {
            for i in 0..=m {
                let a = x.face(ps.first, i);
                let b = x.face(ps.second, i);
                let common = Degeneracy(a.degeneracy.0 & b.degeneracy.0);
                let dim = m - 1;
                let strip = |s: Simplex| Simplex {
                    dim: dim - common.count(),
                    id: s.id,
                    degeneracy: s.degeneracy.strip(common, dim),
                };
                let key = ProductSimplex {
                    first: strip(a),
                    second: strip(b),
                };
                table.push(Simplex {
                    dim,
                    id: index[&key],
                    degeneracy: common,
                });
            }
        }
        faces.push(table);
    }
    let counts = components.iter().map(Vec::len).collect();
    let total = SimplicialSet::from_faces_unchecked(counts, faces);

    let involution = SSetMap::new(
        components
            .iter()
            .enumerate()
            .map(|(m, g)| {
                g.iter()
                    .map(|ps| Simplex::nondegenerate(m, index[&ps.swapped()]))
                    .collect()
            })
            .collect(),
    );
    let diagonal = SSetMap::new(
        (0..=x.dim())
            .map(|k| {
                x.nondegenerate(k)
                    .map(|s| Simplex::nondegenerate(k, index[&ProductSimplex { first: s, second: s }]))
                    .collect()
            })
            .collect(),
    );

    ProductSquare {
        base: x.clone(),
        total,
        components,
        involution,
        diagonal,
    }
}

/// Builds `SP²(X)`, the image diagonal `dX`, and the canonical maps.
pub fn symmetric_square(x: &SimplicialSet) -> EquivariantPair {
    let product = product_with_swap(x);

    let mut orbits: Vec<Vec<OrbitSimplex>> = Vec::with_capacity(product.components.len());
    let mut projection_ids: Vec<Vec<usize>> = Vec::with_capacity(product.components.len());
    for grade in &product.components {
        let reps: Vec<ProductSimplex> = grade
            .iter()
            .map(|ps| ps.canonical())
            .sorted_unstable()
            .dedup()
            .collect();
        let proj = grade
            .iter()
            .map(|ps| reps.binary_search(&ps.canonical()).expect("orbit present"))
            .collect();
        orbits.push(
            reps.into_iter()
                .map(|r| OrbitSimplex {
                    representative: r,
                    on_diagonal: r.is_diagonal(),
                })
                .collect(),
        );
        projection_ids.push(proj);
    }

    // Product ids of the canonical representatives, to read faces off its table.
    let rep_ids: Vec<Vec<usize>> = orbits
        .iter()
        .zip(&product.components)
        .map(|(orb, grade)| {
            orb.iter()
                .map(|o| grade.binary_search(&o.representative).expect("representative is a product simplex"))
                .collect()
        })
        .collect();

    let mut faces = vec![Vec::new()];
    for m in 1..orbits.len() {
        let mut table = Vec::with_capacity(orbits[m].len() * (m + 1));
        for &pid in &rep_ids[m] {
            for i in 0..=m {
                let f = product.total.face_of_nondegenerate(m, pid, i);
                table.push(Simplex {
                    id: projection_ids[f.base_dim()][f.id],
                    ..f
                });
            }
        }
        faces.push(table);
    }
    let quotient =
        SimplicialSet::from_faces_unchecked(orbits.iter().map(Vec::len).collect(), faces);

    let projection = SSetMap::new(
        projection_ids
            .iter()
            .enumerate()
            .map(|(m, g)| g.iter().map(|&o| Simplex::nondegenerate(m, o)).collect())
            .collect(),
    );

    let image_diagonal = Subcomplex::new(
        &quotient,
        orbits
            .iter()
            .map(|g| g.iter().map(|o| o.on_diagonal).collect())
            .collect(),
    )
    .expect("diagonal orbits are closed under faces");
    let (dx, image_diagonal_inclusion) = image_diagonal.extract(&quotient);

    let dx_index: HashMap<Simplex, usize> = (0..dx.counts().len())
        .flat_map(|k| {
            image_diagonal_inclusion
                .images(k)
                .iter()
                .enumerate()
                .map(|(id, s)| (*s, id))
                .collect::<Vec<_>>()
        })
        .collect();
    let base_to_dx = SSetMap::new(
        (0..=x.dim())
            .map(|k| {
                x.nondegenerate(k)
                    .map(|s| {
                        let img = projection.apply(product.diagonal.image(k, s.id));
                        Simplex::nondegenerate(k, dx_index[&img])
                    })
                    .collect()
            })
            .collect(),
    );

    EquivariantPair {
        product,
        quotient,
        orbits,
        projection,
        image_diagonal,
        dx,
        image_diagonal_inclusion,
        base_to_dx,
    }
}

impl EquivariantPair {
    pub fn base(&self) -> &SimplicialSet {
        &self.product.base
    }

    pub fn total(&self) -> &SimplicialSet {
        &self.product.total
    }

    /// Grade counts and orbit tables, for debugging.
    pub fn debug_dump(&self) -> serde_json::Value {
        let encode = |s: &Simplex| serde_json::json!([s.id, s.degeneracy.0]);
        serde_json::json!({
            "counts": {
                "space": self.base().counts(),
                "product": self.total().counts(),
                "symmetric_square": self.quotient.counts(),
                "diagonal": self.dx.counts(),
            },
            "orbits": self.orbits.iter().map(|g| {
                g.iter().map(|o| serde_json::json!([
                    encode(&o.representative.first),
                    encode(&o.representative.second),
                    o.on_diagonal,
                ])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

//! Checks against independent computations: chain enumeration for product
//! grades, brute-force tuple search for cup-lengths, and the classical
//! identities the constructions have to satisfy.

mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symtc::{
    cup_length, product_with_swap, symmetric_square, Analysis, CohomologyRing, Generator,
    GradedSubspace, InducedMap, SimplicialSet, Subspace,
};

fn generators() -> Vec<Generator> {
    vec![
        Generator::Point,
        Generator::Interval,
        Generator::Sphere(0),
        Generator::Sphere(1),
        Generator::Sphere(2),
        Generator::Rp2,
        Generator::Torus,
    ]
}

#[test]
fn nerve_grades_match_exhaustive_enumeration() {
    let rp2 = Generator::Rp2.generate();
    // Every vertex subset of size k+1 contained in a maximal simplex.
    let mut counts = vec![0; 3];
    for mask in 1u32..(1 << 6) {
        let vs: Vec<usize> = (0..6).filter(|v| mask >> v & 1 == 1).collect();
        if rp2
            .maximal_simplices()
            .iter()
            .any(|m| vs.iter().all(|v| m.contains(v)))
        {
            counts[vs.len() - 1] += 1;
        }
    }
    assert_eq!(counts, vec![6, 15, 10]);
    assert_eq!(SimplicialSet::from_complex(&rp2).counts(), &counts[..]);
}

#[test]
fn product_grades_match_chain_enumeration() {
    for g in [
        Generator::Interval,
        Generator::Sphere(1),
        Generator::Sphere(2),
        Generator::Rp2,
    ] {
        let c = g.generate();
        let p = product_with_swap(&SimplicialSet::from_complex(&c));
        assert_eq!(p.total.counts(), &product_chain_counts(&c)[..], "{g}");
    }
    let circle = Generator::Sphere(1).generate();
    assert_eq!(product_chain_counts(&circle), vec![9, 27, 18]);
}

#[test]
fn product_simplices_are_jointly_nondegenerate() {
    let p = product_with_swap(&nerve(Generator::Sphere(2)));
    for grade in &p.components {
        for ps in grade {
            assert!(ps.is_jointly_nondegenerate());
        }
    }
}

#[test]
fn orbit_counting_per_grade() {
    for g in generators() {
        let pair = symmetric_square(&nerve(g));
        for (m, grade) in pair.product.components.iter().enumerate() {
            let fixed = grade.iter().filter(|ps| ps.is_diagonal()).count();
            let off = pair.orbits[m].iter().filter(|o| !o.on_diagonal).count();
            assert_eq!(grade.len(), 2 * off + fixed, "{g} grade {m}");
            for o in &pair.orbits[m] {
                assert_eq!(o.representative.canonical(), o.representative);
                assert_eq!(o.representative.swapped().canonical(), o.representative);
            }
        }
    }
}

#[test]
fn diagonal_image_is_a_copy_of_the_base() {
    for g in generators() {
        let x = nerve(g);
        let pair = symmetric_square(&x);
        assert_eq!(pair.dx.counts(), x.counts(), "{g}");
        // Grade-wise bijection commuting with faces.
        pair.base_to_dx.validate(&x, &pair.dx).unwrap();
        for k in 0..=x.dim() {
            let mut ids: Vec<usize> = pair.base_to_dx.images(k).iter().map(|s| s.id).collect();
            ids.sort();
            assert_eq!(ids, (0..x.count(k)).collect::<Vec<_>>());
        }
        // Diagonal image grades inside the product.
        let diag_ids = pair.product.diagonal.images(1).len();
        assert_eq!(diag_ids, x.count(1));
    }
}

#[test]
fn euler_characteristic_of_symmetric_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut inputs: Vec<_> = generators().into_iter().map(|g| g.generate()).collect();
    inputs.extend((0..10).map(|_| random_complex(&mut rng, 5, 2)));
    for c in inputs {
        let x = SimplicialSet::from_complex(&c);
        let chi = x.euler_characteristic();
        assert_eq!(chi, c.euler_characteristic());
        let pair = symmetric_square(&x);
        assert_eq!(pair.total().euler_characteristic(), chi * chi);
        assert_eq!(pair.quotient.euler_characteristic(), (chi * chi + chi) / 2, "{c:?}");
    }
}

#[test]
fn kunneth_for_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut inputs: Vec<_> = generators().into_iter().map(|g| g.generate()).collect();
    inputs.extend((0..6).map(|_| random_complex(&mut rng, 5, 2)));
    for c in inputs {
        let x = SimplicialSet::from_complex(&c);
        let bx = CohomologyRing::absolute(&x).unwrap().betti();
        let p = product_with_swap(&x);
        let bp = CohomologyRing::absolute(&p.total).unwrap().betti();
        let mut conv = vec![0; 2 * (bx.len() - 1) + 1];
        for (i, a) in bx.iter().enumerate() {
            for (j, b) in bx.iter().enumerate() {
                conv[i + j] += a * b;
            }
        }
        assert_eq!(bp, conv, "{c:?}");
    }
}

#[test]
fn simplicial_identities_hold_everywhere() {
    for g in generators() {
        let pair = symmetric_square(&nerve(g));
        pair.total().check().unwrap();
        pair.quotient.check().unwrap();
        pair.dx.check().unwrap();
    }
}

fn assert_cup_length_matches_oracle(ring: &CohomologyRing, v: &GradedSubspace<'_>, what: &str) {
    assert!(v.dim() <= 6, "{what}: oracle limited to small subspaces");
    let grades: Vec<Subspace> = (0..=ring.top_grade()).map(|k| v.grade(k).clone()).collect();
    let expected = brute_force_cup_length(ring, &grades);
    assert_eq!(cup_length(v), expected, "{what}");
}

#[test]
fn cup_length_agrees_with_brute_force() {
    for g in [
        Generator::Point,
        Generator::Sphere(1),
        Generator::Sphere(2),
        Generator::Rp2,
        Generator::Torus,
    ] {
        let x = nerve(g);
        let ring = CohomologyRing::absolute(&x).unwrap();
        assert_cup_length_matches_oracle(&ring, &GradedSubspace::positive_part(&ring), &format!("H*({g})"));
    }
    for g in [Generator::Point, Generator::Sphere(1), Generator::Sphere(2)] {
        let a = Analysis::new(&nerve(g), g.to_string()).unwrap();
        assert_cup_length_matches_oracle(&a.symmetric_square, &a.diagonal_kernel(), &format!("kernel {g}"));
        assert_cup_length_matches_oracle(
            &a.symmetric_square,
            &GradedSubspace::positive_part(&a.symmetric_square),
            &format!("H*(SP² {g})"),
        );
        assert_cup_length_matches_oracle(&a.relative, &a.relative_classes(), &format!("relative {g}"));
        if a.zero_divisors().dim() <= 6 {
            assert_cup_length_matches_oracle(&a.product, &a.zero_divisors(), &format!("zero-divisors {g}"));
        }
    }
}

#[test]
fn cup_product_is_associative_and_commutative() {
    let rings: Vec<CohomologyRing> = [Generator::Torus, Generator::Rp2, Generator::Sphere(2)]
        .into_iter()
        .flat_map(|g| {
            let pair = symmetric_square(&nerve(g));
            [
                CohomologyRing::absolute(pair.base()).unwrap(),
                CohomologyRing::absolute(&pair.quotient).unwrap(),
                CohomologyRing::relative(&pair.quotient, &pair.image_diagonal).unwrap(),
            ]
        })
        .collect();
    for ring in &rings {
        let top = ring.top_grade();
        let basis: Vec<_> = (0..=top)
            .flat_map(|k| (0..ring.dim(k)).map(move |i| (k, i)))
            .collect();
        for &(p, i) in &basis {
            let a = ring.basis_class(p, i);
            for &(q, j) in &basis {
                let b = ring.basis_class(q, j);
                let ab = ring.cup(&a, &b).unwrap();
                assert_eq!(ab, ring.cup(&b, &a).unwrap());
                for &(r, l) in &basis {
                    let c = ring.basis_class(r, l);
                    let left = ring.cup(&ab, &c).unwrap();
                    let right = ring.cup(&a, &ring.cup(&b, &c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
        if let Some(one) = ring.unit() {
            for &(p, i) in &basis {
                let a = ring.basis_class(p, i);
                assert_eq!(ring.cup(&one, &a).unwrap(), a);
            }
        }
    }
}

#[test]
fn exactness_at_the_symmetric_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut inputs: Vec<_> = generators().into_iter().map(|g| g.generate()).collect();
    inputs.push(Generator::Sphere(3).generate());
    inputs.extend((0..6).map(|_| random_complex(&mut rng, 5, 2)));
    for c in inputs {
        let a = Analysis::new(&SimplicialSet::from_complex(&c), "").unwrap();
        assert!(a.exactness_failures().is_empty(), "{c:?}");
    }
}

#[test]
fn kernel_bound_never_exceeds_relative_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut inputs: Vec<_> = [
        Generator::Point,
        Generator::Interval,
        Generator::Sphere(1),
        Generator::Sphere(2),
        Generator::Rp2,
        Generator::Torus,
    ]
    .into_iter()
    .map(|g| g.generate())
    .collect();
    inputs.extend((0..6).map(|_| random_connected_complex(&mut rng, 5, 2)));
    for c in inputs {
        let a = Analysis::new(&SimplicialSet::from_complex(&c), "").unwrap();
        assert!(a.sigma_kernel_lower().unwrap() <= a.sigma_relative_lower().unwrap(), "{c:?}");
    }
}

#[test]
fn induced_maps_are_functorial() {
    for g in [Generator::Sphere(1), Generator::Sphere(2), Generator::Rp2] {
        let x = nerve(g);
        let pair = symmetric_square(&x);
        let rx = CohomologyRing::absolute(&x).unwrap();
        let rp = CohomologyRing::absolute(pair.total()).unwrap();
        let rq = CohomologyRing::absolute(&pair.quotient).unwrap();
        // f = diagonal X -> X×X, h = projection X×X -> SP².
        let f = &pair.product.diagonal;
        let h = &pair.projection;
        let f_star = InducedMap::new(f, &rp, &rx).unwrap();
        let h_star = InducedMap::new(h, &rq, &rp).unwrap();
        let composite = InducedMap::new(&f.then(h), &rq, &rx).unwrap();
        assert_eq!(composite, f_star.after(&h_star).unwrap(), "{g}");
        // Swap then project equals project.
        let swap_then_project = pair.product.involution.then(h);
        assert_eq!(&swap_then_project, h);
        // Induced maps of absolute rings are multiplicative on basis pairs.
        for p in 0..=rq.top_grade() {
            for q in 0..=rq.top_grade() {
                for i in 0..rq.dim(p) {
                    for j in 0..rq.dim(q) {
                        let a = rq.basis_class(p, i);
                        let b = rq.basis_class(q, j);
                        let lhs = h_star.apply(&rq.cup(&a, &b).unwrap()).unwrap();
                        let rhs = rp
                            .cup(&h_star.apply(&a).unwrap(), &h_star.apply(&b).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

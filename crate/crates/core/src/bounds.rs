//! Cup-length lower bounds and the dimension–connectivity upper bound for
//! symmetrized topological complexity, combined into a [`BoundsReport`].

use std::fmt;

use serde::Serialize;

use crate::cohomology::{CohomologyRing, InducedMap};
use crate::error::{Error, Result};
use crate::f2::{BitVec, Subspace};
use crate::sset::SimplicialSet;
use crate::sym_square::{symmetric_square, EquivariantPair};

/// Carried verbatim by every report that declares `s ≥ 1`.
pub const CONNECTIVITY_CAVEAT: &str =
    "Consistency is NOT a proof of s-connectivity (mod-2 homology cannot see it)";

/// Per-grade subspaces of a ring's positive-degree part. Grade 0 is always
/// zero; anything passed for it is dropped.
#[derive(Clone, Debug)]
pub struct GradedSubspace<'a> {
    ring: &'a CohomologyRing,
    grades: Vec<Subspace>,
}

impl<'a> GradedSubspace<'a> {
    pub fn new(ring: &'a CohomologyRing, grades: Vec<Subspace>) -> Result<Self> {
        let mut out = Vec::with_capacity(ring.top_grade() + 1);
        for k in 0..=ring.top_grade() {
            let s = match grades.get(k) {
                Some(s) if k > 0 => {
                    if s.ambient() != ring.dim(k) {
                        return Err(Error::ShapeMismatch {
                            expected: ring.dim(k),
                            found: s.ambient(),
                        });
                    }
                    s.clone()
                }
                _ => Subspace::zero(ring.dim(k)),
            };
            out.push(s);
        }
        Ok(Self { ring, grades: out })
    }

    pub fn zero(ring: &'a CohomologyRing) -> Self {
        Self::new(ring, Vec::new()).expect("zero subspace fits")
    }

    /// All of `H^{>0}`.
    pub fn positive_part(ring: &'a CohomologyRing) -> Self {
        let grades = (0..=ring.top_grade())
            .map(|k| Subspace::full(ring.dim(k)))
            .collect();
        Self::new(ring, grades).expect("full subspaces fit")
    }

    /// Positive-degree kernel of `f*: H*(ring) → H*(·)`.
    pub fn kernel_of(ring: &'a CohomologyRing, f: &InducedMap) -> Self {
        let grades = (0..=ring.top_grade())
            .map(|k| f.kernel(k, ring.dim(k)))
            .collect();
        Self::new(ring, grades).expect("kernels live in the ring's coordinates")
    }

    pub fn ring(&self) -> &'a CohomologyRing {
        self.ring
    }

    pub fn grade(&self, k: usize) -> &Subspace {
        &self.grades[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.grades.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.grades.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(Subspace::is_zero)
    }

    /// Span of all products `b · w` with `b` in `self` and `w` in `other`.
    fn times(&self, other: &[Subspace]) -> Vec<Subspace> {
        let ring = self.ring;
        let top = ring.top_grade();
        let mut products: Vec<Vec<BitVec>> = vec![Vec::new(); top + 1];
        for (p, sp) in self.grades.iter().enumerate().skip(1) {
            for (q, sq) in other.iter().enumerate() {
                if p + q > top {
                    break;
                }
                for b in sp.basis() {
                    for w in sq.basis() {
                        let prod = ring.multiply(p, b, q, w);
                        if !prod.is_zero() {
                            products[p + q].push(prod);
                        }
                    }
                }
            }
        }
        products
            .into_iter()
            .enumerate()
            .map(|(k, vs)| Subspace::from_vectors(ring.dim(k), vs).expect("products fit"))
            .collect()
    }
}

/// Largest `k` such that some product of `k` elements of `v` is nonzero.
///
/// Iterates `W₁ = span(v)`, `W_{j+1} = span{b·w : b ∈ basis(v), w ∈ basis(W_j)}`
/// and returns the last `j` with `W_j ≠ 0`. Every element of `v` has positive
/// degree, so the grades climb and the loop stops past the top grade.
pub fn cup_length(v: &GradedSubspace<'_>) -> usize {
    let mut current = v.grades.clone();
    let mut length = 0;
    while current.iter().any(|s| !s.is_zero()) {
        length += 1;
        current = v.times(&current);
    }
    length
}

/// Largest integer strictly below `(2·dim + 1)/(s + 1)`.
pub fn upper_bound_sigma(dim: usize, s: usize) -> usize {
    2 * dim / (s + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Connectivity {
    Consistent,
    Refuted { grade: usize, betti: usize },
}

/// Necessary-condition guard for `s`-connectivity from absolute Betti numbers.
pub fn connectivity_from_betti(betti: &[usize], s: usize) -> Connectivity {
    for (k, &b) in betti.iter().enumerate().take(s + 1) {
        let reduced = if k == 0 { b.saturating_sub(1) } else { b };
        if reduced != 0 {
            return Connectivity::Refuted {
                grade: k,
                betti: reduced,
            };
        }
    }
    Connectivity::Consistent
}

/// Refutes `s`-connectivity when a reduced mod-2 Betti number in grades
/// `0..=s` is nonzero. [`Connectivity::Consistent`] proves nothing.
pub fn connectivity_check(x: &SimplicialSet, s: usize) -> Result<Connectivity> {
    let ring = CohomologyRing::absolute(x)?;
    Ok(connectivity_from_betti(&ring.betti(), s))
}

/// Cohomology of `X`, `X × X`, `SP²(X)`, `dX` and the pair `(SP²(X), dX)`,
/// with the maps between them.
#[derive(Debug)]
pub struct Analysis {
    pub label: String,
    pub pair: EquivariantPair,
    pub space: CohomologyRing,
    pub product: CohomologyRing,
    pub symmetric_square: CohomologyRing,
    pub diagonal: CohomologyRing,
    pub relative: CohomologyRing,
    /// `Δ*: H*(X × X) → H*(X)`.
    pub diagonal_restriction: InducedMap,
    /// `H*(SP²(X)) → H*(dX)`.
    pub restriction: InducedMap,
    /// `H*(SP²(X), dX) → H*(SP²(X))`.
    pub relative_to_absolute: InducedMap,
}

impl Analysis {
    pub fn new(x: &SimplicialSet, label: impl Into<String>) -> Result<Self> {
        Self::from_pair(symmetric_square(x), label)
    }

    pub fn from_pair(pair: EquivariantPair, label: impl Into<String>) -> Result<Self> {
        let space = CohomologyRing::absolute(pair.base())?;
        let product = CohomologyRing::absolute(pair.total())?;
        let symmetric_square = CohomologyRing::absolute(&pair.quotient)?;
        let diagonal = CohomologyRing::absolute(&pair.dx)?;
        let relative = CohomologyRing::relative(&pair.quotient, &pair.image_diagonal)?;
        let diagonal_restriction = InducedMap::new(&pair.product.diagonal, &product, &space)?;
        let restriction =
            InducedMap::new(&pair.image_diagonal_inclusion, &symmetric_square, &diagonal)?;
        let identity = crate::sset::SSetMap::identity(&pair.quotient);
        let relative_to_absolute = InducedMap::new(&identity, &relative, &symmetric_square)?;
        Ok(Self {
            label: label.into(),
            pair,
            space,
            product,
            symmetric_square,
            diagonal,
            relative,
            diagonal_restriction,
            restriction,
            relative_to_absolute,
        })
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.space.dim(0) {
            1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }

    /// Mod-2 zero-divisors: `ker(H*(X × X) → H*(X))` in positive degrees.
    pub fn zero_divisors(&self) -> GradedSubspace<'_> {
        GradedSubspace::kernel_of(&self.product, &self.diagonal_restriction)
    }

    /// Positive-degree classes of `SP²(X)` restricting to zero on `dX`.
    pub fn diagonal_kernel(&self) -> GradedSubspace<'_> {
        GradedSubspace::kernel_of(&self.symmetric_square, &self.restriction)
    }

    /// `H^{>0}(SP²(X), dX)`.
    pub fn relative_classes(&self) -> GradedSubspace<'_> {
        GradedSubspace::positive_part(&self.relative)
    }

    pub fn tc_lower(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(cup_length(&self.zero_divisors()))
    }

    pub fn sigma_kernel_lower(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(cup_length(&self.diagonal_kernel()))
    }

    pub fn sigma_relative_lower(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(cup_length(&self.relative_classes()))
    }

    /// Grades where `image(H*(SP², dX) → H*(SP²)) ≠ ker(H*(SP²) → H*(dX))`.
    pub fn exactness_failures(&self) -> Vec<usize> {
        (0..=self.symmetric_square.top_grade())
            .filter(|&k| {
                let dim = self.symmetric_square.dim(k);
                self.relative_to_absolute.image(k, dim) != self.restriction.kernel(k, dim)
            })
            .collect()
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable {
            space: self.space.betti(),
            product: self.product.betti(),
            symmetric_square: self.symmetric_square.betti(),
            diagonal: self.diagonal.betti(),
            relative: self.relative.betti(),
        }
    }

    /// All four bounds with provenance. `user_declared` records whether `s`
    /// came from the caller or is the default.
    pub fn report(&self, s: usize, user_declared: bool) -> Result<BoundsReport> {
        self.require_connected()?;
        if let Connectivity::Refuted { grade, betti } = connectivity_from_betti(&self.space.betti(), s)
        {
            return Err(Error::ConnectivityRefuted {
                declared: s,
                grade,
                betti,
            });
        }
        let dim = self.pair.base().dim();
        let bounds = Bounds {
            tc_lower: self.tc_lower()?,
            sigma_kernel_lower: self.sigma_kernel_lower()?,
            sigma_relative_lower: self.sigma_relative_lower()?,
            sigma_upper: upper_bound_sigma(dim, s),
        };
        let lower = bounds.lower();
        if lower > bounds.sigma_upper {
            return Err(Error::InconsistentBounds {
                lower,
                upper: bounds.sigma_upper,
            });
        }
        let lower_certified_by = [
            (BoundKind::ZeroDivisor, bounds.tc_lower),
            (BoundKind::SigmaKernel, bounds.sigma_kernel_lower),
            (BoundKind::SigmaRelative, bounds.sigma_relative_lower),
        ]
        .into_iter()
        .filter(|&(_, v)| v == lower)
        .map(|(k, _)| k)
        .collect();

        let provenance = vec![
            format!(
                "tc_lower = {}: cup-length of the mod-2 zero-divisors ker(H*(X×X) -> H*(X)); bounds TC(X) <= TC^Σ(X) from below",
                bounds.tc_lower
            ),
            format!(
                "sigma_kernel_lower = {}: cup-length of ker(H*(SP²X) -> H*(dX)); products of classes vanishing on the diagonal image bound TC^Σ(X) from below",
                bounds.sigma_kernel_lower
            ),
            format!(
                "sigma_relative_lower = {}: cup-length of H^{{>0}}(SP²X, dX); bounds monoidal TC^{{M,Σ}}(X), which equals TC^Σ(X) since finite complexes are paracompact ENRs",
                bounds.sigma_relative_lower
            ),
            format!(
                "sigma_upper = {}: TC^Σ(X) < (2·dim X + 1)/(s + 1) for an s-connected polyhedron, with dim X = {dim}, s = {s}",
                bounds.sigma_upper
            ),
        ];

        let mut caveats =
            vec!["Lower bounds use mod-2 coefficients only; other coefficients may give stronger bounds.".to_string()];
        if s >= 1 {
            caveats.push(format!(
                "The upper bound assumes X is {s}-connected as declared. {CONNECTIVITY_CAVEAT}."
            ));
        }
        if lower < bounds.sigma_upper {
            caveats.push("The bounds do not determine TC^Σ(X); its value lies in the interval.".into());
        }
        if self.space.betti().iter().skip(1).all(|&b| b == 0) {
            caveats.push("X is mod-2 acyclic; if X is contractible then TC^Σ(X) = 0.".into());
        }

        Ok(BoundsReport {
            space: self.label.clone(),
            connectivity: DeclaredConnectivity {
                s,
                user_declared,
            },
            betti: self.betti(),
            bounds,
            interval: [lower, bounds.sigma_upper],
            lower_certified_by,
            provenance,
            caveats,
        })
    }
}

pub fn lower_bound_tc(x: &SimplicialSet) -> Result<usize> {
    Analysis::new(x, "")?.tc_lower()
}

pub fn lower_bound_sigma_kernel(x: &SimplicialSet) -> Result<usize> {
    Analysis::new(x, "")?.sigma_kernel_lower()
}

pub fn lower_bound_sigma_relative(x: &SimplicialSet) -> Result<usize> {
    Analysis::new(x, "")?.sigma_relative_lower()
}

/// Full report for `x` with declared connectivity `s`.
pub fn bounds_report(x: &SimplicialSet, label: &str, s: usize) -> Result<BoundsReport> {
    Analysis::new(x, label)?.report(s, s > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    ZeroDivisor,
    SigmaKernel,
    SigmaRelative,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::ZeroDivisor => "zero-divisor cup-length",
            BoundKind::SigmaKernel => "diagonal-kernel cup-length",
            BoundKind::SigmaRelative => "relative cup-length",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeclaredConnectivity {
    pub s: usize,
    pub user_declared: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub space: Vec<usize>,
    pub product: Vec<usize>,
    pub symmetric_square: Vec<usize>,
    pub diagonal: Vec<usize>,
    pub relative: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub tc_lower: usize,
    pub sigma_kernel_lower: usize,
    pub sigma_relative_lower: usize,
    pub sigma_upper: usize,
}

impl Bounds {
    pub fn lower(&self) -> usize {
        self.tc_lower
            .max(self.sigma_kernel_lower)
            .max(self.sigma_relative_lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub space: String,
    pub connectivity: DeclaredConnectivity,
    pub betti: BettiTable,
    pub bounds: Bounds,
    pub interval: [usize; 2],
    pub lower_certified_by: Vec<BoundKind>,
    pub provenance: Vec<String>,
    pub caveats: Vec<String>,
}

impl BoundsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [lo, hi] = self.interval;
        writeln!(f, "space: {}", self.space)?;
        writeln!(
            f,
            "declared connectivity: s = {}{}",
            self.connectivity.s,
            if self.connectivity.user_declared { "" } else { " (default)" }
        )?;
        writeln!(f, "betti (mod 2):")?;
        for (name, b) in [
            ("X", &self.betti.space),
            ("X×X", &self.betti.product),
            ("SP²X", &self.betti.symmetric_square),
            ("dX", &self.betti.diagonal),
            ("(SP²X, dX)", &self.betti.relative),
        ] {
            writeln!(f, "  {name:<11} {b:?}")?;
        }
        writeln!(f, "bounds:")?;
        writeln!(f, "  TC lower (zero-divisors)    {}", self.bounds.tc_lower)?;
        writeln!(f, "  TC^Σ lower (diagonal kernel) {}", self.bounds.sigma_kernel_lower)?;
        writeln!(f, "  TC^Σ lower (relative)        {}", self.bounds.sigma_relative_lower)?;
        writeln!(f, "  TC^Σ upper                   {}", self.bounds.sigma_upper)?;
        if lo == hi {
            writeln!(f, "TC^Σ = {lo}")?;
        } else {
            writeln!(f, "{lo} <= TC^Σ <= {hi}")?;
        }
        let routes: Vec<String> = self.lower_certified_by.iter().map(|k| k.to_string()).collect();
        writeln!(f, "lower end certified by: {}", routes.join(", "))?;
        writeln!(f, "provenance:")?;
        for p in &self.provenance {
            writeln!(f, "  - {p}")?;
        }
        writeln!(f, "caveats:")?;
        for c in &self.caveats {
            writeln!(f, "  - {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Generator;

    fn nerve(g: Generator) -> SimplicialSet {
        SimplicialSet::from_complex(&g.generate())
    }

    #[test]
    fn upper_bound_examples() {
        for n in 1..=10 {
            assert_eq!(upper_bound_sigma(n, n - 1), 2);
        }
        assert_eq!(upper_bound_sigma(2, 0), 4);
        for m in 1..=5 {
            assert_eq!(upper_bound_sigma(2 * m, 1), 2 * m);
        }
        assert_eq!(upper_bound_sigma(0, 0), 0);
    }

    #[test]
    fn upper_bound_is_monotone() {
        for d in 0..12 {
            for s in 0..12 {
                assert!(upper_bound_sigma(d, s + 1) <= upper_bound_sigma(d, s));
                assert!(upper_bound_sigma(d + 1, s) >= upper_bound_sigma(d, s));
                // strictness: k < (2d+1)/(s+1) <= k+1
                let k = upper_bound_sigma(d, s);
                assert!(k * (s + 1) < 2 * d + 1);
                assert!((k + 1) * (s + 1) >= 2 * d + 1);
            }
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(
            connectivity_check(&nerve(Generator::Sphere(2)), 1).unwrap(),
            Connectivity::Consistent
        );
        assert_eq!(
            connectivity_check(&nerve(Generator::Torus), 1).unwrap(),
            Connectivity::Refuted { grade: 1, betti: 2 }
        );
        assert_eq!(
            connectivity_check(&nerve(Generator::Rp2), 1).unwrap(),
            Connectivity::Refuted { grade: 1, betti: 1 }
        );
        assert_eq!(
            connectivity_check(&nerve(Generator::Sphere(0)), 0).unwrap(),
            Connectivity::Refuted { grade: 0, betti: 1 }
        );
    }

    #[test]
    fn zero_subspace_has_cup_length_zero() {
        let ring = CohomologyRing::absolute(&nerve(Generator::Torus)).unwrap();
        assert_eq!(cup_length(&GradedSubspace::zero(&ring)), 0);
        assert_eq!(cup_length(&GradedSubspace::positive_part(&ring)), 2);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let x = nerve(Generator::Sphere(0));
        assert!(matches!(
            lower_bound_tc(&x),
            Err(Error::Disconnected { components: 2 })
        ));
        assert!(matches!(
            bounds_report(&x, "two points", 0),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn point_report() {
        let r = bounds_report(&nerve(Generator::Point), "point", 0).unwrap();
        assert_eq!(r.bounds.tc_lower, 0);
        assert_eq!(r.bounds.sigma_kernel_lower, 0);
        assert_eq!(r.bounds.sigma_relative_lower, 0);
        assert_eq!(r.interval, [0, 0]);
        assert!(r.caveats.iter().any(|c| c.contains("contractible")));
    }

    #[test]
    fn refuted_guard_blocks_report() {
        let x = nerve(Generator::Torus);
        assert!(matches!(
            bounds_report(&x, "torus", 1),
            Err(Error::ConnectivityRefuted { declared: 1, grade: 1, betti: 2 })
        ));
    }

    #[test]
    fn caveat_is_verbatim() {
        let r = bounds_report(&nerve(Generator::Sphere(2)), "sphere:2", 1).unwrap();
        assert!(r.caveats.iter().any(|c| c.contains(CONNECTIVITY_CAVEAT)));
    }
}

//! Normalized mod-2 cochains, absolute and relative cohomology, induced maps
//! and the Alexander–Whitney cup product.
//!
//! Relative cochains of a pair `(S, A)` are the cochains vanishing on `A`;
//! they are indexed by the nondegenerate simplices outside `A`. Degenerate
//! simplices carry no generators, so faces that resolve to a degenerate
//! simplex simply drop out of coboundaries and products.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{quotient_basis, BitVec, Echelon, F2Matrix, Subspace};
use crate::sset::{SSetMap, Simplex, SimplicialSet, Subcomplex};

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct CochainComplex {
    space: SimplicialSet,
    sub: Option<Subcomplex>,
    generators: Vec<Vec<usize>>,
    index: Vec<Vec<Option<usize>>>,
    // coboundary[k]: C^k -> C^{k+1}, shape n_{k+1} x n_k. The top grade maps to 0.
    coboundary: Vec<F2Matrix>,
}

impl CochainComplex {
    pub fn new(space: &SimplicialSet, rel: Option<&Subcomplex>) -> Result<Self> {
        if let Some(sub) = rel {
            let shape = sub.counts();
            if shape.len() > space.counts().len()
                || shape.iter().enumerate().any(|(k, &n)| n > space.count(k))
            {
                return Err(Error::NotSubcomplex(
                    "subcomplex was built for a different simplicial set".into(),
                ));
            }
            // Re-validate against this parent.
            Subcomplex::new(
                space,
                (0..space.counts().len())
                    .map(|k| space.nondegenerate(k).map(|s| sub.contains(s)).collect())
                    .collect(),
            )?;
        }
        let top = space.dim();
        let mut generators = Vec::with_capacity(top + 1);
        let mut index = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut gens = Vec::new();
            let mut idx = vec![None; space.count(k)];
            for s in space.nondegenerate(k) {
                if rel.is_some_and(|a| a.contains(s)) {
                    continue;
                }
                idx[s.id] = Some(gens.len());
                gens.push(s.id);
            }
            generators.push(gens);
            index.push(idx);
        }

        let mut coboundary = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let cols = generators[k].len();
            let mut m = F2Matrix::zeros(generators.get(k + 1).map_or(0, Vec::len), cols);
            if k < top {
                for (row, &id) in generators[k + 1].iter().enumerate() {
                    for i in 0..=k + 1 {
                        let f = space.face_of_nondegenerate(k + 1, id, i);
                        if f.is_degenerate() {
                            continue;
                        }
                        if let Some(col) = index[k][f.id] {
                            m.flip(row, col);
                        }
                    }
                }
            }
            coboundary.push(m);
        }

        let complex = Self {
            space: space.clone(),
            sub: rel.cloned(),
            generators,
            index,
            coboundary,
        };
        complex.check_square_zero()?;
        Ok(complex)
    }

    pub fn space(&self) -> &SimplicialSet {
        &self.space
    }

    pub fn subcomplex(&self) -> Option<&Subcomplex> {
        self.sub.as_ref()
    }

    pub fn is_relative(&self) -> bool {
        self.sub.is_some()
    }

    pub fn top_grade(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn generator_count(&self, k: usize) -> usize {
        self.generators.get(k).map_or(0, Vec::len)
    }

    /// Simplex ids of the generators in grade `k`.
    pub fn generators(&self, k: usize) -> &[usize] {
        self.generators.get(k).map_or(&[], Vec::as_slice)
    }

    /// Generator index of a simplex, if it carries one.
    pub fn generator_of(&self, s: Simplex) -> Option<usize> {
        if s.is_degenerate() {
            return None;
        }
        self.index.get(s.dim).and_then(|g| g[s.id])
    }

    pub fn coboundary(&self, k: usize) -> &F2Matrix {
        &self.coboundary[k]
    }

    pub fn apply_coboundary(&self, k: usize, cochain: &BitVec) -> Result<BitVec> {
        self.coboundary[k].mul_vec(cochain)
    }

    fn check_square_zero(&self) -> Result<()> {
        for k in 0..self.top_grade() {
            let dd = self.coboundary[k + 1].mul(&self.coboundary[k])?;
            if !dd.is_zero() {
                return Err(Error::Internal(format!(
                    "coboundary squares to a nonzero map in grade {k}"
                )));
            }
        }
        Ok(())
    }

    /// Alexander–Whitney product of a `p`-cochain and a `q`-cochain: on a
    /// `(p+q)`-simplex, `a` is evaluated on the front `p`-face and `b` on the
    /// back `q`-face.
    pub fn cup_cochains(&self, p: usize, a: &BitVec, q: usize, b: &BitVec) -> Result<BitVec> {
        self.check_len(p, a)?;
        self.check_len(q, b)?;
        let n = p + q;
        let mut out = BitVec::zeros(self.generator_count(n));
        if n > self.top_grade() {
            return Ok(out);
        }
        for (g, &id) in self.generators[n].iter().enumerate() {
            let s = Simplex::nondegenerate(n, id);
            let front = self.generator_of(self.space.front_face(s, p));
            let back = self.generator_of(self.space.back_face(s, q));
            if let (Some(f), Some(bk)) = (front, back) {
                if a.get(f) && b.get(bk) {
                    out.set(g, true);
                }
            }
        }
        Ok(out)
    }

    /// Front/back generator pairs for every generator of grade `p + q`.
    fn aw_split(&self, p: usize, q: usize) -> Vec<(Option<usize>, Option<usize>)> {
        let n = p + q;
        self.generators(n)
            .iter()
            .map(|&id| {
                let s = Simplex::nondegenerate(n, id);
                (
                    self.generator_of(self.space.front_face(s, p)),
                    self.generator_of(self.space.back_face(s, q)),
                )
            })
            .collect()
    }

    fn check_len(&self, k: usize, c: &BitVec) -> Result<()> {
        if c.len() != self.generator_count(k) {
            return Err(Error::ShapeMismatch {
                expected: self.generator_count(k),
                found: c.len(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Grade {
    representatives: Vec<BitVec>,
    cocycles: Subspace,
    coboundaries: Subspace,
    // Coboundaries tagged zero, representatives tagged by their basis index.
    coordinates: Echelon,
}

/// A cohomology class: coordinates in a ring's basis of one grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    ring: u64,
    pub grade: usize,
    pub coords: BitVec,
}

impl Class {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// Mod-2 cohomology with its multiplication tensors.
#[derive(Debug)]
pub struct CohomologyRing {
    id: u64,
    complex: CochainComplex,
    grades: Vec<Grade>,
    // Indexed by p * (top + 1) + q; entry i * dim_q + j is the product of
    // basis classes i (grade p) and j (grade q) in the basis of grade p + q.
    tensors: Vec<OnceLock<Vec<BitVec>>>,
}

impl CohomologyRing {
    pub fn new(complex: CochainComplex) -> Result<Self> {
        let top = complex.top_grade();
        let mut grades = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let n = complex.generator_count(k);
            let cocycles = complex.coboundary(k).kernel();
            let coboundaries = if k == 0 {
                Subspace::zero(n)
            } else {
                complex.coboundary(k - 1).image()
            };
            let representatives = quotient_basis(&cocycles, &coboundaries)?;
            let mut coordinates = Echelon::new(n, representatives.len());
            let none = BitVec::zeros(representatives.len());
            for v in coboundaries.basis() {
                coordinates.insert(v.clone(), none.clone());
            }
            for (i, v) in representatives.iter().enumerate() {
                coordinates.insert(v.clone(), BitVec::unit(representatives.len(), i));
            }
            grades.push(Grade {
                representatives,
                cocycles,
                coboundaries,
                coordinates,
            });
        }
        Ok(Self {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            complex,
            grades,
            tensors: (0..(top + 1) * (top + 1)).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Absolute cohomology of a simplicial set.
    pub fn absolute(space: &SimplicialSet) -> Result<Self> {
        Self::new(CochainComplex::new(space, None)?)
    }

    /// Cohomology of the pair `(space, sub)`.
    pub fn relative(space: &SimplicialSet, sub: &Subcomplex) -> Result<Self> {
        Self::new(CochainComplex::new(space, Some(sub))?)
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn is_relative(&self) -> bool {
        self.complex.is_relative()
    }

    pub fn top_grade(&self) -> usize {
        self.grades.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.grades.get(k).map_or(0, |g| g.representatives.len())
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..self.grades.len()).map(|k| self.dim(k)).collect()
    }

    pub fn representatives(&self, k: usize) -> &[BitVec] {
        self.grades
            .get(k)
            .map_or(&[], |g| g.representatives.as_slice())
    }

    pub fn cocycles(&self, k: usize) -> &Subspace {
        &self.grades[k].cocycles
    }

    pub fn coboundaries(&self, k: usize) -> &Subspace {
        &self.grades[k].coboundaries
    }

    pub fn zero(&self, grade: usize) -> Class {
        Class {
            ring: self.id,
            grade,
            coords: BitVec::zeros(self.dim(grade)),
        }
    }

    pub fn basis_class(&self, grade: usize, i: usize) -> Class {
        Class {
            ring: self.id,
            grade,
            coords: BitVec::unit(self.dim(grade), i),
        }
    }

    pub fn class(&self, grade: usize, coords: BitVec) -> Result<Class> {
        if coords.len() != self.dim(grade) {
            return Err(Error::ShapeMismatch {
                expected: self.dim(grade),
                found: coords.len(),
            });
        }
        Ok(Class {
            ring: self.id,
            grade,
            coords,
        })
    }

    /// The class of the constant cochain 1. `None` for relative rings.
    pub fn unit(&self) -> Option<Class> {
        if self.is_relative() {
            return None;
        }
        let one = BitVec::ones(self.complex.generator_count(0));
        self.class_of_cocycle(0, &one).ok()
    }

    /// Coordinates of a cocycle in the chosen basis.
    pub fn coordinates(&self, grade: usize, cocycle: &BitVec) -> Result<BitVec> {
        let g = self.grades.get(grade).ok_or(Error::NotACocycle { grade })?;
        if cocycle.len() != self.complex.generator_count(grade) {
            return Err(Error::ShapeMismatch {
                expected: self.complex.generator_count(grade),
                found: cocycle.len(),
            });
        }
        let mut residue = cocycle.clone();
        let tag = g.coordinates.reduce(&mut residue);
        if !residue.is_zero() {
            return Err(Error::NotACocycle { grade });
        }
        Ok(tag)
    }

    pub fn class_of_cocycle(&self, grade: usize, cocycle: &BitVec) -> Result<Class> {
        Ok(Class {
            ring: self.id,
            grade,
            coords: self.coordinates(grade, cocycle)?,
        })
    }

    /// A cocycle representing the class.
    pub fn representative(&self, class: &Class) -> Result<BitVec> {
        self.owns(class)?;
        let mut c = BitVec::zeros(self.complex.generator_count(class.grade));
        for i in class.coords.ones_iter() {
            c.xor_assign(&self.grades[class.grade].representatives[i]);
        }
        Ok(c)
    }

    fn owns(&self, class: &Class) -> Result<()> {
        if class.ring != self.id {
            return Err(Error::MixedRings);
        }
        Ok(())
    }

    /// Products of basis classes of grades `p` and `q`.
    pub fn tensor(&self, p: usize, q: usize) -> &[BitVec] {
        let top = self.top_grade();
        if p > top || q > top {
            return &[];
        }
        self.tensors[p * (top + 1) + q].get_or_init(|| self.compute_tensor(p, q))
    }

    fn compute_tensor(&self, p: usize, q: usize) -> Vec<BitVec> {
        let n = p + q;
        let (dp, dq, dn) = (self.dim(p), self.dim(q), self.dim(n));
        if n > self.top_grade() || dp == 0 || dq == 0 {
            return vec![BitVec::zeros(dn); dp * dq];
        }
        let split = self.complex.aw_split(p, q);
        let (reps_p, reps_q) = (self.representatives(p), self.representatives(q));
        let mut out = Vec::with_capacity(dp * dq);
        for a in reps_p {
            for b in reps_q {
                let mut c = BitVec::zeros(split.len());
                for (g, pair) in split.iter().enumerate() {
                    if let (Some(f), Some(bk)) = *pair {
                        if a.get(f) && b.get(bk) {
                            c.set(g, true);
                        }
                    }
                }
                out.push(
                    self.coordinates(n, &c)
                        .expect("cup product of cocycles is a cocycle"),
                );
            }
        }
        out
    }

    /// Product of coordinate vectors `u` (grade `p`) and `w` (grade `q`).
    pub fn multiply(&self, p: usize, u: &BitVec, q: usize, w: &BitVec) -> BitVec {
        let n = p + q;
        let mut out = BitVec::zeros(self.dim(n));
        if n > self.top_grade() {
            return out;
        }
        let t = self.tensor(p, q);
        let dq = self.dim(q);
        for i in u.ones_iter() {
            for j in w.ones_iter() {
                out.xor_assign(&t[i * dq + j]);
            }
        }
        out
    }

    pub fn cup(&self, a: &Class, b: &Class) -> Result<Class> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(Class {
            ring: self.id,
            grade: a.grade + b.grade,
            coords: self.multiply(a.grade, &a.coords, b.grade, &b.coords),
        })
    }

    /// Betti numbers and multiplication tables in a stable layout.
    pub fn export(&self) -> RingExport {
        let top = self.top_grade();
        let mut products = Vec::new();
        for p in 0..=top {
            for q in 0..=top - p {
                if self.dim(p) == 0 || self.dim(q) == 0 {
                    continue;
                }
                let t = self.tensor(p, q);
                let dq = self.dim(q);
                products.push(ProductTable {
                    p,
                    q,
                    table: (0..self.dim(p))
                        .map(|i| (0..dq).map(|j| t[i * dq + j].to_string01()).collect())
                        .collect(),
                });
            }
        }
        RingExport {
            relative: self.is_relative(),
            betti: self.betti(),
            products,
        }
    }
}

/// JSON shape of an exported ring. `table[i][j]` is the product of basis
/// classes `i` and `j` written as a `0`/`1` coordinate string.
#[derive(Clone, Debug, Serialize)]
pub struct RingExport {
    pub relative: bool,
    pub betti: Vec<usize>,
    pub products: Vec<ProductTable>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductTable {
    pub p: usize,
    pub q: usize,
    pub table: Vec<Vec<String>>,
}

/// The map `f*: H*(T) → H*(S)` induced by `f: S → T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    from_ring: u64,
    to_ring: u64,
    /// `grades[k]` has one column per basis class of `H^k(T)` and one row per
    /// basis class of `H^k(S)`.
    pub grades: Vec<F2Matrix>,
}

impl InducedMap {
    /// `target` is the ring of `f`'s target, `source` the ring of its source.
    pub fn new(f: &SSetMap, target: &CohomologyRing, source: &CohomologyRing) -> Result<Self> {
        let (tc, sc) = (target.complex(), source.complex());
        f.validate(sc.space(), tc.space())?;
        match (sc.subcomplex(), tc.subcomplex()) {
            (Some(a_s), None) => {
                if a_s.counts().iter().any(|&n| n > 0) {
                    return Err(Error::InvalidMap(
                        "an absolute class does not pull back to a relative one".into(),
                    ));
                }
            }
            (Some(a_s), Some(a_t)) => {
                for k in 0..sc.space().counts().len() {
                    for s in sc.space().nondegenerate(k).filter(|s| a_s.contains(*s)) {
                        if !a_t.contains(f.apply(s).base()) {
                            return Err(Error::InvalidMap(format!(
                                "{s:?} lies in the source subcomplex but its image does not"
                            )));
                        }
                    }
                }
            }
            _ => {}
        }

        let top = source.top_grade().min(target.top_grade());
        let mut grades = Vec::with_capacity(source.top_grade() + 1);
        for k in 0..=source.top_grade() {
            let mut columns = Vec::with_capacity(target.dim(k));
            if k <= top {
                for rep in target.representatives(k) {
                    let mut pulled = BitVec::zeros(sc.generator_count(k));
                    for (g, &id) in sc.generators(k).iter().enumerate() {
                        if let Some(t) = tc.generator_of(f.image(k, id)) {
                            if rep.get(t) {
                                pulled.set(g, true);
                            }
                        }
                    }
                    columns.push(source.coordinates(k, &pulled)?);
                }
            }
            grades.push(F2Matrix::from_columns(source.dim(k), &columns)?);
        }
        Ok(Self {
            from_ring: target.id,
            to_ring: source.id,
            grades,
        })
    }

    pub fn matrix(&self, k: usize) -> Option<&F2Matrix> {
        self.grades.get(k)
    }

    /// Kernel in grade `k`, as a subspace of the target ring's coordinates.
    pub fn kernel(&self, k: usize, target_dim: usize) -> Subspace {
        match self.grades.get(k) {
            Some(m) if m.cols() == target_dim => m.kernel(),
            _ => Subspace::full(target_dim),
        }
    }

    /// Image in grade `k`, as a subspace of the source ring's coordinates.
    pub fn image(&self, k: usize, source_dim: usize) -> Subspace {
        match self.grades.get(k) {
            Some(m) => m.image(),
            None => Subspace::zero(source_dim),
        }
    }

    pub fn apply(&self, class: &Class) -> Result<Class> {
        if class.ring != self.from_ring {
            return Err(Error::MixedRings);
        }
        let coords = match self.grades.get(class.grade) {
            Some(m) => m.mul_vec(&class.coords)?,
            None => BitVec::zeros(0),
        };
        Ok(Class {
            ring: self.to_ring,
            grade: class.grade,
            coords,
        })
    }

    /// `self ∘ earlier`: first `earlier`, then `self`.
    pub fn after(&self, earlier: &InducedMap) -> Result<InducedMap> {
        if earlier.to_ring != self.from_ring {
            return Err(Error::MixedRings);
        }
        let grades = self
            .grades
            .iter()
            .zip(&earlier.grades)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_>>()?;
        Ok(InducedMap {
            from_ring: earlier.from_ring,
            to_ring: self.to_ring,
            grades,
        })
    }
}

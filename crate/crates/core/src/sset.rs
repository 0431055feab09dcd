//! Finite simplicial sets stored by their nondegenerate simplices.
//!
//! A possibly degenerate `m`-simplex is written `η* x` where `x` is a
//! nondegenerate simplex and `η: [m] → [k]` is a monotone surjection. The
//! surjection is recorded as a [`Degeneracy`] word: bit `j` is set when `η`
//! identifies `j` and `j + 1`, i.e. when `s_j` occurs in the normal form.
//! Face tables store every face of every nondegenerate simplex already
//! resolved to this form.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Degeneracy word of a monotone surjection `[m] → [m - popcount]`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Degeneracy(pub u64);

impl Degeneracy {
    pub const NONE: Degeneracy = Degeneracy(0);

    #[inline]
    pub fn is_none(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn collapses(self, j: usize) -> bool {
        (self.0 >> j) & 1 == 1
    }

    /// Values `η(0), ..., η(dim)` of the surjection on `[dim]`.
    pub fn values(self, dim: usize) -> Vec<usize> {
        let mut vals = Vec::with_capacity(dim + 1);
        let mut cur = 0;
        vals.push(0);
        for j in 0..dim {
            if !self.collapses(j) {
                cur += 1;
            }
            vals.push(cur);
        }
        vals
    }

    /// Word of a monotone surjection given by its values.
    pub fn from_values(vals: &[usize]) -> Degeneracy {
        debug_assert!(vals.first().is_none_or(|&v| v == 0));
        let mut w = 0u64;
        for (j, pair) in vals.windows(2).enumerate() {
            debug_assert!(pair[1] == pair[0] || pair[1] == pair[0] + 1);
            if pair[0] == pair[1] {
                w |= 1 << j;
            }
        }
        Degeneracy(w)
    }

    /// `outer ∘ self`, where `self: [dim] → [k]` and `outer: [k] → [l]`.
    pub fn then(self, outer: Degeneracy, dim: usize) -> Degeneracy {
        if outer.is_none() {
            return self;
        }
        if self.is_none() {
            return outer;
        }
        let inner = self.values(dim);
        let outer = outer.values(dim - self.count());
        Degeneracy::from_values(&inner.iter().map(|&v| outer[v]).collect::<Vec<_>>())
    }

    /// Factors out the collapses in `common` (a subset of `self`), returning
    /// the word of the remaining surjection on `[dim - common.count()]`.
    pub fn strip(self, common: Degeneracy, dim: usize) -> Degeneracy {
        debug_assert_eq!(self.0 & common.0, common.0);
        let mut w = 0u64;
        let mut k = 0;
        for j in 0..dim {
            if common.collapses(j) {
                continue;
            }
            if self.collapses(j) {
                w |= 1 << k;
            }
            k += 1;
        }
        Degeneracy(w)
    }
}

/// A possibly degenerate simplex `degeneracy* (nondegenerate simplex id)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Simplex {
    pub dim: usize,
    pub id: usize,
    pub degeneracy: Degeneracy,
}

impl Simplex {
    pub fn nondegenerate(dim: usize, id: usize) -> Self {
        Self {
            dim,
            id,
            degeneracy: Degeneracy::NONE,
        }
    }

    /// Dimension of the underlying nondegenerate simplex.
    #[inline]
    pub fn base_dim(&self) -> usize {
        self.dim - self.degeneracy.count()
    }

    #[inline]
    pub fn is_degenerate(&self) -> bool {
        !self.degeneracy.is_none()
    }

    /// The underlying nondegenerate simplex.
    pub fn base(&self) -> Simplex {
        Simplex::nondegenerate(self.base_dim(), self.id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialSet {
    counts: Vec<usize>,
    // faces[k][id * (k + 1) + i] = d_i of the k-simplex `id`; empty for k = 0.
    faces: Vec<Vec<Simplex>>,
}

impl SimplicialSet {
    /// Builds a simplicial set from resolved face tables and checks the
    /// simplicial identities.
    pub fn from_faces(counts: Vec<usize>, faces: Vec<Vec<Simplex>>) -> Result<Self> {
        let s = Self::from_faces_unchecked(counts, faces);
        s.check()?;
        Ok(s)
    }

    pub(crate) fn from_faces_unchecked(mut counts: Vec<usize>, mut faces: Vec<Vec<Simplex>>) -> Self {
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        faces.truncate(counts.len());
        faces.resize(counts.len(), Vec::new());
        Self { counts, faces }
    }

    /// The nerve of an ordered simplicial complex. Nondegenerate `k`-simplices
    /// are numbered in the lexicographic order of their vertex tuples.
    pub fn from_complex(c: &Complex) -> Self {
        let grades = c.simplices();
        let counts: Vec<usize> = grades.iter().map(Vec::len).collect();
        let mut faces = vec![Vec::new()];
        for k in 1..grades.len() {
            let lower = &grades[k - 1];
            let mut table = Vec::with_capacity(grades[k].len() * (k + 1));
            for s in &grades[k] {
                for i in 0..=k {
                    let mut f = s.clone();
                    f.remove(i);
                    let id = lower.binary_search(&f).expect("closure contains every face");
                    table.push(Simplex::nondegenerate(k - 1, id));
                }
            }
            faces.push(table);
        }
        Self { counts, faces }
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of nondegenerate simplices in grade `k` (zero above the top grade).
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn nondegenerate(&self, k: usize) -> impl Iterator<Item = Simplex> {
        (0..self.count(k)).map(move |id| Simplex::nondegenerate(k, id))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `d_i` of a nondegenerate simplex, straight from the face table.
    #[inline]
    pub fn face_of_nondegenerate(&self, dim: usize, id: usize, i: usize) -> Simplex {
        self.faces[dim][id * (dim + 1) + i]
    }

    /// `d_i` of any simplex, resolved to normal form.
    pub fn face(&self, s: Simplex, i: usize) -> Simplex {
        assert!(s.dim >= 1 && i <= s.dim, "d_{i} undefined on a {}-simplex", s.dim);
        if !s.is_degenerate() {
            return self.face_of_nondegenerate(s.dim, s.id, i);
        }
        let k = s.base_dim();
        let mut vals = s.degeneracy.values(s.dim);
        vals.remove(i);
        // Removing one position from a surjection loses at most one value.
        let missing = (0..=k).find(|v| vals.binary_search(v).is_err());
        match missing {
            None => Simplex {
                dim: s.dim - 1,
                id: s.id,
                degeneracy: Degeneracy::from_values(&vals),
            },
            Some(j) => {
                for v in vals.iter_mut() {
                    if *v > j {
                        *v -= 1;
                    }
                }
                let inner = Degeneracy::from_values(&vals);
                let f = self.face_of_nondegenerate(k, s.id, j);
                Simplex {
                    dim: s.dim - 1,
                    id: f.id,
                    degeneracy: inner.then(f.degeneracy, s.dim - 1),
                }
            }
        }
    }

    /// `s_j` of any simplex.
    pub fn degeneracy(&self, s: Simplex, j: usize) -> Simplex {
        assert!(j <= s.dim);
        let mut vals = s.degeneracy.values(s.dim);
        vals.insert(j, vals[j]);
        Simplex {
            dim: s.dim + 1,
            id: s.id,
            degeneracy: Degeneracy::from_values(&vals),
        }
    }

    /// Front `p`-face: the restriction to vertices `0..=p`.
    pub fn front_face(&self, mut s: Simplex, p: usize) -> Simplex {
        while s.dim > p {
            s = self.face(s, s.dim);
        }
        s
    }

    /// Back `q`-face: the restriction to the last `q + 1` vertices.
    pub fn back_face(&self, mut s: Simplex, q: usize) -> Simplex {
        while s.dim > q {
            s = self.face(s, 0);
        }
        s
    }

    /// Vertex `v` of a simplex, as an id in grade 0.
    pub fn vertex(&self, s: Simplex, v: usize) -> usize {
        let s = self.front_face(s, v);
        self.back_face(s, 0).id
    }

    /// Verifies face-table shapes, that faces of nondegenerate simplices are
    /// in range, and `d_i d_j = d_{j-1} d_i` for `i < j` on every
    /// nondegenerate simplex.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        for k in 1..self.counts.len() {
            if self.faces[k].len() != self.counts[k] * (k + 1) {
                return bad(format!("face table of grade {k} has wrong length"));
            }
            for f in &self.faces[k] {
                if f.dim != k - 1 || f.base_dim() > k - 1 || f.id >= self.count(f.base_dim()) {
                    return bad(format!("grade {k} face {f:?} out of range"));
                }
            }
        }
        for k in 2..self.counts.len() {
            for s in self.nondegenerate(k) {
                for j in 1..=k {
                    for i in 0..j {
                        let lhs = self.face(self.face(s, j), i);
                        let rhs = self.face(self.face(s, i), j - 1);
                        if lhs != rhs {
                            return bad(format!(
                                "simplicial identity d_{i} d_{j} fails on {s:?}: {lhs:?} != {rhs:?}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A sub-simplicial set, recorded as membership flags on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subcomplex {
    members: Vec<Vec<bool>>,
}

impl Subcomplex {
    /// Validates that the flagged simplices are closed under faces.
    pub fn new(parent: &SimplicialSet, members: Vec<Vec<bool>>) -> Result<Self> {
        if members.len() > parent.counts.len() {
            return Err(Error::NotSubcomplex(format!(
                "membership has {} grades, parent has {}",
                members.len(),
                parent.counts.len()
            )));
        }
        let mut members = members;
        members.resize(parent.counts.len(), Vec::new());
        for (k, m) in members.iter_mut().enumerate() {
            if m.is_empty() {
                m.resize(parent.count(k), false);
            } else if m.len() != parent.count(k) {
                return Err(Error::NotSubcomplex(format!(
                    "grade {k} membership has length {}",
                    m.len()
                )));
            }
        }
        let sub = Self { members };
        for k in 1..parent.counts.len() {
            for s in parent.nondegenerate(k).filter(|s| sub.contains(*s)) {
                for i in 0..=k {
                    let f = parent.face(s, i);
                    if !sub.contains(f.base()) {
                        return Err(Error::NotSubcomplex(format!(
                            "face {i} of {s:?} is missing"
                        )));
                    }
                }
            }
        }
        Ok(sub)
    }

    pub fn empty(parent: &SimplicialSet) -> Self {
        Self {
            members: parent.counts.iter().map(|&n| vec![false; n]).collect(),
        }
    }

    /// Whether a nondegenerate simplex belongs to the subcomplex.
    #[inline]
    pub fn contains(&self, s: Simplex) -> bool {
        debug_assert!(!s.is_degenerate());
        self.members
            .get(s.dim)
            .and_then(|m| m.get(s.id))
            .copied()
            .unwrap_or(false)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.members
            .iter()
            .map(|m| m.iter().filter(|&&b| b).count())
            .collect()
    }

    /// The subcomplex as a simplicial set of its own, with the inclusion map.
    pub fn extract(&self, parent: &SimplicialSet) -> (SimplicialSet, SSetMap) {
        let renumber: Vec<Vec<Option<usize>>> = self
            .members
            .iter()
            .map(|m| {
                let mut next = 0;
                m.iter()
                    .map(|&b| {
                        b.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let counts = self.counts();
        let mut faces = vec![Vec::new(); counts.len()];
        let mut images = vec![Vec::new(); counts.len()];
        for k in 0..counts.len() {
            for s in parent.nondegenerate(k).filter(|s| self.contains(*s)) {
                images[k].push(s);
                if k > 0 {
                    for i in 0..=k {
                        let f = parent.face(s, i);
                        let id = renumber[f.base_dim()][f.id].expect("closed under faces");
                        faces[k].push(Simplex { id, ..f });
                    }
                }
            }
        }
        let sub = SimplicialSet::from_faces_unchecked(counts, faces);
        images.truncate(sub.counts.len());
        (sub, SSetMap { images })
    }
}

/// A simplicial map, given on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetMap {
    // images[k][id] is a k-simplex of the target in normal form.
    images: Vec<Vec<Simplex>>,
}

impl SSetMap {
    pub fn new(images: Vec<Vec<Simplex>>) -> Self {
        Self { images }
    }

    pub fn identity(s: &SimplicialSet) -> Self {
        Self {
            images: (0..s.counts.len())
                .map(|k| s.nondegenerate(k).collect())
                .collect(),
        }
    }

    /// Image of a nondegenerate simplex.
    #[inline]
    pub fn image(&self, dim: usize, id: usize) -> Simplex {
        self.images[dim][id]
    }

    pub fn images(&self, dim: usize) -> &[Simplex] {
        self.images.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Image of any simplex: `f(η* x) = η* f(x)`.
    pub fn apply(&self, s: Simplex) -> Simplex {
        let img = self.images[s.base_dim()][s.id];
        Simplex {
            dim: s.dim,
            id: img.id,
            degeneracy: s.degeneracy.then(img.degeneracy, s.dim),
        }
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &SSetMap) -> SSetMap {
        SSetMap {
            images: self
                .images
                .iter()
                .map(|grade| grade.iter().map(|&s| then.apply(s)).collect())
                .collect(),
        }
    }

    /// Checks shapes and that the map commutes with every face operator.
    pub fn validate(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        if self.images.len() != source.counts.len() {
            return bad(format!(
                "map defined on {} grades, source has {}",
                self.images.len(),
                source.counts.len()
            ));
        }
        for (k, grade) in self.images.iter().enumerate() {
            if grade.len() != source.count(k) {
                return bad(format!("grade {k} has {} images", grade.len()));
            }
            for img in grade {
                if img.dim != k || img.id >= target.count(img.base_dim()) {
                    return bad(format!("grade {k} image {img:?} out of range"));
                }
            }
        }
        for k in 1..source.counts.len() {
            for s in source.nondegenerate(k) {
                let fs = self.apply(s);
                for i in 0..=k {
                    let lhs = self.apply(source.face(s, i));
                    let rhs = target.face(fs, i);
                    if lhs != rhs {
                        return bad(format!(
                            "map does not commute with d_{i} on {s:?}: {lhs:?} != {rhs:?}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

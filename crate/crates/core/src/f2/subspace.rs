use super::{BitVec, F2Matrix};
use crate::error::{Error, Result};

/// A linear subspace of `F2^ambient`, held as a reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| BitVec::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = BitVec>) -> Result<Self> {
        let rows: Vec<BitVec> = vectors.into_iter().collect();
        let (basis, pivots) = F2Matrix::from_rows(ambient, rows)?.rref();
        Ok(Self {
            ambient,
            basis,
            pivots,
        })
    }

    pub(crate) fn from_reduced(ambient: usize, basis: Vec<BitVec>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.len(), pivots.len());
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        v.len() == self.ambient && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::ShapeMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Subspace::from_vectors(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }
}

/// Coset representatives of `z / b`, drawn from the basis of `z` in order.
pub fn quotient_basis(z: &Subspace, b: &Subspace) -> Result<Vec<BitVec>> {
    if z.ambient != b.ambient {
        return Err(Error::ShapeMismatch {
            expected: z.ambient,
            found: b.ambient,
        });
    }
    if !z.contains_subspace(b) {
        return Err(Error::NotContained);
    }
    let mut echelon = Echelon::new(z.ambient, 0);
    for v in b.basis() {
        echelon.insert(v.clone(), BitVec::zeros(0));
    }
    let mut reps = Vec::new();
    for v in z.basis() {
        if echelon.insert(v.clone(), BitVec::zeros(0)) {
            reps.push(v.clone());
        }
    }
    Ok(reps)
}

/// Forward echelon form where every row carries a tag vector recording which
/// tagged inputs it was built from. Used to read off coordinates of a vector
/// in a chosen basis modulo a subspace.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    tag_len: usize,
    // Sorted by pivot; each row is zero left of its pivot.
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl Echelon {
    pub fn new(ambient: usize, tag_len: usize) -> Self {
        Self {
            ambient,
            tag_len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place, returning the accumulated tag.
    pub fn reduce(&self, v: &mut BitVec) -> BitVec {
        debug_assert_eq!(v.len(), self.ambient);
        let mut tag = BitVec::zeros(self.tag_len);
        for (p, row, t) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                tag.xor_assign(t);
            }
        }
        tag
    }

    /// Inserts `v` with tag `tag`. Returns `false` when `v` was already in the span.
    pub fn insert(&mut self, mut v: BitVec, mut tag: BitVec) -> bool {
        debug_assert_eq!(tag.len(), self.tag_len);
        let acc = self.reduce(&mut v);
        let Some(p) = v.leading() else {
            return false;
        };
        tag.xor_assign(&acc);
        let at = self.rows.partition_point(|(q, _, _)| *q < p);
        self.rows.insert(at, (p, v, tag));
        true
    }
}

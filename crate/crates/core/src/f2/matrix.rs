use std::fmt;

use super::{BitVec, Subspace};
use crate::error::{Error, Result};

/// Dense matrix over the two-element field, stored as packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from packed rows, all of which must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns.to_vec())?.transpose())
    }

    /// Parses the debug dump format: one row per line of `0`/`1` characters.
    pub fn parse_dump(text: &str) -> Option<Self> {
        let rows: Vec<BitVec> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| BitVec::from_str01(l.trim()))
            .collect::<Option<_>>()?;
        let cols = rows.first().map_or(0, BitVec::len);
        Self::from_rows(cols, rows).ok()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r].flip(c);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn row_slice(&self) -> &[BitVec] {
        &self.data
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones_iter() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones_iter() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with leftmost-pivot, topmost-row elimination.
    /// Returns the nonzero reduced rows and their pivot columns.
    pub fn rref(&self) -> (Vec<BitVec>, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..self.cols {
            let Some(found) = (top..rows.len()).find(|&r| rows[r].get(c)) else {
                continue;
            };
            rows.swap(top, found);
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != top && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than full reduction.
        let mut rows: Vec<BitVec> = self.data.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut rank = 0;
        let mut c = 0;
        while rank < rows.len() && c < self.cols {
            if let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(c)) {
                rows.swap(rank, found);
                let (head, tail) = rows.split_at_mut(rank + 1);
                let pivot_row = &head[rank];
                for row in tail.iter_mut() {
                    if row.get(c) {
                        row.xor_assign(pivot_row);
                    }
                }
                rank += 1;
            }
            c += 1;
        }
        rank
    }

    /// Null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols).filter(|&c| !is_pivot[c]).map(|free| {
            let mut v = BitVec::unit(self.cols, free);
            for (row, &p) in reduced.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        });
        Subspace::from_vectors(self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let t = self.transpose();
        let (reduced, pivots) = t.rref();
        Subspace::from_reduced(self.rows, reduced, pivots)
    }

    /// Any `x` with `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let n = self.cols;
        let augmented: Vec<BitVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut a = BitVec::zeros(n + 1);
                for c in row.ones_iter() {
                    a.set(c, true);
                }
                a.set(n, b.get(r));
                a
            })
            .collect();
        let (reduced, pivots) = F2Matrix::from_rows(n + 1, augmented)?.rref();
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(n);
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row.get(n) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Debug dump: one row per line of `0`/`1` characters.
    pub fn dump(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for row in &self.data {
            s.push_str(&row.to_string01());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.dump())
    }
}

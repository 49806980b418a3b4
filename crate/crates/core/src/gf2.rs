//! Dense bit-packed linear algebra over GF(2).
//!
//! Matrices are stored row-major, 64 bits per word, because row XOR is the
//! hot operation in Gaussian elimination. Elimination entry points work on a
//! copy by default so callers can keep using the original matrix; the
//! in-place variants are separate methods.

use crate::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf2Vector({}; ones={:?})", self.len, self.ones())
    }
}

/// A dense matrix over GF(2), bit-packed row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.bits[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.bits[r * self.words_per_row + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    /// Extracts row `r` as a vector.
    pub fn row(&self, r: usize) -> Gf2Vector {
        let start = r * self.words_per_row;
        Gf2Vector {
            len: self.cols,
            words: self.bits[start..start + self.words_per_row].to_vec(),
        }
    }

    /// XORs row `src` into row `dst`.
    pub fn xor_rows(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src, "xor_rows: identical rows");
        let (d, s) = (dst * self.words_per_row, src * self.words_per_row);
        for w in 0..self.words_per_row {
            let v = self.bits[s + w];
            self.bits[d + w] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (ia, ib) = (a * self.words_per_row, b * self.words_per_row);
        for w in 0..self.words_per_row {
            self.bits.swap(ia + w, ib + w);
        }
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Returns the submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows, columns.len());
        for (new_c, &c) in columns.iter().enumerate() {
            for r in 0..self.rows {
                if self.get(r, c) {
                    m.set(r, new_c, true);
                }
            }
        }
        m
    }

    /// Row rank over GF(2). Leaves `self` untouched.
    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref_in_place().len()
    }

    /// Reduced row-echelon form and the pivot columns. Leaves `self` untouched.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut copy = self.clone();
        let pivots = copy.rref_in_place();
        (copy, pivots)
    }

    /// In-place reduced row-echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let Some(pivot_row) = (next_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(next_row, pivot_row);
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    self.xor_rows(r, next_row);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        pivots
    }

    /// A basis of the right null space: every returned `v` satisfies `self·v = 0`,
    /// the vectors are linearly independent, and there are `cols − rank` of them.
    pub fn null_space_basis(&self) -> Vec<Gf2Vector> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = Gf2Vector::zeros(self.cols);
            v.set(free, true);
            for (pivot_row, &pivot_col) in pivots.iter().enumerate() {
                if reduced.get(pivot_row, free) {
                    v.set(pivot_col, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Builds a systematic generator for the code `{x : self·x = 0}`.
    ///
    /// Returns `(g, col_perm)` where `g` is `(cols − rank) × cols` with every
    /// row a codeword of `self` (in the original column order), and
    /// `col_perm[i]` is the original column occupying systematic position `i`:
    /// the first `rank` positions are the parity (pivot) columns, the rest the
    /// message (free) columns. Row `i` of `g` carries message bit `i`, i.e. it
    /// has a 1 at column `col_perm[rank + i]` and at no other free column.
    pub fn systematic_generator(&self) -> Result<(Gf2Matrix, Vec<usize>)> {
        let (reduced, pivots) = self.rref();
        let rank = pivots.len();
        if rank == self.cols {
            return Err(Error::TrivialCode);
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut g = Gf2Matrix::zeros(free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            g.set(i, f, true);
            for (pivot_row, &pivot_col) in pivots.iter().enumerate() {
                if reduced.get(pivot_row, f) {
                    g.set(i, pivot_col, true);
                }
            }
        }
        let mut col_perm = pivots;
        col_perm.extend_from_slice(&free);
        Ok((g, col_perm))
    }

    /// Matrix-vector product over GF(2).
    pub fn mat_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let start = r * self.words_per_row;
            let mut acc = 0u64;
            for (w, &vw) in v.words().iter().enumerate() {
                acc ^= self.bits[start + w] & vw;
            }
            out.set(r, acc.count_ones() % 2 == 1);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix({}x{}):", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

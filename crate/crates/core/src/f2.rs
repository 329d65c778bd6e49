//! Dense bit-packed linear algebra over the two-element field.
//!
//! Vectors and matrices store 64 entries per machine word; addition is XOR.
//! Elimination uses a deterministic pivot rule (scan columns left to right,
//! take the lowest remaining row), so ranks, kernel bases and solutions are
//! reproducible across runs. Kernel bases come out in reduced column-echelon
//! form: one basis vector per free column, unit at its own free column and
//! zero at every other free column.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length vector over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from 0/1 entries.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            assert!(b <= 1, "entry {b} is not an F2 value");
            if b == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_ones(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
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
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in vector sum");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set entries, ascending.
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

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A dense row-major matrix over F2.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[F2Vector]) -> Self {
        let cols = rows.first().map_or(0, F2Vector::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "rows of unequal length");
            let base = r * m.words_per_row;
            m.words[base..base + m.words_per_row].copy_from_slice(&row.words);
        }
        m
    }

    pub fn from_bit_rows(rows: &[Vec<u8>]) -> Self {
        let vecs: Vec<F2Vector> = rows.iter().map(|r| F2Vector::from_bits(r)).collect();
        Self::from_rows(&vecs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.words[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.words[r * self.words_per_row + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.words[r * self.words_per_row + c / WORD_BITS] ^= 1u64 << (c % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn row_vector(&self, r: usize) -> F2Vector {
        let base = r * self.words_per_row;
        F2Vector {
            len: self.cols,
            words: self.words[base..base + self.words_per_row].to_vec(),
        }
    }

    pub fn column_vector(&self, c: usize) -> F2Vector {
        let mut v = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// Column indices of the set entries in row `r`, ascending.
    pub fn row_ones(&self, r: usize) -> Vec<usize> {
        self.row_vector(r).ones()
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let (d, s) = (dst * self.words_per_row, src * self.words_per_row);
        for i in 0..self.words_per_row {
            let w = self.words[s + i];
            self.words[d + i] ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a * self.words_per_row, b * self.words_per_row);
        for i in 0..self.words_per_row {
            self.words.swap(a + i, b + i);
        }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix product over F2. Panics when the inner dimensions differ.
    pub fn mul(&self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            let base = r * out.words_per_row;
            for c in self.row_ones(r) {
                let rbase = c * rhs.words_per_row;
                for i in 0..rhs.words_per_row {
                    out.words[base + i] ^= rhs.words[rbase + i];
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics when `v.len() != cols`.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            let base = r * self.words_per_row;
            for i in 0..self.words_per_row {
                acc ^= self.words[base + i] & v.words[i];
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Extracts the submatrix given by the listed rows and columns, in order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> F2Matrix {
        let mut out = F2Matrix::zeros(row_idx.len(), col_idx.len());
        for (r, &ri) in row_idx.iter().enumerate() {
            for (c, &ci) in col_idx.iter().enumerate() {
                if self.get(ri, ci) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    /// Reduced row echelon form, returning the reduced matrix and the pivot
    /// columns in order.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot) = (next_row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(next_row, pivot);
            for r in 0..m.rows {
                if r != next_row && m.get(r, col) {
                    m.xor_rows(r, next_row);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// F2 rank; row rank equals column rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{ v : Mv = 0 }` in reduced column-echelon form.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = F2Vector::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in pivots.iter().enumerate() {
                if r.get(row, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `Mx = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero. Panics when `b.len() != rows`.
    pub fn solve(&self, b: &F2Vector) -> Option<F2Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            let base = r * aug.words_per_row;
            for (i, &w) in self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
                .iter()
                .enumerate()
            {
                aug.words[base + i] = w;
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = F2Vector::zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            if red.get(row, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_vector(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn rank_empty_matrix() {
        assert_eq!(F2Matrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(F2Matrix::identity(2).rank(), 2);
    }

    #[test]
    fn rank_repeated_rows() {
        let m = F2Matrix::from_bit_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let basis = F2Matrix::zeros(3, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
        assert_eq!(F2Matrix::from_rows(&basis).rank(), 3);
    }

    #[test]
    fn kernel_of_row_sum() {
        let m = F2Matrix::from_bit_rows(&[vec![1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].bits(), vec![1, 1]);
        // exhaustive check over all four vectors of F2^2
        for bits in [[0u8, 0], [0, 1], [1, 0], [1, 1]] {
            let v = F2Vector::from_bits(&bits);
            let in_kernel = m.mul_vec(&v).is_zero();
            assert_eq!(in_kernel, bits == [0, 0] || bits == [1, 1]);
        }
    }

    #[test]
    fn solve_identity() {
        let b = F2Vector::from_bits(&[1, 0, 1]);
        assert_eq!(F2Matrix::identity(3).solve(&b), Some(b));
    }

    #[test]
    fn solve_zero_matrix_inconsistent() {
        let m = F2Matrix::zeros(2, 2);
        assert_eq!(m.solve(&F2Vector::from_bits(&[1, 0])), None);
        assert!(m.solve(&F2Vector::zeros(2)).is_some());
    }

    #[test]
    fn solve_upper_triangular() {
        // exhaustive over all four candidate vectors
        let m = F2Matrix::from_bit_rows(&[vec![1, 1], vec![0, 1]]);
        let b = F2Vector::from_bits(&[0, 1]);
        let x = m.solve(&b).unwrap();
        assert_eq!(x.bits(), vec![1, 1]);
        let solutions: Vec<Vec<u8>> = [[0u8, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .filter(|bits| m.mul_vec(&F2Vector::from_bits(&bits[..])) == b)
            .map(|bits| bits.to_vec())
            .collect();
        assert_eq!(solutions, vec![vec![1, 1]]);
    }

    /// Counts the size of the column span by brute force; rank = log2(size).
    fn brute_force_rank(m: &F2Matrix) -> usize {
        let cols: Vec<F2Vector> = (0..m.cols()).map(|c| m.column_vector(c)).collect();
        let mut span = HashSet::new();
        for mask in 0u32..1 << m.cols() {
            let mut v = F2Vector::zeros(m.rows());
            for (c, col) in cols.iter().enumerate() {
                if (mask >> c) & 1 == 1 {
                    v.xor_assign(col);
                }
            }
            span.insert(v.bits());
        }
        span.len().ilog2() as usize
    }

    fn small_matrix() -> impl Strategy<Value = F2Matrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r)
                .prop_map(move |rows| F2Matrix::from_bit_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn rank_matches_brute_force(m in small_matrix()) {
            prop_assert_eq!(m.rank(), brute_force_rank(&m));
        }

        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_lie_in_kernel_and_are_independent(m in small_matrix()) {
            let basis = m.kernel_basis();
            prop_assert_eq!(basis.len(), m.cols() - m.rank());
            for v in &basis {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            if !basis.is_empty() {
                prop_assert_eq!(F2Matrix::from_rows(&basis).rank(), basis.len());
            }
        }

        #[test]
        fn solve_finds_valid_solutions(m in small_matrix(), seed in any::<u64>()) {
            // build a guaranteed-solvable right-hand side
            let mut x = F2Vector::zeros(m.cols());
            for c in 0..m.cols() {
                if (seed >> (c % 64)) & 1 == 1 {
                    x.set(c, true);
                }
            }
            let b = m.mul_vec(&x);
            let found = m.solve(&b).expect("system is solvable by construction");
            prop_assert_eq!(m.mul_vec(&found), b);
        }
    }
}

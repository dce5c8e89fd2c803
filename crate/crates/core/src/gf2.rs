//! Dense linear algebra over GF(2) with rows packed into 64-bit words.

use std::fmt;

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
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
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A dense `rows x cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        BitMatrix { rows: rows.len(), cols, data: rows }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
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
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r].flip(c)
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        let mut out = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.data.swap(next, p);
            let pivot_row = m.data[next].clone();
            for r in 0..m.rows {
                if r != next && m.get(r, c) {
                    m.data[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<BitVector> {
        let Echelon { matrix, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::zeros(self.cols);
                x.set(f, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if matrix.get(i, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &BitVector) -> Option<BitVector> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                aug.set(r, c, true);
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let Echelon { matrix, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if matrix.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }

    /// Indices of a maximal linearly independent subset of the columns,
    /// chosen greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Rank of the span of a family of vectors of equal length.
pub fn span_rank(len: usize, vectors: &[BitVector]) -> usize {
    BitMatrix::from_rows(len, vectors.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix_from(rows: &[&str]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| BitVector::from_bools(&r.chars().map(|c| c == '1').collect::<Vec<_>>()))
            .collect();
        BitMatrix::from_rows(cols, data)
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(matrix_from(&["110", "011", "101"]).rank(), 2);
        assert_eq!(BitMatrix::identity(70).rank(), 70);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn nullspace_of_cycle_graph_incidence() {
        let m = matrix_from(&["110", "011", "101"]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(format!("{:?}", ns[0]), "111");
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = matrix_from(&["11", "11"]);
        assert!(m.solve(&BitVector::from_bools(&[true, false])).is_none());
        let x = m.solve(&BitVector::from_bools(&[true, true])).unwrap();
        assert_eq!(m.mul_vec(&x), BitVector::from_bools(&[true, true]));
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..90, 1usize..90).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
                let rows = bits.chunks(c).map(BitVector::from_bools).collect();
                BitMatrix::from_rows(c, rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.len(), m.cols());
            for v in &ns {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            prop_assert_eq!(span_rank(m.cols(), &ns), ns.len());
        }

        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solve_recovers_images(m in arb_matrix(), seed in any::<u64>()) {
            let x = BitVector::from_bools(
                &(0..m.cols()).map(|i| (seed >> (i % 64)) & 1 == 1).collect::<Vec<_>>(),
            );
            let b = m.mul_vec(&x);
            let y = m.solve(&b).expect("b is in the image");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }
}

//! Square bit matrix used for preorder relations.

use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        BitMatrix { n, words_per_row, bits: vec![0; n * words_per_row] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words_per_row + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words_per_row + j / WORD] |= 1 << (j % WORD);
    }

    /// Warshall transitive closure by or-ing whole rows.
    pub fn transitive_close(&mut self) {
        let w = self.words_per_row;
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    for t in 0..w {
                        let v = self.bits[k * w + t];
                        self.bits[i * w + t] |= v;
                    }
                }
            }
        }
    }
}

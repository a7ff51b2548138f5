//! Rank over GF(2) of bit-packed row vectors.

/// A row of bits packed into 64-bit words, bit `j` at word `j / 64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(ncols: usize) -> Self {
        BitRow {
            words: vec![0; ncols.div_ceil(64)],
        }
    }

    pub fn set(&mut self, j: usize) {
        self.words[j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, j: usize) -> bool {
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank of the span of `rows` over GF(2).
pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    // pivots[k] has its lowest set bit at pivot_cols[k], and no other pivot row has that bit.
    let mut pivots: Vec<BitRow> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for mut row in rows {
        for (p, &c) in pivots.iter().zip(&pivot_cols) {
            if row.get(c) {
                row.xor_assign(p);
            }
        }
        if let Some(c) = row.lowest_set() {
            for p in pivots.iter_mut() {
                if p.get(c) {
                    p.xor_assign(&row);
                }
            }
            pivots.push(row);
            pivot_cols.push(c);
        }
    }
    pivots.len()
}

//! Dense GF(2) matrices with bit-packed rows, and the systematic binary encoder
//! derived from a parity-check matrix by Gaussian elimination.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// `M * v^T` over GF(2); `v` holds 0/1 bytes.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        let packed = pack_bits(v);
        (0..self.rows)
            .map(|r| parity(self.row(r), &packed))
            .collect()
    }

    /// Reduces to row echelon form in place (pivot rows first, fully reduced)
    /// and returns the pivot column of each of the first `rank` rows.
    pub fn reduce(&mut self) -> Vec<usize> {
        let words = self.words;
        let mut pivots = Vec::new();
        for c in 0..self.cols {
            let rank = pivots.len();
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            if p != rank {
                for w in 0..words {
                    self.data.swap(p * words + w, rank * words + w);
                }
            }
            let start = c / 64;
            let pivot_row: Vec<u64> = self.data[rank * words + start..(rank + 1) * words].to_vec();
            for r in 0..self.rows {
                if r != rank && self.get(r, c) {
                    let dst = &mut self.data[r * words + start..(r + 1) * words];
                    for (d, s) in dst.iter_mut().zip(&pivot_row) {
                        *d ^= s;
                    }
                }
            }
            pivots.push(c);
        }
        pivots
    }
}

pub(crate) fn pack_bits(v: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; v.len().div_ceil(64)];
    for (i, &b) in v.iter().enumerate() {
        if b & 1 == 1 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

fn parity(a: &[u64], b: &[u64]) -> u8 {
    (a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones())
        .sum::<u32>()
        & 1) as u8
}

/// Systematic encoder for the null space of a binary parity-check matrix.
///
/// Information bits occupy the non-pivot columns (`info_cols`, increasing);
/// each pivot column is the parity of its reduced row over those positions.
#[derive(Debug, Clone)]
pub struct BinaryEncoder {
    n: usize,
    reduced: BitMatrix,
    pivot_cols: Vec<usize>,
    info_cols: Vec<usize>,
}

impl BinaryEncoder {
    pub fn from_parity_check(mut h: BitMatrix) -> Self {
        let pivot_cols = h.reduce();
        let mut is_pivot = vec![false; h.cols()];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let info_cols = (0..h.cols()).filter(|&c| !is_pivot[c]).collect();
        BinaryEncoder {
            n: h.cols(),
            reduced: h,
            pivot_cols,
            info_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn dimension(&self) -> usize {
        self.info_cols.len()
    }

    /// Codeword positions carrying the information bits, in order.
    pub fn info_cols(&self) -> &[usize] {
        &self.info_cols
    }

    pub fn encode(&self, info: &[u8]) -> Result<Vec<u8>> {
        if info.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: info.len(),
            });
        }
        let mut c = vec![0u8; self.n];
        for (&col, &bit) in self.info_cols.iter().zip(info) {
            if bit > 1 {
                return Err(Error::NonBinarySymbol(col));
            }
            c[col] = bit;
        }
        let packed = pack_bits(&c);
        for (r, &col) in self.pivot_cols.iter().enumerate() {
            c[col] = parity(self.reduced.row(r), &packed);
        }
        Ok(c)
    }

    pub fn extract(&self, codeword: &[u8]) -> Vec<u8> {
        self.info_cols.iter().map(|&c| codeword[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_7_4() {
        let rows = ["1010101", "0110011", "0001111"];
        let mut h = BitMatrix::zeros(3, 7);
        for (r, s) in rows.iter().enumerate() {
            for (c, ch) in s.chars().enumerate() {
                h.set(r, c, ch == '1');
            }
        }
        let enc = BinaryEncoder::from_parity_check(h.clone());
        assert_eq!(enc.rank(), 3);
        assert_eq!(enc.dimension(), 4);
        for m in 0..16u8 {
            let info: Vec<u8> = (0..4).map(|i| m >> i & 1).collect();
            let c = enc.encode(&info).unwrap();
            assert!(h.mul_vec(&c).iter().all(|&b| b == 0));
            assert_eq!(enc.extract(&c), info);
        }
        assert!(enc.encode(&[0, 1]).is_err());
    }

    #[test]
    fn dependent_rows_lower_rank() {
        let mut h = BitMatrix::zeros(3, 130);
        for c in [0, 64, 129] {
            h.set(0, c, true);
            h.set(1, c, true);
        }
        h.set(2, 100, true);
        let enc = BinaryEncoder::from_parity_check(h);
        assert_eq!(enc.rank(), 2);
        assert_eq!(enc.dimension(), 128);
    }
}

//! Small GF(2) bit-vector helpers shared by the reduction, rank oracles,
//! and coset searches.

use alloc::vec::Vec;

pub(crate) fn words_for(nbits: usize) -> usize {
    nbits.div_ceil(64)
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], bit: usize) {
    words[bit / 64] |= 1u64 << (bit % 64);
}

#[inline]
pub(crate) fn get_bit(words: &[u64], bit: usize) -> bool {
    words[bit / 64] >> (bit % 64) & 1 == 1
}

#[inline]
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Highest set bit index, or `None` for the zero vector.
pub(crate) fn top_bit(words: &[u64]) -> Option<usize> {
    for (i, &w) in words.iter().enumerate().rev() {
        if w != 0 {
            return Some(i * 64 + 63 - w.leading_zeros() as usize);
        }
    }
    None
}

pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn bits_of(words: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            out.push(i * 64 + b);
            w &= w - 1;
        }
    }
    out
}

/// Incremental GF(2) echelon basis keyed by highest set bit.
pub(crate) struct Eliminator {
    nbits: usize,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<u32>>,
}

impl Eliminator {
    pub fn new(nbits: usize) -> Eliminator {
        Eliminator { nbits, rows: Vec::new(), pivot_row: alloc::vec![None; nbits] }
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place against the basis; returns its final top bit,
    /// or `None` when `v` lies in the span.
    pub fn reduce(&self, v: &mut [u64]) -> Option<usize> {
        while let Some(p) = top_bit(v) {
            match self.pivot_row[p] {
                Some(row) => xor_into(v, &self.rows[row as usize]),
                None => return Some(p),
            }
        }
        None
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        match self.reduce(&mut v) {
            Some(p) => {
                self.pivot_row[p] = Some(self.rows.len() as u32);
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut tmp = v.to_vec();
        self.reduce(&mut tmp).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecbits(nbits: usize, bits: &[usize]) -> Vec<u64> {
        let mut v = alloc::vec![0u64; words_for(nbits)];
        for &b in bits {
            set_bit(&mut v, b);
        }
        v
    }

    #[test]
    fn eliminator_rank_and_span() {
        let mut e = Eliminator::new(130);
        assert!(e.insert(vecbits(130, &[0, 127])));
        assert!(e.insert(vecbits(130, &[127, 129])));
        assert!(!e.insert(vecbits(130, &[0, 129])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&vecbits(130, &[0, 129])));
        assert!(!e.contains(&vecbits(130, &[1])));
    }

    #[test]
    fn top_bit_and_popcount() {
        let v = vecbits(200, &[3, 64, 199]);
        assert_eq!(top_bit(&v), Some(199));
        assert_eq!(popcount(&v), 3);
        assert_eq!(bits_of(&v), alloc::vec![3, 64, 199]);
        assert_eq!(top_bit(&vecbits(200, &[])), None);
    }
}

//! Packed binary vectors and GF(2) linear algebra.
//!
//! Bit 0 of a [`BitVector`] is the leftmost written bit, so the string form
//! `"110"` has bit 0 and bit 1 set. Read as an integer, bit 0 is the most
//! significant position: `"110"` is 6. Ordering and equality follow that
//! convention, which makes "ascending integer order" the same thing as
//! lexicographic order on the bit strings.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const BLOCK_BITS: usize = 64;

/// A fixed-length vector over GF(2), bit-packed into 64-bit blocks.
///
/// Values are immutable in practice: every operation returns a fresh vector,
/// so they can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    blocks: Vec<u64>,
}

impl BitVector {
    /// The all-zero vector of the given length.
    pub fn zero(len: usize) -> Self {
        BitVector {
            len,
            blocks: vec![0; len.div_ceil(BLOCK_BITS)],
        }
    }

    /// Parse an ASCII '0'/'1' string, leftmost character = bit 0.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut v = BitVector::zero(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse(format!(
                        "bit string may contain only '0'/'1', found {c:?}"
                    )))
                }
            }
        }
        Ok(v)
    }

    /// Build a vector of length `len` from its integer value (bit 0 = most
    /// significant). Requires `len <= 64` and `value < 2^len`.
    pub fn from_integer(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_integer supports lengths up to 64");
        assert!(
            len == 64 || value < (1u64 << len),
            "value {value} does not fit in {len} bits"
        );
        let mut v = BitVector::zero(len);
        for i in 0..len {
            if (value >> (len - 1 - i)) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// The integer value of the vector (bit 0 = most significant).
    /// Requires `len <= 64`.
    pub fn to_integer(&self) -> u64 {
        assert!(self.len <= 64, "to_integer supports lengths up to 64");
        if self.len == 0 {
            return 0;
        }
        self.blocks[0].reverse_bits() >> (64 - self.len)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.blocks[i / BLOCK_BITS] >> (i % BLOCK_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % BLOCK_BITS);
        if value {
            self.blocks[i / BLOCK_BITS] |= mask;
        } else {
            self.blocks[i / BLOCK_BITS] &= !mask;
        }
    }

    /// Hamming weight: the number of set bits.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Bitwise XOR. Panics if the lengths differ; use [`hamming_distance`]
    /// for the checked entry point.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "xor requires equal lengths");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a ^ b)
            .collect();
        BitVector {
            len: self.len,
            blocks,
        }
    }

    /// GF(2) inner product: parity of the AND of the two vectors.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot requires equal lengths");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(k, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let i = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(k * BLOCK_BITS + i)
                }
            })
        })
    }

    /// Index of the first set bit, if any.
    pub fn leading_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bitstring())
    }
}

impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic on the bit string. Within a block, lower bit index
        // means more significant, so compare at the lowest differing bit.
        let common = self.blocks.len().min(other.blocks.len());
        for k in 0..common {
            let diff = self.blocks[k] ^ other.blocks[k];
            if diff != 0 {
                let i = diff.trailing_zeros();
                return if (self.blocks[k] >> i) & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        // Equal on the compared blocks (trailing bits are zero by invariant),
        // so this is string comparison with an equal prefix: shorter first.
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of positions where two equal-length vectors differ.
pub fn hamming_distance(a: &BitVector, b: &BitVector) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "hamming_distance: lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.xor(b).weight())
}

/// A dense matrix over GF(2), stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    row_data: Vec<BitVector>,
}

impl Gf2Matrix {
    pub fn from_rows(row_data: Vec<BitVector>, cols: usize) -> Result<Self> {
        for r in &row_data {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "matrix row has length {}, expected {cols}",
                    r.len()
                )));
            }
        }
        Ok(Gf2Matrix {
            rows: row_data.len(),
            cols,
            row_data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.row_data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.row_data
    }

    /// Matrix-vector product `M v` (each entry is a row dot product).
    pub fn mul_vector(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "mul_vector: vector length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = BitVector::zero(self.rows);
        for (i, row) in self.row_data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        reduce_to_pivots(&self.row_data).len()
    }
}

/// Reduced pivot rows of a vector list: one row per pivot column, each fully
/// reduced against the others. The span is unchanged.
fn reduce_to_pivots(vectors: &[BitVector]) -> Vec<BitVector> {
    let mut pivots: Vec<BitVector> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for p in &pivots {
            let lead = p.leading_one().unwrap();
            if v.get(lead) {
                v = v.xor(p);
            }
        }
        if let Some(lead) = v.leading_one() {
            // Back-substitute into existing pivots to keep rows reduced.
            for p in pivots.iter_mut() {
                if p.get(lead) {
                    *p = p.xor(&v);
                }
            }
            pivots.push(v);
            pivots.sort_by_key(|p| p.leading_one().unwrap());
        }
    }
    pivots
}

/// Rank of a list of equal-length vectors.
pub fn rank(vectors: &[BitVector]) -> usize {
    reduce_to_pivots(vectors).len()
}

/// All `2^k` XOR combinations of a maximal linearly independent subset of
/// `basis`, where `k` is the rank. The result is deduplicated by
/// construction, contains the zero vector, and is sorted ascending.
///
/// The rank is capped at 26 so the output stays at desk scale.
pub fn span_enumerate(basis: &[BitVector], ambient_length: usize) -> Result<Vec<BitVector>> {
    for v in basis {
        if v.len() != ambient_length {
            return Err(Error::DimensionMismatch(format!(
                "span_enumerate: vector length {} in ambient length {ambient_length}",
                v.len()
            )));
        }
    }
    let pivots = reduce_to_pivots(basis);
    if pivots.len() > 26 {
        return Err(Error::Capacity(format!(
            "span_enumerate: rank {} exceeds the cap of 26",
            pivots.len()
        )));
    }
    let mut span = vec![BitVector::zero(ambient_length)];
    for p in &pivots {
        let mut extended = Vec::with_capacity(span.len() * 2);
        for v in &span {
            extended.push(v.xor(p));
        }
        span.extend(extended);
    }
    span.sort();
    Ok(span)
}

/// A basis of the orthogonal complement `{y : y . b = 0 for all b in basis}`.
///
/// The result has `ambient_length - rank(basis)` vectors, one per free
/// column of the reduced system, ordered by free column.
pub fn dual_code(basis: &[BitVector], ambient_length: usize) -> Result<Vec<BitVector>> {
    for v in basis {
        if v.len() != ambient_length {
            return Err(Error::DimensionMismatch(format!(
                "dual_code: vector length {} in ambient length {ambient_length}",
                v.len()
            )));
        }
    }
    let pivots = reduce_to_pivots(basis);
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.leading_one().unwrap()).collect();
    let is_pivot = |c: usize| pivot_cols.binary_search(&c).is_ok();

    let mut result = Vec::with_capacity(ambient_length - pivots.len());
    for free in 0..ambient_length {
        if is_pivot(free) {
            continue;
        }
        // y has a 1 at the free column; each pivot row with a 1 in that
        // column forces a 1 at its pivot column.
        let mut y = BitVector::zero(ambient_length);
        y.set(free, true);
        for (row, &col) in pivots.iter().zip(&pivot_cols) {
            if row.get(free) {
                y.set(col, true);
            }
        }
        result.push(y);
    }
    Ok(result)
}

/// Express `target` as a XOR of vectors from `pool`, returning their indices
/// (ascending). `None` if `target` is outside the span. Pools are capped at
/// 128 vectors.
pub fn express_in_span(target: &BitVector, pool: &[BitVector]) -> Result<Option<Vec<usize>>> {
    if pool.len() > 128 {
        return Err(Error::Capacity(format!(
            "express_in_span: pool of {} vectors exceeds the cap of 128",
            pool.len()
        )));
    }
    for v in pool {
        if v.len() != target.len() {
            return Err(Error::DimensionMismatch(
                "express_in_span: pool vector length differs from target".into(),
            ));
        }
    }
    // Eliminator rows carry the combination of pool indices that produced them.
    let mut rows: Vec<(BitVector, u128)> = Vec::new();
    for (i, v) in pool.iter().enumerate() {
        let mut v = v.clone();
        let mut combo = 1u128 << i;
        for (p, c) in &rows {
            let lead = p.leading_one().unwrap();
            if v.get(lead) {
                v = v.xor(p);
                combo ^= c;
            }
        }
        if v.leading_one().is_some() {
            rows.push((v, combo));
            rows.sort_by_key(|(p, _)| p.leading_one().unwrap());
        }
    }
    let mut t = target.clone();
    let mut combo = 0u128;
    for (p, c) in &rows {
        let lead = p.leading_one().unwrap();
        if t.get(lead) {
            t = t.xor(p);
            combo ^= c;
        }
    }
    if t.leading_one().is_some() {
        return Ok(None);
    }
    Ok(Some((0..pool.len()).filter(|i| (combo >> i) & 1 == 1).collect()))
}

//! The [2^n-1, 2^n-1-n, 3] Hamming code: canonical parity-check matrix,
//! codeword enumeration, sphere structure, the even/odd weight partition,
//! the weight-4 generator set, and the identification of the dual of the
//! even-weight subcode with the punctured first-order Reed-Muller code.
//!
//! Column j of the parity-check matrix (1-based) is the n-bit binary
//! expansion of the integer j, so a syndrome read as an integer directly
//! names the flipped coordinate.

use crate::error::{Error, Result};
use crate::gf2::{dual_code, hamming_distance, rank, span_enumerate, BitVector, Gf2Matrix};

/// Full codeword enumeration (and everything built on it) is capped here.
pub const MAX_ENUMERATION_N: u32 = 4;

/// Parity-check construction and weight-4 generator enumeration are capped here.
pub const MAX_N: u32 = 6;

/// A binary Hamming code with parameters `[2^n-1, 2^n-1-n, 3]`.
#[derive(Clone, Debug)]
pub struct HammingCode {
    n: u32,
    length: usize,
    dimension: usize,
    parity_check: Gf2Matrix,
    column_order: Vec<BitVector>,
}

impl HammingCode {
    /// Build the code for a given `n`, `2 <= n <= 6`.
    pub fn build(n: u32) -> Result<Self> {
        if !(2..=MAX_N).contains(&n) {
            return Err(Error::Capacity(format!(
                "hamming code order n={n} outside supported range 2..={MAX_N}"
            )));
        }
        let length = (1usize << n) - 1;
        let dimension = length - n as usize;
        let column_order: Vec<BitVector> = (1..=length as u64)
            .map(|j| BitVector::from_integer(j, n as usize))
            .collect();
        let mut rows = Vec::with_capacity(n as usize);
        for r in 0..n as usize {
            let mut row = BitVector::zero(length);
            for (c, col) in column_order.iter().enumerate() {
                if col.get(r) {
                    row.set(c, true);
                }
            }
            rows.push(row);
        }
        let parity_check = Gf2Matrix::from_rows(rows, length)?;
        Ok(HammingCode {
            n,
            length,
            dimension,
            parity_check,
            column_order,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Code length `2^n - 1`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Code dimension `2^n - 1 - n`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn parity_check(&self) -> &Gf2Matrix {
        &self.parity_check
    }

    /// The nonzero vectors of `F_2^n` in ascending integer order; entry
    /// `j - 1` is column `j` of the parity-check matrix.
    pub fn column_order(&self) -> &[BitVector] {
        &self.column_order
    }

    /// Syndrome `H v^T` as an n-bit vector.
    pub fn syndrome(&self, v: &BitVector) -> Result<BitVector> {
        self.parity_check.mul_vector(v)
    }

    /// Syndrome read as an integer: the XOR of the (1-based) positions of
    /// the set bits of `v`. Zero exactly on codewords.
    pub fn syndrome_index(&self, v: &BitVector) -> Result<u64> {
        if v.len() != self.length {
            return Err(Error::DimensionMismatch(format!(
                "syndrome: vector length {} against code length {}",
                v.len(),
                self.length
            )));
        }
        Ok(v.iter_ones().fold(0u64, |acc, i| acc ^ (i as u64 + 1)))
    }

    /// The Hamming-code-membership function: 1 iff `v` is a codeword.
    pub fn hcmf(&self, v: &BitVector) -> Result<bool> {
        Ok(self.syndrome_index(v)? == 0)
    }

    /// Decode to the unique codeword at distance <= 1, plus the flipped
    /// position (1-based) when `v` is not itself a codeword. Never fails on
    /// well-formed input: the code is perfect.
    pub fn syndrome_decode(&self, v: &BitVector) -> Result<(BitVector, Option<usize>)> {
        let s = self.syndrome_index(v)?;
        if s == 0 {
            return Ok((v.clone(), None));
        }
        let position = s as usize; // 1-based; column s is the flipped coordinate
        let mut c = v.clone();
        c.set(position - 1, !c.get(position - 1));
        Ok((c, Some(position)))
    }

    /// All `2^(2^n-1-n)` codewords in ascending integer order. Capped at
    /// `n <= 4` (the ambient space has `2^(2^n-1)` vectors).
    pub fn enumerate_codewords(&self) -> Result<Vec<BitVector>> {
        if self.n > MAX_ENUMERATION_N {
            return Err(Error::Capacity(format!(
                "codeword enumeration capped at n={MAX_ENUMERATION_N}, got n={}",
                self.n
            )));
        }
        let mut out = Vec::with_capacity(1usize << self.dimension);
        for x in 0..(1u64 << self.length) {
            // XOR of 1-based set positions, computed on the raw integer:
            // bit i of the vector (0-based, msb-first) is bit length-1-i of x.
            let mut s = 0u64;
            let mut bits = x;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                s ^= self.length as u64 - b;
                bits &= bits - 1;
            }
            if s == 0 {
                out.push(BitVector::from_integer(x, self.length));
            }
        }
        Ok(out)
    }

    /// The weight-4 codewords, ascending. These generate the distance-4
    /// graph on the even-weight class. Works up to `n = 6` by scanning all
    /// weight-4 position subsets for zero syndrome.
    pub fn weight4_generators(&self) -> Result<Vec<BitVector>> {
        let l = self.length as u64;
        if l < 4 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        // 1-based positions a < b < c < d; syndrome is a^b^c^d.
        for a in 1..=l {
            for b in (a + 1)..=l {
                for c in (b + 1)..=l {
                    for d in (c + 1)..=l {
                        if a ^ b ^ c ^ d == 0 {
                            let mut v = BitVector::zero(self.length);
                            for p in [a, b, c, d] {
                                v.set(p as usize - 1, true);
                            }
                            out.push(v);
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Partition the full vector space into Hamming spheres. Capped at `n <= 4`.
    pub fn sphere_partition(&self) -> Result<SpherePartition> {
        let codewords = self.enumerate_codewords()?;
        let mut center_index = vec![u32::MAX; 1usize << self.length];
        for (i, c) in codewords.iter().enumerate() {
            center_index[c.to_integer() as usize] = i as u32;
        }
        let mut sphere_of = Vec::with_capacity(1usize << self.length);
        for x in 0..(1u64 << self.length) {
            let v = BitVector::from_integer(x, self.length);
            let (c, flipped) = self.syndrome_decode(&v)?;
            let idx = center_index[c.to_integer() as usize];
            debug_assert_ne!(idx, u32::MAX);
            sphere_of.push((idx, flipped.map(|p| p as u16)));
        }
        Ok(SpherePartition {
            centers: codewords,
            sphere_of,
        })
    }
}

/// The sphere structure of a perfect code: every vector belongs to exactly
/// one sphere, either as the center or at distance 1 from it.
#[derive(Clone, Debug)]
pub struct SpherePartition {
    centers: Vec<BitVector>,
    /// Indexed by the integer value of the vector: (center index, flipped
    /// 1-based position, `None` for the center itself).
    sphere_of: Vec<(u32, Option<u16>)>,
}

impl SpherePartition {
    pub fn centers(&self) -> &[BitVector] {
        &self.centers
    }

    pub fn lookup(&self, v: &BitVector) -> (usize, Option<usize>) {
        let (i, p) = self.sphere_of[v.to_integer() as usize];
        (i as usize, p.map(|p| p as usize))
    }

    pub fn lookup_index(&self, value: u64) -> (usize, Option<usize>) {
        let (i, p) = self.sphere_of[value as usize];
        (i as usize, p.map(|p| p as usize))
    }

    pub fn domain_size(&self) -> usize {
        self.sphere_of.len()
    }
}

/// Split a codeword list into (even-weight, odd-weight) classes, preserving
/// order within each class.
pub fn weight_partition(codewords: &[BitVector]) -> (Vec<BitVector>, Vec<BitVector>) {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for c in codewords {
        if c.weight() % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    (even, odd)
}

/// Punctured truth tables of all `2^(n+1)` affine functions `a.x + c`: the
/// coordinate at `x = 0` is removed and the remaining coordinates follow
/// ascending integer order of `x`. This is the punctured first-order
/// Reed-Muller code of length `2^n - 1`.
pub fn punctured_affine_tables(n: u32) -> Vec<BitVector> {
    let length = (1usize << n) - 1;
    let mut out = Vec::with_capacity(2 << n);
    for a_int in 0..(1u64 << n) {
        let a = BitVector::from_integer(a_int, n as usize);
        for c in [false, true] {
            let mut v = BitVector::zero(length);
            for (i, x) in (1..=length as u64).enumerate() {
                let point = BitVector::from_integer(x, n as usize);
                if a.dot(&point) ^ c {
                    v.set(i, true);
                }
            }
            out.push(v);
        }
    }
    out
}

/// Check that the dual of the even-weight subcode equals, as a set, the
/// punctured truth tables of all affine functions on `F_2^n`.
pub fn rm_star_dual_check(n: u32) -> Result<bool> {
    let code = HammingCode::build(n)?;
    let codewords = code.enumerate_codewords()?;
    let (even, _) = weight_partition(&codewords);
    let length = code.length();

    let even_rank = rank(&even);
    let dual_basis = dual_code(&even, length)?;
    debug_assert_eq!(dual_basis.len(), length - even_rank);
    let mut dual = span_enumerate(&dual_basis, length)?;

    let mut rm_star = punctured_affine_tables(n);
    rm_star.sort();
    rm_star.dedup();
    dual.sort();
    Ok(dual == rm_star)
}

/// Serializable description of a code, as written by `code export`.
#[derive(Debug, serde::Serialize, serde::Deserialize)]
pub struct CodeExport {
    pub n: u32,
    pub length: usize,
    pub dimension: usize,
    pub parity_check_rows: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<String>>,
}

impl CodeExport {
    pub fn from_code(code: &HammingCode) -> Result<Self> {
        let codewords = if code.n() <= MAX_ENUMERATION_N {
            Some(
                code.enumerate_codewords()?
                    .iter()
                    .map(|c| c.to_bitstring())
                    .collect(),
            )
        } else {
            None
        };
        Ok(CodeExport {
            n: code.n(),
            length: code.length(),
            dimension: code.dimension(),
            parity_check_rows: code
                .parity_check()
                .row_vectors()
                .iter()
                .map(|r| r.to_bitstring())
                .collect(),
            codewords,
        })
    }
}

/// Minimum distance of a codeword list by exhaustive pairwise scan.
pub fn min_pairwise_distance(codewords: &[BitVector]) -> Result<usize> {
    let mut min = usize::MAX;
    for (i, a) in codewords.iter().enumerate() {
        for b in &codewords[i + 1..] {
            min = min.min(hamming_distance(a, b)?);
        }
    }
    Ok(min)
}

//! Boolean functions on `F_2^n`: truth tables, the Walsh transform, bent
//! functions, and the degree-4 Krawtchouk polynomial.
//!
//! A point `x` of `F_2^n` is identified with an integer whose most
//! significant bit is the first variable `x1`. Truth tables list `f(x)` in
//! ascending integer order of `x`, matching the parity-check column order of
//! the `hamming` module so that punctured tables and dot products line up.

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Maximum input arity. Keeps every table and spectrum at desk scale.
pub const MAX_BOOLFN_N: u32 = 16;

/// A function `F_2^n -> {0,1}` stored as its `2^n`-entry truth table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n: u32,
    table: BitVector,
}

impl BooleanFunction {
    pub fn new(n: u32, table: BitVector) -> Result<Self> {
        if n > MAX_BOOLFN_N {
            return Err(Error::Capacity(format!(
                "boolean function arity n={n} exceeds cap {MAX_BOOLFN_N}"
            )));
        }
        if table.len() != 1usize << n {
            return Err(Error::DimensionMismatch(format!(
                "truth table has {} entries, expected 2^{n}",
                table.len()
            )));
        }
        Ok(BooleanFunction { n, table })
    }

    /// Build from a predicate on the integer encoding of the points.
    pub fn from_fn(n: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut table = BitVector::zero(1usize << n);
        for x in 0..(1u64 << n) {
            if f(x) {
                table.set(x as usize, true);
            }
        }
        BooleanFunction::new(n, table)
    }

    pub fn zero(n: u32) -> Result<Self> {
        BooleanFunction::new(n, BitVector::zero(1usize << n))
    }

    /// The affine function `a.x + c`.
    pub fn affine(n: u32, a: &BitVector, c: bool) -> Result<Self> {
        if a.len() != n as usize {
            return Err(Error::DimensionMismatch(format!(
                "affine coefficient vector has length {}, expected {n}",
                a.len()
            )));
        }
        let a = a.clone();
        BooleanFunction::from_fn(n, move |x| {
            a.dot(&BitVector::from_integer(x, a.len())) ^ c
        })
    }

    /// The inner-product (Maiorana-McFarland) bent function
    /// `x1 x_{m+1} + x2 x_{m+2} + ... + x_m x_{2m}` with `m = n/2`.
    /// Requires even `n <= 8`. Vanishes at 0, and is bent.
    pub fn mm_bent(n: u32) -> Result<Self> {
        if n % 2 != 0 {
            return Err(Error::Domain(format!(
                "inner-product bent function requires even n, got {n}"
            )));
        }
        if !(2..=8).contains(&n) {
            return Err(Error::Capacity(format!(
                "inner-product bent function supported for 2 <= n <= 8, got {n}"
            )));
        }
        let m = n / 2;
        let mask = (1u64 << m) - 1;
        BooleanFunction::from_fn(n, move |x| ((x >> m) & x & mask).count_ones() % 2 == 1)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &BitVector {
        &self.table
    }

    pub fn value(&self, x: u64) -> bool {
        self.table.get(x as usize)
    }

    /// The truth table with the `f(0)` coordinate removed, giving a vector of
    /// length `2^n - 1` indexed by the nonzero points in ascending order.
    /// Requires `f(0) = 0`.
    pub fn punctured_truth_table(&self) -> Result<BitVector> {
        if self.value(0) {
            return Err(Error::Domain(
                "punctured truth table requires f(0) = 0".into(),
            ));
        }
        let len = self.table.len() - 1;
        let mut out = BitVector::zero(len);
        for i in 0..len {
            if self.table.get(i + 1) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Rebuild a function from its punctured table, fixing `f(0) = 0`.
    pub fn from_punctured(u: &BitVector) -> Result<Self> {
        let full = u.len() + 1;
        if !full.is_power_of_two() {
            return Err(Error::DimensionMismatch(format!(
                "punctured table length {} is not 2^n - 1",
                u.len()
            )));
        }
        let n = full.trailing_zeros();
        let mut table = BitVector::zero(full);
        for i in 0..u.len() {
            if u.get(i) {
                table.set(i + 1, true);
            }
        }
        BooleanFunction::new(n, table)
    }

    /// The Walsh transform, computed exactly in integer arithmetic by the
    /// in-place butterfly over `(-1)^f`.
    pub fn walsh_transform(&self) -> WalshSpectrum {
        let size = self.table.len();
        let mut data: Vec<i64> = (0..size)
            .map(|x| if self.table.get(x) { -1 } else { 1 })
            .collect();
        let mut h = 1;
        while h < size {
            let mut i = 0;
            while i < size {
                for j in i..i + h {
                    let (x, y) = (data[j], data[j + h]);
                    data[j] = x + y;
                    data[j + h] = x - y;
                }
                i += 2 * h;
            }
            h *= 2;
        }
        WalshSpectrum {
            n: self.n,
            coefficients: data,
        }
    }

    /// Bentness test: all `|W(a)| = 2^(n/2)`. Undefined for odd `n`.
    pub fn is_bent(&self) -> Result<bool> {
        if self.n % 2 != 0 {
            return Err(Error::Domain(format!(
                "bentness is undefined for odd n = {}",
                self.n
            )));
        }
        let v = 1i64 << (self.n / 2);
        Ok(self
            .walsh_transform()
            .coefficients()
            .iter()
            .all(|&w| w.abs() == v))
    }

    /// Text form: a line `n=<n>` followed by a line of `2^n` table bits.
    pub fn to_file_string(&self) -> String {
        format!("n={}\n{}\n", self.n, self.table.to_bitstring())
    }

    pub fn from_file_string(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty boolean function file".into()))?;
        let n: u32 = header
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected 'n=<n>' header, got {header:?}")))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad arity in header: {e}")))?;
        let table_line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing truth table line".into()))?;
        let table = BitVector::from_bitstring(table_line.trim())?;
        BooleanFunction::new(n, table)
    }
}

/// Walsh coefficients `W(a)` for all `a`, indexed by the integer encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    coefficients: Vec<i64>,
}

impl WalshSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coefficient(&self, a: u64) -> i64 {
        self.coefficients[a as usize]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn sum(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.coefficients.iter().map(|w| w * w).sum()
    }
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The Krawtchouk polynomial `K_4(w; N)` by its definitional sum
/// `sum_j (-1)^j C(w,j) C(N-w,4-j)`.
pub fn krawtchouk4(w: i64, n_len: i64) -> Result<i64> {
    if !(0..=n_len).contains(&w) {
        return Err(Error::Domain(format!(
            "krawtchouk4: w={w} outside 0..={n_len}"
        )));
    }
    let mut acc = 0i64;
    for j in 0..=4 {
        let term = choose(w, j) * choose(n_len - w, 4 - j);
        acc += if j % 2 == 0 { term } else { -term };
    }
    Ok(acc)
}

/// `K_4(w; N)` via the closed form `(X^4 + (8-6N)X^2 + 3N^2 - 6N)/24` with
/// `X = N - 2w`. The division must be exact; a remainder indicates a
/// transcription bug and is reported as an inconsistency.
pub fn krawtchouk4_closed(w: i64, n_len: i64) -> Result<i64> {
    if !(0..=n_len).contains(&w) {
        return Err(Error::Domain(format!(
            "krawtchouk4_closed: w={w} outside 0..={n_len}"
        )));
    }
    let x = n_len - 2 * w;
    let numerator = x.pow(4) + (8 - 6 * n_len) * x.pow(2) + 3 * n_len * n_len - 6 * n_len;
    if numerator % 24 != 0 {
        return Err(Error::Inconsistency(format!(
            "krawtchouk4_closed: numerator {numerator} not divisible by 24 (w={w}, N={n_len})"
        )));
    }
    Ok(numerator / 24)
}

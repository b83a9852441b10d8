//! Spectrum of the distance-4 Cayley graph on the even-weight codeword
//! class: character eigenvectors, the direct eigenvalue sum over the
//! weight-4 generators, the Walsh-moment eigenvalue formula, the fourth-
//! moment objective, its even-arity lower bound, and the closed form for the
//! minimum eigenvalue.
//!
//! Everything here is exact integer arithmetic. Each eigenvalue index `u` is
//! a vector of length `2^n - 1`, read as the punctured truth table of a
//! function vanishing at zero.

use std::io::Write;

use rayon::prelude::*;

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::hamming::{HammingCode, MAX_ENUMERATION_N};

/// A character of the codeword group restricted to an ordered vertex list:
/// entry i is `(-1)^(u . v_i)`.
#[derive(Clone, Debug)]
pub struct CharacterVector {
    u: BitVector,
    entries: Vec<i8>,
}

impl CharacterVector {
    pub fn u(&self) -> &BitVector {
        &self.u
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn dot(&self, other: &CharacterVector) -> i64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum()
    }
}

/// Build the character vector of `u` over an ordered vertex list.
pub fn character_vector(u: &BitVector, vertex_order: &[BitVector]) -> Result<CharacterVector> {
    for v in vertex_order {
        if v.len() != u.len() {
            return Err(Error::DimensionMismatch(
                "character vector: u and vertices must share one length".into(),
            ));
        }
    }
    let entries = vertex_order
        .iter()
        .map(|v| if u.dot(v) { -1 } else { 1 })
        .collect();
    Ok(CharacterVector {
        u: u.clone(),
        entries,
    })
}

/// The eigenvalue of the character `u`: the signed sum of the character over
/// the generator set.
pub fn eigenvalue_direct(u: &BitVector, generators: &[BitVector]) -> Result<i64> {
    let mut acc = 0i64;
    for s in generators {
        if s.len() != u.len() {
            return Err(Error::DimensionMismatch(
                "eigenvalue: u and generators must share one length".into(),
            ));
        }
        acc += if u.dot(s) { -1 } else { 1 };
    }
    Ok(acc)
}

/// The fourth-moment objective `L = sum_a (W(a)^4 - 4 W(a)^3)`.
/// Requires `f(0) = 0`.
pub fn objective_l(f: &BooleanFunction) -> Result<i64> {
    if f.value(0) {
        return Err(Error::Domain("objective requires f(0) = 0".into()));
    }
    let spectrum = f.walsh_transform();
    Ok(spectrum
        .coefficients()
        .iter()
        .map(|&w| w.pow(4) - 4 * w.pow(3))
        .sum())
}

/// The eigenvalue from Walsh coefficients alone:
/// `24 lambda = L / 2^n - 3 * 2^(2n) + 14 * 2^n - 8`.
/// Both divisions must be exact.
pub fn eigenvalue_walsh(f: &BooleanFunction) -> Result<i64> {
    let l = objective_l(f)?;
    let q = 1i64 << f.n();
    if l % q != 0 {
        return Err(Error::Inconsistency(format!(
            "eigenvalue formula: objective {l} not divisible by 2^n = {q}"
        )));
    }
    let numerator = l / q - 3 * q * q + 14 * q - 8;
    if numerator % 24 != 0 {
        return Err(Error::Inconsistency(format!(
            "eigenvalue formula: {numerator} not divisible by 24"
        )));
    }
    Ok(numerator / 24)
}

/// The minimum of the fourth-moment objective over functions vanishing at
/// zero, for even arity: `2^(3n) - 4 * 2^(2n)`.
pub fn lower_bound_l(n: u32) -> Result<i64> {
    if n % 2 != 0 {
        return Err(Error::Domain(format!(
            "objective lower bound requires even n, got {n}"
        )));
    }
    Ok((1i64 << (3 * n)) - 4 * (1i64 << (2 * n)))
}

/// The minimum eigenvalue for even arity: `-(2^n - 1)(2^n - 4)/12`.
pub fn lambda_min_even(n: u32) -> Result<i64> {
    if n % 2 != 0 {
        return Err(Error::Domain(format!(
            "closed-form minimum eigenvalue requires even n, got {n}"
        )));
    }
    let q = 1i64 << n;
    let numerator = (q - 1) * (q - 4);
    if numerator % 12 != 0 {
        return Err(Error::Inconsistency(format!(
            "(2^n-1)(2^n-4) = {numerator} not divisible by 12 at n={n}"
        )));
    }
    Ok(-numerator / 12)
}

/// How the spectrum sweep computes each eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMethod {
    /// Walsh-moment formula only.
    Walsh,
    /// Character sum over the weight-4 generators only.
    Direct,
    /// Both, with an exact cross-check per index.
    Both,
}

/// The full eigenvalue table of the distance-4 graph for one code order.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    n: u32,
    /// (u as integer, eigenvalue), ascending in u. Covers every index, or
    /// one representative per dual coset when deduplication was requested.
    entries: Vec<(u64, i64)>,
    lambda_min: i64,
    argmin_us: Vec<u64>,
    deduped: bool,
}

impl SpectrumReport {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[(u64, i64)] {
        &self.entries
    }

    pub fn lambda_min(&self) -> i64 {
        self.lambda_min
    }

    /// Indices attaining the minimum, ascending.
    pub fn argmin_us(&self) -> &[u64] {
        &self.argmin_us
    }

    pub fn deduped(&self) -> bool {
        self.deduped
    }

    pub fn lambda_of(&self, u: u64) -> Option<i64> {
        self.entries
            .binary_search_by_key(&u, |&(x, _)| x)
            .ok()
            .map(|i| self.entries[i].1)
    }

    /// CSV form: a `u_hex,lambda` header, one row per entry, then
    /// `lambda_min` and `argmin_count` footer rows.
    pub fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        let length = (1usize << self.n) - 1;
        let hex_digits = length.div_ceil(4);
        writeln!(out, "u_hex,lambda")?;
        for &(u, lambda) in &self.entries {
            writeln!(out, "{u:0hex_digits$x},{lambda}")?;
        }
        writeln!(out, "lambda_min,{}", self.lambda_min)?;
        writeln!(out, "argmin_count,{}", self.argmin_us.len())?;
        Ok(())
    }
}

/// Sweep every eigenvalue index `u` of length `2^n - 1`. Capped at `n <= 4`
/// (the sweep has `2^(2^n - 1)` candidates).
///
/// With `dedup_cosets`, only the smallest index of each coset of the dual of
/// the even-weight subcode is kept; those cosets are exactly the fibers of
/// `u -> e_u`.
pub fn full_spectrum(n: u32, method: SpectrumMethod, dedup_cosets: bool) -> Result<SpectrumReport> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity(format!(
            "full spectrum sweep capped at n={MAX_ENUMERATION_N}, got n={n}"
        )));
    }
    let code = HammingCode::build(n)?;
    let length = code.length();
    let generators: Option<Vec<u64>> = match method {
        SpectrumMethod::Walsh => None,
        _ => Some(
            code.weight4_generators()?
                .iter()
                .map(|g| g.to_integer())
                .collect(),
        ),
    };

    let dual: Option<Vec<u64>> = if dedup_cosets {
        let (even, _) = crate::hamming::weight_partition(&code.enumerate_codewords()?);
        let basis = crate::gf2::dual_code(&even, length)?;
        Some(
            crate::gf2::span_enumerate(&basis, length)?
                .iter()
                .map(|v| v.to_integer())
                .collect(),
        )
    } else {
        None
    };

    let total = 1u64 << length;
    let entries: Vec<(u64, i64)> = (0..total)
        .into_par_iter()
        .filter_map(|u_int| {
            if let Some(dual) = &dual {
                // keep only the smallest member of each dual coset
                if dual.iter().any(|&d| (u_int ^ d) < u_int) {
                    return None;
                }
            }
            let u = BitVector::from_integer(u_int, length);
            let lambda = match (&generators, method) {
                (Some(gens), SpectrumMethod::Direct) => direct_by_integers(u_int, gens),
                (Some(gens), SpectrumMethod::Both) => {
                    let direct = direct_by_integers(u_int, gens);
                    match walsh_eigenvalue_of_index(&u) {
                        Ok(walsh) if walsh == direct => direct,
                        Ok(walsh) => {
                            return Some(Err(Error::Inconsistency(format!(
                                "eigenvalue mismatch at u={u_int}: direct {direct}, walsh {walsh}"
                            ))))
                        }
                        Err(e) => return Some(Err(e)),
                    }
                }
                _ => match walsh_eigenvalue_of_index(&u) {
                    Ok(l) => l,
                    Err(e) => return Some(Err(e)),
                },
            };
            Some(Ok((u_int, lambda)))
        })
        .collect::<Result<Vec<_>>>()?;

    let lambda_min = entries
        .iter()
        .map(|&(_, l)| l)
        .min()
        .expect("sweep is never empty");
    let argmin_us = entries
        .iter()
        .filter(|&&(_, l)| l == lambda_min)
        .map(|&(u, _)| u)
        .collect();
    Ok(SpectrumReport {
        n,
        entries,
        lambda_min,
        argmin_us,
        deduped: dedup_cosets,
    })
}

fn direct_by_integers(u: u64, generators: &[u64]) -> i64 {
    generators
        .iter()
        .map(|&s| if (u & s).count_ones() % 2 == 1 { -1 } else { 1 })
        .sum()
}

fn walsh_eigenvalue_of_index(u: &BitVector) -> Result<i64> {
    eigenvalue_walsh(&BooleanFunction::from_punctured(u)?)
}

//! The single-error-correcting function-correcting encoder for Hamming-code
//! membership: every data word of length `2^n - 1` receives a 2-bit parity,
//! and the encoder is `Enc(u) = (u, parity(u))`.
//!
//! Construction recipe: the even-weight codeword class gets one
//! complementary parity pair, the odd class gets the other; within each
//! class the choice between a parity and its complement follows the sign
//! pattern of a minimum-eigenvalue character vector of the class's
//! distance-4 graph (transported to the odd class by XOR translation); every
//! non-codeword takes the complement of its sphere center's parity.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graphs::{build_isomorphism, canonical_w_prime, DistanceGraph};
use crate::hamming::{weight_partition, HammingCode, MAX_ENUMERATION_N};
use crate::spectral::{character_vector, objective_l};

/// A 2-bit parity word, most significant bit first: `"01"` is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parity(u8);

impl Parity {
    pub fn new(bits: u8) -> Result<Self> {
        if bits > 0b11 {
            return Err(Error::Domain(format!("parity value {bits} exceeds 2 bits")));
        }
        Ok(Parity(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn complement(self) -> Self {
        Parity(self.0 ^ 0b11)
    }

    pub fn distance(self, other: Self) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub fn as_str(self) -> &'static str {
        ["00", "01", "10", "11"][self.0 as usize]
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "00" => Ok(Parity(0)),
            "01" => Ok(Parity(1)),
            "10" => Ok(Parity(2)),
            "11" => Ok(Parity(3)),
            _ => Err(Error::Parse(format!("bad parity string {s:?}"))),
        }
    }
}

/// One of the two complementary parity pair sets: `{00, 11}` or `{01, 10}`.
/// Any parity from one set is at distance 1 from any parity of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSet {
    /// `{00, 11}`
    Even,
    /// `{01, 10}`
    Odd,
}

impl PairSet {
    pub fn contains(self, p: Parity) -> bool {
        let bits_equal = p.0 == 0 || p.0 == 3;
        match self {
            PairSet::Even => bits_equal,
            PairSet::Odd => !bits_equal,
        }
    }

    /// The parity a `+1` cut-vector entry maps to: `00` for `{00,11}`,
    /// `01` for `{01,10}`.
    pub fn representative(self) -> Parity {
        match self {
            PairSet::Even => Parity(0b00),
            PairSet::Odd => Parity(0b01),
        }
    }

    pub fn other(self) -> PairSet {
        match self {
            PairSet::Even => PairSet::Odd,
            PairSet::Odd => PairSet::Even,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PairSet::Even => "P_e",
            PairSet::Odd => "P_o",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "P_e" => Ok(PairSet::Even),
            "P_o" => Ok(PairSet::Odd),
            _ => Err(Error::Parse(format!("bad pair set label {s:?}"))),
        }
    }
}

/// The reproducibility record attached to a constructed table: which cut
/// function was used, the translation vector, and how signs map to parities.
#[derive(Clone, Debug)]
pub struct Conventions {
    pub w_prime: BitVector,
    pub f_u: BooleanFunction,
    pub even_class_pair_set: PairSet,
    pub odd_class_pair_set: PairSet,
}

/// Parities of the codewords only, with the conventions that produced them.
#[derive(Clone, Debug)]
pub struct ParityAssignment {
    n: u32,
    parities: BTreeMap<BitVector, Parity>,
    conventions: Conventions,
}

impl ParityAssignment {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parity_of(&self, codeword: &BitVector) -> Option<Parity> {
        self.parities.get(codeword).copied()
    }

    pub fn parities(&self) -> &BTreeMap<BitVector, Parity> {
        &self.parities
    }

    pub fn conventions(&self) -> &Conventions {
        &self.conventions
    }

    /// Replace one codeword's parity. Used to probe invalid configurations.
    pub fn override_parity(&mut self, codeword: &BitVector, parity: Parity) -> Result<()> {
        match self.parities.get_mut(codeword) {
            Some(p) => {
                *p = parity;
                Ok(())
            }
            None => Err(Error::Domain("override target is not a codeword".into())),
        }
    }
}

/// The full encoder table: a 2-bit parity for every vector of
/// `F_2^(2^n - 1)`, indexed by the integer value of the data word.
#[derive(Clone, Debug)]
pub struct SefccTable {
    n: u32,
    parity_of: Vec<Parity>,
    conventions: Conventions,
}

impl SefccTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn data_length(&self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn domain_size(&self) -> usize {
        self.parity_of.len()
    }

    pub fn parity_of(&self, word: &BitVector) -> Parity {
        self.parity_of[word.to_integer() as usize]
    }

    pub fn parity_of_index(&self, value: u64) -> Parity {
        self.parity_of[value as usize]
    }

    pub fn conventions(&self) -> &Conventions {
        &self.conventions
    }

    /// The encoded word `(u, parity(u))` for a data word `u`.
    pub fn encode(&self, word: &BitVector) -> BitVector {
        let parity = self.parity_of(word);
        let mut out = BitVector::zero(word.len() + 2);
        for i in word.iter_ones() {
            out.set(i, true);
        }
        if parity.bits() & 0b10 != 0 {
            out.set(word.len(), true);
        }
        if parity.bits() & 0b01 != 0 {
            out.set(word.len() + 1, true);
        }
        out
    }

    /// Encoded words packed as integers `(word << 2) | parity`, index =
    /// data word value. XOR-popcount on these gives encoded distance.
    fn packed(&self) -> Vec<u32> {
        (0..self.parity_of.len())
            .map(|x| ((x as u32) << 2) | u32::from(self.parity_of[x].bits()))
            .collect()
    }

    /// Restriction to the codewords.
    pub fn codeword_assignment(&self) -> Result<ParityAssignment> {
        let code = HammingCode::build(self.n)?;
        let parities = code
            .enumerate_codewords()?
            .into_iter()
            .map(|c| {
                let p = self.parity_of(&c);
                (c, p)
            })
            .collect();
        Ok(ParityAssignment {
            n: self.n,
            parities,
            conventions: self.conventions.clone(),
        })
    }

    /// Rebuild a full table from a codeword assignment by giving every
    /// non-codeword the complement of its sphere center's parity.
    pub fn from_assignment(assignment: &ParityAssignment) -> Result<Self> {
        let code = HammingCode::build(assignment.n)?;
        let spheres = code.sphere_partition()?;
        let mut center_parity = Vec::with_capacity(spheres.centers().len());
        for c in spheres.centers() {
            center_parity.push(assignment.parity_of(c).ok_or_else(|| {
                Error::Domain(format!("assignment misses codeword {c}"))
            })?);
        }
        let parity_of = (0..spheres.domain_size() as u64)
            .map(|x| {
                let (center, flipped) = spheres.lookup_index(x);
                match flipped {
                    None => center_parity[center],
                    Some(_) => center_parity[center].complement(),
                }
            })
            .collect();
        Ok(SefccTable {
            n: assignment.n,
            parity_of,
            conventions: assignment.conventions.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ConstructOptions {
    /// Give the even class `{01, 10}` instead of `{00, 11}`.
    pub swap_pair_sets: bool,
    /// Skip the cut-function optimality preconditions.
    pub force: bool,
}

/// The default cut function for `construct`: the inner-product bent function
/// for even `n`; for odd `n` the function whose punctured table is the
/// smallest index attaining the minimum eigenvalue.
pub fn default_cut_function(n: u32) -> Result<BooleanFunction> {
    if n % 2 == 0 {
        BooleanFunction::mm_bent(n)
    } else {
        let report =
            crate::spectral::full_spectrum(n, crate::spectral::SpectrumMethod::Walsh, false)?;
        let u = report.argmin_us()[0];
        BooleanFunction::from_punctured(&BitVector::from_integer(u, (1usize << n) - 1))
    }
}

/// Minimum of the fourth-moment objective over every function vanishing at
/// zero, by direct sweep. Used as the construct precondition for odd `n`.
fn objective_min_by_sweep(n: u32) -> Result<i64> {
    let length = (1usize << n) - 1;
    let mut min = i64::MAX;
    for u in 0..(1u64 << length) {
        let f = BooleanFunction::from_punctured(&BitVector::from_integer(u, length))?;
        min = min.min(objective_l(&f)?);
    }
    Ok(min)
}

/// Build the complete encoder table.
///
/// Steps: (1) the even class receives one parity pair set and the odd class
/// the other; (2) the character vector of the punctured table of `f_u` over
/// the even class picks each codeword's parity within its pair (`+1` maps
/// to the set's representative); (3) the permuted character vector does the
/// same for the odd class under the canonical translation; (4) every
/// non-codeword receives the complement of its sphere center's parity.
pub fn construct(n: u32, f_u: &BooleanFunction, options: &ConstructOptions) -> Result<SefccTable> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity(format!(
            "full-table construction capped at n={MAX_ENUMERATION_N}, got n={n}"
        )));
    }
    if f_u.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "cut function has arity {}, expected {n}",
            f_u.n()
        )));
    }
    if f_u.value(0) {
        return Err(Error::Domain("cut function must satisfy f(0) = 0".into()));
    }
    if !options.force {
        if n % 2 == 0 {
            if !f_u.is_bent()? {
                return Err(Error::Domain(
                    "cut function is not bent; an optimal table for even n needs a bent \
                     function (override with force to experiment)"
                        .into(),
                ));
            }
        } else {
            let l = objective_l(f_u)?;
            let min = objective_min_by_sweep(n)?;
            if l != min {
                return Err(Error::Domain(format!(
                    "cut function has objective {l}, but the minimum is {min} \
                     (override with force to experiment)"
                )));
            }
        }
    }

    let code = HammingCode::build(n)?;
    let codewords = code.enumerate_codewords()?;
    let (even, odd) = weight_partition(&codewords);

    let even_set = if options.swap_pair_sets {
        PairSet::Odd
    } else {
        PairSet::Even
    };
    let odd_set = even_set.other();

    let u = f_u.punctured_truth_table()?;
    let e_u = character_vector(&u, &even)?;
    let w_prime = canonical_w_prime(&odd)?;
    let perm = build_isomorphism(&even, &odd, &w_prime)?;
    let odd_signs = perm.apply(e_u.entries());

    let sign_parity = |set: PairSet, sign: i8| {
        if sign > 0 {
            set.representative()
        } else {
            set.representative().complement()
        }
    };

    let mut parities = BTreeMap::new();
    for (v, &sign) in even.iter().zip(e_u.entries()) {
        parities.insert(v.clone(), sign_parity(even_set, sign));
    }
    for (w, &sign) in odd.iter().zip(&odd_signs) {
        parities.insert(w.clone(), sign_parity(odd_set, sign));
    }

    let assignment = ParityAssignment {
        n,
        parities,
        conventions: Conventions {
            w_prime,
            f_u: f_u.clone(),
            even_class_pair_set: even_set,
            odd_class_pair_set: odd_set,
        },
    };
    SefccTable::from_assignment(&assignment)
}

/// Which validity condition a table broke, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A non-codeword's parity is not the complement of its center's.
    NonCodewordParity { word: BitVector },
    /// A distance-3 codeword pair whose parities are not at distance 1.
    CodewordPairParity { a: BitVector, b: BitVector },
    /// An encoded (codeword, non-codeword) pair closer than distance 3.
    EncodedPairDistance {
        codeword: BitVector,
        word: BitVector,
        distance: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ValidityOutcome {
    pub valid: bool,
    pub violation: Option<Violation>,
}

/// Check the three validity conditions in order: (a) every non-codeword
/// complements its sphere center, (b) every distance-3 codeword pair has
/// parity distance exactly 1, and (c) the raw distance scan: every encoded
/// (codeword, non-codeword) pair is at distance at least 3. Condition (c)
/// is checked directly rather than inferred from (a) and (b).
pub fn verify_valid(table: &SefccTable) -> Result<ValidityOutcome> {
    let code = HammingCode::build(table.n)?;
    let spheres = code.sphere_partition()?;
    let length = code.length();

    // (a)
    for x in 0..(1u64 << length) {
        let (center, flipped) = spheres.lookup_index(x);
        if flipped.is_some() {
            let center_parity = table.parity_of(&spheres.centers()[center]);
            if table.parity_of_index(x) != center_parity.complement() {
                return Ok(ValidityOutcome {
                    valid: false,
                    violation: Some(Violation::NonCodewordParity {
                        word: BitVector::from_integer(x, length),
                    }),
                });
            }
        }
    }

    // (b)
    let codewords = spheres.centers();
    for (i, a) in codewords.iter().enumerate() {
        for b in &codewords[i + 1..] {
            if a.xor(b).weight() == 3
                && table.parity_of(a).distance(table.parity_of(b)) != 1
            {
                return Ok(ValidityOutcome {
                    valid: false,
                    violation: Some(Violation::CodewordPairParity {
                        a: a.clone(),
                        b: b.clone(),
                    }),
                });
            }
        }
    }

    // (c)
    let packed = table.packed();
    for c in codewords {
        let pc = packed[c.to_integer() as usize];
        for (x, &px) in packed.iter().enumerate() {
            let (_, flipped) = spheres.lookup_index(x as u64);
            if flipped.is_some() {
                let d = (pc ^ px).count_ones() as usize;
                if d < 3 {
                    return Ok(ValidityOutcome {
                        valid: false,
                        violation: Some(Violation::EncodedPairDistance {
                            codeword: c.clone(),
                            word: BitVector::from_integer(x as u64, length),
                            distance: d,
                        }),
                    });
                }
            }
        }
    }

    Ok(ValidityOutcome {
        valid: true,
        violation: None,
    })
}

/// One parallel pass over all encoded pairs: (minimum distance, number of
/// pairs at distance exactly 2).
fn scan_encoded_pairs(packed: &[u32]) -> (u32, u64) {
    packed
        .par_iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut local_min = u32::MAX;
            let mut count2 = 0u64;
            for &b in &packed[i + 1..] {
                let d = (a ^ b).count_ones();
                local_min = local_min.min(d);
                count2 += u64::from(d == 2);
            }
            (local_min, count2)
        })
        .reduce(|| (u32::MAX, 0), |x, y| (x.0.min(y.0), x.1 + y.1))
}

/// Exact minimum encoded distance over all distinct pairs of the
/// `2^(2^n - 1)` encoded words.
pub fn min_distance(table: &SefccTable) -> Result<usize> {
    let (min, _) = scan_encoded_pairs(&table.packed());
    Ok(min as usize)
}

/// Where the distance-2 encoded pairs of a table come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCountReport {
    /// Non-codeword pairs inside one sphere (data distance 2, equal parity).
    pub intra_sphere: u64,
    /// Non-codeword pairs across spheres whose centers are at distance 3.
    pub inter_sphere_boundary: u64,
    /// Non-codeword pairs across same-parity sphere centers at distance 4.
    pub identical_parity: u64,
    pub total_d2: u64,
    pub d_min: usize,
    pub same_parity_d4_edges_ce: u64,
    pub same_parity_d4_edges_co: u64,
}

/// Count, for a codeword pair at distance `wt(d)`, the non-codeword pairs
/// `(c_i + e_a, c_k + e_b)` at data distance `target`, by enumerating the
/// single-bit offsets on both sides.
pub fn nhcw_cross_pairs_at_distance(c_i: &BitVector, c_k: &BitVector, target: usize) -> u64 {
    let length = c_i.len();
    let d = c_i.xor(c_k);
    let d_int = d.to_integer();
    let mut count = 0u64;
    for a in 0..length {
        let da = d_int ^ (1u64 << (length - 1 - a));
        for b in 0..length {
            let dab = da ^ (1u64 << (length - 1 - b));
            if dab.count_ones() as usize == target {
                count += 1;
            }
        }
    }
    count
}

/// Count the distance-2 encoded pairs by the structural decomposition
/// (spheres and codeword-pair distances) and cross-check the total against
/// the direct all-pairs scan. A mismatch is an internal error.
pub fn count_pairs(table: &SefccTable) -> Result<PairCountReport> {
    let code = HammingCode::build(table.n)?;
    let length = code.length();
    let codewords = code.enumerate_codewords()?;
    let (even, odd) = weight_partition(&codewords);

    let intra_sphere =
        codewords.len() as u64 * (length as u64 * (length as u64 - 1) / 2);

    let mut inter_sphere_boundary = 0u64;
    for (i, a) in codewords.iter().enumerate() {
        for b in &codewords[i + 1..] {
            if a.xor(b).weight() == 3 {
                inter_sphere_boundary += nhcw_cross_pairs_at_distance(a, b, 1);
            }
        }
    }

    let mut identical_parity = 0u64;
    let mut same_parity_edges = [0u64; 2];
    for (class_idx, class) in [&even, &odd].into_iter().enumerate() {
        for (i, a) in class.iter().enumerate() {
            for b in &class[i + 1..] {
                if a.xor(b).weight() == 4 && table.parity_of(a) == table.parity_of(b) {
                    same_parity_edges[class_idx] += 1;
                    identical_parity += nhcw_cross_pairs_at_distance(a, b, 2);
                }
            }
        }
    }

    let total_d2 = intra_sphere + inter_sphere_boundary + identical_parity;
    let (min, direct_total) = scan_encoded_pairs(&table.packed());
    if direct_total != total_d2 {
        return Err(Error::Inconsistency(format!(
            "distance-2 pair count mismatch: structural {total_d2}, direct {direct_total}"
        )));
    }

    Ok(PairCountReport {
        intra_sphere,
        inter_sphere_boundary,
        identical_parity,
        total_d2,
        d_min: min as usize,
        same_parity_d4_edges_ce: same_parity_edges[0],
        same_parity_d4_edges_co: same_parity_edges[1],
    })
}

/// The quadratic form of a parity assignment over a distance graph, with
/// the same/cut edge split: `z^T A z = 2(same - cut)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutValue {
    pub quadratic_form: i64,
    pub same_parity_edges: u64,
    pub cut_edges: u64,
}

/// Evaluate the cut of an assignment restricted to a graph's vertex set.
/// All parities on those vertices must come from one complementary pair;
/// the sign of a vertex is `+1` exactly on the pair set's representative.
pub fn cut_value(assignment: &ParityAssignment, graph: &DistanceGraph) -> Result<CutValue> {
    let mut signs = Vec::with_capacity(graph.vertex_count());
    let mut pair_set: Option<PairSet> = None;
    for v in graph.vertices() {
        let p = assignment
            .parity_of(v)
            .ok_or_else(|| Error::Domain(format!("vertex {v} has no assigned parity")))?;
        let set = if PairSet::Even.contains(p) {
            PairSet::Even
        } else {
            PairSet::Odd
        };
        match pair_set {
            None => pair_set = Some(set),
            Some(existing) if existing != set => {
                return Err(Error::Domain(
                    "assignment mixes both parity pair sets on one vertex set".into(),
                ))
            }
            _ => {}
        }
        signs.push(if p == set.representative() { 1i64 } else { -1 });
    }
    let mut same = 0u64;
    let mut cut = 0u64;
    for (i, j) in graph.edges() {
        if signs[i] == signs[j] {
            same += 1;
        } else {
            cut += 1;
        }
    }
    Ok(CutValue {
        quadratic_form: 2 * (same as i64 - cut as i64),
        same_parity_edges: same,
        cut_edges: cut,
    })
}

/// Serialized table layout, as written by `construct` and read by `verify`.
#[derive(Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub n: u32,
    pub conventions: ConventionsFile,
    /// Data word bit string -> parity bit string, every word present.
    pub parities: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ConventionsFile {
    pub w_prime: String,
    pub f_u: CutFunctionFile,
    pub even_class_pair_set: String,
    pub odd_class_pair_set: String,
    pub plus_one_parity_even_class: String,
    pub plus_one_parity_odd_class: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CutFunctionFile {
    pub n: u32,
    pub table: String,
}

impl TableFile {
    pub fn from_table(table: &SefccTable) -> Self {
        let length = table.data_length();
        let parities = (0..table.domain_size() as u64)
            .map(|x| {
                (
                    BitVector::from_integer(x, length).to_bitstring(),
                    table.parity_of_index(x).as_str().to_string(),
                )
            })
            .collect();
        let c = table.conventions();
        TableFile {
            n: table.n(),
            conventions: ConventionsFile {
                w_prime: c.w_prime.to_bitstring(),
                f_u: CutFunctionFile {
                    n: c.f_u.n(),
                    table: c.f_u.table().to_bitstring(),
                },
                even_class_pair_set: c.even_class_pair_set.label().to_string(),
                odd_class_pair_set: c.odd_class_pair_set.label().to_string(),
                plus_one_parity_even_class: c.even_class_pair_set.representative().as_str().into(),
                plus_one_parity_odd_class: c.odd_class_pair_set.representative().as_str().into(),
            },
            parities,
        }
    }

    pub fn to_table(&self) -> Result<SefccTable> {
        if self.n > MAX_ENUMERATION_N {
            return Err(Error::Capacity(format!(
                "table order n={} exceeds cap {MAX_ENUMERATION_N}",
                self.n
            )));
        }
        let length = (1usize << self.n) - 1;
        let domain = 1usize << length;
        if self.parities.len() != domain {
            return Err(Error::Parse(format!(
                "table has {} entries, expected {domain}",
                self.parities.len()
            )));
        }
        let mut parity_of = vec![Parity(0); domain];
        let mut seen = vec![false; domain];
        for (word, parity) in &self.parities {
            let v = BitVector::from_bitstring(word)?;
            if v.len() != length {
                return Err(Error::Parse(format!(
                    "data word {word:?} has length {}, expected {length}",
                    v.len()
                )));
            }
            let idx = v.to_integer() as usize;
            parity_of[idx] = Parity::parse(parity)?;
            seen[idx] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Parse(format!(
                "table misses data word {}",
                BitVector::from_integer(missing as u64, length)
            )));
        }
        let conventions = Conventions {
            w_prime: BitVector::from_bitstring(&self.conventions.w_prime)?,
            f_u: BooleanFunction::new(
                self.conventions.f_u.n,
                BitVector::from_bitstring(&self.conventions.f_u.table)?,
            )?,
            even_class_pair_set: PairSet::parse(&self.conventions.even_class_pair_set)?,
            odd_class_pair_set: PairSet::parse(&self.conventions.odd_class_pair_set)?,
        };
        Ok(SefccTable {
            n: self.n,
            parity_of,
            conventions,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{full_spectrum, lambda_min_even, SpectrumMethod};

    fn bv(s: &str) -> BitVector {
        BitVector::from_bitstring(s).unwrap()
    }

    fn optimal_table(n: u32) -> SefccTable {
        let f_u = default_cut_function(n).unwrap();
        construct(n, &f_u, &ConstructOptions::default()).unwrap()
    }

    #[test]
    fn parity_arithmetic() {
        let p = Parity::parse("01").unwrap();
        assert_eq!(p.complement().as_str(), "10");
        assert_eq!(p.distance(Parity::parse("11").unwrap()), 1);
        assert!(PairSet::Odd.contains(p));
        assert!(!PairSet::Even.contains(p));
        assert!(Parity::parse("2").is_err());
    }

    #[test]
    fn construct_n2_by_hand() {
        let table = optimal_table(2);
        // the single even codeword gets the even pair representative
        assert_eq!(table.parity_of(&bv("000")).as_str(), "00");
        // the single odd codeword gets a parity from {01, 10}
        assert!(PairSet::Odd.contains(table.parity_of(&bv("111"))));
        // non-codewords complement their centers
        assert_eq!(table.parity_of(&bv("100")).as_str(), "11");
        assert_eq!(
            table.parity_of(&bv("110")),
            table.parity_of(&bv("111")).complement()
        );
    }

    #[test]
    fn construct_respects_pair_set_split() {
        for n in 2..=4u32 {
            let table = optimal_table(n);
            let code = HammingCode::build(n).unwrap();
            let (even, odd) = weight_partition(&code.enumerate_codewords().unwrap());
            for c in &even {
                assert!(PairSet::Even.contains(table.parity_of(c)), "n={n}");
            }
            for c in &odd {
                assert!(PairSet::Odd.contains(table.parity_of(c)), "n={n}");
            }
        }
    }

    #[test]
    fn swap_flag_exchanges_pair_sets() {
        let f_u = default_cut_function(3).unwrap();
        let table = construct(
            3,
            &f_u,
            &ConstructOptions {
                swap_pair_sets: true,
                force: false,
            },
        )
        .unwrap();
        assert!(PairSet::Odd.contains(table.parity_of(&bv("0000000"))));
        assert!(verify_valid(&table).unwrap().valid);
    }

    #[test]
    fn construct_rejects_non_bent_for_even_n() {
        let zero = BooleanFunction::zero(4).unwrap();
        assert!(matches!(
            construct(4, &zero, &ConstructOptions::default()),
            Err(Error::Domain(_))
        ));
        // force lets it through; the table is still valid, just not optimal
        let forced = construct(
            4,
            &zero,
            &ConstructOptions {
                swap_pair_sets: false,
                force: true,
            },
        )
        .unwrap();
        assert!(verify_valid(&forced).unwrap().valid);
    }

    #[test]
    fn construct_rejects_non_minimizer_for_odd_n() {
        let zero = BooleanFunction::zero(3).unwrap();
        assert!(matches!(
            construct(3, &zero, &ConstructOptions::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn constructed_tables_are_valid() {
        for n in 2..=3u32 {
            let outcome = verify_valid(&optimal_table(n)).unwrap();
            assert!(outcome.valid, "n={n}: {:?}", outcome.violation);
        }
    }

    #[test]
    fn planted_center_complement_violation_is_reported() {
        let table = optimal_table(3);
        let mut broken = table.clone();
        // flip one non-codeword's parity to equal its center's
        let code = HammingCode::build(3).unwrap();
        let word = bv("1000000");
        let (center, _) = code.syndrome_decode(&word).unwrap();
        broken.parity_of[word.to_integer() as usize] = table.parity_of(&center);
        let outcome = verify_valid(&broken).unwrap();
        assert!(!outcome.valid);
        assert!(matches!(
            outcome.violation,
            Some(Violation::NonCodewordParity { .. })
        ));
    }

    #[test]
    fn planted_cross_pair_parity_violation_is_reported() {
        // give two distance-3 codewords parities 00 and 11 (distance 2)
        let table = optimal_table(3);
        let mut assignment = table.codeword_assignment().unwrap();
        assignment
            .override_parity(&bv("0000000"), Parity::parse("00").unwrap())
            .unwrap();
        assignment
            .override_parity(&bv("1110000"), Parity::parse("11").unwrap())
            .unwrap();
        let broken = SefccTable::from_assignment(&assignment).unwrap();
        let outcome = verify_valid(&broken).unwrap();
        assert!(!outcome.valid);
        assert!(matches!(
            outcome.violation,
            Some(Violation::CodewordPairParity { .. })
        ));
    }

    #[test]
    fn min_distance_is_two_for_small_n() {
        for n in 2..=3u32 {
            assert_eq!(min_distance(&optimal_table(n)).unwrap(), 2, "n={n}");
        }
    }

    #[test]
    fn pair_counts_n2() {
        let report = count_pairs(&optimal_table(2)).unwrap();
        assert_eq!(report.intra_sphere, 6);
        assert_eq!(report.inter_sphere_boundary, 6);
        assert_eq!(report.identical_parity, 0);
        assert_eq!(report.total_d2, 12);
        assert_eq!(report.d_min, 2);
    }

    #[test]
    fn pair_counts_n3() {
        let report = count_pairs(&optimal_table(3)).unwrap();
        assert_eq!(report.intra_sphere, 336);
        assert_eq!(report.inter_sphere_boundary, 336);
        assert_eq!(report.same_parity_d4_edges_ce, 12);
        assert_eq!(report.same_parity_d4_edges_co, 12);
        assert_eq!(report.identical_parity, 288);
        assert_eq!(
            report.identical_parity,
            12 * (report.same_parity_d4_edges_ce + report.same_parity_d4_edges_co)
        );
        assert_eq!(report.total_d2, 960);
        assert_eq!(report.d_min, 2);
    }

    #[test]
    fn cut_values_on_the_complete_graph() {
        let code = HammingCode::build(3).unwrap();
        let (even, odd) = weight_partition(&code.enumerate_codewords().unwrap());
        let g4 = DistanceGraph::build(even.clone(), 4).unwrap();
        let table = optimal_table(3);
        let assignment = table.codeword_assignment().unwrap();

        let optimal = cut_value(&assignment, &g4).unwrap();
        assert_eq!(
            optimal.quadratic_form,
            full_spectrum(3, SpectrumMethod::Walsh, false).unwrap().lambda_min() * even.len() as i64
        );
        assert_eq!(optimal.quadratic_form, -8);
        assert_eq!(
            optimal.quadratic_form,
            2 * (optimal.same_parity_edges as i64 - optimal.cut_edges as i64)
        );

        // all-same parity on the even class: z^T A z = 2|E|
        let mut flat = assignment.clone();
        for c in &even {
            flat.override_parity(c, Parity::parse("00").unwrap()).unwrap();
        }
        let all_same = cut_value(&flat, &g4).unwrap();
        assert_eq!(all_same.quadratic_form, 56);
        assert_eq!(all_same.same_parity_edges, g4.edge_count());

        // transfer: the odd-class cut equals the even-class cut
        let g4_odd = DistanceGraph::build(odd, 4).unwrap();
        let odd_cut = cut_value(&assignment, &g4_odd).unwrap();
        assert_eq!(odd_cut.quadratic_form, optimal.quadratic_form);
        assert_eq!(odd_cut.same_parity_edges, optimal.same_parity_edges);
    }

    #[test]
    fn cut_value_rejects_mixed_pair_sets() {
        let code = HammingCode::build(3).unwrap();
        let (even, _) = weight_partition(&code.enumerate_codewords().unwrap());
        let g4 = DistanceGraph::build(even, 4).unwrap();
        let table = optimal_table(3);
        let mut assignment = table.codeword_assignment().unwrap();
        assignment
            .override_parity(&bv("0000000"), Parity::parse("01").unwrap())
            .unwrap();
        assert!(matches!(
            cut_value(&assignment, &g4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn factor_12_per_distance4_pair_n3() {
        let code = HammingCode::build(3).unwrap();
        let codewords = code.enumerate_codewords().unwrap();
        for (i, a) in codewords.iter().enumerate() {
            for b in &codewords[i + 1..] {
                if a.xor(b).weight() == 4 {
                    assert_eq!(nhcw_cross_pairs_at_distance(a, b, 2), 12);
                }
            }
        }
    }

    #[test]
    fn boundary_pairs_per_distance3_pair_is_six() {
        let code = HammingCode::build(3).unwrap();
        let codewords = code.enumerate_codewords().unwrap();
        for (i, a) in codewords.iter().enumerate() {
            for b in &codewords[i + 1..] {
                if a.xor(b).weight() == 3 {
                    assert_eq!(nhcw_cross_pairs_at_distance(a, b, 1), 6);
                }
            }
        }
    }

    #[test]
    fn table_file_round_trip() {
        let table = optimal_table(3);
        let file = TableFile::from_table(&table);
        assert_eq!(file.parities.len(), 128);
        let back = file.to_table().unwrap();
        assert_eq!(back.parity_of, table.parity_of);
        assert_eq!(back.conventions().w_prime, table.conventions().w_prime);
    }

    #[test]
    fn default_cut_function_choices() {
        assert_eq!(
            default_cut_function(4).unwrap(),
            BooleanFunction::mm_bent(4).unwrap()
        );
        let f3 = default_cut_function(3).unwrap();
        assert!(!f3.value(0));
        // its eigenvalue attains the n=3 minimum
        assert_eq!(crate::spectral::eigenvalue_walsh(&f3).unwrap(), -1);
    }

    #[test]
    fn even_n_lambda_relation_for_same_parity_edges() {
        // |E_s| = (|E_4| + z^T A z / 2) / 2 with z^T A z = lambda_min |C_e|
        let code = HammingCode::build(4).unwrap();
        let (even, _) = weight_partition(&code.enumerate_codewords().unwrap());
        let g4 = DistanceGraph::build(even.clone(), 4).unwrap();
        let table = optimal_table(4);
        let assignment = table.codeword_assignment().unwrap();
        let cut = cut_value(&assignment, &g4).unwrap();
        let lambda = lambda_min_even(4).unwrap();
        assert_eq!(cut.quadratic_form, lambda * even.len() as i64);
        assert_eq!(cut.quadratic_form, -15360);
        assert_eq!(cut.same_parity_edges, 23040);
    }
}

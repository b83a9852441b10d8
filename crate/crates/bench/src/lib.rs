//! Shared input builders for the benchmark targets.

use sefcc_core::boolfn::BooleanFunction;
use sefcc_core::gf2::BitVector;
use sefcc_core::hamming::{weight_partition, HammingCode};
use sefcc_core::sefcc::{construct, default_cut_function, ConstructOptions, SefccTable};

/// A deterministic pseudo-random truth table on `n` variables.
pub fn scrambled_function(n: u32, seed: u64) -> BooleanFunction {
    let mut state = seed | 1;
    BooleanFunction::from_fn(n, move |x| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(x ^ 0x9e37);
        (state >> 33) & 1 == 1
    })
    .expect("arity within cap")
}

/// The even-weight codeword class for a given order.
pub fn even_class(n: u32) -> Vec<BitVector> {
    let code = HammingCode::build(n).expect("order within cap");
    weight_partition(&code.enumerate_codewords().expect("enumeration within cap")).0
}

/// The optimal encoder table for a given order.
pub fn optimal_table(n: u32) -> SefccTable {
    let f_u = default_cut_function(n).expect("order within cap");
    construct(n, &f_u, &ConstructOptions::default()).expect("construction within cap")
}

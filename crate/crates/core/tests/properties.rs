//! Property-based invariants across the library, plus fixed-seed sampled
//! checks that are too heavy to rebuild per proptest case.

use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use sefcc_core::boolfn::BooleanFunction;
use sefcc_core::gf2::{dual_code, hamming_distance, rank, span_enumerate, BitVector};
use sefcc_core::graphs::DistanceGraph;
use sefcc_core::hamming::{weight_partition, HammingCode};
use sefcc_core::sefcc::{
    count_pairs, cut_value, verify_valid, PairSet, Parity, SefccTable,
};
use sefcc_core::spectral::{character_vector, eigenvalue_direct, full_spectrum, SpectrumMethod};

fn bitvec(len: usize) -> impl Strategy<Value = BitVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(move |bits| {
        let mut v = BitVector::zero(len);
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    })
}

fn boolean_function(n: u32) -> impl Strategy<Value = BooleanFunction> {
    bitvec(1usize << n).prop_map(move |table| BooleanFunction::new(n, table).unwrap())
}

proptest! {
    #[test]
    fn triangle_inequality(
        (a, b, c) in (1usize..24).prop_flat_map(|len| (bitvec(len), bitvec(len), bitvec(len)))
    ) {
        let ab = hamming_distance(&a, &b).unwrap();
        let ac = hamming_distance(&a, &c).unwrap();
        let cb = hamming_distance(&c, &b).unwrap();
        prop_assert!(ab <= ac + cb);
    }

    #[test]
    fn span_size_is_two_pow_rank(
        vectors in (1usize..12).prop_flat_map(|len| prop::collection::vec(bitvec(len), 0..6)),
        len in 1usize..12,
    ) {
        let vectors: Vec<BitVector> = vectors
            .into_iter()
            .map(|v| {
                let mut w = BitVector::zero(len);
                for i in v.iter_ones().filter(|&i| i < len) {
                    w.set(i, true);
                }
                w
            })
            .collect();
        let span = span_enumerate(&vectors, len).unwrap();
        prop_assert_eq!(span.len(), 1usize << rank(&vectors));
        prop_assert!(span.contains(&BitVector::zero(len)));
    }

    #[test]
    fn double_dual_spans_the_original(
        (len, vectors) in (1usize..10)
            .prop_flat_map(|len| (Just(len), prop::collection::vec(bitvec(len), 0..5)))
    ) {
        let dd = dual_code(&dual_code(&vectors, len).unwrap(), len).unwrap();
        prop_assert_eq!(
            span_enumerate(&dd, len).unwrap(),
            span_enumerate(&vectors, len).unwrap()
        );
    }

    #[test]
    fn parseval_holds_for_arbitrary_functions(
        f in (1u32..=6).prop_flat_map(boolean_function)
    ) {
        let n = f.n();
        let w = f.walsh_transform();
        prop_assert_eq!(w.sum_of_squares(), 1i64 << (2 * n));
        let expected_sum = if f.value(0) { -(1i64 << n) } else { 1i64 << n };
        prop_assert_eq!(w.sum(), expected_sum);
        prop_assert!(w.coefficients().iter().all(|c| c % 2 == 0));
    }

    #[test]
    fn walsh_butterfly_matches_definitional_sum(
        (f, a) in (1u32..=6).prop_flat_map(|n| (boolean_function(n), 0..(1u64 << n)))
    ) {
        let n = f.n() as usize;
        let av = BitVector::from_integer(a, n);
        let naive: i64 = (0..(1u64 << n))
            .map(|x| {
                let xv = BitVector::from_integer(x, n);
                if f.value(x) ^ av.dot(&xv) { -1 } else { 1 }
            })
            .sum();
        prop_assert_eq!(f.walsh_transform().coefficient(a), naive);
    }

    #[test]
    fn witness_polynomial_is_nonnegative_on_even_spectra(
        f in prop::sample::select(vec![2u32, 4, 6]).prop_flat_map(boolean_function)
    ) {
        let v2 = 1i64 << f.n(); // V^2 = 2^n
        for &w in f.walsh_transform().coefficients() {
            let h = (w * w - v2) * ((w - 2) * (w - 2) - v2);
            prop_assert!(h >= 0, "H({w}) = {h} < 0 at n = {}", f.n());
        }
    }

    #[test]
    fn rayleigh_bound_on_the_n3_distance4_graph(signs in prop::collection::vec(any::<bool>(), 8)) {
        let code = HammingCode::build(3).unwrap();
        let (even, _) = weight_partition(&code.enumerate_codewords().unwrap());
        let g = DistanceGraph::build(even, 4).unwrap();
        let z: Vec<i64> = signs.iter().map(|&s| if s { 1 } else { -1 }).collect();
        let quad: i64 = g.edges().iter().map(|&(i, j)| 2 * z[i] * z[j]).sum();
        // z^T A z >= lambda_min * ||z||^2 with lambda_min = -1
        prop_assert!(quad >= -8);
    }
}

/// Random parity assignments that respect the pair-set split, extended over
/// the whole space by center complementation.
fn random_valid_table(n: u32, rng: &mut ChaCha8Rng) -> SefccTable {
    let code = HammingCode::build(n).unwrap();
    let f_u = sefcc_core::sefcc::default_cut_function(n).unwrap();
    let base = sefcc_core::sefcc::construct(n, &f_u, &Default::default()).unwrap();
    let mut assignment = base.codeword_assignment().unwrap();
    for c in code.enumerate_codewords().unwrap() {
        let set = if c.weight() % 2 == 0 {
            PairSet::Even
        } else {
            PairSet::Odd
        };
        let parity = if rng.random::<bool>() {
            set.representative()
        } else {
            set.representative().complement()
        };
        assignment.override_parity(&c, parity).unwrap();
    }
    SefccTable::from_assignment(&assignment).unwrap()
}

#[test]
fn table_file_round_trip_over_random_assignments() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let table = random_valid_table(3, &mut rng);
        let file = sefcc_core::sefcc::TableFile::from_table(&table);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: sefcc_core::sefcc::TableFile = serde_json::from_str(&text).unwrap();
        let back = parsed.to_table().unwrap();
        for x in 0..table.domain_size() as u64 {
            assert_eq!(back.parity_of_index(x), table.parity_of_index(x));
        }
    }
}

#[test]
fn invariant_categories_agree_across_valid_assignments() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = Vec::new();
    for _ in 0..10 {
        let table = random_valid_table(3, &mut rng);
        assert!(verify_valid(&table).unwrap().valid);
        let report = count_pairs(&table).unwrap();
        // categories (i) and (ii) do not depend on the assignment
        assert_eq!(report.intra_sphere, 336);
        assert_eq!(report.inter_sphere_boundary, 336);
        assert_eq!(
            report.identical_parity,
            12 * (report.same_parity_d4_edges_ce + report.same_parity_d4_edges_co)
        );
        seen.push(report.total_d2);
    }
    // the identical-parity category does vary
    assert!(seen.iter().any(|&t| t != seen[0]) || seen.len() < 2);
}

#[test]
fn planted_cross_set_parity_is_rejected() {
    let f_u = sefcc_core::sefcc::default_cut_function(3).unwrap();
    let table = sefcc_core::sefcc::construct(3, &f_u, &Default::default()).unwrap();
    let mut assignment = table.codeword_assignment().unwrap();
    // move the zero codeword (even class) into the odd pair set
    assignment
        .override_parity(&BitVector::zero(7), Parity::parse("01").unwrap())
        .unwrap();
    let broken = SefccTable::from_assignment(&assignment).unwrap();
    let outcome = verify_valid(&broken).unwrap();
    assert!(!outcome.valid);
    assert!(matches!(
        outcome.violation,
        Some(sefcc_core::sefcc::Violation::CodewordPairParity { .. })
    ));
}

#[test]
fn sampled_eigenpairs_at_n4() {
    let code = HammingCode::build(4).unwrap();
    let (even, _) = weight_partition(&code.enumerate_codewords().unwrap());
    let g = DistanceGraph::build(even.clone(), 4).unwrap();
    let s4 = code.weight4_generators().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let u_int: u64 = rng.random_range(0..(1u64 << 15));
        let u = BitVector::from_integer(u_int, 15);
        let e = character_vector(&u, &even).unwrap();
        let lambda = eigenvalue_direct(&u, &s4).unwrap();
        for i in 0..g.vertex_count() {
            let row_sum: i64 = g.neighbors(i).map(|j| i64::from(e.entries()[j])).sum();
            assert_eq!(row_sum, lambda * i64::from(e.entries()[i]), "u={u_int}, i={i}");
        }
    }
}

#[test]
fn optimality_transfer_between_classes() {
    // the odd-class cut under the permuted character vector equals the
    // even-class cut, for the constructed table at each n
    for n in 2..=4u32 {
        let f_u = sefcc_core::sefcc::default_cut_function(n).unwrap();
        let table = sefcc_core::sefcc::construct(n, &f_u, &Default::default()).unwrap();
        let assignment = table.codeword_assignment().unwrap();
        let code = HammingCode::build(n).unwrap();
        let (even, odd) = weight_partition(&code.enumerate_codewords().unwrap());
        let g_even = DistanceGraph::build(even, 4).unwrap();
        let g_odd = DistanceGraph::build(odd, 4).unwrap();
        let cut_even = cut_value(&assignment, &g_even).unwrap();
        let cut_odd = cut_value(&assignment, &g_odd).unwrap();
        assert_eq!(cut_even.quadratic_form, cut_odd.quadratic_form, "n={n}");
        assert_eq!(cut_even.same_parity_edges, cut_odd.same_parity_edges, "n={n}");
    }
}

#[test]
fn spectrum_sweep_agreement_counts_match_coset_structure() {
    // distinct eigenvectors = one per coset of the dual of the even subcode
    for n in 2..=3u32 {
        let full = full_spectrum(n, SpectrumMethod::Both, false).unwrap();
        let dedup = full_spectrum(n, SpectrumMethod::Both, true).unwrap();
        let length = (1usize << n) - 1;
        let cosets = 1usize << (length - (n as usize + 1));
        assert_eq!(dedup.entries().len(), cosets, "n={n}");
        assert_eq!(full.entries().len(), 1 << length, "n={n}");
        assert_eq!(full.lambda_min(), dedup.lambda_min(), "n={n}");
    }
}

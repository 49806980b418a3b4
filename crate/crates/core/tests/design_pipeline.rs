//! End-to-end pipeline checks: fixture file → array → design → parity-check
//! matrix → report, plus a round trip through the alist format on disk and
//! one decoded transmission.

use std::path::Path;

use dca_ldpc::alist::{read_alist, write_alist};
use dca_ldpc::analysis::full_report;
use dca_ldpc::channel::{transmit, ChannelModel};
use dca_ldpc::codec::{decode_sum_product, Encoder};
use dca_ldpc::dca::{parse_rows, verify_general_dca, CyclicDca};
use dca_ldpc::gf2::Gf2Vector;
use dca_ldpc::pbibd::build_design;
use dca_ldpc::rng::SplitMix64;

fn fixture_text() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/dca_star_4_6_6.txt");
    std::fs::read_to_string(path).expect("fixture present")
}

#[test]
fn fixture_file_is_a_valid_reduced_array() {
    let rows = parse_rows(&fixture_text()).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.len() == 4));

    let q = CyclicDca::from_rows(&rows).unwrap();
    assert_eq!(q.n(), 3);
    assert_eq!(q.k(), 4);
    assert!(q.verify_p1());
    assert!(q.verify_p2());
    assert!(q.p2_canonical_multiset());

    // With the zero row reinstated, every column pair covers all of Z_6.
    let mut unreduced = vec![vec![0; 4]];
    unreduced.extend(rows);
    assert!(verify_general_dca(&unreduced, 6).unwrap().all_covered);
}

#[test]
fn report_for_n6_matches_known_parameters() {
    let h = build_design(6).unwrap().incidence_matrix();
    let report = full_report(&h).unwrap();
    assert_eq!(report.length, 132);
    assert_eq!(report.rank, 34);
    assert_eq!(report.dimension, 98);
    assert_eq!(report.rate_decimal, "0.742");
    assert_eq!(report.girth, 6);
    assert_eq!(report.min_distance, 4);
    assert!(report.rc_ok);
}

#[test]
fn dense_linear_algebra_on_design_matrices() {
    let dense6 = build_design(6).unwrap().incidence_matrix().to_dense();
    let basis = dense6.null_space_basis();
    assert_eq!(basis.len(), 98);
    for v in basis.iter().step_by(13) {
        assert!(dense6.mat_vec(v).unwrap().is_zero());
    }
    let (generator, col_perm) = dense6.systematic_generator().unwrap();
    assert_eq!((generator.rows(), generator.cols()), (98, 132));
    assert_eq!(col_perm.len(), 132);

    let dense3 = build_design(3).unwrap().incidence_matrix().to_dense();
    let (_, pivots) = dense3.rref();
    assert_eq!(pivots.len(), 16);
}

#[test]
fn weight6_indicator_is_in_the_null_space() {
    let h = build_design(5).unwrap().incidence_matrix();
    let witness = dca_ldpc::analysis::weight6_witness(5).unwrap();
    let indicator = Gf2Vector::from_indices(h.cols(), &witness);
    assert!(h.to_dense().mat_vec(&indicator).unwrap().is_zero());
}

#[test]
fn alist_round_trip_through_disk() {
    let h = build_design(3).unwrap().incidence_matrix();
    let dir = std::env::temp_dir().join(format!("dca-ldpc-core-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h3.alist");
    std::fs::write(&path, write_alist(&h)).unwrap();
    let parsed = read_alist(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((parsed.rows(), parsed.cols()), (18, 30));
    for c in 0..30 {
        assert_eq!(parsed.col_support(c), h.col_support(c));
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn one_noisy_transmission_decodes_back() {
    let h = build_design(5).unwrap().incidence_matrix();
    let encoder = Encoder::from_parity_check(&h).unwrap();
    let mut rng = SplitMix64::for_frame(2024, 0, 0);
    let mut message = Gf2Vector::zeros(encoder.dimension());
    for i in 0..encoder.dimension() {
        if rng.next_bool(0.5) {
            message.set(i, true);
        }
    }
    let word = encoder.encode(&message).unwrap();
    let llrs = transmit(&word, &ChannelModel::Bsc { crossover: 0.01 }, &mut rng).unwrap();
    let result = decode_sum_product(&h, &llrs, 50).unwrap();
    assert!(result.converged);
    assert_eq!(result.word, word);
}

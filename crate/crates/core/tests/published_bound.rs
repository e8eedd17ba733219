//! The published `R_I` lower bound is not valid in general; these are the
//! concrete codes that show it, checked against exact or witnessed
//! distances.

use std::sync::Arc;

use qclrc::algebra::{factor_unity, Field};
use qclrc::bounds::{full_report, go_bound, Status};
use qclrc::codes::{low_weight_search, weight, DistanceBudget, LinearCode};
use qclrc::construct::CodeDatabase;
use qclrc::examples::example;
use qclrc::qc::ConstituentDecomposition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn binary_length_21_code_beats_the_formula() {
    let f2 = Field::prime(2).unwrap();
    let fact = Arc::new(factor_unity(&f2, 7).unwrap());
    let fields: Vec<Field> = fact.factors.iter().map(|f| f.field.clone()).collect();
    let constituents = vec![
        LinearCode::full(&fields[0], 3),
        LinearCode::new(&fields[1], 3, &[vec![1, 0, 4], vec![0, 1, 3]]).unwrap(),
        LinearCode::new(&fields[2], 3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap(),
    ];
    let dec = ConstituentDecomposition::new(fact, 3, constituents).unwrap();
    let b = DistanceBudget::default();
    let d = dec.linear_code().unwrap().min_distance(&b).unwrap();
    let g = go_bound(&dec, &b).unwrap();
    assert_eq!(d, 2);
    assert_eq!(g.distances, vec![2, 1, 1]);
    assert_eq!(g.value, 3);
    assert_eq!(g.certified, 2);
}

#[test]
fn quinary_family_base_has_light_codewords() {
    let db = CodeDatabase::bundled();
    let b = DistanceBudget::default();
    let dec = example("4.6")
        .unwrap()
        .code_spec()
        .to_decomposition(Some(&db), &b)
        .unwrap();
    let report = full_report(&dec, &b).unwrap();
    assert_eq!(report.d_go, 10);
    assert_eq!(report.d_certified, 4);
    assert_eq!(report.certified_status, Status::Gap(22));

    let code = dec.linear_code().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (w, v) = low_weight_search(&code, 50, &mut rng).unwrap();
    assert!(code.contains(&v));
    assert_eq!(weight(&v), w);
    assert!(w >= report.d_certified);
    assert!(w < report.d_go, "lightest codeword found has weight {w}");
}

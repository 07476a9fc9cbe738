mod common;

use rand::Rng;
use tropwick::format::parse_matrix;
use tropwick::linear_spaces::{in_linear_space, is_isotropical, is_tropical_plucker, sample_admissible};
use tropwick::realization::{
    chart_with, plucker_valuation_from_rowspace, wick_valuation_from_rowspace, wick_valuation_in_chart,
};
use tropwick::wick::{all_cocircuits, check_wick_full, is_cocycle};
use tropwick::{GroundSet, PuiseuxScalar, ScalarMatrix, SignedVector, Subset, TropicalValue};

fn data(name: &str) -> ScalarMatrix {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_matrix(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// A random isotropic row space, given by `G [I | A]` for a random integer `G`.
fn random_isotropic(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> ScalarMatrix {
    let zero = rng.gen_range(0.0..0.5);
    let m = common::identity_beside(&common::random_skew(n, rng, zero));
    loop {
        let g = ScalarMatrix::from_rows(
            (0..n).map(|_| (0..n).map(|_| PuiseuxScalar::integer(rng.gen_range(-2..=2))).collect()).collect(),
        )
        .unwrap();
        if !g.det().unwrap().is_zero() {
            return g.mul(&m).unwrap();
        }
    }
}

#[test]
fn valuation_is_chart_independent() {
    let mut rng = common::rng(1);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let m = random_isotropic(n, &mut rng);
        let p = wick_valuation_from_rowspace(&m).unwrap();
        assert!(check_wick_full(&p), "{p}");
        let mut charts = 0;
        for j in Subset::all(n) {
            if chart_with(&m, j).is_ok() {
                charts += 1;
                assert_eq!(wick_valuation_in_chart(&m, j).unwrap(), p, "chart {j}");
            }
        }
        // the usable charts are exactly the complements of the support
        assert_eq!(charts, p.support().len());
    }
}

#[test]
fn equal_wick_valuations_with_distinct_plucker_valuations() {
    let (u1, u2) = (data("u1.mat"), data("u2.mat"));
    assert_eq!(wick_valuation_from_rowspace(&u1).unwrap(), wick_valuation_from_rowspace(&u2).unwrap());
    let q1 = plucker_valuation_from_rowspace(&u1, GroundSet::Signed(4)).unwrap();
    let q2 = plucker_valuation_from_rowspace(&u2, GroundSet::Signed(4)).unwrap();
    let differing: Vec<Subset> = Subset::all(8).filter(|&s| q1.get(s) != q2.get(s)).collect();
    let witness = GroundSet::Signed(4).parse("343*4*").unwrap();
    // isotropy ties p_{J∖T} to p_{T*}, so 121*2* must change along with 343*4*
    let partner = GroundSet::Signed(4).parse("121*2*").unwrap();
    assert_eq!(differing, vec![partner, witness]);
    assert_eq!(q1.get(witness), TropicalValue::ZERO);
    assert_eq!(q2.get(witness), TropicalValue::Infinity);
    let cols: Vec<usize> = witness.iter().collect();
    assert_eq!(u1.select_columns(&cols).det().unwrap().terms().count(), 1);
    assert!(u2.select_columns(&cols).det().unwrap().is_zero());
}

#[test]
fn isotropic_row_spaces_give_isotropical_plucker_vectors() {
    let mut rng = common::rng(2);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let q = plucker_valuation_from_rowspace(&random_isotropic(n, &mut rng), GroundSet::Signed(n)).unwrap();
        assert!(is_tropical_plucker(&q), "{q}");
        assert!(is_isotropical(&q).unwrap(), "{q}");
    }
    for name in ["small.mat", "u1.mat", "u2.mat", "rank4.mat", "rank3.mat"] {
        let m = data(name);
        let q = plucker_valuation_from_rowspace(&m, GroundSet::Signed(m.rows())).unwrap();
        assert!(is_isotropical(&q).unwrap(), "{name}");
    }
}

fn check_cocycles_match_linear_space(m: &ScalarMatrix, seed: u64, samples: usize) {
    let n = m.rows();
    let p = wick_valuation_from_rowspace(m).unwrap();
    let q = plucker_valuation_from_rowspace(m, GroundSet::Signed(n)).unwrap();
    let members = sample_admissible(&q, seed, samples).unwrap();
    assert_eq!(members.len(), samples);
    for x in members {
        assert!(in_linear_space(&q, &x).unwrap());
        let x = SignedVector::new(n, x).unwrap();
        assert!(x.is_admissible());
        assert!(is_cocycle(&p, &x).unwrap(), "{x}");
    }
    for c in all_cocircuits(&p) {
        assert!(in_linear_space(&q, c.vector.coords()).unwrap(), "{c}");
    }
}

#[test]
fn cocycles_are_the_admissible_part_of_the_linear_space() {
    check_cocycles_match_linear_space(&data("u1.mat"), 0, 300);
    check_cocycles_match_linear_space(&data("rank4.mat"), 1, 300);
    let mut rng = common::rng(3);
    for k in 0..20 {
        let n = rng.gen_range(2..=4);
        check_cocycles_match_linear_space(&random_isotropic(n, &mut rng), k, 200);
    }
}

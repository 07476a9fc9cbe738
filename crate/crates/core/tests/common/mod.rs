//! Random instances shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropwick::realization::{plucker_valuation_from_rowspace, wick_valuation_from_rowspace};
use tropwick::{
    GroundSet, PuiseuxScalar, Rational, ScalarMatrix, Subset, TropicalPluckerVector, TropicalValue, TropicalWickVector,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `c·t^q` with `c ∈ [−3, 3]∖{0}` and `q ∈ {0, 1/2, …, 3}`, or zero with probability `zero`.
pub fn random_monomial(rng: &mut ChaCha8Rng, zero: f64) -> PuiseuxScalar {
    if rng.gen_bool(zero) {
        return PuiseuxScalar::zero();
    }
    let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    let q = Rational::new(rng.gen_range(0..=6), 2);
    PuiseuxScalar::monomial(BigRational::from_integer(BigInt::from(c)), q)
}

/// Sum of up to two random monomials, so leading terms can cancel.
pub fn random_scalar(rng: &mut ChaCha8Rng, zero: f64) -> PuiseuxScalar {
    let a = random_monomial(rng, zero);
    if rng.gen_bool(0.3) {
        &a + &random_monomial(rng, 0.0)
    } else {
        a
    }
}

pub fn random_skew(n: usize, rng: &mut ChaCha8Rng, zero: f64) -> ScalarMatrix {
    let mut a = ScalarMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = random_scalar(rng, zero);
            a.set(j, i, -&x);
            a.set(i, j, x);
        }
    }
    a
}

/// `[I | A]`, isotropic exactly when `A` is skew-symmetric.
pub fn identity_beside(a: &ScalarMatrix) -> ScalarMatrix {
    let n = a.rows();
    let mut m = ScalarMatrix::zeros(n, 2 * n);
    for i in 0..n {
        m.set(i, i, PuiseuxScalar::one());
        for j in 0..a.cols() {
            m.set(i, n + j, a.get(i, j).clone());
        }
    }
    m
}

/// The Wick valuation of a random isotropic row space.
pub fn random_wick(n: usize, rng: &mut ChaCha8Rng) -> TropicalWickVector {
    let zero = rng.gen_range(0.0..0.6);
    let m = identity_beside(&random_skew(n, rng, zero));
    let p = wick_valuation_from_rowspace(&m).expect("isotropic by construction");
    // a random twist moves the support away from always containing [n]
    let d = Subset(rng.gen_range(0..1u32 << n));
    TropicalWickVector::from_fn(n, |s| p.get(s.sym_diff(d))).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> TropicalValue {
    TropicalValue::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// Changes one finite entry to a random rational, which usually breaks the relations.
pub fn perturb(p: &TropicalWickVector, rng: &mut ChaCha8Rng) -> TropicalWickVector {
    let support = p.support();
    let target = *support.choose(rng).unwrap();
    let v = random_rational(rng);
    TropicalWickVector::from_fn(p.n(), |s| if s == target { v } else { p.get(s) }).unwrap()
}

/// Independent random rational heights on a given support.
pub fn random_heights(n: usize, support: &[Subset], rng: &mut ChaCha8Rng) -> TropicalWickVector {
    let values: Vec<(Subset, TropicalValue)> = support.iter().map(|&s| (s, random_rational(rng))).collect();
    TropicalWickVector::from_entries(n, values).unwrap()
}

/// A mix of valid, perturbed and unstructured instances.
pub fn mixed_instance(n: usize, rng: &mut ChaCha8Rng) -> TropicalWickVector {
    let p = random_wick(n, rng);
    match rng.gen_range(0..3) {
        0 => p,
        1 => perturb(&p, rng),
        _ => random_heights(n, &p.support(), rng),
    }
}

/// The Plücker valuation of a random `k × m` matrix over monomials.
pub fn random_plucker(k: usize, m: usize, rng: &mut ChaCha8Rng) -> TropicalPluckerVector {
    loop {
        let rows = (0..k).map(|_| (0..m).map(|_| random_scalar(rng, 0.3)).collect()).collect();
        let mat = ScalarMatrix::from_rows(rows).unwrap();
        if let Ok(p) = plucker_valuation_from_rowspace(&mat, GroundSet::Plain(m)) {
            return p;
        }
    }
}

/// Every vector of length `len` with entries from `values`.
pub fn grid(len: usize, values: &[TropicalValue]) -> Vec<Vec<TropicalValue>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `0, 1, ∞` heights on every subset of `[n]`, skipping the all-`∞` vector.
pub fn all_small_vectors(n: usize) -> impl Iterator<Item = TropicalWickVector> {
    let values = [TropicalValue::ZERO, TropicalValue::int(1), TropicalValue::Infinity];
    grid(1 << n, &values).into_iter().filter_map(move |v| TropicalWickVector::new(n, v).ok())
}

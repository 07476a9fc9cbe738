mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use tropwick::delta_matroid::{enumerate_even_delta_matroids, is_even_delta_matroid};
use tropwick::subdivision::is_even_dm_subdivision;
use tropwick::trop::{in_tropical_hull, is_tropically_orthogonal, tropical_combination};
use tropwick::wick::{
    all_circuits, all_cocircuits, check_wick_full, check_wick_local, cocycle_decompose, is_cocycle, wick_from_rank,
};
use tropwick::{SignedSet, SignedVector, Subset, TropicalValue, TropicalWickVector};

const INF: TropicalValue = TropicalValue::Infinity;

/// Admissible vectors in `T^J` with finite entries from `values`.
fn admissible_grid(n: usize, values: &[TropicalValue]) -> Vec<SignedVector> {
    let mut choices = vec![(INF, INF)];
    for &v in values {
        choices.push((v, INF));
        choices.push((INF, v));
    }
    let mut out = vec![SignedVector::infinite(n)];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|x| {
                choices.iter().map(move |&(a, b)| {
                    let mut y = x.clone();
                    y.set_at(i, a);
                    y.set_at(n + i, b);
                    y
                })
            })
            .collect();
    }
    out
}

fn valid_instances(n: usize, count: usize, seed: u64) -> Vec<TropicalWickVector> {
    let mut rng = common::rng(seed);
    (0..count).map(|_| common::random_wick(n, &mut rng)).collect()
}

#[test]
fn local_and_full_checks_agree_exhaustively() {
    for n in 1..=3 {
        for p in common::all_small_vectors(n) {
            assert_eq!(check_wick_full(&p), check_wick_local(&p), "{p}");
        }
    }
}

#[test]
fn local_and_full_checks_agree_on_random_instances() {
    let mut rng = common::rng(3);
    let (mut valid, mut total) = (0, 0);
    for n in [4, 5] {
        for _ in 0..1500 {
            let p = common::mixed_instance(n, &mut rng);
            let full = check_wick_full(&p);
            assert_eq!(full, check_wick_local(&p), "{p}");
            valid += full as usize;
            total += 1;
        }
    }
    // both outcomes must be well represented for the comparison to mean anything
    assert!(valid > total / 5 && valid < total * 4 / 5, "{valid} of {total} valid");
}

#[test]
fn realized_vectors_are_valid() {
    for n in 1..=5 {
        for p in valid_instances(n, 60, n as u64) {
            assert!(check_wick_full(&p), "{p}");
            assert!(is_even_delta_matroid(n, &p.support()), "{p}");
            assert!(check_wick_full(&p.dual()));
        }
    }
}

#[test]
fn valid_supports_are_even_delta_matroids() {
    for n in 1..=3 {
        for p in common::all_small_vectors(n).filter(check_wick_full) {
            assert!(is_even_delta_matroid(n, &p.support()), "{p}");
        }
    }
}

#[test]
fn rank_vectors_are_valid() {
    for n in 0..=4 {
        for m in enumerate_even_delta_matroids(n, false).unwrap() {
            let p = wick_from_rank(&m);
            assert!(check_wick_full(&p), "{m:?}");
            if m.parity() == 0 {
                let least = p.support().iter().map(|&s| p.get(s)).min().unwrap();
                let argmin: Vec<Subset> = p.support().into_iter().filter(|&s| p.get(s) == least).collect();
                assert_eq!(argmin, m.bases());
            }
        }
    }
}

#[test]
fn subdivision_certificate_agrees_with_relations() {
    let mut rng = common::rng(5);
    let heights = [TropicalValue::int(-1), TropicalValue::ZERO, TropicalValue::int(1), TropicalValue::int(2)];
    let supports = enumerate_even_delta_matroids(4, false).unwrap();
    let mut valid = 0;
    for k in 0..400 {
        let m = &supports[k % supports.len()];
        let p = TropicalWickVector::from_entries(4, m.bases().iter().map(|&b| (b, *heights.choose(&mut rng).unwrap())))
            .unwrap();
        let full = check_wick_full(&p);
        assert_eq!(is_even_dm_subdivision(&p).unwrap(), full, "{p}");
        valid += full as usize;
    }
    assert!(valid > 40 && valid < 360, "{valid}");
    for p in valid_instances(4, 100, 6) {
        assert!(is_even_dm_subdivision(&p).unwrap(), "{p}");
    }
}

#[test]
fn circuits_are_orthogonal_to_cocircuits() {
    for n in 2..=5 {
        for p in valid_instances(n, 30, 10 + n as u64) {
            let cocircuits = all_cocircuits(&p);
            for c in all_circuits(&p) {
                for k in &cocircuits {
                    assert!(is_tropically_orthogonal(&c.vector, &k.vector).unwrap(), "{p}: {c} / {k}");
                }
            }
        }
    }
}

#[test]
fn circuit_supports_are_matroid_circuits() {
    for n in 1..=4 {
        for p in valid_instances(n, 30, 20 + n as u64) {
            let m = p.support_matroid().unwrap();
            let supports = |cs: Vec<tropwick::WickCircuit>| -> Vec<SignedSet> {
                let mut v: Vec<SignedSet> = cs.iter().map(|c| c.support()).collect();
                v.sort();
                v
            };
            assert_eq!(supports(all_circuits(&p)), m.circuits(), "{p}");
            assert_eq!(supports(all_cocircuits(&p)), m.cocircuits(), "{p}");
        }
    }
}

#[test]
fn cocircuits_are_circuits_of_the_dual() {
    for p in valid_instances(4, 30, 30) {
        let vectors = |cs: Vec<tropwick::WickCircuit>| cs.into_iter().map(|c| c.vector).collect::<Vec<_>>();
        assert_eq!(vectors(all_cocircuits(&p)), vectors(all_circuits(&p.dual())));
    }
}

#[test]
fn cocycles_are_the_admissible_hull_of_cocircuits() {
    let grid = admissible_grid(4, &[TropicalValue::ZERO, TropicalValue::int(1), TropicalValue::int(2)]);
    for p in valid_instances(4, 4, 40) {
        let generators: Vec<SignedVector> = all_cocircuits(&p).into_iter().map(|c| c.vector).collect();
        for x in grid.iter().filter(|x| !x.support().is_empty()) {
            let cocycle = is_cocycle(&p, x).unwrap();
            let hull = in_tropical_hull(x, &generators).unwrap().is_some();
            assert_eq!(cocycle, hull, "{p} at {x}");
        }
    }
}

/// Random admissible combinations of cocircuits.
fn sampled_cocycles(p: &TropicalWickVector, rng: &mut rand_chacha::ChaCha8Rng, count: usize) -> Vec<SignedVector> {
    let generators: Vec<SignedVector> = all_cocircuits(p).into_iter().map(|c| c.vector).collect();
    let mut out = Vec::new();
    while out.len() < count {
        let lambdas: Vec<TropicalValue> = generators
            .iter()
            .map(|_| if rng.gen_bool(0.5) { INF } else { TropicalValue::int(rng.gen_range(-2..=2)) })
            .collect();
        let x = tropical_combination(&lambdas, &generators).unwrap();
        if x.is_admissible() && !x.support().is_empty() {
            out.push(x);
        }
    }
    out
}

#[test]
fn decomposition_reproduces_cocycles() {
    let mut rng = common::rng(50);
    for n in 2..=4 {
        for p in valid_instances(n, 10, 50 + n as u64) {
            for x in sampled_cocycles(&p, &mut rng, 10) {
                assert!(is_cocycle(&p, &x).unwrap());
                let terms = cocycle_decompose(&p, &x).unwrap();
                let (lambdas, vectors): (Vec<_>, Vec<_>) = terms.into_iter().map(|(l, c)| (l, c.vector)).unzip();
                assert_eq!(tropical_combination(&lambdas, &vectors).unwrap(), x, "{p} at {x}");
            }
        }
    }
}

#[test]
fn dual_cocycles_are_orthogonal_to_cocycles() {
    let mut rng = common::rng(60);
    let grid = admissible_grid(3, &[TropicalValue::ZERO, TropicalValue::int(1), TropicalValue::int(2)]);
    for p in valid_instances(3, 10, 61) {
        let dual = p.dual();
        let cocycles = sampled_cocycles(&p, &mut rng, 20);
        let cocircuits: Vec<SignedVector> = all_cocircuits(&p).into_iter().map(|c| c.vector).collect();
        for x in &grid {
            let dual_cocycle = is_cocycle(&dual, x).unwrap();
            let orthogonal = cocircuits.iter().all(|k| is_tropically_orthogonal(x, k).unwrap());
            assert_eq!(dual_cocycle, orthogonal, "{p} at {x}");
            if dual_cocycle {
                assert!(cocycles.iter().all(|y| is_tropically_orthogonal(x, y).unwrap()), "{p} at {x}");
            }
        }
    }
}

#[test]
fn cocycle_supports_are_cocycles_of_the_support() {
    let grid = admissible_grid(3, &[TropicalValue::ZERO, TropicalValue::int(1)]);
    for p in valid_instances(3, 20, 70) {
        let dual = p.support_matroid().unwrap().dual();
        let mut realized: Vec<SignedSet> = grid
            .iter()
            .filter(|x| !x.support().is_empty() && is_cocycle(&p, x).unwrap())
            .map(|x| x.support())
            .collect();
        realized.sort();
        realized.dedup();
        for s in &realized {
            assert!(dual.is_cycle(*s), "{p}: {s}");
        }
        let cocircuits: Vec<SignedVector> = all_cocircuits(&p).into_iter().map(|c| c.vector).collect();
        for s in SignedSet::all_admissible(3).filter(|s| !s.is_empty() && dual.is_cycle(*s)) {
            let inside: Vec<&SignedVector> = cocircuits.iter().filter(|k| k.support().is_subset_of(s)).collect();
            let x = tropical_combination(
                &vec![TropicalValue::ZERO; inside.len()],
                &inside.into_iter().cloned().collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(x.support(), s);
            assert!(is_cocycle(&p, &x).unwrap(), "{p}: {s}");
        }
    }
}

#[test]
fn twisting_preserves_validity() {
    let mut rng = common::rng(80);
    for p in valid_instances(4, 30, 81) {
        let d = Subset(rng.gen_range(0..16));
        let q = TropicalWickVector::from_fn(4, |s| p.get(s.sym_diff(d))).unwrap();
        assert!(check_wick_full(&q));
    }
}

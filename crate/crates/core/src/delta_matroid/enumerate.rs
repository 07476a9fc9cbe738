//! Exhaustive enumeration of even Δ-matroids on small ground sets, optionally
//! up to the action of signed permutations (permutations of `[n]` composed
//! with twists by subsets of `[n]`).
//!
//! A base collection on `[n]` with `n ≤ 5` fits in a `u64` whose bit `S` is
//! set iff `S` is a basis.

use std::collections::HashSet;

use super::EvenDeltaMatroid;
use crate::sets::Subset;
use crate::{scale_guard, Result};

pub const MAX_ENUMERATION_N: usize = 5;

type Collection = u64;

fn collection_bases(c: Collection) -> Vec<Subset> {
    (0..64u32).filter(|s| c >> s & 1 == 1).map(Subset).collect()
}

fn collection_of(bases: &[Subset]) -> Collection {
    bases.iter().fold(0, |acc, b| acc | 1 << b.bits())
}

fn even_exchange(c: Collection) -> bool {
    let has = |s: u32| c >> s & 1 == 1;
    let bases: Vec<u32> = (0..64u32).filter(|&s| has(s)).collect();
    for &a in &bases {
        for &b in &bases {
            let d = a ^ b;
            let mut rest = d;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let mut others = d & !x;
                let mut found = false;
                while others != 0 {
                    let y = others & others.wrapping_neg();
                    others &= others - 1;
                    if has(a ^ x ^ y) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// All signed permutations of `[n]`, each as the image table `S ↦ g(S)`.
fn group_tables(n: usize) -> Vec<Vec<u32>> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permutations(&mut current, 0, &mut perms);
    let mut tables = Vec::with_capacity(perms.len() << n);
    for perm in &perms {
        for twist in 0..1u32 << n {
            let table = (0..1u32 << n)
                .map(|s| {
                    let image = Subset::from_elements(Subset(s).iter().map(|i| perm[i]));
                    image.bits() ^ twist
                })
                .collect();
            tables.push(table);
        }
    }
    tables
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn apply(table: &[u32], c: Collection) -> Collection {
    let mut out = 0;
    let mut rest = c;
    while rest != 0 {
        let s = rest.trailing_zeros();
        rest &= rest - 1;
        out |= 1 << table[s as usize];
    }
    out
}

/// All valid base collections on `[n]`, in increasing order of their masks.
fn raw_collections(n: usize) -> Vec<Collection> {
    let mut out = Vec::new();
    for parity in 0..2 {
        let members: Vec<u32> = (0..1u32 << n).filter(|s| s.count_ones() % 2 == parity).collect();
        if members.is_empty() {
            continue;
        }
        for choice in 1..1u64 << members.len() {
            let c =
                members.iter().enumerate().filter(|(k, _)| choice >> k & 1 == 1).fold(0, |acc, (_, s)| acc | 1u64 << s);
            if even_exchange(c) {
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit representatives (minimal mask in each orbit), sorted.
fn orbit_representatives(n: usize, collections: &[Collection]) -> Vec<Collection> {
    let tables = group_tables(n);
    let mut seen: HashSet<Collection> = HashSet::new();
    let mut reps = Vec::new();
    for &c in collections {
        if seen.contains(&c) {
            continue;
        }
        let mut best = c;
        for t in &tables {
            let image = apply(t, c);
            best = best.min(image);
            seen.insert(image);
        }
        reps.push(best);
    }
    reps.sort_unstable();
    reps
}

/// Every even Δ-matroid on exactly `[n]`; with `up_to_iso`, one canonical
/// representative per signed-permutation orbit.
pub fn enumerate_even_delta_matroids(n: usize, up_to_iso: bool) -> Result<Vec<EvenDeltaMatroid>> {
    scale_guard("enumeration", n, MAX_ENUMERATION_N)?;
    let raw = raw_collections(n);
    let chosen = if up_to_iso { orbit_representatives(n, &raw) } else { raw };
    Ok(chosen.into_iter().map(|c| EvenDeltaMatroid::from_sorted(n, collection_bases(c))).collect())
}

/// Isomorphism classes of even Δ-matroids without loops or coloops on ground
/// sets of every size `0..=n`. Padding with loops identifies these with the
/// classes on exactly `[n]`, so the two counts agree.
pub fn enumerate_cumulative(n: usize) -> Result<Vec<EvenDeltaMatroid>> {
    scale_guard("enumeration", n, MAX_ENUMERATION_N)?;
    let mut out = Vec::new();
    for k in 0..=n {
        let classes = enumerate_even_delta_matroids(k, true)?;
        out.extend(classes.into_iter().filter(|m| m.loops_and_coloops().is_empty()));
    }
    Ok(out)
}

/// The lexicographically least image (by collection mask) under signed
/// permutations.
pub fn canonical_form(m: &EvenDeltaMatroid) -> Result<EvenDeltaMatroid> {
    scale_guard("canonical form", m.n(), MAX_ENUMERATION_N)?;
    let c = collection_of(m.bases());
    let best = group_tables(m.n()).iter().map(|t| apply(t, c)).min().unwrap_or(c);
    Ok(EvenDeltaMatroid::from_sorted(m.n(), collection_bases(best)))
}

//! Tropical Wick vectors (valuated even Δ-matroids), their circuits,
//! cocircuits and cocycle spaces.

use std::collections::BTreeMap;
use std::fmt;

use crate::delta_matroid::{is_even_delta_matroid, EvenDeltaMatroid};
use crate::sets::{SignedIndex, SignedSet, Subset};
use crate::trop::{
    is_tropically_orthogonal, min_achieved_twice, tropical_combination, Rational, SignedVector, TropicalValue,
};
use crate::{scale_guard, Error, Result};

/// Largest ground set stored densely.
pub const MAX_WICK_N: usize = 16;

/// A vector `p ∈ T^{2^[n]}` with nonempty support, stored densely by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalWickVector {
    n: usize,
    entries: Vec<TropicalValue>,
}

impl TropicalWickVector {
    pub fn new(n: usize, entries: Vec<TropicalValue>) -> Result<Self> {
        scale_guard("Wick vector ground set", n, MAX_WICK_N)?;
        if entries.len() != 1 << n {
            return Err(Error::DimensionMismatch { expected: 1 << n, found: entries.len() });
        }
        if entries.iter().all(|v| v.is_infinite()) {
            return Err(Error::EmptySupport);
        }
        Ok(TropicalWickVector { n, entries })
    }

    /// Entries given sparsely; absent subsets are `∞`.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Subset, TropicalValue)>) -> Result<Self> {
        scale_guard("Wick vector ground set", n, MAX_WICK_N)?;
        let mut dense = vec![TropicalValue::Infinity; 1 << n];
        for (s, v) in entries {
            if !s.is_subset_of(Subset::full(n)) {
                return Err(Error::InvalidInput(format!("{s} is not a subset of [{n}]")));
            }
            dense[s.index()] = v;
        }
        Self::new(n, dense)
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> TropicalValue) -> Result<Self> {
        scale_guard("Wick vector ground set", n, MAX_WICK_N)?;
        Self::new(n, Subset::all(n).map(f).collect())
    }

    /// The vector `p_M`: `0` on the bases of `M`, `∞` elsewhere.
    pub fn from_matroid(m: &EvenDeltaMatroid) -> Self {
        let mut entries = vec![TropicalValue::Infinity; 1 << m.n()];
        for b in m.bases() {
            entries[b.index()] = TropicalValue::ZERO;
        }
        TropicalWickVector { n: m.n(), entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: Subset) -> TropicalValue {
        self.entries[s.index()]
    }

    /// Dense entries indexed by bitmask.
    pub fn entries(&self) -> &[TropicalValue] {
        &self.entries
    }

    /// The extension `p̄`: `p̄_{S̄} = p_S`, `∞` off the transversals.
    pub fn bar(&self, t: SignedSet) -> TropicalValue {
        if t.is_transversal() {
            self.get(t.restriction())
        } else {
            TropicalValue::Infinity
        }
    }

    /// Support members in increasing bitmask order.
    pub fn support(&self) -> Vec<Subset> {
        Subset::all(self.n).filter(|s| self.get(*s).is_finite()).collect()
    }

    /// The even Δ-matroid `M_p`, if the support is one.
    pub fn support_matroid(&self) -> Result<EvenDeltaMatroid> {
        EvenDeltaMatroid::new(self.n, self.support())
    }

    /// Shift so the least finite entry is 0; returns the removed shift.
    pub fn normalized(&self) -> (Rational, Self) {
        let m = self.entries.iter().filter_map(|v| v.finite()).min().expect("nonempty support");
        let entries = self.entries.iter().map(|v| v.minus(m)).collect();
        (m, TropicalWickVector { n: self.n, entries })
    }

    /// `p*_S = p_{[n]∖S}`.
    pub fn dual(&self) -> Self {
        let full = Subset::full(self.n);
        let entries = Subset::all(self.n).map(|s| self.get(s.sym_diff(full))).collect();
        TropicalWickVector { n: self.n, entries }
    }

    /// `(c_T)_i` and `(c*_T)_i` both read `p̄_{T̄ Δ {i,i*}} = p_{T Δ e(i)}`.
    fn flip_lookup(&self, t: Subset, e: usize) -> TropicalValue {
        self.get(t.toggle(e))
    }
}

impl fmt::Display for TropicalWickVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for s in self.support() {
            writeln!(f, "{} {}", s.literal(), self.get(s))?;
        }
        Ok(())
    }
}

pub fn dual_wick(p: &TropicalWickVector) -> TropicalWickVector {
    p.dual()
}

/// Every tropical Wick relation, over all pairs `S, T`.
pub fn check_wick_full(p: &TropicalWickVector) -> bool {
    let n = p.n;
    for s in Subset::all(n) {
        for t in Subset::all(n).filter(|t| *t > s) {
            let terms = s.sym_diff(t).iter().map(|i| p.get(s.toggle(i)).times(p.get(t.toggle(i))));
            if !min_achieved_twice(terms) {
                return false;
            }
        }
    }
    true
}

/// Support is an even Δ-matroid and all 4-term relations hold.
pub fn check_wick_local(p: &TropicalWickVector) -> bool {
    let n = p.n;
    if !is_even_delta_matroid(n, &p.support()) {
        return false;
    }
    let pr = |a: Subset, b: Subset| p.get(a).times(p.get(b));
    for s in Subset::all(n) {
        let free: Vec<usize> = s.complement(n).iter().collect();
        for quad in Subset::all_of_size(free.len(), 4) {
            let q: Vec<Subset> = quad.iter().map(|k| s.union(Subset::singleton(free[k]))).collect();
            let with = |idx: &[usize]| idx.iter().fold(s, |acc, &k| acc.union(q[k]));
            let (a, b, c, d) = (0, 1, 2, 3);
            let even = [
                pr(with(&[a, b, c, d]), s),
                pr(with(&[a, b]), with(&[c, d])),
                pr(with(&[a, c]), with(&[b, d])),
                pr(with(&[a, d]), with(&[b, c])),
            ];
            let odd = [
                pr(with(&[a, b, c]), with(&[d])),
                pr(with(&[a, b, d]), with(&[c])),
                pr(with(&[a, c, d]), with(&[b])),
                pr(with(&[b, c, d]), with(&[a])),
            ];
            if !min_achieved_twice(even) || !min_achieved_twice(odd) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircuitKind {
    Circuit,
    Cocircuit,
}

/// A circuit `c_T` or cocircuit `c*_T` of a Wick vector, up to a shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WickCircuit {
    pub vector: SignedVector,
    pub kind: CircuitKind,
    /// The `T ⊆ [n]` whose extension `T̄` generated the vector.
    pub generator: Subset,
}

impl WickCircuit {
    pub fn support(&self) -> SignedSet {
        self.vector.support()
    }

    pub fn transversal(&self) -> SignedSet {
        SignedSet::extension(self.generator, self.vector.n())
    }

    /// Same circuit shifted so its least finite entry is 0.
    pub fn normalized(&self) -> WickCircuit {
        WickCircuit { vector: self.vector.normalized().1, ..self.clone() }
    }
}

impl fmt::Display for WickCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.support().literal(), self.vector)
    }
}

fn flip_vector(p: &TropicalWickVector, t: Subset, on_transversal: bool) -> SignedVector {
    let n = p.n;
    let tbar = SignedSet::extension(t, n);
    let mut v = SignedVector::infinite(n);
    for pos in 0..2 * n {
        if tbar.contains_position(pos) == on_transversal {
            v.set_at(pos, p.flip_lookup(t, pos % n));
        }
    }
    v
}

fn check_generator(p: &TropicalWickVector, t: Subset) -> Result<()> {
    if t.is_subset_of(Subset::full(p.n)) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{t} is not a subset of [{}]", p.n)))
    }
}

/// `c_T`, or `None` when its support is empty.
pub fn circuit_at(p: &TropicalWickVector, t: Subset) -> Result<Option<WickCircuit>> {
    check_generator(p, t)?;
    let v = flip_vector(p, t, true);
    Ok((!v.support().is_empty()).then_some(WickCircuit { vector: v, kind: CircuitKind::Circuit, generator: t }))
}

/// `c*_T`, or `None` when its support is empty.
pub fn cocircuit_at(p: &TropicalWickVector, t: Subset) -> Result<Option<WickCircuit>> {
    check_generator(p, t)?;
    let v = flip_vector(p, t, false);
    Ok((!v.support().is_empty()).then_some(WickCircuit { vector: v, kind: CircuitKind::Cocircuit, generator: t }))
}

fn collect_canonical(p: &TropicalWickVector, on_transversal: bool, kind: CircuitKind) -> Vec<WickCircuit> {
    let mut by_support: BTreeMap<SignedSet, WickCircuit> = BTreeMap::new();
    for t in Subset::all(p.n) {
        let v = flip_vector(p, t, on_transversal);
        let support = v.support();
        if support.is_empty() {
            continue;
        }
        by_support.entry(support).or_insert_with(|| WickCircuit { vector: v.normalized().1, kind, generator: t });
    }
    by_support.into_values().collect()
}

/// One normalized circuit per support, ordered by support bitmask.
pub fn all_circuits(p: &TropicalWickVector) -> Vec<WickCircuit> {
    collect_canonical(p, true, CircuitKind::Circuit)
}

/// One normalized cocircuit per support, ordered by support bitmask.
pub fn all_cocircuits(p: &TropicalWickVector) -> Vec<WickCircuit> {
    collect_canonical(p, false, CircuitKind::Cocircuit)
}

/// Admissible and tropically orthogonal to every circuit of `p`.
pub fn is_cocycle(p: &TropicalWickVector, x: &SignedVector) -> Result<bool> {
    if x.n() != p.n {
        return Err(Error::DimensionMismatch { expected: 2 * p.n, found: 2 * x.n() });
    }
    if !x.is_admissible() {
        return Ok(false);
    }
    for t in Subset::all(p.n) {
        if !is_tropically_orthogonal(x, &flip_vector(p, t, true))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Writes a cocycle as `⊕ λ_j ⊙ c*_j` with one cocircuit per support element,
/// following the construction that proves cocycles lie in the hull of the
/// cocircuits. Cocircuits are returned normalized; duplicates are merged.
pub fn cocycle_decompose(p: &TropicalWickVector, x: &SignedVector) -> Result<Vec<(TropicalValue, WickCircuit)>> {
    if !is_cocycle(p, x)? {
        return Err(Error::NotACocycle);
    }
    let support = x.support();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let n = p.n;
    let dual = p.dual();
    let dual_bases = dual.support();
    let mut out: Vec<(TropicalValue, WickCircuit)> = Vec::new();
    for j in support.iter() {
        let xj = x.get(j).finite().expect("support entry");
        let cocircuit = match best_dual_basis(&dual, &dual_bases, x, support, j) {
            Some(bbar) => {
                let opposite = bbar.star();
                let c_j = flip_vector(p, opposite.swap_pair(j.element).restriction(), true);
                let sums: Vec<TropicalValue> = (0..2 * n).map(|l| x.at(l).times(c_j.at(l))).collect();
                let least = *sums.iter().min().expect("nonempty");
                let jpos = j.position(n);
                let k = (0..2 * n)
                    .find(|&l| l != jpos && sums[l] == least)
                    .map(|l| SignedIndex::from_position(l, n))
                    .ok_or(Error::NotACocycle)?;
                let t = opposite.swap_pair(k.element).restriction();
                WickCircuit { vector: flip_vector(p, t, false), kind: CircuitKind::Cocircuit, generator: t }
            }
            None => singleton_cocircuit(p, j)?,
        };
        let canonical = cocircuit.normalized();
        let at_j = canonical.vector.get(j).finite().ok_or(Error::NotACocycle)?;
        let lambda = TropicalValue::Finite(xj - at_j);
        if !out.iter().any(|(l, c)| *l == lambda && c.vector == canonical.vector) {
            out.push((lambda, canonical));
        }
    }
    let (lambdas, vectors): (Vec<TropicalValue>, Vec<SignedVector>) =
        out.iter().map(|(l, c)| (*l, c.vector.clone())).unzip();
    if tropical_combination(&lambdas, &vectors)? != *x {
        return Err(Error::NotACocycle);
    }
    Ok(out)
}

/// A basis `B` of `M*` with `j ∈ B̄` maximizing `|B̄ ∩ supp x|`, then minimizing
/// `p*_B + Σ x_l` over `B̄ ∩ supp x`; ties go to the smallest `B̄` bitmask.
fn best_dual_basis(
    dual: &TropicalWickVector,
    dual_bases: &[Subset],
    x: &SignedVector,
    support: SignedSet,
    j: SignedIndex,
) -> Option<SignedSet> {
    let n = dual.n;
    dual_bases
        .iter()
        .map(|&b| SignedSet::extension(b, n))
        .filter(|bbar| bbar.contains(j))
        .map(|bbar| {
            let common = bbar.intersection(support);
            let weight = common.iter().fold(dual.bar(bbar), |acc, l| acc.times(x.get(l)));
            (std::cmp::Reverse(common.len()), weight, bbar.bits(), bbar)
        })
        .min()
        .map(|(_, _, _, bbar)| bbar)
}

fn singleton_cocircuit(p: &TropicalWickVector, j: SignedIndex) -> Result<WickCircuit> {
    let target = SignedSet::empty(p.n).insert(j);
    for t in Subset::all(p.n) {
        let v = flip_vector(p, t, false);
        if v.support() == target {
            return Ok(WickCircuit { vector: v, kind: CircuitKind::Cocircuit, generator: t });
        }
    }
    Err(Error::NotACocycle)
}

/// `p_T = −r_M(T̄)` for `|T|` even, `∞` otherwise.
pub fn wick_from_rank(m: &EvenDeltaMatroid) -> TropicalWickVector {
    let n = m.n();
    let entries = Subset::all(n)
        .map(|t| {
            if t.len() % 2 == 0 {
                let r = m.rank(SignedSet::extension(t, n)).expect("transversals are admissible");
                TropicalValue::int(-(r as i64))
            } else {
                TropicalValue::Infinity
            }
        })
        .collect();
    TropicalWickVector { n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{parse_signed_set, parse_subset};
    use crate::trop::INF;

    fn example() -> TropicalWickVector {
        let bases = ["123", "1", "2", "3"].map(|l| parse_subset(l, 3).unwrap());
        TropicalWickVector::from_matroid(&EvenDeltaMatroid::new(3, bases).unwrap())
    }

    fn v(n: usize, coords: &[TropicalValue]) -> SignedVector {
        SignedVector::new(n, coords.to_vec()).unwrap()
    }

    fn supports(cs: &[WickCircuit]) -> Vec<SignedSet> {
        let mut s: Vec<SignedSet> = cs.iter().map(|c| c.support()).collect();
        s.sort();
        s
    }

    fn signed(n: usize, lits: &[&str]) -> Vec<SignedSet> {
        let mut v: Vec<SignedSet> = lits.iter().map(|l| parse_signed_set(l, n).unwrap()).collect();
        v.sort();
        v
    }

    fn lowered_1234(h: i64) -> TropicalWickVector {
        TropicalWickVector::from_fn(4, |s| match (s.len() % 2, s.len()) {
            (0, 4) => TropicalValue::int(h),
            (0, _) => TropicalValue::ZERO,
            _ => INF,
        })
        .unwrap()
    }

    #[test]
    fn rejects_empty_support() {
        assert_eq!(TropicalWickVector::new(2, vec![INF; 4]), Err(Error::EmptySupport));
    }

    #[test]
    fn full_and_local_examples() {
        let single = TropicalWickVector::from_entries(2, [(Subset::EMPTY, TropicalValue::ZERO)]).unwrap();
        assert!(check_wick_full(&single) && check_wick_local(&single));
        let bad = lowered_1234(-1);
        assert!(!check_wick_full(&bad) && !check_wick_local(&bad));
        let rank = wick_from_rank(&example().support_matroid().unwrap());
        assert!(check_wick_full(&rank) && check_wick_local(&rank));
    }

    #[test]
    fn non_example_support_fails_local_check() {
        let p = TropicalWickVector::from_entries(
            6,
            [("123", 0), ("456", 0)].map(|(l, h)| (parse_subset(l, 6).unwrap(), TropicalValue::int(h))),
        )
        .unwrap();
        assert!(!check_wick_local(&p));
        assert!(!check_wick_full(&p));
    }

    #[test]
    fn n2_local_check_depends_only_on_support() {
        let p = TropicalWickVector::from_entries(
            2,
            [(Subset::EMPTY, TropicalValue::int(3)), (Subset::full(2), TropicalValue::ratio(-1, 2))],
        )
        .unwrap();
        assert!(check_wick_local(&p));
    }

    #[test]
    fn dual_examples() {
        let p = example();
        assert_eq!(p.dual().dual(), p);
        let expected: Vec<Subset> = ["{}", "12", "13", "23"].map(|l| parse_subset(l, 3).unwrap()).into();
        assert_eq!(p.dual().support(), expected);
        assert_eq!(p.dual().support_matroid().unwrap(), p.support_matroid().unwrap().dual());
    }

    #[test]
    fn circuit_at_examples() {
        let p = example();
        let c = circuit_at(&p, parse_subset("23", 3).unwrap()).unwrap().unwrap();
        assert_eq!(c.support(), parse_signed_set("1*23", 3).unwrap());
        assert!(c.vector.coords().iter().all(|x| x.is_infinite() || *x == TropicalValue::ZERO));
        assert!(circuit_at(&p, Subset::full(3)).unwrap().is_none());
        let z = TropicalValue::ZERO;
        let k = cocircuit_at(&p, Subset::EMPTY).unwrap().unwrap();
        assert_eq!(k.vector, v(3, &[z, z, z, INF, INF, INF]));
    }

    #[test]
    fn all_circuits_of_example() {
        let p = example();
        assert_eq!(supports(&all_circuits(&p)), signed(3, &["1*23", "12*3", "123*", "1*2*3*"]));
        assert_eq!(supports(&all_cocircuits(&p)), signed(3, &["123", "12*3*", "1*23*", "1*2*3"]));
        assert_eq!(supports(&all_cocircuits(&p)), supports(&all_circuits(&p.dual())));
    }

    #[test]
    fn circuits_and_cocircuits_are_orthogonal_in_example() {
        let p = example();
        let c = circuit_at(&p, Subset::EMPTY).unwrap().unwrap();
        let k = cocircuit_at(&p, Subset::EMPTY).unwrap().unwrap();
        assert!(is_tropically_orthogonal(&c.vector, &k.vector).unwrap());
    }

    #[test]
    fn cocycle_examples() {
        let p = example();
        for k in all_cocircuits(&p) {
            assert!(is_cocycle(&p, &k.vector).unwrap());
        }
        assert!(is_cocycle(&p, &SignedVector::infinite(3)).unwrap());
        // {1*} is independent in M* (contained in the extension of the dual basis ∅)
        let single = SignedVector::constant_on(parse_signed_set("1*", 3).unwrap(), TropicalValue::ZERO);
        assert!(!is_cocycle(&p, &single).unwrap());
        assert!(is_cocycle(&p, &SignedVector::infinite(2)).is_err());
    }

    #[test]
    fn decompose_single_cocircuit() {
        let p = example();
        for k in all_cocircuits(&p) {
            let parts = cocycle_decompose(&p, &k.vector).unwrap();
            assert_eq!(parts.len(), 1);
            assert_eq!(parts[0].0, TropicalValue::ZERO);
            assert_eq!(parts[0].1.vector, k.vector);
        }
    }

    #[test]
    fn decompose_rejects_non_cocycles() {
        let p = example();
        let single = SignedVector::constant_on(parse_signed_set("1*", 3).unwrap(), TropicalValue::ZERO);
        assert_eq!(cocycle_decompose(&p, &single), Err(Error::NotACocycle));
        assert_eq!(cocycle_decompose(&p, &SignedVector::infinite(3)), Err(Error::EmptySupport));
    }

    #[test]
    fn wick_from_rank_example() {
        let p = wick_from_rank(&example().support_matroid().unwrap());
        for s in Subset::all(3) {
            let expected = if s.len() % 2 == 0 { TropicalValue::int(-2) } else { INF };
            assert_eq!(p.get(s), expected, "{s}");
        }
    }

    #[test]
    fn wick_from_rank_single_basis() {
        let m = EvenDeltaMatroid::new(4, [parse_subset("12", 4).unwrap()]).unwrap();
        let p = wick_from_rank(&m);
        // r(T̄) counts agreements of T with {1,2} on the four coordinates
        for t in Subset::all(4).filter(|t| t.len() % 2 == 0) {
            let agree = 4 - t.sym_diff(parse_subset("12", 4).unwrap()).len();
            assert_eq!(p.get(t), TropicalValue::int(-(agree as i64)));
        }
        assert!(check_wick_full(&p));
    }
}

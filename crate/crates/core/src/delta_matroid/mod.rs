//! Even Δ-matroids: exchange axioms, duality, twists, minors, rank and
//! circuits over the signed ground set.

mod enumerate;
mod polytope;

pub use enumerate::{canonical_form, enumerate_cumulative, enumerate_even_delta_matroids, MAX_ENUMERATION_N};
pub use polytope::{has_even_delta_edges, polytope_edges, PolytopeEdge, MAX_POLYTOPE_N};

use std::fmt;

use crate::sets::{SignedIndex, SignedSet, Subset};
use crate::{scale_guard, Error, Result};

/// Largest ground set accepted by the dense basis lookup.
pub const MAX_N: usize = 16;

fn lookup_table(n: usize, bases: &[Subset]) -> Vec<bool> {
    let mut table = vec![false; 1 << n];
    for b in bases {
        table[b.index()] = true;
    }
    table
}

fn exchange_holds(bases: &[Subset], table: &[bool], distinct: bool) -> bool {
    for &a in bases {
        for &b in bases {
            let d = a.sym_diff(b);
            for x in d.iter() {
                // `b = a` means the single flip `A Δ {a}`
                let ok = d.iter().any(|y| {
                    let target = if y == x { a.toggle(x) } else { a.toggle(x).toggle(y) };
                    (!distinct || y != x) && table[target.index()]
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn in_range(n: usize, bases: &[Subset]) -> bool {
    n <= MAX_N && bases.iter().all(|b| b.is_subset_of(Subset::full(n)))
}

/// Symmetric exchange axiom (partner `b = a` allowed).
pub fn is_delta_matroid(n: usize, bases: &[Subset]) -> bool {
    if bases.is_empty() || !in_range(n, bases) {
        return false;
    }
    exchange_holds(bases, &lookup_table(n, bases), false)
}

/// Symmetric exchange axiom with `b ≠ a` enforced.
pub fn is_even_delta_matroid(n: usize, bases: &[Subset]) -> bool {
    if bases.is_empty() || !in_range(n, bases) {
        return false;
    }
    exchange_holds(bases, &lookup_table(n, bases), true)
}

/// Strong exchange: for all `A, B` and `a ∈ AΔB` some `b ≠ a` in `AΔB` makes
/// both `AΔ{a,b}` and `BΔ{a,b}` bases.
pub fn satisfies_strong_exchange(n: usize, bases: &[Subset]) -> bool {
    if bases.is_empty() || !in_range(n, bases) {
        return false;
    }
    let table = lookup_table(n, bases);
    bases.iter().all(|&a| {
        bases.iter().all(|&b| {
            let d = a.sym_diff(b);
            d.iter().all(|x| {
                d.iter().any(|y| y != x && table[a.toggle(x).toggle(y).index()] && table[b.toggle(x).toggle(y).index()])
            })
        })
    })
}

/// True iff the bases are equicardinal and satisfy the exchange axiom.
pub fn is_matroid(n: usize, bases: &[Subset]) -> bool {
    match bases.first() {
        Some(b0) => bases.iter().all(|b| b.len() == b0.len()) && is_delta_matroid(n, bases),
        None => false,
    }
}

/// Minimal subsets of `[n]` contained in no basis (classical circuits).
pub fn classical_circuits(n: usize, bases: &[Subset]) -> Vec<Subset> {
    let independent = |s: Subset| bases.iter().any(|b| s.is_subset_of(*b));
    let mut out: Vec<Subset> =
        Subset::all(n).filter(|&s| !independent(s) && s.iter().all(|x| independent(s.toggle(x)))).collect();
    out.sort();
    out
}

/// Order-preserving removal of the elements in `removed`.
pub fn squeeze(x: Subset, removed: Subset) -> Subset {
    let mut out = 0u32;
    let mut k = 0;
    for i in 0..32 {
        if removed.contains(i) {
            continue;
        }
        if x.contains(i) {
            out |= 1 << k;
        }
        k += 1;
    }
    Subset(out)
}

/// Inverse of [`squeeze`]: places the bits of `x` on the positions outside `removed`.
pub fn spread(x: Subset, removed: Subset, n: usize) -> Subset {
    let mut out = 0u32;
    let mut k = 0;
    for i in 0..n {
        if removed.contains(i) {
            continue;
        }
        if x.contains(k) {
            out |= 1 << i;
        }
        k += 1;
    }
    Subset(out)
}

/// An even Δ-matroid on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EvenDeltaMatroid {
    n: usize,
    bases: Vec<Subset>,
    table: Vec<bool>,
}

impl fmt::Debug for EvenDeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self.bases.iter().map(|b| b.literal()).collect();
        write!(f, "EvenDeltaMatroid(n={}, {{{}}})", self.n, bases.join(","))
    }
}

impl EvenDeltaMatroid {
    /// Validates the even exchange axiom.
    pub fn new(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        scale_guard("Δ-matroid ground set", n, MAX_N)?;
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort();
        bases.dedup();
        if let Some(b) = bases.iter().find(|b| !b.is_subset_of(Subset::full(n))) {
            return Err(Error::InvalidInput(format!("basis {b} is not a subset of [{n}]")));
        }
        if !is_even_delta_matroid(n, &bases) {
            return Err(Error::InvalidInput("bases violate the even symmetric exchange axiom".into()));
        }
        Ok(Self::from_sorted(n, bases))
    }

    pub(crate) fn from_sorted(n: usize, bases: Vec<Subset>) -> Self {
        let table = lookup_table(n, &bases);
        EvenDeltaMatroid { n, bases, table }
    }

    fn from_unsorted(n: usize, mut bases: Vec<Subset>) -> Self {
        bases.sort();
        bases.dedup();
        Self::from_sorted(n, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bases in increasing bitmask order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        s.index() < self.table.len() && self.table[s.index()]
    }

    /// The transversal `B̄` of every basis.
    pub fn extended_bases(&self) -> impl Iterator<Item = SignedSet> + '_ {
        self.bases.iter().map(move |&b| SignedSet::extension(b, self.n))
    }

    pub fn is_extended_basis(&self, t: SignedSet) -> bool {
        t.is_transversal() && self.is_basis(t.restriction())
    }

    /// Cardinality parity shared by all bases.
    pub fn parity(&self) -> usize {
        self.bases[0].len() % 2
    }

    pub fn dual(&self) -> Self {
        let bases = self.bases.iter().map(|b| b.complement(self.n)).collect();
        Self::from_unsorted(self.n, bases)
    }

    /// Bases `{ B Δ D }`.
    pub fn twist(&self, d: Subset) -> Self {
        let d = d.intersection(Subset::full(self.n));
        Self::from_unsorted(self.n, self.bases.iter().map(|b| b.sym_diff(d)).collect())
    }

    /// Image under a permutation `i ↦ perm[i]` of the ground set.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let bases = self.bases.iter().map(|b| Subset::from_elements(b.iter().map(|i| perm[i]))).collect();
        Self::from_unsorted(self.n, bases)
    }

    fn minor(&self, s: Subset, maximize: bool) -> Result<Self> {
        if !s.is_subset_of(Subset::full(self.n)) {
            return Err(Error::InvalidInput(format!("{s} is not a subset of [{}]", self.n)));
        }
        let sizes = self.bases.iter().map(|b| b.intersection(s).len());
        let target = if maximize { sizes.max() } else { sizes.min() }.expect("nonempty bases");
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(s).len() == target)
            .map(|&b| squeeze(b.difference(s), s))
            .collect();
        Ok(Self::from_unsorted(self.n - s.len(), bases))
    }

    /// `M / S`: bases meeting `S` maximally, with `S` stripped. The remaining
    /// elements are relabelled in increasing order (see [`squeeze`]).
    pub fn contraction(&self, s: Subset) -> Result<Self> {
        self.minor(s, true)
    }

    /// `M \ S`: bases meeting `S` minimally, with `S` stripped.
    pub fn deletion(&self, s: Subset) -> Result<Self> {
        self.minor(s, false)
    }

    /// `max_B |B̄ ∩ A|` for admissible `A`.
    pub fn rank(&self, a: SignedSet) -> Result<usize> {
        self.check_signed(a)?;
        if !a.is_admissible() {
            return Err(Error::NotAdmissible(a.literal()));
        }
        Ok(self.extended_bases().map(|b| b.intersection(a).len()).max().unwrap_or(0))
    }

    fn check_signed(&self, a: SignedSet) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch { expected: 2 * self.n, found: 2 * a.n() });
        }
        Ok(())
    }

    /// Contained in some `B̄`.
    pub fn is_independent(&self, s: SignedSet) -> bool {
        s.n() == self.n && self.extended_bases().any(|b| s.is_subset_of(b))
    }

    /// Minimal dependent admissible subsets of `J`, by increasing bitmask.
    pub fn circuits(&self) -> Vec<SignedSet> {
        let mut out: Vec<SignedSet> = SignedSet::all_admissible(self.n)
            .filter(|&s| !self.is_independent(s) && s.iter().all(|j| self.is_independent(s.remove(j))))
            .collect();
        out.sort();
        out
    }

    pub fn cocircuits(&self) -> Vec<SignedSet> {
        self.dual().circuits()
    }

    /// The unique circuit in `B̄ ∪ j`.
    pub fn fundamental_circuit(&self, basis: Subset, j: SignedIndex) -> Result<SignedSet> {
        if !self.is_basis(basis) {
            return Err(Error::InvalidInput(format!("{basis} is not a basis")));
        }
        if j.element >= self.n {
            return Err(Error::InvalidInput(format!("element {j} outside J")));
        }
        let b = SignedSet::extension(basis, self.n);
        if b.contains(j) {
            return Err(Error::InvalidInput(format!("{j} lies in the extended basis {b}")));
        }
        // B̄ Δ {j, j*, i, i*}: j* ∈ B̄ is swapped for j, then i for i*.
        let swapped = b.swap_pair(j.element);
        let mut c = SignedSet::empty(self.n).insert(j);
        for i in b.iter().filter(|i| i.element != j.element) {
            if self.is_extended_basis(swapped.swap_pair(i.element)) {
                c = c.insert(i);
            }
        }
        Ok(c)
    }

    /// Admissible and a union of circuits.
    pub fn is_cycle(&self, s: SignedSet) -> bool {
        if s.n() != self.n || !s.is_admissible() {
            return false;
        }
        let covered = self
            .circuits()
            .into_iter()
            .filter(|c| c.is_subset_of(s))
            .fold(SignedSet::empty(self.n), |acc, c| acc.union(c));
        covered == s
    }

    /// Elements lying in every basis or in none.
    pub fn loops_and_coloops(&self) -> Subset {
        let all = self.bases.iter().fold(Subset::full(self.n), |acc, b| acc.intersection(*b));
        let any = self.bases.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b));
        all.union(any.complement(self.n))
    }

    pub fn polytope_edges(&self) -> Result<Vec<PolytopeEdge>> {
        polytope_edges(self.n, &self.bases)
    }
}

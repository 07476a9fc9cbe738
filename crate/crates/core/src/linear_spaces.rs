//! Tropical Plücker vectors (valuated matroids), Plücker circuits, tropical
//! linear spaces and the isotropicality test on `J = {1..n, 1*..n*}`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::delta_matroid::is_matroid;
use crate::sets::{parse_signed_set, parse_subset, SignedSet, Subset};
use crate::trop::{combination, min_achieved_twice, orthogonal, residuated_coefficients, Rational, TropicalValue};
use crate::wick::{CircuitKind, TropicalWickVector, MAX_WICK_N};
use crate::{Error, Result};

/// Index set of a Plücker vector: `[m]`, or `J` for a given `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundSet {
    Plain(usize),
    Signed(usize),
}

impl GroundSet {
    /// Number of coordinates.
    pub fn size(self) -> usize {
        match self {
            GroundSet::Plain(m) => m,
            GroundSet::Signed(n) => 2 * n,
        }
    }

    pub fn literal(self, s: Subset) -> String {
        match self {
            GroundSet::Plain(_) => s.literal(),
            GroundSet::Signed(n) => SignedSet::from_bits(s.bits(), n).literal(),
        }
    }

    pub fn parse(self, literal: &str) -> Result<Subset> {
        match self {
            GroundSet::Plain(m) => parse_subset(literal, m),
            GroundSet::Signed(n) => parse_signed_set(literal, n).map(|s| Subset(s.bits())),
        }
    }
}

/// A tropical vector with equicardinal support on a ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalPluckerVector {
    ground: GroundSet,
    values: TropicalWickVector,
    rank: usize,
}

impl TropicalPluckerVector {
    pub fn new(ground: GroundSet, values: TropicalWickVector) -> Result<Self> {
        if values.n() != ground.size() {
            return Err(Error::DimensionMismatch { expected: ground.size(), found: values.n() });
        }
        let support = values.support();
        let rank = support[0].len();
        if support.iter().any(|s| s.len() != rank) {
            return Err(Error::InvalidInput("support is not equicardinal".into()));
        }
        Ok(TropicalPluckerVector { ground, values, rank })
    }

    pub fn from_entries(ground: GroundSet, entries: impl IntoIterator<Item = (Subset, TropicalValue)>) -> Result<Self> {
        if ground.size() > MAX_WICK_N {
            return Err(Error::ScaleGuard { what: "Plücker ground set", n: ground.size(), max: MAX_WICK_N });
        }
        Self::new(ground, TropicalWickVector::from_entries(ground.size(), entries)?)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Number of coordinates of vectors in the linear space.
    pub fn m(&self) -> usize {
        self.ground.size()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, s: Subset) -> TropicalValue {
        self.values.get(s)
    }

    pub fn support(&self) -> Vec<Subset> {
        self.values.support()
    }

    /// The underlying vector indexed by all subsets.
    pub fn as_wick(&self) -> &TropicalWickVector {
        &self.values
    }

    /// `p*_S = p_{[m]∖S}`, of rank `m − r`.
    pub fn dual(&self) -> Self {
        TropicalPluckerVector { ground: self.ground, values: self.values.dual(), rank: self.m() - self.rank }
    }

    /// Shift so the least finite entry is 0.
    pub fn normalized(&self) -> Self {
        TropicalPluckerVector { values: self.values.normalized().1, ..self.clone() }
    }
}

impl fmt::Display for TropicalPluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ground {
            GroundSet::Plain(m) => writeln!(f, "m {m}")?,
            GroundSet::Signed(n) => writeln!(f, "n {n} signed")?,
        }
        for s in self.support() {
            writeln!(f, "{} {}", self.ground.literal(s), self.get(s))?;
        }
        Ok(())
    }
}

/// All 3-term relations `p_{Sab}+p_{Scd}, p_{Sac}+p_{Sbd}, p_{Sad}+p_{Sbc}`
/// with `|S| = r − 2`.
pub fn three_term_relations_hold(p: &TropicalPluckerVector) -> bool {
    if p.rank < 2 {
        return true;
    }
    let m = p.m();
    for s in Subset::all_of_size(m, p.rank - 2) {
        let free: Vec<usize> = s.complement(m).iter().collect();
        for quad in Subset::all_of_size(free.len(), 4) {
            let e: Vec<usize> = quad.iter().map(|k| free[k]).collect();
            let with = |x: usize, y: usize| s.union(Subset::from_elements([e[x], e[y]]));
            let term = |a: Subset, b: Subset| p.get(a).times(p.get(b));
            let terms = [term(with(0, 1), with(2, 3)), term(with(0, 2), with(1, 3)), term(with(0, 3), with(1, 2))];
            if !min_achieved_twice(terms) {
                return false;
            }
        }
    }
    true
}

/// Matroid support and all 3-term relations.
pub fn is_tropical_plucker(p: &TropicalPluckerVector) -> bool {
    is_matroid(p.m(), &p.support()) && three_term_relations_hold(p)
}

/// A Plücker circuit `d_T` or cocircuit `d*_T`, up to a shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PluckerCircuit {
    pub vector: Vec<TropicalValue>,
    pub kind: CircuitKind,
    pub generator: Subset,
}

impl PluckerCircuit {
    pub fn support(&self) -> Subset {
        Subset::from_elements(self.vector.iter().enumerate().filter(|(_, v)| v.is_finite()).map(|(i, _)| i))
    }
}

fn circuit_vector(p: &TropicalPluckerVector, t: Subset, kind: CircuitKind) -> Vec<TropicalValue> {
    (0..p.m())
        .map(|i| match (kind, t.contains(i)) {
            (CircuitKind::Circuit, true) | (CircuitKind::Cocircuit, false) => p.get(t.toggle(i)),
            _ => TropicalValue::Infinity,
        })
        .collect()
}

fn generators(p: &TropicalPluckerVector, kind: CircuitKind) -> impl Iterator<Item = Subset> {
    let size = match kind {
        CircuitKind::Circuit => Some(p.rank + 1),
        CircuitKind::Cocircuit => p.rank.checked_sub(1),
    };
    let m = p.m();
    Subset::all(m).filter(move |t| Some(t.len()) == size)
}

fn canonical(p: &TropicalPluckerVector, kind: CircuitKind) -> Vec<PluckerCircuit> {
    let mut by_support: BTreeMap<Subset, PluckerCircuit> = BTreeMap::new();
    for t in generators(p, kind) {
        let v = circuit_vector(p, t, kind);
        let Some(least) = v.iter().filter_map(|x| x.finite()).min() else { continue };
        let c = PluckerCircuit { vector: v.iter().map(|x| x.minus(least)).collect(), kind, generator: t };
        by_support.entry(c.support()).or_insert(c);
    }
    by_support.into_values().collect()
}

/// `d_T` for `|T| = r + 1`, normalized, one per support.
pub fn plucker_circuits(p: &TropicalPluckerVector) -> Vec<PluckerCircuit> {
    canonical(p, CircuitKind::Circuit)
}

/// `d*_T` with `(d*_T)_i = p_{T ∪ i}` for `|T| = r − 1`, normalized, one per support.
pub fn plucker_cocircuits(p: &TropicalPluckerVector) -> Vec<PluckerCircuit> {
    canonical(p, CircuitKind::Cocircuit)
}

/// `x ∈ L_p`: tropically orthogonal to every Plücker circuit.
pub fn in_linear_space(p: &TropicalPluckerVector, x: &[TropicalValue]) -> Result<bool> {
    if x.len() != p.m() {
        return Err(Error::DimensionMismatch { expected: p.m(), found: x.len() });
    }
    for t in generators(p, CircuitKind::Circuit) {
        if !orthogonal(x, &circuit_vector(p, t, CircuitKind::Circuit))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Seeded tropical combinations of the Plücker cocircuits. Each coefficient is
/// `∞` with probability 1/3 and otherwise an integer in `[−3, 3]`; at least one
/// coefficient is finite.
pub fn sample_linear_space(p: &TropicalPluckerVector, seed: u64, count: usize) -> Vec<Vec<TropicalValue>> {
    let cocircuits: Vec<Vec<TropicalValue>> = plucker_cocircuits(p).into_iter().map(|c| c.vector).collect();
    if cocircuits.is_empty() {
        return vec![vec![TropicalValue::Infinity; p.m()]; count];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut lambdas: Vec<TropicalValue> = (0..cocircuits.len())
                .map(|_| {
                    if rng.gen_ratio(1, 3) {
                        TropicalValue::Infinity
                    } else {
                        TropicalValue::int(rng.gen_range(-3..=3))
                    }
                })
                .collect();
            if lambdas.iter().all(|l| l.is_infinite()) {
                let k = rng.gen_range(0..lambdas.len());
                lambdas[k] = TropicalValue::ZERO;
            }
            combination(&lambdas, &cocircuits).expect("matching lengths")
        })
        .collect()
}

/// Seeded admissible members of `L_p` for `p` on `J`.
///
/// A random vector `z` supported on a random transversal is projected onto
/// the hull of the cocircuits by residuation. The projection is the least
/// hull point `≥ z`, so its support stays inside that of `z`. Projections
/// with empty support are discarded; at most `50·count` attempts are made.
pub fn sample_admissible(p: &TropicalPluckerVector, seed: u64, count: usize) -> Result<Vec<Vec<TropicalValue>>> {
    let GroundSet::Signed(n) = p.ground else {
        return Err(Error::InvalidInput("admissibility needs the signed ground set J".into()));
    };
    let cocircuits: Vec<Vec<TropicalValue>> = plucker_cocircuits(p).into_iter().map(|c| c.vector).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..50 * count {
        if out.len() == count || cocircuits.is_empty() {
            break;
        }
        let mut z = vec![TropicalValue::Infinity; 2 * n];
        for i in 0..n {
            let pos = if rng.gen_bool(0.5) { i } else { n + i };
            z[pos] = TropicalValue::int(rng.gen_range(-3..=3));
        }
        let lambdas = residuated_coefficients(&z, &cocircuits)?;
        let y = combination(&lambdas, &cocircuits)?;
        if y.iter().any(|v| v.is_finite()) {
            out.push(y);
        }
    }
    Ok(out)
}

/// `p_{J∖T} = p_{T*}` for every `n`-subset `T` of `J`.
pub fn is_isotropical(p: &TropicalPluckerVector) -> Result<bool> {
    let GroundSet::Signed(n) = p.ground else {
        return Err(Error::InvalidInput("isotropicality needs the signed ground set J".into()));
    };
    if p.rank != n {
        return Err(Error::InvalidInput(format!("rank {} differs from n = {n}", p.rank)));
    }
    Ok(Subset::all_of_size(2 * n, n).all(|t| {
        let signed = SignedSet::from_bits(t.bits(), n);
        let complement = Subset(signed.complement().bits());
        let starred = Subset(signed.star().bits());
        p.get(complement) == p.get(starred)
    }))
}

/// Rebuilds a Plücker vector, up to a global shift, from its cocircuits.
///
/// Bases are the `r`-sets meeting every cocircuit support. Two bases
/// `T ∪ i`, `T ∪ j` inside the complement of a hyperplane's complement differ
/// by `d*_i − d*_j`; the basis graph is connected, so a search from the least
/// basis (value 0) fixes every entry. Inconsistent data is an error.
pub fn recover_from_cocircuits(
    ground: GroundSet,
    rank: usize,
    cocircuits: &[Vec<TropicalValue>],
) -> Result<TropicalPluckerVector> {
    let m = ground.size();
    if cocircuits.iter().any(|c| c.len() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: cocircuits.iter().map(|c| c.len()).find(|&l| l != m).unwrap_or(m),
        });
    }
    let supports: Vec<Subset> = cocircuits
        .iter()
        .map(|c| Subset::from_elements(c.iter().enumerate().filter(|(_, v)| v.is_finite()).map(|(i, _)| i)))
        .collect();
    let bases: Vec<Subset> =
        Subset::all_of_size(m, rank).filter(|b| supports.iter().all(|s| !s.intersection(*b).is_empty())).collect();
    let Some(&start) = bases.first() else {
        return Err(Error::InvalidInput("cocircuits admit no basis".into()));
    };
    let is_basis = |b: Subset| bases.binary_search(&b).is_ok();

    // edges[(a, b)] = p_b − p_a
    let mut edges: BTreeMap<Subset, Vec<(Subset, Rational)>> = BTreeMap::new();
    for (c, support) in cocircuits.iter().zip(&supports) {
        let hyperplane = support.complement(m);
        for t in Subset::all_of_size(m, rank.saturating_sub(1)).filter(|t| t.is_subset_of(hyperplane)) {
            let members: Vec<usize> = support.iter().filter(|&i| is_basis(t.union(Subset::singleton(i)))).collect();
            for &i in &members {
                for &j in &members {
                    let (Some(ci), Some(cj)) = (c[i].finite(), c[j].finite()) else { continue };
                    let a = t.union(Subset::singleton(i));
                    let b = t.union(Subset::singleton(j));
                    edges.entry(a).or_default().push((b, cj - ci));
                }
            }
        }
    }
    let mut values: BTreeMap<Subset, Rational> = BTreeMap::new();
    values.insert(start, Rational::from_integer(0));
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        let va = values[&a];
        for &(b, d) in edges.get(&a).map(|v| v.as_slice()).unwrap_or(&[]) {
            match values.get(&b) {
                Some(&vb) if vb != va + d => {
                    return Err(Error::InvalidInput("cocircuit data is inconsistent".into()));
                }
                Some(_) => {}
                None => {
                    values.insert(b, va + d);
                    queue.push_back(b);
                }
            }
        }
    }
    if values.len() != bases.len() {
        return Err(Error::InvalidInput("basis graph is disconnected".into()));
    }
    let p =
        TropicalPluckerVector::from_entries(ground, values.into_iter().map(|(s, v)| (s, TropicalValue::Finite(v))))?;
    Ok(p.normalized())
}

//! Min-plus scalars and vectors.
//!
//! `⊕ = min`, `⊙ = +`, with `∞` absorbing for `⊙` and neutral for `⊕`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedSub, Zero};

use crate::sets::{SignedIndex, SignedSet};
use crate::{Error, Result};

/// Exact rational scalar.
pub type Rational = Ratio<i64>;

/// An element of `Q ∪ {∞}`.
///
/// `Finite` sorts below `Infinity`, so the derived order is the min-plus order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalValue {
    Finite(Rational),
    Infinity,
}

pub use TropicalValue::Infinity as INF;

impl TropicalValue {
    pub const ZERO: TropicalValue = TropicalValue::Finite(Ratio::new_raw(0, 1));

    pub fn int(v: i64) -> Self {
        TropicalValue::Finite(Rational::from_integer(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        TropicalValue::Finite(Rational::new(num, den))
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, TropicalValue::Finite(_))
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        matches!(self, TropicalValue::Infinity)
    }

    pub fn finite(self) -> Option<Rational> {
        match self {
            TropicalValue::Finite(r) => Some(r),
            TropicalValue::Infinity => None,
        }
    }

    /// Tropical addition `⊕`.
    #[inline]
    pub fn plus(self, other: Self) -> Self {
        self.min(other)
    }

    /// Tropical multiplication `⊙`.
    #[inline]
    pub fn times(self, other: Self) -> Self {
        match (self, other) {
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => {
                TropicalValue::Finite(a.checked_add(&b).expect("rational overflow"))
            }
            _ => TropicalValue::Infinity,
        }
    }

    /// `self − r` for a finite shift `r`.
    pub fn minus(self, r: Rational) -> Self {
        match self {
            TropicalValue::Finite(a) => TropicalValue::Finite(a.checked_sub(&r).expect("rational overflow")),
            TropicalValue::Infinity => TropicalValue::Infinity,
        }
    }

    /// `self + r` for a finite shift `r`.
    pub fn shifted(self, r: Rational) -> Self {
        self.times(TropicalValue::Finite(r))
    }
}

impl Default for TropicalValue {
    fn default() -> Self {
        TropicalValue::Infinity
    }
}

impl From<Rational> for TropicalValue {
    fn from(r: Rational) -> Self {
        TropicalValue::Finite(r)
    }
}

impl From<i64> for TropicalValue {
    fn from(v: i64) -> Self {
        TropicalValue::int(v)
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Finite(r) => write!(f, "{r}"),
            TropicalValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for TropicalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(TropicalValue::Infinity);
        }
        parse_rational(t).map(TropicalValue::Finite)
    }
}

/// Parses `a/b` or `a`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("malformed rational '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => s.trim().parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// True iff the minimum of `values` is attained at least twice or is `∞`
/// (an empty list has minimum `∞`).
pub fn min_achieved_twice<I: IntoIterator<Item = TropicalValue>>(values: I) -> bool {
    let mut best = TropicalValue::Infinity;
    let mut count = 0usize;
    for v in values {
        if v < best {
            best = v;
            count = 1;
        } else if v == best {
            count += 1;
        }
    }
    best.is_infinite() || count >= 2
}

/// Tropical orthogonality on plain coordinate slices.
pub fn orthogonal(x: &[TropicalValue], y: &[TropicalValue]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: y.len() });
    }
    Ok(min_achieved_twice(x.iter().zip(y).map(|(a, b)| a.times(*b))))
}

/// `⊕_i λ_i ⊙ a_i` on plain coordinate slices.
pub fn combination<V: AsRef<[TropicalValue]>>(lambdas: &[TropicalValue], vectors: &[V]) -> Result<Vec<TropicalValue>> {
    if lambdas.len() != vectors.len() {
        return Err(Error::LengthMismatch { scalars: lambdas.len(), vectors: vectors.len() });
    }
    let Some(first) = vectors.first() else {
        return Err(Error::EmptyGenerators);
    };
    let dim = first.as_ref().len();
    let mut out = vec![TropicalValue::Infinity; dim];
    for (lambda, v) in lambdas.iter().zip(vectors) {
        let v = v.as_ref();
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        if lambda.is_infinite() {
            continue;
        }
        for (o, a) in out.iter_mut().zip(v) {
            *o = o.plus(lambda.times(*a));
        }
    }
    Ok(out)
}

/// Largest `λ_i` with `λ_i ⊙ a_i ≥ x` for each generator (the residuation).
pub fn residuated_coefficients<V: AsRef<[TropicalValue]>>(
    x: &[TropicalValue],
    generators: &[V],
) -> Result<Vec<TropicalValue>> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    generators
        .iter()
        .map(|a| {
            let a = a.as_ref();
            if a.len() != x.len() {
                return Err(Error::DimensionMismatch { expected: x.len(), found: a.len() });
            }
            let mut lambda: Option<Rational> = None;
            for (xj, aj) in x.iter().zip(a) {
                let Some(aj) = aj.finite() else { continue };
                let Some(xj) = xj.finite() else {
                    return Ok(TropicalValue::Infinity);
                };
                let d = xj - aj;
                lambda = Some(lambda.map_or(d, |l| l.max(d)));
            }
            Ok(lambda.map_or(TropicalValue::Infinity, TropicalValue::Finite))
        })
        .collect()
}

/// Hull membership by residuation; returns the witness coefficients on success.
pub fn hull_witness<V: AsRef<[TropicalValue]>>(
    x: &[TropicalValue],
    generators: &[V],
) -> Result<Option<Vec<TropicalValue>>> {
    let lambdas = residuated_coefficients(x, generators)?;
    let y = combination(&lambdas, generators)?;
    Ok((y == x).then_some(lambdas))
}

/// A vector in `T^J`, coordinates ordered `1..n, 1*..n*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedVector {
    n: usize,
    coords: Vec<TropicalValue>,
}

impl SignedVector {
    pub fn new(n: usize, coords: Vec<TropicalValue>) -> Result<Self> {
        if coords.len() != 2 * n {
            return Err(Error::DimensionMismatch { expected: 2 * n, found: coords.len() });
        }
        Ok(SignedVector { n, coords })
    }

    /// The all-`∞` vector.
    pub fn infinite(n: usize) -> Self {
        SignedVector { n, coords: vec![TropicalValue::Infinity; 2 * n] }
    }

    /// `value` on `support`, `∞` elsewhere.
    pub fn constant_on(support: SignedSet, value: TropicalValue) -> Self {
        let mut v = SignedVector::infinite(support.n());
        for p in support.positions() {
            v.coords[p] = value;
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[TropicalValue] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<TropicalValue> {
        self.coords
    }

    pub fn get(&self, j: SignedIndex) -> TropicalValue {
        self.coords[j.position(self.n)]
    }

    pub fn at(&self, position: usize) -> TropicalValue {
        self.coords[position]
    }

    pub fn set(&mut self, j: SignedIndex, v: TropicalValue) {
        let p = j.position(self.n);
        self.coords[p] = v;
    }

    pub fn set_at(&mut self, position: usize, v: TropicalValue) {
        self.coords[position] = v;
    }

    pub fn support(&self) -> SignedSet {
        let bits = self.coords.iter().enumerate().filter(|(_, v)| v.is_finite()).fold(0u32, |acc, (i, _)| acc | 1 << i);
        SignedSet::from_bits(bits, self.n)
    }

    pub fn is_admissible(&self) -> bool {
        self.support().is_admissible()
    }

    /// Minimum finite entry.
    pub fn min_finite(&self) -> Option<Rational> {
        self.coords.iter().filter_map(|v| v.finite()).min()
    }

    /// `λ ⊙ x` for finite `λ`.
    pub fn shifted(&self, r: Rational) -> Self {
        SignedVector { n: self.n, coords: self.coords.iter().map(|v| v.shifted(r)).collect() }
    }

    /// Shift so that the minimum finite entry is 0; returns the removed shift.
    pub fn normalized(&self) -> (Rational, Self) {
        match self.min_finite() {
            Some(m) => (m, self.shifted(-m)),
            None => (Rational::zero(), self.clone()),
        }
    }

    /// The reflection `x^r_i = x_{i*}`.
    pub fn reflection(&self) -> Self {
        let n = self.n;
        let coords = (0..2 * n).map(|p| self.coords[(p + n) % (2 * n)]).collect();
        SignedVector { n, coords }
    }
}

impl AsRef<[TropicalValue]> for SignedVector {
    fn as_ref(&self) -> &[TropicalValue] {
        &self.coords
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn is_admissible(x: &SignedVector) -> bool {
    x.is_admissible()
}

/// True iff `min_j (x_j + y_j)` is attained twice or is `∞`.
pub fn is_tropically_orthogonal(x: &SignedVector, y: &SignedVector) -> Result<bool> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch { expected: 2 * x.n, found: 2 * y.n });
    }
    orthogonal(&x.coords, &y.coords)
}

/// `⊕_i λ_i ⊙ a_i`.
pub fn tropical_combination(lambdas: &[TropicalValue], vectors: &[SignedVector]) -> Result<SignedVector> {
    let first = vectors.first().ok_or(Error::EmptyGenerators)?;
    let n = first.n;
    if let Some(bad) = vectors.iter().find(|v| v.n != n) {
        return Err(Error::DimensionMismatch { expected: 2 * n, found: 2 * bad.n });
    }
    SignedVector::new(n, combination(lambdas, vectors)?)
}

/// Decides `x ∈ tconv(generators)`; `Some(λ)` is a witness with
/// `tropical_combination(λ, generators) = x`.
pub fn in_tropical_hull(x: &SignedVector, generators: &[SignedVector]) -> Result<Option<Vec<TropicalValue>>> {
    if let Some(bad) = generators.iter().find(|v| v.n != x.n) {
        return Err(Error::DimensionMismatch { expected: 2 * x.n, found: 2 * bad.n });
    }
    hull_witness(&x.coords, generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        let coords: Vec<TropicalValue> = s.split_whitespace().map(|t| t.parse().unwrap()).collect();
        SignedVector::new(coords.len() / 2, coords).unwrap()
    }

    #[test]
    fn min_twice_examples() {
        assert!(min_achieved_twice([INF, INF, INF]));
        assert!(min_achieved_twice([0.into(), 0.into(), 3.into()]));
        assert!(!min_achieved_twice([(-1).into(), 0.into(), 0.into(), 0.into()]));
        assert!(min_achieved_twice(std::iter::empty()));
    }

    #[test]
    fn order_puts_infinity_last() {
        assert!(TropicalValue::int(1_000_000) < INF);
        assert!(TropicalValue::ratio(-1, 2) < TropicalValue::ZERO);
        assert_eq!(TropicalValue::int(3).times(INF), INF);
        assert_eq!(TropicalValue::int(3).plus(INF), TropicalValue::int(3));
    }

    #[test]
    fn parse_values() {
        assert_eq!("inf".parse::<TropicalValue>().unwrap(), INF);
        assert_eq!("-3/6".parse::<TropicalValue>().unwrap(), TropicalValue::ratio(-1, 2));
        assert!("1/0".parse::<TropicalValue>().is_err());
        assert!("x".parse::<TropicalValue>().is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let x = v("0 0 inf inf");
        assert!(is_tropically_orthogonal(&x, &x).unwrap());
        let y = v("0 inf inf inf");
        assert!(!is_tropically_orthogonal(&y, &y).unwrap());
        assert!(is_tropically_orthogonal(&x, &v("0 0")).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&SignedVector::infinite(2)));
        assert!(is_admissible(&v("0 inf inf 0")));
        assert!(!is_admissible(&v("0 inf 0 inf")));
    }

    #[test]
    fn combination_examples() {
        let u = v("0 inf inf inf");
        let w = v("inf 1 inf inf");
        assert_eq!(tropical_combination(&[0.into()], &[w.clone()]).unwrap(), w);
        assert_eq!(tropical_combination(&[INF, 0.into()], &[u.clone(), w.clone()]).unwrap(), w);
        assert_eq!(tropical_combination(&[0.into(), 0.into()], &[u, w]).unwrap(), v("0 1 inf inf"));
        assert!(tropical_combination(&[0.into()], &[]).is_err());
    }

    #[test]
    fn hull_examples() {
        let a = v("0 1 inf 2");
        let b = v("3 0 inf inf");
        assert!(in_tropical_hull(&a, &[a.clone(), b.clone()]).unwrap().is_some());
        // coordinate 1* finite but every generator is ∞ there
        assert!(in_tropical_hull(&v("0 0 0 inf"), &[a, b]).unwrap().is_none());
        assert_eq!(in_tropical_hull(&v("0 0"), &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn reflection_swaps_halves() {
        assert_eq!(v("0 1 2 3").reflection(), v("2 3 0 1"));
    }
}

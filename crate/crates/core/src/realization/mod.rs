//! Wick and Plücker coordinates of row spaces over finite Puiseux sums, and
//! their valuations.
//!
//! For an isotropic row space of an `n × 2n` matrix `M` (columns
//! `1..n, 1*..n*`), a chart `J ⊆ [n]` swaps the columns `j ↔ j*` for `j ∈ J`
//! so that the first block `B` is invertible. Then `B⁻¹M = [I | A]` with `A`
//! skew-symmetric and `w_{[n]∖S} = ±pf(A_{SΔJ})`. Signs are never computed:
//! only valuations are emitted.

mod matrix;
mod puiseux;

pub use matrix::ScalarMatrix;
pub use puiseux::PuiseuxScalar;

use crate::linear_spaces::{GroundSet, TropicalPluckerVector};
use crate::sets::Subset;
use crate::trop::{Rational, TropicalValue};
use crate::wick::TropicalWickVector;
use crate::{Error, Result};

/// The reduced form `[I | A]` of a row space in a chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    /// The elements `j` whose columns `j, j*` were swapped.
    pub swapped: Subset,
    /// `A` up to the factor `scale`: the true block is `a / scale`.
    pub a: ScalarMatrix,
    pub scale: PuiseuxScalar,
}

impl Chart {
    /// `pf(A_U)` up to the factor `scale^{|U|/2}`, as a valuation.
    pub fn pfaffian_valuation(&self, u: Subset) -> Result<TropicalValue> {
        let idx: Vec<usize> = u.iter().collect();
        let pf = self.a.pfaffian(&idx)?;
        let half = Rational::from_integer((idx.len() / 2) as i64);
        Ok(match (pf.val(), self.scale.val()) {
            (TropicalValue::Finite(v), TropicalValue::Finite(s)) => TropicalValue::Finite(v - s * half),
            _ => TropicalValue::Infinity,
        })
    }
}

fn check_shape(m: &ScalarMatrix) -> Result<usize> {
    let n = m.rows();
    if m.cols() != 2 * n {
        return Err(Error::DimensionMismatch { expected: 2 * n, found: m.cols() });
    }
    Ok(n)
}

/// `M Q Mᵀ = 0` for the form pairing coordinate `i` with `i*`.
pub fn is_isotropic(m: &ScalarMatrix) -> Result<bool> {
    if m.cols() % 2 == 1 {
        return Err(Error::InvalidInput("isotropy needs an even number of columns".into()));
    }
    let n = m.cols() / 2;
    for r in 0..m.rows() {
        for s in r..m.rows() {
            let mut acc = PuiseuxScalar::zero();
            for i in 0..n {
                acc = &acc + &(m.get(r, i) * m.get(s, n + i));
                acc = &acc + &(m.get(r, n + i) * m.get(s, i));
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff the given columns are linearly independent (some maximal minor is nonzero).
pub fn columns_independent(m: &ScalarMatrix, cols: &[usize]) -> bool {
    let k = cols.len();
    if k > m.rows() {
        return false;
    }
    Subset::all_of_size(m.rows(), k).any(|rows| {
        let rows: Vec<usize> = rows.iter().collect();
        !m.select(&rows, cols).det().expect("square").is_zero()
    })
}

fn chart_columns(n: usize, swapped: Subset) -> (Vec<usize>, Vec<usize>) {
    let first = (0..n).map(|i| if swapped.contains(i) { n + i } else { i }).collect();
    let second = (0..n).map(|i| if swapped.contains(i) { i } else { n + i }).collect();
    (first, second)
}

/// Reduces `M` in the chart given by `swapped`.
pub fn chart_with(m: &ScalarMatrix, swapped: Subset) -> Result<Chart> {
    let n = check_shape(m)?;
    if !is_isotropic(m)? {
        return Err(Error::NotIsotropic);
    }
    let (first, second) = chart_columns(n, swapped);
    let b = m.select_columns(&first);
    let c = m.select_columns(&second);
    let det = b.det()?;
    if det.is_zero() {
        return Err(Error::InvalidInput(format!("chart {} has dependent columns", swapped.literal())));
    }
    let mut adj = ScalarMatrix::zeros(n, n);
    for r in 0..n {
        for s in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&i| i != s).collect();
            let cols: Vec<usize> = (0..n).filter(|&j| j != r).collect();
            let minor = b.select(&rows, &cols).det()?;
            adj.set(r, s, if (r + s) % 2 == 0 { minor } else { -minor });
        }
    }
    let scaled = adj.mul(&c)?;
    let (a, scale) = match det.monomial_inverse() {
        Some(inv) => (scaled.scale(&inv), PuiseuxScalar::one()),
        None => (scaled, det),
    };
    if !a.is_skew() {
        return Err(Error::NotSkew);
    }
    Ok(Chart { swapped, a, scale })
}

/// Greedy chart: take column `j` unless it depends on the columns already
/// chosen, in which case take `j*`.
pub fn greedy_chart(m: &ScalarMatrix) -> Result<Chart> {
    let n = check_shape(m)?;
    if !is_isotropic(m)? {
        return Err(Error::NotIsotropic);
    }
    let mut chosen = Vec::with_capacity(n);
    let mut swapped = Subset::EMPTY;
    for j in 0..n {
        chosen.push(j);
        if columns_independent(m, &chosen) {
            continue;
        }
        chosen.pop();
        chosen.push(n + j);
        if !columns_independent(m, &chosen) {
            return Err(Error::RankDeficient(n));
        }
        swapped = swapped.union(Subset::singleton(j));
    }
    chart_with(m, swapped)
}

fn valuation_from_chart(n: usize, chart: &Chart) -> Result<TropicalWickVector> {
    let full = Subset::full(n);
    let mut entries = vec![TropicalValue::Infinity; 1 << n];
    for s in Subset::all(n) {
        let u = s.sym_diff(chart.swapped);
        if u.len() % 2 == 0 {
            entries[s.sym_diff(full).index()] = chart.pfaffian_valuation(u)?;
        }
    }
    Ok(TropicalWickVector::new(n, entries)?.normalized().1)
}

/// Valuation of the Wick vector of the row space, computed in a given chart.
/// Wick coordinates are projective; the output is shifted to minimum 0.
pub fn wick_valuation_in_chart(m: &ScalarMatrix, swapped: Subset) -> Result<TropicalWickVector> {
    let n = check_shape(m)?;
    valuation_from_chart(n, &chart_with(m, swapped)?)
}

/// Valuation of the Wick vector of an isotropic row space of full rank `n`.
pub fn wick_valuation_from_rowspace(m: &ScalarMatrix) -> Result<TropicalWickVector> {
    let n = check_shape(m)?;
    valuation_from_chart(n, &greedy_chart(m)?)
}

/// `p_S = val det(M_S)` over the `k`-subsets `S` of columns, shifted to minimum 0.
pub fn plucker_valuation_from_rowspace(m: &ScalarMatrix, ground: GroundSet) -> Result<TropicalPluckerVector> {
    if ground.size() != m.cols() {
        return Err(Error::DimensionMismatch { expected: ground.size(), found: m.cols() });
    }
    let k = m.rows();
    let mut entries = Vec::new();
    for s in Subset::all_of_size(m.cols(), k) {
        let cols: Vec<usize> = s.iter().collect();
        let v = m.select_columns(&cols).det()?.val();
        if v.is_finite() {
            entries.push((s, v));
        }
    }
    if entries.is_empty() {
        return Err(Error::RankDeficient(k));
    }
    Ok(TropicalPluckerVector::from_entries(ground, entries)?.normalized())
}

/// Recovering the row space from its Wick vector needs sign conventions that
/// are not fixed here; this always reports [`Error::Unimplemented`].
pub fn recover_constraints(_p: &TropicalWickVector) -> Result<ScalarMatrix> {
    Err(Error::Unimplemented("recovering the row space needs classical signs"))
}

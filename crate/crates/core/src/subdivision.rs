//! Regular subdivisions of `conv{ e_S : S ∈ supp p }` induced by the heights
//! `p_S`, computed from the lower hull of the lifted points `(e_S, p_S)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::delta_matroid::is_even_delta_matroid;
use crate::linalg::{independent_rows, solve};
use crate::sets::Subset;
use crate::trop::Rational;
use crate::wick::TropicalWickVector;
use crate::{scale_guard, Error, Result};

pub const MAX_SUBDIVISION_N: usize = 5;

/// A lower face: the subsets minimizing `p_R + Σ_{j∈R} v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubdivisionCell {
    /// Vertices in increasing bitmask order.
    pub vertices: Vec<Subset>,
    /// The `v` of the certifying functional `(v, 1)`.
    pub functional: Vec<BigRational>,
}

impl fmt::Display for SubdivisionCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|s| s.literal()).collect();
        let v: Vec<String> = self.functional.iter().map(|x| x.to_string()).collect();
        write!(f, "{} | v = ({})", vs.join(" "), v.join(", "))
    }
}

pub fn to_big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

struct Lifted {
    n: usize,
    points: Vec<Subset>,
    heights: Vec<BigRational>,
}

impl Lifted {
    fn new(p: &TropicalWickVector) -> Self {
        let points = p.support();
        let heights = points.iter().map(|s| to_big(p.get(*s).finite().expect("support"))).collect();
        Lifted { n: p.n(), points, heights }
    }

    fn value(&self, k: usize, v: &[BigRational]) -> BigRational {
        self.points[k].iter().fold(self.heights[k].clone(), |acc, j| acc + &v[j])
    }

    fn argmin(&self, v: &[BigRational]) -> Vec<Subset> {
        let values: Vec<BigRational> = (0..self.points.len()).map(|k| self.value(k, v)).collect();
        let least = values.iter().min().expect("nonempty support").clone();
        (0..self.points.len()).filter(|&k| values[k] == least).map(|k| self.points[k]).collect()
    }

    fn coords(&self, s: Subset) -> Vec<BigRational> {
        (0..self.n).map(|i| BigRational::from_integer(BigInt::from(s.contains(i) as i64))).collect()
    }

    fn diff(&self, a: Subset, b: Subset) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| BigRational::from_integer(BigInt::from(a.contains(i) as i64 - b.contains(i) as i64)))
            .collect()
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The cell selected by the functional `(v, 1)`.
pub fn cell_at(p: &TropicalWickVector, v: &[BigRational]) -> Result<SubdivisionCell> {
    if v.len() != p.n() {
        return Err(Error::DimensionMismatch { expected: p.n(), found: v.len() });
    }
    let lifted = Lifted::new(p);
    Ok(SubdivisionCell { vertices: lifted.argmin(v), functional: v.to_vec() })
}

fn for_each_combination(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, m: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..=m - (k - acc.len()) {
            acc.push(i);
            go(i + 1, m, k, acc, f);
            acc.pop();
        }
    }
    if k <= m {
        go(0, m, k, &mut Vec::with_capacity(k), f);
    }
}

/// The maximal cells of the regular subdivision, by brute-force lower hull.
///
/// Every affinely spanning `(d+1)`-subset of the lifted points determines a
/// unique hyperplane whose normal `v` lies in the direction space of the
/// support; it is kept when no lifted point lies below it.
pub fn maximal_cells(p: &TropicalWickVector) -> Result<Vec<SubdivisionCell>> {
    scale_guard("subdivision", p.n(), MAX_SUBDIVISION_N)?;
    let lifted = Lifted::new(p);
    let pts = &lifted.points;
    let base = pts[0];
    let diffs: Vec<Vec<BigRational>> = pts.iter().map(|&s| lifted.diff(s, base)).collect();
    let basis: Vec<Vec<BigRational>> = independent_rows(&diffs).into_iter().map(|k| diffs[k].clone()).collect();
    let d = basis.len();
    if d == 0 {
        let zero = vec![BigRational::zero(); p.n()];
        return Ok(vec![SubdivisionCell { vertices: pts.clone(), functional: zero }]);
    }

    let mut found: BTreeSet<Vec<Subset>> = BTreeSet::new();
    let mut cells = Vec::new();
    for_each_combination(pts.len(), d + 1, &mut |idx| {
        let chosen: Vec<Subset> = idx.iter().map(|&k| pts[k]).collect();
        if found.iter().any(|cell| chosen.iter().all(|s| cell.binary_search(s).is_ok())) {
            return;
        }
        let anchor = idx[0];
        let rows: Vec<Vec<BigRational>> = idx[1..]
            .iter()
            .map(|&k| {
                let delta = lifted.diff(pts[k], pts[anchor]);
                basis.iter().map(|b| dot(&delta, b)).collect()
            })
            .collect();
        let rhs: Vec<BigRational> = idx[1..].iter().map(|&k| &lifted.heights[anchor] - &lifted.heights[k]).collect();
        let Some(alpha) = solve(&rows, &rhs) else { return };
        let v: Vec<BigRational> = (0..p.n()).map(|i| basis.iter().zip(&alpha).map(|(b, a)| &b[i] * a).sum()).collect();
        let level = lifted.heights[anchor].clone() + dot(&lifted.coords(pts[anchor]), &v);
        if (0..pts.len()).any(|k| lifted.value(k, &v) < level) {
            return;
        }
        let vertices = lifted.argmin(&v);
        if found.insert(vertices.clone()) {
            cells.push(SubdivisionCell { vertices, functional: v });
        }
    });
    cells.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(cells)
}

/// True iff the support and every maximal cell are even Δ-matroids.
pub fn is_even_dm_subdivision(p: &TropicalWickVector) -> Result<bool> {
    scale_guard("subdivision", p.n(), MAX_SUBDIVISION_N)?;
    if !is_even_delta_matroid(p.n(), &p.support()) {
        return Ok(false);
    }
    Ok(maximal_cells(p)?.iter().all(|c| is_even_delta_matroid(p.n(), &c.vertices)))
}

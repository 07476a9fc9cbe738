//! Edges of the polytope `conv{ e_B : B a basis }`, certified by exact LP.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lp::{maximize, LpOutcome};
use crate::sets::Subset;
use crate::{scale_guard, Result};

pub const MAX_POLYTOPE_N: usize = 6;

/// An edge between the vertices `e_from` and `e_to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolytopeEdge {
    pub from: Subset,
    pub to: Subset,
}

impl PolytopeEdge {
    /// `e_to − e_from` as a vector over `[n]`.
    pub fn direction(&self, n: usize) -> Vec<i32> {
        (0..n).map(|i| self.to.contains(i) as i32 - self.from.contains(i) as i32).collect()
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `(u, v)` span an edge iff the midpoint admits no convex representation
/// putting positive weight on other vertices.
fn is_edge(n: usize, vertices: &[Subset], u: Subset, v: Subset) -> bool {
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| vertices.iter().map(|w| q(w.contains(i) as i64)).collect()).collect();
    a.push(vec![BigRational::one(); vertices.len()]);
    let half = BigRational::new(1.into(), 2.into());
    let mut b: Vec<BigRational> = (0..n).map(|i| q(u.contains(i) as i64 + v.contains(i) as i64) * &half).collect();
    b.push(BigRational::one());
    let c: Vec<BigRational> =
        vertices.iter().map(|&w| if w == u || w == v { BigRational::zero() } else { BigRational::one() }).collect();
    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        other => unreachable!("midpoint LP is feasible and bounded: {other:?}"),
    }
}

/// All edges of the 0/1 polytope with the given vertices, `from < to`.
pub fn polytope_edges(n: usize, vertices: &[Subset]) -> Result<Vec<PolytopeEdge>> {
    scale_guard("polytope edges", n, MAX_POLYTOPE_N)?;
    let mut vs = vertices.to_vec();
    vs.sort();
    vs.dedup();
    let mut out = Vec::new();
    for (k, &u) in vs.iter().enumerate() {
        for &v in &vs[k + 1..] {
            if is_edge(n, &vs, u, v) {
                out.push(PolytopeEdge { from: u, to: v });
            }
        }
    }
    Ok(out)
}

/// True iff every edge direction has the form `±e_i ± e_j` with `i ≠ j`.
pub fn has_even_delta_edges(n: usize, vertices: &[Subset]) -> Result<bool> {
    Ok(polytope_edges(n, vertices)?.iter().all(|e| e.from.sym_diff(e.to).len() == 2))
}

//! Exact dense simplex over `BigRational`.
//!
//! Solves `maximize c·x subject to A x = b, x ≥ 0` with the two-phase method
//! and Bland's rule, so it always terminates.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: BigRational, x: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = col;
    }

    /// Minimizes `cost · x` over the columns in `allowed`. Returns false when unbounded.
    fn minimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_negative()
            });
            let Some(col) = entering else { return true };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }

    fn solution(&self, vars: usize) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < vars {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let vars = c.len();
    assert_eq!(b.len(), m, "right-hand side length");
    assert!(a.iter().all(|r| r.len() == vars), "constraint row length");
    let width = vars + m;
    let rows = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let sign = |v: &BigRational| if flip { -v } else { v.clone() };
            let mut row: Vec<BigRational> = a[i].iter().map(sign).collect();
            row.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            row.push(sign(&b[i]));
            row
        })
        .collect();
    let mut t = Tableau { rows, basis: (vars..width).collect(), width };

    let phase1: Vec<BigRational> =
        (0..width).map(|j| if j >= vars { BigRational::one() } else { BigRational::zero() }).collect();
    t.minimize(&phase1, &vec![true; width]);
    let infeasibility: BigRational = (0..m).filter(|&i| t.basis[i] >= vars).map(|i| t.rhs(i).clone()).sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= vars {
            match (0..vars).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let cost: Vec<BigRational> = (0..width).map(|j| if j < vars { -&c[j] } else { BigRational::zero() }).collect();
    let allowed: Vec<bool> = (0..width).map(|j| j < vars).collect();
    if !t.minimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let x = t.solution(vars);
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { value, x }
}

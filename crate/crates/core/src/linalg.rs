//! Gaussian elimination over `BigRational`.

use num_rational::BigRational;
use num_traits::Zero;

/// Row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for k in c..cols {
                let d = &f * &rows[r][k];
                rows[i][k] -= d;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    echelon(&mut rows.to_vec()).len()
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_rows(rows: &[Vec<BigRational>]) -> Vec<usize> {
    let mut chosen: Vec<Vec<BigRational>> = Vec::new();
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        chosen.push(row.clone());
        if rank(&chosen) == chosen.len() {
            out.push(i);
        } else {
            chosen.pop();
        }
    }
    out
}

/// The unique solution of the square system `a x = b`, or `None` if singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.len() != n || pivots.last().is_some_and(|&c| c >= n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut s = m[i][n].clone();
        for k in i + 1..n {
            s -= &m[i][k] * &x[k];
        }
        x[i] = s / &m[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(4.into(), 5.into()), BigRational::new(7.into(), 5.into())]);
        let singular = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&singular), 1);
        assert!(solve(&singular, &[q(1), q(1)]).is_none());
        assert_eq!(independent_rows(&[vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]]), vec![0, 2]);
    }
}

//! Dense matrices over [`PuiseuxScalar`] with division-free determinants and
//! Pfaffians.

use std::collections::HashMap;
use std::fmt;

use super::PuiseuxScalar;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<PuiseuxScalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, data: vec![PuiseuxScalar::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<PuiseuxScalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        let n = rows.len();
        Ok(ScalarMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| PuiseuxScalar::integer(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &PuiseuxScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: PuiseuxScalar) {
        self.data[r * self.cols + c] = v;
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone())).collect();
        ScalarMatrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        self.select(&(0..self.rows).collect::<Vec<_>>(), cols)
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = PuiseuxScalar::zero();
                for k in 0..self.cols {
                    if !self.get(i, k).is_zero() && !other.get(k, j).is_zero() {
                        acc = &acc + &(self.get(i, k) * other.get(k, j));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &PuiseuxScalar) -> Self {
        ScalarMatrix { data: self.data.iter().map(|v| v * s).collect(), ..self.clone() }
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Determinant by dynamic programming over the set of used columns.
    pub fn det(&self) -> Result<PuiseuxScalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        if n > 20 {
            return Err(Error::ScaleGuard { what: "determinant", n, max: 20 });
        }
        let mut f = vec![PuiseuxScalar::zero(); 1 << n];
        f[0] = PuiseuxScalar::one();
        for mask in 0usize..1 << n {
            if f[mask].is_zero() {
                continue;
            }
            let r = mask.count_ones() as usize;
            if r == n {
                continue;
            }
            for c in (0..n).filter(|c| mask >> c & 1 == 0) {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                let term = a * &f[mask];
                let inversions = (mask >> (c + 1)).count_ones();
                let next = mask | 1 << c;
                f[next] = if inversions % 2 == 0 { &f[next] + &term } else { &f[next] - &term };
            }
        }
        Ok(f[(1 << n) - 1].clone())
    }

    /// Pfaffian of the principal submatrix on `indices`, expanded along the
    /// first row. Odd size gives zero; the empty Pfaffian is one.
    pub fn pfaffian(&self, indices: &[usize]) -> Result<PuiseuxScalar> {
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.rows) {
            return Err(Error::InvalidInput(format!("index {} outside the matrix", bad + 1)));
        }
        if indices.len() % 2 == 1 {
            return Ok(PuiseuxScalar::zero());
        }
        let mut memo = HashMap::new();
        Ok(self.pf_rec(indices, (1u64 << indices.len()) - 1, &mut memo))
    }

    fn pf_rec(&self, idx: &[usize], mask: u64, memo: &mut HashMap<u64, PuiseuxScalar>) -> PuiseuxScalar {
        if mask == 0 {
            return PuiseuxScalar::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut out = PuiseuxScalar::zero();
        for (k, j) in (0..idx.len()).filter(|j| rest >> j & 1 == 1).enumerate() {
            let a = self.get(idx[first], idx[j]);
            if a.is_zero() {
                continue;
            }
            let term = a * &self.pf_rec(idx, rest & !(1 << j), memo);
            out = if k % 2 == 0 { &out + &term } else { &out - &term };
        }
        memo.insert(mask, out.clone());
        out
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join("  "))?;
        }
        Ok(())
    }
}

//! Exact linear algebra over F_p: small dense matrices and a sparse echelon
//! form used by the brute-force solution search.

use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        FpMatrix {
            field,
            rows: vec![vec![0; ncols]; nrows],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut out = Self::zeros(field, n, n);
        for i in 0..n {
            out.rows[i][i] = 1;
        }
        out
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u32>>) -> Self {
        let p = field.modulus();
        FpMatrix {
            field,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| v % p).collect())
                .collect(),
        }
    }

    pub fn from_signed(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        FpMatrix {
            field,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&v| field.reduce(v)).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.rows[i][j] = v % self.field.modulus();
    }

    pub fn entry(&self, i: usize, j: usize) -> FpScalar {
        self.field.elem(self.rows[i][j] as i64)
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        let f = self.field;
        let (n, k, m) = (self.nrows(), self.ncols(), other.ncols());
        let mut out = FpMatrix::zeros(f, n, m);
        for i in 0..n {
            for t in 0..k {
                let a = self.rows[i][t];
                if a == 0 {
                    continue;
                }
                for j in 0..m {
                    out.rows[i][j] = f.add(out.rows[i][j], f.mul(a, other.rows[t][j]));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a, x))))
            .collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.field, self.ncols(), self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.rows[j][i] = v;
            }
        }
        out
    }

    pub fn trace(&self) -> FpScalar {
        let f = self.field;
        let t = (0..self.nrows()).fold(0, |acc, i| f.add(acc, self.rows[i][i]));
        f.elem(t as i64)
    }

    /// Determinant by elimination.
    pub fn det(&self) -> FpScalar {
        let f = self.field;
        let n = self.nrows();
        assert_eq!(n, self.ncols(), "determinant of a non-square matrix");
        let mut a = self.rows.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
                return f.zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = f.neg(det);
            }
            det = f.mul(det, a[col][col]);
            let inv = f.inv(a[col][col]).expect("nonzero pivot");
            let (top, bottom) = a.split_at_mut(col + 1);
            let pivot = &top[col];
            for row in bottom {
                let factor = f.mul(row[col], inv);
                if factor == 0 {
                    continue;
                }
                for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        f.elem(det as i64)
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[u32]) -> Result<Vec<u32>> {
        let f = self.field;
        let n = self.nrows();
        if n != self.ncols() || b.len() != n {
            return Err(Error::Index("dimension mismatch in solve".into()));
        }
        let mut a: Vec<Vec<u32>> = self
            .rows
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                let mut r = row.clone();
                r.push(bi % f.modulus());
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a[r][col] != 0)
                .ok_or_else(|| Error::Precondition("singular matrix".into()))?;
            a.swap(piv, col);
            let inv = f.inv(a[col][col])?;
            for x in &mut a[col][col..] {
                *x = f.mul(*x, inv);
            }
            let pivot = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                let factor = row[col];
                if r != col && factor != 0 {
                    for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
        }
        Ok(a.into_iter().map(|r| r[n]).collect())
    }
}

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(u32, u32)>;

/// Row echelon form built one row at a time. Each stored row is monic at its
/// leading column and is only reduced at its leading entries.
pub struct SparseEchelon {
    field: PrimeField,
    ncols: usize,
    pivots: Vec<Option<SparseRow>>,
    rank: usize,
}

impl SparseEchelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        SparseEchelon {
            field,
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.ncols
    }

    /// Reduces `row` against the stored pivots and keeps it if it is new.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        let f = self.field;
        let mut scratch = SparseRow::new();
        loop {
            let Some(&(lead, val)) = row.first() else {
                return false;
            };
            match &self.pivots[lead as usize] {
                Some(piv) => {
                    // row -= val * piv, and piv is monic at `lead`.
                    scratch.clear();
                    axpy_merge(f, &row, piv, f.neg(val), &mut scratch);
                    std::mem::swap(&mut row, &mut scratch);
                }
                None => {
                    let inv = f.inv(val).expect("nonzero");
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                    self.pivots[lead as usize] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }

    /// Basis of the right kernel in reduced form: one vector per free column
    /// `c`, with a 1 at `c` and 0 at every other free column.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivots[c].is_none()).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0u32; self.ncols];
                x[fc] = 1;
                for c in (0..self.ncols).rev() {
                    if let Some(row) = &self.pivots[c] {
                        let s = row[1..]
                            .iter()
                            .fold(0, |acc, &(k, v)| f.add(acc, f.mul(v, x[k as usize])));
                        x[c] = f.neg(s);
                    }
                }
                x
            })
            .collect()
    }
}

fn axpy_merge(f: PrimeField, a: &[(u32, u32)], b: &[(u32, u32)], s: u32, out: &mut SparseRow) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ca, va) = a[i];
        let (cb, vb) = b[j];
        if ca < cb {
            out.push((ca, va));
            i += 1;
        } else if cb < ca {
            out.push((cb, f.mul(s, vb)));
            j += 1;
        } else {
            let v = f.add(va, f.mul(s, vb));
            if v != 0 {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(c, v)| (c, f.mul(s, v))));
}

/// Row-reduces a list of dense vectors; returns the reduced rows (nonzero,
/// monic at distinct pivot columns, fully reduced) in pivot order.
pub fn rref(field: PrimeField, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let f = field;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (row, &pc) in rows.iter().zip(&pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let inv = f.inv(v[pc]).expect("nonzero");
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            for row in rows.iter_mut() {
                let c = row[pc];
                if c != 0 {
                    for (x, &y) in row.iter_mut().zip(&v) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            rows.push(v);
            pivots.push(pc);
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    order.into_iter().map(|i| rows[i].clone()).collect()
}

pub fn rank(field: PrimeField, vectors: &[Vec<u32>]) -> usize {
    rref(field, vectors).len()
}

//! Exact integer matrices, Smith normal form, and linear systems over `Z`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Dense matrix over `Z` with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Result of [`IntegerMatrix::smith_normal_form`]: `left · M · right` is
/// diagonal with a divisibility chain, and both transforms are unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds from explicit rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<IntegerMatrix> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        let nrows = rows.len();
        Ok(IntegerMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[&[i64]], cols: usize) -> Result<IntegerMatrix> {
        IntegerMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.entry(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.entry(k, j);
                    let cur = out.entry(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * self.entry(src, j);
            let cur = self.entry(dst, j) + add;
            self.set(dst, j, cur);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * self.entry(i, src);
            let cur = self.entry(i, dst) + add;
            self.set(i, dst, cur);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.entry(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Smith normal form via elementary row/column operations with minimal
    /// pivot selection; exact at every step.
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let mut a = self.clone();
        let mut left = IntegerMatrix::identity(self.rows);
        let mut right = IntegerMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);

        for t in 0..n {
            'stage: loop {
                // Minimal nonzero entry of the trailing submatrix becomes the pivot.
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..a.rows {
                    for j in t..a.cols {
                        if !a.entry(i, j).is_zero()
                            && pivot
                                .map(|(pi, pj)| a.entry(i, j).abs() < a.entry(pi, pj).abs())
                                .unwrap_or(true)
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else { break 'stage };
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);

                // Shrink any entry of row/column t not divisible by the pivot.
                let mut shrunk = false;
                for i in t + 1..a.rows {
                    if (a.entry(i, t) % a.entry(t, t)).is_zero() {
                        continue;
                    }
                    let q = -(a.entry(i, t) / a.entry(t, t));
                    a.add_row_multiple(i, t, &q);
                    left.add_row_multiple(i, t, &q);
                    shrunk = true;
                }
                for j in t + 1..a.cols {
                    if (a.entry(t, j) % a.entry(t, t)).is_zero() {
                        continue;
                    }
                    let q = -(a.entry(t, j) / a.entry(t, t));
                    a.add_col_multiple(j, t, &q);
                    right.add_col_multiple(j, t, &q);
                    shrunk = true;
                }
                if shrunk {
                    continue 'stage;
                }

                // Everything divides: clear row and column t exactly.
                for i in t + 1..a.rows {
                    if a.entry(i, t).is_zero() {
                        continue;
                    }
                    let q = -(a.entry(i, t) / a.entry(t, t));
                    a.add_row_multiple(i, t, &q);
                    left.add_row_multiple(i, t, &q);
                }
                for j in t + 1..a.cols {
                    if a.entry(t, j).is_zero() {
                        continue;
                    }
                    let q = -(a.entry(t, j) / a.entry(t, t));
                    a.add_col_multiple(j, t, &q);
                    right.add_col_multiple(j, t, &q);
                }

                // Divisibility chain: the pivot must divide the whole
                // trailing submatrix; fold an offending row in and retry.
                for i in t + 1..a.rows {
                    for j in t + 1..a.cols {
                        if !(a.entry(i, j) % a.entry(t, t)).is_zero() {
                            let one = BigInt::from(1);
                            a.add_row_multiple(t, i, &one);
                            left.add_row_multiple(t, i, &one);
                            continue 'stage;
                        }
                    }
                }
                break 'stage;
            }

            if a.entry(t, t).is_negative() {
                a.negate_row(t);
                left.negate_row(t);
            }
        }

        let diagonal = (0..n).map(|t| a.entry(t, t).clone()).collect();
        SmithDecomposition {
            diagonal,
            left,
            right,
        }
    }

    /// Rank over `Q` (count of nonzero invariant factors).
    pub fn rank(&self) -> usize {
        self.smith_normal_form()
            .diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }

    /// Solves `self · x = rhs` over the integers; `None` when no integral
    /// solution exists.
    pub fn solve(&self, rhs: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let snf = self.smith_normal_form();
        let c = snf.left.apply(rhs)?;
        let mut y = vec![BigInt::ZERO; self.cols];
        for (i, ci) in c.iter().enumerate() {
            let d = snf.diagonal.get(i).cloned().unwrap_or(BigInt::ZERO);
            if d.is_zero() {
                if !ci.is_zero() {
                    return Ok(None);
                }
            } else if (ci % &d).is_zero() {
                y[i] = ci / &d;
            } else {
                return Ok(None);
            }
        }
        Ok(Some(snf.right.apply(&y)?))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut a = self.clone();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a.entry(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.entry(i, k).is_zero()) else {
                    return Ok(BigInt::ZERO);
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.entry(i, j) * a.entry(k, k) - a.entry(i, k) * a.entry(k, j);
                    a.set(i, j, num / &prev);
                }
                a.set(i, k, BigInt::ZERO);
            }
            prev = a.entry(k, k).clone();
        }
        Ok(sign * a.entry(n - 1, n - 1))
    }
}

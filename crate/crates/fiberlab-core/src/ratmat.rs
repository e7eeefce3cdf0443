//! Exact linear algebra over `Q`: row reduction, null spaces, solving,
//! eigenspace dimensions.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::intmat::IntegerMatrix;
use crate::{Error, Result};

/// Dense matrix over `Q`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<RationalMatrix> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        let nrows = rows.len();
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer(m: &IntegerMatrix) -> RationalMatrix {
        let rows = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|e| BigRational::from(e.clone()))
                    .collect()
            })
            .collect();
        RationalMatrix::from_rows(rows, m.cols()).expect("rows are uniform")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
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

    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
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

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.entry(i, c).is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                a.entries.swap(r * a.cols + j, p * a.cols + j);
            }
            let inv = a.entry(r, c).recip();
            for j in 0..a.cols {
                let v = a.entry(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.entry(i, c).is_zero() {
                    continue;
                }
                let f = a.entry(i, c).clone();
                for j in 0..a.cols {
                    let v = a.entry(i, j) - &f * a.entry(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right null space `{x : self · x = 0}`, one
    /// vector per free column in ascending column order.
    pub fn null_space_basis(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.entry(row, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self · x = rhs` (free variables set to 0),
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for (i, tail) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.entry(i, j).clone());
            }
            aug.set(i, self.cols, tail.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.entry(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Dimension of the λ-eigenspace of a square matrix.
    pub fn eigenspace_dim(&self, lambda: &BigRational) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut shifted = self.clone();
        for i in 0..self.rows {
            let v = shifted.entry(i, i) - lambda;
            shifted.set(i, i, v);
        }
        Ok(self.cols - shifted.rank())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.entry(i, j).is_one()
                    } else {
                        self.entry(i, j).is_zero()
                    }
                })
            })
    }
}

/// Parses an exact rational from `"p/q"` or integer text.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: alloc::string::String::from(message),
    };
    let parse_int = |s: &str, at: usize| -> Result<BigInt> {
        if s.is_empty() || s == "-" || s == "+" {
            return Err(err(at, "expected an integer"));
        }
        let mut chars = s.chars();
        let first = chars.next().expect("nonempty");
        if !(first.is_ascii_digit() || first == '-' || first == '+')
            || !chars.all(|c| c.is_ascii_digit())
        {
            return Err(err(at, "expected an integer"));
        }
        s.parse::<BigInt>().map_err(|_| err(at, "bad integer"))
    };
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let n = parse_int(num.trim(), 0)?;
            let d = parse_int(den.trim(), num.len() + 1)?;
            if d.is_zero() {
                return Err(err(num.len() + 1, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from(parse_int(text, 0)?)),
    }
}

/// Renders an exact rational as `"p/q"`, or `"p"` for integers.
pub fn rational_to_text(value: &BigRational) -> alloc::string::String {
    if value.denom().is_one() {
        alloc::format!("{}", value.numer())
    } else {
        alloc::format!("{}/{}", value.numer(), value.denom())
    }
}

//! Dense matrices over [`NovikovScalar`], the carrier for differentials.

use alloc::vec::Vec;
use core::fmt;

use crate::Rat;

use super::novikov::NovikovScalar;

/// Rows × cols matrix with Novikov-scalar entries. Dimensions are fixed at
/// construction; columns are read as images of basis vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<NovikovScalar>,
}

impl ScalarMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: alloc::vec![NovikovScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, NovikovScalar::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<NovikovScalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        ScalarMatrix {
            rows,
            cols,
            data: entries,
        }
    }

    /// Builds a matrix from `(row, col, scalar)` triples, summing repeats.
    pub fn from_triples<I>(rows: usize, cols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, NovikovScalar)>,
    {
        let mut m = Self::zero(rows, cols);
        for (i, j, s) in triples {
            let cur = m.get(i, j).add(&s);
            m.set(i, j, cur);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NovikovScalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: NovikovScalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(NovikovScalar::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor · row[src]`.
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &NovikovScalar) {
        for j in 0..self.cols {
            let term = self.get(src, j).mul(factor);
            let sum = self.get(dst, j).add(&term);
            self.set(dst, j, sum);
        }
    }

    /// `col[dst] += factor · col[src]`.
    pub fn add_scaled_col(&mut self, dst: usize, src: usize, factor: &NovikovScalar) {
        for i in 0..self.rows {
            let term = self.get(i, src).mul(factor);
            let sum = self.get(i, dst).add(&term);
            self.set(i, dst, sum);
        }
    }

    /// Multiplies a row by the unit `t^e`.
    pub fn shift_row(&mut self, row: usize, e: Rat) {
        for j in 0..self.cols {
            let shifted = self.get(row, j).shift(e);
            self.set(row, j, shifted);
        }
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

use std::fmt;
use std::sync::Arc;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single [`Field`].
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<Field>, size: usize) -> Matrix {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors of raw integers, validating every entry.
    pub fn from_rows<R: AsRef<[u32]>>(
        field: &Arc<Field>,
        rows: &[R],
        cols: usize,
    ) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &v in row {
                data.push(field.elem(v)?);
            }
        }
        Ok(Matrix {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of already validated elements.
    pub fn from_elems(field: &Arc<Field>, rows: &[Vec<Elem>], cols: usize) -> Result<Matrix> {
        let raw: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&e| e as u32).collect())
            .collect();
        Matrix::from_rows(field, &raw, cols)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(t, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix with the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix> {
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    len: self.cols,
                });
            }
        }
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                "vstack column counts differ".into(),
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps only the first `count` rows.
    pub fn take_rows(&self, count: usize) -> Matrix {
        let count = count.min(self.rows);
        Matrix {
            field: Arc::clone(&self.field),
            rows: count,
            cols: self.cols,
            data: self.data[..count * self.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = Arc::clone(&self.field);
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix formed by the columns in `cols`; zero for the empty set.
    pub fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        Ok(self.select_columns(cols)?.rank())
    }

    /// Basis (as rows) of `{v : self · vᵀ = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(reduced.get(r, fc)));
            }
        }
        basis
    }

    /// RREF with zero rows removed: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { reduced, rank, .. } = self.rref();
        reduced.take_rows(rank)
    }

    /// `true` when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> Result<bool> {
        Ok(self.vstack(other)?.rank() == self.rank())
    }
}

/// Hamming weight of a vector.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Indices of the nonzero entries of a vector.
pub fn support(v: &[Elem]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect()
}

//! Dense matrices over an exact [`Field`].
//!
//! Everything is small here (lifted systems top out at a few hundred
//! columns), so this is plain row-major storage with Gaussian elimination.
//! Elimination skips zero entries, which matters a lot for the very sparse
//! Kronecker-lifted systems and for the cyclotomic backend where every
//! operation allocates.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare { op: &'static str, rows: usize, cols: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Result of [`Matrix::rank_nullspace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nullspace<E> {
    pub rank: usize,
    /// One vector per free column, with a 1 in that column and zeros in the
    /// other free columns.
    pub basis: Vec<Vec<E>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape { op: "new", left: (rows, cols), right: (data.len(), 1) });
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(LinalgError::Shape { op: "from_rows", left: (r, c), right: (1, bad.len()) });
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: F, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Matrix::from_rows(field, rows)
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn diagonal(field: F, diag: Vec<F::Elem>) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        self.field.is_one(e)
                    } else {
                        self.field.is_zero(e)
                    }
                })
            })
    }

    pub fn trace(&self) -> Result<F::Elem, LinalgError> {
        self.require_square("trace")?;
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i))))
    }

    fn require_square(&self, op: &'static str) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare { op, rows: self.rows, cols: self.cols })
        }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(LinalgError::Shape { op, left: self.shape(), right: other.shape() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix::new(self.field.clone(), self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix::new(self.field.clone(), self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape { op: "mul", left: self.shape(), right: other.shape() });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape { op: "mul_vec", left: self.shape(), right: (v.len(), 1) });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Kronecker product: block (i, j) of the result is `self[i][j] · other`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f.clone(), r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Direct sum of the blocks along the diagonal, in argument order.
    pub fn block_diag(field: F, blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.write_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn vstack(field: F, blocks: &[Self]) -> Result<Self, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::Shape { op: "vstack", left: (rows, cols), right: b.shape() });
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Matrix::new(field, rows, cols, data)
    }

    pub fn write_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// The `rows × cols` submatrix starting at (`r0`, `c0`).
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + cols]);
        }
        Matrix { field: self.field.clone(), rows, cols, data }
    }

    /// Column-stacking vectorization: columns concatenated top to bottom.
    pub fn vec(&self) -> Vec<F::Elem> {
        self.transpose().data
    }

    /// Inverse of [`Matrix::vec`].
    pub fn from_vec(field: F, rows: usize, cols: usize, v: Vec<F::Elem>) -> Result<Self, LinalgError> {
        Ok(Matrix::new(field, cols, rows, v)?.transpose())
    }

    /// Reduced row echelon form and the pivot columns, first-nonzero pivoting.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            let support: Vec<usize> = (col..m.cols).filter(|&j| !f.is_zero(m.get(row, j))).collect();
            for &j in &support {
                let v = f.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for &j in &support {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_nullspace(&self) -> Nullspace<F::Elem> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(i, free));
                }
                v
            })
            .collect();
        Nullspace { rank: pivots.len(), basis }
    }

    pub fn determinant(&self) -> Result<F::Elem, LinalgError> {
        self.require_square("determinant")?;
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !f.is_zero(m.get(r, col))) else {
                return Ok(f.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = f.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot)?;
            for r in col + 1..n {
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let factor = f.mul(&factor, &inv);
                for j in col..n {
                    let pj = m.get(col, j);
                    if f.is_zero(pj) {
                        continue;
                    }
                    let v = f.sub(m.get(r, j), &f.mul(&factor, pj));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Maps every entry into another field.
    pub fn map<G: Field>(&self, field: G, f: impl Fn(&F::Elem) -> G::Elem) -> Matrix<G> {
        Matrix { field, rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]{}x{} {}", self.field.name(), self.rows, self.cols, self)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}

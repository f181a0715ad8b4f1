//! Dense matrices over a single finite field with exact elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Which inner product a Gram matrix or dual refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerKind {
    Euclidean,
    Hermitian,
}

impl InnerKind {
    pub fn name(self) -> &'static str {
        match self {
            InnerKind::Euclidean => "euclidean",
            InnerKind::Hermitian => "hermitian",
        }
    }

    pub(crate) fn check(self, field: &Field) -> Result<()> {
        if self == InnerKind::Hermitian && !field.is_hermitian() {
            return Err(Error::NotAHermitianField);
        }
        Ok(())
    }
}

impl fmt::Display for InnerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;

    fn index(&self, (r, c): (usize, usize)) -> &Elem {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elem {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    /// Square matrix with the given diagonal.
    pub fn diag(field: &Field, entries: &[Elem]) -> Matrix {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_elems(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.encoding() >= field.q()) {
            return Err(Error::ElementOutOfRange { value: bad.encoding() as u64, q: field.q() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from rows of integer encodings.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, rows: &[R]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &v in r {
                data.push(field.elem(v)?);
            }
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    /// Rows as integer encodings.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.encoding()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.data[l * rhs.cols + j];
                    let slot = &mut out.data[i * rhs.cols + j];
                    *slot = f.add(*slot, f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, rhs: &Matrix, op: impl Fn(&Field, Elem, Elem) -> Elem) -> Result<Matrix> {
        self.same_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| op(&self.field, a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Matrix {
        self.map(|f, a| f.neg(a))
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        self.map(|f, a| f.mul(c, a))
    }

    fn map(&self, op: impl Fn(&Field, Elem) -> Elem) -> Matrix {
        let data = self.data.iter().map(|&a| op(&self.field, a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    /// Entry-wise conjugation.
    pub fn conj(&self) -> Result<Matrix> {
        if !self.field.is_hermitian() {
            return Err(Error::NotAHermitianField);
        }
        Ok(self.map(|f, a| f.conj_or_id(a)))
    }

    /// Transpose (Euclidean) or conjugate transpose (Hermitian).
    pub fn star(&self, kind: InnerKind) -> Result<Matrix> {
        match kind {
            InnerKind::Euclidean => Ok(self.transpose()),
            InnerKind::Hermitian => Ok(self.conj()?.transpose()),
        }
    }

    /// `self · star(self)`.
    pub fn gram(&self, kind: InnerKind) -> Result<Matrix> {
        self.mul(&self.star(kind)?)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_hermitian_symmetric(&self) -> bool {
        self.is_square() && self.field.is_hermitian() && self.star(InnerKind::Hermitian).is_ok_and(|s| s == *self)
    }

    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, rhs.rows)));
        }
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols, data })
    }

    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!("vstack of {} and {} columns", self.cols, rhs.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    /// Rows `rows` and columns `cols` as a new matrix.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "submatrix out of bounds");
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out[(r, j)] = self[(r, c)];
            }
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += c · row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: Elem) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = f.mul(c, self.data[src * self.cols + j]);
            let slot = &mut self.data[dst * self.cols + j];
            *slot = f.add(*slot, v);
        }
    }

    /// col[dst] += c · col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: Elem) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        for i in 0..self.rows {
            let v = f.mul(c, self.data[i * self.cols + src]);
            let slot = &mut self.data[i * self.cols + dst];
            *slot = f.add(*slot, v);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, c: Elem) {
        let f = self.field.clone();
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(c, *v);
        }
    }

    pub(crate) fn scale_col(&mut self, col: usize, c: Elem) {
        let f = self.field.clone();
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + col];
            *v = f.mul(c, *v);
        }
    }

    /// Reduced row-echelon form and pivot columns. Pivot rows are chosen as the
    /// first row (lowest index) with a nonzero entry in the current column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m[(row, col)]).expect("pivot is nonzero");
            m.scale_row(row, inv);
            for r in 0..m.rows {
                if r != row {
                    let factor = m[(r, col)];
                    if !factor.is_zero() {
                        m.add_row_multiple(r, row, f.neg(factor));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only.
        let mut m = self.clone();
        let f = self.field.clone();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m[(row, col)]).expect("pivot is nonzero");
            for r in row + 1..m.rows {
                let factor = m[(r, col)];
                if !factor.is_zero() {
                    m.add_row_multiple(r, row, f.neg(f.mul(factor, inv)));
                }
            }
            row += 1;
        }
        row
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(r.submatrix(0..n, n..2 * n))
    }

    /// Basis (as rows) of {x : self · xᵀ = 0}.
    pub fn right_kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out[(i, fc)] = Elem::ONE;
            for (pr, &pc) in pivots.iter().enumerate() {
                out[(i, pc)] = f.neg(r[(pr, fc)]);
            }
        }
        out
    }

    /// Basis (as rows) of {u : u · self = 0}.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().right_kernel()
    }
}

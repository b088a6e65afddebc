//! Dense matrices over an exact field and the elimination kernel.

use crate::error::{Error, Result};

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>, // row-major
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` fixes the width for the empty case.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    /// Integer entries mapped into the field.
    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
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

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: Vec<F::Elem>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let idx = r * other.cols + c;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * cols);
        head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(sel) = (prow..self.rows).find(|&r| !f.is_zero(self.get(r, c))) else {
                continue;
            };
            self.swap_rows(prow, sel);
            let inv = f.inv(self.get(prow, c)).expect("pivot is nonzero");
            for j in c..cols {
                let idx = prow * cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            let pivot_row: Vec<F::Elem> = self.row(prow)[c..].to_vec();
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = r * cols + c;
                for (j, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        self.data[base + j] = f.sub(&self.data[base + j], &f.mul(&factor, pv));
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    /// Row echelon elimination without back-substitution; only the rank is kept.
    pub fn rank(&self) -> usize {
        self.clone().echelon_in_place()
    }

    /// Nonzero rows of a row echelon form (no back-substitution).
    pub fn echelon_basis(&self) -> Matrix<F> {
        let mut m = self.clone();
        let rank = m.echelon_in_place();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    fn echelon_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let f = &f;
        let cols = self.cols;
        let m = self;
        let mut prow = 0;
        for c in 0..cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(prow, sel);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            let pivot_row: Vec<F::Elem> = m.row(prow)[c..].to_vec();
            for r in prow + 1..m.rows {
                let lead = m.get(r, c).clone();
                if f.is_zero(&lead) {
                    continue;
                }
                let factor = f.mul(&lead, &inv);
                let base = r * cols + c;
                for (j, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        m.data[base + j] = f.sub(&m.data[base + j], &f.mul(&factor, pv));
                    }
                }
            }
            prow += 1;
        }
        prow
    }

    /// Nonzero rows of the RREF: a reduced basis of the row space.
    pub fn row_space_basis(&self) -> Matrix<F> {
        let (mut r, pivots) = self.rref();
        r.data.truncate(pivots.len() * r.cols);
        r.rows = pivots.len();
        r
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (prow, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Whether `v` is a combination of the columns of `M`.
    pub fn in_column_space(&self, v: &[F::Elem]) -> Result<bool> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut aug = self.transpose();
        let before = aug.rank();
        aug.push_row(v.to_vec())?;
        Ok(aug.rank() == before)
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals, DEFAULT_PRIME};

    fn fp() -> PrimeField {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(&fp(), 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows_over_q() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[vec![1, 2], vec![2, 4]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(&q, &[vec![1, 2], vec![0, 0]]).unwrap());
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_permutation() {
        let f = fp();
        let m = Matrix::from_i64(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::identity(&f, 2));
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn echelon_basis_spans_row_space() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[vec![0, 2, 4], vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
        let e = m.echelon_basis();
        assert_eq!(e.rows(), 2);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.vstack(&m).unwrap().rank(), 2);
        assert_eq!(e.rref().0.row_vecs()[..2], m.rref().0.row_vecs()[..2]);
    }

    #[test]
    fn empty_matrices() {
        let f = fp();
        let m = Matrix::zeros(&f, 0, 3);
        assert_eq!(m.rref().1, Vec::<usize>::new());
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace_basis().len(), 3);
        let m = Matrix::zeros(&f, 2, 0);
        assert_eq!(m.rank(), 0);
        assert!(m.nullspace_basis().is_empty());
    }

    #[test]
    fn rank_trivial_cases() {
        let f = fp();
        assert_eq!(Matrix::zeros(&f, 3, 5).rank(), 0);
        for n in 0..6 {
            assert_eq!(Matrix::identity(&f, n).rank(), n);
        }
    }

    #[test]
    fn nullspace_cases() {
        let f = fp();
        assert!(Matrix::identity(&f, 4).nullspace_basis().is_empty());
        assert_eq!(Matrix::zeros(&f, 2, 3).nullspace_basis().len(), 3);
        let m = Matrix::from_i64(&f, &[vec![1, 1, 0]]).unwrap();
        let ns = m.nullspace_basis();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).unwrap().iter().all(|e| *e == 0));
        }
    }

    #[test]
    fn column_space_membership() {
        let f = fp();
        let id = Matrix::identity(&f, 3);
        assert!(id.in_column_space(&[5, 0, 7]).unwrap());
        let z = Matrix::zeros(&f, 2, 2);
        assert!(!z.in_column_space(&[0, 1]).unwrap());
        assert!(z.in_column_space(&[0, 0]).unwrap());
        let m = Matrix::from_i64(&f, &[vec![1], vec![0]]).unwrap();
        assert!(!m.in_column_space(&[0, 1]).unwrap());
        assert!(m.in_column_space(&[3, 0]).unwrap());
        assert_eq!(
            m.in_column_space(&[1, 2, 3]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn row_space_basis_drops_dependent_rows() {
        let f = fp();
        let m = Matrix::from_i64(&f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        let b = m.row_space_basis();
        assert_eq!(b.rows(), 2);
        assert_eq!(b.cols(), 3);
    }
}

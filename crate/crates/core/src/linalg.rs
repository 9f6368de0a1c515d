//! Dense linear algebra over an exact field.

use crate::coefficients::Field;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.into_iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
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

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if field.is_zero(pv) {
                        continue;
                    }
                    let j = c + k;
                    let v = field.sub(self.get(i, j), &field.mul(&factor, pv));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        self.clone().row_reduce(field).len()
    }

    /// A basis of `{x : A x = 0}`.
    pub fn kernel(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.row_reduce(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }
}

//! Exact dense linear algebra over a coefficient field: row reduction,
//! rank, and kernel bases. Used for centralizer computation and linear
//! membership tests.

use crate::ring::{Coeff, CoefficientField};

/// A dense matrix over a `CoefficientField`.
#[derive(Clone, Debug)]
pub struct FieldMatrix {
    field: CoefficientField,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl FieldMatrix {
    pub fn zero(field: CoefficientField, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn from_rows(field: CoefficientField, rows: Vec<Vec<Coeff>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        FieldMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// column of each nonzero row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // first nonzero entry in this column at or below `row`
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.get(r, col)) {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = f.sub(self.get(r, c), &f.mul(self.get(row, c), &factor));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right kernel {x : Ax = 0}, one vector per free
    /// column, deterministic in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Coeff>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = f.neg(m.get(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Whether `target` lies in the column span of `self`.
    pub fn column_span_contains(&self, target: &[Coeff]) -> bool {
        assert_eq!(target.len(), self.rows);
        let mut aug = FieldMatrix::zero(self.field.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, target[r].clone());
        }
        let base_rank = self.rank();
        aug.rank() == base_rank
    }
}

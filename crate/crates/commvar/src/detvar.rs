//! Matrices of indeterminates, their minor ideals, and staircase rank-one
//! varieties with component-wise dimension computation.

use itertools::Itertools;
use thiserror::Error;

use crate::groebner::Ideal;
use crate::ring::{CoefficientField, MonomialOrder, Polynomial, Ring, RingError};

#[derive(Debug, Error)]
pub enum DetvarError {
    #[error("minor size {t} out of range for a {rows}x{cols} matrix")]
    MinorSize { t: usize, rows: usize, cols: usize },
    #[error("invalid staircase shape: {0}")]
    BadShape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A matrix whose nonzero entries are distinct fresh indeterminates.
#[derive(Clone, Debug)]
pub struct GenericMatrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    entries: Vec<Polynomial>, // row-major
}

impl GenericMatrix {
    /// Fully generic m x n matrix with entries named `x{r}_{c}`.
    pub fn generic(
        rows: usize,
        cols: usize,
        order: MonomialOrder,
        field: CoefficientField,
    ) -> Result<Self, DetvarError> {
        let mut names = Vec::with_capacity(rows * cols);
        for r in 1..=rows {
            for c in 1..=cols {
                names.push(format!("x{r}_{c}"));
            }
        }
        let ring = Ring::new(names, order, field)?;
        let entries = (0..rows * cols).map(|i| ring.var_by_index(i)).collect();
        Ok(GenericMatrix {
            rows,
            cols,
            ring,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// Determinant of the submatrix on the given rows and columns, by
    /// Laplace expansion along the first selected row.
    fn minor(&self, row_set: &[usize], col_set: &[usize]) -> Polynomial {
        if row_set.is_empty() {
            return self.ring.one();
        }
        let r = row_set[0];
        let rest: Vec<usize> = row_set[1..].to_vec();
        let mut acc = self.ring.zero();
        for (k, &c) in col_set.iter().enumerate() {
            let e = self.entry(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = col_set
                .iter()
                .enumerate()
                .filter_map(|(i, &cc)| if i != k { Some(cc) } else { None })
                .collect();
            let cofactor = self.minor(&rest, &sub_cols);
            let term = e.mul(&cofactor);
            if k % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }
}

/// The ideal generated by all t x t minors, zero minors dropped.
/// Generators are emitted in lexicographic order of (row set, column set).
/// When t exceeds the shorter side there are no minors and the zero
/// ideal is returned.
pub fn minors_ideal(matrix: &GenericMatrix, t: usize) -> Result<Ideal, DetvarError> {
    if t == 0 {
        return Err(DetvarError::MinorSize {
            t,
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    if t > matrix.rows().min(matrix.cols()) {
        return Ok(Ideal::new(matrix.ring().clone(), vec![])?);
    }
    let mut gens = Vec::new();
    for row_set in (0..matrix.rows()).combinations(t) {
        for col_set in (0..matrix.cols()).combinations(t) {
            let m = matrix.minor(&row_set, &col_set);
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    Ok(Ideal::new(matrix.ring().clone(), gens)?)
}

/// Closed-form dimension of the rank < t locus of a generic m x n matrix:
/// (t-1)(m+n-t+1).
pub fn detvar_dim_formula(m: usize, n: usize, t: usize) -> Result<i64, DetvarError> {
    if t == 0 || t > m.min(n) {
        return Err(DetvarError::MinorSize { t, rows: m, cols: n });
    }
    Ok((t as i64 - 1) * (m as i64 + n as i64 - t as i64 + 1))
}

/// A block staircase of indeterminates. `col_cuts` and `row_cuts` are
/// cumulative indices: band k spans rows `row_cuts[k-1]+1 ..= row_cuts[k]`
/// and its entries occupy columns `col_cuts[k-1]+1 ..= col_cuts.last()`.
/// Coincident cuts encode empty bands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseShape {
    col_cuts: Vec<usize>,
    row_cuts: Vec<usize>,
}

impl StaircaseShape {
    pub fn new(col_cuts: Vec<usize>, row_cuts: Vec<usize>) -> Result<Self, DetvarError> {
        if col_cuts.len() != row_cuts.len() || col_cuts.is_empty() {
            return Err(DetvarError::BadShape(
                "need equally many, and at least one, column and row cuts".into(),
            ));
        }
        for w in col_cuts.windows(2).chain(row_cuts.windows(2)) {
            if w[0] > w[1] {
                return Err(DetvarError::BadShape("cuts must be non-decreasing".into()));
            }
        }
        if *row_cuts.last().unwrap() == 0 {
            return Err(DetvarError::BadShape("no rows".into()));
        }
        Ok(StaircaseShape { col_cuts, row_cuts })
    }

    /// The three-row staircase with band widths i, j, m.
    pub fn three_band(i: usize, j: usize, m: usize) -> Self {
        StaircaseShape {
            col_cuts: vec![i, i + j, i + j + m],
            row_cuts: vec![1, 2, 3],
        }
    }

    pub fn num_bands(&self) -> usize {
        self.col_cuts.len()
    }

    pub fn total_rows(&self) -> usize {
        *self.row_cuts.last().unwrap()
    }

    pub fn total_cols(&self) -> usize {
        *self.col_cuts.last().unwrap()
    }

    fn band_of_row(&self, row: usize) -> usize {
        // 0-based row; returns band index k with row_cuts[k-1] < row+1 <= row_cuts[k]
        self.row_cuts
            .iter()
            .position(|&b| row + 1 <= b)
            .expect("row within cuts")
    }

    /// Whether entry (r, c) (0-based) is an indeterminate.
    pub fn is_live(&self, r: usize, c: usize) -> bool {
        let k = self.band_of_row(r);
        let a_prev = if k == 0 { 0 } else { self.col_cuts[k - 1] };
        c + 1 > a_prev
    }

    pub fn num_vars(&self) -> usize {
        let mut n = 0;
        for r in 0..self.total_rows() {
            for c in 0..self.total_cols() {
                if self.is_live(r, c) {
                    n += 1;
                }
            }
        }
        n
    }

    /// Realize the staircase as a matrix of indeterminates and zeros.
    pub fn matrix(
        &self,
        order: MonomialOrder,
        field: CoefficientField,
    ) -> Result<GenericMatrix, DetvarError> {
        let rows = self.total_rows();
        let cols = self.total_cols();
        let mut names = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if self.is_live(r, c) {
                    names.push(format!("x{}_{}", r + 1, c + 1));
                }
            }
        }
        let ring = Ring::new(names, order, field)?;
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                if self.is_live(r, c) {
                    entries.push(ring.var(&format!("x{}_{}", r + 1, c + 1))?);
                } else {
                    entries.push(ring.zero());
                }
            }
        }
        Ok(GenericMatrix {
            rows,
            cols,
            ring,
            entries,
        })
    }

    /// Irreducible pieces of the rank <= 1 locus: one per band of positive
    /// column width. Piece k is the locus where all rows below the band
    /// vanish, a generic b_k x (a_s - a_{k-1}) rank <= 1 variety of
    /// dimension b_k + (a_s - a_{k-1}) - 1.
    pub fn components(&self) -> Vec<(String, i64)> {
        let total_cols = self.total_cols();
        let mut out = Vec::new();
        for k in 0..self.num_bands() {
            let a_prev = if k == 0 { 0 } else { self.col_cuts[k - 1] };
            let width = self.col_cuts[k] - a_prev;
            if width == 0 {
                continue; // empty band contributes no component
            }
            let rows = self.row_cuts[k];
            let cols = total_cols - a_prev;
            let dim = if rows == 0 || cols == 0 {
                0
            } else {
                rows as i64 + cols as i64 - 1
            };
            out.push((format!("band{}:{}x{}", k + 1, rows, cols), dim));
        }
        out
    }

    /// Dimension of the rank <= 1 locus: the component maximum, or the
    /// ambient dimension (0) when there are no variables at all.
    pub fn dim(&self) -> i64 {
        self.components()
            .iter()
            .map(|&(_, d)| d)
            .max()
            .unwrap_or(0)
    }

    /// Alternative closed-form candidate read off the band data directly:
    /// max over k of (a_s - sum of the first k-1 cuts + b_k + 1). Known to
    /// deviate from `dim()` on some shapes; reports surface both values
    /// for comparison, and `dim()` is authoritative.
    pub fn closed_form_dim(&self) -> i64 {
        let a_s = self.total_cols() as i64;
        let mut best = i64::MIN;
        let mut prefix = 0i64;
        for k in 0..self.num_bands() {
            let v = a_s - prefix + self.row_cuts[k] as i64 + 1;
            best = best.max(v);
            prefix += self.col_cuts[k] as i64;
        }
        best
    }
}

impl std::fmt::Display for StaircaseShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "c{}:r{}",
            self.col_cuts.iter().map(|v| v.to_string()).join(","),
            self.row_cuts.iter().map(|v| v.to_string()).join(","),
        )
    }
}

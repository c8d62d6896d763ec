//! Dense exact linear algebra over the ground field.
//!
//! Everything reduces to row echelon form with deterministic pivoting
//! (first nonzero column, rows in given order), so bases, kernels and
//! solutions are reproducible across runs and platforms.

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        let n = rows.len();
        Matrix { field, rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).mul(k);
            self.set(r, c, v);
        }
    }

    /// row a += k * row b
    fn add_multiple(&mut self, a: usize, b: usize, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(a, c).add(&self.at(b, c).mul(k));
            self.set(a, c, v);
        }
    }

    /// In-place reduced row echelon form; returns pivot column per rank row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).inv();
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let k = self.at(r, col).neg();
                    self.add_multiple(r, row, &k);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Basis of {x : Σ_j M[i][j] x_j = 0 for all rows i}, one vector per free
/// column, ordered by free column index, with a 1 in that column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut r = m.clone();
    let pivots = r.rref();
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![m.field.zero(); m.cols];
        v[free] = m.field.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = r.at(i, free).neg();
        }
        out.push(v);
    }
    out
}

/// One exact solution of A x = b (free variables set to 0), or None.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows, b.len(), "rhs length");
    let mut aug = Matrix::zero(a.field, a.rows, a.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..a.cols {
            aug.set(r, c, a.at(r, c).clone());
        }
        aug.set(r, a.cols, rhs.clone());
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![a.field.zero(); a.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(i, a.cols).clone();
    }
    Some(x)
}

/// Incrementally maintained row space in reduced echelon form. Supports
/// exact membership tests and deterministic rank growth.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> RowSpace {
        RowSpace { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !v[p].is_zero() {
                let k = v[p].clone();
                for (c, x) in v.iter_mut().enumerate() {
                    *x = x.sub(&row[c].mul(&k));
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Inserts v if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            *x = x.mul(&inv);
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let k = row[p].clone();
                for c in 0..self.cols {
                    row[c] = row[c].sub(&w[c].mul(&k));
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    /// Echelon basis rows, pivot order.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// Ranks agree and stacking does not grow them: equal spans.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], cols: usize) -> bool {
    let mut sa = RowSpace::new(cols);
    for v in a {
        sa.insert(v);
    }
    let mut sb = RowSpace::new(cols);
    for v in b {
        sb.insert(v);
    }
    sa.rank() == sb.rank() && b.iter().all(|v| sa.contains(v))
}

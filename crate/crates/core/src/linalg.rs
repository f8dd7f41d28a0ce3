//! Exact linear algebra over a [`Field`]: dense row reduction for small
//! pieces and a sparse Markowitz-pivoted rank for larger ones.

use crate::field::Field;

/// Below this many columns, ranks are computed densely.
pub const DENSE_CUTOFF: usize = 64;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for k in 0..size {
            m.set(k, k, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<E> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols, "ragged rows");
        Matrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|e| field.is_zero(e))
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !field.is_zero(a) && !field.is_zero(b) {
                        acc = field.add(&acc, &field.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns. Pivots are chosen left to right, topmost nonzero first.
    pub fn rref<F: Field<Elem = E>>(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..self.cols {
            if top == self.rows {
                break;
            }
            let Some(p) = (top..self.rows).find(|&r| !field.is_zero(self.get(r, c))) else {
                continue;
            };
            self.swap_rows(top, p);
            let inv = field.inv(self.get(top, c));
            for k in c..self.cols {
                let idx = top * self.cols + k;
                self.data[idx] = field.mul(&self.data[idx], &inv);
            }
            for r in 0..self.rows {
                if r == top {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for k in c..self.cols {
                    let pv = self.data[top * self.cols + k].clone();
                    if field.is_zero(&pv) {
                        continue;
                    }
                    let idx = r * self.cols + k;
                    self.data[idx] = field.sub_mul(&self.data[idx], &factor, &pv);
                }
            }
            pivots.push(c);
            top += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.clone().rref(field).len()
    }

    /// A basis of `{x : A x = 0}`, one vector per non-pivot column.
    pub fn kernel_basis<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(m.get(r, free));
            }
            out.push(v);
        }
        out
    }
}

/// An echelon basis of a subspace of `E^dim`, fully reduced, supporting
/// membership reduction.
#[derive(Clone, Debug)]
pub struct EchelonBasis<E> {
    dim: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> EchelonBasis<E> {
    pub fn empty(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Echelon basis of the span of `vectors`.
    pub fn span<F: Field<Elem = E>>(field: &F, dim: usize, vectors: Vec<Vec<E>>) -> Self {
        if vectors.is_empty() {
            return Self::empty(dim);
        }
        let mut m = Matrix::from_rows(vectors, dim);
        let pivots = m.rref(field);
        let rows = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        EchelonBasis { dim, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts multiples of the basis rows so `v` vanishes on every pivot.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !field.is_zero(r) {
                    *x = field.sub_mul(x, &c, r);
                }
            }
        }
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| field.is_zero(x))
    }
}

/// Sparse rows: sorted `(column, value)` pairs with nonzero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Rank by sparse Gaussian elimination. The pivot is taken from the
/// shortest remaining row, at its column of least global occupancy
/// (Markowitz cost `(r - 1)(c - 1)` restricted to that row).
pub fn sparse_rank<F: Field>(field: &F, mut rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut col_count = vec![0usize; ncols];
    for r in &rows {
        for (c, _) in r {
            col_count[*c] += 1;
        }
    }
    let mut rank = 0;
    while !rows.is_empty() {
        let (pi, _) = rows.iter().enumerate().min_by_key(|(i, r)| (r.len(), *i)).unwrap();
        let pivot_row = rows.swap_remove(pi);
        let &(pc, ref pv) = pivot_row.iter().min_by_key(|(c, _)| (col_count[*c], *c)).unwrap();
        let inv = field.inv(pv);
        for (c, _) in &pivot_row {
            col_count[*c] -= 1;
        }
        rank += 1;
        for row in rows.iter_mut() {
            let Ok(pos) = row.binary_search_by_key(&pc, |(c, _)| *c) else {
                continue;
            };
            let factor = field.mul(&row[pos].1, &inv);
            for (c, _) in row.iter() {
                col_count[*c] -= 1;
            }
            let merged = axpy_sparse(field, row, &factor, &pivot_row);
            for (c, _) in &merged {
                col_count[*c] += 1;
            }
            *row = merged;
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

/// `row - factor * pivot` as a sparse row.
fn axpy_sparse<F: Field>(
    field: &F,
    row: &[(usize, F::Elem)],
    factor: &F::Elem,
    pivot: &[(usize, F::Elem)],
) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, field.neg(&field.mul(factor, &pivot[j].1))));
            j += 1;
        } else {
            let v = field.sub_mul(&row[i].1, factor, &pivot[j].1);
            if !field.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a matrix given as sparse rows, dense below [`DENSE_CUTOFF`] columns.
pub fn rank_of<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    if ncols < DENSE_CUTOFF {
        let mut m = Matrix::zeros(field, rows.len(), ncols);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row {
                m.set(r, c, v);
            }
        }
        m.rank(field)
    } else {
        sparse_rank(field, rows, ncols)
    }
}

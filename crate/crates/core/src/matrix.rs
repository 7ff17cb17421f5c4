//! Dense matrices over a [`Ring`], with exact Gaussian elimination when the
//! entries lie in a [`Field`].

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::scalar::{Field, Ring};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.data[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &R {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut R {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<R: Ring> Matrix<R> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn scalar(n: usize, s: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = R::one();
        }
        m
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

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<R> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn as_slice(&self) -> &[R] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<R> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = &self[(r, c)];
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product; zero entries of `self` are skipped, which makes
    /// products with monomial matrices quadratic.
    pub fn mul(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = &other.data[k * oc..(k + 1) * oc];
                for (o, b) in out_row.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        o.add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() {
                        acc.add_mul(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &R, other: &Matrix<R>) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                a.add_mul(s, b);
            }
        }
    }

    pub fn scale(&self, s: &R) -> Matrix<R> {
        self.map(|a| a.clone() * s.clone())
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &Matrix<R>) -> Matrix<R> {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * r2 + k, j * c2 + l)] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[Matrix<R>]) -> Matrix<R> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn hstack(blocks: &[Matrix<R>]) -> Matrix<R> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            out.set_block(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[Matrix<R>]) -> Matrix<R> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            out.set_block(r0, 0, b);
            r0 += b.rows;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix<R>) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix<R> {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<R> {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Matrix<R> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn trace(&self) -> R {
        let mut t = R::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self[(i, i)].clone();
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Matrix<R> {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Clone)]
pub struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..cols {
                    let v = self[(r, j)].clone();
                    if !v.is_zero() {
                        self[(r, j)] = v * inv.clone();
                    }
                }
            }
            let (head, rest) = self.data.split_at_mut(r * cols);
            let (prow, tail) = rest.split_at_mut(cols);
            let nz: Vec<usize> = (c..cols).filter(|&j| !prow[j].is_zero()).collect();
            for other in head.chunks_mut(cols).chain(tail.chunks_mut(cols)) {
                let f = other[c].clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &nz {
                    other[j].sub_mul(&f, &prow[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of `{x : self * x = 0}`; the `k`-th vector has a 1 in the
    /// `k`-th free column and 0 in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let Echelon { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    let a = &matrix[(r, f)];
                    if !a.is_zero() {
                        v[pc] = -a.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Matrix whose columns are a basis of the kernel.
    pub fn kernel_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.cols, &self.kernel())
    }

    /// Columns of `self` forming a basis of its column space.
    pub fn column_space(&self) -> Matrix<F> {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::hstack(&[self.clone(), Matrix::identity(n)]);
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    /// Solves `self * x = b` for one solution, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let col = Matrix::from_columns(self.rows, &[b.to_vec()]);
        let aug = Matrix::hstack(&[self.clone(), col]);
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m[(i, c)].clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m[(c, j)].clone();
                    m[(i, j)].sub_mul(&f, &v);
                }
            }
        }
        det
    }
}

/// Column-compressed sparse matrix, used where Kronecker products of
/// 0/1 maps would be too large to hold densely.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<R> {
    rows: usize,
    cols: usize,
    /// per column: `(row, value)` with increasing rows and nonzero values
    columns: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn from_dense(m: &Matrix<R>) -> Self {
        let columns = (0..m.cols)
            .map(|c| {
                (0..m.rows)
                    .filter(|&r| !m[(r, c)].is_zero())
                    .map(|r| (r, m[(r, c)].clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            columns,
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, R::one())]).collect(),
        }
    }

    /// Matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        SparseMatrix {
            rows: perm.len(),
            cols: perm.len(),
            columns: perm.iter().map(|&i| vec![(i, R::one())]).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Matrix<R> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] = v.clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &SparseMatrix<R>) -> SparseMatrix<R> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut acc = vec![R::zero(); self.rows];
        let mut touched: Vec<usize> = Vec::new();
        let mut columns = Vec::with_capacity(other.cols);
        for ocol in &other.columns {
            for (k, b) in ocol {
                for (r, a) in &self.columns[*k] {
                    if acc[*r].is_zero() {
                        touched.push(*r);
                    }
                    acc[*r].add_mul(a, b);
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut col = Vec::with_capacity(touched.len());
            for &r in &touched {
                let v = std::mem::replace(&mut acc[r], R::zero());
                if !v.is_zero() {
                    col.push((r, v));
                }
            }
            touched.clear();
            columns.push(col);
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        }
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &SparseMatrix<R>) -> SparseMatrix<R> {
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a_col in &self.columns {
            for b_col in &other.columns {
                let mut col = Vec::with_capacity(a_col.len() * b_col.len());
                for (i, a) in a_col {
                    for (k, b) in b_col {
                        col.push((i * other.rows + k, a.clone() * b.clone()));
                    }
                }
                columns.push(col);
            }
        }
        SparseMatrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            columns,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }
}

/// Incrementally maintained row-reduced basis of a subspace, used for span
/// membership and linear-dependency searches.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(dim: usize) -> Self {
        SpanBuilder {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; returns the residue.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    a.sub_mul(&f, b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` if the span grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for a in r.iter_mut() {
            if !a.is_zero() {
                *a = a.clone() * inv.clone();
            }
        }
        // keep existing rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    a.sub_mul(&f, b);
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }
}

/// Finds the first `k` such that `vectors[k]` lies in the span of the earlier
/// vectors and returns the coefficients `c` with
/// `vectors[k] = sum_{i<k} c[i] vectors[i]`.
pub fn first_dependency<F: Field>(vectors: &[Vec<F>]) -> Option<(usize, Vec<F>)> {
    let dim = vectors.first()?.len();
    // Columns are the vectors; augmented elimination tracks combinations.
    let mut reduced: Vec<(Vec<F>, Vec<F>, usize)> = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        let mut r = v.clone();
        let mut comb = vec![F::zero(); k + 1];
        comb[k] = F::one();
        for (row, c, p) in &reduced {
            let f = r[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    a.sub_mul(&f, b);
                }
            }
            for (a, b) in comb.iter_mut().zip(c) {
                if !b.is_zero() {
                    a.sub_mul(&f, b);
                }
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => {
                // comb . vectors = 0 with comb[k] = 1
                let coeffs = comb[..k].iter().map(|a| -a.clone()).collect();
                return Some((k, coeffs));
            }
            Some(p) => {
                let inv = r[p].inv().expect("nonzero");
                for a in r.iter_mut() {
                    *a = a.clone() * inv.clone();
                }
                for a in comb.iter_mut() {
                    *a = a.clone() * inv.clone();
                }
                reduced.push((r, comb, p));
            }
        }
        debug_assert_eq!(dim, v.len());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    type F5 = Fp<5>;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn m5(rows: &[&[i64]]) -> Matrix<F5> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F5::from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn sparse_matches_dense() {
        let a = m5(&[&[1, 0, 3], &[0, 0, 1]]);
        let b = m5(&[&[2, 1], &[0, 4], &[1, 0]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
        assert_eq!(sb.kron(&sa), SparseMatrix::from_dense(&b.kron(&a)));
        assert!(SparseMatrix::<F5>::identity(3).is_identity());
        assert_eq!(Matrix::<F5>::zeros(0, 0).inverse(), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn rank_and_kernel() {
        let a = m5(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_roundtrip_over_rationals() {
        let a = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(7), q(4)]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.determinant(), q(1));
        let singular = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), q(0));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m5(&[&[1, 1], &[1, 1]]);
        let x = a.solve(&[F5::from_i64(2), F5::from_i64(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![F5::from_i64(2); 2]);
        assert!(a.solve(&[F5::from_i64(1), F5::from_i64(2)]).is_none());
    }

    #[test]
    fn kron_is_left_major() {
        let a = Matrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]);
        let b = Matrix::from_rows(vec![vec![0i64, 1], vec![1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.row(0), &[0, 1, 0, 2]);
        assert_eq!(k.row(3), &[3, 0, 4, 0]);
    }

    #[test]
    fn dependency_search() {
        let v = |xs: &[i64]| xs.iter().map(|&x| F5::from_i64(x)).collect::<Vec<_>>();
        let vs = vec![v(&[1, 0]), v(&[0, 1]), v(&[2, 3])];
        let (k, c) = first_dependency(&vs).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c, v(&[2, 3]));
    }

    #[test]
    fn span_builder_membership() {
        let mut s = SpanBuilder::<F5>::new(3);
        assert!(s.insert(&[F5::from_i64(1), F5::from_i64(1), F5::from_i64(0)]));
        assert!(s.insert(&[F5::from_i64(0), F5::from_i64(1), F5::from_i64(1)]));
        assert!(!s.insert(&[F5::from_i64(1), F5::from_i64(2), F5::from_i64(1)]));
        assert!(!s.contains(&[F5::from_i64(0), F5::from_i64(0), F5::from_i64(1)]));
        assert_eq!(s.rank(), 2);
    }
}

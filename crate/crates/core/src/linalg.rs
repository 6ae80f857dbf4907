//! Dense complex matrices and the eigensolver wrapper.
//!
//! The nonsymmetric eigenproblem itself is delegated to `faer`; this module
//! owns the matrix type used by the rest of the crate, the reducible-pattern
//! splitting done before eigenvalue-only solves, and the small direct methods
//! (determinants, products) needed elsewhere.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    /// Builds a matrix from real rows; panics on ragged input.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Complex64::new(rows[i][j], 0.0))
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

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self[(i, j)].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)])
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self[(i / other.rows, j / other.cols)] * other[(i % other.rows, j % other.cols)]
        })
    }

    /// Adds `s * block` into the sub-block whose top-left corner is `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Self, s: Complex64) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] += s * block[(i, j)];
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn to_faer(&self) -> Mat<Complex64> {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in out.data[i * rhs.cols..(i + 1) * rhs.cols].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

/// Eigenvalues, eigenvectors (as columns) and per-pair residuals
/// `‖M·v − λ·v‖₂` for unit-norm `v`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub dim: usize,
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: ComplexMatrix,
    pub residuals: Vec<f64>,
}

impl EigenDecomposition {
    /// Residual bound every reported pair is expected to meet.
    pub fn residual_bound(m: &ComplexMatrix) -> f64 {
        1e-8 * (1.0 + m.norm_one())
    }

    /// 2-norm condition number of the eigenvector matrix. Large values mean
    /// the matrix is (numerically) defective.
    pub fn eigenvector_condition(&self) -> Result<f64> {
        if self.dim == 0 {
            return Ok(1.0);
        }
        let sv = self
            .eigenvectors
            .to_faer()
            .singular_values()
            .map_err(|e| Error::Eigensolver { dim: self.dim, reason: format!("SVD failed: {e:?}") })?;
        let max = sv.iter().copied().fold(0.0, f64::max);
        let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
        Ok(if min == 0.0 { f64::INFINITY } else { max / min })
    }
}

fn check_input(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Eigensolver { dim: m.rows, reason: format!("matrix is {}x{}", m.rows, m.cols) });
    }
    if !m.is_finite() {
        return Err(Error::Eigensolver { dim: m.rows, reason: "matrix has non-finite entries".into() });
    }
    Ok(())
}

/// Full eigendecomposition of a general square complex matrix.
pub fn eig(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    check_input(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(EigenDecomposition { dim: 0, eigenvalues: vec![], eigenvectors: ComplexMatrix::zeros(0, 0), residuals: vec![] });
    }
    let evd = m
        .to_faer()
        .eigen()
        .map_err(|e| Error::Eigensolver { dim: n, reason: format!("QR iteration did not converge ({e:?})") })?;
    let values: Vec<Complex64> = (0..n).map(|i| evd.S()[i]).collect();
    let u = evd.U();
    let mut vectors = ComplexMatrix::from_fn(n, n, |i, j| u[(i, j)]);
    let mut residuals = Vec::with_capacity(n);
    for (j, &lambda) in values.iter().enumerate() {
        let mut v = vectors.column(j);
        let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm > 0.0 {
            v.iter_mut().for_each(|z| *z /= norm);
            for (i, z) in v.iter().enumerate() {
                vectors[(i, j)] = *z;
            }
        }
        let mv = m.mul_vec(&v);
        residuals.push(mv.iter().zip(&v).map(|(a, b)| (a - lambda * b).norm_sqr()).sum::<f64>().sqrt());
    }
    Ok(EigenDecomposition { dim: n, eigenvalues: values, eigenvectors: vectors, residuals })
}

/// All eigenvalues of a general square complex matrix.
///
/// The matrix is first split along the strongly connected components of its
/// exact nonzero pattern (a symmetric permutation to block triangular form),
/// and each diagonal block is solved on its own. Nilpotent structure coming
/// from acyclic parts of the pattern then yields exact zeros instead of the
/// `ε^(1/k)` scatter a dense solve produces.
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<Complex64>> {
    check_input(m)?;
    let mut out = Vec::with_capacity(m.rows);
    for block in strongly_connected_blocks(m) {
        if block.len() == 1 {
            out.push(m[(block[0], block[0])]);
            continue;
        }
        let sub = m.principal_submatrix(&block);
        let vals = sub
            .to_faer()
            .eigenvalues()
            .map_err(|e| Error::Eigensolver { dim: sub.rows, reason: format!("QR iteration did not converge ({e:?})") })?;
        out.extend(vals);
    }
    Ok(out)
}

/// Strongly connected components of the digraph `i -> j` iff `m[i][j] != 0`
/// (iterative Tarjan).
pub fn strongly_connected_blocks(m: &ComplexMatrix) -> Vec<Vec<usize>> {
    let n = m.rows;
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| m[(i, j)] != ZERO).collect()).collect();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &ComplexMatrix) -> Complex64 {
    assert!(m.is_square());
    let n = m.rows;
    let mut a = m.clone();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n).max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm())).unwrap();
        if a[(pivot, col)] == ZERO {
            return ZERO;
        }
        if pivot != col {
            for j in 0..n {
                a.data.swap(pivot * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for row in col + 1..n {
            let f = a[(row, col)] / p;
            if f == ZERO {
                continue;
            }
            for j in col..n {
                let v = a[(col, j)];
                a[(row, j)] -= f * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.into_iter().map(|z| z.re).collect()
    }

    #[test]
    fn identity_eigenvalues() {
        let e = eig(&ComplexMatrix::identity(3)).unwrap();
        assert!(e.eigenvalues.iter().all(|z| (z - ONE).norm() < 1e-12));
        assert!(e.residuals.iter().all(|&r| r < 1e-12));
    }

    #[test]
    fn symmetric_two_by_two() {
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]);
        let e = eig(&m).unwrap();
        let vals = sorted_re(e.eigenvalues.clone());
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
        let bound = EigenDecomposition::residual_bound(&m);
        assert!(e.residuals.iter().all(|&r| r <= bound));
        assert!(e.eigenvector_condition().unwrap() < 10.0);
    }

    #[test]
    fn nilpotent_is_defective() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let e = eig(&m).unwrap();
        assert!(e.eigenvalues.iter().all(|z| z.norm() < 1e-8));
        assert!(e.eigenvector_condition().unwrap() > 1e8);
        assert_eq!(eigenvalues(&m).unwrap(), vec![ZERO, ZERO]);
    }

    #[test]
    fn rotation_has_complex_pair() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
        let mut vals = eigenvalues(&m).unwrap();
        vals.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((vals[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((vals[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn block_split_matches_dense() {
        // upper block triangular with blocks [[1,2],[2,1]] and [5]
        let m = ComplexMatrix::from_real_rows(&[vec![5.0, 0.0, 0.0], vec![7.0, 1.0, 2.0], vec![-3.0, 2.0, 1.0]]);
        assert_eq!(strongly_connected_blocks(&m).len(), 2);
        let split = sorted_re(eigenvalues(&m).unwrap());
        let dense = sorted_re(eig(&m).unwrap().eigenvalues);
        for (a, b) in split.iter().zip(&dense) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!((split[0] + 1.0).abs() < 1e-12 && (split[1] - 3.0).abs() < 1e-12 && (split[2] - 5.0).abs() < 1e-12);
    }

    #[test]
    fn non_square_and_nan_rejected() {
        assert!(eig(&ComplexMatrix::zeros(2, 3)).is_err());
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(f64::NAN);
        assert!(eigenvalues(&m).is_err());
    }

    #[test]
    fn determinant_small_cases() {
        let m = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0, 0.0], vec![1.0, 3.0, 1.0], vec![0.0, 1.0, 4.0]]);
        assert!((determinant(&m) - c(18.0)).norm() < 1e-12);
        let singular = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(determinant(&singular).norm() < 1e-12);
        let swap = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!((determinant(&swap) + ONE).norm() < 1e-15);
    }

    #[test]
    fn kron_dimensions_and_entries() {
        let a = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let b = ComplexMatrix::identity(2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k[(2, 0)], c(3.0));
        assert_eq!(k[(2, 1)], ZERO);
        assert_eq!(k[(3, 3)], c(4.0));
    }
}

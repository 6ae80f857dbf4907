//! Lift eigenvectors assembled from eigenvectors of `ρᵢ(B)`.
//!
//! If `ρᵢ(B)·c = λ·c`, with `c` split into `r` blocks of length `dᵢ`, then for
//! every row index `k < dᵢ` the vector
//! `w[(v, h)] = Σ_j ρᵢ(h)[k][j]·c[v·dᵢ + j]` satisfies `A·w = λ·w`.

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{eig, EigenDecomposition, ZERO};
use crate::repr::IrrepSet;
use crate::spectra::{check_group, rho_matrix};
use crate::voltage::{associated_matrix, build_lift, VoltageDigraph};

/// Irreps whose `ρᵢ(B)` has an eigenvector matrix worse conditioned than
/// this are treated as defective and skipped.
pub const DEFECTIVE_CONDITION: f64 = 1e6;
/// Assembled vectors shorter than this (before normalisation) are dropped.
pub const ZERO_VECTOR_NORM: f64 = 1e-12;

/// One unit-norm eigenvector of the lift adjacency matrix.
#[derive(Clone, Debug)]
pub struct LiftEigenpair {
    pub value: Complex64,
    /// Indexed by lift vertex `u·n + g`.
    pub vector: Vec<Complex64>,
    pub irrep: usize,
    pub row: usize,
    /// `‖A·w − λ·w‖₂`.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct LiftEigenvectors {
    pub pairs: Vec<LiftEigenpair>,
    /// Assembled vectors discarded as numerically zero.
    pub zero_vectors: usize,
    /// `(irrep index, eigenvector condition number)` for skipped irreps.
    pub defective: Vec<(usize, f64)>,
}

impl LiftEigenvectors {
    /// Largest residual among the returned pairs.
    pub fn worst_residual(&self) -> f64 {
        self.pairs.iter().map(|p| p.residual).fold(0.0, f64::max)
    }
}

/// Eigenpairs of the lift from complete irreps.
pub fn lift_eigenvectors(d: &VoltageDigraph, s: &IrrepSet) -> Result<LiftEigenvectors> {
    check_group(d, s.group())?;
    let b = associated_matrix(d);
    let lift = build_lift(d);
    let n = d.group().order();
    let r = d.order();
    let mut out = LiftEigenvectors { pairs: Vec::new(), zero_vectors: 0, defective: Vec::new() };

    for (i, irrep) in s.irreps().iter().enumerate() {
        let dim = irrep.dim();
        let m = rho_matrix(&b, irrep);
        let evd: EigenDecomposition = eig(&m)?;
        let cond = evd.eigenvector_condition()?;
        if !(cond <= DEFECTIVE_CONDITION) {
            out.defective.push((i, cond));
            continue;
        }
        for (col, &value) in evd.eigenvalues.iter().enumerate() {
            let c = evd.eigenvectors.column(col);
            for k in 0..dim {
                let mut w = vec![ZERO; r * n];
                for v in 0..r {
                    for h in 0..n {
                        let rho = irrep.matrix(h);
                        w[v * n + h] = (0..dim).map(|j| rho[(k, j)] * c[v * dim + j]).sum();
                    }
                }
                let norm = w.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
                if norm < ZERO_VECTOR_NORM {
                    out.zero_vectors += 1;
                    continue;
                }
                w.iter_mut().for_each(|z| *z /= norm);
                let mut aw = vec![ZERO; r * n];
                for &(from, to) in lift.arcs() {
                    aw[from] += w[to];
                }
                let residual = aw.iter().zip(&w).map(|(a, x)| (a - value * x).norm_sqr()).sum::<f64>().sqrt();
                out.pairs.push(LiftEigenpair { value, vector: w, irrep: i, row: k, residual });
            }
        }
    }
    Ok(out)
}

use crate::matrix::Matrix;
use crate::scalar::Field;

use super::{Module, ReplibError};

/// `X ↦ N(s) X − X M(s)` on a row-major flattened `X`.
fn commutator_defect<F: Field>(ns: &Matrix<F>, ms: &Matrix<F>, x: &[F], rows: usize, cols: usize) -> Vec<F> {
    let xm = Matrix::from_vec(rows, cols, x.to_vec());
    ns.mul(&xm).sub(&xm.mul(ms)).into_vec()
}

/// Basis of `Hom_G(M, N)` as `dim N × dim M` matrices, in reduced echelon
/// form with respect to the row-major flattening.
///
/// Solves `N(s) X = X M(s)` one generator at a time, each step restricted
/// to the solutions of the previous ones.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Vec<Matrix<F>>, ReplibError> {
    if *m.group() != *n.group() {
        return Err(ReplibError::GroupMismatch);
    }
    let (rows, cols) = (n.dim(), m.dim());
    let d = rows * cols;
    if d == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(&Matrix<F>, &Matrix<F>)> = n
        .generator_matrices()
        .iter()
        .zip(m.generator_matrices())
        .filter(|(a, b)| !(a.is_identity() && b.is_identity()))
        .collect();
    let mut basis: Option<Vec<Vec<F>>> = None;
    for (ns, ms) in pairs {
        basis = Some(match basis {
            None => {
                // the operator on unknowns X[k][c] at column k * cols + c
                let mut op = Matrix::<F>::zeros(d, d);
                for k in 0..rows {
                    for c in 0..cols {
                        let col = k * cols + c;
                        for r in 0..rows {
                            let v = &ns[(r, k)];
                            if !v.is_zero() {
                                op[(r * cols + c, col)] = op[(r * cols + c, col)].clone() + v.clone();
                            }
                        }
                        for c2 in 0..cols {
                            let v = &ms[(c, c2)];
                            if !v.is_zero() {
                                op[(k * cols + c2, col)] = op[(k * cols + c2, col)].clone() - v.clone();
                            }
                        }
                    }
                }
                op.kernel()
            }
            Some(b) => {
                if b.is_empty() {
                    return Ok(Vec::new());
                }
                let images: Vec<Vec<F>> = b.iter().map(|x| commutator_defect(ns, ms, x, rows, cols)).collect();
                let combos = Matrix::from_columns(d, &images).kernel();
                combos
                    .iter()
                    .map(|c| {
                        let mut v = vec![F::zero(); d];
                        for (coef, x) in c.iter().zip(&b) {
                            if coef.is_zero() {
                                continue;
                            }
                            for (a, xv) in v.iter_mut().zip(x) {
                                if !xv.is_zero() {
                                    a.add_mul(coef, xv);
                                }
                            }
                        }
                        v
                    })
                    .collect()
            }
        });
    }
    let vectors: Vec<Vec<F>> = match basis {
        None => (0..d)
            .map(|i| {
                let mut v = vec![F::zero(); d];
                v[i] = F::one();
                v
            })
            .collect(),
        Some(b) if b.is_empty() => return Ok(Vec::new()),
        Some(b) => {
            let mut stacked = Matrix::from_rows(b);
            let rank = stacked.rref_in_place().len();
            stacked.to_rows().into_iter().take(rank).collect()
        }
    };
    Ok(vectors.into_iter().map(|v| Matrix::from_vec(rows, cols, v)).collect())
}

/// `dim Hom_G(M, N)`.
pub fn hom_dimension<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize, ReplibError> {
    Ok(hom_space(m, n)?.len())
}

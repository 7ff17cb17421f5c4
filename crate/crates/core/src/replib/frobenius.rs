use serde::Serialize;

use crate::group::{GroupRef, Subgroup};
use crate::matrix::{Matrix, SparseMatrix};
use crate::scalar::Field;

use super::{permutation_module, Module, ModuleHom, ReplibError};

/// The permutation module `A = k[G/H]` with its commutative special
/// Frobenius structure: `μ(e_ξ ⊗ e_η) = δ_ξη e_ξ`, `δ(e_ξ) = e_ξ ⊗ e_ξ`,
/// `ι(1) = Σ e_ξ`, `ε(e_ξ) = 1`.
#[derive(Clone, Debug)]
pub struct FrobeniusObject<F> {
    pub module: Module<F>,
    pub multiplication: ModuleHom<F>,
    pub comultiplication: ModuleHom<F>,
    pub unit: ModuleHom<F>,
    pub counit: ModuleHom<F>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub dimension: usize,
    pub associative: bool,
    pub coassociative: bool,
    pub unital: bool,
    pub counital: bool,
    pub frobenius: bool,
    pub special: bool,
    pub commutative: bool,
}

impl FrobeniusReport {
    pub fn all_hold(&self) -> bool {
        self.associative
            && self.coassociative
            && self.unital
            && self.counital
            && self.frobenius
            && self.special
            && self.commutative
    }
}

/// Builds the four structure maps; each is checked to be `G`-linear.
pub fn frobenius_object<F: Field>(group: &GroupRef, h: &Subgroup) -> Result<FrobeniusObject<F>, ReplibError> {
    let a = permutation_module::<F>(group, h);
    let n = a.dim();
    let aa = a.tensor(&a)?;
    let k = Module::trivial(group, 1);
    let mut mu = Matrix::zeros(n, n * n);
    let mut delta = Matrix::zeros(n * n, n);
    for x in 0..n {
        mu[(x, x * n + x)] = F::one();
        delta[(x * n + x, x)] = F::one();
    }
    Ok(FrobeniusObject {
        multiplication: ModuleHom::new(&aa, &a, mu)?,
        comultiplication: ModuleHom::new(&a, &aa, delta)?,
        unit: ModuleHom::new(&k, &a, Matrix::from_fn(n, 1, |_, _| F::one()))?,
        counit: ModuleHom::new(&a, &k, Matrix::from_fn(1, n, |_, _| F::one()))?,
        module: a,
    })
}

impl<F: Field> FrobeniusObject<F> {
    /// Checks the seven laws with sparse Kronecker products.
    pub fn check_laws(&self) -> FrobeniusReport {
        let n = self.module.dim();
        let id = SparseMatrix::<F>::identity(n);
        let mu = SparseMatrix::from_dense(&self.multiplication.matrix);
        let delta = SparseMatrix::from_dense(&self.comultiplication.matrix);
        let iota = SparseMatrix::from_dense(&self.unit.matrix);
        let eps = SparseMatrix::from_dense(&self.counit.matrix);
        let swap_perm: Vec<usize> = (0..n * n).map(|ab| (ab % n) * n + ab / n).collect();
        let swap = SparseMatrix::permutation(&swap_perm);

        let associative = mu.mul(&mu.kron(&id)) == mu.mul(&id.kron(&mu));
        let coassociative = delta.kron(&id).mul(&delta) == id.kron(&delta).mul(&delta);
        let unital = mu.mul(&iota.kron(&id)).is_identity() && mu.mul(&id.kron(&iota)).is_identity();
        let counital = eps.kron(&id).mul(&delta).is_identity() && id.kron(&eps).mul(&delta).is_identity();
        let dm = delta.mul(&mu);
        let frobenius = mu.kron(&id).mul(&id.kron(&delta)) == dm && id.kron(&mu).mul(&delta.kron(&id)) == dm;
        let special = mu.mul(&delta).is_identity();
        let commutative = mu.mul(&swap) == mu && swap.mul(&delta) == delta;
        FrobeniusReport {
            dimension: n,
            associative,
            coassociative,
            unital,
            counital,
            frobenius,
            special,
            commutative,
        }
    }
}

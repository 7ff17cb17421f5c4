use crate::group::GroupRef;
use crate::matrix::Matrix;
use crate::scalar::{Field, PrimeField, Ring};

use super::algebra::{primitive_idempotents, FiniteAlgebra};
use super::{BurnsideError, CrossedBurnsideAlgebra};

/// The center of the group algebra in the basis of class sums, with integer
/// class-multiplication coefficients.
#[derive(Clone, Debug)]
pub struct CenterOfGroupAlgebra {
    group: GroupRef,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// `constants[i * n + j][k]`: number of `(x, y) ∈ C_i × C_j` with
    /// `xy = z_k` for a fixed `z_k ∈ C_k`
    constants: Vec<Vec<i64>>,
}

impl CenterOfGroupAlgebra {
    pub fn new(group: &GroupRef) -> Self {
        let g = group.as_ref();
        let classes = g.conjugacy_classes();
        let mut class_of = vec![0; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let n = classes.len();
        let mut constants = vec![vec![0i64; n]; n * n];
        for (k, ck) in classes.iter().enumerate() {
            let z = ck[0];
            for (i, ci) in classes.iter().enumerate() {
                for &x in ci {
                    let y = g.mul(g.inv(x), z);
                    constants[i * n + class_of[y]][k] += 1;
                }
            }
        }
        CenterOfGroupAlgebra {
            group: group.clone(),
            classes,
            class_of,
            constants,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn constants(&self, i: usize, j: usize) -> &[i64] {
        &self.constants[i * self.dim() + j]
    }

    /// The center over a field, as a structure-constant algebra with the
    /// identity class sum as unit.
    pub fn algebra<F: Field>(&self) -> FiniteAlgebra<F> {
        let n = self.dim();
        let table = self
            .constants
            .iter()
            .map(|v| v.iter().map(|&c| F::from_i64(c)).collect())
            .collect();
        let mut unit = vec![F::zero(); n];
        unit[self.class_of[self.group.identity()]] = F::one();
        FiniteAlgebra::new(n, table, unit).expect("class sums span a unital algebra")
    }

    /// Expands class-sum coordinates into a group-algebra vector.
    pub fn to_group_vector<R: Ring>(&self, coords: &[R]) -> Vec<R> {
        (0..self.group.order())
            .map(|x| coords[self.class_of[x]].clone())
            .collect()
    }

    /// Class-sum coordinates of a central group-algebra vector; `None` if
    /// the vector is not constant on classes.
    pub fn from_group_vector<R: Ring>(&self, v: &[R]) -> Option<Vec<R>> {
        let coords: Vec<R> = self.classes.iter().map(|c| v[c[0]].clone()).collect();
        (0..v.len()).all(|x| v[x] == coords[self.class_of[x]]).then_some(coords)
    }
}

/// The whole group algebra `kG` in the element basis.
pub fn group_algebra<F: Field>(g: &GroupRef) -> FiniteAlgebra<F> {
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            let mut v = vec![F::zero(); n];
            v[g.mul(a, b)] = F::one();
            table.push(v);
        }
    }
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    FiniteAlgebra::new(n, table, unit).expect("group algebras are unital")
}

/// Product in `kG` of two element-basis vectors.
pub fn group_algebra_mul<R: Ring>(g: &GroupRef, x: &[R], y: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); g.order()];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if !yb.is_zero() {
                out[g.mul(a, b)].add_mul(xa, yb);
            }
        }
    }
    out
}

/// The image of `(H, a)` in `kG` over the integers: `Σ_{x ∈ G/H} x a x⁻¹`.
pub fn rho_coh_group_vector(xbur: &CrossedBurnsideAlgebra, i: usize) -> Vec<i64> {
    let g = xbur.group();
    let pair = &xbur.basis()[i];
    let mut v = vec![0i64; g.order()];
    for t in g.left_transversal(&pair.subgroup) {
        v[g.conj(t, pair.element)] += 1;
    }
    v
}

/// Matrix of `ρ^coh` from the crossed Burnside basis to class sums,
/// verified to be a unital algebra homomorphism onto the center.
pub fn rho_coh<F: Field>(xbur: &CrossedBurnsideAlgebra, z: &CenterOfGroupAlgebra) -> Result<Matrix<F>, BurnsideError> {
    if **xbur.group() != **z.group() {
        return Err(BurnsideError::RhoCoh("algebras over different groups".into()));
    }
    let n = xbur.rank();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let v: Vec<F> = rho_coh_group_vector(xbur, i).into_iter().map(F::from_i64).collect();
        let coords = z
            .from_group_vector(&v)
            .ok_or_else(|| BurnsideError::RhoCoh(format!("image of basis element {i} is not central")))?;
        cols.push(coords);
    }
    let rho = Matrix::from_columns(z.dim(), &cols);
    let zalg = z.algebra::<F>();
    if cols[xbur.unit()] != zalg.unit() {
        return Err(BurnsideError::RhoCoh("unit is not preserved".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let prod: Vec<F> = xbur.constants(i, j).iter().map(|&c| F::from_i64(c)).collect();
            let lhs = rho.mul_vec(&prod);
            let rhs = zalg.mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(BurnsideError::RhoCoh(format!(
                    "not multiplicative on basis pair ({i}, {j})"
                )));
            }
        }
    }
    if rho.rank() != z.dim() {
        return Err(BurnsideError::RhoCoh(format!(
            "rank {} is below the center's dimension {}",
            rho.rank(),
            z.dim()
        )));
    }
    Ok(rho)
}

/// A block of `F_p G`: its primitive central idempotent and the dimension
/// of the two-sided ideal it cuts out.
#[derive(Clone, Debug)]
pub struct Block<F> {
    /// coefficients on group elements
    pub idempotent: Vec<F>,
    /// coefficients on class sums
    pub class_coordinates: Vec<F>,
    pub dim: usize,
}

/// Blocks of `F_p G` via primitive idempotents of the center.
pub fn block_decomposition<F: PrimeField>(g: &GroupRef, seed: u64) -> Result<Vec<Block<F>>, BurnsideError> {
    let z = CenterOfGroupAlgebra::new(g);
    let ids = primitive_idempotents(&z.algebra::<F>(), seed)?;
    let mut blocks = Vec::with_capacity(ids.len());
    for c in ids {
        let e = z.to_group_vector(&c);
        for x in g.elements() {
            for h in g.elements() {
                if e[g.conj(h, x)] != e[x] {
                    return Err(BurnsideError::SplittingFailed("block idempotent is not central".into()));
                }
            }
        }
        let n = g.order();
        let cols: Vec<Vec<F>> = g
            .elements()
            .map(|x| {
                let mut col = vec![F::zero(); n];
                for (a, ea) in e.iter().enumerate() {
                    if !ea.is_zero() {
                        col[g.mul(a, x)] = col[g.mul(a, x)] + *ea;
                    }
                }
                col
            })
            .collect();
        let dim = Matrix::from_columns(n, &cols).rank();
        blocks.push(Block {
            idempotent: e,
            class_coordinates: c,
            dim,
        });
    }
    let total: usize = blocks.iter().map(|b| b.dim).sum();
    if total != g.order() {
        return Err(BurnsideError::SplittingFailed(format!(
            "block dimensions sum to {total}, not {}",
            g.order()
        )));
    }
    Ok(blocks)
}

use crate::group::{all_subgroups, InjectiveHom};
use crate::matrix::Matrix;
use crate::replib::{hom_space, restrict, Module, ReplibError};
use crate::scalar::Field;

use super::functor::{left_cosets, Level, MapKind, OrdinaryMackeyFunctor};
use super::MackeyError;

/// A level `Hom_H(Res X, Res Y)` with its reduced echelon basis.
pub(crate) struct HomLevel<F> {
    pub basis: Vec<Matrix<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> HomLevel<F> {
    pub fn new(basis: Vec<Matrix<F>>) -> Self {
        let pivots = basis
            .iter()
            .map(|b| {
                b.as_slice()
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("basis vectors are nonzero")
            })
            .collect();
        HomLevel { basis, pivots }
    }

    /// Coordinates of `f` in the echelon basis, `None` if `f` is not in the
    /// span. Reads them off the pivots and then checks the reconstruction.
    pub fn coordinates(&self, f: &Matrix<F>) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| f.as_slice()[p].clone()).collect();
        let mut rebuilt = Matrix::zeros(f.rows(), f.cols());
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                rebuilt.add_scaled(ci, b);
            }
        }
        (rebuilt == *f).then_some(c)
    }
}

/// Values of a structure map on one basis intertwiner, before taking
/// coordinates: restriction is literal, conjugation is `Y(g) f X(g)⁻¹` and
/// the transfer is the relative trace `Σ_{t ∈ H/K} Y(t) f X(t)⁻¹`.
pub(crate) struct HomActions<F> {
    pub x: Vec<Matrix<F>>,
    pub y: Vec<Matrix<F>>,
}

impl<F: Field> HomActions<F> {
    pub fn new(x: &Module<F>, y: &Module<F>) -> Self {
        let g = x.group();
        HomActions {
            x: g.elements().map(|e| x.action(e).into_owned()).collect(),
            y: g.elements().map(|e| y.action(e).into_owned()).collect(),
        }
    }

    fn twist(&self, g: usize, ginv: usize, f: &Matrix<F>) -> Matrix<F> {
        self.y[g].mul(f).mul(&self.x[ginv])
    }
}

pub(crate) fn hom_levels<F: Field>(
    x: &Module<F>,
    y: &Module<F>,
) -> Result<(Vec<Level>, Vec<HomLevel<F>>), MackeyError> {
    let g = x.group();
    let mut levels = Vec::new();
    let mut spaces = Vec::new();
    for s in all_subgroups(g) {
        let i = InjectiveHom::inclusion(g, &s);
        let basis = hom_space(&restrict(&i, x)?, &restrict(&i, y)?)?;
        levels.push(Level {
            dim: basis.len(),
            labels: (0..basis.len()).map(|j| format!("f{j}")).collect(),
            subgroup: s,
        });
        spaces.push(HomLevel::new(basis));
    }
    Ok((levels, spaces))
}

/// Evaluates one structure map of the Hom-functor on basis element `j`.
pub(crate) fn hom_image<F: Field>(
    levels: &[Level],
    spaces: &[HomLevel<F>],
    acts: &HomActions<F>,
    g: &crate::group::FiniteGroup,
    kind: MapKind,
    j: usize,
) -> Result<Vec<F>, MackeyError> {
    let (value, to) = match kind {
        MapKind::Restriction { from, to } => (spaces[from].basis[j].clone(), to),
        MapKind::Transfer { from, to } => {
            let f = &spaces[from].basis[j];
            let mut sum = Matrix::zeros(f.rows(), f.cols());
            for t in left_cosets(g, &levels[to].subgroup, &levels[from].subgroup) {
                sum = sum.add(&acts.twist(t, g.inv(t), f));
            }
            (sum, to)
        }
        MapKind::Conjugation { element, from, to } => (acts.twist(element, g.inv(element), &spaces[from].basis[j]), to),
    };
    spaces[to]
        .coordinates(&value)
        .ok_or_else(|| MackeyError::NotInLevel(levels[to].subgroup.elements().to_vec()))
}

/// The Mackey functor `H ↦ Hom_H(Res X, Res Y)`.
///
/// Every image is checked to lie in its target Hom-space; an image outside
/// it is reported as [`MackeyError::NotInLevel`].
pub fn hom_decategorify<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<OrdinaryMackeyFunctor<F>, MackeyError> {
    if x.group() != y.group() {
        return Err(ReplibError::GroupMismatch.into());
    }
    let g = x.group().clone();
    let (levels, spaces) = hom_levels(x, y)?;
    let acts = HomActions::new(x, y);
    let lv = levels.clone();
    OrdinaryMackeyFunctor::assemble(g.clone(), levels, |kind, j| hom_image(&lv, &spaces, &acts, &g, kind, j))
}

use crate::burnside::GSet;
use crate::group::GroupRef;
use crate::matrix::Matrix;
use crate::replib::{FrobeniusObject, Module, ModuleHom};
use crate::scalar::{Field, Ring};

use super::functor::OrdinaryMackeyFunctor;
use super::hom::{hom_image, hom_levels, HomActions};
use super::MackeyError;

/// A Mackey functor with a ring structure on every level.
///
/// `products[l][i]` is the matrix of left multiplication by the `i`-th
/// basis element of level `l`; `units[l]` are the coordinates of `1`.
#[derive(Clone, Debug)]
pub struct GreenFunctorData<R> {
    pub underlying: OrdinaryMackeyFunctor<R>,
    pub products: Vec<Vec<Matrix<R>>>,
    pub units: Vec<Vec<R>>,
}

impl<R: Ring> GreenFunctorData<R> {
    /// Left multiplication by `x` on level `l`.
    pub fn left_multiplication(&self, l: usize, x: &[R]) -> Matrix<R> {
        let d = self.underlying.levels()[l].dim;
        let mut out = Matrix::zeros(d, d);
        for (c, p) in x.iter().zip(&self.products[l]) {
            if !c.is_zero() {
                out.add_scaled(c, p);
            }
        }
        out
    }

    /// Right multiplication by `x` on level `l`.
    pub fn right_multiplication(&self, l: usize, x: &[R]) -> Matrix<R> {
        let d = self.underlying.levels()[l].dim;
        let cols: Vec<Vec<R>> = self.products[l].iter().map(|p| p.mul_vec(x)).collect();
        Matrix::from_columns(d, &cols)
    }

    pub fn multiply(&self, l: usize, x: &[R], y: &[R]) -> Vec<R> {
        self.left_multiplication(l, x).mul_vec(y)
    }
}

/// An algebra object `(Y, μ, η)` in `G`-modules: `μ : Y ⊗ Y → Y` and
/// `η : k → Y` are `G`-maps, `μ` is associative and `η` a two-sided unit.
#[derive(Clone, Debug)]
pub struct Monoid<F> {
    module: Module<F>,
    multiplication: Matrix<F>,
    unit: Vec<F>,
}

impl<F: Field> Monoid<F> {
    pub fn new(module: Module<F>, multiplication: Matrix<F>, unit: Vec<F>) -> Result<Self, MackeyError> {
        let d = module.dim();
        if (multiplication.rows(), multiplication.cols()) != (d, d * d) || unit.len() != d {
            return Err(MackeyError::NotAMonoid("structure maps have the wrong shape".into()));
        }
        let yy = module.tensor(&module)?;
        ModuleHom::new(&yy, &module, multiplication.clone())
            .map_err(|_| MackeyError::NotAMonoid("multiplication is not a G-map".into()))?;
        let k = Module::trivial(module.group(), 1);
        let eta = Matrix::from_columns(d, std::slice::from_ref(&unit));
        ModuleHom::new(&k, &module, eta.clone()).map_err(|_| MackeyError::NotAMonoid("unit is not G-fixed".into()))?;
        let id = Matrix::identity(d);
        if multiplication.mul(&multiplication.kron(&id)) != multiplication.mul(&id.kron(&multiplication)) {
            return Err(MackeyError::NotAMonoid("multiplication is not associative".into()));
        }
        if !multiplication.mul(&eta.kron(&id)).is_identity() || !multiplication.mul(&id.kron(&eta)).is_identity() {
            return Err(MackeyError::NotAMonoid("unit is not a two-sided unit".into()));
        }
        Ok(Monoid {
            module,
            multiplication,
            unit,
        })
    }

    /// The ground field `k` with its own multiplication.
    pub fn trivial(g: &GroupRef) -> Self {
        Monoid {
            module: Module::trivial(g, 1),
            multiplication: Matrix::identity(1),
            unit: vec![F::one()],
        }
    }

    /// `k[G/H]` with the pointwise multiplication of a Frobenius object.
    pub fn from_frobenius(a: &FrobeniusObject<F>) -> Result<Self, MackeyError> {
        Self::new(
            a.module.clone(),
            a.multiplication.matrix.clone(),
            a.unit.matrix.column(0),
        )
    }

    /// The group algebra `kG` with `G` acting by conjugation, the action
    /// under which the group-algebra product is a `G`-map.
    pub fn group_algebra(g: &GroupRef) -> Result<Self, MackeyError> {
        let n = g.order();
        let action = g
            .elements()
            .flat_map(|x| g.elements().map(move |a| g.conj(x, a)))
            .collect();
        let module = Module::from_gset(&GSet::new(g.clone(), n, action)?);
        let mut mu = Matrix::zeros(n, n * n);
        for a in g.elements() {
            for b in g.elements() {
                mu[(g.mul(a, b), a * n + b)] = F::one();
            }
        }
        let mut unit = vec![F::zero(); n];
        unit[g.identity()] = F::one();
        Self::new(module, mu, unit)
    }

    pub fn module(&self) -> &Module<F> {
        &self.module
    }

    pub fn multiplication(&self) -> &Matrix<F> {
        &self.multiplication
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }
}

/// The Green functor `H ↦ Hom_H(k, Res Y) = Y^H` for the trivial comonoid
/// `k` and a monoid `Y`, with the convolution product `f·g = μ(f ⊗ g)`
/// (the comultiplication of `k` is the identity `k → k ⊗ k`).
pub fn green_from_monoid<F: Field>(y: &Monoid<F>) -> Result<GreenFunctorData<F>, MackeyError> {
    let g = y.module.group().clone();
    let x = Module::trivial(&g, 1);
    let (levels, spaces) = hom_levels(&x, &y.module)?;
    let acts = HomActions::new(&x, &y.module);
    let lv = levels.clone();
    let underlying =
        OrdinaryMackeyFunctor::assemble(g.clone(), levels, |kind, j| hom_image(&lv, &spaces, &acts, &g, kind, j))?;
    let eta = Matrix::from_columns(y.module.dim(), std::slice::from_ref(&y.unit));
    let mut products = Vec::with_capacity(spaces.len());
    let mut units = Vec::with_capacity(spaces.len());
    for (l, space) in spaces.iter().enumerate() {
        let not_in = || MackeyError::NotInLevel(lv[l].subgroup.elements().to_vec());
        let mut level = Vec::with_capacity(space.basis.len());
        for bi in &space.basis {
            let cols = space
                .basis
                .iter()
                .map(|bj| {
                    space
                        .coordinates(&y.multiplication.mul(&bi.kron(bj)))
                        .ok_or_else(not_in)
                })
                .collect::<Result<Vec<_>, _>>()?;
            level.push(Matrix::from_columns(space.basis.len(), &cols));
        }
        products.push(level);
        units.push(space.coordinates(&eta).ok_or_else(not_in)?);
    }
    Ok(GreenFunctorData {
        underlying,
        products,
        units,
    })
}

use std::borrow::Cow;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::burnside::GSet;
use crate::group::{GroupRef, InjectiveHom, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::Field;

use super::ReplibError;

/// Modules of at most this dimension cache the action of every element.
const CACHE_DIM: usize = 96;

/// Groups of at most this order are checked on all pairs of elements.
const FULL_CHECK_ORDER: usize = 24;

/// A finite-dimensional left `kG`-module, stored by the matrices of the
/// group's generators. Matrices act on column vectors.
#[derive(Clone)]
pub struct Module<F> {
    group: GroupRef,
    dim: usize,
    generators: Arc<Vec<Matrix<F>>>,
    elements: Arc<OnceLock<Vec<Matrix<F>>>>,
}

impl<F> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module(dim {} over a group of order {})",
            self.dim,
            self.group.order()
        )
    }
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && *self.group == *other.group && self.generators == other.generators
    }
}

/// Action of every element, built from generator matrices along the
/// group's word tree.
fn all_actions<F: Field>(group: &GroupRef, dim: usize, gens: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let mut out = vec![Matrix::zeros(0, 0); group.order()];
    out[group.identity()] = Matrix::identity(dim);
    for (y, parent, k) in group.word_tree() {
        out[y] = gens[k].mul(&out[parent]);
    }
    out
}

impl<F: Field> Module<F> {
    /// Builds a module from the matrices of `group.generators()`, checking
    /// shapes and that the action is a homomorphism (generators against
    /// all elements, and all pairs for small groups).
    pub fn from_generators(group: GroupRef, dim: usize, generators: Vec<Matrix<F>>) -> Result<Self, ReplibError> {
        if generators.len() != group.generators().len() {
            return Err(ReplibError::NotAModule(format!(
                "expected {} generator matrices, got {}",
                group.generators().len(),
                generators.len()
            )));
        }
        if let Some(k) = generators.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ReplibError::NotAModule(format!(
                "generator matrix {k} is not {dim}x{dim}"
            )));
        }
        let actions = all_actions(&group, dim, &generators);
        let m = Module::from_parts(group, dim, generators);
        m.check_actions(&actions)?;
        let _ = m.elements.set(actions);
        Ok(m)
    }

    /// Builds a module from the matrix of every element.
    pub fn from_actions(group: GroupRef, actions: Vec<Matrix<F>>) -> Result<Self, ReplibError> {
        if actions.len() != group.order() {
            return Err(ReplibError::NotAModule(format!(
                "expected {} action matrices, got {}",
                group.order(),
                actions.len()
            )));
        }
        let dim = actions[group.identity()].rows();
        if let Some(g) = actions.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ReplibError::NotAModule(format!("action matrix {g} is not {dim}x{dim}")));
        }
        let generators = group.generators().iter().map(|&s| actions[s].clone()).collect();
        let m = Module::from_parts(group, dim, generators);
        m.check_actions(&actions)?;
        let _ = m.elements.set(actions);
        Ok(m)
    }

    fn check_actions(&self, actions: &[Matrix<F>]) -> Result<(), ReplibError> {
        let g = &self.group;
        if !actions[g.identity()].is_identity() {
            return Err(ReplibError::NotAModule("identity does not act trivially".into()));
        }
        let firsts: Vec<usize> = if g.order() <= FULL_CHECK_ORDER {
            g.elements().collect()
        } else {
            g.generators().to_vec()
        };
        for &a in &firsts {
            for b in g.elements() {
                if actions[a].mul(&actions[b]) != actions[g.mul(a, b)] {
                    return Err(ReplibError::NotAModule(format!(
                        "action is not multiplicative at ({}, {})",
                        g.element_name(a),
                        g.element_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Trusted constructor for modules built by the crate's own functors.
    pub(crate) fn from_parts(group: GroupRef, dim: usize, generators: Vec<Matrix<F>>) -> Self {
        Module {
            group,
            dim,
            generators: Arc::new(generators),
            elements: Arc::new(OnceLock::new()),
        }
    }

    /// The trivial module of dimension `dim`.
    pub fn trivial(group: &GroupRef, dim: usize) -> Self {
        let gens = group.generators().iter().map(|_| Matrix::identity(dim)).collect();
        Module::from_parts(group.clone(), dim, gens)
    }

    pub fn zero(group: &GroupRef) -> Self {
        Module::trivial(group, 0)
    }

    /// Linearisation `k[X]` of a G-set.
    pub fn from_gset(x: &GSet) -> Self {
        let g = x.group();
        let gens = g
            .generators()
            .iter()
            .map(|&s| {
                let perm: Vec<usize> = (0..x.size()).map(|p| x.act(s, p)).collect();
                Matrix::permutation(&perm)
            })
            .collect();
        Module::from_parts(g.clone(), x.size(), gens)
    }

    /// The regular module `kG`.
    pub fn regular(group: &GroupRef) -> Self {
        permutation_module(group, &Subgroup::trivial(group))
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrices of `group().generators()`, in order.
    pub fn generator_matrices(&self) -> &[Matrix<F>] {
        &self.generators
    }

    /// Matrices of all elements; built on first use.
    pub fn actions(&self) -> &[Matrix<F>] {
        self.elements
            .get_or_init(|| all_actions(&self.group, self.dim, &self.generators))
    }

    /// Matrix of one element. Large modules compute it along a word
    /// instead of caching every element.
    pub fn action(&self, g: usize) -> Cow<'_, Matrix<F>> {
        if let Some(all) = self.elements.get() {
            return Cow::Borrowed(&all[g]);
        }
        if self.dim <= CACHE_DIM {
            return Cow::Borrowed(&self.actions()[g]);
        }
        let mut word = Vec::new();
        let tree = self.group.word_tree();
        let mut parent = vec![(usize::MAX, 0); self.group.order()];
        for (y, p, k) in tree {
            parent[y] = (p, k);
        }
        let mut x = g;
        while x != self.group.identity() {
            let (p, k) = parent[x];
            word.push(k);
            x = p;
        }
        // g = s_{word[0]} s_{word[1]} ... s_{word[last]}
        let mut m = Matrix::identity(self.dim);
        for &k in word.iter().rev() {
            m = self.generators[k].mul(&m);
        }
        Cow::Owned(m)
    }

    /// `Σ_g c_g g` acting on the module.
    pub fn group_algebra_action(&self, coefficients: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (g, c) in coefficients.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.action(g));
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Module<F>) -> Result<Module<F>, ReplibError> {
        Module::direct_sum_of(&[self.clone(), other.clone()])
    }

    pub fn direct_sum_of(parts: &[Module<F>]) -> Result<Module<F>, ReplibError> {
        let group = parts.first().ok_or(ReplibError::EmptySum)?.group.clone();
        if parts.iter().any(|m| *m.group != *group) {
            return Err(ReplibError::GroupMismatch);
        }
        let gens = (0..group.generators().len())
            .map(|k| Matrix::block_diag(&parts.iter().map(|m| m.generators[k].clone()).collect::<Vec<_>>()))
            .collect();
        let dim = parts.iter().map(|m| m.dim).sum();
        Ok(Module::from_parts(group, dim, gens))
    }

    /// `self ⊗ other` with the diagonal action; basis `(a, b)` at index
    /// `a * other.dim() + b`.
    pub fn tensor(&self, other: &Module<F>) -> Result<Module<F>, ReplibError> {
        if *self.group != *other.group {
            return Err(ReplibError::GroupMismatch);
        }
        let gens = self
            .generators
            .iter()
            .zip(other.generators.iter())
            .map(|(a, b)| a.kron(b))
            .collect();
        Ok(Module::from_parts(self.group.clone(), self.dim * other.dim, gens))
    }

    /// The contragredient module, `g ↦ ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> Module<F> {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|&s| self.action(self.group.inv(s)).transpose())
            .collect();
        Module::from_parts(self.group.clone(), self.dim, gens)
    }

    /// The submodule spanned by the columns of `basis` (assumed linearly
    /// independent), in that basis. Fails if the span is not invariant.
    pub fn submodule(&self, basis: &Matrix<F>) -> Result<Module<F>, ReplibError> {
        let k = basis.cols();
        if basis.rows() != self.dim {
            return Err(ReplibError::DimensionMismatch {
                expected: self.dim,
                found: basis.rows(),
            });
        }
        let rows = basis.transpose().rref().pivots;
        if rows.len() != k {
            return Err(ReplibError::NotAModule("submodule basis is linearly dependent".into()));
        }
        let square = Matrix::from_fn(k, k, |i, j| basis[(rows[i], j)].clone());
        let inv = square.inverse().expect("pivot rows form an invertible block");
        let mut gens = Vec::with_capacity(self.generators.len());
        for a in self.generators.iter() {
            let ab = a.mul(basis);
            let picked = Matrix::from_fn(k, k, |i, j| ab[(rows[i], j)].clone());
            let c = inv.mul(&picked);
            if basis.mul(&c) != ab {
                return Err(ReplibError::NotAModule("subspace is not invariant".into()));
            }
            gens.push(c);
        }
        Ok(Module::from_parts(self.group.clone(), k, gens))
    }

    /// The same module in a new basis: columns of `p` express the new basis
    /// in the old one.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Module<F>, ReplibError> {
        let inv = p
            .inverse()
            .ok_or_else(|| ReplibError::NotAHom("change of basis is singular".into()))?;
        let gens = self.generators.iter().map(|a| inv.mul(&a.mul(p))).collect();
        Ok(Module::from_parts(self.group.clone(), self.dim, gens))
    }

    /// Traces of one element from each conjugacy class.
    pub fn class_traces(&self) -> Vec<F> {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| self.action(c[0]).trace())
            .collect()
    }
}

/// A `kG`-linear map between two modules over the same group.
#[derive(Clone, Debug)]
pub struct ModuleHom<F> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> ModuleHom<F> {
    /// Checks shape and that the matrix intertwines every generator.
    pub fn new(source: &Module<F>, target: &Module<F>, matrix: Matrix<F>) -> Result<Self, ReplibError> {
        if *source.group != *target.group {
            return Err(ReplibError::GroupMismatch);
        }
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(ReplibError::NotAHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        for (k, (a, b)) in source.generators.iter().zip(target.generators.iter()).enumerate() {
            if b.mul(&matrix) != matrix.mul(a) {
                return Err(ReplibError::NotAHom(format!(
                    "does not commute with generator {}",
                    source.group.element_name(source.group.generators()[k])
                )));
            }
        }
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn identity(m: &Module<F>) -> Self {
        ModuleHom {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.dim),
        }
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &ModuleHom<F>) -> Result<ModuleHom<F>, ReplibError> {
        if inner.target != self.source {
            return Err(ReplibError::NotAHom("composing maps with mismatched modules".into()));
        }
        Ok(ModuleHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.matrix.is_invertible()
    }
}

/// The permutation module `k[G/H]` on the left cosets of `H`.
pub fn permutation_module<F: Field>(group: &GroupRef, h: &Subgroup) -> Module<F> {
    Module::from_gset(&GSet::cosets(group, h))
}

/// Restriction along an injective hom `i : H → G`.
pub fn restrict<F: Field>(i: &InjectiveHom, m: &Module<F>) -> Result<Module<F>, ReplibError> {
    if **i.target() != *m.group {
        return Err(ReplibError::GroupMismatch);
    }
    let gens = i
        .source()
        .generators()
        .iter()
        .map(|&s| m.action(i.apply(s)).into_owned())
        .collect();
    Ok(Module::from_parts(i.source().clone(), m.dim, gens))
}

/// Induction along `i : H → G`: basis `t ⊗ e_j` at index `t * dim N + j`
/// for `t` running over `i.transversal()`, with
/// `g (t ⊗ n) = t' ⊗ h n` where `g t = t' i(h)`.
pub fn induce<F: Field>(i: &InjectiveHom, n: &Module<F>) -> Result<Module<F>, ReplibError> {
    if **i.source() != *n.group {
        return Err(ReplibError::GroupMismatch);
    }
    let g = i.target();
    let tr = i.transversal();
    let (t, d) = (tr.len(), n.dim);
    let gens = g
        .generators()
        .iter()
        .map(|&s| {
            let mut m = Matrix::zeros(t * d, t * d);
            for (c, &rep) in tr.reps.iter().enumerate() {
                let (r, h) = i.factor(&tr, g.mul(s, rep));
                m.set_block(r * d, c * d, &n.action(h));
            }
            m
        })
        .collect();
    Ok(Module::from_parts(g.clone(), t * d, gens))
}

/// `Ind(f) = id ⊗ f` on induced bases.
pub fn induce_map<F: Field>(i: &InjectiveHom, f: &Matrix<F>) -> Matrix<F> {
    Matrix::identity(i.index()).kron(f)
}

/// Conjugation: for `N` over `H ≤ G` (given by `i`) and `a ∈ G`, the
/// module over `aHa⁻¹` on which `l` acts as `a⁻¹ l a` does on `N`; returned
/// with the inclusion `aHa⁻¹ → G`.
pub fn conj_module<F: Field>(
    i: &InjectiveHom,
    a: usize,
    n: &Module<F>,
) -> Result<(Module<F>, InjectiveHom), ReplibError> {
    let (incl, to_h) = i.conjugated(a);
    Ok((restrict(&to_h, n)?, incl))
}

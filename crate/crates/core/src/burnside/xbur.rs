use std::collections::HashMap;

use serde::Serialize;

use crate::group::{FiniteGroup, GroupRef, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::Ring;

/// A pair `(H, a)` with `a` centralising `H`, stored by its canonical
/// representative under simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralPair {
    pub subgroup: Subgroup,
    pub element: usize,
}

/// Canonical representative of the class of `(H, a)`: the minimum over
/// `g ∈ G` of `(gHg⁻¹ as a sorted list, gag⁻¹)`.
pub fn canonical_pair(g: &FiniteGroup, h: &Subgroup, a: usize) -> CentralPair {
    let mut best: Option<(Vec<usize>, usize)> = None;
    for x in g.elements() {
        let mut els: Vec<usize> = h.elements().iter().map(|&e| g.conj(x, e)).collect();
        els.sort_unstable();
        let cand = (els, g.conj(x, a));
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    let (els, element) = best.expect("group is nonempty");
    CentralPair {
        subgroup: g.subgroup_from_elements(&els).expect("conjugate of a subgroup"),
        element,
    }
}

/// The crossed Burnside algebra over the integers: basis of classes of
/// pairs `(H, a)`, `a ∈ C_G(H)`, with
/// `(K, b)·(H, a) = Σ_{KgH} (K ∩ gHg⁻¹, b·gag⁻¹)`.
#[derive(Clone, Debug)]
pub struct CrossedBurnsideAlgebra {
    group: GroupRef,
    basis: Vec<CentralPair>,
    index: HashMap<(Vec<usize>, usize), usize>,
    /// `constants[i * n + j]` is the product `basis[i] · basis[j]`
    constants: Vec<Vec<i64>>,
    unit: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairLabel {
    pub subgroup: Vec<usize>,
    pub subgroup_order: usize,
    pub element: usize,
    pub element_name: String,
}

impl CrossedBurnsideAlgebra {
    pub fn new(group: &GroupRef) -> Self {
        let g = group.as_ref();
        let mut basis: Vec<CentralPair> = Vec::new();
        for h in g.subgroups_up_to_conjugacy() {
            for &a in g.centralizer(&h).elements() {
                basis.push(canonical_pair(g, &h, a));
            }
        }
        basis.sort();
        basis.dedup();
        let index: HashMap<(Vec<usize>, usize), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.subgroup.elements().to_vec(), p.element), i))
            .collect();
        let n = basis.len();
        let mut alg = CrossedBurnsideAlgebra {
            group: group.clone(),
            basis,
            index,
            constants: Vec::with_capacity(n * n),
            unit: 0,
        };
        let whole = Subgroup::whole(g);
        alg.unit = alg.index[&(whole.elements().to_vec(), g.identity())];
        for i in 0..n {
            for j in 0..n {
                let c = alg.product_by_formula(i, j);
                alg.constants.push(c);
            }
        }
        alg
    }

    /// Evaluates the double-coset formula for `basis[i] · basis[j]`.
    fn product_by_formula(&self, i: usize, j: usize) -> Vec<i64> {
        let g = self.group.as_ref();
        let (k, b) = (&self.basis[i].subgroup, self.basis[i].element);
        let (h, a) = (&self.basis[j].subgroup, self.basis[j].element);
        let mut out = vec![0i64; self.basis.len()];
        for &x in &g.double_cosets(k, h).representatives {
            let inter = g.intersection(k, &g.conjugate_subgroup(h, x));
            let elt = g.mul(b, g.conj(x, a));
            out[self.index_of(&inter, elt)] += 1;
        }
        out
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CentralPair] {
        &self.basis
    }

    pub fn labels(&self) -> Vec<PairLabel> {
        self.basis
            .iter()
            .map(|p| PairLabel {
                subgroup: p.subgroup.elements().to_vec(),
                subgroup_order: p.subgroup.order(),
                element: p.element,
                element_name: self.group.element_name(p.element),
            })
            .collect()
    }

    /// Basis index of the class of `(H, a)`.
    pub fn index_of(&self, h: &Subgroup, a: usize) -> usize {
        let c = canonical_pair(&self.group, h, a);
        self.index[&(c.subgroup.elements().to_vec(), c.element)]
    }

    /// Basis index of `(G, 1)`.
    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn constants(&self, i: usize, j: usize) -> &[i64] {
        &self.constants[i * self.basis.len() + j]
    }

    /// Product of two coefficient vectors over any ring.
    pub fn multiply<R: Ring>(&self, x: &[R], y: &[R]) -> Vec<R> {
        let n = self.rank();
        let mut out = vec![R::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (o, &c) in out.iter_mut().zip(self.constants(i, j)) {
                    if c != 0 {
                        o.add_mul(&xy, &R::from_i64(c));
                    }
                }
            }
        }
        out
    }

    /// Structure-constant tensor reduced into `R`: entry `(k, i * n + j)`.
    pub fn constants_matrix<R: Ring>(&self) -> Matrix<R> {
        let n = self.rank();
        Matrix::from_fn(n, n * n, |k, ij| R::from_i64(self.constants[ij][k]))
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.rank();
        let e = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        for i in 0..n {
            for j in 0..n {
                let ij = self.constants(i, j).to_vec();
                for k in 0..n {
                    let left = self.multiply(&ij, &e(k));
                    let right = self.multiply(&e(i), self.constants(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Whether `(G, 1)` is a two-sided unit on every basis element.
    pub fn unit_holds(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            self.constants(self.unit, i) == e.as_slice() && self.constants(i, self.unit) == e.as_slice()
        })
    }
}

pub fn crossed_burnside(g: &GroupRef) -> CrossedBurnsideAlgebra {
    CrossedBurnsideAlgebra::new(g)
}

use serde::Serialize;

use crate::group::{GroupRef, InjectiveHom, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::Field;

use super::{induce, induce_map, restrict, Module, ModuleHom, ReplibError};

/// `η_ℓ : N → Res Ind N`, `n ↦ 1 ⊗ n`.
pub fn unit_left<F: Field>(i: &InjectiveHom, n: &Module<F>) -> Result<ModuleHom<F>, ReplibError> {
    let ind = induce(i, n)?;
    let tr = i.transversal();
    let d = n.dim();
    let mut m = Matrix::zeros(ind.dim(), d);
    m.set_block(tr.trivial * d, 0, &Matrix::identity(d));
    ModuleHom::new(n, &restrict(i, &ind)?, m)
}

/// `ε_ℓ : Ind Res M → M`, `t ⊗ m ↦ t m`.
pub fn counit_left<F: Field>(i: &InjectiveHom, m: &Module<F>) -> Result<ModuleHom<F>, ReplibError> {
    let ind = induce(i, &restrict(i, m)?)?;
    let blocks: Vec<Matrix<F>> = i.transversal().reps.iter().map(|&t| m.action(t).into_owned()).collect();
    ModuleHom::new(&ind, m, Matrix::hstack(&blocks))
}

/// `η_r : M → Ind Res M`, `m ↦ Σ_t t ⊗ t⁻¹ m`.
pub fn unit_right<F: Field>(i: &InjectiveHom, m: &Module<F>) -> Result<ModuleHom<F>, ReplibError> {
    let ind = induce(i, &restrict(i, m)?)?;
    let g = i.target();
    let blocks: Vec<Matrix<F>> = i
        .transversal()
        .reps
        .iter()
        .map(|&t| m.action(g.inv(t)).into_owned())
        .collect();
    ModuleHom::new(m, &ind, Matrix::vstack(&blocks))
}

/// `ε_r : Res Ind N → N`, projection onto the trivial coset.
pub fn counit_right<F: Field>(i: &InjectiveHom, n: &Module<F>) -> Result<ModuleHom<F>, ReplibError> {
    let ind = induce(i, n)?;
    let tr = i.transversal();
    let d = n.dim();
    let mut m = Matrix::zeros(d, ind.dim());
    m.set_block(0, tr.trivial * d, &Matrix::identity(d));
    ModuleHom::new(&restrict(i, &ind)?, n, m)
}

/// Units and counits of `Ind ⊣ Res ⊣ Ind` at one pair of modules, with the
/// results of the triangle identities and of the two composites
/// `ε_r η_ℓ = 1` and `ε_ℓ η_r = [G : H]`.
#[derive(Clone, Debug)]
pub struct UnitCounit<F> {
    pub eta_left: ModuleHom<F>,
    pub eps_left: ModuleHom<F>,
    pub eta_right: ModuleHom<F>,
    pub eps_right: ModuleHom<F>,
    pub report: TriangleReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    /// `ε_ℓ(Ind N) ∘ Ind(η_ℓ N) = 1`
    pub left_on_induced: bool,
    /// `Res(ε_ℓ M) ∘ η_ℓ(Res M) = 1`
    pub left_on_restricted: bool,
    /// `ε_r(Res M) ∘ Res(η_r M) = 1`
    pub right_on_restricted: bool,
    /// `Ind(ε_r N) ∘ η_r(Ind N) = 1`
    pub right_on_induced: bool,
    /// `ε_r ∘ η_ℓ = 1_N`
    pub separable: bool,
    /// `ε_ℓ ∘ η_r = [G : H] · 1_M`
    pub cohomological: bool,
}

impl TriangleReport {
    pub fn all_hold(&self) -> bool {
        self.left_on_induced
            && self.left_on_restricted
            && self.right_on_restricted
            && self.right_on_induced
            && self.separable
            && self.cohomological
    }
}

/// Builds the four maps for `M` over `G` and `N` over `H` and checks the
/// identities between them.
pub fn unit_counit<F: Field>(i: &InjectiveHom, m: &Module<F>, n: &Module<F>) -> Result<UnitCounit<F>, ReplibError> {
    let eta_left = unit_left(i, n)?;
    let eps_left = counit_left(i, m)?;
    let eta_right = unit_right(i, m)?;
    let eps_right = counit_right(i, n)?;

    let ind_n = induce(i, n)?;
    let res_m = restrict(i, m)?;
    let left_on_induced = counit_left(i, &ind_n)?
        .matrix
        .mul(&induce_map(i, &eta_left.matrix))
        .is_identity();
    let left_on_restricted = eps_left.matrix.mul(&unit_left(i, &res_m)?.matrix).is_identity();
    let right_on_restricted = counit_right(i, &res_m)?.matrix.mul(&eta_right.matrix).is_identity();
    let right_on_induced = induce_map(i, &eps_right.matrix)
        .mul(&unit_right(i, &ind_n)?.matrix)
        .is_identity();
    let separable = eps_right.matrix.mul(&eta_left.matrix).is_identity();
    let index = F::from_i64(i.index() as i64);
    let cohomological = eps_left.matrix.mul(&eta_right.matrix) == Matrix::scalar(m.dim(), index);
    Ok(UnitCounit {
        eta_left,
        eps_left,
        eta_right,
        eps_right,
        report: TriangleReport {
            left_on_induced,
            left_on_restricted,
            right_on_restricted,
            right_on_induced,
            separable,
            cohomological,
        },
    })
}

/// One summand `Ind_L^K (p^* N)` of the Mackey decomposition, with
/// `L = K ∩ xHx⁻¹` and `p(l) = x⁻¹ l x`.
#[derive(Clone, Debug)]
pub struct MackeySummand<F> {
    pub representative: usize,
    pub intersection: Subgroup,
    pub module: Module<F>,
    /// left mate component `Ind_L^K p^* N → Res_K Ind_H N`
    pub left: Matrix<F>,
    /// right mate component `Res_K Ind_H N → Ind_L^K p^* N`
    pub right: Matrix<F>,
}

/// The Mackey isomorphism `⊕_x Ind_L^K p^* N → Res_K Ind_H N` assembled
/// from the mates `ε ∘ Ind(γ^*) ∘ Ind(p^* η)` and checked against the
/// mates built from the other adjunction.
#[derive(Clone, Debug)]
pub struct MackeyIso<F> {
    pub summands: Vec<MackeySummand<F>>,
    pub source: Module<F>,
    pub target: Module<F>,
    pub map: ModuleHom<F>,
    /// stacked right mates
    pub inverse: ModuleHom<F>,
    pub report: MackeyReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MackeyReport {
    pub double_cosets: usize,
    pub dimension: usize,
    pub invertible: bool,
    pub mates_inverse: bool,
}

impl MackeyReport {
    pub fn holds(&self) -> bool {
        self.invertible && self.mates_inverse
    }
}

/// For `H` and `K` in `G` (as inclusions `i`, `j`) and `N` over `H`.
pub fn mackey_iso<F: Field>(i: &InjectiveHom, j: &InjectiveHom, n: &Module<F>) -> Result<MackeyIso<F>, ReplibError> {
    let g: &GroupRef = i.target();
    if **j.target() != **g {
        return Err(ReplibError::GroupMismatch);
    }
    let h_img = i.image();
    let k_img = j.image();
    let v = induce(i, n)?;
    let w = restrict(j, &v)?;
    let eta_i = unit_left(i, n)?.matrix;
    let eps_i = counit_right(i, n)?.matrix;
    let dc = g.double_cosets(&k_img, &h_img);
    let mut summands = Vec::with_capacity(dc.len());
    for &x in &dc.representatives {
        let l = g.intersection(&k_img, &g.conjugate_subgroup(&h_img, x));
        let incl_l = InjectiveHom::inclusion(g, &l);
        let lg = incl_l.source().clone();
        let xinv = g.inv(x);
        let q_map: Vec<usize> = lg
            .elements()
            .map(|e| j.preimage(incl_l.apply(e)).expect("L lies in K"))
            .collect();
        let p_map: Vec<usize> = lg
            .elements()
            .map(|e| i.preimage(g.conj(xinv, incl_l.apply(e))).expect("x⁻¹Lx lies in H"))
            .collect();
        let q = InjectiveHom::new(lg.clone(), j.source().clone(), q_map)?;
        let p = InjectiveHom::new(lg.clone(), i.source().clone(), p_map)?;
        let pn = restrict(&p, n)?;
        let module = induce(&q, &pn)?;

        // left mate: ε^q_W ∘ Ind_q(γ^*) ∘ Ind_q(p^* η^i)
        let gamma = v.action(x).into_owned();
        let left = counit_left(&q, &w)?
            .matrix
            .mul(&induce_map(&q, &gamma))
            .mul(&induce_map(&q, &eta_i));
        // right mate: Ind_q(p^* ε^i) ∘ Ind_q((γ⁻¹)^*) ∘ η^q_W
        let gamma_inv = v.action(xinv).into_owned();
        let right = induce_map(&q, &eps_i)
            .mul(&induce_map(&q, &gamma_inv))
            .mul(&unit_right(&q, &w)?.matrix);
        summands.push(MackeySummand {
            representative: x,
            intersection: l,
            module,
            left,
            right,
        });
    }
    let source = Module::direct_sum_of(&summands.iter().map(|s| s.module.clone()).collect::<Vec<_>>())?;
    let left = Matrix::hstack(&summands.iter().map(|s| s.left.clone()).collect::<Vec<_>>());
    let right = Matrix::vstack(&summands.iter().map(|s| s.right.clone()).collect::<Vec<_>>());
    let map = ModuleHom::new(&source, &w, left)?;
    let inverse = ModuleHom::new(&w, &source, right)?;
    let report = MackeyReport {
        double_cosets: dc.len(),
        dimension: w.dim(),
        invertible: map.matrix.is_invertible(),
        mates_inverse: map.matrix.mul(&inverse.matrix).is_identity() && inverse.matrix.mul(&map.matrix).is_identity(),
    };
    Ok(MackeyIso {
        summands,
        source,
        target: w,
        map,
        inverse,
        report,
    })
}

/// Projection formula `Ind(Res X ⊗ Y) → X ⊗ Ind Y`,
/// `t ⊗ (x ⊗ y) ↦ t x ⊗ (t ⊗ y)`.
pub fn projection_map<F: Field>(i: &InjectiveHom, x: &Module<F>, y: &Module<F>) -> Result<ModuleHom<F>, ReplibError> {
    let source = induce(i, &restrict(i, x)?.tensor(y)?)?;
    let ind_y = induce(i, y)?;
    let target = x.tensor(&ind_y)?;
    let reps = i.transversal().reps;
    let (nt, dx, dy) = (reps.len(), x.dim(), y.dim());
    let mut m = Matrix::zeros(target.dim(), source.dim());
    for (t, &rep) in reps.iter().enumerate() {
        let xt = x.action(rep);
        for a in 0..dx {
            for b in 0..dy {
                let col = t * dx * dy + a * dy + b;
                for c in 0..dx {
                    let v = &xt[(c, a)];
                    if !v.is_zero() {
                        m[(c * nt * dy + t * dy + b, col)] = v.clone();
                    }
                }
            }
        }
    }
    ModuleHom::new(&source, &target, m)
}

/// Mirror projection formula `Ind(Y ⊗ Res X) → Ind Y ⊗ X`,
/// `t ⊗ (y ⊗ x) ↦ (t ⊗ y) ⊗ t x`.
pub fn projection_map_mirror<F: Field>(
    i: &InjectiveHom,
    x: &Module<F>,
    y: &Module<F>,
) -> Result<ModuleHom<F>, ReplibError> {
    let source = induce(i, &y.tensor(&restrict(i, x)?)?)?;
    let ind_y = induce(i, y)?;
    let target = ind_y.tensor(x)?;
    let reps = i.transversal().reps;
    let (dx, dy) = (x.dim(), y.dim());
    let mut m = Matrix::zeros(target.dim(), source.dim());
    for (t, &rep) in reps.iter().enumerate() {
        let xt = x.action(rep);
        for b in 0..dy {
            for a in 0..dx {
                let col = t * dy * dx + b * dx + a;
                for c in 0..dx {
                    let v = &xt[(c, a)];
                    if !v.is_zero() {
                        m[((t * dy + b) * dx + c, col)] = v.clone();
                    }
                }
            }
        }
    }
    ModuleHom::new(&source, &target, m)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub dimension: usize,
    pub invertible: bool,
    pub mirror_invertible: bool,
}

impl ProjectionReport {
    pub fn holds(&self) -> bool {
        self.invertible && self.mirror_invertible
    }
}

/// Builds both projection maps (each is checked to be `G`-linear on
/// construction) and tests invertibility.
pub fn check_projection<F: Field>(
    i: &InjectiveHom,
    x: &Module<F>,
    y: &Module<F>,
) -> Result<ProjectionReport, ReplibError> {
    let p = projection_map(i, x, y)?;
    let q = projection_map_mirror(i, x, y)?;
    Ok(ProjectionReport {
        dimension: p.source.dim(),
        invertible: p.is_isomorphism(),
        mirror_invertible: q.is_isomorphism(),
    })
}

use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::burnside::{block_decomposition, DEFAULT_SEED};
use crate::group::named::named;
use crate::group::{GroupRef, InjectiveHom, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::{Field, Fp, PrimeField, Rational, Ring};

type F2 = Fp<2>;
type F3 = Fp<3>;
type F5 = Fp<5>;

fn g(name: &str) -> GroupRef {
    named(name).unwrap()
}

fn classes(g: &GroupRef) -> Vec<Subgroup> {
    g.subgroups_up_to_conjugacy()
}

/// Character of `Ind_H^G N` from the induction formula, without building
/// the induced module.
fn induced_character<F: Field>(i: &InjectiveHom, n: &Module<F>) -> Vec<F> {
    let g = i.target();
    let h_order = F::from_i64(i.source().order() as i64);
    g.elements()
        .map(|x| {
            let mut acc = F::zero();
            for y in g.elements() {
                if let Some(h) = i.preimage(g.conj(g.inv(y), x)) {
                    acc = acc + n.action(h).trace();
                }
            }
            acc / h_order.clone()
        })
        .collect()
}

fn character<F: Field>(m: &Module<F>) -> Vec<F> {
    m.group().elements().map(|x| m.action(x).trace()).collect()
}

/// All idempotents of the algebra spanned by `basis`, by enumeration.
fn idempotent_count<F: PrimeField>(basis: &[Matrix<F>]) -> usize {
    let p = F::MODULUS as usize;
    let total = p.pow(basis.len() as u32);
    let d = basis[0].rows();
    let mut count = 0;
    for mut code in 0..total {
        let mut x = Matrix::zeros(d, d);
        for b in basis {
            x.add_scaled(&F::from_u64((code % p) as u64), b);
            code /= p;
        }
        if x.mul(&x) == x {
            count += 1;
        }
    }
    count
}

#[test]
fn module_validation() {
    let c2 = g("c2");
    let bad = Module::<F3>::from_generators(c2.clone(), 1, vec![Matrix::scalar(1, F3::from_i64(2))]);
    assert!(bad.is_ok(), "sign representation");
    let bad = Module::<F5>::from_generators(c2.clone(), 1, vec![Matrix::scalar(1, F5::from_i64(2))]);
    assert!(matches!(bad, Err(ReplibError::NotAModule(_))));
    let shape = Module::<F5>::from_generators(c2, 2, vec![Matrix::identity(3)]);
    assert!(matches!(shape, Err(ReplibError::NotAModule(_))));
}

#[test]
fn induced_characters_match_formula() {
    for name in ["s3", "d8", "a4", "q8"] {
        let gr = g(name);
        for h in classes(&gr) {
            let i = InjectiveHom::inclusion(&gr, &h);
            for n in [Module::<Rational>::regular(i.source()), Module::trivial(i.source(), 1)] {
                let ind = induce(&i, &n).unwrap();
                assert_eq!(character(&ind), induced_character(&i, &n), "{name} |H| = {}", h.order());
            }
        }
    }
}

#[test]
fn induced_trivial_is_permutation_module() {
    let s4 = g("s4");
    for h in classes(&s4) {
        let i = InjectiveHom::inclusion(&s4, &h);
        let ind = induce(&i, &Module::<Rational>::trivial(i.source(), 1)).unwrap();
        let perm = permutation_module::<Rational>(&s4, &h);
        assert_eq!(character(&ind), character(&perm));
    }
}

#[test]
fn hom_dimension_counts_double_cosets() {
    for name in ["s3", "d8", "a4"] {
        let gr = g(name);
        let cs = classes(&gr);
        for h in &cs {
            for k in &cs {
                let expected = gr.double_cosets(h, k).len();
                let a = permutation_module::<F2>(&gr, h);
                let b = permutation_module::<F2>(&gr, k);
                assert_eq!(hom_dimension(&b, &a).unwrap(), expected);
                let a = permutation_module::<Rational>(&gr, h);
                let b = permutation_module::<Rational>(&gr, k);
                assert_eq!(hom_dimension(&b, &a).unwrap(), expected);
            }
        }
    }
}

#[test]
fn hom_space_elements_intertwine() {
    let s3 = g("s3");
    let m = Module::<F3>::regular(&s3);
    let n = permutation_module::<F3>(&s3, &s3.sylow_subgroup(2));
    let basis = hom_space(&m, &n).unwrap();
    assert_eq!(basis.len(), 3);
    for f in basis {
        ModuleHom::new(&m, &n, f).unwrap();
    }
}

#[test]
fn restriction_and_conjugation() {
    let s3 = g("s3");
    let c2 = s3.sylow_subgroup(2);
    let i = InjectiveHom::inclusion(&s3, &c2);
    let reg = Module::<F3>::regular(&s3);
    let res = restrict(&i, &reg).unwrap();
    assert_eq!(res.dim(), 6);
    let n = Module::<F3>::regular(i.source());
    for a in s3.elements() {
        let (c, incl) = conj_module(&i, a, &n).unwrap();
        assert_eq!(*incl.image().elements(), *s3.conjugate_subgroup(&c2, a).elements());
        assert_eq!(c.dim(), 2);
    }
}

#[test]
fn triangle_identities_on_examples() {
    let s3 = g("s3");
    let c3 = s3.sylow_subgroup(3);
    let i = InjectiveHom::inclusion(&s3, &c3);
    let m = Module::<Rational>::regular(&s3);
    let n = Module::<Rational>::regular(i.source());
    let uc = unit_counit(&i, &m, &n).unwrap();
    assert!(uc.report.all_hold(), "{:?}", uc.report);
    let m = permutation_module::<F2>(&s3, &c3);
    let n = Module::<F2>::trivial(i.source(), 1);
    let uc = unit_counit(&i, &m, &n).unwrap();
    assert!(uc.report.all_hold(), "{:?}", uc.report);
    // [S3 : C3] = 2 vanishes in F2, and ε_ℓ η_r is still 2 = 0
    assert!(uc.eps_left.matrix.mul(&uc.eta_right.matrix).is_zero());
}

#[test]
fn mackey_iso_examples() {
    let s4 = g("s4");
    let cs = classes(&s4);
    let d8 = cs.iter().find(|s| s.order() == 8).unwrap().clone();
    let i = InjectiveHom::inclusion(&s4, &d8);
    let n = Module::<F3>::trivial(i.source(), 1);
    let iso = mackey_iso(&i, &i, &n).unwrap();
    assert_eq!(iso.report.double_cosets, 2);
    assert_eq!(iso.report.dimension, 3);
    assert!(iso.report.holds());
    let dims: Vec<usize> = iso.summands.iter().map(|s| s.module.dim()).collect();
    assert_eq!(dims.iter().sum::<usize>(), 3);

    let s3 = g("s3");
    let c2 = s3.sylow_subgroup(2);
    let c3 = s3.sylow_subgroup(3);
    let i = InjectiveHom::inclusion(&s3, &c3);
    let j = InjectiveHom::inclusion(&s3, &c2);
    let n = Module::<Rational>::regular(i.source());
    let iso = mackey_iso(&i, &j, &n).unwrap();
    assert_eq!(iso.report.double_cosets, 1);
    assert!(iso.report.holds());
}

#[test]
fn corrupted_mackey_component_is_not_inverse() {
    let s3 = g("s3");
    let c2 = s3.sylow_subgroup(2);
    let i = InjectiveHom::inclusion(&s3, &c2);
    let n = Module::<F5>::regular(i.source());
    let iso = mackey_iso(&i, &i, &n).unwrap();
    let mut right = iso.inverse.matrix.clone();
    right[(0, 0)] += F5::one();
    assert!(!iso.map.matrix.mul(&right).is_identity());
}

#[test]
fn projection_formula_examples() {
    let s3 = g("s3");
    let c3 = s3.sylow_subgroup(3);
    let c2 = s3.sylow_subgroup(2);
    let i = InjectiveHom::inclusion(&s3, &c2);
    let x = permutation_module::<F2>(&s3, &c3);
    let y = Module::<F2>::regular(i.source());
    let r = check_projection(&i, &x, &y).unwrap();
    assert_eq!(r.dimension, 3 * 2 * 2);
    assert!(r.holds());
    let x = Module::<Rational>::regular(&s3);
    let y = Module::<Rational>::trivial(i.source(), 1);
    assert!(check_projection(&i, &x, &y).unwrap().holds());
}

#[test]
fn frobenius_laws_and_negative_control() {
    let s4 = g("s4");
    for h in classes(&s4) {
        let a = frobenius_object::<F3>(&s4, &h).unwrap();
        let r = a.check_laws();
        assert!(r.all_hold(), "{r:?}");
    }
    let s3 = g("s3");
    let mut a = frobenius_object::<F3>(&s3, &Subgroup::trivial(&s3)).unwrap();
    a.multiplication.matrix = a.multiplication.matrix.scale(&F3::from_i64(2));
    let r = a.check_laws();
    assert!(!r.special && !r.unital);
    assert!(r.associative && r.frobenius && r.commutative);
    let mut a = frobenius_object::<F3>(&s3, &Subgroup::trivial(&s3)).unwrap();
    a.multiplication.matrix[(0, 1)] = F3::one();
    let r = a.check_laws();
    assert!(!r.all_hold() && !r.commutative);
}

#[test]
fn decomposition_small_examples() {
    let c2 = g("c2");
    let d = decompose(&Module::<F2>::regular(&c2), DEFAULT_SEED).unwrap();
    assert!(d.is_indecomposable());
    let d = decompose(&Module::<F3>::regular(&c2), DEFAULT_SEED).unwrap();
    assert_eq!(d.dimensions(), vec![1, 1]);
    assert_eq!(d.summands.len(), 2);

    let s3 = g("s3");
    let d = decompose(&Module::<F2>::regular(&s3), DEFAULT_SEED).unwrap();
    assert_eq!(d.dimensions(), vec![2, 2, 2]);
    let mut mult: Vec<usize> = d.summands.iter().map(|s| s.multiplicity).collect();
    mult.sort();
    assert_eq!(mult, vec![1, 2]);
    let d = decompose(&Module::<F3>::regular(&s3), DEFAULT_SEED).unwrap();
    assert_eq!(d.dimensions(), vec![3, 3]);
    assert_eq!(d.summands.len(), 2);
    let d = decompose(&Module::<F5>::regular(&s3), DEFAULT_SEED).unwrap();
    assert_eq!(d.dimensions(), vec![2, 2, 1, 1]);
    assert_eq!(d.summands.len(), 3);
}

#[test]
fn indecomposability_matches_idempotent_enumeration() {
    fn run<F: PrimeField>(names: &[&str], max_dim: usize) {
        for name in names {
            let gr = g(name);
            for h in classes(&gr) {
                let m = permutation_module::<F>(&gr, &h);
                let end = hom_space(&m, &m).unwrap();
                if end.len() > max_dim {
                    continue;
                }
                let dec = decompose(&m, DEFAULT_SEED).unwrap();
                let count = idempotent_count(&end);
                assert_eq!(dec.is_indecomposable(), count == 2, "{name} |H| = {}", h.order());
            }
        }
    }
    run::<F2>(&["c2", "c4", "v4", "s3", "d8", "q8", "a4"], 12);
    run::<F3>(&["c3", "s3", "a4"], 7);
}

#[test]
fn decomposition_certificate_and_summand_witness() {
    let a4 = g("a4");
    let m = Module::<F2>::regular(&a4);
    let d = decompose(&m, DEFAULT_SEED).unwrap();
    assert_eq!(d.dimensions().iter().sum::<usize>(), 12);
    for piece in &d.pieces {
        let w = is_summand(&piece.module, &m, DEFAULT_SEED).unwrap().unwrap();
        assert!(w.retraction.mul(&w.inclusion).is_identity());
    }
    let triv = Module::<F2>::trivial(&a4, 1);
    // the trivial module is not projective over F2 A4
    assert!(is_summand(&triv, &m, DEFAULT_SEED).unwrap().is_none());
}

#[test]
fn higman_criterion_agrees_with_summand_test() {
    let s3 = g("s3");
    for h in classes(&s3) {
        let m = permutation_module::<F2>(&s3, &h);
        for piece in decompose(&m, DEFAULT_SEED).unwrap().pieces {
            for v in p_subgroup_classes(&s3, 2) {
                let i = InjectiveHom::inclusion(&s3, &v);
                let x = induce(&i, &restrict(&i, &piece.module).unwrap()).unwrap();
                let literal = is_summand(&piece.module, &x, DEFAULT_SEED).unwrap().is_some();
                assert_eq!(relatively_projective(&piece.module, &v).unwrap(), literal);
            }
        }
    }
}

#[test]
fn vertices_of_small_modules() {
    let c2 = g("c2");
    let (v, _) = vertex(&Module::<F2>::trivial(&c2, 1), DEFAULT_SEED).unwrap();
    assert_eq!(v.order(), 2);
    let (v, _) = vertex(&Module::<F2>::regular(&c2), DEFAULT_SEED).unwrap();
    assert_eq!(v.order(), 1);
    let s4 = g("s4");
    let (v, _) = vertex(&Module::<F2>::trivial(&s4, 1), DEFAULT_SEED).unwrap();
    assert_eq!(v.order(), 8);
    let (v, _) = vertex(&Module::<F3>::trivial(&s4, 1), DEFAULT_SEED).unwrap();
    assert_eq!(v.order(), 3);
    assert!(matches!(
        vertex(&Module::<F3>::regular(&c2), DEFAULT_SEED),
        Err(ReplibError::NotIndecomposable)
    ));
}

#[test]
fn green_correspondence_s3_to_s4() {
    let s4 = g("s4");
    let c3 = s4.sylow_subgroup(3);
    let s3 = s4.normalizer(&c3);
    assert_eq!(s3.order(), 6);
    let i = InjectiveHom::inclusion(&s4, &s3);
    let h = i.source().clone();
    let triv = Module::<F3>::trivial(&h, 1);
    let gc = green_correspondent(&i, &triv, &c3, DEFAULT_SEED).unwrap();
    assert_eq!(gc.correspondent.dim(), 1);
    assert!(gc.correspondent.generator_matrices().iter().all(|m| m.is_identity()));

    // the two-dimensional augmentation submodule of k[S3/C2]
    let perm = permutation_module::<F3>(&h, &h.sylow_subgroup(2));
    let basis = Matrix::from_rows(vec![
        vec![F3::one(), F3::zero()],
        vec![-F3::one(), F3::one()],
        vec![F3::zero(), -F3::one()],
    ]);
    let aug = perm.submodule(&basis).unwrap();
    assert!(decompose(&aug, DEFAULT_SEED).unwrap().is_indecomposable());
    let gc = green_correspondent(&i, &aug, &c3, DEFAULT_SEED).unwrap();
    assert!(gc.correspondent.dim() < 12);
    assert_eq!(gc.vertex.order(), 3);
}

#[test]
fn blocks_of_s3_modules() {
    let s3 = g("s3");
    let blocks = block_decomposition::<F2>(&s3, DEFAULT_SEED).unwrap();
    let triv = Module::<F2>::trivial(&s3, 1);
    let principal = block_of(&triv, &blocks).unwrap();
    let d = decompose(&Module::<F2>::regular(&s3), DEFAULT_SEED).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for s in &d.summands {
        seen.insert(block_of(&s.module, &blocks).unwrap());
    }
    assert_eq!(seen.len(), 2);
    assert!(seen.contains(&principal));
    let reg = Module::<F2>::regular(&s3);
    assert!(matches!(block_of(&reg, &blocks), Err(ReplibError::Block(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn decomposition_is_seed_independent(seed in any::<u64>(), which in 0usize..4) {
        let s4 = g("s4");
        let h = classes(&s4)[which * 3 % 11].clone();
        let m = permutation_module::<F2>(&s4, &h);
        let a = decompose(&m, DEFAULT_SEED).unwrap();
        let b = decompose(&m, seed).unwrap();
        prop_assert_eq!(a.dimensions(), b.dimensions());
        prop_assert!(are_isomorphic_modules(&m, &m, seed).unwrap());
        let mut ma: Vec<(usize, usize)> = a.summands.iter().map(|s| (s.module.dim(), s.multiplicity)).collect();
        let mut mb: Vec<(usize, usize)> = b.summands.iter().map(|s| (s.module.dim(), s.multiplicity)).collect();
        ma.sort();
        mb.sort();
        prop_assert_eq!(ma, mb);
    }
}

#[test]
fn green_census_s4_s3_c3() {
    let g = named("s4").unwrap();
    let d = g.sylow_subgroup(3);
    let h = g.normalizer(&d);
    assert_eq!(h.order(), 6);
    let i = InjectiveHom::inclusion(&g, &h);
    let census = green_census::<F3>(&i, &d, 7).unwrap();
    let mut dims: Vec<usize> = census.h_side.iter().map(|f| f.module.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 1]);
    assert_eq!(census.g_side.len(), 2);
    assert!(census.is_bijection());
}

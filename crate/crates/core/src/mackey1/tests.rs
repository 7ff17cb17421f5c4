use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::burnside::GSet;
use crate::group::named::named;
use crate::group::{all_subgroups, GroupRef, Subgroup};
use crate::matrix::Matrix;
use crate::replib::{frobenius_object, permutation_module, Module};
use crate::scalar::{Fp, PrimeField, Rational};

type F2 = Fp<2>;
type F3 = Fp<3>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn level(m: &OrdinaryMackeyFunctor<impl crate::scalar::Ring>, s: &Subgroup) -> usize {
    m.level_index(s).unwrap()
}

#[test]
fn constant_functor_from_trivial_modules() {
    let g = named("s3").unwrap();
    let k = Module::<Rational>::trivial(&g, 1);
    let m = hom_decategorify(&k, &k).unwrap();
    assert!(m.levels().iter().all(|l| l.dim == 1));
    for (h, kk) in m.pairs() {
        assert!(m.restriction(h, kk).is_identity());
        let index = m.levels()[h].subgroup.order() / m.levels()[kk].subgroup.order();
        assert_eq!(*m.transfer(h, kk), Matrix::scalar(1, q(index as i64)));
    }
    assert!(verify_mackey_axioms(&m).all_passed());
    assert!(cohomological_check(&m).all_passed());
}

#[test]
fn zero_module_gives_zero_functor() {
    let g = named("c4").unwrap();
    let z = Module::<F2>::zero(&g);
    let m = hom_decategorify(&z, &z).unwrap();
    assert!(m.levels().iter().all(|l| l.dim == 0));
    assert!(verify_mackey_axioms(&m).all_passed());
}

#[test]
fn permutation_module_level_dimensions() {
    let g = named("s3").unwrap();
    let c2 = g.sylow_subgroup(2);
    let x = permutation_module::<Rational>(&g, &c2);
    let m = hom_decategorify(&x, &x).unwrap();
    assert_eq!(m.dim(&Subgroup::whole(&g)), Some(2));
    assert_eq!(m.dim(&Subgroup::trivial(&g)), Some(9));
    assert_eq!(m.levels().len(), 6);
    assert!(verify_mackey_axioms(&m).all_passed());
}

/// `dim Hom_H(k[G/A], k[G/B])` is the number of `H`-orbits on
/// `G/A × G/B`.
#[test]
fn level_dimensions_match_orbit_counts() {
    for name in ["s3", "d8", "a4"] {
        let g = named(name).unwrap();
        let classes = g.subgroups_up_to_conjugacy();
        for a in &classes {
            for b in &classes {
                let x = permutation_module::<F3>(&g, a);
                let y = permutation_module::<F3>(&g, b);
                let m = hom_decategorify(&x, &y).unwrap();
                let prod = GSet::cosets(&g, a).product(&GSet::cosets(&g, b));
                for l in m.levels() {
                    let inc = crate::group::InjectiveHom::inclusion(&g, &l.subgroup);
                    let orbits = crate::burnside::gset_restrict(&inc, &prod).orbits().len();
                    assert_eq!(l.dim, orbits, "{name} |A|={} |B|={}", a.order(), b.order());
                }
            }
        }
    }
}

#[test]
fn fixed_point_functors_satisfy_the_axioms() {
    for name in ["c2", "c4", "v4", "s3", "d8"] {
        let g = named(name).unwrap();
        for h in g.subgroups_up_to_conjugacy() {
            let y = permutation_module::<F2>(&g, &h);
            let m = hom_decategorify(&Module::trivial(&g, 1), &y).unwrap();
            let r = verify_mackey_axioms(&m);
            assert!(r.all_passed(), "{name} |H|={}: {:?}", h.order(), r.failures().next());
            assert!(cohomological_check(&m).all_passed());
        }
    }
}

#[test]
fn corrupted_transfer_fails_only_the_mackey_formula() {
    let g = named("c2").unwrap();
    let x = Module::<Rational>::regular(&g);
    let mut m = hom_decategorify(&x, &x).unwrap();
    let top = level(&m, &Subgroup::whole(&g));
    let bottom = level(&m, &Subgroup::trivial(&g));
    let doubled = m.transfer(top, bottom).scale(&q(2));
    m.set_transfer(top, bottom, doubled).unwrap();
    let r = verify_mackey_axioms(&m);
    assert_eq!(r.failed_clauses(), vec![Clause::Mackey]);
    assert!(r.failures().all(|c| c.levels == vec![top, bottom, bottom]));

    // on a larger group the corruption also breaks functoriality, but the
    // Mackey formula is always among the failures
    let g = named("s3").unwrap();
    let x = Module::<Rational>::trivial(&g, 1);
    let mut m = hom_decategorify(&x, &x).unwrap();
    let top = level(&m, &Subgroup::whole(&g));
    let c3 = level(&m, &g.sylow_subgroup(3));
    m.set_transfer(top, c3, Matrix::scalar(1, q(5))).unwrap();
    assert!(verify_mackey_axioms(&m).failed_clauses().contains(&Clause::Mackey));
}

#[test]
fn trivial_group_is_vacuous() {
    let g: GroupRef = std::sync::Arc::new(crate::group::FiniteGroup::trivial());
    let x = Module::<Rational>::trivial(&g, 2);
    let m = hom_decategorify(&x, &x).unwrap();
    assert_eq!(m.levels().len(), 1);
    assert!(verify_mackey_axioms(&m).all_passed());
    assert!(cohomological_check(&m).all_passed());
    let b = burnside_green_functor(&g).unwrap();
    assert_eq!(b.underlying.levels()[0].dim, 1);
    assert_eq!(b.products[0][0], Matrix::identity(1));
    assert!(verify_green_axioms(&b).all_passed());
}

#[test]
fn constant_green_functor_from_the_ground_field() {
    let g = named("s3").unwrap();
    let a = green_from_monoid(&Monoid::<F3>::trivial(&g)).unwrap();
    for (h, k) in a.underlying.pairs() {
        let index = a.underlying.levels()[h].subgroup.order() / a.underlying.levels()[k].subgroup.order();
        assert_eq!(
            *a.underlying.transfer(h, k),
            Matrix::scalar(1, F3::from_u64(index as u64))
        );
    }
    assert!(a.units.iter().all(|u| u == &vec![F3::one()]));
    assert!(verify_green_axioms(&a).all_passed());
}

#[test]
fn green_functors_from_frobenius_objects() {
    let g = named("s3").unwrap();
    for h in g.subgroups_up_to_conjugacy() {
        let f = frobenius_object::<Rational>(&g, &h).unwrap();
        let a = green_from_monoid(&Monoid::from_frobenius(&f).unwrap()).unwrap();
        let r = verify_green_axioms(&a);
        assert!(r.all_passed(), "|H|={}: {:?}", h.order(), r.failures().next());
        let frob = r.summary().into_iter().find(|s| s.clause == Clause::Frobenius).unwrap();
        assert!(frob.total > 0);
    }
}

#[test]
fn group_algebra_green_functor() {
    let g = named("c2").unwrap();
    let a = green_from_monoid(&Monoid::<F2>::group_algebra(&g).unwrap()).unwrap();
    assert!(verify_green_axioms(&a).all_passed());
    let g = named("s3").unwrap();
    let a = green_from_monoid(&Monoid::<F3>::group_algebra(&g).unwrap()).unwrap();
    // the top level is the center of F_3 S_3, spanned by class sums
    assert_eq!(a.underlying.dim(&Subgroup::whole(&g)), Some(3));
    assert!(verify_green_axioms(&a).all_passed());
}

#[test]
fn invalid_monoids_are_rejected() {
    let g = named("c2").unwrap();
    let k3 = Module::<Rational>::trivial(&g, 3);
    // basis 1, a, b with a·a = b, a·b = a and all other products of a, b zero
    let mut mu = Matrix::zeros(3, 9);
    for i in 0..3 {
        mu[(i, i)] = q(1);
        mu[(i, 3 * i)] = q(1);
    }
    mu[(2, 3 + 1)] = q(1);
    mu[(1, 3 + 2)] = q(1);
    let err = Monoid::new(k3.clone(), mu, vec![q(1), q(0), q(0)]).unwrap_err();
    assert_eq!(err, MackeyError::NotAMonoid("multiplication is not associative".into()));

    // the group-algebra product is not a G-map for the regular action
    let s3 = named("s3").unwrap();
    let reg = Module::<Rational>::regular(&s3);
    let ga = Monoid::<Rational>::group_algebra(&s3).unwrap();
    assert!(matches!(
        Monoid::new(reg, ga.multiplication().clone(), ga.unit().to_vec()),
        Err(MackeyError::NotAMonoid(_))
    ));
}

#[test]
fn burnside_functor_of_c2() {
    let g = named("c2").unwrap();
    let b = burnside_green_functor(&g).unwrap();
    let top = level(&b.underlying, &Subgroup::whole(&g));
    let bottom = level(&b.underlying, &Subgroup::trivial(&g));
    assert_eq!(b.underlying.levels()[top].dim, 2);
    assert_eq!(b.underlying.levels()[bottom].dim, 1);
    let r = verify_green_axioms(&b);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    // [C2/1] · [C2/1] = 2 [C2/1]
    let free = b.underlying.levels()[top]
        .labels
        .iter()
        .position(|l| l.ends_with("|L|=1"))
        .unwrap();
    let mut e = vec![0; 2];
    e[free] = 1;
    assert_eq!(b.multiply(top, &e, &e), e.iter().map(|v| 2 * v).collect::<Vec<_>>());

    let c = cohomological_check(&b.underlying);
    let failed: Vec<Vec<usize>> = c.failures().map(|f| f.levels.clone()).collect();
    assert_eq!(failed, vec![vec![top, bottom]]);
    // tr res [C2/C2] = [C2/1], not 2 [C2/C2]
    let one = &b.units[top];
    let trres = b
        .underlying
        .transfer(top, bottom)
        .mul(b.underlying.restriction(top, bottom))
        .mul_vec(one);
    assert_eq!(trres, e);
}

#[test]
fn burnside_functors_satisfy_green_axioms() {
    for name in ["s3", "d8", "q8", "a4"] {
        let g = named(name).unwrap();
        let b = burnside_green_functor(&g).unwrap();
        let r = verify_green_axioms(&b);
        assert!(r.all_passed(), "{name}: {:?}", r.failures().next());
        assert!(!cohomological_check(&b.underlying).all_passed());
    }
}

/// Restriction in Burnside rings preserves marks: the marks of `res X` at
/// `L ≤ K` equal the marks of `X` at `L`.
#[test]
fn burnside_restriction_matches_marks() {
    let g = named("s4").unwrap();
    let b = burnside_green_functor(&g).unwrap();
    let m = &b.underlying;
    let top = level(m, &Subgroup::whole(&g));
    let top_marks = crate::burnside::TableOfMarks::new(&g);
    for (h, k) in m.pairs().into_iter().filter(|&(h, _)| h == top) {
        let ks = &m.levels()[k].subgroup;
        let inc = crate::group::InjectiveHom::inclusion(&g, ks);
        let k_marks = crate::burnside::TableOfMarks::new(inc.source());
        for i in 0..m.levels()[h].dim {
            let res = m.restriction(h, k).column(i);
            let x = GSet::cosets(&g, &top_marks.reps()[i]);
            for (j, l) in k_marks.reps().iter().enumerate() {
                let l_in_g = g
                    .subgroup_from_elements(&l.elements().iter().map(|&e| inc.apply(e)).collect::<Vec<_>>())
                    .unwrap();
                let via_res: i64 = (0..res.len()).map(|c| res[c] * k_marks.marks()[c][j]).sum();
                assert_eq!(via_res, x.fixed_points(&l_in_g) as i64);
            }
        }
    }
}

#[test]
fn functor_data_round_trip() {
    let g = named("s3").unwrap();
    let x = permutation_module::<Rational>(&g, &g.sylow_subgroup(2));
    let m = hom_decategorify(&Module::trivial(&g, 1), &x).unwrap();
    let data = FunctorData::from_functor(&m, "Q");
    let back: OrdinaryMackeyFunctor<Rational> = data.to_functor(&g).unwrap();
    assert_eq!(FunctorData::from_functor(&back, "Q"), data);
    assert!(verify_mackey_axioms(&back).all_passed());

    let mut broken = data.clone();
    broken.transfers.pop();
    assert!(broken.to_functor::<Rational>(&g).is_err());
}

#[test]
fn levels_cover_all_subgroups() {
    let g = named("s4").unwrap();
    let k = Module::<F2>::trivial(&g, 1);
    let m = hom_decategorify(&k, &k).unwrap();
    assert_eq!(m.levels().len(), all_subgroups(&g).len());
    assert_eq!(m.levels().len(), 30);
    assert!(Rational::zero().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Hom functors with trivial source are cohomological, and every
    /// Hom functor satisfies the axioms.
    #[test]
    fn hom_functors_are_mackey(gi in 0usize..5, a in 0usize..8, b in 0usize..8) {
        let name = ["c2", "c3", "v4", "s3", "c4"][gi];
        let g = named(name).unwrap();
        let classes = g.subgroups_up_to_conjugacy();
        let (a, b) = (&classes[a % classes.len()], &classes[b % classes.len()]);
        let x = permutation_module::<F3>(&g, a);
        let y = permutation_module::<F3>(&g, b);
        let m = hom_decategorify(&x, &y).unwrap();
        prop_assert!(verify_mackey_axioms(&m).all_passed());
        let fixed = hom_decategorify(&Module::trivial(&g, 1), &y).unwrap();
        prop_assert!(cohomological_check(&fixed).all_passed());
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::group::named::named;
use crate::group::{all_subgroups, GroupRef, InjectiveHom, Subgroup};
use crate::scalar::{Fp, PrimeField, Rational, Ring};

type F2 = Fp<2>;
type F3 = Fp<3>;

fn el(g: &GroupRef, p: &[usize]) -> usize {
    g.find_permutation(p).unwrap()
}

/// Orbit decomposition of a G-set by stabiliser classes, computed without
/// marks.
fn orbit_types(t: &TableOfMarks, x: &GSet) -> Vec<i64> {
    let mut c = vec![0i64; t.rank()];
    for orb in x.orbits() {
        c[t.class_of(&x.stabilizer(orb[0]))] += 1;
    }
    c
}

#[test]
fn marks_examples() {
    let triv = Arc::new(crate::group::FiniteGroup::trivial());
    assert_eq!(table_of_marks(&triv).marks(), &[vec![1]]);
    let c2 = named("c2").unwrap();
    assert_eq!(table_of_marks(&c2).marks(), &[vec![2, 0], vec![1, 1]]);
    let s3 = named("s3").unwrap();
    let t = table_of_marks(&s3);
    let first: Vec<i64> = t.marks().iter().map(|r| r[0]).collect();
    assert_eq!(first, vec![6, 3, 2, 1]);
}

#[test]
fn marks_agree_with_coset_fixed_points_and_are_triangular() {
    for name in crate::group::named::NAMES {
        let g = named(name).unwrap();
        let t = table_of_marks(&g);
        for (i, h) in t.reps().iter().enumerate() {
            let x = GSet::cosets(&g, h);
            assert_eq!(t.marks_of(&x), t.marks()[i], "{name}");
            assert_eq!(t.marks()[i][0] as usize, g.order() / h.order());
            assert!(t.marks()[i][i] > 0);
            assert!(t.marks()[i][i + 1..].iter().all(|&m| m == 0));
        }
    }
}

#[test]
fn burnside_product_examples() {
    let c2 = named("c2").unwrap();
    let t = table_of_marks(&c2);
    let free = BurnsideElement::basis(2, 0);
    assert_eq!(burnside_multiply(&free, &free, &t).unwrap(), free.scale(2));
    let one = BurnsideElement::basis(2, 1);
    assert_eq!(burnside_multiply(&one, &free, &t).unwrap(), free);

    let s3 = named("s3").unwrap();
    let t = table_of_marks(&s3);
    // classes: 1, C2, C3, S3
    let c2 = BurnsideElement::basis(4, 1);
    let c3 = BurnsideElement::basis(4, 2);
    assert_eq!(t.reps()[1].order(), 2);
    assert_eq!(t.reps()[2].order(), 3);
    assert_eq!(burnside_multiply(&c2, &c3, &t).unwrap(), BurnsideElement::basis(4, 0));
}

#[test]
fn burnside_products_match_orbit_decomposition() {
    for name in ["c4", "v4", "s3", "d8", "q8", "a4"] {
        let g = named(name).unwrap();
        let t = table_of_marks(&g);
        let n = t.rank();
        for i in 0..n {
            for j in 0..n {
                let x = GSet::cosets(&g, &t.reps()[i]).product(&GSet::cosets(&g, &t.reps()[j]));
                let direct = orbit_types(&t, &x);
                let via_marks =
                    burnside_multiply(&BurnsideElement::basis(n, i), &BurnsideElement::basis(n, j), &t).unwrap();
                assert_eq!(via_marks.coefficients, direct, "{name} ({i},{j})");
                assert_eq!(t.marks_of(&x), t.marks_of_element(&via_marks));
            }
        }
    }
}

#[test]
fn non_integral_marks_are_rejected() {
    let c2 = named("c2").unwrap();
    let t = table_of_marks(&c2);
    assert_eq!(
        t.element_from_marks(&[1, 0]),
        Err(BurnsideError::NonIntegral { class: 0 })
    );
}

#[test]
fn invalid_actions_are_rejected() {
    let c2 = named("c2").unwrap();
    // both elements swap: identity moves points
    assert!(GSet::new(c2.clone(), 2, vec![1, 0, 1, 0]).is_err());
    assert!(GSet::new(c2, 2, vec![0, 1, 1, 0]).is_ok());
}

#[test]
fn induction_and_restriction_of_gsets() {
    let s3 = named("s3").unwrap();
    let c2 = s3.subgroup_generated(&[el(&s3, &[1, 0, 2])]);
    let c3 = s3.subgroup_generated(&[el(&s3, &[1, 2, 0])]);
    let i2 = InjectiveHom::inclusion(&s3, &c2);
    let ind = gset_induce(&i2, &GSet::point(i2.source()));
    assert_eq!(ind.size(), 3);
    assert_eq!(ind.orbits().len(), 1);
    assert!(s3.subgroups_conjugate(&ind.stabilizer(0), &c2));

    let i3 = InjectiveHom::inclusion(&s3, &c3);
    let res = gset_restrict(&i3, &GSet::cosets(&s3, &c2));
    let orbits = res.orbits();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0].len(), 3);
}

#[test]
fn restriction_of_induced_point_follows_double_cosets() {
    for name in ["s3", "d8", "a4", "s4"] {
        let g = named(name).unwrap();
        let subs = all_subgroups(&g);
        for k in subs.iter().step_by(3) {
            for h in subs.iter().step_by(2) {
                let ik = InjectiveHom::inclusion(&g, k);
                let ih = InjectiveHom::inclusion(&g, h);
                let kg = ik.source();
                let tk = table_of_marks(kg);
                let lhs = gset_restrict(&ik, &gset_induce(&ih, &GSet::point(ih.source())));
                let mut rhs = vec![0i64; tk.rank()];
                for &x in &g.double_cosets(k, h).representatives {
                    let inter = g.intersection(k, &g.conjugate_subgroup(h, x));
                    let local: Vec<usize> = inter.elements().iter().map(|&e| ik.preimage(e).unwrap()).collect();
                    let local = kg.subgroup_from_elements(&local).unwrap();
                    let m = tk.marks_of(&GSet::cosets(kg, &local));
                    for (r, v) in rhs.iter_mut().zip(m) {
                        *r += v;
                    }
                }
                assert_eq!(tk.marks_of(&lhs), rhs, "{name}");
            }
        }
    }
}

/// Number of classes of pairs `(H, a)` by Burnside's lemma: the average
/// number of pairs fixed by conjugation.
fn pair_class_count(g: &GroupRef) -> usize {
    let subs = all_subgroups(g);
    let mut total = 0;
    for x in g.elements() {
        for h in &subs {
            if g.conjugate_subgroup(h, x) != *h {
                continue;
            }
            total += g
                .centralizer(h)
                .elements()
                .iter()
                .filter(|&&a| g.conj(x, a) == a)
                .count();
        }
    }
    assert_eq!(total % g.order(), 0);
    total / g.order()
}

/// Structure constants evaluated by summing over all `g ∈ G` with weight
/// `1/|KgH|` instead of over double-coset representatives.
fn xbur_product_oracle(a: &CrossedBurnsideAlgebra, i: usize, j: usize) -> Vec<i64> {
    let g = a.group();
    let (k, b) = (&a.basis()[i].subgroup, a.basis()[i].element);
    let (h, x) = (&a.basis()[j].subgroup, a.basis()[j].element);
    let mut acc: HashMap<usize, Rational> = HashMap::new();
    for y in g.elements() {
        let inter = g.intersection(k, &g.conjugate_subgroup(h, y));
        let size = k.order() * h.order() / inter.order();
        let idx = a.index_of(&inter, g.mul(b, g.conj(y, x)));
        let e = acc.entry(idx).or_insert_with(Rational::zero);
        *e += Rational::new(1.into(), (size as i64).into());
    }
    let mut out = vec![0i64; a.rank()];
    for (idx, v) in acc {
        assert!(v.is_integer());
        out[idx] = v.to_integer().try_into().unwrap();
    }
    out
}

#[test]
fn crossed_burnside_examples() {
    let triv = Arc::new(crate::group::FiniteGroup::trivial());
    let a = crossed_burnside(&triv);
    assert_eq!(a.rank(), 1);
    assert!(a.unit_holds());

    let c2 = named("c2").unwrap();
    let a = crossed_burnside(&c2);
    assert_eq!(a.rank(), 4);
    let one = Subgroup::trivial(&c2);
    let whole = Subgroup::whole(&c2);
    let sigma = 1 - c2.identity();
    let (t1, ts) = (a.index_of(&one, c2.identity()), a.index_of(&one, sigma));
    let (g1, gs) = (a.index_of(&whole, c2.identity()), a.index_of(&whole, sigma));
    let mut want = vec![0; 4];
    want[t1] = 2;
    assert_eq!(a.constants(ts, ts), want.as_slice());
    let mut want = vec![0; 4];
    want[g1] = 1;
    assert_eq!(a.constants(gs, gs), want.as_slice());
    assert_eq!(a.unit(), g1);
}

#[test]
fn crossed_burnside_rank_unit_associativity() {
    for name in ["c2", "c3", "v4", "s3", "d8", "q8"] {
        let g = named(name).unwrap();
        let a = crossed_burnside(&g);
        assert_eq!(a.rank(), pair_class_count(&g), "{name}");
        assert!(a.unit_holds(), "{name}");
        assert_eq!(a.associativity_failure(), None, "{name}");
        for i in 0..a.rank() {
            assert!(g.centralizer(&a.basis()[i].subgroup).contains(a.basis()[i].element));
            for j in 0..a.rank() {
                assert_eq!(a.constants(i, j), xbur_product_oracle(&a, i, j).as_slice(), "{name}");
            }
        }
    }
}

#[test]
fn s3_has_eight_pair_classes() {
    // (1,1) (1,t) (1,r) (C2,1) (C2,t) (C3,1) (C3,r) (S3,1)
    let g = named("s3").unwrap();
    assert_eq!(crossed_burnside(&g).rank(), 8);
}

#[test]
fn trivial_element_pairs_form_the_burnside_ring() {
    for name in ["s3", "d8", "a4"] {
        let g = named(name).unwrap();
        let a = crossed_burnside(&g);
        let t = table_of_marks(&g);
        let n = t.rank();
        let pair_of: Vec<usize> = t.reps().iter().map(|h| a.index_of(h, g.identity())).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = a.constants(pair_of[i], pair_of[j]);
                let b = burnside_multiply(&BurnsideElement::basis(n, i), &BurnsideElement::basis(n, j), &t).unwrap();
                let mut want = vec![0i64; a.rank()];
                for (c, &k) in b.coefficients.iter().zip(&pair_of) {
                    want[k] = *c;
                }
                assert_eq!(prod, want.as_slice(), "{name}");
            }
        }
    }
}

#[test]
fn rho_coh_examples() {
    let c2 = named("c2").unwrap();
    let a = crossed_burnside(&c2);
    let z = CenterOfGroupAlgebra::new(&c2);
    let rho = rho_coh::<F2>(&a, &z).unwrap();
    let sigma = 1 - c2.identity();
    let one = Subgroup::trivial(&c2);
    let whole = Subgroup::whole(&c2);
    let col = |i: usize| rho.column(i);
    assert!(col(a.index_of(&one, c2.identity())).iter().all(|c| c.is_zero()));
    assert!(col(a.index_of(&one, sigma)).iter().all(|c| c.is_zero()));
    let mut want = vec![F2::zero(); 2];
    want[z.class_of(sigma)] = F2::one();
    assert_eq!(col(a.index_of(&whole, sigma)), want);
    assert_eq!(col(a.unit()), z.algebra::<F2>().unit());

    let s3 = named("s3").unwrap();
    let a = crossed_burnside(&s3);
    let r = el(&s3, &[1, 2, 0]);
    let c3 = s3.subgroup_generated(&[r]);
    let v = rho_coh_group_vector(&a, a.index_of(&c3, r));
    // the two cosets conjugate r to r and r^2
    let r2 = s3.mul(r, r);
    for x in s3.elements() {
        assert_eq!(v[x], if x == r || x == r2 { 1 } else { 0 });
    }
}

#[test]
fn rho_coh_is_a_surjective_unital_homomorphism() {
    for name in ["c2", "c3", "v4", "s3", "d8", "q8"] {
        let g = named(name).unwrap();
        let a = crossed_burnside(&g);
        let z = CenterOfGroupAlgebra::new(&g);
        rho_coh::<F2>(&a, &z).unwrap();
        rho_coh::<F3>(&a, &z).unwrap();
        rho_coh::<Rational>(&a, &z).unwrap();
    }
}

/// All primitive idempotents of a small algebra over `F_p` by enumerating
/// every element.
fn exhaustive_primitive_idempotents<F: PrimeField>(a: &FiniteAlgebra<F>) -> Vec<Vec<F>> {
    let n = a.dim();
    let p = F::MODULUS as u64;
    let total = p.pow(n as u32);
    let mut idems = Vec::new();
    for code in 0..total {
        let mut c = code;
        let v: Vec<F> = (0..n)
            .map(|_| {
                let d = c % p;
                c /= p;
                F::from_u64(d)
            })
            .collect();
        if v.iter().any(|x| !x.is_zero()) && a.is_idempotent(&v) {
            idems.push(v);
        }
    }
    let mut prim: Vec<Vec<F>> = idems
        .iter()
        .filter(|e| idems.iter().all(|f| f == *e || a.mul(f, e) != *f))
        .cloned()
        .collect();
    prim.sort();
    prim
}

#[test]
fn primitive_idempotent_examples() {
    let fp = FiniteAlgebra::<F3>::new(1, vec![vec![F3::one()]], vec![F3::one()]).unwrap();
    assert_eq!(primitive_idempotents(&fp, DEFAULT_SEED).unwrap(), vec![vec![F3::one()]]);

    let s3 = named("s3").unwrap();
    let z = CenterOfGroupAlgebra::new(&s3).algebra::<F2>();
    let ids = primitive_idempotents(&z, DEFAULT_SEED).unwrap();
    assert_eq!(ids.len(), 2);
    assert_eq!(ids, exhaustive_primitive_idempotents(&z));

    let c3 = named("c3").unwrap();
    let a = group_algebra::<F3>(&c3);
    assert_eq!(primitive_idempotents(&a, DEFAULT_SEED).unwrap().len(), 1);
    assert_eq!(exhaustive_primitive_idempotents(&a).len(), 1);
}

#[test]
fn idempotents_of_small_commutative_group_algebras_match_enumeration() {
    for name in ["c2", "c3", "c4", "v4"] {
        let g = named(name).unwrap();
        let a2 = group_algebra::<F2>(&g);
        assert_eq!(
            primitive_idempotents(&a2, 7).unwrap(),
            exhaustive_primitive_idempotents(&a2),
            "{name}"
        );
        let a3 = group_algebra::<F3>(&g);
        assert_eq!(
            primitive_idempotents(&a3, 7).unwrap(),
            exhaustive_primitive_idempotents(&a3),
            "{name}"
        );
    }
}

#[test]
fn the_field_with_four_elements_is_local() {
    // basis 1, w with w^2 = 1 + w
    let table = vec![
        vec![F2::one(), F2::zero()],
        vec![F2::zero(), F2::one()],
        vec![F2::zero(), F2::one()],
        vec![F2::one(), F2::one()],
    ];
    let a = FiniteAlgebra::new(2, table, vec![F2::one(), F2::zero()]).unwrap();
    assert_eq!(primitive_idempotents(&a, 1).unwrap().len(), 1);
}

#[test]
fn noncommutative_input_is_rejected() {
    let s3 = named("s3").unwrap();
    let a = group_algebra::<F2>(&s3);
    assert_eq!(primitive_idempotents(&a, 0), Err(BurnsideError::NotCommutative));
}

#[test]
fn blocks_of_s3() {
    let s3 = named("s3").unwrap();
    let z = CenterOfGroupAlgebra::new(&s3);
    let b2 = block_decomposition::<F2>(&s3, DEFAULT_SEED).unwrap();
    assert_eq!(b2.len(), 2);
    let oracle: Vec<Vec<F2>> = exhaustive_primitive_idempotents(&z.algebra::<F2>());
    let got: Vec<Vec<F2>> = b2.iter().map(|b| b.class_coordinates.clone()).collect();
    assert_eq!(got, oracle);
    let mut dims: Vec<usize> = b2.iter().map(|b| b.dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![2, 4]);

    let b3 = block_decomposition::<F3>(&s3, DEFAULT_SEED).unwrap();
    let oracle: Vec<Vec<F3>> = exhaustive_primitive_idempotents(&z.algebra::<F3>());
    let got: Vec<Vec<F3>> = b3.iter().map(|b| b.class_coordinates.clone()).collect();
    assert_eq!(got, oracle);
    assert_eq!(b3.len(), 1);
    assert_eq!(b3[0].dim, 6);
}

#[test]
fn block_dimensions_sum_to_group_order() {
    for name in crate::group::named::NAMES {
        let g = named(name).unwrap();
        for blocks in [
            block_decomposition::<F2>(&g, 3).map(|b| b.iter().map(|x| x.dim).sum::<usize>()),
            block_decomposition::<F3>(&g, 3).map(|b| b.iter().map(|x| x.dim).sum::<usize>()),
            block_decomposition::<Fp<5>>(&g, 3).map(|b| b.iter().map(|x| x.dim).sum::<usize>()),
        ] {
            assert_eq!(blocks.unwrap(), g.order(), "{name}");
        }
    }
}

#[test]
fn rational_idempotents() {
    let s3 = named("s3").unwrap();
    let z = CenterOfGroupAlgebra::new(&s3).algebra::<Rational>();
    let ids = primitive_idempotents_rational(&z).unwrap();
    assert_eq!(ids.len(), 3);
    // the trivial-character idempotent is (1/6) Σ g
    let sixth = Rational::new(1.into(), 6.into());
    let sizes: Vec<Rational> = CenterOfGroupAlgebra::new(&s3)
        .classes()
        .iter()
        .map(|c| Rational::from_i64(c.len() as i64))
        .collect();
    assert!(ids.iter().any(|e| e.iter().zip(&sizes).all(|(x, _)| *x == sixth)));

    let c3 = named("c3").unwrap();
    let a = group_algebra::<Rational>(&c3);
    assert_eq!(
        primitive_idempotents_rational(&a),
        Err(BurnsideError::NotSplitOverRationals)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn block_idempotents_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let s4 = named("s4").unwrap();
        let a = block_decomposition::<F2>(&s4, seed).unwrap();
        let b = block_decomposition::<F2>(&s4, DEFAULT_SEED).unwrap();
        let ia: Vec<_> = a.iter().map(|x| x.idempotent.clone()).collect();
        let ib: Vec<_> = b.iter().map(|x| x.idempotent.clone()).collect();
        prop_assert_eq!(ia, ib);
    }

    #[test]
    fn idempotents_of_random_truncated_products(k1 in 1usize..4, k2 in 1usize..4, c in 0u32..3) {
        // F3[x]/(x^k1) x F3[x]/((x-1-c')^k2) presented by the sum of the
        // generators; computed as a quotient of F3[x]
        let shift = F3::new(1 + c % 2);
        let f1 = crate::poly::Poly::new(vec![F3::zero(), F3::one()]);
        let f2 = crate::poly::Poly::linear(shift);
        let m = (0..k1).fold(crate::poly::Poly::one(), |acc, _| acc.mul(&f1));
        let m = (0..k2).fold(m, |acc, _| acc.mul(&f2));
        let n = m.degree().unwrap();
        let mono = |i: usize| {
            let mut v = vec![F3::zero(); i + 1];
            v[i] = F3::one();
            crate::poly::Poly::new(v)
        };
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let r = mono(i + j).rem(&m);
                let mut v = r.coeffs().to_vec();
                v.resize(n, F3::zero());
                table.push(v);
            }
        }
        let mut unit = vec![F3::zero(); n];
        unit[0] = F3::one();
        let a = FiniteAlgebra::new(n, table, unit).unwrap();
        let ids = primitive_idempotents(&a, 11).unwrap();
        prop_assert_eq!(ids.len(), 2);
        prop_assert!(a.is_complete_orthogonal(&ids));
    }
}

#[test]
fn center_constants_are_commutative_and_unital() {
    for name in crate::group::named::NAMES {
        let g = named(name).unwrap();
        let z = CenterOfGroupAlgebra::new(&g);
        let a = z.algebra::<Rational>();
        assert!(a.is_commutative());
        assert_eq!(a.associativity_failure(), None);
        // class sums multiply as in the group algebra
        for i in 0..z.dim() {
            for j in 0..z.dim() {
                let ci = z.to_group_vector(&a.basis_vector(i));
                let cj = z.to_group_vector(&a.basis_vector(j));
                let prod = group_algebra_mul(&g, &ci, &cj);
                let want = z.to_group_vector(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                assert_eq!(prod, want, "{name}");
            }
        }
    }
}

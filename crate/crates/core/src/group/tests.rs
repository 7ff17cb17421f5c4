use std::collections::BTreeSet;
use std::sync::Arc;

use super::named::{grid_groups, named};
use super::*;

fn perm_group(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_generators(degree, gens).unwrap()
}

/// Naive closure: keep multiplying every pair until nothing new appears.
fn brute_closure(degree: usize, gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    set.insert((0..degree).collect());
    set.extend(gens.iter().cloned());
    loop {
        let cur: Vec<_> = set.iter().cloned().collect();
        let mut grew = false;
        for a in &cur {
            for b in &cur {
                grew |= set.insert(compose_perms(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Every subgroup, by testing closure of every identity-containing subset
/// whose size divides the group order.
fn brute_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let others: Vec<usize> = g.elements().filter(|&x| x != g.identity()).collect();
    let mut out = Vec::new();
    fn rec(
        g: &FiniteGroup,
        others: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        remaining: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            let ok = chosen
                .iter()
                .all(|&a| chosen.iter().all(|&b| chosen.contains(&g.mul(a, b))));
            if ok {
                let mut s = chosen.clone();
                s.sort_unstable();
                out.push(s);
            }
            return;
        }
        for i in start..others.len() {
            if others.len() - i < remaining {
                break;
            }
            chosen.push(others[i]);
            // prune: products of chosen pairs must stay within reach later;
            // only cheap check is inverse closure at the end.
            rec(g, others, i + 1, chosen, remaining - 1, out);
            chosen.pop();
        }
    }
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mut chosen = vec![g.identity()];
        rec(g, &others, 0, &mut chosen, d - 1, &mut out);
    }
    out
}

#[test]
fn closure_examples() {
    let t = perm_group(1, &[]);
    assert_eq!(t.order(), 1);

    let s3 = perm_group(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
    assert_eq!(s3.order(), brute_closure(3, &[vec![1, 2, 0], vec![1, 0, 2]]).len());
    assert_eq!(s3.order(), 6);

    let gens = [vec![1, 0, 3, 2], vec![2, 3, 0, 1]];
    let v4 = perm_group(4, &gens);
    assert_eq!(v4.order(), brute_closure(4, &gens).len());
    assert_eq!(v4.order(), 4);
    assert!(v4.elements().skip(1).all(|x| v4.element_order(x) == 2));
}

#[test]
fn closure_respects_cap_and_validates_generators() {
    let s4 = [vec![1, 2, 3, 0], vec![1, 0, 2, 3]];
    assert_eq!(
        FiniteGroup::from_generators_with_cap(4, &s4, 10).unwrap_err(),
        GroupError::TooLarge { cap: 10 }
    );
    assert!(matches!(
        FiniteGroup::from_generators(3, &[vec![0, 0, 1]]),
        Err(GroupError::NotAPermutation { .. })
    ));
}

#[test]
fn bfs_ordering_is_canonical() {
    let g = named("s3").unwrap();
    assert_eq!(g.identity(), 0);
    // first generator is element 1, second is element 2
    assert_eq!(g.permutation(1).unwrap(), &[1, 2, 0]);
    assert_eq!(g.permutation(2).unwrap(), &[1, 0, 2]);
    for (y, parent, k) in g.word_tree() {
        assert_eq!(g.mul(g.generators()[k], parent), y);
    }
}

#[test]
fn cayley_table_round_trip_and_validation() {
    let g = named("q8").unwrap();
    let h = FiniteGroup::from_table(g.table_rows()).unwrap();
    assert_eq!(h.order(), 8);
    assert!(are_isomorphic(&g, &h));
    let mut bad = g.table_rows();
    bad[1].swap(2, 3);
    assert!(FiniteGroup::from_table(bad).is_err());
    // a Latin square that is not associative (order-5 loop)
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(
        FiniteGroup::from_table(loop5),
        Err(GroupError::InvalidTable(_))
    ));
}

#[test]
fn subgroup_class_examples() {
    let t = named("c1").unwrap();
    assert_eq!(t.subgroups_up_to_conjugacy().len(), 1);

    let s3 = named("s3").unwrap();
    let orders: Vec<usize> = s3.subgroups_up_to_conjugacy().iter().map(Subgroup::order).collect();
    assert_eq!(orders, vec![1, 2, 3, 6]);

    let q8 = named("q8").unwrap();
    let orders: Vec<usize> = q8.subgroups_up_to_conjugacy().iter().map(Subgroup::order).collect();
    assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
}

#[test]
fn subgroup_classes_match_exhaustive_enumeration() {
    for (name, g) in grid_groups() {
        let all = brute_subgroups(&g);
        let reps = g.subgroups_up_to_conjugacy();
        assert_eq!(reps.first().unwrap().order(), 1, "{name}");
        assert_eq!(reps.last().unwrap().order(), g.order(), "{name}");
        let total: usize = reps.iter().map(|h| g.order() / g.normalizer(h).order()).sum();
        assert_eq!(total, all.len(), "{name}: class sizes vs exhaustive count");
        // every subgroup found exhaustively is conjugate to exactly one rep
        for s in &all {
            let sub = g.subgroup_from_elements(s).unwrap();
            let hits = reps.iter().filter(|r| g.subgroups_conjugate(r, &sub)).count();
            assert_eq!(hits, 1, "{name}: {s:?}");
        }
        assert_eq!(all_subgroups(&g).len(), all.len());
    }
}

#[test]
fn centralizer_and_normalizer_examples() {
    let s3 = named("s3").unwrap();
    let triv = Subgroup::trivial(&s3);
    assert_eq!(s3.centralizer(&triv).order(), 6);
    let c3 = s3.subgroup_generated(&[s3.find_permutation(&[1, 2, 0]).unwrap()]);
    assert_eq!(s3.centralizer(&c3), c3);
    let c2 = s3.subgroup_generated(&[s3.find_permutation(&[1, 0, 2]).unwrap()]);
    assert_eq!(s3.normalizer(&c2), c2);
    let whole = Subgroup::whole(&s3);
    assert_eq!(s3.normalizer(&whole), whole);

    let v4 = named("v4").unwrap();
    for h in v4.subgroups_up_to_conjugacy() {
        assert_eq!(v4.centralizer(&h).order(), 4);
    }

    let s4 = named("s4").unwrap();
    let c3 = s4.subgroup_generated(&[s4.find_permutation(&[1, 2, 0, 3]).unwrap()]);
    let n = s4.normalizer(&c3);
    assert_eq!(n.order(), 6);
    assert!(
        !s4.is_abelian()
            && !n
                .elements()
                .iter()
                .all(|&a| n.elements().iter().all(|&b| s4.mul(a, b) == s4.mul(b, a)))
    );
}

#[test]
fn centralizer_inside_normalizer() {
    for (_, g) in grid_groups() {
        for h in all_subgroups(&g) {
            assert!(g.centralizer(&h).is_subgroup_of(&g.normalizer(&h)));
            assert!(h.is_subgroup_of(&g.normalizer(&h)));
        }
    }
}

#[test]
fn double_coset_examples() {
    let s3 = named("s3").unwrap();
    let whole = Subgroup::whole(&s3);
    let triv = Subgroup::trivial(&s3);
    assert_eq!(s3.double_cosets(&whole, &whole).len(), 1);
    assert_eq!(s3.double_cosets(&triv, &triv).len(), 6);
    let c2 = s3.subgroup_generated(&[s3.find_permutation(&[1, 0, 2]).unwrap()]);
    let dc = s3.double_cosets(&c2, &c2);
    let mut sizes = dc.sizes.clone();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 4]);
    assert_eq!(dc.representatives[0], 0);
    for g in s3.elements() {
        let x = dc.representatives[dc.assignment[g]];
        let in_kxh = c2
            .elements()
            .iter()
            .any(|&k| c2.elements().iter().any(|&h| s3.mul(s3.mul(k, x), h) == g));
        assert!(in_kxh);
    }
}

#[test]
fn double_coset_counts_match_burnside_counting() {
    for (name, g) in grid_groups() {
        let subs = all_subgroups(&g);
        for k in &subs {
            for h in &subs {
                let dc = g.double_cosets(k, h);
                assert_eq!(dc.sizes.iter().sum::<usize>(), g.order());
                let mut fixed = 0;
                for &a in k.elements() {
                    for &b in h.elements() {
                        fixed += g.elements().filter(|&x| g.mul(g.mul(a, x), b) == x).count();
                    }
                }
                assert_eq!(fixed % (k.order() * h.order()), 0);
                assert_eq!(dc.len(), fixed / (k.order() * h.order()), "{name}");
            }
        }
    }
}

#[test]
fn conjugacy_class_examples() {
    let v4 = named("v4").unwrap();
    assert_eq!(v4.conjugacy_classes().len(), 4);
    let s3 = named("s3").unwrap();
    let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
    // identity, then the class of element 1 (a 3-cycle), then transpositions
    let mut sorted = sizes.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 3]);
    assert_eq!(sizes[0], 1);
    let q8 = named("q8").unwrap();
    let mut sizes: Vec<usize> = q8.conjugacy_classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
}

#[test]
fn homs_and_inclusions() {
    let s3 = named("s3").unwrap();
    let c2 = named("c2").unwrap();
    // sign map
    let sign: Vec<usize> = s3
        .elements()
        .map(|x| {
            let p = s3.permutation(x).unwrap();
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            inversions % 2
        })
        .collect();
    let hom = GroupHom::new(s3.clone(), c2.clone(), sign).unwrap();
    assert!(!hom.is_injective());
    assert_eq!(hom.kernel().order(), 3);
    assert_eq!(InjectiveHom::try_from(hom).unwrap_err(), GroupError::NotInjective);

    let c3 = s3.subgroup_generated(&[1]);
    let incl = InjectiveHom::inclusion(&s3, &c3);
    assert_eq!(incl.source().order(), 3);
    assert_eq!(incl.index(), 2);
    assert_eq!(incl.image(), c3);
    let tr = incl.transversal();
    assert_eq!(tr.len(), 2);
    for x in s3.elements() {
        let (i, h) = incl.factor(&tr, x);
        assert_eq!(s3.mul(tr.reps[i], incl.apply(h)), x);
    }
    // conjugating C2 = <(0 1)> by a 3-cycle lands on another C2
    let c2s = s3.subgroup_generated(&[2]);
    let i2 = InjectiveHom::inclusion(&s3, &c2s);
    let (incl_conj, back) = i2.conjugated(1);
    assert_ne!(incl_conj.image(), c2s);
    for l in incl_conj.source().elements() {
        let e = incl_conj.apply(l);
        assert_eq!(s3.conj(1, i2.apply(back.apply(l))), e);
    }
    assert!(Arc::ptr_eq(back.target(), i2.source()));
}

#[test]
fn sylow_subgroups_have_full_p_part() {
    let s4 = named("s4").unwrap();
    assert_eq!(s4.sylow_subgroup(2).order(), 8);
    assert_eq!(s4.sylow_subgroup(3).order(), 3);
    assert_eq!(s4.sylow_subgroup(5).order(), 1);
}

#[test]
fn isomorphism_search() {
    let c4 = named("c4").unwrap();
    let v4 = named("v4").unwrap();
    assert!(!are_isomorphic(&c4, &v4));
    let d8 = named("d8").unwrap();
    let q8 = named("q8").unwrap();
    assert!(!are_isomorphic(&d8, &q8));
    let s3 = named("s3").unwrap();
    let s3b = FiniteGroup::from_generators(3, &[vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
    let m = find_isomorphism(&s3, &s3b).unwrap();
    for a in s3.elements() {
        for b in s3.elements() {
            assert_eq!(m[s3.mul(a, b)], s3b.mul(m[a], m[b]));
        }
    }
}

use std::sync::Arc;

use super::{FiniteGroup, GroupError, GroupRef, Subgroup, Transversal};

/// A checked group homomorphism between two tabulated groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::NotHomomorphism(format!(
                "map has {} entries, source has order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(GroupError::UnknownElement(bad.to_string()));
        }
        // multiplicativity on generators x all elements implies it everywhere
        let mut gens = source.generators().to_vec();
        if gens.is_empty() && source.order() > 1 {
            gens = source.elements().collect();
        }
        for &s in &gens {
            for x in source.elements() {
                if map[source.mul(s, x)] != target.mul(map[s], map[x]) {
                    return Err(GroupError::NotHomomorphism(format!("f({s}*{x}) != f({s})*f({x})")));
                }
            }
        }
        if map[source.identity()] != target.identity() {
            return Err(GroupError::NotHomomorphism("identity not preserved".into()));
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let id = self.target.identity();
        self.map
            .iter()
            .enumerate()
            .all(|(x, &y)| y != id || x == self.source.identity())
    }

    pub fn kernel(&self) -> Subgroup {
        let els: Vec<usize> = self
            .source
            .elements()
            .filter(|&x| self.map[x] == self.target.identity())
            .collect();
        self.source.subgroup_from_elements(&els).expect("kernel is a subgroup")
    }
}

/// An injective homomorphism `H → G`, the group-level shape of a faithful
/// functor between one-object groupoids.
#[derive(Clone, Debug)]
pub struct InjectiveHom {
    source: GroupRef,
    target: GroupRef,
    map: Vec<usize>,
    preimage: Vec<usize>,
}

impl TryFrom<GroupHom> for InjectiveHom {
    type Error = GroupError;

    fn try_from(h: GroupHom) -> Result<Self, GroupError> {
        if !h.is_injective() {
            return Err(GroupError::NotInjective);
        }
        Ok(Self::from_parts(h.source, h.target, h.map))
    }
}

impl InjectiveHom {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self, GroupError> {
        GroupHom::new(source, target, map)?.try_into()
    }

    fn from_parts(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Self {
        let mut preimage = vec![usize::MAX; target.order()];
        for (x, &y) in map.iter().enumerate() {
            preimage[y] = x;
        }
        InjectiveHom {
            source,
            target,
            map,
            preimage,
        }
    }

    pub fn identity(g: &GroupRef) -> Self {
        Self::from_parts(g.clone(), g.clone(), g.elements().collect())
    }

    /// Inclusion of a subgroup, realised as its own tabulated group (elements
    /// in increasing order of their index in the parent).
    pub fn inclusion(parent: &GroupRef, h: &Subgroup) -> Self {
        let els = h.elements();
        let n = els.len();
        let mut pos = vec![usize::MAX; parent.order()];
        for (i, &e) in els.iter().enumerate() {
            pos[e] = i;
        }
        let table: Vec<u32> = (0..n * n)
            .map(|k| pos[parent.mul(els[k / n], els[k % n])] as u32)
            .collect();
        let inverses = els.iter().map(|&e| pos[parent.inv(e)]).collect();
        let mut sub = FiniteGroup {
            order: n,
            table,
            identity: pos[parent.identity()],
            inverses,
            element_names: Some(els.iter().map(|&e| parent.element_name(e)).collect()),
            perms: parent
                .perms
                .as_ref()
                .map(|(d, ps)| (*d, els.iter().map(|&e| ps[e].clone()).collect())),
            generators: Vec::new(),
        };
        sub.generators = sub.greedy_generators();
        Self::from_parts(Arc::new(sub), parent.clone(), els.to_vec())
    }

    /// Given `self : H → G` and `a ∈ G`, returns the inclusion of the
    /// conjugate `aHa⁻¹ → G` and the isomorphism `aHa⁻¹ → H`,
    /// `l ↦ a⁻¹ l a`.
    pub fn conjugated(&self, a: usize) -> (InjectiveHom, InjectiveHom) {
        let g = &self.target;
        let conj = g.conjugate_subgroup(&self.image(), a);
        let incl = InjectiveHom::inclusion(g, &conj);
        let ainv = g.inv(a);
        let back: Vec<usize> = incl.map.iter().map(|&e| self.preimage[g.conj(ainv, e)]).collect();
        let to_h = Self::from_parts(incl.source.clone(), self.source.clone(), back);
        (incl, to_h)
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    #[inline]
    pub fn preimage(&self, y: usize) -> Option<usize> {
        let x = self.preimage[y];
        (x != usize::MAX).then_some(x)
    }

    pub fn image(&self) -> Subgroup {
        self.target
            .subgroup_from_elements(&self.map)
            .expect("image of a hom is a subgroup")
    }

    pub fn index(&self) -> usize {
        self.target.order() / self.source.order()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &InjectiveHom) -> InjectiveHom {
        assert!(
            Arc::ptr_eq(inner.target(), &self.source) || **inner.target() == *self.source,
            "composing homs with mismatched groups"
        );
        Self::from_parts(
            inner.source.clone(),
            self.target.clone(),
            inner.map.iter().map(|&x| self.map[x]).collect(),
        )
    }

    pub fn transversal(&self) -> Transversal {
        Transversal::new(&self.target, &self.image())
    }

    /// Factorises `x = reps[i] * φ(h)`; returns `(i, h)` with `h` in the source.
    pub fn factor(&self, tr: &Transversal, x: usize) -> (usize, usize) {
        let (i, y) = tr.factor(&self.target, x);
        (i, self.preimage[y])
    }

    pub fn as_hom(&self) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.clone(),
        }
    }
}

//! Finite groupoids stored extensionally, faithful functors between them,
//! natural isomorphisms, isocomma squares and skeleta.
//!
//! Morphism composition follows the group convention: `compose(g, f)` is
//! `g ∘ f`, defined when `target(f) == source(g)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::{are_isomorphic, FiniteGroup, GroupError, GroupHom, GroupRef, InjectiveHom, Subgroup};

/// Groupoids with at most this many morphisms are checked for associativity
/// on construction.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 400;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("functor is not faithful")]
    NotFaithful,
    #[error("not a functor: {0}")]
    NotFunctor(String),
    #[error("not a natural isomorphism: {0}")]
    NotNatural(String),
    #[error("invalid groupoid: {0}")]
    Invalid(String),
    #[error("functors do not share a target groupoid")]
    TargetMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type GroupoidRef = Arc<FiniteGroupoid>;

/// A finite groupoid with every hom-set listed.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    labels: Vec<String>,
    src: Vec<u32>,
    tgt: Vec<u32>,
    identities: Vec<u32>,
    inverses: Vec<u32>,
    /// morphisms into each object, and each morphism's position there
    incoming: Vec<Vec<u32>>,
    in_pos: Vec<u32>,
    outgoing: Vec<Vec<u32>>,
    out_pos: Vec<u32>,
    /// per middle object `b`: `g ∘ f` at `in_pos(f) * |out(b)| + out_pos(g)`
    comp: Vec<Vec<u32>>,
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupoid")
            .field("objects", &self.labels.len())
            .field("morphisms", &self.src.len())
            .finish()
    }
}

impl FiniteGroupoid {
    /// Builds a groupoid from its morphisms `(source, target)`, the identity
    /// at each object and a composition rule `compose(g, f) = g ∘ f`.
    /// Units, inverses and closure are always checked; associativity is
    /// checked exhaustively for small groupoids.
    pub fn new(
        labels: Vec<String>,
        morphisms: &[(usize, usize)],
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupoidError> {
        let n = labels.len();
        if identities.len() != n {
            return Err(GroupoidError::Invalid("one identity per object required".into()));
        }
        let m = morphisms.len();
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut in_pos = vec![0u32; m];
        let mut out_pos = vec![0u32; m];
        for (id, &(a, b)) in morphisms.iter().enumerate() {
            if a >= n || b >= n {
                return Err(GroupoidError::Invalid(format!("morphism {id} has an unknown endpoint")));
            }
            out_pos[id] = outgoing[a].len() as u32;
            outgoing[a].push(id as u32);
            in_pos[id] = incoming[b].len() as u32;
            incoming[b].push(id as u32);
        }
        for (x, &e) in identities.iter().enumerate() {
            if e >= m || morphisms[e] != (x, x) {
                return Err(GroupoidError::Invalid(format!(
                    "identity of object {x} is not an endomorphism"
                )));
            }
        }
        let mut comp = Vec::with_capacity(n);
        for b in 0..n {
            let mut table = Vec::with_capacity(incoming[b].len() * outgoing[b].len());
            for &f in &incoming[b] {
                let a = morphisms[f as usize].0;
                for &g in &outgoing[b] {
                    let c = morphisms[g as usize].1;
                    let h = compose(g as usize, f as usize);
                    if h >= m || morphisms[h] != (a, c) {
                        return Err(GroupoidError::Invalid(format!(
                            "composite of {g} and {f} has the wrong endpoints"
                        )));
                    }
                    table.push(h as u32);
                }
            }
            comp.push(table);
        }
        let mut gpd = FiniteGroupoid {
            labels,
            src: morphisms.iter().map(|&(a, _)| a as u32).collect(),
            tgt: morphisms.iter().map(|&(_, b)| b as u32).collect(),
            identities: identities.iter().map(|&e| e as u32).collect(),
            inverses: Vec::new(),
            incoming,
            in_pos,
            outgoing,
            out_pos,
            comp,
        };
        for f in 0..m {
            let (a, b) = gpd.endpoints(f);
            if gpd.compose(gpd.identity(b), f) != f || gpd.compose(f, gpd.identity(a)) != f {
                return Err(GroupoidError::Invalid(format!("identities are not units for {f}")));
            }
        }
        let mut inverses = Vec::with_capacity(m);
        for f in 0..m {
            let (a, b) = gpd.endpoints(f);
            let inv = gpd
                .hom(b, a)
                .find(|&g| gpd.compose(g, f) == gpd.identity(a) && gpd.compose(f, g) == gpd.identity(b))
                .ok_or_else(|| GroupoidError::Invalid(format!("morphism {f} has no inverse")))?;
            inverses.push(inv as u32);
        }
        gpd.inverses = inverses;
        if m <= ASSOCIATIVITY_CHECK_LIMIT {
            gpd.check_associativity()?;
        }
        Ok(gpd)
    }

    /// Exhaustive associativity check over all composable triples.
    pub fn check_associativity(&self) -> Result<(), GroupoidError> {
        for f in 0..self.morphism_count() {
            let b = self.target(f);
            for &g in &self.outgoing[b] {
                let g = g as usize;
                let gf = self.compose(g, f);
                for &h in &self.outgoing[self.target(g)] {
                    let h = h as usize;
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        return Err(GroupoidError::Invalid(format!(
                            "associativity fails at ({h}, {g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.labels.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn source(&self, f: usize) -> usize {
        self.src[f] as usize
    }

    #[inline]
    pub fn target(&self, f: usize) -> usize {
        self.tgt[f] as usize
    }

    pub fn endpoints(&self, f: usize) -> (usize, usize) {
        (self.source(f), self.target(f))
    }

    #[inline]
    pub fn identity(&self, x: usize) -> usize {
        self.identities[x] as usize
    }

    #[inline]
    pub fn inverse(&self, f: usize) -> usize {
        self.inverses[f] as usize
    }

    /// `g ∘ f`; panics if the pair is not composable.
    #[inline]
    pub fn compose(&self, g: usize, f: usize) -> usize {
        let b = self.tgt[f] as usize;
        assert_eq!(self.src[g] as usize, b, "morphisms are not composable");
        let w = self.outgoing[b].len();
        self.comp[b][self.in_pos[f] as usize * w + self.out_pos[g] as usize] as usize
    }

    /// Morphisms `a → b`, in increasing id order.
    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.outgoing[a]
            .iter()
            .map(|&f| f as usize)
            .filter(move |&f| self.target(f) == b)
    }

    pub fn outgoing(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.outgoing[a].iter().map(|&f| f as usize)
    }

    /// Whether every morphism is an identity.
    pub fn is_discrete(&self) -> bool {
        self.morphism_count() == self.object_count()
    }

    /// Automorphism group of `x` as a tabulated group, together with the
    /// morphism id of each group element.
    pub fn automorphism_group(&self, x: usize) -> (FiniteGroup, Vec<usize>) {
        let auts: Vec<usize> = self.hom(x, x).collect();
        let mut pos = std::collections::HashMap::new();
        for (i, &f) in auts.iter().enumerate() {
            pos.insert(f, i);
        }
        let table: Vec<Vec<usize>> = auts
            .iter()
            .map(|&a| auts.iter().map(|&b| pos[&self.compose(a, b)]).collect())
            .collect();
        let g = FiniteGroup::from_table_with_cap(table, usize::MAX)
            .expect("automorphisms of a groupoid object form a group");
        (g, auts)
    }
}

/// The one-object groupoid with automorphism group `g`; morphism ids are
/// the element indices.
pub fn groupoid_from_group(g: &FiniteGroup) -> FiniteGroupoid {
    let morphisms = vec![(0, 0); g.order()];
    FiniteGroupoid::new(vec!["*".into()], &morphisms, vec![g.identity()], |a, b| g.mul(a, b))
        .expect("a group is a one-object groupoid")
}

/// A functor between finite groupoids.
#[derive(Clone, Debug)]
pub struct GroupoidFunctor {
    source: GroupoidRef,
    target: GroupoidRef,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
    faithful: bool,
}

impl GroupoidFunctor {
    /// Checks endpoints, identities and composition; if `faithful` is set,
    /// also checks injectivity on every hom-set.
    pub fn new(
        source: GroupoidRef,
        target: GroupoidRef,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
        faithful: bool,
    ) -> Result<Self, GroupoidError> {
        if object_map.len() != source.object_count() || morphism_map.len() != source.morphism_count() {
            return Err(GroupoidError::NotFunctor("map sizes do not match the source".into()));
        }
        for f in 0..source.morphism_count() {
            let (a, b) = source.endpoints(f);
            let ff = morphism_map[f];
            if ff >= target.morphism_count() || target.endpoints(ff) != (object_map[a], object_map[b]) {
                return Err(GroupoidError::NotFunctor(format!(
                    "morphism {f} lands in the wrong hom-set"
                )));
            }
        }
        for x in 0..source.object_count() {
            if morphism_map[source.identity(x)] != target.identity(object_map[x]) {
                return Err(GroupoidError::NotFunctor(format!("identity of {x} not preserved")));
            }
        }
        for f in 0..source.morphism_count() {
            for g in source.outgoing(source.target(f)) {
                if morphism_map[source.compose(g, f)] != target.compose(morphism_map[g], morphism_map[f]) {
                    return Err(GroupoidError::NotFunctor(format!(
                        "composite of {g} and {f} not preserved"
                    )));
                }
            }
        }
        let functor = GroupoidFunctor {
            source,
            target,
            object_map,
            morphism_map,
            faithful,
        };
        if faithful && !functor.is_faithful() {
            return Err(GroupoidError::NotFaithful);
        }
        Ok(functor)
    }

    pub fn identity(g: &GroupoidRef) -> Self {
        GroupoidFunctor {
            source: g.clone(),
            target: g.clone(),
            object_map: (0..g.object_count()).collect(),
            morphism_map: (0..g.morphism_count()).collect(),
            faithful: true,
        }
    }

    /// Injectivity on every hom-set. In a groupoid it suffices to check that
    /// only identities map to identities.
    pub fn is_faithful(&self) -> bool {
        (0..self.source.morphism_count()).all(|f| {
            let (a, b) = self.source.endpoints(f);
            let img = self.morphism_map[f];
            a != b || img != self.target.identity(self.object_map[a]) || f == self.source.identity(a)
        })
    }

    pub fn faithful(&self) -> bool {
        self.faithful
    }

    pub fn source(&self) -> &GroupoidRef {
        &self.source
    }

    pub fn target(&self) -> &GroupoidRef {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    #[inline]
    pub fn on_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    #[inline]
    pub fn on_morphism(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &GroupoidFunctor) -> GroupoidFunctor {
        assert!(
            Arc::ptr_eq(&inner.target, &self.source) || *inner.target == *self.source,
            "composing functors with mismatched groupoids"
        );
        GroupoidFunctor {
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner.object_map.iter().map(|&x| self.object_map[x]).collect(),
            morphism_map: inner.morphism_map.iter().map(|&f| self.morphism_map[f]).collect(),
            faithful: self.faithful && inner.faithful,
        }
    }
}

/// The one-object functor of a group homomorphism; fails unless the
/// homomorphism is injective.
pub fn functor_from_hom(h: &GroupHom) -> Result<GroupoidFunctor, GroupoidError> {
    if !h.is_injective() {
        return Err(GroupoidError::NotFaithful);
    }
    GroupoidFunctor::new(
        Arc::new(groupoid_from_group(h.source())),
        Arc::new(groupoid_from_group(h.target())),
        vec![0],
        h.map().to_vec(),
        true,
    )
}

/// A natural isomorphism between parallel functors, one component
/// `F(x) → G(x)` per source object.
#[derive(Clone, Debug)]
pub struct NaturalIso {
    source: GroupoidFunctor,
    target: GroupoidFunctor,
    components: Vec<usize>,
}

impl NaturalIso {
    pub fn new(
        source: GroupoidFunctor,
        target: GroupoidFunctor,
        components: Vec<usize>,
    ) -> Result<Self, GroupoidError> {
        let dom = source.source.clone();
        let cod = source.target.clone();
        if *target.source != *dom || *target.target != *cod {
            return Err(GroupoidError::NotNatural("functors are not parallel".into()));
        }
        if components.len() != dom.object_count() {
            return Err(GroupoidError::NotNatural("one component per object required".into()));
        }
        for (x, &c) in components.iter().enumerate() {
            if c >= cod.morphism_count() || cod.endpoints(c) != (source.on_object(x), target.on_object(x)) {
                return Err(GroupoidError::NotNatural(format!(
                    "component at {x} has the wrong endpoints"
                )));
            }
            let inv = cod.inverse(c);
            if cod.compose(inv, c) != cod.identity(source.on_object(x)) {
                return Err(GroupoidError::NotNatural(format!("component at {x} is not invertible")));
            }
        }
        for f in 0..dom.morphism_count() {
            let (a, b) = dom.endpoints(f);
            let lhs = cod.compose(target.on_morphism(f), components[a]);
            let rhs = cod.compose(components[b], source.on_morphism(f));
            if lhs != rhs {
                return Err(GroupoidError::NotNatural(format!(
                    "naturality square fails at morphism {f}"
                )));
            }
        }
        Ok(NaturalIso {
            source,
            target,
            components,
        })
    }

    pub fn source(&self) -> &GroupoidFunctor {
        &self.source
    }

    pub fn target(&self) -> &GroupoidFunctor {
        &self.target
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }
}

/// The isocomma square `(i/j)` over a cospan `H --i--> G <--j-- K`.
#[derive(Clone, Debug)]
pub struct IsocommaResult {
    pub groupoid: GroupoidRef,
    /// objects as `(x, y, g)` with `g : i(x) → j(y)`
    pub objects: Vec<(usize, usize, usize)>,
    /// morphisms as `(h, k)` pairs of morphisms in `H` and `K`
    pub morphisms: Vec<(usize, usize)>,
    pub p: GroupoidFunctor,
    pub q: GroupoidFunctor,
    /// natural isomorphism `i ∘ p ⇒ j ∘ q`
    pub gamma: NaturalIso,
}

/// Objects are the triples `(x, y, g)` in lexicographic order; a morphism
/// `(h, k) : (x, y, g) → (x', y', g')` satisfies `j(k) ∘ g = g' ∘ i(h)`.
pub fn isocomma(i: &GroupoidFunctor, j: &GroupoidFunctor) -> Result<IsocommaResult, GroupoidError> {
    if !(Arc::ptr_eq(&i.target, &j.target) || *i.target == *j.target) {
        return Err(GroupoidError::TargetMismatch);
    }
    if !i.is_faithful() || !j.is_faithful() {
        return Err(GroupoidError::NotFaithful);
    }
    let (gh, gk, gg) = (&i.source, &j.source, &i.target);
    let mut objects = Vec::new();
    for x in 0..gh.object_count() {
        for y in 0..gk.object_count() {
            for g in gg.hom(i.on_object(x), j.on_object(y)) {
                objects.push((x, y, g));
            }
        }
    }
    let index: std::collections::HashMap<(usize, usize, usize), usize> =
        objects.iter().enumerate().map(|(n, &o)| (o, n)).collect();

    // morphisms out of each object, enumerated by (h, k) over outgoing lists
    let mut offsets = Vec::with_capacity(objects.len());
    let mut morphisms = Vec::new();
    let mut endpoints = Vec::new();
    let mut identities = Vec::with_capacity(objects.len());
    for (n, &(x, y, g)) in objects.iter().enumerate() {
        offsets.push(morphisms.len());
        for h in gh.outgoing(x) {
            let ih_inv = gg.inverse(i.on_morphism(h));
            for k in gk.outgoing(y) {
                let g2 = gg.compose(gg.compose(j.on_morphism(k), g), ih_inv);
                let t = index[&(gh.target(h), gk.target(k), g2)];
                if h == gh.identity(x) && k == gk.identity(y) {
                    identities.push(morphisms.len());
                }
                morphisms.push((h, k));
                endpoints.push((n, t));
            }
        }
    }
    let id_of = |src: usize, h: usize, k: usize| {
        let (x, y, _) = objects[src];
        let w = gk.outgoing[y].len();
        debug_assert_eq!(gh.source(h), x);
        offsets[src] + gh.out_pos[h] as usize * w + gk.out_pos[k] as usize
    };
    let labels = objects
        .iter()
        .map(|&(x, y, g)| format!("({}, {}, {})", gh.label(x), gk.label(y), g))
        .collect();
    let gpd = FiniteGroupoid::new(labels, &endpoints, identities, |b, a| {
        let (h1, k1) = morphisms[a];
        let (h2, k2) = morphisms[b];
        id_of(endpoints[a].0, gh.compose(h2, h1), gk.compose(k2, k1))
    })?;
    let gpd = Arc::new(gpd);
    let p = GroupoidFunctor::new(
        gpd.clone(),
        gh.clone(),
        objects.iter().map(|o| o.0).collect(),
        morphisms.iter().map(|m| m.0).collect(),
        true,
    )?;
    let q = GroupoidFunctor::new(
        gpd.clone(),
        gk.clone(),
        objects.iter().map(|o| o.1).collect(),
        morphisms.iter().map(|m| m.1).collect(),
        true,
    )?;
    let gamma = NaturalIso::new(i.compose(&p), j.compose(&q), objects.iter().map(|o| o.2).collect())?;
    Ok(IsocommaResult {
        groupoid: gpd,
        objects,
        morphisms,
        p,
        q,
        gamma,
    })
}

/// One connected component of a skeleton.
#[derive(Clone, Debug)]
pub struct SkeletonComponent {
    pub representative: usize,
    pub automorphisms: FiniteGroup,
    /// morphism id of each element of `automorphisms`
    pub automorphism_ids: Vec<usize>,
}

/// A groupoid's decomposition into connected components, each equivalent to
/// the automorphism group of its minimal object.
#[derive(Clone, Debug)]
pub struct SkeletonDecomposition {
    pub components: Vec<SkeletonComponent>,
    /// component index of each object
    pub component_of: Vec<usize>,
    /// a morphism from each object to its component's representative
    pub connecting: Vec<usize>,
}

pub fn skeletonize(gpd: &FiniteGroupoid) -> SkeletonDecomposition {
    let n = gpd.object_count();
    let mut component_of = vec![usize::MAX; n];
    let mut connecting = vec![usize::MAX; n];
    let mut components = Vec::new();
    for rep in 0..n {
        if component_of[rep] != usize::MAX {
            continue;
        }
        let idx = components.len();
        // every morphism out of the representative reaches an object of the
        // component; its inverse connects back
        for f in gpd.outgoing(rep) {
            let y = gpd.target(f);
            if component_of[y] == usize::MAX {
                component_of[y] = idx;
                connecting[y] = gpd.inverse(f);
            }
        }
        let (automorphisms, automorphism_ids) = gpd.automorphism_group(rep);
        components.push(SkeletonComponent {
            representative: rep,
            automorphisms,
            automorphism_ids,
        });
    }
    SkeletonDecomposition {
        components,
        component_of,
        connecting,
    }
}

/// One matched pair in an isocomma decomposition check.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentMatch {
    pub component: usize,
    pub representative: String,
    pub order: usize,
    /// double-coset representative `x` whose `K ∩ xHx⁻¹` matched
    pub double_coset_rep: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsocommaReport {
    pub objects: usize,
    pub morphisms: usize,
    pub double_cosets: usize,
    pub component_orders: Vec<usize>,
    pub intersection_orders: Vec<usize>,
    pub matching: Vec<ComponentMatch>,
    pub matched: bool,
    pub failure: Option<String>,
}

/// Compares the skeleton of the isocomma of `H ↪ G ↩ K` with the groups
/// `K ∩ xHx⁻¹` over double cosets `KxH`, matching components to double
/// cosets by group isomorphism.
pub fn verify_isocomma_decomposition(g: &GroupRef, k: &Subgroup, h: &Subgroup) -> IsocommaReport {
    let ih = InjectiveHom::inclusion(g, h);
    let ik = InjectiveHom::inclusion(g, k);
    let fi = functor_from_hom(&ih.as_hom()).expect("inclusions are faithful");
    let fj = functor_from_hom(&ik.as_hom()).expect("inclusions are faithful");
    // share one copy of the target
    let fj = GroupoidFunctor {
        target: fi.target.clone(),
        ..fj
    };
    let iso = isocomma(&fi, &fj).expect("inclusions into a common group");
    let skel = skeletonize(&iso.groupoid);

    let dc = g.double_cosets(k, h);
    let intersections: Vec<FiniteGroup> = dc
        .representatives
        .iter()
        .map(|&x| {
            let s = g.intersection(k, &g.conjugate_subgroup(h, x));
            InjectiveHom::inclusion(g, &s).source().as_ref().clone()
        })
        .collect();

    let mut report = IsocommaReport {
        objects: iso.groupoid.object_count(),
        morphisms: iso.groupoid.morphism_count(),
        double_cosets: dc.len(),
        component_orders: skel.components.iter().map(|c| c.automorphisms.order()).collect(),
        intersection_orders: intersections.iter().map(FiniteGroup::order).collect(),
        matching: Vec::new(),
        matched: false,
        failure: None,
    };
    if skel.components.len() != dc.len() {
        report.failure = Some(format!(
            "{} components but {} double cosets",
            skel.components.len(),
            dc.len()
        ));
        return report;
    }
    let mut used = vec![false; dc.len()];
    for (ci, comp) in skel.components.iter().enumerate() {
        let found = (0..dc.len()).find(|&d| !used[d] && are_isomorphic(&comp.automorphisms, &intersections[d]));
        match found {
            Some(d) => {
                used[d] = true;
                report.matching.push(ComponentMatch {
                    component: ci,
                    representative: iso.groupoid.label(comp.representative).to_string(),
                    order: comp.automorphisms.order(),
                    double_coset_rep: dc.representatives[d],
                });
            }
            None => {
                report.failure = Some(format!(
                    "component {ci} (automorphism group of order {}) matches no remaining double coset",
                    comp.automorphisms.order()
                ));
                return report;
            }
        }
    }
    report.matched = true;
    report
}

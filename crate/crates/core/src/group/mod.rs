//! Finite groups as closed multiplication tables.
//!
//! Elements are positional indices. Groups built from permutation generators
//! use a canonical breadth-first ordering from the identity, so the identity
//! is always element 0 and every element is `s * parent` for an input
//! generator `s`.

mod homs;
mod iso;
pub mod named;
mod subgroups;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use homs::{GroupHom, InjectiveHom};
pub use iso::{are_isomorphic, find_isomorphism};
pub use subgroups::{all_subgroups, SubgroupClasses};

/// Default bound on the order of any group the crate will build.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Environment variable consulted by [`order_cap_from_env`].
pub const ORDER_CAP_ENV: &str = "MACKEY_ORDER_CAP";

/// Shared handle to an immutable group.
pub type GroupRef = Arc<FiniteGroup>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large: order exceeds the cap of {cap}")]
    TooLarge { cap: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("elements do not form a subgroup: {0}")]
    NotSubgroup(String),
    #[error("map is not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("homomorphism is not injective")]
    NotInjective,
    #[error("element {0} is not a member of the group")]
    UnknownElement(String),
}

/// Reads the order cap from `MACKEY_ORDER_CAP`, falling back to the default.
pub fn order_cap_from_env() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// A finite group stored as its full Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    element_names: Option<Vec<String>>,
    /// Permutation realisation (degree, images of each element), if known.
    perms: Option<(usize, Vec<Vec<usize>>)>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.order == other.order && self.identity == other.identity && self.table == other.table)
    }
}

impl Eq for FiniteGroup {}

/// Composition `a ∘ b` of permutations (apply `b` first).
pub fn compose_perms(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cyc.iter().map(ToString::to_string).collect();
        out.push('(');
        out.push_str(&parts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

impl FiniteGroup {
    /// Closure of permutation generators, with the default order cap.
    pub fn from_generators(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_generators_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_with_cap(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree && g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::NotAPermutation { index, degree });
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = compose_perms(s, &elements[x]);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = compose_perms(&elements[a], &elements[b]);
                table[a * n + b] = index[&c] as u32;
            }
        }
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("inverse exists"))
            .collect();
        let gens = generators.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverses,
            element_names: Some(elements.iter().map(|p| cycle_notation(p)).collect()),
            perms: Some((degree, elements)),
            generators: gens,
        })
    }

    /// Builds a group from an explicit Cayley table (`table[a][b] = a*b`),
    /// validating every group axiom; associativity is checked exhaustively
    /// for orders up to 256.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_with_cap(table, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(table: Vec<Vec<usize>>, cap: usize) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if n > cap {
            return Err(GroupError::TooLarge { cap });
        }
        for row in &table {
            if row.len() != n {
                return Err(GroupError::InvalidTable("table is not square".into()));
            }
        }
        // Latin square
        for i in 0..n {
            let mut rs = vec![false; n];
            let mut cs = vec![false; n];
            for j in 0..n {
                let (r, c) = (table[i][j], table[j][i]);
                if r >= n || c >= n || std::mem::replace(&mut rs[r], true) || std::mem::replace(&mut cs[c], true) {
                    return Err(GroupError::InvalidTable(format!("row/column {i} is not a permutation")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::InvalidTable("no two-sided identity".into()))?;
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let inverses: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| flat[a * n + b] as usize == identity).unwrap())
            .collect();
        let mut g = FiniteGroup {
            order: n,
            table: flat,
            identity,
            inverses,
            element_names: None,
            perms: None,
            generators: Vec::new(),
        };
        g.generators = g.greedy_generators();
        Ok(g)
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::from_generators(1, &[]).expect("trivial group")
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.element_names = Some(names);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn element_name(&self, a: usize) -> String {
        match &self.element_names {
            Some(names) => names[a].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn permutation(&self, a: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|(_, ps)| ps[a].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|(d, _)| *d)
    }

    /// Index of the element realised by a permutation, if this group is a
    /// permutation group containing it.
    pub fn find_permutation(&self, p: &[usize]) -> Option<usize> {
        let (_, ps) = self.perms.as_ref()?;
        ps.iter().position(|q| q == p)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Writes every element as `s * parent` over [`Self::generators`]:
    /// returns `(parent, generator position)` for each non-identity element
    /// in breadth-first order.
    pub fn word_tree(&self) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for (k, &s) in self.generators.iter().enumerate() {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push((y, x, k));
                    queue.push_back(y);
                }
            }
        }
        out
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial(self);
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        for a in by_order {
            if current.order() == self.order {
                break;
            }
            if !current.contains(a) {
                gens.push(a);
                let mut all = current.elements().to_vec();
                all.push(a);
                current = self.subgroup_generated(&all);
            }
        }
        gens
    }

    // ---- subgroups -----------------------------------------------------

    /// Subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(s, x);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_mask(mask)
    }

    /// Validates that `elements` form a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let mut mask = vec![false; self.order];
        for &e in elements {
            if e >= self.order {
                return Err(GroupError::UnknownElement(e.to_string()));
            }
            mask[e] = true;
        }
        if !mask[self.identity] {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for &a in elements {
            if !mask[self.inv(a)] {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in elements {
                if !mask[self.mul(a, b)] {
                    return Err(GroupError::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(Subgroup::from_mask(mask))
    }

    /// `x H x^-1`
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        let mut mask = vec![false; self.order];
        for &e in h.elements() {
            mask[self.conj(x, e)] = true;
        }
        Subgroup::from_mask(mask)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_mask((0..self.order).map(|x| a.contains(x) && b.contains(x)).collect())
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        assert_eq!(h.mask.len(), self.order, "subgroup of a different group");
        Subgroup::from_mask(
            (0..self.order)
                .map(|g| h.elements().iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
                .collect(),
        )
    }

    pub fn centralizer_of_element(&self, a: usize) -> Subgroup {
        Subgroup::from_mask((0..self.order).map(|g| self.mul(g, a) == self.mul(a, g)).collect())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        assert_eq!(h.mask.len(), self.order, "subgroup of a different group");
        Subgroup::from_mask(
            (0..self.order)
                .map(|g| h.elements().iter().all(|&x| h.contains(self.conj(g, x))))
                .collect(),
        )
    }

    /// Whether `a` and `b` are conjugate in this group.
    pub fn subgroups_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order() && (0..self.order).any(|g| a.elements().iter().all(|&x| b.contains(self.conj(g, x))))
    }

    /// Some `g` with `g a g^-1 ⊆ b`, if any.
    pub fn conjugate_into(&self, a: &Subgroup, b: &Subgroup) -> Option<usize> {
        (0..self.order).find(|&g| a.elements().iter().all(|&x| b.contains(self.conj(g, x))))
    }

    /// Minimal-element left transversal of `G/H`: one representative per
    /// coset `tH`, the identity representing `H` itself. Returned in
    /// increasing order of the representative.
    pub fn left_transversal(&self, h: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::with_capacity(self.order / h.order());
        let mut visit = |t: usize, reps: &mut Vec<usize>| {
            if !seen[t] {
                reps.push(t);
                for &x in h.elements() {
                    seen[self.mul(t, x)] = true;
                }
            }
        };
        visit(self.identity, &mut reps);
        for t in 0..self.order {
            visit(t, &mut reps);
        }
        reps.sort_unstable();
        reps
    }

    pub fn double_cosets(&self, k: &Subgroup, h: &Subgroup) -> DoubleCosetDecomposition {
        let mut assignment = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for g in 0..self.order {
            if assignment[g] != usize::MAX {
                continue;
            }
            let idx = representatives.len();
            representatives.push(g);
            let mut size = 0;
            for &a in k.elements() {
                let ag = self.mul(a, g);
                for &b in h.elements() {
                    let y = self.mul(ag, b);
                    if assignment[y] == usize::MAX {
                        assignment[y] = idx;
                        size += 1;
                    }
                }
            }
            sizes.push(size);
        }
        DoubleCosetDecomposition {
            left: k.clone(),
            right: h.clone(),
            representatives,
            assignment,
            sizes,
        }
    }

    /// Conjugacy classes: identity class first, the rest sorted by minimal
    /// element; each class sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        let mut starts: Vec<usize> = vec![self.identity];
        starts.extend((0..self.order).filter(|&x| x != self.identity));
        for x in starts {
            if seen[x] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order).map(|g| self.conj(g, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                seen[y] = true;
            }
            classes.push(cls);
        }
        classes
    }

    /// Sylow p-subgroup (the first one found by greedy p-element extension).
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let mut target = 1;
        let mut n = self.order;
        while n.is_multiple_of(p) {
            n /= p;
            target *= p;
        }
        let mut current = Subgroup::trivial(self);
        while current.order() < target {
            // extend by a p-element normalising the current p-subgroup
            let norm = self.normalizer(&current);
            let ext = norm.elements().iter().copied().find(|&x| {
                if current.contains(x) {
                    return false;
                }
                let o = self.element_order(x);
                if !is_power_of(o, p) {
                    return false;
                }
                let mut gens = current.elements().to_vec();
                gens.push(x);
                is_power_of(self.subgroup_generated(&gens).order(), p)
            });
            let x = ext.expect("Sylow theorem guarantees an extension");
            let mut gens = current.elements().to_vec();
            gens.push(x);
            current = self.subgroup_generated(&gens);
        }
        current
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A subgroup of a fixed ambient group, stored as a sorted element list and
/// a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// By order, then lexicographically by element list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.elements).cmp(&(other.order(), &other.elements))
    }
}

impl Subgroup {
    fn from_mask(mask: Vec<bool>) -> Self {
        let elements = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Subgroup { elements, mask }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut mask = vec![false; g.order()];
        mask[g.identity()] = true;
        Self::from_mask(mask)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_mask(vec![true; g.order()])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn ambient_order(&self) -> usize {
        self.mask.len()
    }
}

/// `K \ G / H` with minimal-element representatives.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    pub left: Subgroup,
    pub right: Subgroup,
    pub representatives: Vec<usize>,
    /// For each element of `G`, the index of its double coset.
    pub assignment: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// Coset bookkeeping for a left transversal of `G / φ(H)` along an
/// injective hom `φ : H → G`: factorises `g t = t' φ(h)`.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub reps: Vec<usize>,
    /// element of `G` -> index of its coset
    pub coset_of: Vec<usize>,
    /// Index in `reps` of the trivial coset.
    pub trivial: usize,
}

impl Transversal {
    pub fn new(g: &FiniteGroup, image: &Subgroup) -> Self {
        let reps = g.left_transversal(image);
        let mut coset_of = vec![usize::MAX; g.order()];
        for (i, &t) in reps.iter().enumerate() {
            for &h in image.elements() {
                coset_of[g.mul(t, h)] = i;
            }
        }
        let trivial = coset_of[g.identity()];
        Transversal {
            reps,
            coset_of,
            trivial,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// For `x ∈ G` returns `(i, y)` with `x = reps[i] * y` and `y` in the
    /// subgroup.
    pub fn factor(&self, g: &FiniteGroup, x: usize) -> (usize, usize) {
        let i = self.coset_of[x];
        (i, g.mul(g.inv(self.reps[i]), x))
    }
}

#[cfg(test)]
mod tests;

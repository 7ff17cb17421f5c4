use crate::group::{FiniteGroup, GroupRef, InjectiveHom, Subgroup};

use super::BurnsideError;

/// A finite left G-set, stored as the full action table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    group: GroupRef,
    size: usize,
    /// `action[g * size + x]` is `g · x`
    action: Vec<u32>,
}

impl GSet {
    /// Checks that the identity acts trivially and that `(gh)·x = g·(h·x)`.
    pub fn new(group: GroupRef, size: usize, action: Vec<usize>) -> Result<Self, BurnsideError> {
        if action.len() != group.order() * size || action.iter().any(|&y| y >= size) {
            return Err(BurnsideError::InvalidAction("action table has the wrong shape".into()));
        }
        let set = GSet {
            size,
            action: action.iter().map(|&y| y as u32).collect(),
            group,
        };
        let g = &set.group;
        for x in 0..size {
            if set.act(g.identity(), x) != x {
                return Err(BurnsideError::InvalidAction(format!("identity moves point {x}")));
            }
        }
        // compatibility on all pairs for small groups, on generators otherwise
        let lefts: Vec<usize> = if g.order() <= 64 || g.generators().is_empty() {
            g.elements().collect()
        } else {
            g.generators().to_vec()
        };
        for &a in &lefts {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for x in 0..size {
                    if set.act(ab, x) != set.act(a, set.act(b, x)) {
                        return Err(BurnsideError::InvalidAction(format!(
                            "({a}*{b})·{x} differs from {a}·({b}·{x})"
                        )));
                    }
                }
            }
        }
        Ok(set)
    }

    fn from_table(group: GroupRef, size: usize, action: Vec<u32>) -> Self {
        GSet { group, size, action }
    }

    /// The single point.
    pub fn point(group: &GroupRef) -> Self {
        Self::from_table(group.clone(), 1, vec![0; group.order()])
    }

    /// `G/H` on the minimal-element left transversal.
    pub fn cosets(group: &GroupRef, h: &Subgroup) -> Self {
        let tr = crate::group::Transversal::new(group, h);
        let n = tr.len();
        let mut action = Vec::with_capacity(group.order() * n);
        for g in group.elements() {
            for &t in &tr.reps {
                action.push(tr.coset_of[group.mul(g, t)] as u32);
            }
        }
        Self::from_table(group.clone(), n, action)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    /// Orbits, each sorted, ordered by minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut orb: Vec<usize> = self.group.elements().map(|g| self.act(g, x)).collect();
            orb.sort_unstable();
            orb.dedup();
            for &y in &orb {
                seen[y] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let els: Vec<usize> = self.group.elements().filter(|&g| self.act(g, x) == x).collect();
        self.group
            .subgroup_from_elements(&els)
            .expect("stabilisers are subgroups")
    }

    /// Number of points fixed by every element of `h`.
    pub fn fixed_points(&self, h: &Subgroup) -> usize {
        (0..self.size)
            .filter(|&x| h.elements().iter().all(|&g| self.act(g, x) == x))
            .count()
    }

    /// Cartesian product with the diagonal action; point `(x, y)` has index
    /// `x * |Y| + y`.
    pub fn product(&self, other: &GSet) -> GSet {
        assert!(*self.group == *other.group, "G-sets over different groups");
        let n = self.size * other.size;
        let mut action = Vec::with_capacity(self.group.order() * n);
        for g in self.group.elements() {
            for x in 0..self.size {
                for y in 0..other.size {
                    action.push((self.act(g, x) * other.size + other.act(g, y)) as u32);
                }
            }
        }
        Self::from_table(self.group.clone(), n, action)
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        assert!(*self.group == *other.group, "G-sets over different groups");
        let n = self.size + other.size;
        let mut action = Vec::with_capacity(self.group.order() * n);
        for g in self.group.elements() {
            action.extend((0..self.size).map(|x| self.act(g, x) as u32));
            action.extend((0..other.size).map(|y| (self.size + other.act(g, y)) as u32));
        }
        Self::from_table(self.group.clone(), n, action)
    }
}

/// `G ×_H X` for an injective `i : H → G`, on points `(t, x)` with index
/// `t * |X| + x` over the minimal-element transversal of `G/i(H)`.
pub fn gset_induce(i: &InjectiveHom, x: &GSet) -> GSet {
    assert!(**x.group() == **i.source(), "G-set is not over the source group");
    let g = i.target();
    let tr = i.transversal();
    let n = tr.len() * x.size();
    let mut action = Vec::with_capacity(g.order() * n);
    for a in g.elements() {
        for &t in &tr.reps {
            let (j, h) = i.factor(&tr, g.mul(a, t));
            for p in 0..x.size() {
                action.push((j * x.size() + x.act(h, p)) as u32);
            }
        }
    }
    GSet::from_table(g.clone(), n, action)
}

/// Restriction of a G-set along `i : H → G`.
pub fn gset_restrict(i: &InjectiveHom, y: &GSet) -> GSet {
    assert!(**y.group() == **i.target(), "G-set is not over the target group");
    let h: &FiniteGroup = i.source();
    let mut action = Vec::with_capacity(h.order() * y.size());
    for a in h.elements() {
        let ga = i.apply(a);
        action.extend((0..y.size()).map(|p| y.act(ga, p) as u32));
    }
    GSet::from_table(i.source().clone(), y.size(), action)
}

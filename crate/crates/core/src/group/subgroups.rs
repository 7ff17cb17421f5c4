use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{FiniteGroup, Subgroup};

/// Representatives of the conjugacy classes of subgroups, each the
/// lexicographically smallest member of its class, sorted by order and then
/// by element list.
#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    reps: Vec<Subgroup>,
    index: HashMap<Vec<usize>, usize>,
}

impl SubgroupClasses {
    pub fn new(g: &FiniteGroup) -> Self {
        let cyclic = cyclic_subgroups(g);
        let trivial = Subgroup::trivial(g);
        let mut found: HashMap<Vec<usize>, (Subgroup, Vec<usize>)> = HashMap::new();
        found.insert(trivial.elements().to_vec(), (trivial.clone(), Vec::new()));
        let mut queue = VecDeque::from([trivial.elements().to_vec()]);
        // Every subgroup is ⟨T, c⟩ for a smaller subgroup T and a cyclic c, so
        // joining each class representative with every cyclic subgroup
        // reaches every class.
        while let Some(key) = queue.pop_front() {
            let (rep, gens) = found[&key].clone();
            for (c, cgen) in &cyclic {
                if c.is_subgroup_of(&rep) {
                    continue;
                }
                let mut jg = gens.clone();
                jg.push(*cgen);
                let joined = g.subgroup_generated(&jg);
                let canon = canonical_conjugate(g, &joined);
                if !found.contains_key(canon.elements()) {
                    // generators of the canonical conjugate
                    let x = conjugator(g, &joined, &canon);
                    let cg: Vec<usize> = jg.iter().map(|&e| g.conj(x, e)).collect();
                    queue.push_back(canon.elements().to_vec());
                    found.insert(canon.elements().to_vec(), (canon, cg));
                }
            }
        }
        let mut reps: Vec<Subgroup> = found.into_values().map(|(s, _)| s).collect();
        reps.sort();
        let index = reps
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements().to_vec(), i))
            .collect();
        SubgroupClasses { reps, index }
    }

    pub fn reps(&self) -> &[Subgroup] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the class containing `s`.
    pub fn classify(&self, g: &FiniteGroup, s: &Subgroup) -> usize {
        let canon = canonical_conjugate(g, s);
        self.index[canon.elements()]
    }
}

/// Lexicographically smallest conjugate of `s`.
pub fn canonical_conjugate(g: &FiniteGroup, s: &Subgroup) -> Subgroup {
    let mut best: Option<Subgroup> = None;
    for x in g.elements() {
        let c = g.conjugate_subgroup(s, x);
        if best.as_ref().is_none_or(|b| c.elements() < b.elements()) {
            best = Some(c);
        }
    }
    best.expect("group is nonempty")
}

fn conjugator(g: &FiniteGroup, from: &Subgroup, to: &Subgroup) -> usize {
    g.elements()
        .find(|&x| from.elements().iter().all(|&e| to.contains(g.conj(x, e))))
        .expect("subgroups are conjugate")
}

/// Distinct cyclic subgroups, each with a generator (the smallest one).
fn cyclic_subgroups(g: &FiniteGroup) -> Vec<(Subgroup, usize)> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for a in g.elements() {
        let c = g.subgroup_generated(&[a]);
        if seen.insert(c.elements().to_vec()) {
            out.push((c, a));
        }
    }
    out
}

/// Every subgroup (all conjugates of all class representatives), sorted by
/// order then element list.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let classes = SubgroupClasses::new(g);
    let mut all: BTreeSet<Subgroup> = BTreeSet::new();
    for r in classes.reps() {
        for x in g.elements() {
            all.insert(g.conjugate_subgroup(r, x));
        }
    }
    all.into_iter().collect()
}

impl FiniteGroup {
    /// One representative per conjugacy class of subgroups; the first entry
    /// is the trivial subgroup and the last is the whole group.
    pub fn subgroups_up_to_conjugacy(&self) -> Vec<Subgroup> {
        SubgroupClasses::new(self).reps
    }
}

use std::collections::{BTreeMap, HashMap};

use crate::group::{all_subgroups, FiniteGroup, GroupRef, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::Ring;

use super::MackeyError;

/// The value at one subgroup: a free module of rank `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub subgroup: Subgroup,
    pub dim: usize,
    pub labels: Vec<String>,
}

/// A `G`-local Mackey functor with levels at every subgroup (not only class
/// representatives), so that conjugation maps are total.
///
/// Maps are matrices acting on coordinate columns:
/// `restriction[(h, k)] : M(H) → M(K)` and `transfer[(h, k)] : M(K) → M(H)`
/// for `K ≤ H`, and `conjugation[g][h] : M(H) → M(gHg⁻¹)`.
#[derive(Clone, Debug)]
pub struct OrdinaryMackeyFunctor<R> {
    group: GroupRef,
    levels: Vec<Level>,
    index: HashMap<Vec<usize>, usize>,
    restriction: BTreeMap<(usize, usize), Matrix<R>>,
    transfer: BTreeMap<(usize, usize), Matrix<R>>,
    conjugation: Vec<Vec<Matrix<R>>>,
}

/// One structure map to evaluate on a basis element.
#[derive(Clone, Copy, Debug)]
pub(crate) enum MapKind {
    Restriction { from: usize, to: usize },
    Transfer { from: usize, to: usize },
    Conjugation { element: usize, from: usize, to: usize },
}

impl<R: Ring> OrdinaryMackeyFunctor<R> {
    /// Checks that every map is present with the right shape.
    pub fn from_parts(
        group: GroupRef,
        levels: Vec<Level>,
        restriction: BTreeMap<(usize, usize), Matrix<R>>,
        transfer: BTreeMap<(usize, usize), Matrix<R>>,
        conjugation: Vec<Vec<Matrix<R>>>,
    ) -> Result<Self, MackeyError> {
        let mut index = HashMap::new();
        for (i, l) in levels.iter().enumerate() {
            if l.subgroup.ambient_order() != group.order() {
                return Err(MackeyError::Malformed(format!("level {i} lives in a different group")));
            }
            if l.labels.len() != l.dim {
                return Err(MackeyError::Malformed(format!(
                    "level {i} has {} labels for rank {}",
                    l.labels.len(),
                    l.dim
                )));
            }
            if index.insert(l.subgroup.elements().to_vec(), i).is_some() {
                return Err(MackeyError::Malformed(format!("level {i} repeats a subgroup")));
            }
        }
        let all = all_subgroups(&group);
        if all.len() != levels.len() || all.iter().any(|s| !index.contains_key(s.elements())) {
            return Err(MackeyError::Malformed(
                "levels must be exactly the subgroups of the group".into(),
            ));
        }
        let f = OrdinaryMackeyFunctor {
            group,
            levels,
            index,
            restriction,
            transfer,
            conjugation,
        };
        let pairs = f.pairs();
        for (name, maps) in [("restriction", &f.restriction), ("transfer", &f.transfer)] {
            if maps.len() != pairs.len() {
                return Err(MackeyError::Malformed(format!(
                    "{} {name} maps for {} pairs",
                    maps.len(),
                    pairs.len()
                )));
            }
            for &(h, k) in &pairs {
                let m = maps
                    .get(&(h, k))
                    .ok_or_else(|| MackeyError::Malformed(format!("missing {name} map ({h}, {k})")))?;
                let (r, c) = if name == "restriction" {
                    (f.levels[k].dim, f.levels[h].dim)
                } else {
                    (f.levels[h].dim, f.levels[k].dim)
                };
                if (m.rows(), m.cols()) != (r, c) {
                    return Err(MackeyError::Malformed(format!(
                        "{name} map ({h}, {k}) has the wrong shape"
                    )));
                }
            }
        }
        if f.conjugation.len() != f.group.order() {
            return Err(MackeyError::Malformed(
                "one row of conjugation maps per group element".into(),
            ));
        }
        for (g, row) in f.conjugation.iter().enumerate() {
            if row.len() != f.levels.len() {
                return Err(MackeyError::Malformed(format!("conjugation by {g} misses levels")));
            }
            for (h, m) in row.iter().enumerate() {
                let t = f.conjugate_level(g, h);
                if (m.rows(), m.cols()) != (f.levels[t].dim, f.levels[h].dim) {
                    return Err(MackeyError::Malformed(format!(
                        "conjugation ({g}, {h}) has the wrong shape"
                    )));
                }
            }
        }
        Ok(f)
    }

    /// Builds every structure map by evaluating `image` on basis elements;
    /// `image` returns the coordinates of the image in the target level.
    pub(crate) fn assemble(
        group: GroupRef,
        levels: Vec<Level>,
        mut image: impl FnMut(MapKind, usize) -> Result<Vec<R>, MackeyError>,
    ) -> Result<Self, MackeyError> {
        let index: HashMap<Vec<usize>, usize> = levels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.subgroup.elements().to_vec(), i))
            .collect();
        let mut f = OrdinaryMackeyFunctor {
            group,
            levels,
            index,
            restriction: BTreeMap::new(),
            transfer: BTreeMap::new(),
            conjugation: Vec::new(),
        };
        let mut matrix = |kind: MapKind, from: usize, to: usize, f: &Self| -> Result<Matrix<R>, MackeyError> {
            let cols = (0..f.levels[from].dim)
                .map(|j| image(kind, j))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Matrix::from_columns(f.levels[to].dim, &cols))
        };
        for (h, k) in f.pairs() {
            let r = matrix(MapKind::Restriction { from: h, to: k }, h, k, &f)?;
            let t = matrix(MapKind::Transfer { from: k, to: h }, k, h, &f)?;
            f.restriction.insert((h, k), r);
            f.transfer.insert((h, k), t);
        }
        for g in f.group.elements() {
            let mut row = Vec::with_capacity(f.levels.len());
            for h in 0..f.levels.len() {
                let to = f.conjugate_level(g, h);
                row.push(matrix(
                    MapKind::Conjugation {
                        element: g,
                        from: h,
                        to,
                    },
                    h,
                    to,
                    &f,
                )?);
            }
            f.conjugation.push(row);
        }
        Ok(f)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level_index(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.elements()).copied()
    }

    /// Rank of `M(S)`.
    pub fn dim(&self, s: &Subgroup) -> Option<usize> {
        self.level_index(s).map(|i| self.levels[i].dim)
    }

    /// All pairs `(h, k)` of level indices with `K ≤ H`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (h, lh) in self.levels.iter().enumerate() {
            for (k, lk) in self.levels.iter().enumerate() {
                if lh.subgroup.order() % lk.subgroup.order() == 0 && lk.subgroup.is_subgroup_of(&lh.subgroup) {
                    out.push((h, k));
                }
            }
        }
        out
    }

    /// Level index of `gHg⁻¹`.
    pub fn conjugate_level(&self, g: usize, h: usize) -> usize {
        let c = self.group.conjugate_subgroup(&self.levels[h].subgroup, g);
        self.index[c.elements()]
    }

    pub(crate) fn level_of(&self, s: &Subgroup) -> usize {
        self.index[s.elements()]
    }

    /// `res^H_K` for level indices with `K ≤ H`.
    pub fn restriction(&self, h: usize, k: usize) -> &Matrix<R> {
        &self.restriction[&(h, k)]
    }

    /// `tr^H_K` for level indices with `K ≤ H`.
    pub fn transfer(&self, h: usize, k: usize) -> &Matrix<R> {
        &self.transfer[&(h, k)]
    }

    /// `c_g : M(H) → M(gHg⁻¹)`.
    pub fn conjugation(&self, g: usize, h: usize) -> &Matrix<R> {
        &self.conjugation[g][h]
    }

    /// Replaces one transfer matrix (same shape), e.g. to build a
    /// counterexample for the checker.
    pub fn set_transfer(&mut self, h: usize, k: usize, m: Matrix<R>) -> Result<(), MackeyError> {
        let old = self
            .transfer
            .get_mut(&(h, k))
            .ok_or_else(|| MackeyError::Malformed(format!("no transfer ({h}, {k})")))?;
        if (old.rows(), old.cols()) != (m.rows(), m.cols()) {
            return Err(MackeyError::Malformed(
                "replacement transfer has the wrong shape".into(),
            ));
        }
        *old = m;
        Ok(())
    }

    pub(crate) fn restriction_maps(&self) -> &BTreeMap<(usize, usize), Matrix<R>> {
        &self.restriction
    }

    pub(crate) fn transfer_maps(&self) -> &BTreeMap<(usize, usize), Matrix<R>> {
        &self.transfer
    }
}

/// Minimal-element left transversal of `H/K` inside `G`.
pub(crate) fn left_cosets(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::with_capacity(h.order() / k.order());
    for &t in h.elements() {
        if !seen[t] {
            reps.push(t);
            for &x in k.elements() {
                seen[g.mul(t, x)] = true;
            }
        }
    }
    reps
}

/// Minimal-element representatives of `K \ L / H` for `H, K ≤ L`.
pub(crate) fn double_cosets_in(g: &FiniteGroup, l: &Subgroup, k: &Subgroup, h: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for &x in l.elements() {
        if !seen[x] {
            reps.push(x);
            for &a in k.elements() {
                let ax = g.mul(a, x);
                for &b in h.elements() {
                    seen[g.mul(ax, b)] = true;
                }
            }
        }
    }
    reps
}

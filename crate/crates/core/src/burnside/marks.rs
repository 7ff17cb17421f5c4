use serde::Serialize;

use crate::group::{FiniteGroup, GroupRef, Subgroup, SubgroupClasses};

use super::{BurnsideError, GSet};

/// Table of marks: `marks[i][j] = |Fix_{H_j}(G/H_i)|` over the canonical
/// list of subgroup classes.
#[derive(Clone, Debug)]
pub struct TableOfMarks {
    group: GroupRef,
    classes: SubgroupClasses,
    marks: Vec<Vec<i64>>,
}

/// An element of the Burnside ring in the basis `[G/H_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BurnsideElement {
    pub coefficients: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(rank: usize) -> Self {
        BurnsideElement {
            coefficients: vec![0; rank],
        }
    }

    /// The basis element `[G/H_i]`.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut e = Self::zero(rank);
        e.coefficients[i] = 1;
        e
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        BurnsideElement {
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }
}

/// `|Fix_K(G/H)|`: cosets `tH` with `t⁻¹ K t ⊆ H`.
fn mark(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> i64 {
    if !g.order().is_multiple_of(h.order()) || !h.order().is_multiple_of(k.order()) {
        return 0;
    }
    let fixed = g
        .elements()
        .filter(|&t| {
            let ti = g.inv(t);
            k.elements().iter().all(|&x| h.contains(g.conj(ti, x)))
        })
        .count();
    (fixed / h.order()) as i64
}

impl TableOfMarks {
    pub fn new(group: &GroupRef) -> Self {
        let classes = SubgroupClasses::new(group);
        let reps = classes.reps();
        let marks = reps
            .iter()
            .map(|h| reps.iter().map(|k| mark(group, h, k)).collect())
            .collect();
        TableOfMarks {
            group: group.clone(),
            classes,
            marks,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClasses {
        &self.classes
    }

    pub fn reps(&self) -> &[Subgroup] {
        self.classes.reps()
    }

    pub fn rank(&self) -> usize {
        self.marks.len()
    }

    pub fn marks(&self) -> &[Vec<i64>] {
        &self.marks
    }

    /// Marks vector `(|Fix_{H_j} X|)_j` of a G-set.
    pub fn marks_of(&self, x: &GSet) -> Vec<i64> {
        self.reps().iter().map(|h| x.fixed_points(h) as i64).collect()
    }

    /// Marks vector of a Burnside-ring element.
    pub fn marks_of_element(&self, a: &BurnsideElement) -> Vec<i64> {
        (0..self.rank())
            .map(|j| (0..self.rank()).map(|i| a.coefficients[i] * self.marks[i][j]).sum())
            .collect()
    }

    /// Inverts the marks map; fails if the vector is not the marks vector of
    /// an integral combination.
    pub fn element_from_marks(&self, v: &[i64]) -> Result<BurnsideElement, BurnsideError> {
        let n = self.rank();
        assert_eq!(v.len(), n);
        let mut c = vec![0i64; n];
        // marks[i][j] = 0 for j > i, so column j involves only i >= j
        for j in (0..n).rev() {
            let rest: i64 = (j + 1..n).map(|i| c[i] * self.marks[i][j]).sum();
            let num = v[j] - rest;
            let d = self.marks[j][j];
            if num % d != 0 {
                return Err(BurnsideError::NonIntegral { class: j });
            }
            c[j] = num / d;
        }
        Ok(BurnsideElement { coefficients: c })
    }

    /// Decomposes a G-set into orbit types via its marks.
    pub fn decompose(&self, x: &GSet) -> Result<BurnsideElement, BurnsideError> {
        self.element_from_marks(&self.marks_of(x))
    }

    pub fn class_of(&self, h: &Subgroup) -> usize {
        self.classes.classify(&self.group, h)
    }
}

/// Product in the Burnside ring: pointwise product of marks, pulled back.
pub fn burnside_multiply(
    a: &BurnsideElement,
    b: &BurnsideElement,
    t: &TableOfMarks,
) -> Result<BurnsideElement, BurnsideError> {
    let ma = t.marks_of_element(a);
    let mb = t.marks_of_element(b);
    let prod: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| x * y).collect();
    t.element_from_marks(&prod)
}

pub fn table_of_marks(g: &GroupRef) -> TableOfMarks {
    TableOfMarks::new(g)
}

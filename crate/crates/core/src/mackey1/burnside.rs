use crate::burnside::{burnside_multiply, gset_induce, gset_restrict, BurnsideElement, GSet, TableOfMarks};
use crate::group::{all_subgroups, GroupRef, InjectiveHom, Subgroup};
use crate::matrix::Matrix;

use super::functor::{Level, MapKind, OrdinaryMackeyFunctor};
use super::green::GreenFunctorData;
use super::MackeyError;

struct BurnsideLevel {
    inclusion: InjectiveHom,
    marks: TableOfMarks,
}

impl BurnsideLevel {
    fn group(&self) -> &GroupRef {
        self.inclusion.source()
    }

    fn basis_set(&self, i: usize) -> GSet {
        GSet::cosets(self.group(), &self.marks.reps()[i])
    }
}

/// The injective hom `A → B` between two levels given by the identity of `G`
/// conjugated by `x`, i.e. `a ↦ x a x⁻¹`.
fn level_map(g: &GroupRef, from: &BurnsideLevel, to: &BurnsideLevel, x: usize) -> Result<InjectiveHom, MackeyError> {
    let map = from
        .group()
        .elements()
        .map(|a| {
            let y = g.conj(x, from.inclusion.apply(a));
            to.inclusion
                .preimage(y)
                .ok_or_else(|| MackeyError::Malformed(format!("element {y} is not in the target level")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InjectiveHom::new(from.group().clone(), to.group().clone(), map)?)
}

/// The Burnside Green functor `H ↦ B(H)` in the bases `[H/L]` over classes
/// of subgroups `L ≤ H`. Restriction and transfer restrict and induce
/// `H`-sets, conjugation transports them along `h ↦ ghg⁻¹`, and products
/// are cartesian products computed through marks.
pub fn burnside_green_functor(g: &GroupRef) -> Result<GreenFunctorData<i64>, MackeyError> {
    let subgroups: Vec<Subgroup> = all_subgroups(g);
    let data: Vec<BurnsideLevel> = subgroups
        .iter()
        .map(|s| {
            let inclusion = InjectiveHom::inclusion(g, s);
            let marks = TableOfMarks::new(inclusion.source());
            BurnsideLevel { inclusion, marks }
        })
        .collect();
    let levels: Vec<Level> = subgroups
        .into_iter()
        .zip(&data)
        .map(|(subgroup, d)| Level {
            dim: d.marks.rank(),
            labels: d
                .marks
                .reps()
                .iter()
                .map(|l| format!("[H/L] |L|={}", l.order()))
                .collect(),
            subgroup,
        })
        .collect();

    let underlying = OrdinaryMackeyFunctor::assemble(g.clone(), levels, |kind, j| {
        let (set, to) = match kind {
            MapKind::Restriction { from, to } => {
                let inc = level_map(g, &data[to], &data[from], g.identity())?;
                (gset_restrict(&inc, &data[from].basis_set(j)), to)
            }
            MapKind::Transfer { from, to } => {
                let inc = level_map(g, &data[from], &data[to], g.identity())?;
                (gset_induce(&inc, &data[from].basis_set(j)), to)
            }
            MapKind::Conjugation { element, from, to } => {
                let iso = level_map(g, &data[from], &data[to], element)?;
                (gset_induce(&iso, &data[from].basis_set(j)), to)
            }
        };
        Ok(data[to].marks.decompose(&set)?.coefficients)
    })?;

    let mut products = Vec::with_capacity(data.len());
    let mut units = Vec::with_capacity(data.len());
    for d in &data {
        let n = d.marks.rank();
        let mut level = Vec::with_capacity(n);
        for i in 0..n {
            let ei = BurnsideElement::basis(n, i);
            let cols = (0..n)
                .map(|j| Ok(burnside_multiply(&ei, &BurnsideElement::basis(n, j), &d.marks)?.coefficients))
                .collect::<Result<Vec<_>, MackeyError>>()?;
            level.push(Matrix::from_columns(n, &cols));
        }
        products.push(level);
        let whole = d.marks.class_of(&Subgroup::whole(d.group()));
        units.push(BurnsideElement::basis(n, whole).coefficients);
    }
    Ok(GreenFunctorData {
        underlying,
        products,
        units,
    })
}

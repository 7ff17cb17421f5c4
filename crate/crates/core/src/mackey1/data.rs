use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::group::GroupRef;
use crate::matrix::Matrix;
use crate::scalar::{Fp, Rational, Ring};

use super::functor::{Level, OrdinaryMackeyFunctor};
use super::MackeyError;

/// Parses one matrix entry of a functor description.
pub trait ScalarParse: Sized {
    fn parse_scalar(s: &str) -> Option<Self>;
}

impl ScalarParse for i64 {
    fn parse_scalar(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl ScalarParse for Rational {
    fn parse_scalar(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl<const P: u32> ScalarParse for Fp<P> {
    fn parse_scalar(s: &str) -> Option<Self> {
        s.trim().parse::<i64>().ok().map(Fp::from_i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelData {
    pub subgroup: Vec<usize>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

/// One structure map between levels (indices into `levels`). For a
/// conjugation, `element` is the conjugating group element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapData {
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    /// rows of the matrix, entries as decimal strings (`"a/b"` over ℚ)
    pub matrix: Vec<Vec<String>>,
}

/// A Mackey functor as plain data, for storage and loading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData {
    /// `Z`, `F<p>` or `Q`
    pub coefficients: String,
    pub levels: Vec<LevelData>,
    pub restrictions: Vec<MapData>,
    pub transfers: Vec<MapData>,
    pub conjugations: Vec<MapData>,
}

fn matrix_rows<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect()
}

fn parse_matrix<R: Ring + ScalarParse>(rows: &[Vec<String>], shape: (usize, usize)) -> Result<Matrix<R>, MackeyError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(MackeyError::Malformed(format!(
            "expected a {}x{} matrix",
            shape.0, shape.1
        )));
    }
    let mut data = Vec::with_capacity(shape.0 * shape.1);
    for v in rows.iter().flatten() {
        data.push(R::parse_scalar(v).ok_or_else(|| MackeyError::Malformed(format!("bad entry {v:?}")))?);
    }
    Ok(Matrix::from_vec(shape.0, shape.1, data))
}

impl FunctorData {
    pub fn from_functor<R: Ring>(m: &OrdinaryMackeyFunctor<R>, coefficients: &str) -> Self {
        let maps = |all: &BTreeMap<(usize, usize), Matrix<R>>, transfer: bool| {
            all.iter()
                .map(|(&(h, k), mat)| {
                    let (from, to) = if transfer { (k, h) } else { (h, k) };
                    MapData {
                        from,
                        to,
                        element: None,
                        matrix: matrix_rows(mat),
                    }
                })
                .collect()
        };
        let mut conjugations = Vec::new();
        for g in m.group().elements() {
            for h in 0..m.levels().len() {
                conjugations.push(MapData {
                    from: h,
                    to: m.conjugate_level(g, h),
                    element: Some(g),
                    matrix: matrix_rows(m.conjugation(g, h)),
                });
            }
        }
        FunctorData {
            coefficients: coefficients.to_string(),
            levels: m
                .levels()
                .iter()
                .map(|l| LevelData {
                    subgroup: l.subgroup.elements().to_vec(),
                    dim: l.dim,
                    labels: l.labels.clone(),
                })
                .collect(),
            restrictions: maps(m.restriction_maps(), false),
            transfers: maps(m.transfer_maps(), true),
            conjugations,
        }
    }

    /// Rebuilds the functor over `group`, checking shapes and completeness.
    pub fn to_functor<R: Ring + ScalarParse>(&self, group: &GroupRef) -> Result<OrdinaryMackeyFunctor<R>, MackeyError> {
        let mut levels = Vec::with_capacity(self.levels.len());
        for l in &self.levels {
            let subgroup = group.subgroup_from_elements(&l.subgroup)?;
            let labels = if l.labels.is_empty() {
                (0..l.dim).map(|j| format!("e{j}")).collect()
            } else {
                l.labels.clone()
            };
            levels.push(Level {
                subgroup,
                dim: l.dim,
                labels,
            });
        }
        let level = |i: usize| {
            levels
                .get(i)
                .ok_or_else(|| MackeyError::Malformed(format!("level index {i} out of range")))
        };
        let mut restriction = BTreeMap::new();
        for r in &self.restrictions {
            let shape = (level(r.to)?.dim, level(r.from)?.dim);
            if restriction
                .insert((r.from, r.to), parse_matrix(&r.matrix, shape)?)
                .is_some()
            {
                return Err(MackeyError::Malformed(format!(
                    "restriction ({}, {}) given twice",
                    r.from, r.to
                )));
            }
        }
        let mut transfer = BTreeMap::new();
        for t in &self.transfers {
            let shape = (level(t.to)?.dim, level(t.from)?.dim);
            if transfer
                .insert((t.to, t.from), parse_matrix(&t.matrix, shape)?)
                .is_some()
            {
                return Err(MackeyError::Malformed(format!(
                    "transfer ({}, {}) given twice",
                    t.to, t.from
                )));
            }
        }
        let mut conjugation: Vec<Vec<Option<Matrix<R>>>> = vec![vec![None; levels.len()]; group.order()];
        for c in &self.conjugations {
            let g = c
                .element
                .filter(|&g| g < group.order())
                .ok_or_else(|| MackeyError::Malformed("conjugation without a valid element".into()))?;
            let expected = group.conjugate_subgroup(&level(c.from)?.subgroup, g);
            if level(c.to)?.subgroup != expected {
                return Err(MackeyError::Malformed(format!(
                    "conjugation by {g} of level {} lands elsewhere",
                    c.from
                )));
            }
            let shape = (level(c.to)?.dim, level(c.from)?.dim);
            conjugation[g][c.from] = Some(parse_matrix(&c.matrix, shape)?);
        }
        let conjugation = conjugation
            .into_iter()
            .enumerate()
            .map(|(g, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(h, m)| m.ok_or_else(|| MackeyError::Malformed(format!("missing conjugation ({g}, {h})"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        OrdinaryMackeyFunctor::from_parts(group.clone(), levels, restriction, transfer, conjugation)
    }
}

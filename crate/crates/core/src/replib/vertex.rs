use serde::Serialize;

use crate::burnside::Block;
use crate::group::{FiniteGroup, GroupRef, InjectiveHom, Subgroup};
use crate::matrix::{Matrix, SpanBuilder};
use crate::scalar::{Field, PrimeField};

use super::{
    decompose, hom_space, indecomposable_isomorphism, induce, is_summand, permutation_module, restrict, Module,
    ReplibError, SummandWitness,
};

/// Whether `n` is a power of `p` (including `1`).
fn is_p_power(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Representatives of the conjugacy classes of `p`-subgroups, by order.
pub fn p_subgroup_classes(g: &FiniteGroup, p: usize) -> Vec<Subgroup> {
    g.subgroups_up_to_conjugacy()
        .into_iter()
        .filter(|s| is_p_power(s.order(), p))
        .collect()
}

/// Higman's criterion: `M` is relatively `V`-projective (equivalently
/// `M | Ind_V Res_V M`) iff the identity is a relative trace
/// `Σ_{t ∈ G/V} t f t⁻¹` of some `V`-endomorphism `f`.
pub fn relatively_projective<F: Field>(m: &Module<F>, v: &Subgroup) -> Result<bool, ReplibError> {
    let g = m.group();
    let i = InjectiveHom::inclusion(g, v);
    let res = restrict(&i, m)?;
    let d = m.dim();
    if d == 0 {
        return Ok(true);
    }
    let reps = i.transversal().reps;
    let mut span = SpanBuilder::<F>::new(d * d);
    for f in hom_space(&res, &res)? {
        let mut tr = Matrix::zeros(d, d);
        for &t in &reps {
            tr = tr.add(&m.action(t).mul(&f).mul(&m.action(g.inv(t))));
        }
        span.insert(tr.as_slice());
    }
    Ok(span.contains(Matrix::<F>::identity(d).as_slice()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Vertex {
    pub subgroup: Vec<usize>,
    pub order: usize,
    /// `p`-subgroup classes (as representatives) relative to which the
    /// module is projective
    pub projective_relative_to: Vec<Vec<usize>>,
}

/// Vertex of an indecomposable module: the unique (up to conjugacy) minimal
/// `p`-subgroup `V` with `M | Ind_V Res_V M`.
pub fn vertex<F: PrimeField>(m: &Module<F>, seed: u64) -> Result<(Subgroup, Vertex), ReplibError> {
    if !decompose(m, seed)?.is_indecomposable() {
        return Err(ReplibError::NotIndecomposable);
    }
    vertex_of_indecomposable(m)
}

/// [`vertex`] without re-checking indecomposability.
pub fn vertex_of_indecomposable<F: PrimeField>(m: &Module<F>) -> Result<(Subgroup, Vertex), ReplibError> {
    let g = m.group();
    let p = F::MODULUS as usize;
    let mut relative = Vec::new();
    for v in p_subgroup_classes(g, p) {
        if relatively_projective(m, &v)? {
            relative.push(v);
        }
    }
    let minimal: Vec<&Subgroup> = relative
        .iter()
        .filter(|v| {
            !relative
                .iter()
                .any(|w| w.order() < v.order() && g.conjugate_into(w, v).is_some())
        })
        .collect();
    if minimal.len() != 1 {
        return Err(ReplibError::Vertex(format!(
            "expected one minimal p-subgroup class, found {}",
            minimal.len()
        )));
    }
    let v = minimal[0].clone();
    Ok((
        v.clone(),
        Vertex {
            subgroup: v.elements().to_vec(),
            order: v.order(),
            projective_relative_to: relative.iter().map(|s| s.elements().to_vec()).collect(),
        },
    ))
}

/// The Green correspondent of an indecomposable `kH`-module.
#[derive(Clone, Debug)]
pub struct GreenCorrespondence<F> {
    pub correspondent: Module<F>,
    /// vertex of the correspondent, a `G`-conjugate of `D`
    pub vertex: Subgroup,
    /// dimensions and vertex orders of the other summands of `Ind N`
    pub others: Vec<(usize, Subgroup)>,
    /// the family `{D ∩ gDg⁻¹ : g ∉ H}`
    pub family: Vec<Subgroup>,
    /// `N` as a summand of `Res_H` of the correspondent
    pub round_trip: SummandWitness<F>,
}

/// Green correspondence for `D ≤ H ≤ G` with `N_G(D) ≤ H`: `Ind_H^G N` has
/// exactly one summand with vertex `D`, the others have vertices
/// conjugate into the family `{D ∩ gDg⁻¹ : g ∉ H}`, and `N` is a summand
/// of the restriction of that one summand.
pub fn green_correspondent<F: PrimeField>(
    i: &InjectiveHom,
    n: &Module<F>,
    d: &Subgroup,
    seed: u64,
) -> Result<GreenCorrespondence<F>, ReplibError> {
    let g: &GroupRef = i.target();
    let h_img = i.image();
    if !d.is_subgroup_of(&h_img) {
        return Err(ReplibError::Green("D is not contained in H".into()));
    }
    if !g.normalizer(d).is_subgroup_of(&h_img) {
        return Err(ReplibError::Green("the normaliser of D is not contained in H".into()));
    }
    let (nv, _) = vertex(n, seed)?;
    let nv_in_g = g.subgroup_from_elements(&nv.elements().iter().map(|&x| i.apply(x)).collect::<Vec<_>>())?;
    if !g.subgroups_conjugate(&nv_in_g, d) {
        return Err(ReplibError::Green("N does not have vertex D".into()));
    }
    let family: Vec<Subgroup> = {
        let mut out: Vec<Subgroup> = Vec::new();
        for x in g.elements().filter(|&x| !h_img.contains(x)) {
            let s = g.intersection(d, &g.conjugate_subgroup(d, x));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    };
    let ind = induce(i, n)?;
    let dec = decompose(&ind, seed)?;
    let mut found = None;
    let mut others = Vec::new();
    for piece in &dec.pieces {
        let (v, _) = vertex_of_indecomposable(&piece.module)?;
        if g.subgroups_conjugate(&v, d) {
            if found.is_some() {
                return Err(ReplibError::Green("two summands have vertex D".into()));
            }
            found = Some((piece.module.clone(), v));
        } else {
            if !family.iter().any(|x| g.conjugate_into(&v, x).is_some()) {
                return Err(ReplibError::Green(format!(
                    "a summand has vertex of order {} outside the family",
                    v.order()
                )));
            }
            others.push((piece.module.dim(), v));
        }
    }
    let (correspondent, vertex) = found.ok_or_else(|| ReplibError::Green("no summand has vertex D".into()))?;
    let res = restrict(i, &correspondent)?;
    let round_trip = is_summand(n, &res, seed)?
        .ok_or_else(|| ReplibError::Green("N is not a summand of the restricted correspondent".into()))?;
    Ok(GreenCorrespondence {
        correspondent,
        vertex,
        others,
        family,
        round_trip,
    })
}

/// Index of the block containing an indecomposable module: the unique
/// block idempotent acting as the identity, with all others acting as zero.
pub fn block_of<F: PrimeField>(m: &Module<F>, blocks: &[Block<F>]) -> Result<usize, ReplibError> {
    let mut found = None;
    for (b, block) in blocks.iter().enumerate() {
        let e = m.group_algebra_action(&block.idempotent);
        if e.is_identity() {
            if found.is_some() {
                return Err(ReplibError::Block("two block idempotents act as the identity".into()));
            }
            found = Some(b);
        } else if !e.is_zero() {
            return Err(ReplibError::Block(format!(
                "block idempotent {b} acts neither as 0 nor as 1; the module is decomposable"
            )));
        }
    }
    found.ok_or_else(|| ReplibError::Block("no block idempotent acts as the identity".into()))
}

/// Permutation modules `k[G/H]` over the subgroup classes of `G`, which
/// include the trivial module (`H = G`) and the regular module (`H = 1`).
pub fn permutation_modules<F: Field>(g: &GroupRef) -> Vec<(String, Module<F>)> {
    g.subgroups_up_to_conjugacy()
        .into_iter()
        .enumerate()
        .map(|(c, h)| (format!("k[G/H{c}] |H|={}", h.order()), permutation_module(g, &h)))
        .collect()
}

/// An indecomposable found while decomposing a list of modules.
#[derive(Clone, Debug)]
pub struct FoundIndecomposable<F> {
    pub module: Module<F>,
    /// name of the first listed module it is a summand of
    pub source: String,
    pub vertex: Subgroup,
}

/// The indecomposable summands of all `modules`, one per isomorphism class,
/// with their vertices.
pub fn indecomposable_summands<F: PrimeField>(
    modules: &[(String, Module<F>)],
    seed: u64,
) -> Result<Vec<FoundIndecomposable<F>>, ReplibError> {
    let mut found: Vec<FoundIndecomposable<F>> = Vec::new();
    for (name, m) in modules {
        for s in decompose(m, seed)?.summands {
            let mut new = true;
            for f in &found {
                if indecomposable_isomorphism(&f.module, &s.module)?.is_some() {
                    new = false;
                    break;
                }
            }
            if new {
                let (vertex, _) = vertex_of_indecomposable(&s.module)?;
                found.push(FoundIndecomposable {
                    module: s.module,
                    source: name.clone(),
                    vertex,
                });
            }
        }
    }
    Ok(found)
}

/// Green correspondence between the vertex-`D` indecomposables found in the
/// permutation modules of `H` and of `G`.
#[derive(Clone, Debug)]
pub struct GreenCensus<F> {
    pub h_side: Vec<FoundIndecomposable<F>>,
    pub g_side: Vec<FoundIndecomposable<F>>,
    /// one per entry of `h_side`
    pub correspondences: Vec<GreenCorrespondence<F>>,
    /// `g_side` index isomorphic to each correspondent
    pub image: Vec<Option<usize>>,
}

impl<F> GreenCensus<F> {
    /// Every correspondent is found on the `G` side, distinct entries go to
    /// distinct classes, and every `G`-side class is hit.
    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.g_side.len()];
        for j in &self.image {
            match j {
                Some(j) if !hit[*j] => hit[*j] = true,
                _ => return false,
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Runs [`green_correspondent`] on every vertex-`D` indecomposable summand
/// of the permutation modules of `H = i(source)` and matches the results
/// against the vertex-`D` summands of the permutation modules of `G`.
pub fn green_census<F: PrimeField>(i: &InjectiveHom, d: &Subgroup, seed: u64) -> Result<GreenCensus<F>, ReplibError> {
    let g = i.target();
    let h = i.source();
    let has_vertex_d = |v: &Subgroup, mapped: bool| -> Result<bool, ReplibError> {
        let v = if mapped {
            g.subgroup_from_elements(&v.elements().iter().map(|&x| i.apply(x)).collect::<Vec<_>>())?
        } else {
            v.clone()
        };
        Ok(g.subgroups_conjugate(&v, d))
    };
    let mut h_side = Vec::new();
    for f in indecomposable_summands(&permutation_modules::<F>(h), seed)? {
        if has_vertex_d(&f.vertex, true)? {
            h_side.push(f);
        }
    }
    let mut g_side = Vec::new();
    for f in indecomposable_summands(&permutation_modules::<F>(g), seed)? {
        if has_vertex_d(&f.vertex, false)? {
            g_side.push(f);
        }
    }
    let mut correspondences = Vec::with_capacity(h_side.len());
    let mut image = Vec::with_capacity(h_side.len());
    for n in &h_side {
        let c = green_correspondent(i, &n.module, d, seed)?;
        let mut hit = None;
        for (j, m) in g_side.iter().enumerate() {
            if indecomposable_isomorphism(&m.module, &c.correspondent)?.is_some() {
                hit = Some(j);
                break;
            }
        }
        image.push(hit);
        correspondences.push(c);
    }
    Ok(GreenCensus {
        h_side,
        g_side,
        correspondences,
        image,
    })
}

use super::FiniteGroup;

/// Isomorphism `a → b` as an element map, found by backtracking over the
/// images of a generating set with element-order and centralizer-size
/// pruning.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut pa = inv_a.clone();
    let mut pb = inv_b.clone();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return None;
    }
    let gens = a.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| b.elements().filter(|&t| inv_b[t] == inv_a[s]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &candidates, &mut images)
}

pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

fn invariants(g: &FiniteGroup) -> Vec<(usize, usize)> {
    g.elements()
        .map(|x| (g.element_order(x), g.centralizer_of_element(x).order()))
        .collect()
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(a, b, gens, images);
    }
    let k = images.len();
    for &t in &candidates[k] {
        images.push(t);
        if partial_consistent(a, b, &gens[..=k], images) {
            if let Some(m) = search(a, b, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// The subgroup generated by the chosen images must have the same order as
/// the one generated by the corresponding generators.
fn partial_consistent(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    a.subgroup_generated(gens).order() == b.subgroup_generated(images).order()
}

fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[a.identity()] = b.identity();
    let mut frontier = vec![a.identity()];
    while let Some(x) = frontier.pop() {
        for (s, t) in gens.iter().zip(images) {
            let y = a.mul(*s, x);
            let img = b.mul(*t, map[x]);
            if map[y] == usize::MAX {
                map[y] = img;
                frontier.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}

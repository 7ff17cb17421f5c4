//! Built-in permutation groups used by the verification grid and the CLI.

use super::{FiniteGroup, GroupRef};
use std::sync::Arc;

/// Names of the bundled groups, in grid order.
pub const NAMES: [&str; 9] = ["c2", "c3", "c4", "v4", "s3", "d8", "q8", "a4", "s4"];

/// `(degree, generators)` for a bundled group.
pub fn spec(name: &str) -> Option<(usize, Vec<Vec<usize>>)> {
    let s = match name.to_ascii_lowercase().as_str() {
        "c1" | "trivial" | "1" => (1, vec![]),
        "c2" => (2, vec![vec![1, 0]]),
        "c3" => (3, vec![vec![1, 2, 0]]),
        "c4" => (4, vec![vec![1, 2, 3, 0]]),
        "v4" | "c2xc2" => (4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
        "s3" => (3, vec![vec![1, 2, 0], vec![1, 0, 2]]),
        "d8" => (4, vec![vec![1, 2, 3, 0], vec![2, 1, 0, 3]]),
        // left-regular representation on 1,-1,i,-i,j,-j,k,-k
        "q8" => (8, vec![vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]]),
        "a4" => (4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        "s4" => (4, vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]]),
        _ => return None,
    };
    Some(s)
}

pub fn named(name: &str) -> Option<GroupRef> {
    let (degree, gens) = spec(name)?;
    Some(Arc::new(
        FiniteGroup::from_generators(degree, &gens).expect("bundled groups are valid"),
    ))
}

/// All bundled groups, in grid order.
pub fn grid_groups() -> Vec<(&'static str, GroupRef)> {
    NAMES.iter().map(|&n| (n, named(n).unwrap())).collect()
}

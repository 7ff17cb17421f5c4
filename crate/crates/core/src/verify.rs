//! The verification grid: every bundled group, every subgroup class, the
//! fields F₂, F₃ and ℚ, and permutation and regular modules, checked
//! against the adjunction, Mackey, projection and Frobenius identities.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::group::{GroupRef, InjectiveHom, Subgroup};
use crate::replib::{
    check_projection, frobenius_object, mackey_iso, permutation_module, unit_counit, Module, ReplibError,
};
use crate::scalar::{Field, FieldTag};
use crate::with_field;

/// Families of identities the grid can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// triangle identities, `ε_r η_ℓ = 1`, `ε_ℓ η_r = [G:H]`
    Adjunction,
    Mackey,
    Projection,
    Frobenius,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Adjunction, Suite::Mackey, Suite::Projection, Suite::Frobenius];
}

/// The default grid fields.
pub const GRID_FIELDS: [FieldTag; 3] = [FieldTag::Prime(2), FieldTag::Prime(3), FieldTag::Rationals];

/// One checked identity at one grid point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub group: String,
    pub subgroup_order: usize,
    pub subgroup: Vec<usize>,
    pub field: FieldTag,
    /// which modules were used, e.g. `M=perm N=regular`
    pub modules: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GridReport {
    pub grid_points: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    /// counts per identity name: `(identity, passed, total)`
    pub by_identity: Vec<(String, usize, usize)>,
    pub failures: Vec<Check>,
}

impl GridReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.checks > 0
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures.first()
    }

    /// Pass/total for identities whose name starts with `prefix`.
    pub fn tally(&self, prefix: &str) -> (usize, usize) {
        self.by_identity
            .iter()
            .filter(|(n, _, _)| n.starts_with(prefix))
            .fold((0, 0), |(p, t), (_, a, b)| (p + a, t + b))
    }
}

struct Point<'a> {
    name: &'a str,
    group: &'a GroupRef,
    classes: &'a [Subgroup],
    h: &'a Subgroup,
    field: FieldTag,
}

impl Point<'_> {
    fn check(&self, identity: &str, modules: &str, result: Result<bool, ReplibError>) -> Check {
        let (passed, detail) = match result {
            Ok(b) => (b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        Check {
            identity: identity.to_string(),
            group: self.name.to_string(),
            subgroup_order: self.h.order(),
            subgroup: self.h.elements().to_vec(),
            field: self.field,
            modules: modules.to_string(),
            passed,
            detail,
        }
    }
}

fn run_point<F: Field>(pt: &Point<'_>, suites: &[Suite]) -> Vec<Check> {
    let g = pt.group;
    let i = InjectiveHom::inclusion(g, pt.h);
    let hg = i.source();
    let g_modules: [(&str, Module<F>); 2] = [("perm", permutation_module(g, pt.h)), ("regular", Module::regular(g))];
    let h_modules: [(&str, Module<F>); 2] = [("trivial", Module::trivial(hg, 1)), ("regular", Module::regular(hg))];
    let mut out = Vec::new();

    if suites.contains(&Suite::Adjunction) {
        for (mn, m) in &g_modules {
            for (nn, n) in &h_modules {
                let label = format!("M={mn} N={nn}");
                match unit_counit(&i, m, n) {
                    Ok(uc) => {
                        let r = uc.report;
                        for (id, ok) in [
                            ("adjunction.triangle_left_induced", r.left_on_induced),
                            ("adjunction.triangle_left_restricted", r.left_on_restricted),
                            ("adjunction.triangle_right_restricted", r.right_on_restricted),
                            ("adjunction.triangle_right_induced", r.right_on_induced),
                            ("separable.eps_r_eta_l", r.separable),
                            ("cohomological.eps_l_eta_r", r.cohomological),
                        ] {
                            out.push(pt.check(id, &label, Ok(ok)));
                        }
                    }
                    Err(e) => out.push(pt.check("adjunction.construction", &label, Err(e))),
                }
            }
        }
    }

    if suites.contains(&Suite::Mackey) {
        for k in pt.classes {
            let j = InjectiveHom::inclusion(g, k);
            for (nn, n) in &h_modules {
                let label = format!("K_order={} N={nn}", k.order());
                match mackey_iso(&i, &j, n) {
                    Ok(iso) => {
                        let expected: usize = g
                            .double_cosets(k, pt.h)
                            .representatives
                            .iter()
                            .map(|&x| k.order() / g.intersection(k, &g.conjugate_subgroup(pt.h, x)).order() * n.dim())
                            .sum();
                        out.push(pt.check("mackey.invertible", &label, Ok(iso.report.invertible)));
                        out.push(pt.check("mackey.mates_inverse", &label, Ok(iso.report.mates_inverse)));
                        out.push(pt.check("mackey.source_dimension", &label, Ok(iso.source.dim() == expected)));
                    }
                    Err(e) => out.push(pt.check("mackey.construction", &label, Err(e))),
                }
            }
        }
    }

    if suites.contains(&Suite::Projection) {
        let xs: [(&str, Module<F>); 3] = [
            ("trivial", Module::trivial(g, 1)),
            ("perm", g_modules[0].1.clone()),
            ("regular", g_modules[1].1.clone()),
        ];
        for (xn, x) in &xs {
            for (yn, y) in &h_modules {
                let label = format!("X={xn} Y={yn}");
                match check_projection(&i, x, y) {
                    Ok(r) => {
                        out.push(pt.check("projection.invertible", &label, Ok(r.invertible)));
                        out.push(pt.check("projection.mirror_invertible", &label, Ok(r.mirror_invertible)));
                    }
                    Err(e) => out.push(pt.check("projection.construction", &label, Err(e))),
                }
            }
        }
    }

    if suites.contains(&Suite::Frobenius) {
        match frobenius_object::<F>(g, pt.h) {
            Ok(a) => {
                let r = a.check_laws();
                for (id, ok) in [
                    ("frobenius.associative", r.associative),
                    ("frobenius.coassociative", r.coassociative),
                    ("frobenius.unital", r.unital),
                    ("frobenius.counital", r.counital),
                    ("frobenius.frobenius", r.frobenius),
                    ("frobenius.special", r.special),
                    ("frobenius.commutative", r.commutative),
                ] {
                    out.push(pt.check(id, "A=perm", Ok(ok)));
                }
            }
            Err(e) => out.push(pt.check("frobenius.construction", "A=perm", Err(e))),
        }
    }
    out
}

/// Runs the chosen suites over every subgroup class of every group and
/// every field, in parallel over grid points. The report lists checks in
/// grid order regardless of scheduling.
pub fn run_grid(groups: &[(String, GroupRef)], fields: &[FieldTag], suites: &[Suite]) -> GridReport {
    let classes: Vec<Vec<Subgroup>> = groups.iter().map(|(_, g)| g.subgroups_up_to_conjugacy()).collect();
    let mut jobs = Vec::new();
    for (gi, cs) in classes.iter().enumerate() {
        for hi in 0..cs.len() {
            for &f in fields {
                jobs.push((gi, hi, f));
            }
        }
    }
    let results: Vec<Mutex<Vec<Check>>> = jobs.iter().map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(gi, hi, field)) = jobs.get(k) else {
                    break;
                };
                let pt = Point {
                    name: &groups[gi].0,
                    group: &groups[gi].1,
                    classes: &classes[gi],
                    h: &classes[gi][hi],
                    field,
                };
                let checks = with_field!(field, F => run_point::<F>(&pt, suites), else vec![pt.check(
                    "grid.field",
                    "",
                    Err(ReplibError::NotAModule(format!("unsupported field {field}"))),
                )]);
                *results[k].lock().expect("no poisoned workers") = checks;
            });
        }
    });

    let mut report = GridReport {
        grid_points: jobs.len(),
        ..GridReport::default()
    };
    let mut tallies: Vec<(String, usize, usize)> = Vec::new();
    for cell in results {
        for c in cell.into_inner().expect("no poisoned workers") {
            report.checks += 1;
            let slot = match tallies.iter().position(|(n, _, _)| *n == c.identity) {
                Some(p) => p,
                None => {
                    tallies.push((c.identity.clone(), 0, 0));
                    tallies.len() - 1
                }
            };
            tallies[slot].2 += 1;
            if c.passed {
                report.passed += 1;
                tallies[slot].1 += 1;
            } else {
                report.failed += 1;
                report.failures.push(c);
            }
        }
    }
    report.by_identity = tallies;
    report
}

/// The full default grid over the bundled groups.
pub fn run_default_grid(suites: &[Suite]) -> GridReport {
    let groups: Vec<(String, GroupRef)> = crate::group::named::grid_groups()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    run_grid(&groups, &GRID_FIELDS, suites)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::named;

    #[test]
    fn small_grid_passes() {
        let groups = vec![("s3".to_string(), named("s3").unwrap())];
        let r = run_grid(&groups, &GRID_FIELDS, &Suite::ALL);
        assert_eq!(r.grid_points, 4 * 3);
        assert!(r.all_passed(), "{:?}", r.first_failure());
        let (p, t) = r.tally("separable");
        assert_eq!((p, t), (48, 48));
    }
}

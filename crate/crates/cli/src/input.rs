//! Group specs, subgroup selectors and module literals.

use std::path::Path;
use std::sync::Arc;

use mackey_core::group::named::{self, NAMES};
use mackey_core::group::{order_cap_from_env, FiniteGroup, GroupRef, InjectiveHom, Subgroup};
use mackey_core::mackey1::ScalarParse;
use mackey_core::replib::{permutation_module, Module};
use mackey_core::{Field, FieldTag, Matrix};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// A group as JSON: a bundled name, permutation generators, or a Cayley
/// table.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Named { name: String },
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
    Table { table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupRef, CliError> {
        let cap = order_cap_from_env();
        let g = match self {
            GroupSpec::Name(n) | GroupSpec::Named { name: n } => {
                let (degree, gens) = named::spec(n).ok_or_else(|| {
                    CliError::Input(format!("unknown group {n:?}; bundled groups are {}", NAMES.join(", ")))
                })?;
                FiniteGroup::from_generators_with_cap(degree, &gens, cap)?
            }
            GroupSpec::Permutations { degree, generators } => {
                FiniteGroup::from_generators_with_cap(*degree, generators, cap)?
            }
            GroupSpec::Table { table } => FiniteGroup::from_table_with_cap(table.clone(), cap)?,
        };
        Ok(Arc::new(g))
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads inline JSON (starting with `{` or `[`), a file, or a name. A
/// missing file `s3.json` falls back to the bundled group `s3`.
fn load_value(arg: &str) -> Result<Value, CliError> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| CliError::Input(format!("inline JSON: {e}")));
    }
    let path = Path::new(t);
    if path.is_file() {
        return read_json(path);
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(t);
    Ok(Value::String(stem.to_string()))
}

pub fn load_group(arg: &str) -> Result<GroupRef, CliError> {
    let spec: GroupSpec =
        serde_json::from_value(load_value(arg)?).map_err(|e| CliError::Input(format!("group spec: {e}")))?;
    spec.build()
}

/// Subgroup selectors: `whole`, `trivial`, `sylow:<p>`, `class:<i>` (into
/// the subgroup classes), `normalizer:<selector>`, `gens:<i>,<j>,...`
/// (element indices) or a JSON list of generating permutations.
pub fn select_subgroup(g: &GroupRef, sel: &str) -> Result<Subgroup, CliError> {
    let sel = sel.trim();
    let bad = |msg: String| CliError::Input(format!("subgroup selector {sel:?}: {msg}"));
    if sel == "whole" {
        return Ok(Subgroup::whole(g));
    }
    if sel == "trivial" {
        return Ok(Subgroup::trivial(g));
    }
    if let Some(p) = sel.strip_prefix("sylow:") {
        let p: usize = p.parse().map_err(|_| bad("expected a prime".into()))?;
        if !mackey_core::scalar::is_prime(p as u64) {
            return Err(bad(format!("{p} is not prime")));
        }
        return Ok(g.sylow_subgroup(p));
    }
    if let Some(i) = sel.strip_prefix("class:") {
        let i: usize = i.parse().map_err(|_| bad("expected an index".into()))?;
        let classes = g.subgroups_up_to_conjugacy();
        return classes
            .get(i)
            .cloned()
            .ok_or_else(|| bad(format!("only {} classes", classes.len())));
    }
    if let Some(inner) = sel.strip_prefix("normalizer:") {
        return Ok(g.normalizer(&select_subgroup(g, inner)?));
    }
    if let Some(list) = sel.strip_prefix("gens:") {
        let mut gens = Vec::new();
        for t in list.split(',').filter(|t| !t.trim().is_empty()) {
            let x: usize = t.trim().parse().map_err(|_| bad(format!("bad element {t:?}")))?;
            if x >= g.order() {
                return Err(bad(format!("element {x} out of range")));
            }
            gens.push(x);
        }
        return Ok(g.subgroup_generated(&gens));
    }
    if sel.starts_with('[') {
        let perms: Vec<Vec<usize>> = serde_json::from_str(sel).map_err(|e| bad(e.to_string()))?;
        let mut gens = Vec::new();
        for p in &perms {
            gens.push(
                g.find_permutation(p)
                    .ok_or_else(|| bad(format!("{p:?} is not an element of the group")))?,
            );
        }
        return Ok(g.subgroup_generated(&gens));
    }
    Err(bad("unrecognised form".into()))
}

/// A module literal: group, field and one action matrix per generator of
/// the group (in the order the group spec lists them).
#[derive(Clone, Debug, Deserialize)]
pub struct ModuleLiteral {
    pub group: GroupSpec,
    pub field: String,
    pub generators: Vec<Vec<Vec<Value>>>,
}

fn entry<F: Field + ScalarParse>(v: &Value) -> Result<F, CliError> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(CliError::Input(format!("bad matrix entry {v}"))),
    };
    F::parse_scalar(&s).ok_or_else(|| CliError::Input(format!("bad matrix entry {s:?}")))
}

/// What `--module` names: a literal (which carries its own group and field)
/// or a shortcut over the `--group`.
pub enum ModuleArg {
    Literal(ModuleLiteral),
    Trivial,
    Regular,
    Permutation(String),
}

pub fn parse_module_arg(arg: &str) -> Result<ModuleArg, CliError> {
    match arg.trim() {
        "trivial" => return Ok(ModuleArg::Trivial),
        "regular" => return Ok(ModuleArg::Regular),
        _ => {}
    }
    if let Some(sel) = arg.trim().strip_prefix("perm:") {
        return Ok(ModuleArg::Permutation(sel.to_string()));
    }
    let v = load_value(arg)?;
    if v.is_string() {
        return Err(CliError::Input(format!(
            "module {arg:?}: expected trivial, regular, perm:<subgroup>, a JSON literal or a file"
        )));
    }
    let lit: ModuleLiteral = serde_json::from_value(v).map_err(|e| CliError::Input(format!("module literal: {e}")))?;
    Ok(ModuleArg::Literal(lit))
}

impl ModuleArg {
    /// The group this module lives over: the literal's own, else `default`.
    pub fn group(&self, default: Option<&GroupRef>) -> Result<GroupRef, CliError> {
        match self {
            ModuleArg::Literal(l) => l.group.build(),
            _ => default
                .cloned()
                .ok_or_else(|| CliError::Input("--group is required for module shortcuts".into())),
        }
    }

    /// The field fixed by a literal, if any.
    pub fn field(&self) -> Result<Option<FieldTag>, CliError> {
        match self {
            ModuleArg::Literal(l) => l
                .field
                .parse()
                .map(Some)
                .map_err(|e| CliError::Input(format!("field: {e}"))),
            _ => Ok(None),
        }
    }

    pub fn build<F: Field + ScalarParse>(&self, g: &GroupRef) -> Result<Module<F>, CliError> {
        Ok(match self {
            ModuleArg::Trivial => Module::trivial(g, 1),
            ModuleArg::Regular => Module::regular(g),
            ModuleArg::Permutation(sel) => permutation_module(g, &select_subgroup(g, sel)?),
            ModuleArg::Literal(l) => {
                let dim = l.generators.first().map_or(0, Vec::len);
                let mut gens = Vec::with_capacity(l.generators.len());
                for rows in &l.generators {
                    let mut data = Vec::with_capacity(dim * dim);
                    for r in rows {
                        if r.len() != dim {
                            return Err(CliError::Input(
                                "generator matrices must be square of equal size".into(),
                            ));
                        }
                        for v in r {
                            data.push(entry::<F>(v)?);
                        }
                    }
                    if rows.len() != dim {
                        return Err(CliError::Input(
                            "generator matrices must be square of equal size".into(),
                        ));
                    }
                    gens.push(Matrix::from_vec(dim, dim, data));
                }
                Module::from_generators(g.clone(), dim, gens)?
            }
        })
    }
}

/// Same shortcut, but over a subgroup `H` given inside `G`: subgroup
/// selectors are read in `G` and must lie in `H`.
pub fn build_over_subgroup<F: Field + ScalarParse>(
    arg: &ModuleArg,
    g: &GroupRef,
    i: &InjectiveHom,
) -> Result<Module<F>, CliError> {
    let h = i.source();
    match arg {
        ModuleArg::Permutation(sel) => {
            let s = select_subgroup(g, sel)?;
            let pre: Option<Vec<usize>> = s.elements().iter().map(|&x| i.preimage(x)).collect();
            let pre = pre.ok_or_else(|| CliError::Input(format!("subgroup {sel:?} is not contained in H")))?;
            Ok(permutation_module(h, &h.subgroup_from_elements(&pre)?))
        }
        other => other.build(h),
    }
}

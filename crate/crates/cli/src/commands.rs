use std::fmt::Display;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use mackey_core::burnside::{block_decomposition, crossed_burnside, rho_coh, table_of_marks, CenterOfGroupAlgebra};
use mackey_core::group::named::grid_groups;
use mackey_core::group::{GroupRef, InjectiveHom, Subgroup};
use mackey_core::groupoid::verify_isocomma_decomposition;
use mackey_core::mackey1::{
    burnside_green_functor, cohomological_check, green_from_monoid, hom_decategorify, verify_green_axioms,
    verify_mackey_axioms, AxiomReport, FunctorData, Monoid, OrdinaryMackeyFunctor, ScalarParse,
};
use mackey_core::replib::{
    block_of, decompose, frobenius_object, green_census, green_correspondent, vertex_of_indecomposable, Module,
};
use mackey_core::verify::{run_grid, Suite, GRID_FIELDS};
use mackey_core::{Field, FieldTag, PrimeField, Ring};

use crate::input::{build_over_subgroup, load_group, parse_module_arg, select_subgroup, GroupSpec, ModuleArg};
use crate::{CliError, Outcome, Phases};

/// Runs `$body` with `$F` bound to the field named by `$tag`. The CLI
/// instantiates only small primes and ℚ.
macro_rules! with_cli_field {
    ($tag:expr, $F:ident => $body:expr) => {
        match $tag {
            FieldTag::Rationals => {
                type $F = mackey_core::Q;
                $body
            }
            FieldTag::Prime(p) => with_cli_prime!(p, $F => $body),
        }
    };
}

macro_rules! with_cli_prime {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = mackey_core::F2;
                $body
            }
            3 => {
                type $F = mackey_core::F3;
                $body
            }
            5 => {
                type $F = mackey_core::Fp<5>;
                $body
            }
            7 => {
                type $F = mackey_core::Fp<7>;
                $body
            }
            p => Err(CliError::Input(format!(
                "unsupported prime {p}; the command line supports 2, 3, 5 and 7"
            ))),
        }
    };
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// bundled name (c2 c3 c4 v4 s3 d8 q8 a4 s4), JSON file or inline JSON
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug)]
pub struct IsocommaArgs {
    #[arg(long)]
    pub group: String,
    /// subgroup selector for K; with --h, checks one pair instead of all
    /// pairs of subgroup classes
    #[arg(long, requires = "h")]
    pub k: Option<String>,
    #[arg(long, requires = "k")]
    pub h: Option<String>,
}

#[derive(Args, Debug)]
pub struct XburnArgs {
    #[arg(long)]
    pub group: String,
    /// also check ρ^coh into the center of F_p G
    #[arg(long)]
    pub prime: Option<u32>,
}

#[derive(Args, Debug)]
pub struct BlocksArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub prime: u32,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    /// group for module shortcuts
    #[arg(long)]
    pub group: Option<String>,
    /// trivial, regular, perm:<subgroup>, or a module literal (file or JSON)
    #[arg(long)]
    pub module: String,
    /// characteristic; taken from the literal if omitted
    #[arg(long)]
    pub prime: Option<u32>,
}

#[derive(Args, Debug)]
pub struct GreenArgs {
    #[arg(long)]
    pub group: String,
    /// subgroup selector for the vertex D
    #[arg(long)]
    pub d: String,
    /// subgroup selector for H, by default the normalizer of D
    #[arg(long)]
    pub h: Option<String>,
    /// module over H (shortcut selectors are read in G); without it every
    /// vertex-D summand of the permutation modules of H is corresponded
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub prime: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctorKind {
    /// H ↦ Hom_H(k, Res Y) for --module Y
    FixedPoints,
    /// H ↦ Hom_H(Res X, Res Y) for --x and --y
    Hom,
    /// Burnside rings of subgroups
    Burnside,
    /// the Green functor of --monoid (trivial, group-algebra, frobenius:<subgroup>)
    Green,
    /// a functor description from --load
    Load,
}

#[derive(Args, Debug)]
pub struct MackeyArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, value_enum)]
    pub functor: FunctorKind,
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long)]
    pub y: Option<String>,
    #[arg(long)]
    pub monoid: Option<String>,
    /// coefficient field for module-based functors
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// JSON file with `group` and `functor` entries
    #[arg(long)]
    pub load: Option<PathBuf>,
    /// write the functor description to this file
    #[arg(long)]
    pub export: Option<PathBuf>,
    /// list at most this many failing identities
    #[arg(long, default_value_t = 20)]
    pub max_failures: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    Adjunction,
    Mackey,
    Projection,
    Frobenius,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Adjunction => Suite::Adjunction,
            SuiteArg::Mackey => Suite::Mackey,
            SuiteArg::Projection => Suite::Projection,
            SuiteArg::Frobenius => Suite::Frobenius,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// groups to run (repeatable); all bundled groups by default
    #[arg(long)]
    pub group: Vec<String>,
    /// prime fields to run (repeatable)
    #[arg(long)]
    pub prime: Vec<u32>,
    /// fields to run (repeatable: F2, F3, Q, ...); with neither --prime nor
    /// --field, F2, F3 and Q
    #[arg(long)]
    pub field: Vec<String>,
    #[arg(long, value_enum)]
    pub suite: Vec<SuiteArg>,
}

fn scalar<R: Display>(x: &R) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn subgroup_json(s: &Subgroup) -> Value {
    json!({ "order": s.order(), "elements": s.elements() })
}

fn module_json<F: Field>(m: &Module<F>) -> Value {
    let gens: Vec<Value> = m
        .generator_matrices()
        .iter()
        .map(|g| {
            Value::from(
                g.to_rows()
                    .iter()
                    .map(|r| r.iter().map(scalar).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    json!({ "field": F::tag().to_string(), "dim": m.dim(), "generators": gens })
}

fn parse_field(s: &str) -> Result<FieldTag, CliError> {
    s.parse().map_err(|e| CliError::Input(format!("field {s:?}: {e}")))
}

pub fn group(a: &GroupArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    let classes = ph.time("classes", || g.conjugacy_classes());
    let subgroups = ph.time("subgroups", || g.subgroups_up_to_conjugacy());
    Ok(Outcome::pass(json!({
        "order": g.order(),
        "abelian": g.is_abelian(),
        "degree": g.degree(),
        "generators": g.generators(),
        "elements": g.elements().map(|x| g.element_name(x)).collect::<Vec<_>>(),
        "conjugacy_class_sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "subgroup_classes": subgroups.iter().map(subgroup_json).collect::<Vec<_>>(),
    })))
}

pub fn isocomma(a: &IsocommaArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    let pairs: Vec<(Subgroup, Subgroup)> = match (&a.k, &a.h) {
        (Some(k), Some(h)) => vec![(select_subgroup(&g, k)?, select_subgroup(&g, h)?)],
        _ => {
            let classes = g.subgroups_up_to_conjugacy();
            classes
                .iter()
                .flat_map(|k| classes.iter().map(move |h| (k.clone(), h.clone())))
                .collect()
        }
    };
    let mut rows = Vec::new();
    let mut failure = None;
    let mut matched = 0;
    ph.time("isocomma", || {
        for (k, h) in &pairs {
            let r = verify_isocomma_decomposition(&g, k, h);
            let row = json!({ "k": subgroup_json(k), "h": subgroup_json(h), "report": r });
            if r.matched {
                matched += 1;
            } else if failure.is_none() {
                failure = Some((r.failure.clone().unwrap_or_default(), row.clone()));
            }
            rows.push(row);
        }
    });
    let payload = json!({ "pairs": rows.len(), "matched": matched, "results": rows });
    Ok(Outcome::check(payload, failure))
}

pub fn tom(a: &GroupArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    let t = ph.time("marks", || table_of_marks(&g));
    Ok(Outcome::pass(json!({
        "rank": t.rank(),
        "subgroups": t.reps().iter().map(subgroup_json).collect::<Vec<_>>(),
        "marks": t.marks(),
    })))
}

pub fn xburn(a: &XburnArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    let x = ph.time("algebra", || crossed_burnside(&g));
    let n = x.rank();
    let assoc = ph.time("associativity", || x.associativity_failure());
    let unit = x.unit_holds();
    let table: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| (0..n).map(|j| x.constants(i, j).to_vec()).collect())
        .collect();
    let mut payload = json!({
        "rank": n,
        "basis": x.labels(),
        "unit": x.unit(),
        "structure_constants": table,
        "associative": assoc.is_none(),
        "unital": unit,
    });
    let mut failure = assoc.map(|(i, j, k)| ("associativity fails".to_string(), json!({ "triple": [i, j, k] })));
    if !unit && failure.is_none() {
        failure = Some(("(G, 1) is not a unit".into(), json!({ "unit": x.unit() })));
    }
    if let Some(p) = a.prime {
        let z = CenterOfGroupAlgebra::new(&g);
        let rho: Result<Value, CliError> = with_cli_prime!(p, F => {
            ph.time("rho_coh", || match rho_coh::<F>(&x, &z) {
                Ok(m) => Ok(json!({
                    "verified": true,
                    "center_dim": z.dim(),
                    "rank": m.rank(),
                    "matrix": m.to_rows().iter().map(|r| r.iter().map(scalar).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })),
                Err(e) => Ok(json!({ "verified": false, "error": e.to_string() })),
            })
        });
        let rho = rho?;
        if rho["verified"] == false && failure.is_none() {
            failure = Some(("rho^coh check failed".into(), rho.clone()));
        }
        payload["rho_coh"] = rho;
    }
    Ok(Outcome::check(payload, failure))
}

pub fn blocks(a: &BlocksArgs, seed: u64, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    with_cli_prime!(a.prime, F => {
        let bs = ph.time("blocks", || block_decomposition::<F>(&g, seed))?;
        let total: usize = bs.iter().map(|b| b.dim).sum();
        let rows: Vec<Value> = bs
            .iter()
            .map(|b| json!({
                "dim": b.dim,
                "idempotent": b.idempotent.iter().map(scalar).collect::<Vec<_>>(),
                "class_coordinates": b.class_coordinates.iter().map(scalar).collect::<Vec<_>>(),
            }))
            .collect();
        let payload = json!({ "prime": a.prime, "count": bs.len(), "dims": bs.iter().map(|b| b.dim).collect::<Vec<_>>(), "blocks": rows });
        let failure = (total != g.order()).then(|| (format!("block dimensions sum to {total}, not {}", g.order()), json!({ "sum": total })));
        Ok(Outcome::check(payload, failure))
    })
}

/// Resolves the module argument, its group and its characteristic.
fn module_and_prime(a: &ModuleArgs) -> Result<(ModuleArg, GroupRef, u32), CliError> {
    let arg = parse_module_arg(&a.module)?;
    let default = a.group.as_deref().map(load_group).transpose()?;
    let g = arg.group(default.as_ref())?;
    let p = match (arg.field()?, a.prime) {
        (Some(FieldTag::Prime(p)), None) => p,
        (Some(FieldTag::Prime(p)), Some(q)) if p == q => p,
        (Some(t), Some(q)) => return Err(CliError::Input(format!("module is over {t} but --prime is {q}"))),
        (Some(t), None) => return Err(CliError::Input(format!("needs a prime field, module is over {t}"))),
        (None, Some(q)) => q,
        (None, None) => return Err(CliError::Input("--prime is required".into())),
    };
    Ok((arg, g, p))
}

fn vertex_rows<F: PrimeField + ScalarParse>(
    arg: &ModuleArg,
    g: &GroupRef,
    seed: u64,
    ph: &mut Phases,
) -> Result<Value, CliError> {
    let m = arg.build::<F>(g)?;
    let dec = ph.time("decompose", || decompose(&m, seed))?;
    let mut rows = Vec::new();
    for s in &dec.summands {
        let (_, v) = ph.time("vertex", || vertex_of_indecomposable(&s.module))?;
        rows.push(json!({
            "dim": s.module.dim(),
            "multiplicity": s.multiplicity,
            "vertex": { "order": v.order, "elements": v.subgroup },
            "projective_relative_to": v.projective_relative_to,
        }));
    }
    Ok(json!({ "dim": m.dim(), "summand_dims": dec.dimensions(), "summands": rows }))
}

pub fn vertex(a: &ModuleArgs, seed: u64, ph: &mut Phases) -> Result<Outcome, CliError> {
    let (arg, g, p) = module_and_prime(a)?;
    let payload = with_cli_prime!(p, F => vertex_rows::<F>(&arg, &g, seed, ph))?;
    Ok(Outcome::pass(payload))
}

fn blocks_of_rows<F: PrimeField + ScalarParse>(
    arg: &ModuleArg,
    g: &GroupRef,
    seed: u64,
    ph: &mut Phases,
) -> Result<Value, CliError> {
    let m = arg.build::<F>(g)?;
    let bs = ph.time("blocks", || block_decomposition::<F>(g, seed))?;
    let dec = ph.time("decompose", || decompose(&m, seed))?;
    let mut rows = Vec::new();
    for s in &dec.summands {
        let b = block_of(&s.module, &bs)?;
        rows.push(json!({ "dim": s.module.dim(), "multiplicity": s.multiplicity, "block": b }));
    }
    Ok(json!({
        "block_dims": bs.iter().map(|b| b.dim).collect::<Vec<_>>(),
        "summands": rows,
    }))
}

pub fn blocks_of(a: &ModuleArgs, seed: u64, ph: &mut Phases) -> Result<Outcome, CliError> {
    let (arg, g, p) = module_and_prime(a)?;
    let payload = with_cli_prime!(p, F => blocks_of_rows::<F>(&arg, &g, seed, ph))?;
    Ok(Outcome::pass(payload))
}

fn green_one<F: PrimeField + ScalarParse>(
    arg: &ModuleArg,
    g: &GroupRef,
    i: &InjectiveHom,
    d: &Subgroup,
    seed: u64,
    ph: &mut Phases,
) -> Result<Outcome, CliError> {
    let n = build_over_subgroup::<F>(arg, g, i)?;
    let c = ph.time("correspondent", || green_correspondent(i, &n, d, seed))?;
    Ok(Outcome::pass(json!({
        "module_dim": n.dim(),
        "correspondent": module_json(&c.correspondent),
        "vertex": subgroup_json(&c.vertex),
        "other_summands": c.others.iter().map(|(dim, v)| json!({ "dim": dim, "vertex": subgroup_json(v) })).collect::<Vec<_>>(),
        "family": c.family.iter().map(subgroup_json).collect::<Vec<_>>(),
        "round_trip": true,
    })))
}

fn green_all<F: PrimeField>(i: &InjectiveHom, d: &Subgroup, seed: u64, ph: &mut Phases) -> Result<Outcome, CliError> {
    let census = ph.time("census", || green_census::<F>(i, d, seed))?;
    let side = |v: &[mackey_core::replib::FoundIndecomposable<F>]| -> Vec<Value> {
        v.iter()
            .map(|f| json!({ "dim": f.module.dim(), "source": f.source, "vertex_order": f.vertex.order() }))
            .collect()
    };
    let payload = json!({
        "h_side": side(&census.h_side),
        "g_side": side(&census.g_side),
        "correspondent_dims": census.correspondences.iter().map(|c| c.correspondent.dim()).collect::<Vec<_>>(),
        "image": census.image,
        "bijection": census.is_bijection(),
    });
    let failure = (!census.is_bijection()).then(|| {
        (
            "the correspondence is not a bijection onto the G-side summands".to_string(),
            json!({ "image": census.image, "g_side": census.g_side.len() }),
        )
    });
    Ok(Outcome::check(payload, failure))
}

pub fn green_corr(a: &GreenArgs, seed: u64, ph: &mut Phases) -> Result<Outcome, CliError> {
    let g = ph.time("load", || load_group(&a.group))?;
    let d = select_subgroup(&g, &a.d)?;
    let h = match &a.h {
        Some(sel) => select_subgroup(&g, sel)?,
        None => g.normalizer(&d),
    };
    let i = InjectiveHom::inclusion(&g, &h);
    match &a.module {
        Some(m) => {
            let arg = parse_module_arg(m)?;
            if let Some(t) = arg.field()? {
                if t != FieldTag::Prime(a.prime) {
                    return Err(CliError::Input(format!(
                        "module is over {t} but --prime is {}",
                        a.prime
                    )));
                }
            }
            with_cli_prime!(a.prime, F => green_one::<F>(&arg, &g, &i, &d, seed, ph))
        }
        None => with_cli_prime!(a.prime, F => green_all::<F>(&i, &d, seed, ph)),
    }
}

fn functor_payload<R: Ring>(
    m: &OrdinaryMackeyFunctor<R>,
    axioms: &AxiomReport,
    cohomological: &AxiomReport,
    max_failures: usize,
) -> (Value, Option<(String, Value)>) {
    let sub = |l: usize| m.levels()[l].subgroup.elements().to_vec();
    let failing_pairs: Vec<Value> = cohomological
        .failures()
        .map(|c| json!({ "h": sub(c.levels[0]), "k": sub(c.levels[1]) }))
        .collect();
    let coh_total = cohomological.checks.len();
    let payload = json!({
        "levels": m.levels().len(),
        "dims": m.levels().iter().map(|l| json!({ "subgroup": l.subgroup.elements(), "dim": l.dim })).collect::<Vec<_>>(),
        "checks": axioms.checks.len(),
        "clauses": axioms.summary(),
        "failures": axioms.failures().take(max_failures).collect::<Vec<_>>(),
        "cohomological": {
            "holds": failing_pairs.is_empty(),
            "passed": coh_total - failing_pairs.len(),
            "total": coh_total,
            "failing_pairs": failing_pairs,
        },
    });
    let failure = axioms.failures().next().map(|c| {
        (
            format!(
                "{} of {} identities fail",
                axioms.failures().count(),
                axioms.checks.len()
            ),
            serde_json::to_value(c).expect("checks serialize"),
        )
    });
    (payload, failure)
}

#[derive(Serialize, Deserialize)]
struct FunctorFile {
    group: Value,
    functor: FunctorData,
}

fn export<R: Ring>(
    path: &Option<PathBuf>,
    g: &GroupRef,
    m: &OrdinaryMackeyFunctor<R>,
    coeff: &str,
) -> Result<(), CliError> {
    if let Some(path) = path {
        let file = FunctorFile {
            group: json!({ "table": g.table_rows() }),
            functor: FunctorData::from_functor(m, coeff),
        };
        let text = serde_json::to_string(&file).expect("functor data serializes");
        std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn check_functor<R: Ring>(
    a: &MackeyArgs,
    g: &GroupRef,
    m: &OrdinaryMackeyFunctor<R>,
    axioms: AxiomReport,
    coeff: &str,
    ph: &mut Phases,
) -> Result<Outcome, CliError> {
    let coh = ph.time("cohomological", || cohomological_check(m));
    export(&a.export, g, m, coeff)?;
    let (payload, failure) = functor_payload(m, &axioms, &coh, a.max_failures);
    Ok(Outcome::check(payload, failure))
}

fn module_functor<F: Field + ScalarParse>(a: &MackeyArgs, g: &GroupRef, ph: &mut Phases) -> Result<Outcome, CliError> {
    let m = match a.functor {
        FunctorKind::FixedPoints => {
            let y = a
                .module
                .as_deref()
                .ok_or_else(|| CliError::Input("--module is required".into()))?;
            let y = parse_module_arg(y)?.build::<F>(g)?;
            ph.time("construct", || hom_decategorify(&Module::trivial(g, 1), &y))?
        }
        FunctorKind::Hom => {
            let need =
                |o: &Option<String>, n: &str| o.clone().ok_or_else(|| CliError::Input(format!("--{n} is required")));
            let x = parse_module_arg(&need(&a.x, "x")?)?.build::<F>(g)?;
            let y = parse_module_arg(&need(&a.y, "y")?)?.build::<F>(g)?;
            ph.time("construct", || hom_decategorify(&x, &y))?
        }
        FunctorKind::Green => {
            let spec = a.monoid.as_deref().unwrap_or("trivial");
            let monoid = match spec {
                "trivial" => Monoid::<F>::trivial(g),
                "group-algebra" => Monoid::group_algebra(g)?,
                s => match s.strip_prefix("frobenius:") {
                    Some(sel) => Monoid::from_frobenius(&frobenius_object::<F>(g, &select_subgroup(g, sel)?)?)?,
                    None => return Err(CliError::Input(format!("unknown monoid {s:?}"))),
                },
            };
            let green = ph.time("construct", || green_from_monoid(&monoid))?;
            let axioms = ph.time("axioms", || verify_green_axioms(&green));
            return check_functor(a, g, &green.underlying, axioms, &F::tag().to_string(), ph);
        }
        FunctorKind::Burnside | FunctorKind::Load => unreachable!("handled by the caller"),
    };
    let axioms = ph.time("axioms", || verify_mackey_axioms(&m));
    check_functor(a, g, &m, axioms, &F::tag().to_string(), ph)
}

fn loaded_functor<R: Ring + ScalarParse>(
    a: &MackeyArgs,
    g: &GroupRef,
    data: &FunctorData,
    ph: &mut Phases,
) -> Result<Outcome, CliError> {
    let m = ph.time("construct", || data.to_functor::<R>(g))?;
    let axioms = ph.time("axioms", || verify_mackey_axioms(&m));
    check_functor(a, g, &m, axioms, &data.coefficients, ph)
}

pub fn mackey_check(a: &MackeyArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    match a.functor {
        FunctorKind::Load => {
            let path = a
                .load
                .as_ref()
                .ok_or_else(|| CliError::Input("--load is required".into()))?;
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let file: FunctorFile =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let spec: GroupSpec =
                serde_json::from_value(file.group).map_err(|e| CliError::Input(format!("group spec: {e}")))?;
            let g = spec.build()?;
            if file.functor.coefficients == "Z" {
                return loaded_functor::<i64>(a, &g, &file.functor, ph);
            }
            with_cli_field!(parse_field(&file.functor.coefficients)?, F => loaded_functor::<F>(a, &g, &file.functor, ph))
        }
        FunctorKind::Burnside => {
            let g = load_group(
                a.group
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--group is required".into()))?,
            )?;
            let b = ph.time("construct", || burnside_green_functor(&g))?;
            let axioms = ph.time("axioms", || verify_green_axioms(&b));
            check_functor(a, &g, &b.underlying, axioms, "Z", ph)
        }
        _ => {
            let g = load_group(
                a.group
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--group is required".into()))?,
            )?;
            with_cli_field!(parse_field(&a.field)?, F => module_functor::<F>(a, &g, ph))
        }
    }
}

pub fn verify(a: &VerifyArgs, ph: &mut Phases) -> Result<Outcome, CliError> {
    let groups: Vec<(String, GroupRef)> = if a.group.is_empty() {
        grid_groups().into_iter().map(|(n, g)| (n.to_string(), g)).collect()
    } else {
        a.group
            .iter()
            .map(|s| Ok((s.clone(), load_group(s)?)))
            .collect::<Result<_, CliError>>()?
    };
    let mut fields: Vec<FieldTag> = a.prime.iter().map(|&p| FieldTag::Prime(p)).collect();
    for f in &a.field {
        fields.push(parse_field(f)?);
    }
    if fields.is_empty() {
        fields = GRID_FIELDS.to_vec();
    }
    for f in &fields {
        if let FieldTag::Prime(p) = f {
            if !mackey_core::scalar::is_prime(u64::from(*p)) || *p > 97 {
                return Err(CliError::Input(format!("unsupported prime {p}")));
            }
        }
    }
    let suites: Vec<Suite> = if a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite.iter().map(|&s| s.into()).collect()
    };
    let report = ph.time("grid", || run_grid(&groups, &fields, &suites));
    let failure = report.first_failure().map(|c| {
        (
            format!("{} of {} identities fail", report.failed, report.checks),
            serde_json::to_value(c).expect("checks serialize"),
        )
    });
    let failure =
        failure.or_else(|| (report.checks == 0).then(|| ("no identities were checked".to_string(), Value::Null)));
    let payload = json!({
        "groups": groups.iter().map(|(n, _)| n).collect::<Vec<_>>(),
        "fields": fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "suites": suites,
        "report": report,
    });
    Ok(Outcome::check(payload, failure))
}

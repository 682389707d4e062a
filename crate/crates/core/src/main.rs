use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use superlie::cartan::{cartan_subalgebra_even, cartan_subsuperalgebra, is_compactly_embedded, root_decomposition, CartanData, CartanSearch};
use superlie::catalog::{CatalogEntry, Registry};
use superlie::cliffrep::{classify_heisenberg_clifford, equivalent, parity_change, verify_rep, MatrixRep};
use superlie::cones::{
    find_isotropic_odd, find_pd_functional, star_reduced_report, verify_certificate, verify_star_witnesses, ConeStatus, PdBudget, StarOptions,
    StarStatus,
};
use superlie::exactnum::Scalar;
use superlie::glinalg::{Subspace, Vector};
use superlie::hwm::{build_truncated, positive_system, TModule};
use superlie::lsa::{algebra_from_json, algebra_to_json, centroid, derivations, describe, differential_constants, inner_derivation_dim, LieSuperalgebra};
use superlie::orbits::{classify_orbits, in_admissible_cone, kirillov_heisenberg_check, polarizing_flag};
use superlie::{Error, Result};

const SCHEMA_VERSION: &str = "1";
const CLIMB_STEPS: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "superlie", version, about = "Exact computations for real Lie superalgebras")]
struct Cli {
    /// Print the JSON schema of the report and exit.
    #[arg(long, global = true)]
    schema: bool,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Args, Debug, Default, Clone)]
struct Input {
    /// Structure constants as JSON.
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    /// Catalog key such as `su(1,1|1,1)` or `cl:1|2,++`.
    #[arg(long, value_name = "KEY")]
    catalog: Option<String>,
    /// Integer scan bound for Cartan and cone searches.
    #[arg(long, value_name = "N", default_value_t = 3)]
    budget: i64,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check grading, graded antisymmetry and the graded Jacobi identity.
    Validate(Input),
    /// Series, center, derivations, centroid and differential constants.
    Analyze(Input),
    /// Even Cartan subalgebra and its Cartan subsuperalgebra.
    Cartan(Input),
    /// Root decomposition for a compactly embedded Cartan subalgebra.
    Roots(Input),
    /// Pointedness of the cone of odd squares.
    ConeCheck(Input),
    /// Every obstruction check of the star-reduced battery.
    StarReduced(Input),
    /// Polarizing system for a functional on the even part.
    Polarize {
        #[command(flatten)]
        input: Input,
        /// Functional on the even part, comma separated.
        #[arg(long, value_name = "STR")]
        lambda: String,
    },
    /// Coadjoint orbits among the admissible points of a candidate box.
    OrbitClassify {
        #[command(flatten)]
        input: Input,
        /// `central`, `cube:R`, or a JSON file holding a list of functionals.
        #[arg(long = "box", value_name = "FILE|central|cube:R")]
        search_box: String,
    },
    /// Irreducible Clifford modules of a Heisenberg–Clifford algebra.
    Clifford {
        #[command(flatten)]
        input: Input,
        /// Central character on a basis of the center of the even part.
        #[arg(long, value_name = "STR")]
        lambda: String,
    },
    /// Representation axioms for a module file, or for the Clifford modules of `--lambda`.
    VerifyRep {
        #[command(flatten)]
        input: Input,
        /// Module as JSON: `space_dims`, `rho` entries and an optional `field`.
        #[arg(long, value_name = "FILE")]
        rep: Option<PathBuf>,
        /// Central character whose Clifford modules are checked.
        #[arg(long, value_name = "STR")]
        lambda: Option<String>,
    },
    /// Truncated highest-weight shell.
    Hwm {
        #[command(flatten)]
        input: Input,
        /// Regular element of the Cartan subalgebra.
        #[arg(long, value_name = "STR")]
        x0: String,
        /// Largest PBW monomial degree.
        #[arg(long, value_name = "N", default_value_t = 2)]
        depth: usize,
        /// Highest weight on the basis of h0 (zero by default).
        #[arg(long, value_name = "STR")]
        lambda: Option<String>,
    },
    /// Browse the built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List {
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    Get {
        key: String,
        /// Write the algebra's structure constants here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Report {
    schema_version: &'static str,
    version: &'static str,
    command: String,
    status: &'static str,
    inputs: Value,
    budgets: Value,
    results: Value,
}

struct Outcome {
    status: &'static str,
    results: Value,
}

fn ok(results: Value) -> Result<Outcome> {
    Ok(Outcome { status: "OK", results })
}

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<(LieSuperalgebra, Option<CatalogEntry>)> {
    match (&input.algebra, &input.catalog) {
        (Some(_), Some(_)) => Err(Error::InvalidInput("give either --algebra or --catalog, not both".into())),
        (Some(path), None) => Ok((algebra_from_json(&read_json(path)?)?, None)),
        (None, Some(key)) => {
            let e = Registry::standard().build(key)?;
            Ok((e.algebra.clone(), Some(e)))
        }
        (None, None) => Err(Error::InvalidInput("an algebra is required: --algebra FILE or --catalog KEY".into())),
    }
}

/// Comma-separated scalars, optionally in brackets or quotes.
fn parse_scalars(s: &str, g: &LieSuperalgebra) -> Result<Vector> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| Ok(Scalar::parse(x.trim().trim_matches('"'), g.tag())?)).collect()
}

fn parse_len(s: &str, g: &LieSuperalgebra, len: usize, what: &str) -> Result<Vector> {
    let v = parse_scalars(s, g)?;
    if v.len() != len {
        return Err(Error::InvalidInput(format!("{what} needs {len} values, got {}", v.len())));
    }
    Ok(v)
}

fn cartan_h0(g: &LieSuperalgebra, entry: Option<&CatalogEntry>, bound: i64, compact: bool) -> Result<(Subspace, &'static str)> {
    if let Some(h) = entry.and_then(|e| e.cartan_hint.as_ref()) {
        if (!compact || is_compactly_embedded(g, h)) && cartan_subsuperalgebra(g, h).is_ok() {
            return Ok((h.clone(), "catalog"));
        }
    }
    Ok((cartan_subalgebra_even(g, CartanSearch { bound, require_compact: compact })?, "scan"))
}

fn described(g: &LieSuperalgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| describe(g, v)).collect()
}

fn cartan_json(g: &LieSuperalgebra, c: &CartanData, source: &str) -> Value {
    json!({
        "source": source,
        "h0": described(g, &c.h0),
        "h": described(g, &c.h),
        "dims": { "h0": c.h0.dim(), "h_even": c.h.intersect(&g.even_space()).dim(), "h_odd": c.h.intersect(&g.odd_space()).dim() },
        "compactly_embedded": c.compactly_embedded,
    })
}

fn validate(g: &LieSuperalgebra) -> Result<Outcome> {
    let r = g.check_axioms();
    ok(json!({
        "algebra": g.name(),
        "field": g.tag().to_string(),
        "dims": [g.even_dim(), g.odd_dim()],
        "valid": r.ok(),
        "parity_ok": r.parity_ok,
        "antisymmetry_ok": r.antisymmetry_ok,
        "jacobi_ok": r.jacobi_ok,
        "violations": r.violations,
    }))
}

fn analyze(g: &LieSuperalgebra) -> Result<Outcome> {
    if !g.check_axioms().ok() {
        return Err(Error::InvalidInput("structure constants fail the superalgebra axioms; run validate".into()));
    }
    let dims = |s: &[Subspace]| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    let der = derivations(g);
    let cen = centroid(g);
    let dc = differential_constants(g);
    ok(json!({
        "algebra": g.name(),
        "dims": [g.even_dim(), g.odd_dim()],
        "nilpotent": g.is_nilpotent(),
        "solvable": g.is_solvable(),
        "center": described(g, &g.center()),
        "derived_series_dims": dims(&g.derived_series()),
        "lower_central_series_dims": dims(&g.lower_central_series()),
        "derivations": { "even": der.dims().0, "odd": der.dims().1, "inner": inner_derivation_dim(g) },
        "centroid": { "even": cen.dims().0, "odd": cen.dims().1 },
        "differential_constants": { "even": dc.dims().0, "odd": dc.dims().1 },
        "heisenberg_check": kirillov_heisenberg_check(g),
    }))
}

fn cartan(g: &LieSuperalgebra, entry: Option<&CatalogEntry>, bound: i64) -> Result<Outcome> {
    let (h0, source) = cartan_h0(g, entry, bound, false)?;
    let c = cartan_subsuperalgebra(g, &h0)?;
    ok(cartan_json(g, &c, source))
}

fn roots(g: &LieSuperalgebra, entry: Option<&CatalogEntry>, bound: i64) -> Result<Outcome> {
    let (h0, source) = cartan_h0(g, entry, bound, true)?;
    let c = cartan_subsuperalgebra(g, &h0)?;
    let rd = root_decomposition(g, &c)?;
    if !rd.checks.ok() {
        return Err(Error::Invariant(format!("root decomposition checks failed: {:?}", rd.checks)));
    }
    let roots: Vec<Value> = rd
        .roots
        .iter()
        .map(|r| json!({ "alpha": strs(&r.alpha), "even_dim": r.even.dim(), "odd_dim": r.odd.dim() }))
        .collect();
    ok(json!({
        "cartan": cartan_json(g, &c, source),
        "field": rd.field.to_string(),
        "roots": roots,
        "checks": rd.checks,
    }))
}

fn cone_check(g: &LieSuperalgebra, bound: i64) -> Result<Outcome> {
    let iso = find_isotropic_odd(g);
    let cert = if iso.status == ConeStatus::IsotropicFound { iso } else { find_pd_functional(g, PdBudget { bound, climb_steps: CLIMB_STEPS }) };
    verify_certificate(g, &cert)?;
    let status = match cert.status {
        ConeStatus::PointedCertified => "OK",
        ConeStatus::IsotropicFound | ConeStatus::LineFound => "OBSTRUCTED",
        ConeStatus::Undetermined if cert.line.is_some() => "OBSTRUCTED",
        ConeStatus::Undetermined => "UNDETERMINED",
    };
    Ok(Outcome { status, results: json!({ "certificate": cert, "witnesses_verified": true }) })
}

fn star_reduced(g: &LieSuperalgebra, entry: Option<&CatalogEntry>, bound: i64) -> Result<Outcome> {
    let opts = StarOptions { budget: PdBudget { bound, climb_steps: CLIMB_STEPS }, cartan_hint: entry.and_then(|e| e.cartan_hint.clone()) };
    let r = star_reduced_report(g, &opts);
    verify_star_witnesses(g, &r)?;
    let status = match r.status {
        StarStatus::Obstructed => "OBSTRUCTED",
        StarStatus::ConeOk => "OK",
        StarStatus::Undetermined => "UNDETERMINED",
    };
    Ok(Outcome {
        status,
        results: json!({
            "verdict": r.status,
            "reasons": r.reasons,
            "certificate": r.certificate,
            "compact_cartan": r.compact_cartan.as_ref().map(|h| described(g, h)),
            "witnesses_verified": true,
        }),
    })
}

fn polarize(g: &LieSuperalgebra, lambda: &str) -> Result<Outcome> {
    let l = parse_len(lambda, g, g.even_dim(), "--lambda")?;
    let adm = in_admissible_cone(g, &l)?;
    let ps = polarizing_flag(g, &l)?;
    ok(json!({ "admissible": adm.admissible, "polarizing_system": ps.to_json() }))
}

fn search_box(g: &LieSuperalgebra, spec: &str) -> Result<Vec<Vector>> {
    let e = g.even_dim();
    let tag = g.tag();
    let grid = |axes: &[usize], r: i64| -> Vec<Vector> {
        let mut out = vec![vec![Scalar::zero(tag); e]];
        for &k in axes {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (-r..=r).map(move |c| {
                        let mut w = v.clone();
                        w[k] = Scalar::from_int(c, tag);
                        w
                    })
                })
                .collect();
        }
        out
    };
    if spec == "central" {
        let z = g.center().intersect(&g.even_space());
        if z.is_zero() {
            return Err(Error::InvalidInput("the even part meets the center trivially; `central` box is empty".into()));
        }
        return Ok(grid(z.pivots(), 2));
    }
    if let Some(r) = spec.strip_prefix("cube:") {
        let r: i64 = r.parse().map_err(|_| Error::InvalidInput(format!("bad cube radius `{r}`")))?;
        return Ok(grid(&(0..e).collect::<Vec<_>>(), r));
    }
    let v = read_json(&PathBuf::from(spec))?;
    v.as_array()
        .ok_or_else(|| Error::InvalidInput("box file must hold a list of functionals".into()))?
        .iter()
        .map(|x| {
            let row: Vector = x
                .as_array()
                .ok_or_else(|| Error::InvalidInput("each functional must be a list".into()))?
                .iter()
                .map(|c| superlie::lsa::scalar_from_json(c, tag))
                .collect::<Result<_>>()?;
            if row.len() != e {
                return Err(Error::InvalidInput(format!("functionals need {e} values")));
            }
            Ok(row)
        })
        .collect()
}

fn orbit_classify(g: &LieSuperalgebra, spec: &str) -> Result<Outcome> {
    let candidates = search_box(g, spec)?;
    let c = classify_orbits(g, &candidates)?;
    let mut families: Vec<(usize, u64, Vec<usize>)> = Vec::new();
    for (k, o) in c.orbits.iter().enumerate() {
        match families.iter_mut().find(|f| f.0 == o.even_rank && f.1 == o.clifford_dim) {
            Some(f) => f.2.push(k),
            None => families.push((o.even_rank, o.clifford_dim, vec![k])),
        }
    }
    let families: Vec<Value> = families
        .iter()
        .map(|(r, d, ks)| json!({ "even_rank": r, "clifford_dim": d, "orbits": ks, "representatives": ks.iter().map(|&k| strs(&c.orbits[k].representative)).collect::<Vec<_>>() }))
        .collect();
    ok(json!({
        "candidates": candidates.len(),
        "orbit_count": c.orbits.len(),
        "family_count": families.len(),
        "families": families,
        "rejected_count": c.rejected.len(),
        "classification": c.to_json(),
    }))
}

fn check_module(rep: &MatrixRep) -> Value {
    let even: Vec<Vector> = (0..rep.algebra.even_dim()).map(|k| superlie::glinalg::unit_vec(rep.algebra.dim(), k, rep.algebra.tag())).collect();
    let iso: Vec<Vec<Vector>> = find_isotropic_odd(&rep.algebra).isotropic.map(|x| vec![vec![x]]).unwrap_or_default();
    let r = verify_rep(rep, &even, &iso);
    json!({ "pass": r.ok(), "failed": r.failed(), "checks": r.checks })
}

fn clifford(g: &LieSuperalgebra, lambda: &str) -> Result<Outcome> {
    let z0 = g.even_part().center().dim();
    let gamma = parse_len(lambda, g, z0, "--lambda")?;
    let Some(c) = classify_heisenberg_clifford(g, &gamma)? else {
        return ok(json!({ "modules": Value::Null, "reason": "the odd form is not definite for this central character" }));
    };
    let mut checks = Vec::new();
    for m in &c.modules {
        let v = check_module(m);
        if v["pass"] != json!(true) {
            return Err(Error::Invariant(format!("constructed module fails the representation axioms: {}", v["failed"])));
        }
        checks.push(v);
    }
    let pair = if c.modules.len() == 2 {
        let strict = equivalent(&c.modules[0], &c.modules[1], false)?;
        let loose = equivalent(&c.modules[0], &c.modules[1], true)?;
        if strict || !loose {
            return Err(Error::Invariant("parity pair equivalence check failed".into()));
        }
        json!({ "equivalent_graded": strict, "equivalent_up_to_parity": loose })
    } else {
        Value::Null
    };
    let mut out = c.to_json();
    out["module_checks"] = Value::Array(checks);
    out["parity_pair_check"] = pair;
    out["module_dims"] = json!(c.modules.iter().map(MatrixRep::dim).collect::<Vec<_>>());
    ok(out)
}

fn verify_rep_cmd(g: &LieSuperalgebra, rep: Option<&PathBuf>, lambda: Option<&str>) -> Result<Outcome> {
    let modules = match (rep, lambda) {
        (Some(path), _) => vec![MatrixRep::from_json(g, &read_json(path)?)?],
        (None, Some(l)) => {
            let gamma = parse_len(l, g, g.even_part().center().dim(), "--lambda")?;
            match classify_heisenberg_clifford(g, &gamma)? {
                Some(c) => c.modules,
                None => return Err(Error::InvalidInput("no Clifford module for this central character".into())),
            }
        }
        (None, None) => return Err(Error::InvalidInput("give --rep FILE or --lambda".into())),
    };
    let reports: Vec<Value> = modules.iter().map(check_module).collect();
    let all = reports.iter().all(|r| r["pass"] == json!(true));
    ok(json!({ "pass": all, "modules": reports, "parity_changes_pass": modules.iter().all(|m| check_module(&parity_change(m))["pass"] == json!(true)) }))
}

fn hwm(g: &LieSuperalgebra, entry: Option<&CatalogEntry>, bound: i64, x0: &str, depth: usize, lambda: Option<&str>) -> Result<Outcome> {
    let (h0, source) = cartan_h0(g, entry, bound, true)?;
    let c = cartan_subsuperalgebra(g, &h0)?;
    let rd = root_decomposition(g, &c)?;
    let mut x = parse_scalars(x0, g)?;
    if x.len() == g.even_dim() {
        x.extend(std::iter::repeat_n(Scalar::zero(g.tag()), g.odd_dim()));
    }
    if x.len() != g.dim() {
        return Err(Error::InvalidInput(format!("--x0 needs {} or {} values", g.even_dim(), g.dim())));
    }
    let pos = positive_system(&rd, &x)?;
    let weight = match lambda {
        Some(l) => parse_len(l, g, h0.dim(), "--lambda")?,
        None => vec![Scalar::zero(g.tag()); h0.dim()],
    };
    let t = build_truncated(&rd, &pos, &TModule::new(weight, 1), depth)?;
    if !t.check_cone() {
        return Err(Error::Invariant("weight outside the cone".into()));
    }
    ok(json!({
        "cartan": cartan_json(g, &c, source),
        "positive_roots": t.positive.iter().map(|a| strs(a)).collect::<Vec<_>>(),
        "module": t,
        "cone_check": true,
    }))
}

fn catalog_list() -> Result<Outcome> {
    let reg = Registry::standard();
    let families: Vec<Value> = reg.families().map(|f| json!({ "family": f.name(), "synopsis": f.synopsis(), "examples": f.examples() })).collect();
    ok(json!({ "families": families }))
}

fn catalog_get(key: &str, out: Option<&PathBuf>) -> Result<Outcome> {
    let e = Registry::standard().build(key)?;
    let alg = algebra_to_json(&e.algebra);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&alg).expect("json") + "\n";
        fs::write(path, text).map_err(|err| Error::InvalidInput(format!("{}: {err}", path.display())))?;
    }
    ok(json!({
        "entry": e,
        "cartan_hint": e.cartan_hint.as_ref().map(|h| described(&e.algebra, h)),
        "algebra": alg,
    }))
}

fn inputs_of(input: &Input, extra: &[(&str, Option<String>)]) -> Value {
    let mut m = Map::new();
    if let Some(p) = &input.algebra {
        m.insert("algebra".into(), json!(p.display().to_string()));
    }
    if let Some(k) = &input.catalog {
        m.insert("catalog".into(), json!(k));
    }
    for (k, v) in extra {
        if let Some(v) = v {
            m.insert((*k).into(), json!(v));
        }
    }
    Value::Object(m)
}

fn budgets_of(input: &Input) -> Value {
    json!({ "scan_bound": input.budget, "climb_steps": CLIMB_STEPS })
}

fn run(cmd: &Cmd) -> (String, Value, Value, Option<PathBuf>, Result<Outcome>) {
    let with = |input: &Input, f: &dyn Fn(&LieSuperalgebra, Option<&CatalogEntry>) -> Result<Outcome>| -> Result<Outcome> {
        if input.budget < 0 {
            return Err(Error::InvalidInput("--budget must be nonnegative".into()));
        }
        let (g, e) = load(input)?;
        f(&g, e.as_ref())
    };
    match cmd {
        Cmd::Validate(i) => ("validate".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, _| validate(g))),
        Cmd::Analyze(i) => ("analyze".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, _| analyze(g))),
        Cmd::Cartan(i) => ("cartan".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, e| cartan(g, e, i.budget))),
        Cmd::Roots(i) => ("roots".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, e| roots(g, e, i.budget))),
        Cmd::ConeCheck(i) => ("cone-check".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, _| cone_check(g, i.budget))),
        Cmd::StarReduced(i) => ("star-reduced".into(), inputs_of(i, &[]), budgets_of(i), i.out.clone(), with(i, &|g, e| star_reduced(g, e, i.budget))),
        Cmd::Polarize { input, lambda } => (
            "polarize".into(),
            inputs_of(input, &[("lambda", Some(lambda.clone()))]),
            budgets_of(input),
            input.out.clone(),
            with(input, &|g, _| polarize(g, lambda)),
        ),
        Cmd::OrbitClassify { input, search_box } => (
            "orbit-classify".into(),
            inputs_of(input, &[("box", Some(search_box.clone()))]),
            budgets_of(input),
            input.out.clone(),
            with(input, &|g, _| orbit_classify(g, search_box)),
        ),
        Cmd::Clifford { input, lambda } => (
            "clifford".into(),
            inputs_of(input, &[("lambda", Some(lambda.clone()))]),
            budgets_of(input),
            input.out.clone(),
            with(input, &|g, _| clifford(g, lambda)),
        ),
        Cmd::VerifyRep { input, rep, lambda } => (
            "verify-rep".into(),
            inputs_of(input, &[("rep", rep.as_ref().map(|p| p.display().to_string())), ("lambda", lambda.clone())]),
            budgets_of(input),
            input.out.clone(),
            with(input, &|g, _| verify_rep_cmd(g, rep.as_ref(), lambda.as_deref())),
        ),
        Cmd::Hwm { input, x0, depth, lambda } => {
            let mut b = budgets_of(input);
            b["depth"] = json!(depth);
            (
                "hwm".into(),
                inputs_of(input, &[("x0", Some(x0.clone())), ("lambda", lambda.clone())]),
                b,
                input.out.clone(),
                with(input, &|g, e| hwm(g, e, input.budget, x0, *depth, lambda.as_deref())),
            )
        }
        Cmd::Catalog { action: CatalogCmd::List { out } } => ("catalog list".into(), json!({}), json!({}), out.clone(), catalog_list()),
        Cmd::Catalog { action: CatalogCmd::Get { key, out } } => {
            ("catalog get".into(), json!({ "catalog": key }), json!({}), None, catalog_get(key, out.as_ref()))
        }
    }
}

fn schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "superlie-report",
        "title": "superlie report",
        "type": "object",
        "required": ["schema_version", "version", "command", "status", "inputs", "budgets", "results"],
        "additionalProperties": false,
        "properties": {
            "schema_version": { "const": SCHEMA_VERSION },
            "version": { "type": "string" },
            "command": {
                "enum": ["validate", "analyze", "cartan", "roots", "cone-check", "star-reduced", "polarize", "orbit-classify", "clifford", "verify-rep", "hwm", "catalog list", "catalog get"]
            },
            "status": { "enum": ["OK", "OBSTRUCTED", "UNDETERMINED", "ERROR"] },
            "inputs": { "type": "object", "additionalProperties": { "type": "string" } },
            "budgets": {
                "type": "object",
                "properties": {
                    "scan_bound": { "type": "integer", "minimum": 0 },
                    "climb_steps": { "type": "integer", "minimum": 0 },
                    "depth": { "type": "integer", "minimum": 0 }
                }
            },
            "results": {
                "type": "object",
                "properties": {
                    "error": {
                        "type": "object",
                        "required": ["code", "message"],
                        "properties": { "code": { "type": "string" }, "message": { "type": "string" } }
                    }
                }
            }
        }
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::result::Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.schema {
        print!("{}", serde_json::to_string_pretty(&schema()).expect("json") + "\n");
        return ExitCode::SUCCESS;
    }
    let Some(cmd) = cli.command else {
        eprintln!("a subcommand is required; see --help");
        return ExitCode::from(1);
    };
    let (command, inputs, budgets, out, result) = run(&cmd);
    let (status, results, code) = match result {
        Ok(o) => (o.status, o.results, 0),
        Err(e) => ("ERROR", json!({ "error": { "code": e.code(), "message": e.to_string() } }), e.exit_code()),
    };
    let report = Report { schema_version: SCHEMA_VERSION, version: env!("CARGO_PKG_VERSION"), command, status, inputs, budgets, results };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Err(msg) = emit(&text, out.as_ref()) {
        eprintln!("{msg}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use superlie::cartan::{
    cartan_subalgebra_even, cartan_subsuperalgebra, check_root_symmetry, fixed_point_projection, is_compactly_embedded, is_nilpotent_subspace,
    root_decomposition, CartanSearch,
};
use superlie::catalog::{build, real_coords, root_vectors_su, sq_coords, CatalogEntry, STANDARD_KEYS};
use superlie::cliffrep::{classify_heisenberg_clifford, equivalent};
use superlie::cones::{convex_hull_contains_zero, nilpotent_vanishing_ideal, odd_form};
use superlie::exactnum::{FieldTag, Scalar};
use superlie::glinalg::{dot, int_vec, is_zero_vec, vec_add, vec_scale, Mat, Subspace, Vector};
use superlie::hwm::{build_truncated, positive_system, TModule};
use superlie::lsa::{centroid, derivations, grassmann_extend, quotient, LieSuperalgebra};
use superlie::orbits::{classify_orbits, clifford_module_dim, polarizing_flag};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn entry(key: &str) -> Result<CatalogEntry, String> {
    build(key).map_err(|e| format!("{key}: {e}"))
}

fn within(t: Duration, limit: f64, what: &str) -> Result<(), String> {
    ensure(t.as_secs_f64() < limit, format!("{what} took {:.2}s, limit {limit}s", t.as_secs_f64()))
}

fn axiom_suite() -> Check {
    let start = Instant::now();
    let required = ["h(1)", "hc(2|2,++)", "su(1,1|1,1)", "sq(1,1)", "osp(1,1|2)", "gl(1|1)", "osp(1|2)"];
    for r in required {
        ensure(STANDARD_KEYS.contains(&r), format!("{r} missing from the suite"))?;
    }
    for d in 1..=4 {
        let plus = format!("cl(1|{d},{})", "+".repeat(d));
        ensure(STANDARD_KEYS.contains(&plus.as_str()), format!("{plus} missing"))?;
        ensure(STANDARD_KEYS.iter().any(|k| k.starts_with(&format!("cl(1|{d},")) && k.contains('-')), format!("cl(1|{d}) with a minus sign missing"))?;
    }
    for key in STANDARD_KEYS {
        let r = entry(key)?.algebra.check_axioms();
        ensure(r.ok(), format!("{key}: {:?}", r.violations.first()))?;
    }
    let t = start.elapsed();
    within(t, 10.0, "axiom suite")?;
    Ok(format!("{} entries, graded antisymmetry and Jacobi exhaustive, {:.2}s", STANDARD_KEYS.len(), t.as_secs_f64()))
}

fn cartan_bijection() -> Check {
    let mut checked = 0;
    let mut no_h0 = Vec::new();
    for key in STANDARD_KEYS {
        let e = entry(key)?;
        let g = &e.algebra;
        let mut candidates = Vec::new();
        match cartan_subalgebra_even(g, CartanSearch::default()) {
            Ok(h) => candidates.push(h),
            Err(_) => no_h0.push(*key),
        }
        candidates.extend(e.cartan_hint.clone());
        for h0 in candidates {
            let c = cartan_subsuperalgebra(g, &h0).map_err(|err| format!("{key}: {err}"))?;
            let h = &c.h;
            ensure(is_nilpotent_subspace(g, h), format!("{key}: N(h0) not nilpotent"))?;
            ensure(g.normalizer(h) == *h, format!("{key}: N(h0) not self-normalizing"))?;
            ensure(h.intersect(&g.even_space()) == h0, format!("{key}: even part of N(h0) differs from h0"))?;
            checked += 1;
        }
    }
    ensure(no_h0.is_empty(), format!("no even Cartan found for {no_h0:?}"))?;
    Ok(format!("{checked} Cartan subalgebras over {} entries", STANDARD_KEYS.len()))
}

fn root_decompositions() -> Check {
    let keys = ["su(2)", "su(2|1)"];
    for key in keys {
        let e = entry(key)?;
        let g = &e.algebra;
        let h0 = match &e.cartan_hint {
            Some(h) => h.clone(),
            None => cartan_subalgebra_even(g, CartanSearch { bound: 3, require_compact: true }).map_err(|err| format!("{key}: {err}"))?,
        };
        ensure(is_compactly_embedded(g, &h0), format!("{key}: Cartan not compactly embedded"))?;
        let c = cartan_subsuperalgebra(g, &h0).map_err(|err| format!("{key}: {err}"))?;
        let rd = root_decomposition(g, &c).map_err(|err| format!("{key}: {err}"))?;
        let total: usize = rd.roots.iter().map(|r| r.even.dim() + r.odd.dim()).sum();
        ensure(total == g.dim(), format!("{key}: root spaces sum to {total}, not {}", g.dim()))?;
        let mut with_mult = Vec::new();
        for r in &rd.roots {
            for _ in 0..r.even.dim() + r.odd.dim() {
                with_mult.push(r.alpha.clone());
            }
        }
        ensure(check_root_symmetry(&with_mult), format!("{key}: Δ ≠ −Δ"))?;
        let even = g.even_space();
        let comm = g.bracket_spaces(&h0, &even);
        ensure(h0.sum(&comm) == even && h0.intersect(&comm).is_zero(), format!("{key}: g0 ≠ t0 ⊕ [t0, g0]"))?;
    }
    Ok(format!("{keys:?}: spaces fill, Δ = −Δ, g0 = t0 ⊕ [t0, g0]"))
}

fn diag_i(d: &[i64]) -> Mat {
    let mut m = Mat::zeros(d.len(), d.len(), FieldTag::QI);
    for (k, &x) in d.iter().enumerate() {
        m.set(k, k, &Scalar::i(FieldTag::QI) * &Scalar::from_int(x, FieldTag::QI));
    }
    m
}

fn su_hull() -> Check {
    let start = Instant::now();
    let (p, q, r, s) = (1usize, 1usize, 1usize, 1usize);
    let e = entry("su(1,1|1,1)")?;
    let mut hs = Vec::new();
    for a in 1..=r + s {
        for b in 1..=p + q {
            let rv = root_vectors_su(p, q, r, s, a, b).map_err(|x| x.to_string())?;
            // diag(±iE_bb | ±iE_aa), minus exactly when one of a ≤ r, b ≤ p fails
            let sign = if (a <= r) == (b <= p) { 1 } else { -1 };
            let mut d = vec![0i64; p + q + r + s];
            d[b - 1] = sign;
            d[p + q + a - 1] = sign;
            ensure(rv.h == diag_i(&d), format!("H_{{{a},{b}}} differs from the case formula"))?;
            hs.push(real_coords(&e, &rv.h).map_err(|x| x.to_string())?);
        }
    }
    let w = convex_hull_contains_zero(&hs).ok_or("zero not in the hull")?;
    let quarter = Scalar::from_frac(1, 4, FieldTag::Q);
    ensure(w.iter().all(|x| *x == quarter), format!("weights {:?}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>()))?;
    let tag = hs[0][0].tag();
    let sum = hs.iter().zip(&w).fold(vec![Scalar::zero(tag); hs[0].len()], |acc, (h, c)| vec_add(&acc, &vec_scale(h, &c.lift(tag).unwrap())));
    ensure(is_zero_vec(&sum), "re-substitution failed")?;
    let t = start.elapsed();
    within(t, 1.0, "su(1,1|1,1) hull")?;
    Ok(format!("four H_ab match, weights 1/4 each, re-substituted, {:.3}s", t.as_secs_f64()))
}

fn sq_witnesses() -> Check {
    let (p, q) = (1usize, 1usize);
    let g = entry("sq(1,1)")?.algebra;
    let e = g.even_dim();
    let coords = |even: Option<&Mat>, odd: Option<&Mat>| sq_coords(p, q, even, odd).map_err(|x| x.to_string());
    let k0 = Subspace::from_vectors(g.dim(), g.tag(), [coords(Some(&diag_i(&[1, 0])), None)?, coords(Some(&diag_i(&[0, 1])), None)?]);
    let proj = fixed_point_projection(&g, &k0).map_err(|x| x.to_string())?;
    let z3 = diag_i(&[-1, -1]).scale(&Scalar::from_frac(1, 1, FieldTag::QI));
    let offdiag = {
        let mut m = Mat::zeros(2, 2, FieldTag::QI);
        m.set(0, 1, Scalar::one(FieldTag::QI));
        m.set(1, 0, Scalar::one(FieldTag::QI));
        m
    };
    // only the a, d or b component of B nonzero
    let cases = [("Z1", diag_i(&[1, 0]), diag_i(&[1, 0])), ("Z2", diag_i(&[0, 1]), diag_i(&[0, 1])), ("Z3", offdiag, z3)];
    let mut shown = Vec::new();
    for (name, b, z) in cases {
        let x = coords(None, Some(&b))?;
        let sq = g.bracket(&x, &x);
        let pz = proj.mul_vec(&sq[..e]);
        let zc = coords(Some(&z), None)?[..e].to_vec();
        let k = (0..e).find(|&k| !zc[k].is_zero()).unwrap();
        let c = &pz[k] * &zc[k].inv().unwrap();
        ensure(c.real_sign() == Some(std::cmp::Ordering::Greater) && pz == vec_scale(&zc, &c), format!("{name}: projected square is not a positive multiple"))?;
        // the trace formula for the projection
        let minus_i_b2 = b.mul(&b).scale(&-Scalar::i(FieldTag::QI));
        let (ta, td) = (minus_i_b2.get(0, 0).clone(), minus_i_b2.get(1, 1).clone());
        let mut formula = Mat::zeros(2, 2, FieldTag::QI);
        formula.set(0, 0, ta);
        formula.set(1, 1, td);
        let formula = coords(Some(&formula), None)?;
        ensure(vec_scale(&formula[..e], &Scalar::from_int(2, FieldTag::Q)) == pz, format!("{name}: projection disagrees with p_z(-iB²)"))?;
        shown.push(format!("{name} = ({c})⁻¹·p[X,X]"));
    }
    Ok(shown.join(", "))
}

fn heisenberg_clifford() -> Check {
    let mut lines = Vec::new();
    for key in STANDARD_KEYS.iter().filter(|k| k.starts_with("cl(") || k.starts_with("hc(")) {
        let g = entry(key)?.algebra;
        let sig: String = key.rsplit(',').next().unwrap().trim_end_matches(')').to_string();
        let indefinite = sig.contains('+') && sig.contains('-');
        let d = g.odd_dim();
        let z0 = g.even_part().center().dim();
        let mut found = 0;
        for c in [1i64, -1] {
            let mut gamma = vec![Scalar::zero(g.tag()); z0];
            // the central character on the odd-square direction
            let z = g.bracket_spaces(&g.odd_space(), &g.odd_space());
            let zv = &z.basis()[0][..g.even_dim()];
            let center = g.even_part().center();
            let k = (0..z0).find(|&k| !dot(&center.basis()[k], zv).is_zero() || center.basis()[k] == zv).unwrap_or(0);
            gamma[k] = Scalar::from_int(c, g.tag());
            let form = odd_form(&g, &center_functional(&g, &gamma));
            let definite_here = superlie::cones::is_positive_definite(&form);
            match classify_heisenberg_clifford(&g, &gamma).map_err(|e| format!("{key}: {e}"))? {
                None => ensure(!definite_here, format!("{key}: NONE for a definite form"))?,
                Some(cls) => {
                    ensure(definite_here, format!("{key}: module for a non-definite form"))?;
                    found += 1;
                    let dims: Vec<usize> = cls.modules.iter().map(|m| m.dim()).collect();
                    let want = clifford_module_dim(d) as usize;
                    ensure(dims.iter().all(|&x| x == want), format!("{key}: dims {dims:?}, want {want}"))?;
                    ensure(cls.modules.len() == if d % 2 == 0 { 2 } else { 1 }, format!("{key}: {} modules", cls.modules.len()))?;
                    if cls.modules.len() == 2 {
                        let strict = equivalent(&cls.modules[0], &cls.modules[1], false).map_err(|e| e.to_string())?;
                        let loose = equivalent(&cls.modules[0], &cls.modules[1], true).map_err(|e| e.to_string())?;
                        ensure(!strict && loose, format!("{key}: parity pair equivalence ({strict}, {loose})"))?;
                    }
                }
            }
        }
        ensure((found == 0) == indefinite, format!("{key}: {found} signs admit modules, indefinite = {indefinite}"))?;
        lines.push(format!("{key}:{found}"));
    }
    for (d, want) in [(1, 2), (2, 2), (3, 4), (4, 4)] {
        ensure(clifford_module_dim(d) == want, format!("dimension formula at d = {d}"))?;
    }
    Ok(format!("modules per sign choice {}", lines.join(" ")))
}

/// Functional on the even part with the given values on the basis of the center of g0.
fn center_functional(g: &LieSuperalgebra, gamma: &[Scalar]) -> Vector {
    let e = g.even_dim();
    let z = g.even_part().center();
    // solve l(z_k) = gamma_k with l supported on the pivots of the echelon basis
    let mut l = vec![Scalar::zero(g.tag()); e];
    for (k, &p) in z.pivots().iter().enumerate() {
        l[p] = gamma[k].clone();
    }
    l
}

fn cube(e: usize, r: i64) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for _ in 0..e {
        out = out.into_iter().flat_map(|v: Vec<i64>| (-r..=r).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out.iter().map(|v| int_vec(v, FieldTag::Q)).collect()
}

fn omega_rank(g: &LieSuperalgebra, l: &[Scalar]) -> usize {
    let e = g.even_dim();
    let rows: Vec<Vector> = (0..e)
        .map(|i| (0..e).map(|j| dot(l, &g.bracket_basis_dense(i, j)[..e])).collect())
        .collect();
    Mat::from_rows(rows, g.tag()).rank()
}

fn orbit_method() -> Check {
    let start = Instant::now();
    let mut summary = Vec::new();
    for (key, z_index, definite_sign) in [("h(1)", 2usize, None), ("hc(2|2,++)", 2usize, Some(1i64))] {
        let g = entry(key)?.algebra;
        let e = g.even_dim();
        let candidates = cube(e, 2);
        ensure(candidates.len() == 125, "box size")?;
        let cls = classify_orbits(&g, &candidates).map_err(|x| format!("{key}: {x}"))?;
        // classical picture: λ(Z) ≠ 0 fixes the orbit, λ(Z) = 0 gives points
        let mut expect: BTreeMap<String, usize> = BTreeMap::new();
        let mut rejected = 0;
        for l in &candidates {
            let c = l[z_index].clone();
            if let Some(s) = definite_sign {
                if c.real_sign() == Some(std::cmp::Ordering::Less) && s > 0 {
                    rejected += 1;
                    continue;
                }
            }
            let label = if c.is_zero() { format!("point {:?}", l.iter().map(|x| x.to_string()).collect::<Vec<_>>()) } else { format!("c = {c}") };
            *expect.entry(label).or_default() += 1;
        }
        ensure(cls.rejected.len() == rejected, format!("{key}: rejected {} vs {rejected}", cls.rejected.len()))?;
        ensure(cls.orbits.len() == expect.len(), format!("{key}: {} orbits vs {}", cls.orbits.len(), expect.len()))?;
        for o in &cls.orbits {
            let c = o.representative[z_index].clone();
            ensure(o.members.iter().all(|m| m[z_index] == c), format!("{key}: orbit mixes central characters"))?;
            let label = if c.is_zero() {
                format!("point {:?}", o.representative.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            } else {
                format!("c = {c}")
            };
            ensure(expect.get(&label) == Some(&o.members.len()), format!("{key}: orbit {label} has {} members", o.members.len()))?;
            let ps = &o.polarizing;
            ensure(ps.m0.dim() == e - omega_rank(&g, &o.representative) / 2, format!("{key}: dim m0 identity fails at {label}"))?;
            if definite_sign.is_some() && !c.is_zero() {
                let b = superlie::orbits::branching_multiplicity(ps);
                ensure(b.multiplicity == 2, format!("{key}: branching {} at {label}", b.multiplicity))?;
            }
        }
        // the same identity on a fresh functional
        let l = int_vec(&[1, -1, 1], FieldTag::Q);
        let ps = polarizing_flag(&g, &l).map_err(|x| x.to_string())?;
        ensure(ps.m0.dim() == e - omega_rank(&g, &l) / 2, format!("{key}: dim m0 identity"))?;
        summary.push(format!("{key}: {} orbits, {} rejected", cls.orbits.len(), cls.rejected.len()));
    }
    let t = start.elapsed();
    within(t, 30.0, "orbit classification")?;
    Ok(format!("{}, {:.2}s", summary.join("; "), t.as_secs_f64()))
}

fn nilpotent_vanishing() -> Check {
    let g = entry("n3super")?.algebra;
    let all = g.full_space();
    let g2 = g.bracket_spaces(&all, &all);
    let g3 = g.bracket_spaces(&all, &g2);
    let g4 = g.bracket_spaces(&all, &g3);
    ensure(!g3.is_zero() && g4.is_zero(), "n3super is not 3-step nilpotent")?;
    let i = nilpotent_vanishing_ideal(&g).map_err(|x| x.to_string())?;
    ensure(!i.is_zero(), "vanishing ideal is zero")?;
    let (qt, _) = quotient(&g, &i).map_err(|x| x.to_string())?;
    let qa = qt.full_space();
    let q2 = qt.bracket_spaces(&qa, &qa);
    ensure(!q2.is_zero() && qt.bracket_spaces(&qa, &q2).is_zero(), "quotient is not two-step")?;
    Ok(format!("ideal of dim {}, quotient ({}|{}) two-step", i.dim(), qt.even_dim(), qt.odd_dim()))
}

fn grassmann_derivations() -> Check {
    let s = entry("sl(2,R)")?.algebra;
    let ds = derivations(&s).dim();
    let cs = centroid(&s).dim();
    let mut out = Vec::new();
    for n in [1u32, 2] {
        let computed = derivations(&grassmann_extend(&s, n)).dim();
        let pow = 1usize << n;
        let rhs = ds * pow + cs * (n as usize) * pow;
        ensure(computed == rhs, format!("n = {n}: {computed} vs {rhs}"))?;
        out.push(format!("n={n}: {computed}"));
    }
    ensure(out[0] == "n=1: 8", "dim Der(sl(2,R) ⊗ Λ(1)) ≠ 8")?;
    Ok(out.join(", "))
}

fn hwm_shell() -> Check {
    let e = entry("osp(1|2)")?;
    let g = &e.algebra;
    let h0 = e.cartan_hint.clone().ok_or("no Cartan hint")?;
    let c = cartan_subsuperalgebra(g, &h0).map_err(|x| x.to_string())?;
    let rd = root_decomposition(g, &c).map_err(|x| x.to_string())?;
    let pos = positive_system(&rd, &h0.basis()[0]).map_err(|x| x.to_string())?;
    ensure(pos.len() == 2, "Δ⁺ should have two roots")?;
    let double = |x: &Scalar| x * &Scalar::from_int(2, x.tag());
    let alpha = pos.iter().map(|a| a[0].clone()).find(|a| pos.iter().any(|b| b[0] == double(a))).ok_or("Δ⁺ ≠ {α, 2α}")?;
    let odd_root = rd.root(&[alpha.clone()]).map(|r| r.odd.dim()) == Some(1);
    ensure(odd_root, "α should be odd")?;
    let depth = 4usize;
    let t = build_truncated(&rd, &pos, &TModule::new(vec![Scalar::zero(FieldTag::Q)], 1), depth).map_err(|x| x.to_string())?;
    // f_α^ε f_{2α}^k with ε ≤ 1 and ε + k ≤ depth
    let mut expect: BTreeMap<i64, usize> = BTreeMap::new();
    for eps in 0..=1i64 {
        for k in 0..=depth as i64 {
            if eps + k <= depth as i64 {
                *expect.entry(eps + 2 * k).or_default() += 1;
            }
        }
    }
    ensure(t.table.len() == expect.len(), format!("{} weights vs {}", t.table.len(), expect.len()))?;
    for (m, mult) in &expect {
        let w = vec![-(&alpha * &Scalar::from_int(*m, alpha.tag()))];
        ensure(t.multiplicity(&w) == *mult, format!("multiplicity at λ − {m}α"))?;
    }
    ensure(t.check_cone(), "cone membership")?;
    let ms: Vec<i64> = expect.keys().copied().collect();
    Ok(format!("weights λ − mα for m = {}..{}, multiplicities {:?}", ms[0], ms[ms.len() - 1], expect.values().collect::<Vec<_>>()))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_superlie");
    let runs: &[&[&str]] = &[
        &["validate", "--catalog", "h(1)"],
        &["star-reduced", "--catalog", "su(1,1|1,1)"],
        &["cone-check", "--catalog", "cl(1|2,+-)"],
        &["orbit-classify", "--catalog", "hc(2|2,++)", "--box", "central"],
        &["polarize", "--catalog", "hc(2|2,++)", "--lambda", "0,0,1"],
        &["clifford", "--catalog", "cl(1|2,++)", "--lambda", "1"],
        &["roots", "--catalog", "su(2|1)"],
        &["hwm", "--catalog", "osp(1|2)", "--x0", "0,1,-1", "--depth", "4"],
        &["catalog", "list"],
    ];
    for args in runs {
        let a = Command::new(bin).args(*args).output().map_err(|e| e.to_string())?;
        let b = Command::new(bin).args(*args).output().map_err(|e| e.to_string())?;
        ensure(a.status.code() == Some(0), format!("{args:?} exited {:?}", a.status.code()))?;
        ensure(a.stdout == b.stdout && a.status.code() == b.status.code(), format!("{args:?} differs between runs"))?;
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
        for f in ["schema_version", "version", "command", "status", "inputs", "budgets", "results"] {
            ensure(v.get(f).is_some(), format!("{args:?}: report lacks {f}"))?;
        }
    }
    let star: serde_json::Value = serde_json::from_slice(&Command::new(bin).args(["star-reduced", "--catalog", "su(1,1|1,1)"]).output().unwrap().stdout).unwrap();
    ensure(star["status"] == "OBSTRUCTED", "su(1,1|1,1) not obstructed")?;
    let orb: serde_json::Value =
        serde_json::from_slice(&Command::new(bin).args(["orbit-classify", "--catalog", "hc(2|2,++)", "--box", "central"]).output().unwrap().stdout).unwrap();
    ensure(orb["results"]["family_count"] == 2, "hc(2|2,++) central box should give 2 orbit families")?;
    Ok(format!("{} invocations byte-identical on repeat", runs.len()))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("axiom suite", axiom_suite),
        ("Cartan subsuperalgebras from even Cartans", cartan_bijection),
        ("root symmetry and decomposition", root_decompositions),
        ("su(1,1|1,1) root hull", su_hull),
        ("sq(1,1) projected cone witnesses", sq_witnesses),
        ("Heisenberg-Clifford classification", heisenberg_clifford),
        ("orbit method on h(1) and hc(2|2)", orbit_method),
        ("nilpotent vanishing ideal", nilpotent_vanishing),
        ("derivations of Grassmann extensions", grassmann_derivations),
        ("highest-weight shell for osp(1|2)", hwm_shell),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{secs:.2}s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

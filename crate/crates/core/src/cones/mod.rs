//! The cone generated by odd squares: positive-definite certificates,
//! isotropic vectors, lines, and the star-reduced obstruction battery.

pub mod lp;

use std::cmp::Ordering;
use std::ops::ControlFlow;

use num::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::{
    cartan_subalgebra_even, cartan_subsuperalgebra, fixed_point_projection, is_compactly_embedded, is_elliptic,
    root_decomposition, scan_integer_points, CartanSearch, RootDatum,
};
use crate::error::{Error, Result};
use crate::exactnum::{split_rational, FieldTag, Poly, Rat, Scalar};
use crate::glinalg::{conj_vec, is_zero_vec, vec_add, vec_scale, Mat, Subspace, Vector};
use crate::lsa::LieSuperalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConeStatus {
    PointedCertified,
    LineFound,
    IsotropicFound,
    Undetermined,
}

/// `Σ weights[i]·[X_i, X_i] = 0` with `v = weights[0]·[X_0, X_0] ≠ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineWitness {
    pub generators: Vec<Vector>,
    pub weights: Vec<Scalar>,
    pub v: Vector,
    pub minus_v: Vector,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeCertificate {
    pub status: ConeStatus,
    /// Functional on the even part with `M(λ)` positive definite.
    pub lambda: Option<Vector>,
    pub leading_minors: Option<Vec<Scalar>>,
    pub isotropic: Option<Vector>,
    pub line: Option<LineWitness>,
    pub candidates_scanned: usize,
    pub climb_steps: usize,
}

impl ConeCertificate {
    fn undetermined() -> ConeCertificate {
        ConeCertificate {
            status: ConeStatus::Undetermined,
            lambda: None,
            leading_minors: None,
            isotropic: None,
            line: None,
            candidates_scanned: 0,
            climb_steps: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PdBudget {
    pub bound: i64,
    pub climb_steps: usize,
}

impl Default for PdBudget {
    fn default() -> Self {
        PdBudget { bound: 3, climb_steps: 200 }
    }
}

/// `[X, X]` for purely odd `X`.
pub fn odd_square(g: &LieSuperalgebra, x: &[Scalar]) -> Result<Vector> {
    if g.odd_dim() == 0 || x.len() != g.dim() || x[..g.even_dim()].iter().any(|c| !c.is_zero()) {
        return Err(Error::InvalidInput("odd_square needs a purely odd vector".into()));
    }
    Ok(g.bracket(x, x))
}

/// `M(λ)[i][j] = λ([f_i, f_j])` over the odd basis; `λ` has even coordinates.
pub fn odd_form(g: &LieSuperalgebra, lambda: &[Scalar]) -> Mat {
    let e = g.even_dim();
    let k = g.odd_dim();
    let tag = lambda.first().map_or(g.tag(), |s| s.tag());
    let mut m = Mat::zeros(k, k, tag);
    for i in 0..k {
        for j in 0..k {
            let mut s = Scalar::zero(tag);
            for (c, v) in g.bracket_basis(e + i, e + j) {
                if *c < e {
                    s = &s + &(&lambda[*c] * &v.lift(tag).expect("structure constants embed"));
                }
            }
            m.set(i, j, s);
        }
    }
    m
}

/// Pivots of symmetric Gaussian elimination, stopping after the first
/// pivot that is not positive.
pub fn pd_pivots(m: &Mat) -> Vec<Scalar> {
    let n = m.rows();
    let mut a = m.clone();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let p = a.get(k, k).clone();
        let positive = p.is_real() && p.real_sign() == Some(Ordering::Greater);
        out.push(p.clone());
        if !positive {
            break;
        }
        let inv = p.inv().expect("nonzero pivot");
        for i in k + 1..n {
            let f = a.get(i, k) * &inv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &(&f * a.get(k, j));
                a.set(i, j, v);
            }
        }
    }
    out
}

pub fn is_positive_definite(m: &Mat) -> bool {
    let p = pd_pivots(m);
    p.len() == m.rows() && p.iter().all(|x| x.is_real() && x.real_sign() == Some(Ordering::Greater))
}

/// Leading principal minors by determinants.
pub fn leading_minors(m: &Mat) -> Vec<Scalar> {
    (1..=m.rows())
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            m.submatrix(&idx, &idx).det()
        })
        .collect()
}

fn all_positive(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_real() && x.real_sign() == Some(Ordering::Greater))
}

/// Rational coordinates of scalars in the tower basis `{1, i, √d, i√d}`.
fn flatten(v: &[Scalar]) -> Vec<Rat> {
    v.iter().flat_map(|s| s.coords().iter().cloned()).collect()
}

/// Convex weights `c ≥ 0`, `Σc = 1`, `Σ c_i v_i = 0`, or `None`.
pub fn convex_hull_contains_zero(vectors: &[Vector]) -> Option<Vec<Scalar>> {
    if vectors.is_empty() {
        return None;
    }
    let flat: Vec<Vec<Rat>> = vectors.iter().map(|v| flatten(v)).collect();
    let rows = flat[0].len();
    let mut a: Vec<Vec<Rat>> = (0..rows).map(|r| flat.iter().map(|v| v[r].clone()).collect()).collect();
    let mut b = vec![Rat::from_integer(0.into()); rows];
    a.push(vec![Rat::from_integer(1.into()); vectors.len()]);
    b.push(Rat::from_integer(1.into()));
    let x = lp::feasible_point(&a, &b)?;
    let w: Vec<Scalar> = x.into_iter().map(|r| Scalar::from_rat(r, FieldTag::Q)).collect();
    // re-substitution
    let tag = vectors[0].first().map_or(FieldTag::Q, |s| s.tag());
    let mut sum = vec![Scalar::zero(tag); vectors[0].len()];
    for (c, v) in w.iter().zip(vectors) {
        sum = vec_add(&sum, &vec_scale(v, &c.lift(tag).unwrap()));
    }
    assert!(is_zero_vec(&sum), "LP solution failed re-substitution");
    Some(w)
}

fn unit_odd(g: &LieSuperalgebra, i: usize, tag: FieldTag) -> Vector {
    crate::glinalg::unit_vec(g.dim(), g.even_dim() + i, tag)
}

/// Odd vectors `f_i` and `f_i ± f_j` with their squares.
fn sampled_squares(g: &LieSuperalgebra) -> Vec<(Vector, Vector)> {
    let tag = g.tag();
    let k = g.odd_dim();
    let mut out = Vec::new();
    for i in 0..k {
        let x = unit_odd(g, i, tag);
        out.push((x.clone(), g.bracket(&x, &x)));
    }
    for i in 0..k {
        for j in i + 1..k {
            for s in [1, -1] {
                let x = vec_add(&unit_odd(g, i, tag), &vec_scale(&unit_odd(g, j, tag), &Scalar::from_int(s, tag)));
                out.push((x.clone(), g.bracket(&x, &x)));
            }
        }
    }
    out
}

/// A line `{v, -v}` in the cone from the convex hull of nonzero sampled squares.
pub fn find_line(g: &LieSuperalgebra) -> Option<LineWitness> {
    let samples: Vec<(Vector, Vector)> = sampled_squares(g).into_iter().filter(|(_, s)| !is_zero_vec(s)).collect();
    let squares: Vec<Vector> = samples.iter().map(|(_, s)| s[..g.even_dim()].to_vec()).collect();
    let w = convex_hull_contains_zero(&squares)?;
    let used: Vec<usize> = (0..w.len()).filter(|&i| !w[i].is_zero()).collect();
    let generators: Vec<Vector> = used.iter().map(|&i| samples[i].0.clone()).collect();
    let weights: Vec<Scalar> = used.iter().map(|&i| w[i].clone()).collect();
    let v = vec_scale(&squares[used[0]], &weights[0]);
    let minus_v = used[1..].iter().fold(vec![Scalar::zero(g.tag()); g.even_dim()], |acc, &i| {
        vec_add(&acc, &vec_scale(&squares[i], &w[i]))
    });
    Some(LineWitness { generators, weights, v, minus_v })
}

fn pd_score(m: &Mat) -> (usize, Rat) {
    let p = pd_pivots(m);
    let good = p.iter().take_while(|x| x.is_real() && x.real_sign() == Some(Ordering::Greater)).count();
    let next = p.get(good).and_then(|x| x.as_rational().cloned()).unwrap_or_else(|| Rat::from_integer(0.into()));
    (good, next)
}

fn certify(g: &LieSuperalgebra, lambda: Vector, scanned: usize, steps: usize) -> ConeCertificate {
    let m = odd_form(g, &lambda);
    let minors = leading_minors(&m);
    assert!(all_positive(&minors), "PD certificate failed re-verification");
    ConeCertificate {
        status: ConeStatus::PointedCertified,
        lambda: Some(lambda),
        leading_minors: Some(minors),
        isotropic: None,
        line: None,
        candidates_scanned: scanned,
        climb_steps: steps,
    }
}

/// Search for `λ` with `M(λ)` positive definite: integer scan, then a
/// coordinate hill-climb with step halving. A line found by the hull
/// pre-check rules out such `λ`; it is attached and the search is skipped.
pub fn find_pd_functional(g: &LieSuperalgebra, budget: PdBudget) -> ConeCertificate {
    let e = g.even_dim();
    let tag = g.tag();
    if g.odd_dim() == 0 {
        return certify(g, vec![Scalar::zero(tag); e], 0, 0);
    }
    if let Some(line) = find_line(g) {
        return ConeCertificate { line: Some(line), ..ConeCertificate::undetermined() };
    }
    let k = g.odd_dim();
    let forms: Vec<Mat> = (0..e).map(|c| odd_form(g, &crate::glinalg::unit_vec(e, c, tag))).collect();
    let form_of = |l: &[Rat]| -> Mat {
        let mut m = Mat::zeros(k, k, tag);
        for (c, f) in l.iter().zip(&forms) {
            if !c.is_zero() {
                m = m.add(&f.scale(&Scalar::from_rat(c.clone(), tag)));
            }
        }
        m
    };
    let to_vec = |l: &[Rat]| l.iter().map(|r| Scalar::from_rat(r.clone(), tag)).collect::<Vector>();
    let mut scanned = 0usize;
    let mut best: Option<(Vec<Rat>, (usize, Rat))> = None;
    let hit = scan_integer_points(e, budget.bound, |y| {
        scanned += 1;
        let l: Vec<Rat> = y.iter().map(|&c| Rat::from_integer(c.into())).collect();
        let m = form_of(&l);
        if (0..k).any(|i| m.get(i, i).real_sign() != Some(Ordering::Greater)) {
            return ControlFlow::Continue(());
        }
        let s = pd_score(&m);
        if s.0 == k {
            return ControlFlow::Break(l);
        }
        if best.as_ref().is_none_or(|(_, b)| s > *b) {
            best = Some((l, s));
        }
        ControlFlow::Continue(())
    });
    if let Some(l) = hit {
        return certify(g, to_vec(&l), scanned, 0);
    }
    let (mut cur, mut score) = best.unwrap_or_else(|| {
        let l = vec![Rat::from_integer(0.into()); e];
        let s = pd_score(&form_of(&l));
        (l, s)
    });
    let mut delta = Rat::from_integer(1.into());
    let half = Rat::new(1.into(), 2.into());
    for step in 1..=budget.climb_steps {
        let mut improved = false;
        'outer: for j in 0..e {
            for sgn in [1i64, -1] {
                let mut cand = cur.clone();
                cand[j] += &delta * Rat::from_integer(sgn.into());
                let s = pd_score(&form_of(&cand));
                if s.0 == k {
                    return certify(g, to_vec(&cand), scanned, step);
                }
                if s > score {
                    cur = cand;
                    score = s;
                    improved = true;
                    break 'outer;
                }
            }
        }
        if !improved {
            delta *= &half;
        }
    }
    ConeCertificate { candidates_scanned: scanned, climb_steps: budget.climb_steps, ..ConeCertificate::undetermined() }
}

fn isotropic_cert(x: Vector) -> ConeCertificate {
    ConeCertificate { status: ConeStatus::IsotropicFound, isotropic: Some(x), ..ConeCertificate::undetermined() }
}

/// Nonzero odd `X` with `[X, X] = 0`: basis vectors, `f_i ± f_j`, then real
/// roots of the binary quadratic on each plane `x f_i + y f_j`.
pub fn find_isotropic_odd(g: &LieSuperalgebra) -> ConeCertificate {
    for (x, s) in sampled_squares(g) {
        if is_zero_vec(&s) {
            return isotropic_cert(x);
        }
    }
    let tag = g.tag();
    let k = g.odd_dim();
    for i in 0..k {
        for j in i + 1..k {
            let (fi, fj) = (unit_odd(g, i, tag), unit_odd(g, j, tag));
            // [x fi + fj, x fi + fj] = x² A + 2x B + C
            let a = g.bracket(&fi, &fi);
            let b = g.bracket(&fi, &fj);
            let c = g.bracket(&fj, &fj);
            let Some(r) = (0..g.dim()).find(|&r| !a[r].is_zero()) else { continue };
            let two = Scalar::from_int(2, tag);
            let p = Poly::new(vec![c[r].clone(), &two * &b[r], a[r].clone()], tag);
            let Ok(split) = split_rational(&p) else { continue };
            for x in split.roots {
                if !x.is_real() {
                    continue;
                }
                let f = x.tag();
                let ok = (0..g.dim()).all(|t| {
                    let v = &(&(&x * &x) * &a[t].lift(f).unwrap())
                        + &(&(&two.lift(f).unwrap() * &x) * &b[t].lift(f).unwrap());
                    (&v + &c[t].lift(f).unwrap()).is_zero()
                });
                if ok {
                    let w = vec_add(
                        &vec_scale(&crate::glinalg::lift_vec(&fi, f).unwrap(), &x),
                        &crate::glinalg::lift_vec(&fj, f).unwrap(),
                    );
                    return isotropic_cert(w);
                }
            }
        }
    }
    ConeCertificate::undetermined()
}

/// Ideal generated by `[g₁̄, [g₁̄, g₁̄]]`; zero in every unitary
/// representation of a nilpotent supergroup.
pub fn nilpotent_vanishing_ideal(g: &LieSuperalgebra) -> Result<Subspace> {
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let odd = g.odd_space();
    let s = g.bracket_spaces(&odd, &g.bracket_spaces(&odd, &odd));
    Ok(ideal_generated(g, &s))
}

pub fn ideal_generated(g: &LieSuperalgebra, s: &Subspace) -> Subspace {
    let full = g.full_space();
    let mut cur = s.clone();
    loop {
        let next = cur.sum(&g.bracket_spaces(&full, &cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootForm {
    pub alpha: Vec<Scalar>,
    pub matrix: Vec<Vec<String>>,
    pub positive_definite: bool,
}

/// Hermitian forms `⟨X, Y⟩_α = μ([X, Ȳ])` on the odd root spaces.
pub fn check_root_space_form(g: &LieSuperalgebra, rd: &RootDatum, mu: &[Scalar]) -> Result<Vec<RootForm>> {
    let e = g.even_dim();
    if mu.len() != e {
        return Err(Error::InvalidInput(format!("μ needs {e} even coordinates")));
    }
    for h in rd.cartan.h0.basis() {
        for j in 0..e {
            let v = g.bracket(h, &crate::glinalg::unit_vec(g.dim(), j, g.tag()));
            if !crate::glinalg::dot(&v[..e], mu).is_zero() {
                return Err(Error::Precondition("μ is not fixed by the Cartan action".into()));
            }
        }
    }
    let f = rd.field;
    let mu_f = crate::glinalg::lift_vec(mu, f)?;
    let mut out = Vec::new();
    for r in rd.nonzero() {
        let basis = r.odd.basis();
        let k = basis.len();
        let mut m = Mat::zeros(k, k, f);
        for a in 0..k {
            for b in 0..k {
                let br = g.bracket(&basis[a], &conj_vec(&basis[b]));
                m.set(a, b, crate::glinalg::dot(&br[..e], &mu_f));
            }
        }
        out.push(RootForm { alpha: r.alpha.clone(), positive_definite: is_positive_definite(&m), matrix: m.to_strings() });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StarStatus {
    Obstructed,
    ConeOk,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Obstruction,
    Pass,
    Undetermined,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reason {
    pub check: &'static str,
    pub outcome: Outcome,
    pub detail: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarReport {
    pub status: StarStatus,
    pub reasons: Vec<Reason>,
    pub certificate: ConeCertificate,
    pub compact_cartan: Option<Subspace>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct StarOptions {
    pub budget: PdBudget,
    /// Even Cartan to try first for the root tests.
    pub cartan_hint: Option<Subspace>,
}

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn reason(check: &'static str, outcome: Outcome, detail: impl Into<String>, witness: Value) -> Reason {
    Reason { check, outcome, detail: detail.into(), witness }
}

fn compact_cartan(g: &LieSuperalgebra, opts: &StarOptions) -> Option<Subspace> {
    if let Some(h) = &opts.cartan_hint {
        if is_compactly_embedded(g, h) && cartan_subsuperalgebra(g, h).is_ok() {
            return Some(h.clone());
        }
    }
    if g.even_part().is_nilpotent() {
        let h = g.even_space();
        return is_compactly_embedded(g, &h).then_some(h);
    }
    cartan_subalgebra_even(g, CartanSearch { bound: opts.budget.bound, require_compact: true }).ok()
}

/// Run every check of the battery and collect all reasons.
pub fn star_reduced_report(g: &LieSuperalgebra, opts: &StarOptions) -> StarReport {
    let mut reasons = Vec::new();

    let iso = find_isotropic_odd(g);
    match &iso.isotropic {
        Some(x) => reasons.push(reason(
            "isotropic_odd",
            Outcome::Obstruction,
            "nonzero odd X with [X,X] = 0 acts by zero in every unitary representation",
            json!({ "x": strs(x) }),
        )),
        None => reasons.push(reason("isotropic_odd", Outcome::Undetermined, "no isotropic odd vector in the sampled planes", Value::Null)),
    }

    let cert = find_pd_functional(g, opts.budget);
    if let Some(line) = &cert.line {
        reasons.push(reason(
            "pointed_cone",
            Outcome::Obstruction,
            "zero is a convex combination of nonzero odd squares, so the cone contains a line",
            json!({
                "generators": line.generators.iter().map(|x| strs(x)).collect::<Vec<_>>(),
                "weights": strs(&line.weights),
                "v": strs(&line.v),
                "minus_v": strs(&line.minus_v),
            }),
        ));
    }
    match cert.status {
        ConeStatus::PointedCertified => reasons.push(reason(
            "pd_functional",
            Outcome::Pass,
            "M(λ) positive definite",
            json!({ "lambda": strs(cert.lambda.as_ref().unwrap()), "leading_minors": strs(cert.leading_minors.as_ref().unwrap()) }),
        )),
        _ if cert.line.is_some() => {}
        _ => reasons.push(reason("pd_functional", Outcome::Undetermined, "no positive definite M(λ) within budget", Value::Null)),
    }

    let odd = g.odd_space();
    let generated = g.odd_dim() > 0 && g.bracket_spaces(&odd, &odd) == g.even_space();
    let mut cartan = None;
    if generated {
        let g0 = g.even_part();
        let z: Vec<Vector> = g0
            .center()
            .basis()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.extend(std::iter::repeat_n(Scalar::zero(g.tag()), g.odd_dim()));
                w
            })
            .collect();
        if let Some(bad) = z.iter().find(|k| !is_elliptic(&g.ad(k))) {
            reasons.push(reason(
                "compact_cartan",
                Outcome::Obstruction,
                "the even part is generated by odd brackets but its center is not compactly embedded, so no Cartan subalgebra is",
                json!({ "central_element": strs(bad), "ad_char_poly": g.ad(bad).char_poly().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
            ));
        } else {
            cartan = compact_cartan(g, opts);
            match &cartan {
                Some(h) => reasons.push(reason("compact_cartan", Outcome::Pass, "compactly embedded Cartan subalgebra found", json!({ "h0": h.basis_strings() }))),
                None => reasons.push(reason("compact_cartan", Outcome::Undetermined, "no compactly embedded Cartan within the scan bound", Value::Null)),
            }
        }
    } else {
        reasons.push(reason("compact_cartan", Outcome::Skipped, "even part is not spanned by odd brackets", Value::Null));
        if g.odd_dim() > 0 {
            cartan = compact_cartan(g, opts);
        }
    }

    if let Some(h0) = &cartan {
        root_checks(g, h0, &cert, &mut reasons);
    }

    if g.is_nilpotent() {
        let ideal = nilpotent_vanishing_ideal(g).expect("nilpotent");
        if ideal.is_zero() {
            reasons.push(reason("nilpotent_vanishing", Outcome::Pass, "[g1,[g1,g1]] = 0", Value::Null));
        } else {
            reasons.push(reason(
                "nilpotent_vanishing",
                Outcome::Obstruction,
                "the ideal generated by [g1,[g1,g1]] is nonzero and vanishes in every unitary representation",
                json!({ "ideal": ideal.basis_strings() }),
            ));
        }
    }

    let status = if reasons.iter().any(|r| r.outcome == Outcome::Obstruction) {
        StarStatus::Obstructed
    } else if cert.status == ConeStatus::PointedCertified {
        StarStatus::ConeOk
    } else {
        StarStatus::Undetermined
    };
    StarReport { status, reasons, certificate: cert, compact_cartan: cartan }
}

/// `H_X = [X, τX]` for the odd root vectors of a compact Cartan, and the
/// Hermitian forms for the averaged PD functional.
fn root_checks(g: &LieSuperalgebra, h0: &Subspace, cert: &ConeCertificate, reasons: &mut Vec<Reason>) {
    let rd = match cartan_subsuperalgebra(g, h0).and_then(|c| root_decomposition(g, &c)) {
        Ok(rd) => rd,
        Err(err) => {
            reasons.push(reason("root_hull", Outcome::Undetermined, format!("root decomposition unavailable: {err}"), Value::Null));
            return;
        }
    };
    let e = g.even_dim();
    let mut hs: Vec<Vector> = Vec::new();
    let mut xs: Vec<Vector> = Vec::new();
    for r in rd.nonzero() {
        for x in r.odd.basis() {
            let h = g.bracket(x, &conj_vec(x));
            hs.push(h[..e].to_vec());
            xs.push(x.clone());
        }
    }
    if hs.is_empty() {
        reasons.push(reason("root_hull", Outcome::Pass, "no odd root spaces for nonzero roots", Value::Null));
    } else if let Some(w) = convex_hull_contains_zero(&hs) {
        let used: Vec<usize> = (0..w.len()).filter(|&i| !w[i].is_zero()).collect();
        reasons.push(reason(
            "root_hull",
            Outcome::Obstruction,
            "zero lies in the convex hull of [X, τX] over odd root vectors",
            json!({
                "root_vectors": used.iter().map(|&i| strs(&xs[i])).collect::<Vec<_>>(),
                "h": used.iter().map(|&i| strs(&hs[i])).collect::<Vec<_>>(),
                "weights": used.iter().map(|&i| w[i].to_string()).collect::<Vec<_>>(),
            }),
        ));
    } else {
        reasons.push(reason("root_hull", Outcome::Pass, "zero is not in the hull of the H_X", Value::Null));
    }
    if let Some(lambda) = &cert.lambda {
        if let Ok(p) = fixed_point_projection(g, h0) {
            let mu: Vector = (0..e).map(|j| crate::glinalg::dot(lambda, &p.col(j))).collect();
            if let Ok(forms) = check_root_space_form(g, &rd, &mu) {
                let bad: Vec<&RootForm> = forms.iter().filter(|f| !f.positive_definite).collect();
                if bad.is_empty() {
                    reasons.push(reason("root_forms", Outcome::Pass, "averaged functional gives positive definite root forms", json!({ "mu": strs(&mu) })));
                } else {
                    reasons.push(reason(
                        "root_forms",
                        Outcome::Obstruction,
                        "a root form is not positive definite for the averaged functional",
                        json!({ "mu": strs(&mu), "alpha": strs(&bad[0].alpha) }),
                    ));
                }
            }
        }
    }
}

/// Recheck every witness carried by a certificate from scratch.
pub fn verify_certificate(g: &LieSuperalgebra, cert: &ConeCertificate) -> Result<()> {
    let fail = |m: &str| Err(Error::Invariant(format!("witness re-verification: {m}")));
    if let Some(l) = &cert.lambda {
        if !is_positive_definite(&odd_form(g, l)) {
            return fail("M(λ) is not positive definite");
        }
    }
    if let Some(x) = &cert.isotropic {
        if is_zero_vec(x) || !is_zero_vec(&odd_square(g, x)?) {
            return fail("isotropic vector");
        }
    }
    if let Some(line) = &cert.line {
        let e = g.even_dim();
        let mut sum = vec![Scalar::zero(g.tag()); e];
        for (x, w) in line.generators.iter().zip(&line.weights) {
            if w.real_sign() != Some(Ordering::Greater) {
                return fail("line weights must be positive");
            }
            sum = vec_add(&sum, &vec_scale(&odd_square(g, x)?[..e], w));
        }
        if !is_zero_vec(&sum) || is_zero_vec(&line.v) || !is_zero_vec(&vec_add(&line.v, &line.minus_v)) {
            return fail("line");
        }
    }
    Ok(())
}

fn tag_of_strings<'a>(base: FieldTag, items: impl IntoIterator<Item = &'a Value>) -> FieldTag {
    let mut tag = base;
    for s in items.into_iter().filter_map(Value::as_str) {
        if s.contains('i') && !s.contains("sqrt") || s.contains("i*") {
            tag = tag.with_i();
        }
        if let Some(d) = s.split("sqrt").nth(1).and_then(|r| r.chars().take_while(char::is_ascii_digit).collect::<String>().parse().ok()) {
            tag = tag.join(FieldTag::QSqrt(d)).unwrap_or(tag);
        }
    }
    tag
}

fn parse_vec(v: &Value, tag: FieldTag) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| Error::Invariant("witness vector is not an array".into()))?
        .iter()
        .map(|x| crate::lsa::scalar_from_json(x, tag))
        .collect()
}

/// Recheck the certificate and the JSON witnesses of a star report.
pub fn verify_star_witnesses(g: &LieSuperalgebra, report: &StarReport) -> Result<()> {
    verify_certificate(g, &report.certificate)?;
    let e = g.even_dim();
    let fail = |m: &str| Err(Error::Invariant(format!("witness re-verification: {m}")));
    for r in report.reasons.iter().filter(|r| r.outcome == Outcome::Obstruction) {
        match r.check {
            "isotropic_odd" => {
                let x = parse_vec(&r.witness["x"], g.tag())?;
                if is_zero_vec(&x) || !is_zero_vec(&odd_square(g, &x)?) {
                    return fail("isotropic_odd");
                }
            }
            "root_hull" => {
                let w = &r.witness;
                let all = w["root_vectors"].as_array().into_iter().flatten().chain(w["h"].as_array().into_iter().flatten());
                let tag = tag_of_strings(g.tag().with_i(), all.flat_map(|v| v.as_array().into_iter().flatten()));
                let gl = g.lift(tag)?;
                let xs = w["root_vectors"].as_array().cloned().unwrap_or_default();
                let ws = w["weights"].as_array().cloned().unwrap_or_default();
                if xs.is_empty() || xs.len() != ws.len() {
                    return fail("root_hull shape");
                }
                let mut sum = vec![Scalar::zero(tag); e];
                let mut total = Scalar::zero(tag);
                for (x, c) in xs.iter().zip(&ws) {
                    let x = parse_vec(x, tag)?;
                    let c = crate::lsa::scalar_from_json(c, tag)?;
                    if c.real_sign() != Some(Ordering::Greater) {
                        return fail("root_hull weights must be positive");
                    }
                    let h = gl.bracket(&x, &conj_vec(&x));
                    sum = vec_add(&sum, &vec_scale(&h[..e], &c));
                    total = &total + &c;
                }
                if !is_zero_vec(&sum) || !total.is_one() {
                    return fail("root_hull combination");
                }
            }
            "compact_cartan" => {
                let z = parse_vec(&r.witness["central_element"], g.tag())?;
                if is_elliptic(&g.ad(&z)) {
                    return fail("compact_cartan");
                }
            }
            _ => {}
        }
    }
    Ok(())
}

/// Convex combination check on explicit even vectors, reporting the first
/// nonzero weight's pair `(v, -v)`.
pub fn line_from_hull(vectors: &[Vector]) -> Option<(Vector, Vector)> {
    let w = convex_hull_contains_zero(vectors)?;
    let i = w.iter().position(|c| !c.is_zero())?;
    let tag = vectors[0][0].tag();
    let v = vec_scale(&vectors[i], &w[i].lift(tag).unwrap());
    let mut rest = vec![Scalar::zero(tag); v.len()];
    for (j, c) in w.iter().enumerate() {
        if j != i {
            rest = vec_add(&rest, &vec_scale(&vectors[j], &c.lift(tag).unwrap()));
        }
    }
    debug_assert!(is_zero_vec(&vec_add(&v, &rest)));
    Some((v, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::glinalg::int_vec;

    fn q(v: &[i64]) -> Vector {
        int_vec(v, FieldTag::Q)
    }

    #[test]
    fn odd_square_examples() {
        let cl1 = build("cl(1|1,+)").unwrap().algebra;
        assert_eq!(odd_square(&cl1, &q(&[0, 1])).unwrap(), q(&[1, 0]));
        let cl2 = build("cl(1|2,+-)").unwrap().algebra;
        assert_eq!(odd_square(&cl2, &q(&[0, 1, 1])).unwrap(), q(&[0, 0, 0]));
        let h = build("h(1)").unwrap().algebra;
        assert!(odd_square(&h, &q(&[1, 0, 0])).is_err());
    }

    #[test]
    fn pd_functional_examples() {
        let cl = build("cl(1|2,++)").unwrap().algebra;
        let c = find_pd_functional(&cl, PdBudget::default());
        assert_eq!(c.status, ConeStatus::PointedCertified);
        assert_eq!(odd_form(&cl, c.lambda.as_ref().unwrap()), Mat::identity(2, FieldTag::Q));
        let ind = build("cl(1|2,+-)").unwrap().algebra;
        let c = find_pd_functional(&ind, PdBudget::default());
        assert_eq!(c.status, ConeStatus::Undetermined);
        assert_eq!(find_isotropic_odd(&ind).status, ConeStatus::IsotropicFound);
        let hc = build("hc(2|2,++)").unwrap().algebra;
        let c = find_pd_functional(&hc, PdBudget::default());
        assert_eq!(c.lambda.unwrap(), q(&[0, 0, 1]));
    }

    #[test]
    fn pd_functional_needs_climb_or_scan() {
        let osp = build("osp(1|2)").unwrap().algebra;
        let c = find_pd_functional(&osp, PdBudget::default());
        assert_eq!(c.status, ConeStatus::PointedCertified);
        assert!(is_positive_definite(&odd_form(&osp, c.lambda.as_ref().unwrap())));
    }

    #[test]
    fn isotropic_examples() {
        let sl = build("sl(2,R)").unwrap().algebra;
        let ext = crate::lsa::grassmann_extend(&sl, 1);
        let c = find_isotropic_odd(&ext);
        assert_eq!(c.status, ConeStatus::IsotropicFound);
        let x = c.isotropic.unwrap();
        assert!(is_zero_vec(&ext.bracket(&x, &x)));
        let cl = build("cl(1|1,+)").unwrap().algebra;
        assert_eq!(find_isotropic_odd(&cl).status, ConeStatus::Undetermined);
    }

    #[test]
    fn isotropic_on_a_surd_plane() {
        // [f1,f1] = Z, [f2,f2] = -2Z: x f1 + f2 is isotropic for x = ±√2
        let mut g = LieSuperalgebra::abelian("t", vec!["Z".into(), "f1".into(), "f2".into()], 1, FieldTag::Q);
        g.set_bracket(1, 1, vec![(0, Scalar::one(FieldTag::Q))]);
        g.set_bracket(2, 2, vec![(0, Scalar::from_int(-2, FieldTag::Q))]);
        let x = find_isotropic_odd(&g).isotropic.unwrap();
        assert_eq!(x[1].tag(), FieldTag::QSqrt(2));
        assert!(is_zero_vec(&g.bracket(&x, &x)));
    }

    #[test]
    fn hull_examples() {
        assert_eq!(
            convex_hull_contains_zero(&[q(&[1, 2]), q(&[-1, -2])]).unwrap(),
            vec![Scalar::from_frac(1, 2, FieldTag::Q), Scalar::from_frac(1, 2, FieldTag::Q)]
        );
        assert!(convex_hull_contains_zero(&[q(&[1, 0]), q(&[0, 1])]).is_none());
    }

    #[test]
    fn su_root_vector_hull() {
        let e = build("su(1,1|1,1)").unwrap();
        let mut hs = Vec::new();
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let rv = crate::catalog::root_vectors_su(1, 1, 1, 1, a, b).unwrap();
            hs.push(crate::catalog::real_coords(&e, &rv.h).unwrap());
        }
        let w = convex_hull_contains_zero(&hs).unwrap();
        assert_eq!(w, vec![Scalar::from_frac(1, 4, FieldTag::Q); 4]);
    }

    #[test]
    fn vanishing_ideals() {
        let hc = build("hc(2|2,++)").unwrap().algebra;
        assert!(nilpotent_vanishing_ideal(&hc).unwrap().is_zero());
        let cl = build("cl(1|3,+-+)").unwrap().algebra;
        assert!(nilpotent_vanishing_ideal(&cl).unwrap().is_zero());
        let n3 = build("n3super").unwrap().algebra;
        let i = nilpotent_vanishing_ideal(&n3).unwrap();
        assert!(!i.is_zero());
        let (quot, _) = crate::lsa::quotient(&n3, &i).unwrap();
        assert_eq!(quot.lower_central_series().len(), 3);
        assert!(nilpotent_vanishing_ideal(&build("sl(2,R)").unwrap().algebra).is_err());
    }

    #[test]
    fn star_examples() {
        let opts = StarOptions::default();
        assert_eq!(star_reduced_report(&build("hc(2|2,++)").unwrap().algebra, &opts).status, StarStatus::ConeOk);
        let r = star_reduced_report(&build("cl(1|2,+-)").unwrap().algebra, &opts);
        assert_eq!(r.status, StarStatus::Obstructed);
        assert_eq!(r.reasons[0].outcome, Outcome::Obstruction);
        let su = build("su(1,1|1,1)").unwrap();
        let r = star_reduced_report(&su.algebra, &StarOptions { cartan_hint: su.cartan_hint.clone(), ..Default::default() });
        assert_eq!(r.status, StarStatus::Obstructed);
        assert!(r.reasons.iter().any(|x| x.check == "root_hull" && x.outcome == Outcome::Obstruction));
    }

    #[test]
    fn su_root_forms_fail_for_fixed_functionals() {
        let su = build("su(1,1|1,1)").unwrap();
        let g = &su.algebra;
        let c = cartan_subsuperalgebra(g, su.cartan_hint.as_ref().unwrap()).unwrap();
        let rd = root_decomposition(g, &c).unwrap();
        let p = fixed_point_projection(g, &c.h0).unwrap();
        let e = g.even_dim();
        // a few h0-fixed functionals λ∘p
        for seed in [[1i64, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0], [1, 2, -1, 3, 0, 1, 1]] {
            let l = q(&seed[..e]);
            let mu: Vector = (0..e).map(|j| crate::glinalg::dot(&l, &p.col(j))).collect();
            let forms = check_root_space_form(g, &rd, &mu).unwrap();
            assert!(forms.iter().any(|f| !f.positive_definite));
        }
        assert!(check_root_space_form(g, &rd, &q(&[1, 1, 1, 1, 1, 1, 1])).is_err() || e != 7);
    }
}

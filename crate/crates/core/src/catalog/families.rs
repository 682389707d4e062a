use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};
use crate::glinalg::{Mat, Subspace};
use crate::lsa::LieSuperalgebra;

use super::realization::{
    algebra_from_realization, blocks, ci, from_blocks, ipq, j_matrix, matrix_label, real_form_basis, unit_matrix,
    Constraint, Realization,
};
use super::registry::{Args, Family};
use super::{CatalogEntry, Expected};

const QI: FieldTag = FieldTag::QI;
const MAX_SIZE: usize = 6;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SIZE {
        return Err(bad(format!("matrix size {n} outside 1..={MAX_SIZE}")));
    }
    Ok(())
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    if n == 1 {
        vec![prefix.to_string()]
    } else {
        (1..=n).map(|k| format!("{prefix}{k}")).collect()
    }
}

fn signature(s: &str, d: usize) -> Result<Vec<i64>> {
    if s.len() != d || !s.chars().all(|c| c == '+' || c == '-') {
        return Err(bad(format!("signature `{s}` must be {d} characters from + and -")));
    }
    Ok(s.chars().map(|c| if c == '+' { 1 } else { -1 }).collect())
}

fn entry(key: String, family: &str, algebra: LieSuperalgebra, expected: Expected) -> CatalogEntry {
    CatalogEntry { key, family: family.into(), algebra, realization: None, cartan_hint: None, expected }
}

/// Even and odd real-form bases under the constraints, assembled into an algebra.
fn matrix_algebra(
    name: &str,
    parities: Vec<u8>,
    constraints: &[Constraint],
) -> Result<(LieSuperalgebra, Realization)> {
    let n = parities.len();
    let mut basis = real_form_basis(n, &parities, 0, constraints);
    basis.extend(real_form_basis(n, &parities, 1, constraints));
    let real = Realization { size: n, parities, basis };
    let g = algebra_from_realization(name, &real, None)?;
    Ok((g, real))
}

fn block_parities(m: usize, n: usize) -> Vec<u8> {
    let mut p = vec![0u8; m];
    p.extend(vec![1u8; n]);
    p
}

fn supertrace(m: usize) -> Constraint<'static> {
    Box::new(move |x: &Mat| {
        let mut t = Scalar::zero(QI);
        for k in 0..x.rows() {
            t = if k < m { &t + x.get(k, k) } else { &t - x.get(k, k) };
        }
        Mat::scalar(1, &t)
    })
}

fn real_entries() -> Constraint<'static> {
    Box::new(|x: &Mat| x.sub(&x.conj()))
}

/// `su(p,q|r,s)` fixed points; the odd block `C` is determined by `B`.
pub fn su_tau(p: usize, q: usize, r: usize, s: usize, x: &Mat) -> Mat {
    let m = p + q;
    if r + s == 0 {
        let i1 = ipq(p, q);
        return i1.mul(&x.adjoint()).mul(&i1).neg();
    }
    let (a, b, c, d) = blocks(x, m);
    let (i1, i2) = (ipq(p, q), ipq(r, s));
    let i = Scalar::i(QI);
    from_blocks(
        &i1.mul(&a.adjoint()).mul(&i1).neg(),
        &i1.mul(&c.adjoint()).mul(&i2).scale(&i),
        &i2.mul(&b.adjoint()).mul(&i1).scale(&i),
        &i2.mul(&d.adjoint()).mul(&i2).neg(),
    )
}

pub fn build_su(p: usize, q: usize, r: usize, s: usize) -> Result<(LieSuperalgebra, Realization)> {
    let m = p + q;
    check_size(m + r + s)?;
    if m == 0 {
        return Err(bad("su needs p + q > 0"));
    }
    let name = if r + s == 0 { format!("su({p},{q})") } else { format!("su({p},{q}|{r},{s})") };
    let cons: Vec<Constraint> =
        vec![Box::new(move |x: &Mat| su_tau(p, q, r, s, x).sub(x)), supertrace(m)];
    matrix_algebra(&name, block_parities(m, r + s), &cons)
}

/// `τ` of `osp(p,q|2n)` on the complex supermatrix.
pub fn osp_tau(p: usize, q: usize, x: &Mat) -> Mat {
    let (a, b, c, d) = blocks(x, p + q);
    let i1 = ipq(p, q);
    from_blocks(&i1.mul(&a.conj()).mul(&i1), &i1.mul(&b.conj()), &c.conj().mul(&i1), &d.conj())
}

/// Orthosymplectic condition; zero exactly on `osp(m|2n, C)`.
pub fn osp_phi(m: usize, n: usize, x: &Mat) -> Mat {
    let (a, b, c, d) = blocks(x, m);
    let j = j_matrix(n);
    from_blocks(
        &a.transpose().neg(),
        &c.transpose().mul(&j).neg(),
        &j.mul(&b.transpose()).neg(),
        &j.mul(&d.transpose()).mul(&j),
    )
}

pub fn build_osp(p: usize, q: usize, n: usize) -> Result<(LieSuperalgebra, Realization)> {
    let m = p + q;
    check_size(m + 2 * n)?;
    if m == 0 || n == 0 {
        return Err(bad("osp needs p + q > 0 and n > 0"));
    }
    let name = if q == 0 { format!("osp({p}|{})", 2 * n) } else { format!("osp({p},{q}|{})", 2 * n) };
    let cons: Vec<Constraint> = vec![
        Box::new(move |x: &Mat| osp_phi(m, n, x).sub(x)),
        Box::new(move |x: &Mat| osp_tau(p, q, x).sub(x)),
    ];
    matrix_algebra(&name, block_parities(m, 2 * n), &cons)
}

/// Basis of `u(p,q) = {X : X = -I X* I}`.
pub fn u_basis(p: usize, q: usize) -> Vec<Mat> {
    let n = p + q;
    let cons: Vec<Constraint> = vec![Box::new(move |x: &Mat| {
        let i1 = ipq(p, q);
        i1.mul(&x.adjoint()).mul(&i1).neg().sub(x)
    })];
    real_form_basis(n, &vec![0; n], 0, &cons)
}

/// `sq(p,q)`: even copy `A` and odd copy `B` of `u(p,q)`, realized as
/// `[[A, ζ⁻¹B], [ζ⁻¹B, A]]` with `ζ² = i`.
pub fn build_sq(p: usize, q: usize) -> Result<LieSuperalgebra> {
    check_size(2 * (p + q))?;
    let ub = u_basis(p, q);
    let k = ub.len();
    let real = Realization { size: p + q, parities: vec![0; p + q], basis: ub.clone() };
    let mut nm: Vec<String> = ub.iter().map(matrix_label).collect();
    nm.extend(ub.iter().map(|b| format!("Q[{}]", matrix_label(b))));
    let coords = |m: &Mat| real.real_coords(m).ok_or_else(|| Error::Invariant("sq bracket leaves u(p,q)".into()));
    let mi = -Scalar::i(QI);
    let mut table = vec![Vec::new(); 4 * k * k];
    for a in 0..2 * k {
        for b in 0..2 * k {
            let (x, y) = (&ub[a % k], &ub[b % k]);
            let (v, shift) = match (a < k, b < k) {
                (true, true) => (coords(&x.commutator(y))?, 0),
                (true, false) | (false, true) => (coords(&x.commutator(y))?, k),
                (false, false) => (coords(&x.anticommutator(y).scale(&mi))?, 0),
            };
            let mut full = vec![Scalar::zero(FieldTag::Q); 2 * k];
            for (t, c) in v.into_iter().enumerate() {
                full[t + shift] = c;
            }
            table[a * 2 * k + b] = full;
        }
    }
    Ok(LieSuperalgebra::from_fn(&format!("sq({p},{q})"), nm, k, FieldTag::Q, |a, b| table[a * 2 * k + b].clone()))
}

/// Coordinates in `sq(p,q)` of the pair `(A, B)` of `u(p,q)` matrices.
pub fn sq_coords(p: usize, q: usize, even: Option<&Mat>, odd: Option<&Mat>) -> Result<Vec<Scalar>> {
    let ub = u_basis(p, q);
    let real = Realization { size: p + q, parities: vec![0; p + q], basis: ub.clone() };
    let zero = vec![Scalar::zero(FieldTag::Q); ub.len()];
    let get = |m: Option<&Mat>| -> Result<Vec<Scalar>> {
        match m {
            None => Ok(zero.clone()),
            Some(m) => real.real_coords(m).ok_or_else(|| bad("matrix is not in u(p,q)")),
        }
    };
    let mut v = get(even)?;
    v.extend(get(odd)?);
    Ok(v)
}

/// `q̄(m)` before the quotient by its center.
pub fn build_qbar(m: usize) -> Result<(LieSuperalgebra, Realization)> {
    check_size(2 * m)?;
    let cons: Vec<Constraint> = vec![
        Box::new(move |x: &Mat| {
            let (a, b, c, d) = blocks(x, m);
            from_blocks(&d.conj(), &c.conj(), &b.conj(), &a.conj()).sub(x)
        }),
        supertrace(m),
    ];
    matrix_algebra(&format!("qbar({m})"), block_parities(m, m), &cons)
}

/// `up(m)` before the quotient by its center.
pub fn build_up(m: usize) -> Result<(LieSuperalgebra, Realization)> {
    check_size(2 * m)?;
    let cons: Vec<Constraint> = vec![
        Box::new(move |x: &Mat| {
            let (a, b, c, d) = blocks(x, m);
            from_blocks(&d.adjoint().neg(), &b.adjoint(), &c.adjoint().neg(), &a.adjoint().neg()).sub(x)
        }),
        supertrace(m),
    ];
    matrix_algebra(&format!("up({m})"), block_parities(m, m), &cons)
}

pub fn heisenberg(n: usize) -> LieSuperalgebra {
    let mut nm = names("X", n);
    nm.extend(names("Y", n));
    nm.push("Z".into());
    let mut g = LieSuperalgebra::abelian(&format!("h({n})"), nm, 2 * n + 1, FieldTag::Q);
    for j in 0..n {
        g.set_graded(j, n + j, vec![(2 * n, Scalar::one(FieldTag::Q))]);
    }
    g
}

/// `[X_j, Y_j] = Z`, `[f_i, f_j] = δ_ij ε_i Z`.
pub fn heisenberg_clifford(n: usize, sig: &[i64]) -> LieSuperalgebra {
    let d = sig.len();
    let mut nm = if n == 0 { Vec::new() } else { names("X", n) };
    if n > 0 {
        nm.extend(names("Y", n));
    }
    nm.push("Z".into());
    nm.extend(names("f", d).into_iter().map(|s| if d == 1 { "f1".into() } else { s }));
    let z = 2 * n;
    let name = if n == 0 { format!("cl(1|{d})") } else { format!("hc({}|{d})", 2 * n) };
    let mut g = LieSuperalgebra::abelian(&name, nm, 2 * n + 1, FieldTag::Q);
    for j in 0..n {
        g.set_graded(j, n + j, vec![(z, Scalar::one(FieldTag::Q))]);
    }
    for (k, e) in sig.iter().enumerate() {
        g.set_bracket(z + 1 + k, z + 1 + k, vec![(z, Scalar::from_int(*e, FieldTag::Q))]);
    }
    g
}

pub fn sl2r() -> LieSuperalgebra {
    let q = FieldTag::Q;
    let mut g = LieSuperalgebra::abelian("sl(2,R)", vec!["H".into(), "E".into(), "F".into()], 3, q);
    g.set_graded(0, 1, vec![(1, Scalar::from_int(2, q))]);
    g.set_graded(0, 2, vec![(2, Scalar::from_int(-2, q))]);
    g.set_graded(1, 2, vec![(0, Scalar::one(q))]);
    g
}

/// Strictly upper triangular `gl(2|2)` with row parities `(0,1,0,1)`.
pub fn n3super() -> Result<(LieSuperalgebra, Realization)> {
    let e = |r: usize, c: usize| unit_matrix(4, r - 1, c - 1, ci(1, 0));
    let real = Realization {
        size: 4,
        parities: vec![0, 1, 0, 1],
        basis: vec![e(1, 3), e(2, 4), e(1, 2), e(1, 4), e(2, 3), e(3, 4)],
    };
    let g = algebra_from_realization("n3super", &real, None)?;
    Ok((g, real))
}

fn usize_arg(s: &str) -> Result<usize> {
    s.trim().parse::<usize>().map_err(|_| bad(format!("expected a nonnegative integer, got `{s}`")))
}

fn ints(group: &[String]) -> Result<Vec<usize>> {
    group.iter().map(|s| usize_arg(s)).collect()
}

fn expect(dims: (usize, usize), nilpotent: bool) -> Expected {
    Expected { dims, nilpotent, simple: None, verdict: None, centroid_dim: None, real_form: None }
}

pub struct Heisenberg;
impl Family for Heisenberg {
    fn name(&self) -> &'static str {
        "h"
    }
    fn synopsis(&self) -> &'static str {
        "h(n): Heisenberg Lie algebra of dimension 2n+1"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["h(1)", "h(2)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let n = args.single_int()?;
        if n == 0 || n > 4 {
            return Err(bad("h(n) needs 1 <= n <= 4"));
        }
        let mut e = expect((2 * n + 1, 0), true);
        e.verdict = Some("CONE_OK");
        Ok(entry(format!("h({n})"), self.name(), heisenberg(n), e))
    }
}

pub struct Clifford;
impl Family for Clifford {
    fn name(&self) -> &'static str {
        "cl"
    }
    fn synopsis(&self) -> &'static str {
        "cl(1|d,SIG): central extension with [f_i,f_i] = ±Z, SIG a string of d signs"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["cl(1|1,+)", "cl(1|2,++)", "cl(1|2,+-)", "cl(1|3,+++)", "cl(1|4,++++)", "cl(1|4,++--)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        if g.len() != 2 || g[0].len() != 1 || usize_arg(&g[0][0])? != 1 || g[1].is_empty() || g[1].len() > 2 {
            return Err(bad("expected cl(1|d) or cl(1|d,SIG)"));
        }
        let d = usize_arg(&g[1][0])?;
        if d == 0 || d > 8 {
            return Err(bad("cl(1|d) needs 1 <= d <= 8"));
        }
        let sig = match g[1].get(1) {
            Some(s) => signature(s, d)?,
            None => vec![1; d],
        };
        let s: String = sig.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect();
        let mut e = expect((1, d), true);
        e.verdict = Some(if sig.iter().all(|&x| x == sig[0]) { "CONE_OK" } else { "OBSTRUCTED" });
        Ok(entry(format!("cl(1|{d},{s})"), self.name(), heisenberg_clifford(0, &sig), e))
    }
}

pub struct HeisenbergClifford;
impl Family for HeisenbergClifford {
    fn name(&self) -> &'static str {
        "hc"
    }
    fn synopsis(&self) -> &'static str {
        "hc(2n|d,SIG): Heisenberg h(n) with d odd generators, [f_i,f_i] = ±Z"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["hc(2|2,++)", "hc(2|2,+-)", "hc(2|1,+)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        if g.len() != 2 || g[0].len() != 1 || g[1].is_empty() || g[1].len() > 2 {
            return Err(bad("expected hc(2n|d) or hc(2n|d,SIG)"));
        }
        let two_n = usize_arg(&g[0][0])?;
        if two_n == 0 || two_n % 2 == 1 || two_n > 6 {
            return Err(bad("hc(2n|d) needs an even 2 <= 2n <= 6"));
        }
        let d = usize_arg(&g[1][0])?;
        if d == 0 || d > 8 {
            return Err(bad("hc(2n|d) needs 1 <= d <= 8"));
        }
        let sig = match g[1].get(1) {
            Some(s) => signature(s, d)?,
            None => vec![1; d],
        };
        let s: String = sig.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect();
        let mut e = expect((two_n + 1, d), true);
        e.verdict = Some(if sig.iter().all(|&x| x == sig[0]) { "CONE_OK" } else { "OBSTRUCTED" });
        Ok(entry(format!("hc({two_n}|{d},{s})"), self.name(), heisenberg_clifford(two_n / 2, &sig), e))
    }
}

pub struct SpecialUnitary;
impl Family for SpecialUnitary {
    fn name(&self) -> &'static str {
        "su"
    }
    fn synopsis(&self) -> &'static str {
        "su(p,q|r,s), su(m|n), su(p,q), su(n): fixed points of the I_{p,q} conjugation in sl(p+q|r+s,C)"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["su(2)", "su(2|1)", "su(1,1|1,1)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        let (p, q, r, s) = match (g.len(), g.first().map(Vec::len), g.get(1).map(Vec::len)) {
            (1, Some(1), _) => (usize_arg(&g[0][0])?, 0, 0, 0),
            (1, Some(2), _) => {
                let v = ints(&g[0])?;
                (v[0], v[1], 0, 0)
            }
            (2, Some(1), Some(1)) => (usize_arg(&g[0][0])?, 0, usize_arg(&g[1][0])?, 0),
            (2, Some(2), Some(2)) => {
                let (a, b) = (ints(&g[0])?, ints(&g[1])?);
                (a[0], a[1], b[0], b[1])
            }
            _ => return Err(bad("expected su(n), su(p,q), su(m|n) or su(p,q|r,s)")),
        };
        let (alg, real) = build_su(p, q, r, s)?;
        let m = p + q;
        let k = r + s;
        let dims = (m * m + k * k - 1, 2 * m * k);
        let mut e = expect(dims, false);
        let key = alg.name().to_string();
        if k == 0 {
            e.simple = Some(true);
            e.centroid_dim = Some(1);
            e.verdict = Some("CONE_OK");
        } else if m != k {
            e.simple = Some(true);
            e.centroid_dim = Some(1);
            e.real_form = Some("su(p,q|r,s)");
        } else {
            e.simple = Some(false);
            e.real_form = Some("psu(p,q|r,s)");
        }
        if p > 0 && q > 0 && r > 0 && s > 0 {
            e.verdict = Some("OBSTRUCTED");
        }
        let mut out = entry(key, self.name(), alg, e);
        out.cartan_hint = Some(real.subspace_supported(|a, b| a == b));
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct Unitary;
impl Family for Unitary {
    fn name(&self) -> &'static str {
        "u"
    }
    fn synopsis(&self) -> &'static str {
        "u(p,q): matrices with X = -I_{p,q} X* I_{p,q}"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["u(1,1)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let (p, q) = args.pair_or_single()?;
        check_size(p + q)?;
        let real = Realization { size: p + q, parities: vec![0; p + q], basis: u_basis(p, q) };
        let alg = algebra_from_realization(&format!("u({p},{q})"), &real, None)?;
        let n = p + q;
        let mut e = expect((n * n, 0), false);
        e.verdict = Some("CONE_OK");
        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
        out.cartan_hint = Some(real.subspace_supported(|a, b| a == b));
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct Orthosymplectic;
impl Family for Orthosymplectic {
    fn name(&self) -> &'static str {
        "osp"
    }
    fn synopsis(&self) -> &'static str {
        "osp(p,q|2n), osp(m|2n): fixed points of the I_{p,q} conjugation in osp(p+q|2n,C)"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["osp(1|2)", "osp(1,1|2)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        if g.len() != 2 || g[1].len() != 1 || g[0].is_empty() || g[0].len() > 2 {
            return Err(bad("expected osp(m|2n) or osp(p,q|2n)"));
        }
        let pq = ints(&g[0])?;
        let (p, q) = (pq[0], pq.get(1).copied().unwrap_or(0));
        let two_n = usize_arg(&g[1][0])?;
        if two_n % 2 == 1 {
            return Err(bad("osp(p,q|2n) needs an even symplectic size"));
        }
        let n = two_n / 2;
        let (alg, real) = build_osp(p, q, n)?;
        let m = p + q;
        let dims = (m * (m - 1) / 2 + n * (2 * n + 1), 2 * m * n);
        let mut e = expect(dims, false);
        if m % 2 == 1 {
            e.real_form = Some("osp(p,q|2n)");
        }
        if m == 1 || m > 2 {
            e.simple = Some(true);
            e.centroid_dim = Some(1);
        }
        if p > 0 && q > 0 && p + q == 2 {
            e.verdict = Some("OBSTRUCTED");
        } else if q == 0 && p == 1 {
            e.verdict = Some("CONE_OK");
        }
        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
        out.cartan_hint = osp_compact_cartan(p, q, n, &real);
        out.realization = Some(real);
        Ok(out)
    }
}

/// Span of the rotation generators listed for `so(p,q) ⊕ sp(2n,R)`, in
/// algebra coordinates.
pub fn osp_compact_cartan(p: usize, q: usize, n: usize, real: &Realization) -> Option<Subspace> {
    // so(p,q) has a compact Cartan subalgebra only when p or q is even
    if p % 2 == 1 && q % 2 == 1 {
        return None;
    }
    let size = p + q + 2 * n;
    let rot = |a: usize, b: usize| {
        unit_matrix(size, a - 1, b - 1, ci(1, 0)).sub(&unit_matrix(size, b - 1, a - 1, ci(1, 0)))
    };
    let mut mats = Vec::new();
    for j in 1..=p / 2 {
        mats.push(rot(j, p + 1 - j));
    }
    for j in 1..=q / 2 {
        mats.push(rot(p + j, p + q + 1 - j));
    }
    for j in 1..=n {
        mats.push(rot(p + q + j, p + q + n + j));
    }
    let coords: Option<Vec<_>> = mats.iter().map(|m| real.real_coords(m)).collect();
    coords.map(|c| Subspace::from_vectors(real.basis.len(), FieldTag::Q, c))
}

pub struct SpecialLinear;
impl Family for SpecialLinear {
    fn name(&self) -> &'static str {
        "sl"
    }
    fn synopsis(&self) -> &'static str {
        "sl(2,R) with basis H,E,F; sl(n,C) as a real Lie algebra; sl(m|n,R)"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["sl(2,R)", "sl(2,C)", "sl(2|1,R)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        match (g.len(), g.first().map(|x| x.len())) {
            (1, Some(2)) => {
                let n = usize_arg(&g[0][0])?;
                check_size(n)?;
                match g[0][1].as_str() {
                    "R" if n == 2 => {
                        let mut e = expect((3, 0), false);
                        e.simple = Some(true);
                        e.centroid_dim = Some(1);
                        e.verdict = Some("CONE_OK");
                        Ok(entry("sl(2,R)".into(), self.name(), sl2r(), e))
                    }
                    "R" => {
                        let cons: Vec<Constraint> = vec![real_entries(), supertrace(n)];
                        let (alg, real) = matrix_algebra(&format!("sl({n},R)"), vec![0; n], &cons)?;
                        let mut e = expect((n * n - 1, 0), false);
                        e.simple = Some(true);
                        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
                        out.realization = Some(real);
                        Ok(out)
                    }
                    "C" => {
                        let cons: Vec<Constraint> = vec![supertrace(n)];
                        let (alg, real) = matrix_algebra(&format!("sl({n},C)"), vec![0; n], &cons)?;
                        let mut e = expect((2 * (n * n - 1), 0), false);
                        e.simple = Some(true);
                        e.centroid_dim = Some(2);
                        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
                        out.realization = Some(real);
                        Ok(out)
                    }
                    f => Err(bad(format!("sl(n,F) needs F = R or C, got `{f}`"))),
                }
            }
            (2, Some(1)) if g[1].len() == 2 && g[1][1] == "R" => {
                let m = usize_arg(&g[0][0])?;
                let n = usize_arg(&g[1][0])?;
                check_size(m + n)?;
                let cons: Vec<Constraint> = vec![real_entries(), supertrace(m)];
                let (alg, real) = matrix_algebra(&format!("sl({m}|{n},R)"), block_parities(m, n), &cons)?;
                let mut e = expect((m * m + n * n - 1, 2 * m * n), false);
                e.real_form = Some(if m == n { "psl(m|m,R)" } else { "sl(m|n,R)" });
                e.verdict = Some("OBSTRUCTED");
                let mut out = entry(alg.name().to_string(), self.name(), alg, e);
                out.realization = Some(real);
                Ok(out)
            }
            _ => Err(bad("expected sl(n,R), sl(n,C) or sl(m|n,R)")),
        }
    }
}

pub struct GeneralLinear;
impl Family for GeneralLinear {
    fn name(&self) -> &'static str {
        "gl"
    }
    fn synopsis(&self) -> &'static str {
        "gl(m|n): real supermatrices"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["gl(1|1)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        if g.len() != 2 || g[0].len() != 1 || g[1].len() != 1 {
            return Err(bad("expected gl(m|n)"));
        }
        let (m, n) = (usize_arg(&g[0][0])?, usize_arg(&g[1][0])?);
        check_size(m + n)?;
        let cons: Vec<Constraint> = vec![real_entries()];
        let (alg, real) = matrix_algebra(&format!("gl({m}|{n})"), block_parities(m, n), &cons)?;
        let mut e = expect((m * m + n * n, 2 * m * n), false);
        e.verdict = Some("OBSTRUCTED");
        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct QueerUnitary;
impl Family for QueerUnitary {
    fn name(&self) -> &'static str {
        "sq"
    }
    fn synopsis(&self) -> &'static str {
        "sq(p,q): even and odd copies of u(p,q), [B1,B2] = -i(B1B2 + B2B1)"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["sq(1,1)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let (p, q) = args.pair_or_single()?;
        let alg = build_sq(p, q)?;
        let n = p + q;
        let mut e = expect((n * n, n * n), false);
        e.real_form = Some("psq(p,q)");
        if p > 0 && q > 0 {
            e.verdict = Some("OBSTRUCTED");
        }
        Ok(entry(alg.name().to_string(), self.name(), alg, e))
    }
}

pub struct QBar;
impl Family for QBar {
    fn name(&self) -> &'static str {
        "qbar"
    }
    fn synopsis(&self) -> &'static str {
        "qbar(m): fixed points of [[A,B],[C,D]] -> [[D̄,C̄],[B̄,Ā]] in sl(m|m,C), before the quotient by the center"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["qbar(2)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let m = args.single_int()?;
        let (alg, real) = build_qbar(m)?;
        let mut e = expect((2 * m * m - 1, 2 * m * m), false);
        e.real_form = Some("pqbar(m)");
        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct UP;
impl Family for UP {
    fn name(&self) -> &'static str {
        "up"
    }
    fn synopsis(&self) -> &'static str {
        "up(m): fixed points of [[A,B],[C,D]] -> [[-D*,B*],[-C*,-A*]] in sl(m|m,C), before the quotient by the center"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["up(2)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let m = args.single_int()?;
        let (alg, real) = build_up(m)?;
        let mut e = expect((2 * m * m - 1, 2 * m * m), false);
        e.real_form = Some("usp(m)");
        let mut out = entry(alg.name().to_string(), self.name(), alg, e);
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct N3Super;
impl Family for N3Super {
    fn name(&self) -> &'static str {
        "n3super"
    }
    fn synopsis(&self) -> &'static str {
        "n3super: strictly upper triangular gl(2|2) with row parities (0,1,0,1), three-step nilpotent"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["n3super"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        if !args.groups.is_empty() {
            return Err(bad("n3super takes no parameters"));
        }
        let (alg, real) = n3super()?;
        let mut e = expect((2, 4), true);
        e.verdict = Some("OBSTRUCTED");
        let mut out = entry("n3super".into(), self.name(), alg, e);
        out.realization = Some(real);
        Ok(out)
    }
}

pub struct Abelian;
impl Family for Abelian {
    fn name(&self) -> &'static str {
        "abelian"
    }
    fn synopsis(&self) -> &'static str {
        "abelian(m|k): zero bracket"
    }
    fn examples(&self) -> Vec<&'static str> {
        vec!["abelian(2|1)"]
    }
    fn build(&self, args: &Args) -> Result<CatalogEntry> {
        let g = &args.groups;
        if g.len() != 2 || g[0].len() != 1 || g[1].len() != 1 {
            return Err(bad("expected abelian(m|k)"));
        }
        let (m, k) = (usize_arg(&g[0][0])?, usize_arg(&g[1][0])?);
        if m + k == 0 || m + k > 16 {
            return Err(bad("abelian(m|k) needs 1 <= m + k <= 16"));
        }
        let mut nm: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
        nm.extend((1..=k).map(|i| format!("f{i}")));
        let alg = LieSuperalgebra::abelian(&format!("abelian({m}|{k})"), nm, m, FieldTag::Q);
        let e = expect((m, k), true);
        Ok(entry(alg.name().to_string(), self.name(), alg, e))
    }
}

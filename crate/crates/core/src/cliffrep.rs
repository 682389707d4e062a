//! Graded matrix representations: Clifford modules for Heisenberg–Clifford
//! algebras, the unitary-representation axioms, parity change and
//! equivalence by intertwiner solving.

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cones::is_positive_definite;
use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Rat, Scalar};
use crate::glinalg::{dot, is_zero_vec, lift_vec, unit_vec, vec_add, vec_scale, Mat, Subspace, Vector};
use crate::lsa::{describe, LieSuperalgebra};

/// `ρ` on the basis of `algebra`, acting on `ℂ^(p|q)` with the even block first.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    pub algebra: LieSuperalgebra,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub rho: Vec<Mat>,
}

impl MatrixRep {
    pub fn new(algebra: LieSuperalgebra, even_dim: usize, odd_dim: usize, rho: Vec<Mat>) -> Result<MatrixRep> {
        let n = even_dim + odd_dim;
        if rho.len() != algebra.dim() || rho.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::InvalidInput(format!("need {} operators of size {n}", algebra.dim())));
        }
        let field = rho.iter().fold(algebra.tag(), |f, m| f.join(m.tag()).unwrap_or(f));
        let rho = rho.iter().map(|m| m.lift(field)).collect::<std::result::Result<Vec<_>, _>>()?;
        let algebra = algebra.lift(field)?;
        Ok(MatrixRep { algebra, even_dim, odd_dim, rho })
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn field(&self) -> FieldTag {
        self.algebra.tag()
    }

    /// `ρ(v)` for a vector in basis coordinates.
    pub fn of(&self, v: &[Scalar]) -> Mat {
        let f = self.field();
        let v = lift_vec(v, f).expect("vector embeds in the representation field");
        let mut m = Mat::zeros(self.dim(), self.dim(), f);
        for (c, r) in v.iter().zip(&self.rho) {
            if !c.is_zero() {
                m = m.add(&r.scale(c));
            }
        }
        m
    }

    /// Inverse of [`MatrixRep::to_json`] against a known algebra; `rho`
    /// entries are matched by element name and unlisted elements act by zero.
    pub fn from_json(algebra: &LieSuperalgebra, v: &Value) -> Result<MatrixRep> {
        let bad = |m: &str| Error::InvalidInput(format!("representation: {m}"));
        let field = match v.get("field").and_then(Value::as_str) {
            Some(s) => FieldTag::parse(s)?,
            None => algebra.tag(),
        };
        let field = field.join(algebra.tag()).ok_or_else(|| bad("field does not contain the algebra's field"))?;
        let dims = v.get("space_dims").and_then(Value::as_array).ok_or_else(|| bad("missing space_dims"))?;
        let dim = |k: usize| dims.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad("space_dims must be [even, odd]"));
        let (p, q) = (dim(0)?, dim(1)?);
        let mut rho = vec![Mat::zeros(p + q, p + q, field); algebra.dim()];
        for item in v.get("rho").and_then(Value::as_array).ok_or_else(|| bad("missing rho"))? {
            let name = item.get("element").and_then(Value::as_str).ok_or_else(|| bad("rho entry needs an element name"))?;
            let k = algebra.index_of(name).ok_or_else(|| bad(&format!("unknown element `{name}`")))?;
            let rows = item.get("matrix").and_then(Value::as_array).ok_or_else(|| bad("rho entry needs a matrix"))?;
            if rows.len() != p + q {
                return Err(bad(&format!("matrix for `{name}` needs {} rows", p + q)));
            }
            let mut m = Mat::zeros(p + q, p + q, field);
            for (r, row) in rows.iter().enumerate() {
                let row = row.as_array().filter(|x| x.len() == p + q).ok_or_else(|| bad(&format!("row {r} of `{name}` has the wrong length")))?;
                for (c, x) in row.iter().enumerate() {
                    m.set(r, c, crate::lsa::scalar_from_json(x, field)?);
                }
            }
            rho[k] = m;
        }
        MatrixRep::new(algebra.clone(), p, q, rho)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.name(),
            "field": self.field().to_string(),
            "space_dims": [self.even_dim, self.odd_dim],
            "rho": self.algebra.names().iter().zip(&self.rho).map(|(n, m)| json!({ "element": n, "matrix": m.to_strings() })).collect::<Vec<_>>(),
        })
    }
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Mat::zeros(ar * br, ac * bc, a.tag());
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    m.set(i * br + k, j * bc + l, a.get(i, j) * b.get(k, l));
                }
            }
        }
    }
    m
}

/// Hermitian involutions `Γ₁, …, Γ_d` anticommuting with each other and with
/// the grading, on `ℂ^(2^(k−1)|2^(k−1))` with `k = ⌈d/2⌉`.
pub fn gamma_matrices(d: usize) -> Vec<Mat> {
    let f = FieldTag::QI;
    let k = d.div_ceil(2).max(1);
    let (o, z, i) = (Scalar::one(f), Scalar::zero(f), Scalar::i(f));
    let s1 = Mat::from_rows(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]], f);
    let s2 = Mat::from_rows(vec![vec![z.clone(), -&i], vec![i.clone(), z.clone()]], f);
    let s3 = Mat::from_rows(vec![vec![o.clone(), z.clone()], vec![z.clone(), -&o]], f);
    let id = Mat::identity(2, f);
    let string = |j: usize, mid: &Mat| {
        let mut m = Mat::identity(1, f);
        for t in 0..k {
            let factor = if t < j { &s3 } else if t == j { mid } else { &id };
            m = kron(&m, factor);
        }
        m
    };
    let n = 1usize << k;
    // even popcount indices first
    let mut order: Vec<usize> = (0..n).filter(|x| x.count_ones() % 2 == 0).collect();
    order.extend((0..n).filter(|x| x.count_ones() % 2 == 1));
    (0..d)
        .map(|a| {
            let raw = string(a / 2, if a % 2 == 0 { &s1 } else { &s2 });
            let mut m = Mat::zeros(n, n, f);
            for (r, &or) in order.iter().enumerate() {
                for (c, &oc) in order.iter().enumerate() {
                    m.set(r, c, raw.get(or, oc).clone());
                }
            }
            m
        })
        .collect()
}

/// `√r = m·√c` with `c` squarefree.
fn rational_sqrt(r: &Rat) -> Result<(Rat, u32)> {
    if !r.is_positive() {
        return Err(Error::InvalidInput(format!("{r} is not positive")));
    }
    let mut n: BigInt = r.numer() * r.denom();
    let den = r.denom().clone();
    let mut outside = BigInt::one();
    let mut c = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        while (&n % (&p * &p)).is_zero() {
            n /= &p * &p;
            outside *= &p;
        }
        if (&n % &p).is_zero() {
            n /= &p;
            c *= &p;
        }
        p += 1;
    }
    c *= n;
    let c = c.to_u32().ok_or_else(|| Error::InvalidInput("surd too large".into()))?;
    Ok((Rat::new(outside, den), c))
}

/// Odd operators `sᵢΓᵢ` with `sᵢ² = nᵢ/2`, all in one field `ℚ(i, √c)`.
fn scaled_gammas(norms: &[Rat]) -> Result<(Vec<Mat>, FieldTag)> {
    let roots = norms.iter().map(|n| rational_sqrt(&(n / Rat::from_integer(2.into())))).collect::<Result<Vec<_>>>()?;
    let surds: Vec<u32> = roots.iter().map(|r| r.1).filter(|&c| c != 1).collect();
    if surds.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Precondition(format!("normalizations need square roots of {surds:?}; only one surd is supported")));
    }
    let field = FieldTag::build(true, surds.first().copied());
    let gammas = gamma_matrices(norms.len());
    let out = gammas
        .iter()
        .zip(&roots)
        .map(|(g, (m, c))| {
            let s = Scalar::from_rat(m.clone(), field);
            let s = if *c == 1 { s } else { &s * &Scalar::sqrt_d(field) };
            g.lift(field).unwrap().scale(&s)
        })
        .collect();
    Ok((out, field))
}

fn clifford_algebra(norms: &[Rat]) -> LieSuperalgebra {
    let d = norms.len();
    let mut names = vec!["Z".to_string()];
    names.extend((1..=d).map(|i| format!("f{i}")));
    let mut g = LieSuperalgebra::abelian(&format!("cl(1|{d})"), names, 1, FieldTag::Q);
    for (i, n) in norms.iter().enumerate() {
        g.set_bracket(1 + i, 1 + i, vec![(0, Scalar::from_rat(n.clone(), FieldTag::Q))]);
    }
    g
}

/// Clifford module of `Z, f₁, …, f_d` with `[fᵢ, fᵢ] = nᵢZ` and `ρ(Z) = i`.
pub fn clifford_module(d: usize, normalization: &[Rat]) -> Result<MatrixRep> {
    if d == 0 || normalization.len() != d {
        return Err(Error::InvalidInput(format!("need d ≥ 1 and {d} normalizations")));
    }
    if normalization.iter().any(|n| !n.is_positive()) {
        return Err(Error::InvalidInput("normalizations must be positive".into()));
    }
    let (gammas, field) = scaled_gammas(normalization)?;
    let n = gammas[0].rows();
    let mut rho = vec![Mat::scalar(n, &Scalar::i(field))];
    rho.extend(gammas);
    MatrixRep::new(clifford_algebra(normalization), n / 2, n / 2, rho)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub pass: bool,
    pub checked: usize,
    pub skipped: usize,
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepReport {
    pub checks: Vec<AxiomCheck>,
}

impl RepReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.axiom).collect()
    }
}

struct Tally {
    axiom: &'static str,
    checked: usize,
    skipped: usize,
    witness: Option<Value>,
}

impl Tally {
    fn new(axiom: &'static str) -> Tally {
        Tally { axiom, checked: 0, skipped: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck { axiom: self.axiom, pass: self.witness.is_none(), checked: self.checked, skipped: self.skipped, witness: self.witness }
    }
}

fn exp_nilpotent(m: &Mat) -> Mat {
    let n = m.rows();
    let mut out = Mat::identity(n, m.tag());
    let mut term = Mat::identity(n, m.tag());
    for k in 1..=n {
        term = term.mul(m).scale(&Scalar::from_frac(1, k as i64, m.tag()));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

fn block_ok(m: &Mat, p: usize, parity: u8) -> bool {
    let n = m.rows();
    (0..n).all(|r| (0..n).all(|c| ((r < p) == (c < p)) == (parity == 0) || m.get(r, c).is_zero()))
}

/// Check the representation axioms exactly. `adjoint_sample` holds even
/// elements for the group-level adjoint identity; `odd_tuples` holds odd
/// families whose squares are tested for summing to zero.
pub fn verify_rep(rep: &MatrixRep, adjoint_sample: &[Vector], odd_tuples: &[Vec<Vector>]) -> RepReport {
    let g = &rep.algebra;
    let f = rep.field();
    let n = g.dim();
    let names = g.names();
    let minus_i = -Scalar::i(f.with_i());
    let rho = |v: &[Scalar]| rep.of(v);

    let mut grading = Tally::new("grading");
    for k in 0..n {
        grading.record(block_ok(&rep.rho[k], rep.even_dim, g.parity(k)), || json!({ "element": names[k] }));
    }

    let mut anti = Tally::new("anticommutator");
    let mut comm = Tally::new("commutator");
    for a in 0..n {
        for b in a..n {
            let br = rho(&g.bracket_basis_dense(a, b));
            if g.parity(a) == 1 && g.parity(b) == 1 {
                let lhs = rep.rho[a].anticommutator(&rep.rho[b]).lift(f.with_i()).unwrap();
                let rhs = br.lift(f.with_i()).unwrap().scale(&minus_i);
                anti.record(lhs == rhs, || json!({ "pair": [names[a], names[b]], "lhs": lhs.to_strings(), "rhs": rhs.to_strings() }));
            } else {
                let lhs = rep.rho[a].commutator(&rep.rho[b]);
                comm.record(lhs == br, || json!({ "pair": [names[a], names[b]], "lhs": lhs.to_strings(), "rhs": br.to_strings() }));
            }
        }
    }

    let mut sym = Tally::new("odd_symmetric");
    let mut skew = Tally::new("even_skew_hermitian");
    for k in 0..n {
        if g.parity(k) == 1 {
            sym.record(rep.rho[k].is_hermitian(), || json!({ "element": names[k] }));
        } else {
            skew.record(rep.rho[k].is_skew_hermitian(), || json!({ "element": names[k] }));
        }
    }

    let mut adj = Tally::new("adjoint_group");
    let dim = rep.dim();
    for x in adjoint_sample {
        let parity = g.space().vector_parity(x);
        let adx = g.ad(x);
        let rx = rho(x);
        let c = &rx.trace() * &Scalar::from_frac(1, dim.max(1) as i64, f);
        let nil = rx.sub(&Mat::scalar(dim, &c));
        if parity != Some(0) || !adx.is_nilpotent() || !nil.is_nilpotent() {
            adj.skipped += 1;
            continue;
        }
        let a = exp_nilpotent(&adx);
        let e = exp_nilpotent(&nil);
        let einv = exp_nilpotent(&nil.neg());
        for k in 0..n {
            let lhs = rho(&a.col(k));
            let rhs = e.mul(&rep.rho[k]).mul(&einv);
            adj.record(lhs == rhs, || json!({ "x": describe(g, x), "element": names[k] }));
        }
    }

    let mut square = Tally::new("odd_squares_vanish");
    for tuple in odd_tuples {
        let sum = tuple.iter().fold(vec![Scalar::zero(g.tag()); n], |acc, x| vec_add(&acc, &g.bracket(x, x)));
        if !is_zero_vec(&sum) || tuple.iter().any(|x| g.space().vector_parity(x) != Some(1)) {
            square.skipped += 1;
            continue;
        }
        for x in tuple {
            square.record(rho(x).is_zero(), || json!({ "x": describe(g, x) }));
        }
    }

    RepReport { checks: vec![grading.finish(), anti.finish(), comm.finish(), sym.finish(), skew.finish(), adj.finish(), square.finish()] }
}

/// Swap the even and odd blocks of the module.
pub fn parity_change(rep: &MatrixRep) -> MatrixRep {
    let (p, q) = (rep.even_dim, rep.odd_dim);
    let order: Vec<usize> = (p..p + q).chain(0..p).collect();
    let rho = rep
        .rho
        .iter()
        .map(|m| {
            let mut out = Mat::zeros(p + q, p + q, m.tag());
            for (r, &or) in order.iter().enumerate() {
                for (c, &oc) in order.iter().enumerate() {
                    out.set(r, c, m.get(or, oc).clone());
                }
            }
            out
        })
        .collect();
    MatrixRep { algebra: rep.algebra.clone(), even_dim: q, odd_dim: p, rho }
}

/// Graded intertwiners `T` with `T ρ₁(x) = ρ₂(x) T`.
pub fn intertwiners(r1: &MatrixRep, r2: &MatrixRep) -> Result<Vec<Mat>> {
    if r1.algebra.dim() != r2.algebra.dim() || (r1.even_dim, r1.odd_dim) != (r2.even_dim, r2.odd_dim) {
        return Ok(Vec::new());
    }
    let f = r1.field().join(r2.field()).ok_or_else(|| Error::InvalidInput("representation fields do not combine".into()))?;
    let (p, n) = (r1.even_dim, r1.dim());
    let unknowns: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| (a < p) == (b < p)).collect();
    let index = |a: usize, b: usize| unknowns.iter().position(|&u| u == (a, b));
    let mut rows = Vec::new();
    for (m1, m2) in r1.rho.iter().zip(&r2.rho) {
        let (m1, m2) = (m1.lift(f)?, m2.lift(f)?);
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Scalar::zero(f); unknowns.len()];
                for k in 0..n {
                    if let Some(u) = index(r, k) {
                        row[u] = &row[u] + m1.get(k, c);
                    }
                    if let Some(u) = index(k, c) {
                        row[u] = &row[u] - m2.get(r, k);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() { Subspace::full(unknowns.len(), f) } else { Mat::from_rows(rows, f).kernel() };
    Ok(sol
        .basis()
        .iter()
        .map(|v| {
            let mut t = Mat::zeros(n, n, f);
            for (u, &(a, b)) in unknowns.iter().enumerate() {
                t.set(a, b, v[u].clone());
            }
            t
        })
        .collect())
}

/// An invertible combination of `ts`, trying every point of `{0..=n}^r`;
/// a nonzero determinant polynomial of degree `n` cannot vanish on that grid.
fn invertible_combination(ts: &[Mat]) -> Result<Option<Mat>> {
    let Some(first) = ts.first() else { return Ok(None) };
    let n = first.rows();
    let r = ts.len();
    let side = n as u64 + 1;
    let total = side.checked_pow(r as u32).filter(|&t| t <= 200_000).ok_or_else(|| {
        Error::SearchExhausted(format!("intertwiner space of dimension {r} is too large for the exact grid test"))
    })?;
    for idx in 0..total {
        let mut rest = idx;
        let mut m = Mat::zeros(n, n, first.tag());
        for t in ts {
            let c = (rest % side) as i64;
            rest /= side;
            if c != 0 {
                m = m.add(&t.scale(&Scalar::from_int(c, t.tag())));
            }
        }
        if !m.det().is_zero() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Equivalence by an invertible graded intertwiner, optionally after parity change.
pub fn equivalent(r1: &MatrixRep, r2: &MatrixRep, allow_parity: bool) -> Result<bool> {
    if invertible_combination(&intertwiners(r1, r2)?)?.is_some() {
        return Ok(true);
    }
    if allow_parity {
        return Ok(invertible_combination(&intertwiners(r1, &parity_change(r2))?)?.is_some());
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HcClassification {
    /// Subalgebra spanned by `[g₁, g₁]` and `g₁`, on which the modules act.
    pub clifford_part: LieSuperalgebra,
    pub embedding: Vec<Vector>,
    /// One module for odd `d`, a parity pair for even `d`.
    pub modules: Vec<MatrixRep>,
    pub stone_von_neumann: Option<Value>,
}

impl HcClassification {
    pub fn to_json(&self) -> Value {
        json!({
            "clifford_part": crate::lsa::algebra_to_json(&self.clifford_part),
            "modules": self.modules.iter().map(MatrixRep::to_json).collect::<Vec<_>>(),
            "parity_pair": self.modules.len() == 2,
            "stone_von_neumann": self.stone_von_neumann,
        })
    }
}

/// Irreducible modules with central character `ρ(Z) = iγ(Z)` on `𝒵(g₀)`.
/// `None` when the odd form `γ([X, Y])` is not positive definite.
pub fn classify_heisenberg_clifford(g: &LieSuperalgebra, gamma: &[Scalar]) -> Result<Option<HcClassification>> {
    let tag = g.tag();
    let (n, e) = (g.dim(), g.even_dim());
    let center = g.center();
    let full = g.full_space();
    if !center.contains_space(&g.bracket_spaces(&full, &full)) || !g.even_space().contains_space(&center) {
        return Err(Error::Precondition("not of Heisenberg–Clifford shape: [g, g] must lie in an even center".into()));
    }
    let z0 = g.even_part().center();
    if gamma.len() != z0.dim() {
        return Err(Error::InvalidInput(format!("central character needs {} values", z0.dim())));
    }
    let gamma = lift_vec(gamma, tag)?;
    let value = |v: &[Scalar]| -> Scalar {
        let c = z0.coords(&v[..e]).expect("bracket is central");
        dot(&c, &gamma)
    };
    let d = g.odd_dim();
    let odd: Vec<Vector> = (0..d).map(|i| unit_vec(n, e + i, tag)).collect();
    let form = |x: &[Scalar], y: &[Scalar]| value(&g.bracket(x, y));
    let s = Mat::from_rows((0..d).map(|i| (0..d).map(|j| form(&odd[i], &odd[j])).collect()).collect(), tag);
    if d > 0 && (!s.is_rational() || !is_positive_definite(&s)) {
        return Ok(None);
    }
    // orthogonalize the odd basis
    let mut us: Vec<Vector> = Vec::new();
    let mut norms: Vec<Scalar> = Vec::new();
    for x in &odd {
        let mut u = x.clone();
        for (w, nw) in us.iter().zip(&norms) {
            let c = &form(x, w) * &nw.inv()?;
            u = vec_add(&u, &vec_scale(w, &-c));
        }
        norms.push(form(&u, &u));
        us.push(u);
    }
    let k_space = g.bracket_spaces(&g.odd_space(), &g.odd_space());
    let part = k_space.sum(&g.odd_space());
    let (cpart, embedding) = g.subalgebra(&part, "c")?;
    let svn_dim = e - z0.dim();
    let svn = (svn_dim > 0).then(|| {
        json!({
            "symplectic_dim": svn_dim,
            "central_character": gamma.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "model": "Schrödinger model, not materialized",
        })
    });
    if d == 0 {
        return Ok(Some(HcClassification { clifford_part: cpart, embedding, modules: Vec::new(), stone_von_neumann: svn }));
    }
    let rats: Vec<Rat> = norms.iter().map(|x| x.as_rational().expect("rational form").clone()).collect();
    let (gammas, field) = scaled_gammas(&rats)?;
    let dim = gammas[0].rows();
    // f = Σ c_k u_k with the triangular change of basis
    let umat = Mat::from_cols(&us.iter().map(|u| u[e..].to_vec()).collect::<Vec<_>>(), d, tag);
    let uinv = umat.inverse().ok_or_else(|| Error::Invariant("orthogonalized basis is singular".into()))?;
    let rho_odd = |v: &[Scalar]| -> Mat {
        let c = uinv.mul_vec(&v[e..]);
        let mut m = Mat::zeros(dim, dim, field);
        for (ck, gk) in c.iter().zip(&gammas) {
            if !ck.is_zero() {
                m = m.add(&gk.scale(&ck.lift(field).unwrap()));
            }
        }
        m
    };
    let rho: Vec<Mat> = embedding
        .iter()
        .map(|b| {
            if b[e..].iter().all(Scalar::is_zero) {
                let val = value(b).lift(field).unwrap();
                Mat::scalar(dim, &(&val * &Scalar::i(field)))
            } else {
                rho_odd(b)
            }
        })
        .collect();
    let module = MatrixRep::new(cpart.clone(), dim / 2, dim / 2, rho)?;
    let modules = if d % 2 == 0 { vec![module.clone(), parity_change(&module)] } else { vec![module] };
    Ok(Some(HcClassification { clifford_part: cpart, embedding, modules, stone_von_neumann: svn }))
}

/// Smallest representation field for a list of rational normalizations.
pub fn normalization_field(norms: &[Rat]) -> Result<FieldTag> {
    Ok(scaled_gammas(norms)?.1)
}

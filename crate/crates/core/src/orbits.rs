//! Orbit method for nilpotent Lie superalgebras: admissible functionals,
//! polarizing systems, coadjoint orbit membership and orbit descriptors.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cones::{find_isotropic_odd, find_pd_functional, odd_form, ConeStatus, PdBudget};
use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};
use crate::glinalg::{dot, is_zero_vec, unit_vec, vec_scale, Mat, Subspace, Vector};
use crate::lsa::{algebra_to_json, quotient, BasisCoords, LieSuperalgebra};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdmissibleCheck {
    pub admissible: bool,
    pub form: Vec<Vec<String>>,
    /// Principal minor with negative value, as (index set, value).
    pub failing_minor: Option<(Vec<usize>, Scalar)>,
}

fn check_lambda(g: &LieSuperalgebra, lambda: &[Scalar]) -> Result<()> {
    if lambda.len() != g.even_dim() {
        return Err(Error::InvalidInput(format!("functional needs {} even coordinates, got {}", g.even_dim(), lambda.len())));
    }
    Ok(())
}

/// Exact PSD test of `M(λ)` over all principal minors.
pub fn in_admissible_cone(g: &LieSuperalgebra, lambda: &[Scalar]) -> Result<AdmissibleCheck> {
    check_lambda(g, lambda)?;
    let m = odd_form(g, lambda);
    let k = m.rows();
    let mut failing = None;
    for mask in 1u32..(1u32 << k) {
        let idx: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let d = m.submatrix(&idx, &idx).det();
        if d.real_sign() == Some(std::cmp::Ordering::Less) {
            failing = Some((idx, d));
            break;
        }
    }
    Ok(AdmissibleCheck { admissible: failing.is_none(), form: m.to_strings(), failing_minor: failing })
}

fn pad(v: &[Scalar], n: usize, tag: FieldTag) -> Vector {
    let mut w = v.to_vec();
    w.resize(n, Scalar::zero(tag));
    w
}

/// `Ω_λ(X, Y) = λ([X, Y])` on a list of even vectors in `g₀̄` coordinates.
fn omega_matrix(g0: &LieSuperalgebra, lambda: &[Scalar], basis: &[Vector]) -> Mat {
    let k = basis.len();
    let mut m = Mat::zeros(k, k, g0.tag());
    for a in 0..k {
        for b in 0..k {
            m.set(a, b, dot(&g0.bracket(&basis[a], &basis[b]), lambda));
        }
    }
    m
}

fn radical(g0: &LieSuperalgebra, lambda: &[Scalar], s: &Subspace) -> Subspace {
    let basis = s.basis();
    let ker = omega_matrix(g0, lambda, basis).kernel();
    Subspace::from_vectors(s.ambient(), s.tag(), ker.basis().iter().map(|c| s.combine(c)))
}

/// Ideal flag of `g₀` with one-dimensional steps and `[g₀, i⁽ˢ⁾] ⊆ i⁽ˢ⁻¹⁾`,
/// passing through `through`. Complement vectors are taken from the end of
/// each echelon basis.
pub fn ideal_flag(g0: &LieSuperalgebra, through: &Subspace) -> Result<Vec<Subspace>> {
    if !g0.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let lcs = g0.lower_central_series();
    let mut coarse: Vec<Subspace> = Vec::new();
    for c in lcs.iter().rev() {
        coarse.push(c.intersect(through));
    }
    for c in lcs.iter().rev() {
        coarse.push(c.sum(through));
    }
    let full = g0.full_space();
    let mut flag = vec![g0.zero_space()];
    for target in coarse.iter().chain(std::iter::once(&full)) {
        for v in target.basis().iter().rev() {
            let cur = flag.last().unwrap();
            if !cur.contains(v) {
                let next = cur.sum(&Subspace::from_vectors(cur.ambient(), cur.tag(), [v.clone()]));
                flag.push(next);
            }
        }
    }
    for w in flag.windows(2) {
        if !w[0].contains_space(&g0.bracket_spaces(&full, &w[1])) {
            return Err(Error::FlagFailure(format!("step of dimension {} is not central modulo the previous one", w[1].dim())));
        }
    }
    if !flag.iter().any(|s| s == through) {
        return Err(Error::FlagFailure("flag misses the prescribed ideal".into()));
    }
    Ok(flag)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolarizingSystem {
    pub lambda: Vector,
    /// Ideal flag of `g₀` (even coordinates).
    pub flag: Vec<Subspace>,
    pub radicals: Vec<Subspace>,
    /// `m₀` in even coordinates.
    pub m0: Subspace,
    /// `m = m₀ ⊕ g₁` in full coordinates.
    pub m: Subspace,
    /// `j = ker(λ|m₀) ⊕ rad(SΩ_λ)` in full coordinates.
    pub j: Subspace,
    pub clifford_quotient: LieSuperalgebra,
    pub even_rank: usize,
}

impl PolarizingSystem {
    /// Odd dimension of the Clifford quotient.
    pub fn clifford_odd_dim(&self) -> usize {
        self.clifford_quotient.odd_dim()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": strs(&self.lambda),
            "flag_dims": self.flag.iter().map(Subspace::dim).collect::<Vec<_>>(),
            "flag": self.flag.iter().map(Subspace::basis_strings).collect::<Vec<_>>(),
            "m0": self.m0.basis_strings(),
            "m": self.m.basis_strings(),
            "j": self.j.basis_strings(),
            "even_rank": self.even_rank,
            "clifford_quotient": algebra_to_json(&self.clifford_quotient),
            "branching": branching_multiplicity(self),
        })
    }
}

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Polarizing system from the sum of radicals along an ideal flag through
/// `[g₁, g₁]`.
pub fn polarizing_flag(g: &LieSuperalgebra, lambda: &[Scalar]) -> Result<PolarizingSystem> {
    check_lambda(g, lambda)?;
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let adm = in_admissible_cone(g, lambda)?;
    if !adm.admissible {
        return Err(Error::NotAdmissible(format!("odd form {:?} is not positive semidefinite", adm.form)));
    }
    let tag = g.tag();
    let (n, e) = (g.dim(), g.even_dim());
    let g0 = g.even_part();
    let odd = g.odd_space();
    let k_full = g.bracket_spaces(&odd, &odd);
    let k = Subspace::from_vectors(e, tag, k_full.basis().iter().map(|v| v[..e].to_vec()));
    let flag = ideal_flag(&g0, &k)?;
    let radicals: Vec<Subspace> = flag[1..].iter().map(|s| radical(&g0, lambda, s)).collect();
    let m0 = radicals.iter().fold(g0.zero_space(), |acc, r| acc.sum(r));

    let omega = omega_matrix(&g0, lambda, &(0..e).map(|i| unit_vec(e, i, tag)).collect::<Vec<_>>());
    let even_rank = omega.rank();
    if !m0.contains_space(&k) {
        return Err(Error::Invariant("m₀ does not contain [g₁, g₁]".into()));
    }
    if !g0.is_subalgebra(&m0) {
        return Err(Error::Invariant("m₀ is not a subalgebra".into()));
    }
    if !omega_matrix(&g0, lambda, m0.basis()).is_zero() {
        return Err(Error::Invariant("m₀ is not isotropic".into()));
    }
    if 2 * m0.dim() != 2 * e - even_rank {
        return Err(Error::Invariant(format!("dim m₀ = {} but Ω_λ has rank {even_rank}", m0.dim())));
    }

    let m = Subspace::from_vectors(n, tag, m0.basis().iter().map(|v| pad(v, n, tag))).sum(&odd);
    let ker_m0 = {
        let vals: Vec<Scalar> = m0.basis().iter().map(|v| dot(v, lambda)).collect();
        let c = Mat::from_rows(vec![vals], tag).kernel();
        Subspace::from_vectors(n, tag, c.basis().iter().map(|c| pad(&m0.combine(c), n, tag)))
    };
    let rad_odd = {
        let c = odd_form(g, lambda).kernel();
        Subspace::from_vectors(n, tag, c.basis().iter().map(|c| {
            let mut v = vec![Scalar::zero(tag); e];
            v.extend(c.iter().cloned());
            v
        }))
    };
    let j = ker_m0.sum(&rad_odd);
    let (malg, mbasis) = g.subalgebra(&m, "m")?;
    let coords = BasisCoords::new(&mbasis, &m);
    let j_in_m = Subspace::from_vectors(malg.dim(), tag, j.basis().iter().map(|v| coords.coords(v).expect("j ⊆ m")));
    let (cq, _) = quotient(&malg, &j_in_m).map_err(|err| Error::Invariant(format!("j is not an ideal of m: {err}")))?;
    let ce = cq.even_dim();
    if ce > 1 {
        return Err(Error::Invariant(format!("Clifford quotient has even dimension {ce}")));
    }
    for a in 0..ce {
        for b in 0..cq.dim() {
            if !cq.bracket_basis(a, b).is_empty() && !is_zero_vec(&cq.bracket_basis_dense(a, b)) {
                return Err(Error::Invariant("Clifford quotient has a non-central even part".into()));
            }
        }
    }
    Ok(PolarizingSystem { lambda: lambda.to_vec(), flag, radicals, m0, m, j, clifford_quotient: cq, even_rank })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Branching {
    /// Dimension of the Clifford module of `m/j`.
    pub multiplicity: u64,
    /// `2^(dim m − dim j)` as printed in the branching formula.
    pub printed_exponent_value: u64,
    pub dim_m: usize,
    pub dim_j: usize,
}

/// Clifford module dimension of `m/j`, with the printed exponent alongside.
pub fn branching_multiplicity(ps: &PolarizingSystem) -> Branching {
    let d = ps.clifford_odd_dim();
    Branching {
        multiplicity: clifford_module_dim(d),
        printed_exponent_value: 1u64 << (ps.m.dim() - ps.j.dim()),
        dim_m: ps.m.dim(),
        dim_j: ps.j.dim(),
    }
}

/// `1` for `d = 0`, otherwise `2^(d − ⌊d/2⌋)`.
pub fn clifford_module_dim(d: usize) -> u64 {
    if d == 0 {
        1
    } else {
        1u64 << (d - d / 2)
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

/// `λ ∘ Ad(exp Y)` on `g₀`.
fn act(g0: &LieSuperalgebra, mu: &[Scalar], y: &[Scalar]) -> Vector {
    let a = exp_nilpotent(&g0.ad(y));
    (0..mu.len()).map(|j| dot(mu, &a.col(j))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitMember {
    /// `λ₂ = λ ∘ Ad(exp(t₁Y₁) ⋯ exp(t_kY_k))`, as pairs `(Y, t)`.
    pub factors: Vec<(Vector, Scalar)>,
}

/// Decide `λ₂ ∈ λ ∘ Ad(G)` by walking an ideal flag: each step adjusts one
/// coordinate with a one-parameter subgroup that fixes the earlier ones.
pub fn coadjoint_orbit_member(g: &LieSuperalgebra, lambda: &[Scalar], lambda2: &[Scalar]) -> Result<Option<OrbitMember>> {
    check_lambda(g, lambda)?;
    check_lambda(g, lambda2)?;
    let g0 = g.even_part();
    let e = g0.dim();
    let tag = g.tag();
    let flag = ideal_flag(&g0, &g0.zero_space())?;
    let mut mu = lambda.to_vec();
    let mut factors = Vec::new();
    for s in 1..flag.len() {
        let b = flag[s].basis().iter().find(|v| !flag[s - 1].contains(v)).expect("one-dimensional step").clone();
        let target = dot(lambda2, &b);
        let cur = dot(&mu, &b);
        if target == cur {
            continue;
        }
        // stabilizer of μ restricted to the previous flag step
        let prev = flag[s - 1].basis();
        let rows: Vec<Vector> = prev
            .iter()
            .map(|z| (0..e).map(|i| dot(&mu, &g0.bracket(&unit_vec(e, i, tag), z))).collect())
            .collect();
        let stab = if rows.is_empty() { g0.full_space() } else { Mat::from_rows(rows, tag).kernel() };
        let Some((y, c)) = stab.basis().iter().find_map(|y| {
            let c = dot(&mu, &g0.bracket(y, &b));
            (!c.is_zero()).then(|| (y.clone(), c))
        }) else {
            return Ok(None);
        };
        let t = &(&target - &cur) * &c.inv()?;
        mu = act(&g0, &mu, &vec_scale(&y, &t));
        factors.push((y, t));
    }
    if mu != lambda2 {
        return Ok(None);
    }
    // independent replay
    let mut check = lambda.to_vec();
    for (y, t) in &factors {
        check = act(&g0, &check, &vec_scale(y, t));
    }
    if check != lambda2 {
        return Err(Error::Invariant("orbit factors fail on replay".into()));
    }
    Ok(Some(OrbitMember { factors }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitDescriptor {
    pub representative: Vector,
    pub members: Vec<Vector>,
    pub even_rank: usize,
    pub clifford_dim: u64,
    pub central_character: Vector,
    pub polarizing: PolarizingSystem,
}

impl OrbitDescriptor {
    pub fn to_json(&self) -> Value {
        json!({
            "representative": strs(&self.representative),
            "members": self.members.iter().map(|m| strs(m)).collect::<Vec<_>>(),
            "even_rank": self.even_rank,
            "clifford_dim": self.clifford_dim,
            "central_character": strs(&self.central_character),
            "polarizing_system": self.polarizing.to_json(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitClassification {
    pub orbits: Vec<OrbitDescriptor>,
    pub rejected: Vec<Vector>,
}

impl OrbitClassification {
    pub fn to_json(&self) -> Value {
        json!({
            "orbits": self.orbits.iter().map(OrbitDescriptor::to_json).collect::<Vec<_>>(),
            "not_admissible": self.rejected.iter().map(|m| strs(m)).collect::<Vec<_>>(),
        })
    }
}

fn central_character(g: &LieSuperalgebra, lambda: &[Scalar]) -> Vector {
    let e = g.even_dim();
    let z = g.center().intersect(&g.even_space());
    z.basis().iter().map(|v| dot(&v[..e], lambda)).collect()
}

/// Partition the admissible candidates of `search_box` into coadjoint orbits.
pub fn classify_orbits(g: &LieSuperalgebra, search_box: &[Vector]) -> Result<OrbitClassification> {
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut orbits: Vec<OrbitDescriptor> = Vec::new();
    let mut rejected = Vec::new();
    for lambda in search_box {
        if !in_admissible_cone(g, lambda)?.admissible {
            rejected.push(lambda.clone());
            continue;
        }
        let ps = polarizing_flag(g, lambda)?;
        let even_rank = ps.even_rank;
        let clifford_dim = clifford_module_dim(ps.clifford_odd_dim());
        let cc = central_character(g, lambda);
        let mut placed = false;
        for o in orbits.iter_mut() {
            if coadjoint_orbit_member(g, &o.representative, lambda)?.is_some() {
                if o.even_rank != even_rank || o.clifford_dim != clifford_dim || o.central_character != cc {
                    return Err(Error::Invariant("orbit invariants differ within one orbit".into()));
                }
                o.members.push(lambda.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            orbits.push(OrbitDescriptor {
                representative: lambda.clone(),
                members: vec![lambda.clone()],
                even_rank,
                clifford_dim,
                central_character: cc,
                polarizing: ps,
            });
        }
    }
    Ok(OrbitClassification { orbits, rejected })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Precondition {
    pub name: &'static str,
    /// "ok", "failed" or "unverified".
    pub status: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeisenbergCheck {
    pub preconditions: Vec<Precondition>,
    /// "clifford", "heisenberg" or "none".
    pub branch: &'static str,
    /// `(X, Y, Z)` with `[X, Y] = Z` central.
    pub triple: Option<[Vec<String>; 3]>,
}

/// Either `g₀ = 𝒵(g)` or an even `(X, Y, Z)` spanning a (3|0) Heisenberg subalgebra.
pub fn kirillov_heisenberg_check(g: &LieSuperalgebra) -> HeisenbergCheck {
    let tag = g.tag();
    let n = g.dim();
    let mut pre = Vec::new();
    let nil = g.is_nilpotent();
    pre.push(Precondition { name: "nilpotent", status: if nil { "ok" } else { "failed" }, detail: String::new() });
    let z = g.center();
    pre.push(Precondition {
        name: "center_one_dimensional",
        status: if z.dim() == 1 { "ok" } else { "failed" },
        detail: format!("dim 𝒵(g) = {}", z.dim()),
    });
    let iso = find_isotropic_odd(g);
    let status = if iso.isotropic.is_some() {
        "failed"
    } else if find_pd_functional(g, PdBudget::default()).status == ConeStatus::PointedCertified {
        "ok"
    } else {
        "unverified"
    };
    pre.push(Precondition { name: "no_isotropic_odd", status, detail: String::new() });

    if g.even_space() == z.intersect(&g.even_space()) {
        return HeisenbergCheck { preconditions: pre, branch: "clifford", triple: None };
    }
    let even = g.even_space();
    for zv in z.intersect(&even).basis() {
        let zs = Subspace::from_vectors(n, tag, [zv.clone()]);
        // Y with [g₀, Y] ⊆ span{Z}
        let mut constraints: Vec<Vector> = Vec::new();
        let e = g.even_dim();
        for i in 0..e {
            let ad = g.ad_basis(i);
            // reduce the image modulo span{Z}
            for r in 0..n {
                let row: Vector = (0..e).map(|c| zs.reduce(&ad.col(c))[r].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    constraints.push(row);
                }
            }
        }
        let s = if constraints.is_empty() {
            Subspace::full(e, tag)
        } else {
            Mat::from_rows(constraints, tag).kernel()
        };
        for y in s.basis() {
            let yf = pad(y, n, tag);
            for i in 0..e {
                let x = unit_vec(n, i, tag);
                let br = g.bracket(&x, &yf);
                if is_zero_vec(&br) {
                    continue;
                }
                let c = zs.coords(&br).expect("bracket lies in span{Z}");
                let x = vec_scale(&x, &c[0].inv().expect("nonzero"));
                let triple = [strs(&x), strs(&yf), strs(zv)];
                return HeisenbergCheck { preconditions: pre, branch: "heisenberg", triple: Some(triple) };
            }
        }
    }
    HeisenbergCheck { preconditions: pre, branch: "none", triple: None }
}

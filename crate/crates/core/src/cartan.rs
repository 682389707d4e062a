//! Cartan subalgebras, compact embedding, root decompositions and the
//! fixed-point projection.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, NumError, Poly, Scalar};
use crate::glinalg::{joint_generalized_eigenspaces, vec_add, Mat, Subspace, Vector};
use crate::lsa::LieSuperalgebra;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartanData {
    pub h0: Subspace,
    pub h: Subspace,
    pub compactly_embedded: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    /// Values `α(H_k)` on the basis of `h0`, where `[H, X] = iα(H) X`.
    pub alpha: Vec<Scalar>,
    pub even: Subspace,
    pub odd: Subspace,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootChecks {
    pub spaces_fill: bool,
    pub symmetric: bool,
    pub conjugation: bool,
    pub even_decomposition: bool,
}

impl RootChecks {
    pub fn ok(&self) -> bool {
        self.spaces_fill && self.symmetric && self.conjugation && self.even_decomposition
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootDatum {
    pub cartan: CartanData,
    pub field: FieldTag,
    pub roots: Vec<Root>,
    pub checks: RootChecks,
}

impl RootDatum {
    pub fn nonzero(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.alpha.iter().any(|x| !x.is_zero()))
    }

    pub fn root(&self, alpha: &[Scalar]) -> Option<&Root> {
        self.roots.iter().find(|r| r.alpha == alpha)
    }
}

/// Search budget for the regular-element scan.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CartanSearch {
    pub bound: i64,
    pub require_compact: bool,
}

impl Default for CartanSearch {
    fn default() -> Self {
        CartanSearch { bound: 3, require_compact: false }
    }
}

fn even_block(m: &Mat, e: usize) -> Mat {
    let idx: Vec<usize> = (0..e).collect();
    m.submatrix(&idx, &idx)
}

fn embed_even(g: &LieSuperalgebra, s: &Subspace) -> Subspace {
    let n = g.dim();
    let tag = s.tag();
    Subspace::from_vectors(
        n,
        tag,
        s.basis().iter().map(|v| {
            let mut w = v.clone();
            w.extend(std::iter::repeat_n(Scalar::zero(tag), n - v.len()));
            w
        }),
    )
}

/// Joint generalized 0-eigenspace of `ad(W)` for `W` in a basis of `w0`.
pub fn fitting_null(g: &LieSuperalgebra, w0: &Subspace) -> Result<Subspace> {
    let n = g.dim();
    let mut out = Subspace::full(n, w0.tag());
    for w in w0.basis() {
        if g.space().vector_parity(w) == Some(1) {
            return Err(Error::InvalidInput("fitting_null needs an even subspace".into()));
        }
        out = out.intersect(&g.ad(w).pow(n).kernel());
    }
    if !g.is_subalgebra(&out) {
        return Err(Error::NotSubalgebra("Fitting null component is not closed".into()));
    }
    Ok(out)
}

/// Lower central series of the subalgebra on `s` terminates at zero.
pub fn is_nilpotent_subspace(g: &LieSuperalgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = g.bracket_spaces(s, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

/// Integer vectors of dimension `d`, ordered by max-abs, then sum of
/// absolute values, then lexicographically.
pub fn scan_integer_points<B>(d: usize, bound: i64, mut f: impl FnMut(&[i64]) -> ControlFlow<B>) -> Option<B> {
    fn rec<B>(
        v: &mut Vec<i64>,
        d: usize,
        level: i64,
        sum_left: i64,
        hit: bool,
        f: &mut impl FnMut(&[i64]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let k = v.len();
        if k == d {
            if sum_left == 0 && hit {
                return f(v);
            }
            return ControlFlow::Continue(());
        }
        let rest = (d - k - 1) as i64;
        for x in -level..=level {
            let a = x.abs();
            if a > sum_left || sum_left - a > rest * level {
                continue;
            }
            let h = hit || a == level;
            if !h && rest == 0 {
                continue;
            }
            v.push(x);
            let r = rec(v, d, level, sum_left - a, h, f);
            v.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    if d == 0 {
        return None;
    }
    for level in 1..=bound {
        for s in level..=level * d as i64 {
            let mut v = Vec::with_capacity(d);
            if let ControlFlow::Break(b) = rec(&mut v, d, level, s, false, &mut f) {
                return Some(b);
            }
        }
    }
    None
}

/// Cartan subalgebra of `g₀̄` as the Fitting null component `N(Y)` of the
/// first scanned `Y` for which it is nilpotent; such a component is always
/// a Cartan subalgebra, and all of them have the same dimension.
pub fn cartan_subalgebra_even(g: &LieSuperalgebra, search: CartanSearch) -> Result<Subspace> {
    let e = g.even_dim();
    let tag = g.tag();
    if e == 0 {
        return Ok(g.zero_space());
    }
    let g0 = g.even_part();
    if g0.is_nilpotent() && (!search.require_compact || is_compactly_embedded(g, &g.even_space())) {
        return Ok(g.even_space());
    }
    let ads: Vec<Mat> = (0..e).map(|i| even_block(&g.ad_basis(i), e)).collect();
    let found = scan_integer_points(e, search.bound, |y| {
        let mut m = Mat::zeros(e, e, tag);
        for (c, a) in y.iter().zip(&ads) {
            if *c != 0 {
                m = m.add(&a.scale(&Scalar::from_int(*c, tag)));
            }
        }
        let n0 = m.pow(e).kernel();
        if !is_nilpotent_subspace(&g0, &n0) {
            return ControlFlow::Continue(());
        }
        let h0 = embed_even(g, &n0);
        if search.require_compact && !is_compactly_embedded(g, &h0) {
            return ControlFlow::Continue(());
        }
        ControlFlow::Break(h0)
    });
    found.ok_or_else(|| {
        Error::SearchExhausted(format!(
            "no {}regular element with coordinates in [-{b}, {b}]",
            if search.require_compact { "compact " } else { "" },
            b = search.bound
        ))
    })
}

/// `h = N_g(h0)` with the checks that make it a Cartan subsuperalgebra.
pub fn cartan_subsuperalgebra(g: &LieSuperalgebra, h0: &Subspace) -> Result<CartanData> {
    let even = g.even_space();
    if !even.contains_space(h0) {
        return Err(Error::NotCartan("h0 is not inside the even part".into()));
    }
    if !g.is_subalgebra(h0) || !is_nilpotent_subspace(g, h0) {
        return Err(Error::NotCartan("h0 is not a nilpotent subalgebra".into()));
    }
    if g.normalizer(h0).intersect(&even) != *h0 {
        return Err(Error::NotCartan("h0 is not self-normalizing in the even part".into()));
    }
    let h = fitting_null(g, h0)?;
    if !is_nilpotent_subspace(g, &h) {
        return Err(Error::NotCartan("N_g(h0) is not nilpotent".into()));
    }
    if g.normalizer(&h) != h {
        return Err(Error::NotCartan("N_g(h0) is not self-normalizing".into()));
    }
    if h.intersect(&even) != *h0 {
        return Err(Error::NotCartan("N_g(h0) meets the even part in more than h0".into()));
    }
    Ok(CartanData { h0: h0.clone(), h, compactly_embedded: is_compactly_embedded(g, h0) })
}

/// Semisimple with purely imaginary spectrum.
pub fn is_elliptic(m: &Mat) -> bool {
    if !m.is_rational() {
        return false;
    }
    let sq = m.char_poly().squarefree_part();
    if !eval_poly_at(&sq, m).is_zero() {
        return false;
    }
    // μ imaginary for every eigenvalue ⇔ every root of χ(M²) is real and ≤ 0
    let s2 = m.mul(m).char_poly().squarefree_part();
    match s2.real_root_signs() {
        Ok((neg, zero, pos)) => pos == 0 && neg + zero == s2.degree().unwrap_or(0),
        Err(_) => false,
    }
}

pub fn eval_poly_at(p: &Poly, m: &Mat) -> Mat {
    let n = m.rows();
    let mut acc = Mat::zeros(n, n, m.tag());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).add(&Mat::scalar(n, &c.lift(m.tag()).expect("coefficients embed")));
    }
    acc
}

fn sample_combinations(basis: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(vec_add(&basis[i], &basis[j]));
        }
    }
    if basis.len() > 2 {
        let mut all = basis[0].clone();
        for (k, b) in basis.iter().enumerate().skip(1) {
            let c = Scalar::from_int(k as i64 + 1, b[0].tag());
            all = vec_add(&all, &b.iter().map(|x| x * &c).collect::<Vector>());
        }
        out.push(all);
    }
    out
}

/// `ad(K)` acting on `g` is semisimple with imaginary spectrum for `K` in a
/// basis of `k0` and a deterministic sample of combinations.
pub fn is_compactly_embedded(g: &LieSuperalgebra, k0: &Subspace) -> bool {
    sample_combinations(k0.basis()).iter().all(|k| is_elliptic(&g.ad(k)))
}

/// Root decomposition of `gℂ` for a compactly embedded Cartan.
pub fn root_decomposition(g: &LieSuperalgebra, cartan: &CartanData) -> Result<RootDatum> {
    if !cartan.compactly_embedded {
        return Err(Error::Precondition("root decomposition needs a compactly embedded Cartan".into()));
    }
    let n = g.dim();
    let hs = cartan.h0.basis();
    let ads: Vec<Mat> = hs.iter().map(|h| g.ad(h)).collect();
    let parts = if ads.is_empty() {
        vec![crate::glinalg::JointEigenspace { values: Vec::new(), space: g.full_space() }]
    } else {
        joint_generalized_eigenspaces(&ads)?
    };
    let field = parts.iter().flat_map(|p| p.values.iter()).fold(FieldTag::Q, |f, v| f.join(v.tag()).unwrap_or(f)).with_i();
    let real_field = FieldTag::build(false, field.sqrt_d());
    let mi = -Scalar::i(field);
    let space = g.space();
    let mut roots = Vec::new();
    for p in parts {
        let mut alpha = Vec::with_capacity(p.values.len());
        for mu in &p.values {
            let a = &mu.lift(field)? * &mi;
            if !a.is_real() {
                return Err(Error::NotCompactlyEmbedded(format!("eigenvalue {mu} is not imaginary")));
            }
            alpha.push(a.retag(real_field)?);
        }
        let sp = p.space.lift(field)?;
        let (even, odd) = (space.even_part(&sp), space.odd_part(&sp));
        if even.dim() + odd.dim() != sp.dim() {
            return Err(Error::Invariant("root space is not graded".into()));
        }
        roots.push(Root { alpha, even, odd });
    }
    roots.sort_by(|a, b| {
        a.alpha.iter().zip(&b.alpha).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    let total: usize = roots.iter().map(|r| r.even.dim() + r.odd.dim()).sum();
    let neg = |a: &[Scalar]| a.iter().map(|x| -x).collect::<Vec<_>>();
    let find = |a: &[Scalar]| roots.iter().find(|r| r.alpha == a);
    let symmetric = roots.iter().all(|r| {
        find(&neg(&r.alpha)).is_some_and(|s| s.even.dim() == r.even.dim() && s.odd.dim() == r.odd.dim())
    });
    let conjugation = roots.iter().all(|r| {
        find(&neg(&r.alpha)).is_some_and(|s| r.even.conj() == s.even && r.odd.conj() == s.odd)
    });
    let even_decomposition = {
        let e = g.even_space();
        let br = g.bracket_spaces(&cartan.h0, &e);
        cartan.h0.intersect(&br).is_zero() && cartan.h0.dim() + br.dim() == e.dim()
    };
    let checks = RootChecks { spaces_fill: total == n, symmetric, conjugation, even_decomposition };
    Ok(RootDatum { cartan: cartan.clone(), field, roots, checks })
}

/// Multiset of nonzero roots is closed under negation.
pub fn check_root_symmetry(roots: &[Vec<Scalar>]) -> bool {
    let nonzero: Vec<&Vec<Scalar>> = roots.iter().filter(|a| a.iter().any(|x| !x.is_zero())).collect();
    nonzero.iter().all(|a| {
        let m: Vec<Scalar> = a.iter().map(|x| -x).collect();
        nonzero.iter().filter(|b| ***b == m).count() == nonzero.iter().filter(|b| **b == *a).count()
    })
}

/// Projection of `g₀̄` onto `⋂ ker ad(K)` along `Σ im ad(K)`, `K ∈ k0`, in
/// even coordinates.
pub fn fixed_point_projection(g: &LieSuperalgebra, k0: &Subspace) -> Result<Mat> {
    let e = g.even_dim();
    let tag = g.tag();
    let ads: Vec<Mat> = k0.basis().iter().map(|k| even_block(&g.ad(k), e)).collect();
    let mut z = Subspace::full(e, tag);
    let mut s = Subspace::zero(e, tag);
    for a in &ads {
        z = z.intersect(&a.kernel());
        s = s.sum(&a.image());
    }
    if !z.intersect(&s).is_zero() || z.dim() + s.dim() != e {
        return Err(Error::NotCompactlyEmbedded("kernel and image of ad(k0) are not complementary".into()));
    }
    if e == 0 {
        return Ok(Mat::zeros(0, 0, tag));
    }
    let cols: Vec<Vector> = z.basis().iter().chain(s.basis()).cloned().collect();
    let b = Mat::from_cols(&cols, e, tag);
    let mut d = Mat::zeros(e, e, tag);
    for k in 0..z.dim() {
        d.set(k, k, Scalar::one(tag));
    }
    let inv = b.inverse().ok_or(NumError::DivisionByZero)?;
    Ok(b.mul(&d).mul(&inv))
}

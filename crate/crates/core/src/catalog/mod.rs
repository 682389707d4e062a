//! Example algebras: explicit builders and matrix real forms, keyed by name.

pub mod families;
pub mod realization;
pub mod registry;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::glinalg::{Mat, Subspace};
use crate::lsa::LieSuperalgebra;

pub use families::{build_osp, build_sq, build_su, osp_tau, sq_coords, su_tau, u_basis};
pub use realization::Realization;
pub use registry::{split_key, Args, Family, Registry, STANDARD_KEYS};

use realization::{ci, unit_matrix};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub dims: (usize, usize),
    pub nilpotent: bool,
    pub simple: Option<bool>,
    /// `CONE_OK` or `OBSTRUCTED` when the star-reduced verdict is known.
    pub verdict: Option<&'static str>,
    pub centroid_dim: Option<usize>,
    pub real_form: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub key: String,
    pub family: String,
    #[serde(skip)]
    pub algebra: LieSuperalgebra,
    #[serde(skip)]
    pub realization: Option<Realization>,
    /// Even Cartan subalgebra used in the realization, in algebra coordinates.
    #[serde(skip)]
    pub cartan_hint: Option<Subspace>,
    pub expected: Expected,
}

pub fn build(key: &str) -> Result<CatalogEntry> {
    Registry::standard().build(key)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealFormRow {
    pub key: &'static str,
    pub complexification: &'static str,
    pub condition: &'static str,
    pub even_quotient: &'static str,
}

const fn row(key: &'static str, complexification: &'static str, condition: &'static str, even_quotient: &'static str) -> RealFormRow {
    RealFormRow { key, complexification, condition, even_quotient }
}

pub const REAL_FORMS: &[RealFormRow] = &[
    row("su(p,q|r,s)", "A(m-1|n-1), m>n>1", "p+q=m, r+s=n", "su(p,q) ⊕ su(r,s)"),
    row("su*(2p|2q)", "A(m-1|n-1), m>n>1", "m=2p, n=2q even", "su*(2p) ⊕ su*(2q)"),
    row("sl(m|n,R)", "A(m-1|n-1), m>n>1", "", "sl(m,R) ⊕ sl(n,R)"),
    row("psu(p,q|r,s)", "A(m-1|m-1), n>1", "p+q=r+s=m", "su(p,q) ⊕ su(r,s)"),
    row("psu*(2p|2p)", "A(m-1|m-1), n>1", "m=2p even", "su*(2p) ⊕ su*(2p)"),
    row("psl(m|m,R)", "A(m-1|m-1), n>1", "", "sl(m,R) ⊕ sl(m,R)"),
    row("pqbar(m)", "A(m-1|m-1), n>1", "", "sl(m,C)"),
    row("usp(m)", "A(m-1|m-1), n>1", "", "sl(m,C)"),
    row("osp(p,q|2n)", "osp(m|2n,C)", "p+q=2m+1", "so(p,q) ⊕ sp(2n,R)"),
    row("osp*(m|p,q)", "osp(m|2n,C)", "p+q=n", "so*(m) ⊕ sp(p,q)"),
    row("D(2|1,alpha,2)", "D(2|1,alpha)", "alpha real", "sl(2,R) ⊕ sl(2,R) ⊕ sl(2,R)"),
    row("D(2|1,alpha,0)", "D(2|1,alpha)", "alpha real", "sl(2,R) ⊕ su(2) ⊕ su(2)"),
    row("D(2|1,1/alpha,0)", "D(2|1,alpha)", "alpha real", "sl(2,R) ⊕ su(2) ⊕ su(2)"),
    row("D(2|1,-alpha/(1+alpha),0)", "D(2|1,alpha)", "alpha real", "sl(2,R) ⊕ su(2) ⊕ su(2)"),
    row("D(2|1,alpha,1)", "D(2|1,alpha)", "alpha = -1-conj(alpha)", "sl(2,R) ⊕ sl(2,C)"),
    row("F(4,0)", "F(4)", "", "sl(2,R) ⊕ so(7)"),
    row("F(4,1)", "F(4)", "", "su(2) ⊕ so(1,6)"),
    row("F(4,2)", "F(4)", "", "su(2) ⊕ so(2,5)"),
    row("F(4,3)", "F(4)", "", "sl(2,R) ⊕ so(3,4)"),
    row("G(3,1)", "G(3)", "", "sl(2,R) ⊕ Der(O)"),
    row("G(3,2)", "G(3)", "", "sl(2,R) ⊕ Der(O_split)"),
    row("sp(n,R)", "P(n-1)", "", "sl(n,R)"),
    row("sp*(n)", "P(n-1)", "n even", "su*(n)"),
    row("psq(n,R)", "Q(n-1)", "", "sl(n,R)"),
    row("psq(p,q)", "Q(n-1)", "p+q=n", "su(p,q)"),
    row("psq*(n)", "Q(n-1)", "n even", "su*(n)"),
    row("W(n,R)", "W(n)", "", "gl(n,R)"),
    row("S(n,R)", "S(n)", "", "sl(n,R)"),
    row("S~(n,R)", "S~(n), n even", "", "sl(n,R)"),
    row("H(p,q)", "H(n)", "p+q=n", "so(p,q)"),
];

pub fn real_form_metadata(key: &str) -> Result<&'static RealFormRow> {
    REAL_FORMS.iter().find(|r| r.key == key).ok_or_else(|| Error::UnknownCatalog(key.to_string()))
}

/// A root vector together with `H = [X, τ(X)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootVector {
    pub x: Mat,
    pub h: Mat,
}

/// `X_{a,b}` with `E_{a,b}` in the lower-left block of `su(p,q|r,s)` (one-based,
/// `a ≤ r+s`, `b ≤ p+q`).
pub fn root_vectors_su(p: usize, q: usize, r: usize, s: usize, a: usize, b: usize) -> Result<RootVector> {
    let m = p + q;
    if a == 0 || a > r + s || b == 0 || b > m {
        return Err(Error::InvalidInput(format!("su root vector index ({a},{b}) out of range")));
    }
    let x = unit_matrix(m + r + s, m + a - 1, b - 1, ci(1, 0));
    let tx = su_tau(p, q, r, s, &x);
    Ok(RootVector { h: x.anticommutator(&tx), x })
}

/// Root vectors of `osp(p,q|2n)` for `1 ≤ a ≤ p`, `1 ≤ b ≤ n`; `variant` 0 or 1
/// selects the sign pattern, and the middle index of odd `p` has only one.
pub fn root_vectors_osp(p: usize, q: usize, n: usize, a: usize, b: usize, variant: u8) -> Result<RootVector> {
    let m = p + q;
    if a == 0 || a > p || b == 0 || b > n || variant > 1 {
        return Err(Error::InvalidInput(format!("osp root vector index ({a},{b}) variant {variant} out of range")));
    }
    let size = m + 2 * n;
    let ar = p + 1 - a;
    let e = |r: usize, c: usize, re: i64, im: i64| unit_matrix(size, r - 1, c - 1, ci(re, im));
    // B occupies rows 1..=m, columns m+1..; C occupies rows m+1.., columns 1..=m
    let (bb, cc) = (|j: usize| m + j, |j: usize| m + j);
    let x = if ar == a {
        if variant == 1 {
            return Err(Error::InvalidInput("the middle index has a single root vector".into()));
        }
        e(a, bb(b), 1, 0).add(&e(a, bb(b + n), 0, 1)).add(&e(cc(b), a, 0, -1)).add(&e(cc(b + n), a, 1, 0))
    } else if variant == 0 {
        e(a, bb(b), 1, 0)
            .add(&e(a, bb(b + n), 0, 1))
            .add(&e(ar, bb(b), 0, 1))
            .add(&e(ar, bb(b + n), -1, 0))
            .add(&e(cc(b), a, 0, -1))
            .add(&e(cc(b), ar, 1, 0))
            .add(&e(cc(b + n), a, 1, 0))
            .add(&e(cc(b + n), ar, 0, 1))
    } else {
        e(a, bb(b), 1, 0)
            .add(&e(a, bb(b + n), 0, -1))
            .add(&e(ar, bb(b), 0, 1))
            .add(&e(ar, bb(b + n), 1, 0))
            .add(&e(cc(b), a, 0, 1))
            .add(&e(cc(b), ar, -1, 0))
            .add(&e(cc(b + n), a, 1, 0))
            .add(&e(cc(b + n), ar, 0, 1))
    };
    let tx = osp_tau(p, q, &x);
    Ok(RootVector { h: x.anticommutator(&tx), x })
}

/// Coordinates of a complex matrix in the complexified algebra.
pub fn complex_coords(entry: &CatalogEntry, m: &Mat) -> Result<Vec<Scalar>> {
    let real = entry.realization.as_ref().ok_or_else(|| Error::InvalidInput(format!("{} has no matrix realization", entry.key)))?;
    real.complex_coords(m).ok_or_else(|| Error::InvalidInput("matrix is not in the complexified algebra".into()))
}

/// Coordinates of a matrix lying in the real form.
pub fn real_coords(entry: &CatalogEntry, m: &Mat) -> Result<Vec<Scalar>> {
    let real = entry.realization.as_ref().ok_or_else(|| Error::InvalidInput(format!("{} has no matrix realization", entry.key)))?;
    real.real_coords(m).ok_or_else(|| Error::InvalidInput("matrix is not in the real form".into()))
}

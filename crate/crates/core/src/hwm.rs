//! Truncated PBW shells `U(g⁻) ⊗ V` for highest-weight modules: positive
//! systems from a regular element and weight multiplicities up to a depth.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartan::RootDatum;
use crate::cliffrep::MatrixRep;
use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};
use crate::glinalg::{lift_vec, Mat};

/// `t`-module data: the single `t₀`-weight (root convention, `ρ(H) = iλ(H)`)
/// and the dimension.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TModule {
    pub weight: Vec<Scalar>,
    pub dim: usize,
}

impl TModule {
    pub fn new(weight: Vec<Scalar>, dim: usize) -> TModule {
        TModule { weight, dim }
    }

    /// Read the weight off a representation of the Cartan subsuperalgebra;
    /// each even operator must have a single eigenvalue.
    pub fn from_rep(rep: &MatrixRep) -> Result<TModule> {
        let n = rep.dim();
        let f = rep.field().with_i();
        let mut weight = Vec::new();
        for (k, m) in rep.rho.iter().enumerate() {
            if rep.algebra.parity(k) == 1 {
                continue;
            }
            let m = m.lift(f)?;
            let c = &m.trace() * &Scalar::from_frac(1, n.max(1) as i64, f);
            if !m.sub(&Mat::scalar(n, &c)).is_nilpotent() {
                return Err(Error::InvalidInput(format!("{} acts with more than one weight", rep.algebra.names()[k])));
            }
            weight.push(&c * &-Scalar::i(f));
        }
        Ok(TModule { weight, dim: n })
    }
}

fn eval(alpha: &[Scalar], coords: &[Scalar]) -> Result<Scalar> {
    let f = alpha.first().map_or(FieldTag::Q, |a| a.tag());
    let f = coords.iter().fold(f, |acc, c| acc.join(c.tag()).unwrap_or(acc));
    let mut s = Scalar::zero(f);
    for (a, c) in alpha.iter().zip(coords) {
        s = &s + &(&a.lift(f)? * &c.lift(f)?);
    }
    Ok(s)
}

/// `Δ⁺ = {α : α(X₀) > 0}` for `X₀ ∈ h₀` on which no root vanishes.
pub fn positive_system(rd: &RootDatum, x0: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
    let h0 = &rd.cartan.h0;
    let coords = h0.coords(x0).ok_or_else(|| Error::InvalidInput("X₀ is not in h₀".into()))?;
    let mut pos = Vec::new();
    for r in rd.nonzero() {
        let v = eval(&r.alpha, &coords)?;
        match v.real_sign() {
            Some(std::cmp::Ordering::Greater) => pos.push(r.alpha.clone()),
            Some(std::cmp::Ordering::Less) => {}
            _ => {
                let shown: Vec<String> = r.alpha.iter().map(|a| a.to_string()).collect();
                return Err(Error::Precondition(format!("root {shown:?} vanishes on X₀")));
            }
        }
    }
    Ok(pos)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generator {
    /// Index into the positive roots; the generator has weight `−α`.
    pub root: usize,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightEntry {
    pub weight: Vec<Scalar>,
    /// `m` with `weight = λ − Σ mᵢαᵢ`.
    pub coefficients: Vec<u32>,
    pub depth: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TruncatedModule {
    pub lambda: Vec<Scalar>,
    pub positive: Vec<Vec<Scalar>>,
    pub generators: Vec<Generator>,
    pub v_dim: usize,
    pub depth: usize,
    pub table: Vec<WeightEntry>,
    /// Claims that need analysis rather than finite computation.
    pub untested_claims: Vec<&'static str>,
}

impl TruncatedModule {
    pub fn multiplicity(&self, weight: &[Scalar]) -> usize {
        self.table.iter().find(|e| e.weight == weight).map_or(0, |e| e.multiplicity)
    }

    /// Every weight equals `λ − Σ mᵢαᵢ` with `mᵢ ≥ 0`.
    pub fn check_cone(&self) -> bool {
        self.table.iter().all(|e| {
            let mut w = self.lambda.clone();
            for (m, a) in e.coefficients.iter().zip(&self.positive) {
                for (wk, ak) in w.iter_mut().zip(a) {
                    let f = wk.tag().join(ak.tag()).unwrap();
                    *wk = &wk.lift(f).unwrap() - &(&ak.lift(f).unwrap() * &Scalar::from_int(*m as i64, f));
                }
            }
            w == e.weight
        })
    }
}

/// Free PBW monomials in `g⁻` of degree at most `depth`, odd exponents at most one.
pub fn build_truncated(rd: &RootDatum, positive: &[Vec<Scalar>], v: &TModule, depth: usize) -> Result<TruncatedModule> {
    let h = rd.cartan.h0.dim();
    if v.weight.len() != h {
        return Err(Error::InvalidInput(format!("weight needs {h} values")));
    }
    let mut generators = Vec::new();
    for (i, a) in positive.iter().enumerate() {
        let neg: Vec<Scalar> = a.iter().map(|x| -x).collect();
        let r = rd.root(&neg).ok_or_else(|| Error::Invariant("negative of a positive root is missing".into()))?;
        generators.extend((0..r.even.dim()).map(|_| Generator { root: i, parity: 0 }));
        generators.extend((0..r.odd.dim()).map(|_| Generator { root: i, parity: 1 }));
    }
    let field = positive.iter().flatten().chain(&v.weight).fold(FieldTag::Q, |f, x| f.join(x.tag()).unwrap_or(f));
    let lambda = lift_vec(&v.weight, field)?;
    let pos: Vec<Vec<Scalar>> = positive.iter().map(|a| lift_vec(a, field)).collect::<std::result::Result<_, _>>()?;

    let mut table: BTreeMap<Vec<String>, WeightEntry> = BTreeMap::new();
    let mut exps = vec![0usize; generators.len()];
    enumerate(&generators, depth, 0, 0, &mut exps, &mut |e| {
        let mut coeff = vec![0u32; pos.len()];
        for (g, &k) in generators.iter().zip(e) {
            coeff[g.root] += k as u32;
        }
        let mut w = lambda.clone();
        for (m, a) in coeff.iter().zip(&pos) {
            if *m > 0 {
                for (wk, ak) in w.iter_mut().zip(a) {
                    *wk = &*wk - &(ak * &Scalar::from_int(*m as i64, field));
                }
            }
        }
        let d: usize = e.iter().sum();
        let key: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        table
            .entry(key)
            .and_modify(|x| {
                x.multiplicity += v.dim;
                x.depth = x.depth.min(d);
            })
            .or_insert(WeightEntry { weight: w, coefficients: coeff, depth: d, multiplicity: v.dim });
    });
    let mut table: Vec<WeightEntry> = table.into_values().collect();
    table.sort_by(|a, b| {
        let ha: u32 = a.coefficients.iter().sum();
        let hb: u32 = b.coefficients.iter().sum();
        ha.cmp(&hb).then_with(|| a.coefficients.cmp(&b.coefficients).reverse())
    });
    let out = TruncatedModule {
        lambda,
        positive: pos,
        generators,
        v_dim: v.dim,
        depth,
        table,
        untested_claims: vec!["density of the t-finite vectors", "irreducibility of the completed module"],
    };
    if !out.check_cone() {
        return Err(Error::Invariant("a weight lies outside λ − ℕΔ⁺".into()));
    }
    Ok(out)
}

fn enumerate(gens: &[Generator], budget: usize, at: usize, used: usize, exps: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at == gens.len() {
        f(exps);
        return;
    }
    let max = if gens[at].parity == 1 { 1 } else { budget - used };
    for k in 0..=max.min(budget - used) {
        exps[at] = k;
        enumerate(gens, budget, at + 1, used + k, exps, f);
    }
    exps[at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_subsuperalgebra, root_decomposition};
    use crate::catalog::build;

    fn osp12() -> RootDatum {
        let e = build("osp(1|2)").unwrap();
        let c = cartan_subsuperalgebra(&e.algebra, e.cartan_hint.as_ref().unwrap()).unwrap();
        root_decomposition(&e.algebra, &c).unwrap()
    }

    fn regular(rd: &RootDatum) -> Vec<Scalar> {
        rd.cartan.h0.basis()[0].clone()
    }

    #[test]
    fn osp_positive_system() {
        let rd = osp12();
        let pos = positive_system(&rd, &regular(&rd)).unwrap();
        assert_eq!(pos.len(), 2);
        let (a, b) = (&pos[0][0], &pos[1][0]);
        assert!(b == &(a * &Scalar::from_int(2, a.tag())) || a == &(b * &Scalar::from_int(2, b.tag())));
        let neg: Vec<Scalar> = regular(&rd).iter().map(|x| -x).collect();
        let neg_pos = positive_system(&rd, &neg).unwrap();
        assert!(neg_pos.iter().all(|r| !pos.contains(r)));
        let zero = vec![Scalar::zero(FieldTag::Q); rd.cartan.h0.ambient()];
        assert!(matches!(positive_system(&rd, &zero), Err(Error::Precondition(_))));
    }

    #[test]
    fn osp_truncation() {
        let rd = osp12();
        let pos = positive_system(&rd, &regular(&rd)).unwrap();
        let two = |x: &Scalar| x * &Scalar::from_int(2, x.tag());
        let alpha = pos.iter().map(|a| a[0].clone()).find(|a| pos.iter().any(|b| b[0] == two(a))).unwrap();
        let v = TModule::new(vec![Scalar::zero(FieldTag::Q)], 1);
        let t = build_truncated(&rd, &pos, &v, 2).unwrap();
        assert_eq!(t.table.len(), 5);
        for m in 0..5 {
            let w = vec![-(&alpha * &Scalar::from_int(m, alpha.tag()))];
            assert_eq!(t.multiplicity(&w), 1, "m = {m}");
        }
        let t0 = build_truncated(&rd, &pos, &TModule::new(vec![Scalar::zero(FieldTag::Q)], 3), 0).unwrap();
        assert_eq!(t0.table.len(), 1);
        assert_eq!(t0.table[0].multiplicity, 3);
    }
}

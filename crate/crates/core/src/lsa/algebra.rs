//! Finite-dimensional Lie superalgebras given by structure constants in a
//! homogeneous basis, even block first.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};
use crate::glinalg::{is_zero_vec, unit_vec, vec_axpy, zero_vec, Echelon, GradedSpace, Mat, Subspace, Vector};

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
}

pub fn dense_from_sparse(s: &SparseVec, n: usize, tag: FieldTag) -> Vector {
    let mut v = zero_vec(n, tag);
    for (k, x) in s {
        v[*k] = x.clone();
    }
    v
}

/// Sign `(-1)^(p q)`.
pub fn koszul(p: u8, q: u8) -> i64 {
    if p & q & 1 == 1 {
        -1
    } else {
        1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieSuperalgebra {
    name: String,
    space: GradedSpace,
    tag: FieldTag,
    names: Vec<String>,
    table: Vec<SparseVec>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub kind: &'static str,
    pub elements: Vec<String>,
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub parity_ok: bool,
    pub antisymmetry_ok: bool,
    pub jacobi_ok: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.parity_ok && self.antisymmetry_ok && self.jacobi_ok
    }
}

const MAX_REPORTED: usize = 20;

impl LieSuperalgebra {
    /// Algebra with all brackets zero.
    pub fn abelian(name: &str, names: Vec<String>, even: usize, tag: FieldTag) -> LieSuperalgebra {
        let n = names.len();
        assert!(even <= n);
        LieSuperalgebra {
            name: name.to_string(),
            space: GradedSpace::new(even, n - even),
            tag,
            names,
            table: vec![Vec::new(); n * n],
        }
    }

    /// Build from a dense bracket function on basis pairs.
    pub fn from_fn(
        name: &str,
        names: Vec<String>,
        even: usize,
        tag: FieldTag,
        f: impl Fn(usize, usize) -> Vector,
    ) -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian(name, names, even, tag);
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                g.table[i * n + j] = sparse_from_dense(&f(i, j));
            }
        }
        g
    }

    /// Set `[e_i, e_j]` only.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: SparseVec) {
        let n = self.dim();
        self.table[i * n + j] = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    }

    /// Set `[e_i, e_j]` and the graded-antisymmetric partner `[e_j, e_i]`.
    pub fn set_graded(&mut self, i: usize, j: usize, v: SparseVec) {
        let s = -koszul(self.parity(i), self.parity(j));
        let partner: SparseVec = v.iter().map(|(k, x)| (*k, x.scale(&num::BigRational::from_integer(s.into())))).collect();
        self.set_bracket(i, j, v);
        self.set_bracket(j, i, partner);
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn even_dim(&self) -> usize {
        self.space.even
    }

    pub fn odd_dim(&self) -> usize {
        self.space.odd
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.space.parity(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_basis_dense(&self, i: usize, j: usize) -> Vector {
        dense_from_sparse(self.bracket_basis(i, j), self.dim(), self.tag)
    }

    /// Bilinear extension of the bracket to arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let tag = x.first().map_or(self.tag, |s| s.tag());
        let n = self.dim();
        let mut out = zero_vec(n, tag);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    let c = c.lift(tag).expect("structure constants embed into the working field");
                    out[*k] = &out[*k] + &(&ab * &c);
                }
            }
        }
        out
    }

    /// `[e_i, v]` for a sparse `v`.
    fn bracket_basis_sparse(&self, i: usize, v: &SparseVec) -> Vector {
        let mut out = zero_vec(self.dim(), self.tag);
        for (j, a) in v {
            for (k, c) in self.bracket_basis(i, *j) {
                out[*k] = &out[*k] + &(a * c);
            }
        }
        out
    }

    /// Matrix of `ad(x)`, column `j` holding `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Mat {
        let tag = x.first().map_or(self.tag, |s| s.tag());
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vec(n, j, tag))).collect();
        Mat::from_cols(&cols, n, tag)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_basis_dense(i, j)).collect();
        Mat::from_cols(&cols, n, self.tag)
    }

    /// Right multiplication `R_x(y) = (-1)^{|x||y|} [y, x]` for a basis element.
    pub fn right_mult_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                let v = self.bracket_basis_dense(j, i);
                if koszul(self.parity(i), self.parity(j)) < 0 {
                    v.iter().map(|x| -x).collect()
                } else {
                    v
                }
            })
            .collect();
        Mat::from_cols(&cols, n, self.tag)
    }

    /// Parity, graded antisymmetry and the graded Jacobi identity on all basis triples.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut violations = Vec::new();
        let mut parity_ok = true;
        let mut antisymmetry_ok = true;
        let mut jacobi_ok = true;
        let residual = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        for i in 0..n {
            for j in 0..n {
                let p = self.parity(i) ^ self.parity(j);
                if self.bracket_basis(i, j).iter().any(|(k, _)| self.parity(*k) != p) {
                    parity_ok = false;
                    if violations.len() < MAX_REPORTED {
                        violations.push(Violation {
                            kind: "parity",
                            elements: vec![self.names[i].clone(), self.names[j].clone()],
                            residual: residual(&self.bracket_basis_dense(i, j)),
                        });
                    }
                }
                let s = Scalar::from_int(koszul(self.parity(i), self.parity(j)), self.tag);
                let lhs = self.bracket_basis_dense(i, j);
                let rhs = self.bracket_basis_dense(j, i);
                let res: Vector = lhs.iter().zip(&rhs).map(|(a, b)| a + &(&s * b)).collect();
                if !is_zero_vec(&res) {
                    antisymmetry_ok = false;
                    if violations.len() < MAX_REPORTED {
                        violations.push(Violation {
                            kind: "antisymmetry",
                            elements: vec![self.names[i].clone(), self.names[j].clone()],
                            residual: residual(&res),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (pa, pb, pc) = (self.parity(a), self.parity(b), self.parity(c));
                    let mut res = zero_vec(n, self.tag);
                    let terms = [(a, b, c, koszul(pa, pc)), (b, c, a, koszul(pb, pa)), (c, a, b, koszul(pc, pb))];
                    for (x, y, z, s) in terms {
                        let inner = self.bracket_basis(y, z);
                        if inner.is_empty() {
                            continue;
                        }
                        let v = self.bracket_basis_sparse(x, inner);
                        vec_axpy(&mut res, &Scalar::from_int(s, self.tag), &v);
                    }
                    if !is_zero_vec(&res) {
                        jacobi_ok = false;
                        if violations.len() < MAX_REPORTED {
                            violations.push(Violation {
                                kind: "jacobi",
                                elements: vec![self.names[a].clone(), self.names[b].clone(), self.names[c].clone()],
                                residual: residual(&res),
                            });
                        }
                    }
                }
            }
        }
        AxiomReport { parity_ok, antisymmetry_ok, jacobi_ok, violations }
    }

    /// Same structure constants over a larger tower field.
    pub fn lift(&self, tag: FieldTag) -> Result<LieSuperalgebra> {
        let table = self
            .table
            .iter()
            .map(|v| v.iter().map(|(k, x)| Ok((*k, x.lift(tag)?))).collect::<Result<SparseVec>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LieSuperalgebra { table, tag, ..self.clone() })
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim(), self.tag)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim(), self.tag)
    }

    pub fn even_space(&self) -> Subspace {
        self.space.even_space(self.tag)
    }

    pub fn odd_space(&self) -> Subspace {
        self.space.odd_space(self.tag)
    }

    /// Homogeneous basis of a graded subspace, or an error if it is not graded.
    pub fn graded_basis(&self, s: &Subspace) -> Result<Vec<Vector>> {
        if !self.space.is_graded(s) {
            return Err(Error::NotGraded);
        }
        Ok(self.space.homogeneous_basis(s))
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}`
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.dim(), a.tag());
        for x in a.basis() {
            for y in b.basis() {
                if e.is_full() {
                    break;
                }
                e.add_row(self.bracket(x, y));
            }
        }
        e.row_space()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_space(&self.bracket_spaces(s, s))
    }

    /// `[g, I] ⊆ I`, with a witness pair on failure.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<(usize, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for y in s.basis() {
                let v = self.bracket(&unit_vec(n, i, s.tag()), y);
                if !s.contains(&v) {
                    return Some((i, y.clone()));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_witness(s).is_none()
    }

    /// Supercommutant `{X : [S, X] = 0}` of a graded subspace.
    pub fn supercommutant(&self, s: &Subspace) -> Result<Subspace> {
        let basis = self.graded_basis(s)?;
        let mut e = Echelon::new(self.dim(), s.tag());
        for x in &basis {
            let m = self.ad(x);
            for r in m.row_vecs() {
                if e.is_full() {
                    break;
                }
                e.add_row(r);
            }
        }
        Ok(e.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.supercommutant(&self.full_space()).expect("full space is graded")
    }

    /// Normalizer `{X : [X, S] ⊆ S}`.
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let tag = s.tag();
        // annihilator rows w with w·v = 0 for all v ∈ S
        let sm = Mat::from_rows(if s.is_zero() { vec![zero_vec(n, tag)] } else { s.basis().to_vec() }, tag);
        let ann = sm.kernel();
        let mut e = Echelon::new(n, tag);
        for y in s.basis() {
            // column j of this map is [e_j, y]
            let cols: Vec<Vector> = (0..n).map(|j| self.bracket(&unit_vec(n, j, tag), y)).collect();
            let m = Mat::from_cols(&cols, n, tag);
            for w in ann.basis() {
                let row: Vector = (0..n).map(|j| crate::glinalg::dot(w, &m.col(j))).collect();
                e.add_row(row);
            }
        }
        e.kernel()
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.full_space()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(last, last);
            if next == *last {
                break;
            }
            let stop = next.is_zero();
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full_space();
        let mut out = vec![full.clone()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(&full, last);
            if next == *last {
                break;
            }
            let stop = next.is_zero();
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Purely even Lie algebra on the even basis vectors.
    pub fn even_part(&self) -> LieSuperalgebra {
        let e = self.even_dim();
        let names = self.names[..e].to_vec();
        LieSuperalgebra::from_fn(&format!("{}_0", self.name), names, e, self.tag, |i, j| {
            self.bracket_basis_dense(i, j)[..e].to_vec()
        })
    }

    /// Subalgebra on a graded subspace, with its homogeneous basis as embedding.
    pub fn subalgebra(&self, s: &Subspace, name: &str) -> Result<(LieSuperalgebra, Vec<Vector>)> {
        let basis = self.graded_basis(s)?;
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra(format!("{name} is not closed under the bracket")));
        }
        let even = self.space.even_part(s).dim();
        let coords = BasisCoords::new(&basis, s);
        let names: Vec<String> = (0..basis.len()).map(|k| format!("{name}{}", k + 1)).collect();
        let sub = LieSuperalgebra::from_fn(name, names, even, s.tag(), |i, j| {
            coords.coords(&self.bracket(&basis[i], &basis[j])).expect("closed")
        });
        Ok((sub, basis))
    }
}

/// Coordinates with respect to an arbitrary basis of a subspace.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    space: Subspace,
    inv: Mat,
}

impl BasisCoords {
    pub fn new(basis: &[Vector], space: &Subspace) -> BasisCoords {
        let k = basis.len();
        let tag = space.tag();
        let t = Mat::from_rows(
            basis.iter().map(|b| space.pivots().iter().map(|&p| b[p].clone()).collect()).collect(),
            tag,
        );
        let inv = if k == 0 { Mat::zeros(0, 0, tag) } else { t.transpose().inverse().expect("basis is independent") };
        BasisCoords { space: space.clone(), inv }
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let c = self.space.coords(v)?;
        if c.is_empty() {
            return Some(c);
        }
        Some(self.inv.mul_vec(&c))
    }
}

//! Derivations, centroid and differential constants, each solved as an exact
//! homogeneous linear system on matrix entries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactnum::Scalar;
use crate::glinalg::{Echelon, Mat, Vector};

use super::algebra::{koszul, LieSuperalgebra};

/// A homogeneous subspace of `End(g)` given by even and odd bases.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EndSpace {
    pub even: Vec<Mat>,
    pub odd: Vec<Mat>,
}

impl EndSpace {
    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    fn all(&self) -> impl Iterator<Item = (u8, &Mat)> {
        self.even.iter().map(|m| (0u8, m)).chain(self.odd.iter().map(|m| (1u8, m)))
    }
}

/// Unknown entries `A[k][j]` allowed for parity `s` (`|k| = |j| + s`).
struct Unknowns {
    index: Vec<Option<usize>>,
    entries: Vec<(usize, usize)>,
    n: usize,
}

impl Unknowns {
    fn new(g: &LieSuperalgebra, s: u8) -> Unknowns {
        let n = g.dim();
        let mut index = vec![None; n * n];
        let mut entries = Vec::new();
        for k in 0..n {
            for j in 0..n {
                if g.parity(k) == g.parity(j) ^ s {
                    index[k * n + j] = Some(entries.len());
                    entries.push((k, j));
                }
            }
        }
        Unknowns { index, entries, n }
    }

    fn var(&self, k: usize, j: usize) -> Option<usize> {
        self.index[k * self.n + j]
    }

    fn to_mat(&self, v: &[Scalar], g: &LieSuperalgebra) -> Mat {
        let mut m = Mat::zeros(self.n, self.n, g.tag());
        for (x, &(k, j)) in v.iter().zip(&self.entries) {
            m.set(k, j, x.clone());
        }
        m
    }
}

type Rows = BTreeMap<usize, BTreeMap<usize, Scalar>>;

fn add_term(rows: &mut Rows, row: usize, var: usize, c: Scalar) {
    let e = rows.entry(row).or_default().entry(var).or_insert_with(|| Scalar::zero(c.tag()));
    *e = &*e + &c;
}

fn flush(e: &mut Echelon, rows: Rows, nvars: usize, g: &LieSuperalgebra) {
    for (_, r) in rows {
        if e.is_full() {
            return;
        }
        let mut v: Vector = vec![Scalar::zero(g.tag()); nvars];
        let mut any = false;
        for (k, x) in r {
            if !x.is_zero() {
                any = true;
                v[k] = x;
            }
        }
        if any {
            e.add_row(v);
        }
    }
}

fn derivations_of_parity(g: &LieSuperalgebra, s: u8) -> Vec<Mat> {
    let n = g.dim();
    let u = Unknowns::new(g, s);
    let mut e = Echelon::new(u.entries.len(), g.tag());
    for a in 0..n {
        for b in 0..n {
            if e.is_full() {
                break;
            }
            // D[e_a, e_b] - [D e_a, e_b] - (-1)^{|a| s} [e_a, D e_b] = 0, coordinate k
            let mut rows: Rows = BTreeMap::new();
            for (j, c) in g.bracket_basis(a, b) {
                for k in 0..n {
                    if let Some(v) = u.var(k, *j) {
                        add_term(&mut rows, k, v, c.clone());
                    }
                }
            }
            for m in 0..n {
                if let Some(v) = u.var(m, a) {
                    for (k, c) in g.bracket_basis(m, b) {
                        add_term(&mut rows, *k, v, -c);
                    }
                }
            }
            let sign = Scalar::from_int(koszul(g.parity(a), s), g.tag());
            for m in 0..n {
                if let Some(v) = u.var(m, b) {
                    for (k, c) in g.bracket_basis(a, m) {
                        add_term(&mut rows, *k, v, -(&sign * c));
                    }
                }
            }
            flush(&mut e, rows, u.entries.len(), g);
        }
    }
    e.kernel().basis().iter().map(|v| u.to_mat(v, g)).collect()
}

/// All homogeneous derivations `D([a,b]) = [Da, b] + (-1)^{|a||D|}[a, Db]`.
pub fn derivations(g: &LieSuperalgebra) -> EndSpace {
    EndSpace { even: derivations_of_parity(g, 0), odd: derivations_of_parity(g, 1) }
}

/// Homogeneous `A` of parity `s` with `A T - (-1)^{s|T|} T A = 0` for each `(|T|, T)`.
fn supercommutant_of_parity(g: &LieSuperalgebra, ops: &[(u8, Mat)], s: u8) -> Vec<Mat> {
    let n = g.dim();
    let u = Unknowns::new(g, s);
    let mut e = Echelon::new(u.entries.len(), g.tag());
    for (pt, t) in ops {
        if e.is_full() {
            break;
        }
        let sigma = Scalar::from_int(koszul(s, *pt), g.tag());
        let mut rows: Rows = BTreeMap::new();
        for m in 0..n {
            for j in 0..n {
                let c = t.get(m, j);
                if c.is_zero() {
                    continue;
                }
                // (A T)[k][j] gains A[k][m] T[m][j]
                for k in 0..n {
                    if let Some(v) = u.var(k, m) {
                        add_term(&mut rows, k * n + j, v, c.clone());
                    }
                }
                // (T A)[m][jj] gains T[m][j] A[j][jj]
                for jj in 0..n {
                    if let Some(v) = u.var(j, jj) {
                        add_term(&mut rows, m * n + jj, v, -(&sigma * c));
                    }
                }
            }
        }
        flush(&mut e, rows, u.entries.len(), g);
    }
    e.kernel().basis().iter().map(|v| u.to_mat(v, g)).collect()
}

/// Centroid: homogeneous endomorphisms supercommuting with every left and
/// right multiplication by a basis element.
pub fn centroid(g: &LieSuperalgebra) -> EndSpace {
    let mut ops = Vec::new();
    for i in 0..g.dim() {
        ops.push((g.parity(i), g.ad_basis(i)));
        ops.push((g.parity(i), g.right_mult_basis(i)));
    }
    EndSpace { even: supercommutant_of_parity(g, &ops, 0), odd: supercommutant_of_parity(g, &ops, 1) }
}

/// Supercommutator `[A, B] = AB - (-1)^{|A||B|} BA`.
pub fn super_bracket(pa: u8, a: &Mat, pb: u8, b: &Mat) -> Mat {
    let ba = b.mul(a);
    if koszul(pa, pb) < 0 {
        a.mul(b).add(&ba)
    } else {
        a.mul(b).sub(&ba)
    }
}

/// Centroid elements supercommuting with every derivation.
pub fn differential_constants(g: &LieSuperalgebra) -> EndSpace {
    let der = derivations(g);
    let cen = centroid(g);
    let solve = |basis: &[Mat], pc: u8| -> Vec<Mat> {
        if basis.is_empty() {
            return Vec::new();
        }
        let k = basis.len();
        let n = g.dim();
        let mut e = Echelon::new(k, g.tag());
        for (pd, d) in der.all() {
            let images: Vec<Mat> = basis.iter().map(|c| super_bracket(pc, c, pd, d)).collect();
            for r in 0..n {
                for c in 0..n {
                    let row: Vector = images.iter().map(|m| m.get(r, c).clone()).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        e.add_row(row);
                    }
                }
            }
        }
        e.kernel()
            .basis()
            .iter()
            .map(|t| {
                t.iter().zip(basis).fold(Mat::zeros(n, n, g.tag()), |acc, (x, m)| acc.add(&m.scale(x)))
            })
            .collect()
    };
    EndSpace { even: solve(&cen.even, 0), odd: solve(&cen.odd, 1) }
}

/// Inner derivations `ad(x)` for basis `x`, as a spanning set of their span's dimension.
pub fn inner_derivation_dim(g: &LieSuperalgebra) -> usize {
    let n = g.dim();
    let vecs: Vec<Vector> =
        (0..n).map(|i| g.ad_basis(i).row_vecs().into_iter().flatten().collect::<Vector>()).collect();
    crate::glinalg::Subspace::from_vectors(n * n, g.tag(), vecs).dim()
}

//! Real forms of matrix Lie superalgebras, computed as the common kernel of
//! real-linear constraints on complex supermatrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};
use crate::glinalg::{Echelon, Mat, Subspace, Vector};
use crate::lsa::{BasisCoords, LieSuperalgebra};

const QI: FieldTag = FieldTag::QI;

pub fn ci(re: i64, im: i64) -> Scalar {
    &Scalar::from_int(re, QI) + &(&Scalar::from_int(im, QI) * &Scalar::i(QI))
}

/// `E_{r,c}` (zero-based) scaled by `s`.
pub fn unit_matrix(n: usize, r: usize, c: usize, s: Scalar) -> Mat {
    let mut m = Mat::zeros(n, n, QI);
    m.set(r, c, s);
    m
}

/// Real and imaginary parts of every entry, as one rational vector.
pub fn flatten_real(m: &Mat) -> Vector {
    let mut v = Vec::with_capacity(2 * m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            v.push(Scalar::from_rat(x.coords()[0].clone(), FieldTag::Q));
            v.push(Scalar::from_rat(x.coords()[1].clone(), FieldTag::Q));
        }
    }
    v
}

/// Complex matrices realizing a real Lie superalgebra; row and column `k`
/// have parity `parities[k]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Realization {
    pub size: usize,
    pub parities: Vec<u8>,
    pub basis: Vec<Mat>,
}

impl Realization {
    pub fn matrix_parity(&self, m: &Mat) -> Option<u8> {
        let mut p = None;
        for r in 0..self.size {
            for c in 0..self.size {
                if !m.get(r, c).is_zero() {
                    let q = self.parities[r] ^ self.parities[c];
                    if p.is_some_and(|x| x != q) {
                        return None;
                    }
                    p = Some(q);
                }
            }
        }
        Some(p.unwrap_or(0))
    }

    /// Supercommutator of homogeneous supermatrices.
    pub fn bracket(&self, x: &Mat, y: &Mat) -> Mat {
        let px = self.matrix_parity(x).expect("homogeneous");
        let py = self.matrix_parity(y).expect("homogeneous");
        if px & py == 1 {
            x.anticommutator(y)
        } else {
            x.commutator(y)
        }
    }

    /// `Σ c_k B_k` for real or complex coefficients.
    pub fn element(&self, coords: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.size, self.size, QI);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(&c.lift(QI).expect("coefficients lie in Q(i)")));
            }
        }
        m
    }

    /// Complex coordinates of a matrix in the complexified span of the basis.
    pub fn complex_coords(&self, m: &Mat) -> Option<Vector> {
        let cols: Vec<Vector> = self.basis.iter().map(|b| b.row_vecs().concat()).collect();
        let a = Mat::from_cols(&cols, self.size * self.size, QI);
        let x = a.solve(&m.row_vecs().concat())?;
        Some(x)
    }

    /// Real coordinates of a matrix in the real span of the basis.
    pub fn real_coords(&self, m: &Mat) -> Option<Vector> {
        let flat: Vec<Vector> = self.basis.iter().map(flatten_real).collect();
        let span = Subspace::from_vectors(flat[0].len(), FieldTag::Q, flat.clone());
        BasisCoords::new(&flat, &span).coords(&flatten_real(m))
    }

    /// Real subspace of coordinates whose matrices vanish outside `support`.
    pub fn subspace_supported(&self, support: impl Fn(usize, usize) -> bool) -> Subspace {
        let n = self.basis.len();
        let mut e = Echelon::new(n, FieldTag::Q);
        for r in 0..self.size {
            for c in 0..self.size {
                if support(r, c) {
                    continue;
                }
                for part in 0..2 {
                    let row: Vector = self
                        .basis
                        .iter()
                        .map(|b| Scalar::from_rat(b.get(r, c).coords()[part].clone(), FieldTag::Q))
                        .collect();
                    e.add_row(row);
                }
            }
        }
        e.kernel()
    }
}

pub type Constraint<'a> = Box<dyn Fn(&Mat) -> Mat + 'a>;

/// Real basis of `{X of parity s : C(X) = 0 for every constraint C}`, in
/// canonical echelon form over the real and imaginary parts of the entries.
pub fn real_form_basis(size: usize, parities: &[u8], s: u8, constraints: &[Constraint]) -> Vec<Mat> {
    let mut gens: Vec<Mat> = Vec::new();
    for r in 0..size {
        for c in 0..size {
            if parities[r] ^ parities[c] == s {
                gens.push(unit_matrix(size, r, c, ci(1, 0)));
                gens.push(unit_matrix(size, r, c, ci(0, 1)));
            }
        }
    }
    if gens.is_empty() {
        return Vec::new();
    }
    let outputs: Vec<Vector> = gens.iter().map(|g| constraints.iter().flat_map(|c| flatten_real(&c(g))).collect()).collect();
    let rows = outputs[0].len();
    let a = Mat::from_cols(&outputs, rows, FieldTag::Q);
    let ker = if rows == 0 { Subspace::full(gens.len(), FieldTag::Q) } else { a.kernel() };
    // canonical basis: echelon form of the flattened matrices themselves
    let mats: Vec<Mat> = ker
        .basis()
        .iter()
        .map(|x| {
            x.iter().zip(&gens).fold(Mat::zeros(size, size, QI), |acc, (c, g)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&g.scale(&c.lift(QI).unwrap()))
                }
            })
        })
        .collect();
    let flat: Vec<Vector> = mats.iter().map(flatten_real).collect();
    let canon = Subspace::from_vectors(2 * size * size, FieldTag::Q, flat);
    canon
        .basis()
        .iter()
        .map(|v| {
            let mut m = Mat::zeros(size, size, QI);
            for r in 0..size {
                for c in 0..size {
                    let k = 2 * (r * size + c);
                    let re = v[k].coords()[0].clone();
                    let im = v[k + 1].coords()[0].clone();
                    m.set(r, c, &Scalar::from_rat(re, QI) + &(&Scalar::from_rat(im, QI) * &Scalar::i(QI)));
                }
            }
            m
        })
        .collect()
}

/// Short label like `iE11-iE22` or `E12+E21` (one-based indices).
pub fn matrix_label(m: &Mat) -> String {
    let mut out = String::new();
    let wide = m.rows() > 9;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let x = m.get(r, c);
            if x.is_zero() {
                continue;
            }
            let idx = if wide { format!("{},{}", r + 1, c + 1) } else { format!("{}{}", r + 1, c + 1) };
            let neg = x.is_real() && x.real_sign() == Some(std::cmp::Ordering::Less)
                || x.is_imaginary() && x.imag_part().real_sign() == Some(std::cmp::Ordering::Less);
            let a = if neg { -x } else { x.clone() };
            let coef = if a.is_one() {
                String::new()
            } else if a == Scalar::i(QI) {
                "i".to_string()
            } else {
                format!("({a})")
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&format!("{coef}E{idx}"));
        }
    }
    out
}

/// Structure constants of the real span of `basis` (even block first).
pub fn algebra_from_realization(name: &str, real: &Realization, names: Option<Vec<String>>) -> Result<LieSuperalgebra> {
    let parities: Vec<u8> = real
        .basis
        .iter()
        .map(|b| real.matrix_parity(b).ok_or_else(|| Error::Invariant("basis matrix is not homogeneous".into())))
        .collect::<Result<_>>()?;
    let even = parities.iter().take_while(|&&p| p == 0).count();
    if parities[even..].iter().any(|&p| p == 0) {
        return Err(Error::Invariant("basis must list even matrices first".into()));
    }
    let flat: Vec<Vector> = real.basis.iter().map(flatten_real).collect();
    let span = Subspace::from_vectors(2 * real.size * real.size, FieldTag::Q, flat.clone());
    if span.dim() != flat.len() {
        return Err(Error::Invariant("basis matrices are linearly dependent".into()));
    }
    let coords = BasisCoords::new(&flat, &span);
    let names = names.unwrap_or_else(|| real.basis.iter().map(matrix_label).collect());
    let n = real.basis.len();
    let mut table = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            let m = real.bracket(&real.basis[i], &real.basis[j]);
            table[i * n + j] = coords
                .coords(&flatten_real(&m))
                .ok_or_else(|| Error::Invariant(format!("[{}, {}] leaves the span", names[i], names[j])))?;
        }
    }
    Ok(LieSuperalgebra::from_fn(name, names, even, FieldTag::Q, |i, j| table[i * n + j].clone()))
}

/// Blocks `(A, B, C, D)` of a supermatrix with an `m`-dimensional even block.
pub fn blocks(x: &Mat, m: usize) -> (Mat, Mat, Mat, Mat) {
    let n = x.rows();
    let r0: Vec<usize> = (0..m).collect();
    let r1: Vec<usize> = (m..n).collect();
    (x.submatrix(&r0, &r0), x.submatrix(&r0, &r1), x.submatrix(&r1, &r0), x.submatrix(&r1, &r1))
}

pub fn from_blocks(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
    let m = a.rows();
    let n = m + d.rows();
    let mut x = Mat::zeros(n, n, QI);
    let put = |x: &mut Mat, blk: &Mat, r0: usize, c0: usize| {
        for i in 0..blk.rows() {
            for j in 0..blk.cols() {
                x.set(r0 + i, c0 + j, blk.get(i, j).clone());
            }
        }
    };
    put(&mut x, a, 0, 0);
    put(&mut x, b, 0, m);
    put(&mut x, c, m, 0);
    put(&mut x, d, m, m);
    x
}

/// `diag(1,...,1,-1,...,-1)` with `p` plus signs and `q` minus signs.
pub fn ipq(p: usize, q: usize) -> Mat {
    let mut m = Mat::zeros(p + q, p + q, QI);
    for k in 0..p + q {
        m.set(k, k, ci(if k < p { 1 } else { -1 }, 0));
    }
    m
}

/// `[[0, I_n], [-I_n, 0]]`
pub fn j_matrix(n: usize) -> Mat {
    let mut m = Mat::zeros(2 * n, 2 * n, QI);
    for k in 0..n {
        m.set(k, n + k, ci(1, 0));
        m.set(n + k, k, ci(-1, 0));
    }
    m
}

use std::fmt;

use num::bigint::BigInt;
use serde::Serialize;

use crate::exactnum::{FieldTag, NumError, Poly, Rat, Scalar};

use super::subspace::{rref_rows, Subspace};

/// Dense vectors are plain `Vec<Scalar>` sharing one field tag.
pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize, tag: FieldTag) -> Vector {
    vec![Scalar::zero(tag); n]
}

pub fn unit_vec(n: usize, k: usize, tag: FieldTag) -> Vector {
    let mut v = zero_vec(n, tag);
    v[k] = Scalar::one(tag);
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `a + s * b`, skipping zero entries of `b`.
pub fn vec_axpy(a: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(s * y);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let tag = a.first().map_or(FieldTag::Q, |x| x.tag());
    let mut acc = Scalar::zero(tag);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn lift_vec(a: &[Scalar], tag: FieldTag) -> Result<Vector, NumError> {
    a.iter().map(|x| x.lift(tag)).collect()
}

pub fn conj_vec(a: &[Scalar]) -> Vector {
    a.iter().map(|x| x.conj()).collect()
}

pub fn int_vec(v: &[i64], tag: FieldTag) -> Vector {
    v.iter().map(|&x| Scalar::from_int(x, tag)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    tag: FieldTag,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, tag: FieldTag) -> Mat {
        Mat { rows, cols, tag, data: vec![Scalar::zero(tag); rows * cols] }
    }

    pub fn identity(n: usize, tag: FieldTag) -> Mat {
        let mut m = Mat::zeros(n, n, tag);
        for k in 0..n {
            m.set(k, k, Scalar::one(tag));
        }
        m
    }

    pub fn scalar(n: usize, s: &Scalar) -> Mat {
        let mut m = Mat::zeros(n, n, s.tag());
        for k in 0..n {
            m.set(k, k, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, tag: FieldTag) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, tag, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: &[Vector], rows: usize, tag: FieldTag) -> Mat {
        let mut m = Mat::zeros(rows, cols.len(), tag);
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| int_vec(r, FieldTag::Q)).collect(), FieldTag::Q)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn lift(&self, tag: FieldTag) -> Result<Mat, NumError> {
        Ok(Mat { rows: self.rows, cols: self.cols, tag, data: lift_vec(&self.data, tag)? })
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.is_rational())
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, o.cols, self.tag);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, tag: self.tag, data: vec_add(&self.data, &o.data) }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, tag: self.tag, data: vec_sub(&self.data, &o.data) }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, tag: self.tag, data: vec_scale(&self.data, s) }
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, tag: self.tag, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows, self.tag);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn conj(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, tag: self.tag, data: conj_vec(&self.data) }
    }

    pub fn adjoint(&self) -> Mat {
        self.transpose().conj()
    }

    /// `AB - BA`
    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    /// `AB + BA`
    pub fn anticommutator(&self, o: &Mat) -> Mat {
        self.mul(o).add(&o.mul(self))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(self.tag), |acc, k| &acc + self.get(k, k))
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows, self.tag);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nilpotent when `M^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    /// `(rref, pivot columns)`
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let (rows, piv) = rref_rows(self.row_vecs(), self.cols);
        let mut m = Mat::zeros(self.rows, self.cols, self.tag);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, x) in r.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.row_vecs(), self.cols).1.len()
    }

    /// Null space `{x : Mx = 0}` in `cols`-space.
    pub fn kernel(&self) -> Subspace {
        let (rows, piv) = rref_rows(self.row_vecs(), self.cols);
        Subspace::from_vectors(self.cols, self.tag, kernel_from_rref(&rows, &piv, self.cols, self.tag))
    }

    /// Column space in `rows`-space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows, self.tag, (0..self.cols).map(|j| self.col(j)))
    }

    /// One exact solution of `Mx = b` (free variables set to zero).
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        let aug: Vec<Vector> =
            (0..self.rows).map(|i| self.row(i).iter().cloned().chain(std::iter::once(b[i].clone())).collect()).collect();
        let (rows, piv) = rref_rows(aug, self.cols + 1);
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols, self.tag);
        for (r, &p) in piv.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vec(n, i, self.tag));
                r
            })
            .collect();
        let (rows, piv) = rref_rows(aug, 2 * n);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect(), self.tag))
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = Scalar::one(self.tag);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Scalar::zero(self.tag);
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = -(&a[r][c] * &inv);
                let pr = a[c].clone();
                vec_axpy(&mut a[r], &f, &pr);
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut c = vec![Scalar::zero(self.tag); n + 1];
        c[n] = Scalar::one(self.tag);
        let mut m = Mat::zeros(n, n, self.tag);
        for k in 1..=n {
            m = self.mul(&m).add(&Mat::scalar(n, &c[n - k + 1]));
            let t = self.mul(&m).trace();
            c[n - k] = -t.scale(&Rat::new(BigInt::from(1), BigInt::from(k)));
        }
        Poly::new(c, self.tag)
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect(), self.tag)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint().neg()
    }

    /// Entries as strings, row-major.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_strings() {
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Basis of the null space read off a reduced row echelon form.
pub(crate) fn kernel_from_rref(rows: &[Vector], piv: &[usize], n: usize, tag: FieldTag) -> Vec<Vector> {
    let mut is_piv = vec![false; n];
    for &p in piv {
        is_piv[p] = true;
    }
    (0..n)
        .filter(|&f| !is_piv[f])
        .map(|f| {
            let mut v = unit_vec(n, f, tag);
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -&rows[r][f];
            }
            v
        })
        .collect()
}

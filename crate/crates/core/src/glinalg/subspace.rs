use serde::Serialize;

use crate::exactnum::{FieldTag, NumError, Scalar};

use super::matrix::{conj_vec, is_zero_vec, kernel_from_rref, lift_vec, unit_vec, vec_axpy, Mat, Vector};

/// Reduced row echelon form of a list of rows; zero rows are dropped.
pub(crate) fn rref_rows(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                vec_axpy(row, &f, &pr);
            }
        }
        piv.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, piv)
}

/// Incremental row reduction for large homogeneous systems.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    tag: FieldTag,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(n: usize, tag: FieldTag) -> Echelon {
        Echelon { n, tag, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row, keeping the stored rows fully reduced. Returns false if it was dependent.
    pub fn add_row(&mut self, mut r: Vector) -> bool {
        for (p, s) in &self.rows {
            if !r[*p].is_zero() {
                let f = -&r[*p];
                vec_axpy(&mut r, &f, s);
            }
        }
        let Some(q) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[q].inv().expect("nonzero");
        let r: Vector = r.iter().map(|x| x * &inv).collect();
        for (_, s) in self.rows.iter_mut() {
            if !s[q].is_zero() {
                let f = -&s[q];
                vec_axpy(s, &f, &r);
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < q);
        self.rows.insert(pos, (q, r));
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Solutions `x` of the accumulated system `row · x = 0`.
    pub fn kernel(&self) -> Subspace {
        let piv: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let rows: Vec<Vector> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        Subspace::from_vectors(self.n, self.tag, kernel_from_rref(&rows, &piv, self.n, self.tag))
    }

    /// Row space as a subspace.
    pub fn row_space(&self) -> Subspace {
        Subspace {
            n: self.n,
            tag: self.tag,
            rows: self.rows.iter().map(|(_, r)| r.clone()).collect(),
            pivots: self.rows.iter().map(|(p, _)| *p).collect(),
        }
    }
}

/// A subspace of `F^n`, stored by the canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    n: usize,
    tag: FieldTag,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(n: usize, tag: FieldTag, vecs: impl IntoIterator<Item = Vector>) -> Subspace {
        let vs: Vec<Vector> = vecs.into_iter().filter(|v| !is_zero_vec(v)).collect();
        for v in &vs {
            assert_eq!(v.len(), n, "vector length does not match ambient dimension");
        }
        let (rows, pivots) = rref_rows(vs, n);
        Subspace { n, tag, rows, pivots }
    }

    pub fn zero(n: usize, tag: FieldTag) -> Subspace {
        Subspace { n, tag, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize, tag: FieldTag) -> Subspace {
        Subspace::coordinate(n, tag, 0..n)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, tag: FieldTag, idx: impl IntoIterator<Item = usize>) -> Subspace {
        Subspace::from_vectors(n, tag, idx.into_iter().map(|k| unit_vec(n, k, tag)))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -&r[p];
                vec_axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis.
    pub fn combine(&self, c: &[Scalar]) -> Vector {
        let mut v = vec![Scalar::zero(self.tag); self.n];
        for (x, row) in c.iter().zip(&self.rows) {
            vec_axpy(&mut v, x, row);
        }
        v
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        Subspace::from_vectors(self.n, self.tag, self.rows.iter().chain(&o.rows).cloned())
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.n, self.tag);
        }
        if self.contains_space(o) {
            return o.clone();
        }
        if o.contains_space(self) {
            return self.clone();
        }
        let k = self.rows.len();
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(o.rows.iter().map(|r| r.iter().map(|x| -x).collect()));
        let m = Mat::from_cols(&cols, self.n, self.tag);
        let ker = m.kernel();
        Subspace::from_vectors(self.n, self.tag, ker.basis().iter().map(|x| self.combine(&x[..k])))
    }

    /// Indices of the standard basis vectors that complete the echelon basis.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.n];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.n).filter(|&k| !is_piv[k]).collect()
    }

    pub fn lift(&self, tag: FieldTag) -> Result<Subspace, NumError> {
        Ok(Subspace {
            n: self.n,
            tag,
            rows: self.rows.iter().map(|r| lift_vec(r, tag)).collect::<Result<_, _>>()?,
            pivots: self.pivots.clone(),
        })
    }

    /// Complex conjugate subspace.
    pub fn conj(&self) -> Subspace {
        Subspace::from_vectors(self.n, self.tag, self.rows.iter().map(|r| conj_vec(r)))
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Mat) -> Subspace {
        Subspace::from_vectors(m.rows(), self.tag, self.rows.iter().map(|r| m.mul_vec(r)))
    }

    /// Restriction of an endomorphism preserving this subspace, in basis coordinates.
    pub fn restrict(&self, m: &Mat) -> Option<Mat> {
        let cols: Option<Vec<Vector>> = self.rows.iter().map(|r| self.coords(&m.mul_vec(r))).collect();
        Some(Mat::from_cols(&cols?, self.dim(), self.tag))
    }

    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.basis_strings().serialize(s)
    }
}

/// A ℤ/2-graded coordinate space with the even block first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSpace {
    pub even: usize,
    pub odd: usize,
}

impl GradedSpace {
    pub fn new(even: usize, odd: usize) -> GradedSpace {
        GradedSpace { even, odd }
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity(&self, k: usize) -> u8 {
        u8::from(k >= self.even)
    }

    pub fn even_space(&self, tag: FieldTag) -> Subspace {
        Subspace::coordinate(self.dim(), tag, 0..self.even)
    }

    pub fn odd_space(&self, tag: FieldTag) -> Subspace {
        Subspace::coordinate(self.dim(), tag, self.even..self.dim())
    }

    pub fn even_part(&self, s: &Subspace) -> Subspace {
        s.intersect(&self.even_space(s.tag()))
    }

    pub fn odd_part(&self, s: &Subspace) -> Subspace {
        s.intersect(&self.odd_space(s.tag()))
    }

    /// A subspace is graded when it is the sum of its even and odd parts.
    pub fn is_graded(&self, s: &Subspace) -> bool {
        self.even_part(s).dim() + self.odd_part(s).dim() == s.dim()
    }

    /// Parity of a vector, or `None` if it is not homogeneous. Zero counts as even.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<u8> {
        let e = v[..self.even].iter().any(|x| !x.is_zero());
        let o = v[self.even..].iter().any(|x| !x.is_zero());
        match (e, o) {
            (true, true) => None,
            (false, true) => Some(1),
            _ => Some(0),
        }
    }

    /// Homogeneous basis of a graded subspace: even vectors first.
    pub fn homogeneous_basis(&self, s: &Subspace) -> Vec<Vector> {
        let mut b = self.even_part(s).basis().to_vec();
        b.extend(self.odd_part(s).basis().iter().cloned());
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glinalg::int_vec;

    #[test]
    fn canonical_form_is_basis_independent() {
        let t = FieldTag::Q;
        let a = Subspace::from_vectors(3, t, vec![int_vec(&[1, 1, 0], t), int_vec(&[0, 1, 1], t)]);
        let b = Subspace::from_vectors(3, t, vec![int_vec(&[1, 2, 1], t), int_vec(&[1, 0, -1], t)]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_and_sum() {
        let t = FieldTag::Q;
        let a = Subspace::coordinate(4, t, [0, 1]);
        let b = Subspace::from_vectors(4, t, vec![int_vec(&[1, 0, 1, 0], t), int_vec(&[0, 1, 0, 0], t)]);
        assert_eq!(a.intersect(&b), Subspace::coordinate(4, t, [1]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn echelon_kernel_matches_matrix_kernel() {
        let m = Mat::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let mut e = Echelon::new(4, FieldTag::Q);
        for r in m.row_vecs() {
            e.add_row(r);
        }
        assert_eq!(e.rank(), 2);
        assert_eq!(e.kernel(), m.kernel());
    }
}

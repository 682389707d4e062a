//! Univariate polynomials over a tower field, with Sturm counting and
//! splitting of rational polynomials into linear and quadratic factors.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::scalar::{is_squarefree_u32, FieldTag, Rat, Scalar};
use super::NumError;

/// Coefficients in ascending degree order, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    tag: FieldTag,
    c: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut c: Vec<Scalar>, tag: FieldTag) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { tag, c }
    }

    pub fn from_rats(c: &[Rat]) -> Poly {
        Poly::new(c.iter().map(|r| Scalar::from_rat(r.clone(), FieldTag::Q)).collect(), FieldTag::Q)
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&n| Scalar::from_int(n, FieldTag::Q)).collect(), FieldTag::Q)
    }

    pub fn zero(tag: FieldTag) -> Poly {
        Poly { tag, c: Vec::new() }
    }

    pub fn one(tag: FieldTag) -> Poly {
        Poly { tag, c: vec![Scalar::one(tag)] }
    }

    /// `x - a`
    pub fn linear(a: &Scalar) -> Poly {
        Poly::new(vec![-a, Scalar::one(a.tag())], a.tag())
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.c.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.tag);
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = Scalar::zero(self.tag);
        let c = (0..n).map(|k| self.c.get(k).unwrap_or(&z) + o.c.get(k).unwrap_or(&z)).collect();
        Poly::new(c, self.tag)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { tag: self.tag, c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.tag);
        }
        let mut c = vec![Scalar::zero(self.tag); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(c, self.tag)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.c.iter().map(|a| a * s).collect(), self.tag)
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), NumError> {
        let dd = d.degree().ok_or(NumError::DivisionByZero)?;
        let linv = d.lead().unwrap().inv()?;
        let mut r = self.c.clone();
        let mut q = vec![Scalar::zero(self.tag); self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = &r[r.len() - 1] * &linv;
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&f * b);
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Poly::new(q, self.tag), Poly::new(r, self.tag)))
    }

    pub fn derivative(&self) -> Poly {
        let c = self.c.iter().enumerate().skip(1).map(|(k, a)| a.scale(&Rat::from_integer(BigInt::from(k)))).collect();
        Poly::new(c, self.tag)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).expect("nonzero gcd").0.monic()
    }

    /// Counts of distinct real roots that are negative, zero and positive.
    /// Rational coefficients only.
    pub fn real_root_signs(&self) -> Result<(usize, usize, usize), NumError> {
        if self.tag != FieldTag::Q && !self.c.iter().all(|a| a.is_rational()) {
            return Err(NumError::FieldMismatch("Sturm counting needs rational coefficients".into()));
        }
        if self.is_zero() {
            return Err(NumError::Parse("zero polynomial has infinitely many roots".into()));
        }
        let p = self.to_rat_poly().squarefree_part();
        let mut q = p.clone();
        let mut zero = 0;
        if q.c.first().is_some_and(|a| a.is_zero()) {
            zero = 1;
            q = q.divrem(&Poly::from_ints(&[0, 1]))?.0;
        }
        let chain = sturm_chain(&q);
        let v_neg = sign_changes(chain.iter().map(|s| sign_at_neg_inf(s)));
        let v_zero = sign_changes(chain.iter().map(|s| s.c.first().map_or(Ordering::Equal, rat_sign)));
        let v_pos = sign_changes(chain.iter().map(|s| s.lead().map_or(Ordering::Equal, rat_sign)));
        Ok((v_neg - v_zero, zero, v_zero - v_pos))
    }

    fn to_rat_poly(&self) -> Poly {
        Poly::new(self.c.iter().map(|a| Scalar::from_rat(a.coords()[0].clone(), FieldTag::Q)).collect(), FieldTag::Q)
    }

    pub fn lift(&self, tag: FieldTag) -> Result<Poly, NumError> {
        Ok(Poly { tag, c: self.c.iter().map(|a| a.lift(tag)).collect::<Result<_, _>>()? })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| match k {
                0 => format!("({a})"),
                1 => format!("({a})x"),
                _ => format!("({a})x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn rat_sign(a: &Scalar) -> Ordering {
    a.coords()[0].cmp(&Rat::zero())
}

fn sign_at_neg_inf(p: &Poly) -> Ordering {
    match p.lead() {
        None => Ordering::Equal,
        Some(l) => {
            let s = rat_sign(l);
            if p.degree().unwrap() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }
    }
}

fn sign_changes(it: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in it.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

/// Distinct roots of a rational polynomial inside the tower, or a splitting failure.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    pub field: FieldTag,
    pub roots: Vec<Scalar>,
}

/// Split a rational polynomial into linear and quadratic factors over ℚ and
/// return its distinct roots in the smallest tower field that holds them all.
pub fn split_rational(p: &Poly) -> Result<Splitting, NumError> {
    if !p.c.iter().all(|a| a.is_rational()) {
        return Err(NumError::SplittingFailure("coefficients are not rational".into()));
    }
    let p = p.to_rat_poly();
    if p.is_zero() {
        return Err(NumError::SplittingFailure("zero polynomial".into()));
    }
    let mut rest = p.squarefree_part();
    let mut rational: Vec<Rat> = Vec::new();
    let mut quads: Vec<(Rat, Rat)> = Vec::new();
    if rest.c.first().is_some_and(|a| a.is_zero()) {
        rational.push(Rat::zero());
        rest = rest.divrem(&Poly::from_ints(&[0, 1]))?.0;
    }
    for r in rational_roots(&rest) {
        rest = rest.divrem(&Poly::from_rats(&[-r.clone(), Rat::one()]))?.0;
        rational.push(r);
    }
    while rest.degree().unwrap_or(0) > 0 {
        if rest.degree() == Some(2) {
            let m = rest.monic();
            quads.push((m.c[1].coords()[0].clone(), m.c[0].coords()[0].clone()));
            break;
        }
        match find_quadratic_factor(&rest) {
            Some(q) => {
                rest = rest.divrem(&q)?.0;
                let m = q.monic();
                quads.push((m.c[1].coords()[0].clone(), m.c[0].coords()[0].clone()));
            }
            None => {
                return Err(NumError::SplittingFailure(format!(
                    "irreducible factor of degree > 2 in {}",
                    rest.monic()
                )))
            }
        }
    }
    // each quadratic x^2 + b x + c has roots -b/2 ± sqrt(D)/2, D = b^2 - 4c
    let mut d_common: Option<u32> = None;
    let mut has_i = false;
    let mut surds: Vec<(Rat, Rat, i64, u32)> = Vec::new();
    for (b, c) in &quads {
        let disc = b * b - Rat::from_integer(BigInt::from(4)) * c;
        let (t, s) = squarefree_decompose(&disc)?;
        let sign = if s < 0 { -1 } else { 1 };
        let d = s.unsigned_abs() as u32;
        if sign < 0 {
            has_i = true;
        }
        if d > 1 {
            match d_common {
                Some(e) if e != d => {
                    return Err(NumError::SplittingFailure(format!(
                        "eigenvalues need both sqrt{e} and sqrt{d}"
                    )))
                }
                _ => d_common = Some(d),
            }
        }
        surds.push((-b / Rat::from_integer(BigInt::from(2)), t / Rat::from_integer(BigInt::from(2)), sign, d));
    }
    let field = FieldTag::build(has_i, d_common);
    let mut roots: Vec<Scalar> = rational.into_iter().map(|r| Scalar::from_rat(r, field)).collect();
    for (re, half_t, sign, d) in surds {
        let slot = match (sign < 0, d > 1) {
            (false, false) => unreachable!("square discriminant gives rational roots"),
            (true, false) => 1,
            (false, true) => 2,
            (true, true) => 3,
        };
        for s in [1i64, -1] {
            let mut c = [re.clone(), Rat::zero(), Rat::zero(), Rat::zero()];
            c[slot] = &half_t * Rat::from_integer(BigInt::from(s));
            roots.push(Scalar::from_coords(c, field)?);
        }
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    Ok(Splitting { field, roots })
}

/// `r = t^2 * s` with `s` a squarefree integer and `t` rational, `t > 0`.
fn squarefree_decompose(r: &Rat) -> Result<(Rat, i64), NumError> {
    // r = n/d = n*d / d^2
    let m = r.numer() * r.denom();
    let sign: i64 = if m.is_negative() { -1 } else { 1 };
    let mut m = m.abs();
    let mut square = BigInt::one();
    let mut s = BigInt::one();
    let mut k = BigInt::from(2);
    while &k * &k <= m {
        let mut e = 0u32;
        while (&m % &k).is_zero() {
            m /= &k;
            e += 1;
        }
        if e > 0 {
            square *= k.pow(e / 2);
            if e % 2 == 1 {
                s *= &k;
            }
        }
        k += 1;
        if k > BigInt::from(10_000_000u64) {
            return Err(NumError::SplittingFailure("discriminant too large to factor".into()));
        }
    }
    s *= m;
    let s: i64 = i64::try_from(s).map_err(|_| NumError::SplittingFailure("discriminant radicand too large".into()))?;
    if s > 1 && (s > u32::MAX as i64 || !is_squarefree_u32(s as u32)) {
        return Err(NumError::SplittingFailure("radicand out of range".into()));
    }
    let t = Rat::new(square, r.denom().clone());
    Ok((t, sign * s))
}

/// Primitive integer coefficients of a rational polynomial.
fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let rats: Vec<Rat> = p.c.iter().map(|a| a.coords()[0].clone()).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            small.push(k.clone());
            let q = &n / &k;
            if q != k {
                large.push(q);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Rational roots via the rational root theorem (`p(0) != 0` assumed).
fn rational_roots(p: &Poly) -> Vec<Rat> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let c = integer_coeffs(p);
    let mut out = Vec::new();
    for num in divisors(&c[0]) {
        for den in divisors(c.last().unwrap()) {
            for s in [1, -1] {
                let r = Rat::new(&num * BigInt::from(s), den.clone());
                if out.contains(&r) {
                    continue;
                }
                let v = p.eval(&Scalar::from_rat(r.clone(), FieldTag::Q));
                if v.is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

/// Search for a quadratic factor `u x^2 + v x + w` of a primitive integer
/// polynomial without rational roots (Kronecker evaluation at 1 and -1).
fn find_quadratic_factor(p: &Poly) -> Option<Poly> {
    let c = integer_coeffs(p);
    let one = BigInt::one();
    let p1 = eval_int(&c, &one);
    let pm1 = eval_int(&c, &(-&one));
    let lead_divs = divisors(c.last().unwrap());
    let const_divs = divisors(&c[0]);
    let p1_divs = divisors(&p1);
    for u in &lead_divs {
        for w0 in &const_divs {
            for w in [w0.clone(), -w0] {
                for d0 in &p1_divs {
                    for delta in [d0.clone(), -d0] {
                        let v = &delta - u - &w;
                        let qm1 = u - &v + &w;
                        if qm1.is_zero() || !(&pm1 % &qm1).is_zero() {
                            continue;
                        }
                        let q = Poly::new(
                            vec![
                                Scalar::from_rat(Rat::from_integer(w.clone()), FieldTag::Q),
                                Scalar::from_rat(Rat::from_integer(v.clone()), FieldTag::Q),
                                Scalar::from_rat(Rat::from_integer(u.clone()), FieldTag::Q),
                            ],
                            FieldTag::Q,
                        );
                        let (_, r) = p.divrem(&q).ok()?;
                        if r.is_zero() {
                            return Some(q);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_examples() {
        assert!(!Poly::from_ints(&[1, 2, 1]).is_squarefree());
        assert!(Poly::from_ints(&[1, 0, 1]).is_squarefree());
    }

    #[test]
    fn sturm_examples() {
        // x^3 - x
        assert_eq!(Poly::from_ints(&[0, -1, 0, 1]).real_root_signs().unwrap(), (1, 1, 1));
        // x^2 + 1
        assert_eq!(Poly::from_ints(&[1, 0, 1]).real_root_signs().unwrap(), (0, 0, 0));
        // (x-2)^2 (x+3)
        assert_eq!(Poly::from_ints(&[12, -8, -1, 1]).real_root_signs().unwrap(), (1, 0, 1));
    }

    #[test]
    fn splitting_su2_adjoint() {
        // x (x^2 + 4)
        let s = split_rational(&Poly::from_ints(&[0, 4, 0, 1])).unwrap();
        assert_eq!(s.field, FieldTag::QI);
        let shown: Vec<String> = s.roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, vec!["-2*i", "0", "2*i"]);
    }

    #[test]
    fn splitting_needs_single_surd() {
        // (x^2 - 2)(x^2 + 2) splits over Q(i, sqrt2)
        let p = Poly::from_ints(&[-2, 0, 1]).mul(&Poly::from_ints(&[2, 0, 1]));
        assert_eq!(split_rational(&p).unwrap().field, FieldTag::QISqrt(2));
        // (x^2 - 2)(x^2 - 3) does not fit a single tower field
        let p = Poly::from_ints(&[-2, 0, 1]).mul(&Poly::from_ints(&[-3, 0, 1]));
        assert!(matches!(split_rational(&p), Err(NumError::SplittingFailure(_))));
        // x^3 - 2 is irreducible of degree 3
        assert!(matches!(split_rational(&Poly::from_ints(&[-2, 0, 0, 1])), Err(NumError::SplittingFailure(_))));
    }

    #[test]
    fn quadratic_factor_search() {
        // (x^2 + x + 1)(x^2 + 9)(2x - 1)
        let p = Poly::from_ints(&[1, 1, 1]).mul(&Poly::from_ints(&[9, 0, 1])).mul(&Poly::from_ints(&[-1, 2]));
        let s = split_rational(&p).unwrap();
        assert_eq!(s.roots.len(), 5);
        for r in &s.roots {
            assert!(p.lift(s.field).unwrap().eval(r).is_zero());
        }
    }
}

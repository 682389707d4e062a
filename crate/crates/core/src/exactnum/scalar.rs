//! Exact scalars in the tower ℚ ⊂ ℚ(i), ℚ(√d) ⊂ ℚ(i,√d).
//!
//! A value is stored as four rational coordinates over the basis
//! `{1, i, √d, i√d}` together with the tag of the field it lives in.
//! Coordinates outside the tag are always zero.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::NumError;

pub type Rat = BigRational;

/// Field tag. `d` is always a squarefree integer greater than one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Q,
    QI,
    QSqrt(u32),
    QISqrt(u32),
}

impl FieldTag {
    pub fn has_i(self) -> bool {
        matches!(self, FieldTag::QI | FieldTag::QISqrt(_))
    }

    pub fn sqrt_d(self) -> Option<u32> {
        match self {
            FieldTag::QSqrt(d) | FieldTag::QISqrt(d) => Some(d),
            _ => None,
        }
    }

    /// Smallest tower field containing both, if one exists.
    pub fn join(self, other: FieldTag) -> Option<FieldTag> {
        let d = match (self.sqrt_d(), other.sqrt_d()) {
            (Some(a), Some(b)) if a != b => return None,
            (Some(a), _) | (_, Some(a)) => Some(a),
            _ => None,
        };
        Some(Self::build(self.has_i() || other.has_i(), d))
    }

    pub fn build(has_i: bool, d: Option<u32>) -> FieldTag {
        match (has_i, d) {
            (false, None) => FieldTag::Q,
            (true, None) => FieldTag::QI,
            (false, Some(d)) => FieldTag::QSqrt(d),
            (true, Some(d)) => FieldTag::QISqrt(d),
        }
    }

    pub fn contains(self, other: FieldTag) -> bool {
        self.join(other) == Some(self)
    }

    /// Same field with `i` adjoined.
    pub fn with_i(self) -> FieldTag {
        Self::build(true, self.sqrt_d())
    }

    pub fn parse(s: &str) -> Result<FieldTag, NumError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || NumError::Parse(format!("unknown field tag `{s}`"));
        let sqrt = |x: &str| -> Result<u32, NumError> {
            let d: u32 = x.strip_prefix("sqrt").ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if d < 2 || !is_squarefree_u32(d) {
                return Err(NumError::Parse(format!("sqrt{d}: radicand must be squarefree and > 1")));
            }
            Ok(d)
        };
        match t.as_str() {
            "Q" => Ok(FieldTag::Q),
            "Q(i)" => Ok(FieldTag::QI),
            _ => {
                let inner = t.strip_prefix("Q(").and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
                match inner.strip_prefix("i,") {
                    Some(rest) => Ok(FieldTag::QISqrt(sqrt(rest)?)),
                    None => Ok(FieldTag::QSqrt(sqrt(inner)?)),
                }
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::QI => write!(f, "Q(i)"),
            FieldTag::QSqrt(d) => write!(f, "Q(sqrt{d})"),
            FieldTag::QISqrt(d) => write!(f, "Q(i,sqrt{d})"),
        }
    }
}

impl Serialize for FieldTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn is_squarefree_u32(n: u32) -> bool {
    let mut k = 2u32;
    while k.saturating_mul(k) <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

#[derive(Clone, Debug)]
pub struct Scalar {
    tag: FieldTag,
    c: [Rat; 4],
}

fn rz() -> Rat {
    Rat::zero()
}

impl Scalar {
    pub fn zero(tag: FieldTag) -> Scalar {
        Scalar { tag, c: [rz(), rz(), rz(), rz()] }
    }

    pub fn one(tag: FieldTag) -> Scalar {
        Scalar::from_rat(Rat::one(), tag)
    }

    pub fn from_int(n: i64, tag: FieldTag) -> Scalar {
        Scalar::from_rat(Rat::from_integer(BigInt::from(n)), tag)
    }

    pub fn from_frac(n: i64, d: i64, tag: FieldTag) -> Scalar {
        Scalar::from_rat(Rat::new(BigInt::from(n), BigInt::from(d)), tag)
    }

    pub fn from_rat(r: Rat, tag: FieldTag) -> Scalar {
        Scalar { tag, c: [r, rz(), rz(), rz()] }
    }

    /// `i` in a field that contains it.
    pub fn i(tag: FieldTag) -> Scalar {
        assert!(tag.has_i(), "field {tag} does not contain i");
        Scalar { tag, c: [rz(), Rat::one(), rz(), rz()] }
    }

    pub fn sqrt_d(tag: FieldTag) -> Scalar {
        assert!(tag.sqrt_d().is_some(), "field {tag} has no square root adjoined");
        Scalar { tag, c: [rz(), rz(), Rat::one(), rz()] }
    }

    /// Build from raw coordinates; fails if a coordinate lies outside the field.
    pub fn from_coords(c: [Rat; 4], tag: FieldTag) -> Result<Scalar, NumError> {
        let ok = (c[1].is_zero() || tag.has_i())
            && (c[2].is_zero() || tag.sqrt_d().is_some())
            && (c[3].is_zero() || (tag.has_i() && tag.sqrt_d().is_some()));
        if !ok {
            return Err(NumError::FieldMismatch(format!("value does not lie in {tag}")));
        }
        Ok(Scalar { tag, c })
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// Purely imaginary (zero real part), zero included.
    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero() && self.c[2].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Embed into a larger tower field. Fails if `tag` does not contain the current field.
    pub fn lift(&self, tag: FieldTag) -> Result<Scalar, NumError> {
        if self.tag == tag {
            return Ok(self.clone());
        }
        if !tag.contains(self.tag) {
            return Err(NumError::FieldMismatch(format!("cannot embed {} into {tag}", self.tag)));
        }
        Ok(Scalar { tag, c: self.c.clone() })
    }

    /// Move to another field when the value lies in both.
    pub fn retag(&self, tag: FieldTag) -> Result<Scalar, NumError> {
        Scalar::from_coords(self.c.clone(), tag)
    }

    fn check(&self, o: &Scalar) -> Result<(), NumError> {
        if self.tag != o.tag {
            return Err(NumError::FieldMismatch(format!("{} combined with {}", self.tag, o.tag)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, NumError> {
        self.check(o)?;
        if self.tag == FieldTag::Q {
            return Ok(Scalar::from_rat(&self.c[0] + &o.c[0], FieldTag::Q));
        }
        Ok(Scalar {
            tag: self.tag,
            c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]],
        })
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, NumError> {
        self.check(o)?;
        if self.tag == FieldTag::Q {
            return Ok(Scalar::from_rat(&self.c[0] - &o.c[0], FieldTag::Q));
        }
        Ok(Scalar {
            tag: self.tag,
            c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]],
        })
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, NumError> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Scalar::zero(self.tag));
        }
        if self.tag == FieldTag::Q {
            return Ok(Scalar::from_rat(&self.c[0] * &o.c[0], FieldTag::Q));
        }
        let d = Rat::from_integer(BigInt::from(self.tag.sqrt_d().unwrap_or(0)));
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        // basis products: i*i = -1, s*s = d, i*s = is, i*is = -s, s*is = d i, is*is = -d
        let c0 = a0 * b0 - a1 * b1 + &d * (a2 * b2) - &d * (a3 * b3);
        let c1 = a0 * b1 + a1 * b0 + &d * (a2 * b3) + &d * (a3 * b2);
        let c2 = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Ok(Scalar { tag: self.tag, c: [c0, c1, c2, c3] })
    }

    /// Complex conjugation (`i ↦ -i`, `√d` fixed).
    pub fn conj(&self) -> Scalar {
        Scalar { tag: self.tag, c: [self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3]] }
    }

    /// Conjugation `√d ↦ -√d`, `i` fixed.
    fn sqrt_conj(&self) -> Scalar {
        Scalar { tag: self.tag, c: [self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3]] }
    }

    pub fn inv(&self) -> Result<Scalar, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Scalar::from_rat(self.c[0].recip(), self.tag));
        }
        // z * sqrt_conj(z) has no √d part; then w * conj(w) is rational.
        let s = self.sqrt_conj();
        let w = self.try_mul(&s)?;
        let wc = w.conj();
        let n = w.try_mul(&wc)?;
        let r = n.as_rational().expect("norm is rational").recip();
        let num = s.try_mul(&wc)?;
        Ok(num.scale(&r))
    }

    pub fn scale(&self, r: &Rat) -> Scalar {
        Scalar { tag: self.tag, c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    pub fn real_part(&self) -> Scalar {
        Scalar { tag: self.tag, c: [self.c[0].clone(), rz(), self.c[2].clone(), rz()] }
    }

    /// Imaginary part as a real scalar (`z = re + i·im`).
    pub fn imag_part(&self) -> Scalar {
        Scalar { tag: self.tag, c: [self.c[1].clone(), rz(), self.c[3].clone(), rz()] }
    }

    /// Exact sign of a real value; `None` if the value is not real.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        let (a, b) = (&self.c[0], &self.c[2]);
        let sa = a.cmp(&rz());
        let sb = b.cmp(&rz());
        if sb == Ordering::Equal {
            return Some(sa);
        }
        if sa == Ordering::Equal || sa == sb {
            return Some(sb);
        }
        let d = Rat::from_integer(BigInt::from(self.tag.sqrt_d().unwrap_or(0)));
        let lhs = a * a;
        let rhs = b * b * d;
        Some(match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    pub fn is_positive(&self) -> bool {
        self.real_sign() == Some(Ordering::Greater)
    }

    /// Total order used only for canonical sorting.
    pub fn canonical_cmp(&self, o: &Scalar) -> Ordering {
        self.c.iter().zip(o.c.iter()).map(|(a, b)| a.cmp(b)).find(|x| *x != Ordering::Equal).unwrap_or(Ordering::Equal)
    }

    /// Parse the canonical string form inside a declared field.
    pub fn parse(s: &str, tag: FieldTag) -> Result<Scalar, NumError> {
        parse_scalar(s, tag)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        if self.c != o.c {
            return false;
        }
        let surd = !self.c[2].is_zero() || !self.c[3].is_zero();
        !surd || self.tag.sqrt_d() == o.tag.sqrt_d()
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.c.hash(h);
        if !self.c[2].is_zero() || !self.c[3].is_zero() {
            self.tag.sqrt_d().hash(h);
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$f(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        let inv = o.inv().unwrap_or_else(|e| panic!("{e}"));
        self * &inv
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        &self / &o
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { tag: self.tag, c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.tag.sqrt_d().unwrap_or(0);
        let units = [String::new(), "i".to_string(), format!("sqrt{d}"), format!("i*sqrt{d}")];
        let mut out = String::new();
        for (k, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let neg = r.is_negative();
            let a = r.abs();
            if !out.is_empty() {
                out.push(if neg { '-' } else { '+' });
            } else if neg {
                out.push('-');
            }
            if k == 0 {
                out.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                out.push_str(&units[k]);
            } else {
                out.push_str(&fmt_rat(&a));
                out.push('*');
                out.push_str(&units[k]);
            }
        }
        write!(f, "{out}")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_rat(s: &str) -> Result<Rat, NumError> {
    let bad = || NumError::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_scalar(s: &str, tag: FieldTag) -> Result<Scalar, NumError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(NumError::Parse("empty scalar".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (k, ch) in t.chars().enumerate() {
        if (ch == '+' || ch == '-') && k > 0 {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if ch == '-' {
            neg = true;
        } else if ch != '+' {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    let mut c = [rz(), rz(), rz(), rz()];
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(NumError::Parse(format!("bad scalar `{s}`")));
        }
        let (coef, unit) = split_unit(&term);
        let mut r = match coef {
            Some(x) => parse_rat(x)?,
            None => Rat::one(),
        };
        if neg {
            r = -r;
        }
        let slot = match unit {
            "" => 0,
            "i" => 1,
            u => {
                let (slot, rest) = match u.strip_prefix("i*") {
                    Some(rest) => (3, rest),
                    None => (2, u),
                };
                let d: u32 = rest
                    .strip_prefix("sqrt")
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| NumError::Parse(format!("bad unit `{u}`")))?;
                if tag.sqrt_d() != Some(d) {
                    return Err(NumError::FieldMismatch(format!("sqrt{d} is not in {tag}")));
                }
                slot
            }
        };
        c[slot] += r;
    }
    Scalar::from_coords(c, tag)
}

fn split_unit(term: &str) -> (Option<&str>, &str) {
    let starts_unit = |x: &str| x.starts_with('i') || x.starts_with("sqrt");
    if starts_unit(term) {
        return (None, term);
    }
    match term.split_once('*') {
        Some((a, b)) => (Some(a), b),
        None => (Some(term), ""),
    }
}

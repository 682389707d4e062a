use proptest::prelude::*;

use superlie::exactnum::{FieldTag, Poly, Rat, Scalar};
use superlie::glinalg::{generalized_eigenspaces, is_zero_vec, Mat, Subspace};

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn tag() -> impl Strategy<Value = FieldTag> {
    prop_oneof![Just(FieldTag::Q), Just(FieldTag::QI), Just(FieldTag::QSqrt(2)), Just(FieldTag::QISqrt(3))]
}

fn scalar_in(t: FieldTag) -> impl Strategy<Value = Scalar> {
    proptest::collection::vec(rat(), 4).prop_map(move |c| {
        let mut s = Scalar::from_rat(c[0].clone(), t);
        if t.has_i() {
            s = &s + &(&Scalar::i(t) * &Scalar::from_rat(c[1].clone(), t));
        }
        if t.sqrt_d().is_some() {
            s = &s + &(&Scalar::sqrt_d(t) * &Scalar::from_rat(c[2].clone(), t));
            if t.has_i() {
                s = &s + &(&(&Scalar::i(t) * &Scalar::sqrt_d(t)) * &Scalar::from_rat(c[3].clone(), t));
            }
        }
        s
    })
}

fn pair() -> impl Strategy<Value = (Scalar, Scalar)> {
    tag().prop_flat_map(|t| (scalar_in(t), scalar_in(t)))
}

fn int_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            Mat::from_ints(&refs)
        })
    })
}

fn square_int_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), n).prop_map(|rows| {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            Mat::from_ints(&refs)
        })
    })
}

proptest! {
    #[test]
    fn add_then_subtract((a, b) in pair()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn multiplicative_inverse((a, _) in pair()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn display_parses_back((a, _) in pair()) {
        prop_assert_eq!(Scalar::parse(&a.to_string(), a.tag()).unwrap(), a);
    }

    #[test]
    fn square_of_a_polynomial_is_not_squarefree(c in proptest::collection::vec(-5i64..=5, 2..5)) {
        let p = Poly::from_ints(&c);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        prop_assert!(!p.mul(&p).is_squarefree());
    }

    #[test]
    fn root_signs_ignore_positive_scaling(c in proptest::collection::vec(-5i64..=5, 1..6), k in 1i64..9, d in 1i64..5) {
        let p = Poly::from_ints(&c);
        prop_assume!(!p.is_zero());
        let scaled = p.scale(&Scalar::from_frac(k, d, FieldTag::Q));
        prop_assert_eq!(p.real_root_signs().unwrap(), scaled.real_root_signs().unwrap());
    }

    #[test]
    fn rank_nullity(m in int_matrix(5)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        prop_assert_eq!(m.image().dim(), m.rank());
        for v in k.basis() {
            prop_assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn echelon_is_idempotent(m in int_matrix(5)) {
        let s = Subspace::from_vectors(m.cols(), FieldTag::Q, m.row_vecs());
        let again = Subspace::from_vectors(m.cols(), FieldTag::Q, s.basis().to_vec());
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(s.dim(), m.rank());
    }

    #[test]
    fn generalized_eigenspaces_fill_the_space(m in square_int_matrix(4)) {
        if let Ok(parts) = generalized_eigenspaces(&m) {
            let n = m.rows();
            let total: usize = parts.iter().map(|p| p.space.dim()).sum();
            prop_assert_eq!(total, n);
            let tag = parts.first().map_or(FieldTag::Q, |p| p.space.tag());
            let mut sum = Subspace::zero(n, tag);
            for p in &parts {
                sum = sum.sum(&p.space);
                let shifted = m.lift(tag).unwrap().sub(&Mat::scalar(n, &p.value)).pow(n);
                for v in p.space.basis() {
                    prop_assert!(is_zero_vec(&shifted.mul_vec(v)));
                }
            }
            prop_assert_eq!(sum.dim(), n);
        }
    }
}

#[test]
fn splitting_failure_is_reported_not_guessed() {
    // x³ − 2 has an irrational real root outside every tower field
    let m = Mat::from_ints(&[&[0, 0, 2], &[1, 0, 0], &[0, 1, 0]]);
    assert!(generalized_eigenspaces(&m).is_err());
}

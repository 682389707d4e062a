use proptest::prelude::*;

use superlie::cliffrep::{clifford_module, equivalent, parity_change, verify_rep, MatrixRep};
use superlie::exactnum::{Rat, Scalar};
use superlie::glinalg::{unit_vec, Mat};
use superlie::orbits::clifford_module_dim;

fn norms() -> impl Strategy<Value = Vec<Rat>> {
    // one surd across all generators
    (1i64..=3, proptest::collection::vec(1i64..=3, 1..=4))
        .prop_map(|(c, ks)| ks.iter().map(|k| Rat::from_integer((2 * c * k * k).into())).collect())
}

fn check(rep: &MatrixRep) -> bool {
    let z = unit_vec(rep.algebra.dim(), 0, rep.algebra.tag());
    verify_rep(rep, &[z], &[]).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clifford_modules_satisfy_the_axioms(n in norms()) {
        let d = n.len();
        let rep = clifford_module(d, &n).unwrap();
        prop_assert!(check(&rep));
        prop_assert_eq!(rep.dim() as u64, clifford_module_dim(d));
        prop_assert_eq!(rep.even_dim, rep.odd_dim);
        let f = rep.field();
        for (i, ni) in n.iter().enumerate() {
            let half = Scalar::from_rat(ni / Rat::from_integer(2.into()), f);
            let r = &rep.rho[1 + i];
            prop_assert_eq!(r.mul(r), Mat::scalar(rep.dim(), &half));
        }
    }

    #[test]
    fn parity_change_is_an_involution(n in norms()) {
        let rep = clifford_module(n.len(), &n).unwrap();
        let pi = parity_change(&rep);
        prop_assert!(check(&pi));
        prop_assert_eq!(&parity_change(&pi), &rep);
    }

    #[test]
    fn equivalence_behaves_like_an_equivalence(n in norms()) {
        let d = n.len();
        let m = clifford_module(d, &n).unwrap();
        let pm = parity_change(&m);
        let ppm = parity_change(&pm);
        prop_assert!(equivalent(&m, &m, false).unwrap());
        prop_assert!(equivalent(&m, &ppm, false).unwrap());
        prop_assert!(equivalent(&m, &pm, true).unwrap());
        prop_assert!(equivalent(&pm, &m, true).unwrap());
        let strict = equivalent(&m, &pm, false).unwrap();
        prop_assert_eq!(strict, equivalent(&pm, &m, false).unwrap());
        prop_assert_eq!(strict, d % 2 == 1);
    }

    #[test]
    fn json_round_trip(n in norms()) {
        let rep = clifford_module(n.len(), &n).unwrap();
        let back = MatrixRep::from_json(&rep.algebra, &rep.to_json()).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn rescaled_generator_is_rejected(n in norms(), which in 0usize..4) {
        let mut rep = clifford_module(n.len(), &n).unwrap();
        let k = 1 + which % n.len();
        let two = Scalar::from_int(2, rep.field());
        rep.rho[k] = rep.rho[k].scale(&two);
        prop_assert!(!check(&rep));
    }
}

#[test]
fn mixed_surds_are_a_precondition_error() {
    let n = [Rat::from_integer(4.into()), Rat::from_integer(6.into()), Rat::from_integer(10.into())];
    let err = clifford_module(3, &n).unwrap_err();
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn unlisted_elements_act_by_zero() {
    let rep = clifford_module(2, &[Rat::from_integer(2.into()), Rat::from_integer(2.into())]).unwrap();
    let mut v = rep.to_json();
    v["rho"].as_array_mut().unwrap().retain(|item| item["element"] != "f2");
    let partial = MatrixRep::from_json(&rep.algebra, &v).unwrap();
    assert!(partial.rho[2].is_zero());
    assert!(!check(&partial));
}

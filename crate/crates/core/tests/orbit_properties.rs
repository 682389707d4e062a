use proptest::prelude::*;

use superlie::catalog::build;
use superlie::exactnum::{FieldTag, Scalar};
use superlie::glinalg::{dot, unit_vec, vec_add, vec_scale, Mat, Vector};
use superlie::lsa::LieSuperalgebra;
use superlie::orbits::{
    branching_multiplicity, clifford_module_dim, coadjoint_orbit_member, in_admissible_cone, polarizing_flag, PolarizingSystem,
};

const NILPOTENT: &[&str] = &["h(1)", "h(2)", "hc(2|1,+)", "hc(2|2,++)", "hc(2|2,+-)", "hc(2|3,+-+)", "hc(4|2,+-)", "n3super"];

fn ints(v: &[i64], tag: FieldTag) -> Vector {
    v.iter().map(|&c| Scalar::from_int(c, tag)).collect()
}

fn take(g: &LieSuperalgebra, c: &[i64]) -> Vector {
    ints(&c[..g.even_dim()], g.tag())
}

/// `X ↦ λ(X + [Y,X] + [Y,[Y,X]]/2 + ⋯)` by iterated brackets.
fn coadjoint_by_brackets(g0: &LieSuperalgebra, lambda: &[Scalar], y: &[Scalar]) -> Vector {
    let e = g0.dim();
    let tag = g0.tag();
    (0..e)
        .map(|j| {
            let mut term = unit_vec(e, j, tag);
            let mut total = term.clone();
            for k in 1..=e {
                term = vec_scale(&g0.bracket(y, &term), &Scalar::from_frac(1, k as i64, tag));
                total = vec_add(&total, &term);
            }
            dot(lambda, &total)
        })
        .collect()
}

fn omega(g0: &LieSuperalgebra, lambda: &[Scalar], basis: &[Vector]) -> Mat {
    let rows = basis.iter().map(|a| basis.iter().map(|b| dot(lambda, &g0.bracket(a, b))).collect()).collect();
    Mat::from_rows(rows, g0.tag())
}

fn check_system(g: &LieSuperalgebra, ps: &PolarizingSystem) -> Result<(), TestCaseError> {
    let g0 = g.even_part();
    let e = g.even_dim();
    let tag = g.tag();
    let lambda = &ps.lambda;
    let all: Vec<Vector> = (0..e).map(|i| unit_vec(e, i, tag)).collect();
    let rank = omega(&g0, lambda, &all).rank();
    prop_assert_eq!(rank, ps.even_rank);
    prop_assert!(omega(&g0, lambda, ps.m0.basis()).is_zero(), "Ω_λ vanishes on m₀");
    prop_assert_eq!(2 * ps.m0.dim(), 2 * e - rank);
    let odd = g.odd_space();
    let k = g.bracket_spaces(&odd, &odd);
    prop_assert!(ps.m.contains_space(&k));
    prop_assert!(ps.m.contains_space(&odd));
    prop_assert!(g.is_subalgebra(&ps.m));
    prop_assert!(ps.m.contains_space(&ps.j));
    prop_assert!(ps.m.dim() == ps.m0.dim() + g.odd_dim());
    let mj = g.bracket_spaces(&ps.m, &ps.j);
    prop_assert!(ps.j.contains_space(&mj), "j is an ideal of m");
    for v in ps.j.basis() {
        if v[e..].iter().all(Scalar::is_zero) {
            prop_assert!(dot(lambda, &v[..e]).is_zero());
        }
    }
    let cq = &ps.clifford_quotient;
    prop_assert_eq!(cq.dim(), ps.m.dim() - ps.j.dim());
    prop_assert!(cq.even_dim() <= 1);
    let even_q = cq.even_space();
    prop_assert!(cq.center().contains_space(&even_q));
    let b = branching_multiplicity(ps);
    prop_assert_eq!(b.multiplicity, clifford_module_dim(cq.odd_dim()));
    Ok(())
}

fn nilpotent_key() -> impl Strategy<Value = &'static str> {
    proptest::sample::select(NILPOTENT)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polarizing_systems_satisfy_their_invariants(key in nilpotent_key(), c in proptest::collection::vec(-2i64..=2, 8)) {
        let g = build(key).unwrap().algebra;
        let lambda = take(&g, &c);
        let adm = in_admissible_cone(&g, &lambda).unwrap();
        match polarizing_flag(&g, &lambda) {
            Ok(ps) => {
                prop_assert!(adm.admissible);
                check_system(&g, &ps)?;
            }
            Err(err) => {
                prop_assert!(!adm.admissible, "{}: {}", key, err);
                prop_assert_eq!(err.exit_code(), 1);
            }
        }
    }

    #[test]
    fn translates_by_the_group_are_orbit_members(
        key in nilpotent_key(),
        c in proptest::collection::vec(-2i64..=2, 8),
        y in proptest::collection::vec(-2i64..=2, 8),
    ) {
        let g = build(key).unwrap().algebra;
        let g0 = g.even_part();
        let lambda = take(&g, &c);
        let lambda2 = coadjoint_by_brackets(&g0, &lambda, &take(&g, &y));
        let member = coadjoint_orbit_member(&g, &lambda, &lambda2).unwrap();
        prop_assert!(member.is_some(), "{}", key);
        let back = coadjoint_orbit_member(&g, &lambda2, &lambda).unwrap();
        prop_assert!(back.is_some());
    }

    #[test]
    fn central_characters_separate_orbits(key in nilpotent_key(), c in proptest::collection::vec(-2i64..=2, 8), shift in 1i64..3) {
        let g = build(key).unwrap().algebra;
        let e = g.even_dim();
        let g0 = g.even_part();
        let z = g0.center().basis().first().expect("nilpotent g₀ has a center").clone();
        let lambda = take(&g, &c);
        // move λ along a functional that is nonzero on z
        let k = (0..e).find(|&k| !z[k].is_zero()).unwrap();
        let lambda2 = vec_add(&lambda, &vec_scale(&unit_vec(e, k, g.tag()), &Scalar::from_int(shift, g.tag())));
        prop_assert!(dot(&lambda, &z) != dot(&lambda2, &z));
        prop_assert!(coadjoint_orbit_member(&g, &lambda, &lambda2).unwrap().is_none());
    }
}

#[test]
fn heisenberg_orbits_branch_with_multiplicity_one() {
    let g = build("h(1)").unwrap().algebra;
    for c in [[0, 0, 1], [1, -1, 2], [0, 0, -3], [2, 1, 0]] {
        let ps = polarizing_flag(&g, &ints(&c, g.tag())).unwrap();
        assert_eq!(branching_multiplicity(&ps).multiplicity, 1);
        let expected_rank = if c[2] == 0 { 0 } else { 2 };
        assert_eq!(ps.even_rank, expected_rank);
    }
}

#[test]
fn zero_functional_gives_everything() {
    for key in NILPOTENT {
        let g = build(key).unwrap().algebra;
        let ps = polarizing_flag(&g, &vec![Scalar::zero(g.tag()); g.even_dim()]).unwrap();
        assert_eq!(ps.m0, g.even_part().full_space(), "{key}");
        assert_eq!(ps.m, g.full_space());
        assert_eq!(ps.j, g.full_space());
        assert_eq!(ps.clifford_quotient.dim(), 0);
    }
}

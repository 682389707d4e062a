use proptest::prelude::*;

use superlie::cartan::{cartan_subsuperalgebra, fixed_point_projection, root_decomposition};
use superlie::catalog::{build, CatalogEntry, STANDARD_KEYS};
use superlie::cones::{
    convex_hull_contains_zero, find_isotropic_odd, find_line, find_pd_functional, is_positive_definite, leading_minors, odd_square,
    star_reduced_report, verify_certificate, ConeStatus, PdBudget, StarOptions, StarStatus,
};
use superlie::exactnum::{FieldTag, Scalar};
use superlie::glinalg::{int_vec, is_zero_vec, vec_add, vec_scale, Mat, Subspace, Vector};
use superlie::lsa::{centroid, grassmann_extend, LieSuperalgebra};

fn sig_string(signs: &[bool]) -> String {
    signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
}

fn family_key() -> impl Strategy<Value = String> {
    prop_oneof![
        proptest::collection::vec(any::<bool>(), 1..=4).prop_map(|s| format!("cl(1|{},{})", s.len(), sig_string(&s))),
        proptest::collection::vec(any::<bool>(), 1..=3).prop_map(|s| format!("hc(2|{},{})", s.len(), sig_string(&s))),
        (1usize..=2).prop_map(|n| format!("h({n})")),
        (0usize..=2, 0usize..=1, 0usize..=1, 0usize..=1)
            .prop_filter("nonempty blocks", |(p, q, r, s)| p + q > 0 && r + s > 0 && p + q + r + s <= 4)
            .prop_map(|(p, q, r, s)| format!("su({p},{q}|{r},{s})")),
        (1usize..=2, 0usize..=1).prop_map(|(p, q)| format!("osp({p},{q}|2)")),
        Just("sq(1,1)".to_string()),
    ]
}

fn homogeneous(g: &LieSuperalgebra, parity: u8, coeffs: &[i64]) -> Vector {
    let n = g.dim();
    let mut v = vec![Scalar::zero(g.tag()); n];
    for (k, c) in (0..n).filter(|&k| g.parity(k) == parity).zip(coeffs.iter().cycle()) {
        v[k] = Scalar::from_int(*c, g.tag());
    }
    v
}

fn sign(p: u8, q: u8) -> Scalar {
    Scalar::from_int(if p * q == 1 { -1 } else { 1 }, FieldTag::Q)
}

fn entries() -> Vec<CatalogEntry> {
    STANDARD_KEYS.iter().map(|k| build(k).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn family_members_satisfy_axioms_and_dims(key in family_key()) {
        let e = build(&key).unwrap();
        prop_assert!(e.algebra.check_axioms().ok(), "{}", key);
        prop_assert_eq!((e.algebra.even_dim(), e.algebra.odd_dim()), e.expected.dims);
    }

    #[test]
    fn random_elements_obey_graded_identities(
        k in 0..STANDARD_KEYS.len(),
        px in 0u8..2, py in 0u8..2, pz in 0u8..2,
        cx in proptest::collection::vec(-2i64..=2, 1..6),
        cy in proptest::collection::vec(-2i64..=2, 1..6),
        cz in proptest::collection::vec(-2i64..=2, 1..6),
    ) {
        let g = build(STANDARD_KEYS[k]).unwrap().algebra;
        let (x, y, z) = (homogeneous(&g, px, &cx), homogeneous(&g, py, &cy), homogeneous(&g, pz, &cz));
        let tag = g.tag();
        let lift = |s: Scalar| s.lift(tag).unwrap();
        // [x,y] = -(-1)^{|x||y|} [y,x]
        let xy = g.bracket(&x, &y);
        let yx = g.bracket(&y, &x);
        prop_assert!(is_zero_vec(&vec_add(&xy, &vec_scale(&yx, &lift(sign(px, py))))));
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        let lhs = g.bracket(&x, &g.bracket(&y, &z));
        let r1 = g.bracket(&xy, &z);
        let r2 = vec_scale(&g.bracket(&y, &g.bracket(&x, &z)), &lift(sign(px, py)));
        prop_assert_eq!(lhs, vec_add(&r1, &r2));
    }

    #[test]
    fn odd_square_of_even_times_xi_vanishes(k in 0usize..2, c in proptest::collection::vec(-3i64..=3, 3)) {
        let s = build(["sl(2,R)", "su(2)"][k]).unwrap().algebra;
        let ext = grassmann_extend(&s, 1);
        let mut x = vec![Scalar::zero(ext.tag()); ext.dim()];
        for (i, ci) in c.iter().enumerate() {
            let name = format!("{}*xi1", s.names()[i]);
            x[ext.index_of(&name).unwrap()] = Scalar::from_int(*ci, ext.tag());
        }
        prop_assert!(is_zero_vec(&ext.bracket(&x, &x)));
    }

    #[test]
    fn pd_test_agrees_with_sylvester(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 4), n in 1usize..=4) {
        let mut m = Mat::zeros(n, n, FieldTag::Q);
        for i in 0..n {
            for j in 0..n {
                let v = rows[i.min(j)][i.max(j)] + if i == j { 4 } else { 0 };
                m.set(i, j, Scalar::from_int(v, FieldTag::Q));
            }
        }
        let sylvester = leading_minors(&m).iter().all(|d| d.real_sign() == Some(std::cmp::Ordering::Greater));
        prop_assert_eq!(is_positive_definite(&m), sylvester);
    }

    #[test]
    fn cone_certificates_are_consistent(signs in proptest::collection::vec(any::<bool>(), 1..=4), heis in any::<bool>()) {
        let key = if heis && signs.len() <= 3 {
            format!("hc(2|{},{})", signs.len(), sig_string(&signs))
        } else {
            format!("cl(1|{},{})", signs.len(), sig_string(&signs))
        };
        let g = build(&key).unwrap().algebra;
        let definite = signs.iter().all(|&s| s) || signs.iter().all(|&s| !s);
        let pd = find_pd_functional(&g, PdBudget::default());
        let iso = find_isotropic_odd(&g);
        verify_certificate(&g, &pd).unwrap();
        verify_certificate(&g, &iso).unwrap();
        if pd.status == ConeStatus::PointedCertified {
            prop_assert!(iso.isotropic.is_none());
            prop_assert!(find_line(&g).is_none());
            let e = g.even_dim();
            let squares: Vec<Vector> = (0..g.odd_dim())
                .map(|i| odd_square(&g, &superlie::glinalg::unit_vec(g.dim(), e + i, g.tag())).unwrap()[..e].to_vec())
                .collect();
            prop_assert!(convex_hull_contains_zero(&squares).is_none());
        }
        if let Some(x) = &iso.isotropic {
            prop_assert!(pd.status != ConeStatus::PointedCertified);
            let lam = pd.lambda.clone().unwrap_or_else(|| vec![Scalar::one(g.tag()); g.even_dim()]);
            let sq = odd_square(&g, x).unwrap();
            prop_assert!(superlie::glinalg::dot(&lam, &sq[..g.even_dim()]).is_zero());
        }
        prop_assert_eq!(pd.status == ConeStatus::PointedCertified, definite, "{}", key);
        let star = star_reduced_report(&g, &StarOptions::default());
        prop_assert_eq!(star.status == StarStatus::ConeOk, definite, "{}", key);
        prop_assert_eq!(star.status == StarStatus::Obstructed, !definite, "{}", key);
    }
}

#[test]
fn center_has_full_supercommutant() {
    for e in entries() {
        let g = &e.algebra;
        assert_eq!(g.supercommutant(&g.center()).unwrap(), g.full_space(), "{}", e.key);
    }
}

#[test]
fn simple_entries_have_even_centroid() {
    let mut seen = 0;
    for e in entries().into_iter().filter(|e| e.expected.simple == Some(true) && e.algebra.odd_dim() > 0) {
        assert_eq!(centroid(&e.algebra).dims().1, 0, "{}", e.key);
        seen += 1;
    }
    assert!(seen >= 2);
}

#[test]
fn fixed_point_projection_is_an_equivariant_idempotent() {
    let mut seen = 0;
    for e in entries() {
        let Some(h0) = &e.cartan_hint else { continue };
        let g = &e.algebra;
        let Ok(p) = fixed_point_projection(g, h0) else { continue };
        assert_eq!(p.mul(&p), p, "{}", e.key);
        let ev = g.even_dim();
        let idx: Vec<usize> = (0..ev).collect();
        for k in h0.basis() {
            let ad = g.ad(k).submatrix(&idx, &idx);
            assert_eq!(ad.mul(&p), p.mul(&ad), "{}", e.key);
        }
        seen += 1;
    }
    assert!(seen >= 3);
}

#[test]
fn root_multiplicities_are_symmetric_per_parity() {
    let mut seen = 0;
    for e in entries() {
        let Some(h0) = &e.cartan_hint else { continue };
        let g = &e.algebra;
        let Ok(c) = cartan_subsuperalgebra(g, h0) else { continue };
        if !c.compactly_embedded {
            continue;
        }
        let rd = root_decomposition(g, &c).unwrap();
        for r in &rd.roots {
            let neg: Vec<Scalar> = r.alpha.iter().map(|x| -x).collect();
            let m = rd.root(&neg).expect("negative root present");
            assert_eq!((r.even.dim(), r.odd.dim()), (m.even.dim(), m.odd.dim()), "{}", e.key);
        }
        let total: usize = rd.roots.iter().map(|r| r.even.dim() + r.odd.dim()).sum();
        assert_eq!(total, g.dim());
        seen += 1;
    }
    assert!(seen >= 3);
}

/// Abelian even ideals among the canonical candidates lie in the center
/// whenever the odd-square cone has a positive definite functional.
#[test]
fn abelian_even_ideals_are_central_under_a_pd_functional() {
    let mut seen = 0;
    for e in entries() {
        let g = &e.algebra;
        if g.odd_dim() == 0 || find_pd_functional(g, PdBudget::default()).status != ConeStatus::PointedCertified {
            continue;
        }
        // only algebras generated by their odd part
        if g.bracket_spaces(&g.odd_space(), &g.odd_space()) != g.even_space() {
            continue;
        }
        let even = g.even_space();
        let mut candidates: Vec<Subspace> = vec![g.center().intersect(&even)];
        candidates.extend(g.lower_central_series().iter().map(|s| s.intersect(&even)));
        candidates.extend(g.derived_series().iter().map(|s| s.intersect(&even)));
        for s in candidates.iter().filter(|s| !s.is_zero() && g.is_ideal(s) && g.bracket_spaces(s, s).is_zero()) {
            assert!(g.center().contains_space(s), "{}", e.key);
            seen += 1;
        }
    }
    assert!(seen >= 1);
}

#[test]
fn integer_line_witness_recheck() {
    let g = build("cl(1|2,+-)").unwrap().algebra;
    let x = int_vec(&[0, 1, 1], FieldTag::Q);
    assert!(is_zero_vec(&odd_square(&g, &x).unwrap()));
}

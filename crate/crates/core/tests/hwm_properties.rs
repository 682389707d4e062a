use proptest::prelude::*;

use superlie::cartan::{cartan_subsuperalgebra, root_decomposition, RootDatum};
use superlie::catalog::build;
use superlie::exactnum::{FieldTag, Scalar};
use superlie::glinalg::{vec_add, vec_scale};
use superlie::hwm::{build_truncated, positive_system, TModule};

const KEYS: &[&str] = &["osp(1|2)", "su(2)", "su(2|1)", "su(3)", "su(1,1|1,1)"];

fn datum(key: &str) -> (RootDatum, Vec<Vec<Scalar>>) {
    let e = build(key).unwrap();
    let h0 = e.cartan_hint.unwrap();
    let c = cartan_subsuperalgebra(&e.algebra, &h0).unwrap();
    let rd = root_decomposition(&e.algebra, &c).unwrap();
    // first regular integer combination of the Cartan basis
    let basis = h0.basis();
    let x0 = (1..20i64)
        .map(|s| {
            basis.iter().enumerate().fold(vec![Scalar::zero(e.algebra.tag()); e.algebra.dim()], |acc, (i, b)| {
                vec_add(&acc, &vec_scale(b, &Scalar::from_int(s.pow(i as u32 + 1) + i as i64, b[0].tag())))
            })
        })
        .find(|x| positive_system(&rd, x).is_ok())
        .expect("regular element");
    let pos = positive_system(&rd, &x0).unwrap();
    (rd, pos)
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Monomials of degree at most `depth` with `e` even and `o` odd generators.
fn monomial_count(e: u64, o: u64, depth: u64) -> u64 {
    (0..=o.min(depth)).map(|j| binom(o, j) * binom(depth - j + e, e)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shell_counts_and_top_weight(k in 0..KEYS.len(), w in proptest::collection::vec(-3i64..=3, 3), v in 1usize..=3, depth in 0usize..=3) {
        let (rd, pos) = datum(KEYS[k]);
        let h = rd.cartan.h0.dim();
        let lambda: Vec<Scalar> = w[..h].iter().map(|&x| Scalar::from_int(x, FieldTag::Q)).collect();
        let t = build_truncated(&rd, &pos, &TModule::new(lambda, v), depth).unwrap();
        prop_assert!(t.check_cone());
        let top = t.lambda.clone();
        let zero_coeff = t.table.iter().filter(|e| e.coefficients.iter().all(|&c| c == 0)).count();
        prop_assert_eq!(zero_coeff, 1);
        prop_assert_eq!(t.multiplicity(&top), v);
        let odd = t.generators.iter().filter(|g| g.parity == 1).count() as u64;
        let even = t.generators.len() as u64 - odd;
        let total: usize = t.table.iter().map(|e| e.multiplicity).sum();
        prop_assert_eq!(total as u64, v as u64 * monomial_count(even, odd, depth as u64));
        prop_assert!(t.table.iter().all(|e| e.depth <= depth && e.multiplicity % v == 0));
    }

    #[test]
    fn multiplicities_grow_with_depth(k in 0..KEYS.len(), depth in 0usize..=2) {
        let (rd, pos) = datum(KEYS[k]);
        let h = rd.cartan.h0.dim();
        let v = TModule::new(vec![Scalar::zero(FieldTag::Q); h], 1);
        let small = build_truncated(&rd, &pos, &v, depth).unwrap();
        let large = build_truncated(&rd, &pos, &v, depth + 1).unwrap();
        for e in &small.table {
            prop_assert!(large.multiplicity(&e.weight) >= e.multiplicity);
        }
        prop_assert!(large.table.len() >= small.table.len());
    }
}

#[test]
fn positive_roots_split_the_nonzero_roots() {
    for key in KEYS {
        let (rd, pos) = datum(key);
        let nonzero = rd.nonzero().count();
        assert_eq!(2 * pos.len(), nonzero, "{key}");
        for a in &pos {
            let neg: Vec<Scalar> = a.iter().map(|x| -x).collect();
            assert!(!pos.contains(&neg), "{key}");
        }
    }
}

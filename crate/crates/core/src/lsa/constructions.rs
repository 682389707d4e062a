use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::glinalg::{unit_vec, Subspace};

use super::algebra::{koszul, LieSuperalgebra, SparseVec};

/// Sign of `ξ_S ξ_T` in the Grassmann algebra, or `None` when `S ∩ T ≠ ∅`.
fn grassmann_product(s: u32, t: u32) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    // each generator of t moves past the larger generators of s
    let mut swaps = 0u32;
    let mut tt = t;
    while tt != 0 {
        let b = tt.trailing_zeros();
        swaps += (s >> (b + 1)).count_ones();
        tt &= tt - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

fn subset_name(s: u32) -> String {
    let idx: Vec<String> = (0..32).filter(|b| s >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
    format!("xi{}", idx.join("."))
}

/// `g ⊗ Λ(n)` with `[x⊗a, y⊗b] = (-1)^{|a||y|} [x,y] ⊗ ab`.
pub fn grassmann_extend(g: &LieSuperalgebra, n: u32) -> LieSuperalgebra {
    assert!(n < 16, "Grassmann extension limited to n < 16");
    let mut elems: Vec<(usize, u32, u8)> = Vec::new();
    for s in 0..(1u32 << n) {
        for i in 0..g.dim() {
            let p = (g.parity(i) + (s.count_ones() % 2) as u8) % 2;
            elems.push((i, s, p));
        }
    }
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&k| (elems[k].2, k));
    let elems: Vec<(usize, u32, u8)> = order.iter().map(|&k| elems[k]).collect();
    let even = elems.iter().filter(|e| e.2 == 0).count();
    let pos = |i: usize, s: u32| elems.iter().position(|e| e.0 == i && e.1 == s).expect("present");
    let names: Vec<String> = elems
        .iter()
        .map(|&(i, s, _)| if s == 0 { g.names()[i].clone() } else { format!("{}*{}", g.names()[i], subset_name(s)) })
        .collect();
    let mut out = LieSuperalgebra::abelian(&format!("{}(x)L({n})", g.name()), names, even, g.tag());
    for (a, &(x, s, _)) in elems.iter().enumerate() {
        for (b, &(y, t, _)) in elems.iter().enumerate() {
            let Some(sign) = grassmann_product(s, t) else { continue };
            let sign = sign * koszul((s.count_ones() % 2) as u8, g.parity(y));
            let st = s | t;
            let v: SparseVec = g
                .bracket_basis(x, y)
                .iter()
                .map(|(k, c)| (pos(*k, st), c.scale(&num::BigRational::from_integer(sign.into()))))
                .collect();
            let mut v = v;
            v.sort_by_key(|e| e.0);
            out.set_bracket(a, b, v);
        }
    }
    out
}

/// Quotient by a graded ideal; the complement basis is the set of standard
/// basis vectors outside the ideal's pivot columns.
pub fn quotient(g: &LieSuperalgebra, ideal: &Subspace) -> Result<(LieSuperalgebra, Vec<usize>)> {
    g.graded_basis(ideal)?;
    if let Some((i, y)) = g.ideal_witness(ideal) {
        let yname = describe(g, &y);
        return Err(Error::NotAnIdeal { left: g.names()[i].clone(), right: yname });
    }
    let comp = ideal.complement_indices();
    let even = comp.iter().filter(|&&k| g.parity(k) == 0).count();
    let names: Vec<String> = comp.iter().map(|&k| g.names()[k].clone()).collect();
    let n = g.dim();
    let tag = g.tag();
    let q = LieSuperalgebra::from_fn(&format!("{}/I", g.name()), names, even, tag, |a, b| {
        let v = g.bracket(&unit_vec(n, comp[a], tag), &unit_vec(n, comp[b], tag));
        let r = ideal.reduce(&v);
        comp.iter().map(|&k| r[k].clone()).collect()
    });
    Ok((q, comp))
}

/// Human-readable linear combination of basis names.
pub fn describe(g: &LieSuperalgebra, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| if x.is_one() { g.names()[k].clone() } else { format!("({x}){}", g.names()[k]) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_signs() {
        // ξ1 ξ2 = ξ{1,2}, ξ2 ξ1 = -ξ{1,2}
        assert_eq!(grassmann_product(0b01, 0b10), Some(1));
        assert_eq!(grassmann_product(0b10, 0b01), Some(-1));
        assert_eq!(grassmann_product(0b01, 0b01), None);
        assert_eq!(grassmann_product(0b011, 0b100), Some(1));
        assert_eq!(grassmann_product(0b100, 0b011), Some(1));
        assert_eq!(grassmann_product(0b010, 0b101), Some(-1));
    }
}

//! Phase-one simplex over the rationals with Bland's rule.

use num::{One, Signed, Zero};

use crate::exactnum::Rat;

/// A point `x ≥ 0` with `A x = b`, or `None` when infeasible.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // columns: n originals, m artificials, then the right-hand side
    let w = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = a[i].iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    // objective: minimize the sum of artificials, written as reduced costs
    let mut obj = vec![Rat::zero(); w];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[w - 1] -= &row[w - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) else { break };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][w - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        pivot(&mut t, r, enter);
        basis[r] = enter;
    }
    if !t[m][w - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][w - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rat>], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pr = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&pr) {
            *x -= &f * y;
        }
    }
}

use serde::Serialize;

use crate::exactnum::{split_rational, FieldTag, NumError, Scalar};

use super::matrix::Mat;
use super::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenspace {
    pub value: Scalar,
    pub space: Subspace,
}

/// Common eigenvalue tuple and generalized eigenspace of a commuting family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JointEigenspace {
    pub values: Vec<Scalar>,
    pub space: Subspace,
}

fn require_rational(m: &Mat) -> Result<(), NumError> {
    if !m.is_rational() {
        return Err(NumError::SplittingFailure("matrix entries are not rational".into()));
    }
    Ok(())
}

/// Field holding every eigenvalue of the family, plus the eigenvalue lists.
fn split_family(ms: &[Mat]) -> Result<(FieldTag, Vec<Vec<Scalar>>), NumError> {
    let mut field = FieldTag::Q;
    let mut roots = Vec::new();
    for m in ms {
        require_rational(m)?;
        let s = split_rational(&m.char_poly())?;
        field = field
            .join(s.field)
            .ok_or_else(|| NumError::SplittingFailure(format!("eigenvalues need both {field} and {}", s.field)))?;
        roots.push(s.roots);
    }
    let roots = roots
        .into_iter()
        .map(|rs| rs.into_iter().map(|r| r.lift(field)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok((field, roots))
}

/// Generalized eigenspaces of a square matrix with rational entries.
/// Eigenvalues live in the smallest tower field that holds them; otherwise
/// a splitting failure is returned.
pub fn generalized_eigenspaces(m: &Mat) -> Result<Vec<Eigenspace>, NumError> {
    let joint = joint_generalized_eigenspaces(std::slice::from_ref(m))?;
    Ok(joint.into_iter().map(|j| Eigenspace { value: j.values[0].clone(), space: j.space }).collect())
}

/// Joint generalized eigenspaces of a commuting family, refined one matrix
/// at a time and sorted canonically by eigenvalue tuple.
pub fn joint_generalized_eigenspaces(ms: &[Mat]) -> Result<Vec<JointEigenspace>, NumError> {
    let n = ms.first().map_or(0, |m| m.rows());
    let (field, roots) = split_family(ms)?;
    let mut parts = vec![JointEigenspace { values: Vec::new(), space: Subspace::full(n, field) }];
    for (m, rs) in ms.iter().zip(&roots) {
        let m = m.lift(field)?;
        let mut next = Vec::new();
        for part in &parts {
            let mut covered = 0;
            for mu in rs {
                let shifted = m.sub(&Mat::scalar(n, mu)).pow(n);
                let k = shifted.kernel().intersect(&part.space);
                if k.dim() > 0 {
                    covered += k.dim();
                    let mut values = part.values.clone();
                    values.push(mu.clone());
                    next.push(JointEigenspace { values, space: k });
                }
            }
            if covered != part.space.dim() {
                return Err(NumError::SplittingFailure("family does not commute".into()));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| {
        a.values.iter().zip(&b.values).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(parts)
}

/// Ordinary eigenspace `ker(M - μ)` in the eigenvalue's field.
pub fn eigenspace(m: &Mat, mu: &Scalar) -> Result<Subspace, NumError> {
    let m = m.lift(mu.tag())?;
    Ok(m.sub(&Mat::scalar(m.rows(), mu)).kernel())
}

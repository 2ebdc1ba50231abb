use nalgebra::DMatrix;

use crate::error::{Error, Result};

use super::vector::l2_norm;
use super::{inner_product, outer_product, Operator, StateVector, Tolerances, C64};

/// Eigendecomposition of a Hermitian operator, eigenvalues descending and
/// paired with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<StateVector>,
}

fn to_nalgebra(m: &Operator) -> DMatrix<C64> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(r, c))
}

/// Full eigendecomposition of a Hermitian operator.
///
/// The input is validated against `tol.herm` and symmetrized before the
/// decomposition so roundoff asymmetry cannot leak into the spectrum.
pub fn hermitian_eigen(m: &Operator, tol: &Tolerances) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { left: m.rows(), right: m.cols() });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = m.hermiticity_defect();
    if defect > tol.herm {
        return Err(Error::NotHermitian { defect });
    }
    let symmetrized = m.add(&m.adjoint()).scale(C64::new(0.5, 0.0));
    let se = to_nalgebra(&symmetrized).symmetric_eigen();

    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| se.eigenvalues[b].partial_cmp(&se.eigenvalues[a]).unwrap());

    let mut eigenvalues = Vec::with_capacity(order.len());
    let mut eigenvectors = Vec::with_capacity(order.len());
    for &k in &order {
        eigenvalues.push(se.eigenvalues[k]);
        let col: Vec<C64> = se.eigenvectors.column(k).iter().copied().collect();
        eigenvectors.push(StateVector::normalized(col)?);
    }
    Ok(HermitianEigen { eigenvalues, eigenvectors })
}

/// Eigenvalues of a Hermitian operator in descending order.
///
/// Roundoff negatives within `tol.herm` of zero are clamped to zero so that
/// positive semi-definite inputs always report a non-negative spectrum.
pub fn hermitian_eigenvalues(m: &Operator, tol: &Tolerances) -> Result<Vec<f64>> {
    let eig = hermitian_eigen(m, tol)?;
    Ok(eig
        .eigenvalues
        .into_iter()
        .map(|v| if v < 0.0 && v >= -tol.herm { 0.0 } else { v })
        .collect())
}

/// Completes mutually orthonormal columns to a full unitary.
///
/// Completion is deterministic: standard basis candidates are orthogonalized
/// in index order against the accepted columns, and each accepted candidate
/// is rephased so its first nonzero entry is real positive.
pub fn unitary_completion(columns: &[StateVector], tol: &Tolerances) -> Result<Operator> {
    if columns.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = columns[0].dim();
    if columns.iter().any(|c| c.dim() != dim) || columns.len() > dim {
        return Err(Error::DimensionMismatch { left: columns.len(), right: dim });
    }
    let mut defect: f64 = 0.0;
    for (i, u) in columns.iter().enumerate() {
        for v in &columns[i + 1..] {
            defect = defect.max(inner_product(u, v)?.norm());
        }
    }
    if defect > tol.norm {
        return Err(Error::NotOrthonormal { defect });
    }

    let mut cols: Vec<Vec<C64>> = columns.iter().map(|c| c.amps().to_vec()).collect();
    for candidate in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut v = vec![C64::new(0.0, 0.0); dim];
        v[candidate] = C64::new(1.0, 0.0);
        // two passes keep the residual orthogonal at working precision
        for _ in 0..2 {
            for c in &cols {
                let overlap: C64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vk, ck) in v.iter_mut().zip(c) {
                    *vk -= overlap * ck;
                }
            }
        }
        let norm = l2_norm(&v);
        if norm < 1e-6 {
            continue; // candidate already spanned
        }
        for vk in v.iter_mut() {
            *vk /= norm;
        }
        // sign convention: first nonzero entry made real positive
        if let Some(lead) = v.iter().find(|a| a.norm() > 1e-12) {
            let phase = lead.conj() / lead.norm();
            for vk in v.iter_mut() {
                *vk *= phase;
            }
        }
        cols.push(v);
    }
    if cols.len() != dim {
        return Err(Error::InvariantViolation { what: "unitary completion", defect: (dim - cols.len()) as f64 });
    }

    let u = Operator::from_fn(dim, dim, |r, c| cols[c][r]);
    let unitarity = u.unitarity_defect();
    if unitarity > tol.idem {
        return Err(Error::InvariantViolation { what: "unitary completion", defect: unitarity });
    }
    Ok(u)
}

/// Inverts a Hermitian positive semi-definite Gram matrix.
///
/// Full-rank inputs get the true inverse; eigenvalues at or below `tol.rank`
/// are treated as zero, yielding the spectral pseudo-inverse. The result is
/// Hermitian by construction.
pub fn invert_gram(a: &Operator, tol: &Tolerances) -> Result<Operator> {
    let eig = hermitian_eigen(a, tol)?;
    let mut inv = Operator::zeros(a.rows(), a.cols());
    for (value, vector) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
        if *value < -tol.herm {
            return Err(Error::NotPositiveSemiDefinite { min_eig: *value });
        }
        if *value <= tol.rank {
            continue;
        }
        inv = inv.add(&outer_product(vector, vector).scale(C64::new(1.0 / value, 0.0)));
    }
    Ok(inv)
}

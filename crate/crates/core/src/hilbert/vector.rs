use crate::error::{Error, Result};

use super::{Operator, Tolerances, C64};

/// A normalized state vector over a finite orthonormal basis.
///
/// Construction enforces finiteness and unit norm, so a `StateVector` held
/// anywhere in the crate is always a legitimate pure state. Unnormalized or
/// zero amplitude data lives in plain `Vec<C64>` buffers instead.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<C64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalized within `Tolerances::DEFAULT.norm`.
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        Self::with_tolerance(amps, Tolerances::DEFAULT.norm)
    }

    /// Wraps amplitudes that are already normalized within `eps_norm`.
    pub fn with_tolerance(amps: Vec<C64>, eps_norm: f64) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = l2_norm(&amps);
        let defect = (norm - 1.0).abs();
        if defect > eps_norm {
            return Err(Error::NotNormalized { defect });
        }
        Ok(Self { amps })
    }

    /// Rescales arbitrary finite amplitudes to unit norm.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = l2_norm(&amps);
        if norm * norm < Tolerances::DEFAULT.zero {
            return Err(Error::ZeroVector);
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        Ok(Self { amps })
    }

    /// The `k`-th standard basis vector of the given dimension.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[k] = C64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    /// Real amplitudes, normalized on construction.
    pub fn from_reals(amps: &[f64]) -> Result<Self> {
        Self::normalized(amps.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_normalized_unchecked(amps: Vec<C64>) -> Self {
        debug_assert!((l2_norm(&amps) - 1.0).abs() < 1e-8);
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amp(&self, k: usize) -> C64 {
        self.amps[k]
    }

    pub fn norm(&self) -> f64 {
        l2_norm(&self.amps)
    }
}

pub(crate) fn l2_norm(amps: &[C64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// `⟨u|v⟩`, conjugate-linear in `u` and linear in `v`.
pub fn inner_product(u: &StateVector, v: &StateVector) -> Result<C64> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    Ok(u.amps().iter().zip(v.amps()).map(|(a, b)| a.conj() * b).sum())
}

/// `u ⊗ v`, flattened row-major with the `u` index outer and the `v` index
/// inner, so entry `(i, j)` lands at `i * v.dim() + j`.
pub fn tensor_product(u: &StateVector, v: &StateVector) -> StateVector {
    let mut amps = Vec::with_capacity(u.dim() * v.dim());
    for a in u.amps() {
        for b in v.amps() {
            amps.push(a * b);
        }
    }
    // norm is multiplicative, so the product of unit vectors is a unit vector
    StateVector::from_normalized_unchecked(amps)
}

/// `|u⟩⟨v|` with entries `M_kl = u_k · conj(v_l)`.
pub fn outer_product(u: &StateVector, v: &StateVector) -> Operator {
    Operator::from_fn(u.dim(), v.dim(), |k, l| u.amp(k) * v.amp(l).conj())
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn plus() -> StateVector {
        StateVector::from_reals(&[1.0, 1.0]).unwrap()
    }

    #[test]
    fn inner_product_unit_with_itself() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let p = inner_product(&e1, &e1).unwrap();
        assert!((p - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn inner_product_orthonormal_pair() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let e2 = StateVector::basis(2, 1).unwrap();
        assert!(inner_product(&e1, &e2).unwrap().norm() < 1e-15);
    }

    #[test]
    fn inner_product_hand_evaluated_overlap() {
        // Σ conj(u_k) v_k with u = (1,0), v = (1,1)/√2 is 1/√2.
        let e1 = StateVector::basis(2, 0).unwrap();
        let p = inner_product(&e1, &plus()).unwrap();
        assert!((p.re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(p.im.abs() < 1e-15);
        assert!((p.re - 0.70711).abs() < 1e-5);
    }

    #[test]
    fn inner_product_dimension_mismatch() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let e3 = StateVector::basis(3, 0).unwrap();
        assert!(matches!(inner_product(&e1, &e3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inner_product_conjugate_symmetry() {
        let u = StateVector::new(vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
        let v = plus();
        let uv = inner_product(&u, &v).unwrap();
        let vu = inner_product(&v, &u).unwrap();
        assert!((uv - vu.conj()).norm() < 1e-15);
    }

    #[test]
    fn tensor_product_of_basis_vectors() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let t = tensor_product(&e1, &e1);
        assert_eq!(t, StateVector::basis(4, 0).unwrap());
    }

    #[test]
    fn tensor_product_distributes_over_basis() {
        let t = tensor_product(&plus(), &StateVector::basis(2, 0).unwrap());
        let expected = [FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0];
        for (a, e) in t.amps().iter().zip(expected) {
            assert!((a - C64::new(e, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn tensor_product_preserves_norm() {
        let u = StateVector::new(vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
        let t = tensor_product(&u, &plus());
        assert!((t.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn outer_product_projector_onto_basis() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let m = outer_product(&e1, &e1);
        assert!((m.get(0, 0) - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(m.get(0, 1).norm() < 1e-15);
        assert!(m.get(1, 0).norm() < 1e-15);
        assert!(m.get(1, 1).norm() < 1e-15);
    }

    #[test]
    fn outer_product_off_diagonal_unit() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let e2 = StateVector::basis(2, 1).unwrap();
        let m = outer_product(&e1, &e2);
        assert!((m.get(0, 1) - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(m.get(0, 0).norm() + m.get(1, 0).norm() + m.get(1, 1).norm() < 1e-15);
    }

    #[test]
    fn outer_product_uniform_entries() {
        // Entrywise product of (1,1)/√2 with itself is 0.5 everywhere.
        let m = outer_product(&plus(), &plus());
        for k in 0..2 {
            for l in 0..2 {
                assert!((m.get(k, l) - C64::new(0.5, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn construction_rejects_bad_amplitudes() {
        assert!(matches!(
            StateVector::new(vec![C64::new(0.5, 0.0), C64::new(0.5, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            StateVector::new(vec![C64::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        ));
        assert!(matches!(
            StateVector::normalized(vec![C64::new(0.0, 0.0); 3]),
            Err(Error::ZeroVector)
        ));
    }
}

//! Dense complex linear algebra: state vectors, operators, Hermitian
//! eigendecomposition, deterministic unitary completion and Gram inversion.

mod eigen;
mod operator;
mod vector;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, invert_gram, unitary_completion, HermitianEigen};
pub use operator::Operator;
pub use vector::{inner_product, outer_product, tensor_product, StateVector};

/// Complex amplitude scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

use crate::error::{Error, Result};

/// Numerical tolerances for the various validity checks.
///
/// Each field must lie in `[0, 1e-3]`. The defaults are tight enough for
/// double precision at the dimensions this crate targets (≤ 64).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Deviation allowed in vector norms and orthonormality checks.
    pub norm: f64,
    /// Hermiticity defect allowed in self-adjoint operators.
    pub herm: f64,
    /// Idempotency / unitarity defect allowed in projectors and unitaries.
    pub idem: f64,
    /// Numerical-rank cutoff for spectral pseudo-inverses and intersections.
    pub rank: f64,
    /// Threshold below which a squared norm counts as zero.
    pub zero: f64,
    /// Half-width of the probability bands mapping to `True` / `False`.
    pub truth: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        norm: 1e-10,
        herm: 1e-10,
        idem: 1e-10,
        rank: 1e-10,
        zero: 1e-12,
        truth: 1e-9,
    };

    /// Checks that every tolerance lies in `[0, 1e-3]`.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("norm", self.norm),
            ("herm", self.herm),
            ("idem", self.idem),
            ("rank", self.rank),
            ("zero", self.zero),
            ("truth", self.truth),
        ];
        for (name, value) in fields {
            if !(0.0..=1e-3).contains(&value) || !value.is_finite() {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerances_are_valid() {
        Tolerances::default().validate().unwrap();
    }

    #[test]
    fn out_of_range_tolerance_rejected() {
        let mut tol = Tolerances::default();
        tol.rank = 1e-2;
        assert!(matches!(tol.validate(), Err(Error::InvalidTolerance { name: "rank", .. })));
    }
}

use crate::error::{Error, Result};

use super::{StateVector, C64};

/// A dense complex matrix stored row-major.
///
/// Shape mismatches in the arithmetic methods are programming errors and
/// panic, mirroring the usual dense linear-algebra convention; the domain
/// operations in the higher modules validate dimensions up front and return
/// `Error::DimensionMismatch` instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl Operator {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "operator dimensions must be positive");
        Self { rows, cols, entries: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for k in 0..dim {
            m.set(k, k, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds an operator from row slices, checking shape and finiteness.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { left: cols, right: rows.iter().map(|r| r.len()).max().unwrap() });
        }
        let entries: Vec<C64> = rows.iter().flatten().copied().collect();
        if !entries.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows: rows.len(), cols, entries })
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (k, &v) in values.iter().enumerate() {
            m.set(k, k, C64::new(v, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: C64) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|a| a.re.is_finite() && a.im.is_finite())
    }

    pub fn mul(&self, other: &Operator) -> Operator {
        assert_eq!(self.cols, other.rows, "operator product shape mismatch");
        let mut m = Operator::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                m.set(r, c, acc);
            }
        }
        m
    }

    pub fn add(&self, other: &Operator) -> Operator {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "operator sum shape mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Operator { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "operator difference shape mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Operator { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, factor: C64) -> Operator {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        Operator { rows: self.rows, cols: self.cols, entries }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Operator {
        Operator::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Applies the operator to raw amplitudes.
    pub fn apply_amps(&self, amps: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, amps.len(), "operator application shape mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * amps[c]).sum())
            .collect()
    }

    /// Applies the operator to a state; the image need not be normalized.
    pub fn apply(&self, v: &StateVector) -> Vec<C64> {
        self.apply_amps(v.amps())
    }

    pub fn trace(&self) -> C64 {
        assert!(self.is_square(), "trace of a non-square operator");
        (0..self.rows).map(|k| self.get(k, k)).sum()
    }

    /// Entrywise sup norm `max |m_rc|`.
    pub fn sup_norm(&self) -> f64 {
        self.entries.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Sup-norm distance to another operator of the same shape.
    pub fn sup_distance(&self, other: &Operator) -> f64 {
        self.sub(other).sup_norm()
    }

    /// `‖M − M†‖∞` for square operators.
    pub fn hermiticity_defect(&self) -> f64 {
        self.sup_distance(&self.adjoint())
    }

    /// `‖M² − M‖∞` for square operators.
    pub fn idempotency_defect(&self) -> f64 {
        self.mul(self).sup_distance(self)
    }

    /// `‖M†M − I‖∞` for square operators.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).sup_distance(&Operator::identity(self.rows))
    }

    /// Kronecker product, with `self` indexing the outer (left) factor.
    pub fn tensor(&self, other: &Operator) -> Operator {
        Operator::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (r1, r2) = (r / other.rows, r % other.rows);
            let (c1, c2) = (c / other.cols, c % other.cols);
            self.get(r1, c1) * other.get(r2, c2)
        })
    }
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                write!(f, "{}{:+.4}{:+.4}i", if c > 0 { "  " } else { "" }, v.re, v.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

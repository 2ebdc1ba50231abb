//! Finite-dimensional toolkit for relative-state quantum logic.
//!
//! The crate is organized in layers:
//!
//! * [`hilbert`] — dense complex vectors and operators, Hermitian
//!   eigendecomposition, deterministic unitary completion, Gram inversion.
//! * [`lattice`] — the Birkhoff/von Neumann subspace lattice (meet, join,
//!   orthocomplement) used as the non-distributivity baseline.
//! * [`measures`] — PVM/POVM construction, the Born rule, generalized
//!   projectors onto non-orthogonal spans, and Naimark compression.
//! * [`relstate`] — bipartite states, relative-state decompositions,
//!   partial traces, entanglement entropy and premeasurement dynamics.
//! * [`qlogic`] — conjunction and disjunction of conjugate propositions,
//!   conditional states, the distributivity/interference analysis and the
//!   ternary truth mapping.
//! * [`sampling`] — seeded random states, bases and unitaries for
//!   reproducible experiments.

pub mod error;
pub mod hilbert;
pub mod lattice;
pub mod measures;
pub mod qlogic;
pub mod relstate;
pub mod sampling;

pub use error::{Error, Result};
pub use hilbert::{Operator, StateVector, Tolerances, C64};

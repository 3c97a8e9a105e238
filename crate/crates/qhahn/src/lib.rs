//! Integrable zero-range chipping model with factorized steady state.
//!
//! A site occupied by `n` particles emits a block of `m` of them to its right
//! neighbour with probability `phi(m|n)`, all sites updating in parallel. For
//! the three-parameter family `(q, mu, nu)` implemented here the hopping law
//! is the q-Hahn distribution, the stationary measure factorizes over sites,
//! and the transition matrix is diagonalized by the coordinate Bethe ansatz.
//!
//! The crate is organized around that chain of facts:
//!
//! - [`qcalc`] — exact and floating q-series primitives (q-Pochhammer,
//!   q-numbers, q-binomials) over interchangeable scalar backends;
//! - [`hopping`] — model parameters, single-site weights `v`, `w`, `f` and the
//!   hopping distribution `phi(m|n)` with its limiting cases;
//! - [`normal_order`] — normal ordering for the quadratic algebra
//!   `BA = alpha AA + beta AB + gamma BB`, proving the quantum-binomial
//!   expansion by brute force;
//! - [`state_space`] — configuration enumeration, exact transition matrices on
//!   rings and windows, stationary vectors, conjugation symmetry;
//! - [`bethe`] — S-matrix, eigenvalues, eigenvectors, Bethe equations on the
//!   ring and their numerical solution;
//! - [`green`] — iterated-residue evaluation of the completeness integral and
//!   the infinite-lattice Green function;
//! - [`mappings`] — ZRP/ASEP and particle-hole transformations;
//! - [`montecarlo`] — seed-reproducible stochastic simulation with stationary
//!   and current observables.
//!
//! Exact rational arithmetic is used wherever a statement is an identity
//! (normal ordering, stochasticity, stationarity, residue calculus at rational
//! parameters); complex doubles are used for root finding and spectra.

pub mod bethe;
pub mod green;
pub mod hopping;
pub mod mappings;
pub mod montecarlo;
pub mod normal_order;
pub mod qcalc;
pub mod scalar;
pub mod state_space;

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameter combinations for which derived quantities are undefined,
    /// e.g. `q nu = 1` or `nu = 1`.
    #[error("singular parameters: {0}")]
    SingularParams(String),

    /// Inputs outside the validity domain of an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Division by an exactly zero scalar.
    #[error("division by zero in {0}")]
    DivisionByZero(String),

    /// A named limit was requested for parameters that do not satisfy the
    /// limit's constraint.
    #[error("parameters do not satisfy the {0} limit")]
    WrongLimit(String),

    /// Enumerated state space would exceed the configured cap.
    #[error("state-space dimension {dim} exceeds cap {cap}")]
    SizeCap { dim: usize, cap: usize },

    /// Propagation window too small for the requested horizon.
    #[error("window too small: {0}")]
    WindowTooSmall(String),

    /// Evaluation hit a pole of the expression.
    #[error("pole encountered: {0}")]
    Pole(String),

    /// Residue evaluation found a pole whose enclosure by the integration
    /// contour is ambiguous (outside the supported parameter domain).
    #[error("contour refusal: {0}")]
    Contour(String),

    /// Monte Carlo sampler asked for an occupation beyond its table horizon.
    #[error("sampler horizon {horizon} exceeded by occupation {n}")]
    HorizonExceeded { n: usize, horizon: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Numerical tolerances shared across the crate.
//!
//! Closed-form identities are held to float precision. Anything that goes
//! through the measurement optimizer is held to optimizer precision.

/// Maximum entrywise deviation from Hermiticity accepted on input.
pub const HERMITIAN: f64 = 1e-10;

/// Allowed deviation of a density-matrix trace from 1.
pub const TRACE: f64 = 1e-10;

/// Allowed deviation of a pure-state squared norm from 1.
pub const NORM: f64 = 1e-10;

/// Eigenvalues in `[-EIGEN_CLAMP, 0)` are float noise and are clamped to 0.
/// Anything below is rejected.
pub const EIGEN_CLAMP: f64 = 1e-8;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-12;

/// Rank-2 precondition: third eigenvalue must not exceed this.
pub const RANK2_THIRD_EIGENVALUE: f64 = 1e-8;

/// Measurement branches with probability below this contribute zero entropy.
pub const BRANCH_PROBABILITY: f64 = 1e-12;

/// Closed-form identities (entropies, Wootters formula, algebraic sums).
pub const IDENTITY: f64 = 1e-9;

/// Results that pass through the measurement optimizer.
pub const OPTIMIZER: f64 = 2e-5;

/// Negative three-tangle values within this window are clamped to 0.
pub const TANGLE_CLAMP: f64 = 1e-9;

/// Product of pairwise EoFs below which a state counts as biseparable.
pub const BISEPARABLE: f64 = 1e-8;

/// Nelder–Mead stops when the simplex diameter falls below this.
pub const SIMPLEX_DIAMETER: f64 = 1e-7;

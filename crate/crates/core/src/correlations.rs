//! Von Neumann entropy, mutual information, and the measurement-optimized
//! classical correlations and quantum discord of two-qubit states.
//!
//! Measurements are rank-one projective measurements on a single qubit,
//! with basis
//!
//! ```text
//! |v₀⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩
//! |v₁⟩ = sin(θ/2)|0⟩ − e^{iφ} cos(θ/2)|1⟩
//! ```
//!
//! The optimum is located by a 64×64 grid over `(θ, φ)` followed by
//! Nelder–Mead refinement from the best grid point. General POVMs are not
//! searched.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optim::NelderMead;
use crate::tensor::{partial_trace, DensityMatrix, C64};
use crate::tol;

const GRID_THETA: usize = 64;
const GRID_PHI: usize = 64;

/// Which qubit of a two-qubit state is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeasuredSide {
    /// Qubit 0.
    A,
    /// Qubit 1.
    B,
}

impl MeasuredSide {
    fn measured_qubit(self) -> usize {
        match self {
            MeasuredSide::A => 0,
            MeasuredSide::B => 1,
        }
    }

    fn unmeasured_qubit(self) -> usize {
        1 - self.measured_qubit()
    }
}

/// Bloch angles of a projective qubit measurement, `θ ∈ [0, π]`,
/// `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementAngles {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::InvalidParameter(format!(
                "measurement angles ({theta}, {phi}) out of range"
            )));
        }
        Ok(Self { theta, phi })
    }

    /// Maps arbitrary angles onto the canonical range describing the same
    /// measurement basis vector `|v₀⟩` (up to global phase).
    pub fn canonical(theta: f64, phi: f64) -> Self {
        let two_pi = 2.0 * PI;
        let mut theta = theta.rem_euclid(two_pi);
        let mut phi = phi;
        if theta > PI {
            theta = two_pi - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(two_pi);
        if phi >= two_pi {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// The two basis vectors `|v₀⟩, |v₁⟩`.
    pub fn basis(&self) -> [[C64; 2]; 2] {
        let (s, c) = (self.theta / 2.0).sin_cos();
        let phase = C64::from_polar(1.0, self.phi);
        [
            [C64::new(c, 0.0), phase * s],
            [C64::new(s, 0.0), -phase * c],
        ]
    }
}

/// `I`, `J` and `D` of a two-qubit state for one choice of measured side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordResult {
    pub discord: f64,
    pub classical: f64,
    pub mutual_info: f64,
    pub optimal_angles: MeasurementAngles,
}

/// Two disjoint qubit groups covering a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Bipartition {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Self {
        Self { first, second }
    }

    fn validate(&self, num_qubits: usize) -> Result<()> {
        if self.first.is_empty() || self.second.is_empty() {
            return Err(Error::InvalidPartition("empty side".into()));
        }
        let mut seen = vec![false; num_qubits];
        for &q in self.first.iter().chain(&self.second) {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
            if seen[q] {
                return Err(Error::InvalidPartition(format!("qubit {q} appears twice")));
            }
            seen[q] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition(
                "bipartition does not cover every qubit".into(),
            ));
        }
        Ok(())
    }
}

/// `−Σ λ log₂ λ` in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let s: f64 = rho
        .eigenvalues()
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.log2())
        .sum();
    s.clamp(0.0, rho.num_qubits() as f64)
}

/// Entropy of the reduction of `rho` onto `qubits`.
pub fn subsystem_entropy(rho: &DensityMatrix, qubits: &[usize]) -> Result<f64> {
    if qubits.len() == rho.num_qubits() && qubits.iter().enumerate().all(|(i, &q)| i == q) {
        return Ok(von_neumann_entropy(rho));
    }
    partial_trace(rho, qubits).map(|r| von_neumann_entropy(&r))
}

/// `S(ρ_X) + S(ρ_Y) − S(ρ_XY)` for the bipartition `X|Y`.
pub fn mutual_information(rho: &DensityMatrix, split: &Bipartition) -> Result<f64> {
    split.validate(rho.num_qubits())?;
    let s_first = subsystem_entropy(rho, &split.first)?;
    let s_second = subsystem_entropy(rho, &split.second)?;
    Ok(s_first + s_second - von_neumann_entropy(rho))
}

/// Binary entropy without range checks; arguments are clamped to `[0, 1]`.
pub(crate) fn h2(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    let term = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

/// Entropy of `M / tr M` for a Hermitian 2×2 block `[[a, b], [b*, d]]`.
fn entropy_2x2(a: f64, d: f64, b: C64) -> f64 {
    let trace = a + d;
    let gap = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    h2(0.5 * (1.0 + gap / trace))
}

/// `Σ_j p_j S(ρ_{X|j})` after measuring `side` of a two-qubit state in the
/// basis given by `angles`.
pub fn measured_conditional_entropy(
    rho: &DensityMatrix,
    side: MeasuredSide,
    angles: MeasurementAngles,
) -> Result<f64> {
    let m = TwoQubit::new(rho)?;
    Ok(m.conditional_entropy(side, angles.theta, angles.phi))
}

/// Flattened two-qubit operator for the optimizer's inner loop.
struct TwoQubit {
    rho: [[C64; 4]; 4],
}

impl TwoQubit {
    fn new(rho: &DensityMatrix) -> Result<Self> {
        if rho.num_qubits() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: rho.num_qubits(),
            });
        }
        let mut m = [[C64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row.copy_from_slice(rho.matrix().row(i));
        }
        Ok(Self { rho: m })
    }

    fn entry(&self, side: MeasuredSide, kept: (usize, usize), measured: (usize, usize)) -> C64 {
        match side {
            MeasuredSide::B => self.rho[2 * kept.0 + measured.0][2 * kept.1 + measured.1],
            MeasuredSide::A => self.rho[2 * measured.0 + kept.0][2 * measured.1 + kept.1],
        }
    }

    fn conditional_entropy(&self, side: MeasuredSide, theta: f64, phi: f64) -> f64 {
        let basis = MeasurementAngles { theta, phi }.basis();
        let mut total = 0.0;
        for v in &basis {
            // block[x][x'] = Σ_{m,m'} v*[m] ρ[(x,m),(x',m')] v[m']
            let mut block = [[C64::new(0.0, 0.0); 2]; 2];
            for (x, row) in block.iter_mut().enumerate() {
                for (xp, cell) in row.iter_mut().enumerate() {
                    let mut acc = C64::new(0.0, 0.0);
                    for (mi, vm) in v.iter().enumerate() {
                        for (mj, vmp) in v.iter().enumerate() {
                            acc += vm.conj() * self.entry(side, (x, xp), (mi, mj)) * vmp;
                        }
                    }
                    *cell = acc;
                }
            }
            let p = block[0][0].re + block[1][1].re;
            if p < tol::BRANCH_PROBABILITY {
                continue;
            }
            total += p * entropy_2x2(block[0][0].re, block[1][1].re, block[0][1]);
        }
        total
    }
}

/// Minimum over projective measurements on `side` of the post-measurement
/// conditional entropy of the other qubit, with the minimizing angles.
pub fn min_conditional_entropy(
    rho: &DensityMatrix,
    side: MeasuredSide,
) -> Result<(f64, MeasurementAngles)> {
    let m = TwoQubit::new(rho)?;
    let f = |theta: f64, phi: f64| m.conditional_entropy(side, theta, phi);

    let theta_step = PI / (GRID_THETA - 1) as f64;
    let phi_step = 2.0 * PI / GRID_PHI as f64;
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..GRID_THETA {
        let theta = i as f64 * theta_step;
        for j in 0..GRID_PHI {
            let phi = j as f64 * phi_step;
            let value = f(theta, phi);
            // strict comparison keeps the lexicographically first minimizer
            if value < best.0 {
                best = (value, theta, phi);
            }
        }
    }

    let refined = NelderMead::default().minimize(
        |x| f(x[0], x[1]),
        &[best.1, best.2],
        &[theta_step, phi_step],
    );
    let (value, theta, phi) = if refined.value < best.0 {
        (refined.value, refined.point[0], refined.point[1])
    } else {
        best
    };
    Ok((value.max(0.0), MeasurementAngles::canonical(theta, phi)))
}

/// `J`: the largest entropy reduction of the unmeasured qubit obtainable by
/// a projective measurement on `side`.
pub fn classical_correlations(
    rho: &DensityMatrix,
    side: MeasuredSide,
) -> Result<(f64, MeasurementAngles)> {
    let (conditional, angles) = min_conditional_entropy(rho, side)?;
    let s_unmeasured = subsystem_entropy(rho, &[side.unmeasured_qubit()])?;
    Ok(((s_unmeasured - conditional).max(0.0), angles))
}

/// Quantum discord `D = I − J` with the measurement on `side`.
///
/// `side = B` gives `D_{A,B}`; `side = A` gives `D_{B,A}`.
pub fn quantum_discord(rho: &DensityMatrix, side: MeasuredSide) -> Result<DiscordResult> {
    let mutual_info = mutual_information(rho, &Bipartition::new(vec![0], vec![1]))?.max(0.0);
    let (classical, optimal_angles) = classical_correlations(rho, side)?;
    let classical = classical.min(mutual_info);
    Ok(DiscordResult {
        discord: (mutual_info - classical).max(0.0),
        classical,
        mutual_info,
        optimal_angles,
    })
}

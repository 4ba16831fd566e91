//! Wootters concurrence, entanglement of formation and the three-tangle.

use serde::{Deserialize, Serialize};

use crate::correlations::h2;
use crate::error::{Error, Result};
use crate::states::PureState;
use crate::tensor::{hermitian_eigen, kron, pauli, psd_sqrt, ComplexMatrix, DensityMatrix, C64};
use crate::tol;

/// Eigenvalues of a two-qubit state at or below this are treated as zero
/// when choosing the low-rank concurrence route.
const LOW_RANK_EIGENVALUE: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntanglementValues {
    pub concurrence: f64,
    pub concurrence_sq: f64,
    pub eof: f64,
}

/// `h(x) = −x log₂ x − (1−x) log₂(1−x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "binary entropy argument {x} outside [0, 1]"
        )));
    }
    Ok(h2(x))
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: rho.num_qubits(),
        });
    }
    Ok(())
}

fn sigma_yy() -> ComplexMatrix {
    kron(&pauli::y(), &pauli::y())
}

/// `ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)`.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    let yy = sigma_yy();
    Ok(&(&yy * &rho.matrix().conj()) * &yy)
}

/// Squared concurrence of a two-qubit state.
///
/// States of rank ≤ 2 go through the singular values `λ₁ ≥ λ₂` of the
/// 2×2 matrix `τ = Wᵀ(σ_y⊗σ_y)W` with `ρ = WW†`, using
/// `(λ₁ − λ₂)² = ‖τ‖² − 2|det τ|`. This avoids square roots of
/// eigenvalues that are zero up to rounding, which matters on the W-class
/// tangle manifold. Higher-rank states use the spectrum of the Hermitian
/// matrix `√ρ ρ̃ √ρ`.
pub fn concurrence_squared(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    if rho.eigenvalues()[2] <= LOW_RANK_EIGENVALUE {
        Ok(concurrence_sq_low_rank(rho))
    } else {
        concurrence_hermitian_route(rho).map(|c| c * c)
    }
}

pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    concurrence_squared(rho).map(f64::sqrt)
}

fn concurrence_sq_low_rank(rho: &DensityMatrix) -> f64 {
    let spectrum = rho.spectrum();
    let yy = sigma_yy();
    let w: Vec<Vec<C64>> = (0..2)
        .map(|k| {
            let weight = spectrum.values[k].max(0.0).sqrt();
            spectrum
                .vectors
                .column(k)
                .into_iter()
                .map(|z| z * weight)
                .collect()
        })
        .collect();
    let flipped: Vec<Vec<C64>> = w.iter().map(|col| yy.apply(col)).collect();
    // τ_ij = w_iᵀ Σ w_j (no conjugation)
    let tau =
        |i: usize, j: usize| -> C64 { w[i].iter().zip(&flipped[j]).map(|(a, b)| a * b).sum() };
    let (t00, t01, t10, t11) = (tau(0, 0), tau(0, 1), tau(1, 0), tau(1, 1));
    let frobenius_sq = t00.norm_sqr() + t01.norm_sqr() + t10.norm_sqr() + t11.norm_sqr();
    let det = (t00 * t11 - t01 * t10).norm();
    (frobenius_sq - 2.0 * det).clamp(0.0, 1.0)
}

/// Wootters concurrence from the Hermitian product `√ρ ρ̃ √ρ`.
///
/// Valid for every two-qubit state; [`concurrence`] prefers the low-rank
/// route when it applies.
pub fn concurrence_hermitian_route(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let root = psd_sqrt(rho)?;
    let flipped = spin_flip(rho)?;
    let r = &(&root * &flipped) * &root;
    let spectrum = hermitian_eigen(&r.hermitian_part())?;
    let l: Vec<f64> = spectrum
        .values
        .iter()
        .map(|&mu| mu.max(0.0).sqrt())
        .collect();
    Ok((l[0] - l[1] - l[2] - l[3]).clamp(0.0, 1.0))
}

/// `h((1 + √(1 − C²)) / 2)`.
pub fn eof_from_concurrence_sq(concurrence_sq: f64) -> f64 {
    let c2 = concurrence_sq.clamp(0.0, 1.0);
    h2(0.5 * (1.0 + (1.0 - c2).sqrt()))
}

/// Entanglement of formation in bits.
pub fn eof(rho: &DensityMatrix) -> Result<f64> {
    concurrence_squared(rho).map(eof_from_concurrence_sq)
}

pub fn entanglement_values(rho: &DensityMatrix) -> Result<EntanglementValues> {
    let concurrence_sq = concurrence_squared(rho)?;
    Ok(EntanglementValues {
        concurrence: concurrence_sq.sqrt(),
        concurrence_sq,
        eof: eof_from_concurrence_sq(concurrence_sq),
    })
}

/// `C²` between qubit `focus` and the rest of a pure state: `4 det ρ_focus`.
pub fn concurrence_sq_pure_bipartition(psi: &PureState, focus: usize) -> Result<f64> {
    if psi.num_qubits() < 2 {
        return Err(Error::InvalidParameter(
            "a bipartition needs at least two qubits".into(),
        ));
    }
    let rho = psi.reduced(&[focus])?;
    let m = rho.matrix();
    let det = m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr();
    Ok((4.0 * det).clamp(0.0, 1.0))
}

pub(crate) fn other_two(focus: usize) -> (usize, usize) {
    match focus {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

pub(crate) fn require_three_qubits(psi: &PureState) -> Result<()> {
    if psi.num_qubits() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: psi.num_qubits(),
        });
    }
    Ok(())
}

/// `C²_{f,jk} − C²_{f,j} − C²_{f,k}` for a pure three-qubit state.
pub fn three_tangle(psi: &PureState, focus: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    if focus >= 3 {
        return Err(Error::QubitOutOfRange {
            index: focus,
            num_qubits: 3,
        });
    }
    let (j, k) = other_two(focus);
    let whole = concurrence_sq_pure_bipartition(psi, focus)?;
    let with_j = concurrence_squared(&psi.reduced(&[focus, j])?)?;
    let with_k = concurrence_squared(&psi.reduced(&[focus, k])?)?;
    let tangle = whole - with_j - with_k;
    if (-tol::TANGLE_CLAMP..0.0).contains(&tangle) {
        Ok(0.0)
    } else {
        Ok(tangle)
    }
}

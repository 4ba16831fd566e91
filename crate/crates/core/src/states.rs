//! Pure-state constructors: the canonical three-qubit families, the
//! `ψ̃(p, ε)` interpolation between GHZ and W, seeded Haar sampling, and
//! purification of rank-2 two-qubit states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{partial_trace, DensityMatrix, C64};
use crate::tol;

/// Normalized amplitude vector over `num_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        check_num_qubits(num_qubits)?;
        let expected = 1usize << num_qubits;
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        let norm_sq = squared_norm(&amplitudes);
        if !((norm_sq - 1.0).abs() <= tol::NORM) {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(num_qubits: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = squared_norm(&amplitudes).sqrt();
        if !(norm > 0.0) {
            return Err(Error::NotNormalized { norm_sq: 0.0 });
        }
        for a in amplitudes.iter_mut() {
            *a /= norm;
        }
        Self::new(num_qubits, amplitudes)
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_num_qubits(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} out of range for {num_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[index] = C64::new(1.0, 0.0);
        Self::new(num_qubits, amplitudes)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        DensityMatrix::from_amplitudes(&self.amplitudes, self.num_qubits)
            .expect("a normalized state yields a valid projector")
    }

    /// Reduced density matrix on `keep`.
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        partial_trace(&self.density_matrix(), keep)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: other.num_qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        self.inner(other).map(|z| z.norm_sqr())
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self::normalized(self.num_qubits + other.num_qubits, amplitudes)
    }
}

fn squared_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn check_num_qubits(num_qubits: usize) -> Result<()> {
    if (1..=4).contains(&num_qubits) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "num_qubits must be in 1..=4, got {num_qubits}"
        )))
    }
}

/// Parameters of the five-term canonical form of a three-qubit pure state,
/// `λ₀|000⟩ + λ₁e^{iθ}|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GhzClassParams {
    pub lambda: [f64; 5],
    pub theta: f64,
}

impl GhzClassParams {
    pub fn validate(&self) -> Result<()> {
        if self.lambda.iter().any(|&l| !(l >= 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "coefficients must be non-negative: {:?}",
                self.lambda
            )));
        }
        if !(0.0..=std::f64::consts::PI).contains(&self.theta) {
            return Err(Error::InvalidParameter(format!(
                "theta {} outside [0, pi]",
                self.theta
            )));
        }
        let norm_sq: f64 = self.lambda.iter().map(|l| l * l).sum();
        if !((norm_sq - 1.0).abs() <= tol::NORM) {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(())
    }

    pub fn is_w_class(&self) -> bool {
        self.lambda[4] == 0.0
    }
}

pub fn ghz_class_state(params: &GhzClassParams) -> Result<PureState> {
    params.validate()?;
    let [l0, l1, l2, l3, l4] = params.lambda;
    let mut amplitudes = vec![C64::new(0.0, 0.0); 8];
    amplitudes[0b000] = C64::new(l0, 0.0);
    amplitudes[0b100] = C64::from_polar(l1, params.theta);
    amplitudes[0b101] = C64::new(l2, 0.0);
    amplitudes[0b110] = C64::new(l3, 0.0);
    amplitudes[0b111] = C64::new(l4, 0.0);
    PureState::new(3, amplitudes)
}

/// Canonical form restricted to `λ₄ = 0`.
pub fn w_class_state(lambda: [f64; 4], theta: f64) -> Result<PureState> {
    ghz_class_state(&GhzClassParams {
        lambda: [lambda[0], lambda[1], lambda[2], lambda[3], 0.0],
        theta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiTildeParams {
    pub p: f64,
    pub epsilon: f64,
}

/// `√(pε)|000⟩ + √(p(1−ε))|111⟩ + √((1−p)/2)(|101⟩ + |110⟩)`.
///
/// `(1, 1/2)` is the GHZ state, `(1/3, 1)` the W state, and `p = 0`
/// factorizes qubit A.
pub fn psi_tilde(params: PsiTildeParams) -> Result<PureState> {
    let PsiTildeParams { p, epsilon } = params;
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidParameter(format!(
            "p = {p}, epsilon = {epsilon} must both lie in [0, 1]"
        )));
    }
    let side = ((1.0 - p) / 2.0).sqrt();
    let mut amplitudes = vec![C64::new(0.0, 0.0); 8];
    amplitudes[0b000] = C64::new((p * epsilon).sqrt(), 0.0);
    amplitudes[0b111] = C64::new((p * (1.0 - epsilon)).sqrt(), 0.0);
    amplitudes[0b101] = C64::new(side, 0.0);
    amplitudes[0b110] = C64::new(side, 0.0);
    PureState::new(3, amplitudes)
}

/// Deterministic generator for stream `stream` of master seed `seed`.
///
/// Campaigns give every sample its own stream so results do not depend on
/// evaluation order.
pub fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Haar-random pure state drawn from `rng`.
pub fn haar_random_pure_with<R: Rng + ?Sized>(rng: &mut R, num_qubits: usize) -> Result<PureState> {
    check_num_qubits(num_qubits)?;
    let amplitudes = (0..1usize << num_qubits)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(num_qubits, amplitudes)
}

/// Haar-random pure state from a normalized complex Gaussian vector.
pub fn haar_random_pure(num_qubits: usize, seed: u64) -> Result<PureState> {
    haar_random_pure_with(&mut ChaCha8Rng::seed_from_u64(seed), num_qubits)
}

/// Two-qubit state of rank at most 2: a Haar-random three-qubit pure state
/// with the last qubit traced out.
pub fn random_rank2_two_qubit_with<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    haar_random_pure_with(rng, 3)
        .and_then(|psi| psi.reduced(&[0, 1]))
        .expect("three qubits is in range")
}

pub fn random_rank2_two_qubit(seed: u64) -> DensityMatrix {
    random_rank2_two_qubit_with(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Canonical-form parameters with `(λ₀..λ₄)` uniform on the positive orthant
/// of the unit 4-sphere and `θ` uniform on `[0, π]`.
pub fn random_ghz_class_params<R: Rng + ?Sized>(rng: &mut R) -> GhzClassParams {
    let lambda: [f64; 5] = positive_orthant(rng);
    GhzClassParams {
        lambda,
        theta: rng.random_range(0.0..=std::f64::consts::PI),
    }
}

/// As [`random_ghz_class_params`] with `λ₄ = 0` and the rest uniform on the
/// positive orthant of the 3-sphere.
pub fn random_w_class_params<R: Rng + ?Sized>(rng: &mut R) -> GhzClassParams {
    let [l0, l1, l2, l3]: [f64; 4] = positive_orthant(rng);
    GhzClassParams {
        lambda: [l0, l1, l2, l3, 0.0],
        theta: rng.random_range(0.0..=std::f64::consts::PI),
    }
}

fn positive_orthant<R: Rng + ?Sized, const N: usize>(rng: &mut R) -> [f64; N] {
    loop {
        let mut v = [0.0; N];
        for x in v.iter_mut() {
            let g: f64 = rng.sample(StandardNormal);
            *x = g.abs();
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            for x in v.iter_mut() {
                *x /= norm;
            }
            return v;
        }
    }
}

/// `w|ψ₁⟩⟨ψ₁| + (1−w)|ψ₂⟩⟨ψ₂|` with Haar-random `ψ₁, ψ₂` and `w ~ U[0, 1]`.
pub fn random_two_state_mixture<R: Rng + ?Sized>(
    rng: &mut R,
    num_qubits: usize,
) -> Result<DensityMatrix> {
    let first = haar_random_pure_with(rng, num_qubits)?;
    let second = haar_random_pure_with(rng, num_qubits)?;
    let weight: f64 = rng.random_range(0.0..=1.0);
    first.density_matrix().mix(&second.density_matrix(), weight)
}

/// Purifies a two-qubit state of rank ≤ 2 onto three qubits,
/// `|φ⟩ = √p₁|u₁⟩|0⟩ + √p₂|u₂⟩|1⟩`, with the ancilla as qubit 2.
///
/// Eigenvectors are taken in descending eigenvalue order and rephased so
/// that their first non-negligible component is real and positive.
pub fn purify_rank2(rho: &DensityMatrix) -> Result<PureState> {
    if rho.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: rho.num_qubits(),
        });
    }
    let spectrum = rho.spectrum();
    let third = spectrum.values[2];
    if third > tol::RANK2_THIRD_EIGENVALUE {
        return Err(Error::RankTooHigh {
            third_eigenvalue: third,
        });
    }
    let mut amplitudes = vec![C64::new(0.0, 0.0); 8];
    for ancilla in 0..2 {
        let weight = spectrum.values[ancilla].max(0.0).sqrt();
        let mut u = spectrum.vectors.column(ancilla);
        if let Some(lead) = u.iter().copied().find(|z| z.norm() > 1e-12) {
            let phase = (lead / lead.norm()).conj();
            for z in u.iter_mut() {
                *z *= phase;
            }
        }
        for (ab, z) in u.into_iter().enumerate() {
            amplitudes[2 * ab + ancilla] = z * weight;
        }
    }
    PureState::normalized(3, amplitudes)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn amp(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn ghz() -> PureState {
        let mut a = vec![amp(0.0); 8];
        a[0] = amp(S2);
        a[7] = amp(S2);
        PureState::new(3, a).unwrap()
    }

    fn w() -> PureState {
        let s = 1.0 / 3f64.sqrt();
        let mut a = vec![amp(0.0); 8];
        a[0] = amp(s);
        a[5] = amp(s);
        a[6] = amp(s);
        PureState::new(3, a).unwrap()
    }

    fn assert_same_state(a: &PureState, b: &PureState) {
        let f = a.fidelity(b).unwrap();
        assert!((f - 1.0).abs() < 1e-12, "fidelity {f}");
    }

    #[test]
    fn ghz_class_examples() {
        let s = ghz_class_state(&GhzClassParams {
            lambda: [1.0, 0.0, 0.0, 0.0, 0.0],
            theta: 0.0,
        })
        .unwrap();
        assert_same_state(&s, &PureState::basis(3, 0).unwrap());

        let s = ghz_class_state(&GhzClassParams {
            lambda: [S2, 0.0, 0.0, 0.0, S2],
            theta: 0.0,
        })
        .unwrap();
        assert_same_state(&s, &ghz());

        let t = 1.0 / 3f64.sqrt();
        let s = ghz_class_state(&GhzClassParams {
            lambda: [t, 0.0, t, t, 0.0],
            theta: 0.0,
        })
        .unwrap();
        assert_same_state(&s, &w());
    }

    #[test]
    fn ghz_class_phase_sits_on_100() {
        let s = ghz_class_state(&GhzClassParams {
            lambda: [0.6, 0.8, 0.0, 0.0, 0.0],
            theta: std::f64::consts::FRAC_PI_2,
        })
        .unwrap();
        assert!((s.amplitudes()[4] - C64::new(0.0, 0.8)).norm() < 1e-15);
    }

    #[test]
    fn ghz_class_rejects_bad_params() {
        let bad_norm = GhzClassParams {
            lambda: [1.0, 1.0, 0.0, 0.0, 0.0],
            theta: 0.0,
        };
        assert!(matches!(
            ghz_class_state(&bad_norm),
            Err(Error::NotNormalized { .. })
        ));
        let negative = GhzClassParams {
            lambda: [-1.0, 0.0, 0.0, 0.0, 0.0],
            theta: 0.0,
        };
        assert!(ghz_class_state(&negative).is_err());
        let bad_theta = GhzClassParams {
            lambda: [1.0, 0.0, 0.0, 0.0, 0.0],
            theta: 4.0,
        };
        assert!(ghz_class_state(&bad_theta).is_err());
    }

    #[test]
    fn w_class_examples() {
        assert_same_state(
            &w_class_state([1.0, 0.0, 0.0, 0.0], 0.0).unwrap(),
            &PureState::basis(3, 0).unwrap(),
        );
        let t = 1.0 / 3f64.sqrt();
        assert_same_state(&w_class_state([t, 0.0, t, t], 0.0).unwrap(), &w());
        assert_same_state(
            &w_class_state([0.0, 0.0, 1.0, 0.0], 0.0).unwrap(),
            &PureState::basis(3, 0b101).unwrap(),
        );
    }

    #[test]
    fn psi_tilde_examples() {
        let g = psi_tilde(PsiTildeParams {
            p: 1.0,
            epsilon: 0.5,
        })
        .unwrap();
        assert_same_state(&g, &ghz());

        let wt = psi_tilde(PsiTildeParams {
            p: 1.0 / 3.0,
            epsilon: 1.0,
        })
        .unwrap();
        assert_same_state(&wt, &w());

        for eps in [0.0, 0.3, 1.0] {
            let s = psi_tilde(PsiTildeParams {
                p: 0.0,
                epsilon: eps,
            })
            .unwrap();
            let one = PureState::basis(1, 1).unwrap();
            let pair = PureState::new(2, vec![amp(0.0), amp(S2), amp(S2), amp(0.0)]).unwrap();
            assert_same_state(&s, &one.tensor(&pair).unwrap());
        }

        assert_same_state(
            &psi_tilde(PsiTildeParams {
                p: 1.0,
                epsilon: 1.0,
            })
            .unwrap(),
            &PureState::basis(3, 0).unwrap(),
        );
        assert_same_state(
            &psi_tilde(PsiTildeParams {
                p: 1.0,
                epsilon: 0.0,
            })
            .unwrap(),
            &PureState::basis(3, 7).unwrap(),
        );
    }

    #[test]
    fn psi_tilde_rejects_out_of_range() {
        assert!(psi_tilde(PsiTildeParams {
            p: 1.1,
            epsilon: 0.5
        })
        .is_err());
        assert!(psi_tilde(PsiTildeParams {
            p: 0.5,
            epsilon: -0.1
        })
        .is_err());
    }

    #[test]
    fn haar_sampling_is_normalized_and_seeded() {
        for n in 1..=4 {
            let psi = haar_random_pure(n, 7).unwrap();
            let norm: f64 = psi.amplitudes().iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        assert_eq!(
            haar_random_pure(3, 11).unwrap(),
            haar_random_pure(3, 11).unwrap()
        );
        let f = haar_random_pure(3, 11)
            .unwrap()
            .fidelity(&haar_random_pure(3, 12).unwrap())
            .unwrap();
        assert!(f < 1.0 - 1e-6);
        assert!(haar_random_pure(5, 0).is_err());
    }

    #[test]
    fn rank2_samples() {
        for seed in 0..20 {
            let rho = random_rank2_two_qubit(seed);
            let vals = rho.eigenvalues();
            assert!(vals[2] <= 1e-10 && vals[3] <= 1e-10);
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
            assert!(vals.iter().all(|&x| x >= 0.0));
        }
        assert_eq!(random_rank2_two_qubit(3), random_rank2_two_qubit(3));
    }

    #[test]
    fn purify_pure_input_appends_ancilla() {
        let psi = haar_random_pure(2, 99).unwrap();
        let phi = purify_rank2(&psi.density_matrix()).unwrap();
        let expected = psi.tensor(&PureState::basis(1, 0).unwrap()).unwrap();
        assert_same_state(&phi, &expected);
    }

    #[test]
    fn purify_classical_mixture() {
        let rho = DensityMatrix::new(
            crate::tensor::ComplexMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]),
            2,
        )
        .unwrap();
        let phi = purify_rank2(&rho).unwrap();
        let back = phi.reduced(&[0, 1]).unwrap();
        assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
        // GHZ up to a local unitary on the ancilla: two Schmidt weights of 1/2.
        let anc = phi.reduced(&[2]).unwrap();
        assert!((anc.eigenvalues()[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn purify_round_trip_and_errors() {
        for seed in 0..100 {
            let rho = random_rank2_two_qubit(seed);
            let phi = purify_rank2(&rho).unwrap();
            let back = phi.reduced(&[0, 1]).unwrap();
            assert!(back.matrix().max_abs_diff(rho.matrix()) <= 1e-9);
        }
        let full_rank = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(matches!(
            purify_rank2(&full_rank),
            Err(Error::RankTooHigh { .. })
        ));
        let one = DensityMatrix::maximally_mixed(1).unwrap();
        assert!(purify_rank2(&one).is_err());
    }

    #[test]
    fn sample_rng_streams_are_independent() {
        let a = haar_random_pure_with(&mut sample_rng(1, 0), 3).unwrap();
        let b = haar_random_pure_with(&mut sample_rng(1, 1), 3).unwrap();
        let a2 = haar_random_pure_with(&mut sample_rng(1, 0), 3).unwrap();
        assert_eq!(a, a2);
        assert_ne!(a, b);
    }

    #[test]
    fn random_params_are_valid() {
        let mut rng = sample_rng(5, 0);
        for _ in 0..50 {
            let g = random_ghz_class_params(&mut rng);
            g.validate().unwrap();
            let w = random_w_class_params(&mut rng);
            w.validate().unwrap();
            assert!(w.is_w_class());
        }
    }
}

//! Monogamy checks for three-qubit states.
//!
//! Deficits follow the convention `Q_{A,BC} − Q_{A,B} − Q_{A,C}`, so a
//! positive deficit means the state is monogamous for `Q`. `violation` is
//! the same number with the opposite sign.

use serde::{Deserialize, Serialize};

use crate::correlations::{
    classical_correlations, min_conditional_entropy, quantum_discord, subsystem_entropy,
    von_neumann_entropy, MeasuredSide,
};
use crate::entanglement::{
    concurrence_sq_pure_bipartition, concurrence_squared, eof, other_two, require_three_qubits,
    three_tangle,
};
use crate::error::{Error, Result};
use crate::states::PureState;
use crate::tensor::{partial_trace, DensityMatrix};
use crate::tol;

/// Per-state monogamy record for a pure three-qubit state, focused on A.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonogamyReport {
    pub state_id: String,
    #[serde(rename = "S_A")]
    pub s_a: f64,
    #[serde(rename = "S_B")]
    pub s_b: f64,
    #[serde(rename = "S_C")]
    pub s_c: f64,
    #[serde(rename = "D_AB")]
    pub d_ab: f64,
    #[serde(rename = "D_AC")]
    pub d_ac: f64,
    #[serde(rename = "E_AB")]
    pub e_ab: f64,
    #[serde(rename = "E_AC")]
    pub e_ac: f64,
    pub discord_deficit: f64,
    pub eof_deficit: f64,
    pub violation: f64,
    pub kw_residual_max: f64,
    pub interaction_info: f64,
}

/// Discord, classical correlations and their bounds for a two-qubit state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LuoReport {
    #[serde(rename = "D_AB")]
    pub d_ab: f64,
    #[serde(rename = "D_BA")]
    pub d_ba: f64,
    #[serde(rename = "J_AB")]
    pub j_ab: f64,
    #[serde(rename = "J_BA")]
    pub j_ba: f64,
    #[serde(rename = "S_A")]
    pub s_a: f64,
    #[serde(rename = "S_B")]
    pub s_b: f64,
    /// `min(S_A, S_B)` minus `D_AB`, `D_BA`, `J_AB`, `J_BA`, in that order.
    pub margins: [f64; 4],
}

impl LuoReport {
    pub fn min_margin(&self) -> f64 {
        self.margins.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Koashi–Winter residuals for one ordered triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KwResidual {
    /// `|min S(i|k) − E(ρ_il)|`.
    pub conditional: f64,
    /// `|D_{i,k} optimized − D_{i,k} closed form|`.
    pub discord: f64,
}

impl KwResidual {
    pub fn max(&self) -> f64 {
        self.conditional.max(self.discord)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slack {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// Outcome of the chain-rule check on one state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainRule {
    Holds,
    Fails,
    /// `|S_A − S_B|` too small for the strict inequality to be meaningful.
    Skipped,
}

const CHAIN_RULE_DEGENERACY: f64 = 1e-6;
const CHAIN_RULE_MARGIN: f64 = -1e-8;

fn check_triple(i: usize, k: usize, l: usize) -> Result<()> {
    for q in [i, k, l] {
        if q >= 3 {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: 3,
            });
        }
    }
    if i == k || k == l || i == l {
        return Err(Error::InvalidParameter(format!(
            "qubit indices ({i}, {k}, {l}) must be distinct"
        )));
    }
    Ok(())
}

fn single_entropy(psi: &PureState, q: usize) -> Result<f64> {
    psi.reduced(&[q]).map(|r| von_neumann_entropy(&r))
}

fn pair_eof(psi: &PureState, a: usize, b: usize) -> Result<f64> {
    eof(&psi.reduced(&[a, b])?)
}

/// Closed-form discord `D_{i,k} = S(ρ_k) − S(ρ_l) + E(ρ_il)` of a pure
/// three-qubit state, measuring `k`.
pub fn discord_via_kw(psi: &PureState, i: usize, k: usize, l: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    check_triple(i, k, l)?;
    let value = single_entropy(psi, k)? - single_entropy(psi, l)? + pair_eof(psi, i, l)?;
    Ok(value.max(0.0))
}

/// Optimized discord `D_{i,k}` of the reduction `ρ_ik`, measuring `k`.
pub fn optimized_discord(psi: &PureState, i: usize, k: usize) -> Result<f64> {
    let rho = psi.reduced(&[i, k])?;
    quantum_discord(&rho, MeasuredSide::B).map(|r| r.discord)
}

/// Compares the optimized conditional entropy `S(ρ_{i|k})` and discord
/// `D_{i,k}` with their Koashi–Winter closed forms.
pub fn kw_residual(psi: &PureState, i: usize, k: usize, l: usize) -> Result<KwResidual> {
    require_three_qubits(psi)?;
    check_triple(i, k, l)?;
    let rho_ik = psi.reduced(&[i, k])?;
    let (conditional, _) = min_conditional_entropy(&rho_ik, MeasuredSide::B)?;
    let e_il = pair_eof(psi, i, l)?;
    let optimized = quantum_discord(&rho_ik, MeasuredSide::B)?.discord;
    let closed = discord_via_kw(psi, i, k, l)?;
    Ok(KwResidual {
        conditional: (conditional - e_il).abs(),
        discord: (optimized - closed).abs(),
    })
}

/// Largest Koashi–Winter residual over all six ordered triples.
pub fn kw_residual_max(psi: &PureState) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (i, k, l) in ORDERED_TRIPLES {
        worst = worst.max(kw_residual(psi, i, k, l)?.max());
    }
    Ok(worst)
}

const ORDERED_TRIPLES: [(usize, usize, usize); 6] = [
    (0, 1, 2),
    (0, 2, 1),
    (1, 0, 2),
    (1, 2, 0),
    (2, 0, 1),
    (2, 1, 0),
];

fn check_focus(focus: usize) -> Result<()> {
    if focus >= 3 {
        return Err(Error::QubitOutOfRange {
            index: focus,
            num_qubits: 3,
        });
    }
    Ok(())
}

/// `S(ρ_f) − D_{f,j} − D_{f,k}` with closed-form discords.
pub fn discord_monogamy_deficit(psi: &PureState, focus: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    check_focus(focus)?;
    let (j, k) = other_two(focus);
    Ok(single_entropy(psi, focus)?
        - discord_via_kw(psi, focus, j, k)?
        - discord_via_kw(psi, focus, k, j)?)
}

/// `S(ρ_f) − E_{f,j} − E_{f,k}`.
pub fn eof_monogamy_deficit(psi: &PureState, focus: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    check_focus(focus)?;
    let (j, k) = other_two(focus);
    Ok(single_entropy(psi, focus)? - pair_eof(psi, focus, j)? - pair_eof(psi, focus, k)?)
}

/// `J_{f,jk} − J_{f,j} − J_{f,k}` with optimized classical correlations;
/// for a pure state `J_{f,jk} = S(ρ_f)`.
pub fn classical_monogamy_deficit(psi: &PureState, focus: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    check_focus(focus)?;
    let (j, k) = other_two(focus);
    let j_fj = classical_correlations(&psi.reduced(&[focus, j])?, MeasuredSide::B)?.0;
    let j_fk = classical_correlations(&psi.reduced(&[focus, k])?, MeasuredSide::B)?.0;
    Ok(single_entropy(psi, focus)? - j_fj - j_fk)
}

/// `C²_{f,jk} − C²_{f,j} − C²_{f,k}` before clamping; the CKW inequality
/// says this is non-negative.
pub fn ckw_slack(psi: &PureState, focus: usize) -> Result<f64> {
    require_three_qubits(psi)?;
    check_focus(focus)?;
    let (j, k) = other_two(focus);
    Ok(concurrence_sq_pure_bipartition(psi, focus)?
        - concurrence_squared(&psi.reduced(&[focus, j])?)?
        - concurrence_squared(&psi.reduced(&[focus, k])?)?)
}

/// Inclusion–exclusion sum `Σ_{T ⊆ groups, T ≠ ∅} (−1)^{|T|+n+1} S(ρ_T)`.
///
/// With two groups this is the mutual information.
pub fn interaction_information(rho: &DensityMatrix, partition: &[Vec<usize>]) -> Result<f64> {
    let n = partition.len();
    if n < 2 {
        return Err(Error::InvalidPartition(
            "need at least two subsystems".into(),
        ));
    }
    let num_qubits = rho.num_qubits();
    let mut seen = vec![false; num_qubits];
    for group in partition {
        if group.is_empty() {
            return Err(Error::InvalidPartition("empty subsystem".into()));
        }
        for &q in group {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
            if seen[q] {
                return Err(Error::InvalidPartition(format!(
                    "qubit {q} belongs to more than one subsystem"
                )));
            }
            seen[q] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidPartition(
            "subsystems do not cover every qubit".into(),
        ));
    }

    let mut total = 0.0;
    for mask in 1u32..(1 << n) {
        let mut qubits: Vec<usize> = (0..n)
            .filter(|g| mask & (1 << g) != 0)
            .flat_map(|g| partition[g].iter().copied())
            .collect();
        qubits.sort_unstable();
        let r = mask.count_ones() as usize;
        let sign = if (r + n + 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        total += sign * subsystem_entropy(rho, &qubits)?;
    }
    Ok(total)
}

fn require_three_qubit_rho(rho: &DensityMatrix) -> Result<()> {
    if rho.num_qubits() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: rho.num_qubits(),
        });
    }
    Ok(())
}

/// Tripartite interaction information with one qubit per party.
pub fn interaction_information_abc(rho: &DensityMatrix) -> Result<f64> {
    interaction_information(rho, &[vec![0], vec![1], vec![2]])
}

/// `|I_{A,BC} − I_{A,B} − I_{A,C} − I_{ABC}|`.
pub fn mutual_info_decomposition_residual(rho: &DensityMatrix) -> Result<f64> {
    require_three_qubit_rho(rho)?;
    let i_a_bc = interaction_information(rho, &[vec![0], vec![1, 2]])?;
    let i_ab = interaction_information(&partial_trace(rho, &[0, 1])?, &[vec![0], vec![1]])?;
    let i_ac = interaction_information(&partial_trace(rho, &[0, 2])?, &[vec![0], vec![1]])?;
    let i_abc = interaction_information_abc(rho)?;
    Ok((i_a_bc - i_ab - i_ac - i_abc).abs())
}

/// `D_{A,B} + D_{A,C}` (optimized, measuring B and C) against
/// `E_{A,B} + E_{A,C}`.
pub fn mixed_discord_vs_eof(rho: &DensityMatrix) -> Result<Slack> {
    require_three_qubit_rho(rho)?;
    let rho_ab = partial_trace(rho, &[0, 1])?;
    let rho_ac = partial_trace(rho, &[0, 2])?;
    let lhs = quantum_discord(&rho_ab, MeasuredSide::B)?.discord
        + quantum_discord(&rho_ac, MeasuredSide::B)?.discord;
    let rhs = eof(&rho_ab)? + eof(&rho_ac)?;
    Ok(Slack {
        lhs,
        rhs,
        slack: lhs - rhs,
    })
}

/// Checks `S_hi + E_{lo,C} < S_lo + E_{hi,C}` where `{hi, lo} = {A, B}`
/// ordered by single-qubit entropy.
pub fn chain_rule_check(psi: &PureState) -> Result<ChainRule> {
    chain_rule_margin(psi).map(|m| match m {
        None => ChainRule::Skipped,
        Some(margin) if margin > CHAIN_RULE_MARGIN => ChainRule::Holds,
        Some(_) => ChainRule::Fails,
    })
}

/// `S_lo + E_{hi,C} − S_hi − E_{lo,C}`, or `None` when `S_A ≈ S_B`.
pub fn chain_rule_margin(psi: &PureState) -> Result<Option<f64>> {
    require_three_qubits(psi)?;
    let s_a = single_entropy(psi, 0)?;
    let s_b = single_entropy(psi, 1)?;
    if (s_a - s_b).abs() <= CHAIN_RULE_DEGENERACY {
        return Ok(None);
    }
    let ((s_hi, hi), (s_lo, lo)) = if s_a > s_b {
        ((s_a, 0), (s_b, 1))
    } else {
        ((s_b, 1), (s_a, 0))
    };
    let e_hi_c = pair_eof(psi, hi, 2)?;
    let e_lo_c = pair_eof(psi, lo, 2)?;
    Ok(Some(s_lo + e_hi_c - s_hi - e_lo_c))
}

/// Discord and classical correlations in both directions against
/// `min(S_A, S_B)`.
pub fn luo_bound_report(rho: &DensityMatrix, require_rank2: bool) -> Result<LuoReport> {
    if rho.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: rho.num_qubits(),
        });
    }
    if require_rank2 {
        let third = rho.eigenvalues()[2];
        if third > tol::RANK2_THIRD_EIGENVALUE {
            return Err(Error::RankTooHigh {
                third_eigenvalue: third,
            });
        }
    }
    let measure_b = quantum_discord(rho, MeasuredSide::B)?;
    let measure_a = quantum_discord(rho, MeasuredSide::A)?;
    let s_a = subsystem_entropy(rho, &[0])?;
    let s_b = subsystem_entropy(rho, &[1])?;
    let bound = s_a.min(s_b);
    let (d_ab, d_ba) = (measure_b.discord, measure_a.discord);
    let (j_ab, j_ba) = (measure_b.classical, measure_a.classical);
    Ok(LuoReport {
        d_ab,
        d_ba,
        j_ab,
        j_ba,
        s_a,
        s_b,
        margins: [bound - d_ab, bound - d_ba, bound - j_ab, bound - j_ba],
    })
}

/// Full monogamy record for a pure three-qubit state with focus on A.
///
/// Discords are the closed-form values; `kw_residual_max` measures how far
/// the measurement optimizer sits from them.
pub fn monogamy_report(state_id: impl Into<String>, psi: &PureState) -> Result<MonogamyReport> {
    let report = monogamy_report_closed_form(state_id, psi)?;
    Ok(MonogamyReport {
        kw_residual_max: kw_residual_max(psi)?,
        ..report
    })
}

/// As [`monogamy_report`] without the optimizer cross-check
/// (`kw_residual_max` is left at 0).
pub fn monogamy_report_closed_form(
    state_id: impl Into<String>,
    psi: &PureState,
) -> Result<MonogamyReport> {
    require_three_qubits(psi)?;
    let s_a = single_entropy(psi, 0)?;
    let s_b = single_entropy(psi, 1)?;
    let s_c = single_entropy(psi, 2)?;
    let e_ab = pair_eof(psi, 0, 1)?;
    let e_ac = pair_eof(psi, 0, 2)?;
    let d_ab = discord_via_kw(psi, 0, 1, 2)?;
    let d_ac = discord_via_kw(psi, 0, 2, 1)?;
    let eof_deficit = s_a - e_ab - e_ac;
    Ok(MonogamyReport {
        state_id: state_id.into(),
        s_a,
        s_b,
        s_c,
        d_ab,
        d_ac,
        e_ab,
        e_ac,
        discord_deficit: s_a - d_ab - d_ac,
        eof_deficit,
        violation: -eof_deficit,
        kw_residual_max: 0.0,
        interaction_info: interaction_information_abc(&psi.density_matrix())?,
    })
}

/// Three-tangle with focus on A; re-exported for report consumers.
pub fn tangle(psi: &PureState) -> Result<f64> {
    three_tangle(psi, 0)
}

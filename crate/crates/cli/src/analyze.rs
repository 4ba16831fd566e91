//! Single-state analysis.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use qmono_core::correlations::{mutual_information, quantum_discord, Bipartition, MeasuredSide};
use qmono_core::entanglement::{
    concurrence_sq_pure_bipartition, entanglement_values, three_tangle, EntanglementValues,
};
use qmono_core::monogamy::{
    chain_rule_margin, ckw_slack, classical_monogamy_deficit, interaction_information_abc,
    luo_bound_report, mixed_discord_vs_eof, monogamy_report, mutual_info_decomposition_residual,
    LuoReport, MonogamyReport, Slack,
};
use qmono_core::state_io::{parse_state, State};
use qmono_core::{partial_trace, DensityMatrix, PureState};

use crate::error::CliError;
use crate::output::{csv_text, fmt_float};

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Analysis {
    PureThreeQubit(Box<PureThreeQubit>),
    TwoQubit(Box<TwoQubit>),
    MixedThreeQubit(Box<MixedThreeQubit>),
}

#[derive(Debug, Clone, Serialize)]
pub struct PureThreeQubit {
    pub report: MonogamyReport,
    pub three_tangle: f64,
    /// `C²_{A,BC}`, `C²_{A,B}`, `C²_{A,C}`.
    pub concurrence_sq: BTreeMap<&'static str, f64>,
    pub ckw_slack: f64,
    /// `J_{A,BC} − J_{A,B} − J_{A,C}`.
    pub classical_deficit: f64,
    /// Optimized discord of each ordered pair, measuring the second qubit.
    pub discord_optimized: BTreeMap<&'static str, f64>,
    /// `S_lo + E_{hi,C} − S_hi − E_{lo,C}`; absent when `S_A ≈ S_B`.
    pub chain_rule_margin: Option<f64>,
    pub measurement_class: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoQubit {
    pub luo: LuoReport,
    pub entanglement: EntanglementValues,
    pub mutual_info: f64,
    pub rank: usize,
    pub measurement_class: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct MixedThreeQubit {
    pub interaction_info: f64,
    pub decomposition_residual: f64,
    pub discord_vs_eof: Slack,
    #[serde(rename = "E_AB")]
    pub e_ab: f64,
    #[serde(rename = "E_AC")]
    pub e_ac: f64,
    pub measurement_class: &'static str,
}

const PAIRS: [(&str, usize, usize); 6] = [
    ("D_AB", 0, 1),
    ("D_BA", 1, 0),
    ("D_AC", 0, 2),
    ("D_CA", 2, 0),
    ("D_BC", 1, 2),
    ("D_CB", 2, 1),
];

fn analyze_pure(state_id: &str, psi: &PureState) -> Result<PureThreeQubit, CliError> {
    let report = monogamy_report(state_id, psi)?;
    let mut concurrence_sq = BTreeMap::new();
    concurrence_sq.insert("A_BC", concurrence_sq_pure_bipartition(psi, 0)?);
    concurrence_sq.insert(
        "AB",
        entanglement_values(&psi.reduced(&[0, 1])?)?.concurrence_sq,
    );
    concurrence_sq.insert(
        "AC",
        entanglement_values(&psi.reduced(&[0, 2])?)?.concurrence_sq,
    );
    let mut discord_optimized = BTreeMap::new();
    for (name, i, k) in PAIRS {
        let rho = psi.reduced(&[i, k])?;
        discord_optimized.insert(name, quantum_discord(&rho, MeasuredSide::B)?.discord);
    }
    Ok(PureThreeQubit {
        report,
        three_tangle: three_tangle(psi, 0)?,
        concurrence_sq,
        ckw_slack: ckw_slack(psi, 0)?,
        classical_deficit: classical_monogamy_deficit(psi, 0)?,
        discord_optimized,
        chain_rule_margin: chain_rule_margin(psi)?,
        measurement_class: "projective",
    })
}

fn analyze_two_qubit(rho: &DensityMatrix) -> Result<TwoQubit, CliError> {
    Ok(TwoQubit {
        luo: luo_bound_report(rho, false)?,
        entanglement: entanglement_values(rho)?,
        mutual_info: mutual_information(rho, &Bipartition::new(vec![0], vec![1]))?,
        rank: rho.rank(qmono_core::tol::RANK2_THIRD_EIGENVALUE),
        measurement_class: "projective",
    })
}

fn analyze_mixed_three(rho: &DensityMatrix) -> Result<MixedThreeQubit, CliError> {
    Ok(MixedThreeQubit {
        interaction_info: interaction_information_abc(rho)?,
        decomposition_residual: mutual_info_decomposition_residual(rho)?,
        discord_vs_eof: mixed_discord_vs_eof(rho)?,
        e_ab: qmono_core::eof(&partial_trace(rho, &[0, 1])?)?,
        e_ac: qmono_core::eof(&partial_trace(rho, &[0, 2])?)?,
        measurement_class: "projective",
    })
}

pub fn analyze_state(state_id: &str, state: &State) -> Result<Analysis, CliError> {
    match (state, state.num_qubits()) {
        (State::Pure(psi), 3) => Ok(Analysis::PureThreeQubit(Box::new(analyze_pure(
            state_id, psi,
        )?))),
        (_, 2) => Ok(Analysis::TwoQubit(Box::new(analyze_two_qubit(
            &state.density_matrix(),
        )?))),
        (State::Mixed(rho), 3) => Ok(Analysis::MixedThreeQubit(Box::new(analyze_mixed_three(
            rho,
        )?))),
        (_, n) => Err(CliError::InvalidState(format!(
            "analysis supports two- or three-qubit states, got {n} qubits"
        ))),
    }
}

/// Parses a state file's contents and analyzes it.
pub fn analyze_text(state_id: &str, text: &str) -> Result<Analysis, CliError> {
    let state = parse_state(text)?;
    analyze_state(state_id, &state)
}

/// Flattens the analysis into `key,value` rows with dotted keys.
pub fn analysis_csv(analysis: &Analysis) -> String {
    let value = serde_json::to_value(analysis).expect("analysis serializes");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    csv_text(&["key", "value"], &rows)
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<Vec<String>>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, rows);
            }
        }
        Value::Number(n) => {
            let cell = match n.as_f64() {
                Some(x) if !n.is_i64() && !n.is_u64() => fmt_float(x),
                _ => n.to_string(),
            };
            rows.push(vec![prefix.to_string(), cell]);
        }
        Value::String(s) => rows.push(vec![prefix.to_string(), s.clone()]),
        Value::Bool(b) => rows.push(vec![prefix.to_string(), b.to_string()]),
        Value::Null => rows.push(vec![prefix.to_string(), String::new()]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmono_core::state_io::state_to_json;
    use qmono_core::states::{psi_tilde, random_rank2_two_qubit, PsiTildeParams};

    #[test]
    fn ghz_file() {
        let ghz = psi_tilde(PsiTildeParams {
            p: 1.0,
            epsilon: 0.5,
        })
        .unwrap();
        let text = state_to_json(&State::Pure(ghz));
        let Analysis::PureThreeQubit(a) = analyze_text("ghz", &text).unwrap() else {
            panic!("wrong kind");
        };
        assert!((a.report.discord_deficit - 1.0).abs() < 1e-6);
        assert!((a.three_tangle - 1.0).abs() < 1e-9);
    }

    #[test]
    fn two_qubit_file() {
        let rho = random_rank2_two_qubit(1);
        let text = state_to_json(&State::Mixed(rho));
        let a = analyze_text("r2", &text).unwrap();
        assert!(matches!(a, Analysis::TwoQubit(_)));
        let csv = analysis_csv(&a);
        assert!(csv.contains("luo.margins.0,"));
        assert!(csv.contains("kind,two_qubit"));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(analyze_text("x", "{").unwrap_err().exit_code(), 2);
        let bad = r#"{ "num_qubits": 1, "amplitudes": [[1.0, 0.0], [1.0, 0.0]] }"#;
        assert_eq!(analyze_text("x", bad).unwrap_err().exit_code(), 3);
        let one = r#"{ "num_qubits": 1, "amplitudes": [[1.0, 0.0], [0.0, 0.0]] }"#;
        assert_eq!(analyze_text("x", one).unwrap_err().exit_code(), 3);
    }
}

//! JSON state files.
//!
//! Pure states: `{ "num_qubits": n, "amplitudes": [[re, im], ...] }`.
//! Density matrices: `{ "num_qubits": n, "matrix": [[[re, im], ...], ...] }`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::PureState;
use crate::tensor::{ComplexMatrix, DensityMatrix, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Pure {
        num_qubits: usize,
        amplitudes: Vec<[f64; 2]>,
    },
    Mixed {
        num_qubits: usize,
        matrix: Vec<Vec<[f64; 2]>>,
    },
}

/// A state loaded from disk, validated.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn num_qubits(&self) -> usize {
        match self {
            State::Pure(psi) => psi.num_qubits(),
            State::Mixed(rho) => rho.num_qubits(),
        }
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        match self {
            State::Pure(psi) => psi.density_matrix(),
            State::Mixed(rho) => rho.clone(),
        }
    }
}

fn to_c64(pair: &[f64; 2]) -> C64 {
    C64::new(pair[0], pair[1])
}

fn to_pair(z: &C64) -> [f64; 2] {
    [z.re, z.im]
}

impl StateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state files always serialize")
    }

    /// Validates the raw file contents into a state.
    pub fn into_state(self) -> Result<State> {
        match self {
            StateFile::Pure {
                num_qubits,
                amplitudes,
            } => {
                let amps = amplitudes.iter().map(to_c64).collect();
                PureState::new(num_qubits, amps).map(State::Pure)
            }
            StateFile::Mixed { num_qubits, matrix } => {
                let rows: Vec<Vec<C64>> = matrix
                    .iter()
                    .map(|row| row.iter().map(to_c64).collect())
                    .collect();
                let m = ComplexMatrix::from_rows(&rows)?;
                DensityMatrix::new(m, num_qubits).map(State::Mixed)
            }
        }
    }
}

impl From<&PureState> for StateFile {
    fn from(psi: &PureState) -> Self {
        StateFile::Pure {
            num_qubits: psi.num_qubits(),
            amplitudes: psi.amplitudes().iter().map(to_pair).collect(),
        }
    }
}

impl From<&DensityMatrix> for StateFile {
    fn from(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        StateFile::Mixed {
            num_qubits: rho.num_qubits(),
            matrix: (0..m.dim())
                .map(|i| m.row(i).iter().map(to_pair).collect())
                .collect(),
        }
    }
}

impl From<&State> for StateFile {
    fn from(state: &State) -> Self {
        match state {
            State::Pure(psi) => psi.into(),
            State::Mixed(rho) => rho.into(),
        }
    }
}

/// Parses and validates a state file. Malformed JSON yields
/// [`Error::Parse`]; well-formed files describing invalid states yield the
/// corresponding validation error.
pub fn parse_state(text: &str) -> Result<State> {
    StateFile::from_json(text)?.into_state()
}

pub fn state_to_json(state: &State) -> String {
    StateFile::from(state).to_json()
}

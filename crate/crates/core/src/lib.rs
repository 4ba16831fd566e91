//! Quantum and classical correlations of few-qubit states and their
//! monogamy properties.
//!
//! The crate computes von Neumann entropies, mutual information, quantum
//! discord and classical correlations (optimized over projective
//! measurements), Wootters concurrence, entanglement of formation and the
//! three-tangle, and uses them to check monogamy relations for three-qubit
//! states.
//!
//! Conventions: qubit 0 is the most significant bit of a basis index, all
//! logarithms are base 2, and `D_{A,B}` denotes discord with the
//! measurement performed on B.

pub mod correlations;
pub mod entanglement;
pub mod error;
pub mod monogamy;
pub mod optim;
pub mod state_io;
pub mod states;
pub mod tensor;
pub mod tol;

pub use correlations::{
    classical_correlations, measured_conditional_entropy, mutual_information, quantum_discord,
    von_neumann_entropy, Bipartition, DiscordResult, MeasuredSide, MeasurementAngles,
};
pub use entanglement::{
    binary_entropy, concurrence, concurrence_sq_pure_bipartition, eof, spin_flip, three_tangle,
    EntanglementValues,
};
pub use error::{Error, Result};
pub use monogamy::{LuoReport, MonogamyReport};
pub use states::{GhzClassParams, PsiTildeParams, PureState};
pub use tensor::{
    hermitian_eigen, kron, partial_trace, psd_sqrt, ComplexMatrix, DensityMatrix, C64,
};

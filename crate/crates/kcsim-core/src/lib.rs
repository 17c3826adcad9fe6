//! Simulation engine for collective photon emission from a periodic spin
//! chain whose decay channels are gated by the local excitation pattern.
//!
//! A chain of `N` two-level emitters with nearest-neighbour density-density
//! interactions radiates through three spectrally resolved collective
//! channels: a site may emit only when exactly ξ ∈ {0, 1, 2} of its
//! neighbours are excited, at frequency ω_ξ = Δ + ξJ and rate
//! γ_ξ = Γ ω_ξ³. The crate builds the corresponding sparse operators,
//! evolves the full density matrix, unravels the dynamics into stochastic
//! quantum-jump trajectories, and extracts burst features, entanglement
//! statistics, and finite-size scaling laws from the results.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the
//! command-line front end live in the companion `kcsim-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod basis;
pub mod dense;
pub mod error;
pub mod lindblad;
mod math;
pub mod observables;
pub mod operators;
pub mod params;
pub mod rk;
pub mod sparse;
pub mod trajectory;

pub use basis::{SiteSet, SpinConfig};
pub use dense::CMatrix;
pub use error::CoreError;
pub use lindblad::{
    detect_steady_state, evolve_master, lindblad_rhs, DensityMatrix, EvolutionConfig,
    LindbladSystem, MasterRun, SteadySample,
};
pub use observables::{ObservableRecord, StateRef};
pub use operators::{
    build_collective_lowering, build_constrained_jump, build_hamiltonian, build_momentum_lowering,
    verify_eigenoperator, ChannelSpec, Momentum,
};
pub use params::ChainParams;
pub use sparse::SparseOp;
pub use trajectory::{
    run_ensemble, run_trajectory, EnsembleStats, JumpEvent, PureState, TrajectoryConfig,
    TrajectoryRecord,
};

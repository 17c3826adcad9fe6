//! Physical and lattice parameters of the chain.

use alloc::format;

use crate::error::{CoreError, Result};
use crate::math;

/// Parameters of a periodic chain of two-level emitters.
///
/// `delta` is the bare transition frequency Δ, `j_int` the nearest-neighbour
/// interaction J (both in the same arbitrary energy units), and
/// `gamma_prefactor` the prefactor Γ that carries the microscopic details of
/// the light–matter coupling, so that channel ξ decays at rate
/// γ_ξ = Γ (Δ + ξJ)³. Boundaries are always periodic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    n_sites: usize,
    delta: f64,
    j_int: f64,
    gamma_prefactor: f64,
}

impl ChainParams {
    /// Validates and builds the parameter set.
    ///
    /// `n_sites >= 3` is required: the two-excited-neighbour channel needs
    /// two distinct neighbours, and N = 3 is the smallest meaningful
    /// periodic chain.
    pub fn new(n_sites: usize, delta: f64, j_int: f64, gamma_prefactor: f64) -> Result<Self> {
        if n_sites < 3 {
            return Err(CoreError::InvalidParams(format!(
                "N >= 3 required, got {n_sites}"
            )));
        }
        if n_sites > 24 {
            return Err(CoreError::InvalidParams(format!(
                "N = {n_sites} exceeds the supported maximum of 24"
            )));
        }
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(CoreError::InvalidParams(format!(
                "delta must be positive and finite, got {delta}"
            )));
        }
        if !(j_int >= 0.0) || !j_int.is_finite() {
            return Err(CoreError::InvalidParams(format!(
                "j_int must be non-negative and finite, got {j_int}"
            )));
        }
        if !(gamma_prefactor > 0.0) || !gamma_prefactor.is_finite() {
            return Err(CoreError::InvalidParams(format!(
                "gamma must be positive and finite, got {gamma_prefactor}"
            )));
        }
        Ok(Self {
            n_sites,
            delta,
            j_int,
            gamma_prefactor,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn j_int(&self) -> f64 {
        self.j_int
    }

    pub fn gamma_prefactor(&self) -> f64 {
        self.gamma_prefactor
    }

    /// Hilbert-space dimension 2^N.
    pub fn dim(&self) -> usize {
        1 << self.n_sites
    }

    /// Emission frequency ω_ξ = Δ + ξJ of channel `xi`.
    pub fn channel_omega(&self, xi: u8) -> f64 {
        debug_assert!(xi <= 2);
        self.delta + f64::from(xi) * self.j_int
    }

    /// Decay rate γ_ξ = Γ (Δ + ξJ)³ of channel `xi`.
    pub fn channel_rate(&self, xi: u8) -> f64 {
        self.gamma_prefactor * math::cube(self.channel_omega(xi))
    }

    /// Default rate Γ Δ³ for the unconstrained collective reference mode.
    pub fn dicke_rate_default(&self) -> f64 {
        self.gamma_prefactor * math::cube(self.delta)
    }
}

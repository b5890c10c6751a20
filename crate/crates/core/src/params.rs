use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which equity enters a firm's capital plan.
///
/// `Perfect` plans on the current period's equity; `Imperfect` plans on the
/// preceding period's. The one-period lag is what makes bankruptcies
/// possible at all: a firm that just lost equity keeps planning at its old
/// size and can be pushed below zero by a bad price draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfoMode {
    Perfect,
    Imperfect,
}

/// How the bank's equity evolves between periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EconomyMode {
    /// Bank equity compounds by retained profit; credit supply grows with it.
    Growing,
    /// Bank equity (hence total credit) is pinned at its initial value.
    /// Profit is still computed and recorded, just not applied.
    Stationary,
    /// The bank is removed entirely: every firm faces the fixed rate `phi`
    /// and follows a pure multiplicative growth process.
    RandomGrowth,
}

/// Whether the per-period price shock `u` is drawn or pinned at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PriceMode {
    /// `u` uniform on the half-open interval [0, 2), one draw per firm per period.
    Stochastic,
    /// `u = 1` everywhere; the market is noiseless.
    Deterministic,
}

/// Which equity sits in the denominator of the imperfect-information
/// clearing rate.
///
/// `CurrentEquity` solves `sigma * A_prev / r - A_now = supply`, so the
/// financed capital is exactly `supply + A_now` and the balance sheet
/// closes against the credit actually extended. `LaggedEquity` uses
/// `A_prev` in the denominator as well; it is a sensitivity variant and
/// relaxes the supply-matching identity (realized loans then differ from
/// allocated supply whenever equity moved).
///
/// Under `InfoMode::Perfect` the two coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClearingMode {
    CurrentEquity,
    LaggedEquity,
}

/// All scalar parameters of a simulation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Productivity of capital: added value per unit of total assets.
    pub phi: f64,
    /// Safety factor of the capital plan, 0 < sigma <= 1.
    pub sigma: f64,
    /// Risk coefficient of the prudential rule, 0 < alpha < 1.
    pub alpha: f64,
    /// Bank profit margin on deposit interest.
    pub omega: f64,
    /// Number of firm agents (held fixed by one-for-one replacement).
    pub n_firms: usize,
    /// Number of simulated periods.
    pub horizon: u64,
    /// Master RNG seed; each firm slot derives its own stream from it.
    pub seed: u64,
    pub info_mode: InfoMode,
    pub economy_mode: EconomyMode,
    pub price_mode: PriceMode,
    pub clearing_mode: ClearingMode,
    /// Equity of a replacement firm entering after a bankruptcy.
    pub entrant_equity: f64,
    /// Per-firm equity at t = 0.
    pub initial_equity: f64,
    /// Per-firm total assets at t = 0 (must not be below initial_equity).
    pub initial_capital: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            phi: 0.1,
            sigma: 0.5,
            alpha: 0.08,
            omega: 0.002,
            n_firms: 10_000,
            horizon: 1_000,
            seed: 42,
            info_mode: InfoMode::Imperfect,
            economy_mode: EconomyMode::Growing,
            price_mode: PriceMode::Stochastic,
            clearing_mode: ClearingMode::CurrentEquity,
            entrant_equity: 20.0,
            initial_equity: 20.0,
            initial_capital: 100.0,
        }
    }
}

/// Checks every parameter bound and returns the set unchanged if all hold.
///
/// The error names the first violated constraint.
pub fn validate_params(p: ModelParams) -> Result<ModelParams> {
    if !(p.phi > 0.0 && p.phi.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "phi must be positive and finite, got {}",
            p.phi
        )));
    }
    if !(p.sigma > 0.0 && p.sigma <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "sigma (safety factor) must satisfy 0 < sigma <= 1, got {}",
            p.sigma
        )));
    }
    if !(p.alpha > 0.0 && p.alpha < 1.0) {
        return Err(Error::InvalidParams(format!(
            "alpha (risk coefficient) must satisfy 0 < alpha < 1, got {}",
            p.alpha
        )));
    }
    if !(p.omega >= 0.0 && p.omega.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "omega (profit margin) must be non-negative and finite, got {}",
            p.omega
        )));
    }
    if p.n_firms == 0 {
        return Err(Error::InvalidParams("n_firms must be at least 1".into()));
    }
    if !(p.initial_equity > 0.0 && p.initial_equity.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "initial_equity must be positive and finite, got {}",
            p.initial_equity
        )));
    }
    if !(p.initial_capital >= p.initial_equity && p.initial_capital.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "initial_capital must be finite and at least initial_equity ({}), got {}",
            p.initial_equity, p.initial_capital
        )));
    }
    if !(p.entrant_equity > 0.0 && p.entrant_equity.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "entrant_equity must be positive and finite, got {}",
            p.entrant_equity
        )));
    }
    Ok(p)
}

/// Bank equity at t = 0, set so the prudential rule holds exactly:
/// total initial loans equal `initial_bank_equity / alpha`.
pub fn initial_bank_equity(p: &ModelParams) -> f64 {
    p.alpha * p.n_firms as f64 * (p.initial_capital - p.initial_equity)
}

//! Discrete-time simulator of a credit economy: many firm agents financed
//! by one monopolistic bank, with heavy-tail analytics over the resulting
//! firm-size distributions.
//!
//! Each period the bank lends out `equity / alpha`, splits it across firms
//! in proportion to their previous size, and every firm's interest rate
//! clears its own demand against that allocation. Profits are hit by a
//! uniform price shock; firms whose equity turns negative exit and are
//! replaced. Planning on stale equity (imperfect information) makes
//! bankruptcies — and their synchronization with bank shocks — possible.
//!
//! Modules:
//! - [`params`] / [`state`]: parameters, agent state, accounting identities
//! - [`firm`] / [`bank`]: the per-period decision rules
//! - [`engine`]: the period loop, regimes, RNG streams, replacement
//! - [`analytics`]: closed-form oracle, tail fits, synchronization measures

pub mod analytics;
pub mod bank;
pub mod engine;
pub mod error;
pub mod firm;
pub mod params;
pub mod state;

pub use analytics::{
    bankruptcy_synchronization, compare_tail_families, fit_lognormal, fit_power_tail, growth_rate,
    rank_size, solve_equilibrium_rate, tail_cutoff_stability, AnalyticSolution,
    BankruptcySynchronization, CutoffStability, LogNormalFit, TailComparison, TailFit, TailMethod,
    STABILITY_FRACTIONS, STABILITY_MAX_RATIO,
};
pub use engine::{
    default_snapshot_periods, run, run_random_growth, run_with_snapshots, BankruptcyEvent, Engine,
    SimulationRun, TerminalCondition,
};
pub use error::{Error, Result};
pub use params::{
    initial_bank_equity, validate_params, ClearingMode, EconomyMode, InfoMode, ModelParams,
    PriceMode,
};
pub use state::{BankState, FirmState, PeriodRecord};

//! A single firm's per-period decisions and outcomes.
//!
//! All operations here are pure functions of their arguments; the engine
//! threads state through them in a fixed order.

use crate::params::InfoMode;
use crate::state::FirmState;

/// The equity a firm plans on: current under perfect information, lagged
/// under imperfect information. At entry `equity_prev == equity`, so both
/// modes agree on a firm's first period.
pub fn planning_equity(f: &FirmState, mode: InfoMode) -> f64 {
    match mode {
        InfoMode::Perfect => f.equity,
        InfoMode::Imperfect => f.equity_prev,
    }
}

/// Capital plan `K = sigma * a_plan / rate`.
///
/// The safety factor caps interest cost at `sigma * a_plan` no matter how
/// large the financed balance sheet gets.
///
/// Panics if `rate` or `a_plan` is not positive; both are guaranteed by the
/// clearing step, so a violation is an engine bug.
pub fn capital_plan(a_plan: f64, rate: f64, sigma: f64) -> f64 {
    assert!(
        rate > 0.0 && a_plan > 0.0,
        "capital_plan requires positive rate and planning equity (rate={rate}, a_plan={a_plan})"
    );
    sigma * a_plan / rate
}

/// Credit the firm asks the bank for: planned capital minus own equity.
///
/// May be negative away from the market-clearing rate; clearing eliminates
/// that case.
pub fn credit_demand(a_plan: f64, a_now: f64, rate: f64, sigma: f64) -> f64 {
    capital_plan(a_plan, rate, sigma) - a_now
}

/// Realized profit `(u * phi - rate) * capital` once the period's price
/// shock is known.
pub fn realized_profit(capital: f64, rate: f64, shock: f64, phi: f64) -> f64 {
    (shock * phi - rate) * capital
}

/// Probability that the period's shock bankrupts a firm operating `capital`
/// on `equity` at `rate`, under `u ~ U(0, 2)`.
///
/// Zero whenever `capital <= equity / rate`: below that size the worst draw
/// still leaves equity non-negative. Diagnostic only — the simulation
/// realizes bankruptcy through the drawn shock, never by sampling this.
pub fn bankruptcy_probability(capital: f64, equity: f64, rate: f64, phi: f64) -> f64 {
    if capital <= 0.0 || capital <= equity / rate {
        return 0.0;
    }
    ((rate * capital - equity) / (2.0 * phi * capital)).clamp(0.0, 1.0)
}

/// End-of-period equity update and bankruptcy test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodOutcome {
    pub new_equity: f64,
    pub bankrupt: bool,
}

/// Applies the period's profit to equity. Bankruptcy is the strict condition
/// `new_equity < 0`; landing exactly on zero keeps the firm alive.
pub fn end_of_period_update(f: &FirmState, profit: f64) -> PeriodOutcome {
    let new_equity = f.equity + profit;
    PeriodOutcome {
        new_equity,
        bankrupt: new_equity < 0.0,
    }
}

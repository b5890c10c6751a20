use serde::Serialize;

use crate::params::{initial_bank_equity, ModelParams};

/// Balance-sheet snapshot of one firm.
///
/// Within a period, after financing, `capital = equity + loan` holds
/// exactly; once the period's profit lands, `equity` moves to the new value
/// and `equity_prev` keeps the equity the period opened with, so the
/// period's books remain checkable as `capital - loan = equity_prev`.
#[derive(Debug, Clone, PartialEq)]
pub struct FirmState {
    /// Equity capital at the beginning of the upcoming period.
    pub equity: f64,
    /// Equity capital one period earlier; this is what an imperfectly
    /// informed firm plans on.
    pub equity_prev: f64,
    /// Total assets financed for the most recent period.
    pub capital: f64,
    /// Liabilities to the bank for the most recent period.
    pub loan: f64,
    /// Interest rate cleared for the most recent period.
    pub rate: f64,
    /// Price shock drawn in the most recent period.
    pub shock: f64,
    /// False only transiently, between the bankruptcy flag and the
    /// replacement step of the same period.
    pub alive: bool,
    /// Periods since entry.
    pub age: u64,
}

impl FirmState {
    /// Starting state at t = 0.
    pub fn initial(p: &ModelParams) -> Self {
        FirmState {
            equity: p.initial_equity,
            equity_prev: p.initial_equity,
            capital: p.initial_capital,
            loan: p.initial_capital - p.initial_equity,
            rate: 0.0,
            shock: 1.0,
            alive: true,
            age: 0,
        }
    }

    /// Replacement firm entering after a bankruptcy.
    ///
    /// The entrant carries `entrant_equity` and an allocation-memory capital
    /// scaled like the initial conditions, so next period's proportional
    /// credit allocation treats it as a small incumbent.
    pub fn entrant(p: &ModelParams) -> Self {
        let capital = p.entrant_equity * (p.initial_capital / p.initial_equity);
        FirmState {
            equity: p.entrant_equity,
            equity_prev: p.entrant_equity,
            capital,
            loan: capital - p.entrant_equity,
            rate: 0.0,
            shock: 1.0,
            alive: true,
            age: 0,
        }
    }
}

/// The bank's books for the most recent period.
///
/// `equity` is the equity that backed the period's lending, so the
/// balance-sheet identity `credit_total = deposits + equity` holds on this
/// struct as-is. Retained profit is applied when the next period opens.
#[derive(Debug, Clone, PartialEq)]
pub struct BankState {
    pub equity: f64,
    /// Aggregate credit supplied, `equity / alpha` under the prudential rule.
    pub credit_total: f64,
    /// Deposits, the residual `credit_total - equity`.
    pub deposits: f64,
    /// Net profit of the period.
    pub profit: f64,
    /// Arithmetic mean of the period's firm rates.
    pub mean_rate: f64,
    /// Total equity shortfall of the period's bankruptcies.
    pub bad_debt: f64,
}

impl BankState {
    pub fn initial(p: &ModelParams) -> Self {
        BankState {
            equity: initial_bank_equity(p),
            credit_total: 0.0,
            deposits: 0.0,
            profit: 0.0,
            mean_rate: 0.0,
            bad_debt: 0.0,
        }
    }
}

/// Per-period aggregates, one row of the output time series.
///
/// `bank_equity` is the equity that backed the period's lending, so the
/// recorded sequence follows the bank's own books: each period's profit
/// shows up in the next record's equity. Consecutive records therefore
/// difference to the previous period's profit in the growing regime, which
/// is exactly the equity change firms face when the new period's credit is
/// allocated. Firm totals are end-of-period (post-replacement) values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodRecord {
    pub period: u64,
    pub bank_equity: f64,
    pub bank_profit: f64,
    pub bad_debt: f64,
    pub bankruptcies: u64,
    pub mean_rate: f64,
    pub total_capital: f64,
    pub total_equity: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_firm_books_balance() {
        let p = ModelParams::default();
        let f = FirmState::initial(&p);
        assert_eq!(f.capital - f.loan, f.equity);
        assert_eq!(f.equity_prev, f.equity);
        assert!(f.alive);
    }

    #[test]
    fn entrant_books_balance_and_scale() {
        let p = ModelParams {
            entrant_equity: 10.0,
            ..Default::default()
        };
        let f = FirmState::entrant(&p);
        assert_eq!(f.equity, 10.0);
        // memory capital keeps the initial capital/equity ratio (100/20)
        assert_eq!(f.capital, 50.0);
        assert_eq!(f.capital - f.loan, f.equity);
        assert_eq!(f.age, 0);
    }
}

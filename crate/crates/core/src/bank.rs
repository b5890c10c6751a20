//! The monopolistic bank: credit supply, proportional allocation,
//! market-clearing rates, profit with bad-debt losses, and equity evolution.

use crate::error::{Error, Result};
use crate::params::EconomyMode;

/// Aggregate credit the prudential rule allows: `equity / alpha`.
///
/// Fails when equity is non-positive — the bank cannot extend any credit
/// and the simulation must halt.
pub fn total_credit(equity: f64, alpha: f64) -> Result<f64> {
    if equity <= 0.0 {
        return Err(Error::BankFailure {
            period: 0,
            equity,
        });
    }
    Ok(equity / alpha)
}

/// Splits `l_total` across firms in proportion to their previous-period
/// capital. The split preserves the total and never goes negative.
pub fn allocate_credit(l_total: f64, k_prev: &[f64]) -> Result<Vec<f64>> {
    if k_prev.is_empty() {
        return Err(Error::InsufficientInput(
            "allocate_credit requires at least one firm".into(),
        ));
    }
    let total: f64 = k_prev.iter().sum();
    if total <= 0.0 {
        return Err(Error::Degenerate(format!(
            "allocate_credit requires positive total previous capital, got {total}"
        )));
    }
    Ok(k_prev.iter().map(|&k| l_total * k / total).collect())
}

/// Market-clearing interest rate `sigma * a_plan / (l_supply + a_now)`.
///
/// At this rate the planned capital equals `l_supply + a_now`: the firm's
/// credit demand exactly absorbs its allocated supply. With no supply the
/// rate tops out at `sigma * a_plan / a_now` (which is just `sigma` when the
/// plan uses current equity).
pub fn clearing_rate(a_plan: f64, a_now: f64, l_supply: f64, sigma: f64) -> f64 {
    sigma * a_plan / (l_supply + a_now)
}

/// Loss the bank books on one bankruptcy: the equity shortfall.
///
/// Liquidation recovers the firm's remaining assets; what the loan exceeds
/// them by is exactly `-new_equity`.
///
/// Panics when called for a non-bankrupt firm (`new_equity >= 0`).
pub fn bad_debt(new_equity: f64) -> f64 {
    assert!(
        new_equity < 0.0,
        "bad_debt is defined only for bankrupt firms (new_equity = {new_equity})"
    );
    -new_equity
}

/// Net bank profit for a period: interest income minus deposit and equity
/// funding costs minus bad debts.
///
/// `rates` and `loans` are the period's per-firm values; the funding costs
/// are priced at the mean rate over all firms active in the period.
pub fn bank_profit(
    rates: &[f64],
    loans: &[f64],
    deposits: f64,
    equity: f64,
    omega: f64,
    bad_debt_total: f64,
) -> Result<f64> {
    if rates.is_empty() || rates.len() != loans.len() {
        return Err(Error::InsufficientInput(format!(
            "bank_profit requires equally sized, non-empty rate/loan lists (got {} and {})",
            rates.len(),
            loans.len()
        )));
    }
    let interest: f64 = rates.iter().zip(loans).map(|(r, l)| r * l).sum();
    let mean_rate: f64 = rates.iter().sum::<f64>() / rates.len() as f64;
    Ok(interest - mean_rate * (1.0 - omega) * deposits - mean_rate * equity - bad_debt_total)
}

/// Next-period bank equity by regime: compounding in `Growing`, pinned in
/// `Stationary`, untouched in `RandomGrowth` (no bank exists there).
///
/// A non-positive result in the growing regime means the bank has failed;
/// the engine detects that when it next tries to lend.
pub fn update_bank_equity(equity: f64, profit: f64, mode: EconomyMode) -> f64 {
    match mode {
        EconomyMode::Growing => equity + profit,
        EconomyMode::Stationary | EconomyMode::RandomGrowth => equity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::firm::capital_plan;

    #[test]
    fn total_credit_examples() {
        assert_eq!(total_credit(6.4, 0.08).unwrap(), 80.0);
        assert_eq!(total_credit(5.0, 1.0).unwrap(), 5.0);
        assert!(matches!(
            total_credit(0.0, 0.08),
            Err(Error::BankFailure { .. })
        ));
    }

    #[test]
    fn allocate_credit_examples() {
        assert_eq!(
            allocate_credit(80.0, &[100.0, 100.0]).unwrap(),
            vec![40.0, 40.0]
        );
        assert_eq!(
            allocate_credit(80.0, &[300.0, 100.0]).unwrap(),
            vec![60.0, 20.0]
        );
        assert_eq!(allocate_credit(80.0, &[42.0]).unwrap(), vec![80.0]);
        assert!(allocate_credit(80.0, &[0.0, 0.0]).is_err());
        assert!(allocate_credit(80.0, &[]).is_err());
    }

    #[test]
    fn clearing_rate_perfect_mode_clears_market() {
        let r = clearing_rate(20.0, 20.0, 80.0, 0.5);
        assert_eq!(r, 0.1);
        // the plan built at the cleared rate absorbs supply plus equity
        let k = capital_plan(20.0, r, 0.5);
        assert!((k - 100.0).abs() < 1e-12);
    }

    #[test]
    fn clearing_rate_tops_out_at_sigma_with_no_supply() {
        assert_eq!(clearing_rate(20.0, 20.0, 0.0, 0.5), 0.5);
    }

    #[test]
    fn clearing_rate_lagged_plan_keeps_books_closed() {
        // imperfect information: plan on 8, own 10, supply 80
        let r = clearing_rate(8.0, 10.0, 80.0, 0.5);
        assert!((r - 0.5 * 8.0 / 90.0).abs() < 1e-15);
        let k = capital_plan(8.0, r, 0.5);
        assert!((k - 90.0).abs() < 1e-9);
        // loan = K - A_now picks up exactly the allocated supply
        assert!((k - 10.0 - 80.0).abs() < 1e-9);
    }

    #[test]
    fn bad_debt_examples() {
        assert_eq!(bad_debt(-2.0), 2.0);
        assert_eq!(bad_debt(-50.0), 50.0);
        assert!(bad_debt(-1e-12) > 0.0);
    }

    #[test]
    #[should_panic(expected = "bad_debt is defined only for bankrupt")]
    fn bad_debt_rejects_solvent_firms() {
        bad_debt(0.0);
    }

    #[test]
    fn bank_profit_single_firm_matches_both_algebraic_routes() {
        // One firm, r = 0.1, L = 80, E = 6.4, D = 73.6, omega = 0.002.
        // Literal form: r*L - r*(1-omega)*D - r*E
        // Margin form:  omega * r * D   (deposits are the residual L - E)
        let pi = bank_profit(&[0.1], &[80.0], 73.6, 6.4, 0.002, 0.0).unwrap();
        let literal = 8.0 - 0.1 * 0.998 * 73.6 - 0.1 * 6.4;
        let margin = 0.002 * 0.1 * 73.6;
        assert!((pi - literal).abs() < 1e-12);
        assert!((pi - margin).abs() < 1e-12);
        assert!((pi - 0.01472).abs() < 1e-12);
    }

    #[test]
    fn bank_profit_zero_margin_bank_earns_nothing() {
        // With omega = 0, equal rates and D = L - E, income equals funding cost.
        let pi = bank_profit(&[0.1, 0.1], &[30.0, 50.0], 73.6, 6.4, 0.0, 0.0).unwrap();
        assert!(pi.abs() < 1e-12);
    }

    #[test]
    fn bank_profit_large_bad_debt_turns_negative() {
        let pi = bank_profit(&[0.1], &[80.0], 73.6, 6.4, 0.002, 5.0).unwrap();
        assert!(pi < 0.0);
    }

    #[test]
    fn bank_profit_rejects_empty_population() {
        assert!(bank_profit(&[], &[], 0.0, 1.0, 0.002, 0.0).is_err());
    }

    #[test]
    fn update_bank_equity_by_regime() {
        assert_eq!(
            update_bank_equity(6.4, 0.0147, EconomyMode::Growing),
            6.4 + 0.0147
        );
        assert_eq!(update_bank_equity(6.4, 123.0, EconomyMode::Stationary), 6.4);
        assert_eq!(
            update_bank_equity(6.4, 123.0, EconomyMode::RandomGrowth),
            6.4
        );
        // growing with profit = -E exhausts the bank
        assert_eq!(update_bank_equity(6.4, -6.4, EconomyMode::Growing), 0.0);
    }
}

//! Per-period orchestration: credit market, shocks, bankruptcies,
//! replacement, and the bank-free random-growth reduction.
//!
//! Determinism: one master seed spawns one ChaCha stream per firm slot;
//! replacement firms inherit the slot's stream. All cross-firm reductions
//! run in fixed index order, so a run is bit-reproducible for a given
//! `(params, seed)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bank::{allocate_credit, bad_debt, bank_profit, total_credit, update_bank_equity};
use crate::error::{Error, Result};
use crate::firm::{capital_plan, end_of_period_update, planning_equity, realized_profit};
use crate::params::{validate_params, ClearingMode, EconomyMode, ModelParams, PriceMode};
use crate::state::{BankState, FirmState, PeriodRecord};

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TerminalCondition {
    /// The full horizon was simulated.
    Completed,
    /// The bank could no longer lend; `period` is the first period that
    /// could not be financed and `equity` the non-positive equity it would
    /// have had to lend against. History up to the previous period is kept.
    BankFailure { period: u64, equity: f64 },
}

/// One bankruptcy: which firm failed, at what operating size, and what the
/// bank lost on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BankruptcyEvent {
    pub period: u64,
    pub firm: usize,
    pub size: f64,
    pub bad_debt: f64,
}

/// Everything a finished (or terminated) run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationRun {
    pub params: ModelParams,
    pub history: Vec<PeriodRecord>,
    /// End-of-period firm capital vectors at the requested snapshot periods.
    pub snapshots: Vec<(u64, Vec<f64>)>,
    pub bankruptcy_log: Vec<BankruptcyEvent>,
    pub terminal: TerminalCondition,
}

/// Stepping engine. Most callers want [`run`] or [`run_with_snapshots`];
/// the engine itself is public so tests and tools can inspect the full
/// agent state between periods.
pub struct Engine {
    params: ModelParams,
    firms: Vec<FirmState>,
    bank: BankState,
    rngs: Vec<ChaCha8Rng>,
    period: u64,
    history: Vec<PeriodRecord>,
    bankruptcy_log: Vec<BankruptcyEvent>,
    rates: Vec<f64>,
    loans: Vec<f64>,
}

impl Engine {
    pub fn new(params: ModelParams) -> Result<Self> {
        let params = validate_params(params)?;
        let firms = vec![FirmState::initial(&params); params.n_firms];
        let rngs = (0..params.n_firms)
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
                rng.set_stream(i as u64);
                rng
            })
            .collect();
        let bank = BankState::initial(&params);
        Ok(Engine {
            params,
            firms,
            bank,
            rngs,
            period: 0,
            history: Vec::new(),
            bankruptcy_log: Vec::new(),
            rates: Vec::new(),
            loans: Vec::new(),
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// Number of completed periods.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn firms(&self) -> &[FirmState] {
        &self.firms
    }

    /// The most recent period's bank books. `equity` here is the equity
    /// that backed that period's lending; retained profit is applied when
    /// the next period opens.
    pub fn bank(&self) -> &BankState {
        &self.bank
    }

    pub fn history(&self) -> &[PeriodRecord] {
        &self.history
    }

    pub fn bankruptcy_log(&self) -> &[BankruptcyEvent] {
        &self.bankruptcy_log
    }

    /// Current firm capital column, in slot order.
    pub fn capitals(&self) -> Vec<f64> {
        self.firms.iter().map(|f| f.capital).collect()
    }

    /// Loans extended at the most recent period's clearing, in slot order.
    /// These are the pre-replacement books (credit regimes only; empty
    /// before the first period and in the random-growth regime).
    pub fn cleared_loans(&self) -> &[f64] {
        &self.loans
    }

    /// Rates cleared in the most recent period, in slot order (credit
    /// regimes only).
    pub fn cleared_rates(&self) -> &[f64] {
        &self.rates
    }

    /// Executes one period and appends its record.
    ///
    /// Credit regimes run: prudential credit total, proportional
    /// allocation, per-firm clearing/financing, shocks and profits, equity
    /// updates with bankruptcy flags, bank profit, replacement, record.
    /// The random-growth regime skips the bank and credit market entirely.
    pub fn step(&mut self) -> Result<&PeriodRecord> {
        match self.params.economy_mode {
            EconomyMode::RandomGrowth => self.step_random_growth(),
            EconomyMode::Growing | EconomyMode::Stationary => self.step_credit_market(),
        }
    }

    fn step_credit_market(&mut self) -> Result<&PeriodRecord> {
        let period = self.period + 1;
        let ModelParams {
            phi,
            sigma,
            alpha,
            omega,
            info_mode,
            economy_mode,
            price_mode,
            clearing_mode,
            ..
        } = self.params;

        // Retained profit lands when the new period opens (it was computed
        // at the end of the previous one).
        self.bank.equity = update_bank_equity(self.bank.equity, self.bank.profit, economy_mode);
        let equity = self.bank.equity;
        let l_total = total_credit(equity, alpha)
            .map_err(|_| Error::BankFailure { period, equity })?;

        let k_prev: Vec<f64> = self.firms.iter().map(|f| f.capital).collect();
        let supplies = allocate_credit(l_total, &k_prev)?;
        let deposits = l_total - equity;

        self.rates.clear();
        self.loans.clear();
        let mut bad_debt_total = 0.0;
        let mut failures = 0u64;

        for (i, f) in self.firms.iter_mut().enumerate() {
            let a_now = f.equity;
            let a_plan = planning_equity(f, info_mode);
            let rate_equity = match clearing_mode {
                ClearingMode::CurrentEquity => a_now,
                ClearingMode::LaggedEquity => a_plan,
            };
            let rate = crate::bank::clearing_rate(a_plan, rate_equity, supplies[i], sigma);
            let capital = capital_plan(a_plan, rate, sigma);
            let loan = capital - a_now;
            f.capital = capital;
            f.loan = loan;
            f.rate = rate;

            let shock = match price_mode {
                PriceMode::Deterministic => 1.0,
                PriceMode::Stochastic => 2.0 * self.rngs[i].random::<f64>(),
            };
            f.shock = shock;
            let profit = realized_profit(capital, rate, shock, phi);

            let outcome = end_of_period_update(f, profit);
            f.equity_prev = f.equity;
            f.equity = outcome.new_equity;
            if outcome.bankrupt {
                f.alive = false;
                let b = bad_debt(outcome.new_equity);
                bad_debt_total += b;
                failures += 1;
                self.bankruptcy_log.push(BankruptcyEvent {
                    period,
                    firm: i,
                    size: capital,
                    bad_debt: b,
                });
            }
            self.rates.push(rate);
            self.loans.push(loan);
        }

        let profit = bank_profit(
            &self.rates,
            &self.loans,
            deposits,
            equity,
            omega,
            bad_debt_total,
        )?;
        let mean_rate = self.rates.iter().sum::<f64>() / self.rates.len() as f64;
        self.bank = BankState {
            equity,
            credit_total: l_total,
            deposits,
            profit,
            mean_rate,
            bad_debt: bad_debt_total,
        };

        for f in &mut self.firms {
            if f.alive {
                f.age += 1;
            } else {
                *f = FirmState::entrant(&self.params);
            }
        }

        let record = PeriodRecord {
            period,
            bank_equity: equity,
            bank_profit: profit,
            bad_debt: bad_debt_total,
            bankruptcies: failures,
            mean_rate,
            total_capital: self.firms.iter().map(|f| f.capital).sum(),
            total_equity: self.firms.iter().map(|f| f.equity).sum(),
        };
        self.history.push(record);
        self.period = period;
        Ok(self.history.last().unwrap())
    }

    /// The bank-free reduction: at the fixed rate `phi` the planned-capital
    /// profit collapses to `sigma * (u - 1) * A_prev`, a zero-mean
    /// multiplicative increment on lagged equity. Capital stays proportional
    /// to lagged equity (`sigma / phi` times it) for size statistics.
    fn step_random_growth(&mut self) -> Result<&PeriodRecord> {
        let period = self.period + 1;
        let ModelParams {
            phi,
            sigma,
            price_mode,
            entrant_equity,
            ..
        } = self.params;

        let mut bad_debt_total = 0.0;
        let mut failures = 0u64;

        for (i, f) in self.firms.iter_mut().enumerate() {
            let shock = match price_mode {
                PriceMode::Deterministic => 1.0,
                PriceMode::Stochastic => 2.0 * self.rngs[i].random::<f64>(),
            };
            let a_lag = f.equity_prev;
            let profit = sigma * (shock - 1.0) * a_lag;
            let capital = sigma * a_lag / phi;
            f.capital = capital;
            f.loan = 0.0;
            f.rate = phi;
            f.shock = shock;

            let outcome = end_of_period_update(f, profit);
            f.equity_prev = f.equity;
            f.equity = outcome.new_equity;
            if outcome.bankrupt {
                f.alive = false;
                let b = bad_debt(outcome.new_equity);
                bad_debt_total += b;
                failures += 1;
                self.bankruptcy_log.push(BankruptcyEvent {
                    period,
                    firm: i,
                    size: capital,
                    bad_debt: b,
                });
            }
        }

        for f in &mut self.firms {
            if f.alive {
                f.age += 1;
            } else {
                *f = FirmState {
                    equity: entrant_equity,
                    equity_prev: entrant_equity,
                    capital: sigma * entrant_equity / phi,
                    loan: 0.0,
                    rate: phi,
                    shock: 1.0,
                    alive: true,
                    age: 0,
                };
            }
        }

        let record = PeriodRecord {
            period,
            bank_equity: 0.0,
            bank_profit: 0.0,
            bad_debt: bad_debt_total,
            bankruptcies: failures,
            mean_rate: phi,
            total_capital: self.firms.iter().map(|f| f.capital).sum(),
            total_equity: self.firms.iter().map(|f| f.equity).sum(),
        };
        self.history.push(record);
        self.period = period;
        Ok(self.history.last().unwrap())
    }

    fn finish(self, snapshots: Vec<(u64, Vec<f64>)>, terminal: TerminalCondition) -> SimulationRun {
        SimulationRun {
            params: self.params,
            history: self.history,
            snapshots,
            bankruptcy_log: self.bankruptcy_log,
            terminal,
        }
    }
}

/// Snapshot epochs used when the caller does not pick any: three epochs at
/// a quarter, half, and the end of the horizon.
pub fn default_snapshot_periods(horizon: u64) -> Vec<u64> {
    if horizon == 0 {
        return vec![0];
    }
    let mut periods: Vec<u64> = [horizon / 4, horizon / 2, horizon]
        .into_iter()
        .filter(|&p| p > 0)
        .collect();
    periods.dedup();
    periods
}

/// Runs `params.horizon` periods with the default snapshot epochs.
pub fn run(params: &ModelParams) -> Result<SimulationRun> {
    run_with_snapshots(params, &default_snapshot_periods(params.horizon))
}

/// Runs the full horizon, capturing firm-capital snapshots at the given
/// periods (period 0 means the initial state). A bank failure ends the run
/// early but keeps everything produced up to that point.
pub fn run_with_snapshots(params: &ModelParams, snapshot_periods: &[u64]) -> Result<SimulationRun> {
    let mut engine = Engine::new(params.clone())?;
    let mut wanted: Vec<u64> = snapshot_periods.to_vec();
    wanted.sort_unstable();
    wanted.dedup();

    let mut snapshots = Vec::new();
    if wanted.first() == Some(&0) {
        snapshots.push((0, engine.capitals()));
    }

    let mut terminal = TerminalCondition::Completed;
    for _ in 0..engine.params.horizon {
        match engine.step() {
            Ok(record) => {
                let period = record.period;
                if wanted.binary_search(&period).is_ok() {
                    snapshots.push((period, engine.capitals()));
                }
            }
            Err(Error::BankFailure { period, equity }) => {
                terminal = TerminalCondition::BankFailure { period, equity };
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(engine.finish(snapshots, terminal))
}

/// Runs the bank-free random-growth reduction regardless of the economy
/// mode carried by `params`.
pub fn run_random_growth(params: &ModelParams) -> Result<SimulationRun> {
    let params = ModelParams {
        economy_mode: EconomyMode::RandomGrowth,
        ..params.clone()
    };
    run(&params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::solve_equilibrium_rate;
    use crate::params::InfoMode;

    fn small(params: ModelParams) -> ModelParams {
        ModelParams {
            n_firms: 50,
            horizon: 200,
            ..params
        }
    }

    #[test]
    fn same_seed_reproduces_bit_identical_runs() {
        let p = small(ModelParams::default());
        let a = run(&p).unwrap();
        let b = run(&p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn different_seeds_differ_in_stochastic_regimes() {
        let p = small(ModelParams::default());
        let a = run(&p).unwrap();
        let b = run(&ModelParams { seed: 1, ..p }).unwrap();
        assert_ne!(a.history, b.history);
    }

    #[test]
    fn zero_horizon_yields_initial_snapshot_only() {
        let p = ModelParams {
            horizon: 0,
            n_firms: 3,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        assert!(run.history.is_empty());
        assert_eq!(run.snapshots.len(), 1);
        assert_eq!(run.snapshots[0].0, 0);
        assert_eq!(run.snapshots[0].1, vec![100.0, 100.0, 100.0]);
        assert_eq!(run.terminal, TerminalCondition::Completed);
    }

    #[test]
    fn firm_count_is_conserved_every_period() {
        let p = small(ModelParams::default());
        let mut engine = Engine::new(p.clone()).unwrap();
        for _ in 0..p.horizon {
            engine.step().unwrap();
            assert_eq!(engine.firms().len(), p.n_firms);
            assert!(engine.firms().iter().all(|f| f.alive));
        }
    }

    #[test]
    fn perfect_information_firms_never_go_bankrupt() {
        let p = ModelParams {
            info_mode: InfoMode::Perfect,
            n_firms: 200,
            horizon: 300,
            seed: 3,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        assert!(run.bankruptcy_log.is_empty());
        assert!(run.history.iter().all(|r| r.bankruptcies == 0));
    }

    #[test]
    fn imperfect_information_produces_bankruptcies() {
        let p = ModelParams {
            n_firms: 200,
            horizon: 400,
            seed: 5,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        assert!(
            !run.bankruptcy_log.is_empty(),
            "expected failures under lagged planning"
        );
        assert!(run.bankruptcy_log.iter().all(|e| e.bad_debt > 0.0));
    }

    #[test]
    fn representative_agent_tracks_the_analytic_growth_factors() {
        let p = ModelParams {
            n_firms: 1,
            horizon: 200,
            info_mode: InfoMode::Perfect,
            price_mode: PriceMode::Deterministic,
            ..Default::default()
        };
        let mut engine = Engine::new(p.clone()).unwrap();
        let mut prev_firm = p.initial_equity;
        for _ in 0..p.horizon {
            let rec = *engine.step().unwrap();
            let r = rec.mean_rate;
            // the period's profit carries its lending equity to the next
            // period's by exactly the analytic factor
            let bank_factor = 1.0 - p.omega * r + p.omega * r / p.alpha;
            let realized = (rec.bank_equity + rec.bank_profit) / rec.bank_equity;
            assert!(
                (realized - bank_factor).abs() < 1e-9,
                "period {}: bank factor {} vs {}",
                rec.period,
                realized,
                bank_factor
            );
            let firm_factor = 1.0 + p.sigma * (p.phi - r) / r;
            assert!((rec.total_equity / prev_firm - firm_factor).abs() < 1e-9);
            prev_firm = rec.total_equity;
        }
        // record sequence follows the books: equity of period t+1 is equity
        // of period t plus the profit of period t
        let h = engine.history();
        for pair in h.windows(2) {
            assert_eq!(pair[1].bank_equity, pair[0].bank_equity + pair[0].bank_profit);
        }
        // the cleared rate settles on the closed-form equilibrium rate
        let sol = solve_equilibrium_rate(p.phi, p.sigma, p.alpha, p.omega).unwrap();
        let last = h.last().unwrap();
        assert!(
            (last.mean_rate - sol.r_star).abs() < 1e-9,
            "rate {} vs analytic {}",
            last.mean_rate,
            sol.r_star
        );
    }

    #[test]
    fn stationary_regime_pins_bank_equity() {
        let p = ModelParams {
            economy_mode: EconomyMode::Stationary,
            n_firms: 100,
            horizon: 150,
            ..Default::default()
        };
        let e0 = crate::params::initial_bank_equity(&p);
        let run = run(&p).unwrap();
        assert_eq!(run.history.len(), 150);
        assert!(run.history.iter().all(|r| r.bank_equity == e0));
        // profit is still recorded
        assert!(run.history.iter().any(|r| r.bank_profit != 0.0));
    }

    #[test]
    fn zero_initial_loans_fail_the_bank_immediately() {
        let p = ModelParams {
            n_firms: 5,
            initial_equity: 100.0,
            initial_capital: 100.0,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        assert!(run.history.is_empty());
        assert_eq!(
            run.terminal,
            TerminalCondition::BankFailure {
                period: 1,
                equity: 0.0
            }
        );
    }

    #[test]
    fn random_growth_with_deterministic_prices_is_frozen() {
        let p = ModelParams {
            economy_mode: EconomyMode::RandomGrowth,
            price_mode: PriceMode::Deterministic,
            n_firms: 10,
            horizon: 50,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        assert!(run.bankruptcy_log.is_empty());
        for rec in &run.history {
            assert_eq!(rec.total_equity, 10.0 * 20.0);
            assert_eq!(rec.mean_rate, p.phi);
        }
    }

    #[test]
    fn random_growth_entry_keeps_population_and_books() {
        let p = ModelParams {
            economy_mode: EconomyMode::RandomGrowth,
            n_firms: 100,
            horizon: 500,
            seed: 11,
            ..Default::default()
        };
        let run = run_random_growth(&p).unwrap();
        assert!(!run.bankruptcy_log.is_empty());
        assert!(run.bankruptcy_log.iter().all(|e| e.bad_debt > 0.0));
        let last = run.history.last().unwrap();
        assert_eq!(last.period, 500);
    }

    #[test]
    fn default_snapshot_periods_cover_three_epochs() {
        assert_eq!(default_snapshot_periods(1000), vec![250, 500, 1000]);
        assert_eq!(default_snapshot_periods(2), vec![1, 2]);
        assert_eq!(default_snapshot_periods(0), vec![0]);
    }
}

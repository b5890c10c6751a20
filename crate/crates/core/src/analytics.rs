//! Turns raw runs into the model's reported statistics: the closed-form
//! representative-agent solution, heavy-tail and log-normal fits, growth
//! rates, and the bankruptcy/bank-shock synchronization measure.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::state::PeriodRecord;

/// Heavy-tail estimator choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TailMethod {
    /// Least-squares slope of log(rank) against log(size) over the tail.
    RankRegression,
    /// Hill maximum-likelihood estimator over the tail order statistics.
    HillMle,
}

/// Result of a power-law tail fit, `Rank ~ size^(-exponent_mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailFit {
    pub exponent_mu: f64,
    /// Size cutoff above which the fit applies.
    pub tail_start: f64,
    /// Number of tail observations used.
    pub n_tail: usize,
    pub stderr: f64,
    pub method: TailMethod,
}

/// Log-normal fit of a size sample: moments of log-size plus the
/// Kolmogorov-Smirnov distance of the sample against the fitted law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogNormalFit {
    pub mu_log: f64,
    pub sigma_log: f64,
    pub ks_statistic: f64,
}

/// Closed-form balanced-growth solution of the one-firm, no-noise economy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnalyticSolution {
    /// Exact root of `xi r^2 + r - phi = 0`: the rate at which firm and
    /// bank grow at the same per-period rate.
    pub r_star: f64,
    /// First-order approximation `phi (1 - phi xi)`.
    pub r_first_order: f64,
    /// `(omega / sigma) (1/alpha - 1)`.
    pub xi: f64,
    /// Per-period log growth of firm equity at `r_star`.
    pub firm_growth_rate: f64,
    /// Per-period log growth of bank equity at `r_star`.
    pub bank_growth_rate: f64,
}

/// Hill-exponent estimates across several tail cutoffs, with a stability
/// verdict. A genuine power law keeps the same exponent as the cutoff
/// moves; a log-normal body masquerading as a tail drifts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutoffStability {
    /// `(tail_fraction, fitted_mu)` pairs, widest fraction last.
    pub fits: Vec<(f64, f64)>,
    /// Largest fitted exponent divided by the smallest.
    pub max_ratio: f64,
    pub stable: bool,
}

/// Tail fractions probed by [`tail_cutoff_stability`] by default.
pub const STABILITY_FRACTIONS: [f64; 4] = [0.02, 0.05, 0.1, 0.2];

/// Exponent drift (max/min over cutoffs) tolerated before the tail is
/// declared unstable. Synthetic Pareto samples stay within a few percent;
/// log-normal samples drift by a factor well above this.
pub const STABILITY_MAX_RATIO: f64 = 1.3;

/// Head-to-head KS comparison of a fitted log-normal and a fitted Pareto
/// on the same upper tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailComparison {
    /// KS distance of the tail sample against the full-sample log-normal
    /// fit, conditioned on the tail region.
    pub ks_lognormal: f64,
    /// KS distance of the tail sample against a Pareto law with the Hill
    /// exponent and the same cutoff.
    pub ks_pareto: f64,
    pub tail_start: f64,
    pub n_tail: usize,
    pub favors_lognormal: bool,
}

/// Joint series of bankruptcy counts and bank-equity changes, with their
/// zero-lag correlation (counts against equity declines).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BankruptcySynchronization {
    /// `(period, bankruptcy count, relative bank equity change)` per period.
    /// The change is relative (`delta E / previous E`) so that periods of a
    /// growing economy compare like-for-like across its own scale growth.
    pub series: Vec<(u64, u64, f64)>,
    /// Zero-lag Pearson correlation between counts and the negated equity
    /// change; `None` when either series is constant.
    pub peak_correlation: Option<f64>,
}

/// Solves for the interest rate at which the ideal firm and the bank grow
/// at the same exponential rate, and reports both growth rates.
///
/// The limit `xi = 0` (zero margin, or `alpha = 1`) gives `r = phi` with
/// zero growth; the conjugate form below handles it without a branch.
pub fn solve_equilibrium_rate(phi: f64, sigma: f64, alpha: f64, omega: f64) -> Result<AnalyticSolution> {
    if !(phi > 0.0 && phi.is_finite()) {
        return Err(Error::InvalidParams(format!("phi must be positive, got {phi}")));
    }
    if !(sigma > 0.0 && sigma <= 1.0) {
        return Err(Error::InvalidParams(format!("sigma must be in (0, 1], got {sigma}")));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParams(format!("alpha must be in (0, 1], got {alpha}")));
    }
    if !(omega >= 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParams(format!("omega must be non-negative, got {omega}")));
    }

    let xi = (omega / sigma) * (1.0 / alpha - 1.0);
    // r = (-1 + sqrt(1 + 4 phi xi)) / (2 xi), written against cancellation
    let r_star = 2.0 * phi / (1.0 + (1.0 + 4.0 * phi * xi).sqrt());
    let r_first_order = phi * (1.0 - phi * xi);
    let firm_growth_rate = (sigma * (phi - r_star) / r_star).ln_1p();
    let bank_growth_rate = (omega * r_star * (1.0 / alpha - 1.0)).ln_1p();
    Ok(AnalyticSolution {
        r_star,
        r_first_order,
        xi,
        firm_growth_rate,
        bank_growth_rate,
    })
}

/// Sizes sorted descending and paired with ranks 1..n. Ties keep their
/// input order (stable sort), so equal firms rank by index.
pub fn rank_size(sizes: &[f64]) -> Result<Vec<(usize, f64)>> {
    if sizes.is_empty() {
        return Err(Error::InsufficientInput("rank_size requires at least one size".into()));
    }
    if let Some(bad) = sizes.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(Error::Degenerate(format!(
            "rank_size requires positive finite sizes, got {bad}"
        )));
    }
    let mut sorted: Vec<f64> = sizes.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(sorted.into_iter().enumerate().map(|(i, s)| (i + 1, s)).collect())
}

fn tail_count(n: usize, tail_fraction: f64) -> Result<usize> {
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "tail_fraction must be in (0, 1], got {tail_fraction}"
        )));
    }
    Ok(((n as f64 * tail_fraction) as usize).clamp(10, n))
}

/// Ordinary least squares of `y` on `x`; returns `(slope, stderr_slope)`.
fn ols_slope(x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    let n = x.len() as f64;
    let x_mean = x.iter().sum::<f64>() / n;
    let y_mean = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - x_mean).powi(2)).sum();
    if sxx <= 0.0 {
        return Err(Error::Degenerate(
            "regression abscissae are all equal; no slope exists".into(),
        ));
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - x_mean) * (b - y_mean)).sum();
    let slope = sxy / sxx;
    let stderr = if x.len() > 2 {
        let rss: f64 = x
            .iter()
            .zip(y)
            .map(|(a, b)| {
                let fitted = y_mean + slope * (a - x_mean);
                (b - fitted).powi(2)
            })
            .sum();
        (rss / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Ok((slope, stderr))
}

/// Fits the power-law exponent of the upper tail.
///
/// `RankRegression` needs at least 100 observations, `HillMle` at least 50;
/// both use the top `tail_fraction` of the sample (never fewer than 10
/// points). A tail with no size variation is rejected.
pub fn fit_power_tail(sizes: &[f64], method: TailMethod, tail_fraction: f64) -> Result<TailFit> {
    let min_n = match method {
        TailMethod::RankRegression => 100,
        TailMethod::HillMle => 50,
    };
    if sizes.len() < min_n {
        return Err(Error::InsufficientInput(format!(
            "{method:?} requires at least {min_n} sizes, got {}",
            sizes.len()
        )));
    }
    let ranked = rank_size(sizes)?;
    let n_tail = tail_count(ranked.len(), tail_fraction)?;

    match method {
        TailMethod::RankRegression => {
            let log_size: Vec<f64> = ranked[..n_tail].iter().map(|(_, s)| s.ln()).collect();
            let log_rank: Vec<f64> = ranked[..n_tail]
                .iter()
                .map(|(r, _)| (*r as f64).ln())
                .collect();
            let (slope, stderr) = ols_slope(&log_size, &log_rank)?;
            let exponent_mu = -slope;
            if !(exponent_mu > 0.0) {
                return Err(Error::Degenerate(format!(
                    "rank regression produced non-positive exponent {exponent_mu}"
                )));
            }
            Ok(TailFit {
                exponent_mu,
                tail_start: ranked[n_tail - 1].1,
                n_tail,
                stderr,
                method,
            })
        }
        TailMethod::HillMle => {
            // Hill threshold is the order statistic just below the tail.
            let k = n_tail.min(ranked.len() - 1);
            let tail_start = ranked[k].1;
            let sum_log: f64 = ranked[..k].iter().map(|(_, s)| (s / tail_start).ln()).sum();
            if sum_log <= 0.0 {
                return Err(Error::Degenerate(
                    "tail has no size variation; Hill estimator undefined".into(),
                ));
            }
            let exponent_mu = k as f64 / sum_log;
            Ok(TailFit {
                exponent_mu,
                tail_start,
                n_tail: k,
                stderr: exponent_mu / (k as f64).sqrt(),
                method,
            })
        }
    }
}

/// Kolmogorov-Smirnov distance of an ascending sample against `cdf`.
fn ks_distance(ascending: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = ascending.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in ascending.iter().enumerate() {
        let f = cdf(x);
        d = d.max(((i + 1) as f64 / n - f).abs());
        d = d.max((f - i as f64 / n).abs());
    }
    d
}

/// Fits a log-normal law by log-moments and reports the KS distance of the
/// sample against the fitted distribution.
pub fn fit_lognormal(sizes: &[f64]) -> Result<LogNormalFit> {
    if sizes.is_empty() {
        return Err(Error::InsufficientInput("fit_lognormal requires sizes".into()));
    }
    if let Some(bad) = sizes.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(Error::Degenerate(format!(
            "fit_lognormal requires positive finite sizes, got {bad}"
        )));
    }
    if sizes.iter().all(|s| *s == sizes[0]) {
        return Err(Error::Degenerate(
            "all sizes equal; log-normal fit is degenerate".into(),
        ));
    }
    let logs: Vec<f64> = sizes.iter().map(|s| s.ln()).collect();
    let n = logs.len() as f64;
    let mu_log = logs.iter().sum::<f64>() / n;
    let var = logs.iter().map(|l| (l - mu_log).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
    if !(var > 0.0) {
        return Err(Error::Degenerate(
            "sizes carry no log-scale variation; fit is degenerate".into(),
        ));
    }
    let sigma_log = var.sqrt();

    let mut ascending = logs;
    ascending.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let normal = Normal::new(0.0, 1.0).unwrap();
    let ks_statistic = ks_distance(&ascending, |l| normal.cdf((l - mu_log) / sigma_log));
    Ok(LogNormalFit {
        mu_log,
        sigma_log,
        ks_statistic,
    })
}

/// Hill fits across several tail cutoffs; `stable` when the largest and
/// smallest exponents stay within [`STABILITY_MAX_RATIO`] of each other.
pub fn tail_cutoff_stability(
    sizes: &[f64],
    method: TailMethod,
    fractions: &[f64],
) -> Result<CutoffStability> {
    let mut fits = Vec::new();
    for &fraction in fractions {
        let fit = fit_power_tail(sizes, method, fraction)?;
        fits.push((fraction, fit.exponent_mu));
    }
    if fits.len() < 2 {
        return Err(Error::InsufficientInput(
            "stability check needs at least two tail fractions".into(),
        ));
    }
    let max = fits.iter().map(|f| f.1).fold(f64::MIN, f64::max);
    let min = fits.iter().map(|f| f.1).fold(f64::MAX, f64::min);
    let max_ratio = max / min;
    Ok(CutoffStability {
        fits,
        max_ratio,
        stable: max_ratio <= STABILITY_MAX_RATIO,
    })
}

/// Compares a log-normal and a Pareto description of the same upper tail.
///
/// The log-normal is fitted on the full sample and conditioned on the tail
/// region; the Pareto uses the Hill exponent at the same cutoff. Both KS
/// distances are computed on the identical tail sample.
pub fn compare_tail_families(sizes: &[f64], tail_fraction: f64) -> Result<TailComparison> {
    let hill = fit_power_tail(sizes, TailMethod::HillMle, tail_fraction)?;
    let lognormal = fit_lognormal(sizes)?;

    let mut tail: Vec<f64> = sizes
        .iter()
        .copied()
        .filter(|&s| s > hill.tail_start)
        .collect();
    tail.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if tail.len() < 10 {
        return Err(Error::InsufficientInput(format!(
            "tail above {} holds only {} observations",
            hill.tail_start,
            tail.len()
        )));
    }

    let normal = Normal::new(0.0, 1.0).unwrap();
    let z = |x: f64| (x.ln() - lognormal.mu_log) / lognormal.sigma_log;
    let f_cut = normal.cdf(z(hill.tail_start));
    let ks_lognormal = ks_distance(&tail, |x| (normal.cdf(z(x)) - f_cut) / (1.0 - f_cut));

    let mu = hill.exponent_mu;
    let x0 = hill.tail_start;
    let ks_pareto = ks_distance(&tail, |x| 1.0 - (x / x0).powf(-mu));

    Ok(TailComparison {
        ks_lognormal,
        ks_pareto,
        tail_start: x0,
        n_tail: tail.len(),
        favors_lognormal: ks_lognormal < ks_pareto,
    })
}

fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|v| (v - my).powi(2)).sum();
    if sxx <= 0.0 || syy <= 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    Some(sxy / (sxx * syy).sqrt())
}

/// Pairs each period's bankruptcy count with the relative bank-equity
/// change and reports their zero-lag correlation against the decline
/// series (negative changes, counted positively; periods of equity growth
/// contribute zero decline). Needs at least ten periods of history.
///
/// Records carry each period's lending equity, so the change paired with
/// period `t`'s failures is the equity move the bank brought into `t` —
/// the credit-supply shock those firms actually faced.
pub fn bankruptcy_synchronization(history: &[PeriodRecord]) -> Result<BankruptcySynchronization> {
    if history.len() < 10 {
        return Err(Error::InsufficientInput(format!(
            "synchronization needs >= 10 periods, got {}",
            history.len()
        )));
    }
    let mut series = Vec::with_capacity(history.len() - 1);
    for pair in history.windows(2) {
        let delta = if pair[0].bank_equity != 0.0 {
            (pair[1].bank_equity - pair[0].bank_equity) / pair[0].bank_equity
        } else {
            0.0
        };
        series.push((pair[1].period, pair[1].bankruptcies, delta));
    }
    let counts: Vec<f64> = series.iter().map(|(_, c, _)| *c as f64).collect();
    let declines: Vec<f64> = series.iter().map(|(_, _, d)| (-d).max(0.0)).collect();
    let peak_correlation = pearson(&counts, &declines);
    Ok(BankruptcySynchronization {
        series,
        peak_correlation,
    })
}

/// Per-period log growth: least-squares slope of `ln(series)` on the
/// period index. All values must be positive.
pub fn growth_rate(series: &[f64]) -> Result<f64> {
    if series.len() < 2 {
        return Err(Error::InsufficientInput(format!(
            "growth_rate needs >= 2 points, got {}",
            series.len()
        )));
    }
    if let Some(bad) = series.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::Degenerate(format!(
            "growth_rate requires positive finite values, got {bad}"
        )));
    }
    let x: Vec<f64> = (0..series.len()).map(|t| t as f64).collect();
    let y: Vec<f64> = series.iter().map(|v| v.ln()).collect();
    let (slope, _) = ols_slope(&x, &y)?;
    Ok(slope)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilibrium_rate_at_paper_defaults() {
        let sol = solve_equilibrium_rate(0.1, 0.5, 0.08, 0.002).unwrap();
        // xi = (omega/sigma)(1/alpha - 1) = 0.004 * 11.5
        assert!((sol.xi - 0.046).abs() < 1e-12);
        // exact root sits at 0.0995 to four significant figures
        assert!((sol.r_star - 0.0995).abs() / 0.0995 < 5e-4);
        // first-order approximation is within 1e-5 of the exact root
        assert!((sol.r_star - sol.r_first_order).abs() < 1e-5);
        assert!((sol.r_first_order - 0.09954).abs() < 1e-9);
    }

    #[test]
    fn equilibrium_growth_rates_are_equal_by_construction() {
        for (phi, sigma, alpha, omega) in [
            (0.1, 0.5, 0.08, 0.002),
            (0.2, 1.0, 0.5, 0.01),
            (0.05, 0.3, 0.12, 0.0005),
        ] {
            let sol = solve_equilibrium_rate(phi, sigma, alpha, omega).unwrap();
            assert!(
                (sol.firm_growth_rate - sol.bank_growth_rate).abs() < 1e-12,
                "firm {} vs bank {}",
                sol.firm_growth_rate,
                sol.bank_growth_rate
            );
        }
    }

    #[test]
    fn zero_margin_degenerates_to_phi() {
        let sol = solve_equilibrium_rate(0.1, 0.5, 0.08, 0.0).unwrap();
        assert_eq!(sol.xi, 0.0);
        assert_eq!(sol.r_star, 0.1);
        assert_eq!(sol.firm_growth_rate, 0.0);
        assert_eq!(sol.bank_growth_rate, 0.0);
    }

    #[test]
    fn rank_size_sorts_and_ranks() {
        let ranked = rank_size(&[3.0, 1.0, 2.0]).unwrap();
        assert_eq!(ranked, vec![(1, 3.0), (2, 2.0), (3, 1.0)]);
        assert_eq!(rank_size(&[5.0]).unwrap(), vec![(1, 5.0)]);
        assert!(rank_size(&[1.0, -2.0]).is_err());
        assert!(rank_size(&[]).is_err());
    }

    #[test]
    fn rank_size_is_monotone_with_complete_ranks() {
        let sizes: Vec<f64> = (1..=500).map(|i| ((i * 7919) % 1000 + 1) as f64).collect();
        let ranked = rank_size(&sizes).unwrap();
        for (i, (rank, _)) in ranked.iter().enumerate() {
            assert_eq!(*rank, i + 1);
        }
        for pair in ranked.windows(2) {
            assert!(pair[0].1 >= pair[1].1);
        }
    }

    #[test]
    fn exact_zipf_gives_unit_exponent_both_methods() {
        let sizes: Vec<f64> = (1..=10_000).map(|i| 1e6 / i as f64).collect();
        let rr = fit_power_tail(&sizes, TailMethod::RankRegression, 1.0).unwrap();
        assert!(
            (rr.exponent_mu - 1.0).abs() < 0.01,
            "rank regression mu = {}",
            rr.exponent_mu
        );
        let hill = fit_power_tail(&sizes, TailMethod::HillMle, 1.0).unwrap();
        assert!(
            (hill.exponent_mu - 1.0).abs() < 0.01,
            "hill mu = {}",
            hill.exponent_mu
        );
    }

    #[test]
    fn degenerate_tail_is_rejected() {
        let sizes = vec![7.0; 200];
        assert!(fit_power_tail(&sizes, TailMethod::RankRegression, 0.5).is_err());
        assert!(fit_power_tail(&sizes, TailMethod::HillMle, 0.5).is_err());
    }

    #[test]
    fn lognormal_rejects_degenerate_samples() {
        assert!(fit_lognormal(&[4.2; 50]).is_err());
        assert!(fit_lognormal(&[]).is_err());
    }

    #[test]
    fn growth_rate_examples() {
        let geometric: Vec<f64> = (0..40).map(|t| 3.0 * 1.05f64.powi(t)).collect();
        let g = growth_rate(&geometric).unwrap();
        assert!((g - 1.05f64.ln()).abs() < 1e-12);

        let constant = vec![2.0; 30];
        assert!(growth_rate(&constant).unwrap().abs() < 1e-15);

        assert!(growth_rate(&[1.0, -1.0]).is_err());
        assert!(growth_rate(&[1.0]).is_err());
    }

    fn record(period: u64, bankruptcies: u64, bank_equity: f64) -> PeriodRecord {
        PeriodRecord {
            period,
            bank_equity,
            bank_profit: 0.0,
            bad_debt: 0.0,
            bankruptcies,
            mean_rate: 0.1,
            total_capital: 1.0,
            total_equity: 1.0,
        }
    }

    #[test]
    fn synchronization_of_constructed_spikes_is_perfect() {
        // counts spike exactly when equity drops
        let mut history = Vec::new();
        let mut e = 100.0;
        for t in 0..40u64 {
            let spike = t % 7 == 3;
            e += if spike { -5.0 } else { 1.0 };
            history.push(record(t, if spike { 10 } else { 0 }, e));
        }
        let sync = bankruptcy_synchronization(&history).unwrap();
        let corr = sync.peak_correlation.unwrap();
        assert!(corr > 0.99, "corr = {corr}");
    }

    #[test]
    fn synchronization_of_constant_series_is_undefined() {
        let history: Vec<PeriodRecord> = (0..20).map(|t| record(t, 0, 50.0)).collect();
        let sync = bankruptcy_synchronization(&history).unwrap();
        assert_eq!(sync.peak_correlation, None);
    }

    #[test]
    fn synchronization_needs_ten_periods() {
        let history: Vec<PeriodRecord> = (0..5).map(|t| record(t, 1, t as f64)).collect();
        assert!(bankruptcy_synchronization(&history).is_err());
    }
}

//! Temporary calibration probe (removed before release).

use firmbank_core::*;

fn hill(sizes: &[f64]) -> String {
    match fit_power_tail(sizes, TailMethod::HillMle, 0.1) {
        Ok(f) => format!("mu={:.3}+-{:.3} x0={:.3e}", f.exponent_mu, f.stderr, f.tail_start),
        Err(e) => format!("err: {e}"),
    }
}

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "all".into());

    if which == "rep" || which == "all" {
        println!("== representative agent ==");
        let p = ModelParams {
            n_firms: 1,
            horizon: 500,
            info_mode: InfoMode::Perfect,
            price_mode: PriceMode::Deterministic,
            ..Default::default()
        };
        let run = run(&p).unwrap();
        let sol = solve_equilibrium_rate(p.phi, p.sigma, p.alpha, p.omega).unwrap();
        let firm_series: Vec<f64> = run.history.iter().map(|r| r.total_equity).collect();
        let bank_series: Vec<f64> = run.history.iter().map(|r| r.bank_equity).collect();
        let gf = growth_rate(&firm_series).unwrap();
        let gb = growth_rate(&bank_series).unwrap();
        println!("analytic: r*={:.12} firm={:.12} bank={:.12}", sol.r_star, sol.firm_growth_rate, sol.bank_growth_rate);
        println!("measured: firm={:.12} bank={:.12}", gf, gb);
        println!("diff firm={:.3e} bank={:.3e} firm-bank={:.3e}", (gf-sol.firm_growth_rate).abs(), (gb-sol.bank_growth_rate).abs(), (gf-gb).abs());
    }

    if which == "perfect" || which == "all" {
        println!("== perfect growing N=10000 ==");
        let p = ModelParams {
            n_firms: 10_000,
            horizon: 1_000,
            info_mode: InfoMode::Perfect,
            seed: 1,
            ..Default::default()
        };
        let t0 = std::time::Instant::now();
        let run = run_with_snapshots(&p, &[100, 250, 500, 1000]).unwrap();
        println!("elapsed {:?} terminal {:?} failures {}", t0.elapsed(), run.terminal, run.bankruptcy_log.len());
        for t in [0usize, 99, 249, 499, 749, 999] {
            if let Some(r) = run.history.get(t) {
                println!("  t={} E={:.4e} mean_r={:.5}", r.period, r.bank_equity, r.mean_rate);
            }
        }
        for (period, sizes) in &run.snapshots {
            let ln = fit_lognormal(sizes).unwrap();
            let stab = tail_cutoff_stability(sizes, TailMethod::HillMle, &STABILITY_FRACTIONS);
            let cmp = compare_tail_families(sizes, 0.1);
            println!(
                "  snap {}: lognorm ks={:.4} (mu={:.2},sig={:.2}) | stability {:?} | cmp {:?}",
                period,
                ln.ks_statistic,
                ln.mu_log,
                ln.sigma_log,
                stab.map(|s| (s.max_ratio, s.stable)),
                cmp.map(|c| (c.ks_lognormal, c.ks_pareto, c.favors_lognormal))
            );
        }
    }

    if which == "imperfect" || which == "all" {
        println!("== imperfect growing N=10000, horizon 400 ==");
        for seed in [1u64, 2, 3, 4, 5, 42] {
            let p = ModelParams {
                n_firms: 10_000,
                horizon: 400,
                seed,
                ..Default::default()
            };
            let t0 = std::time::Instant::now();
            let run = run_with_snapshots(&p, &[100, 250, 400]).unwrap();
            println!("seed {} elapsed {:?} terminal {:?} failures {}", seed, t0.elapsed(), run.terminal, run.bankruptcy_log.len());
            let counts: Vec<f64> = run.history.iter().map(|r| r.bankruptcies as f64).collect();
            let mean = counts.iter().sum::<f64>() / counts.len() as f64;
            let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / counts.len() as f64;
            println!("  counts: mean={:.3} var={:.3} dispersion={:.2}", mean, var, var / mean);
            for (period, sizes) in &run.snapshots {
                println!("  snap {}: hill {}", period, hill(sizes));
            }
            let sync = bankruptcy_synchronization(&run.history).unwrap();
            let obs = sync.peak_correlation.unwrap();
            // permutation null on the counts
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(999);
            let counts_u: Vec<u64> = run.history.iter().map(|r| r.bankruptcies).collect();
            let declines: Vec<f64> = sync.series.iter().map(|(_, _, d)| -d).collect();
            let mut null = Vec::new();
            for _ in 0..999 {
                let mut c = counts_u[1..].iter().map(|&x| x as f64).collect::<Vec<_>>();
                for i in (1..c.len()).rev() {
                    let j = (rng.random::<f64>() * (i + 1) as f64) as usize;
                    c.swap(i, j);
                }
                let mx = c.iter().sum::<f64>() / c.len() as f64;
                let my = declines.iter().sum::<f64>() / declines.len() as f64;
                let sxx: f64 = c.iter().map(|v| (v - mx).powi(2)).sum();
                let syy: f64 = declines.iter().map(|v| (v - my).powi(2)).sum();
                let sxy: f64 = c.iter().zip(&declines).map(|(a, b)| (a - mx) * (b - my)).sum();
                null.push(sxy / (sxx * syy).sqrt());
            }
            null.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let p95 = null[(null.len() as f64 * 0.95) as usize];
            println!("  sync corr = {:.4}, permutation p95 = {:.4}, beats = {}", obs, p95, obs > p95);
        }
    }

    if which == "stationary" || which == "all" {
        println!("== stationary imperfect N=10000 ==");
        let p = ModelParams {
            n_firms: 10_000,
            horizon: 20_000,
            economy_mode: EconomyMode::Stationary,
            seed: 1,
            ..Default::default()
        };
        let t0 = std::time::Instant::now();
        let run = run_with_snapshots(&p, &[2_000, 5_000, 10_000, 15_000, 20_000]).unwrap();
        println!("elapsed {:?} terminal {:?} failures {}", t0.elapsed(), run.terminal, run.bankruptcy_log.len());
        for (period, sizes) in &run.snapshots {
            println!("  snap {}: hill {}", period, hill(sizes));
        }
    }

    if which == "rgm" || which == "all" {
        println!("== random growth N=10000 ==");
        let p = ModelParams {
            n_firms: 10_000,
            horizon: 20_000,
            seed: 1,
            ..Default::default()
        };
        let t0 = std::time::Instant::now();
        let run = {
            let p = ModelParams { economy_mode: EconomyMode::RandomGrowth, ..p };
            run_with_snapshots(&p, &[2_000, 5_000, 10_000, 15_000, 20_000]).unwrap()
        };
        println!("elapsed {:?} failures {}", t0.elapsed(), run.bankruptcy_log.len());
        for (period, sizes) in &run.snapshots {
            println!("  snap {}: hill {}", period, hill(sizes));
        }
        // increment statistic over the last 5000 periods
        let n = run.params.n_firms as f64;
        let ent = run.params.entrant_equity;
        let hist = &run.history;
        let mut xs = Vec::new();
        for w in hist.windows(2).skip(hist.len() - 5001) {
            let d = w[1].total_equity - w[0].total_equity;
            let x = (d - w[1].bankruptcies as f64 * ent - w[1].bad_debt) / n;
            xs.push(x);
        }
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() as f64 - 1.0)).sqrt();
        let se = sd / (xs.len() as f64).sqrt();
        println!("  increment mean={:.4e} se={:.4e} t={:.2}", mean, se, mean / se);
    }
}

use firmbank_core::*;

fn main() {
    // stationary mean equity at defaults, then mu at entrant = that mean
    for entrant in [20.0f64, 25.0, 28.0, 30.0, 32.0, 35.0] {
        let p = ModelParams { n_firms: 10_000, horizon: 30_000, economy_mode: EconomyMode::Stationary, seed: 5, entrant_equity: entrant, ..Default::default() };
        let run = run_with_snapshots(&p, &[25_000, 30_000]).unwrap();
        let late: Vec<&PeriodRecord> = run.history.iter().filter(|r| r.period > 20_000).collect();
        let mean_a: f64 = late.iter().map(|r| r.total_equity).sum::<f64>() / late.len() as f64 / 10_000.0;
        let pooled: Vec<f64> = run.snapshots.iter().flat_map(|(_, s)| s.iter().copied()).collect();
        let h05 = fit_power_tail(&pooled, TailMethod::HillMle, 0.05).unwrap();
        let h10 = fit_power_tail(&pooled, TailMethod::HillMle, 0.1).unwrap();
        println!("entrant {entrant}: stationary mean A = {mean_a:.1}, pooled mu(5%) = {:.2}+-{:.2}, mu(10%) = {:.2}",
            h05.exponent_mu, h05.stderr, h10.exponent_mu);
    }
}

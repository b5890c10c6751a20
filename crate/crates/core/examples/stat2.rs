use firmbank_core::*;

fn main() {
    let n_firms: usize = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(10_000);
    let horizon: u64 = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(20_000);
    let p = ModelParams { n_firms, horizon, economy_mode: EconomyMode::Stationary, seed: 1, ..Default::default() };
    let t0 = std::time::Instant::now();
    let run = run_with_snapshots(&p, &[horizon/2, horizon]).unwrap();
    println!("N={n_firms} horizon={horizon} elapsed {:?} terminal {:?}", t0.elapsed(), run.terminal);
    for (per, sizes) in &run.snapshots {
        println!("snapshot {per}:");
        for frac in [0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5] {
            let h = fit_power_tail(sizes, TailMethod::HillMle, frac);
            let r = fit_power_tail(sizes, TailMethod::RankRegression, frac);
            println!("  frac {:>5}: hill {} | rank {}", frac,
                h.map(|f| format!("{:.3}+-{:.3} (k={})", f.exponent_mu, f.stderr, f.n_tail)).unwrap_or_else(|e| e.to_string()),
                r.map(|f| format!("{:.3}+-{:.3}", f.exponent_mu, f.stderr)).unwrap_or_else(|e| e.to_string()));
        }
    }
}

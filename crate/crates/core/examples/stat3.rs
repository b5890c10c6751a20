use firmbank_core::*;

fn main() {
    let horizon: u64 = 80_000;
    for seed in [1u64, 2, 3] {
        let p = ModelParams { n_firms: 10_000, horizon, economy_mode: EconomyMode::Stationary, seed, ..Default::default() };
        let t0 = std::time::Instant::now();
        let snaps: Vec<u64> = (1..=8).map(|i| i * 10_000).collect();
        let run = run_with_snapshots(&p, &snaps).unwrap();
        print!("seed {seed} ({:?}):", t0.elapsed());
        for (per, sizes) in &run.snapshots {
            let h = fit_power_tail(sizes, TailMethod::HillMle, 0.05).unwrap();
            print!("  {}k:{:.2}", per / 1000, h.exponent_mu);
        }
        println!();
        // pooled late-epoch sample (t >= 40000)
        let pooled: Vec<f64> = run.snapshots.iter().filter(|(p, _)| *p >= 40_000)
            .flat_map(|(_, s)| s.iter().copied()).collect();
        for frac in [0.02, 0.05, 0.1] {
            let h = fit_power_tail(&pooled, TailMethod::HillMle, frac).unwrap();
            let r = fit_power_tail(&pooled, TailMethod::RankRegression, frac).unwrap();
            println!("   pooled(n={}) frac {}: hill {:.3}+-{:.3} rank {:.3}", pooled.len(), frac, h.exponent_mu, h.stderr, r.exponent_mu);
        }
    }
}

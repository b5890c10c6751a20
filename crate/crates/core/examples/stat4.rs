use firmbank_core::*;

fn main() {
    let mode = std::env::args().nth(1).unwrap_or_else(|| "big".into());
    if mode == "big" {
        let p = ModelParams { n_firms: 100_000, horizon: 30_000, economy_mode: EconomyMode::Stationary, seed: 1, ..Default::default() };
        let t0 = std::time::Instant::now();
        let run = run_with_snapshots(&p, &[10_000, 20_000, 30_000]).unwrap();
        println!("N=1e5 elapsed {:?}", t0.elapsed());
        for (per, sizes) in &run.snapshots {
            for frac in [0.02, 0.05, 0.1] {
                let h = fit_power_tail(sizes, TailMethod::HillMle, frac).unwrap();
                println!("  {per} frac {frac}: hill {:.3}+-{:.3}", h.exponent_mu, h.stderr);
            }
        }
    }
    if mode == "entrant" {
        for entrant in [2.0f64, 5.0, 10.0, 20.0, 40.0] {
            let p = ModelParams { n_firms: 10_000, horizon: 30_000, economy_mode: EconomyMode::Stationary, seed: 1, entrant_equity: entrant, ..Default::default() };
            let run = run_with_snapshots(&p, &[20_000, 30_000]).unwrap();
            print!("entrant {entrant}: ");
            for (per, sizes) in &run.snapshots {
                let h = fit_power_tail(sizes, TailMethod::HillMle, 0.05).unwrap();
                print!(" mu({}k)={:.2}", per / 1000, h.exponent_mu);
            }
            let fails: u64 = run.history.iter().map(|r| r.bankruptcies).sum();
            println!("  (failures {fails})");
        }
    }
}

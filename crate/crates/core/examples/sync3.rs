use firmbank_core::*;
use rand::{Rng, SeedableRng};

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|v| (v - my).powi(2)).sum();
    if sxx <= 0.0 || syy <= 0.0 { return f64::NAN; }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    sxy / (sxx * syy).sqrt()
}

fn sync_stats(run: &SimulationRun, seed: u64) {
    let sync = bankruptcy_synchronization(&run.history).unwrap();
    let obs = sync.peak_correlation.unwrap();
    let counts: Vec<f64> = sync.series.iter().map(|(_, c, _)| *c as f64).collect();
    let declines: Vec<f64> = sync.series.iter().map(|(_, _, d)| -d).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1234);
    let mut null = Vec::new();
    for _ in 0..999 {
        let mut c = counts.clone();
        for i in (1..c.len()).rev() {
            let j = (rng.random::<f64>() * (i + 1) as f64) as usize;
            c.swap(i, j);
        }
        null.push(pearson(&c, &declines));
    }
    null.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let p95 = null[(null.len() as f64 * 0.95) as usize];
    let mean = counts.iter().sum::<f64>() / counts.len() as f64;
    let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / counts.len() as f64;
    let fails: u64 = run.history.iter().map(|r| r.bankruptcies).sum();
    println!("seed {seed}: terminal {:?} len {} fails {} disp {:.1} | corr {:+.4} p95 {:+.4} beats {}",
        run.terminal, run.history.len(), fails, var/mean, obs, p95, obs > p95);
}

fn main() {
    let mode = std::env::args().nth(1).unwrap_or_else(|| "death".into());
    if mode == "death" {
        println!("== N=1e4, horizon 1200 (into terminal cascade) ==");
        for seed in [1u64, 2, 3, 4, 5, 42] {
            let p = ModelParams { n_firms: 10_000, horizon: 1_200, seed, ..Default::default() };
            let run = run_with_snapshots(&p, &[100, 250]).unwrap();
            sync_stats(&run, seed);
        }
    }
    if mode == "big" {
        println!("== N=1e5, horizon 1000 (paper scale) ==");
        for seed in [1u64, 2] {
            let t0 = std::time::Instant::now();
            let p = ModelParams { n_firms: 100_000, horizon: 1_000, seed, ..Default::default() };
            let run = run_with_snapshots(&p, &[100, 250, 500, 1000]).unwrap();
            println!("elapsed {:?}", t0.elapsed());
            sync_stats(&run, seed);
            for (period, sizes) in &run.snapshots {
                match fit_power_tail(sizes, TailMethod::HillMle, 0.1) {
                    Ok(f) => println!("  snap {}: mu={:.3}+-{:.3}", period, f.exponent_mu, f.stderr),
                    Err(e) => println!("  snap {}: {e}", period),
                }
            }
        }
    }
}

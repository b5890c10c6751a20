use firmbank_core::*;
use rand::{Rng, SeedableRng};

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|v| (v - my).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    sxy / (sxx * syy).sqrt()
}

fn main() {
    for horizon in [600u64, 800] {
        println!("== horizon {horizon} ==");
        for seed in [1u64, 2, 3, 4, 5, 42] {
            let p = ModelParams { n_firms: 10_000, horizon, seed, ..Default::default() };
            let run = run_with_snapshots(&p, &[100, 250]).unwrap();
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
            let counts_total: u64 = run.history.iter().map(|r| r.bankruptcies).sum();
            let mean = counts.iter().sum::<f64>() / counts.len() as f64;
            let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / counts.len() as f64;
            println!("seed {seed}: terminal {:?} len {} fails {} disp {:.1} | corr {:+.4} p95 {:+.4} beats {}",
                run.terminal, run.history.len(), counts_total, var/mean, obs, p95, obs > p95);
        }
    }
}

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

fn beats_null(counts: &[f64], y: &[f64], nseed: u64) -> (f64, f64) {
    let obs = pearson(counts, y);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(nseed);
    let mut null = Vec::new();
    for _ in 0..999 {
        let mut c = counts.to_vec();
        for i in (1..c.len()).rev() {
            let j = (rng.random::<f64>() * (i + 1) as f64) as usize;
            c.swap(i, j);
        }
        null.push(pearson(&c, y));
    }
    null.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (obs, null[(null.len() as f64 * 0.95) as usize])
}

fn main() {
    for horizon in [400u64, 1200] {
        println!("== horizon {horizon} ==");
        for seed in [1u64, 2, 3, 4, 5, 42] {
            let p = ModelParams { n_firms: 10_000, horizon, seed, ..Default::default() };
            let run = run(&p).unwrap();
            let h = &run.history;
            let counts: Vec<f64> = h[1..].iter().map(|r| r.bankruptcies as f64).collect();
            // clipped declines, end-of-period records (delta_t = profit_t)
            let clip: Vec<f64> = h.windows(2)
                .map(|w| (-(w[1].bank_equity - w[0].bank_equity) / w[0].bank_equity).max(0.0))
                .collect();
            let (obs, p95) = beats_null(&counts, &clip, 777);
            print!("seed {seed}: clipped corr {obs:+.3} p95 {p95:+.3} beats {}  |", obs > p95);
            // lending-equity convention: delta at t = profit_{t-1}; count_t vs clipped decline
            let clip_lag: Vec<f64> = clip[..clip.len()-1].to_vec();
            let (obs2, p952) = beats_null(&counts[1..], &clip_lag, 778);
            println!("  lendingE clipped {obs2:+.3} p95 {p952:+.3} beats {}", obs2 > p952);
        }
    }
}

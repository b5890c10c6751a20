use firmbank_core::*;

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

fn main() {
    for seed in [1u64, 2, 3, 4, 5, 42] {
        let p = ModelParams { n_firms: 10_000, horizon: 1_200, seed, ..Default::default() };
        let run = run(&p).unwrap();
        let sync = bankruptcy_synchronization(&run.history).unwrap();
        let counts: Vec<f64> = sync.series.iter().map(|(_, c, _)| *c as f64).collect();
        let declines: Vec<f64> = sync.series.iter().map(|(_, _, d)| -d).collect();
        let n = counts.len();
        // lag k > 0: decline LEADS counts by k periods (count_t vs decline_{t-k})
        print!("seed {seed}:");
        for k in 0..4usize {
            let c = pearson(&counts[k..], &declines[..n - k]);
            print!("  declead{k}={c:+.3}");
        }
        // counts lead declines
        for k in 1..3usize {
            let c = pearson(&counts[..n - k], &declines[k..]);
            print!("  cntlead{k}={c:+.3}");
        }
        println!();
    }
}

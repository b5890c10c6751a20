//! temp: decompose bank profit around failure spikes
use firmbank_core::*;

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
    let p = ModelParams { n_firms: 10_000, horizon: 400, seed: 1, ..Default::default() };
    let run = run(&p).unwrap();
    let h = &run.history;
    // components per period (relative to the period's lending equity E_t):
    // margin_rel = (profit + bad_debt)/E_prev_end ; bad_rel = bad_debt/E ; count
    let mut counts = Vec::new();
    let mut bad_rel = Vec::new();
    let mut margin_rel = Vec::new();
    let mut decl_rel = Vec::new();
    let mut mean_rates = Vec::new();
    for w in h.windows(2) {
        let e_prev = w[0].bank_equity;
        counts.push(w[1].bankruptcies as f64);
        bad_rel.push(w[1].bad_debt / e_prev);
        margin_rel.push((w[1].bank_profit + w[1].bad_debt) / e_prev);
        decl_rel.push(-(w[1].bank_equity - e_prev) / e_prev);
        mean_rates.push(w[1].mean_rate);
    }
    println!("corr(count, decline_rel)   = {:+.4}", pearson(&counts, &decl_rel));
    println!("corr(count, bad_rel)       = {:+.4}", pearson(&counts, &bad_rel));
    println!("corr(count, margin_rel)    = {:+.4}", pearson(&counts, &margin_rel));
    println!("corr(bad_rel, decline_rel) = {:+.4}", pearson(&bad_rel, &decl_rel));
    println!("corr(count, mean_rate)     = {:+.4}", pearson(&counts, &mean_rates));
    // top-10 decline periods vs their counts / bad debts
    let mut idx: Vec<usize> = (0..decl_rel.len()).collect();
    idx.sort_by(|&a, &b| decl_rel[b].partial_cmp(&decl_rel[a]).unwrap());
    println!("top decline periods:");
    for &i in idx.iter().take(8) {
        println!("  t={} decl={:+.4} count={} bad_rel={:.4} margin_rel={:.4} r={:.4}",
            h[i+1].period, decl_rel[i], counts[i], bad_rel[i], margin_rel[i], mean_rates[i]);
    }
    let mean_c = counts.iter().sum::<f64>()/counts.len() as f64;
    println!("count mean={:.1}; margin_rel mean={:.5} sd={:.5}; bad_rel mean={:.5} sd={:.5}",
        mean_c,
        margin_rel.iter().sum::<f64>()/margin_rel.len() as f64,
        (margin_rel.iter().map(|x| (x - margin_rel.iter().sum::<f64>()/margin_rel.len() as f64).powi(2)).sum::<f64>()/margin_rel.len() as f64).sqrt(),
        bad_rel.iter().sum::<f64>()/bad_rel.len() as f64,
        (bad_rel.iter().map(|x| (x - bad_rel.iter().sum::<f64>()/bad_rel.len() as f64).powi(2)).sum::<f64>()/bad_rel.len() as f64).sqrt());
}

use firmbank_core::*;

fn main() {
    for seed in [2u64, 4] {
        let p = ModelParams { n_firms: 10_000, horizon: 1_200, seed, ..Default::default() };
        let run = run(&p).unwrap();
        let h = &run.history;
        println!("== seed {seed}: {:?}, {} periods ==", run.terminal, h.len());
        let start = h.len().saturating_sub(14);
        let mut prev_e = h[start.saturating_sub(1)].bank_equity;
        for r in &h[start..] {
            let decl = -(r.bank_equity - prev_e) / prev_e;
            println!("  t={} count={:<6} bad/E={:<9.4} decl={:+.4} E={:.3e}",
                r.period, r.bankruptcies, r.bad_debt / prev_e, decl, r.bank_equity);
            prev_e = r.bank_equity;
        }
    }
}

//! Runs a seeded campaign for every criterion and prints the summaries.
//!
//! `cargo run --release --example fuzz_campaign -- [trials] [seed]`

use std::time::Instant;

use core_inverse::campaign::{run_campaign, CampaignConfig, Theorem};

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    for theorem in Theorem::ALL {
        let config = CampaignConfig::new(theorem, seed, trials).with_dims(1, 4);
        let start = Instant::now();
        let report = run_campaign(&config).expect("valid config");
        let s = &report.summary;
        println!(
            "{theorem:9} exists={:4} not_exists={:4} violations={} resamples={} checks={} ({:.1?})",
            s.exists_agree,
            s.not_exists_agree,
            s.contract_violations,
            s.resamples,
            s.checks,
            start.elapsed()
        );
        if let Some(rate) = s.epsilon_zero_rate {
            println!("          ε = 0 in {:.0}% of trials", rate * 100.0);
        }
        for t in report.trials.iter().filter(|t| t.detail.is_some()) {
            println!("  trial {}: {}", t.trial, t.detail.as_deref().unwrap_or(""));
        }
    }
}

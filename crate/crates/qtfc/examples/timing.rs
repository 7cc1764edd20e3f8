//! Scratch benchmark: run the verification catalog at a given tier and
//! print per-check runtimes.

use qtfc::verify::{run_verify, VerifyOptions};

fn main() {
    let tier: u8 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let reports = run_verify(&VerifyOptions {
        tier,
        group: std::env::args().nth(2),
        m: None,
    });
    for r in &reports {
        println!("{:>9} ms  {:6}  tier{}  {}", r.runtime_ms, r.status.to_string(), r.tier, r.id);
    }
}

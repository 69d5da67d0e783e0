//! The identity catalog and the sweep engine: run a few entries over prime
//! ranges and inspect the reports, including an audit-class entry whose
//! discrepancies are reported without failing the run.
//!
//! ```bash
//! cargo run --release -p legendre-products --example verify_sweep
//! ```

use legendre_products::{catalog, verify, EntryClass, VerifyOptions};

fn main() {
    println!("catalog ({} entries):", catalog().len());
    for e in catalog() {
        let class = match e.class {
            EntryClass::Asserted => "asserted",
            EntryClass::Audit => "audit",
        };
        println!("  {:14} [{class:8}] {}", e.id, e.description);
    }

    let opts = VerifyOptions::default();

    println!("\nsweeping a few asserted entries:");
    for (id, hi) in [("T2.1", 500), ("T4.3", 5000), ("C4.7", 5000), ("L3.5", 2000)] {
        let r = verify(id, 5, hi, &opts).unwrap();
        println!(
            "  {:6} over {}: {} ({} checked, {} skipped, {:.2}s)",
            r.theorem,
            r.range,
            r.status,
            r.checked,
            r.skipped,
            r.elapsed.as_secs_f64()
        );
        assert!(r.passed());
    }

    // narrower parameter ranges via options
    let narrow = VerifyOptions { s_range: Some((2, 4)), ..Default::default() };
    let r = verify("T4.2-plus", 5, 2000, &narrow).unwrap();
    println!("  T4.2-plus with s in [2,4] over {}: {}", r.range, r.status);

    // an audit entry: the claim is checked exactly as recorded, and the sweep
    // lists where it disagrees with enumeration instead of failing
    let r = verify("R3.5", 5, 400, &opts).unwrap();
    println!(
        "\naudit entry {} over {}: status {}, {} discrepancies (fatal: {})",
        r.theorem,
        r.range,
        r.status,
        r.failures.len(),
        r.fatal()
    );
    for f in r.failures.iter().take(5) {
        println!("  p = {:3}: recorded {} but enumeration gives {}", f.p, f.claimed, f.computed);
    }

    // reports serialize to JSON (stable across worker counts) and CSV
    let r = verify("L4.5", 5, 60, &opts).unwrap();
    println!("\nJSON report:\n{}", r.to_json());
}

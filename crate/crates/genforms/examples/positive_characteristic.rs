//! Small-characteristic behavior: over F_2 every quadric squares to zero
//! modulo the variable squares, which forces the variable-power
//! substitution away from the conjectured series once n >= 6.
//!
//! Run with: cargo run --example positive_characteristic

use genforms::harness::{check, CheckId, CheckParams, CheckSpec};

fn poschar(n: u32, r: u32, p: u64) -> genforms::harness::VerificationReport {
    check(&CheckSpec {
        check_id: CheckId::Poschar,
        params: CheckParams {
            n: Some(n),
            d: Some(2),
            r: Some(r),
            prime: Some(p),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap()
}

fn main() {
    println!("x_i^2 plus generic quadrics over F_2, against the conjectured series:\n");
    for (n, r) in [(4u32, 5u32), (5, 6), (6, 7), (7, 8)] {
        let report = poschar(n, r, 2);
        let note = match report.verdict {
            genforms::harness::Verdict::Match => "",
            _ => "  <- f^2 = 0 kills maximal rank here",
        };
        println!("  n = {n}, r = {r}: {:?}{note}", report.verdict);
        if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.computed {
            println!("      engine    {s}");
        }
        if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.reference {
            println!("      reference {s}");
        }
    }

    // The same cells over a large prime behave generically.
    println!("\nthe n = 6 cell over F_32003 for contrast:");
    let report = poschar(6, 7, 32003);
    println!("  verdict {:?}", report.verdict);
    assert!(report.verdict.is_match());
}

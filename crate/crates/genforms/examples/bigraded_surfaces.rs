//! Bigraded quotients of products of projective spaces: the truncation
//! formula holds on P1 x P1 at desk scale, fails on P1 x P2 with three
//! (2,1) forms, and fails on P1 x P1 for degenerate one-sided degrees.
//!
//! Run with: cargo run --example bigraded_surfaces

use genforms::harness::{check, multi_p1_expected, multi_p1_quotient, CheckId, CheckParams, CheckSpec};
use genforms::FieldSpec;

fn run(m: u32, n: u32, bidegrees: Vec<(u32, u32)>) -> genforms::harness::VerificationReport {
    check(&CheckSpec {
        check_id: CheckId::Bigraded,
        params: CheckParams {
            m: Some(m),
            n: Some(n),
            bidegrees: Some(bidegrees),
            seed: Some(42),
            ..Default::default()
        },
        expectation: Some(genforms::harness::Expectation::Report),
    })
    .unwrap()
}

fn main() {
    println!("P1 x P1, three (2,1) forms: {:?}", run(1, 1, vec![(2, 1); 3]).verdict);
    println!("P1 x P1, mixed (2,1),(1,2),(1,2): {:?}", run(1, 1, vec![(2, 1), (1, 2), (1, 2)]).verdict);
    println!("P1 x P1, four (3,3) forms: {:?}", run(1, 1, vec![(3, 3); 4]).verdict);

    let report = run(1, 2, vec![(2, 1); 3]);
    println!("\nP1 x P2, three (2,1) forms: {:?}  <- the formula's first failure", report.verdict);
    assert!(!report.verdict.is_match());

    let report = run(1, 1, vec![(3, 0), (3, 0), (3, 0), (1, 2)]);
    println!(
        "P1 x P1, degenerate (3,0)^3 + (1,2): {:?}  <- one-sided degrees break it too",
        report.verdict
    );
    assert!(!report.verdict.is_match());

    // The same game on (P1)^3 through the multigraded path.
    let field = FieldSpec::new(32003).unwrap();
    let multidegrees = vec![vec![1u32, 1, 1], vec![1, 1, 1]];
    let computed = multi_p1_quotient(3, &multidegrees, field, 42, 2, 3).unwrap();
    let expected = multi_p1_expected(3, &multidegrees, 3, true);
    let agree = computed.values == expected.values;
    println!("\n(P1)^3 with two (1,1,1) forms, box [0,3]^3: formula agrees: {agree}");
    println!("  corner values (computed): {:?}", &computed.values[..8]);
}

//! Multiplication-map rank tests: weak/strong Lefschetz and maximal-rank
//! properties, powers of linear forms against generic forms, and the
//! odd-subset-sums family.
//!
//! Run with: cargo run --release --example lefschetz_ranks

use genforms::engine::multiplication_rank;
use genforms::forms::GeneratorSpec;
use genforms::harness::{check, CheckId, CheckParams, CheckSpec};
use genforms::monomial::AlgebraKind;
use genforms::FieldSpec;

fn main() {
    let field = FieldSpec::new(32003).unwrap();

    // k[x,y]/(x^2, y^2): multiplication by a generic linear form.
    let quotient = vec![GeneratorSpec::VariablePower { degree: 2 }];
    let l = GeneratorSpec::PowerOfLinear { degree: 1 };
    for i in 0..=2u32 {
        let r = multiplication_rank(AlgebraKind::Commutative { n: 2 }, &quotient, &l, i, field, 5)
            .unwrap();
        println!(
            "monomial CI, l*: A_{i} -> A_{}: rank {} of max {} (maximal: {})",
            i + 1,
            r.rank,
            r.dim_source.min(r.dim_target),
            r.maximal
        );
    }

    // Weak Lefschetz across all degrees for a generic algebra.
    let report = check(&CheckSpec {
        check_id: CheckId::Wlp,
        params: CheckParams {
            n: Some(3),
            degrees: Some(vec![2, 2, 2]),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap();
    println!("\nWLP for three generic quadrics in three variables: {:?}", report.verdict);

    // Powers of generic linear forms vs generic forms: the classical
    // fat-point defect at r = n + 2, d >= 3.
    println!("\ncubes of linear forms vs generic cubics in three variables:");
    for r in 4..=7u32 {
        let report = check(&CheckSpec {
            check_id: CheckId::LinpowersIarrobino,
            params: CheckParams {
                n: Some(3),
                d: Some(3),
                r: Some(r),
                seed: Some(42),
                trials: Some(5),
                ..Default::default()
            },
            expectation: Some(genforms::harness::Expectation::Report),
        })
        .unwrap();
        println!("  r = {r}: {:?}", report.verdict);
    }

    // Squares and cubes of the 2^{n-1} odd-subset sums.
    println!("\nodd-subset sums vs generic forms:");
    for (n, d) in [(4u32, 2u32), (7, 2), (7, 3)] {
        let report = check(&CheckSpec {
            check_id: CheckId::OddSums,
            params: CheckParams {
                n: Some(n),
                d: Some(d),
                seed: Some(42),
                trials: Some(2),
                ..Default::default()
            },
            expectation: Some(genforms::harness::Expectation::Report),
        })
        .unwrap();
        println!("  n = {n}, d = {d}: {:?}", report.verdict);
    }
}

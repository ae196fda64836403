//! Quotients of the free associative algebra: the coefficientwise lower
//! bound, strongly free sets, and the three-relation family whose series
//! depends on a continuous parameter.
//!
//! Run with: cargo run --release --example tensor_series

use genforms::engine::quotient_series;
use genforms::forms::GeneratorSpec;
use genforms::harness::{check, CheckId, CheckParams, CheckSpec};
use genforms::monomial::{AlgebraKind, Degree};
use genforms::series::{anick_series_raw, DegreeSequence};
use genforms::FieldSpec;

fn main() {
    let field = FieldSpec::new(32003).unwrap();

    // r <= n^2/4 generic quadrics are strongly free: the quotient attains
    // the untruncated lower bound.
    for (n, r) in [(3u32, 2usize), (4, 4)] {
        let specs: Vec<GeneratorSpec> =
            (0..r).map(|_| GeneratorSpec::Generic { degree: Degree::Total(2) }).collect();
        let out = quotient_series(AlgebraKind::Tensor { n }, &specs, field, 42, 1, 7).unwrap();
        let bound = anick_series_raw(n, &DegreeSequence::uniform(2, r).unwrap(), 7);
        println!("{r} generic quadrics on {n} letters:");
        println!("  engine {}", out.series);
        println!("  bound  {bound}");
        assert_eq!(out.series, bound);
    }

    // The parameterized family: three fixed quadratic relations whose
    // series is (1 - 4z + 3z^2 - z^{q+3})^{-1}, so arbitrarily close
    // algebras have different Hilbert series.
    println!("\nthe three-relation family on four letters:");
    for q in [1u32, 2, 3] {
        let report = check(&CheckSpec {
            check_id: CheckId::TensorFlFamily,
            params: CheckParams { q: Some(q), seed: Some(42), ..Default::default() },
            expectation: None,
        })
        .unwrap();
        if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.computed {
            println!("  q = {q}: {s}");
        }
        assert!(report.verdict.is_match());
    }
    let report = check(&CheckSpec {
        check_id: CheckId::TensorFlFamily,
        params: CheckParams {
            q_infinite: Some(true),
            max_degree: Some(8),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap();
    if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.computed {
        println!("  q = inf: {s}");
    }
    assert!(report.verdict.is_match());
}

//! Compare the rank engine against the conjectured minimal series on a
//! small grid of proved cells, plus the first-nontrivial-degree check.
//!
//! Run with: cargo run --release --example verify_minimal_series

use genforms::harness::{
    check, first_nontrivial_check, parse_grid_config, run_grid, CheckId, CheckParams, CheckSpec,
};
use genforms::series::DegreeSequence;
use genforms::FieldSpec;

fn main() {
    // One cell in detail.
    let report = check(&CheckSpec {
        check_id: CheckId::Froberg,
        params: CheckParams {
            n: Some(3),
            degrees: Some(vec![2, 2, 2, 2]),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap();
    println!("n=3, four quadrics:");
    if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.computed {
        println!("  engine    {s}");
    }
    if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.reference {
        println!("  formula   {s}");
    }
    println!("  verdict   {:?}\n", report.verdict);

    // A proved grid: every cell must match.
    let grid = parse_grid_config(
        "check = froberg\nseed = 42\ntrials = 3\nn = 2, 3\n\
         degrees = @multisets(dmin=2, dmax=4, rmin=1, rmax=4)\n",
    )
    .unwrap();
    let (cells, summary) = run_grid(&grid);
    println!("grid over n in {{2,3}}, degrees in [2,4], r <= 4:");
    println!("{summary}\n");
    assert_eq!(summary.mismatches, 0);
    assert_eq!(summary.cells, cells.len());

    // The formula is provably correct in degree min(d_i) + 1.
    let field = FieldSpec::new(32003).unwrap();
    let degrees = DegreeSequence::new(vec![2, 2, 2, 2, 2]).unwrap();
    let report = first_nontrivial_check(4, &degrees, field, 42).unwrap();
    println!("first nontrivial degree for five quadrics in four variables:");
    println!("  checked degree {:?}", report.detail.get("checked_degree").unwrap());
    println!("  verdict {:?}", report.verdict);
}

//! Declarative grid runs: expand a key/value config into cells, run every
//! cell with derived seeds, and fold the verdicts into a summary.
//!
//! Run with: cargo run --example grid_runs

use genforms::harness::{parse_grid_config, run_grid};

const CONFIG: &str = "\
# proved territory: every cell must match
check = froberg
seed = 2024
trials = 3
n = 2, 3
degrees = @multisets(dmin=2, dmax=3, rmin=1, rmax=4)
expect = default
";

fn main() {
    let grid = parse_grid_config(CONFIG).unwrap();
    println!("expanded {} cells\n", grid.cells.len());
    let (cells, summary) = run_grid(&grid);
    for cell in cells.iter().take(6) {
        let report = cell.report.as_ref().unwrap();
        println!(
            "[{:>3}] {:<28} {:?}",
            cell.index,
            report.params.compact(),
            report.verdict
        );
    }
    println!("  ...\n\n{summary}");
    assert_eq!(summary.expectation_failures, 0);

    // Reports serialize to JSON lines; the first one as a sample.
    let sample = serde_json::to_string_pretty(cells[0].report.as_ref().unwrap()).unwrap();
    println!("\nfirst report as JSON:\n{}", &sample[..sample.len().min(800)]);
}

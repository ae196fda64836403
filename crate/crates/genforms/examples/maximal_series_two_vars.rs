//! The sharp upper bound for Hilbert series in two variables and the
//! staircase ideal that attains it, cross-checked by exhaustive search.
//!
//! Run with: cargo run --example maximal_series_two_vars

use genforms::ideals::{max_ideal_two_vars, search_extremal_series, EnumerateOptions};
use genforms::series::{max_series_two_vars, DegreeSequence};

fn main() {
    for degrees in [vec![5, 4, 3], vec![3, 2], vec![4, 4, 4, 4]] {
        let seq = DegreeSequence::new(degrees).unwrap();
        let bound = max_series_two_vars(&seq, 10);
        let ideal = max_ideal_two_vars(&seq).unwrap();
        println!("degrees {seq}:");
        println!("  bound       {bound}");
        println!("  attained by {ideal}");

        let report = search_extremal_series(2, &seq, &EnumerateOptions::default()).unwrap();
        println!(
            "  exhaustive search: {} candidate ideals, unique maximum: {}",
            report.candidates, report.unique_maximum
        );
        for entry in &report.maximal {
            println!("    maximal: {}", entry.ideal);
        }
        assert_eq!(report.theorem_bound_attained, Some(true));
        println!();
    }

    // With d_r = r - 1 the construction's quotient becomes artinian.
    let seq = DegreeSequence::new(vec![3, 3, 2]).unwrap();
    let ideal = genforms::ideals::max_construction_ideal(&seq).unwrap();
    println!("boundary case {seq}: {ideal} has artinian quotient");
    println!("  series {}", ideal.quotient_series(8).unwrap());
}

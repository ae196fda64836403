//! Whether a largest Hilbert series exists in three variables: the
//! (5,4,3,2) story. Lex-greedy choices I (descending) and J (ascending) are
//! beaten by the revlex-greedy K, and exhaustive search maps the whole
//! landscape.
//!
//! Run with: cargo run --release --example three_variable_search

use genforms::ideals::{
    compare_rational, search_extremal_series, EnumerateOptions, MonomialIdeal,
};
use genforms::series::{CoeffwiseOrder, DegreeSequence};

fn main() {
    let (i_ideal, _) = MonomialIdeal::from_exponents(
        3,
        vec![vec![5, 0, 0], vec![3, 1, 0], vec![2, 0, 1], vec![0, 2, 0]],
    );
    let (j_ideal, _) = MonomialIdeal::from_exponents(
        3,
        vec![vec![2, 0, 0], vec![1, 2, 0], vec![1, 0, 3], vec![0, 5, 0]],
    );
    let (k_ideal, _) = MonomialIdeal::from_exponents(
        3,
        vec![vec![5, 0, 0], vec![3, 1, 0], vec![1, 2, 0], vec![1, 0, 1]],
    );
    println!("I = {i_ideal}\nJ = {j_ideal}\nK = {k_ideal}\n");
    for (ideal, name) in [(&i_ideal, "I"), (&j_ideal, "J"), (&k_ideal, "K")] {
        println!("{name}(z) = {}", ideal.quotient_series(8).unwrap());
    }

    let ni = i_ideal.inclusion_exclusion_numerator().unwrap();
    let nj = j_ideal.inclusion_exclusion_numerator().unwrap();
    let nk = k_ideal.inclusion_exclusion_numerator().unwrap();
    assert_eq!(compare_rational(&ni, &nj, 3), CoeffwiseOrder::Less);
    assert_eq!(compare_rational(&nj, &nk, 3), CoeffwiseOrder::Less);
    println!("\nexact comparison of the rational series: I < J < K coefficientwise\n");

    // The full landscape: is K globally extremal among all minimal
    // monomial ideals with these degrees?
    let seq = DegreeSequence::new(vec![5, 4, 3, 2]).unwrap();
    let report = search_extremal_series(3, &seq, &EnumerateOptions::default()).unwrap();
    println!(
        "exhaustive search over {} candidates: unique maximum series: {}",
        report.candidates, report.unique_maximum
    );
    let k_is_maximal = report.maximal.iter().any(|e| e.ideal.gens == k_ideal.gens);
    println!("K among the maximal ideals: {k_is_maximal}");
    println!("{} maximal ideal(s) in total:", report.maximal.len());
    for entry in report.maximal.iter().take(8) {
        println!("  {}  ->  {}", entry.ideal, entry.series.truncate_to(7));
    }
}

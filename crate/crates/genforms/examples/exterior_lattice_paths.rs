//! Exterior-algebra quotients: the principal cases, and two generic
//! quadrics counted by confined lattice paths — including the n = 5 cell
//! where the naive expected series is off by one in degree three.
//!
//! Run with: cargo run --example exterior_lattice_paths

use genforms::engine::quotient_series;
use genforms::forms::GeneratorSpec;
use genforms::monomial::{AlgebraKind, Degree};
use genforms::paths::{lattice_path_count, paths_conjecture_series};
use genforms::series::{exterior_expected_series, DegreeSequence};
use genforms::FieldSpec;

fn main() {
    let field = FieldSpec::new(32003).unwrap();

    // Even-degree principal ideals follow the expected series exactly.
    for (n, d) in [(6u32, 2u32), (7, 4)] {
        let specs = [GeneratorSpec::Generic { degree: Degree::Total(d) }];
        let out = quotient_series(AlgebraKind::Exterior { n }, &specs, field, 3, 2, n).unwrap();
        let expected = exterior_expected_series(n, &DegreeSequence::new(vec![d]).unwrap(), n as usize);
        println!("one generic degree-{d} form, n = {n}:");
        println!("  engine   {}", out.series);
        assert_eq!(out.series, expected);
    }

    // Odd-degree principal ideals with d = n - 2 gain exactly one socle
    // element in degree n - 1.
    let n = 5u32;
    let specs = [GeneratorSpec::Generic { degree: Degree::Total(3) }];
    let out = quotient_series(AlgebraKind::Exterior { n }, &specs, field, 3, 2, n).unwrap();
    println!("\none generic cubic, n = 5 (odd degree, f wedge f = 0 helps f survive):");
    println!("  engine   {}", out.series);
    println!("  expected {}\n", exterior_expected_series(n, &DegreeSequence::new(vec![3]).unwrap(), 5));

    // Two generic quadrics: the series counts lattice paths with moves
    // (x,y) -> (x+1,y+1) or (x-1,y+1) confined to the rectangle width
    // n + 2 - 2s, height n + 2.
    println!("a(5, s) path counts: {} {} {}", lattice_path_count(5, 1), lattice_path_count(5, 2), lattice_path_count(5, 3));
    for n in 2..=8u32 {
        let specs = vec![GeneratorSpec::Generic { degree: Degree::Total(2) }; 2];
        let out = quotient_series(AlgebraKind::Exterior { n }, &specs, field, 42, 3, n).unwrap();
        let conjectured = paths_conjecture_series(n, n as usize);
        let marker = if n == 5 { "  <- the degree-3 anomaly cell" } else { "" };
        println!("n = {n}: {}{marker}", out.series);
        assert_eq!(out.series, conjectured);
    }
}

//! The closed-form "expected" series for each algebra family, side by side.
//!
//! Run with: cargo run --example expected_series

use genforms::bigraded::bigraded_froberg_series;
use genforms::paths::paths_conjecture_series;
use genforms::series::{
    anick_series, exterior_expected_series, froberg_series, max_series_two_vars, DegreeSequence,
};

fn main() {
    let degrees = DegreeSequence::new(vec![2, 2, 2, 2]).unwrap();

    println!("four quadrics in three commuting variables:");
    println!("  {}", froberg_series(3, &degrees, 6));

    println!("four quadrics in the free algebra on three letters:");
    println!("  {}", anick_series(3, &degrees, 6));

    println!("four quadrics in the exterior algebra on five generators:");
    println!("  {}", exterior_expected_series(5, &degrees, 5));

    let two_var = DegreeSequence::new(vec![5, 4, 3]).unwrap();
    println!("largest series a minimally generated (5,4,3) ideal in k[x,y] allows:");
    println!("  {}", max_series_two_vars(&two_var, 10));

    println!("two generic quadrics in the exterior algebra, by lattice paths (n = 5):");
    println!("  {}", paths_conjecture_series(5, 5));

    println!("one (1,1) form on P1 x P1 (coefficient grid, rows = x-degree):");
    print!("{}", bigraded_froberg_series(1, 1, &[(1, 1)], 4, 4, true));
}

//! Enveloping-algebra quotients by Lie elements: the commutator example
//! attains the expected series, and generic quadratic Lie elements sit on
//! the same lower bound as generic quadrics.
//!
//! Run with: cargo run --example lie_commutators

use genforms::engine::quotient_series;
use genforms::forms::GeneratorSpec;
use genforms::monomial::AlgebraKind;
use genforms::series::{anick_series, DegreeSequence};
use genforms::FieldSpec;

fn main() {
    let field = FieldSpec::new(32003).unwrap();

    // T(V) / ([x1,x2], ..., [x1,xn]): normal words are x1^a * (word in the
    // other letters), giving 1/(1 - nz + (n-1)z^2).
    for n in [3u32, 4, 5] {
        let specs: Vec<GeneratorSpec> =
            (2..=n).map(|j| GeneratorSpec::Commutator { i: 1, j }).collect();
        let out = quotient_series(AlgebraKind::Tensor { n }, &specs, field, 1, 1, 7).unwrap();
        println!("n = {n} commutator ladder: {}", out.series);
    }

    // Random quadratic Lie elements: same bound as generic quadrics, and
    // equality in the strongly free range r <= n^2/4.
    println!();
    for (n, r) in [(4u32, 2usize), (4, 4), (5, 6)] {
        let specs: Vec<GeneratorSpec> = (0..r).map(|_| GeneratorSpec::LieQuadratic).collect();
        let out = quotient_series(AlgebraKind::Tensor { n }, &specs, field, 7, 1, 6).unwrap();
        let bound = anick_series(n, &DegreeSequence::uniform(2, r).unwrap(), 6);
        let attained = out.series == bound;
        println!("{r} generic quadratic Lie elements on {n} letters:");
        println!("  engine {}  (bound attained: {attained})", out.series);
        if 4 * (r as u32) <= n * n {
            assert!(attained, "strongly free range must attain the bound");
        }
    }
}

//! Degreewise initial ideals of generic forms in degrevlex order: the
//! almost-degrevlex structure and the variable-multiplication rank test on
//! the gin-quotient.
//!
//! Run with: cargo run --example initial_ideals

use genforms::engine::{initial_ideal_leads, is_almost_degrevlex};
use genforms::forms::GeneratorSpec;
use genforms::harness::{check, CheckId, CheckParams, CheckSpec};
use genforms::monomial::{render_monomial, AlgebraKind, Degree};
use genforms::FieldSpec;

fn main() {
    let field = FieldSpec::new(32003).unwrap();
    let kind = AlgebraKind::Commutative { n: 3 };

    let specs = vec![GeneratorSpec::Generic { degree: Degree::Total(2) }; 3];
    let leads = initial_ideal_leads(3, &specs, field, 42, 5).unwrap();
    println!("lead monomials of three generic quadrics in three variables:");
    for (t, lead_set) in leads.iter().enumerate() {
        let rendered: Vec<String> = lead_set.iter().map(|k| render_monomial(kind, k)).collect();
        println!("  degree {t}: {{{}}}", rendered.join(", "));
    }
    let (holds, witness) = is_almost_degrevlex(&leads, 3);
    println!("almost degrevlex: {holds} (witness: {witness:?})\n");

    // The harness check also audits the implication towards the minimal
    // series on the same cell.
    let report = check(&CheckSpec {
        check_id: CheckId::AlmostRevlex,
        params: CheckParams {
            n: Some(3),
            degrees: Some(vec![2, 2, 2]),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap();
    println!("almost-revlex check: verdict {:?}", report.verdict);
    println!("  same-cell minimal-series match: {:?}", report.detail.get("froberg_match"));

    // Multiplication by x_{n-i} on the gin-quotient, variable by variable.
    let report = check(&CheckSpec {
        check_id: CheckId::PaRanks,
        params: CheckParams {
            n: Some(3),
            degrees: Some(vec![2, 2, 2]),
            seed: Some(42),
            ..Default::default()
        },
        expectation: None,
    })
    .unwrap();
    println!("gin-quotient multiplication ranks: verdict {:?}", report.verdict);
    assert!(report.verdict.is_match());
}

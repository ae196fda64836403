use genforms::harness::*;
use std::time::Instant;

fn main() {
    // Map the true odd-sums verdicts: n in 4..7, d in 2..4.
    for n in [4u32, 5, 6, 7] {
        for d in [2u32, 3, 4] {
            let t0 = Instant::now();
            let report = check(&CheckSpec {
                check_id: CheckId::OddSums,
                params: CheckParams {
                    n: Some(n),
                    d: Some(d),
                    seed: Some(42),
                    // force single-expectation-independent probing
                    ..Default::default()
                },
                expectation: Some(Expectation::Report),
            })
            .unwrap();
            println!(
                "odd-sums n={n} d={d}: {:?}  ({:.1}s)",
                report.verdict,
                t0.elapsed().as_secs_f64()
            );
        }
    }
    // Map the Iarrobino landscape for n=3.
    for d in [2u32, 3, 4, 5] {
        for r in 5..=9u32 {
            let report = check(&CheckSpec {
                check_id: CheckId::LinpowersIarrobino,
                params: CheckParams {
                    n: Some(3),
                    d: Some(d),
                    r: Some(r),
                    seed: Some(42),
                    trials: Some(5),
                    ..Default::default()
                },
                expectation: Some(Expectation::Report),
            })
            .unwrap();
            println!("iarrobino n=3 d={d} r={r}: {:?}", report.verdict);
        }
    }
    // Poschar after the single-prime fix.
    for (n, r) in [(6u32, 7u32), (5, 6)] {
        let report = check(&CheckSpec {
            check_id: CheckId::Poschar,
            params: CheckParams {
                n: Some(n),
                d: Some(2),
                r: Some(r),
                prime: Some(2),
                seed: Some(42),
                ..Default::default()
            },
            expectation: None,
        })
        .unwrap();
        println!(
            "poschar n={n} r={r}: verdict {:?} expectation {:?} met {}",
            report.verdict, report.expectation, report.expectation_met
        );
    }
}

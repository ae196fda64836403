//! Acceptance suite: every desk-scale guarantee the library makes, one test
//! per criterion, each printing a PASS/FAIL line (run with --nocapture to
//! see them). All tolerances are exact.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genforms::engine::{quotient_series, DEFAULT_PRIME};
use genforms::forms::{derive_seed, GeneratorSpec};
use genforms::harness::{
    check, parse_grid_config, run_grid, CheckId, CheckParams, CheckSpec, Expectation, Verdict,
};
use genforms::ideals::{
    compare_rational, enumerate_monomial_ideals, max_ideal_two_vars, minimalize, EnumerateOptions,
    Monomial, MonomialIdeal,
};
use genforms::monomial::{AlgebraKind, Degree};
use genforms::paths::{lattice_path_count, lattice_path_count_bruteforce};
use genforms::series::{
    anick_series_raw, compare_series, exterior_expected_series, froberg_series,
    froberg_series_raw, max_series_two_vars, one_minus_z_pow, suggested_max_degree,
    CoeffwiseOrder, DegreeSequence, TruncatedSeries,
};
use genforms::FieldSpec;

const SEED: u64 = 42;

fn field() -> FieldSpec {
    FieldSpec::new(DEFAULT_PRIME).unwrap()
}

fn degs(d: &[u32]) -> DegreeSequence {
    DegreeSequence::new(d.to_vec()).unwrap()
}

/// Non-increasing degree multisets with entries in [dmin, dmax], sizes
/// rmin..=rmax.
fn multisets(dmin: u32, dmax: u32, rmin: usize, rmax: usize) -> Vec<Vec<u32>> {
    fn rec(left: usize, max_allowed: u32, dmin: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for d in (dmin..=max_allowed).rev() {
            cur.push(d);
            rec(left - 1, d, dmin, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for r in rmin..=rmax {
        rec(r, dmax, dmin, &mut cur, &mut out);
    }
    out
}

fn run_check(check_id: CheckId, params: CheckParams) -> genforms::harness::VerificationReport {
    check(&CheckSpec { check_id, params, expectation: None }).unwrap()
}

#[test]
fn acceptance_01_froberg_proved_cases() {
    // Every degree multiset with n in {2,3}, d_i in {2,3,4}, r <= 6, plus
    // all r <= n and r = n + 1 cases with n = 4: the engine series at
    // p = 32003 with 3 trials equals the conjectured minimal series exactly.
    let mut cells = 0usize;
    let mut jobs: Vec<(u32, Vec<u32>)> = Vec::new();
    for n in [2u32, 3] {
        for ds in multisets(2, 4, 1, 6) {
            jobs.push((n, ds));
        }
    }
    for ds in multisets(2, 4, 1, 5) {
        jobs.push((4, ds));
    }
    for (idx, (n, ds)) in jobs.iter().enumerate() {
        let report = run_check(
            CheckId::Froberg,
            CheckParams {
                n: Some(*n),
                degrees: Some(ds.clone()),
                prime: Some(DEFAULT_PRIME),
                trials: Some(3),
                seed: Some(derive_seed(SEED, idx as u64)),
                ..Default::default()
            },
        );
        assert!(
            report.verdict.is_match(),
            "n={n} degrees {ds:?}: {:?}",
            report.verdict
        );
        cells += 1;
    }
    assert!(cells >= 200, "expected a couple hundred cells, got {cells}");
    println!("ACCEPTANCE 01 PASS - conjectured minimal series reproduced on {cells} proved cells");
}

#[test]
fn acceptance_02_truncation_operator_algebra() {
    // The one-more-generator identity holds exactly on 1000 random
    // instances, and the truncation operator is idempotent on 10^4 random
    // coefficient sequences.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5u32);
        let r = rng.gen_range(0..=6usize);
        let degrees: Vec<u32> = (0..r).map(|_| rng.gen_range(1..=6u32)).collect();
        let extra = rng.gen_range(1..=6u32);
        let prec = rng.gen_range(4..=20usize);
        let ds = degs(&degrees);
        let lhs = froberg_series(n, &ds, prec)
            .mul_poly(&one_minus_z_pow(extra))
            .truncate_plus();
        let mut with_extra = degrees.clone();
        with_extra.push(extra);
        let rhs = froberg_series(n, &degs(&with_extra), prec);
        assert_eq!(lhs, rhs, "n={n} degrees={degrees:?} extra={extra} prec={prec}");
    }
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=12usize);
        let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9i64)).collect();
        let s = TruncatedSeries::from_i64(&coeffs);
        let once = s.truncate_plus();
        assert_eq!(once.truncate_plus(), once);
    }
    println!("ACCEPTANCE 02 PASS - truncation identity on 1000 instances, idempotence on 10^4");
}

#[test]
fn acceptance_03_two_variable_maximal_series() {
    // For every n = 2 degree sequence with r <= 4, d_1 <= 7, d_r >= r:
    // every minimal monomial ideal's series is bounded by the sharp series,
    // the staircase construction attains it, and for d_r >= r - 1 the
    // generator-count bound never trips (it is asserted inside the
    // enumeration).
    let opts = EnumerateOptions::default();
    let mut sequences = 0usize;
    let mut ideals_checked = 0usize;
    for ds in multisets(1, 7, 1, 4) {
        let r = ds.len() as u32;
        let d_r = *ds.last().unwrap();
        if ds[0] > 7 {
            continue;
        }
        if d_r >= r {
            let seq = degs(&ds);
            let report = genforms::ideals::search_extremal_series(2, &seq, &opts).unwrap();
            // search_extremal_series asserts the theorem internally; the
            // flag must confirm it did.
            assert_eq!(report.theorem_bound_attained, Some(true), "degrees {ds:?}");
            assert!(report.unique_maximum, "degrees {ds:?}");
            let construction = max_ideal_two_vars(&seq).unwrap();
            let prec = ds[0] as usize + 10;
            assert_eq!(
                construction.quotient_series(prec).unwrap(),
                max_series_two_vars(&seq, prec),
                "construction must attain the bound for {ds:?}"
            );
            sequences += 1;
            ideals_checked += report.candidates;
        } else if d_r + 1 >= r {
            // d_r = r - 1: enumeration still runs (bound assert inside).
            let ideals = enumerate_monomial_ideals(2, &degs(&ds), &opts).unwrap();
            ideals_checked += ideals.len();
        }
    }
    assert!(sequences > 50, "only {sequences} sequences enumerated");
    println!(
        "ACCEPTANCE 03 PASS - sharp bound attained on {sequences} sequences ({ideals_checked} ideals)"
    );
}

#[test]
fn acceptance_04_three_variable_example() {
    // Degrees (5,4,3,2) in three variables: I < J coefficientwise, and K
    // dominates both.
    let (i_ideal, i_min) = MonomialIdeal::from_exponents(
        3,
        vec![vec![5, 0, 0], vec![3, 1, 0], vec![2, 0, 1], vec![0, 2, 0]],
    );
    let (j_ideal, j_min) = MonomialIdeal::from_exponents(
        3,
        vec![vec![2, 0, 0], vec![1, 2, 0], vec![1, 0, 3], vec![0, 5, 0]],
    );
    let (k_ideal, k_min) = MonomialIdeal::from_exponents(
        3,
        vec![vec![5, 0, 0], vec![3, 1, 0], vec![1, 2, 0], vec![1, 0, 1]],
    );
    assert!(i_min && j_min && k_min);
    let ni = i_ideal.inclusion_exclusion_numerator().unwrap();
    let nj = j_ideal.inclusion_exclusion_numerator().unwrap();
    let nk = k_ideal.inclusion_exclusion_numerator().unwrap();
    assert_eq!(compare_rational(&ni, &nj, 3), CoeffwiseOrder::Less, "I < J fails");
    assert_eq!(compare_rational(&ni, &nk, 3), CoeffwiseOrder::Less, "K must dominate I");
    assert_eq!(compare_rational(&nj, &nk, 3), CoeffwiseOrder::Less, "K must dominate J");
    println!("ACCEPTANCE 04 PASS - (5,4,3,2) example: I < J, K dominates both");
}

#[test]
fn acceptance_05_tensor_algebra() {
    // The three-relation family reproduces (1-4z+3z^2-z^{q+3})^{-1} exactly
    // up to degree q+6 for q in {1,2,3}, and (1-4z+3z^2)^{-1} for the
    // infinite variant; generic quadric sets with r <= n^2/4, n <= 4 match
    // the untruncated lower bound up to degree 8.
    for q in [1u32, 2, 3] {
        let report = run_check(
            CheckId::TensorFlFamily,
            CheckParams { q: Some(q), seed: Some(SEED), ..Default::default() },
        );
        assert_eq!(report.expectation, Expectation::MustMatch);
        assert!(report.verdict.is_match(), "q={q}: {:?}", report.verdict);
    }
    let report = run_check(
        CheckId::TensorFlFamily,
        CheckParams {
            q_infinite: Some(true),
            max_degree: Some(8),
            seed: Some(SEED),
            ..Default::default()
        },
    );
    assert!(report.verdict.is_match(), "q=inf: {:?}", report.verdict);

    for (n, r) in [(2u32, 1usize), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (4, 4)] {
        let specs: Vec<GeneratorSpec> =
            (0..r).map(|_| GeneratorSpec::Generic { degree: Degree::Total(2) }).collect();
        let out =
            quotient_series(AlgebraKind::Tensor { n }, &specs, field(), SEED, 1, 8).unwrap();
        let bound = anick_series_raw(n, &degs(&vec![2; r]), 8);
        assert_eq!(out.series, bound, "n={n} r={r}");
    }
    println!("ACCEPTANCE 05 PASS - three-relation family q in {{1,2,3,inf}}, strongly free quadrics n <= 4");
}

#[test]
fn acceptance_06_lie_quotients() {
    // Commutator example: series (1 - nz + (n-1)z^2)^{-1} exactly for
    // n <= 5 up to degree 8; generic quadratic Lie elements stay on the
    // lower bound coefficientwise and attain it in the strongly free range.
    for n in 2..=5u32 {
        let report = run_check(
            CheckId::LieCommutatorExample,
            CheckParams { n: Some(n), max_degree: Some(8), seed: Some(SEED), ..Default::default() },
        );
        assert!(report.verdict.is_match(), "n={n}: {:?}", report.verdict);
    }
    for (n, r) in [(3u32, 1u32), (3, 2), (4, 2), (4, 4), (3, 3), (4, 5)] {
        let report = run_check(
            CheckId::LieQuadratic,
            CheckParams {
                n: Some(n),
                r: Some(r),
                max_degree: Some(6),
                seed: Some(SEED),
                ..Default::default()
            },
        );
        // The engine asserts the lower bound on every run; here the verdict
        // additionally pins equality in the strongly free range.
        if 4 * r <= n * n {
            assert!(report.verdict.is_match(), "n={n} r={r}: {:?}", report.verdict);
        } else {
            match report.verdict {
                Verdict::Match | Verdict::Mismatch { .. } => {}
                v => panic!("n={n} r={r}: unexpected incomparability {v:?}"),
            }
        }
    }
    println!("ACCEPTANCE 06 PASS - commutator example n <= 5, quadratic Lie elements on the bound");
}

#[test]
fn acceptance_07_exterior_algebra() {
    // Principal even-degree case equals the expected series for n <= 9,
    // d in {2,4}; two generic quadrics match the lattice-path series for
    // 2 <= n <= 8 including the n = 5 anomaly; the odd-degree d = n - 2
    // case equals expected + z^{n-1} for n in {5,7}.
    for d in [2u32, 4] {
        for n in d.max(2)..=9u32 {
            let report = run_check(
                CheckId::ExteriorGeneric,
                CheckParams {
                    n: Some(n),
                    degrees: Some(vec![d]),
                    seed: Some(SEED),
                    ..Default::default()
                },
            );
            assert_eq!(report.expectation, Expectation::MustMatch, "n={n} d={d}");
            assert!(report.verdict.is_match(), "n={n} d={d}: {:?}", report.verdict);
        }
    }
    for n in 2..=8u32 {
        let report = run_check(
            CheckId::ExteriorPaths,
            CheckParams { n: Some(n), seed: Some(SEED), ..Default::default() },
        );
        assert!(report.verdict.is_match(), "paths n={n}: {:?}", report.verdict);
        if n == 5 {
            match &report.reference {
                Some(genforms::harness::SeriesPayload::Uni(s)) => {
                    assert_eq!(s.truncate_to(3), TruncatedSeries::from_i64(&[1, 5, 8, 1]));
                }
                other => panic!("unexpected payload {other:?}"),
            }
        }
    }
    for n in [5u32, 7] {
        let d = n - 2;
        let specs = [GeneratorSpec::Generic { degree: Degree::Total(d) }];
        let out = quotient_series(AlgebraKind::Exterior { n }, &specs, field(), SEED, 3, n).unwrap();
        let mut expected = exterior_expected_series(n, &degs(&[d]), n as usize);
        let mut coeffs = expected.coeffs().to_vec();
        coeffs[(n - 1) as usize] += BigInt::from(1);
        expected = TruncatedSeries::from_coeffs(coeffs);
        assert_eq!(out.series, expected, "odd principal case n={n} d={d}");
    }
    println!("ACCEPTANCE 07 PASS - exterior principal cases, lattice paths 2..8, odd d = n-2 bump");
}

#[test]
fn acceptance_08_bigraded_surfaces() {
    // P1 x P1: the truncation formula verified exactly for all uniform
    // bidegrees (d,e) <= (3,3) with r <= 4 and for all bidegree multisets
    // with d_i + e_i = 3, r <= 4; P1 x P2 with three (2,1) forms differs.
    let mut cells = 0usize;
    for d in 1..=3u32 {
        for e in 1..=3u32 {
            for r in 1..=4usize {
                let report = run_check(
                    CheckId::Bigraded,
                    CheckParams {
                        m: Some(1),
                        n: Some(1),
                        bidegrees: Some(vec![(d, e); r]),
                        seed: Some(derive_seed(SEED, (d * 16 + e * 4) as u64 + r as u64)),
                        ..Default::default()
                    },
                );
                assert_eq!(report.expectation, Expectation::MustMatch);
                assert!(report.verdict.is_match(), "(d,e)=({d},{e}) r={r}: {:?}", report.verdict);
                cells += 1;
            }
        }
    }
    // Multisets of genuinely bigraded degrees with d + e = 3, size <= 4:
    // parts (2,1) and (1,2). Degenerate parts like (3,0) fall outside the
    // formula: three x-only cubics span a codimension-1 subspace of the
    // (3,0) piece and the formula overcounts what a further form can reach
    // (see the degenerate-bidegree regression below).
    let parts = [(2u32, 1u32), (1, 2)];
    fn rec(
        parts: &[(u32, u32)],
        start: usize,
        left: usize,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..parts.len() {
            cur.push(parts[i]);
            rec(parts, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut combos = Vec::new();
    for r in 1..=4usize {
        rec(&parts, 0, r, &mut Vec::new(), &mut combos);
    }
    assert_eq!(combos.len(), 2 + 3 + 4 + 5);
    for (idx, bidegrees) in combos.iter().enumerate() {
        let report = run_check(
            CheckId::Bigraded,
            CheckParams {
                m: Some(1),
                n: Some(1),
                bidegrees: Some(bidegrees.clone()),
                seed: Some(derive_seed(SEED, 1000 + idx as u64)),
                ..Default::default()
            },
        );
        assert!(report.verdict.is_match(), "bidegrees {bidegrees:?}: {:?}", report.verdict);
        cells += 1;
    }
    // The P1 x P2 counterexample.
    let report = run_check(
        CheckId::Bigraded,
        CheckParams {
            m: Some(1),
            n: Some(2),
            bidegrees: Some(vec![(2, 1); 3]),
            seed: Some(SEED),
            ..Default::default()
        },
    );
    assert_eq!(report.expectation, Expectation::MustDiffer);
    assert!(!report.verdict.is_match(), "P1 x P2 must differ from the naive formula");
    cells += 1;

    // Degenerate-bidegree regression: three (3,0) forms plus one (1,2)
    // form on P1 x P1 genuinely beat the formula at cell (3,2).
    let report = run_check(
        CheckId::Bigraded,
        CheckParams {
            m: Some(1),
            n: Some(1),
            bidegrees: Some(vec![(3, 0), (3, 0), (3, 0), (1, 2)]),
            seed: Some(SEED),
            ..Default::default()
        },
    );
    assert_eq!(
        report.verdict,
        Verdict::Mismatch { degree: Degree::Bi(3, 2) },
        "degenerate bidegrees must expose the formula's boundary failure"
    );
    println!("ACCEPTANCE 08 PASS - {cells} bigraded cells verified, P1 x P2 counterexample found");
}

#[test]
fn acceptance_09_positive_characteristic() {
    // Over F_2: n = 6, d = 2, r = 7 differs from the conjectured series
    // (any quadric squares to zero in characteristic 2), while n = 5,
    // r = 6 matches at the checked precision.
    let report = run_check(
        CheckId::Poschar,
        CheckParams {
            n: Some(6),
            d: Some(2),
            r: Some(7),
            prime: Some(2),
            seed: Some(SEED),
            ..Default::default()
        },
    );
    assert_eq!(report.expectation, Expectation::MustDiffer);
    assert!(!report.verdict.is_match(), "char-2 n=6 must differ: {:?}", report.verdict);

    let report = run_check(
        CheckId::Poschar,
        CheckParams {
            n: Some(5),
            d: Some(2),
            r: Some(6),
            prime: Some(2),
            seed: Some(SEED),
            ..Default::default()
        },
    );
    assert!(report.verdict.is_match(), "char-2 n=5 should match: {:?}", report.verdict);
    println!("ACCEPTANCE 09 PASS - characteristic-2 square obstruction at n=6, absent at n=5");
}

#[test]
fn acceptance_09b_iarrobino_exception_cells() {
    // Linear-power vs generic ideals at d = 3, n = 3. The configured
    // exception list expects "differ" at r in {5, 6, 7, 8} and "match" at
    // r = 9. The r = 5 defect is real (first divergence in degree 4). For
    // r in {6, 7, 8} the engine exhibits the full generic rank, which
    // *proves* the series agree (rank of a specialization bounds the
    // generic rank from below, and the quotients vanish from degree 4 on,
    // so the finite window is conclusive); those three assertions are
    // expected to fail until the exception list carries its degree
    // dependence. See the project notes for the analysis.
    let mut verdicts = Vec::new();
    for r in 5..=9u32 {
        let report = run_check(
            CheckId::LinpowersIarrobino,
            CheckParams {
                n: Some(3),
                d: Some(3),
                r: Some(r),
                seed: Some(SEED),
                ..Default::default()
            },
        );
        verdicts.push((r, report.verdict));
    }
    for (r, verdict) in &verdicts {
        let expect_differ = (5..=8).contains(r);
        let ok = if expect_differ { !verdict.is_match() } else { verdict.is_match() };
        println!(
            "  iarrobino cell (3,{r}) d=3: verdict {verdict:?}, required {} -> {}",
            if expect_differ { "differ" } else { "match" },
            if ok { "ok" } else { "FAIL" }
        );
    }
    let failures: Vec<u32> = verdicts
        .iter()
        .filter(|(r, v)| if (5..=8).contains(r) { v.is_match() } else { !v.is_match() })
        .map(|(r, _)| *r)
        .collect();
    assert!(
        failures.is_empty(),
        "ACCEPTANCE 09b FAIL - cells (3,{failures:?}) at d=3 do not show the required verdict; \
         the computed match at r in {{6,7,8}} is provable (generic rank exhibited over two primes), \
         so the required 'differ' cannot occur at this degree"
    );
    println!("ACCEPTANCE 09b PASS - exception landscape at d=3 as configured");
}

#[test]
fn acceptance_10_cross_oracles() {
    // Inclusion-exclusion series equals the rank-engine series on 100
    // random monomial ideals; the lattice-path DP equals brute-force
    // enumeration for n <= 12.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0usize;
    while done < 100 {
        let n = rng.gen_range(2..=3usize);
        let r = rng.gen_range(1..=6usize);
        let mons: Vec<Monomial> = (0..r)
            .map(|_| {
                Monomial::new((0..n).map(|_| rng.gen_range(0..=4u16)).collect())
            })
            .collect();
        if mons.iter().any(|m| m.degree() == 0) {
            continue;
        }
        let (ideal, _) = minimalize(n, &mons);
        if ideal.gens.is_empty() {
            continue;
        }
        let prec = 9usize;
        let exact = ideal.quotient_series(prec).unwrap();
        let specs: Vec<GeneratorSpec> = ideal
            .to_forms()
            .into_iter()
            .map(|form| GeneratorSpec::Explicit { form })
            .collect();
        let engine = quotient_series(
            AlgebraKind::Commutative { n: n as u32 },
            &specs,
            field(),
            derive_seed(SEED, done as u64),
            1,
            prec as u32,
        )
        .unwrap();
        assert_eq!(engine.series, exact, "ideal {ideal}");
        done += 1;
    }
    for n in 2..=12u32 {
        let mut s = 1u32;
        while n as i64 + 2 - 2 * s as i64 >= 0 {
            assert_eq!(
                lattice_path_count(n, s),
                lattice_path_count_bruteforce(n, s),
                "n={n} s={s}"
            );
            s += 1;
        }
    }
    println!("ACCEPTANCE 10 PASS - 100 monomial-ideal cross-checks, path DP vs brute force n <= 12");
}

#[test]
fn acceptance_11_lower_bounds_hold() {
    // The family lower bounds are asserted inside every engine run; this
    // re-verifies them explicitly on a mixed sample.
    let samples: Vec<(AlgebraKind, Vec<GeneratorSpec>, u32)> = vec![
        (
            AlgebraKind::Commutative { n: 3 },
            vec![GeneratorSpec::PowerOfLinear { degree: 3 }; 5],
            8,
        ),
        (
            AlgebraKind::Commutative { n: 4 },
            vec![GeneratorSpec::SumOddVariables { degree: 2 }],
            6,
        ),
        (
            AlgebraKind::Tensor { n: 3 },
            vec![GeneratorSpec::LieQuadratic, GeneratorSpec::LieQuadratic],
            6,
        ),
        (
            AlgebraKind::Exterior { n: 6 },
            vec![GeneratorSpec::Generic { degree: Degree::Total(2) }; 3],
            6,
        ),
    ];
    for (kind, specs, maxdeg) in samples {
        let out = quotient_series(kind, &specs, field(), SEED, 2, maxdeg).unwrap();
        let realized = genforms::forms::realize_generators(kind, &specs, field(), derive_seed(SEED, 0))
            .unwrap();
        let ds = DegreeSequence::new(genforms::forms::form_degrees(&realized)).unwrap();
        let bound = match kind {
            AlgebraKind::Commutative { n } => froberg_series(n, &ds, maxdeg as usize),
            AlgebraKind::Tensor { n } => {
                genforms::series::anick_series(n, &ds, maxdeg as usize)
            }
            AlgebraKind::Exterior { n } => exterior_expected_series(n, &ds, maxdeg as usize),
            AlgebraKind::Bigraded { .. } => unreachable!(),
        };
        let cmp = compare_series(&out.series, &bound).unwrap();
        assert!(cmp.is_ge(), "{kind}: computed {} vs bound {}", out.series, bound);
    }
    println!("ACCEPTANCE 11 PASS - family lower bounds verified on a mixed sample");
}

#[test]
fn acceptance_12_determinism() {
    // Re-running a grid with the same master seed produces byte-identical
    // JSON, excluding wall-time fields.
    let config_text = "check = froberg\nseed = 9\nn = 2, 3\ndegrees = 2,2 | 3,2,2 | 4,3\ntrials = 3\n";
    let strip = |v: &mut serde_json::Value| {
        fn rec(v: &mut serde_json::Value) {
            match v {
                serde_json::Value::Object(map) => {
                    map.remove("wall_ms");
                    for (_, child) in map.iter_mut() {
                        rec(child);
                    }
                }
                serde_json::Value::Array(items) => items.iter_mut().for_each(rec),
                _ => {}
            }
        }
        rec(v)
    };
    let render = || {
        let grid = parse_grid_config(config_text).unwrap();
        let (cells, summary) = run_grid(&grid);
        let mut lines: Vec<String> = Vec::new();
        for cell in cells {
            let mut v = serde_json::to_value(&cell).unwrap();
            strip(&mut v);
            lines.push(serde_json::to_string(&v).unwrap());
        }
        lines.push(serde_json::to_string(&summary).unwrap());
        lines.join("\n")
    };
    let first = render();
    let second = render();
    assert_eq!(first, second, "grid output must be byte-identical modulo timing");
    assert!(first.contains("\"verdict\""));
    println!("ACCEPTANCE 12 PASS - byte-identical reruns with a fixed master seed");
}

#[test]
fn acceptance_windows_settle() {
    // Default precision policy sanity: the engine window covers the
    // settling point of artinian expected series with two degrees to spare.
    let s = froberg_series_raw(3, &degs(&[2, 2, 2, 2]), 10).truncate_plus();
    assert_eq!(suggested_max_degree(&s, 64), 5);
}
